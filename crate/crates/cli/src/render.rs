use bvfla_core::ideals::{Comparison, Witness};
use bvfla_core::{Degree, Element, Magma};
use serde_json::{json, Map, Value};

/// Recursively rebuilds objects with keys in sorted order, independent of
/// how `serde_json` maps are configured.
pub fn sorted(value: Value) -> Value {
    match value {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, sorted(v));
            }
            Value::Object(out)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sorted).collect()),
        other => other,
    }
}

pub fn to_json_text(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&sorted(value)).expect("serializable");
    text.push('\n');
    text
}

pub fn tuple(m: &Magma, elements: &[Element]) -> String {
    let labels: Vec<String> = elements.iter().map(|&x| m.label(x)).collect();
    format!("({})", labels.join(","))
}

pub fn degree(d: &Degree, decimal: bool) -> String {
    if decimal {
        format!("~{}", d.to_decimal(4))
    } else {
        d.to_string()
    }
}

fn comparison(c: &Comparison, positive: bool, decimal: bool) -> String {
    let rel = match (positive, c.holds) {
        (true, true) => ">=",
        (true, false) => "<",
        (false, true) => "<=",
        (false, false) => ">",
    };
    format!(
        "{} {rel} {}",
        degree(&c.value, decimal),
        degree(&c.bound, decimal)
    )
}

/// One-line description of an ideal-condition violation.
pub fn ideal_witness(m: &Magma, w: &Witness, decimal: bool) -> String {
    format!(
        "{} at {} -> {}: pos {}; neg {}",
        w.condition,
        tuple(m, &w.elements),
        m.label(w.product),
        comparison(&w.pos, true, decimal),
        comparison(&w.neg, false, decimal),
    )
}

/// JSON form of a witness, carrying both indices and element names.
pub fn ideal_witness_json(m: &Magma, w: &Witness) -> Value {
    json!({
        "condition": w.condition.name(),
        "elements": w.elements,
        "element_names": w.elements.iter().map(|&x| m.label(x)).collect::<Vec<_>>(),
        "product": w.product,
        "product_name": m.label(w.product),
        "pos": {"value": w.pos.value.to_string(), "bound": w.pos.bound.to_string(), "holds": w.pos.holds},
        "neg": {"value": w.neg.value.to_string(), "bound": w.neg.bound.to_string(), "holds": w.neg.holds},
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_come_out_sorted() {
        let v = json!({"b": 1, "a": {"z": 2, "y": [ {"d": 0, "c": 1} ]}});
        let text = serde_json::to_string(&sorted(v)).unwrap();
        assert_eq!(text, r#"{"a":{"y":[{"c":1,"d":0}],"z":2},"b":1}"#);
    }

    #[test]
    fn decimal_display_is_marked() {
        assert_eq!(degree(&Degree::new(1, 3), true), "~0.3333");
        assert_eq!(degree(&Degree::new(1, 3), false), "1/3");
    }
}
