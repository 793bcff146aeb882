//! Bipolar-valued fuzzy subsets of a finite carrier.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::magma::{hex16, subset_mask, Element, Magma};

/// A pair of membership maps over `0..order`: `pos` into `[0, 1]` and `neg`
/// into `[-1, 0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BvfSubset {
    pos: Vec<Degree>,
    neg: Vec<Degree>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubset {
    pos: Vec<Degree>,
    neg: Vec<Degree>,
}

impl BvfSubset {
    pub fn new(pos: Vec<Degree>, neg: Vec<Degree>) -> Result<Self> {
        if pos.len() != neg.len() {
            return Err(Error::OrderMismatch {
                expected: pos.len(),
                found: neg.len(),
            });
        }
        if pos.is_empty() {
            return Err(Error::EmptySubset);
        }
        for (i, (p, n)) in pos.iter().zip(&neg).enumerate() {
            if !p.is_positive_role() {
                return Err(Error::DegreeOutOfRange {
                    element: i,
                    detail: format!("positive degree {p} not in [0, 1]"),
                });
            }
            if !n.is_negative_role() {
                return Err(Error::DegreeOutOfRange {
                    element: i,
                    detail: format!("negative degree {n} not in [-1, 0]"),
                });
            }
        }
        Ok(Self { pos, neg })
    }

    /// Parses degree strings; decimals are converted exactly.
    pub fn from_strs(pos: &[&str], neg: &[&str]) -> Result<Self> {
        let parse = |xs: &[&str]| {
            xs.iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<Degree>>>()
        };
        Self::new(parse(pos)?, parse(neg)?)
    }

    /// Parses the subset JSON format `{"pos": [...], "neg": [...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSubset = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::new(raw.pos, raw.neg)
    }

    /// Single-line JSON with canonical rational strings, newline-terminated.
    pub fn to_json(&self) -> String {
        let list = |xs: &[Degree]| {
            xs.iter()
                .map(|d| format!("\"{d}\""))
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "{{\"pos\": [{}], \"neg\": [{}]}}\n",
            list(&self.pos),
            list(&self.neg)
        )
    }

    pub fn order(&self) -> usize {
        self.pos.len()
    }

    pub fn pos(&self) -> &[Degree] {
        &self.pos
    }

    pub fn neg(&self) -> &[Degree] {
        &self.neg
    }

    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.to_json().as_bytes());
        hex16(&hasher.finalize())
    }

    pub(crate) fn from_parts_unchecked(pos: Vec<Degree>, neg: Vec<Degree>) -> Self {
        debug_assert_eq!(pos.len(), neg.len());
        Self { pos, neg }
    }

    pub(crate) fn parts_mut(&mut self) -> (&mut [Degree], &mut [Degree]) {
        (&mut self.pos, &mut self.neg)
    }

    pub(crate) fn check_order(&self, expected: usize) -> Result<()> {
        if self.order() == expected {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                expected,
                found: self.order(),
            })
        }
    }
}

/// The whole carrier as a bipolar subset: `pos ≡ 1`, `neg ≡ -1`.
pub fn gamma(order: usize) -> BvfSubset {
    assert!(order >= 1, "carrier order must be positive");
    BvfSubset::from_parts_unchecked(vec![Degree::one(); order], vec![Degree::neg_one(); order])
}

/// The characteristic subset of a nonempty crisp subset: `(1, -1)` on
/// members and `(0, 0)` elsewhere.
pub fn characteristic(order: usize, subset: &[Element]) -> Result<BvfSubset> {
    let mask = subset_mask(order, subset)?;
    let pos = mask
        .iter()
        .map(|&m| if m { Degree::one() } else { Degree::zero() })
        .collect();
    let neg = mask
        .iter()
        .map(|&m| if m { Degree::neg_one() } else { Degree::zero() })
        .collect();
    Ok(BvfSubset::from_parts_unchecked(pos, neg))
}

/// The product `B1 ∘ B2` over `m`.
///
/// For each `x` with some factorization `x = y·z`, the positive part is the
/// max over factorizations of `min(B1⁺(y), B2⁺(z))` and the negative part
/// the min of `max(B1⁻(y), B2⁻(z))`. Elements with no factorization get 0 in
/// both components.
pub fn compose(m: &Magma, b1: &BvfSubset, b2: &BvfSubset) -> Result<BvfSubset> {
    let n = m.order();
    b1.check_order(n)?;
    b2.check_order(n)?;
    let mut pos: Vec<Option<&Degree>> = vec![None; n];
    let mut neg: Vec<Option<&Degree>> = vec![None; n];
    for y in 0..n {
        for z in 0..n {
            let x = m.op(y, z);
            let p = (&b1.pos[y]).min(&b2.pos[z]);
            if pos[x].is_none_or(|cur| p > cur) {
                pos[x] = Some(p);
            }
            let q = (&b1.neg[y]).max(&b2.neg[z]);
            if neg[x].is_none_or(|cur| q < cur) {
                neg[x] = Some(q);
            }
        }
    }
    let finish = |v: Vec<Option<&Degree>>| {
        v.into_iter()
            .map(|d| d.cloned().unwrap_or_else(Degree::zero))
            .collect()
    };
    Ok(BvfSubset::from_parts_unchecked(finish(pos), finish(neg)))
}

/// `B1 ∩ B2`: pointwise min of positive parts, max of negative parts.
pub fn meet(b1: &BvfSubset, b2: &BvfSubset) -> Result<BvfSubset> {
    b2.check_order(b1.order())?;
    Ok(BvfSubset::from_parts_unchecked(
        b1.pos
            .iter()
            .zip(&b2.pos)
            .map(|(a, b)| a.min(b).clone())
            .collect(),
        b1.neg
            .iter()
            .zip(&b2.neg)
            .map(|(a, b)| a.max(b).clone())
            .collect(),
    ))
}

/// `B1 ∪ B2`: pointwise max of positive parts, min of negative parts.
pub fn join(b1: &BvfSubset, b2: &BvfSubset) -> Result<BvfSubset> {
    b2.check_order(b1.order())?;
    Ok(BvfSubset::from_parts_unchecked(
        b1.pos
            .iter()
            .zip(&b2.pos)
            .map(|(a, b)| a.max(b).clone())
            .collect(),
        b1.neg
            .iter()
            .zip(&b2.neg)
            .map(|(a, b)| a.min(b).clone())
            .collect(),
    ))
}

/// Bipolar containment `B1 ⊆ B2`.
pub fn leq(b1: &BvfSubset, b2: &BvfSubset) -> Result<bool> {
    Ok(first_excess(b1, b2)?.is_none())
}

/// First element at which `B1 ⊆ B2` fails.
pub fn first_excess(b1: &BvfSubset, b2: &BvfSubset) -> Result<Option<Element>> {
    b2.check_order(b1.order())?;
    Ok((0..b1.order()).find(|&i| b1.pos[i] > b2.pos[i] || b1.neg[i] < b2.neg[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn bvf(pos: &[&str], neg: &[&str]) -> BvfSubset {
        BvfSubset::from_strs(pos, neg).unwrap()
    }

    /// Reference product: enumerate the factorization list of each element
    /// explicitly and fold it, independent of the single-pass accumulator.
    fn compose_by_factorizations(m: &Magma, b1: &BvfSubset, b2: &BvfSubset) -> BvfSubset {
        let n = m.order();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for x in 0..n {
            let facts: Vec<(usize, usize)> = (0..n)
                .flat_map(|y| (0..n).map(move |z| (y, z)))
                .filter(|&(y, z)| m.op(y, z) == x)
                .collect();
            if facts.is_empty() {
                pos.push(Degree::zero());
                neg.push(Degree::zero());
                continue;
            }
            let p = facts
                .iter()
                .map(|&(y, z)| std::cmp::min(b1.pos()[y].clone(), b2.pos()[z].clone()))
                .max()
                .unwrap();
            let q = facts
                .iter()
                .rev()
                .map(|&(y, z)| std::cmp::max(b1.neg()[y].clone(), b2.neg()[z].clone()))
                .min()
                .unwrap();
            pos.push(p);
            neg.push(q);
        }
        BvfSubset::new(pos, neg).unwrap()
    }

    #[test]
    fn gamma_values() {
        let g = gamma(4);
        assert!(g.pos().iter().all(|d| *d == Degree::one()));
        assert!(g.neg().iter().all(|d| *d == Degree::neg_one()));
        assert_eq!(gamma(1), bvf(&["1"], &["-1"]));
    }

    #[test]
    fn characteristic_values() {
        assert_eq!(
            characteristic(4, &[2]).unwrap(),
            bvf(&["0", "0", "1", "0"], &["0", "0", "-1", "0"])
        );
        assert_eq!(characteristic(3, &[0, 1, 2]).unwrap(), gamma(3));
        assert_eq!(characteristic(3, &[]), Err(Error::EmptySubset));
    }

    #[test]
    fn rejects_out_of_range_degrees() {
        assert!(matches!(
            BvfSubset::from_strs(&["3/2"], &["0"]),
            Err(Error::DegreeOutOfRange { element: 0, .. })
        ));
        assert!(matches!(
            BvfSubset::from_strs(&["0", "1/2"], &["0", "1/2"]),
            Err(Error::DegreeOutOfRange { element: 1, .. })
        ));
        assert!(matches!(
            BvfSubset::from_strs(&["0"], &["0", "0"]),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn compose_examples_on_example_31() {
        let m = fixtures::example31_magma();
        let g = gamma(4);
        assert_eq!(compose(&m, &g, &g).unwrap(), g);
        let b = fixtures::example31_subset();
        assert_eq!(compose(&m, &g, &b).unwrap(), b);
        let chi = characteristic(4, &[2]).unwrap();
        assert_eq!(compose(&m, &chi, &chi).unwrap(), chi);
        assert_eq!(compose_by_factorizations(&m, &chi, &chi), chi);
    }

    #[test]
    fn unfactorizable_elements_get_zero_in_both_components() {
        // Every product is 0, so element 1 has no factorization.
        let m = Magma::from_rows(&[[0, 0], [0, 0]]).unwrap();
        let g = gamma(2);
        let c = compose(&m, &g, &g).unwrap();
        assert_eq!(c, bvf(&["1", "0"], &["-1", "0"]));
    }

    #[test]
    fn compose_rejects_mismatched_orders() {
        let m = fixtures::example31_magma();
        assert_eq!(
            compose(&m, &gamma(3), &gamma(4)),
            Err(Error::OrderMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn lattice_examples() {
        let b = fixtures::example31_subset();
        let g = gamma(4);
        assert_eq!(meet(&b, &g).unwrap(), b);
        assert_eq!(meet(&b, &b).unwrap(), b);
        assert_eq!(join(&b, &g).unwrap(), g);
        assert_eq!(join(&b, &b).unwrap(), b);
        assert_eq!(
            join(&b, &characteristic(4, &[2]).unwrap()).unwrap(),
            bvf(&["1/5", "1/5", "1", "1/5"], &["-1/2", "-1/2", "-1", "-1/2"])
        );
        let b2 = fixtures::example32_subset();
        assert_eq!(
            meet(&b2, &characteristic(4, &[3]).unwrap()).unwrap(),
            bvf(&["0", "0", "0", "4/5"], &["0", "0", "0", "-9/10"])
        );
        assert!(leq(&b, &g).unwrap());
        assert!(!leq(&g, &b).unwrap());
        assert_eq!(first_excess(&g, &b).unwrap(), Some(0));
        assert!(leq(&g, &gamma(3)).is_err());
    }

    #[test]
    fn json_round_trip_and_decimals() {
        let b = fixtures::example31_subset();
        assert_eq!(b.to_json(), fixtures::EXAMPLE31_SUBSET_JSON);
        assert_eq!(BvfSubset::from_json(&b.to_json()).unwrap(), b);
        let dec = BvfSubset::from_json(
            r#"{"pos": ["0.2", "0.2", "0.7", "0.2"], "neg": ["-0.5", "-0.5", "-0.8", "-0.5"]}"#,
        )
        .unwrap();
        assert_eq!(dec, b);
        assert!(BvfSubset::from_json(r#"{"pos": [0.2], "neg": ["0"]}"#).is_err());
        assert!(BvfSubset::from_json(r#"{"pos": ["0"], "neg": ["0"], "x": 1}"#).is_err());
    }

    mod props {
        use super::*;
        use crate::random::random_bvf;
        use proptest::prelude::*;

        fn magma3() -> impl Strategy<Value = Magma> {
            proptest::collection::vec(0usize..3, 9).prop_map(|t| Magma::new(3, t).unwrap())
        }

        proptest! {
            #[test]
            fn compose_matches_factorization_fold(m in magma3(), s1 in any::<u64>(), s2 in any::<u64>()) {
                let b1 = random_bvf(3, 10, s1);
                let b2 = random_bvf(3, 10, s2);
                prop_assert_eq!(compose(&m, &b1, &b2).unwrap(), compose_by_factorizations(&m, &b1, &b2));
            }

            #[test]
            fn meet_and_join_bound(s1 in any::<u64>(), s2 in any::<u64>()) {
                let b1 = random_bvf(4, 10, s1);
                let b2 = random_bvf(4, 10, s2);
                let lo = meet(&b1, &b2).unwrap();
                let hi = join(&b1, &b2).unwrap();
                for b in [&b1, &b2] {
                    prop_assert!(leq(&lo, b).unwrap());
                    prop_assert!(leq(b, &hi).unwrap());
                    prop_assert!(leq(b, &gamma(4)).unwrap());
                }
            }

            #[test]
            fn json_round_trip(s in any::<u64>(), q in 1u32..50) {
                let b = random_bvf(5, q, s);
                prop_assert_eq!(BvfSubset::from_json(&b.to_json()).unwrap(), b);
            }
        }
    }
}
