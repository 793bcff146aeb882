//! Finite groupoids given by Cayley tables, the structural laws they may
//! satisfy, and crisp (ordinary subset) ideal classification.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ideals::IdealClass;

/// Elements of a carrier are the indices `0..order`.
pub type Element = usize;

/// A finite groupoid `(S, ·)` stored as a row-major Cayley table.
///
/// Row `x`, column `y` holds `x·y`. Display names are cosmetic: equality,
/// ordering and hashing only look at the order and the table.
#[derive(Clone)]
pub struct Magma {
    order: usize,
    table: Vec<Element>,
    names: Option<Vec<String>>,
    left_invertive: OnceLock<bool>,
    left_identity: OnceLock<Option<Element>>,
}

impl Magma {
    /// Builds a magma from a row-major table of `order * order` entries.
    pub fn new(order: usize, table: Vec<Element>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "order must be positive".into(),
            });
        }
        if table.len() != order * order {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!(
                    "table has {} entries, expected {}",
                    table.len(),
                    order * order
                ),
            });
        }
        if let Some(pos) = table.iter().position(|&e| e >= order) {
            return Err(Error::Parse {
                line: 2 + pos / order,
                column: 1 + pos % order,
                message: format!("entry {} out of range [0, {order})", table[pos]),
            });
        }
        Ok(Self::from_parts(order, table, None))
    }

    /// Builds a magma from explicit rows.
    pub fn from_rows<R: AsRef<[Element]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::Parse {
                    line: 2 + i,
                    column: 1,
                    message: format!("row has {} entries, expected {order}", row.len()),
                });
            }
            table.extend_from_slice(row);
        }
        Self::new(order, table)
    }

    pub(crate) fn from_parts(
        order: usize,
        table: Vec<Element>,
        names: Option<Vec<String>>,
    ) -> Self {
        Self {
            order,
            table,
            names,
            left_invertive: OnceLock::new(),
            left_identity: OnceLock::new(),
        }
    }

    /// Attaches display labels. Labels must be distinct, non-numeric-looking
    /// tokens without whitespace.
    pub fn with_names<S: Into<String>>(mut self, names: Vec<S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        validate_labels(&names, self.order, 2)?;
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `x·y`.
    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y]
    }

    /// Row-major table entries.
    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of an element: its declared name, or its index.
    pub fn label(&self, x: Element) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// Resolves a label or an index literal to an element.
    pub fn resolve(&self, token: &str) -> Option<Element> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|n| n == token) {
                return Some(i);
            }
        }
        token.parse::<usize>().ok().filter(|&i| i < self.order)
    }

    /// The magma obtained by renaming element `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[Element]) -> Magma {
        let n = self.order;
        debug_assert_eq!(perm.len(), n);
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)];
            }
        }
        let names = self.names.as_ref().map(|names| {
            let mut out = vec![String::new(); n];
            for x in 0..n {
                out[perm[x]] = names[x].clone();
            }
            out
        });
        Magma::from_parts(n, table, names)
    }

    /// Short stable content hash of the table (names excluded).
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.order as u64).to_le_bytes());
        for &e in &self.table {
            hasher.update((e as u64).to_le_bytes());
        }
        hex16(&hasher.finalize())
    }

    /// Whether `(a·b)·c = (c·b)·a` holds everywhere. Cached.
    pub fn is_left_invertive(&self) -> bool {
        *self
            .left_invertive
            .get_or_init(|| check_law(self, Law::LeftInvertive).holds)
    }

    /// Least `e` with `e·x = x` for all `x`. Cached.
    pub fn left_identity(&self) -> Option<Element> {
        *self.left_identity.get_or_init(|| find_left_identity(self))
    }

    /// Serializes in the Cayley-table text format.
    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        if let Some(names) = &self.names {
            out.push_str("# ");
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        for x in self.elements() {
            let row: Vec<String> = self.row(x).iter().map(|&e| self.label(e)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

pub(crate) fn hex16(bytes: &[u8]) -> String {
    bytes[..8].iter().map(|b| format!("{b:02x}")).collect()
}

impl PartialEq for Magma {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for Magma {}

impl Hash for Magma {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.table.hash(state);
    }
}

impl PartialOrd for Magma {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Magma {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.table.cmp(&other.table))
    }
}

impl fmt::Debug for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Magma")
            .field("order", &self.order)
            .field("table", &self.table)
            .field("names", &self.names)
            .finish()
    }
}

impl fmt::Display for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table_text())
    }
}

impl FromStr for Magma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_table(s)
    }
}

/// Serialized as `{order, rows, names}`.
impl Serialize for Magma {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<&[usize]> = self.elements().map(|x| self.row(x)).collect();
        let mut st = s.serialize_struct("Magma", 3)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("rows", &rows)?;
        st.serialize_field("names", &self.names())?;
        st.end()
    }
}

fn validate_labels(labels: &[String], order: usize, line: usize) -> Result<()> {
    if labels.len() != order {
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!("expected {order} labels, found {}", labels.len()),
        });
    }
    for (i, label) in labels.iter().enumerate() {
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::Parse {
                line,
                column: i + 1,
                message: format!("invalid label {label:?}"),
            });
        }
        if label.parse::<usize>().is_ok() {
            return Err(Error::Parse {
                line,
                column: i + 1,
                message: format!("label {label:?} would shadow an index"),
            });
        }
        if labels[..i].contains(label) {
            return Err(Error::Parse {
                line,
                column: i + 1,
                message: format!("duplicate label {label:?}"),
            });
        }
    }
    Ok(())
}

/// Parses the Cayley-table text format.
///
/// ```text
/// 4
/// # a b c d
/// b d c a
/// a b c d
/// c c c c
/// d a c b
/// ```
///
/// Line 1 is the order; an optional `#` line declares labels; then one line
/// per row. Entries are indices or declared labels. Blank lines are ignored.
/// Columns in error positions count whitespace-separated tokens.
pub fn parse_table(text: &str) -> Result<Magma> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_line, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty input".into(),
    })?;
    let order: usize = first.parse().map_err(|_| Error::Parse {
        line: first_line,
        column: 1,
        message: format!("expected the order, found {first:?}"),
    })?;
    if order == 0 {
        return Err(Error::Parse {
            line: first_line,
            column: 1,
            message: "order must be positive".into(),
        });
    }

    let mut names: Option<Vec<String>> = None;
    let mut table = Vec::with_capacity(order * order);
    let mut rows = 0;
    for (line_no, line) in lines {
        if let Some(header) = line.strip_prefix('#') {
            if names.is_some() || rows > 0 {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: "label header must directly follow the order line".into(),
                });
            }
            let labels: Vec<String> = header.split_whitespace().map(String::from).collect();
            validate_labels(&labels, order, line_no)?;
            names = Some(labels);
            continue;
        }
        if rows == order {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: format!("more than {order} rows"),
            });
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != order {
            return Err(Error::Parse {
                line: line_no,
                column: tokens.len().min(order) + 1,
                message: format!("row has {} entries, expected {order}", tokens.len()),
            });
        }
        for (col, token) in tokens.iter().enumerate() {
            let by_name = names
                .as_ref()
                .and_then(|ns| ns.iter().position(|n| n == token));
            let entry = match by_name {
                Some(e) => e,
                None => match token.parse::<usize>() {
                    Ok(e) if e < order => e,
                    Ok(e) => {
                        return Err(Error::Parse {
                            line: line_no,
                            column: col + 1,
                            message: format!("entry {e} out of range [0, {order})"),
                        })
                    }
                    Err(_) => {
                        return Err(Error::Parse {
                            line: line_no,
                            column: col + 1,
                            message: format!("unknown element {token:?}"),
                        })
                    }
                },
            };
            table.push(entry);
        }
        rows += 1;
    }
    if rows != order {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: format!("found {rows} rows, expected {order}"),
        });
    }
    Ok(Magma::from_parts(order, table, names))
}

/// Identities a groupoid may satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// `(a·b)·c = (c·b)·a`
    LeftInvertive,
    /// `(a·b)·(c·d) = (a·c)·(b·d)`
    Medial,
    /// `(a·b)·(c·d) = (d·c)·(b·a)`
    Paramedial,
    /// `a·(b·c) = (a·b)·c`
    Associative,
    /// `a·b = b·a`
    Commutative,
    /// `a·(b·c) = b·(a·c)`
    LemmaL1,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::LeftInvertive,
        Law::Medial,
        Law::Paramedial,
        Law::Associative,
        Law::Commutative,
        Law::LemmaL1,
    ];

    pub fn arity(self) -> usize {
        match self {
            Law::Commutative => 2,
            Law::LeftInvertive | Law::Associative | Law::LemmaL1 => 3,
            Law::Medial | Law::Paramedial => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Law::LeftInvertive => "left_invertive",
            Law::Medial => "medial",
            Law::Paramedial => "paramedial",
            Law::Associative => "associative",
            Law::Commutative => "commutative",
            Law::LemmaL1 => "lemma_l1",
        }
    }

    /// Both sides of the identity at `t`, left side first.
    pub fn sides<T: Copy>(self, op: impl Fn(T, T) -> T, t: &[T]) -> (T, T) {
        match self {
            Law::LeftInvertive => (op(op(t[0], t[1]), t[2]), op(op(t[2], t[1]), t[0])),
            Law::Medial => (
                op(op(t[0], t[1]), op(t[2], t[3])),
                op(op(t[0], t[2]), op(t[1], t[3])),
            ),
            Law::Paramedial => (
                op(op(t[0], t[1]), op(t[2], t[3])),
                op(op(t[3], t[2]), op(t[1], t[0])),
            ),
            Law::Associative => (op(t[0], op(t[1], t[2])), op(op(t[0], t[1]), t[2])),
            Law::Commutative => (op(t[0], t[1]), op(t[1], t[0])),
            Law::LemmaL1 => (op(t[0], op(t[1], t[2])), op(t[1], op(t[0], t[2]))),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s || l.name().replace('_', "-") == s)
            .ok_or_else(|| Error::InvalidTask(format!("unknown law {s:?}")))
    }
}

/// Outcome of an exhaustive law check.
///
/// `witness` is the first violating tuple in row-major order (first
/// coordinate most significant); `violations` lists every violating tuple in
/// that same order, so `witness == violations.first()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport<T = Element> {
    pub law: Law,
    pub holds: bool,
    pub witness: Option<Vec<T>>,
    /// Left and right side evaluated at the witness.
    pub sides: Option<(T, T)>,
    pub violations: Vec<Vec<T>>,
    pub checked: usize,
}

impl<T: Copy + PartialEq> LawReport<T> {
    /// Checks `law` over every tuple drawn from `values`.
    pub fn exhaustive(law: Law, values: &[T], op: impl Fn(T, T) -> T) -> Self {
        let arity = law.arity();
        let mut violations = Vec::new();
        let mut sides = None;
        let mut checked = 0;
        for_each_tuple(values, arity, |t| {
            checked += 1;
            let (lhs, rhs) = law.sides(&op, t);
            if lhs != rhs {
                if sides.is_none() {
                    sides = Some((lhs, rhs));
                }
                violations.push(t.to_vec());
            }
        });
        LawReport {
            law,
            holds: violations.is_empty(),
            witness: violations.first().cloned(),
            sides,
            violations,
            checked,
        }
    }
}

/// Calls `f` on every `arity`-tuple over `values` in row-major order.
pub(crate) fn for_each_tuple<T: Copy>(values: &[T], arity: usize, mut f: impl FnMut(&[T])) {
    if values.is_empty() {
        return;
    }
    let mut idx = vec![0usize; arity];
    let mut tuple: Vec<T> = vec![values[0]; arity];
    loop {
        f(&tuple);
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                tuple[pos] = values[idx[pos]];
                break;
            }
            idx[pos] = 0;
            tuple[pos] = values[0];
        }
    }
}

/// Exhaustively checks `law` on `m`.
pub fn check_law(m: &Magma, law: Law) -> LawReport {
    let elements: Vec<Element> = m.elements().collect();
    LawReport::exhaustive(law, &elements, |x, y| m.op(x, y))
}

/// Least `e` with `e·x = x` for every `x`.
pub fn find_left_identity(m: &Magma) -> Option<Element> {
    m.elements()
        .find(|&e| m.row(e).iter().enumerate().all(|(x, &ex)| ex == x))
}

/// Checks `a(bc) = b(ac)`, which is guaranteed in a left-invertive magma with
/// a left identity. A failing report therefore means the checker itself is
/// wrong.
pub fn check_lemma_l1(m: &Magma) -> Result<LawReport> {
    if !m.is_left_invertive() {
        let report = check_law(m, Law::LeftInvertive);
        return Err(Error::NotLeftInvertive(format!(
            "witness {:?}",
            report.witness.unwrap_or_default()
        )));
    }
    if m.left_identity().is_none() {
        return Err(Error::NoLeftIdentity);
    }
    Ok(check_law(m, Law::LemmaL1))
}

/// A crisp class verdict with an optional counterexample tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrispVerdict {
    pub holds: bool,
    pub witness: Option<Vec<Element>>,
}

impl CrispVerdict {
    fn from_witness(witness: Option<Vec<Element>>) -> Self {
        Self {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Membership of an ordinary subset in each crisp ideal class.
///
/// Witness shapes: subsemigroup `(a, b)`; left `(s, a)`; right `(a, s)`;
/// interior `(s, a, t)`; generalized bi `(a, s, b)`. Two-sided forwards the
/// left witness, otherwise the right one; bi forwards the subsemigroup
/// witness, otherwise the generalized-bi one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrispClassification {
    pub subsemigroup: CrispVerdict,
    pub left_ideal: CrispVerdict,
    pub right_ideal: CrispVerdict,
    pub two_sided: CrispVerdict,
    pub generalized_bi: CrispVerdict,
    pub bi_ideal: CrispVerdict,
    pub interior: CrispVerdict,
}

impl CrispClassification {
    pub fn get(&self, class: IdealClass) -> &CrispVerdict {
        match class {
            IdealClass::Subsemigroup => &self.subsemigroup,
            IdealClass::Left => &self.left_ideal,
            IdealClass::Right => &self.right_ideal,
            IdealClass::TwoSided => &self.two_sided,
            IdealClass::GeneralizedBi => &self.generalized_bi,
            IdealClass::Bi => &self.bi_ideal,
            IdealClass::Interior => &self.interior,
        }
    }
}

/// Membership mask for a nonempty subset of the carrier.
pub fn subset_mask(order: usize, subset: &[Element]) -> Result<Vec<bool>> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut mask = vec![false; order];
    for &a in subset {
        if a >= order {
            return Err(Error::ElementOutOfRange { element: a, order });
        }
        mask[a] = true;
    }
    Ok(mask)
}

/// Decides every crisp class of `subset` by exhaustive products.
pub fn classify_crisp(m: &Magma, subset: &[Element]) -> Result<CrispClassification> {
    let inside = subset_mask(m.order(), subset)?;
    let members: Vec<Element> = m.elements().filter(|&x| inside[x]).collect();
    let all: Vec<Element> = m.elements().collect();

    let first_pair = |xs: &[Element], ys: &[Element]| {
        xs.iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| !inside[m.op(x, y)])
            .map(|(x, y)| vec![x, y])
    };
    let first_triple = |xs: &[Element], ys: &[Element], zs: &[Element]| {
        for &x in xs {
            for &y in ys {
                let xy = m.op(x, y);
                for &z in zs {
                    if !inside[m.op(xy, z)] {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    };

    let subsemigroup = CrispVerdict::from_witness(first_pair(&members, &members));
    let left_ideal = CrispVerdict::from_witness(first_pair(&all, &members));
    let right_ideal = CrispVerdict::from_witness(first_pair(&members, &all));
    let two_sided = CrispVerdict::from_witness(
        left_ideal
            .witness
            .clone()
            .or_else(|| right_ideal.witness.clone()),
    );
    let generalized_bi = CrispVerdict::from_witness(first_triple(&members, &all, &members));
    let bi_ideal = CrispVerdict::from_witness(
        subsemigroup
            .witness
            .clone()
            .or_else(|| generalized_bi.witness.clone()),
    );
    let interior = CrispVerdict::from_witness(first_triple(&all, &members, &all));

    Ok(CrispClassification {
        subsemigroup,
        left_ideal,
        right_ideal,
        two_sided,
        generalized_bi,
        bi_ideal,
        interior,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_example_31_with_labels() {
        let m = fixtures::example31_magma();
        assert_eq!(m.order(), 4);
        // row a, column b is d
        assert_eq!(m.op(0, 1), 3);
        assert_eq!(m.label(3), "d");
        assert_eq!(m.to_table_text(), fixtures::EXAMPLE31_TABLE);
    }

    #[test]
    fn parses_singleton() {
        let m = parse_table("1\n0\n").unwrap();
        assert_eq!(m.order(), 1);
        assert_eq!(m.op(0, 0), 0);
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let err = parse_table("4\n0 1 2 3\n0 1 2 4\n0 0 0 0\n0 0 0 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                column: 4,
                message: "entry 4 out of range [0, 4)".into()
            }
        );
    }

    #[test]
    fn rejects_malformed_dimensions_and_labels() {
        assert!(matches!(
            parse_table("2\n0 1\n0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_table("2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_table("2\n0 1\n1 0\n1 1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_table("2\n# a a\na a\na a\n"),
            Err(Error::Parse {
                line: 2,
                column: 2,
                ..
            })
        ));
        assert!(matches!(
            parse_table("2\n# a\na a\na a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_table("2\n# a b\na z\na a\n"),
            Err(Error::Parse {
                line: 3,
                column: 2,
                ..
            })
        ));
        assert!(matches!(parse_table(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_table("0\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn law_checks_on_paper_examples() {
        let m = fixtures::example31_magma();
        assert!(check_law(&m, Law::LeftInvertive).holds);
        let assoc = check_law(&m, Law::Associative);
        assert!(!assoc.holds);
        // The paper cites (d, b, a): d(ba) = d but (db)a = b.
        let (d, b, a) = (3, 1, 0);
        assert!(assoc.violations.contains(&vec![d, b, a]));
        assert_eq!(
            Law::Associative.sides(|x, y| m.op(x, y), &[d, b, a]),
            (d, b)
        );
        assert_eq!(assoc.witness, assoc.violations.first().cloned());

        let m2 = fixtures::example32_magma();
        assert!(check_law(&m2, Law::LeftInvertive).holds);
        let assoc2 = check_law(&m2, Law::Associative);
        assert!(assoc2.violations.contains(&vec![0, 0, 1]));
        // a(ab) = c, (aa)b = d
        assert_eq!(
            Law::Associative.sides(|x, y| m2.op(x, y), &[0, 0, 1]),
            (2, 3)
        );
    }

    #[test]
    fn witness_is_first_in_row_major_order() {
        // x·y = y + 1 mod 3 is not commutative; first failure is (0, 1).
        let m = Magma::from_rows(&[[1, 2, 0], [1, 2, 0], [1, 2, 0]]).unwrap();
        let r = check_law(&m, Law::Commutative);
        assert_eq!(r.witness, Some(vec![0, 1]));
        assert_eq!(r.sides, Some((2, 1)));
        assert_eq!(r.checked, 9);
    }

    #[test]
    fn left_identity_detection() {
        assert_eq!(find_left_identity(&fixtures::example31_magma()), Some(1));
        assert_eq!(find_left_identity(&fixtures::example32_magma()), None);
        assert_eq!(find_left_identity(&parse_table("1\n0").unwrap()), Some(0));
    }

    #[test]
    fn lemma_l1() {
        assert!(check_lemma_l1(&fixtures::example31_magma()).unwrap().holds);
        assert_eq!(
            check_lemma_l1(&fixtures::example32_magma()),
            Err(Error::NoLeftIdentity)
        );
        assert!(check_lemma_l1(&parse_table("1\n0").unwrap()).unwrap().holds);
        // x·y = x is not left invertive: (a·b)·c = a but (c·b)·a = c.
        let proj = Magma::from_rows(&[[0, 0], [1, 1]]).unwrap();
        assert!(matches!(
            check_lemma_l1(&proj),
            Err(Error::NotLeftInvertive(_))
        ));
    }

    #[test]
    fn crisp_classification_examples() {
        let m = fixtures::example31_magma();
        let c = classify_crisp(&m, &[2]).unwrap();
        assert!(c.left_ideal.holds && c.right_ideal.holds && c.two_sided.holds);
        assert!(c.bi_ideal.holds && c.interior.holds);

        let full: Vec<Element> = m.elements().collect();
        let all = classify_crisp(&m, &full).unwrap();
        for class in IdealClass::ALL {
            assert!(all.get(class).holds, "{class}");
        }

        let m2 = fixtures::example32_magma();
        let c2 = classify_crisp(&m2, &[2]).unwrap();
        assert!(!c2.right_ideal.holds);
        // c·a = d, outside {c}
        assert_eq!(c2.right_ideal.witness, Some(vec![2, 0]));
        assert_eq!(m2.op(2, 0), 3);

        assert_eq!(classify_crisp(&m, &[]), Err(Error::EmptySubset));
        assert!(matches!(
            classify_crisp(&m, &[7]),
            Err(Error::ElementOutOfRange {
                element: 7,
                order: 4
            })
        ));
    }

    #[test]
    fn relabel_round_trip() {
        let m = fixtures::example32_magma();
        let perm = [2, 0, 3, 1];
        let mut inv = [0; 4];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let back = m.relabel(&perm).relabel(&inv);
        assert_eq!(back, m);
        assert_eq!(back.names(), m.names());
    }
}
