//! Ideal classes of bipolar subsets, decided pointwise from the defining
//! inequalities and, independently, through the composition calculus.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bvf::{compose, first_excess, gamma, BvfSubset};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::magma::{Element, Magma};

/// The ideal classes a bipolar subset may belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealClass {
    Subsemigroup,
    Left,
    Right,
    TwoSided,
    GeneralizedBi,
    Bi,
    Interior,
}

impl IdealClass {
    pub const ALL: [IdealClass; 7] = [
        IdealClass::Subsemigroup,
        IdealClass::Left,
        IdealClass::Right,
        IdealClass::TwoSided,
        IdealClass::GeneralizedBi,
        IdealClass::Bi,
        IdealClass::Interior,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealClass::Subsemigroup => "subsemigroup",
            IdealClass::Left => "left",
            IdealClass::Right => "right",
            IdealClass::TwoSided => "two_sided",
            IdealClass::GeneralizedBi => "generalized_bi",
            IdealClass::Bi => "bi",
            IdealClass::Interior => "interior",
        }
    }

    /// Key used in serialized classifications.
    pub fn key(self) -> &'static str {
        match self {
            IdealClass::Subsemigroup => "bvf_subsemigroup",
            IdealClass::Left => "bvf_left_ideal",
            IdealClass::Right => "bvf_right_ideal",
            IdealClass::TwoSided => "bvf_two_sided",
            IdealClass::GeneralizedBi => "bvf_generalized_bi",
            IdealClass::Bi => "bvf_bi",
            IdealClass::Interior => "bvf_interior",
        }
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        let s = s.strip_prefix("bvf_").unwrap_or(&s);
        let class = match s {
            "subsemigroup" | "la_subsemigroup" => IdealClass::Subsemigroup,
            "left" | "left_ideal" => IdealClass::Left,
            "right" | "right_ideal" => IdealClass::Right,
            "two_sided" | "ideal" => IdealClass::TwoSided,
            "generalized_bi" => IdealClass::GeneralizedBi,
            "bi" | "bi_ideal" => IdealClass::Bi,
            "interior" | "interior_ideal" => IdealClass::Interior,
            other => return Err(Error::InvalidTask(format!("unknown ideal class {other:?}"))),
        };
        Ok(class)
    }
}

/// Which pair of outer variables bounds `μ((x·y)·z)` in the generalized
/// bi-ideal condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BiForm {
    /// `μ((xy)z) ≥ μ(x) ∧ μ(z)`; the form matching the composition lemma.
    #[default]
    OuterPair,
    /// `μ((xy)z) ≥ μ(x) ∧ μ(y)`, as displayed in the definitions.
    PrintedPair,
}

/// One side-by-side comparison of a degree against its required bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    /// Degree of the product.
    pub value: Degree,
    /// Bound it must meet (`value ≥ bound` for positive, `≤` for negative).
    pub bound: Degree,
    pub holds: bool,
}

/// A tuple at which a defining inequality fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// The defining condition that failed (differs from the verdict's class
    /// for two-sided and bi-ideals, which are conjunctions).
    pub condition: IdealClass,
    pub elements: Vec<Element>,
    pub product: Element,
    pub pos: Comparison,
    pub neg: Comparison,
}

/// A class verdict. `witness` is the first violation in row-major tuple
/// order; `violations` holds all of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub violations: Vec<Witness>,
}

impl Verdict {
    fn from_violations(violations: Vec<Witness>) -> Self {
        Verdict {
            holds: violations.is_empty(),
            witness: violations.first().cloned(),
            violations,
        }
    }
}

/// Evaluates one elementary (non-conjunctive) defining condition over all
/// tuples, calling `on_fail` per violation. Stops early when `on_fail`
/// returns `false`.
fn scan(
    m: &Magma,
    b: &BvfSubset,
    class: IdealClass,
    form: BiForm,
    mut on_fail: impl FnMut(Witness) -> bool,
) {
    let n = m.order();
    let (pos, neg) = (b.pos(), b.neg());
    let mut test = |elements: &[Element], product: Element, pb: &Degree, nb: &Degree| -> bool {
        let pos_ok = pos[product] >= *pb;
        let neg_ok = neg[product] <= *nb;
        if pos_ok && neg_ok {
            return true;
        }
        on_fail(Witness {
            condition: class,
            elements: elements.to_vec(),
            product,
            pos: Comparison {
                value: pos[product].clone(),
                bound: pb.clone(),
                holds: pos_ok,
            },
            neg: Comparison {
                value: neg[product].clone(),
                bound: nb.clone(),
                holds: neg_ok,
            },
        })
    };
    match class {
        IdealClass::Subsemigroup | IdealClass::Left | IdealClass::Right => {
            for x in 0..n {
                for y in 0..n {
                    let (pb, nb) = match class {
                        IdealClass::Subsemigroup => {
                            ((&pos[x]).min(&pos[y]), (&neg[x]).max(&neg[y]))
                        }
                        IdealClass::Left => (&pos[y], &neg[y]),
                        _ => (&pos[x], &neg[x]),
                    };
                    if !test(&[x, y], m.op(x, y), pb, nb) {
                        return;
                    }
                }
            }
        }
        IdealClass::GeneralizedBi | IdealClass::Interior => {
            for x in 0..n {
                for y in 0..n {
                    let xy = m.op(x, y);
                    for z in 0..n {
                        let (pb, nb) = match (class, form) {
                            (IdealClass::Interior, _) => (&pos[y], &neg[y]),
                            (_, BiForm::OuterPair) => {
                                ((&pos[x]).min(&pos[z]), (&neg[x]).max(&neg[z]))
                            }
                            (_, BiForm::PrintedPair) => {
                                ((&pos[x]).min(&pos[y]), (&neg[x]).max(&neg[y]))
                            }
                        };
                        if !test(&[x, y, z], m.op(xy, z), pb, nb) {
                            return;
                        }
                    }
                }
            }
        }
        IdealClass::TwoSided | IdealClass::Bi => unreachable!("conjunctive class"),
    }
}

fn components(class: IdealClass) -> &'static [IdealClass] {
    match class {
        IdealClass::TwoSided => &[IdealClass::Left, IdealClass::Right],
        IdealClass::Bi => &[IdealClass::Subsemigroup, IdealClass::GeneralizedBi],
        IdealClass::Subsemigroup => &[IdealClass::Subsemigroup],
        IdealClass::Left => &[IdealClass::Left],
        IdealClass::Right => &[IdealClass::Right],
        IdealClass::GeneralizedBi => &[IdealClass::GeneralizedBi],
        IdealClass::Interior => &[IdealClass::Interior],
    }
}

/// Full pointwise verdict for `class`, with every violation.
pub fn verdict(m: &Magma, b: &BvfSubset, class: IdealClass, form: BiForm) -> Result<Verdict> {
    b.check_order(m.order())?;
    let mut violations = Vec::new();
    for &part in components(class) {
        scan(m, b, part, form, |w| {
            violations.push(w);
            true
        });
    }
    Ok(Verdict::from_violations(violations))
}

/// Pointwise membership test without witness collection.
pub fn holds(m: &Magma, b: &BvfSubset, class: IdealClass, form: BiForm) -> Result<bool> {
    b.check_order(m.order())?;
    Ok(holds_unchecked(m, b, class, form))
}

pub(crate) fn holds_unchecked(m: &Magma, b: &BvfSubset, class: IdealClass, form: BiForm) -> bool {
    components(class).iter().all(|&part| {
        let mut ok = true;
        scan(m, b, part, form, |_| {
            ok = false;
            false
        });
        ok
    })
}

/// First violation only.
pub fn first_violation(
    m: &Magma,
    b: &BvfSubset,
    class: IdealClass,
    form: BiForm,
) -> Result<Option<Witness>> {
    b.check_order(m.order())?;
    let mut found = None;
    for &part in components(class) {
        scan(m, b, part, form, |w| {
            found = Some(w);
            false
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

pub fn is_bvf_subsemigroup(m: &Magma, b: &BvfSubset) -> Result<Verdict> {
    verdict(m, b, IdealClass::Subsemigroup, BiForm::default())
}

pub fn is_bvf_left_ideal(m: &Magma, b: &BvfSubset) -> Result<Verdict> {
    verdict(m, b, IdealClass::Left, BiForm::default())
}

pub fn is_bvf_right_ideal(m: &Magma, b: &BvfSubset) -> Result<Verdict> {
    verdict(m, b, IdealClass::Right, BiForm::default())
}

pub fn is_bvf_two_sided_ideal(m: &Magma, b: &BvfSubset) -> Result<Verdict> {
    verdict(m, b, IdealClass::TwoSided, BiForm::default())
}

pub fn is_bvf_generalized_bi_ideal(m: &Magma, b: &BvfSubset) -> Result<Verdict> {
    verdict(m, b, IdealClass::GeneralizedBi, BiForm::default())
}

pub fn is_bvf_bi_ideal(m: &Magma, b: &BvfSubset) -> Result<Verdict> {
    verdict(m, b, IdealClass::Bi, BiForm::default())
}

pub fn is_bvf_interior_ideal(m: &Magma, b: &BvfSubset) -> Result<Verdict> {
    verdict(m, b, IdealClass::Interior, BiForm::default())
}

/// Verdicts for every class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub bi_form: BiForm,
    pub bvf_subsemigroup: Verdict,
    pub bvf_left_ideal: Verdict,
    pub bvf_right_ideal: Verdict,
    pub bvf_two_sided: Verdict,
    pub bvf_generalized_bi: Verdict,
    pub bvf_bi: Verdict,
    pub bvf_interior: Verdict,
}

impl Classification {
    pub fn get(&self, class: IdealClass) -> &Verdict {
        match class {
            IdealClass::Subsemigroup => &self.bvf_subsemigroup,
            IdealClass::Left => &self.bvf_left_ideal,
            IdealClass::Right => &self.bvf_right_ideal,
            IdealClass::TwoSided => &self.bvf_two_sided,
            IdealClass::GeneralizedBi => &self.bvf_generalized_bi,
            IdealClass::Bi => &self.bvf_bi,
            IdealClass::Interior => &self.bvf_interior,
        }
    }

    pub fn flag(&self, class: IdealClass) -> bool {
        self.get(class).holds
    }
}

pub fn classify(m: &Magma, b: &BvfSubset) -> Result<Classification> {
    classify_with(m, b, BiForm::default())
}

pub fn classify_with(m: &Magma, b: &BvfSubset, form: BiForm) -> Result<Classification> {
    b.check_order(m.order())?;
    let base = |class| verdict(m, b, class, form);
    let subsemigroup = base(IdealClass::Subsemigroup)?;
    let left = base(IdealClass::Left)?;
    let right = base(IdealClass::Right)?;
    let generalized_bi = base(IdealClass::GeneralizedBi)?;
    let interior = base(IdealClass::Interior)?;
    let conj = |a: &Verdict, b: &Verdict| {
        Verdict::from_violations(a.violations.iter().chain(&b.violations).cloned().collect())
    };
    let two_sided = conj(&left, &right);
    let bi = conj(&subsemigroup, &generalized_bi);
    Ok(Classification {
        bi_form: form,
        bvf_subsemigroup: subsemigroup,
        bvf_left_ideal: left,
        bvf_right_ideal: right,
        bvf_two_sided: two_sided,
        bvf_generalized_bi: generalized_bi,
        bvf_bi: bi,
        bvf_interior: interior,
    })
}

/// Outcome of a composition-inclusion test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionVerdict {
    pub holds: bool,
    /// The inclusion that failed, e.g. `"(B∘Γ)∘B ⊆ B"`.
    pub inclusion: Option<&'static str>,
    /// First element where it failed.
    pub element: Option<Element>,
}

/// Decides `class` through the composition calculus: subsemigroup as
/// `B∘B ⊆ B`, left as `Γ∘B ⊆ B`, right as `B∘Γ ⊆ B`, generalized bi as
/// `(B∘Γ)∘B ⊆ B`, interior as `(Γ∘B)∘Γ ⊆ B`; two-sided and bi are the
/// corresponding conjunctions. Containment is the bipolar order, so the
/// negative parts are compared with reversed inequality.
pub fn characterize_by_composition(
    m: &Magma,
    b: &BvfSubset,
    class: IdealClass,
) -> Result<CompositionVerdict> {
    b.check_order(m.order())?;
    let g = gamma(m.order());
    let mut checks: Vec<(&'static str, BvfSubset)> = Vec::new();
    for &part in components(class) {
        let lhs = match part {
            IdealClass::Subsemigroup => ("B∘B ⊆ B", compose(m, b, b)?),
            IdealClass::Left => ("Γ∘B ⊆ B", compose(m, &g, b)?),
            IdealClass::Right => ("B∘Γ ⊆ B", compose(m, b, &g)?),
            IdealClass::GeneralizedBi => ("(B∘Γ)∘B ⊆ B", compose(m, &compose(m, b, &g)?, b)?),
            IdealClass::Interior => ("(Γ∘B)∘Γ ⊆ B", compose(m, &compose(m, &g, b)?, &g)?),
            IdealClass::TwoSided | IdealClass::Bi => unreachable!(),
        };
        checks.push(lhs);
    }
    for (name, lhs) in checks {
        if let Some(x) = first_excess(&lhs, b)? {
            return Ok(CompositionVerdict {
                holds: false,
                inclusion: Some(name),
                element: Some(x),
            });
        }
    }
    Ok(CompositionVerdict {
        holds: true,
        inclusion: None,
        element: None,
    })
}

/// The least subset above `b` (in the bipolar order, on the same degree
/// values) that belongs to `class`: repeatedly raises `μ⁺` and lowers `μ⁻`
/// at products that violate the defining inequality until nothing changes.
/// Every degree stays one of the input's values, so this terminates.
pub fn close_under(m: &Magma, b: &BvfSubset, class: IdealClass, form: BiForm) -> Result<BvfSubset> {
    b.check_order(m.order())?;
    let mut out = b.clone();
    loop {
        let mut changed = false;
        for &part in components(class) {
            let mut fixes = Vec::new();
            scan(m, &out, part, form, |w| {
                fixes.push(w);
                true
            });
            let (pos, neg) = out.parts_mut();
            for w in fixes {
                if pos[w.product] < w.pos.bound {
                    pos[w.product] = w.pos.bound;
                    changed = true;
                }
                if neg[w.product] > w.neg.bound {
                    neg[w.product] = w.neg.bound;
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(out);
        }
    }
}
