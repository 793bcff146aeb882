//! Instance-level verification of the structural results about
//! LA-semigroups and their bipolar subsets.
//!
//! Each `verify_*` function re-checks its hypotheses first and returns an
//! error when they fail; [`run_all`] turns such errors into "not applicable"
//! entries rather than failures. A failing report always carries a witness
//! holding the full instance, so it can be re-checked independently.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bvf::{characteristic, compose, first_excess, gamma, meet, BvfSubset};
use crate::error::{Error, Result};
use crate::ideals::{characterize_by_composition, close_under, holds, BiForm, IdealClass};
use crate::magma::{check_law, check_lemma_l1, classify_crisp, Element, Law, Magma};
use crate::random::{all_quantized, derive_seed, random_bvf};

/// Stable theorem identifiers.
pub mod ids {
    pub const MEDIAL_LAW: &str = "law-medial";
    pub const PARAMEDIAL_LAW: &str = "law-paramedial";
    pub const LEMMA_L1: &str = "lem-l1";
    pub const BVFS_IS_LA: &str = "prop-bvfs-la";
    pub const BVFS_MEDIAL: &str = "cor-bvfs-medial";
    pub const IDEAL_IS_SUBSEMIGROUP: &str = "prop-ideal-subsemigroup";
    pub const COMPOSITION_CHARACTERIZATION: &str = "lem-composition-characterization";
    pub const PRODUCT_IN_MEET: &str = "thm-product-in-meet";
    pub const MEET_CLOSURE: &str = "prop-meet-closure";
    pub const GAMMA_ABSORPTION: &str = "lem-gamma-absorption";
    pub const CHARACTERISTIC_BRIDGE: &str = "thm-characteristic-bridge";
    pub const IDEAL_IS_INTERIOR: &str = "rem-ideal-interior";
    pub const RIGHT_IFF_INTERIOR: &str = "prop-right-iff-interior";
    pub const LEFT_IDEAL_IS_BI: &str = "thm-left-ideal-bi";

    /// Every identifier, in report order.
    pub const ALL: [&str; 14] = [
        MEDIAL_LAW,
        PARAMEDIAL_LAW,
        LEMMA_L1,
        BVFS_IS_LA,
        BVFS_MEDIAL,
        IDEAL_IS_SUBSEMIGROUP,
        COMPOSITION_CHARACTERIZATION,
        PRODUCT_IN_MEET,
        MEET_CLOSURE,
        GAMMA_ABSORPTION,
        CHARACTERISTIC_BRIDGE,
        IDEAL_IS_INTERIOR,
        RIGHT_IFF_INTERIOR,
        LEFT_IDEAL_IS_BI,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
        })
    }
}

/// Outcome of checking one result on one instance or instance family.
///
/// `holds` is false only for [`Status::Fail`], and then `witness` is present.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub id: &'static str,
    pub status: Status,
    pub holds: bool,
    pub checked: u64,
    pub witness: Option<Value>,
    pub instance: Value,
    pub note: Option<String>,
}

impl TheoremReport {
    fn new(id: &'static str, instance: Value, checked: u64, witness: Option<Value>) -> Self {
        let holds = witness.is_none();
        Self {
            id,
            status: if holds { Status::Pass } else { Status::Fail },
            holds,
            checked,
            witness,
            instance,
            note: None,
        }
    }

    fn not_applicable(id: &'static str, instance: Value, reason: String) -> Self {
        Self {
            id,
            status: Status::NotApplicable,
            holds: true,
            checked: 0,
            witness: None,
            instance,
            note: Some(reason),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

fn describe(m: &Magma, subsets: &[&BvfSubset]) -> Value {
    json!({
        "magma": m.fingerprint(),
        "subsets": subsets.iter().map(|b| b.fingerprint()).collect::<Vec<_>>(),
    })
}

fn payload(m: &Magma, subsets: &[&BvfSubset], detail: Value) -> Value {
    json!({
        "table": m.to_table_text(),
        "subsets": subsets.iter().map(|b| serde_json::to_value(b).expect("serializable")).collect::<Vec<_>>(),
        "detail": detail,
    })
}

fn require_left_invertive(m: &Magma) -> Result<()> {
    if m.is_left_invertive() {
        Ok(())
    } else {
        let w = check_law(m, Law::LeftInvertive).witness.unwrap_or_default();
        Err(Error::NotLeftInvertive(format!("witness {w:?}")))
    }
}

fn require_left_identity(m: &Magma) -> Result<Element> {
    m.left_identity().ok_or(Error::NoLeftIdentity)
}

fn require_class(m: &Magma, b: &BvfSubset, class: IdealClass, role: &str) -> Result<()> {
    if holds(m, b, class, BiForm::default())? {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("{role} is not in class {class}")))
    }
}

/// First element where the two subsets differ.
fn first_difference(a: &BvfSubset, b: &BvfSubset) -> Option<Element> {
    (0..a.order()).find(|&i| a.pos()[i] != b.pos()[i] || a.neg()[i] != b.neg()[i])
}

fn equality_detail(lhs: &BvfSubset, rhs: &BvfSubset, x: Element) -> Value {
    json!({
        "element": x,
        "lhs": {"pos": lhs.pos()[x].to_string(), "neg": lhs.neg()[x].to_string()},
        "rhs": {"pos": rhs.pos()[x].to_string(), "neg": rhs.neg()[x].to_string()},
    })
}

fn law_report(id: &'static str, m: &Magma, law: Law) -> TheoremReport {
    let r = check_law(m, law);
    let witness = r
        .witness
        .as_ref()
        .map(|w| payload(m, &[], json!({"tuple": w, "sides": r.sides})));
    TheoremReport::new(id, describe(m, &[]), r.checked as u64, witness)
}

/// The medial law on a left-invertive magma.
pub fn verify_medial_law(m: &Magma) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    Ok(law_report(ids::MEDIAL_LAW, m, Law::Medial))
}

/// The paramedial law on a left-invertive magma with left identity.
pub fn verify_paramedial_law(m: &Magma) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    require_left_identity(m)?;
    Ok(law_report(ids::PARAMEDIAL_LAW, m, Law::Paramedial))
}

/// `a(bc) = b(ac)` on a left-invertive magma with left identity.
pub fn verify_lemma_l1(m: &Magma) -> Result<TheoremReport> {
    let r = check_lemma_l1(m)?;
    let witness = r
        .witness
        .as_ref()
        .map(|w| payload(m, &[], json!({"tuple": w, "sides": r.sides})));
    Ok(TheoremReport::new(
        ids::LEMMA_L1,
        describe(m, &[]),
        r.checked as u64,
        witness,
    ))
}

/// `(B1∘B2)∘B3 = (B3∘B2)∘B1`, exactly.
pub fn verify_bvfs_is_la(
    m: &Magma,
    b1: &BvfSubset,
    b2: &BvfSubset,
    b3: &BvfSubset,
) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    let lhs = compose(m, &compose(m, b1, b2)?, b3)?;
    let rhs = compose(m, &compose(m, b3, b2)?, b1)?;
    let witness = first_difference(&lhs, &rhs)
        .map(|x| payload(m, &[b1, b2, b3], equality_detail(&lhs, &rhs, x)));
    Ok(TheoremReport::new(
        ids::BVFS_IS_LA,
        describe(m, &[b1, b2, b3]),
        m.order() as u64,
        witness,
    ))
}

/// `(B1∘B2)∘(B3∘B4) = (B1∘B3)∘(B2∘B4)`, exactly.
pub fn verify_medial_in_bvfs(
    m: &Magma,
    b1: &BvfSubset,
    b2: &BvfSubset,
    b3: &BvfSubset,
    b4: &BvfSubset,
) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    let lhs = compose(m, &compose(m, b1, b2)?, &compose(m, b3, b4)?)?;
    let rhs = compose(m, &compose(m, b1, b3)?, &compose(m, b2, b4)?)?;
    let witness = first_difference(&lhs, &rhs)
        .map(|x| payload(m, &[b1, b2, b3, b4], equality_detail(&lhs, &rhs, x)));
    Ok(TheoremReport::new(
        ids::BVFS_MEDIAL,
        describe(m, &[b1, b2, b3, b4]),
        m.order() as u64,
        witness,
    ))
}

/// A left or right ideal is a subsemigroup.
pub fn verify_ideal_is_subsemigroup(
    m: &Magma,
    b: &BvfSubset,
    class: IdealClass,
) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    if !matches!(class, IdealClass::Left | IdealClass::Right) {
        return Err(Error::InvalidTask(format!(
            "class must be left or right, got {class}"
        )));
    }
    require_class(m, b, class, "B")?;
    let witness =
        crate::ideals::first_violation(m, b, IdealClass::Subsemigroup, BiForm::default())?
            .map(|w| payload(m, &[b], serde_json::to_value(w).expect("serializable")));
    Ok(TheoremReport::new(
        ids::IDEAL_IS_SUBSEMIGROUP,
        json!({"magma": m.fingerprint(), "subsets": [b.fingerprint()], "class": class}),
        (m.order() * m.order()) as u64,
        witness,
    ))
}

/// Pointwise and compositional verdicts agree for every class.
pub fn verify_composition_characterization(m: &Magma, b: &BvfSubset) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    let mut witness = None;
    for class in IdealClass::ALL {
        let pointwise = holds(m, b, class, BiForm::OuterPair)?;
        let by_composition = characterize_by_composition(m, b, class)?;
        if pointwise != by_composition.holds {
            witness = Some(payload(
                m,
                &[b],
                json!({
                    "class": class,
                    "pointwise": pointwise,
                    "composition": by_composition,
                }),
            ));
            break;
        }
    }
    Ok(TheoremReport::new(
        ids::COMPOSITION_CHARACTERIZATION,
        describe(m, &[b]),
        IdealClass::ALL.len() as u64,
        witness,
    ))
}

/// For a right ideal `B1` and a left ideal `B2`, `B1∘B2 ⊆ B1∩B2`.
pub fn verify_product_in_meet(m: &Magma, b1: &BvfSubset, b2: &BvfSubset) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    require_class(m, b1, IdealClass::Right, "B1")?;
    require_class(m, b2, IdealClass::Left, "B2")?;
    let product = compose(m, b1, b2)?;
    let bound = meet(b1, b2)?;
    let witness = first_excess(&product, &bound)?
        .map(|x| payload(m, &[b1, b2], equality_detail(&product, &bound, x)));
    Ok(TheoremReport::new(
        ids::PRODUCT_IN_MEET,
        describe(m, &[b1, b2]),
        m.order() as u64,
        witness,
    ))
}

/// The meet of two members of `class` is again a member, for the
/// subsemigroup, left, right and two-sided classes.
pub fn verify_meet_closure(
    m: &Magma,
    b1: &BvfSubset,
    b2: &BvfSubset,
    class: IdealClass,
) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    if !matches!(
        class,
        IdealClass::Subsemigroup | IdealClass::Left | IdealClass::Right | IdealClass::TwoSided
    ) {
        return Err(Error::InvalidTask(format!(
            "meet closure is not claimed for class {class}"
        )));
    }
    require_class(m, b1, class, "B1")?;
    require_class(m, b2, class, "B2")?;
    let both = meet(b1, b2)?;
    let witness = crate::ideals::first_violation(m, &both, class, BiForm::default())?
        .map(|w| payload(m, &[b1, b2], json!({"meet": both, "violation": w})));
    Ok(TheoremReport::new(
        ids::MEET_CLOSURE,
        json!({"magma": m.fingerprint(), "subsets": [b1.fingerprint(), b2.fingerprint()], "class": class}),
        1,
        witness,
    ))
}

/// With a left identity, `Γ∘B = B` for every left ideal `B`.
pub fn verify_gamma_absorption(m: &Magma, b: &BvfSubset) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    require_left_identity(m)?;
    require_class(m, b, IdealClass::Left, "B")?;
    let lhs = compose(m, &gamma(m.order()), b)?;
    let witness = first_difference(&lhs, b).map(|x| payload(m, &[b], equality_detail(&lhs, b, x)));
    Ok(TheoremReport::new(
        ids::GAMMA_ABSORPTION,
        describe(m, &[b]),
        m.order() as u64,
        witness,
    ))
}

/// A nonempty crisp subset is in `class` exactly when its characteristic
/// bipolar subset is.
pub fn verify_characteristic_bridge(
    m: &Magma,
    subset: &[Element],
    class: IdealClass,
) -> Result<TheoremReport> {
    let crisp = classify_crisp(m, subset)?.get(class).holds;
    let chi = characteristic(m.order(), subset)?;
    let fuzzy = holds(m, &chi, class, BiForm::default())?;
    let witness = (crisp != fuzzy).then(|| {
        payload(
            m,
            &[&chi],
            json!({"subset": subset, "class": class, "crisp": crisp, "bvf": fuzzy}),
        )
    });
    Ok(TheoremReport::new(
        ids::CHARACTERISTIC_BRIDGE,
        json!({"magma": m.fingerprint(), "subset": subset, "class": class}),
        1,
        witness,
    ))
}

/// Every two-sided ideal is an interior ideal.
pub fn verify_ideal_is_interior(m: &Magma, b: &BvfSubset) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    require_class(m, b, IdealClass::TwoSided, "B")?;
    let witness = crate::ideals::first_violation(m, b, IdealClass::Interior, BiForm::default())?
        .map(|w| payload(m, &[b], serde_json::to_value(w).expect("serializable")));
    Ok(TheoremReport::new(
        ids::IDEAL_IS_INTERIOR,
        describe(m, &[b]),
        (m.order() as u64).pow(3),
        witness,
    ))
}

/// With a left identity, right ideals and interior ideals coincide.
pub fn verify_right_iff_interior(m: &Magma, b: &BvfSubset) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    require_left_identity(m)?;
    let right = holds(m, b, IdealClass::Right, BiForm::default())?;
    let interior = holds(m, b, IdealClass::Interior, BiForm::default())?;
    let witness = (right != interior)
        .then(|| payload(m, &[b], json!({"right": right, "interior": interior})));
    Ok(TheoremReport::new(
        ids::RIGHT_IFF_INTERIOR,
        describe(m, &[b]),
        1,
        witness,
    ))
}

const LEFT_IDEAL_BI_NOTE: &str = "checked under the hypotheses the argument uses: \
     left-invertive, left identity, B a left ideal (interior-ideality is not assumed)";

/// With a left identity, every left ideal is a bi-ideal.
pub fn verify_left_interior_implies_bi(m: &Magma, b: &BvfSubset) -> Result<TheoremReport> {
    require_left_invertive(m)?;
    require_left_identity(m)?;
    require_class(m, b, IdealClass::Left, "B")?;
    let witness = crate::ideals::first_violation(m, b, IdealClass::Bi, BiForm::default())?
        .map(|w| payload(m, &[b], serde_json::to_value(w).expect("serializable")));
    Ok(TheoremReport::new(
        ids::LEFT_IDEAL_IS_BI,
        describe(m, &[b]),
        (m.order() as u64).pow(3),
        witness,
    )
    .with_note(LEFT_IDEAL_BI_NOTE))
}

/// A magma with the subsets supplied for it.
#[derive(Clone, Debug)]
pub struct FixtureBundle {
    pub name: String,
    pub magma: Magma,
    pub subsets: Vec<BvfSubset>,
}

impl FixtureBundle {
    pub fn new(name: impl Into<String>, magma: Magma, subsets: Vec<BvfSubset>) -> Self {
        Self {
            name: name.into(),
            magma,
            subsets,
        }
    }
}

/// How universally quantified statements are sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Random subsets per bundle (ignored in the exhaustive regime).
    pub samples: usize,
    pub seed: u64,
    /// Degree grid resolution.
    pub q: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 0,
            q: 10,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Every subset on the degree grid.
    ExhaustiveGrid,
    /// Seeded random subsets from the degree grid.
    SeededRandom,
}

impl RunConfig {
    /// Exhaustive only for carriers of order ≤ 2 on grids with q ≤ 2.
    pub fn regime(&self, order: usize) -> Regime {
        if order <= 2 && self.q <= 2 {
            Regime::ExhaustiveGrid
        } else {
            Regime::SeededRandom
        }
    }

    /// Fixture subsets and `Γ` first, then the sampled family.
    pub fn family(&self, bundle: &FixtureBundle) -> Vec<BvfSubset> {
        let n = bundle.magma.order();
        let mut out = bundle.subsets.clone();
        out.push(gamma(n));
        match self.regime(n) {
            Regime::ExhaustiveGrid => out.extend(all_quantized(n, self.q)),
            Regime::SeededRandom => out.extend(
                (0..self.samples as u64).map(|i| random_bvf(n, self.q, derive_seed(self.seed, i))),
            ),
        }
        out
    }
}

/// Aggregates per-instance results for one theorem.
struct Tally {
    id: &'static str,
    checked: u64,
    skipped: u64,
    failure: Option<Value>,
    skip_reason: Option<String>,
}

impl Tally {
    fn new(id: &'static str) -> Self {
        Self {
            id,
            checked: 0,
            skipped: 0,
            failure: None,
            skip_reason: None,
        }
    }

    fn record(&mut self, outcome: Result<TheoremReport>) {
        match outcome {
            Ok(report) => {
                self.checked += 1;
                if self.failure.is_none() {
                    self.failure = report.witness;
                }
            }
            Err(e) => {
                self.skipped += 1;
                if self.skip_reason.is_none() {
                    self.skip_reason = Some(e.to_string());
                }
            }
        }
    }

    fn finish(self, instance: &Value) -> TheoremReport {
        let mut instance = instance.clone();
        instance["instances_skipped"] = json!(self.skipped);
        if self.checked == 0 {
            let reason = self
                .skip_reason
                .unwrap_or_else(|| "no instances".to_string());
            return TheoremReport::not_applicable(self.id, instance, reason);
        }
        let mut report = TheoremReport::new(self.id, instance, self.checked, self.failure);
        if self.id == ids::LEFT_IDEAL_IS_BI {
            report = report.with_note(LEFT_IDEAL_BI_NOTE);
        }
        report
    }
}

/// Runs every verifier on one bundle.
pub fn run_bundle(bundle: &FixtureBundle, cfg: &RunConfig) -> Vec<TheoremReport> {
    let m = &bundle.magma;
    let n = m.order();
    let family = cfg.family(bundle);
    let regime = cfg.regime(n);
    let instance = json!({
        "bundle": bundle.name,
        "magma": m.fingerprint(),
        "fixtures": bundle.subsets.iter().map(BvfSubset::fingerprint).collect::<Vec<_>>(),
        "seed": cfg.seed,
        "q": cfg.q,
        "samples": family.len(),
        "regime": regime,
    });

    // Hypothesis-satisfying inputs, built once per family member.
    let close = |class| {
        family
            .iter()
            .map(|b| close_under(m, b, class, BiForm::default()).expect("orders match"))
            .collect::<Vec<_>>()
    };
    let (subsemigroups, lefts, rights, ideals) = (
        close(IdealClass::Subsemigroup),
        close(IdealClass::Left),
        close(IdealClass::Right),
        close(IdealClass::TwoSided),
    );
    let interiors = close(IdealClass::Interior);
    let k = family.len();
    let next = |i: usize, d: usize| (i + d) % k;

    let mut reports = Vec::with_capacity(ids::ALL.len());
    let single = |outcome: Result<TheoremReport>| {
        let mut t = Tally::new("");
        t.record(outcome);
        t
    };

    let mut medial = single(verify_medial_law(m));
    medial.id = ids::MEDIAL_LAW;
    reports.push(medial.finish(&instance));
    let mut paramedial = single(verify_paramedial_law(m));
    paramedial.id = ids::PARAMEDIAL_LAW;
    reports.push(paramedial.finish(&instance));
    let mut l1 = single(verify_lemma_l1(m));
    l1.id = ids::LEMMA_L1;
    reports.push(l1.finish(&instance));

    let mut t = Tally::new(ids::BVFS_IS_LA);
    for i in 0..k {
        t.record(verify_bvfs_is_la(
            m,
            &family[i],
            &family[next(i, 1)],
            &family[next(i, 2)],
        ));
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::BVFS_MEDIAL);
    for i in 0..k {
        t.record(verify_medial_in_bvfs(
            m,
            &family[i],
            &family[next(i, 1)],
            &family[next(i, 2)],
            &family[next(i, 3)],
        ));
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::IDEAL_IS_SUBSEMIGROUP);
    for i in 0..k {
        t.record(verify_ideal_is_subsemigroup(m, &lefts[i], IdealClass::Left));
        t.record(verify_ideal_is_subsemigroup(
            m,
            &rights[i],
            IdealClass::Right,
        ));
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::COMPOSITION_CHARACTERIZATION);
    for sets in [&family, &subsemigroups, &lefts, &rights, &interiors] {
        for b in sets.iter() {
            t.record(verify_composition_characterization(m, b));
        }
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::PRODUCT_IN_MEET);
    for i in 0..k {
        t.record(verify_product_in_meet(m, &rights[i], &lefts[next(i, 1)]));
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::MEET_CLOSURE);
    for (class, sets) in [
        (IdealClass::Subsemigroup, &subsemigroups),
        (IdealClass::Left, &lefts),
        (IdealClass::Right, &rights),
        (IdealClass::TwoSided, &ideals),
    ] {
        for i in 0..k {
            t.record(verify_meet_closure(m, &sets[i], &sets[next(i, 1)], class));
        }
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::GAMMA_ABSORPTION);
    for b in &lefts {
        t.record(verify_gamma_absorption(m, b));
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::CHARACTERISTIC_BRIDGE);
    for mask in 1u64..(1u64 << n) {
        let subset: Vec<Element> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        for class in IdealClass::ALL {
            t.record(verify_characteristic_bridge(m, &subset, class));
        }
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::IDEAL_IS_INTERIOR);
    for b in &ideals {
        t.record(verify_ideal_is_interior(m, b));
    }
    let converse_counterexample = family.iter().find(|b| {
        holds(m, b, IdealClass::Interior, BiForm::default()).unwrap_or(false)
            && !holds(m, b, IdealClass::TwoSided, BiForm::default()).unwrap_or(true)
    });
    let mut report = t.finish(&instance);
    if let Some(b) = converse_counterexample {
        report = report.with_note(format!(
            "converse refuted: subset {} is interior but not two-sided",
            b.fingerprint()
        ));
    }
    reports.push(report);

    let mut t = Tally::new(ids::RIGHT_IFF_INTERIOR);
    for sets in [&family, &rights, &interiors] {
        for b in sets.iter() {
            t.record(verify_right_iff_interior(m, b));
        }
    }
    reports.push(t.finish(&instance));

    let mut t = Tally::new(ids::LEFT_IDEAL_IS_BI);
    for b in &lefts {
        t.record(verify_left_interior_implies_bi(m, b));
    }
    reports.push(t.finish(&instance));

    reports
}

/// Runs every verifier on every bundle. Bundles are processed in parallel;
/// the result lists bundles in input order and theorems in [`ids::ALL`]
/// order.
pub fn run_all(bundles: &[FixtureBundle], cfg: &RunConfig) -> Vec<TheoremReport> {
    bundles
        .par_iter()
        .map(|b| run_bundle(b, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Plain-text table: one line per report.
pub fn render_table(reports: &[TheoremReport]) -> String {
    let mut out = format!(
        "{:<34} {:<18} {:>7} {:>9}  {}\n",
        "theorem", "bundle", "status", "checked", "note"
    );
    for r in reports {
        let bundle = r.instance["bundle"]
            .as_str()
            .map(str::to_string)
            .unwrap_or_else(|| r.instance["magma"].as_str().unwrap_or("-").to_string());
        out.push_str(&format!(
            "{:<34} {:<18} {:>7} {:>9}  {}\n",
            r.id,
            bundle,
            r.status.to_string(),
            r.checked,
            r.note.as_deref().unwrap_or("")
        ));
    }
    out
}
