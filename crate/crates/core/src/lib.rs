//! Finite LA-semigroups (groupoids satisfying `(a·b)·c = (c·b)·a`) and
//! bipolar-valued fuzzy subsets over them.
//!
//! * [`magma`]: Cayley tables, structural laws, crisp ideals.
//! * [`bvf`] and [`degree`]: exact bipolar subsets and their `∘` product.
//! * [`ideals`]: the bipolar ideal hierarchy, pointwise and compositional.
//! * [`theorems`]: instance-level checks of the structural results.
//! * [`enumerate`] and [`search`]: censuses of small LA-semigroups and
//!   randomized separation search.

pub mod bvf;
pub mod degree;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod ideals;
pub mod magma;
pub mod random;
pub mod sampled;
pub mod search;
pub mod theorems;

pub use bvf::{characteristic, compose, gamma, join, leq, meet, BvfSubset};
pub use degree::Degree;
pub use enumerate::{canonicalize, enumerate, Census, EnumerationTask};
pub use error::{Error, Result};
pub use ideals::{
    characterize_by_composition, classify, classify_with, BiForm, Classification, IdealClass,
    Verdict, Witness,
};
pub use magma::{
    check_law, check_lemma_l1, classify_crisp, find_left_identity, parse_table,
    CrispClassification, Element, Law, LawReport, Magma,
};
pub use random::random_bvf;
pub use sampled::{sampled_law_check, IntegerOp};
pub use search::{search, SearchHit, SearchSpec, Target};
pub use theorems::{run_all, FixtureBundle, RunConfig, Status, TheoremReport};
