//! Law checks for operations on the integers, restricted to a finite window.
//!
//! The carrier is infinite, so the window is not required to be closed under
//! the operation; products are evaluated with exact wide integers.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::magma::{Law, LawReport};

/// Integer operations available for sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegerOp {
    /// `a ∗ b = b − a`
    ReverseSubtraction,
}

impl IntegerOp {
    pub fn apply(self, a: i128, b: i128) -> i128 {
        match self {
            IntegerOp::ReverseSubtraction => b - a,
        }
    }
}

/// Checks `law` over every tuple from `window`, scanned in ascending order.
pub fn sampled_law_check(
    op: IntegerOp,
    window: RangeInclusive<i64>,
    law: Law,
) -> Result<LawReport<i128>> {
    if window.is_empty() {
        return Err(Error::InvalidTask("empty sampling window".into()));
    }
    let values: Vec<i128> = window.map(i128::from).collect();
    Ok(LawReport::exhaustive(law, &values, |a, b| op.apply(a, b)))
}
