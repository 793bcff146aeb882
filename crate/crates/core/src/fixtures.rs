//! The two worked examples shipped as golden files under `fixtures/`.

use crate::bvf::BvfSubset;
use crate::magma::{parse_table, Magma};

pub const EXAMPLE31_TABLE: &str = include_str!("../../../fixtures/example31.tbl");
pub const EXAMPLE31_SUBSET_JSON: &str = include_str!("../../../fixtures/example31.bvf.json");
pub const EXAMPLE32_TABLE: &str = include_str!("../../../fixtures/example32.tbl");
pub const EXAMPLE32_SUBSET_JSON: &str = include_str!("../../../fixtures/example32.bvf.json");

/// `(file name, contents)` for every golden file.
pub const FILES: [(&str, &str); 4] = [
    ("example31.tbl", EXAMPLE31_TABLE),
    ("example31.bvf.json", EXAMPLE31_SUBSET_JSON),
    ("example32.tbl", EXAMPLE32_TABLE),
    ("example32.bvf.json", EXAMPLE32_SUBSET_JSON),
];

/// Left-invertive, left identity `b`, not associative.
pub fn example31_magma() -> Magma {
    parse_table(EXAMPLE31_TABLE).expect("golden table")
}

/// A two-sided ideal of [`example31_magma`].
pub fn example31_subset() -> BvfSubset {
    BvfSubset::from_json(EXAMPLE31_SUBSET_JSON).expect("golden subset")
}

/// Left-invertive, no left identity.
pub fn example32_magma() -> Magma {
    parse_table(EXAMPLE32_TABLE).expect("golden table")
}

/// An interior ideal of [`example32_magma`] that is not a right ideal.
pub fn example32_subset() -> BvfSubset {
    BvfSubset::from_json(EXAMPLE32_SUBSET_JSON).expect("golden subset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_files_are_in_canonical_serialized_form() {
        assert_eq!(example31_magma().to_table_text(), EXAMPLE31_TABLE);
        assert_eq!(example32_magma().to_table_text(), EXAMPLE32_TABLE);
        assert_eq!(example31_subset().to_json(), EXAMPLE31_SUBSET_JSON);
        assert_eq!(example32_subset().to_json(), EXAMPLE32_SUBSET_JSON);
    }
}
