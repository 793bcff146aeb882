//! Seeded generation of quantized bipolar subsets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bvf::BvfSubset;
use crate::degree::Degree;

/// A subset whose degrees are drawn uniformly from `{0, 1/q, …, 1}`
/// (positive part) and `{0, -1/q, …, -1}` (negative part).
pub fn random_bvf(order: usize, q: u32, seed: u64) -> BvfSubset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_bvf_with(order, q, &mut rng)
}

pub fn random_bvf_with<R: Rng + ?Sized>(order: usize, q: u32, rng: &mut R) -> BvfSubset {
    assert!(q >= 1, "quantization must be positive");
    let q = i64::from(q);
    let mut pos = Vec::with_capacity(order);
    let mut neg = Vec::with_capacity(order);
    for _ in 0..order {
        pos.push(Degree::new(rng.random_range(0..=q), q));
        neg.push(Degree::new(-rng.random_range(0..=q), q));
    }
    BvfSubset::from_parts_unchecked(pos, neg)
}

/// Derives an independent per-trial seed (SplitMix64 finalizer).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Every subset on the `(q+1)`-point grids, `(q+1)^(2·order)` of them.
pub fn all_quantized(order: usize, q: u32) -> impl Iterator<Item = BvfSubset> {
    let levels = u64::from(q) + 1;
    let total = levels.pow(2 * order as u32);
    let q = i64::from(q);
    (0..total).map(move |mut code| {
        let mut pos = Vec::with_capacity(order);
        let mut neg = Vec::with_capacity(order);
        for _ in 0..order {
            pos.push(Degree::new((code % levels) as i64, q));
            code /= levels;
            neg.push(Degree::new(-((code % levels) as i64), q));
            code /= levels;
        }
        BvfSubset::from_parts_unchecked(pos, neg)
    })
}
