//! Inputs shared by the benchmarks.

use bvfla_core::{enumerate, random_bvf, BvfSubset, EnumerationTask, Magma};

/// All left-invertive magmas of `order` up to isomorphism.
pub fn census(order: usize) -> Vec<Magma> {
    let mut task = EnumerationTask::new(order);
    task.up_to_isomorphism = true;
    enumerate(&task).expect("valid task").magmas
}

/// `count` seeded subsets of the given order on the tenths grid.
pub fn subsets(order: usize, count: u64) -> Vec<BvfSubset> {
    (0..count).map(|s| random_bvf(order, 10, s)).collect()
}
