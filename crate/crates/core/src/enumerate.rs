//! Exhaustive enumeration of left-invertive Cayley tables, with optional
//! isomorphism rejection by canonical forms.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::magma::{find_left_identity, Element, Magma};

/// Default node limit for a census.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationTask {
    pub order: usize,
    pub require_left_identity: bool,
    pub up_to_isomorphism: bool,
    /// Maximum number of search nodes (cell assignments); `None` is unbounded.
    pub budget: Option<u64>,
}

impl EnumerationTask {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            require_left_identity: false,
            up_to_isomorphism: false,
            budget: Some(DEFAULT_BUDGET),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::InvalidTask("order must be at least 1".into()));
        }
        if self.budget == Some(0) {
            return Err(Error::InvalidTask("budget must be positive".into()));
        }
        Ok(())
    }
}

/// The result of an enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub task: EnumerationTask,
    /// Tables in lexicographic order (canonical forms when up to isomorphism).
    pub magmas: Vec<Magma>,
    pub budget_exhausted: bool,
    pub nodes: u64,
}

impl Census {
    pub fn count(&self) -> usize {
        self.magmas.len()
    }

    /// JSON header line followed by one table per entry.
    pub fn to_text(&self) -> String {
        let header = serde_json::json!({
            "order": self.task.order,
            "count": self.magmas.len(),
            "up_to_isomorphism": self.task.up_to_isomorphism,
            "budget_exhausted": self.budget_exhausted,
        });
        let mut out = header.to_string();
        out.push('\n');
        for m in &self.magmas {
            out.push_str(&m.to_table_text());
        }
        out
    }
}

const UNSET: Element = Element::MAX;

struct Search<'a> {
    n: usize,
    table: Vec<Element>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    require_left_identity: bool,
    sink: &'a mut Vec<Magma>,
}

impl Search<'_> {
    #[inline]
    fn get(&self, x: Element, y: Element) -> Element {
        self.table[x * self.n + y]
    }

    /// Whether every fully determined instance of `(a·b)·c = (c·b)·a` still
    /// holds.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let lhs = self.get(ab, c);
                    if lhs == UNSET {
                        continue;
                    }
                    let cb = self.get(c, b);
                    if cb == UNSET {
                        continue;
                    }
                    let rhs = self.get(cb, a);
                    if rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self, cell: usize) {
        if cell == self.n * self.n {
            if !self.require_left_identity
                || (0..self.n).any(|e| (0..self.n).all(|x| self.get(e, x) == x))
            {
                self.sink
                    .push(Magma::from_parts(self.n, self.table.clone(), None));
            }
            return;
        }
        for v in 0..self.n {
            if self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            self.table[cell] = v;
            if self.consistent() {
                self.dfs(cell + 1);
                if self.exhausted {
                    self.table[cell] = UNSET;
                    return;
                }
            }
        }
        self.table[cell] = UNSET;
    }
}

/// Enumerates the partition of tables whose `(0, 0)` entry is `first`.
fn enumerate_partition(
    task: &EnumerationTask,
    first: Element,
    budget: u64,
) -> (Vec<Magma>, u64, bool) {
    let n = task.order;
    let mut found = Vec::new();
    let mut search = Search {
        n,
        table: vec![UNSET; n * n],
        nodes: 1,
        budget,
        exhausted: false,
        require_left_identity: task.require_left_identity,
        sink: &mut found,
    };
    search.table[0] = first;
    if search.consistent() {
        search.dfs(1);
    }
    let (nodes, exhausted) = (search.nodes, search.exhausted);
    (found, nodes, exhausted)
}

/// Runs the census. The search tree is split by the `(0, 0)` entry and the
/// parts are explored on the current rayon pool; each part receives an equal
/// share of the budget, so the result does not depend on scheduling.
pub fn enumerate(task: &EnumerationTask) -> Result<Census> {
    task.validate()?;
    let n = task.order;
    let share = task
        .budget
        .map_or(u64::MAX, |b| b.div_ceil(n as u64).max(1));
    let parts: Vec<(Vec<Magma>, u64, bool)> = (0..n)
        .into_par_iter()
        .map(|first| enumerate_partition(task, first, share))
        .collect();

    let mut nodes = 0;
    let mut budget_exhausted = false;
    let mut labeled = Vec::new();
    for (found, part_nodes, exhausted) in parts {
        nodes += part_nodes;
        budget_exhausted |= exhausted;
        labeled.extend(found);
    }

    let magmas = if task.up_to_isomorphism {
        let forms: BTreeSet<Magma> = labeled.par_iter().map(canonicalize).collect();
        forms.into_iter().collect()
    } else {
        labeled
    };
    Ok(Census {
        task: task.clone(),
        magmas,
        budget_exhausted,
        nodes,
    })
}

/// Calls `f` on every permutation of `0..n`, in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[Element])) {
    let mut perm: Vec<Element> = (0..n).collect();
    loop {
        f(&perm);
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// The lexicographically least table among all relabelings of `m`; two
/// magmas are isomorphic exactly when their canonical forms are equal.
/// Names are dropped.
pub fn canonicalize(m: &Magma) -> Magma {
    let n = m.order();
    let mut best: Option<Vec<Element>> = None;
    let mut buf = vec![0; n * n];
    for_each_permutation(n, |perm| {
        for x in 0..n {
            for y in 0..n {
                buf[perm[x] * n + perm[y]] = perm[m.op(x, y)];
            }
        }
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    });
    Magma::from_parts(n, best.expect("at least one permutation"), None)
}

/// Number of permutations that fix the table.
pub fn automorphism_count(m: &Magma) -> usize {
    let n = m.order();
    let mut count = 0;
    for_each_permutation(n, |perm| {
        let fixed = (0..n).all(|x| (0..n).all(|y| perm[m.op(x, y)] == m.op(perm[x], perm[y])));
        if fixed {
            count += 1;
        }
    });
    count
}

/// Whether `m` has a left identity; re-exported here for census filters.
pub fn has_left_identity(m: &Magma) -> bool {
    find_left_identity(m).is_some()
}
