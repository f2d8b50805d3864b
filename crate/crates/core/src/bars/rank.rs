use std::collections::HashMap;

use super::{all_removals, apply_removal};
use crate::partitions::StrictPartition;

/// Shifted rank by the closed formula `max(o, e + (ℓ mod 2))`.
pub fn srank_formula(lambda: &StrictPartition) -> usize {
    let odd = lambda.odd_rows();
    let even = lambda.even_rows();
    odd.max(even + lambda.len() % 2)
}

/// Shifted rank by exhaustive search over removal chains.
pub fn srank_bruteforce(lambda: &StrictPartition) -> usize {
    RankOracle::new().min_bars(lambda)
}

/// Memoized shortest-chain search: the minimum number of odd bars whose
/// successive removal empties λ.
///
/// The memo is instance-local; share an oracle across threads only behind a lock.
#[derive(Debug, Default)]
pub struct RankOracle {
    memo: HashMap<StrictPartition, usize>,
}

impl RankOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn min_bars(&mut self, lambda: &StrictPartition) -> usize {
        if lambda.is_empty() {
            return 0;
        }
        if let Some(&known) = self.memo.get(lambda) {
            return known;
        }
        // A bar clears at most two rows.
        let floor = lambda.len().div_ceil(2);
        let mut best = usize::MAX;
        // all_removals lists larger bars first.
        for removal in all_removals(lambda) {
            let rest = apply_removal(lambda, &removal);
            let candidate = 1 + self.min_bars(&rest);
            best = best.min(candidate);
            if best == floor {
                break;
            }
        }
        self.memo.insert(lambda.clone(), best);
        best
    }

    pub fn cached_shapes(&self) -> usize {
        self.memo.len()
    }
}
