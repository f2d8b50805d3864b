//! Bar removal on shifted diagrams.
//!
//! For a strict partition λ of length l and an odd r, the rows admitting an
//! r-bar split into three sets:
//!
//! * `I₊`: rows with λ_i − r > 0 and distinct from every other part. The
//!   shortened row is reinserted between λ_j and λ_{j+1} (type 1).
//! * `I₀`: the row with λ_i = r, deleted outright (type 2).
//! * `I₋`: rows i for which some later row j has λ_i + λ_j = r; both rows are
//!   deleted (type 3).
//!
//! Rows are numbered from 1, matching the usual notation for λ(i, r).

mod rank;
mod tableau;

pub use rank::{srank_bruteforce, srank_formula, RankOracle};
pub use tableau::{
    all_bar_tableaux, enumerate_bar_tableaux, enumerate_bar_tableaux_in_order, even_boundary_free,
    lemma2_structure, minimal_tableaux, tableau_weight, BarTableau, ShiftedGrid, TableauWeight,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{Parity, StrictPartition};

/// Kind of r-bar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BarType {
    /// Rightmost r cells of a longer row (type 1, row in `I₊`).
    Trailing,
    /// A whole row of length r (type 2, row in `I₀`).
    FullRow,
    /// Two whole rows whose lengths sum to r (type 3, row in `I₋`).
    RowPair,
}

impl BarType {
    pub fn number(self) -> u8 {
        match self {
            BarType::Trailing => 1,
            BarType::FullRow => 2,
            BarType::RowPair => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(BarType::Trailing),
            2 => Some(BarType::FullRow),
            3 => Some(BarType::RowPair),
            _ => None,
        }
    }
}

impl fmt::Display for BarType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// The sets `I₊`, `I₀`, `I₋` for one bar size.
///
/// `plus` pairs each row with its insertion position j, `minus` pairs each row
/// with its partner row j.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RemovalSets {
    pub size: u32,
    pub plus: Vec<(usize, usize)>,
    pub zero: Option<usize>,
    pub minus: Vec<(usize, usize)>,
}

impl RemovalSets {
    pub fn plus_rows(&self) -> Vec<usize> {
        self.plus.iter().map(|&(i, _)| i).collect()
    }

    pub fn minus_rows(&self) -> Vec<usize> {
        self.minus.iter().map(|&(i, _)| i).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.zero.is_none() && self.minus.is_empty()
    }
}

/// One bar removal λ → λ(i, r) together with its coefficient n_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarRemoval {
    pub row: usize,
    pub size: u32,
    pub bar_type: BarType,
    /// Insertion position for type 1, partner row for type 3, absent for type 2.
    pub partner: Option<usize>,
    pub coefficient: i64,
}

fn check_size(r: u32) -> Result<()> {
    if r % 2 == 1 {
        Ok(())
    } else {
        Err(Error::InvalidBarSize(r))
    }
}

fn sign(exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Computes `I₊`, `I₀`, `I₋` for λ and the odd bar size `r`.
pub fn removal_sets(lambda: &StrictPartition, r: u32) -> Result<RemovalSets> {
    check_size(r)?;
    let parts = lambda.parts();
    let mut sets = RemovalSets {
        size: r,
        ..RemovalSets::default()
    };
    for (idx, &part) in parts.iter().enumerate() {
        let i = idx + 1;
        if part > r {
            let rest = part - r;
            if !parts.contains(&rest) {
                let j = parts.iter().filter(|&&p| p > rest).count();
                sets.plus.push((i, j));
            }
        } else if part == r {
            sets.zero = Some(i);
        } else if let Some(k) = parts[idx + 1..].iter().position(|&p| p == r - part) {
            sets.minus.push((i, i + 1 + k));
        }
    }
    Ok(sets)
}

/// Every legal removal of an r-bar from λ, with coefficients, ordered by row.
pub fn removals(lambda: &StrictPartition, r: u32) -> Result<Vec<BarRemoval>> {
    let sets = removal_sets(lambda, r)?;
    let len = lambda.len();
    let two_power: i64 = match lambda.parity() {
        Parity::Even => 2,
        Parity::Odd => 1,
    };
    let mut out = Vec::new();
    for &(i, j) in &sets.plus {
        out.push(BarRemoval {
            row: i,
            size: r,
            bar_type: BarType::Trailing,
            partner: Some(j),
            coefficient: sign(j - i) * two_power,
        });
    }
    if let Some(i) = sets.zero {
        out.push(BarRemoval {
            row: i,
            size: r,
            bar_type: BarType::FullRow,
            partner: None,
            coefficient: sign(len - i),
        });
    }
    for &(i, j) in &sets.minus {
        let part = lambda.parts()[i - 1] as usize;
        out.push(BarRemoval {
            row: i,
            size: r,
            bar_type: BarType::RowPair,
            partner: Some(j),
            coefficient: sign(j - i + part) * two_power,
        });
    }
    out.sort_by_key(|b| b.row);
    Ok(out)
}

/// Every legal removal of every odd size from λ.
pub fn all_removals(lambda: &StrictPartition) -> Vec<BarRemoval> {
    (1..=lambda.weight())
        .rev()
        .filter(|r| r % 2 == 1)
        .flat_map(|r| removals(lambda, r).expect("odd size"))
        .collect()
}

/// Locates the removal of an r-bar at row `i`, or reports it illegal.
pub fn find_removal(lambda: &StrictPartition, i: usize, r: u32) -> Result<BarRemoval> {
    removals(lambda, r)?
        .into_iter()
        .find(|b| b.row == i)
        .ok_or_else(|| Error::IllegalRemoval {
            shape: lambda.to_string(),
            row: i,
            size: r,
        })
}

/// λ(i, r).
pub fn remove_bar(lambda: &StrictPartition, i: usize, r: u32) -> Result<StrictPartition> {
    let removal = find_removal(lambda, i, r)?;
    Ok(apply_removal(lambda, &removal))
}

/// n_i for the removal of an r-bar at row `i`.
pub fn morris_coefficient(lambda: &StrictPartition, i: usize, r: u32) -> Result<i64> {
    Ok(find_removal(lambda, i, r)?.coefficient)
}

/// Applies a removal previously produced by [`removals`] for this λ.
pub(crate) fn apply_removal(lambda: &StrictPartition, removal: &BarRemoval) -> StrictPartition {
    let mut parts = lambda.parts().to_vec();
    let idx = removal.row - 1;
    match removal.bar_type {
        BarType::Trailing => {
            let rest = parts.remove(idx) - removal.size;
            let pos = parts.iter().take_while(|&&p| p > rest).count();
            parts.insert(pos, rest);
        }
        BarType::FullRow => {
            parts.remove(idx);
        }
        BarType::RowPair => {
            let j = removal.partner.expect("type 3 removal records its partner") - 1;
            parts.remove(j);
            parts.remove(idx);
        }
    }
    StrictPartition::from_sorted_unchecked(parts)
}
