use std::fmt;

use num_bigint::BigInt;

use super::{all_removals, apply_removal, find_removal, removals, BarRemoval, BarType, RankOracle};
use crate::error::{Error, Result};
use crate::partitions::{Partition, StrictPartition};

/// A bar tableau stored as its chain of shapes λ = chain[0] ⊃ … ⊃ chain[m] = ∅
/// together with the removal performed at each step.
///
/// Step k (0-based) removes the cells carrying label `m − k`, so the first
/// removal holds the largest label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarTableau {
    chain: Vec<StrictPartition>,
    steps: Vec<BarRemoval>,
}

/// sign · 2^two_power
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauWeight {
    pub sign: i8,
    pub two_power: u32,
}

impl TableauWeight {
    pub const ONE: TableauWeight = TableauWeight {
        sign: 1,
        two_power: 0,
    };

    pub fn from_coefficient(c: i64) -> Self {
        let sign = if c < 0 { -1 } else { 1 };
        let magnitude = c.unsigned_abs();
        debug_assert!(magnitude.is_power_of_two());
        TableauWeight {
            sign,
            two_power: magnitude.trailing_zeros(),
        }
    }

    pub fn value(self) -> BigInt {
        BigInt::from(self.sign) << self.two_power
    }
}

impl std::ops::Mul for TableauWeight {
    type Output = TableauWeight;

    fn mul(self, rhs: Self) -> Self {
        TableauWeight {
            sign: self.sign * rhs.sign,
            two_power: self.two_power + rhs.two_power,
        }
    }
}

impl fmt::Display for TableauWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl BarTableau {
    /// The tableau of ∅ with no bars.
    pub fn empty() -> Self {
        BarTableau {
            chain: vec![StrictPartition::empty()],
            steps: Vec::new(),
        }
    }

    /// Replays `(row, size)` removals from `shape`, which must end at ∅.
    pub fn from_removals(shape: &StrictPartition, removals: &[(usize, u32)]) -> Result<Self> {
        let mut chain = vec![shape.clone()];
        let mut steps = Vec::with_capacity(removals.len());
        for &(row, size) in removals {
            let current = chain.last().expect("chain is never empty");
            let step = find_removal(current, row, size)?;
            chain.push(apply_removal(current, &step));
            steps.push(step);
        }
        let tableau = BarTableau { chain, steps };
        if !tableau.chain.last().expect("nonempty").is_empty() {
            return Err(Error::TableauText {
                line: removals.len(),
                reason: format!("removals leave {} uncovered", tableau.chain.last().unwrap()),
            });
        }
        Ok(tableau)
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.chain[0]
    }

    pub fn chain(&self) -> &[StrictPartition] {
        &self.chain
    }

    pub fn steps(&self) -> &[BarRemoval] {
        &self.steps
    }

    /// Number of bars.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Label carried by step `k`.
    pub fn label(&self, k: usize) -> u32 {
        (self.steps.len() - k) as u32
    }

    /// Bar sizes in removal order.
    pub fn sizes(&self) -> Vec<u32> {
        self.steps.iter().map(|s| s.size).collect()
    }

    /// The type π of the tableau: the multiset of bar sizes.
    pub fn class(&self) -> Partition {
        Partition::from_multiset(self.sizes()).expect("bar sizes are positive")
    }

    pub fn weight(&self) -> TableauWeight {
        self.steps
            .iter()
            .map(|s| TableauWeight::from_coefficient(s.coefficient))
            .fold(TableauWeight::ONE, |acc, w| acc * w)
    }

    /// Recomputes every step from the stored chain head and checks it
    /// reproduces the stored chain.
    pub fn replays(&self) -> bool {
        let removals: Vec<(usize, u32)> = self.steps.iter().map(|s| (s.row, s.size)).collect();
        BarTableau::from_removals(self.shape(), &removals).is_ok_and(|t| t == *self)
    }

    /// Labels placed on the cells of the shifted diagram.
    pub fn grid(&self) -> ShiftedGrid {
        let shape = self.shape().parts();
        let mut rows: Vec<Vec<u32>> = shape.iter().map(|&p| vec![0; p as usize]).collect();
        // (current length, original row) for each row still present
        let mut live: Vec<(u32, usize)> = shape.iter().copied().zip(0..).collect();
        for (k, step) in self.steps.iter().enumerate() {
            let label = self.label(k);
            let idx = step.row - 1;
            let (len, id) = live[idx];
            match step.bar_type {
                BarType::Trailing => {
                    for cell in &mut rows[id][(len - step.size) as usize..len as usize] {
                        *cell = label;
                    }
                    live[idx].0 = len - step.size;
                }
                BarType::FullRow => {
                    rows[id]
                        .iter_mut()
                        .take(len as usize)
                        .for_each(|c| *c = label);
                    live[idx].0 = 0;
                }
                BarType::RowPair => {
                    let partner = step.partner.expect("type 3 records its partner") - 1;
                    for &row_idx in &[idx, partner] {
                        let (plen, pid) = live[row_idx];
                        rows[pid]
                            .iter_mut()
                            .take(plen as usize)
                            .for_each(|c| *c = label);
                        live[row_idx].0 = 0;
                    }
                }
            }
            live.retain(|&(len, _)| len > 0);
            live.sort_by_key(|&(len, _)| std::cmp::Reverse(len));
            debug_assert_eq!(
                live.iter().map(|&(l, _)| l).collect::<Vec<_>>(),
                self.chain[k + 1].parts()
            );
        }
        ShiftedGrid { rows }
    }

    /// One line per step: `label r i type [j]`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, step) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "{} {} {} {}",
                self.label(k),
                step.size,
                step.row,
                step.bar_type
            ));
            if let Some(j) = step.partner {
                out.push_str(&format!(" {j}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`BarTableau::to_text`] output for the given shape, validating every step.
    pub fn from_text(shape: &StrictPartition, text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let total = lines.len();
        let mut chain = vec![shape.clone()];
        let mut steps = Vec::with_capacity(total);
        for (k, (line_no, line)) in lines.into_iter().enumerate() {
            let bad = |reason: String| Error::TableauText {
                line: line_no,
                reason,
            };
            let fields: Vec<u64> = line
                .split_whitespace()
                .map(|f| {
                    f.parse::<u64>()
                        .map_err(|_| bad(format!("{f:?} is not an integer")))
                })
                .collect::<Result<_>>()?;
            if !(4..=5).contains(&fields.len()) {
                return Err(bad("expected `label r i type [j]`".into()));
            }
            let label = fields[0] as usize;
            if label != total - k {
                return Err(bad(format!("label {label} out of sequence")));
            }
            let size = u32::try_from(fields[1]).map_err(|_| bad("bar size too large".into()))?;
            let row = fields[2] as usize;
            let bar_type = u8::try_from(fields[3])
                .ok()
                .and_then(BarType::from_number)
                .ok_or_else(|| bad(format!("unknown bar type {}", fields[3])))?;
            let current = chain.last().expect("chain is never empty");
            let step = find_removal(current, row, size).map_err(|e| bad(e.to_string()))?;
            if step.bar_type != bar_type {
                return Err(bad(format!(
                    "row {row} admits a type {} bar, not type {bar_type}",
                    step.bar_type
                )));
            }
            let partner = fields.get(4).map(|&j| j as usize);
            if partner != step.partner {
                return Err(bad(format!("partner row should be {:?}", step.partner)));
            }
            chain.push(apply_removal(current, &step));
            steps.push(step);
        }
        if !chain.last().expect("nonempty").is_empty() {
            return Err(Error::TableauText {
                line: total,
                reason: format!("steps leave {} uncovered", chain.last().unwrap()),
            });
        }
        Ok(BarTableau { chain, steps })
    }
}

pub fn tableau_weight(tableau: &BarTableau) -> TableauWeight {
    tableau.weight()
}

/// Labels of a shifted diagram, one vector per row of the original shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedGrid {
    rows: Vec<Vec<u32>>,
}

impl ShiftedGrid {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        ShiftedGrid { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Checks the direct description of a bar tableau: rows weakly increase,
    /// every label occurs an odd number of times, a label spanning two rows
    /// starts both, and deleting all labels above any threshold leaves rows of
    /// distinct lengths. Labels must be exactly `1..=m`.
    pub fn is_bar_tableau(&self) -> bool {
        if self.rows.iter().any(|r| r.is_empty()) {
            return false;
        }
        if !self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) {
            return false;
        }
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        for label in 1..=max {
            let mut count = 0;
            let mut rows_with = 0;
            let mut starts_all = true;
            for row in &self.rows {
                let c = row.iter().filter(|&&x| x == label).count();
                if c > 0 {
                    count += c;
                    rows_with += 1;
                    starts_all &= row[0] == label;
                }
            }
            if count % 2 == 0 || rows_with > 2 || (rows_with == 2 && !starts_all) {
                return false;
            }
            let mut lengths: Vec<usize> = self
                .rows
                .iter()
                .map(|r| r.iter().filter(|&&x| x <= label).count())
                .filter(|&l| l > 0)
                .collect();
            lengths.sort_unstable();
            if lengths.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        self.rows.iter().flatten().all(|&x| (1..=max).contains(&x))
    }
}

impl fmt::Display for ShiftedGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (k, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}{}", " ".repeat(k * (width + 1)), cells.join(" "))?;
        }
        Ok(())
    }
}

/// No row has a change of label after an even number of cells.
pub fn even_boundary_free(tableau: &BarTableau) -> bool {
    tableau.grid().rows().iter().all(|row| {
        (1..row.len())
            .filter(|&c| row[c] != row[c - 1])
            .all(|c| c % 2 == 1)
    })
}

/// Every odd row carries one label; every even row carries one label or
/// exactly two labels, each an odd number of times.
pub fn lemma2_structure(tableau: &BarTableau) -> bool {
    tableau.grid().rows().iter().all(|row| {
        let mut runs: Vec<usize> = Vec::new();
        for (c, &x) in row.iter().enumerate() {
            if c == 0 || x != row[c - 1] {
                runs.push(0);
            }
            *runs.last_mut().expect("run opened") += 1;
        }
        match runs.len() {
            1 => true,
            2 => row.len() % 2 == 0 && runs.iter().all(|r| r % 2 == 1),
            _ => false,
        }
    })
}

fn check_class(lambda: &StrictPartition, sizes: &[u32]) -> Result<()> {
    let class = Partition::from_multiset(sizes.to_vec())?;
    if class.weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            shape: lambda.to_string(),
            shape_weight: lambda.weight(),
            class: class.to_string(),
            class_weight: class.weight(),
        });
    }
    if !class.all_parts_odd() {
        return Err(Error::NonOddClass(class.to_string()));
    }
    Ok(())
}

/// Bar tableaux of shape λ and type π, removing the parts of π largest first.
pub fn enumerate_bar_tableaux(lambda: &StrictPartition, pi: &Partition) -> Result<Vec<BarTableau>> {
    enumerate_bar_tableaux_in_order(lambda, pi.parts())
}

/// Bar tableaux of shape λ whose bars, in removal order, have the given sizes.
pub fn enumerate_bar_tableaux_in_order(
    lambda: &StrictPartition,
    sizes: &[u32],
) -> Result<Vec<BarTableau>> {
    check_class(lambda, sizes)?;
    let mut out = Vec::new();
    let mut search = Search::new(lambda);
    search.run(
        &mut |depth, shape| {
            sizes
                .get(depth)
                .map(|&r| removals(shape, r).expect("sizes validated odd"))
                .unwrap_or_default()
        },
        &mut out,
    );
    Ok(out)
}

/// Every bar tableau of shape λ, with any sequence of odd bar sizes.
pub fn all_bar_tableaux(lambda: &StrictPartition) -> Vec<BarTableau> {
    let mut out = Vec::new();
    Search::new(lambda).run(&mut |_, shape| all_removals(shape), &mut out);
    out
}

/// Bar tableaux of λ with exactly srank(λ) bars.
pub fn minimal_tableaux(lambda: &StrictPartition) -> Vec<BarTableau> {
    let mut oracle = RankOracle::new();
    let mut out = Vec::new();
    Search::new(lambda).run(
        &mut |_, shape| {
            let need = oracle.min_bars(shape);
            all_removals(shape)
                .into_iter()
                .filter(|b| oracle.min_bars(&apply_removal(shape, b)) + 1 == need)
                .collect()
        },
        &mut out,
    );
    out
}

struct Search {
    chain: Vec<StrictPartition>,
    steps: Vec<BarRemoval>,
}

impl Search {
    fn new(lambda: &StrictPartition) -> Self {
        Search {
            chain: vec![lambda.clone()],
            steps: Vec::new(),
        }
    }

    fn run<F>(&mut self, candidates: &mut F, out: &mut Vec<BarTableau>)
    where
        F: FnMut(usize, &StrictPartition) -> Vec<BarRemoval>,
    {
        let current = self.chain.last().expect("chain is never empty").clone();
        if current.is_empty() {
            out.push(BarTableau {
                chain: self.chain.clone(),
                steps: self.steps.clone(),
            });
            return;
        }
        for step in candidates(self.steps.len(), &current) {
            self.chain.push(apply_removal(&current, &step));
            self.steps.push(step);
            self.run(candidates, out);
            self.steps.pop();
            self.chain.pop();
        }
    }
}
