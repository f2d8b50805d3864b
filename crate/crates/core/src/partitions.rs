//! Partitions, strict partitions, and the scalar statistics built on them.
//!
//! Partitions are immutable values ordered lexicographically on their parts,
//! so a descending iteration (or [`generate_partitions`]) yields the
//! reverse-lexicographic order used for every table in this crate.
//!
//! The text form is a comma-separated list of parts, `9,7,6,3,1`; the empty
//! partition is written `-`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A partition with pairwise distinct parts, i.e. a shifted shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Partition);

/// Parity of a partition: odd iff it has an odd number of even parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// 0 for even, 1 for odd.
    pub fn as_bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Which partitions [`generate_partitions`] should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// Every partition of n.
    All,
    /// Partitions into distinct parts.
    Distinct,
    /// Partitions whose parts are all odd.
    AllOdd,
}

/// Row statistics of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStatistics {
    pub odd_rows: usize,
    pub even_rows: usize,
    pub parity: Parity,
    pub centralizer_order: BigUint,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ordered = parts.windows(2).all(|w| w[0] >= w[1]);
        if !ordered || parts.contains(&0) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from any multiset of positive parts, sorting them.
    pub fn from_multiset(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ)
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// m_i(λ), the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// All nonzero multiplicities keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn odd_rows(&self) -> usize {
        self.parts.iter().filter(|p| *p % 2 == 1).count()
    }

    pub fn even_rows(&self) -> usize {
        self.len() - self.odd_rows()
    }

    /// ε(λ), computed from the number of even parts.
    pub fn parity(&self) -> Parity {
        if self.even_rows() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Parity of |λ| + ℓ(λ); always equal to [`Partition::parity`].
    pub fn parity_from_weight_and_length(&self) -> Parity {
        if (self.weight() as usize + self.len()) % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// z_λ = Π_i i^{m_i} m_i!, the order of the centralizer of a permutation of cycle type λ.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= BigUint::from(part) * BigUint::from(k);
            }
        }
        z
    }

    /// Durfee rank: the largest i with λ_i ≥ i.
    pub fn classical_rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(k, &p)| p as usize > *k)
            .count()
    }

    pub fn statistics(&self) -> PartitionStatistics {
        PartitionStatistics {
            odd_rows: self.odd_rows(),
            even_rows: self.even_rows(),
            parity: self.parity(),
            centralizer_order: self.centralizer_order(),
        }
    }

    /// The partition with one copy of `part` removed, if present.
    pub fn without_part(&self, part: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Multiset union of the parts of two partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => parts.extend(a.by_ref()),
                (None, Some(_)) => parts.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Partition { parts }
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        StrictPartition::try_from(Partition::new(parts)?)
    }

    pub fn from_multiset(parts: Vec<u32>) -> Result<Self> {
        StrictPartition::try_from(Partition::from_multiset(parts)?)
    }

    pub fn empty() -> Self {
        StrictPartition::default()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn weight(&self) -> u32 {
        self.0.weight()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> Parity {
        self.0.parity()
    }

    pub fn odd_rows(&self) -> usize {
        self.0.odd_rows()
    }

    pub fn even_rows(&self) -> usize {
        self.0.even_rows()
    }

    /// Built from parts the caller guarantees strictly decreasing and positive.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        StrictPartition(Partition { parts })
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::NotStrict(p.to_string()))
        }
    }
}

impl From<StrictPartition> for Partition {
    fn from(s: StrictPartition) -> Self {
        s.0
    }
}

impl AsRef<Partition> for StrictPartition {
    fn as_ref(&self) -> &Partition {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `9,7,6,3,1` (parts in any order) or `-` / empty for ∅.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "-" || trimmed == "∅" {
            return Ok(Partition::empty());
        }
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let mut parts = Vec::new();
        for tok in trimmed.split(',') {
            let tok = tok.trim();
            let part: u32 = tok
                .parse()
                .map_err(|_| parse_err(format!("{tok:?} is not a nonnegative integer")))?;
            if part == 0 {
                return Err(parse_err("parts must be positive".into()));
            }
            parts.push(part);
        }
        Partition::from_multiset(parts)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::try_from(s.parse::<Partition>()?)
    }
}

/// P(n), D(n) or P⁰(n) in reverse-lexicographic order. `n = 0` yields `[∅]`.
pub fn generate_partitions(n: u32, constraint: Constraint) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    generate_into(n, n, constraint, &mut current, &mut out);
    out
}

fn generate_into(
    remaining: u32,
    max_part: u32,
    constraint: Constraint,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        if constraint == Constraint::AllOdd && part % 2 == 0 {
            continue;
        }
        let next_max = match constraint {
            Constraint::Distinct => part - 1,
            _ => part,
        };
        current.push(part);
        generate_into(remaining - part, next_max, constraint, current, out);
        current.pop();
    }
}

/// D(n) as strict partitions.
pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
    generate_partitions(n, Constraint::Distinct)
        .into_iter()
        .map(StrictPartition)
        .collect()
}

/// P⁰(n).
pub fn odd_partitions(n: u32) -> Vec<Partition> {
    generate_partitions(n, Constraint::AllOdd)
}

pub fn centralizer_order(pi: &Partition) -> BigUint {
    pi.centralizer_order()
}

pub fn parity(lambda: &Partition) -> Parity {
    lambda.parity()
}

pub fn classical_rank(lambda: &Partition) -> usize {
    lambda.classical_rank()
}
