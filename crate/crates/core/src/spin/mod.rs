//! Irreducible negative characters ⟨λ⟩ of the double cover of Sₙ.
//!
//! On odd classes π ∈ P⁰(n) the value comes from the bar-removal recurrence
//!
//! ```text
//! ⟨λ⟩(π) = Σ_{i ∈ I(λ,r)} n_i ⟨λ(i,r)⟩(π − r),     ⟨∅⟩(∅) = 1,
//! ```
//!
//! where r is a part of π. Off P⁰(n) the character vanishes, except on the
//! class π = λ of an odd λ, where only the magnitude
//! `(λ₁⋯λ_ℓ / 2)^{1/2}` and the power `i^{(n−ℓ+1)/2}` are known; the sign
//! is kept symbolic.

pub mod records;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bars::{apply_removal, removals, srank_formula};
use crate::error::{Error, Result};
use crate::partitions::{odd_partitions, strict_partitions, Parity, Partition, StrictPartition};

/// Sign of a surd value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    /// Known only up to ±.
    Indeterminate,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Indeterminate => "±",
        }
    }
}

/// `sign · i^i_power · sqrt(radicand)`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    pub i_power: u8,
    pub radicand: BigRational,
    pub sign: Sign,
}

impl fmt::Display for Surd {
    /// `± i^k sqrt(a/b)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} i^{} sqrt({}/{})",
            self.sign.symbol(),
            self.i_power,
            self.radicand.numer(),
            self.radicand.denom()
        )
    }
}

/// A value of ⟨λ⟩ on some class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpinCharacterValue {
    /// Nonzero integer value on an odd class.
    Integer(BigInt),
    Surd(Surd),
    Zero,
}

impl SpinCharacterValue {
    pub fn from_integer(v: BigInt) -> Self {
        if v.is_zero() {
            SpinCharacterValue::Zero
        } else {
            SpinCharacterValue::Integer(v)
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SpinCharacterValue::Zero)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SpinCharacterValue::Integer(_) => "integer",
            SpinCharacterValue::Surd(_) => "surd",
            SpinCharacterValue::Zero => "zero",
        }
    }

    /// Integer value, with zero as 0; `None` for surds.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            SpinCharacterValue::Integer(v) => Some(v.clone()),
            SpinCharacterValue::Zero => Some(BigInt::zero()),
            SpinCharacterValue::Surd(_) => None,
        }
    }
}

impl fmt::Display for SpinCharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinCharacterValue::Integer(v) => write!(f, "{v}"),
            SpinCharacterValue::Surd(s) => write!(f, "{s}"),
            SpinCharacterValue::Zero => f.write_str("0"),
        }
    }
}

/// Outcome of the vanishing test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vanishing {
    Zero,
    NotDetermined,
}

fn check_weights(lambda: &StrictPartition, pi: &Partition) -> Result<()> {
    if lambda.weight() != pi.weight() {
        return Err(Error::WeightMismatch {
            shape: lambda.to_string(),
            shape_weight: lambda.weight(),
            class: pi.to_string(),
            class_weight: pi.weight(),
        });
    }
    Ok(())
}

/// Memoized evaluator for ⟨λ⟩(π) on odd classes.
///
/// The memo is instance-local. Entries can be seeded from a cache file with
/// [`SpinCharacters::seed`]; they are never trusted over a mismatching
/// recomputation in [`records::verify_records`].
#[derive(Debug, Default)]
pub struct SpinCharacters {
    memo: HashMap<(StrictPartition, Partition), BigInt>,
}

impl SpinCharacters {
    pub fn new() -> Self {
        Self::default()
    }

    /// ⟨λ⟩(π) for π with all parts odd, removing the largest part of π first.
    pub fn character(&mut self, lambda: &StrictPartition, pi: &Partition) -> Result<BigInt> {
        check_weights(lambda, pi)?;
        if !pi.all_parts_odd() {
            return Err(Error::NonOddClass(pi.to_string()));
        }
        Ok(self.eval(lambda, pi))
    }

    /// ⟨λ⟩(π), removing a copy of `first` at the top level and the largest
    /// remaining part afterwards.
    pub fn character_removing(
        &mut self,
        lambda: &StrictPartition,
        pi: &Partition,
        first: u32,
    ) -> Result<BigInt> {
        check_weights(lambda, pi)?;
        if !pi.all_parts_odd() {
            return Err(Error::NonOddClass(pi.to_string()));
        }
        let rest = pi.without_part(first).ok_or_else(|| Error::MissingPart {
            class: pi.to_string(),
            part: first,
        })?;
        Ok(self.expand(lambda, first, &rest))
    }

    fn eval(&mut self, lambda: &StrictPartition, pi: &Partition) -> BigInt {
        let Some(&r) = pi.parts().first() else {
            return BigInt::one();
        };
        let key = (lambda.clone(), pi.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let rest = pi.without_part(r).expect("r is a part of pi");
        let value = self.expand(lambda, r, &rest);
        self.memo.insert(key, value.clone());
        value
    }

    fn expand(&mut self, lambda: &StrictPartition, r: u32, rest: &Partition) -> BigInt {
        let mut total = BigInt::zero();
        for step in removals(lambda, r).expect("odd part") {
            let smaller = apply_removal(lambda, &step);
            total += self.eval(&smaller, rest) * step.coefficient;
        }
        total
    }

    /// Inserts a known value into the memo.
    pub fn seed(&mut self, lambda: StrictPartition, pi: Partition, value: BigInt) {
        self.memo.insert((lambda, pi), value);
    }

    pub fn cached_entries(&self) -> usize {
        self.memo.len()
    }

    /// ⟨λ⟩(π) on an arbitrary class π of the same weight.
    pub fn value(
        &mut self,
        lambda: &StrictPartition,
        pi: &Partition,
    ) -> Result<SpinCharacterValue> {
        check_weights(lambda, pi)?;
        if pi.all_parts_odd() {
            return Ok(SpinCharacterValue::from_integer(self.eval(lambda, pi)));
        }
        if lambda.parity() == Parity::Odd && pi == lambda.as_partition() {
            return Ok(SpinCharacterValue::Surd(schur_special(lambda)?));
        }
        Ok(SpinCharacterValue::Zero)
    }

    /// Full table over D(n) × P⁰(n) with the extra class π = λ for odd λ.
    pub fn table(&mut self, n: u32) -> CharacterTable {
        let columns = odd_partitions(n);
        let rows = strict_partitions(n)
            .into_iter()
            .map(|shape| {
                let values = columns
                    .iter()
                    .map(|pi| SpinCharacterValue::from_integer(self.eval(&shape, pi)))
                    .collect();
                let special = schur_special(&shape).ok();
                TableRow {
                    shape,
                    values,
                    special,
                }
            })
            .collect();
        CharacterTable { n, columns, rows }
    }
}

/// ⟨λ⟩(π) on an odd class with a fresh evaluator.
pub fn character(lambda: &StrictPartition, pi: &Partition) -> Result<BigInt> {
    SpinCharacters::new().character(lambda, pi)
}

/// The recurrence without any memo.
pub fn character_uncached(lambda: &StrictPartition, pi: &Partition) -> Result<BigInt> {
    check_weights(lambda, pi)?;
    if !pi.all_parts_odd() {
        return Err(Error::NonOddClass(pi.to_string()));
    }
    fn go(lambda: &StrictPartition, pi: &[u32]) -> BigInt {
        let Some((&r, rest)) = pi.split_first() else {
            return BigInt::one();
        };
        removals(lambda, r)
            .expect("odd part")
            .iter()
            .map(|step| go(&apply_removal(lambda, step), rest) * step.coefficient)
            .sum()
    }
    Ok(go(lambda, pi.parts()))
}

/// Classes on which ⟨λ⟩ is known to vanish without evaluation.
pub fn schur_vanishing(lambda: &StrictPartition, pi: &Partition) -> Result<Vanishing> {
    check_weights(lambda, pi)?;
    if pi.all_parts_odd() {
        return Ok(Vanishing::NotDetermined);
    }
    match lambda.parity() {
        Parity::Odd if pi == lambda.as_partition() => Ok(Vanishing::NotDetermined),
        _ => Ok(Vanishing::Zero),
    }
}

/// ⟨λ⟩(λ) for odd λ: `± i^{(n−ℓ+1)/2} (λ₁⋯λ_ℓ/2)^{1/2}`.
pub fn schur_special(lambda: &StrictPartition) -> Result<Surd> {
    if lambda.parity() != Parity::Odd {
        return Err(Error::EvenShape(lambda.to_string()));
    }
    let n = lambda.weight() as usize;
    let len = lambda.len();
    // n + ℓ is odd for odd λ, so n − ℓ + 1 is even.
    let i_power = (((n + 1 - len) / 2) % 4) as u8;
    let product: BigInt = lambda.parts().iter().map(|&p| BigInt::from(p)).product();
    Ok(Surd {
        i_power,
        radicand: BigRational::new(product, BigInt::from(2)),
        sign: Sign::Indeterminate,
    })
}

pub fn character_table(n: u32) -> CharacterTable {
    SpinCharacters::new().table(n)
}

/// One row ⟨λ⟩(·) of a [`CharacterTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub shape: StrictPartition,
    /// Values on the odd classes, aligned with [`CharacterTable::columns`].
    pub values: Vec<SpinCharacterValue>,
    /// ⟨λ⟩(λ) when λ is odd.
    pub special: Option<Surd>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: u32,
    pub columns: Vec<Partition>,
    pub rows: Vec<TableRow>,
}

impl CharacterTable {
    pub fn row(&self, shape: &StrictPartition) -> Option<&TableRow> {
        self.rows.iter().find(|r| &r.shape == shape)
    }

    pub fn get(&self, shape: &StrictPartition, pi: &Partition) -> Option<&SpinCharacterValue> {
        let col = self.columns.iter().position(|c| c == pi)?;
        self.row(shape).map(|r| &r.values[col])
    }

    /// Text grid: one line per shape, odd classes as columns, and a final
    /// `λ` column holding the special value of odd shapes.
    pub fn render_text(&self) -> String {
        let mut header = vec!["lambda \\ pi".to_string()];
        header.extend(self.columns.iter().map(|c| c.to_string()));
        header.push("pi = lambda".to_string());
        let mut lines = vec![header];
        for row in &self.rows {
            let mut cells = vec![row.shape.to_string()];
            cells.extend(row.values.iter().map(|v| v.to_string()));
            cells.push(match &row.special {
                Some(s) => s.to_string(),
                None => ".".to_string(),
            });
            lines.push(cells);
        }
        let cols = lines[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| {
                lines
                    .iter()
                    .map(|l| l[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = format!("n = {}\n", self.n);
        for line in &lines {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// A nonzero character value below the shifted rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub shape: StrictPartition,
    pub class: Partition,
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub n: u32,
    /// Pairs (λ, π) with ℓ(π) < srank(λ) that were evaluated.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks ⟨λ⟩(π) = 0 whenever ℓ(π) < srank(λ), over D(n) × P⁰(n).
pub fn vanishing_corollary_check(n: u32) -> VanishingReport {
    vanishing_corollary_check_with(&mut SpinCharacters::new(), n)
}

pub fn vanishing_corollary_check_with(chars: &mut SpinCharacters, n: u32) -> VanishingReport {
    let classes = odd_partitions(n);
    let mut checked = 0;
    let mut violations = Vec::new();
    for shape in strict_partitions(n) {
        let rank = srank_formula(&shape);
        for pi in classes.iter().filter(|pi| pi.len() < rank) {
            checked += 1;
            let value = chars.eval(&shape, pi);
            if !value.is_zero() {
                violations.push(Violation {
                    shape: shape.clone(),
                    class: pi.clone(),
                    value,
                });
            }
        }
    }
    VanishingReport {
        n,
        checked,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bars::enumerate_bar_tableaux;

    fn s(text: &str) -> StrictPartition {
        text.parse().unwrap()
    }

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn values_for_51() {
        let mut chars = SpinCharacters::new();
        let lambda = s("5,1");
        assert_eq!(
            chars.character(&lambda, &p("1,1,1,1,1,1")).unwrap(),
            int(16)
        );
        assert_eq!(chars.character(&lambda, &p("3,1,1,1")).unwrap(), int(2));
        assert_eq!(chars.character(&lambda, &p("5,1")).unwrap(), int(-1));
        assert_eq!(chars.character(&lambda, &p("3,3")).unwrap(), int(-2));
    }

    #[test]
    fn value_for_21_on_three() {
        assert_eq!(character(&s("2,1"), &p("3")).unwrap(), int(-1));
        assert_eq!(character(&s("2,1"), &p("1,1,1")).unwrap(), int(1));
        // oracle: signed tableau sum
        let ts = enumerate_bar_tableaux(&s("2,1"), &p("3")).unwrap();
        let sum: BigInt = ts.iter().map(|t| t.weight().value()).sum();
        assert_eq!(sum, int(-1));
    }

    #[test]
    fn base_case_and_errors() {
        assert_eq!(
            character(&StrictPartition::empty(), &Partition::empty()).unwrap(),
            int(1)
        );
        assert!(matches!(
            character(&s("5,1"), &p("3,1")),
            Err(Error::WeightMismatch { .. })
        ));
        assert!(matches!(
            character(&s("2,1"), &p("2,1")),
            Err(Error::NonOddClass(_))
        ));
        assert!(matches!(
            SpinCharacters::new().character_removing(&s("2,1"), &p("1,1,1"), 3),
            Err(Error::MissingPart { part: 3, .. })
        ));
    }

    #[test]
    fn vanishing_examples() {
        let lambda = s("3,2,1");
        for pi in ["6", "4,2", "4,1,1", "2,2,2", "2,2,1,1", "2,1,1,1,1"] {
            assert_eq!(
                schur_vanishing(&lambda, &p(pi)).unwrap(),
                Vanishing::Zero,
                "{pi}"
            );
        }
        assert_eq!(
            schur_vanishing(&lambda, &p("3,2,1")).unwrap(),
            Vanishing::NotDetermined
        );
        assert_eq!(
            schur_vanishing(&s("5,1"), &p("3,2,1")).unwrap(),
            Vanishing::Zero
        );
        assert_eq!(
            schur_vanishing(&s("5,1"), &p("3,3")).unwrap(),
            Vanishing::NotDetermined
        );
    }

    #[test]
    fn special_values() {
        let v = schur_special(&s("3,2,1")).unwrap();
        assert_eq!(v.radicand, BigRational::from_integer(int(3)));
        assert_eq!(v.sign, Sign::Indeterminate);
        assert_eq!(v.i_power, 2);
        let w = schur_special(&s("2,1")).unwrap();
        assert_eq!(w.radicand, BigRational::from_integer(int(1)));
        assert_eq!(w.i_power, 1);
        assert_eq!(w.to_string(), "± i^1 sqrt(1/1)");
        assert!(matches!(schur_special(&s("5,1")), Err(Error::EvenShape(_))));
        // 2: radicand 1, n - l + 1 = 2
        let two = schur_special(&s("2")).unwrap();
        assert_eq!((two.i_power, two.radicand.clone()), (1, BigRational::one()));
    }

    #[test]
    fn class_function_dispatch() {
        let mut chars = SpinCharacters::new();
        assert!(matches!(
            chars.value(&s("3,2,1"), &p("3,2,1")).unwrap(),
            SpinCharacterValue::Surd(_)
        ));
        assert!(chars.value(&s("3,2,1"), &p("4,2")).unwrap().is_zero());
        assert!(chars.value(&s("5,1"), &p("3,2,1")).unwrap().is_zero());
        assert_eq!(
            chars.value(&s("5,1"), &p("3,3")).unwrap(),
            SpinCharacterValue::Integer(int(-2))
        );
    }

    #[test]
    fn every_special_shape_has_an_even_part() {
        for n in 0..=14 {
            for lambda in strict_partitions(n) {
                if schur_special(&lambda).is_ok() {
                    assert!(!lambda.as_partition().all_parts_odd());
                }
            }
        }
    }

    #[test]
    fn small_tables() {
        let one = character_table(1);
        assert_eq!(one.rows.len(), 1);
        assert_eq!(
            one.rows[0].values,
            vec![SpinCharacterValue::Integer(int(1))]
        );
        let zero = character_table(0);
        assert_eq!(
            zero.rows[0].values,
            vec![SpinCharacterValue::Integer(int(1))]
        );

        let six = character_table(6);
        let row = six.row(&s("5,1")).unwrap();
        let ints: Vec<BigInt> = row.values.iter().map(|v| v.as_integer().unwrap()).collect();
        // columns 5,1 / 3,3 / 3,1,1,1 / 1^6
        assert_eq!(ints, vec![int(-1), int(-2), int(2), int(16)]);
        assert!(row.special.is_none());
        let odd_row = six.row(&s("3,2,1")).unwrap();
        assert!(odd_row.special.is_some());
        assert_eq!(
            six.get(&s("3,2,1"), &p("5,1")),
            Some(&SpinCharacterValue::Integer(int(1)))
        );
    }

    #[test]
    fn degrees_are_positive() {
        let mut chars = SpinCharacters::new();
        for n in 1..=10u32 {
            let ones = Partition::new(vec![1; n as usize]).unwrap();
            for lambda in strict_partitions(n) {
                assert!(chars.character(&lambda, &ones).unwrap() > BigInt::zero());
            }
        }
    }

    #[test]
    fn cache_is_transparent() {
        let mut chars = SpinCharacters::new();
        for n in 0..=8 {
            for lambda in strict_partitions(n) {
                for pi in odd_partitions(n) {
                    assert_eq!(
                        chars.character(&lambda, &pi).unwrap(),
                        character_uncached(&lambda, &pi).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn vanishing_sweep_small() {
        let zero = vanishing_corollary_check(0);
        assert!(zero.passed());
        assert_eq!(zero.checked, 0);
        for n in 1..=8 {
            assert!(vanishing_corollary_check(n).passed());
        }
    }
}
