//! Schur Q-functions in the power-sum basis.
//!
//! Two independent routes are provided:
//!
//! * the inductive definition from `q_k = Σ_{λ ⊢ k} 2^{ℓ(λ)} m_λ`, the pair
//!   functions `Q_(a,b) = q_a q_b + 2 Σ_{n>0} (−1)ⁿ q_{a+n} q_{b−n}`, and the
//!   odd/even length expansions along the first row;
//! * the character expansion
//!   `Q_λ = Σ_{π ∈ P⁰(n)} 2^{(ℓ(λ)+ℓ(π)+ε(λ))/2} ⟨λ⟩(π) p_π / z_π`.
//!
//! Everything is exact rational arithmetic.

mod degree;
mod powersum;
mod transition;

pub use degree::DegreePolynomial;
pub use powersum::{PowerSumPolynomial, POWERSUM_SCHEMA};
pub use transition::{power_sum_monomial_coefficient, MonomialTransition, DEFAULT_DEGREE_BOUND};

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::bars::srank_formula;
use crate::error::{Error, Result};
use crate::partitions::{
    generate_partitions, odd_partitions, strict_partitions, Constraint, Partition, StrictPartition,
};
use crate::spin::SpinCharacters;

/// Cached q_k, Q_(a,b) and Q_λ built through the inductive definition.
#[derive(Debug, Default)]
pub struct QFunctions {
    transition: MonomialTransition,
    q_memo: HashMap<u32, PowerSumPolynomial>,
    big_q_memo: HashMap<Vec<u32>, PowerSumPolynomial>,
}

impl QFunctions {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_degree_bound(bound: u32) -> Self {
        QFunctions {
            transition: MonomialTransition::with_degree_bound(bound),
            ..Self::default()
        }
    }

    pub fn degree_bound(&self) -> u32 {
        self.transition.degree_bound()
    }

    pub fn monomial_to_powersum(&mut self, lambda: &Partition) -> Result<PowerSumPolynomial> {
        self.transition.monomial(lambda)
    }

    /// q_k; zero for negative k and 1 for k = 0.
    pub fn q_function(&mut self, k: i64) -> Result<PowerSumPolynomial> {
        if k < 0 {
            return Ok(PowerSumPolynomial::zero());
        }
        let k = k as u32;
        if let Some(known) = self.q_memo.get(&k) {
            return Ok(known.clone());
        }
        let mut out = PowerSumPolynomial::zero();
        for lambda in generate_partitions(k, Constraint::All) {
            let m = self.transition.monomial(&lambda)?;
            let weight = BigRational::from_integer(BigInt::one() << lambda.len());
            out = &out + &m.scale(&weight);
        }
        self.q_memo.insert(k, out.clone());
        Ok(out)
    }

    /// Q_(a,b) for a > b ≥ 0.
    pub fn q_pair(&mut self, a: i64, b: i64) -> Result<PowerSumPolynomial> {
        if a <= b || b < 0 {
            return Err(Error::PairOutOfDomain { a, b });
        }
        let mut out = &self.q_function(a)? * &self.q_function(b)?;
        for n in 1..=b {
            let sign = if n % 2 == 0 { 2 } else { -2 };
            let term = &self.q_function(a + n)? * &self.q_function(b - n)?;
            out = &out + &term.scale_int(sign);
        }
        Ok(out)
    }

    /// Q_λ by expansion along the first row.
    pub fn q_lambda(&mut self, lambda: &StrictPartition) -> Result<PowerSumPolynomial> {
        self.q_parts(lambda.parts())
    }

    fn q_parts(&mut self, parts: &[u32]) -> Result<PowerSumPolynomial> {
        if let Some(known) = self.big_q_memo.get(parts) {
            return Ok(known.clone());
        }
        let out = match parts.len() {
            0 => PowerSumPolynomial::one(),
            1 => self.q_function(parts[0] as i64)?,
            2 => self.q_pair(parts[0] as i64, parts[1] as i64)?,
            len if len % 2 == 1 => {
                let mut acc = PowerSumPolynomial::zero();
                for i in 0..len {
                    let rest: Vec<u32> = omit(parts, &[i]);
                    let term = &self.q_function(parts[i] as i64)? * &self.q_parts(&rest)?;
                    // (−1)^{i+1} with 1-based i
                    acc = if i % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                acc
            }
            len => {
                let mut acc = PowerSumPolynomial::zero();
                for i in 1..len {
                    let pair = self.q_pair(parts[0] as i64, parts[i] as i64)?;
                    let rest: Vec<u32> = omit(parts, &[0, i]);
                    let term = &pair * &self.q_parts(&rest)?;
                    // (−1)^i with 1-based i
                    acc = if i % 2 == 1 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                acc
            }
        };
        self.big_q_memo.insert(parts.to_vec(), out.clone());
        Ok(out)
    }
}

fn omit(parts: &[u32], skip: &[usize]) -> Vec<u32> {
    parts
        .iter()
        .enumerate()
        .filter(|(k, _)| !skip.contains(k))
        .map(|(_, &p)| p)
        .collect()
}

pub fn monomial_to_powersum(lambda: &Partition) -> Result<PowerSumPolynomial> {
    MonomialTransition::default().monomial(lambda)
}

pub fn q_function(k: i64) -> Result<PowerSumPolynomial> {
    QFunctions::new().q_function(k)
}

pub fn q_pair(a: i64, b: i64) -> Result<PowerSumPolynomial> {
    QFunctions::new().q_pair(a, b)
}

pub fn q_lambda_inductive(lambda: &StrictPartition) -> Result<PowerSumPolynomial> {
    QFunctions::new().q_lambda(lambda)
}

/// Q_λ from the spin characters of λ.
pub fn schur_expansion(lambda: &StrictPartition) -> PowerSumPolynomial {
    schur_expansion_with(&mut SpinCharacters::new(), lambda)
}

pub fn schur_expansion_with(
    chars: &mut SpinCharacters,
    lambda: &StrictPartition,
) -> PowerSumPolynomial {
    let n = lambda.weight();
    let eps = lambda.parity().as_bit() as usize;
    let mut out = PowerSumPolynomial::zero();
    for pi in odd_partitions(n) {
        let exponent = lambda.len() + pi.len() + eps;
        assert!(
            exponent.is_multiple_of(2),
            "ℓ(λ) + ℓ(π) + ε(λ) is odd for λ = {lambda}, π = {pi}"
        );
        let value = chars
            .character(lambda, &pi)
            .expect("odd class of matching weight");
        let numer = (value << (exponent / 2)) as BigInt;
        let denom = BigInt::from(pi.centralizer_order());
        out.add_term(pi, BigRational::new(numer, denom));
    }
    out
}

pub fn principal_specialization(f: &PowerSumPolynomial) -> DegreePolynomial {
    f.principal_specialization()
}

pub fn min_degree(f: &PowerSumPolynomial) -> Result<usize> {
    f.min_degree()
}

/// Degree data for one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeEntry {
    pub shape: StrictPartition,
    pub srank: usize,
    pub min_degree: usize,
    pub specialization: DegreePolynomial,
    /// Largest k with t^k dividing Q_λ(1^t).
    pub t_order: usize,
}

impl DegreeEntry {
    /// min deg Q_λ ≥ srank(λ)
    pub fn degree_bound_holds(&self) -> bool {
        self.min_degree >= self.srank
    }

    /// t^{srank(λ)} divides Q_λ(1^t)
    pub fn divisibility_holds(&self) -> bool {
        self.specialization.is_divisible_by_t_power(self.srank)
    }

    /// min deg Q_λ = srank(λ)
    pub fn equality_holds(&self) -> bool {
        self.min_degree == self.srank
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub n: u32,
    pub entries: Vec<DegreeEntry>,
}

impl DegreeReport {
    /// Both lower bounds hold for every shape.
    pub fn bounds_hold(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.degree_bound_holds() && e.divisibility_holds())
    }

    pub fn equality_holds(&self) -> bool {
        self.entries.iter().all(DegreeEntry::equality_holds)
    }
}

/// Degree analysis of Q_λ for every λ ∈ D(n), using the inductive definition.
pub fn verify_degree_bounds(n: u32) -> Result<DegreeReport> {
    verify_degree_bounds_with(&mut QFunctions::new(), n)
}

pub fn verify_degree_bounds_with(q: &mut QFunctions, n: u32) -> Result<DegreeReport> {
    let mut entries = Vec::new();
    for shape in strict_partitions(n) {
        let f = q.q_lambda(&shape)?;
        let min_degree = f.min_degree()?;
        let specialization = f.principal_specialization();
        let t_order = specialization.t_adic_order().ok_or(Error::ZeroPolynomial)?;
        entries.push(DegreeEntry {
            srank: srank_formula(&shape),
            shape,
            min_degree,
            specialization,
            t_order,
        });
    }
    Ok(DegreeReport { n, entries })
}
