use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::PowerSumPolynomial;
use crate::error::{Error, Result};
use crate::partitions::{generate_partitions, Constraint, Partition};

/// Default largest degree for which monomial expansions are computed.
pub const DEFAULT_DEGREE_BOUND: u32 = 14;

/// Coefficient of x₁^{μ₁} x₂^{μ₂} ⋯ in p_π, i.e. the number of ways to send
/// each part of π to a variable so that variable k receives total exponent μ_k.
///
/// This is also the coefficient of m_μ in p_π. It vanishes unless μ is a
/// coarsening of π, which makes the p-to-m matrix triangular in
/// reverse-lexicographic order with diagonal entries Π m_i(π)!.
pub fn power_sum_monomial_coefficient(pi: &Partition, mu: &Partition) -> BigInt {
    if pi.weight() != mu.weight() {
        return BigInt::from(0);
    }
    // rooms are kept sorted so equal capacities are tried once
    fn count(parts: &[u32], room: Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), u64>) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return room.iter().all(|&r| r == 0) as u64;
        };
        let key = (parts.len(), room);
        if let Some(&known) = memo.get(&key) {
            return known;
        }
        let room = &key.1;
        let mut total = 0;
        let mut k = 0;
        while k < room.len() {
            let v = room[k];
            let same = room[k..].iter().take_while(|&&r| r == v).count();
            if v >= first {
                let mut next = room.clone();
                next[k] -= first;
                next.sort_unstable_by(|a, b| b.cmp(a));
                total += same as u64 * count(rest, next, memo);
            }
            k += same;
        }
        memo.insert(key, total);
        total
    }
    BigInt::from(count(pi.parts(), mu.parts().to_vec(), &mut HashMap::new()))
}

/// Memoized expansion of monomial symmetric functions in the power-sum basis.
#[derive(Debug)]
pub struct MonomialTransition {
    bound: u32,
    memo: HashMap<Partition, PowerSumPolynomial>,
}

impl Default for MonomialTransition {
    fn default() -> Self {
        Self::with_degree_bound(DEFAULT_DEGREE_BOUND)
    }
}

impl MonomialTransition {
    pub fn with_degree_bound(bound: u32) -> Self {
        MonomialTransition {
            bound,
            memo: HashMap::new(),
        }
    }

    pub fn degree_bound(&self) -> u32 {
        self.bound
    }

    /// m_λ = (p_λ − Σ_{μ ≠ λ} R(λ, μ) m_μ) / R(λ, λ), where R(λ, μ) is the
    /// coefficient of m_μ in p_λ and only coarsenings μ of λ contribute.
    pub fn monomial(&mut self, lambda: &Partition) -> Result<PowerSumPolynomial> {
        let degree = lambda.weight();
        if degree > self.bound {
            return Err(Error::DegreeBound {
                degree,
                bound: self.bound,
            });
        }
        Ok(self.expand(lambda))
    }

    fn expand(&mut self, lambda: &Partition) -> PowerSumPolynomial {
        if let Some(known) = self.memo.get(lambda) {
            return known.clone();
        }
        let mut acc = PowerSumPolynomial::power_sum(lambda.clone());
        // strictly larger partitions in reverse-lexicographic order
        for mu in generate_partitions(lambda.weight(), Constraint::All)
            .into_iter()
            .take_while(|mu| mu > lambda)
        {
            let r = power_sum_monomial_coefficient(lambda, &mu);
            if r != BigInt::from(0) {
                let m_mu = self.expand(&mu);
                acc = &acc - &m_mu.scale(&BigRational::from_integer(r));
            }
        }
        let diagonal = power_sum_monomial_coefficient(lambda, lambda);
        let out = acc.scale(&BigRational::new(BigInt::from(1), diagonal));
        self.memo.insert(lambda.clone(), out.clone());
        out
    }
}
