use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A polynomial in one variable t with rational coefficients, lowest degree first.
///
/// Trailing zero coefficients are trimmed; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DegreePolynomial {
    coeffs: Vec<BigRational>,
}

impl DegreePolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DegreePolynomial { coeffs }
    }

    /// c · t^k
    pub fn monomial(k: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest k with t^k dividing the polynomial; `None` for zero.
    pub fn t_adic_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_divisible_by_t_power(&self, k: usize) -> bool {
        self.coeffs.iter().take(k).all(Zero::is_zero)
    }
}

impl Add for &DegreePolynomial {
    type Output = DegreePolynomial;

    fn add(self, rhs: &DegreePolynomial) -> DegreePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DegreePolynomial::new(
            (0..len)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }
}

impl Mul for &DegreePolynomial {
    type Output = DegreePolynomial;

    fn mul(self, rhs: &DegreePolynomial) -> DegreePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DegreePolynomial::default();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DegreePolynomial::new(coeffs)
    }
}

impl fmt::Display for DegreePolynomial {
    /// Highest degree first: `16/45 t^6 + 8/9 t^4 - 56/45 t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let m = c.abs();
            let coef = if m.is_integer() {
                m.numer().to_string()
            } else {
                format!("{}/{}", m.numer(), m.denom())
            };
            match k {
                0 => write!(f, "{sep}{coef}")?,
                1 => write!(f, "{sep}{coef} t")?,
                _ => write!(f, "{sep}{coef} t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trimming_and_order() {
        let f = DegreePolynomial::new(vec![q(0, 1), q(0, 1), q(3, 2), q(0, 1)]);
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.t_adic_order(), Some(2));
        assert!(f.is_divisible_by_t_power(2));
        assert!(!f.is_divisible_by_t_power(3));
        assert_eq!(DegreePolynomial::new(vec![q(0, 1)]).t_adic_order(), None);
        assert_eq!(f.to_string(), "3/2 t^2");
    }

    #[test]
    fn arithmetic() {
        let a = DegreePolynomial::new(vec![q(1, 1), q(1, 1)]);
        let b = DegreePolynomial::new(vec![q(-1, 1), q(1, 1)]);
        assert_eq!(
            &a * &b,
            DegreePolynomial::new(vec![q(-1, 1), q(0, 1), q(1, 1)])
        );
        assert_eq!((&a + &b).to_string(), "2 t");
    }
}
