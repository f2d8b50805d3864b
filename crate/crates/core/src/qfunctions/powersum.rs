use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::DegreePolynomial;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A finite sum Σ c_π p_π with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// symmetric functions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PowerSumPolynomial {
    terms: BTreeMap<Partition, BigRational>,
}

pub const POWERSUM_SCHEMA: &str = "#schema=bartab.powersum/1";

impl PowerSumPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::power_sum(Partition::empty())
    }

    /// p_π
    pub fn power_sum(pi: Partition) -> Self {
        Self::term(pi, BigRational::one())
    }

    pub fn term(pi: Partition, coefficient: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(pi, coefficient);
        out
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut out = Self::zero();
        for (pi, c) in terms {
            out.add_term(pi, c);
        }
        out
    }

    pub fn add_term(&mut self, pi: Partition, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(pi);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of p_π (zero when absent).
    pub fn coefficient(&self, pi: &Partition) -> BigRational {
        self.terms
            .get(pi)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Terms in reverse-lexicographic order of π.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common weight of all terms, if there is one. The zero polynomial
    /// is homogeneous of every weight and reports `None`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, weight: u32) -> bool {
        self.terms.keys().all(|pi| pi.weight() == weight)
    }

    /// All terms lie on classes with odd parts only.
    pub fn supported_on_odd_classes(&self) -> bool {
        self.terms.keys().all(Partition::all_parts_odd)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PowerSumPolynomial {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// min ℓ(π) over the nonzero terms, with deg p_i = 1.
    pub fn min_degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(Partition::len)
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Substitutes p_π ↦ t^{ℓ(π)}.
    pub fn principal_specialization(&self) -> DegreePolynomial {
        let top = self.terms.keys().map(Partition::len).max().unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); top + 1];
        for (pi, c) in &self.terms {
            coeffs[pi.len()] += c;
        }
        DegreePolynomial::new(coeffs)
    }

    /// `partition<TAB>numerator<TAB>denominator` lines under a schema header.
    pub fn to_records(&self) -> String {
        let mut out = format!("{POWERSUM_SCHEMA}\n#partition\tnumerator\tdenominator\n");
        for (pi, c) in self.terms() {
            out.push_str(&format!("{pi}\t{}\t{}\n", c.numer(), c.denom()));
        }
        out
    }

    pub fn from_records(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        if lines.next().map(|(_, l)| l.trim_end()) != Some(POWERSUM_SCHEMA) {
            return Err(Error::Record {
                line: 1,
                reason: format!("expected schema header {POWERSUM_SCHEMA:?}"),
            });
        }
        let mut out = Self::zero();
        for (idx, line) in lines {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::Record {
                line: idx + 1,
                reason,
            };
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(bad(format!("expected 3 fields, found {}", fields.len())));
            }
            let pi: Partition = fields[0].parse().map_err(|e: Error| bad(e.to_string()))?;
            let numer: BigInt = fields[1]
                .parse()
                .map_err(|_| bad(format!("bad numerator {:?}", fields[1])))?;
            let denom: BigInt = fields[2]
                .parse()
                .map_err(|_| bad(format!("bad denominator {:?}", fields[2])))?;
            if denom.is_zero() {
                return Err(bad("zero denominator".into()));
            }
            out.add_term(pi, BigRational::new(numer, denom));
        }
        Ok(out)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for PowerSumPolynomial {
    /// `16/45 · p_{1,1,1,1,1,1} + 8/9 · p_{3,1,1,1} - …`, terms in reverse-lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (pi, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_rational(f, &magnitude)?;
            write!(f, " · p_{{{pi}}}")?;
        }
        Ok(())
    }
}

impl Add for &PowerSumPolynomial {
    type Output = PowerSumPolynomial;

    fn add(self, rhs: &PowerSumPolynomial) -> PowerSumPolynomial {
        let mut out = self.clone();
        for (pi, c) in &rhs.terms {
            out.add_term(pi.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PowerSumPolynomial {
    type Output = PowerSumPolynomial;

    fn sub(self, rhs: &PowerSumPolynomial) -> PowerSumPolynomial {
        let mut out = self.clone();
        for (pi, c) in &rhs.terms {
            out.add_term(pi.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &PowerSumPolynomial {
    type Output = PowerSumPolynomial;

    /// p_π · p_σ = p_{π ∪ σ}
    fn mul(self, rhs: &PowerSumPolynomial) -> PowerSumPolynomial {
        let mut out = PowerSumPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &PowerSumPolynomial {
    type Output = PowerSumPolynomial;

    fn neg(self) -> PowerSumPolynomial {
        self.scale_int(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PowerSumPolynomial {
            type Output = PowerSumPolynomial;

            fn $method(self, rhs: PowerSumPolynomial) -> PowerSumPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
