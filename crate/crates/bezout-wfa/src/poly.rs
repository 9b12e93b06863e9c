//! Univariate polynomials over the rationals.
//!
//! `Q[X]` is a principal ideal domain, so it satisfies the Bézout contract
//! with the classical polynomial extended Euclid. The canonical associate
//! of a nonzero polynomial is its monic multiple.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::ring::{BezoutRing, RingError, ScalarParseError};
use crate::textform;

/// A polynomial with rational coefficients, stored sparsely by degree.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<u64, BigRational>,
}

impl Polynomial {
    pub fn constant(c: BigRational) -> Self {
        Self::from_terms([(0, c)])
    }

    pub fn monomial(coeff: BigRational, degree: u64) -> Self {
        Self::from_terms([(degree, coeff)])
    }

    pub fn from_terms<I: IntoIterator<Item = (u64, BigRational)>>(terms: I) -> Self {
        let mut map: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (degree, coeff) in terms {
            let entry = map.entry(degree).or_insert_with(BigRational::zero);
            *entry += coeff;
            if entry.is_zero() {
                map.remove(&degree);
            }
        }
        Polynomial { terms: map }
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, degree: u64) -> BigRational {
        self.terms.get(&degree).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    /// Long division by a nonzero divisor: returns `(quotient, remainder)`.
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self), RingError> {
        let Some(den_degree) = den.degree() else {
            return Err(RingError::DivisionByZero);
        };
        let den_lead = den.leading_coeff().expect("nonzero divisor");
        let mut remainder = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some(rem_degree) = remainder.degree() {
            if rem_degree < den_degree {
                break;
            }
            let factor = remainder.leading_coeff().expect("nonzero remainder") / den_lead;
            let shift = rem_degree - den_degree;
            let step = Polynomial::monomial(factor, shift);
            remainder = remainder - step.clone() * den.clone();
            quotient = quotient + step;
        }
        Ok((quotient, remainder))
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }
}

impl Add for Polynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut terms = self.terms;
        for (degree, coeff) in rhs.terms {
            let entry = terms.entry(degree).or_insert_with(BigRational::zero);
            *entry += coeff;
            if entry.is_zero() {
                terms.remove(&degree);
            }
        }
        Polynomial { terms }
    }
}

impl Neg for Polynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl Sub for Polynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for Polynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut terms: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                let degree = da + db;
                let entry = terms.entry(degree).or_insert_with(BigRational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&degree);
                }
            }
        }
        Polynomial { terms }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let descending: Vec<(BigRational, &BigRational)> = self
            .terms
            .iter()
            .rev()
            .map(|(d, c)| (BigRational::from_integer(BigInt::from(*d)), c))
            .collect();
        f.write_str(&textform::format_terms(
            descending.iter().map(|(e, c)| (e, *c)),
        ))
    }
}

impl BezoutRing for Polynomial {
    fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    fn canonical_unit(&self) -> Self {
        match self.leading_coeff() {
            None => Polynomial::one(),
            Some(lead) => Polynomial::constant(lead.recip()),
        }
    }

    fn exact_div(&self, den: &Self) -> Result<Self, RingError> {
        let (quotient, remainder) = self.div_rem(den)?;
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(RingError::InexactDivision)
        }
    }

    fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        if self.is_zero() && other.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        let (mut old_r, mut r) = (self.clone(), other.clone());
        let (mut old_s, mut s) = (Self::one(), Self::zero());
        let (mut old_t, mut t) = (Self::zero(), Self::one());
        while !r.is_zero() {
            let (q, rem) = old_r.div_rem(&r).expect("nonzero divisor");
            (old_r, r) = (r.clone(), rem);
            (old_s, s) = (s.clone(), old_s - q.clone() * s);
            (old_t, t) = (t.clone(), old_t - q * t);
        }
        let unit = old_r.canonical_unit();
        (
            unit.clone() * old_r,
            unit.clone() * old_s,
            unit * old_t,
        )
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarParseError> {
        let mut terms = Vec::new();
        for (exponent, coeff) in textform::parse_terms(text)? {
            if !exponent.is_integer() {
                return Err(ScalarParseError(format!(
                    "fractional exponent outside the fractional-power ring: {text:?}"
                )));
            }
            let degree = exponent.to_integer().to_u64().ok_or_else(|| {
                ScalarParseError(format!("exponent too large: {text:?}"))
            })?;
            terms.push((degree, coeff));
        }
        Ok(Polynomial::from_terms(terms))
    }
}
