//! Puiseux polynomials: finite sums of rational-coefficient monomials
//! `c*X^e` with non-negative rational exponents.
//!
//! This ring is the union of the polynomial rings `Q[X^(1/L)]` over all
//! positive integers `L`. It is an integral Bézout domain but not a PID:
//! the ideal generated by all `X^(1/L)` is not finitely generated. Gcds
//! and exact divisions are computed by embedding both operands into
//! `Q[Y]` with `Y = X^(1/L)`, `L` a common multiple of the exponent
//! denominators, and mapping back. Divisibility cannot be gained by
//! refining `L` further: a Bézout relation at one level certifies the gcd
//! at every finer level.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Polynomial;
use crate::ring::{BezoutRing, RingError, ScalarParseError};
use crate::textform;

/// A fractional-power polynomial. Exponents are normalized non-negative
/// rationals; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PuiseuxPoly {
    terms: BTreeMap<BigRational, BigRational>,
}

impl PuiseuxPoly {
    pub fn constant(c: BigRational) -> Self {
        Self::from_terms([(BigRational::zero(), c)])
    }

    /// Builds `coeff * X^exponent`; the exponent must be non-negative.
    pub fn monomial(coeff: BigRational, exponent: BigRational) -> Self {
        Self::from_terms([(exponent, coeff)])
    }

    pub fn from_terms<I: IntoIterator<Item = (BigRational, BigRational)>>(terms: I) -> Self {
        let mut map: BTreeMap<BigRational, BigRational> = BTreeMap::new();
        for (exponent, coeff) in terms {
            assert!(
                !exponent.is_negative(),
                "Puiseux polynomial exponents must be non-negative"
            );
            *map.entry(exponent).or_insert_with(BigRational::zero) += coeff;
        }
        let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        PuiseuxPoly { terms }
    }

    pub fn degree(&self) -> Option<&BigRational> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &BigRational)> {
        self.terms.iter()
    }

    /// Least common multiple of the exponent denominators (1 for zero).
    pub fn level(&self) -> BigInt {
        self.terms.keys().fold(BigInt::one(), |acc, e| {
            num_integer::Integer::lcm(&acc, e.denom())
        })
    }

    /// Writes `self` as a polynomial in `Y = X^(1/level)`. The level must
    /// be a multiple of every exponent denominator.
    ///
    /// Panics when a rescaled exponent exceeds the machine degree range,
    /// which happens only for operand sets whose exponent denominators
    /// have an astronomically large least common multiple.
    fn embed(&self, level: &BigInt) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(e, c)| {
            let scaled = e * BigRational::from_integer(level.clone());
            assert!(scaled.is_integer(), "level clears all denominators");
            let degree = scaled.to_integer().to_u64().expect(
                "exponent denominators too varied: the common embedding level overflows",
            );
            (degree, c.clone())
        }))
    }

    fn unembed(poly: &Polynomial, level: &BigInt) -> Self {
        PuiseuxPoly::from_terms(poly.terms().map(|(d, c)| {
            let exponent =
                BigRational::new(BigInt::from(d), level.clone());
            (exponent, c.clone())
        }))
    }

    fn common_level(&self, other: &Self) -> BigInt {
        num_integer::Integer::lcm(&self.level(), &other.level())
    }

    /// Extended gcd computed after embedding at `multiplier` times the
    /// least common level. Any positive multiplier yields the same gcd;
    /// exposed so that independence from the level choice can be checked.
    pub fn extended_gcd_at_level(
        &self,
        other: &Self,
        multiplier: &BigInt,
    ) -> (Self, Self, Self) {
        assert!(multiplier > &BigInt::zero());
        let level = self.common_level(other) * multiplier;
        let (d, alpha, beta) = self.embed(&level).extended_gcd(&other.embed(&level));
        (
            Self::unembed(&d, &level),
            Self::unembed(&alpha, &level),
            Self::unembed(&beta, &level),
        )
    }
}

impl Zero for PuiseuxPoly {
    fn zero() -> Self {
        PuiseuxPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PuiseuxPoly {
    fn one() -> Self {
        PuiseuxPoly::constant(BigRational::one())
    }
}

impl Add for PuiseuxPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut terms = self.terms;
        for (exponent, coeff) in rhs.terms {
            let entry = terms.entry(exponent.clone()).or_insert_with(BigRational::zero);
            *entry += coeff;
            if entry.is_zero() {
                terms.remove(&exponent);
            }
        }
        PuiseuxPoly { terms }
    }
}

impl Neg for PuiseuxPoly {
    type Output = Self;
    fn neg(self) -> Self {
        PuiseuxPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for PuiseuxPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for PuiseuxPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut terms: BTreeMap<BigRational, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exponent = ea + eb;
                let entry = terms.entry(exponent.clone()).or_insert_with(BigRational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&exponent);
                }
            }
        }
        PuiseuxPoly { terms }
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&textform::format_terms(self.terms.iter().rev()))
    }
}

impl BezoutRing for PuiseuxPoly {
    fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.degree().map(|e| e.is_zero()) == Some(true)
    }

    fn canonical_unit(&self) -> Self {
        match self.leading_coeff() {
            None => PuiseuxPoly::one(),
            Some(lead) => PuiseuxPoly::constant(lead.recip()),
        }
    }

    fn exact_div(&self, den: &Self) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let level = self.common_level(den);
        let quotient = self.embed(&level).exact_div(&den.embed(&level))?;
        Ok(Self::unembed(&quotient, &level))
    }

    fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        if self.is_zero() && other.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        self.extended_gcd_at_level(other, &BigInt::one())
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarParseError> {
        let terms = textform::parse_terms(text)?;
        // single-exponent magnitudes must stay well inside the machine
        // degree range used by the embedding
        let bound = BigInt::from(u32::MAX);
        for (exponent, _) in &terms {
            if exponent.numer() > &bound || exponent.denom() > &bound {
                return Err(ScalarParseError(format!(
                    "exponent out of supported range: {text:?}"
                )));
            }
        }
        Ok(PuiseuxPoly::from_terms(terms))
    }
}
