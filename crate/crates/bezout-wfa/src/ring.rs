//! The coefficient-ring contract and its integer and rational instances.
//!
//! Every scalar ring used by this crate is an integral Bézout domain: a
//! commutative ring without zero divisors in which any two elements admit
//! Bézout coefficients for their gcd. That is exactly the structure needed
//! to triangularize matrices with unimodular row operations, so the whole
//! linear-algebra layer is generic over [`BezoutRing`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    InexactDivision,
}

/// Error raised when a scalar string does not parse in the expected ring.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar: {0}")]
pub struct ScalarParseError(pub String);

/// An integral Bézout domain with an effective extended gcd.
///
/// Implementations must have no zero divisors, and `extended_gcd` must
/// return a divisor of both arguments together with a valid Bézout pair.
/// All values are immutable; every operation is a pure function, so scalars
/// can be shared freely across threads.
pub trait BezoutRing:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True iff the element has a multiplicative inverse in the ring.
    fn is_unit(&self) -> bool;

    /// The unit `u` such that `u * self` is the canonical associate of
    /// `self`: non-negative for integers, monic for polynomials, `1` for
    /// nonzero field elements. Returns `1` for zero.
    fn canonical_unit(&self) -> Self;

    /// Exact division: returns `q` with `q * den == self`.
    ///
    /// Fails with [`RingError::InexactDivision`] when `den` does not divide
    /// `self`, and with [`RingError::DivisionByZero`] when `den` is zero.
    fn exact_div(&self, den: &Self) -> Result<Self, RingError>;

    /// Returns `(d, alpha, beta)` with `alpha * self + beta * other == d`,
    /// `d` dividing both arguments, and `d` a canonical associate.
    /// `extended_gcd(0, 0)` is `(0, 0, 0)`.
    fn extended_gcd(&self, other: &Self) -> (Self, Self, Self);

    /// Parses the textual scalar syntax of this ring.
    fn parse_scalar(text: &str) -> Result<Self, ScalarParseError>;

    /// The canonical associate `canonical_unit(self) * self`.
    fn canonical(&self) -> Self {
        self.canonical_unit() * self.clone()
    }

    fn gcd(&self, other: &Self) -> Self {
        self.extended_gcd(other).0
    }

    /// Least common multiple, as a canonical associate. `lcm(0, x) = 0`.
    fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let d = self.gcd(other);
        let q = self
            .exact_div(&d)
            .expect("gcd divides its arguments");
        (q * other.clone()).canonical()
    }
}

impl BezoutRing for BigInt {
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn canonical_unit(&self) -> Self {
        if self.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn exact_div(&self, den: &Self) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = num_integer::Integer::div_rem(self, den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::InexactDivision)
        }
    }

    fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        if self.is_zero() && other.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        if self.is_zero() {
            return (other.abs(), Self::zero(), other.canonical_unit());
        }
        if other.is_zero() {
            return (self.abs(), self.canonical_unit(), Self::zero());
        }
        // Iterative extended Euclid; invariants r = s*a + t*b throughout.
        let (mut old_r, mut r) = (self.clone(), other.clone());
        let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
        let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
        while !r.is_zero() {
            let q = num_integer::Integer::div_floor(&old_r, &r);
            (old_r, r) = (r.clone(), old_r - &q * &r);
            (old_s, s) = (s.clone(), old_s - &q * &s);
            (old_t, t) = (t.clone(), old_t - &q * &t);
        }
        if old_r.is_negative() {
            (-old_r, -old_s, -old_t)
        } else {
            (old_r, old_s, old_t)
        }
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarParseError> {
        text.parse::<BigInt>()
            .map_err(|_| ScalarParseError(format!("not an integer: {text:?}")))
    }
}

/// The rationals, viewed as a (trivially) Bézout domain: every nonzero
/// element is a unit, the gcd of any pair not both zero is 1, and the
/// canonical associate of a nonzero element is 1. Running the minimization
/// pipeline over this ring reproduces classical field minimization.
impl BezoutRing for BigRational {
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn canonical_unit(&self) -> Self {
        if self.is_zero() {
            Self::one()
        } else {
            self.recip()
        }
    }

    fn exact_div(&self, den: &Self) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(self / den)
    }

    fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        if self.is_zero() && other.is_zero() {
            (Self::zero(), Self::zero(), Self::zero())
        } else if self.is_zero() {
            (Self::one(), Self::zero(), other.recip())
        } else {
            (Self::one(), self.recip(), Self::zero())
        }
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarParseError> {
        parse_rational(text)
    }
}

/// Parses "p" or "p/q" with arbitrary-precision integers.
pub(crate) fn parse_rational(text: &str) -> Result<BigRational, ScalarParseError> {
    let bad = || ScalarParseError(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        None => {
            let n = text.parse::<BigInt>().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n = num.parse::<BigInt>().map_err(|_| bad())?;
            let d = den.parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ScalarParseError(format!("zero denominator: {text:?}")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}
