//! The fraction field of a Bézout ring.
//!
//! Values are kept normalized: the gcd of numerator and denominator is a
//! unit and the denominator is a canonical associate, so structural
//! equality coincides with equality in the field. A fraction field is
//! itself a (trivial) Bézout ring, which lets every matrix routine in this
//! crate run unchanged over fractions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{BezoutRing, RingError, ScalarParseError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fraction<R: BezoutRing> {
    num: R,
    den: R,
}

impl<R: BezoutRing> Fraction<R> {
    /// Builds `num/den`, normalizing. Fails on a zero denominator.
    pub fn new(num: R, den: R) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_ring(value: R) -> Self {
        Fraction {
            num: value,
            den: R::one(),
        }
    }

    fn reduced(num: R, den: R) -> Self {
        debug_assert!(!den.is_zero());
        let g = num.gcd(&den);
        let (num, den) = if g.is_zero() {
            // num = den = 0 cannot happen; g = 0 only if both are zero.
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides the numerator"),
                den.exact_div(&g).expect("gcd divides the denominator"),
            )
        };
        let unit = den.canonical_unit();
        Fraction {
            num: num * unit.clone(),
            den: den * unit,
        }
    }

    pub fn numerator(&self) -> &R {
        &self.num
    }

    pub fn denominator(&self) -> &R {
        &self.den
    }

    /// The ring value when the denominator is 1.
    pub fn as_ring(&self) -> Option<&R> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::reduced(self.den.clone(), self.num.clone())
    }
}

impl<R: BezoutRing> Zero for Fraction<R> {
    fn zero() -> Self {
        Self::from_ring(R::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<R: BezoutRing> One for Fraction<R> {
    fn one() -> Self {
        Self::from_ring(R::one())
    }
}

impl<R: BezoutRing> Add for Fraction<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::reduced(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<R: BezoutRing> Neg for Fraction<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Fraction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<R: BezoutRing> Sub for Fraction<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: BezoutRing> Mul for Fraction<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<R: BezoutRing> Div for Fraction<R> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        Self::reduced(self.num * rhs.den, self.den * rhs.num)
    }
}

impl<R: BezoutRing> fmt::Display for Fraction<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(
            f,
            "{}/{}",
            wrapped(&self.num.to_string()),
            wrapped(&self.den.to_string())
        )
    }
}

/// Parenthesizes a rendered scalar when it contains operators that would
/// bind differently inside a fraction.
fn wrapped(text: &str) -> String {
    let compound = text
        .char_indices()
        .any(|(i, c)| matches!(c, '+' | '*' | '^' | '/') || (c == '-' && i > 0));
    if compound {
        format!("({text})")
    } else {
        text.to_string()
    }
}

impl<R: BezoutRing> BezoutRing for Fraction<R> {
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
        Ok(self.clone() / den.clone())
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
        // Whole-ring value first, then a single top-level "num/den" split.
        if let Ok(value) = R::parse_scalar(text) {
            return Ok(Self::from_ring(value));
        }
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in text.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                '/' if depth == 0 => {
                    if split.is_some() {
                        return Err(ScalarParseError(format!("ambiguous fraction: {text:?}")));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(|| ScalarParseError(format!("invalid fraction: {text:?}")))?;
        let num = R::parse_scalar(strip_parens(&text[..i]))?;
        let den = R::parse_scalar(strip_parens(&text[i + 1..]))?;
        Self::new(num, den)
            .map_err(|_| ScalarParseError(format!("zero denominator: {text:?}")))
    }
}

fn strip_parens(text: &str) -> &str {
    text.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn frac(n: i64, d: i64) -> Fraction<BigInt> {
        Fraction::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(frac(6, -4), frac(-3, 2));
        assert_eq!(frac(0, 7), Fraction::zero());
        assert_eq!(frac(4, 2).as_ring(), Some(&BigInt::from(2)));
        assert_eq!(frac(1, 2).as_ring(), None);
        assert!(Fraction::new(BigInt::from(1), BigInt::from(0)).is_err());
    }

    #[test]
    fn field_arithmetic() {
        assert_eq!(frac(1, 2) + frac(1, 3), frac(5, 6));
        assert_eq!(frac(1, 2) * frac(2, 3), frac(1, 3));
        assert_eq!(frac(1, 2) - frac(1, 2), Fraction::zero());
        assert_eq!(frac(3, 4).recip(), frac(4, 3));
        assert_eq!(frac(1, 2) / frac(3, 1), frac(1, 6));
    }

    #[test]
    fn agrees_with_bigrational() {
        let a = frac(7, -3);
        let b = frac(5, 6);
        let ra = BigRational::new(BigInt::from(7), BigInt::from(-3));
        let rb = BigRational::new(BigInt::from(5), BigInt::from(6));
        let sum = a + b;
        let rsum = ra + rb;
        assert_eq!(sum.numerator(), rsum.numer());
        assert_eq!(sum.denominator(), rsum.denom());
    }

    #[test]
    fn polynomial_fractions_display_with_parens() {
        let num = Polynomial::parse_scalar("X+1").unwrap();
        let den = Polynomial::parse_scalar("X^2").unwrap();
        let f = Fraction::new(num, den).unwrap();
        assert_eq!(f.to_string(), "(X+1)/(X^2)");
        let whole = Fraction::from_ring(Polynomial::parse_scalar("X+1").unwrap());
        assert_eq!(whole.to_string(), "X+1");
    }

    #[test]
    fn parse_integer_fractions() {
        assert_eq!(Fraction::<BigInt>::parse_scalar("3/4"), Ok(frac(3, 4)));
        assert_eq!(Fraction::<BigInt>::parse_scalar("-12"), Ok(frac(-12, 1)));
        assert!(Fraction::<BigInt>::parse_scalar("1/0").is_err());
    }
}
