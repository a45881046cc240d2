//! Exact rational scalars.
//!
//! Every position, unit, distance and δ in the simulator is a [`Scalar`]: an
//! arbitrary-precision rational kept in canonical reduced form. The protocols
//! branch on exact predicates (`dist = 0`, `dist = 2`, `dist < 1/2`, ...), so
//! floating point is never used anywhere in the engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::ParseError;

/// An exact rational number in canonical reduced form.
///
/// Construction normalizes: the denominator is always positive and coprime
/// with the numerator, so `PartialEq`/`Hash` agree with mathematical equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a scalar. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Scalar {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero; callers guard on `is_zero`.
    pub fn recip(&self) -> Scalar {
        assert!(!self.is_zero(), "reciprocal of zero");
        Scalar(self.0.recip())
    }

    /// -1, 0 or +1 as a plain integer sign.
    pub fn signum(&self) -> i32 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn min(self, other: Scalar) -> Scalar {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// True iff numerator and denominator are coprime and the denominator is
    /// positive. `BigRational` maintains this on every operation; the check
    /// exists so the test suite can assert exactness on sampled values.
    pub fn is_canonical(&self) -> bool {
        use num_integer::Integer;
        let n = self.0.numer();
        let d = self.0.denom();
        d.is_positive() && n.gcd(d).is_one()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Scalar {
    type Err = ParseError;

    /// Accepts `n` or `n/d` with an optional sign. Decimal notation is
    /// rejected on purpose: `0.1` has no exact binary or decimal-free
    /// representation contract here, and silent precision loss is worse
    /// than an error.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::Scalar(s.to_string());
        if s.is_empty() || s.contains('.') {
            return Err(bad());
        }
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Scalar(BigRational::from_integer(n)))
            }
            Some((num, den)) => {
                let n = BigInt::from_str(num).map_err(|_| bad())?;
                let d = BigInt::from_str(den).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar(BigRational::new(n, d)))
            }
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

/// Shorthand used heavily in tests and protocol tables.
pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::ratio(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_normalizes() {
        assert_eq!(Scalar::ratio(2, 4), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(-3, -6), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(3, -6), Scalar::ratio(-1, 2));
        assert!(Scalar::ratio(3, -6).is_canonical());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Scalar::ratio(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::from_int(-5).to_string(), "-5");
        assert_eq!("7/3".parse::<Scalar>().unwrap(), Scalar::ratio(7, 3));
        assert_eq!("-4".parse::<Scalar>().unwrap(), Scalar::from_int(-4));
        assert_eq!("4/-6".parse::<Scalar>().unwrap(), Scalar::ratio(-2, 3));
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn exact_ordering() {
        assert!(Scalar::ratio(1, 3) < Scalar::ratio(1, 2));
        assert!(Scalar::ratio(-1, 2) < Scalar::zero());
        assert_eq!(Scalar::ratio(2, 2), Scalar::one());
    }

    proptest! {
        #[test]
        fn parse_roundtrip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let s = Scalar::ratio(n, d);
            let back: Scalar = s.to_string().parse().unwrap();
            prop_assert_eq!(back, s);
        }

        #[test]
        fn arithmetic_stays_canonical(a in -500i64..500, b in 1i64..500,
                                      c in -500i64..500, d in 1i64..500) {
            let x = Scalar::ratio(a, b);
            let y = Scalar::ratio(c, d);
            prop_assert!((&x + &y).is_canonical());
            prop_assert!((&x - &y).is_canonical());
            prop_assert!((&x * &y).is_canonical());
            if !y.is_zero() {
                prop_assert!((&x / &y).is_canonical());
            }
        }
    }
}
