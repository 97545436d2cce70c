use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Ring, RingSpec};
use crate::error::{domain, Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::InvalidDivisor);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn integer(k: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(k.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// The value as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidDivisor);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(k: i64) -> Self {
        Rational::integer(k)
    }
}

impl From<BigInt> for Rational {
    fn from(k: BigInt) -> Self {
        Rational::integer(k)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl std::ops::$tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(std::ops::$tr::$method(&self.0, &rhs.0))
            }
        }
        impl std::ops::$tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(std::ops::$tr::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Integers print bare, everything else as `p/q`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `"p"` or `"p/q"` with optional sign on `p`; `q` must be nonzero.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(domain(format!("`{s}` is not a rational literal")));
            }
            t.parse::<BigInt>()
                .map_err(|_| domain(format!("`{s}` is not a rational literal")))
        };
        match s.split_once('/') {
            None => Ok(Rational::integer(parse_int(s)?)),
            Some((p, q)) => {
                if q.starts_with(['-', '+']) {
                    return Err(domain(format!("`{s}`: denominator must be unsigned")));
                }
                let q = parse_int(q)?;
                if q.is_zero() {
                    return Err(domain(format!("`{s}`: zero denominator")));
                }
                Rational::from_bigints(parse_int(p)?, q)
            }
        }
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Element = Rational;

    fn spec(&self) -> RingSpec {
        RingSpec {
            commutative: true,
            description: "rationals".into(),
        }
    }

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn of_int(&self, k: i64) -> Rational {
        Rational::from(k)
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn div_int(&self, a: &Rational, k: i64) -> Result<Rational> {
        if k == 0 {
            return Err(Error::InvalidDivisor);
        }
        Ok(a / &Rational::from(k))
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("6/4".parse::<Rational>().unwrap(), Rational::new(3, 2));
        assert_eq!("-6/4".parse::<Rational>().unwrap().to_string(), "-3/2");
        assert_eq!("8/4".parse::<Rational>().unwrap().to_string(), "2");
        assert_eq!("+7".parse::<Rational>().unwrap().to_string(), "7");
        assert_eq!(
            "123456789012345678901234567890"
                .parse::<Rational>()
                .unwrap()
                .to_string(),
            "123456789012345678901234567890"
        );
        for bad in ["", "1/0", "1/-2", "a", "1.5", "1//2", "/3", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn exact_division() {
        let q = Rationals;
        assert_eq!(q.div_int(&Rational::from(6), 3).unwrap(), Rational::from(2));
        let r = Rational::new(-7, 5);
        assert_eq!(q.div_int(&r, 1).unwrap(), r);
        assert_eq!(q.div_int(&r, 0), Err(Error::InvalidDivisor));
    }

    #[test]
    fn power() {
        assert_eq!(Rationals.pow(&Rational::from(2), 10), Rational::from(1024));
        assert_eq!(Rationals.pow(&Rational::new(-1, 2), 3), Rational::new(-1, 8));
        assert_eq!(Rationals.pow(&Rational::zero(), 0), Rational::one());
    }
}
