use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Ring, RingSpec};
use crate::error::{Error, Result};

/// The integers. Division by `k` only succeeds when `k` divides the element.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Element = BigInt;

    fn spec(&self) -> RingSpec {
        RingSpec {
            commutative: true,
            description: "integers".into(),
        }
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn of_int(&self, k: i64) -> BigInt {
        k.into()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn div_int(&self, a: &BigInt, k: i64) -> Result<BigInt> {
        if k == 0 {
            return Err(Error::InvalidDivisor);
        }
        let (q, r) = a.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::NotDivisible {
                ring: "integers".into(),
                value: a.to_string(),
                divisor: k,
            });
        }
        Ok(q)
    }
}
