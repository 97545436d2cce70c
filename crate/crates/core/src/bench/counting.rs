use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::error::Result;
use crate::ring::{power_by_squaring, Ring, RingSpec};

/// Snapshot of the operations performed through a [`CountingRing`].
///
/// `adds` covers additions, subtractions and negations. `muls` counts only
/// products requested directly; the squarings and multiplications done
/// inside `pow` are reported as `power_muls`, and each `pow` call adds one
/// to `powers`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCounts {
    pub adds: u64,
    pub muls: u64,
    pub powers: u64,
    pub power_muls: u64,
    pub int_divs: u64,
}

#[derive(Debug, Default)]
struct Counters {
    adds: AtomicU64,
    muls: AtomicU64,
    powers: AtomicU64,
    power_muls: AtomicU64,
    int_divs: AtomicU64,
}

fn bump(c: &AtomicU64) {
    c.fetch_add(1, Ordering::Relaxed);
}

/// Decorator that forwards every operation to `inner` and counts it.
///
/// Counters are atomic, so the wrapper can be shared by parallel evaluators;
/// totals do not depend on scheduling.
#[derive(Debug)]
pub struct CountingRing<R> {
    inner: R,
    counters: Counters,
}

impl<R: Ring> CountingRing<R> {
    pub fn new(inner: R) -> Self {
        CountingRing {
            inner,
            counters: Counters::default(),
        }
    }

    pub fn counts(&self) -> OpCounts {
        let c = &self.counters;
        OpCounts {
            adds: c.adds.load(Ordering::Relaxed),
            muls: c.muls.load(Ordering::Relaxed),
            powers: c.powers.load(Ordering::Relaxed),
            power_muls: c.power_muls.load(Ordering::Relaxed),
            int_divs: c.int_divs.load(Ordering::Relaxed),
        }
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }
}

impl<R: Ring> Ring for CountingRing<R> {
    type Element = R::Element;

    fn spec(&self) -> RingSpec {
        self.inner.spec()
    }

    fn zero(&self) -> R::Element {
        self.inner.zero()
    }

    fn one(&self) -> R::Element {
        self.inner.one()
    }

    fn of_int(&self, k: i64) -> R::Element {
        self.inner.of_int(k)
    }

    fn add(&self, a: &R::Element, b: &R::Element) -> R::Element {
        bump(&self.counters.adds);
        self.inner.add(a, b)
    }

    fn neg(&self, a: &R::Element) -> R::Element {
        bump(&self.counters.adds);
        self.inner.neg(a)
    }

    fn sub(&self, a: &R::Element, b: &R::Element) -> R::Element {
        bump(&self.counters.adds);
        self.inner.sub(a, b)
    }

    fn mul(&self, a: &R::Element, b: &R::Element) -> R::Element {
        bump(&self.counters.muls);
        self.inner.mul(a, b)
    }

    fn div_int(&self, a: &R::Element, k: i64) -> Result<R::Element> {
        bump(&self.counters.int_divs);
        self.inner.div_int(a, k)
    }

    fn pow(&self, a: &R::Element, n: u32) -> R::Element {
        bump(&self.counters.powers);
        power_by_squaring(a, n, self.inner.one(), |x, y| {
            bump(&self.counters.power_muls);
            self.inner.mul(x, y)
        })
    }

    fn is_zero(&self, a: &R::Element) -> bool {
        self.inner.is_zero(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Rational, Rationals};

    #[test]
    fn counts_each_kind() {
        let r = CountingRing::new(Rationals);
        let x = Rational::from(3);
        let y = r.add(&x, &x);
        let y = r.sub(&y, &x);
        let y = r.mul(&y, &x);
        let z = r.pow(&y, 5);
        let z = r.div_int(&z, 3).unwrap();
        assert_eq!(z, Rational::from(19683));
        assert_eq!(
            r.counts(),
            OpCounts {
                adds: 2,
                muls: 1,
                powers: 1,
                power_muls: 3,
                int_divs: 1
            }
        );
    }
}
