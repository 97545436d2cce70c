//! Rings with exact division by nonzero integers.
//!
//! A [`Ring`] is a context object: elements are plain immutable values and
//! every operation goes through the ring. This keeps element types free of
//! global state (the matrix ring needs its dimension to build `zero`) and lets
//! a decorator such as [`crate::bench::CountingRing`] observe every operation
//! an evaluator performs.

mod integer;
mod matrix;
mod poly;
mod rational;

use std::fmt;

pub use integer::Integers;
pub use matrix::{MatrixRing, RatMatrix};
pub use poly::{Monomial, MultiPoly, Polynomials};
pub use rational::{Rational, Rationals};

use crate::error::Result;

/// Static description of a ring instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub commutative: bool,
    pub description: String,
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description)
    }
}

/// A ring with unit, in which elements can be divided by nonzero integers.
///
/// Implementations must be pure: the same inputs always give the same output,
/// and the ring may be shared between worker threads.
pub trait Ring: Sync {
    type Element: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn spec(&self) -> RingSpec;

    fn zero(&self) -> Self::Element;

    fn one(&self) -> Self::Element;

    /// The image of an integer under the canonical map `Z -> R`.
    fn of_int(&self, k: i64) -> Self::Element;

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn neg(&self, a: &Self::Element) -> Self::Element;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// Exact division by a nonzero integer: returns `y` with `k * y = a`.
    fn div_int(&self, a: &Self::Element, k: i64) -> Result<Self::Element>;

    /// `a^n` by square-and-multiply; `a^0` is `one`.
    fn pow(&self, a: &Self::Element, n: u32) -> Self::Element {
        power_by_squaring(a, n, self.one(), |x, y| self.mul(x, y))
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        *a == self.zero()
    }

    fn is_commutative(&self) -> bool {
        self.spec().commutative
    }
}

impl<R: Ring + ?Sized> Ring for &R {
    type Element = R::Element;

    fn spec(&self) -> RingSpec {
        (**self).spec()
    }
    fn zero(&self) -> Self::Element {
        (**self).zero()
    }
    fn one(&self) -> Self::Element {
        (**self).one()
    }
    fn of_int(&self, k: i64) -> Self::Element {
        (**self).of_int(k)
    }
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (**self).add(a, b)
    }
    fn neg(&self, a: &Self::Element) -> Self::Element {
        (**self).neg(a)
    }
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (**self).sub(a, b)
    }
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (**self).mul(a, b)
    }
    fn div_int(&self, a: &Self::Element, k: i64) -> Result<Self::Element> {
        (**self).div_int(a, k)
    }
    fn pow(&self, a: &Self::Element, n: u32) -> Self::Element {
        (**self).pow(a, n)
    }
    fn is_zero(&self, a: &Self::Element) -> bool {
        (**self).is_zero(a)
    }
}

/// Left-to-right binary exponentiation with a caller-supplied product.
///
/// Uses `bits(n) - 1` squarings plus `popcount(n) - 1` multiplications, and no
/// multiplication at all for `n <= 1`.
pub fn power_by_squaring<T: Clone>(base: &T, n: u32, one: T, mut mul: impl FnMut(&T, &T) -> T) -> T {
    if n == 0 {
        return one;
    }
    let mut acc = base.clone();
    let top = 31 - n.leading_zeros();
    for bit in (0..top).rev() {
        acc = mul(&acc, &acc);
        if n >> bit & 1 == 1 {
            acc = mul(&acc, base);
        }
    }
    acc
}

/// Sum of a sequence of ring elements; the empty sum is `zero`.
pub fn ring_sum<'a, R, I>(ring: &R, items: I) -> R::Element
where
    R: Ring,
    R::Element: 'a,
    I: IntoIterator<Item = &'a R::Element>,
{
    let mut it = items.into_iter();
    match it.next() {
        None => ring.zero(),
        Some(first) => it.fold(first.clone(), |acc, x| ring.add(&acc, x)),
    }
}

/// Ordered product of a sequence of ring elements; the empty product is `one`.
pub fn ring_product<'a, R, I>(ring: &R, items: I) -> R::Element
where
    R: Ring,
    R::Element: 'a,
    I: IntoIterator<Item = &'a R::Element>,
{
    let mut it = items.into_iter();
    match it.next() {
        None => ring.one(),
        Some(first) => it.fold(first.clone(), |acc, x| ring.mul(&acc, x)),
    }
}

/// `n!` as a machine integer. Callers keep `n <= 20`.
pub fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}
