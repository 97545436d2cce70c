//! Recovery of a symmetric polyadditive function from its diagonal.
//!
//! If `f: H^n -> Φ` is symmetric and additive in each argument and
//! `F(x) = f(x, ..., x)`, then for every base point `γ`
//!
//! ```text
//! f(x_1..x_n) = { Σ_{J ⊆ {1..n}} (-1)^(n-|J|) F(γ + Σ_{j∈J} x_j) } / n!
//! ```
//!
//! where the `J = ∅` term is `(-1)^n F(γ)`. The operator below evaluates the
//! right-hand side with exactly `2^n` calls to `F`, visiting subsets in
//! binary-counter order.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::exec;
use crate::ring::{factorial, Ring};

/// Commutative semigroup whose elements feed a [`DiagonalFunction`].
pub trait AdditiveSemigroup: Sync {
    type Element: Clone + Send + Sync;

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
}

/// Any ring, viewed through its additive group.
#[derive(Debug, Clone, Copy)]
pub struct Additive<R>(pub R);

impl<R: Ring> AdditiveSemigroup for Additive<R> {
    type Element = R::Element;

    fn add(&self, a: &R::Element, b: &R::Element) -> R::Element {
        self.0.add(a, b)
    }
}

/// Column vectors of length `len` over a ring, added entrywise.
#[derive(Debug, Clone, Copy)]
pub struct ColumnSpace<R> {
    pub ring: R,
    pub len: usize,
}

impl<R: Ring> AdditiveSemigroup for ColumnSpace<R> {
    type Element = Vec<R::Element>;

    fn add(&self, a: &Vec<R::Element>, b: &Vec<R::Element>) -> Vec<R::Element> {
        debug_assert_eq!(a.len(), self.len);
        a.iter().zip(b).map(|(x, y)| self.ring.add(x, y)).collect()
    }
}

/// The restriction `F(x) = f(x, ..., x)` of an `arity`-ary function, with a
/// counter of how often it has been evaluated.
pub struct DiagonalFunction<'f, H, G> {
    arity: usize,
    evaluator: Box<dyn Fn(&H) -> G + Sync + 'f>,
    calls: AtomicU64,
}

impl<'f, H, G> DiagonalFunction<'f, H, G> {
    pub fn new(arity: usize, evaluator: impl Fn(&H) -> G + Sync + 'f) -> Self {
        DiagonalFunction {
            arity,
            evaluator: Box::new(evaluator),
            calls: AtomicU64::new(0),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, x: &H) -> G {
        self.calls.fetch_add(1, Ordering::Relaxed);
        (self.evaluator)(x)
    }

    /// Number of evaluations since construction.
    pub fn evaluations(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }
}

/// Evaluates the polarization formula for `F` at `xs` with base point
/// `gamma`. The result is divided by `n!` with a single exact division.
pub fn polarize<S, R>(
    domain: &S,
    target: &R,
    f: &DiagonalFunction<'_, S::Element, R::Element>,
    xs: &[S::Element],
    gamma: &S::Element,
) -> Result<R::Element>
where
    S: AdditiveSemigroup,
    R: Ring,
{
    let n = f.arity();
    if xs.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: xs.len(),
        });
    }
    if n == 0 || n > 20 {
        return Err(crate::error::domain(format!("polarization arity {n} outside 1..=20")));
    }
    let total = exec::accumulate(target, 1u64 << n, |masks, acc| {
        for mask in masks {
            let mut point = gamma.clone();
            for (j, x) in xs.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    point = domain.add(&point, x);
                }
            }
            let odd = (n - mask.count_ones() as usize) % 2 == 1;
            acc.push(odd, f.eval(&point));
        }
    });
    target.div_int(&total, factorial(n))
}
