//! Seeded random instances. All generators draw from a [`ChaCha8Rng`], so a
//! seed reproduces the same matrices on every platform.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::identities::{CubeMatrix, SquareMatrix};
use crate::ring::{RatMatrix, Rational};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rng for one `(stream, n)` pair derived from a user seed, so that suites
/// and sizes do not share random streams.
pub fn derived_rng(seed: u64, stream: u64, n: usize) -> SampleRng {
    let mixed = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (stream << 32) ^ n as u64;
    ChaCha8Rng::seed_from_u64(mixed)
}

pub fn integer(rng: &mut SampleRng, range: RangeInclusive<i64>) -> Rational {
    Rational::from(rng.gen_range(range))
}

/// Numerator in `-9..=9`, denominator in `1..=6`.
pub fn rational(rng: &mut SampleRng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

pub fn integer_matrix(rng: &mut SampleRng, n: usize, range: RangeInclusive<i64>) -> SquareMatrix<Rational> {
    SquareMatrix::from_fn(n, |_, _| integer(rng, range.clone()))
}

pub fn rational_matrix(rng: &mut SampleRng, n: usize) -> SquareMatrix<Rational> {
    SquareMatrix::from_fn(n, |_, _| rational(rng))
}

pub fn rational_vector(rng: &mut SampleRng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rational(rng)).collect()
}

/// A 2x2 rational matrix with integer entries in `range`.
pub fn matrix2(rng: &mut SampleRng, range: RangeInclusive<i64>) -> RatMatrix {
    let mut e = || rng.gen_range(range.clone());
    RatMatrix::from_ints([[e(), e()], [e(), e()]])
}

pub fn matrix2_square(rng: &mut SampleRng, n: usize, range: RangeInclusive<i64>) -> SquareMatrix<RatMatrix> {
    SquareMatrix::from_fn(n, |_, _| matrix2(rng, range.clone()))
}

pub fn integer_cube(rng: &mut SampleRng, n: usize, range: RangeInclusive<i64>) -> CubeMatrix<Rational> {
    CubeMatrix::from_fn(n, |_, _, _| integer(rng, range.clone()))
}

/// An integer matrix whose last row repeats an earlier one (singular for
/// `n >= 2`).
pub fn singular_matrix(rng: &mut SampleRng, n: usize, range: RangeInclusive<i64>) -> SquareMatrix<Rational> {
    let a = integer_matrix(rng, n, range);
    if n < 2 {
        return SquareMatrix::from_fn(1, |_, _| Rational::zero());
    }
    let src = rng.gen_range(0..n - 1);
    SquareMatrix::from_fn(n, |i, j| a.get(if i == n - 1 { src } else { i }, j).clone())
}
