//! The symmetrized permanent over a possibly noncommutative ring.

use super::{CorollaryCheck, SquareMatrix};
use crate::combinatorics::{check_order, permutation_count, submatrix_count, sym, Permutations, SubmatrixSelector};
use crate::error::{domain, Result};
use crate::exec;
use crate::ring::{factorial, Ring};

/// `eper(A) = Σ_σ Sym(a_{1σ(1)}, ..., a_{nσ(n)})`.
pub fn eper_definitional<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>) -> Result<R::Element> {
    let n = a.n();
    check_order(n)?;
    Ok(exec::accumulate(ring, permutation_count(n), |ranks, acc| {
        for p in Permutations::range(n, ranks).expect("valid rank range") {
            let factors: Vec<R::Element> = (0..n).map(|i| a.get(i, p.image(i)).clone()).collect();
            // n is within 1..=MAX_ORDER, the same range sym accepts
            acc.add(sym(ring, &factors).expect("Sym of a diagonal"));
        }
    }))
}

/// `Σ_{B} (-1)^(r+s) (δ + su(B))^p` over every submatrix `B` with `r >= 1`
/// rows and `s >= 1` columns.
pub fn submatrix_power_sum<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Element>,
    exponent: u32,
    delta: Option<&R::Element>,
) -> Result<R::Element> {
    let n = a.n();
    check_order(n)?;
    Ok(exec::accumulate(ring, submatrix_count(n), |ranks, acc| {
        for rank in ranks {
            let b = SubmatrixSelector::from_rank(n, rank);
            let s = crate::combinatorics::su(ring, b.cells().map(|(i, j)| a.get(i, j)));
            let base = match delta {
                Some(d) => ring.add(d, &s),
                None => s,
            };
            acc.push(b.parity().is_odd(), ring.pow(&base, exponent));
        }
    }))
}

/// The symmetrized permanent from `n`-th powers of submatrix sums:
///
/// ```text
/// eper(A) = (1/n!) { Σ_{r,s=1..n} (-1)^(r+s) Σ_{B∈Φ_{r,s}(A)} (δ + su(B))^n  -  δ^n }
/// ```
///
/// The `-δ^n` term is the contribution of the empty row set in the
/// polarization of `Sym`; with it the value is the same for every `δ`.
/// Only additions, subtractions, `n`-th powers and one division by `n!`
/// are used.
pub fn eper_identity<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>, delta: &R::Element) -> Result<R::Element> {
    let n = a.n();
    let sum = submatrix_power_sum(ring, a, n as u32, Some(delta))?;
    let corrected = ring.sub(&sum, &ring.pow(delta, n as u32));
    ring.div_int(&corrected, factorial(n))
}

/// The double sum restricted to `r, s >= 1` without the `δ^n` term. Equals
/// `eper(A) + δ^n / n!`, so it agrees with [`eper_identity`] only at `δ = 0`.
pub fn eper_identity_as_printed<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Element>,
    delta: &R::Element,
) -> Result<R::Element> {
    let n = a.n();
    let sum = submatrix_power_sum(ring, a, n as u32, Some(delta))?;
    ring.div_int(&sum, factorial(n))
}

/// For `1 <= m <= n-1`, `Σ_{r,s} (-1)^(r+s) Σ_B su(B)^m = 0`.
pub fn check_corollary2<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>, m: u32) -> Result<CorollaryCheck<R::Element>> {
    let n = a.n();
    if m == 0 || m as usize >= n {
        return Err(domain(format!("power m = {m} outside 1..={}", n.saturating_sub(1))));
    }
    let residual = submatrix_power_sum(ring, a, m, None)?;
    Ok(CorollaryCheck {
        holds: ring.is_zero(&residual),
        residual,
    })
}

/// Whether the `m = n` sum vanishes; that sum is `n! eper(A)`.
pub fn eper_zero_criterion<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>) -> Result<bool> {
    let sum = submatrix_power_sum(ring, a, a.n() as u32, None)?;
    Ok(ring.is_zero(&sum))
}
