use super::{diagonal_product_sum, require_commutative, CorollaryCheck, SquareMatrix};
use crate::combinatorics::{check_order, permutation_count, su, subdiagonals_of, Permutations};
use crate::error::{domain, Result};
use crate::exec;
use crate::ring::{factorial, Ring};

/// `det(A) = Σ_σ sgn(σ) a_{1σ(1)} ... a_{nσ(n)}`, sign from the inversion
/// count of `σ`.
pub fn det_definitional<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>) -> Result<R::Element> {
    require_commutative(ring, "det_definitional")?;
    diagonal_product_sum(ring, a, true)
}

/// `Σ_{l∈L_k^(e)} (γ + su(l))^p - Σ_{l∈L_k^(o)} (γ + su(l))^p`, where `L_k`
/// ranges over every (parent diagonal, `k` rows) pair. Without `gamma` the
/// bases are the bare sums `su(l)`.
pub fn subdiagonal_power_sum<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Element>,
    k: usize,
    exponent: u32,
    gamma: Option<&R::Element>,
) -> Result<R::Element> {
    let n = a.n();
    check_order(n)?;
    if k > n {
        return Err(domain(format!("subdiagonal length {k} exceeds order {n}")));
    }
    Ok(exec::accumulate(ring, permutation_count(n), |ranks, acc| {
        for parent in Permutations::range(n, ranks).expect("valid rank range") {
            let odd = parent.parity().is_odd();
            for l in subdiagonals_of(parent, k) {
                let s = su(ring, l.positions().map(|(i, j)| a.get(i, j)));
                let base = match gamma {
                    Some(g) => ring.add(g, &s),
                    None => s,
                };
                acc.push(odd, ring.pow(&base, exponent));
            }
        }
    }))
}

/// The determinant through sums of `n`-th powers over diagonals and
/// subdiagonals of length `n - 1`:
///
/// ```text
/// det(A) = (1/n!) { [Σ_{L_n^(e)} - Σ_{L_n^(o)}] (γ + su(l))^n
///                 - [Σ_{L_{n-1}^(e)} - Σ_{L_{n-1}^(o)}] (γ + su(l))^n }
/// ```
///
/// Uses only additions, subtractions, `n`-th powers and one division by
/// `n!`. Holds for every `γ`.
pub fn det_identity<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>, gamma: &R::Element) -> Result<R::Element> {
    require_commutative(ring, "det_identity")?;
    let n = a.n();
    let full = subdiagonal_power_sum(ring, a, n, n as u32, Some(gamma))?;
    let short = subdiagonal_power_sum(ring, a, n - 1, n as u32, Some(gamma))?;
    ring.div_int(&ring.sub(&full, &short), factorial(n))
}

fn power_residual<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>, exponent: u32) -> Result<R::Element> {
    let n = a.n();
    let full = subdiagonal_power_sum(ring, a, n, exponent, None)?;
    let short = subdiagonal_power_sum(ring, a, n - 1, exponent, None)?;
    Ok(ring.sub(&full, &short))
}

/// For `1 <= t <= n-1` the alternating sums of `su^t` over full diagonals and
/// over `(n-1)`-subdiagonals coincide. Returns the difference.
pub fn check_corollary1<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>, t: u32) -> Result<CorollaryCheck<R::Element>> {
    require_commutative(ring, "check_corollary1")?;
    let n = a.n();
    if t == 0 || t as usize >= n {
        return Err(domain(format!("power t = {t} outside 1..={}", n.saturating_sub(1))));
    }
    let residual = power_residual(ring, a, t)?;
    Ok(CorollaryCheck {
        holds: ring.is_zero(&residual),
        residual,
    })
}

/// `det(A) = 0` iff the `t = n` sums agree.
pub fn det_zero_criterion<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>) -> Result<bool> {
    require_commutative(ring, "det_zero_criterion")?;
    let residual = power_residual(ring, a, a.n() as u32)?;
    Ok(ring.is_zero(&residual))
}
