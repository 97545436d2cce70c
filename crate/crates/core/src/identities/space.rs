//! Determinant of an `n x n x n` space matrix.

use super::{per_definitional, require_commutative, CubeMatrix, SquareMatrix};
use crate::combinatorics::{check_order, permutation_count, Permutation, Permutations};
use crate::error::Result;
use crate::exec;
use crate::ring::{ring_product, ring_sum, Ring};

/// The matrix whose column `i` is column `σ(i)` of section `A_i`, i.e.
/// entry `(t, i)` is `a_{t σ(i)}^(i)`.
pub fn section_assembly<E: Clone>(c: &CubeMatrix<E>, sigma: &Permutation) -> SquareMatrix<E> {
    SquareMatrix::from_fn(c.n(), |t, i| c.get(t, sigma.image(i), i).clone())
}

/// `Det_p(Ã) = Σ_σ sgn(σ) per(α_σ(1)^(1), ..., α_σ(n)^(n))`.
pub fn detp_definitional<R: Ring>(ring: &R, c: &CubeMatrix<R::Element>) -> Result<R::Element> {
    require_commutative(ring, "detp_definitional")?;
    let n = c.n();
    check_order(n)?;
    Ok(exec::accumulate(ring, permutation_count(n), |ranks, acc| {
        for sigma in Permutations::range(n, ranks).expect("valid rank range") {
            let per = per_definitional(ring, &section_assembly(c, &sigma)).expect("commutative ring, valid order");
            acc.push(sigma.parity().is_odd(), per);
        }
    }))
}

/// The closed form built from row sums `R_t = Σ_i a_{tσ(i)}^(i)` of the
/// assembled matrices:
///
/// ```text
/// Det_p(Ã) = Σ_σ sgn(σ) [ Π_t R_t  -  Σ_s Π_t (R_t - a_{tσ(s)}^(s)) ]
/// ```
///
/// Division-free; the even and odd permutations are accumulated with
/// opposite signs.
pub fn detp_identity<R: Ring>(ring: &R, c: &CubeMatrix<R::Element>) -> Result<R::Element> {
    require_commutative(ring, "detp_identity")?;
    let n = c.n();
    check_order(n)?;
    Ok(exec::accumulate(ring, permutation_count(n), |ranks, acc| {
        for sigma in Permutations::range(n, ranks).expect("valid rank range") {
            let m = section_assembly(c, &sigma);
            let row_sums: Vec<R::Element> = m.rows().map(|row| ring_sum(ring, row)).collect();
            let odd = sigma.parity().is_odd();
            acc.push(odd, ring_product(ring, &row_sums));
            for s in 0..n {
                let reduced: Vec<R::Element> = (0..n).map(|t| ring.sub(&row_sums[t], m.get(t, s))).collect();
                acc.push(!odd, ring_product(ring, &reduced));
            }
        }
    }))
}
