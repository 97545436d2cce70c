use super::{diagonal_product_sum, require_commutative, FreeParams, SquareMatrix};
use crate::error::{domain, Result};
use crate::exec;
use crate::ring::{ring_product, Ring};

const MAX_SUBSET_ORDER: usize = 20;

fn check_subset_order(n: usize) -> Result<()> {
    if n > MAX_SUBSET_ORDER {
        return Err(domain(format!("order {n} exceeds {MAX_SUBSET_ORDER} for subset sums")));
    }
    Ok(())
}

/// `per(A) = Σ_σ a_{1σ(1)} ... a_{nσ(n)}`.
pub fn per_definitional<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>) -> Result<R::Element> {
    require_commutative(ring, "per_definitional")?;
    diagonal_product_sum(ring, a, false)
}

/// The permanent from free elements `γ_1..γ_n`:
///
/// ```text
/// per(A) = Π_i γ_i + Σ_{∅≠J⊆{1..n}} (-1)^|J| Π_i (γ_i - Σ_{j∈J} a_ij)
/// ```
///
/// Division-free; the value does not depend on the choice of `γ`.
pub fn per_identity<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Element>,
    gammas: &FreeParams<R::Element>,
) -> Result<R::Element> {
    require_commutative(ring, "per_identity")?;
    let n = a.n();
    let gammas = gammas.expect_len(n)?;
    check_subset_order(n)?;
    Ok(exec::accumulate(ring, 1u64 << n, |masks, acc| {
        for mask in masks {
            let factors: Vec<R::Element> = (0..n)
                .map(|i| {
                    (0..n)
                        .filter(|j| mask >> j & 1 == 1)
                        .fold(gammas[i].clone(), |f, j| ring.sub(&f, a.get(i, j)))
                })
                .collect();
            acc.push(mask.count_ones() % 2 == 1, ring_product(ring, &factors));
        }
    }))
}

/// Ryser's inclusion-exclusion formula,
/// `per(A) = (-1)^n Σ_{∅≠S} (-1)^|S| Π_i Σ_{j∈S} a_ij`.
pub fn per_ryser<R: Ring>(ring: &R, a: &SquareMatrix<R::Element>) -> Result<R::Element> {
    require_commutative(ring, "per_ryser")?;
    let n = a.n();
    check_subset_order(n)?;
    Ok(exec::accumulate(ring, (1u64 << n) - 1, |indices, acc| {
        for mask in indices.map(|x| x + 1) {
            let sums: Vec<R::Element> = (0..n)
                .map(|i| {
                    let row = (0..n).filter(|j| mask >> j & 1 == 1).map(|j| a.get(i, j));
                    crate::ring::ring_sum(ring, row)
                })
                .collect();
            let odd = (n - mask.count_ones() as usize) % 2 == 1;
            acc.push(odd, ring_product(ring, &sums));
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::ring::{MatrixRing, Polynomials, Rational, Rationals};

    fn int_matrix(rows: &[&[i64]]) -> SquareMatrix<Rational> {
        SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect()).unwrap()
    }

    #[test]
    fn two_by_two() {
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        let q = Rationals;
        assert_eq!(per_definitional(&q, &a).unwrap(), Rational::from(10));
        assert_eq!(per_ryser(&q, &a).unwrap(), Rational::from(10));
        let g = FreeParams(vec![7.into(), (-5).into()]);
        assert_eq!(per_identity(&q, &a, &g).unwrap(), Rational::from(10));
    }

    #[test]
    fn symbolic_two_by_two() {
        let p = Polynomials;
        let a = SquareMatrix::symbolic(2);
        let expected = "a_1_1*a_2_2 + a_1_2*a_2_1";
        assert_eq!(per_definitional(&p, &a).unwrap().to_string(), expected);
        let zeros = FreeParams::zeros(&p, 2);
        assert_eq!(per_identity(&p, &a, &zeros).unwrap().to_string(), expected);
        assert_eq!(
            per_identity(&p, &a, &FreeParams::symbolic_gammas(2))
                .unwrap()
                .to_string(),
            expected
        );
    }

    #[test]
    fn all_ones() {
        let q = Rationals;
        for n in 1..=6 {
            let a = SquareMatrix::from_fn(n, |_, _| Rational::one());
            let fact = Rational::from(crate::ring::factorial(n));
            assert_eq!(per_definitional(&q, &a).unwrap(), fact);
            assert_eq!(per_ryser(&q, &a).unwrap(), fact);
            assert_eq!(per_identity(&q, &a, &FreeParams::zeros(&q, n)).unwrap(), fact);
        }
    }

    #[test]
    fn errors() {
        let q = Rationals;
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        let short = FreeParams(vec![Rational::zero()]);
        assert_eq!(
            per_identity(&q, &a, &short),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );

        let m = MatrixRing::default();
        let b = SquareMatrix::from_fn(2, |_, _| crate::ring::Ring::one(&m));
        assert!(matches!(per_definitional(&m, &b), Err(Error::NotCommutative { .. })));
    }
}
