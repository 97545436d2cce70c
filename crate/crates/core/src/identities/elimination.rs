use super::SquareMatrix;
use crate::ring::Rational;

/// Determinant by fraction Gaussian elimination over the rationals.
/// Independent of the permutation-sum evaluators; used as a cross-check.
pub fn det_by_elimination(a: &SquareMatrix<Rational>) -> Rational {
    let n = a.n();
    let mut m: Vec<Vec<Rational>> = a.rows().map(<[Rational]>::to_vec).collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = &det * &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (upper, lower) = m.split_at_mut(r);
            for (x, pivot_x) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x = &*x - &(&factor * pivot_x);
            }
        }
    }
    det
}
