//! Matrix functions in two forms each: the definitional sum over
//! permutations, and the polarization-derived polynomial identity.
//!
//! | function | definitional | identity |
//! |---|---|---|
//! | permanent | [`per_definitional`] | [`per_identity`], [`per_ryser`] |
//! | determinant | [`det_definitional`] | [`det_identity`] |
//! | symmetrized permanent | [`eper_definitional`] | [`eper_identity`] |
//! | space-matrix determinant | [`detp_definitional`] | [`detp_identity`] |
//!
//! All evaluators stream their terms and are generic over [`Ring`], so the
//! same code runs over rationals, symbolic polynomials, the noncommutative
//! matrix ring, or an instrumented wrapper.

mod determinant;
mod elimination;
mod permanent;
mod space;
mod symmetrized;

use std::fmt;

pub use determinant::{check_corollary1, det_definitional, det_identity, det_zero_criterion, subdiagonal_power_sum};
pub use elimination::det_by_elimination;
pub use permanent::{per_definitional, per_identity, per_ryser};
pub use space::{detp_definitional, detp_identity, section_assembly};
pub use symmetrized::{
    check_corollary2, eper_definitional, eper_identity, eper_identity_as_printed, eper_zero_criterion,
    submatrix_power_sum,
};

use crate::combinatorics::{check_order, permutation_count, Permutations};
use crate::error::{domain, Error, Result};
use crate::exec;
use crate::ring::{ring_product, MultiPoly, Ring};

/// An `n x n` matrix, row-major; `get(i, j)` is `a_ij` with 0-based indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone> SquareMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(domain("matrix must have at least one row"));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(domain(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<E>]) -> Result<Self> {
        let n = columns.len();
        if n == 0 || columns.iter().any(|c| c.len() != n) {
            return Err(domain("columns must form a nonempty square matrix"));
        }
        Ok(Self::from_fn(n, |i, j| columns[j][i].clone()))
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        assert!(n > 0, "matrix order must be positive");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> SquareMatrix<F> {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl SquareMatrix<MultiPoly> {
    /// Distinct indeterminates `a_i_j` (1-based) in every cell.
    pub fn symbolic(n: usize) -> Self {
        Self::from_fn(n, |i, j| MultiPoly::var(&format!("a_{}_{}", i + 1, j + 1)))
    }
}

impl<E: fmt::Display> fmt::Display for SquareMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<E: fmt::Debug> fmt::Debug for SquareMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.n)).finish()
    }
}

/// An `n x n x n` space matrix. `get(i, j, k)` is `a_ij^(k)`, the `(i, j)`
/// entry of section `A_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubeMatrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone> CubeMatrix<E> {
    pub fn from_sections(sections: Vec<SquareMatrix<E>>) -> Result<Self> {
        let n = sections.len();
        if n == 0 {
            return Err(domain("space matrix must have at least one section"));
        }
        if let Some(bad) = sections.iter().position(|s| s.n() != n) {
            return Err(domain(format!(
                "section {} has order {}, expected {n}",
                bad + 1,
                sections[bad].n()
            )));
        }
        Ok(CubeMatrix {
            n,
            entries: sections.into_iter().flat_map(|s| s.entries).collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> E) -> Self {
        assert!(n > 0, "space matrix order must be positive");
        let mut entries = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    entries.push(f(i, j, k));
                }
            }
        }
        CubeMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &E {
        &self.entries[(k * self.n + i) * self.n + j]
    }

    pub fn section(&self, k: usize) -> SquareMatrix<E> {
        let len = self.n * self.n;
        SquareMatrix {
            n: self.n,
            entries: self.entries[k * len..(k + 1) * len].to_vec(),
        }
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> CubeMatrix<F> {
        CubeMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl CubeMatrix<MultiPoly> {
    /// Distinct indeterminates `a_i_j_k` (1-based, `k` = section).
    pub fn symbolic(n: usize) -> Self {
        Self::from_fn(n, |i, j, k| MultiPoly::var(&format!("a_{}_{}_{}", i + 1, j + 1, k + 1)))
    }
}

impl<E: fmt::Debug> fmt::Debug for CubeMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sections = self
            .entries
            .chunks(self.n * self.n)
            .map(|s| s.chunks(self.n).collect::<Vec<_>>());
        f.debug_list().entries(sections).finish()
    }
}

/// Free elements of an identity: `γ_1..γ_n` for the permanent, a single `γ`
/// for the determinant, `δ` for the symmetrized permanent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeParams<E>(pub Vec<E>);

impl<E: Clone> FreeParams<E> {
    pub fn zeros<R: Ring<Element = E>>(ring: &R, count: usize) -> Self {
        FreeParams(vec![ring.zero(); count])
    }

    pub fn expect_len(&self, expected: usize) -> Result<&[E]> {
        if self.0.len() != expected {
            return Err(Error::ArityMismatch {
                expected,
                got: self.0.len(),
            });
        }
        Ok(&self.0)
    }
}

impl FreeParams<MultiPoly> {
    /// Indeterminates `g_1..g_n`.
    pub fn symbolic_gammas(n: usize) -> Self {
        FreeParams((1..=n).map(|i| MultiPoly::var(&format!("g_{i}"))).collect())
    }
}

/// Result of checking an identity that must hold: the residual `lhs - rhs`
/// and whether it vanished.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryCheck<E> {
    pub holds: bool,
    pub residual: E,
}

pub(crate) fn require_commutative<R: Ring>(ring: &R, function: &'static str) -> Result<()> {
    if !ring.is_commutative() {
        return Err(Error::NotCommutative {
            function,
            ring: ring.spec().description,
        });
    }
    Ok(())
}

/// `Σ_σ ± a_{1σ(1)} ... a_{nσ(n)}`, with the sign of `σ` when `signed`.
pub(crate) fn diagonal_product_sum<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Element>,
    signed: bool,
) -> Result<R::Element> {
    let n = a.n();
    check_order(n)?;
    Ok(exec::accumulate(ring, permutation_count(n), |ranks, acc| {
        for p in Permutations::range(n, ranks).expect("valid rank range") {
            let prod = ring_product(ring, (0..n).map(|i| a.get(i, p.image(i))));
            acc.push(signed && p.parity().is_odd(), prod);
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;

    #[test]
    fn construction_errors_name_the_row() {
        let err = SquareMatrix::from_rows(vec![vec![1, 2], vec![3, 4, 5]]).unwrap_err();
        assert_eq!(err.to_string(), "domain error: row 2 has 3 entries, expected 2");
        assert!(SquareMatrix::<i32>::from_rows(vec![]).is_err());
    }

    #[test]
    fn columns_and_sections() {
        let a = SquareMatrix::from_columns(&[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(a, SquareMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap());
        assert_eq!(a.column(1), vec![2, 4]);

        let c = CubeMatrix::from_fn(2, |i, j, k| 100 * i + 10 * j + k);
        assert_eq!(*c.get(1, 0, 1), 101);
        assert_eq!(
            c.section(1),
            SquareMatrix::from_rows(vec![vec![1, 11], vec![101, 111]]).unwrap()
        );
        let rebuilt = CubeMatrix::from_sections(vec![c.section(0), c.section(1)]).unwrap();
        assert_eq!(rebuilt, c);
    }

    #[test]
    fn symbolic_names() {
        let a = SquareMatrix::symbolic(2);
        assert_eq!(a.to_string(), "[[a_1_1, a_1_2], [a_2_1, a_2_2]]");
        assert_eq!(FreeParams::symbolic_gammas(2).0[1].to_string(), "g_2");
        let p: FreeParams<Rational> = FreeParams(vec![Rational::zero()]);
        assert_eq!(
            p.expect_len(2).unwrap_err(),
            Error::ArityMismatch { expected: 2, got: 1 }
        );
    }
}
