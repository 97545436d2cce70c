use std::fmt;

use super::{Rational, Ring, RingSpec};
use crate::error::{domain, Error, Result};

/// A `d x d` rational matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(domain("matrix ring elements need dimension >= 1"));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return Err(domain(format!(
                "row {} has {} entries, expected {dim}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(RatMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints<const D: usize>(rows: [[i64; D]; D]) -> Self {
        RatMatrix {
            dim: D,
            entries: rows.iter().flatten().map(|&x| Rational::from(x)).collect(),
        }
    }

    pub fn scalar(dim: usize, c: Rational) -> Self {
        let mut m = RatMatrix {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        };
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.dim)
    }

    fn zip_with(&self, other: &RatMatrix, f: impl Fn(&Rational, &Rational) -> Rational) -> RatMatrix {
        assert_eq!(self.dim, other.dim, "matrix ring dimension mismatch");
        RatMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
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

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The ring of `dim x dim` rational matrices; noncommutative for `dim >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixRing {
    dim: usize,
}

impl MatrixRing {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(domain("matrix ring dimension must be positive"));
        }
        Ok(MatrixRing { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl Default for MatrixRing {
    fn default() -> Self {
        MatrixRing { dim: 2 }
    }
}

impl Ring for MatrixRing {
    type Element = RatMatrix;

    fn spec(&self) -> RingSpec {
        RingSpec {
            commutative: self.dim == 1,
            description: format!("{0}x{0} rational matrices", self.dim),
        }
    }

    fn zero(&self) -> RatMatrix {
        RatMatrix::scalar(self.dim, Rational::zero())
    }

    fn one(&self) -> RatMatrix {
        RatMatrix::scalar(self.dim, Rational::one())
    }

    fn of_int(&self, k: i64) -> RatMatrix {
        RatMatrix::scalar(self.dim, k.into())
    }

    fn add(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        a.zip_with(b, |x, y| x + y)
    }

    fn neg(&self, a: &RatMatrix) -> RatMatrix {
        RatMatrix {
            dim: a.dim,
            entries: a.entries.iter().map(|x| -x).collect(),
        }
    }

    fn sub(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        a.zip_with(b, |x, y| x - y)
    }

    fn mul(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        assert_eq!(a.dim, b.dim, "matrix ring dimension mismatch");
        let d = a.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut s = Rational::zero();
                for k in 0..d {
                    s = &s + &(a.get(i, k) * b.get(k, j));
                }
                entries.push(s);
            }
        }
        RatMatrix { dim: d, entries }
    }

    fn div_int(&self, a: &RatMatrix, k: i64) -> Result<RatMatrix> {
        if k == 0 {
            return Err(Error::InvalidDivisor);
        }
        let k = Rational::from(k);
        Ok(RatMatrix {
            dim: a.dim,
            entries: a.entries.iter().map(|x| x / &k).collect(),
        })
    }

    fn is_zero(&self, a: &RatMatrix) -> bool {
        a.entries.iter().all(Rational::is_zero)
    }
}
