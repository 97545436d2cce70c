//! Permutations with parity, diagonals and subdiagonals of a square matrix,
//! row/column-subset submatrices, and the symmetrization operator.
//!
//! Indices are 0-based in the API; `Display` impls print them 1-based.
//! Every stream is lazy, deterministic, and can be restarted from any rank,
//! which is how evaluators split their sums into independent chunks.

use std::fmt;
use std::ops::Range;

use itertools::Itertools;

use crate::error::{domain, Result};
use crate::exec;
use crate::ring::{factorial, ring_product, Ring};

/// Largest order accepted by the enumerators.
pub const MAX_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_count(count: usize) -> Parity {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(domain(format!("order {n} outside 1..={MAX_ORDER}")));
    }
    Ok(())
}

/// A bijection of `{0..n-1}` together with its parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<usize>,
    parity: Parity,
}

impl Permutation {
    /// Validates that `mapping` is a bijection.
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &x in &mapping {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(domain(format!("{mapping:?} is not a permutation")));
            }
        }
        Ok(Self::from_mapping(mapping))
    }

    fn from_mapping(mapping: Vec<usize>) -> Self {
        let parity = Parity::of_count(inversions(&mapping));
        Permutation { mapping, parity }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            mapping: (0..n).collect(),
            parity: Parity::Even,
        }
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.mapping[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.mapping)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.mapping.iter().map(|x| x + 1).join(" "))
    }
}

fn inversions(mapping: &[usize]) -> usize {
    mapping
        .iter()
        .enumerate()
        .map(|(i, &x)| mapping[i + 1..].iter().filter(|&&y| y < x).count())
        .sum()
}

/// The permutation of rank `index` in lexicographic order.
fn unrank(n: usize, mut index: u64) -> Vec<usize> {
    let mut available: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let block = factorial(n - 1 - i) as u64;
        out.push(available.remove((index / block) as usize));
        index %= block;
    }
    out
}

fn advance(v: &mut [usize]) -> bool {
    let n = v.len();
    let Some(i) = (1..n).rev().find(|&i| v[i - 1] < v[i]).map(|i| i - 1) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Lexicographic stream over a rank range of `S_n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Vec<usize>,
    remaining: u64,
}

impl Permutations {
    pub fn range(n: usize, ranks: Range<u64>) -> Result<Self> {
        check_order(n)?;
        let total = permutation_count(n);
        if ranks.end > total || ranks.start > ranks.end {
            return Err(domain(format!("rank range {ranks:?} outside 0..{total}")));
        }
        Ok(Permutations {
            current: unrank(n, ranks.start.min(total - 1)),
            remaining: ranks.end - ranks.start,
        })
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = Permutation::from_mapping(self.current.clone());
        if self.remaining > 0 {
            advance(&mut self.current);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for Permutations {}

pub fn permutation_count(n: usize) -> u64 {
    factorial(n) as u64
}

/// All of `S_n` in lexicographic order, `1 <= n <= MAX_ORDER`.
pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    Permutations::range(n, 0..permutation_count(n))
}

/// A run of entries `a[i][σ(i)]` for `i` in a subset of rows, remembering
/// the parent permutation `σ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedDiagonal {
    parent: Permutation,
    rows: Vec<usize>,
}

impl SignedDiagonal {
    pub fn full(parent: Permutation) -> Self {
        let rows = (0..parent.len()).collect();
        SignedDiagonal { parent, rows }
    }

    pub fn new(parent: Permutation, rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] >= w[1]) || rows.last().is_some_and(|&r| r >= parent.len()) {
            return Err(domain(format!(
                "rows {rows:?} must be strictly increasing below {}",
                parent.len()
            )));
        }
        Ok(SignedDiagonal { parent, rows })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn parent(&self) -> &Permutation {
        &self.parent
    }

    pub fn parity(&self) -> Parity {
        self.parent.parity()
    }

    /// `(row, column)` pairs in increasing row order.
    pub fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().map(|&i| (i, self.parent.image(i)))
    }
}

impl fmt::Display for SignedDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{{{}}}",
            self.parity(),
            self.positions()
                .map(|(i, j)| format!("({},{})", i + 1, j + 1))
                .join(",")
        )
    }
}

/// Full-length diagonals `l(σ)` for every `σ` of the given parity.
pub fn enumerate_diagonals(n: usize, parity: Parity) -> Result<impl Iterator<Item = SignedDiagonal>> {
    Ok(enumerate_permutations(n)?
        .filter(move |p| p.parity() == parity)
        .map(SignedDiagonal::full))
}

/// Every `(parent, k-subset of rows)` pair whose parent has the given
/// parity; parents in lexicographic order, subsets in lexicographic order
/// within each parent. `k = 0` yields one empty subdiagonal per parent.
pub fn enumerate_subdiagonals(n: usize, k: usize, parity: Parity) -> Result<impl Iterator<Item = SignedDiagonal>> {
    if k > n {
        return Err(domain(format!("subdiagonal length {k} exceeds order {n}")));
    }
    Ok(enumerate_permutations(n)?
        .filter(move |p| p.parity() == parity)
        .flat_map(move |p| subdiagonals_of(p, k)))
}

/// The length-`k` subdiagonals of one parent diagonal, row subsets in
/// lexicographic order.
pub fn subdiagonals_of(parent: Permutation, k: usize) -> impl Iterator<Item = SignedDiagonal> {
    (0..parent.len()).combinations(k).map(move |rows| SignedDiagonal {
        parent: parent.clone(),
        rows,
    })
}

/// A choice of nonempty row and column index sets, stored as bitmasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubmatrixSelector {
    rows: u32,
    cols: u32,
}

impl SubmatrixSelector {
    pub fn new(rows: &[usize], cols: &[usize]) -> Result<Self> {
        let mask = |idx: &[usize]| -> Result<u32> {
            let mut m = 0u32;
            for &i in idx {
                if i >= 32 || m >> i & 1 == 1 {
                    return Err(domain(format!("bad index set {idx:?}")));
                }
                m |= 1 << i;
            }
            if m == 0 {
                return Err(domain("selector index sets must be nonempty"));
            }
            Ok(m)
        };
        Ok(SubmatrixSelector {
            rows: mask(rows)?,
            cols: mask(cols)?,
        })
    }

    /// The selector of rank `index` in [`enumerate_submatrices`] order.
    pub fn from_rank(n: usize, index: u64) -> Self {
        let side = (1u64 << n) - 1;
        SubmatrixSelector {
            rows: (index / side + 1) as u32,
            cols: (index % side + 1) as u32,
        }
    }

    pub fn row_count(&self) -> usize {
        self.rows.count_ones() as usize
    }

    pub fn col_count(&self) -> usize {
        self.cols.count_ones() as usize
    }

    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        bits(self.rows)
    }

    pub fn cols(&self) -> impl Iterator<Item = usize> + '_ {
        bits(self.cols)
    }

    /// `(-1)^(r+s)` as a parity.
    pub fn parity(&self) -> Parity {
        Parity::of_count(self.row_count() + self.col_count())
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows().flat_map(move |i| self.cols().map(move |j| (i, j)))
    }
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

pub fn submatrix_count(n: usize) -> u64 {
    let side = (1u64 << n) - 1;
    side * side
}

/// All `(2^n - 1)^2` selectors: row masks in binary-counter order, column
/// masks inner.
pub fn enumerate_submatrices(n: usize) -> Result<impl Iterator<Item = SubmatrixSelector>> {
    check_order(n)?;
    Ok((0..submatrix_count(n)).map(move |i| SubmatrixSelector::from_rank(n, i)))
}

/// Sum of the given elements; zero for an empty list.
pub fn su<'a, R: Ring>(ring: &R, elements: impl IntoIterator<Item = &'a R::Element>) -> R::Element
where
    R::Element: 'a,
{
    crate::ring::ring_sum(ring, elements)
}

/// `Sym(x1 ... xm) = (1/m!) Σ_σ x_σ(1) ... x_σ(m)`.
pub fn sym<R: Ring>(ring: &R, factors: &[R::Element]) -> Result<R::Element> {
    let m = factors.len();
    if m == 0 {
        return Err(domain("Sym of an empty product"));
    }
    check_order(m)?;
    let total = exec::accumulate(ring, permutation_count(m), |ranks, acc| {
        for p in Permutations::range(m, ranks).expect("rank range within S_m") {
            acc.add(ring_product(ring, p.mapping().iter().map(|&i| &factors[i])));
        }
    });
    ring.div_int(&total, factorial(m))
}
