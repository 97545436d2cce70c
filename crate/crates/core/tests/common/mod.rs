#![allow(dead_code)]

use proptest::prelude::*;

use polyident::identities::SquareMatrix;
use polyident::ring::{MultiPoly, Polynomials, RatMatrix, Rational, Ring};

pub fn rational() -> impl Strategy<Value = Rational> + Clone {
    (-20i64..=20, 1i64..=7).prop_map(|(p, q)| Rational::new(p, q))
}

pub fn small_int() -> impl Strategy<Value = Rational> + Clone {
    (-6i64..=6).prop_map(Rational::from)
}

pub fn matrix2() -> impl Strategy<Value = RatMatrix> + Clone {
    prop::collection::vec(rational(), 4)
        .prop_map(|v| RatMatrix::from_rows(vec![v[..2].to_vec(), v[2..].to_vec()]).unwrap())
}

pub fn poly() -> impl Strategy<Value = MultiPoly> + Clone {
    let term = (rational(), 0u32..3, 0u32..3).prop_map(|(c, i, j)| {
        let r = Polynomials;
        let x = r.pow(&MultiPoly::var("x"), i);
        let y = r.pow(&MultiPoly::var("y"), j);
        r.mul(&MultiPoly::constant(c), &r.mul(&x, &y))
    });
    prop::collection::vec(term, 0..4).prop_map(|ts| ts.iter().fold(MultiPoly::zero(), |a, b| Polynomials.add(&a, b)))
}

pub fn square<S: Strategy + Clone>(n: usize, cell: S) -> impl Strategy<Value = SquareMatrix<S::Value>>
where
    S::Value: Clone,
{
    prop::collection::vec(cell, n * n).prop_map(move |v| SquareMatrix::from_fn(n, |i, j| v[i * n + j].clone()))
}

/// All permutations of `0..n` by recursive insertion.
pub fn naive_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in naive_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Sign from the cycle decomposition: (-1)^(n - #cycles).
pub fn cycle_sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
        }
    }
    if (p.len() - cycles).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        let minor: Vec<Vec<Rational>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][j] * &laplace_det(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Permanent by expansion along the first row.
pub fn laplace_per(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        let minor: Vec<Vec<Rational>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        total = &total + &(&a[0][j] * &laplace_per(&minor));
    }
    total
}

pub fn rows_of(a: &SquareMatrix<Rational>) -> Vec<Vec<Rational>> {
    a.rows().map(<[Rational]>::to_vec).collect()
}

pub fn ints(rows: &[&[i64]]) -> SquareMatrix<Rational> {
    SquareMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect(),
    )
    .unwrap()
}
