//! Operation counting and method comparison.
//!
//! Every evaluator runs unchanged inside a [`CountingRing`], so the counts
//! of all methods are taken the same way.

mod counting;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

pub use counting::{CountingRing, OpCounts};

use crate::error::{domain, Error, Result};
use crate::identities::{self, CubeMatrix, FreeParams, SquareMatrix};
use crate::polarization::{polarize, ColumnSpace, DiagonalFunction};
use crate::ring::{MatrixRing, Rational, Rationals, Ring};
use crate::sample;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    PerDefinitional,
    PerIdentity,
    PerRyser,
    PerPolarization,
    DetDefinitional,
    DetIdentity,
    EperDefinitional,
    EperIdentity,
    DetpDefinitional,
    DetpIdentity,
}

impl Method {
    pub const ALL: [Method; 10] = [
        Method::PerDefinitional,
        Method::PerIdentity,
        Method::PerRyser,
        Method::PerPolarization,
        Method::DetDefinitional,
        Method::DetIdentity,
        Method::EperDefinitional,
        Method::EperIdentity,
        Method::DetpDefinitional,
        Method::DetpIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::PerDefinitional => "per_definitional",
            Method::PerIdentity => "per_identity",
            Method::PerRyser => "per_ryser",
            Method::PerPolarization => "per_polarization",
            Method::DetDefinitional => "det_definitional",
            Method::DetIdentity => "det_identity",
            Method::EperDefinitional => "eper_definitional",
            Method::EperIdentity => "eper_identity",
            Method::DetpDefinitional => "detp_definitional",
            Method::DetpIdentity => "detp_identity",
        }
    }

    /// Whether the method consumes a space matrix rather than a square one.
    pub fn takes_cube(self) -> bool {
        matches!(self, Method::DetpDefinitional | Method::DetpIdentity)
    }

    /// Number of free parameters for an order-`n` input.
    pub fn free_param_count(self, n: usize) -> usize {
        match self {
            Method::PerIdentity | Method::PerPolarization => n,
            Method::DetIdentity | Method::EperIdentity => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MethodInput<E> {
    Matrix(SquareMatrix<E>),
    Cube(CubeMatrix<E>),
}

impl<E: Clone> MethodInput<E> {
    pub fn n(&self) -> usize {
        match self {
            MethodInput::Matrix(a) => a.n(),
            MethodInput::Cube(c) => c.n(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OpCountReport {
    pub method: String,
    pub n: usize,
    pub adds: u64,
    pub muls: u64,
    pub powers: u64,
    pub power_muls: u64,
    pub int_divs: u64,
    pub f_evals: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl OpCountReport {
    fn new(method: Method, n: usize, counts: OpCounts, f_evals: u64, wall_time_s: Option<f64>) -> Self {
        OpCountReport {
            method: method.name().to_string(),
            n,
            adds: counts.adds,
            muls: counts.muls,
            powers: counts.powers,
            power_muls: counts.power_muls,
            int_divs: counts.int_divs,
            f_evals,
            wall_time_s,
        }
    }
}

/// An evaluated method: the value and how it was obtained.
#[derive(Debug, Clone)]
pub struct Counted<E> {
    pub value: E,
    pub report: OpCountReport,
}

/// Runs `method` once. `free` holds the free parameters (`γ` or `δ`); an
/// empty slice means zeros. Returns the value and the number of diagonal
/// function evaluations (nonzero only for the polarization method).
pub fn evaluate<R: Ring>(
    ring: &R,
    method: Method,
    input: &MethodInput<R::Element>,
    free: &[R::Element],
) -> Result<(R::Element, u64)> {
    let n = input.n();
    let wanted = method.free_param_count(n);
    let free: Vec<R::Element> = match (free.len(), wanted) {
        (0, k) => vec![ring.zero(); k],
        (got, k) if got == k => free.to_vec(),
        (got, k) => {
            return Err(if k == 0 {
                domain(format!("{method} takes no free parameters"))
            } else {
                Error::ArityMismatch { expected: k, got }
            })
        }
    };
    let (matrix, cube) = match input {
        MethodInput::Matrix(a) if !method.takes_cube() => (Some(a), None),
        MethodInput::Cube(c) if method.takes_cube() => (None, Some(c)),
        MethodInput::Matrix(_) => return Err(domain(format!("{method} needs a space matrix"))),
        MethodInput::Cube(_) => return Err(domain(format!("{method} needs a square matrix"))),
    };
    let value = match method {
        Method::PerDefinitional => identities::per_definitional(ring, matrix.unwrap())?,
        Method::PerIdentity => identities::per_identity(ring, matrix.unwrap(), &FreeParams(free))?,
        Method::PerRyser => identities::per_ryser(ring, matrix.unwrap())?,
        Method::PerPolarization => return per_by_polarization(ring, matrix.unwrap(), &free),
        Method::DetDefinitional => identities::det_definitional(ring, matrix.unwrap())?,
        Method::DetIdentity => identities::det_identity(ring, matrix.unwrap(), &free[0])?,
        Method::EperDefinitional => identities::eper_definitional(ring, matrix.unwrap())?,
        Method::EperIdentity => identities::eper_identity(ring, matrix.unwrap(), &free[0])?,
        Method::DetpDefinitional => identities::detp_definitional(ring, cube.unwrap())?,
        Method::DetpIdentity => identities::detp_identity(ring, cube.unwrap())?,
    };
    Ok((value, 0))
}

/// `per(a_1..a_n)` recovered from `F(x) = per(x, ..., x)` by polarization
/// over the columns, with base point `gamma`.
fn per_by_polarization<R: Ring>(
    ring: &R,
    a: &SquareMatrix<R::Element>,
    gamma: &[R::Element],
) -> Result<(R::Element, u64)> {
    let n = a.n();
    let columns: Vec<Vec<R::Element>> = (0..n).map(|j| a.column(j)).collect();
    let f = DiagonalFunction::new(n, |x: &Vec<R::Element>| {
        let repeated = SquareMatrix::from_fn(n, |i, _| x[i].clone());
        identities::per_definitional(ring, &repeated).expect("ring checked commutative before polarizing")
    });
    identities::require_commutative(ring, "per_polarization")?;
    let value = polarize(&ColumnSpace { ring, len: n }, ring, &f, &columns, &gamma.to_vec())?;
    Ok((value, f.evaluations()))
}

/// Evaluates `method` uninstrumented and inside a [`CountingRing`], checks
/// that both give the same value, and reports the counts.
pub fn count_ops<R: Ring>(
    ring: &R,
    method: Method,
    input: &MethodInput<R::Element>,
    free: &[R::Element],
    timing: bool,
) -> Result<Counted<R::Element>> {
    let (plain, _) = evaluate(ring, method, input, free)?;
    let counting = CountingRing::new(ring);
    let start = Instant::now();
    let (value, f_evals) = evaluate(&counting, method, input, free)?;
    let elapsed = start.elapsed().as_secs_f64();
    if value != plain {
        return Err(Error::Disagreement(format!(
            "{method}: instrumented value {value:?} differs from plain value {plain:?}"
        )));
    }
    let report = OpCountReport::new(method, input.n(), counting.counts(), f_evals, timing.then_some(elapsed));
    Ok(Counted { value, report })
}

/// Largest order at which `method` takes part in [`compare_methods`].
pub fn comparison_cap(method: Method) -> usize {
    match method {
        Method::PerPolarization => 6,
        Method::EperDefinitional | Method::EperIdentity => 5,
        Method::DetpDefinitional | Method::DetpIdentity => 5,
        _ => 8,
    }
}

pub const MAX_COMPARISON_ORDER: usize = 8;

/// Rows of a method comparison, sorted by method then order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub rows: Vec<OpCountReport>,
}

/// Runs every method on seeded random integer inputs for each order in
/// `n_min..=n_max`, checks that methods computing the same function agree,
/// and tabulates their operation counts.
pub fn compare_methods(n_min: usize, n_max: usize, seed: u64, timing: bool) -> Result<ComparisonTable> {
    if n_min == 0 || n_min > n_max || n_max > MAX_COMPARISON_ORDER {
        return Err(domain(format!(
            "need 1 <= nmin <= nmax <= {MAX_COMPARISON_ORDER}, got {n_min}..={n_max}"
        )));
    }
    let q = Rationals;
    let m2 = MatrixRing::default();
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let mut rng = sample::derived_rng(seed, 0, n);
        let a = MethodInput::Matrix(sample::integer_matrix(&mut rng, n, -5..=5));
        let nc = MethodInput::Matrix(sample::matrix2_square(&mut rng, n, -3..=3));
        let cube = MethodInput::Cube(sample::integer_cube(&mut rng, n, -3..=3));

        let families: [(&[Method], &MethodInput<Rational>); 3] = [
            (
                &[
                    Method::PerDefinitional,
                    Method::PerIdentity,
                    Method::PerRyser,
                    Method::PerPolarization,
                ],
                &a,
            ),
            (&[Method::DetDefinitional, Method::DetIdentity], &a),
            (&[Method::DetpDefinitional, Method::DetpIdentity], &cube),
        ];
        for (methods, input) in families {
            let results = methods
                .iter()
                .filter(|m| n <= comparison_cap(**m))
                .map(|&m| count_ops(&q, m, input, &[], timing))
                .collect::<Result<Vec<_>>>()?;
            check_agreement(&results, n)?;
            rows.extend(results.into_iter().map(|c| c.report));
        }
        let results = [Method::EperDefinitional, Method::EperIdentity]
            .into_iter()
            .filter(|m| n <= comparison_cap(*m))
            .map(|m| count_ops(&m2, m, &nc, &[], timing))
            .collect::<Result<Vec<_>>>()?;
        check_agreement(&results, n)?;
        rows.extend(results.into_iter().map(|c| c.report));
    }
    let order = |name: &str| Method::from_str(name).expect("known method");
    rows.sort_by(|x, y| order(&x.method).cmp(&order(&y.method)).then(x.n.cmp(&y.n)));
    Ok(ComparisonTable { rows })
}

fn check_agreement<E: PartialEq + fmt::Debug>(results: &[Counted<E>], n: usize) -> Result<()> {
    let Some(first) = results.first() else {
        return Ok(());
    };
    for other in &results[1..] {
        if other.value != first.value {
            return Err(Error::Disagreement(format!(
                "n = {n}: {} = {:?} but {} = {:?}",
                first.report.method, first.value, other.report.method, other.value
            )));
        }
    }
    Ok(())
}

impl ComparisonTable {
    /// Aligned plain-text table, one row per method and order.
    pub fn to_text(&self) -> String {
        let timing = self.rows.iter().any(|r| r.wall_time_s.is_some());
        let mut header = vec![
            "method",
            "n",
            "adds",
            "muls",
            "powers",
            "power_muls",
            "int_divs",
            "f_evals",
        ];
        if timing {
            header.push("wall_time_s");
        }
        let mut cells: Vec<Vec<String>> = vec![header.iter().map(|h| h.to_string()).collect()];
        for r in &self.rows {
            let mut row = vec![
                r.method.clone(),
                r.n.to_string(),
                r.adds.to_string(),
                r.muls.to_string(),
                r.powers.to_string(),
                r.power_muls.to_string(),
                r.int_divs.to_string(),
                r.f_evals.to_string(),
            ];
            if timing {
                row.push(r.wall_time_s.map_or_else(String::new, |t| format!("{t:.6}")));
            }
            cells.push(row);
        }
        let widths: Vec<usize> = (0..cells[0].len())
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, s)| {
                    if c == 0 {
                        format!("{s:<w$}", w = widths[c])
                    } else {
                        format!("{s:>w$}", w = widths[c])
                    }
                })
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// One JSON object per line, fields in declaration order.
    pub fn to_records(&self) -> String {
        self.rows
            .iter()
            .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
            .collect()
    }
}
