//! Matrix and cube documents.
//!
//! ```text
//! {"kind":"matrix","ring":"rational","n":2,"entries":[[1,"1/2"],[3,4]]}
//! ```
//!
//! Cube entries are nested as `entries[k][i][j]`, section `k` first.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Value;

use polyident::identities::{CubeMatrix, SquareMatrix};
use polyident::ring::{MultiPoly, RatMatrix, Rational};

/// Largest order a document may declare.
pub const MAX_DOCUMENT_ORDER: usize = 16;

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Invalid {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Matrix,
    Cube,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Matrix => "matrix",
            Kind::Cube => "cube",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Rational,
    Symbolic,
    Matrix2,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Rational => "rational",
            RingKind::Symbolic => "symbolic",
            RingKind::Matrix2 => "matrix2",
        }
    }
}

/// One entry as written in a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Number(Rational),
    Var(String),
    Matrix2(RatMatrix),
}

impl Scalar {
    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Number(q) => Some(q.clone()),
            _ => None,
        }
    }

    pub fn to_poly(&self) -> Option<MultiPoly> {
        match self {
            Scalar::Number(q) => Some(MultiPoly::constant(q.clone())),
            Scalar::Var(v) => Some(MultiPoly::var(v)),
            Scalar::Matrix2(_) => None,
        }
    }

    pub fn to_matrix2(&self) -> Option<RatMatrix> {
        match self {
            Scalar::Matrix2(m) => Some(m.clone()),
            _ => None,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Scalar::Number(q) => rational_to_json(q),
            Scalar::Var(v) => Value::String(v.clone()),
            Scalar::Matrix2(m) => Value::Array(
                m.rows()
                    .map(|r| Value::Array(r.iter().map(rational_to_json).collect()))
                    .collect(),
            ),
        }
    }
}

/// Integers that fit in 64 bits print as JSON numbers, everything else as
/// a string.
pub fn rational_to_json(q: &Rational) -> Value {
    match q.to_i64() {
        Some(k) => Value::from(k),
        None => Value::String(q.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub kind: Kind,
    pub ring: RingKind,
    pub n: usize,
    /// Row-major for matrices; `(k*n + i)*n + j` for cubes.
    pub entries: Vec<Scalar>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    kind: Kind,
    ring: RingKind,
    n: usize,
    entries: Value,
}

pub fn parse_document(text: &str) -> Result<MatrixDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text)?;
    let n = raw.n;
    if n == 0 || n > MAX_DOCUMENT_ORDER {
        return Err(invalid("n", format!("expected 1..={MAX_DOCUMENT_ORDER}, got {n}")));
    }
    let depth = match raw.kind {
        Kind::Matrix => 2,
        Kind::Cube => 3,
    };
    let mut cells = Vec::new();
    flatten(&raw.entries, depth, n, "entries".to_string(), &mut cells)?;
    let mut seen: HashMap<String, String> = HashMap::new();
    let entries = cells
        .into_iter()
        .map(|(path, v)| {
            let s = parse_scalar(raw.ring, v).map_err(|m| invalid(&path, m))?;
            if let Scalar::Var(name) = &s {
                if let Some(first) = seen.insert(name.clone(), path.clone()) {
                    return Err(invalid(&path, format!("variable `{name}` already used at {first}")));
                }
            }
            Ok(s)
        })
        .collect::<Result<_, _>>()?;
    Ok(MatrixDocument {
        kind: raw.kind,
        ring: raw.ring,
        n,
        entries,
    })
}

fn flatten<'a>(
    v: &'a Value,
    depth: usize,
    n: usize,
    path: String,
    out: &mut Vec<(String, &'a Value)>,
) -> Result<(), DocumentError> {
    if depth == 0 {
        out.push((path, v));
        return Ok(());
    }
    let Value::Array(items) = v else {
        return Err(invalid(path, format!("expected an array of {n} items")));
    };
    if items.len() != n {
        return Err(invalid(path, format!("has {} items, expected {n}", items.len())));
    }
    for (i, item) in items.iter().enumerate() {
        flatten(item, depth - 1, n, format!("{path}[{i}]"), out)?;
    }
    Ok(())
}

fn parse_scalar(ring: RingKind, v: &Value) -> Result<Scalar, String> {
    match ring {
        RingKind::Rational => json_rational(v).map(Scalar::Number),
        RingKind::Symbolic => match v {
            Value::String(s) if is_var_name(s) => Ok(Scalar::Var(s.clone())),
            _ => json_rational(v)
                .map(Scalar::Number)
                .map_err(|_| format!("expected a variable name or a rational, got {v}")),
        },
        RingKind::Matrix2 => json_matrix2(v).map(Scalar::Matrix2),
    }
}

/// `[A-Za-z_][A-Za-z0-9_]*`
pub fn is_var_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn json_rational(v: &Value) -> Result<Rational, String> {
    match v {
        Value::Number(num) => {
            if let Some(k) = num.as_i64() {
                Ok(Rational::from(k))
            } else if let Some(k) = num.as_u64() {
                Ok(Rational::integer(BigInt::from(k)))
            } else {
                Err(format!("{num} is not an integer; write fractions as \"p/q\" strings"))
            }
        }
        Value::String(s) => s.parse().map_err(|e| format!("{e}")),
        other => Err(format!("expected a rational, got {other}")),
    }
}

fn json_matrix2(v: &Value) -> Result<RatMatrix, String> {
    let rows = match v {
        Value::Array(rows) if rows.len() == 2 => rows,
        _ => return Err(format!("expected a 2x2 array, got {v}")),
    };
    let rows = rows
        .iter()
        .map(|r| match r {
            Value::Array(cells) if cells.len() == 2 => cells.iter().map(json_rational).collect(),
            _ => Err(format!("expected a 2x2 array, row {r} is not a pair")),
        })
        .collect::<Result<Vec<Vec<Rational>>, String>>()?;
    RatMatrix::from_rows(rows).map_err(|e| e.to_string())
}

/// Parses one scalar written on the command line in `ring`'s syntax. Matrix
/// scalars are written as JSON, e.g. `[[1,0],[0,1]]`.
pub fn parse_cli_scalar(ring: RingKind, text: &str) -> Result<Scalar, String> {
    let text = text.trim();
    match ring {
        RingKind::Matrix2 => {
            let v: Value = serde_json::from_str(text).map_err(|e| format!("`{text}`: {e}"))?;
            json_matrix2(&v).map(Scalar::Matrix2)
        }
        RingKind::Symbolic if is_var_name(text) => Ok(Scalar::Var(text.to_string())),
        _ => text.parse().map(Scalar::Number).map_err(|e| format!("`{text}`: {e}")),
    }
}

impl MatrixDocument {
    fn map_entries<E>(&self, f: impl Fn(&Scalar) -> Option<E>) -> Vec<E> {
        self.entries
            .iter()
            .map(|s| f(s).expect("entries were validated against the ring"))
            .collect()
    }

    fn square<E: Clone>(&self, f: impl Fn(&Scalar) -> Option<E>) -> SquareMatrix<E> {
        let cells = self.map_entries(f);
        SquareMatrix::from_fn(self.n, |i, j| cells[i * self.n + j].clone())
    }

    fn cube<E: Clone>(&self, f: impl Fn(&Scalar) -> Option<E>) -> CubeMatrix<E> {
        let n = self.n;
        let cells = self.map_entries(f);
        CubeMatrix::from_fn(n, |i, j, k| cells[(k * n + i) * n + j].clone())
    }

    pub fn rational_matrix(&self) -> SquareMatrix<Rational> {
        self.square(Scalar::to_rational)
    }

    pub fn rational_cube(&self) -> CubeMatrix<Rational> {
        self.cube(Scalar::to_rational)
    }

    pub fn poly_matrix(&self) -> SquareMatrix<MultiPoly> {
        self.square(Scalar::to_poly)
    }

    pub fn poly_cube(&self) -> CubeMatrix<MultiPoly> {
        self.cube(Scalar::to_poly)
    }

    pub fn matrix2_matrix(&self) -> SquareMatrix<RatMatrix> {
        self.square(Scalar::to_matrix2)
    }

    pub fn matrix2_cube(&self) -> CubeMatrix<RatMatrix> {
        self.cube(Scalar::to_matrix2)
    }

    pub fn all_integers(&self) -> bool {
        self.entries
            .iter()
            .all(|s| matches!(s, Scalar::Number(q) if q.is_integer()))
    }

    fn entries_json(&self) -> Value {
        let n = self.n;
        let row = |base: usize| Value::Array((0..n).map(|j| self.entries[base + j].to_json()).collect());
        let section = |base: usize| Value::Array((0..n).map(|i| row(base + i * n)).collect());
        match self.kind {
            Kind::Matrix => section(0),
            Kind::Cube => Value::Array((0..n).map(|k| section(k * n * n)).collect()),
        }
    }
}

/// Canonical single-line form with fields in the order
/// `kind`, `ring`, `n`, `entries`.
impl fmt::Display for MatrixDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{\"kind\":\"{}\",\"ring\":\"{}\",\"n\":{},\"entries\":{}}}",
            self.kind.name(),
            self.ring.name(),
            self.n,
            self.entries_json()
        )
    }
}
