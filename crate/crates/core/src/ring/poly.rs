//! Sparse multivariate polynomials with rational coefficients over named,
//! commuting indeterminates.
//!
//! The representation is canonical: monomials keep their variables sorted by
//! name with positive exponents, and the term map never stores a zero
//! coefficient. Two polynomials are therefore equal exactly when their term
//! maps are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{Rational, Ring, RingSpec};
use crate::error::{Error, Result};

/// A power product `x1^e1 * ... * xk^ek`, variables sorted by name.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(Arc<str>, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(name: &str) -> Self {
        Monomial {
            powers: vec![(Arc::from(name), 1)],
        }
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.powers.iter().find(|(v, _)| &**v == name).map_or(0, |(_, e)| *e)
    }

    pub fn powers(&self) -> impl Iterator<Item = (&str, u32)> {
        self.powers.iter().map(|(v, e)| (&**v, *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }
}

/// Graded lexicographic order, largest first: higher total degree sorts
/// earlier, ties broken lexicographically with alphabetically smaller
/// variable names ranking higher.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            for (x, y) in self.powers.iter().zip(&other.powers) {
                let ord = x.0.cmp(&y.0).then_with(|| y.1.cmp(&x.1));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            other.powers.len().cmp(&self.powers.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.powers.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(v)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn var(name: &str) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(name))
    }

    pub fn term(coeff: Rational, monomial: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    /// Terms in canonical (graded lexicographic, largest first) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Replaces every indeterminate by a rational value. Missing names are an
    /// error.
    pub fn evaluate(&self, value_of: impl Fn(&str) -> Option<Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                let x = value_of(v).ok_or_else(|| Error::Domain(format!("no value for indeterminate `{v}`")))?;
                t = &t * &super::power_by_squaring(&x, e, Rational::one(), |a, b| a * b);
            }
            total = &total + &t;
        }
        Ok(total)
    }

    fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(slot) => {
                if !coeff.is_zero() {
                    slot.insert(coeff);
                }
            }
            Entry::Occupied(mut slot) => {
                let c = slot.get() + &coeff;
                if c.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = c;
                }
            }
        }
    }

    fn map_coefficients(&self, f: impl Fn(&Rational) -> Rational) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let c = f(c);
                (!c.is_zero()).then(|| (m.clone(), c))
            })
            .collect();
        MultiPoly { terms }
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The polynomial ring `Q[x1, x2, ...]` over any set of named indeterminates.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Polynomials;

impl Ring for Polynomials {
    type Element = MultiPoly;

    fn spec(&self) -> RingSpec {
        RingSpec {
            commutative: true,
            description: "rational polynomials".into(),
        }
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero()
    }

    fn one(&self) -> MultiPoly {
        MultiPoly::constant(Rational::one())
    }

    fn of_int(&self, k: i64) -> MultiPoly {
        MultiPoly::constant(k.into())
    }

    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        a.map_coefficients(|c| -c)
    }

    fn sub(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let mut out = a.clone();
        for (m, c) in &b.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    fn div_int(&self, a: &MultiPoly, k: i64) -> Result<MultiPoly> {
        if k == 0 {
            return Err(Error::InvalidDivisor);
        }
        let k = Rational::from(k);
        Ok(a.map_coefficients(|c| c / &k))
    }

    fn is_zero(&self, a: &MultiPoly) -> bool {
        a.is_zero()
    }
}
