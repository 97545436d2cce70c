//! Deterministic chunked summation.
//!
//! Index ranges are cut into fixed-size chunks independent of the number of
//! worker threads. Each chunk is summed on its own, then the partial sums are
//! combined in chunk order, so both the value and the sequence of ring
//! operations are the same whatever the pool size.

use std::ops::Range;

use rayon::prelude::*;

use crate::ring::Ring;

pub(crate) const CHUNK_LEN: u64 = 128;

/// Running signed sum. The first term is taken as-is, so a sum of `k` terms
/// costs `k - 1` additions (plus one negation if the first term is
/// subtracted).
pub struct Accumulator<'r, R: Ring> {
    ring: &'r R,
    value: Option<R::Element>,
}

impl<'r, R: Ring> Accumulator<'r, R> {
    pub fn new(ring: &'r R) -> Self {
        Accumulator { ring, value: None }
    }

    pub fn add(&mut self, x: R::Element) {
        self.value = Some(match self.value.take() {
            None => x,
            Some(v) => self.ring.add(&v, &x),
        });
    }

    pub fn sub(&mut self, x: R::Element) {
        self.value = Some(match self.value.take() {
            None => self.ring.neg(&x),
            Some(v) => self.ring.sub(&v, &x),
        });
    }

    pub fn push(&mut self, negative: bool, x: R::Element) {
        if negative {
            self.sub(x)
        } else {
            self.add(x)
        }
    }

    pub fn finish(self) -> R::Element {
        self.value.unwrap_or_else(|| self.ring.zero())
    }
}

/// Sums the contributions of `0..len`. `body` receives a subrange and pushes
/// the terms for exactly those indices.
pub fn accumulate<R, F>(ring: &R, len: u64, body: F) -> R::Element
where
    R: Ring,
    F: Fn(Range<u64>, &mut Accumulator<'_, R>) + Sync,
{
    let chunks = len.div_ceil(CHUNK_LEN);
    if chunks <= 1 {
        let mut acc = Accumulator::new(ring);
        body(0..len, &mut acc);
        return acc.finish();
    }
    let partials: Vec<R::Element> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK_LEN;
            let mut acc = Accumulator::new(ring);
            body(start..(start + CHUNK_LEN).min(len), &mut acc);
            acc.finish()
        })
        .collect();
    let mut total = Accumulator::new(ring);
    for p in partials {
        total.add(p);
    }
    total.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Rational, Rationals};

    #[test]
    fn sums_every_index_once() {
        for len in [0u64, 1, 5, CHUNK_LEN, CHUNK_LEN + 1, 10 * CHUNK_LEN + 7] {
            let got = accumulate(&Rationals, len, |range, acc| {
                for i in range {
                    acc.push(i % 3 == 0, Rational::from(i as i64));
                }
            });
            let expected: i64 = (0..len as i64).map(|i| if i % 3 == 0 { -i } else { i }).sum();
            assert_eq!(got, Rational::from(expected), "len = {len}");
        }
    }
}
