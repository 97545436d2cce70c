//! Seeded randomized oracle suites: each compares an identity-based
//! evaluator against its definitional counterpart on random instances.
//!
//! Output is a list of [`CheckLine`]s, one per suite and order, whose text
//! depends only on the options (never on timing or thread count).

use std::fmt;
use std::str::FromStr;

use crate::bench::{count_ops, Method, MethodInput};
use crate::error::{domain, Error, Result};
use crate::identities::{self, FreeParams};
use crate::ring::{MatrixRing, Rational, Rationals, Ring};
use crate::sample::{self, SampleRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Cor1,
    Cor2,
    Polarization,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Thm2,
        Suite::Thm3,
        Suite::Thm4,
        Suite::Thm5,
        Suite::Cor1,
        Suite::Cor2,
        Suite::Polarization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
            Suite::Thm5 => "thm5",
            Suite::Cor1 => "cor1",
            Suite::Cor2 => "cor2",
            Suite::Polarization => "polarization",
        }
    }

    /// Orders exercised when no `n` is requested.
    pub fn default_orders(self) -> std::ops::RangeInclusive<usize> {
        match self {
            Suite::Thm2 => 2..=6,
            Suite::Thm3 | Suite::Cor1 => 2..=5,
            Suite::Thm4 | Suite::Thm5 | Suite::Cor2 => 2..=3,
            Suite::Polarization => 2..=4,
        }
    }

    /// Largest order the suite accepts.
    pub fn max_order(self) -> usize {
        match self {
            Suite::Thm2 | Suite::Thm3 | Suite::Cor1 => 8,
            Suite::Thm4 | Suite::Cor2 => 4,
            Suite::Thm5 | Suite::Polarization => 5,
        }
    }

    fn stream(self) -> u64 {
        Suite::ALL.iter().position(|s| *s == self).unwrap() as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| domain(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n: Option<usize>,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n: None,
            trials: 20,
            seed: 1,
        }
    }
}

/// Outcome of one suite at one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub suite: Suite,
    pub n: usize,
    pub trials: usize,
    pub checks: usize,
    pub failures: usize,
    /// Description and nonzero residual of the first failing check.
    pub first_failure: Option<String>,
}

impl CheckLine {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} n={} trials={} checks={} failures={}",
            self.suite, self.n, self.trials, self.checks, self.failures
        )?;
        match &self.first_failure {
            None => write!(f, " residual=0"),
            Some(msg) => write!(f, " first: {msg}"),
        }
    }
}

struct Tally {
    checks: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    /// Records one check; `residual` is the difference that must vanish.
    fn check<E: fmt::Display>(&mut self, ok: bool, what: impl FnOnce() -> String, residual: E) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(format!("{} residual={residual}", what()));
            }
        }
    }

    fn equal<E: fmt::Display + PartialEq, R: Ring<Element = E>>(
        &mut self,
        ring: &R,
        lhs: &E,
        rhs: &E,
        what: impl FnOnce() -> String,
    ) {
        self.check(lhs == rhs, what, ring.sub(lhs, rhs));
    }
}

/// Runs one suite at every requested order.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CheckLine>> {
    let orders: Vec<usize> = match opts.n {
        Some(n) if n >= 1 && n <= suite.max_order() => vec![n],
        Some(n) => {
            return Err(domain(format!(
                "suite {suite} supports n in 1..={}, got {n}",
                suite.max_order()
            )))
        }
        None => suite.default_orders().collect(),
    };
    orders
        .into_iter()
        .map(|n| {
            let mut rng = sample::derived_rng(opts.seed, suite.stream(), n);
            let mut tally = Tally::new();
            for trial in 0..opts.trials {
                run_trial(suite, n, trial, &mut rng, &mut tally)?;
            }
            Ok(CheckLine {
                suite,
                n,
                trials: opts.trials,
                checks: tally.checks,
                failures: tally.failures,
                first_failure: tally.first_failure,
            })
        })
        .collect()
}

/// Runs each suite in turn.
pub fn run_suites(suites: &[Suite], opts: &VerifyOptions) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for &s in suites {
        out.extend(run_suite(s, opts)?);
    }
    Ok(out)
}

fn run_trial(suite: Suite, n: usize, trial: usize, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let q = Rationals;
    let m2 = MatrixRing::default();
    match suite {
        Suite::Thm2 => {
            let a = sample::integer_matrix(rng, n, -9..=9);
            let gammas = FreeParams(sample::rational_vector(rng, n));
            let def = identities::per_definitional(&q, &a)?;
            let ident = identities::per_identity(&q, &a, &gammas)?;
            let ryser = identities::per_ryser(&q, &a)?;
            t.equal(&q, &ident, &def, || {
                format!("trial {trial}: per_identity - per_definitional")
            });
            t.equal(&q, &ryser, &def, || {
                format!("trial {trial}: per_ryser - per_definitional")
            });
        }
        Suite::Thm3 => {
            let a = sample::rational_matrix(rng, n);
            let gamma = sample::rational(rng);
            let def = identities::det_definitional(&q, &a)?;
            let ident = identities::det_identity(&q, &a, &gamma)?;
            let elim = identities::det_by_elimination(&a);
            t.equal(&q, &ident, &def, || {
                format!("trial {trial}: det_identity - det_definitional")
            });
            t.equal(&q, &elim, &def, || {
                format!("trial {trial}: elimination - det_definitional")
            });
        }
        Suite::Thm4 => {
            let a = sample::matrix2_square(rng, n, -3..=3);
            let delta = sample::matrix2(rng, -3..=3);
            let def = identities::eper_definitional(&m2, &a)?;
            let at_zero = identities::eper_identity(&m2, &a, &m2.zero())?;
            let at_delta = identities::eper_identity(&m2, &a, &delta)?;
            t.equal(&m2, &at_zero, &def, || {
                format!("trial {trial}: eper_identity(0) - eper_definitional")
            });
            t.equal(&m2, &at_delta, &def, || {
                format!("trial {trial}: eper_identity(delta) - eper_definitional")
            });
        }
        Suite::Thm5 => {
            let c = sample::integer_cube(rng, n, -3..=3);
            let def = identities::detp_definitional(&q, &c)?;
            let ident = identities::detp_identity(&q, &c)?;
            t.equal(&q, &ident, &def, || {
                format!("trial {trial}: detp_identity - detp_definitional")
            });
        }
        Suite::Cor1 => {
            let a = sample::rational_matrix(rng, n);
            for power in 1..n as u32 {
                let c = identities::check_corollary1(&q, &a, power)?;
                t.check(
                    c.holds,
                    || format!("trial {trial} t={power}: alternating power sums"),
                    c.residual,
                );
            }
            let singular = sample::singular_matrix(rng, n, -5..=5);
            for m in [&a, &singular] {
                let crit = identities::det_zero_criterion(&q, m)?;
                let det = identities::det_definitional(&q, m)?;
                t.check(
                    crit == det.is_zero(),
                    || format!("trial {trial}: zero criterion vs det = {det}"),
                    Rational::one(),
                );
            }
        }
        Suite::Cor2 => {
            let a = sample::matrix2_square(rng, n, -3..=3);
            for power in 1..n as u32 {
                let c = identities::check_corollary2(&m2, &a, power)?;
                t.check(
                    c.holds,
                    || format!("trial {trial} m={power}: signed submatrix power sum"),
                    c.residual,
                );
            }
            let crit = identities::eper_zero_criterion(&m2, &a)?;
            let eper = identities::eper_definitional(&m2, &a)?;
            t.check(
                crit == m2.is_zero(&eper),
                || format!("trial {trial}: vanishing criterion vs eper = {eper}"),
                Rational::one(),
            );
        }
        Suite::Polarization => {
            let a = sample::integer_matrix(rng, n, -9..=9);
            let gamma = sample::rational_vector(rng, n);
            let input = MethodInput::Matrix(a.clone());
            let counted = count_ops(&q, Method::PerPolarization, &input, &gamma, false)?;
            let def = identities::per_definitional(&q, &a)?;
            t.equal(&q, &counted.value, &def, || {
                format!("trial {trial}: polarized per - per_definitional")
            });
            let evals = counted.report.f_evals;
            t.check(
                evals == 1u64 << n,
                || format!("trial {trial}: {evals} evaluations of F, expected {}", 1u64 << n),
                Rational::from(evals as i64 - (1i64 << n)),
            );
        }
    }
    Ok(())
}
