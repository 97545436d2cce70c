mod common;

use proptest::prelude::*;

use common::{
    cycle_sign, ints, laplace_det, laplace_per, matrix2, naive_permutations, rational, rows_of, small_int, square,
};
use polyident::identities::{
    check_corollary1, check_corollary2, det_definitional, det_identity, det_zero_criterion, detp_definitional,
    detp_identity, eper_definitional, eper_identity, eper_zero_criterion, per_definitional, per_identity, per_ryser,
    CubeMatrix, FreeParams, SquareMatrix,
};
use polyident::ring::{MatrixRing, MultiPoly, Polynomials, RatMatrix, Rational, Rationals, Ring};
use polyident::sample;

fn order_and<S: Strategy + Clone>(
    orders: std::ops::RangeInclusive<usize>,
    cell: S,
) -> impl Strategy<Value = SquareMatrix<S::Value>>
where
    S::Value: Clone + std::fmt::Debug,
{
    orders.prop_flat_map(move |n| square(n, cell.clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn permanent_evaluators_agree(a in order_and(1..=5, rational()), seed in any::<u64>()) {
        let n = a.n();
        let q = Rationals;
        let oracle = laplace_per(&rows_of(&a));
        let mut rng = sample::rng(seed);
        for _ in 0..3 {
            let gammas = FreeParams(sample::rational_vector(&mut rng, n));
            prop_assert_eq!(per_identity(&q, &a, &gammas).unwrap(), oracle.clone());
        }
        prop_assert_eq!(per_ryser(&q, &a).unwrap(), oracle.clone());
        prop_assert_eq!(per_definitional(&q, &a).unwrap(), oracle);
    }

    #[test]
    fn determinant_evaluators_agree(a in order_and(1..=5, rational()), g1 in rational(), g2 in rational()) {
        let q = Rationals;
        let oracle = laplace_det(&rows_of(&a));
        prop_assert_eq!(det_identity(&q, &a, &g1).unwrap(), oracle.clone());
        prop_assert_eq!(det_identity(&q, &a, &g2).unwrap(), oracle.clone());
        prop_assert_eq!(det_definitional(&q, &a).unwrap(), oracle);
    }

    #[test]
    fn corollary_one_on_random_matrices(a in order_and(2..=5, rational())) {
        for t in 1..a.n() as u32 {
            let c = check_corollary1(&Rationals, &a, t).unwrap();
            prop_assert!(c.holds, "t={} residual={}", t, c.residual);
        }
    }

    #[test]
    fn symmetrized_permanent_ignores_delta(a in order_and(1..=3, matrix2()), d1 in matrix2(), d2 in matrix2()) {
        let r = MatrixRing::default();
        let expected = eper_definitional(&r, &a).unwrap();
        prop_assert_eq!(eper_identity(&r, &a, &d1).unwrap(), expected.clone());
        prop_assert_eq!(eper_identity(&r, &a, &d2).unwrap(), expected);
    }

    #[test]
    fn corollary_two_on_noncommutative_entries(a in order_and(2..=3, matrix2())) {
        let r = MatrixRing::default();
        for m in 1..a.n() as u32 {
            let c = check_corollary2(&r, &a, m).unwrap();
            prop_assert!(c.holds, "m={} residual={}", m, c.residual);
        }
    }

    #[test]
    fn ryser_matches_identity_at_zero(a in square(4, small_int())) {
        let zeros = FreeParams::zeros(&Rationals, 4);
        prop_assert_eq!(per_ryser(&Rationals, &a).unwrap(), per_identity(&Rationals, &a, &zeros).unwrap());
    }
}

#[test]
fn symbolic_permanent_expansions() {
    let p = Polynomials;
    for n in [2, 3] {
        let a = SquareMatrix::symbolic(n);
        let expected = per_definitional(&p, &a).unwrap();
        assert_eq!(expected.len(), (1..=n).product::<usize>());
        assert_eq!(per_identity(&p, &a, &FreeParams::zeros(&p, n)).unwrap(), expected);
        assert_eq!(per_identity(&p, &a, &FreeParams::symbolic_gammas(n)).unwrap(), expected);
        assert_eq!(per_ryser(&p, &a).unwrap(), expected);
    }
    let a = SquareMatrix::symbolic(2);
    assert_eq!(
        per_definitional(&p, &a).unwrap().to_string(),
        "a_1_1*a_2_2 + a_1_2*a_2_1"
    );
}

#[test]
fn symbolic_determinant_expansions() {
    let p = Polynomials;
    for n in [2, 3] {
        let a = SquareMatrix::symbolic(n);
        let expected = det_definitional(&p, &a).unwrap();
        assert_eq!(det_identity(&p, &a, &p.zero()).unwrap(), expected);
        assert_eq!(det_identity(&p, &a, &MultiPoly::var("g")).unwrap(), expected);
        for t in 1..n as u32 {
            assert!(check_corollary1(&p, &a, t).unwrap().residual.is_zero());
        }
    }
    let a = SquareMatrix::symbolic(2);
    assert_eq!(
        det_definitional(&p, &a).unwrap().to_string(),
        "a_1_1*a_2_2 - a_1_2*a_2_1"
    );
}

#[test]
fn symbolic_corollary_two_in_commuting_entries() {
    let a = SquareMatrix::symbolic(2);
    let c = check_corollary2(&Polynomials, &a, 1).unwrap();
    assert!(c.holds && c.residual.is_zero());
}

#[test]
fn determinant_examples() {
    let q = Rationals;
    let a = ints(&[&[1, 2], &[3, 4]]);
    for g in [Rational::zero(), Rational::one(), Rational::new(-3, 2)] {
        assert_eq!(det_identity(&q, &a, &g).unwrap(), Rational::from(-2));
    }
    let upper = ints(&[&[2, 7, -1, 4], &[0, -3, 5, 1], &[0, 0, 5, 9], &[0, 0, 0, 1]]);
    assert_eq!(
        det_identity(&q, &upper, &Rational::new(2, 3)).unwrap(),
        Rational::from(-30)
    );
    assert_eq!(det_definitional(&q, &upper).unwrap(), Rational::from(-30));
    let eye = ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert!(!det_zero_criterion(&q, &eye).unwrap());
    assert!(det_zero_criterion(&q, &ints(&[&[1, 2], &[2, 4]])).unwrap());
    let mut rng = sample::rng(17);
    for _ in 0..50 {
        let s = sample::singular_matrix(&mut rng, 3, -5..=5);
        assert!(det_zero_criterion(&q, &s).unwrap(), "{s}");
    }
}

#[test]
fn permanent_examples() {
    let q = Rationals;
    let a = ints(&[&[1, 2], &[3, 4]]);
    let g = FreeParams(vec![Rational::from(7), Rational::from(-5)]);
    assert_eq!(per_identity(&q, &a, &g).unwrap(), Rational::from(10));
    assert_eq!(per_ryser(&q, &a).unwrap(), Rational::from(10));
    for n in 1..=6 {
        let ones = SquareMatrix::from_fn(n, |_, _| Rational::one());
        let expected = Rational::from((1..=n as i64).product::<i64>());
        assert_eq!(per_definitional(&q, &ones).unwrap(), expected);
        assert_eq!(per_ryser(&q, &ones).unwrap(), expected);
    }
}

/// `Σ_σ sgn(σ) per(M_σ)` with column `i` of `M_σ` taken from column `σ(i)`
/// of section `i`, via the insertion and cycle oracles.
fn detp_oracle(c: &CubeMatrix<Rational>) -> Rational {
    let n = c.n();
    naive_permutations(n).iter().fold(Rational::zero(), |acc, sigma| {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|t| (0..n).map(|i| c.get(t, sigma[i], i).clone()).collect())
            .collect();
        let term = laplace_per(&rows);
        if cycle_sign(sigma) > 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

#[test]
fn space_determinant_against_independent_oracle() {
    let q = Rationals;
    let mut rng = sample::rng(4);
    for n in 1..=4 {
        for trial in 0..5 {
            let mut c = sample::integer_cube(&mut rng, n, -3..=3);
            if trial == 0 {
                c = CubeMatrix::from_fn(n, |i, j, k| {
                    if k == 0 {
                        Rational::from(i64::from(i == j))
                    } else {
                        c.get(i, j, k).clone()
                    }
                });
            }
            let oracle = detp_oracle(&c);
            assert_eq!(detp_definitional(&q, &c).unwrap(), oracle, "n={n}");
            assert_eq!(detp_identity(&q, &c).unwrap(), oracle, "n={n}");
        }
    }
}

#[test]
fn symbolic_space_determinant_of_order_two() {
    let p = Polynomials;
    let c = CubeMatrix::symbolic(2);
    let v = |name: &str| MultiPoly::var(name);
    let per2 = |a: MultiPoly, b: MultiPoly, cc: MultiPoly, d: MultiPoly| p.add(&p.mul(&a, &d), &p.mul(&b, &cc));
    // identity: columns (α_1^(1), α_2^(2)); transposition: (α_2^(1), α_1^(2))
    let even = per2(v("a_1_1_1"), v("a_1_2_2"), v("a_2_1_1"), v("a_2_2_2"));
    let odd = per2(v("a_1_2_1"), v("a_1_1_2"), v("a_2_2_1"), v("a_2_1_2"));
    let expected = p.sub(&even, &odd);
    assert_eq!(detp_definitional(&p, &c).unwrap(), expected);
    assert_eq!(detp_identity(&p, &c).unwrap(), expected);
    let c3 = CubeMatrix::symbolic(3);
    assert_eq!(detp_identity(&p, &c3).unwrap(), detp_definitional(&p, &c3).unwrap());
}

#[test]
fn scalar_entries_give_the_permanent() {
    let r = MatrixRing::default();
    let a = ints(&[&[1, -2, 3], &[0, 4, 5], &[-1, 2, 2]]);
    let lifted = a.map(|x| RatMatrix::scalar(2, x.clone()));
    let per = per_definitional(&Rationals, &a).unwrap();
    assert_eq!(
        eper_definitional(&r, &lifted).unwrap(),
        RatMatrix::scalar(2, per.clone())
    );
    assert_eq!(
        eper_identity(&r, &lifted, &r.zero()).unwrap(),
        RatMatrix::scalar(2, per)
    );
}

/// All 2x2 instances over `{[[0,1],[0,0]], [[0,0],[1,0]], ±I}` and their
/// symmetrized permanents; used to find vanishing cases by search.
fn small_noncommutative_instances() -> Vec<SquareMatrix<RatMatrix>> {
    let atoms = [
        RatMatrix::from_ints([[0, 1], [0, 0]]),
        RatMatrix::from_ints([[0, 0], [1, 0]]),
        RatMatrix::from_ints([[1, 0], [0, 1]]),
        RatMatrix::from_ints([[-1, 0], [0, -1]]),
    ];
    (0..256usize)
        .map(|code| SquareMatrix::from_fn(2, |i, j| atoms[code >> (2 * (2 * i + j)) & 3].clone()))
        .collect()
}

#[test]
fn vanishing_criterion_on_searched_instances() {
    let r = MatrixRing::default();
    let mut zero = 0;
    let mut nonzero = 0;
    for a in small_noncommutative_instances() {
        let eper = eper_definitional(&r, &a).unwrap();
        let criterion = eper_zero_criterion(&r, &a).unwrap();
        assert_eq!(criterion, r.is_zero(&eper), "{a}");
        if criterion {
            zero += 1;
        } else {
            nonzero += 1;
        }
    }
    assert!(zero > 0 && nonzero > 0, "{zero} vanishing, {nonzero} not");
}
