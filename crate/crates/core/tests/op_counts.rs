use polyident::bench::{compare_methods, count_ops, evaluate, CountingRing, Method, MethodInput};
use polyident::identities::{det_identity, SquareMatrix};
use polyident::ring::{MatrixRing, Rational, Rationals};
use polyident::sample;

fn input_for(method: Method, n: usize, seed: u64) -> MethodInput<Rational> {
    let mut rng = sample::rng(seed);
    if method.takes_cube() {
        MethodInput::Cube(sample::integer_cube(&mut rng, n, -3..=3))
    } else {
        MethodInput::Matrix(sample::integer_matrix(&mut rng, n, -5..=5))
    }
}

#[test]
fn counting_never_changes_values() {
    for method in Method::ALL {
        for n in 1..=4 {
            let input = input_for(method, n, 40 + n as u64);
            let free: Vec<Rational> = (0..method.free_param_count(n))
                .map(|i| Rational::new(i as i64 - 1, 3))
                .collect();
            let (plain, _) = evaluate(&Rationals, method, &input, &free).unwrap();
            let counting = CountingRing::new(Rationals);
            let (counted, _) = evaluate(&counting, method, &input, &free).unwrap();
            assert_eq!(plain, counted, "{method} n={n}");
        }
    }
    let r = MatrixRing::default();
    let a = sample::matrix2_square(&mut sample::rng(3), 3, -3..=3);
    for method in [Method::EperDefinitional, Method::EperIdentity] {
        let input = MethodInput::Matrix(a.clone());
        let (plain, _) = evaluate(&r, method, &input, &[]).unwrap();
        let (counted, _) = evaluate(&CountingRing::new(r), method, &input, &[]).unwrap();
        assert_eq!(plain, counted, "{method}");
    }
}

#[test]
fn power_identities_use_no_free_products() {
    let r = MatrixRing::default();
    for n in 1..=4 {
        let a = sample::integer_matrix(&mut sample::rng(n as u64), n, -9..=9);
        let c = count_ops(
            &Rationals,
            Method::DetIdentity,
            &MethodInput::Matrix(a),
            &[Rational::new(5, 2)],
            false,
        )
        .unwrap();
        assert_eq!(c.report.muls, 0, "det_identity n={n}");
        assert!(c.report.powers > 0);
        let m = sample::matrix2_square(&mut sample::rng(n as u64), n, -3..=3);
        let c = count_ops(&r, Method::EperIdentity, &MethodInput::Matrix(m), &[], false).unwrap();
        assert_eq!(c.report.muls, 0, "eper_identity n={n}");
    }
}

#[test]
fn determinant_identity_raises_each_subdiagonal_once() {
    let a = sample::integer_matrix(&mut sample::rng(8), 3, -9..=9);
    let counting = CountingRing::new(Rationals);
    det_identity(&counting, &a, &Rational::zero()).unwrap();
    // |L_3| + |L_2| = 6 + 3 * 6
    assert_eq!(counting.counts().powers, 24);
    assert_eq!(counting.counts().int_divs, 1);
}

#[test]
fn identity_permanent_overtakes_the_definition() {
    let mut ratios = Vec::new();
    for n in 2..=7 {
        let a = sample::integer_matrix(&mut sample::rng(100 + n as u64), n, -9..=9);
        let input = MethodInput::Matrix(a);
        let ident = count_ops(&Rationals, Method::PerIdentity, &input, &[], false)
            .unwrap()
            .report
            .muls;
        let def = count_ops(&Rationals, Method::PerDefinitional, &input, &[], false)
            .unwrap()
            .report
            .muls;
        assert_eq!(def, (1..=n as u64).product::<u64>() * (n as u64 - 1));
        assert_eq!(ident, (1u64 << n) * (n as u64 - 1));
        if n >= 4 {
            assert!(ident < def, "n={n}: {ident} vs {def}");
        }
        ratios.push(ident as f64 / def as f64);
    }
    assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
}

#[test]
fn counts_do_not_depend_on_worker_count() {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| compare_methods(2, 5, 9, false).unwrap().to_records())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn polarization_evaluates_the_diagonal_two_to_the_n_times() {
    for n in 1..=5 {
        let a = SquareMatrix::from_fn(n, |i, j| Rational::from((i * n + j) as i64));
        let gamma = vec![Rational::one(); n];
        let c = count_ops(
            &Rationals,
            Method::PerPolarization,
            &MethodInput::Matrix(a.clone()),
            &gamma,
            false,
        )
        .unwrap();
        assert_eq!(c.report.f_evals, 1 << n);
        assert_eq!(
            c.value,
            count_ops(&Rationals, Method::PerRyser, &MethodInput::Matrix(a), &[], false)
                .unwrap()
                .value
        );
    }
}
