mod common;

use proptest::prelude::*;

use common::{matrix2, poly, rational};
use polyident::ring::{MatrixRing, MultiPoly, Polynomials, RatMatrix, Rationals, Ring};

fn check_axioms<R: Ring>(r: &R, a: &R::Element, b: &R::Element, c: &R::Element) -> Result<(), TestCaseError> {
    prop_assert_eq!(r.add(&r.add(a, b), c), r.add(a, &r.add(b, c)));
    prop_assert_eq!(r.add(a, b), r.add(b, a));
    prop_assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
    prop_assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
    prop_assert_eq!(r.mul(&r.add(a, b), c), r.add(&r.mul(a, c), &r.mul(b, c)));
    prop_assert!(r.is_zero(&r.add(a, &r.neg(a))));
    prop_assert_eq!(r.sub(a, b), r.add(a, &r.neg(b)));
    prop_assert_eq!(r.mul(a, &r.one()), a.clone());
    prop_assert_eq!(r.mul(&r.one(), a), a.clone());
    prop_assert_eq!(r.add(a, &r.zero()), a.clone());
    if r.is_commutative() {
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
    }
    Ok(())
}

fn check_division<R: Ring>(r: &R, x: &R::Element, k: i64) -> Result<(), TestCaseError> {
    let kx = r.mul(&r.of_int(k), x);
    prop_assert_eq!(r.div_int(&kx, k).unwrap(), x.clone());
    let y = r.div_int(x, k).unwrap();
    prop_assert_eq!(r.mul(&r.of_int(k), &y), x.clone());
    prop_assert!(r.div_int(x, 0).is_err());
    Ok(())
}

fn nonzero_divisor() -> impl Strategy<Value = i64> {
    prop_oneof![-720i64..=-1, 1i64..=720]
}

proptest! {
    #[test]
    fn rationals(a in rational(), b in rational(), c in rational(), k in nonzero_divisor()) {
        check_axioms(&Rationals, &a, &b, &c)?;
        check_division(&Rationals, &a, k)?;
    }

    #[test]
    fn polynomials(a in poly(), b in poly(), c in poly(), k in nonzero_divisor()) {
        check_axioms(&Polynomials, &a, &b, &c)?;
        check_division(&Polynomials, &a, k)?;
    }

    #[test]
    fn two_by_two_matrices(a in matrix2(), b in matrix2(), c in matrix2(), k in nonzero_divisor()) {
        let r = MatrixRing::default();
        check_axioms(&r, &a, &b, &c)?;
        check_division(&r, &a, k)?;
    }

    #[test]
    fn polynomial_equality_is_canonical(p in poly(), q in poly()) {
        let d = Polynomials.sub(&p, &q);
        prop_assert_eq!(d.is_zero(), p == q);
        prop_assert_eq!(Polynomials.add(&q, &d), p);
    }

    #[test]
    fn power_agrees_with_repeated_product(a in matrix2(), n in 0u32..7) {
        let r = MatrixRing::default();
        let expected = (0..n).fold(r.one(), |acc, _| r.mul(&acc, &a));
        prop_assert_eq!(r.pow(&a, n), expected);
    }
}

#[test]
fn matrix_ring_is_noncommutative() {
    let r = MatrixRing::default();
    let x = RatMatrix::from_ints([[1, 1], [0, 1]]);
    let y = RatMatrix::from_ints([[1, 0], [1, 1]]);
    assert_ne!(r.mul(&x, &y), r.mul(&y, &x));
    assert!(!r.is_commutative());
    assert!(MatrixRing::new(1).unwrap().is_commutative());
}

#[test]
fn polynomial_division_example() {
    let r = Polynomials;
    let ab = r.mul(&MultiPoly::var("a"), &MultiPoly::var("b"));
    let x = r.mul(&r.of_int(3), &ab);
    let half = r.div_int(&x, 2).unwrap();
    assert_eq!(half.to_string(), "3/2*a*b");
    assert_eq!(r.mul(&r.of_int(2), &half), x);
}
