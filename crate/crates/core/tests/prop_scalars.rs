use nccr::scalars::{ratio, Cyclotomic, Matrix, Monomial, Polynomial, Rational, Ring};
use proptest::prelude::*;

const CASES: u32 = 256;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((rational(), 0i64..3, 0i64..3, 0i64..2), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Polynomial::zero(), |acc, (c, a, b, e)| {
                let m = Monomial::from_pairs([("x", a), ("y", b), ("z", e)]);
                acc.add(&Polynomial::term(m, c))
            })
    })
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (1u64..=12).prop_flat_map(|n| {
        prop::collection::vec(rational(), n as usize).prop_map(move |c| Cyclotomic::new(n, &c))
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

fn ring_axioms<T: Ring>(a: &T, b: &T, c: &T) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.add(&T::zero()), *a);
    assert_eq!(a.mul(&T::one()), *a);
    assert!(a.sub(a).is_zero());
    assert_eq!(a.neg().neg(), *a);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn rational_ring_axioms(a in rational(), b in rational(), c in rational()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn polynomial_ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn polynomial_parse_round_trip(a in polynomial()) {
        prop_assert_eq!(Polynomial::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn polynomial_exact_division(a in polynomial(), b in polynomial()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn cyclotomic_ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        ring_axioms(&a, &b, &c);
    }

    /// The canonical form is a faithful encoding: arithmetic agrees with
    /// complex evaluation, and zero exactly when the value is zero.
    #[test]
    fn cyclotomic_canonical_form(a in cyclotomic(), b in cyclotomic()) {
        let (x, y) = (a.to_complex(), b.to_complex());
        let s = a.add(&b).to_complex();
        prop_assert!(close(s, (x.0 + y.0, x.1 + y.1)));
        let p = a.mul(&b).to_complex();
        prop_assert!(close(p, (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)));
        let d = a.sub(&b);
        let v = d.to_complex();
        prop_assert_eq!(d.is_zero(), v.0.abs() < 1e-9 && v.1.abs() < 1e-9);
        prop_assert!(close(a.conj().to_complex(), (x.0, -x.1)));
    }

    #[test]
    fn cyclotomic_roots_multiply(n in 1u64..=12, m in 1u64..=12, j in -20i64..20, k in -20i64..20) {
        let l = num_integer::Integer::lcm(&n, &m);
        let prod = Cyclotomic::root(n, j).mul(&Cyclotomic::root(m, k));
        let expected = Cyclotomic::root(l, j * (l / n) as i64 + k * (l / m) as i64);
        prop_assert_eq!(prod, expected);
    }

    #[test]
    fn determinant_is_multiplicative(a in prop::collection::vec(rational(), 9), b in prop::collection::vec(rational(), 9)) {
        let to_m = |v: &[Rational]| Matrix::from_rows(v.chunks(3).map(|r| r.to_vec()).collect()).unwrap();
        let (ma, mb) = (to_m(&a), to_m(&b));
        prop_assert_eq!(ma.mul(&mb).det(), ma.det().mul(&mb.det()));
        prop_assert_eq!(ma.mul(&ma.adjugate()), Matrix::scalar(3, ma.det()));
        prop_assert_eq!(ma.rank() + ma.nullspace().len(), 3);
    }
}
