use nccr::mf::{partner, MatrixFactorization};
use nccr::scalars::{rat, Matrix, Monomial, Polynomial, Ring};
use proptest::prelude::*;

const CASES: u32 = 256;

fn vars() -> Vec<String> {
    vec!["x".into(), "y".into()]
}

/// Polynomials in x, y without constant term, of degree at most 2.
fn entry() -> impl Strategy<Value = Polynomial> {
    let basis = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
    prop::collection::vec(-2i64..=2, basis.len()).prop_map(move |cs| {
        basis
            .iter()
            .zip(cs)
            .fold(Polynomial::zero(), |acc, (&(a, b), c)| {
                let m = Polynomial::monomial(Monomial::from_pairs([("x", a), ("y", b)]));
                acc.add(&m.scale(&rat(c)))
            })
    })
}

/// `(φ, adj φ)` with `f = det φ`, negated when the sign is -1.
fn factorization() -> impl Strategy<Value = MatrixFactorization> {
    (
        1usize..=2,
        prop::collection::vec(entry(), 4),
        prop::bool::ANY,
    )
        .prop_filter_map("determinant must be nonzero", |(n, entries, negative)| {
            let rows: Vec<Vec<Polynomial>> =
                entries.chunks(2).take(n).map(|r| r[..n].to_vec()).collect();
            let phi = Matrix::from_rows(rows).unwrap();
            let det = phi.det();
            if det.is_zero() {
                return None;
            }
            let sign = if negative { -1 } else { 1 };
            let (f, psi) = if negative {
                (det.neg(), phi.adjugate())
            } else {
                (det, phi.adjugate())
            };
            MatrixFactorization::new(vars(), f, phi, psi, Some(sign)).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn adjugate_pairs_validate(mf in factorization()) {
        let v = mf.validate();
        prop_assert!(v.valid);
        prop_assert!(v.witness.is_none());
        prop_assert!(mf.determinant_identity());
    }

    #[test]
    fn syzygy_is_an_involution(mf in factorization()) {
        let s = mf.syzygy().unwrap();
        prop_assert!(s.validate().valid);
        prop_assert_eq!(s.syzygy().unwrap(), mf);
    }

    #[test]
    fn knorrer_flips_the_sign_and_doubles_the_size(mf in factorization()) {
        let k = mf.knorrer("u", "v").unwrap();
        prop_assert!(k.validate().valid);
        prop_assert_eq!(k.sign, -mf.sign);
        prop_assert_eq!(k.size(), 2 * mf.size());
        prop_assert!(k.determinant_identity());
        let kk = k.knorrer("u1", "v1").unwrap();
        prop_assert!(kk.validate().valid);
        prop_assert_eq!(kk.sign, mf.sign);
    }

    #[test]
    fn partner_recovers_psi(mf in factorization()) {
        prop_assert_eq!(partner(&mf.f, &mf.phi, mf.sign), Some(mf.psi.clone()));
    }

    #[test]
    fn perturbed_psi_gives_a_witness(mf in factorization(), i in 0usize..2, j in 0usize..2) {
        let (i, j) = (i % mf.size(), j % mf.size());
        let mut psi = mf.psi.clone();
        psi.set(i, j, psi.get(i, j).add(&Polynomial::var("x")));
        let bad = MatrixFactorization::new(vars(), mf.f.clone(), mf.phi.clone(), psi, Some(mf.sign)).unwrap();
        let v = bad.validate();
        prop_assert!(!v.valid);
        prop_assert!(v.witness.is_some());
    }
}
