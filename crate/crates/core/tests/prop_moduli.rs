use nccr::fixtures;
use nccr::moduli::*;
use nccr::quiver::BoundQuiver;
use nccr::scalars::Monomial;
use nccr::stability::{chambers, Theta};
use proptest::prelude::*;
use std::sync::OnceLock;

const CASES: u32 = 256;

struct Case {
    bq: BoundQuiver,
    atlas: ChartAtlas,
    ring: InvariantRing,
}

/// Atlases for every fixture surface, and for the suspended pinch point in
/// every chamber.
fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        let mut out = Vec::new();
        let mut push = |bq: BoundQuiver, theta: Theta| {
            let rels = commutativize(&bq).unwrap();
            let atlas = enumerate_charts_theta(&bq, &rels, &theta).unwrap();
            let ring = invariant_generators(&bq.quiver, &rels, DEFAULT_DEGREE_BOUND).unwrap();
            if !atlas.charts.is_empty() {
                out.push(Case { bq, atlas, ring });
            }
        };
        for bq in [
            fixtures::z3(),
            fixtures::kronecker(),
            fixtures::blowup(),
            fixtures::a1_surface(),
        ] {
            let n = bq.quiver.num_vertices();
            for star in 0..n {
                push(bq.clone(), Theta::star(n, star));
            }
        }
        for bq in [fixtures::spp(), fixtures::spp_alt()] {
            for c in chambers(3).unwrap() {
                push(bq.clone(), Theta(c.representative.clone()));
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn transitions_satisfy_the_cocycle_condition(which in 0usize..64, i in 0usize..16, j in 0usize..16, k in 0usize..16) {
        let case = &cases()[which % cases().len()];
        let charts = &case.atlas.charts;
        let n = charts.len();
        let q = &case.bq.quiver;
        let (ci, cj, ck) = (&charts[i % n], &charts[j % n], &charts[k % n]);
        let tij = transition(q, ci, cj).unwrap();
        let tjk = transition(q, cj, ck).unwrap();
        let tik = transition(q, ci, ck).unwrap();
        let composed: Vec<(String, Monomial)> = tjk.map.iter().map(|(v, x)| (v.clone(), pull_back(x, &tij))).collect();
        prop_assert_eq!(composed, tik.map);
        let tii = transition(q, ci, ci).unwrap();
        prop_assert!(tii.map.iter().all(|(v, x)| *x == Monomial::var(v)));
    }

    #[test]
    fn base_maps_agree_on_overlaps(which in 0usize..64, i in 0usize..16, j in 0usize..16) {
        let case = &cases()[which % cases().len()];
        let charts = &case.atlas.charts;
        let n = charts.len();
        let q = &case.bq.quiver;
        let (ci, cj) = (&charts[i % n], &charts[j % n]);
        let t = transition(q, ci, cj).unwrap();
        let bi = base_map(ci, q, &case.ring.generators);
        let bj = base_map(cj, q, &case.ring.generators);
        prop_assert_eq!(bj.iter().map(|x| pull_back(x, &t)).collect::<Vec<_>>(), bi);
    }

    #[test]
    fn chart_points_satisfy_the_relations(which in 0usize..64, i in 0usize..16, values in prop::collection::vec(1i64..6, 8)) {
        let case = &cases()[which % cases().len()];
        let charts = &case.atlas.charts;
        let c = &charts[i % charts.len()];
        let q = &case.bq.quiver;
        let point = c
            .free_names(q)
            .into_iter()
            .zip(values.iter().cycle())
            .map(|(v, &x)| (v, nccr::scalars::rat(x)))
            .collect();
        let rep = c.representation(q, &point).unwrap();
        prop_assert!(rep.check_relations(&case.bq.relations).satisfied);
        prop_assert_eq!(
            nccr::stability::classify(&rep, &case.atlas.theta).unwrap(),
            nccr::stability::Stability::Stable
        );
    }
}
