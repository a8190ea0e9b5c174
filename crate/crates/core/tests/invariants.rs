//! Property tests for pole sets and the cyclicity criteria over the catalog.

use std::sync::OnceLock;

use proptest::prelude::*;
use yp_core::cartan::catalog;
use yp_core::criteria::{cyclic_sufficient, double_admissible, irreducible_sufficient};
use yp_core::poles::{baxter_fundamental, baxter_general, sigma_bound, sigma_fundamental, sigma_irreducible};
use yp_core::rational::q_frac;
use yp_core::spectral::PointSet;
use yp_core::{DrinfeldTuple, Orbit, QCartanData, SpectralPoint, Q};

fn data() -> &'static [QCartanData] {
    static DATA: OnceLock<Vec<QCartanData>> = OnceLock::new();
    DATA.get_or_init(|| catalog(5).into_iter().map(|(f, r)| QCartanData::from_type(f, r).unwrap()).collect())
}

fn arb_q() -> impl Strategy<Value = Q> {
    (-12i64..=12, prop::sample::select(vec![1i64, 2, 3])).prop_map(|(n, d)| q_frac(n, d))
}

/// A catalog index together with a random tuple of roots in the given orbits.
fn arb_case(orbits: Vec<&'static str>) -> impl Strategy<Value = (usize, DrinfeldTuple)> {
    (0..data().len()).prop_flat_map(move |t| {
        let rank = data()[t].rank();
        let root = (0..rank, prop::sample::select(orbits.clone()), arb_q(), 1u64..=2);
        prop::collection::vec(root, 0..5).prop_map(move |roots| {
            let mut p = DrinfeldTuple::trivial(rank);
            for (j, o, x, m) in roots {
                p.add_root(j, SpectralPoint::new(Orbit::new(o), x), m);
            }
            (t, p)
        })
    })
}

fn restrict(s: &PointSet, orbit: &str) -> PointSet {
    s.iter().filter(|p| p.orbit.label() == orbit).cloned().collect()
}

fn restrict_tuple(p: &DrinfeldTuple, orbit: &str) -> DrinfeldTuple {
    DrinfeldTuple::from_nodes(
        p.iter()
            .map(|(_, m)| m.iter().filter(|(x, _)| x.orbit.label() == orbit).map(|(x, k)| (x.clone(), k)).collect())
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sigma_is_support_of_baxter((t, p) in arb_case(vec!["0"])) {
        let qc = &data()[t];
        for i in qc.datum.nodes() {
            prop_assert_eq!(sigma_irreducible(qc, &p, i), baxter_general(qc, &p, i).support());
            prop_assert!(sigma_irreducible(qc, &p, i).is_subset(&sigma_bound(qc, &p, i)));
        }
    }

    #[test]
    fn baxter_degree_and_shift((t, p) in arb_case(vec!["0"]), c in arb_q()) {
        let qc = &data()[t];
        for i in qc.datum.nodes() {
            let q = baxter_general(qc, &p, i);
            prop_assert_eq!(baxter_general(qc, &p.shift(&c), i), q.shift(&c));
            let degree: u64 = p
                .iter()
                .map(|(j, roots)| roots.degree() * baxter_fundamental(qc, i, j).degree())
                .sum();
            prop_assert_eq!(q.degree(), degree);
        }
    }

    #[test]
    fn orbits_do_not_interact((t, p) in arb_case(vec!["g", "h"])) {
        let qc = &data()[t];
        for i in qc.datum.nodes() {
            let all = sigma_irreducible(qc, &p, i);
            let g = sigma_irreducible(qc, &restrict_tuple(&p, "g"), i);
            let h = sigma_irreducible(qc, &restrict_tuple(&p, "h"), i);
            prop_assert_eq!(restrict(&all, "g"), g);
            prop_assert_eq!(restrict(&all, "h"), h);
        }
    }

    #[test]
    fn criteria_laws((t, p) in arb_case(vec!["0"]), (_, q) in arb_case(vec!["0"])) {
        let qc = &data()[t];
        let q = if q.rank() == p.rank() { q } else { p.shift(&q_frac(1, 3)) };
        let empty = DrinfeldTuple::trivial(p.rank());
        prop_assert!(cyclic_sufficient(qc, &p, &empty));
        prop_assert!(cyclic_sufficient(qc, &empty, &p));
        prop_assert_eq!(irreducible_sufficient(qc, &p, &q), irreducible_sufficient(qc, &q, &p));
    }

    #[test]
    fn admissibility_ignores_generic_labels((t, p) in arb_case(vec!["g"])) {
        let qc = &data()[t];
        let relabeled = DrinfeldTuple::from_nodes(
            p.iter()
                .map(|(_, m)| m.iter().map(|(x, k)| (SpectralPoint::new(Orbit::new("h"), x.offset.clone()), k)).collect())
                .collect(),
        );
        prop_assert!(double_admissible(qc, &p));
        prop_assert_eq!(double_admissible(qc, &p), double_admissible(qc, &relabeled));
    }
}

#[test]
fn fundamental_pole_bounds() {
    for qc in data() {
        let d = &qc.datum;
        for i in d.nodes() {
            for j in d.nodes() {
                for p in sigma_fundamental(qc, i, j) {
                    let k = &p.offset * Q::from_integer(2.into());
                    assert!(k.is_integer(), "{}: {p}", d.name());
                    let k = k.to_integer();
                    assert!(k >= (d.d(i) - d.d(j)).into() && k <= (d.two_kappa - d.d(i) - d.d(j)).into());
                }
            }
        }
    }
}

#[test]
fn sigma_is_support_of_baxter_on_every_type() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for (f, r) in catalog(yp_core::cartan::catalog_max_rank()) {
        let qc = QCartanData::from_type(f, r).unwrap();
        for _ in 0..200 {
            let mut p = DrinfeldTuple::trivial(r);
            for _ in 0..rng.gen_range(1..=3) {
                let x = q_frac(rng.gen_range(-10..=10), rng.gen_range(1..=2));
                p.add_root(rng.gen_range(0..r), SpectralPoint::rational(x), 1);
            }
            for i in 0..r {
                assert_eq!(sigma_irreducible(&qc, &p, i), baxter_general(&qc, &p, i).support(), "{f}{r}");
            }
        }
    }
}
