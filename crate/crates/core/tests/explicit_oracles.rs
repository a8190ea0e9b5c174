//! Brute-force checks on explicit type-A modules.

use yp_core::criteria::{irreducible_sufficient, sln_cyclicity_set};
use yp_core::explicit::analysis::{poles_of_module, sigma_from_dominant_weights, submodule_from_top};
use yp_core::explicit::module::ExplicitModule;
use yp_core::explicit::relations::verify_relations;
use yp_core::explicit::tensor::tensor_product;
use yp_core::poles::{sigma_fundamental, sigma_irreducible, sln_sigma_closed_form};
use yp_core::rational::{q_frac, q_int};
use yp_core::spectral::shift_set;
use yp_core::{DrinfeldTuple, Family, PointSet, QCartanData, SpectralPoint, Q};

fn sl(n: usize) -> QCartanData {
    QCartanData::from_type(Family::A, n - 1).unwrap()
}

/// `L_ϖi(0) ⊗ L_ϖj(s)` is highest weight exactly when `s ∉ C_ij`.
#[test]
fn cyclicity_set_by_brute_force() {
    for n in 2..=4usize {
        for i in 1..n {
            for j in 1..n {
                let c = sln_cyclicity_set(n as i64, i as i64, j as i64);
                let v = ExplicitModule::sln_fundamental(n, i, &q_int(0)).unwrap();
                for k in -8..=8 {
                    let s = q_frac(k, 2);
                    let w = ExplicitModule::sln_fundamental(n, j, &s).unwrap();
                    let t = tensor_product(&v, &w).unwrap();
                    let cyclic = submodule_from_top(&t) == t.dim;
                    assert_eq!(
                        cyclic,
                        !c.contains(&SpectralPoint::rational(s.clone())),
                        "sl_{n}: L_ϖ{i}(0) ⊗ L_ϖ{j}({s})"
                    );
                }
            }
        }
    }
}

fn tuple(rank: usize, roots: &[(usize, Q)]) -> DrinfeldTuple {
    let mut t = DrinfeldTuple::trivial(rank);
    for (j, a) in roots {
        t.add_root(*j, SpectralPoint::rational(a.clone()), 1);
    }
    t
}

/// Poles of a two-factor fundamental tensor lie in the union of the factors'
/// pole sets, with equality whenever the tensor is certified irreducible.
#[test]
fn two_factor_pole_sets() {
    let points = [q_int(0), q_frac(1, 2), q_int(1), q_int(-2)];
    for n in 2..=4usize {
        let qc = sl(n);
        for m1 in 1..n {
            for m2 in 1..n {
                for a in &points {
                    for b in &points {
                        let v = ExplicitModule::sln_fundamental(n, m1, a).unwrap();
                        let w = ExplicitModule::sln_fundamental(n, m2, b).unwrap();
                        let t = tensor_product(&v, &w).unwrap();
                        let p = tuple(n - 1, &[(m1 - 1, a.clone())]);
                        let q = tuple(n - 1, &[(m2 - 1, b.clone())]);
                        let certified = irreducible_sufficient(&qc, &p, &q);
                        let pq = p.product(&q);
                        for i in 0..n - 1 {
                            let poles = poles_of_module(&t, i).unwrap().support();
                            let union: PointSet = shift_set(&sigma_fundamental(&qc, i, m1 - 1), a)
                                .union(&shift_set(&sigma_fundamental(&qc, i, m2 - 1), b))
                                .cloned()
                                .collect();
                            assert!(poles.is_subset(&union), "sl_{n} ϖ{m1}({a}) ⊗ ϖ{m2}({b}) node {i}");
                            if certified {
                                assert_eq!(poles, sigma_irreducible(&qc, &pq, i));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn dominant_weights_match_closed_form() {
    for n in 2..=6usize {
        for m in 1..n {
            let module = ExplicitModule::sln_fundamental(n, m, &q_int(0)).unwrap();
            for i in 0..n - 1 {
                assert_eq!(
                    sigma_from_dominant_weights(&module, i).unwrap(),
                    sln_sigma_closed_form(n as i64, i as i64 + 1, m as i64),
                    "sl_{n}, node {i}, ϖ{m}"
                );
            }
        }
    }
}

#[test]
fn fundamentals_satisfy_relations_at_depth_three() {
    for n in 2..=5usize {
        for m in 1..n {
            let module = ExplicitModule::sln_fundamental(n, m, &q_frac(-5, 3)).unwrap();
            assert!(verify_relations(&module, 3).is_empty(), "sl_{n}, ϖ{m}");
        }
    }
}

#[test]
fn sl3_tensor_relations() {
    let v = ExplicitModule::sln_fundamental(3, 1, &q_frac(1, 2)).unwrap();
    let w = ExplicitModule::sln_fundamental(3, 1, &q_frac(-1, 2)).unwrap();
    let t = tensor_product(&v, &w).unwrap();
    assert!(verify_relations(&t, 2).is_empty());
}
