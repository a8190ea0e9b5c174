//! Sufficient conditions for cyclicity and irreducibility of tensor products,
//! and the Yangian-double admissibility criterion.
//!
//! A `true` answer certifies the property; `false` only says that the
//! sufficient condition fails.

use crate::poles::{sigma_fundamental_full, sigma_irreducible, sln_sigma_closed_form};
use crate::qcartan::QCartanData;
use crate::rational::q_int;
use crate::spectral::{half_points, shift_set, DrinfeldTuple, PointSet};

/// `L(P) ⊗ L(Q)` is highest weight when, for every node `i`, no root `b` of
/// `Q_i` has `b − d_i ∈ σ_i(L(P))`.
pub fn cyclic_sufficient(qc: &QCartanData, p: &DrinfeldTuple, q: &DrinfeldTuple) -> bool {
    qc.datum.nodes().all(|i| {
        let roots = q.node(i);
        if roots.is_empty() {
            return true;
        }
        let sigma = sigma_irreducible(qc, p, i);
        let di = q_int(qc.datum.d(i));
        roots.iter().all(|(b, _)| !sigma.contains(&b.shift(&-di.clone())))
    })
}

/// Both cyclicity conditions; `true` certifies `L(P) ⊗ L(Q) ≅ L(PQ)`.
pub fn irreducible_sufficient(qc: &QCartanData, p: &DrinfeldTuple, q: &DrinfeldTuple) -> bool {
    cyclic_sufficient(qc, p, q) && cyclic_sufficient(qc, q, p)
}

/// `L(P)` is a module over the Yangian double iff no root `a` of any `P_j`
/// has `−a ∈ σ(L_ϖj)`.
pub fn double_admissible(qc: &QCartanData, p: &DrinfeldTuple) -> bool {
    p.iter().all(|(j, roots)| {
        if roots.is_empty() {
            return true;
        }
        let sigma = sigma_fundamental_full(qc, j);
        roots.iter().all(|(a, _)| !sigma.contains(&a.neg()))
    })
}

/// The set `C_ij(sl_n)` of points `s` with `L_ϖi(0) ⊗ L_ϖj(s)` not highest
/// weight (1-based parameters).
pub fn sln_cyclicity_set(n: i64, i: i64, j: i64) -> PointSet {
    if i < j {
        return sln_cyclicity_set(n, j, i);
    }
    let hi = j.min(n - i);
    let set = half_points((1..=hi).map(|r| (i - j) + 2 * r));
    assert_eq!(set, shift_set(&sln_sigma_closed_form(n, i, j), &q_int(1)));
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;
    use crate::rational::q_frac;
    use crate::spectral::{Orbit, SpectralPoint};

    fn pt(n: i64, d: i64) -> SpectralPoint {
        SpectralPoint::rational(q_frac(n, d))
    }

    #[test]
    fn cyclic_examples() {
        let sl3 = QCartanData::from_type(Family::A, 2).unwrap();
        let p = DrinfeldTuple::fundamental(2, 1, pt(0, 1));
        assert!(cyclic_sufficient(&sl3, &p, &DrinfeldTuple::trivial(2)));
        for s2 in -8..=8 {
            let q = DrinfeldTuple::fundamental(2, 0, pt(s2, 2));
            assert_eq!(cyclic_sufficient(&sl3, &p, &q), s2 != 3, "s = {s2}/2");
        }
        let g = DrinfeldTuple::fundamental(2, 0, SpectralPoint::new(Orbit::new("g"), q_int(1)));
        assert!(cyclic_sufficient(&sl3, &p, &g));
    }

    #[test]
    fn irreducible_examples() {
        let sl2 = QCartanData::from_type(Family::A, 1).unwrap();
        let p = DrinfeldTuple::fundamental(1, 0, pt(0, 1));
        assert!(irreducible_sufficient(&sl2, &p, &DrinfeldTuple::trivial(1)));
        assert!(!irreducible_sufficient(&sl2, &p, &DrinfeldTuple::fundamental(1, 0, pt(1, 1))));
        assert!(irreducible_sufficient(&sl2, &p, &DrinfeldTuple::fundamental(1, 0, pt(5, 2))));
    }

    #[test]
    fn double_admissible_examples() {
        let sl3 = QCartanData::from_type(Family::A, 2).unwrap();
        assert!(!double_admissible(&sl3, &DrinfeldTuple::fundamental(2, 0, pt(-1, 2))));
        assert!(double_admissible(&sl3, &DrinfeldTuple::fundamental(2, 0, pt(1, 1))));
        let g = SpectralPoint::new(Orbit::new("g"), q_frac(-1, 2));
        assert!(double_admissible(&sl3, &DrinfeldTuple::fundamental(2, 0, g)));
    }

    #[test]
    fn sln_cyclicity_examples() {
        assert_eq!(sln_cyclicity_set(3, 2, 1), [pt(3, 2)].into());
        assert_eq!(sln_cyclicity_set(4, 2, 2), [pt(1, 1), pt(2, 1)].into());
        for n in 2..=8 {
            for i in 1..n {
                for j in 1..n {
                    assert_eq!(sln_cyclicity_set(n, i, j), sln_cyclicity_set(n, j, i));
                }
            }
        }
    }
}
