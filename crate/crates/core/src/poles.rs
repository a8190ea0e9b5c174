//! Baxter polynomials and pole sets of irreducible modules.
//!
//! Node arguments are 0-based. The `sln_*` closed forms take the 1-based
//! parameters `n`, `i`, `j` of `sl_n` directly.

use crate::laurent::LaurentPoly;
use crate::qcartan::QCartanData;
use crate::rational::{half, q_int, Q};
use crate::spectral::{half_points, shift_set, DrinfeldTuple, PointSet, PoleMultiset, SpectralPoint};

/// Shifts `(s − d_j)/2` with multiplicity `v_ij^(s) > 0`, for `d_i ≤ s ≤ 2κ − d_i`.
fn fundamental_shifts(qc: &QCartanData, i: usize, j: usize) -> Vec<(Q, u64)> {
    let d = &qc.datum;
    let (di, dj) = (d.d(i), d.d(j));
    (di..=d.two_kappa - di)
        .filter_map(|s| {
            let v = qc.vij(i, j, s);
            debug_assert!(v >= 0, "negative v_ij^(s) inside 0..=2κ");
            (v > 0).then(|| (half(s - dj), v as u64))
        })
        .collect()
}

/// Roots of `Q_ij(u)`: the Baxter polynomial of node `i` on `L_ϖj(0)`.
pub fn baxter_fundamental(qc: &QCartanData, i: usize, j: usize) -> PoleMultiset {
    fundamental_shifts(qc, i, j)
        .into_iter()
        .map(|(x, m)| (SpectralPoint::rational(x), m))
        .collect()
}

/// `σ_i(L_ϖj)` at spectral parameter 0.
pub fn sigma_fundamental(qc: &QCartanData, i: usize, j: usize) -> PointSet {
    baxter_fundamental(qc, i, j).support()
}

/// `∪_i σ_i(L_ϖj)`.
pub fn sigma_fundamental_full(qc: &QCartanData, j: usize) -> PointSet {
    qc.datum.nodes().flat_map(|i| sigma_fundamental(qc, i, j)).collect()
}

/// Roots of the Baxter polynomial `Q_{i,V}(u)` for `V = L(P)`.
pub fn baxter_general(qc: &QCartanData, p: &DrinfeldTuple, i: usize) -> PoleMultiset {
    let mut out = PoleMultiset::new();
    for (j, roots) in p.iter() {
        if roots.is_empty() {
            continue;
        }
        for (shift, v) in fundamental_shifts(qc, i, j) {
            for (a, m) in roots.iter() {
                out.insert(a.shift(&shift), m * v);
            }
        }
    }
    out
}

/// `σ_i(L(P)) = ∪_j (Z(P_j) + σ_i(L_ϖj))`.
pub fn sigma_irreducible(qc: &QCartanData, p: &DrinfeldTuple, i: usize) -> PointSet {
    let mut out = PointSet::new();
    for (j, roots) in p.iter() {
        if roots.is_empty() {
            continue;
        }
        let base = sigma_fundamental(qc, i, j);
        for (a, _) in roots.iter() {
            for s in &base {
                out.insert(a.shift(&s.offset));
            }
        }
    }
    out
}

/// `σ(L(P)) = ∪_i σ_i(L(P))`.
pub fn sigma_full(qc: &QCartanData, p: &DrinfeldTuple) -> PointSet {
    qc.datum.nodes().flat_map(|i| sigma_irreducible(qc, p, i)).collect()
}

/// Drinfeld tuple of the Kirillov–Reshetikhin module `L_{ℓϖj}`:
/// `P_j(u) = Π_{b<ℓ} (u + b)`.
pub fn kr_tuple(rank: usize, j: usize, l: u32) -> DrinfeldTuple {
    let mut t = DrinfeldTuple::trivial(rank);
    for b in 0..l as i64 {
        t.add_root(j, SpectralPoint::rational(q_int(-b)), 1);
    }
    t
}

/// `σ_i(L_{ℓϖj}) = σ_i(L_ϖj) − {0, …, ℓ−1}`.
pub fn kr_sigma(qc: &QCartanData, i: usize, j: usize, l: u32) -> PointSet {
    assert!(l >= 1, "KR modules need ℓ ≥ 1");
    let base = sigma_fundamental(qc, i, j);
    (0..l as i64).flat_map(|b| shift_set(&base, &q_int(-b))).collect()
}

/// Roots of `Q_{i, L_{ℓϖj}}(u) = Π_{b<ℓ} Π_s (u − (s − d_j − 2b)/2)^{v_ij^(s)}`.
pub fn kr_baxter(qc: &QCartanData, i: usize, j: usize, l: u32) -> PoleMultiset {
    let mut out = PoleMultiset::new();
    for b in 0..l as i64 {
        for (x, m) in fundamental_shifts(qc, i, j) {
            out.insert(SpectralPoint::rational(x - q_int(b)), m);
        }
    }
    out
}

/// The containment bound `∪_j (Z(P_j) + {k/2 : d_i−d_j ≤ k ≤ 2κ−d_i−d_j})`.
pub fn sigma_bound(qc: &QCartanData, p: &DrinfeldTuple, i: usize) -> PointSet {
    let d = &qc.datum;
    let mut out = PointSet::new();
    for (j, roots) in p.iter() {
        let (di, dj) = (d.d(i), d.d(j));
        let window = half_points(di - dj..=d.two_kappa - di - dj);
        for (a, _) in roots.iter() {
            for s in &window {
                out.insert(a.shift(&s.offset));
            }
        }
    }
    out
}

/// The interval `J_ij = [i+j+1−n, i] ∩ [1, j]` of `sl_n` (1-based).
pub fn sln_interval(n: i64, i: i64, j: i64) -> std::ops::RangeInclusive<i64> {
    assert!(1 <= i && i < n && 1 <= j && j < n, "node out of range for sl_{n}");
    (i + j + 1 - n).max(1)..=i.min(j)
}

/// `σ_i(L_ϖj) = {(i+j)/2 − b : b ∈ J_ij}` for `sl_n`.
pub fn sln_sigma_closed_form(n: i64, i: i64, j: i64) -> PointSet {
    half_points(sln_interval(n, i, j).map(|b| i + j - 2 * b))
}

/// `p_ij(q) = Σ_{b ∈ J_ij} q^{−(i+j)+2b}` for `sl_n`.
pub fn sln_pij_closed_form(n: i64, i: i64, j: i64) -> LaurentPoly {
    LaurentPoly::from_terms(sln_interval(n, i, j).map(|b| (-(i + j) + 2 * b, q_int(1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;
    use crate::rational::q_frac;
    use crate::spectral::Orbit;

    fn pt(n: i64, d: i64) -> SpectralPoint {
        SpectralPoint::rational(q_frac(n, d))
    }

    fn qc(f: Family, r: usize) -> QCartanData {
        QCartanData::from_type(f, r).unwrap()
    }

    #[test]
    fn baxter_fundamental_examples() {
        assert_eq!(baxter_fundamental(&qc(Family::A, 1), 0, 0), PoleMultiset::from_points([pt(0, 1)]));
        assert_eq!(baxter_fundamental(&qc(Family::A, 2), 0, 1), PoleMultiset::from_points([pt(1, 2)]));
        let sl4 = qc(Family::A, 3);
        assert_eq!(baxter_fundamental(&sl4, 1, 1), PoleMultiset::from_points([pt(0, 1), pt(1, 1)]));
        assert_eq!(sigma_fundamental(&sl4, 1, 1), sln_sigma_closed_form(4, 2, 2));
    }

    #[test]
    fn sigma_fundamental_examples() {
        let sl3 = qc(Family::A, 2);
        assert_eq!(sigma_fundamental(&sl3, 0, 0), [pt(0, 1)].into());
        assert_eq!(sigma_fundamental(&sl3, 0, 1), [pt(1, 2)].into());
        assert_eq!(sigma_fundamental_full(&sl3, 0), [pt(0, 1), pt(1, 2)].into());
    }

    #[test]
    fn baxter_general_examples() {
        let sl2 = qc(Family::A, 1);
        let mut p = DrinfeldTuple::trivial(1);
        p.add_root(0, pt(0, 1), 1);
        p.add_root(0, pt(1, 1), 1);
        assert_eq!(baxter_general(&sl2, &p, 0), PoleMultiset::from_points([pt(0, 1), pt(1, 1)]));

        let b3 = qc(Family::B, 3);
        for j in 0..3 {
            let f = DrinfeldTuple::fundamental(3, j, pt(0, 1));
            for i in 0..3 {
                assert_eq!(baxter_general(&b3, &f, i), baxter_fundamental(&b3, i, j));
                let c = q_frac(7, 3);
                assert_eq!(baxter_general(&b3, &f.shift(&c), i), baxter_fundamental(&b3, i, j).shift(&c));
            }
        }
    }

    #[test]
    fn orbits_stay_separate() {
        let sl3 = qc(Family::A, 2);
        let g = SpectralPoint::new(Orbit::new("g"), q_int(0));
        let mut p = DrinfeldTuple::fundamental(2, 0, pt(0, 1));
        p.add_root(1, g.clone(), 1);
        let s = sigma_irreducible(&sl3, &p, 0);
        let rational: PointSet = s.iter().filter(|x| x.orbit.is_rational()).cloned().collect();
        let generic: PointSet = s.iter().filter(|x| !x.orbit.is_rational()).cloned().collect();
        assert_eq!(rational, sigma_fundamental(&sl3, 0, 0));
        assert_eq!(generic, [g.shift(&q_frac(1, 2))].into());
    }

    #[test]
    fn kr_examples() {
        let sl2 = qc(Family::A, 1);
        assert_eq!(kr_sigma(&sl2, 0, 0, 2), [pt(0, 1), pt(-1, 1)].into());
        let g2 = qc(Family::G, 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(kr_sigma(&g2, i, j, 1), sigma_fundamental(&g2, i, j));
                assert_eq!(kr_baxter(&g2, i, j, 3), baxter_general(&g2, &kr_tuple(2, j, 3), i));
            }
        }
        // B_2: d = (2, 1), so d_1/d_2 = 2.
        let b2 = qc(Family::B, 2);
        assert_eq!(sigma_fundamental(&b2, 1, 0), kr_sigma(&b2, 0, 1, 2));
    }

    #[test]
    fn sln_closed_form_examples() {
        assert_eq!(sln_sigma_closed_form(3, 1, 1), [pt(0, 1)].into());
        assert_eq!(sln_sigma_closed_form(4, 2, 2), [pt(0, 1), pt(1, 1)].into());
        assert_eq!(sln_sigma_closed_form(3, 1, 2), [pt(1, 2)].into());
        assert_eq!(sln_pij_closed_form(3, 1, 2), LaurentPoly::q_pow(-1));
        assert_eq!(sln_pij_closed_form(2, 1, 1), LaurentPoly::one());
    }
}
