//! Currents from the degree-zero and degree-one generators:
//! `x_i^±(u) = (u ∓ ad(t_{i,1})/(2d_i))^{−1} x_{i,0}^±` and
//! `ξ_i(u) = 1 + [x_i^+(u), x_{i,0}^−]`.

use num_traits::{One, Zero};

use super::matrix::{QMat, QVec, RatMatrix};
use super::module::Constants;
use super::poly::Poly;
use super::ratfn::RatFn;
use crate::rational::{q_int, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Current {
    Plus,
    Minus,
    Xi,
}

/// Incremental row echelon form that remembers how each stored vector was
/// combined from the inputs.
struct Echelon {
    rows: Vec<(usize, QVec, Vec<Q>)>,
    inputs: usize,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new(), inputs: 0 }
    }

    /// Adds the next input vector. Returns `Some(c)` with `Σ c_l w_l = 0`
    /// and `c_last = 1` if it depends on the earlier inputs.
    fn push(&mut self, w: &QVec) -> Option<Vec<Q>> {
        let k = self.inputs;
        self.inputs += 1;
        let mut v = w.clone();
        let mut combo = vec![Q::zero(); k + 1];
        combo[k] = Q::one();
        for (pivot, row, rc) in &self.rows {
            let Some(c) = v.get(pivot).cloned() else { continue };
            for (idx, x) in row {
                let slot = v.entry(*idx).or_insert_with(Q::zero);
                *slot -= &c * x;
                if slot.is_zero() {
                    v.remove(idx);
                }
            }
            for (l, x) in rc.iter().enumerate() {
                combo[l] -= &c * x;
            }
        }
        match v.iter().next().map(|(p, x)| (*p, x.clone())) {
            None => Some(combo),
            Some((pivot, lead)) => {
                let inv = lead.recip();
                for x in v.values_mut() {
                    *x *= &inv;
                }
                for x in combo.iter_mut() {
                    *x *= &inv;
                }
                self.rows.push((pivot, v, combo));
                None
            }
        }
    }
}

/// Krylov vectors `w_l = A^l x` and the monic minimal polynomial `μ` of `A`
/// on `x`, for `A(X) = sign·[t, X]/(2d)`.
fn krylov(t: &QMat, x: &QMat, sign: i64, d: i64) -> (Vec<QMat>, Vec<Q>) {
    let scale = q_int(sign) / q_int(2 * d);
    let mut ech = Echelon::new();
    let mut ws: Vec<QMat> = Vec::new();
    let mut w = x.clone();
    loop {
        if let Some(mu) = ech.push(&w.flatten()) {
            return (ws, mu);
        }
        let next = t.commutator(&w).scale(&scale);
        ws.push(w);
        w = next;
    }
}

/// Polynomials `P_l(u) = Σ_{k>l} μ_k u^{k−1−l}` with
/// `(u − A)^{−1} x = Σ_l P_l(u) A^l x / μ(u)`.
fn resolvent_weights(mu: &[Q]) -> Vec<Poly> {
    let deg = mu.len() - 1;
    (0..deg)
        .map(|l| Poly::from_coeffs((l + 1..=deg).map(|k| mu[k].clone()).collect()))
        .collect()
}

/// Rebuilds one current of node `i` from the generators.
pub fn current_via_resolvent(c: &Constants, d_i: i64, i: usize, which: Current) -> RatMatrix {
    let dim = c.xi0[i].dim();
    let (x0, sign) = match which {
        Current::Plus | Current::Xi => (&c.xp0[i], 1),
        Current::Minus => (&c.xm0[i], -1),
    };
    let (ws, mu) = krylov(&c.t1[i], x0, sign, d_i);
    let den = Poly::from_coeffs(mu.clone());
    let weights = resolvent_weights(&mu);
    let terms: Vec<(Poly, QMat)> = match which {
        Current::Plus | Current::Minus => weights.into_iter().zip(ws).collect(),
        Current::Xi => weights
            .into_iter()
            .zip(ws.iter().map(|w| w.commutator(&c.xm0[i])))
            .collect(),
    };
    let mut m = RatMatrix::from_combination(dim, &terms, &den);
    if which == Current::Xi {
        for k in 0..dim {
            let e = &m.get(k, k) + &RatFn::one();
            m.set(k, k, e);
        }
    }
    m
}

/// All three currents of every node, rebuilt from the generators.
pub fn currents_via_resolvent(
    c: &Constants,
    d: &[i64],
) -> (Vec<RatMatrix>, Vec<RatMatrix>, Vec<RatMatrix>) {
    let n = c.xi0.len();
    let xi = (0..n).map(|i| current_via_resolvent(c, d[i], i, Current::Xi)).collect();
    let xp = (0..n).map(|i| current_via_resolvent(c, d[i], i, Current::Plus)).collect();
    let xm = (0..n).map(|i| current_via_resolvent(c, d[i], i, Current::Minus)).collect();
    (xi, xp, xm)
}
