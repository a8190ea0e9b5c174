//! Explicit modules: the `sl_n` fundamental representations and the `sl_2`
//! evaluation modules, stored as matrices of rational functions.

use super::matrix::{QMat, RatMatrix};
use super::poly::Poly;
use super::ratfn::RatFn;
use crate::cartan::{CartanDatum, Family};
use crate::error::{Error, Result};
use crate::rational::{q_frac, q_int, Q};

/// Degree-zero and degree-one generators acting on a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    pub xi0: Vec<QMat>,
    pub xp0: Vec<QMat>,
    pub xm0: Vec<QMat>,
    /// `t_{i,1} = ξ_{i,1} − ξ_{i,0}²/2`.
    pub t1: Vec<QMat>,
}

impl Constants {
    /// Read off from the expansions of the currents at infinity.
    pub fn from_currents(xi: &[RatMatrix], xp: &[RatMatrix], xm: &[RatMatrix]) -> Self {
        let mut out = Constants { xi0: vec![], xp0: vec![], xm0: vec![], t1: vec![] };
        for i in 0..xi.len() {
            let e = xi[i].expand_at_infinity(3);
            let half = q_frac(1, 2);
            out.t1.push(e[2].sub(&e[1].mul(&e[1]).scale(&half)));
            out.xi0.push(e[1].clone());
            out.xp0.push(xp[i].expand_at_infinity(2)[1].clone());
            out.xm0.push(xm[i].expand_at_infinity(2)[1].clone());
        }
        out
    }
}

/// A finite-dimensional module given by explicit currents.
///
/// Basis vector 0 is always a highest-weight vector. Weights are recorded in
/// `ε`-coordinates (type A only), so `wt_i = ε_i − ε_{i+1}`.
#[derive(Clone, Debug)]
pub struct ExplicitModule {
    pub datum: CartanDatum,
    pub dim: usize,
    pub labels: Vec<String>,
    pub eps_weights: Vec<Vec<i64>>,
    pub xi: Vec<RatMatrix>,
    pub xp: Vec<RatMatrix>,
    pub xm: Vec<RatMatrix>,
    /// Eigenvalues of `ξ_i(u)`, per node and basis vector. On tensor products
    /// `ξ_i(u)` is only triangular and these are its diagonal entries.
    pub xi_eigen: Vec<Vec<RatFn>>,
    pub constants: Constants,
}

fn type_a(rank: usize) -> CartanDatum {
    CartanDatum::new(Family::A, rank).expect("type A of positive rank")
}

fn ratio(num_roots: &[Q], den_roots: &[Q]) -> RatFn {
    RatFn::new(Poly::from_roots(num_roots), Poly::from_roots(den_roots))
}

/// `k`-element subsets of `1..=n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

impl ExplicitModule {
    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    /// `wt_i(v) = ε_i(v) − ε_{i+1}(v)` for basis vector `v`.
    pub fn h_weight(&self, v: usize) -> Vec<i64> {
        let e = &self.eps_weights[v];
        (0..self.rank()).map(|i| e[i] - e[i + 1]).collect()
    }

    /// The one-dimensional trivial module of `sl_{rank+1}`.
    pub fn trivial(rank: usize) -> Self {
        let n = rank;
        let one = RatMatrix::identity(1);
        let zero = RatMatrix::zero(1);
        let xi = vec![one; n];
        let xp = vec![zero.clone(); n];
        let xm = vec![zero; n];
        let constants = Constants::from_currents(&xi, &xp, &xm);
        ExplicitModule {
            datum: type_a(rank),
            dim: 1,
            labels: vec!["1".into()],
            eps_weights: vec![vec![0; rank + 1]],
            xi,
            xp,
            xm,
            xi_eigen: vec![vec![RatFn::one()]; n],
            constants,
        }
    }

    /// The fundamental module `L_ϖm(a)` of `Y(sl_n)` on `Λ^m ℂ^n`.
    ///
    /// Basis vectors are the subsets `p_1 < … < p_m` of `1..=n`; the node-`i`
    /// currents act through `b_{i,k} = a + (m + i − 2k)/2` where `k` is the
    /// position of `i` or `i+1` in the subset.
    pub fn sln_fundamental(n: usize, m: usize, a: &Q) -> Result<Self> {
        if n < 2 || m < 1 || m >= n {
            return Err(Error::Parse(format!("need 1 ≤ m ≤ n−1, got n = {n}, m = {m}")));
        }
        let basis = subsets(n, m);
        let dim = basis.len();
        let index = |p: &[usize]| basis.iter().position(|q| q == p).expect("basis subset");
        let rank = n - 1;
        let mut xi = vec![RatMatrix::zero(dim); rank];
        let mut xp = vec![RatMatrix::zero(dim); rank];
        let mut xm = vec![RatMatrix::zero(dim); rank];
        let mut xi_eigen = vec![vec![RatFn::one(); dim]; rank];
        let one = q_int(1);
        for node in 0..rank {
            let i = node + 1;
            for (col, p) in basis.iter().enumerate() {
                let has_i = p.iter().position(|&x| x == i);
                let has_next = p.iter().position(|&x| x == i + 1);
                let b = |k: usize| a + q_frac((m + i) as i64 - 2 * (k as i64 + 1), 2);
                let eig = match (has_i, has_next) {
                    (Some(k), None) => {
                        let b = b(k);
                        let mut lowered = p.clone();
                        lowered[k] = i + 1;
                        xm[node].set(index(&lowered), col, RatFn::simple_pole(&b));
                        ratio(&[&b - &one], &[b])
                    }
                    (None, Some(k)) => {
                        let b = b(k);
                        let mut raised = p.clone();
                        raised[k] = i;
                        xp[node].set(index(&raised), col, RatFn::simple_pole(&b));
                        ratio(&[&b + &one], &[b])
                    }
                    _ => RatFn::one(),
                };
                xi[node].set(col, col, eig.clone());
                xi_eigen[node][col] = eig;
            }
        }
        let eps_weights = basis
            .iter()
            .map(|p| (1..=n).map(|x| i64::from(p.contains(&x))).collect())
            .collect();
        let labels = basis
            .iter()
            .map(|p| format!("|{}⟩", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let constants = Constants::from_currents(&xi, &xp, &xm);
        Ok(ExplicitModule { datum: type_a(rank), dim, labels, eps_weights, xi, xp, xm, xi_eigen, constants })
    }

    /// The evaluation module `L_r(a)` of `Y(sl_2)` with basis `v_0, …, v_r`.
    pub fn sl2_evaluation(r: usize, a: &Q) -> Self {
        let dim = r + 1;
        let ri = r as i64;
        let mut xi = RatMatrix::zero(dim);
        let mut xp = RatMatrix::zero(dim);
        let mut xm = RatMatrix::zero(dim);
        let mut eig = Vec::with_capacity(dim);
        // In terms of z = u − a every root is a + integer.
        let at = |k: i64| a + q_int(k);
        for i in 0..dim {
            let ii = i as i64;
            // (u−a−1)(u−a+r) / ((u−a+i−1)(u−a+i))
            let e = ratio(&[at(1), at(-ri)], &[at(1 - ii), at(-ii)]);
            xi.set(i, i, e.clone());
            eig.push(e);
            if i >= 1 {
                let f = RatFn::simple_pole(&at(1 - ii)).scale(&q_int(ri - ii + 1));
                xp.set(i - 1, i, f);
            }
            if i < r {
                let f = RatFn::simple_pole(&at(-ii)).scale(&q_int(ii + 1));
                xm.set(i + 1, i, f);
            }
        }
        let xi = vec![xi];
        let xp = vec![xp];
        let xm = vec![xm];
        let constants = Constants::from_currents(&xi, &xp, &xm);
        ExplicitModule {
            datum: type_a(1),
            dim,
            labels: (0..dim).map(|i| format!("v{i}")).collect(),
            eps_weights: (0..dim as i64).map(|i| vec![ri - i, i]).collect(),
            xi,
            xp,
            xm,
            xi_eigen: vec![eig],
            constants,
        }
    }

    /// Root vectors `(x_α^+, x_α^−)` for `α = ε_a − ε_b`, `a < b` (0-based),
    /// as elementary-matrix images `E_ab`, `E_ba`.
    pub fn root_vectors(&self) -> Vec<(usize, usize, QMat, QMat)> {
        let n = self.rank() + 1;
        let c = &self.constants;
        let mut out = Vec::new();
        for a in 0..n - 1 {
            let mut plus = c.xp0[a].clone();
            let mut minus = c.xm0[a].clone();
            out.push((a, a + 1, plus.clone(), minus.clone()));
            for b in a + 2..n {
                // E_ab = [E_{a,b−1}, E_{b−1,b}] and E_ba = [E_{b,b−1}, E_{b−1,a}]
                plus = plus.commutator(&c.xp0[b - 1]);
                minus = c.xm0[b - 1].commutator(&minus);
                out.push((a, b, plus.clone(), minus.clone()));
            }
        }
        out
    }
}

/// `(α_i, ε_a − ε_b)` for the simple root `α_i = ε_i − ε_{i+1}`.
pub fn root_pairing(i: usize, a: usize, b: usize) -> i64 {
    let delta = |x: usize, y: usize| i64::from(x == y);
    delta(i, a) - delta(i, b) - delta(i + 1, a) + delta(i + 1, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_fundamental_example() {
        let m = ExplicitModule::sln_fundamental(2, 1, &q_int(0)).unwrap();
        let u = Poly::linear(&q_int(0));
        assert_eq!(m.xi[0].get(0, 0), RatFn::new(Poly::linear(&q_int(-1)), u.clone()));
        assert_eq!(m.xp[0].get(0, 1), RatFn::simple_pole(&q_int(0)));
        assert_eq!(m.dim, 2);
    }

    #[test]
    fn highest_vector_eigenvalues() {
        for (n, mm) in [(4, 2), (5, 3), (3, 1)] {
            let a = q_frac(1, 2);
            let module = ExplicitModule::sln_fundamental(n, mm, &a).unwrap();
            for node in 0..n - 1 {
                let expect = if node + 1 == mm { ratio(&[&a - &q_int(1)], &[a.clone()]) } else { RatFn::one() };
                assert_eq!(module.xi_eigen[node][0], expect);
            }
        }
        assert_eq!(ExplicitModule::sln_fundamental(4, 2, &q_int(0)).unwrap().dim, 6);
    }

    #[test]
    fn sl2_eval_matches_fundamental() {
        let a = ExplicitModule::sl2_evaluation(1, &q_int(0));
        let b = ExplicitModule::sln_fundamental(2, 1, &q_int(0)).unwrap();
        assert_eq!(a.xi, b.xi);
        assert_eq!(a.xp, b.xp);
        assert_eq!(a.xm, b.xm);
        let t = ExplicitModule::sl2_evaluation(0, &q_int(3));
        assert_eq!(t.xi[0], RatMatrix::identity(1));
    }

    #[test]
    fn root_vectors_are_elementary() {
        let m = ExplicitModule::sln_fundamental(4, 1, &q_int(0)).unwrap();
        for (a, b, plus, minus) in m.root_vectors() {
            let mut e = QMat::zero(4);
            e.set(a, b, q_int(1));
            let mut f = QMat::zero(4);
            f.set(b, a, q_int(1));
            assert_eq!((plus, minus), (e, f), "ε_{a} − ε_{b}");
        }
    }
}
