//! Coefficientwise check of the Yangian defining relations on a module.

use std::fmt;

use super::matrix::QMat;
use super::module::ExplicitModule;
use crate::rational::{q_frac, q_int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Relation {
    Y1,
    Y2,
    Y3,
    Y4,
    Y5,
}

/// A failed relation at node pair `(i, j)` and degrees `(r, s)`; the sign is
/// `+1`/`−1` for the `x^±` variants and `0` where it does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: Relation,
    pub sign: i8,
    pub i: usize,
    pub j: usize,
    pub r: usize,
    pub s: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            1 => "+",
            -1 => "-",
            _ => "",
        };
        write!(f, "{:?}{sign} i={} j={} r={} s={}", self.relation, self.i + 1, self.j + 1, self.r, self.s)
    }
}

/// Coefficients `X_r` of `X(u) = Σ_r X_r u^{−r−1}` for `r < n`.
fn coefficients(m: &super::matrix::RatMatrix, n: usize) -> Vec<QMat> {
    m.expand_at_infinity(n + 1).into_iter().skip(1).collect()
}

/// Checks `[ξ_ir, ξ_js] = 0`, the weight relation for `ξ_i0`, the two
/// degree-shift relations and `[x⁺_ir, x⁻_js] = δ_ij ξ_{i,r+s}` for all
/// `0 ≤ r, s ≤ depth`. Returns every violation found.
pub fn verify_relations(module: &ExplicitModule, depth: usize) -> Vec<Violation> {
    let datum = &module.datum;
    let n = datum.rank;
    let xi: Vec<Vec<QMat>> = module.xi.iter().map(|m| coefficients(m, 2 * depth + 2)).collect();
    let xp: Vec<Vec<QMat>> = module.xp.iter().map(|m| coefficients(m, depth + 2)).collect();
    let xm: Vec<Vec<QMat>> = module.xm.iter().map(|m| coefficients(m, depth + 2)).collect();
    let mut out = Vec::new();
    let mut fail = |relation, sign, i, j, r, s| out.push(Violation { relation, sign, i, j, r, s });

    for i in 0..n {
        for j in 0..n {
            let dij = datum.sym(i, j);
            let half = q_frac(dij, 2);
            for r in 0..=depth {
                for s in 0..=depth {
                    if !xi[i][r].commutator(&xi[j][s]).is_zero() {
                        fail(Relation::Y1, 0, i, j, r, s);
                    }
                    for (sign, x) in [(1i8, &xp), (-1i8, &xm)] {
                        let sg = q_int(sign as i64);
                        if r == 0 {
                            let lhs = xi[i][0].commutator(&x[j][s]);
                            if lhs != x[j][s].scale(&(&sg * q_int(dij))) {
                                fail(Relation::Y2, sign, i, j, r, s);
                            }
                        }
                        let lhs = xi[i][r + 1]
                            .commutator(&x[j][s])
                            .sub(&xi[i][r].commutator(&x[j][s + 1]));
                        let rhs = xi[i][r].anticommutator(&x[j][s]).scale(&(&sg * &half));
                        if lhs != rhs {
                            fail(Relation::Y3, sign, i, j, r, s);
                        }
                        let lhs = x[i][r + 1]
                            .commutator(&x[j][s])
                            .sub(&x[i][r].commutator(&x[j][s + 1]));
                        let rhs = x[i][r].anticommutator(&x[j][s]).scale(&(&sg * &half));
                        if lhs != rhs {
                            fail(Relation::Y4, sign, i, j, r, s);
                        }
                    }
                    let lhs = xp[i][r].commutator(&xm[j][s]);
                    let ok = if i == j { lhs == xi[i][r + s] } else { lhs.is_zero() };
                    if !ok {
                        fail(Relation::Y5, 0, i, j, r, s);
                    }
                }
            }
        }
    }
    out
}
