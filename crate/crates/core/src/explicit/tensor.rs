//! Tensor products of type-A modules through the coproduct
//! `Δ(t_{i,1}) = t_{i,1}⊗1 + 1⊗t_{i,1} − Σ_{α>0} (α_i, α) x_α^− ⊗ x_α^+`,
//! with `ξ_{i,0}` and `x_{i,0}^±` primitive.

use super::matrix::QMat;
use super::module::{root_pairing, Constants, ExplicitModule};
use super::resolvent::currents_via_resolvent;
use crate::cartan::Family;
use crate::error::{Error, Result};
use crate::rational::q_int;

fn primitive(a: &QMat, b: &QMat) -> QMat {
    a.kron(&QMat::identity(b.dim())).add(&QMat::identity(a.dim()).kron(b))
}

/// Generators of `Δ` acting on `A ⊗ B`.
pub fn tensor_constants(a: &ExplicitModule, b: &ExplicitModule) -> Constants {
    let (ca, cb) = (&a.constants, &b.constants);
    let n = a.rank();
    let roots_a = a.root_vectors();
    let roots_b = b.root_vectors();
    let mut out = Constants { xi0: vec![], xp0: vec![], xm0: vec![], t1: vec![] };
    for i in 0..n {
        out.xi0.push(primitive(&ca.xi0[i], &cb.xi0[i]));
        out.xp0.push(primitive(&ca.xp0[i], &cb.xp0[i]));
        out.xm0.push(primitive(&ca.xm0[i], &cb.xm0[i]));
        let mut t = primitive(&ca.t1[i], &cb.t1[i]);
        for ((p, q, _, minus), (_, _, plus, _)) in roots_a.iter().zip(&roots_b) {
            let c = root_pairing(i, *p, *q);
            if c != 0 {
                t = t.sub(&minus.kron(plus).scale(&q_int(c)));
            }
        }
        out.t1.push(t);
    }
    out
}

/// `A ⊗ B` with currents rebuilt from the coproduct of the generators.
///
/// Basis vector `(k, l)` sits at position `k·dim B + l`, so vector 0 is the
/// tensor product of the highest-weight vectors.
pub fn tensor_product(a: &ExplicitModule, b: &ExplicitModule) -> Result<ExplicitModule> {
    if a.datum.family != Family::A || b.datum != a.datum {
        return Err(Error::UnsupportedType(format!(
            "tensor products need two modules of the same type A datum, got {} and {}",
            a.datum.name(),
            b.datum.name()
        )));
    }
    let constants = tensor_constants(a, b);
    let (xi, xp, xm) = currents_via_resolvent(&constants, &a.datum.symmetrizers);
    let mut labels = Vec::with_capacity(a.dim * b.dim);
    let mut eps_weights = Vec::with_capacity(a.dim * b.dim);
    for k in 0..a.dim {
        for l in 0..b.dim {
            labels.push(format!("{}⊗{}", a.labels[k], b.labels[l]));
            eps_weights.push(
                a.eps_weights[k].iter().zip(&b.eps_weights[l]).map(|(x, y)| x + y).collect(),
            );
        }
    }
    let xi_eigen = (0..a.rank())
        .map(|i| {
            let mut row = Vec::with_capacity(a.dim * b.dim);
            for k in 0..a.dim {
                for l in 0..b.dim {
                    row.push(&a.xi_eigen[i][k] * &b.xi_eigen[i][l]);
                }
            }
            row
        })
        .collect();
    Ok(ExplicitModule {
        datum: a.datum.clone(),
        dim: a.dim * b.dim,
        labels,
        eps_weights,
        xi,
        xp,
        xm,
        xi_eigen,
        constants,
    })
}

/// The same module with every current rebuilt through the resolvent.
pub fn rebuild_via_resolvent(m: &ExplicitModule) -> ExplicitModule {
    let (xi, xp, xm) = currents_via_resolvent(&m.constants, &m.datum.symmetrizers);
    ExplicitModule { xi, xp, xm, ..m.clone() }
}

/// Which first-factor index a tensor basis position belongs to.
pub fn first_factor(pos: usize, dim_b: usize) -> usize {
    pos / dim_b
}

/// `λ − μ ∈ Q_+` for weights in `ε`-coordinates of `sl_n`.
pub fn dominates(lambda: &[i64], mu: &[i64]) -> bool {
    let mut partial = 0;
    for (x, y) in lambda.iter().zip(mu) {
        partial += x - y;
        if partial < 0 {
            return false;
        }
    }
    partial == 0
}

/// Checks that `ξ_i(u)` on `A ⊗ B` is the product of the factor eigenvalues
/// on the diagonal and otherwise only lowers the first factor's weight.
pub fn check_group_like(a: &ExplicitModule, b: &ExplicitModule, t: &ExplicitModule) -> Result<()> {
    for i in 0..t.rank() {
        for (r, c, f) in t.xi[i].entries() {
            if r == c {
                if *f != t.xi_eigen[i][r] {
                    return Err(Error::PoleMismatch {
                        node: i,
                        detail: format!("diagonal ξ entry {f} at {r} differs from {}", t.xi_eigen[i][r]),
                    });
                }
                continue;
            }
            let (wr, wc) = (
                &a.eps_weights[first_factor(r, b.dim)],
                &a.eps_weights[first_factor(c, b.dim)],
            );
            if wr == wc || !dominates(wc, wr) {
                return Err(Error::PoleMismatch {
                    node: i,
                    detail: format!("off-diagonal ξ entry ({r},{c}) does not lower the first factor"),
                });
            }
        }
    }
    Ok(())
}
