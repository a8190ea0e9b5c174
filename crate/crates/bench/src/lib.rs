//! Fixtures shared by the benchmarks.

use yp_core::explicit::module::ExplicitModule;
use yp_core::explicit::tensor::{rebuild_via_resolvent, tensor_product};
use yp_core::rational::q_frac;
use yp_core::{DrinfeldTuple, SpectralPoint};

/// `L_{r_1}(a_1) ⊗ … ⊗ L_{r_k}(a_k)` for `Y(sl_2)`, with `a` given as `(num, den)`.
pub fn sl2_tensor(factors: &[(usize, (i64, i64))]) -> ExplicitModule {
    let mut it = factors.iter().map(|(r, (n, d))| ExplicitModule::sl2_evaluation(*r, &q_frac(*n, *d)));
    let first = rebuild_via_resolvent(&it.next().expect("at least one factor"));
    it.fold(first, |acc, f| tensor_product(&acc, &f).expect("type A"))
}

/// A Drinfeld tuple with `per_node` roots at every node, spread over half-integers.
pub fn spread_tuple(rank: usize, per_node: usize) -> DrinfeldTuple {
    let mut p = DrinfeldTuple::trivial(rank);
    for j in 0..rank {
        for k in 0..per_node {
            let x = q_frac((3 * j + 5 * k) as i64 % 11 - 5, 2);
            p.add_root(j, SpectralPoint::rational(x), 1);
        }
    }
    p
}
