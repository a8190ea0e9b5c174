use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use yp_bench::{sl2_tensor, spread_tuple};
use yp_core::explicit::analysis::{maximal_chain, poles_of_module};
use yp_core::explicit::module::ExplicitModule;
use yp_core::explicit::relations::verify_relations;
use yp_core::explicit::tensor::tensor_product;
use yp_core::poles::{baxter_general, sigma_irreducible};
use yp_core::rational::q_frac;
use yp_core::{Family, QCartanData};

fn qcartan(c: &mut Criterion) {
    for (f, r) in [(Family::A, 8), (Family::F, 4), (Family::E, 8)] {
        c.bench_function(&format!("qcartan {f}{r}"), |b| b.iter(|| QCartanData::from_type(black_box(f), r).unwrap()));
    }
}

fn pole_engine(c: &mut Criterion) {
    let qc = QCartanData::from_type(Family::E, 8).unwrap();
    let p = spread_tuple(8, 3);
    c.bench_function("baxter_general E8", |b| b.iter(|| baxter_general(&qc, black_box(&p), 3)));
    c.bench_function("sigma_irreducible E8", |b| b.iter(|| sigma_irreducible(&qc, black_box(&p), 3)));
}

fn explicit(c: &mut Criterion) {
    let v = ExplicitModule::sln_fundamental(4, 2, &q_frac(0, 1)).unwrap();
    let w = ExplicitModule::sln_fundamental(4, 1, &q_frac(1, 2)).unwrap();
    c.bench_function("tensor sl4 ϖ2⊗ϖ1", |b| b.iter(|| tensor_product(black_box(&v), &w).unwrap()));
    c.bench_function("relations sl4 ϖ2 depth 3", |b| b.iter(|| verify_relations(black_box(&v), 3)));
    c.bench_function("maximal chain sl4 ϖ2", |b| b.iter(|| maximal_chain(black_box(&v)).unwrap()));

    let factors = [(3, (0, 1)), (2, (5, 2)), (3, (-2, 1))];
    c.bench_function("sl2 3-fold tensor build", |b| b.iter(|| sl2_tensor(black_box(&factors))));
    let t = sl2_tensor(&factors);
    c.bench_function("sl2 3-fold tensor poles", |b| b.iter(|| poles_of_module(black_box(&t), 0).unwrap()));
}

criterion_group!(benches, qcartan, pole_engine, explicit);
criterion_main!(benches);
