//! The acceptance suite: eleven exact checks over the type catalog and the
//! explicit modules. Shared by the integration tests and `yp selftest`.

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cartan::{catalog, catalog_max_rank, Family};
use crate::coxeter::fuj_her_report;
use crate::criteria::{double_admissible, sln_cyclicity_set};
use crate::explicit::analysis::{
    baxter_from_chain, maximal_chain, poles_of_module, sigma_from_dominant_weights,
};
use crate::explicit::module::ExplicitModule;
use crate::explicit::relations::verify_relations;
use crate::explicit::tensor::{check_group_like, rebuild_via_resolvent, tensor_product};
use crate::laurent::{qnum, LaurentPoly};
use crate::poles::{
    baxter_fundamental, kr_baxter, kr_sigma, sigma_fundamental, sln_pij_closed_form,
    sln_sigma_closed_form,
};
use crate::qcartan::QCartanData;
use crate::rational::{fmt_q, half, q_frac, q_int, Q};
use crate::spectral::{half_points, neg_set, shift_set, DrinfeldTuple, Orbit, PointSet, SpectralPoint};

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "q-Cartan identity"),
    (2, "v-coefficient laws"),
    (3, "type A closed form"),
    (4, "simply-laced full pole set"),
    (5, "duality and KR symmetries"),
    (6, "explicit representation relations"),
    (7, "oracle triangle"),
    (8, "sl2 tensor pole sets"),
    (9, "subadditivity and coproduct"),
    (10, "cyclicity cross-check"),
    (11, "double admissibility"),
];

fn check_fn(id: u8) -> fn() -> Check {
    match id {
        1 => qcartan_identity,
        2 => v_laws,
        3 => type_a_closed_form,
        4 => simply_laced_full,
        5 => duality_and_kr,
        6 => relations,
        7 => oracle_triangle,
        8 => sl2_tensors,
        9 => subadditivity,
        10 => cyclicity,
        11 => double_admissibility,
        _ => unreachable!("criteria are numbered 1..=11"),
    }
}

/// Runs one criterion; a panic inside a check counts as a failure.
pub fn run(id: u8) -> CriterionResult {
    let (_, name) = CRITERIA[usize::from(id) - 1];
    let outcome = catch_unwind(AssertUnwindSafe(check_fn(id))).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { id, name, passed, detail }
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(|(id, _)| run(*id)).collect()
}

fn catalog_data() -> std::result::Result<Vec<QCartanData>, String> {
    catalog(catalog_max_rank())
        .into_par_iter()
        .map(|(f, r)| QCartanData::from_type(f, r).map_err(|e| format!("{f}{r}: {e}")))
        .collect()
}

/// Runs `check` on every catalog type in parallel, stopping at the first failure.
fn over_catalog(check: impl Fn(&QCartanData) -> Check + Sync) -> Check {
    let data = catalog_data()?;
    data.par_iter()
        .map(|qc| check(qc).map_err(|e| format!("{}: {e}", qc.datum.name())))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{} types", data.len()))
}

fn qcartan_identity() -> Check {
    over_catalog(|qc| {
        let n = qc.rank();
        let bracket = qnum(qc.two_kappa());
        for i in 0..n {
            for j in 0..n {
                let mut bc = LaurentPoly::zero();
                for k in 0..n {
                    bc = bc + &qc.b[i][k] * &qc.c[k][j];
                }
                let expect = if i == j { bracket.clone() } else { LaurentPoly::zero() };
                ensure!(bc == expect, "(BC)_{i}{j} = {bc}");
                let c = &qc.c[i][j];
                ensure!(c.has_nonnegative_integer_coeffs(), "c_{i}{j} = {c} is not a nonnegative integer polynomial");
                ensure!(*c == qc.c[j][i], "c_{i}{j} ≠ c_{j}{i}");
                ensure!(c.bar() == *c, "c_{i}{j} = {c} is not palindromic");
            }
        }
        Ok(String::new())
    })
}

fn v_laws() -> Check {
    over_catalog(|qc| {
        let d = &qc.datum;
        let tk = qc.two_kappa();
        let top = 2 * tk;
        for i in d.nodes() {
            let di = d.d(i);
            for j in d.nodes() {
                let js = d.star[j];
                let v = |a: usize, b: usize, r: i64| qc.vij(a, b, r);
                for r in 0..di {
                    ensure!(v(i, j, r) == 0, "v_{i}{j}^({r}) ≠ 0 below d_i");
                }
                ensure!(v(i, j, di) == i64::from(i == j), "v_{i}{j}^(d_i) ≠ δ_ij");
                let dj = d.d(j);
                if dj >= di {
                    let rho = dj / di;
                    for r in 0..=top - rho + 1 {
                        let rhs: i64 = (0..rho).map(|b| v(j, i, r - rho + 1 + 2 * b)).sum();
                        ensure!(v(i, j, r) == rhs, "part 1 fails at ({i},{j},{r})");
                    }
                }
                ensure!(v(i, j, top) == v(i, j, 0), "4κ-periodicity fails at ({i},{j})");
                for r in 0..=tk {
                    ensure!(v(i, j, r + tk) == -v(i, js, r), "2κ antiperiodicity fails at ({i},{j},{r})");
                    ensure!(v(i, j, tk - r) == v(i, js, r), "2κ reflection fails at ({i},{j},{r})");
                }
                for s in 0..=top {
                    ensure!(v(i, j, top - s) == -v(i, j, s), "4κ reflection fails at ({i},{j},{s})");
                    if (0..=2).any(|b| (s - tk * b).abs() < di) {
                        ensure!(v(i, j, s) == 0, "v_{i}{j}^({s}) ≠ 0 near a multiple of 2κ");
                    }
                    let ok = if s <= tk { v(i, j, s) >= 0 } else { v(i, j, s) <= 0 };
                    ensure!(ok, "sign law fails at ({i},{j},{s})");
                }
            }
        }
        Ok(String::new())
    })
}

fn type_a_closed_form() -> Check {
    for n in 2..=8i64 {
        let qc = QCartanData::from_type(Family::A, (n - 1) as usize).map_err(|e| e.to_string())?;
        for i in 1..n {
            for j in 1..n {
                let (a, b) = ((i - 1) as usize, (j - 1) as usize);
                ensure!(
                    sigma_fundamental(&qc, a, b) == sln_sigma_closed_form(n, i, j),
                    "sl_{n}: σ_{i}(L_{j}) disagrees with the closed form"
                );
                ensure!(*qc.pij(a, b) == sln_pij_closed_form(n, i, j), "sl_{n}: p_{i}{j} = {}", qc.pij(a, b));
            }
        }
    }
    Ok("sl_2 … sl_8, all (i, j)".into())
}

fn simply_laced_full() -> Check {
    let data = catalog_data()?;
    let laced: Vec<_> = data.iter().filter(|qc| qc.datum.simply_laced).collect();
    laced
        .par_iter()
        .map(|qc| -> Check {
            let d = &qc.datum;
            let name = d.name();
            let expect = half_points(0..=d.dual_coxeter - 2);
            for j in d.nodes() {
                let full: PointSet = d.nodes().flat_map(|i| sigma_fundamental(qc, i, j)).collect();
                ensure!(full == expect, "{name}: σ(L_ϖ{j}) is not {{k/2 : 0 ≤ k ≤ h∨−2}}");
            }
            let report = fuj_her_report(qc).map_err(|e| format!("{name}: {e}"))?;
            ensure!(report.ok(), "{name}: Coxeter check failed: {report:?}");
            Ok(String::new())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{} simply-laced types", laced.len()))
}

fn duality_and_kr() -> Check {
    over_catalog(|qc| {
        let d = &qc.datum;
        for i in d.nodes() {
            for j in d.nodes() {
                let (is, js) = (d.star[i], d.star[j]);
                let sigma = sigma_fundamental(qc, i, j);
                let reflected = shift_set(&neg_set(&sigma_fundamental(qc, i, js)), &half(d.two_kappa - 2 * d.d(j)));
                ensure!(sigma == reflected, "σ_{i}(L_{j}) ≠ κ − d_j − σ_{i}(L_{js})");
                ensure!(sigma == sigma_fundamental(qc, is, js), "σ_{i}(L_{j}) ≠ σ_{is}(L_{js})");
                if d.d(j) >= d.d(i) {
                    let r = (d.d(j) / d.d(i)) as u32;
                    ensure!(sigma == kr_sigma(qc, j, i, r), "σ_{i}(L_{j}) ≠ σ_{j}(L_{r}ϖ{i})");
                    ensure!(baxter_fundamental(qc, i, j) == kr_baxter(qc, j, i, r), "Q_{i}{j} ≠ KR Baxter polynomial");
                }
            }
        }
        Ok(String::new())
    })
}

fn spectral_params() -> [Q; 3] {
    [q_int(0), q_frac(1, 2), q_int(-3)]
}

fn fundamentals(max_n: usize) -> Vec<(usize, usize, Q)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for m in 1..n {
            for a in spectral_params() {
                out.push((n, m, a));
            }
        }
    }
    out
}

fn relations() -> Check {
    let fund = fundamentals(5);
    fund.par_iter()
        .map(|(n, m, a)| -> Check {
            let module = ExplicitModule::sln_fundamental(*n, *m, a).map_err(|e| e.to_string())?;
            let v = verify_relations(&module, 3);
            ensure!(v.is_empty(), "L_ϖ{m}({}) of sl_{n}: {} violations, first {}", fmt_q(a), v.len(), v[0]);
            Ok(String::new())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut evals = 0;
    for r in 0..=4 {
        for a in spectral_params() {
            let module = ExplicitModule::sl2_evaluation(r, &a);
            let v = verify_relations(&module, 3);
            ensure!(v.is_empty(), "L_{r}({}) of sl_2: first violation {}", fmt_q(&a), v[0]);
            evals += 1;
        }
    }
    Ok(format!("{} fundamentals, {evals} evaluation modules, depth 3", fund.len()))
}

fn oracle_triangle() -> Check {
    let fund = fundamentals(5);
    fund.par_iter()
        .map(|(n, m, a)| -> Check {
            let tag = format!("L_ϖ{m}({}) of sl_{n}", fmt_q(a));
            let qc = QCartanData::from_type(Family::A, n - 1).map_err(|e| e.to_string())?;
            let module = ExplicitModule::sln_fundamental(*n, *m, a).map_err(|e| e.to_string())?;
            let chain = maximal_chain(&module).map_err(|e| format!("{tag}: {e}"))?;
            for i in 0..n - 1 {
                let expect = baxter_fundamental(&qc, i, m - 1).shift(a);
                let poles = poles_of_module(&module, i).map_err(|e| format!("{tag}: {e}"))?;
                ensure!(poles == expect, "{tag}: node {i} poles {poles}, expected {expect}");
                ensure!(poles.iter().all(|(_, k)| k == 1), "{tag}: node {i} has a higher-order pole");
                let chain_q = baxter_from_chain(&chain, i);
                ensure!(chain_q == expect, "{tag}: node {i} chain Baxter {chain_q}, expected {expect}");
                let dom = sigma_from_dominant_weights(&module, i).map_err(|e| format!("{tag}: {e}"))?;
                ensure!(dom == expect.support(), "{tag}: node {i} dominant-weight σ differs");
            }
            Ok(String::new())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{} fundamentals", fund.len()))
}

/// Multisets of size 1..=3 drawn from `items`, as sorted index lists.
fn small_multisets(items: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..items {
        out.push(vec![a]);
        for b in a..items {
            out.push(vec![a, b]);
            for c in b..items {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// `S_r(a) = {a, a − 1, …, a − r + 1}`.
fn string_set(r: usize, a: &Q) -> PointSet {
    (0..r as i64).map(|k| SpectralPoint::rational(a - q_int(k))).collect()
}

fn sl2_tensors() -> Check {
    let points = [q_int(0), q_int(1), q_frac(5, 2), q_int(-2)];
    let factors: Vec<(usize, Q)> =
        (1..=3).flat_map(|r| points.iter().map(move |a| (r, a.clone()))).collect();
    let configs = small_multisets(factors.len());
    configs
        .par_iter()
        .map(|cfg| -> Check {
            let tag = cfg
                .iter()
                .map(|&k| format!("L_{}({})", factors[k].0, fmt_q(&factors[k].1)))
                .collect::<Vec<_>>()
                .join("⊗");
            let mut module: Option<ExplicitModule> = None;
            let mut expect = PointSet::new();
            for &k in cfg {
                let (r, a) = &factors[k];
                let f = ExplicitModule::sl2_evaluation(*r, a);
                expect.extend(string_set(*r, a));
                module = Some(match module {
                    None => rebuild_via_resolvent(&f),
                    Some(m) => tensor_product(&m, &f).map_err(|e| e.to_string())?,
                });
            }
            let module = module.expect("nonempty configuration");
            let poles = poles_of_module(&module, 0).map_err(|e| format!("{tag}: {e}"))?;
            ensure!(poles.support() == expect, "{tag}: poles {poles}");
            Ok(String::new())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{} configurations", configs.len()))
}

fn random_point(rng: &mut ChaCha8Rng) -> Q {
    let den = [1, 1, 2, 3][rng.gen_range(0..4)];
    q_frac(rng.gen_range(-6..=6), den)
}

fn subadditivity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cases: Vec<(usize, usize, usize, Q, Q)> = (0..50)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            let (m1, m2) = (rng.gen_range(1..n), rng.gen_range(1..n));
            (n, m1, m2, random_point(&mut rng), random_point(&mut rng))
        })
        .collect();
    cases
        .par_iter()
        .map(|(n, m1, m2, a1, a2)| -> Check {
            let tag = format!("L_ϖ{m1}({})⊗L_ϖ{m2}({}) of sl_{n}", fmt_q(a1), fmt_q(a2));
            let v = ExplicitModule::sln_fundamental(*n, *m1, a1).map_err(|e| e.to_string())?;
            let w = ExplicitModule::sln_fundamental(*n, *m2, a2).map_err(|e| e.to_string())?;
            let t = tensor_product(&v, &w).map_err(|e| e.to_string())?;
            check_group_like(&v, &w, &t).map_err(|e| format!("{tag}: {e}"))?;
            for i in 0..n - 1 {
                let pv = poles_of_module(&v, i).map_err(|e| e.to_string())?.support();
                let pw = poles_of_module(&w, i).map_err(|e| e.to_string())?.support();
                let pt = poles_of_module(&t, i).map_err(|e| format!("{tag}: {e}"))?.support();
                ensure!(pt.is_subset(&pv.union(&pw).cloned().collect()), "{tag}: node {i} poles escape the factors");
            }
            Ok(String::new())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("{} tensors", cases.len()))
}

fn cyclicity() -> Check {
    for n in 2..=8i64 {
        let qc = QCartanData::from_type(Family::A, (n - 1) as usize).map_err(|e| e.to_string())?;
        for i in 1..n {
            for j in 1..n {
                let c = sln_cyclicity_set(n, i, j);
                let sigma = sigma_fundamental(&qc, (i - 1) as usize, (j - 1) as usize);
                ensure!(c == shift_set(&sigma, &q_int(1)), "sl_{n}: C_{i}{j} ≠ σ_{i}(L_{j}) + 1");
                ensure!(c == sln_cyclicity_set(n, j, i), "sl_{n}: C_{i}{j} ≠ C_{j}{i}");
            }
        }
    }
    Ok("sl_2 … sl_8, all (i, j)".into())
}

/// Admissibility re-derived from the `v`-windows alone.
fn admissible_from_windows(qc: &QCartanData, p: &DrinfeldTuple) -> bool {
    let d = &qc.datum;
    p.iter().all(|(j, roots)| {
        roots.iter().all(|(a, _)| {
            let minus = a.neg();
            if !minus.orbit.is_rational() {
                return true;
            }
            !d.nodes().any(|i| {
                (d.d(i)..=d.two_kappa - d.d(i)).any(|s| qc.vij(i, j, s) > 0 && half(s - d.d(j)) == minus.offset)
            })
        })
    })
}

fn double_admissibility() -> Check {
    let sl3 = QCartanData::from_type(Family::A, 2).map_err(|e| e.to_string())?;
    let at = |x: Q| DrinfeldTuple::fundamental(2, 0, SpectralPoint::rational(x));
    ensure!(!double_admissible(&sl3, &at(q_frac(-1, 2))), "sl_3 root −1/2 accepted");
    ensure!(double_admissible(&sl3, &at(q_int(1))), "sl_3 root 1 rejected");

    let data = catalog_data()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xad);
    let mut rejected = 0;
    for _ in 0..100 {
        let qc = &data[rng.gen_range(0..data.len())];
        let rank = qc.rank();
        let mut p = DrinfeldTuple::trivial(rank);
        for _ in 0..rng.gen_range(1..=4) {
            let node = rng.gen_range(0..rank);
            let x = random_point(&mut rng);
            let pt = if rng.gen_bool(0.1) { SpectralPoint::new(Orbit::new("g"), x) } else { SpectralPoint::rational(x) };
            p.add_root(node, pt, rng.gen_range(1..=2));
        }
        let got = double_admissible(qc, &p);
        ensure!(got == admissible_from_windows(qc, &p), "{}: disagreement on {p:?}", qc.datum.name());
        rejected += usize::from(!got);
    }
    Ok(format!("sl_3 examples and 100 random tuples ({rejected} rejected)"))
}
