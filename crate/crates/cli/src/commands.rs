use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};
use yp_core::acceptance::{self, CRITERIA};
use yp_core::coxeter::fuj_her_report;
use yp_core::criteria::{cyclic_sufficient, double_admissible, irreducible_sufficient};
use yp_core::explicit::analysis::{baxter_from_chain, maximal_chain, poles_of_module};
use yp_core::explicit::matrix::RatMatrix;
use yp_core::explicit::module::ExplicitModule;
use yp_core::explicit::relations::verify_relations;
use yp_core::explicit::tensor::{rebuild_via_resolvent, tensor_product};
use yp_core::json::*;
use yp_core::poles::{
    baxter_fundamental, baxter_general, kr_baxter, kr_sigma, sigma_fundamental,
    sigma_fundamental_full, sigma_full, sigma_irreducible,
};
use yp_core::rational::{fmt_q, parse_q, q_int};
use yp_core::{CartanDatum, DrinfeldTuple, Family, PointSet, QCartanData, SpectralPoint, Q};

use crate::args::{Command, CoxeterAction, PairArgs, SlnAction, TypeArgs};

/// Bad input from the user, reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(UsageError(msg.into()).into())
}

/// The result of a command in both output formats, plus its exit code.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, code: 0 }
    }
}

fn input<T>(r: yp_core::Result<T>) -> Result<T> {
    r.map_err(|e| UsageError(e.to_string()).into())
}

fn datum(ty: &TypeArgs) -> Result<CartanDatum> {
    let family: Family = input(ty.family.parse())?;
    input(CartanDatum::new(family, ty.rank))
}

fn qcartan(ty: &TypeArgs) -> Result<QCartanData> {
    Ok(QCartanData::new(&datum(ty)?)?)
}

/// 1-based node label to 0-based index.
fn node(label: usize, rank: usize, flag: &str) -> Result<usize> {
    if !(1..=rank).contains(&label) {
        return usage(format!("--{flag} {label} is not a node in 1..={rank}"));
    }
    Ok(label - 1)
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())).into())
}

fn read_tuple(path: &Path, rank: usize) -> Result<DrinfeldTuple> {
    input(drinfeld_from_json(&read_json(path)?, rank)).with_context(|| format!("in {}", path.display()))
}

fn parse_rational(s: &str) -> Result<Q> {
    input(parse_q(s))
}

fn fmt_set(s: &PointSet) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn run(command: Command) -> Result<Report> {
    match command {
        Command::Cartan(ty) => cartan(&ty),
        Command::Qcartan(ty) => qcartan_cmd(&ty),
        Command::Baxter { ty, i, j, drinfeld } => baxter(&ty, i, j, drinfeld.as_deref()),
        Command::Poles { ty, i, j } => poles(&ty, i, j),
        Command::Sigma { ty, drinfeld, node } => sigma(&ty, &drinfeld, node),
        Command::Kr { ty, i, j, l } => kr(&ty, i, j, l),
        Command::Cyclic(args) => pair(&args, false),
        Command::Irreducible(args) => pair(&args, true),
        Command::DoubleAdmissible { ty, p } => admissible(&ty, &p),
        Command::Slnrep { action: SlnAction::Build { n, m, a, verify, chain, poles } } => {
            slnrep(n, m, &a, verify, chain, poles)
        }
        Command::Sl2 { factors, verify } => sl2(&factors, verify),
        Command::Coxeter { action: CoxeterAction::Verify(ty) } => coxeter(&ty),
        Command::Selftest { only } => selftest(&only),
    }
}

fn cartan(ty: &TypeArgs) -> Result<Report> {
    let d = datum(ty)?;
    let mut text = format!("{}\n", d.name());
    for row in &d.cartan {
        let cells: Vec<String> = row.iter().map(|a| format!("{a:>3}")).collect();
        writeln!(text, "  {}", cells.join(""))?;
    }
    writeln!(text, "d = {:?}", d.symmetrizers)?;
    writeln!(text, "2κ = {}, h∨ = {}", d.two_kappa, d.dual_coxeter)?;
    let star: Vec<String> = d.star.iter().enumerate().map(|(i, s)| format!("{}↦{}", i + 1, s + 1)).collect();
    write!(text, "star: {}", star.join(", "))?;
    Ok(Report::ok(cartan_to_json(&d), text))
}

fn qcartan_cmd(ty: &TypeArgs) -> Result<Report> {
    let qc = qcartan(ty)?;
    let n = qc.rank();
    let mut text = format!("{} with 2κ = {}\n", qc.datum.name(), qc.two_kappa());
    for (name, m) in [("B", &qc.b), ("C", &qc.c)] {
        for i in 0..n {
            for j in 0..n {
                writeln!(text, "{name}[{},{}] = {}", i + 1, j + 1, m[i][j])?;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            writeln!(text, "v[{},{}] = {:?}", i + 1, j + 1, qc.vij_window(i, j).coeffs)?;
        }
    }
    Ok(Report::ok(qcartan_to_json(&qc), text.trim_end().to_string()))
}

fn baxter(ty: &TypeArgs, i: usize, j: Option<usize>, drinfeld: Option<&Path>) -> Result<Report> {
    let qc = qcartan(ty)?;
    let i0 = node(i, qc.rank(), "i")?;
    let (roots, what) = match (j, drinfeld) {
        (Some(j), _) => (baxter_fundamental(&qc, i0, node(j, qc.rank(), "j")?), format!("L_ϖ{j}")),
        (None, Some(path)) => (baxter_general(&qc, &read_tuple(path, qc.rank())?, i0), "L(P)".into()),
        (None, None) => return usage("pass --j or --drinfeld"),
    };
    let text = format!("roots of Q_{i} on {what}: {roots}");
    Ok(Report::ok(json!({ "baxter": multiset_to_json(&roots) }), text))
}

fn poles(ty: &TypeArgs, i: Option<usize>, j: usize) -> Result<Report> {
    let qc = qcartan(ty)?;
    let j0 = node(j, qc.rank(), "j")?;
    let (set, label) = match i {
        Some(i) => (sigma_fundamental(&qc, node(i, qc.rank(), "i")?, j0), format!("σ_{i}")),
        None => (sigma_fundamental_full(&qc, j0), "σ".to_string()),
    };
    let text = format!("{label}(L_ϖ{j}) = {}", fmt_set(&set));
    Ok(Report::ok(json!({ "sigma": pointset_to_json(&set) }), text))
}

fn sigma(ty: &TypeArgs, path: &Path, node_label: Option<usize>) -> Result<Report> {
    let qc = qcartan(ty)?;
    let p = read_tuple(path, qc.rank())?;
    let (set, label) = match node_label {
        Some(i) => (sigma_irreducible(&qc, &p, node(i, qc.rank(), "node")?), format!("σ_{i}")),
        None => (sigma_full(&qc, &p), "σ".to_string()),
    };
    let text = format!("{label}(L(P)) = {}", fmt_set(&set));
    Ok(Report::ok(json!({ "sigma": pointset_to_json(&set) }), text))
}

fn kr(ty: &TypeArgs, i: usize, j: usize, l: u32) -> Result<Report> {
    if l == 0 {
        return usage("--l must be at least 1");
    }
    let qc = qcartan(ty)?;
    let (i0, j0) = (node(i, qc.rank(), "i")?, node(j, qc.rank(), "j")?);
    let set = kr_sigma(&qc, i0, j0, l);
    let roots = kr_baxter(&qc, i0, j0, l);
    let text = format!("σ_{i}(L_{l}ϖ{j}) = {}\nroots of Q_{i}: {roots}", fmt_set(&set));
    Ok(Report::ok(json!({ "sigma": pointset_to_json(&set), "baxter": multiset_to_json(&roots) }), text))
}

fn pair(args: &PairArgs, irreducible: bool) -> Result<Report> {
    let qc = qcartan(&args.ty)?;
    let p = read_tuple(&args.p, qc.rank())?;
    let q = read_tuple(&args.q, qc.rank())?;
    let (ok, yes) = if irreducible {
        (irreducible_sufficient(&qc, &p, &q), "certified-irreducible")
    } else {
        (cyclic_sufficient(&qc, &p, &q), "certified-highest-weight")
    };
    let result = if ok { yes } else { "inconclusive" };
    Ok(Report { json: json!({ "result": result }), text: result.to_string(), code: if ok { 0 } else { 3 } })
}

fn admissible(ty: &TypeArgs, path: &Path) -> Result<Report> {
    let qc = qcartan(ty)?;
    let p = read_tuple(path, qc.rank())?;
    let ok = double_admissible(&qc, &p);
    let text = if ok { "admissible" } else { "not admissible" };
    Ok(Report { json: json!({ "admissible": ok }), text: text.into(), code: if ok { 0 } else { 3 } })
}

fn matrix_text(out: &mut String, name: &str, m: &RatMatrix) -> Result<()> {
    for (r, c, f) in m.entries() {
        writeln!(out, "  {name}[{r},{c}] = {f}")?;
    }
    Ok(())
}

fn relation_check(module: &ExplicitModule, depth: usize, json: &mut Value, text: &mut String) -> Result<bool> {
    let v = verify_relations(module, depth);
    let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
    json["relations"] = json!({ "depth": depth, "violations": shown });
    if v.is_empty() {
        writeln!(text, "relations hold up to degree {depth}")?;
    } else {
        writeln!(text, "{} relation violations, first: {}", v.len(), shown[0])?;
    }
    Ok(v.is_empty())
}

fn slnrep(n: usize, m: usize, a: &str, verify: Option<usize>, chain: bool, poles: Option<usize>) -> Result<Report> {
    let a = parse_rational(a)?;
    let module = input(ExplicitModule::sln_fundamental(n, m, &a))?;
    let rank = module.rank();
    let mut text = format!("L_ϖ{m}({}) of Y(sl_{n}), dimension {}\n", fmt_q(&a), module.dim);
    writeln!(text, "basis: {}", module.labels.join(" "))?;
    let mut currents = Vec::new();
    for i in 0..rank {
        writeln!(text, "node {}:", i + 1)?;
        matrix_text(&mut text, "ξ", &module.xi[i])?;
        matrix_text(&mut text, "x+", &module.xp[i])?;
        matrix_text(&mut text, "x-", &module.xm[i])?;
        currents.push(json!({
            "node": i + 1,
            "xi": ratmatrix_to_json(&module.xi[i]),
            "xplus": ratmatrix_to_json(&module.xp[i]),
            "xminus": ratmatrix_to_json(&module.xm[i]),
        }));
    }
    let mut out = json!({
        "n": n, "m": m, "a": q_to_json(&a), "dim": module.dim,
        "labels": module.labels, "currents": currents,
    });
    let mut code = 0;
    if let Some(depth) = verify {
        if !relation_check(&module, depth, &mut out, &mut text)? {
            code = 1;
        }
    }
    if chain {
        let c = maximal_chain(&module)?;
        let steps: Vec<String> =
            c.steps.iter().map(|s| format!("X-({}; {}, {})", s.node + 1, s.pole, s.order_index)).collect();
        writeln!(text, "maximal chain: {}", steps.join(" "))?;
        let mut baxter = serde_json::Map::new();
        for i in 0..rank {
            let q = baxter_from_chain(&c, i);
            writeln!(text, "  roots of Q_{} from the chain: {q}", i + 1)?;
            baxter.insert((i + 1).to_string(), multiset_to_json(&q));
        }
        out["chain"] = json!(c
            .steps
            .iter()
            .map(|s| json!({ "node": s.node + 1, "pole": point_to_json(&s.pole), "order_index": s.order_index }))
            .collect::<Vec<_>>());
        out["chain_baxter"] = Value::Object(baxter);
    }
    if let Some(i) = poles {
        let i0 = node(i, rank, "poles")?;
        let p = poles_of_module(&module, i0)?;
        writeln!(text, "poles of the node {i} currents: {p}")?;
        out["poles"] = json!({ "node": i, "sigma": multiset_to_json(&p) });
    }
    Ok(Report { json: out, text: text.trim_end().to_string(), code })
}

fn parse_factor(s: &str) -> Result<(usize, Q)> {
    let Some((r, a)) = s.split_once(':') else {
        return usage(format!("factor {s:?} is not of the form r:a"));
    };
    let r: usize = r.trim().parse().map_err(|_| UsageError(format!("bad dimension parameter in {s:?}")))?;
    Ok((r, parse_rational(a)?))
}

fn sl2(factors: &[String], verify: Option<usize>) -> Result<Report> {
    let factors: Vec<(usize, Q)> = factors.iter().map(|f| parse_factor(f)).collect::<Result<_>>()?;
    let mut module: Option<ExplicitModule> = None;
    let mut expect = PointSet::new();
    for (r, a) in &factors {
        let f = ExplicitModule::sl2_evaluation(*r, a);
        expect.extend((0..*r as i64).map(|k| SpectralPoint::rational(a - q_int(k))));
        module = Some(match module {
            None => rebuild_via_resolvent(&f),
            Some(m) => tensor_product(&m, &f)?,
        });
    }
    let module = module.expect("clap requires a factor");
    let poles = poles_of_module(&module, 0)?;
    let agrees = poles.support() == expect;
    let names: Vec<String> = factors.iter().map(|(r, a)| format!("L_{r}({})", fmt_q(a))).collect();
    let mut text = format!("{} (dimension {})\n", names.join(" ⊗ "), module.dim);
    writeln!(text, "poles with orders: {poles}")?;
    writeln!(text, "union of strings:  {}", fmt_set(&expect))?;
    writeln!(text, "{}", if agrees { "agree" } else { "DISAGREE" })?;
    let mut out = json!({
        "dim": module.dim,
        "poles": multiset_to_json(&poles),
        "strings": pointset_to_json(&expect),
        "agree": agrees,
    });
    let mut ok = agrees;
    if let Some(depth) = verify {
        ok &= relation_check(&module, depth, &mut out, &mut text)?;
    }
    Ok(Report { json: out, text: text.trim_end().to_string(), code: if ok { 0 } else { 1 } })
}

fn coxeter(ty: &TypeArgs) -> Result<Report> {
    let qc = qcartan(ty)?;
    if !qc.datum.simply_laced {
        return usage(format!("{} is not simply laced", qc.datum.name()));
    }
    let report = fuj_her_report(&qc)?;
    let ok = report.ok();
    let text = format!(
        "{}: {} (uncovered {:?}, mismatches {:?}, non-positive {:?})",
        qc.datum.name(),
        if ok { "verified" } else { "FAILED" },
        report.uncovered,
        report.mismatches,
        report.nonpositive
    );
    let json = json!({
        "type": qc.datum.name(),
        "ok": ok,
        "uncovered": report.uncovered,
        "mismatches": report.mismatches,
        "nonpositive": report.nonpositive,
    });
    Ok(Report { json, text, code: if ok { 0 } else { 1 } })
}

fn selftest(only: &[u8]) -> Result<Report> {
    let ids: Vec<u8> = if only.is_empty() { CRITERIA.iter().map(|c| c.0).collect() } else { only.to_vec() };
    if let Some(bad) = ids.iter().find(|id| !(1..=CRITERIA.len() as u8).contains(id)) {
        return usage(format!("there is no criterion {bad}"));
    }
    let results: Vec<_> = ids.iter().map(|&id| acceptance::run(id)).collect();
    let passed = results.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(text, "[{status}] {:>2} {}: {}", r.id, r.name, r.detail)?;
    }
    let json = json!({
        "passed": passed,
        "criteria": results
            .iter()
            .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
            .collect::<Vec<_>>(),
    });
    Ok(Report { json, text: text.trim_end().to_string(), code: if passed { 0 } else { 1 } })
}
