//! JSON interchange. Rationals are `[num, den]`, spectral points
//! `[orbit, num, den]` (with a fourth multiplicity field inside multisets),
//! Laurent polynomials `[[exp, num, den], …]`, and Drinfeld tuples map 1-based
//! node labels to multiset lists. Integers too large for `i64` are written as
//! decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::explicit::matrix::RatMatrix;
use crate::explicit::poly::Poly;
use crate::explicit::ratfn::RatFn;
use crate::laurent::LaurentPoly;
use crate::qcartan::QCartanData;
use crate::rational::{fmt_q, parse_q, Q};
use crate::spectral::{DrinfeldTuple, Orbit, PointSet, PoleMultiset, SpectralPoint};

fn bad(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(k) => json!(k),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("an integer", v)),
        Value::String(s) => s.parse().map_err(|_| bad("an integer", v)),
        _ => Err(bad("an integer", v)),
    }
}

fn ratio_from(n: &Value, d: &Value) -> Result<Q> {
    let d = int_from_json(d)?;
    if d == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Q::new(int_from_json(n)?, d))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what, v))
}

pub fn q_to_json(x: &Q) -> Value {
    json!([int_to_json(x.numer()), int_to_json(x.denom())])
}

/// Accepts `[num, den]`, an integer, or a string such as `"-3/2"`.
pub fn q_from_json(v: &Value) -> Result<Q> {
    match v {
        Value::Array(a) if a.len() == 2 => ratio_from(&a[0], &a[1]),
        Value::Number(_) => Ok(Q::from_integer(int_from_json(v)?)),
        Value::String(s) => parse_q(s),
        _ => Err(bad("a rational", v)),
    }
}

pub fn point_to_json(p: &SpectralPoint) -> Value {
    json!([p.orbit.label(), int_to_json(p.offset.numer()), int_to_json(p.offset.denom())])
}

fn point_fields(a: &[Value], v: &Value) -> Result<SpectralPoint> {
    let orbit = a[0].as_str().ok_or_else(|| bad("an orbit label", v))?;
    Ok(SpectralPoint::new(Orbit::new(orbit), ratio_from(&a[1], &a[2])?))
}

pub fn point_from_json(v: &Value) -> Result<SpectralPoint> {
    let a = array(v, "[orbit, num, den]")?;
    if a.len() != 3 {
        return Err(bad("[orbit, num, den]", v));
    }
    point_fields(a, v)
}

pub fn pointset_to_json(s: &PointSet) -> Value {
    Value::Array(s.iter().map(point_to_json).collect())
}

pub fn pointset_from_json(v: &Value) -> Result<PointSet> {
    array(v, "a list of points")?.iter().map(point_from_json).collect()
}

pub fn multiset_to_json(m: &PoleMultiset) -> Value {
    Value::Array(
        m.iter()
            .map(|(p, k)| {
                let mut e = point_to_json(p);
                e.as_array_mut().expect("array").push(json!(k));
                e
            })
            .collect(),
    )
}

/// Entries are `[orbit, num, den, mult]`; a missing multiplicity means 1.
pub fn multiset_from_json(v: &Value) -> Result<PoleMultiset> {
    let mut out = PoleMultiset::new();
    for e in array(v, "a list of roots")? {
        let a = array(e, "[orbit, num, den, mult]")?;
        let mult = match a.len() {
            3 => 1,
            4 => a[3].as_u64().filter(|&m| m > 0).ok_or_else(|| bad("a positive multiplicity", e))?,
            _ => return Err(bad("[orbit, num, den, mult]", e)),
        };
        out.insert(point_fields(a, e)?, mult);
    }
    Ok(out)
}

pub fn drinfeld_to_json(t: &DrinfeldTuple) -> Value {
    let mut m = Map::new();
    for (i, roots) in t.iter() {
        if !roots.is_empty() {
            m.insert((i + 1).to_string(), multiset_to_json(roots));
        }
    }
    Value::Object(m)
}

pub fn drinfeld_from_json(v: &Value, rank: usize) -> Result<DrinfeldTuple> {
    let obj = v.as_object().ok_or_else(|| bad("an object keyed by node", v))?;
    let mut t = DrinfeldTuple::trivial(rank);
    for (key, roots) in obj {
        let node: usize = key
            .parse()
            .ok()
            .filter(|n| (1..=rank).contains(n))
            .ok_or_else(|| Error::Parse(format!("node {key:?} is not in 1..={rank}")))?;
        for (p, m) in multiset_from_json(roots)?.iter() {
            t.add_root(node - 1, p.clone(), m);
        }
    }
    Ok(t)
}

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.to_triples()
            .iter()
            .map(|(e, n, d)| json!([e, int_to_json(n), int_to_json(d)]))
            .collect(),
    )
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let mut terms = Vec::new();
    for t in array(v, "a list of [exp, num, den]")? {
        let a = array(t, "[exp, num, den]")?;
        let e = a.first().and_then(Value::as_i64).filter(|_| a.len() == 3);
        let e = e.ok_or_else(|| bad("[exp, num, den]", t))?;
        terms.push((e, ratio_from(&a[1], &a[2])?));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn cartan_to_json(d: &CartanDatum) -> Value {
    json!({
        "family": d.family.to_string(),
        "rank": d.rank,
        "cartan": d.cartan,
        "d": d.symmetrizers,
        "two_kappa": d.two_kappa,
        "h_dual": d.dual_coxeter,
        "star": d.star.iter().map(|s| s + 1).collect::<Vec<_>>(),
    })
}

fn laurent_matrix(m: &[Vec<LaurentPoly>]) -> Value {
    Value::Array(m.iter().map(|row| Value::Array(row.iter().map(laurent_to_json).collect())).collect())
}

/// `B(q)`, `C(q)` and the `v`-windows, indexed `v[i][j][r]`.
pub fn qcartan_to_json(qc: &QCartanData) -> Value {
    let v: Vec<Vec<&Vec<i64>>> = qc.v.iter().map(|row| row.iter().map(|w| &w.coeffs).collect()).collect();
    json!({
        "datum": cartan_to_json(&qc.datum),
        "B": laurent_matrix(&qc.b),
        "C": laurent_matrix(&qc.c),
        "v": v,
    })
}

fn poly_to_text(p: &Poly) -> String {
    p.coeffs().iter().map(fmt_q).collect::<Vec<_>>().join(",")
}

fn poly_from_text(s: &str) -> Result<Poly> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (c0,c1,…), got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Poly::zero());
    }
    Ok(Poly::from_coeffs(inner.split(',').map(parse_q).collect::<Result<_>>()?))
}

/// `"(num coeffs)/(den coeffs)"` with coefficients in ascending powers of `u`.
pub fn ratfn_to_text(f: &RatFn) -> String {
    format!("({})/({})", poly_to_text(f.num()), poly_to_text(f.den()))
}

pub fn ratfn_from_text(s: &str) -> Result<RatFn> {
    let (n, d) = s
        .split_once(")/(")
        .ok_or_else(|| Error::Parse(format!("expected (num)/(den), got {s:?}")))?;
    let den = poly_from_text(&format!("({d}"))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(RatFn::new(poly_from_text(&format!("{n})"))?, den))
}

/// Sparse triplets `[row, col, "(num)/(den)"]`, 0-based.
pub fn ratmatrix_to_json(m: &RatMatrix) -> Value {
    json!({
        "dim": m.dim(),
        "entries": m.entries().map(|(r, c, f)| json!([r, c, ratfn_to_text(f)])).collect::<Vec<_>>(),
    })
}

pub fn ratmatrix_from_json(v: &Value) -> Result<RatMatrix> {
    let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("a matrix with dim", v))? as usize;
    let mut m = RatMatrix::zero(dim);
    for e in array(v.get("entries").unwrap_or(&Value::Null), "a list of entries")? {
        let a = array(e, "[row, col, text]")?;
        let (r, c, f) = match a.as_slice() {
            [r, c, Value::String(f)] => (r.as_u64(), c.as_u64(), ratfn_from_text(f)?),
            _ => return Err(bad("[row, col, text]", e)),
        };
        let (r, c) = r.zip(c).map(|(r, c)| (r as usize, c as usize)).ok_or_else(|| bad("indices", e))?;
        if r >= dim || c >= dim {
            return Err(bad("indices below dim", e));
        }
        m.set(r, c, f);
    }
    Ok(m)
}
