//! Root-system computations for the Coxeter-element formula of `v_ij^(r)`.

use std::collections::VecDeque;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::qcartan::QCartanData;

/// Coordinates in the basis of simple roots.
pub type RootVector = Vec<i64>;

pub fn simple_root(rank: usize, i: usize) -> RootVector {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// `s_i(v) = v − ⟨v, α_i^∨⟩ α_i` with `⟨v, α_i^∨⟩ = Σ_k a_ik n_k`.
pub fn simple_reflection(datum: &CartanDatum, i: usize, v: &[i64]) -> RootVector {
    let pairing: i64 = datum.nodes().map(|k| datum.a(i, k) * v[k]).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

/// Applies the word left to right, i.e. `word[0]` acts first.
pub fn apply_word(datum: &CartanDatum, word: &[usize], v: &[i64]) -> RootVector {
    word.iter().fold(v.to_vec(), |acc, &i| simple_reflection(datum, i, &acc))
}

/// A reduced word for the longest Weyl group element, in the order the
/// reflections act: reflecting `ρ` while some fundamental-weight coordinate
/// is positive ends at `w0(ρ) = −ρ`.
pub fn longest_word(datum: &CartanDatum) -> Vec<usize> {
    let mut c = vec![1i64; datum.rank];
    let mut word = Vec::new();
    while let Some(i) = c.iter().position(|&x| x > 0) {
        // α_i = Σ_k a_ki ϖ_k
        let ci = c[i];
        for (k, ck) in c.iter_mut().enumerate() {
            *ck -= ci * datum.a(k, i);
        }
        word.push(i);
    }
    word
}

/// The involution determined by `−w0(α_i) = α_{i*}`.
pub fn star_from_longest_element(datum: &CartanDatum) -> Result<Vec<usize>> {
    let w0 = longest_word(datum);
    datum
        .nodes()
        .map(|i| {
            let img = apply_word(datum, &w0, &simple_root(datum.rank, i));
            let neg: Vec<i64> = img.iter().map(|x| -x).collect();
            match (neg.iter().filter(|&&x| x != 0).count(), neg.iter().position(|&x| x == 1)) {
                (1, Some(k)) => Ok(k),
                _ => Err(Error::UnsupportedType(format!(
                    "−w0(α_{}) = {neg:?} is not simple in {}",
                    i + 1,
                    datum.name()
                ))),
            }
        })
        .collect()
}

/// Bipartite orientation of the Dynkin graph with a chosen node as a sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSetup {
    pub sinks: Vec<usize>,
    pub sources: Vec<usize>,
    /// `γ_i = α_i − Σ_{j source} a_ji α_j`.
    pub gamma: RootVector,
}

pub fn coxeter_setup(datum: &CartanDatum, i: usize) -> CoxeterSetup {
    let mut colour: Vec<Option<bool>> = vec![None; datum.rank];
    colour[i] = Some(true);
    let mut queue = VecDeque::from([i]);
    while let Some(k) = queue.pop_front() {
        let c = colour[k].expect("coloured before queued");
        for n in datum.neighbours(k) {
            match colour[n] {
                None => {
                    colour[n] = Some(!c);
                    queue.push_back(n);
                }
                Some(cn) => assert_ne!(cn, c, "Dynkin graph of {} is not bipartite", datum.name()),
            }
        }
    }
    let sinks: Vec<usize> = datum.nodes().filter(|&k| colour[k] == Some(true)).collect();
    let sources: Vec<usize> = datum.nodes().filter(|&k| colour[k] == Some(false)).collect();
    let mut gamma = simple_root(datum.rank, i);
    for &j in &sources {
        gamma[j] -= datum.a(j, i);
    }
    CoxeterSetup { sinks, sources, gamma }
}

impl CoxeterSetup {
    /// `τ`: every sink reflection, then every source reflection.
    pub fn word(&self) -> Vec<usize> {
        self.sinks.iter().chain(&self.sources).copied().collect()
    }

    pub fn is_sink(&self, j: usize) -> bool {
        self.sinks.contains(&j)
    }

    /// `τ^k(γ_i)` for `k = 0..=max_k`.
    pub fn orbit(&self, datum: &CartanDatum, max_k: usize) -> Vec<RootVector> {
        let word = self.word();
        let mut out = vec![self.gamma.clone()];
        for _ in 0..max_k {
            let next = apply_word(datum, &word, out.last().expect("nonempty"));
            out.push(next);
        }
        out
    }
}

/// `v_ij^(r)` through the Coxeter orbit of `γ_i`.
pub fn vij_via_coxeter(datum: &CartanDatum, i: usize, j: usize, r: i64) -> i64 {
    let setup = coxeter_setup(datum, i);
    vij_from_setup(datum, &setup, j, r)
}

fn vij_from_setup(datum: &CartanDatum, setup: &CoxeterSetup, j: usize, r: i64) -> i64 {
    let k = match (setup.is_sink(j), r % 2 == 0) {
        (true, false) if r >= 1 => (r - 1) / 2,
        (false, true) if r >= 2 => (r - 2) / 2,
        _ => return 0,
    };
    let beta = &setup.orbit(datum, k as usize)[k as usize];
    beta[j]
}

/// Outcome of the Coxeter-element positivity check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FujHerReport {
    /// `(i, r)` with no `j` such that `v_ij^(r) > 0`, `1 ≤ r ≤ h∨ − 1`.
    pub uncovered: Vec<(usize, i64)>,
    /// `(i, j, r, coxeter, q_cartan)` where the two computations disagree.
    pub mismatches: Vec<(usize, usize, i64, i64, i64)>,
    /// `(i, k)` with `τ^k(γ_i)` not a positive root.
    pub nonpositive: Vec<(usize, usize)>,
}

impl FujHerReport {
    pub fn ok(&self) -> bool {
        self.uncovered.is_empty() && self.mismatches.is_empty() && self.nonpositive.is_empty()
    }
}

pub fn fuj_her_report(qc: &QCartanData) -> Result<FujHerReport> {
    let datum = &qc.datum;
    if !datum.simply_laced {
        return Err(Error::UnsupportedType(format!("{} is not simply laced", datum.name())));
    }
    let h = datum.dual_coxeter;
    let mut report = FujHerReport::default();
    for i in datum.nodes() {
        let setup = coxeter_setup(datum, i);
        let max_k = ((h - 2) / 2).max(0) as usize;
        for (k, beta) in setup.orbit(datum, max_k).iter().enumerate() {
            if beta.iter().any(|&x| x < 0) || beta.iter().all(|&x| x == 0) {
                report.nonpositive.push((i, k));
            }
        }
        for r in 1..h {
            let mut covered = false;
            for j in datum.nodes() {
                let cox = vij_from_setup(datum, &setup, j, r);
                let direct = qc.vij(i, j, r);
                if cox != direct {
                    report.mismatches.push((i, j, r, cox, direct));
                }
                covered |= cox > 0;
            }
            if !covered {
                report.uncovered.push((i, r));
            }
        }
    }
    Ok(report)
}

pub fn verify_fuj_her(qc: &QCartanData) -> Result<bool> {
    Ok(fuj_her_report(qc)?.ok())
}
