//! Pole sets, maximal chains and dominant weights read off explicit modules.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::matrix::{QVec, RatMatrix};
use super::module::ExplicitModule;
use super::poly::Poly;
use super::ratfn::RatFn;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q_int, Q};
use crate::spectral::{PointSet, PoleMultiset, SpectralPoint};

/// Pole locations of a set of rational functions with the maximal order seen.
#[derive(Default)]
struct PoleCollector {
    cache: HashMap<Poly, Vec<(Q, u32)>>,
}

impl PoleCollector {
    fn roots(&mut self, den: &Poly) -> Result<Vec<(Q, u32)>> {
        if let Some(r) = self.cache.get(den) {
            return Ok(r.clone());
        }
        let r = den.rational_roots()?;
        self.cache.insert(den.clone(), r.clone());
        Ok(r)
    }

    fn poles<'a>(&mut self, fs: impl Iterator<Item = &'a RatFn>) -> Result<BTreeMap<Q, u32>> {
        let mut out: BTreeMap<Q, u32> = BTreeMap::new();
        for f in fs {
            for (b, m) in self.roots(f.den())? {
                let slot = out.entry(b).or_insert(0);
                *slot = (*slot).max(m);
            }
        }
        Ok(out)
    }

    fn matrix_poles(&mut self, m: &RatMatrix) -> Result<BTreeMap<Q, u32>> {
        self.poles(m.entries().map(|(_, _, f)| f))
    }
}

fn to_multiset(poles: &BTreeMap<Q, u32>) -> PoleMultiset {
    poles.iter().map(|(b, m)| (SpectralPoint::rational(b.clone()), u64::from(*m))).collect()
}

fn describe(poles: &BTreeMap<Q, u32>) -> String {
    let parts: Vec<String> = poles.iter().map(|(b, m)| format!("{}^{m}", fmt_q(b))).collect();
    format!("{{{}}}", parts.join(", "))
}

/// `σ_i(V)` with pole orders, checking that `ξ_i`, `x_i^+` and `x_i^−`
/// share the same poles with the same orders.
pub fn poles_of_module(module: &ExplicitModule, i: usize) -> Result<PoleMultiset> {
    let mut pc = PoleCollector::default();
    let xi = pc.matrix_poles(&module.xi[i])?;
    let xp = pc.matrix_poles(&module.xp[i])?;
    let xm = pc.matrix_poles(&module.xm[i])?;
    if xi != xp || xi != xm {
        return Err(Error::PoleMismatch {
            node: i,
            detail: format!("ξ: {}, x+: {}, x−: {}", describe(&xi), describe(&xp), describe(&xm)),
        });
    }
    Ok(to_multiset(&xi))
}

/// One lowering step `X^−_{k; b, n}` of a maximal chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub node: usize,
    pub pole: SpectralPoint,
    pub order_index: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MaximalChain {
    pub steps: Vec<ChainStep>,
}

fn common_weight(module: &ExplicitModule, v: &QVec) -> Option<Vec<i64>> {
    let mut it = v.keys().map(|&k| &module.eps_weights[k]);
    let first = it.next()?.clone();
    it.all(|w| *w == first).then_some(first)
}

/// Greedy maximal chain from the highest-weight vector (basis vector 0).
///
/// At each step the lowest node whose lowering current acts nontrivially is
/// used, at its largest pole `b`; the next vector is the leading coefficient
/// of the Laurent expansion of `x_k^−(u) v` at `u = b`.
pub fn maximal_chain(module: &ExplicitModule) -> Result<MaximalChain> {
    let mut pc = PoleCollector::default();
    let mut v: QVec = QVec::from([(0, q_int(1))]);
    let top = module.h_weight(0);
    let mut chain = MaximalChain::default();
    'outer: loop {
        for k in 0..module.rank() {
            let image = module.xm[k].apply(&v);
            if image.is_empty() {
                continue;
            }
            let poles = pc.poles(image.values())?;
            let (b, _) = poles.iter().next_back().expect("nonzero image has a pole");
            let mut order = 0;
            let mut next = QVec::new();
            for (row, f) in &image {
                let (o, lead) = f.pole_at(b);
                if o > order {
                    order = o;
                    next.clear();
                }
                if o == order && o > 0 && !lead.is_zero() {
                    next.insert(*row, lead);
                }
            }
            chain.steps.push(ChainStep {
                node: k,
                pole: SpectralPoint::rational(b.clone()),
                order_index: order - 1,
            });
            v = next;
            if chain.steps.len() > module.dim * module.rank() + 1 {
                break 'outer;
            }
            continue 'outer;
        }
        break;
    }
    let Some(eps) = common_weight(module, &v) else {
        return Err(Error::ChainStuck {
            steps: chain.steps.len(),
            detail: "chain vector is not a weight vector".into(),
        });
    };
    let rank = module.rank();
    let low: Vec<i64> = (0..rank).map(|i| eps[i] - eps[i + 1]).collect();
    let star = &module.datum.star;
    let expected: Vec<i64> = (0..rank).map(|i| -top[star[i]]).collect();
    if low != expected {
        return Err(Error::ChainStuck {
            steps: chain.steps.len(),
            detail: format!("stopped at weight {low:?}, lowest weight is {expected:?}"),
        });
    }
    Ok(chain)
}

/// Roots of `Π_{s : k_s = i} (u − b_s)`.
pub fn baxter_from_chain(chain: &MaximalChain, i: usize) -> PoleMultiset {
    PoleMultiset::from_points(chain.steps.iter().filter(|s| s.node == i).map(|s| s.pole.clone()))
}

/// Maximum bipartite matching by augmenting paths; `adj[l]` lists the right
/// vertices adjacent to left vertex `l`.
fn perfect_matching(adj: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    fn augment(l: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none() || augment(owner[r].unwrap(), adj, seen, owner) {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }
    if adj.len() != right {
        return None;
    }
    let mut owner: Vec<Option<usize>> = vec![None; right];
    for l in 0..adj.len() {
        let mut seen = vec![false; right];
        if !augment(l, adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut partner = vec![0; adj.len()];
    for (r, l) in owner.iter().enumerate() {
        partner[l.expect("perfect")] = r;
    }
    Some(partner)
}

fn expand(roots: Vec<(Q, u32)>) -> Vec<Q> {
    roots.into_iter().flat_map(|(b, m)| std::iter::repeat_n(b, m as usize)).collect()
}

/// If `μ(u) = P(u + d)/P(u)` for a monic polynomial `P`, returns the roots
/// of `P`; `None` when `μ` is not of that form.
pub fn dominant_polynomial(mu: &RatFn, d: i64) -> Result<Option<PoleMultiset>> {
    let (num, den) = (mu.num(), mu.den());
    if num.degree() != den.degree() {
        return Err(Error::NotSameDegree {
            num: num.degree().unwrap_or(0),
            den: den.degree().unwrap_or(0),
        });
    }
    if num.lead() != den.lead() {
        return Ok(None);
    }
    let tops = expand(den.rational_roots()?);
    let bottoms = expand(num.rational_roots()?);
    let step = q_int(d);
    // den root b pairs with num root b − ℓd, ℓ > 0.
    let gap = |b: &Q, c: &Q| -> Option<i64> {
        let l = (b - c) / &step;
        (l.is_integer() && l > Q::zero()).then(|| l.to_integer().try_into().expect("small gap"))
    };
    let adj: Vec<Vec<usize>> = tops
        .iter()
        .map(|b| (0..bottoms.len()).filter(|&k| gap(b, &bottoms[k]).is_some()).collect())
        .collect();
    let Some(partner) = perfect_matching(&adj, bottoms.len()) else {
        return Ok(None);
    };
    let mut out = PoleMultiset::new();
    for (t, b) in tops.iter().enumerate() {
        let l = gap(b, &bottoms[partner[t]]).expect("matched pair");
        for s in 0..l {
            out.insert(SpectralPoint::rational(b - q_int(s * d)), 1);
        }
    }
    Ok(Some(out))
}

/// `σ_i(V) = ∪ Z(P)` over the `i`-dominant eigenvalues `P(u+d_i)/P(u)` of
/// `ξ_i(u)`.
pub fn sigma_from_dominant_weights(module: &ExplicitModule, i: usize) -> Result<PointSet> {
    let d = module.datum.d(i);
    let mut out = PointSet::new();
    let mut seen = std::collections::HashSet::new();
    for mu in &module.xi_eigen[i] {
        if !seen.insert(mu.clone()) {
            continue;
        }
        if let Some(p) = dominant_polynomial(mu, d)? {
            out.extend(p.support());
        }
    }
    Ok(out)
}

/// Degree of the common denominator of all entries of `m`.
fn common_denominator_degree(m: &RatMatrix) -> usize {
    let mut l = Poly::one();
    for (_, _, f) in m.entries() {
        let g = l.gcd(f.den());
        l = &l * &f.den().divrem(&g).0;
    }
    l.degree().unwrap_or(0)
}

/// Reduced row echelon basis of a subspace of `Q^dim`.
#[derive(Default)]
struct Span {
    rows: Vec<(usize, QVec)>,
}

impl Span {
    /// Adds `v` and returns its reduced form if it enlarged the span.
    fn insert(&mut self, v: &QVec) -> Option<QVec> {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            let Some(c) = v.get(pivot).cloned() else { continue };
            for (k, x) in row {
                let slot = v.entry(*k).or_insert_with(Q::zero);
                *slot -= &c * x;
                if slot.is_zero() {
                    v.remove(k);
                }
            }
        }
        let (&pivot, lead) = v.iter().next()?;
        let inv = lead.recip();
        for x in v.values_mut() {
            *x *= &inv;
        }
        self.rows.push((pivot, v.clone()));
        Some(v)
    }
}

/// Dimension of the submodule generated by basis vector 0.
///
/// Vector 0 is a highest-weight vector, so this is the span of its images
/// under words in the coefficients `x_{k,r}^−`. A rational current whose
/// entries share a denominator of degree `D` has all its coefficients in the
/// span of the first `D`, which bounds the coefficients needed.
pub fn submodule_from_top(module: &ExplicitModule) -> usize {
    let lowering: Vec<_> = module
        .xm
        .iter()
        .flat_map(|m| m.expand_at_infinity(common_denominator_degree(m) + 1).into_iter().skip(1))
        .filter(|x| !x.is_zero())
        .collect();
    let mut span = Span::default();
    let mut queue = vec![span.insert(&QVec::from([(0, q_int(1))])).expect("nonzero")];
    while let Some(v) = queue.pop() {
        for x in &lowering {
            if let Some(w) = span.insert(&x.apply(&v)) {
                queue.push(w);
            }
        }
    }
    span.rows.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explicit::tensor::tensor_product;
    use crate::rational::q_frac;

    fn pt(n: i64, d: i64) -> SpectralPoint {
        SpectralPoint::rational(q_frac(n, d))
    }

    fn ratio(num: &[Q], den: &[Q]) -> RatFn {
        RatFn::new(Poly::from_roots(num), Poly::from_roots(den))
    }

    #[test]
    fn dominance_examples() {
        let p = dominant_polynomial(&ratio(&[q_int(-1)], &[q_int(0)]), 1).unwrap();
        assert_eq!(p, Some(PoleMultiset::from_points([pt(0, 1)])));
        // (u + 1)/(u − 1) = P(u+1)/P(u) with P = u(u − 1)
        let p = dominant_polynomial(&ratio(&[q_int(-1)], &[q_int(1)]), 1).unwrap();
        assert_eq!(p, Some(PoleMultiset::from_points([pt(0, 1), pt(1, 1)])));
        assert_eq!(dominant_polynomial(&ratio(&[q_int(1)], &[q_int(-1)]), 1).unwrap(), None);
        assert_eq!(dominant_polynomial(&RatFn::one(), 1).unwrap(), Some(PoleMultiset::new()));
        let bad = RatFn::new(Poly::linear(&q_int(0)), Poly::one());
        assert!(matches!(dominant_polynomial(&bad, 1), Err(Error::NotSameDegree { .. })));
    }

    #[test]
    fn fundamental_poles_chain_and_weights() {
        let m = ExplicitModule::sl2_evaluation(1, &q_frac(3, 2));
        let chain = maximal_chain(&m).unwrap();
        assert_eq!(chain.steps, vec![ChainStep { node: 0, pole: pt(3, 2), order_index: 0 }]);
        assert_eq!(baxter_from_chain(&chain, 0), PoleMultiset::from_points([pt(3, 2)]));

        let t = ExplicitModule::trivial(3);
        assert!(maximal_chain(&t).unwrap().steps.is_empty());
        assert!(poles_of_module(&t, 0).unwrap().is_empty());
    }

    #[test]
    fn evaluation_module_poles() {
        for r in 1..=4usize {
            let a = q_frac(1, 3);
            let m = ExplicitModule::sl2_evaluation(r, &a);
            let expect: PoleMultiset =
                (0..r as i64).map(|i| (SpectralPoint::rational(&a - q_int(i)), 1)).collect();
            assert_eq!(poles_of_module(&m, 0).unwrap(), expect);
        }
    }

    #[test]
    fn sl2_tensor_poles() {
        let a = ExplicitModule::sl2_evaluation(1, &q_int(0));
        let b = ExplicitModule::sl2_evaluation(1, &q_int(1));
        let t = tensor_product(&a, &b).unwrap();
        assert_eq!(poles_of_module(&t, 0).unwrap().support(), [pt(0, 1), pt(1, 1)].into());
    }

    #[test]
    fn submodule_of_sl2_tensors() {
        let a = ExplicitModule::sl2_evaluation(1, &q_int(0));
        assert_eq!(submodule_from_top(&a), 2);
        // L_1(0) ⊗ L_1(b) fails to be highest weight for exactly one b.
        let dims: Vec<usize> = [-1, 0, 1]
            .iter()
            .map(|&b| submodule_from_top(&tensor_product(&a, &ExplicitModule::sl2_evaluation(1, &q_int(b))).unwrap()))
            .collect();
        assert_eq!(dims.iter().filter(|&&d| d < 4).count(), 1, "{dims:?}");
    }

    #[test]
    fn pole_mismatch_is_reported() {
        let mut m = ExplicitModule::sl2_evaluation(1, &q_int(0));
        m.xp[0].set(0, 1, RatFn::simple_pole(&q_int(7)));
        assert!(matches!(poles_of_module(&m, 0), Err(Error::PoleMismatch { .. })));
    }
}
