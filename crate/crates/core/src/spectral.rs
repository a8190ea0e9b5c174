//! Spectral points, root multisets and Drinfeld tuples.
//!
//! A point of the spectral plane is an orbit label together with an exact
//! rational offset in units of `ℏ`. The label `"0"` is the rational line
//! through the origin; any other label stands for a generic base point, so
//! points in distinct orbits never coincide after rational shifts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::rational::{fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit(String);

impl Orbit {
    pub fn rational() -> Self {
        Orbit("0".into())
    }

    pub fn new(label: impl Into<String>) -> Self {
        let label = label.into();
        if label.is_empty() || label == "-0" {
            return Self::rational();
        }
        Orbit(label)
    }

    pub fn label(&self) -> &str {
        &self.0
    }

    pub fn is_rational(&self) -> bool {
        self.0 == "0"
    }

    /// The orbit containing `−z` for `z` in this orbit.
    pub fn neg(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        match self.0.strip_prefix('-') {
            Some(rest) => Orbit(rest.to_string()),
            None => Orbit(format!("-{}", self.0)),
        }
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectralPoint {
    pub orbit: Orbit,
    pub offset: Q,
}

impl SpectralPoint {
    pub fn new(orbit: Orbit, offset: Q) -> Self {
        SpectralPoint { orbit, offset }
    }

    /// A point on the rational line.
    pub fn rational(offset: Q) -> Self {
        SpectralPoint { orbit: Orbit::rational(), offset }
    }

    pub fn shift(&self, by: &Q) -> Self {
        SpectralPoint { orbit: self.orbit.clone(), offset: &self.offset + by }
    }

    pub fn neg(&self) -> Self {
        SpectralPoint { orbit: self.orbit.neg(), offset: -self.offset.clone() }
    }
}

impl fmt::Display for SpectralPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orbit.is_rational() {
            write!(f, "{}", fmt_q(&self.offset))
        } else if self.offset.is_zero() {
            write!(f, "{}", self.orbit)
        } else if self.offset < Q::zero() {
            write!(f, "{}{}", self.orbit, fmt_q(&self.offset))
        } else {
            write!(f, "{}+{}", self.orbit, fmt_q(&self.offset))
        }
    }
}

pub type PointSet = BTreeSet<SpectralPoint>;

pub fn shift_set(set: &PointSet, by: &Q) -> PointSet {
    set.iter().map(|p| p.shift(by)).collect()
}

pub fn neg_set(set: &PointSet) -> PointSet {
    set.iter().map(SpectralPoint::neg).collect()
}

/// Rational points `{x/2 : x ∈ ks}`, a common shape for pole sets.
pub fn half_points<I: IntoIterator<Item = i64>>(ks: I) -> PointSet {
    ks.into_iter().map(|k| SpectralPoint::rational(crate::rational::half(k))).collect()
}

/// Finite multiset of spectral points; also the root multiset of a monic
/// polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PoleMultiset {
    mult: BTreeMap<SpectralPoint, u64>,
}

impl PoleMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_points<I: IntoIterator<Item = SpectralPoint>>(points: I) -> Self {
        let mut m = Self::new();
        for p in points {
            m.insert(p, 1);
        }
        m
    }

    pub fn insert(&mut self, p: SpectralPoint, m: u64) {
        if m > 0 {
            *self.mult.entry(p).or_insert(0) += m;
        }
    }

    pub fn multiplicity(&self, p: &SpectralPoint) -> u64 {
        self.mult.get(p).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Total count with multiplicity (the degree of the polynomial).
    pub fn degree(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpectralPoint, u64)> {
        self.mult.iter().map(|(p, m)| (p, *m))
    }

    pub fn support(&self) -> PointSet {
        self.mult.keys().cloned().collect()
    }

    pub fn shift(&self, by: &Q) -> Self {
        Self { mult: self.mult.iter().map(|(p, m)| (p.shift(by), *m)).collect() }
    }

    /// Multiset sum (product of the monic polynomials).
    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.insert(p.clone(), m);
        }
        out
    }

    pub fn orbits(&self) -> BTreeSet<Orbit> {
        self.mult.keys().map(|p| p.orbit.clone()).collect()
    }
}

impl FromIterator<(SpectralPoint, u64)> for PoleMultiset {
    fn from_iter<I: IntoIterator<Item = (SpectralPoint, u64)>>(iter: I) -> Self {
        let mut m = Self::new();
        for (p, k) in iter {
            m.insert(p, k);
        }
        m
    }
}

impl fmt::Display for PoleMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (p, m)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p} ↦ {m}")?;
        }
        write!(f, "}}")
    }
}

/// Roots of the Drinfeld polynomials `P_i(u)`, one multiset per node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DrinfeldTuple {
    nodes: Vec<PoleMultiset>,
}

impl DrinfeldTuple {
    /// The trivial tuple: every `P_i = 1`.
    pub fn trivial(rank: usize) -> Self {
        DrinfeldTuple { nodes: vec![PoleMultiset::new(); rank] }
    }

    /// `P_j(u) = u − a`, all other polynomials trivial.
    pub fn fundamental(rank: usize, j: usize, a: SpectralPoint) -> Self {
        let mut t = Self::trivial(rank);
        t.add_root(j, a, 1);
        t
    }

    pub fn from_nodes(nodes: Vec<PoleMultiset>) -> Self {
        DrinfeldTuple { nodes }
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn add_root(&mut self, node: usize, a: SpectralPoint, mult: u64) {
        self.nodes[node].insert(a, mult);
    }

    pub fn node(&self, i: usize) -> &PoleMultiset {
        &self.nodes[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &PoleMultiset)> {
        self.nodes.iter().enumerate()
    }

    pub fn is_trivial(&self) -> bool {
        self.nodes.iter().all(PoleMultiset::is_empty)
    }

    pub fn shift(&self, by: &Q) -> Self {
        DrinfeldTuple { nodes: self.nodes.iter().map(|m| m.shift(by)).collect() }
    }

    /// Node-wise product of Drinfeld polynomials.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        DrinfeldTuple {
            nodes: self.nodes.iter().zip(&other.nodes).map(|(a, b)| a.sum(b)).collect(),
        }
    }

    pub fn orbits(&self) -> BTreeSet<Orbit> {
        self.nodes.iter().flat_map(|m| m.orbits()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q_frac, q_int};

    #[test]
    fn orbit_negation() {
        let z = Orbit::rational();
        assert_eq!(z.neg(), z);
        let g = Orbit::new("g");
        assert_eq!(g.neg().label(), "-g");
        assert_eq!(g.neg().neg(), g);
        assert_eq!(Orbit::new("-0"), z);
    }

    #[test]
    fn points_shift_and_negate() {
        let p = SpectralPoint::new(Orbit::new("g"), q_frac(1, 2));
        assert_eq!(p.shift(&q_int(1)).offset, q_frac(3, 2));
        assert_eq!(p.neg().neg(), p);
        assert_ne!(p, SpectralPoint::rational(q_frac(1, 2)));
        assert_eq!(p.to_string(), "g+1/2");
        assert_eq!(p.neg().to_string(), "-g-1/2");
        assert_eq!(SpectralPoint::rational(q_frac(-3, 2)).to_string(), "-3/2");
    }

    #[test]
    fn multiset_operations() {
        let a = SpectralPoint::rational(q_int(0));
        let b = SpectralPoint::rational(q_int(1));
        let m = PoleMultiset::from_points([a.clone(), a.clone(), b.clone()]);
        assert_eq!(m.multiplicity(&a), 2);
        assert_eq!(m.degree(), 3);
        assert_eq!(m.support().len(), 2);
        let s = m.shift(&q_int(1));
        assert_eq!(s.multiplicity(&b), 2);
        assert_eq!(m.sum(&s).degree(), 6);
    }

    #[test]
    fn drinfeld_tuple_product() {
        let p = DrinfeldTuple::fundamental(2, 0, SpectralPoint::rational(q_int(0)));
        let q = DrinfeldTuple::fundamental(2, 1, SpectralPoint::rational(q_int(3)));
        let pq = p.product(&q);
        assert_eq!(pq.node(0).degree(), 1);
        assert_eq!(pq.node(1).degree(), 1);
        assert!(DrinfeldTuple::trivial(3).is_trivial());
    }
}
