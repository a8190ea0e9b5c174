//! Sparse square matrices over the rationals and over rational functions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::poly::Poly;
use super::ratfn::RatFn;
use crate::rational::{q_int, Q};

/// Sparse vector indexed by basis position.
pub type QVec = BTreeMap<usize, Q>;

/// Sparse square matrix with exact rational entries, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMat {
    dim: usize,
    rows: Vec<BTreeMap<usize, Q>>,
}

impl QMat {
    pub fn zero(dim: usize) -> Self {
        QMat { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, q_int(1));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.rows[r].get(&c).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        if v.is_zero() {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, v);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Q) {
        if v.is_zero() {
            return;
        }
        let slot = self.rows[r].entry(c).or_insert_with(Q::zero);
        *slot += v;
        if slot.is_zero() {
            self.rows[r].remove(&c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    /// Nonzero entries `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn scale(&self, s: &Q) -> QMat {
        if s.is_zero() {
            return QMat::zero(self.dim);
        }
        QMat {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_at(r, c, v);
        }
        out
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_at(r, c, &-v.clone());
        }
        out
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.dim, other.dim);
        let mut out = QMat::zero(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.rows[*k] {
                    *acc.entry(*c).or_insert_with(Q::zero) += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[r] = acc;
        }
        out
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &QMat) -> QMat {
        self.mul(other).sub(&other.mul(self))
    }

    /// `self·other + other·self`.
    pub fn anticommutator(&self, other: &QMat) -> QMat {
        self.mul(other).add(&other.mul(self))
    }

    /// Kronecker product; basis `(a, b)` sits at position `a·dim(other) + b`.
    pub fn kron(&self, other: &QMat) -> QMat {
        let n = other.dim;
        let mut out = QMat::zero(self.dim * n);
        for (r1, c1, a) in self.entries() {
            for (r2, c2, b) in other.entries() {
                out.set(r1 * n + r2, c1 * n + c2, a * b);
            }
        }
        out
    }

    pub fn apply(&self, v: &QVec) -> QVec {
        let mut out = QVec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = Q::zero();
            for (c, a) in row {
                if let Some(x) = v.get(c) {
                    acc += a * x;
                }
            }
            if !acc.is_zero() {
                out.insert(r, acc);
            }
        }
        out
    }

    /// Flattened entries, for linear algebra on matrix space.
    pub fn flatten(&self) -> QVec {
        self.entries().map(|(r, c, v)| (r * self.dim + c, v.clone())).collect()
    }

    pub fn from_flat(dim: usize, v: &QVec) -> QMat {
        let mut m = QMat::zero(dim);
        for (k, x) in v {
            m.set(k / dim, k % dim, x.clone());
        }
        m
    }
}

impl fmt::Display for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> =
                (0..self.dim).map(|c| crate::rational::fmt_q(&self.get(r, c))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Sparse square matrix of rational functions of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), RatFn>,
}

impl RatMatrix {
    pub fn zero(dim: usize) -> Self {
        RatMatrix { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, RatFn::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, r: usize, c: usize, f: RatFn) {
        if f.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), f);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> RatFn {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(RatFn::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RatFn)> {
        self.entries.iter().map(|((r, c), f)| (*r, *c, f))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_l P_l(u) M_l / den(u)`, reduced entrywise.
    pub fn from_combination(dim: usize, terms: &[(Poly, QMat)], den: &Poly) -> RatMatrix {
        let mut nums: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for (p, m) in terms {
            for (r, c, v) in m.entries() {
                let slot = nums.entry((r, c)).or_default();
                *slot = &*slot + &p.scale(v);
            }
        }
        let mut out = RatMatrix::zero(dim);
        for ((r, c), num) in nums {
            out.set(r, c, RatFn::new(num, den.clone()));
        }
        out
    }

    /// Matrices `M_0, …, M_{n−1}` with `self = Σ_k M_k u^{−k}` at infinity.
    pub fn expand_at_infinity(&self, n: usize) -> Vec<QMat> {
        let mut out = vec![QMat::zero(self.dim); n];
        for (r, c, f) in self.entries() {
            for (k, v) in f.expand_at_infinity(n).into_iter().enumerate() {
                out[k].set(r, c, v);
            }
        }
        out
    }

    /// `self · v` for a constant vector `v`.
    pub fn apply(&self, v: &QVec) -> BTreeMap<usize, RatFn> {
        let mut out: BTreeMap<usize, RatFn> = BTreeMap::new();
        for (r, c, f) in self.entries() {
            if let Some(x) = v.get(&c) {
                let slot = out.entry(r).or_insert_with(RatFn::zero);
                *slot = &*slot + &f.scale(x);
            }
        }
        out.retain(|_, f| !f.is_zero());
        out
    }

    pub fn map_entries(&self, mut f: impl FnMut(usize, usize, &RatFn) -> RatFn) -> RatMatrix {
        let mut out = RatMatrix::zero(self.dim);
        for (r, c, x) in self.entries() {
            out.set(r, c, f(r, c, x));
        }
        out
    }
}
