//! The q-Cartan matrix, its scaled inverse and the coefficients `v_ij^(r)`.

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::laurent::{exact_div, qnum, series_div_window, LaurentPoly, SeriesWindow};

pub type LaurentMatrix = Vec<Vec<LaurentPoly>>;

/// Everything derived from `B(q)` for one Cartan datum.
///
/// Construction runs the integrality, positivity and support checks, so a
/// value of this type is already known to be consistent.
#[derive(Clone, Debug)]
pub struct QCartanData {
    pub datum: CartanDatum,
    pub b: LaurentMatrix,
    pub c: LaurentMatrix,
    /// `v[i][j]` holds the window `0..=4κ` of `v_ij(q)`.
    pub v: Vec<Vec<SeriesWindow>>,
    p: LaurentMatrix,
}

/// `B(q)_ij = [d_i a_ij]_q`.
pub fn qcartan_matrix(datum: &CartanDatum) -> LaurentMatrix {
    datum
        .nodes()
        .map(|i| datum.nodes().map(|j| qnum(datum.sym(i, j))).collect())
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination; every division is
/// exact by Sylvester's identity.
pub fn determinant(m: &LaurentMatrix) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact_div(&t, &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { -&d } else { d })
}

fn minor(m: &LaurentMatrix, row: usize, col: usize) -> LaurentMatrix {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// `C(q) = [2κ]_q B(q)^{-1}` as `[2κ]_q adj(B)/det(B)`, with every entry
/// required to be a Laurent polynomial with nonnegative integer coefficients.
pub fn compute_c(datum: &CartanDatum, b: &LaurentMatrix) -> Result<LaurentMatrix> {
    let n = datum.rank;
    let det = determinant(b)?;
    let scale = qnum(datum.two_kappa);
    let mut c = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // adj(B)_ij = (-1)^{i+j} det(minor_ji)
            let mut cof = determinant(&minor(b, j, i))?;
            if (i + j) % 2 == 1 {
                cof = -&cof;
            }
            let entry = exact_div(&(&scale * &cof), &det)?;
            if !entry.has_nonnegative_integer_coeffs() {
                return Err(Error::NegativeCoefficient {
                    what: format!("c_{}{}(q) = {entry} for {}", i + 1, j + 1, datum.name()),
                });
            }
            c[i][j] = entry;
        }
    }
    Ok(c)
}

impl QCartanData {
    pub fn new(datum: &CartanDatum) -> Result<Self> {
        let b = qcartan_matrix(datum);
        let c = compute_c(datum, &b)?;
        let n = datum.rank;
        let window = 2 * datum.two_kappa as usize;
        let qm = &LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1);
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let num = &(&qm * &qnum(datum.d(j))) * &c[i][j];
                row.push(series_div_window(&num, datum.two_kappa, window)?);
            }
            v.push(row);
        }
        let mut qc = QCartanData { datum: datum.clone(), b, c, v, p: Vec::new() };
        let mut p = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(qc.compute_pij(i, j)?);
            }
            p.push(row);
        }
        qc.p = p;
        Ok(qc)
    }

    pub fn from_type(family: crate::cartan::Family, rank: usize) -> Result<Self> {
        Self::new(&CartanDatum::new(family, rank)?)
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn two_kappa(&self) -> i64 {
        self.datum.two_kappa
    }

    /// `v_ij^(r)`; zero for negative `r`, panics outside `0..=4κ`.
    pub fn vij(&self, i: usize, j: usize, r: i64) -> i64 {
        self.v[i][j].get(r)
    }

    pub fn vij_window(&self, i: usize, j: usize) -> &SeriesWindow {
        &self.v[i][j]
    }

    pub fn pij(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.p[i][j]
    }

    fn compute_pij(&self, i: usize, j: usize) -> Result<LaurentPoly> {
        let d = &self.datum;
        let tk = d.two_kappa;
        let (di, dj) = (d.d(i), d.d(j));
        let one = LaurentPoly::one();
        let left = &LaurentPoly::q_pow(2 * dj) - &one;
        let right = &self.c[i][d.star[j]] + &self.c[i][j].shift(tk);
        let den = &LaurentPoly::q_pow(2 * tk) - &one;
        let p = exact_div(&(&left * &right), &den)?;
        let label = || format!("p_{}{} for {}", i + 1, j + 1, d.name());
        if !p.has_nonnegative_integer_coeffs() {
            return Err(Error::NegativeCoefficient { what: format!("{} = {p}", label()) });
        }
        let (lo, hi) = (di - dj, tk - di - dj);
        for (e, _) in p.terms() {
            if !(lo..=hi).contains(&-e) {
                return Err(Error::SupportViolation {
                    what: format!("{} has a term q^{e} outside q^-{hi}..q^-{lo}", label()),
                });
            }
        }
        for r in lo..=hi {
            let coeff = p.int_coeff(-r)?;
            let v = self.vij(i, j, r + dj);
            if coeff != v {
                return Err(Error::SupportViolation {
                    what: format!("{}: coefficient of q^-{r} is {coeff}, v^({}) = {v}", label(), r + dj),
                });
            }
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    #[test]
    fn b_matrix_examples() {
        let sl2 = CartanDatum::new(Family::A, 1).unwrap();
        assert_eq!(qcartan_matrix(&sl2), vec![vec![qnum(2)]]);
        let sl3 = CartanDatum::new(Family::A, 2).unwrap();
        let b = qcartan_matrix(&sl3);
        assert_eq!(b[0][1], LaurentPoly::from_ints(0, &[-1]));
        assert_eq!(b[1][1], qnum(2));
        let b2 = CartanDatum::new(Family::B, 2).unwrap();
        let b = qcartan_matrix(&b2);
        assert_eq!(b, vec![vec![qnum(4), qnum(-2)], vec![qnum(-2), qnum(2)]]);
    }

    #[test]
    fn c_matrix_examples() {
        let qc = QCartanData::from_type(Family::A, 1).unwrap();
        assert_eq!(qc.c, vec![vec![LaurentPoly::one()]]);
        let qc = QCartanData::from_type(Family::A, 2).unwrap();
        assert_eq!(qc.c[0][0], qnum(2));
        assert_eq!(qc.c[0][1], LaurentPoly::one());
    }

    #[test]
    fn sln_c_closed_form() {
        for n in 2..=7usize {
            let qc = QCartanData::from_type(Family::A, n - 1).unwrap();
            for i in 1..n {
                for j in 1..=i {
                    let expect = &qnum((n - i) as i64) * &qnum(j as i64);
                    assert_eq!(qc.c[i - 1][j - 1], expect, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn window_examples() {
        let qc = QCartanData::from_type(Family::A, 1).unwrap();
        assert_eq!(qc.vij_window(0, 0).coeffs, vec![0, 1, 0, -1, 0]);
        let qc = QCartanData::from_type(Family::A, 2).unwrap();
        assert_eq!(qc.vij_window(0, 1).coeffs, vec![0, 0, 1, 0, -1, 0, 0]);
        assert_eq!(qc.vij_window(0, 0).coeffs, vec![0, 1, 0, 0, 0, -1, 0]);
    }

    #[test]
    fn p_examples() {
        let qc = QCartanData::from_type(Family::A, 1).unwrap();
        assert_eq!(qc.pij(0, 0), &LaurentPoly::one());
        let qc = QCartanData::from_type(Family::A, 2).unwrap();
        assert_eq!(qc.pij(0, 1), &LaurentPoly::q_pow(-1));
    }

    #[test]
    fn determinant_small() {
        let m = vec![
            vec![LaurentPoly::zero(), LaurentPoly::one()],
            vec![LaurentPoly::one(), LaurentPoly::zero()],
        ];
        assert_eq!(determinant(&m).unwrap(), -&LaurentPoly::one());
    }
}
