//! Exact Laurent polynomials in `q` and truncated Taylor windows.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, is_integer, q_int, Q};

/// A Laurent polynomial `Σ c_k q^k` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, q_int(1))
    }

    pub fn monomial(exp: i64, coeff: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `q^exp` with coefficient 1.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, q_int(1))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficients listed from exponent `lowest` upward.
    pub fn from_ints(lowest: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (lowest + k as i64, q_int(c))),
        )
    }

    pub fn add_term(&mut self, exp: i64, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Q::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Q {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(is_integer)
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| is_integer(c) && !c.is_negative())
    }

    /// `p(q^{-1})`.
    pub fn bar(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// `q^k · p(q)`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    /// Value at an integer point `q` (nonzero when negative exponents occur).
    pub fn eval(&self, q: &Q) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.coeffs {
            let pow = if *e >= 0 {
                num_traits::pow(q.clone(), *e as usize)
            } else {
                num_traits::pow(q.recip(), (-*e) as usize)
            };
            acc += c * pow;
        }
        acc
    }

    /// Integer coefficient at `exp`, failing for non-integral coefficients.
    pub fn int_coeff(&self, exp: i64) -> Result<i64> {
        let c = self.coeff(exp);
        if !is_integer(&c) {
            return Err(Error::NegativeCoefficient { what: format!("coefficient {c} of q^{exp}") });
        }
        c.numer().to_i64().ok_or_else(|| Error::Overflow(format!("coefficient of q^{exp}")))
    }

    /// Coefficients as `[exp, num, den]` triples, exponents ascending.
    pub fn to_triples(&self) -> Vec<(i64, BigInt, BigInt)> {
        self.coeffs
            .iter()
            .map(|(e, c)| (*e, c.numer().clone(), c.denom().clone()))
            .collect()
    }

    /// Ordinary polynomial `q^{-min} p(q)` as dense coefficients, with the shift.
    fn to_dense(&self) -> (i64, Vec<Q>) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(0);
        let mut v = vec![Q::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }
}

/// `[n]_q = (q^n − q^{−n}) / (q − q^{−1})`.
pub fn qnum(n: i64) -> LaurentPoly {
    let m = n.abs();
    let sign = if n < 0 { q_int(-1) } else { q_int(1) };
    LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, sign.clone())))
}

/// Quotient `num / den` in the Laurent ring, failing when `den` does not
/// divide `num`.
pub fn exact_div(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    if den.is_zero() {
        return Err(Error::NonExactDivision { num: num.to_string(), den: "0".into() });
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let (nlo, mut n) = num.to_dense();
    let (dlo, d) = den.to_dense();
    // Both dense forms have nonzero constant term, so ordinary long division
    // decides divisibility in the Laurent ring.
    if n.len() < d.len() {
        return Err(Error::NonExactDivision { num: num.to_string(), den: den.to_string() });
    }
    let lead = d.last().expect("nonzero").clone();
    let qlen = n.len() - d.len() + 1;
    let mut quot = vec![Q::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = &n[k + d.len() - 1] / &lead;
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                n[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    if n.iter().any(|c| !c.is_zero()) {
        return Err(Error::NonExactDivision { num: num.to_string(), den: den.to_string() });
    }
    Ok(LaurentPoly::from_terms(
        quot.into_iter().enumerate().map(|(k, c)| (nlo - dlo + k as i64, c)),
    ))
}

impl fmt::Display for LaurentPoly {
    /// `c_k q^k + …` with exponents ascending; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{}", fmt_q(&mag))?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{} q", fmt_q(&mag))?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{} q^{e}", fmt_q(&mag))?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Coefficients `0..=upper` of a Taylor series in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesWindow {
    pub upper: usize,
    pub coeffs: Vec<i64>,
}

impl SeriesWindow {
    /// Coefficient of `q^r`; zero for negative `r`. Panics past the window.
    pub fn get(&self, r: i64) -> i64 {
        if r < 0 {
            return 0;
        }
        assert!(
            (r as usize) <= self.upper,
            "coefficient q^{r} outside window 0..={}",
            self.upper
        );
        self.coeffs[r as usize]
    }

    pub fn try_get(&self, r: i64) -> Option<i64> {
        if r < 0 {
            Some(0)
        } else {
            self.coeffs.get(r as usize).copied()
        }
    }
}

/// Window `0..=n` of the Taylor expansion of `num / (q^{2κ} − q^{−2κ})`.
///
/// Uses `1/(q^{2κ} − q^{−2κ}) = −q^{2κ} Σ_{m≥0} q^{4κm}`. Every coefficient
/// of the product at a negative exponent must vanish.
pub fn series_div_window(num: &LaurentPoly, two_kappa: i64, n: usize) -> Result<SeriesWindow> {
    assert!(two_kappa > 0);
    if !num.is_integral() {
        return Err(Error::NegativeCoefficient { what: format!("series numerator {num}") });
    }
    let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
    let period = 2 * two_kappa;
    for (e, c) in num.terms() {
        let c = c.numer();
        let mut exp = e + two_kappa;
        // Terms with exponent above the window never matter.
        while exp <= n as i64 {
            *acc.entry(exp).or_insert_with(BigInt::zero) -= c;
            exp += period;
        }
    }
    if let Some((&e, _)) = acc.iter().find(|(e, c)| **e < 0 && !c.is_zero()) {
        return Err(Error::NotTaylor { exponent: e });
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for r in 0..=n as i64 {
        let c = acc.get(&r).cloned().unwrap_or_else(BigInt::zero);
        coeffs.push(c.to_i64().ok_or_else(|| Error::Overflow(format!("window coefficient q^{r}")))?);
    }
    Ok(SeriesWindow { upper: n, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;
    use proptest::prelude::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q_pow(1)
    }

    #[test]
    fn qnum_examples() {
        assert_eq!(qnum(1), LaurentPoly::one());
        assert_eq!(qnum(2), LaurentPoly::from_ints(-1, &[1, 0, 1]));
        assert_eq!(qnum(-3), LaurentPoly::from_ints(-2, &[-1, 0, -1, 0, -1]));
        assert!(qnum(0).is_zero());
    }

    #[test]
    fn qnum_matches_defining_ratio() {
        let qq = q();
        let qinv = LaurentPoly::q_pow(-1);
        let den = &qq - &qinv;
        for n in -6..=6 {
            let num = &LaurentPoly::q_pow(n) - &LaurentPoly::q_pow(-n);
            assert_eq!(exact_div(&num, &den).unwrap(), qnum(n), "n = {n}");
        }
    }

    #[test]
    fn exact_div_examples() {
        let num = &LaurentPoly::q_pow(2) - &LaurentPoly::q_pow(-2);
        let den = &LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1);
        assert_eq!(exact_div(&num, &den).unwrap(), qnum(2));

        let num = LaurentPoly::from_ints(0, &[1, 0, 1, 0, 1]);
        let den = LaurentPoly::from_ints(0, &[1, 1, 1]);
        assert_eq!(exact_div(&num, &den).unwrap(), LaurentPoly::from_ints(0, &[1, -1, 1]));

        let num = LaurentPoly::from_ints(0, &[1, 0, 1]);
        let den = LaurentPoly::from_ints(0, &[1, 1]);
        assert!(matches!(exact_div(&num, &den), Err(Error::NonExactDivision { .. })));
        assert!(exact_div(&num, &LaurentPoly::zero()).is_err());
    }

    #[test]
    fn display_ascending() {
        let p = LaurentPoly::from_terms([(2, q_int(-3)), (-1, q_int(1)), (0, q_frac(1, 2))]);
        assert_eq!(p.to_string(), "q^-1 + 1/2 - 3 q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    /// Generic Taylor division `num / den` by coefficient recursion, for
    /// `den` with nonzero constant term. Independent of the geometric-series
    /// route taken by `series_div_window`.
    fn taylor_divide(num: &[i64], den: &[i64], n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n + 1];
        for k in 0..=n {
            let mut acc = num.get(k).copied().unwrap_or(0);
            for j in 1..=k {
                acc -= den.get(j).copied().unwrap_or(0) * out[k - j];
            }
            assert_eq!(acc % den[0], 0);
            out[k] = acc / den[0];
        }
        out
    }

    /// Oracle for `num / (q^{2κ} − q^{−2κ})`: multiply through by `q^{2κ}`
    /// and divide by the ordinary polynomial `q^{4κ} − 1`.
    fn oracle_window(num: &LaurentPoly, two_kappa: i64, n: usize) -> Vec<i64> {
        let shifted = num.shift(two_kappa);
        assert!(shifted.min_exp().unwrap_or(0) >= 0);
        let top = shifted.max_exp().unwrap_or(0).max(0) as usize;
        let nums: Vec<i64> = (0..=top as i64).map(|e| shifted.int_coeff(e).unwrap()).collect();
        let mut den = vec![0i64; (2 * two_kappa + 1) as usize];
        den[0] = -1;
        den[(2 * two_kappa) as usize] = 1;
        taylor_divide(&nums, &den, n)
    }

    #[test]
    fn series_window_examples() {
        let qm = &q() - &LaurentPoly::q_pow(-1);
        // sl2, v_11
        let w = series_div_window(&qm, 2, 4).unwrap();
        assert_eq!(w.coeffs, vec![0, 1, 0, -1, 0]);
        assert_eq!(w.coeffs, oracle_window(&qm, 2, 4));
        // zero numerator
        let w = series_div_window(&LaurentPoly::zero(), 3, 5).unwrap();
        assert_eq!(w.coeffs, vec![0; 6]);
        // sl3, v_11
        let num = &qm * &qnum(2);
        let w = series_div_window(&num, 3, 6).unwrap();
        assert_eq!(w.coeffs, vec![0, 1, 0, 0, 0, -1, 0]);
        assert_eq!(w.coeffs, oracle_window(&num, 3, 6));
    }

    #[test]
    fn series_window_rejects_laurent_tail() {
        // q^{-5}/(q^2 - q^{-2}) = -q^{-3} - ...
        let err = series_div_window(&LaurentPoly::q_pow(-5), 2, 4).unwrap_err();
        assert_eq!(err, Error::NotTaylor { exponent: -3 });
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..=3, prop::collection::vec(-4i64..=4, 0..5))
            .prop_map(|(lo, cs)| LaurentPoly::from_ints(lo, &cs))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn exact_div_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(exact_div(&(&a * &b), &b).unwrap(), a);
        }

        #[test]
        fn window_extension_is_consistent(
            cs in prop::collection::vec(-3i64..=3, 1..6),
            two_kappa in 1i64..6,
            n in 0usize..20,
        ) {
            // Numerators divisible by q - q^{-1} keep the quotient Taylor when
            // the lowest exponent is at least -2κ + 1.
            let num = LaurentPoly::from_ints(-two_kappa + 1, &cs);
            let short = series_div_window(&num, two_kappa, n).unwrap();
            let long = series_div_window(&num, two_kappa, n + 5).unwrap();
            prop_assert_eq!(&short.coeffs[..], &long.coeffs[..=n]);
            prop_assert_eq!(short.coeffs, oracle_window(&num, two_kappa, n));
        }
    }
}
