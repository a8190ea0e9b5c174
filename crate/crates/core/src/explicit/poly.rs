//! Dense univariate polynomials in `u` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, q_int, Q};

/// Coefficients ascending by degree, with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(q_int(1))
    }

    pub fn constant(a: Q) -> Self {
        Self::from_coeffs(vec![a])
    }

    pub fn from_coeffs(c: Vec<Q>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    /// `u − b`.
    pub fn linear(b: &Q) -> Self {
        Self::from_coeffs(vec![-b.clone(), q_int(1)])
    }

    /// `Π (u − b)` over the given roots.
    pub fn from_roots<'a, I: IntoIterator<Item = &'a Q>>(roots: I) -> Self {
        roots.into_iter().fold(Self::one(), |acc, b| &acc * &Self::linear(b))
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn lead(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x * s).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.c.iter().rev().fold(Q::zero(), |acc, a| acc * x + a)
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let lead = d.lead();
        let mut q = vec![Q::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] / &lead;
            if !coef.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] -= &coef * dj;
                }
            }
            q[k] = coef;
        }
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.c.iter().enumerate().skip(1).map(|(k, a)| a * q_int(k as i64)).collect(),
        )
    }

    /// Integer polynomial with the same roots and coprime coefficients.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self.c.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let ints: Vec<BigInt> =
            self.c.iter().map(|a| (a * Q::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        ints.into_iter().map(|a| a / &g).collect()
    }

    /// All roots with multiplicity, failing if some root is not rational.
    pub fn rational_roots(&self) -> Result<Vec<(Q, u32)>> {
        let mut rest = self.clone();
        let mut roots: Vec<(Q, u32)> = Vec::new();
        if rest.is_zero() {
            return Ok(roots);
        }
        let divide_out = |rest: &mut Poly, b: &Q| -> u32 {
            let lin = Poly::linear(b);
            let mut m = 0;
            loop {
                let (q, r) = rest.divrem(&lin);
                if !r.is_zero() {
                    break;
                }
                *rest = q;
                m += 1;
            }
            m
        };
        let zero = Q::zero();
        let m = divide_out(&mut rest, &zero);
        if m > 0 {
            roots.push((zero, m));
        }
        let mut last_q = BigInt::zero();
        loop {
            let deg = rest.degree().unwrap_or(0);
            if deg == 0 {
                break;
            }
            let ints = rest.primitive_integer();
            let lead = ints.last().expect("nonzero").abs();
            // Denominators of rational roots divide the leading coefficient.
            let Some(q) = divisors(&lead).into_iter().find(|q| *q > last_q) else {
                return Err(Error::IrrationalPole { degree: deg });
            };
            let bound = fujiwara_bound(&ints) * &q;
            let mut p = -bound.clone();
            while p <= bound {
                if !p.is_zero() && p.gcd(&q).is_one() && is_root(&ints, &p, &q) {
                    let b = Q::new(p.clone(), q.clone());
                    let m = divide_out(&mut rest, &b);
                    roots.push((b, m));
                }
                p += 1;
            }
            last_q = q;
        }
        roots.sort();
        Ok(roots)
    }
}

/// `Σ a_k p^k q^{n−k} = 0`, i.e. `p/q` is a root.
fn is_root(ints: &[BigInt], p: &BigInt, q: &BigInt) -> bool {
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for a in ints.iter().rev() {
        acc = acc * p + a * &qpow;
        qpow *= q;
    }
    acc.is_zero()
}

/// Positive divisors in increasing order, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Integer upper bound on the moduli of the roots:
/// `2 max_k |a_{n−k}/a_n|^{1/k}`.
fn fujiwara_bound(ints: &[BigInt]) -> BigInt {
    let n = ints.len() - 1;
    let lead = ints[n].abs();
    let mut best = BigInt::zero();
    for k in 1..=n {
        let a = ints[n - k].abs();
        if a.is_zero() {
            continue;
        }
        // smallest t with t^k · lead ≥ a
        let ratio = (&a + &lead - 1u32) / &lead;
        let mut t = match ratio.to_f64() {
            Some(f) if f.is_finite() => BigInt::from(f.powf(1.0 / k as f64).floor() as i64).max(BigInt::zero()),
            _ => BigInt::zero(),
        };
        while num_traits::pow(t.clone(), k) * &lead < a {
            t += 1;
        }
        while t > BigInt::zero() && num_traits::pow(&t - 1, k) * &lead >= a {
            t -= 1;
        }
        best = best.max(t);
    }
    best * 2 + 1
}

impl fmt::Display for Poly {
    /// Descending powers of `u`, e.g. `u^2 - 1/2 u + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate().rev().filter(|(_, a)| !a.is_zero()) {
            let neg = a.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mag = a.abs();
            let coeff = if mag.is_one() && k > 0 { String::new() } else { fmt_q(&mag) };
            match k {
                0 => write!(f, "{coeff}")?,
                1 if coeff.is_empty() => write!(f, "u")?,
                1 => write!(f, "{coeff} u")?,
                _ if coeff.is_empty() => write!(f, "u^{k}")?,
                _ => write!(f, "{coeff} u^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|a| -a.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;
    use proptest::prelude::*;

    #[test]
    fn display() {
        let p = Poly::from_coeffs(vec![q_int(3), q_frac(-1, 2), q_int(1)]);
        assert_eq!(p.to_string(), "u^2 - 1/2 u + 3");
        assert_eq!(Poly::linear(&q_int(2)).scale(&q_int(-1)).to_string(), "-u + 2");
    }

    #[test]
    fn divrem_and_gcd() {
        let a = Poly::from_roots(&[q_int(1), q_int(2), q_frac(1, 2)]);
        let b = Poly::from_roots(&[q_int(2), q_int(-3)]);
        assert_eq!(a.gcd(&b), Poly::linear(&q_int(2)));
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn rational_roots_examples() {
        let roots = [q_int(0), q_int(0), q_frac(5, 2), q_int(-3), q_frac(-7, 4), q_frac(5, 2)];
        let p = Poly::from_roots(&roots).scale(&q_frac(3, 7));
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![(q_int(-3), 1), (q_frac(-7, 4), 1), (q_int(0), 2), (q_frac(5, 2), 2)]
        );
        // u^2 - 2
        let p = Poly::from_coeffs(vec![q_int(-2), q_int(0), q_int(1)]);
        assert_eq!(p.rational_roots(), Err(Error::IrrationalPole { degree: 2 }));
        // (u - 1)(u^2 + 1)
        let p = &Poly::linear(&q_int(1)) * &Poly::from_coeffs(vec![q_int(1), q_int(0), q_int(1)]);
        assert!(p.rational_roots().is_err());
    }

    proptest! {
        #[test]
        fn roots_recovered(nums in prop::collection::vec((-12i64..=12, 1i64..=4), 0..7)) {
            let roots: Vec<Q> = nums.iter().map(|&(n, d)| q_frac(n, d)).collect();
            let p = Poly::from_roots(&roots);
            let found = p.rational_roots().unwrap();
            let rebuilt: Vec<Q> = found
                .iter()
                .flat_map(|(b, m)| std::iter::repeat_n(b.clone(), *m as usize))
                .collect();
            prop_assert_eq!(Poly::from_roots(&rebuilt), p);
        }
    }
}
