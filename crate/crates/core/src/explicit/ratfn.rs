//! Rational functions in `u` with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::Poly;
use crate::rational::Q;

/// `num/den` in lowest terms with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let lead = den.lead().recip();
        RatFn { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn zero() -> Self {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Q::from_integer(1.into()))
    }

    pub fn constant(a: Q) -> Self {
        RatFn { num: Poly::constant(a), den: Poly::one() }
    }

    pub fn poly(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    /// `1/(u − b)`.
    pub fn simple_pole(b: &Q) -> Self {
        RatFn { num: Poly::one(), den: Poly::linear(b) }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RatFn { num: self.num.scale(s), den: self.den.clone() }
    }

    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Coefficients `c_0, c_1, …, c_{n−1}` of the expansion
    /// `Σ_k c_k u^{−k}` at infinity; requires `deg num ≤ deg den`.
    pub fn expand_at_infinity(&self, n: usize) -> Vec<Q> {
        let m = self.den.degree().expect("nonzero denominator");
        if self.num.is_zero() {
            return vec![Q::zero(); n];
        }
        assert!(self.num.degree().unwrap() <= m, "not proper at infinity: {self}");
        let dm = self.den.lead();
        let mut c: Vec<Q> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = if k <= m { self.num.coeff(m - k) } else { Q::zero() };
            for l in 1..=k.min(m) {
                acc -= self.den.coeff(m - l) * &c[k - l];
            }
            c.push(acc / &dm);
        }
        c
    }

    /// Order of the pole at `b` and the leading coefficient
    /// `lim_{u→b} (u − b)^order f(u)`; order 0 means regular at `b`.
    pub fn pole_at(&self, b: &Q) -> (u32, Q) {
        let lin = Poly::linear(b);
        let mut rest = self.den.clone();
        let mut order = 0;
        loop {
            let (q, r) = rest.divrem(&lin);
            if !r.is_zero() {
                break;
            }
            rest = q;
            order += 1;
        }
        (order, self.num.eval(b) / rest.eval(b))
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFn::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}
