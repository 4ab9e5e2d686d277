//! Dense univariate polynomials over the integers.
//!
//! This is the workhorse behind [`QPoly`](super::QPoly) and
//! [`QRatFunc`](super::QRatFunc): rational polynomials are stored as an
//! integer polynomial plus a common denominator, and rational functions keep
//! primitive integer numerators and denominators. Keeping the inner loops on
//! `BigInt` avoids a gcd per coefficient operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficient `i` multiplies `q^i`. Trailing zeros are
/// always stripped, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        ZPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Largest `k` with `q^k` dividing `self`; zero for the zero polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Divides by `q^k`; the low `k` coefficients must be zero.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.valuation() >= k || self.is_zero());
        if self.is_zero() {
            return Self::zero();
        }
        ZPoly { coeffs: self.coeffs[k..].to_vec() }
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits into `(content, primitive part)` with the primitive part having
    /// a positive leading coefficient. The content carries the sign.
    pub fn content_primitive(&self) -> (BigInt, ZPoly) {
        if self.is_zero() {
            return (BigInt::zero(), ZPoly::zero());
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar_exact(&c))
    }

    pub fn primitive(&self) -> ZPoly {
        self.content_primitive().1
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> ZPoly {
        if c.is_one() {
            return self.clone();
        }
        ZPoly { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        ZPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (a, b) in coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> ZPoly {
        let mut base = self.clone();
        let mut acc = ZPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes `q -> q^i`.
    pub fn adams(&self, i: usize) -> ZPoly {
        assert!(i >= 1, "Adams index must be positive");
        if i == 1 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * i + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * i] = c.clone();
        }
        ZPoly { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Largest absolute coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Exact quotient `self / divisor` in `Z[q]`, or `None` if the division
    /// leaves a remainder or needs fractions.
    pub fn div_exact(&self, divisor: &ZPoly) -> Option<ZPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if divisor.is_one() {
            return Some(self.clone());
        }
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dn - 1];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &qk * d;
                }
            }
            quot[k] = qk;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(ZPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &ZPoly) -> ZPoly {
        let dn = divisor.coeffs.len();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() >= dn {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - dn;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &top * d;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            // keep coefficients small
            let r = ZPoly { coeffs: std::mem::take(&mut rem) };
            rem = r.primitive().coeffs;
        }
        ZPoly::from_coeffs(rem)
    }

    /// Greatest common divisor in `Z[q]`, primitive with positive leading
    /// coefficient (times the gcd of the contents).
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.content_primitive().1.scale(&other.content());
        }
        if other.is_zero() {
            return self.content_primitive().1.scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let v = self.valuation().min(other.valuation());
        let a = self.unshift(self.valuation()).primitive();
        let b = other.unshift(other.valuation()).primitive();
        primitive_gcd(&a, &b).shift(v).scale(&content)
    }
}

/// gcd of two primitive polynomials with nonzero constant terms.
fn primitive_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return ZPoly::one();
    }
    if a == b {
        return a.clone();
    }
    if let Some(g) = heuristic_gcd(a, b) {
        return g;
    }
    prs_gcd(a, b)
}

/// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
/// the candidate back off its balanced base-`xi` digits. The candidate is
/// accepted only if it divides both inputs, so a wrong guess costs time but
/// never correctness.
fn heuristic_gcd(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let bound = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = bound * 2u32 + 29u32;
    for _ in 0..6 {
        let ga = a.eval(&xi);
        let gb = b.eval(&xi);
        let gamma = ga.gcd(&gb);
        if !gamma.is_zero() {
            let cand = balanced_digits(&gamma, &xi).primitive();
            if !cand.is_zero() && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
        xi = xi * 73794u32 / 27011u32 + 1u32;
    }
    None
}

fn balanced_digits(value: &BigInt, xi: &BigInt) -> ZPoly {
    let half: BigInt = xi / 2u32;
    let mut v = value.clone();
    let mut coeffs = Vec::new();
    while !v.is_zero() {
        let mut r = v.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        v = (v - &r) / xi;
        coeffs.push(r);
    }
    ZPoly::from_coeffs(coeffs)
}

/// Primitive polynomial remainder sequence.
fn prs_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (mut x, mut y) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    while !y.is_zero() {
        let r = x.pseudo_rem(&y);
        x = y;
        y = r.primitive();
    }
    x.primitive()
}
