//! Polynomials in `q` with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::zpoly::ZPoly;
use super::Rational;
use crate::error::{Error, Result};

/// A polynomial in `q` over the rationals.
///
/// Stored as an integer polynomial over a positive common denominator, with
/// `gcd(content(numer), denom) = 1`. That makes the representation unique,
/// so derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    numer: ZPoly,
    denom: BigInt,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { numer: ZPoly::zero(), denom: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_zpoly(ZPoly::constant(BigInt::from(c)))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let (n, d) = c.into();
        Self::new(ZPoly::monomial(n, k), d)
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(Rational::one(), k)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_zpoly(ZPoly::from_i64s(cs))
    }

    pub fn from_coeffs(cs: &[Rational]) -> Self {
        let denom = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer = cs.iter().map(|c| c.numer() * (&denom / c.denom())).collect();
        Self::new(ZPoly::from_coeffs(numer), denom)
    }

    pub fn from_zpoly(numer: ZPoly) -> Self {
        QPoly { numer, denom: BigInt::one() }
    }

    pub(crate) fn new(numer: ZPoly, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        if numer.is_zero() {
            return Self::zero();
        }
        let mut g = numer.content().gcd(&denom);
        if denom.is_negative() {
            g = -g;
        }
        QPoly { numer: numer.div_scalar_exact(&g), denom: denom / g }
    }

    /// Integer numerator; the polynomial is `numer() / denom()`.
    pub fn numer(&self) -> &ZPoly {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.denom.is_one() && self.numer.is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.numer.degree()
    }

    pub fn valuation(&self) -> usize {
        self.numer.valuation()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        match self.numer.coeffs().get(k) {
            Some(c) => Rational::new(c.clone(), self.denom.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.numer.coeffs().len()).map(|k| self.coeff(k)).collect()
    }

    pub fn leading(&self) -> Option<Rational> {
        self.degree().map(|d| self.coeff(d))
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.denom.is_one()
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<&[BigInt]> {
        self.denom.is_one().then(|| self.numer.coeffs())
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        if self.denom == other.denom {
            return Self::new(self.numer.add(&other.numer), self.denom.clone());
        }
        let l = self.denom.lcm(&other.denom);
        let a = self.numer.scale(&(&l / &self.denom));
        let b = other.numer.scale(&(&l / &other.denom));
        Self::new(a.add(&b), l)
    }

    pub fn neg(&self) -> QPoly {
        QPoly { numer: self.numer.neg(), denom: self.denom.clone() }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        Self::new(self.numer.mul(&other.numer), &self.denom * &other.denom)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        Self::new(self.numer.scale(c.numer()), &self.denom * c.denom())
    }

    pub fn pow(&self, e: u32) -> QPoly {
        Self::new(self.numer.pow(e), num_traits::pow(self.denom.clone(), e as usize))
    }

    pub fn shift(&self, k: usize) -> QPoly {
        QPoly { numer: self.numer.shift(k), denom: self.denom.clone() }
    }

    /// Substitutes `q -> q^i`.
    pub fn adams(&self, i: usize) -> QPoly {
        QPoly { numer: self.numer.adams(i), denom: self.denom.clone() }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.numer.coeffs().iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc / Rational::from_integer(self.denom.clone())
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(x.into()))
    }

    /// Division with remainder over `Q[q]`.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dc = divisor.coeffs();
        let lead = dc.last().unwrap().clone();
        let mut rem = self.coeffs();
        if rem.len() < dc.len() {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dc.len() + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dc.len() - 1];
            if top.is_zero() {
                continue;
            }
            let qk = top / &lead;
            for (j, d) in dc.iter().enumerate() {
                rem[k + j] -= &qk * d;
            }
            quot[k] = qk;
        }
        Ok((QPoly::from_coeffs(&quot), QPoly::from_coeffs(&rem)))
    }

    /// Monic gcd over `Q[q]`; zero only if both inputs are zero.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let g = self.numer.gcd(&other.numer);
        match g.leading() {
            None => QPoly::zero(),
            Some(lc) => QPoly::new(g.clone(), lc.clone()),
        }
    }

    /// The polynomial scaled to have leading coefficient one.
    pub fn monic(&self) -> QPoly {
        match self.numer.leading() {
            None => QPoly::zero(),
            Some(lc) => QPoly::new(self.numer.clone(), lc.clone()),
        }
    }
}

impl Default for QPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Descending powers, e.g. `q^3+q^2-1`. Zero prints as `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, Rational)> = self
            .coeffs()
            .into_iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64, c))
            .collect();
        f.write_str(&super::format_terms(&terms, "q"))
    }
}
