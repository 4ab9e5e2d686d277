//! Polynomials in `u` with coefficients in `Q(q)`.

use std::fmt;

use super::qpoly::QPoly;
use super::ratfunc::QRatFunc;
use super::Rational;
use crate::error::{Error, Result};

/// An element of `Q(q)[u, u^-1]`, normalized so that the lowest stored
/// coefficient is nonzero.
///
/// Two-variable counting polynomials are genuine polynomials in `u`
/// (`valuation() >= 0`); negative powers only appear transiently, e.g. when
/// the two-variable twist multiplies a coefficient by `q/u`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    /// Exponent of `u` attached to `coeffs[0]`.
    low: i64,
    coeffs: Vec<QRatFunc>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QRatFunc::one())
    }

    pub fn u() -> Self {
        Self::monomial(QRatFunc::one(), 1)
    }

    pub fn constant(c: QRatFunc) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * u^k`.
    pub fn monomial(c: QRatFunc, k: i64) -> Self {
        Self::from_laurent(k, vec![c])
    }

    /// Coefficient `i` multiplies `u^i`.
    pub fn from_coeffs(coeffs: Vec<QRatFunc>) -> Self {
        Self::from_laurent(0, coeffs)
    }

    pub fn from_laurent(low: i64, mut coeffs: Vec<QRatFunc>) -> Self {
        while coeffs.last().is_some_and(QRatFunc::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        UPoly { low: low + lead_zeros as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// No negative powers of `u`.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Lowest exponent of `u` with nonzero coefficient (0 for zero).
    pub fn valuation(&self) -> i64 {
        self.low
    }

    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `u^k`.
    pub fn coeff(&self, k: i64) -> QRatFunc {
        let idx = k - self.low;
        if idx < 0 {
            return QRatFunc::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&QRatFunc> {
        self.coeffs.last()
    }

    /// `(exponent, coefficient)` pairs for the nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &QRatFunc)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.degree().unwrap().max(other.degree().unwrap());
        let coeffs = (low..=high)
            .map(|k| {
                let (a, b) = (self.coeff_ref(k), other.coeff_ref(k));
                match (a, b) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => QRatFunc::zero(),
                }
            })
            .collect();
        Self::from_laurent(low, coeffs)
    }

    fn coeff_ref(&self, k: i64) -> Option<&QRatFunc> {
        let idx = k - self.low;
        if idx < 0 {
            return None;
        }
        self.coeffs.get(idx as usize)
    }

    pub fn neg(&self) -> Self {
        UPoly { low: self.low, coeffs: self.coeffs.iter().map(QRatFunc::neg).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QRatFunc::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_laurent(self.low + other.low, coeffs)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QRatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&QRatFunc::from_rational(c.clone()))
    }

    /// Multiplies by `u^k`, `k` of either sign.
    pub fn shift_u(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        UPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Substitutes `q -> q^i` in the coefficients and `u -> u^i`.
    pub fn adams(&self, i: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QRatFunc::zero(); (self.coeffs.len() - 1) * i + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * i] = c.adams(i);
        }
        UPoly { low: self.low * i as i64, coeffs }
    }

    /// The inverse when `self` is a single monomial `c * u^k`.
    pub fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let c = self.coeffs[0].inverse().ok()?;
        Some(UPoly { low: -self.low, coeffs: vec![c] })
    }

    /// Evaluates at `u = value`.
    pub fn eval_u(&self, value: &QRatFunc) -> Result<QRatFunc> {
        if self.is_zero() {
            return Ok(QRatFunc::zero());
        }
        let mut acc = QRatFunc::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        Ok(acc.mul(&value.pow(self.low)?))
    }

    /// Specializes `u := q^m`.
    pub fn at_u_q_pow(&self, m: i64) -> QRatFunc {
        self.terms().fold(QRatFunc::zero(), |acc, (k, c)| acc.add(&c.mul(&QRatFunc::q_pow(m * k))))
    }

    /// Long division by a polynomial in `u` with nonzero leading coefficient;
    /// returns quotient and remainder. Both operands must be polynomials.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_polynomial() || !divisor.is_polynomial() {
            return Err(Error::NotAPolynomial);
        }
        let dn = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inverse()?;
        let mut rem = self.clone();
        let mut quot = UPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dn {
                break;
            }
            let t = UPoly::monomial(rem.leading().unwrap().mul(&lead_inv), rd - dn);
            rem = rem.sub(&divisor.mul(&t));
            quot = quot.add(&t);
        }
        Ok((quot, rem))
    }

    /// Exact quotient, or `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Coefficients of `u^0 .. u^deg`; requires a polynomial.
    pub fn poly_coeffs(&self) -> Vec<QRatFunc> {
        debug_assert!(self.is_polynomial());
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.coeff(k)).collect(),
        }
    }

    /// The value with all coefficients brought over a common monic
    /// denominator in `q`: returns `(numerator terms (q-poly per u-power), denominator)`.
    pub fn common_denominator(&self) -> (Vec<(i64, QPoly)>, QPoly) {
        let mut den = QPoly::one();
        for (_, c) in self.terms() {
            let d = c.den();
            let g = den.gcd(&d);
            den = den.mul(&d.div_rem(&g).expect("gcd is nonzero").0);
        }
        let den = den.monic();
        let dr = QRatFunc::from_poly(&den);
        let terms = self
            .terms()
            .map(|(k, c)| (k, c.mul(&dr).to_poly().expect("common denominator clears all")))
            .collect();
        (terms, den)
    }
}

impl From<QRatFunc> for UPoly {
    fn from(c: QRatFunc) -> Self {
        UPoly::constant(c)
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let upart = match k {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{k}"),
            };
            if c.is_one() && k != 0 {
                write!(f, "{upart}")?;
            } else if upart.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{upart}")?;
            }
        }
        Ok(())
    }
}
