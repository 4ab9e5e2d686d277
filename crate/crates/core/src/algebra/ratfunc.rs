//! Rational functions in `q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;
use super::zpoly::ZPoly;
use super::Rational;
use crate::error::{Error, Result};

/// An element of `Q(q)` in canonical form.
///
/// Internally the value is `scalar * numer / denom` where `numer` and
/// `denom` are coprime primitive integer polynomials with positive leading
/// coefficients. The form is unique, so structural equality is equality of
/// rational functions. [`QRatFunc::num`] and [`QRatFunc::den`] present the
/// same value with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRatFunc {
    scalar: Rational,
    numer: ZPoly,
    denom: ZPoly,
}

impl QRatFunc {
    pub fn zero() -> Self {
        QRatFunc { scalar: Rational::zero(), numer: ZPoly::one(), denom: ZPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(Rational::from_integer(c.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        QRatFunc { scalar: c, numer: ZPoly::one(), denom: ZPoly::one() }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = ZPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            QRatFunc { scalar: Rational::one(), numer: m, denom: ZPoly::one() }
        } else {
            QRatFunc { scalar: Rational::one(), numer: ZPoly::one(), denom: m }
        }
    }

    pub fn from_poly(p: &QPoly) -> Self {
        Self::from_parts(Rational::one(), p.numer(), &ZPoly::one()).scale(&Rational::new(
            BigInt::one(),
            p.denom().clone(),
        ))
    }

    /// `num / den`; fails on a zero denominator.
    pub fn ratio(num: &QPoly, den: &QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let scalar = Rational::new(den.denom().clone(), num.denom().clone());
        Ok(Self::from_parts(scalar, num.numer(), den.numer()))
    }

    /// Builds `scalar * n / d` and reduces it.
    fn from_parts(scalar: Rational, n: &ZPoly, d: &ZPoly) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        if n.is_zero() || scalar.is_zero() {
            return Self::zero();
        }
        let (cn, pn) = n.content_primitive();
        let (cd, pd) = d.content_primitive();
        let scalar = scalar * Rational::new(cn, cd);
        Self::reduced(scalar, pn, pd)
    }

    /// `pn` and `pd` must already be primitive with positive leading terms.
    fn reduced(scalar: Rational, pn: ZPoly, pd: ZPoly) -> Self {
        if pd.is_one() || pn.is_one() {
            return QRatFunc { scalar, numer: pn, denom: pd };
        }
        let g = pn.gcd(&pd);
        if g.is_one() {
            return QRatFunc { scalar, numer: pn, denom: pd };
        }
        QRatFunc {
            scalar,
            numer: pn.div_exact(&g).expect("gcd divides numerator"),
            denom: pd.div_exact(&g).expect("gcd divides denominator"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.numer.is_one() && self.denom.is_one()
    }

    /// True iff the reduced denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    /// True iff the value is a nonzero rational constant or zero.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.numer.is_one() && self.denom.is_one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.scalar.clone())
    }

    /// Numerator for the monic-denominator presentation.
    pub fn num(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let lc = self.denom.leading().unwrap().clone();
        QPoly::from_zpoly(self.numer.clone()).scale(&(&self.scalar / Rational::from_integer(lc)))
    }

    /// Monic denominator.
    pub fn den(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::one();
        }
        QPoly::from_zpoly(self.denom.clone()).monic()
    }

    /// The polynomial this equals, if the denominator reduces to 1.
    pub fn to_poly(&self) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        self.is_polynomial().then(|| QPoly::from_zpoly(self.numer.clone()).scale(&self.scalar))
    }

    pub fn neg(&self) -> Self {
        QRatFunc { scalar: -&self.scalar, numer: self.numer.clone(), denom: self.denom.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        QRatFunc { scalar: &self.scalar * c, numer: self.numer.clone(), denom: self.denom.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = self.denom.gcd(&other.denom);
        let d1 = self.denom.div_exact(&g).unwrap();
        let d2 = other.denom.div_exact(&g).unwrap();
        let l = num_integer::Integer::lcm(self.scalar.denom(), other.scalar.denom());
        let c1 = self.scalar.numer() * (&l / self.scalar.denom());
        let c2 = other.scalar.numer() * (&l / other.scalar.denom());
        let num = self.numer.mul(&d2).scale(&c1).add(&other.numer.mul(&d1).scale(&c2));
        if num.is_zero() {
            return Self::zero();
        }
        let (cn, mut pn) = num.content_primitive();
        let mut den2 = other.denom.clone();
        if !g.is_one() {
            let h = pn.gcd(&g);
            if !h.is_one() {
                pn = pn.div_exact(&h).unwrap();
                den2 = den2.div_exact(&h).unwrap();
            }
        }
        QRatFunc { scalar: Rational::new(cn, l), numer: pn, denom: d1.mul(&den2) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = self.numer.gcd(&other.denom);
        let g2 = other.numer.gcd(&self.denom);
        let n1 = self.numer.div_exact(&g1).unwrap();
        let d2 = other.denom.div_exact(&g1).unwrap();
        let n2 = other.numer.div_exact(&g2).unwrap();
        let d1 = self.denom.div_exact(&g2).unwrap();
        QRatFunc { scalar: &self.scalar * &other.scalar, numer: n1.mul(&n2), denom: d1.mul(&d2) }
    }

    pub fn mul_poly(&self, p: &QPoly) -> Self {
        self.mul(&Self::from_poly(p))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QRatFunc { scalar: self.scalar.recip(), numer: self.denom.clone(), denom: self.numer.clone() })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        if base.is_zero() {
            return Ok(if e == 0 { Self::one() } else { Self::zero() });
        }
        Ok(QRatFunc {
            scalar: num_traits::pow(base.scalar.clone(), e as usize),
            numer: base.numer.pow(e),
            denom: base.denom.pow(e),
        })
    }

    /// Substitutes `q -> q^i`. Coprimality survives the substitution, so no
    /// re-reduction is needed.
    pub fn adams(&self, i: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QRatFunc { scalar: self.scalar.clone(), numer: self.numer.adams(i), denom: self.denom.adams(i) }
    }

    /// Exact evaluation at `q = x`.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let d = eval_z(&self.denom, x);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluationPoint(x.to_string()));
        }
        Ok(&self.scalar * eval_z(&self.numer, x) / d)
    }

    pub fn eval_int(&self, x: i64) -> Result<Rational> {
        self.eval(&Rational::from_integer(x.into()))
    }

    /// Exponent of `q` dividing the value (negative for poles at zero);
    /// zero for the zero function.
    pub fn q_valuation(&self) -> i64 {
        if self.is_zero() {
            return 0;
        }
        self.numer.valuation() as i64 - self.denom.valuation() as i64
    }

    pub fn signum_of_scalar(&self) -> i32 {
        if self.scalar.is_negative() {
            -1
        } else if self.scalar.is_zero() {
            0
        } else {
            1
        }
    }
}

fn eval_z(p: &ZPoly, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc * x + Rational::from_integer(c.clone());
    }
    acc
}

impl Default for QRatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QPoly> for QRatFunc {
    fn from(p: QPoly) -> Self {
        Self::from_poly(&p)
    }
}

impl From<Rational> for QRatFunc {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl fmt::Debug for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatFunc({self})")
    }
}

impl fmt::Display for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num(), self.den()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn reduction_to_polynomial() {
        // (q^2 - 1)/(q - 1) = q + 1, which then evaluates at the removed pole
        let f = QRatFunc::ratio(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.to_poly().unwrap(), p(&[1, 1]));
        assert_eq!(f.eval_int(1).unwrap(), Rational::from_integer(2.into()));
    }

    #[test]
    fn pole_is_reported() {
        let f = QRatFunc::ratio(&p(&[1]), &p(&[-1, 1])).unwrap();
        assert!(matches!(f.eval_int(1), Err(Error::PoleAtEvaluationPoint(_))));
    }

    #[test]
    fn monic_denominator_presentation() {
        let f = QRatFunc::ratio(&p(&[3]), &p(&[2, 4])).unwrap();
        assert_eq!(f.den(), QPoly::from_coeffs(&[Rational::new(1.into(), 2.into()), Rational::one()]));
        assert_eq!(f.num(), QPoly::constant(Rational::new(3.into(), 4.into())));
    }

    #[test]
    fn negative_powers_of_q() {
        let f = QRatFunc::q_pow(-2).mul(&QRatFunc::q_pow(3));
        assert_eq!(f, QRatFunc::q());
        assert_eq!(QRatFunc::q_pow(-1).q_valuation(), -1);
    }

    #[test]
    fn add_cancels_common_denominator() {
        // 1/(q-1) - q/(q-1) = -1
        let a = QRatFunc::ratio(&p(&[1]), &p(&[-1, 1])).unwrap();
        let b = QRatFunc::ratio(&p(&[0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(a.sub(&b), QRatFunc::from_int(-1));
    }
}
