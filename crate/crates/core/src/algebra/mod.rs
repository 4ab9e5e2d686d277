//! Exact arithmetic in `Q`, `Q[q]`, `Q(q)` and `Q(q)[u]`, plus the
//! q-combinatorial primitives built on it.

mod combinat;
mod qpoly;
mod ratfunc;
mod upoly;
pub mod zpoly;

pub use combinat::{
    falling_q_product, gaussian_binomial, mahler_basis_element, moebius, pgl_order, q_integer,
    q_power_product,
};
pub use qpoly::QPoly;
pub use ratfunc::QRatFunc;
pub use upoly::UPoly;

/// Exact rational scalar; always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

use crate::error::Result;

/// A commutative ring containing `Q(q)` on which the Adams operations
/// `q -> q^i` (and `u -> u^i` where `u` is present) act.
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &QRatFunc) -> Self;
    fn adams(&self, i: usize) -> Self;
    /// Multiplicative inverse, if it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
    fn from_ratfunc(c: QRatFunc) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&QRatFunc::from_rational(c.clone()))
    }
}

impl CoeffRing for QRatFunc {
    fn zero() -> Self {
        QRatFunc::zero()
    }
    fn one() -> Self {
        QRatFunc::one()
    }
    fn is_zero(&self) -> bool {
        QRatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QRatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QRatFunc::sub(self, other)
    }
    fn neg(&self) -> Self {
        QRatFunc::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        QRatFunc::mul(self, other)
    }
    fn scale(&self, c: &QRatFunc) -> Self {
        QRatFunc::mul(self, c)
    }
    fn adams(&self, i: usize) -> Self {
        QRatFunc::adams(self, i)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn from_ratfunc(c: QRatFunc) -> Self {
        c
    }
    fn scale_rational(&self, c: &Rational) -> Self {
        QRatFunc::scale(self, c)
    }
}

impl CoeffRing for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        UPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        UPoly::sub(self, other)
    }
    fn neg(&self) -> Self {
        UPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        UPoly::mul(self, other)
    }
    fn scale(&self, c: &QRatFunc) -> Self {
        UPoly::scale(self, c)
    }
    fn adams(&self, i: usize) -> Self {
        UPoly::adams(self, i)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
    fn from_ratfunc(c: QRatFunc) -> Self {
        UPoly::constant(c)
    }
}

/// Renders `(exponent, coefficient)` terms, already in display order, as
/// `2q^3-1/2*q+1`.
pub(crate) fn format_terms(terms: &[(i64, Rational)], var: &str) -> String {
    use num_traits::{One, Signed};
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (k, c)) in terms.iter().enumerate() {
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        let vpart = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if vpart.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&vpart);
        } else if mag.is_integer() {
            out.push_str(&format!("{mag}{vpart}"));
        } else {
            out.push_str(&format!("{mag}*{vpart}"));
        }
    }
    out
}

/// Checks that a rational function is an integer-coefficient polynomial.
pub fn integral_poly(f: &QRatFunc) -> Result<QPoly> {
    match f.to_poly() {
        Some(p) if p.has_integer_coeffs() => Ok(p),
        _ => Err(crate::error::Error::NonPolynomialCoefficient(f.to_string())),
    }
}
