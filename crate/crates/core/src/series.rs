//! Truncated power series in `t` over a coefficient ring with Adams
//! operations, and the plethystic calculus on them.
//!
//! `Exp` is the additive-to-multiplicative isomorphism determined by
//! `Exp(c t^d) = (1 - c t^d)^-1` for monomials `c` in `q` and `u`, and
//! `Log = Ψ⁻¹ ∘ log` with `Ψ⁻¹ = Σ μ(i)/i · ψ_i`. All arithmetic is exact
//! and drops every term above the truncation order.

use std::fmt;

use crate::algebra::{moebius, CoeffRing, QRatFunc, Rational, UPoly};
use crate::error::{Error, Result};

/// `Σ_{d=0}^{order} c_d t^d`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

pub type QSeries = TruncatedSeries<QRatFunc>;
pub type USeries = TruncatedSeries<UPoly>;

impl<R: CoeffRing> TruncatedSeries<R> {
    /// Pads with zeros or drops terms beyond `order`.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![R::one()])
    }

    /// `c t^d`, or zero if `d` exceeds the order.
    pub fn monomial(order: usize, c: R, d: usize) -> Self {
        let mut s = Self::zero(order);
        if d <= order {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, d: usize) -> Result<&R> {
        self.coeffs
            .get(d)
            .ok_or(Error::BeyondTruncation { requested: d, order: self.order })
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, R::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, R::sub))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        TruncatedSeries { order: self.order, coeffs }
    }

    pub fn map(&self, f: impl Fn(usize, &R) -> R) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(d, c)| f(d, c)).collect();
        TruncatedSeries { order: self.order, coeffs }
    }

    pub fn scale(&self, c: &QRatFunc) -> Self {
        self.map(|_, x| x.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.twisted_mul(other, |_, _| None)
    }

    /// Product where `t^d * t^e` picks up the factor `weight(d, e)` (1 when
    /// `None`).
    fn twisted_mul(&self, other: &Self, weight: impl Fn(usize, usize) -> Option<QRatFunc>) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut coeffs = vec![R::zero(); n + 1];
        for (d, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (e, b) in other.coeffs.iter().enumerate().take(n + 1 - d) {
                if b.is_zero() {
                    continue;
                }
                let mut term = a.mul(b);
                if let Some(w) = weight(d, e) {
                    term = term.scale(&w);
                }
                coeffs[d + e] = coeffs[d + e].add(&term);
            }
        }
        Ok(TruncatedSeries { order: n, coeffs })
    }

    /// Multiplicative inverse, by the usual triangular recursion.
    pub fn invert(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].try_inverse().ok_or(Error::NonInvertibleConstantTerm)?;
        let mut out: Vec<R> = Vec::with_capacity(self.order + 1);
        out.push(c0_inv.clone());
        for n in 1..=self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out[n - k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out[n - k]));
                }
            }
            out.push(acc.mul(&c0_inv).neg());
        }
        Ok(TruncatedSeries { order: self.order, coeffs: out })
    }

    /// Classical logarithm of a series with constant term 1, from
    /// `n l_n = n f_n - Σ_{k<n} k l_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let mut out = vec![R::zero(); self.order + 1];
        for n in 1..=self.order {
            let mut acc = R::zero();
            for k in 1..n {
                if !out[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    acc = acc.add(&out[k].mul(&self.coeffs[n - k]).scale_rational(&int(k as i64)));
                }
            }
            out[n] = self.coeffs[n].sub(&acc.scale_rational(&Rational::new(1.into(), (n as i64).into())));
        }
        Ok(TruncatedSeries { order: self.order, coeffs: out })
    }

    /// Classical exponential of a series with constant term 0, from
    /// `n h_n = Σ_{k=1}^{n} k g_k h_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero);
        }
        let mut out = vec![R::one()];
        for n in 1..=self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out[n - k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out[n - k]).scale_rational(&int(k as i64)));
                }
            }
            out.push(acc.scale_rational(&Rational::new(1.into(), (n as i64).into())));
        }
        Ok(TruncatedSeries { order: self.order, coeffs: out })
    }

    /// Adams operation ψ_i: applies ψ_i to every coefficient and sends
    /// `t -> t^i`.
    pub fn adams(&self, i: usize) -> Self {
        assert!(i >= 1, "Adams index must be positive");
        let mut out = Self::zero(self.order);
        for (d, c) in self.coeffs.iter().enumerate() {
            if d * i > self.order {
                break;
            }
            out.coeffs[d * i] = c.adams(i);
        }
        out
    }

    /// `Log(f) = Σ_{i≥1} μ(i)/i · ψ_i(log f)`.
    pub fn plethystic_log(&self) -> Result<Self> {
        let l = self.log()?;
        let mut out = Self::zero(self.order);
        for i in 1..=self.order.max(1) {
            let mu = moebius(i as u64);
            if mu == 0 {
                continue;
            }
            let term = l.adams(i).map(|_, c| c.scale_rational(&Rational::new(mu.into(), (i as i64).into())));
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// `Exp(g) = exp(Σ_{i≥1} ψ_i(g)/i)`.
    pub fn plethystic_exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero);
        }
        let mut psi = Self::zero(self.order);
        for i in 1..=self.order.max(1) {
            let term = self.adams(i).map(|_, c| c.scale_rational(&Rational::new(1.into(), (i as i64).into())));
            psi = psi.add(&term)?;
        }
        psi.exp()
    }

    /// Fixed-`m` twist: `T(t^d) = (-1)^d q^((1-m) d(d-1)/2) t^d`.
    pub fn twist_fixed(&self, m: u32) -> Self {
        self.map(|d, c| c.scale(&fixed_twist_factor(m, d, false)))
    }

    pub fn twist_fixed_inverse(&self, m: u32) -> Self {
        self.map(|d, c| c.scale(&fixed_twist_factor(m, d, true)))
    }

    /// Twisted product with `t^d ∘ t^e = q^((m-1)de) t^(d+e)`.
    pub fn twisted_product(&self, other: &Self, m: u32) -> Result<Self> {
        if m == 1 {
            return self.mul(other);
        }
        let m = m as i64;
        self.twisted_mul(other, |d, e| Some(QRatFunc::q_pow((m - 1) * (d * e) as i64)))
    }
}

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn sign(d: usize) -> i64 {
    if d.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn fixed_twist_factor(m: u32, d: usize, inverse: bool) -> QRatFunc {
    let e = (1 - m as i64) * (d * d.saturating_sub(1) / 2) as i64;
    let e = if inverse { -e } else { e };
    QRatFunc::q_pow(e).scale(&int(sign(d)))
}

/// The two twist operators on series in `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// `T(t^d) = (-1)^d q^((1-m) d(d-1)/2) t^d`.
    FixedM(u32),
    /// `T(t^d) = (-1)^d (q^-1 u)^(-d(d-1)/2) t^d`.
    TwoVariable,
}

impl Twist {
    /// The factor multiplying the `t^d` coefficient.
    pub fn multiplier(self, d: usize, inverse: bool) -> UPoly {
        match self {
            Twist::FixedM(m) => UPoly::constant(fixed_twist_factor(m, d, inverse)),
            Twist::TwoVariable => {
                let e = (d * d.saturating_sub(1) / 2) as i64;
                let e = if inverse { -e } else { e };
                UPoly::monomial(QRatFunc::q_pow(e).scale(&int(sign(d))), -e)
            }
        }
    }

    pub fn apply(self, f: &USeries) -> USeries {
        f.map(|d, c| c.mul(&self.multiplier(d, false)))
    }

    pub fn apply_inverse(self, f: &USeries) -> USeries {
        f.map(|d, c| c.mul(&self.multiplier(d, true)))
    }
}

impl USeries {
    /// Specializes `u := q^m` coefficientwise.
    pub fn at_u_q_pow(&self, m: i64) -> QSeries {
        TruncatedSeries::new(self.order, self.coeffs.iter().map(|c| c.at_u_q_pow(m)).collect())
    }
}

impl QSeries {
    pub fn to_useries(&self) -> USeries {
        TruncatedSeries::new(self.order, self.coeffs.iter().cloned().map(UPoly::constant).collect())
    }
}

impl<R: CoeffRing> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{}](", self.order)?;
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})t^{d}")?;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}
