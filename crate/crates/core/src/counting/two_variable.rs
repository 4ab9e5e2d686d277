//! The two-variable polynomials `a_d(q,u)` with `a_d(q,q^m) = a_d^(m)(q)`,
//! their Mahler-type expansion and the factorization
//! `a_d = (q-1) u^d (u-1)(u-q) / |GL_d| · ā_d`.

use num_bigint::BigInt;

use crate::algebra::{
    falling_q_product, integral_poly, mahler_basis_element, moebius, q_integer, q_power_product,
    QPoly, QRatFunc, Rational, UPoly,
};
use crate::counting::{gl_order, GenSubspacePolynomial};
use crate::error::{Error, Result};
use crate::series::{Twist, USeries};

/// `a_d(q,u)` with its factorization (for `d >= 2`).
#[derive(Clone, Debug, PartialEq)]
pub struct TwoVariableAi {
    pub d: u32,
    pub value: UPoly,
    pub factored: Option<Factorization>,
}

/// `a_d(q,u) = prefactor · u^u_power · (u-1)(u-q) · reduced`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    /// `(q-1) / |GL_d(F_q)|`.
    pub prefactor: QRatFunc,
    pub u_power: u32,
    /// `ā_d(q,u)`.
    pub reduced: UPoly,
    pub leading_terms_ok: bool,
}

impl Factorization {
    /// Multiplies the factors back out.
    pub fn expand(&self) -> UPoly {
        roots_factor()
            .mul(&self.reduced)
            .shift_u(self.u_power as i64)
            .scale(&self.prefactor)
    }
}

/// `(u-1)(u-q)`.
fn roots_factor() -> UPoly {
    falling_q_product(&UPoly::u(), 2)
}

/// `(q-1) / ((q^d-1)(q^d-q)...(q^d-q^(d-1)))`.
pub fn gl_prefactor(d: u32) -> QRatFunc {
    QRatFunc::ratio(&QPoly::from_i64s(&[-1, 1]), &gl_order(d)).expect("nonzero")
}

/// `(1-q) Log(T⁻¹(F̂(t)⁻¹))` over `Q(q)[u]`, where
/// `F̂(t) = Σ_d u^(d(d+1)/2) t^d / ((1-q)...(1-q^d))` and `T` is the
/// two-variable twist.
pub fn a_two_variable_series(order: usize) -> Result<USeries> {
    let mut denom = QRatFunc::one();
    let coeffs = (0..=order)
        .map(|d| {
            if d > 0 {
                denom = denom.mul(&QRatFunc::one().sub(&QRatFunc::q_pow(d as i64)));
            }
            let c = denom.inverse().expect("nonzero");
            UPoly::monomial(c, (d * (d + 1) / 2) as i64)
        })
        .collect();
    let f = USeries::new(order, coeffs);
    let inner = Twist::TwoVariable.apply_inverse(&f.invert()?);
    let one_minus_q = QRatFunc::from_poly(&QPoly::from_i64s(&[1, -1]));
    let series = inner.plethystic_log()?.scale(&one_minus_q);
    if let Some(bad) = series.coeffs().iter().find(|c| !c.is_polynomial()) {
        return Err(Error::NonPolynomialCoefficient(bad.to_string()));
    }
    Ok(series)
}

/// `a_d(q,u) = (q-1)/|GL_d| · Σ_{r=0}^{d²} (u-1)...(u-q^(r-1)) s_d^(r)(q)`.
///
/// The sum includes `r = 0`; that term only matters for `d = 1`, where
/// `s_1^(0) = 1`.
pub fn a_two_variable_from_s(d: u32, s: &[GenSubspacePolynomial]) -> UPoly {
    let mut acc = UPoly::zero();
    let mut fall = UPoly::one();
    for (r, sr) in s.iter().enumerate().take((d * d) as usize + 1) {
        if r > 0 {
            fall = fall.mul(&UPoly::u().sub(&UPoly::constant(QRatFunc::q_pow(r as i64 - 1))));
        }
        if !sr.value.is_zero() {
            acc = acc.add(&fall.scale(&QRatFunc::from_poly(&sr.value)));
        }
    }
    acc.scale(&gl_prefactor(d))
}

/// Computes `a_d(q,u)` through the plethystic series and through the
/// `s`-polynomials, insists that both agree, and factors it.
pub fn compute_a_two_variable(d: u32, s: &[GenSubspacePolynomial]) -> Result<TwoVariableAi> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    let series = a_two_variable_series(d as usize)?;
    let value = series.coeff(d as usize)?.clone();
    if value != a_two_variable_from_s(d, s) {
        return Err(Error::RouteMismatch { what: format!("a_{d}(q,u)") });
    }
    let factored = if d >= 2 { Some(extract_factorization(d, &value)?) } else { None };
    Ok(TwoVariableAi { d, value, factored })
}

/// Divides out `(q-1) u^d (u-1)(u-q) / |GL_d|` exactly and checks that the
/// top coefficients of the quotient `ā_d` are `[1]_q, [2]_q, ..., [d-1]_q`.
pub fn extract_factorization(d: u32, a: &UPoly) -> Result<Factorization> {
    if d < 2 {
        return Err(Error::InvalidArgument("factorization needs d >= 2".into()));
    }
    let prefactor = gl_prefactor(d);
    let scaled = a.scale(&prefactor.inverse()?);
    if scaled.valuation() < d as i64 {
        return Err(Error::InexactDivision { d, factor: format!("u^{d}") });
    }
    let shifted = scaled.shift_u(-(d as i64));
    let reduced = shifted
        .div_exact(&roots_factor())?
        .ok_or_else(|| Error::InexactDivision { d, factor: "(u-1)(u-q)".into() })?;
    let top = (d * d - d - 2) as i64;
    if reduced.degree() != Some(top) {
        return Err(Error::LeadingTermMismatch { d, power: top, expected: 1 });
    }
    for r in 0..=(d - 2) {
        let power = top - r as i64;
        if reduced.coeff(power) != QRatFunc::from_poly(&q_integer(r + 1)) {
            return Err(Error::LeadingTermMismatch { d, power, expected: r + 1 });
        }
    }
    Ok(Factorization { prefactor, u_power: d, reduced, leading_terms_ok: true })
}

/// Both sides of the constant-term formula for `ā_d(q,0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantTermReport {
    pub d: u32,
    /// `ā_d(q,0)` from the factorization.
    pub lhs: QRatFunc,
    /// `q^((d+1)(d-2)/2) (1/d) (q^d-1)...(q-1) Σ_{ij=d} μ(i)/(q^i-1)^j`.
    pub rhs: QRatFunc,
    /// Common value at `q = 1`; `(d-1)!` when the formula holds.
    pub at_q1: Rational,
}

/// The closed formula for the constant term of `ā_d`.
pub fn constant_term_formula(d: u32) -> QRatFunc {
    let mut sum = QRatFunc::zero();
    for i in 1..=d {
        if !d.is_multiple_of(i) {
            continue;
        }
        let j = (d / i) as i64;
        let mu = moebius(i as u64);
        if mu == 0 {
            continue;
        }
        let base = QRatFunc::q_pow(i as i64).sub(&QRatFunc::one());
        let term = base.pow(-j).expect("nonzero").scale(&Rational::from_integer(mu.into()));
        sum = sum.add(&term);
    }
    let e = ((d as i64 + 1) * (d as i64 - 2)) / 2;
    QRatFunc::q_pow(e)
        .scale(&Rational::new(1.into(), (d as i64).into()))
        .mul(&QRatFunc::from_poly(&q_power_product(d)))
        .mul(&sum)
}

/// Compares `ā_d(q,0)` against the closed formula and evaluates at `q = 1`.
pub fn constant_term_check(d: u32, factored: &Factorization) -> Result<ConstantTermReport> {
    let lhs = factored.reduced.coeff(0);
    let rhs = constant_term_formula(d);
    if lhs != rhs {
        return Err(Error::ConstantTermMismatch { d });
    }
    let at_q1 = lhs.eval_int(1)?;
    Ok(ConstantTermReport { d, lhs, rhs, at_q1 })
}

/// `a_d(q,u) = Σ_l c_l(q) ⟨u choose l⟩_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MahlerExpansion {
    pub d: u32,
    /// `c_0 .. c_{d²}`.
    pub coefficients: Vec<QPoly>,
}

impl MahlerExpansion {
    pub fn reconstruct(&self) -> UPoly {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(UPoly::zero(), |acc, (l, c)| {
                acc.add(&mahler_basis_element(l as u32).scale(&QRatFunc::from_poly(c)))
            })
    }
}

/// `c_r = (q-1)/|GL_d| · s_d^(r) · q^(r(r-1)/2) · (q^r-1)...(q-1)`, each
/// required to be an integer polynomial.
pub fn mahler_expansion(d: u32, s: &[GenSubspacePolynomial]) -> Result<MahlerExpansion> {
    let pre = gl_prefactor(d);
    let coefficients = s
        .iter()
        .take((d * d) as usize + 1)
        .map(|sr| {
            let r = sr.m;
            let c = pre
                .mul(&QRatFunc::from_poly(&sr.value))
                .mul(&QRatFunc::q_pow((r * r.saturating_sub(1) / 2) as i64))
                .mul(&QRatFunc::from_poly(&q_power_product(r)));
            integral_poly(&c).map_err(|_| Error::NonIntegralMahlerCoefficient { d, r })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MahlerExpansion { d, coefficients })
}

/// `(d-1)!` as a rational, for the constant-term check.
pub fn factorial(n: u32) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::from(1), |acc, k| acc * k))
}
