//! The counting polynomials.
//!
//! * `a_d^(m)(q)`: isomorphism classes of `d`-dimensional absolutely
//!   irreducible representations of the free algebra on `m` generators,
//!   read off the plethystic logarithm of a twisted q-hypergeometric series.
//! * `s_d^(m)(q)`: `m`-dimensional subspaces of `M_d(F_q)` generating it as
//!   a unital algebra, from the triangular system
//!   `|PGL_d| a_d^(m) = Σ_r (q^m - 1)...(q^m - q^(r-1)) s_d^(r)`, and
//!   independently from its closed-form inverse.
//! * `r_d^(m)(q) = [d² choose m]_q - s_d^(m)(q)`.
//! * The two-variable `a_d(q,u)` lives in [`two_variable`].

pub mod two_variable;

use crate::algebra::{
    falling_q_product, gaussian_binomial, integral_poly, pgl_order, q_power_product, QPoly,
    QRatFunc, Rational,
};
use crate::error::{Error, Result};
use crate::series::QSeries;

pub use two_variable::{
    a_two_variable_from_s, a_two_variable_series, compute_a_two_variable, constant_term_check,
    extract_factorization, factorial, gl_prefactor, mahler_expansion, ConstantTermReport, Factorization, MahlerExpansion,
    TwoVariableAi,
};

/// `a_d^(m)(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AiPolynomial {
    pub d: u32,
    pub m: u32,
    pub value: QPoly,
}

/// `s_d^(m)(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSubspacePolynomial {
    pub d: u32,
    pub m: u32,
    pub value: QPoly,
}

/// `F(t) = Σ_d q^(m d(d+1)/2) t^d / ((1-q)...(1-q^d))`.
pub fn hypergeometric_series(m: u32, order: usize) -> QSeries {
    let mut denom = QRatFunc::one();
    let coeffs = (0..=order)
        .map(|d| {
            if d > 0 {
                denom = denom.mul(&QRatFunc::one().sub(&QRatFunc::q_pow(d as i64)));
            }
            let e = m as i64 * (d * (d + 1) / 2) as i64;
            QRatFunc::q_pow(e).div(&denom).expect("nonzero denominator")
        })
        .collect();
    QSeries::new(order, coeffs)
}

/// `Σ_{d≥1} a_d^(m)(q) t^d = (1-q) Log(T⁻¹(F(t)⁻¹))` up to `t^order`.
///
/// Every coefficient is checked to be an integer polynomial.
pub fn ai_generating_series(m: u32, order: usize) -> Result<QSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument("truncation order must be at least 1".into()));
    }
    let f = hypergeometric_series(m, order);
    let inner = f.invert()?.twist_fixed_inverse(m);
    let one_minus_q = QRatFunc::from_poly(&QPoly::from_i64s(&[1, -1]));
    let series = inner.plethystic_log()?.scale(&one_minus_q);
    for c in series.coeffs().iter().skip(1) {
        integral_poly(c)?;
    }
    Ok(series)
}

/// `a_d^(m)(q)` alone.
pub fn ai_polynomial(d: u32, m: u32) -> Result<AiPolynomial> {
    let series = ai_generating_series(m, d as usize)?;
    let value = integral_poly(series.coeff(d as usize)?)?;
    Ok(AiPolynomial { d, m, value })
}

/// `a_d^(m)(q)` for all `1 <= d <= max_d` and `0 <= m <= max_m`.
#[derive(Clone, Debug)]
pub struct AiTable {
    max_d: u32,
    /// `rows[m][d]`, `d = 0` unused.
    rows: Vec<Vec<QPoly>>,
}

impl AiTable {
    pub fn compute(max_d: u32, max_m: u32) -> Result<Self> {
        let rows = (0..=max_m)
            .map(|m| {
                let s = ai_generating_series(m, max_d as usize)?;
                s.coeffs().iter().map(integral_poly).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AiTable { max_d, rows })
    }

    pub fn max_d(&self) -> u32 {
        self.max_d
    }

    pub fn max_m(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn get(&self, d: u32, m: u32) -> Option<&QPoly> {
        if d == 0 || d > self.max_d {
            return None;
        }
        self.rows.get(m as usize).map(|row| &row[d as usize])
    }

    /// `a_d^(0..=max_m)` as a vector indexed by `m`.
    pub fn column(&self, d: u32) -> Vec<QPoly> {
        (0..=self.max_m()).map(|m| self.get(d, m).expect("d in range").clone()).collect()
    }
}

/// `(q^d - 1)(q^d - q)...(q^d - q^(d-1)) = |GL_d(F_q)|`.
pub fn gl_order(d: u32) -> QPoly {
    falling_q_product(&QRatFunc::q_pow(d as i64), d).to_poly().expect("polynomial")
}

/// Solves `|PGL_d| a_d^(m) = Σ_{r=0}^{m} (q^m-1)...(q^m-q^(r-1)) s_d^(r)` for
/// `m = 0..=d²`, given `a_d^(m)` for those `m`.
pub fn solve_s_polys(d: u32, a: &[QPoly]) -> Result<Vec<GenSubspacePolynomial>> {
    let n = d * d;
    if a.len() < n as usize + 1 {
        return Err(Error::InvalidArgument(format!("need a_{d}^(m) for m = 0..={n}")));
    }
    let pgl = QRatFunc::from_poly(&pgl_order(d));
    let mut s: Vec<QRatFunc> = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        let x = QRatFunc::q_pow(m as i64);
        let mut rhs = pgl.mul(&QRatFunc::from_poly(&a[m as usize]));
        // falling products built incrementally: (x-1)...(x-q^(r-1))
        let mut fall = QRatFunc::one();
        for (r, sr) in s.iter().enumerate() {
            rhs = rhs.sub(&fall.mul(sr));
            fall = fall.mul(&x.sub(&QRatFunc::q_pow(r as i64)));
        }
        s.push(rhs.div(&fall)?);
    }
    s.into_iter()
        .enumerate()
        .map(|(m, v)| {
            Ok(GenSubspacePolynomial { d, m: m as u32, value: integral_poly(&v)? })
        })
        .collect()
}

/// `s_d^(m)(q)` for `m = 0..=d²`.
pub fn compute_s_polys(d: u32) -> Result<Vec<GenSubspacePolynomial>> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    let table = AiTable::compute(d, d * d)?;
    solve_s_polys(d, &table.column(d))
}

/// Closed-form inverse of the triangular system:
/// `s_d^(m) = Σ_{r=0}^{m} (-1)^(m-r) q^(r(r+1)/2 - mr) |PGL_d| a_d^(r)
///            / ((q^r-1)...(q-1) (q^(m-r)-1)...(q-1))`.
///
/// The `r = 0` term vanishes for `d >= 2` and supplies `s_1^(0) = 1` for
/// `d = 1`. `a[r]` must hold `a_d^(r)` for `0 <= r <= m`.
pub fn s_poly_closed_form(d: u32, m: u32, a: &[QPoly]) -> Result<GenSubspacePolynomial> {
    if m > d * d {
        return Err(Error::InvalidArgument(format!("closed form needs m <= {}", d * d)));
    }
    if a.len() <= m as usize {
        return Err(Error::InvalidArgument(format!("need a_{d}^(r) for r <= {m}")));
    }
    let pgl = QRatFunc::from_poly(&pgl_order(d));
    let mut acc = QRatFunc::zero();
    for r in 0..=m {
        let (ri, mi) = (r as i64, m as i64);
        let e = ri * (ri + 1) / 2 - mi * ri;
        let sign = if (m - r).is_multiple_of(2) { 1 } else { -1 };
        let den = q_power_product(r).mul(&q_power_product(m - r));
        let coeff = QRatFunc::q_pow(e)
            .mul(&pgl)
            .scale(&Rational::from_integer(sign.into()))
            .div(&QRatFunc::from_poly(&den))?;
        acc = acc.add(&coeff.mul(&QRatFunc::from_poly(&a[r as usize])));
    }
    Ok(GenSubspacePolynomial { d, m, value: integral_poly(&acc)? })
}

/// Degree bound `m(d²-m) - (m-1)(d-1)` on `r_d^(m)`.
pub fn r_degree_bound(d: u32, m: u32) -> i64 {
    let (d, m) = (d as i64, m as i64);
    m * (d * d - m) - (m - 1) * (d - 1)
}

/// `r_d^(m) = [d² choose m]_q - s_d^(m)`, counting `m`-dimensional subspaces
/// that generate a proper subalgebra. The degree bound is enforced for
/// `m >= 1`.
pub fn compute_r_poly(d: u32, m: u32, s: &QPoly) -> Result<QPoly> {
    let g = gaussian_binomial((d * d) as i64, m).to_poly().expect("Gaussian binomial is a polynomial");
    let r = g.sub(s);
    if m >= 1 {
        if let Some(deg) = r.degree() {
            let bound = r_degree_bound(d, m);
            if deg as i64 > bound {
                return Err(Error::DegreeBoundViolated { d, m, degree: deg, bound });
            }
        }
    }
    Ok(r)
}

/// Checks `s_d^(d²-r) = [d² choose r]_q` for `r = 0..=d-2`.
pub fn boundary_check(d: u32, s: &[GenSubspacePolynomial]) -> Result<()> {
    let n = d * d;
    for r in 0..d.saturating_sub(1) {
        let m = n - r;
        let expect = gaussian_binomial(n as i64, r).to_poly().expect("polynomial");
        let got = s.get(m as usize).map(|g| &g.value);
        if got != Some(&expect) {
            return Err(Error::BoundaryMismatch { d, m });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn a1_is_q_to_the_m() {
        for m in 0..5 {
            assert_eq!(ai_polynomial(1, m).unwrap().value, QPoly::q_pow(m as usize));
        }
    }

    #[test]
    fn a2_two_generators() {
        assert_eq!(ai_polynomial(2, 2).unwrap().value, p(&[0, 0, 0, 0, -1, 1]));
    }

    #[test]
    fn single_matrix_is_never_irreducible() {
        let s = ai_generating_series(1, 4).unwrap();
        for d in 2..=4 {
            assert!(s.coeff(d).unwrap().is_zero());
        }
        let s0 = ai_generating_series(0, 4).unwrap();
        assert!(s0.coeff(1).unwrap().is_one());
        for d in 2..=4 {
            assert!(s0.coeff(d).unwrap().is_zero());
        }
    }

    #[test]
    fn s2_table() {
        let s = compute_s_polys(2).unwrap();
        let vals: Vec<QPoly> = s.into_iter().map(|g| g.value).collect();
        assert_eq!(vals, vec![QPoly::zero(), QPoly::zero(), QPoly::q_pow(4), p(&[0, 0, 1, 1]), QPoly::one()]);
    }

    #[test]
    fn s1_bookkeeping() {
        let s = compute_s_polys(1).unwrap();
        assert!(s[0].value.is_one());
        assert!(s[1].value.is_one());
    }

    #[test]
    fn closed_form_matches_solve_d2() {
        let table = AiTable::compute(2, 4).unwrap();
        let a = table.column(2);
        let s = solve_s_polys(2, &a).unwrap();
        for m in 1..=4 {
            assert_eq!(s_poly_closed_form(2, m, &a).unwrap().value, s[m as usize].value);
        }
    }

    #[test]
    fn r_polys_d2() {
        let s = compute_s_polys(2).unwrap();
        assert_eq!(compute_r_poly(2, 2, &s[2].value).unwrap(), p(&[1, 1, 2, 1]));
        assert!(compute_r_poly(2, 4, &s[4].value).unwrap().is_zero());
    }

    #[test]
    fn degree_bound_violation_is_reported() {
        // claim s_2^(2) = 0: then r = [4 choose 2]_q has degree 4 > 3
        assert!(matches!(
            compute_r_poly(2, 2, &QPoly::zero()),
            Err(Error::DegreeBoundViolated { degree: 4, bound: 3, .. })
        ));
    }

    #[test]
    fn boundary_d2() {
        let s = compute_s_polys(2).unwrap();
        boundary_check(2, &s).unwrap();
        let mut bad = s.clone();
        bad[4].value = QPoly::from_int(2);
        assert_eq!(boundary_check(2, &bad), Err(Error::BoundaryMismatch { d: 2, m: 4 }));
    }
}
