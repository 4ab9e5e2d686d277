//! The JSON output document and its polynomial encoding.
//!
//! A polynomial is `{"vars": ["q"], "terms": [[deg_q, num, den], ...]}` or,
//! for two variables, `{"vars": ["q","u"], "terms": [[deg_q, deg_u, num, den],
//! ...], "denominator": <polynomial in q>}`. Integers are decimal strings.

use std::str::FromStr;

use genpoly::{QPoly, QRatFunc, Rational, UPoly};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Q(i64, String, String),
    QU(i64, i64, String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<Term>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<Box<PolyJson>>,
}

fn rational(num: &str, den: &str) -> Result<Rational, String> {
    let n = BigInt::from_str(num).map_err(|e| format!("bad integer {num:?}: {e}"))?;
    let d = BigInt::from_str(den).map_err(|e| format!("bad integer {den:?}: {e}"))?;
    if d.is_zero() {
        return Err("zero denominator in term".into());
    }
    Ok(Rational::new(n, d))
}

impl PolyJson {
    pub fn from_qpoly(p: &QPoly) -> Self {
        let terms = p
            .coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| Term::Q(k as i64, c.numer().to_string(), c.denom().to_string()))
            .collect();
        PolyJson { vars: vec!["q".into()], terms, denominator: None }
    }

    /// Writes `a` as `Σ N_k(q) u^k / D(q)` with `D` monic.
    pub fn from_upoly(a: &UPoly) -> Self {
        let (numers, den) = a.common_denominator();
        let mut terms = Vec::new();
        for (k, n) in numers {
            for (j, c) in n.coeffs().into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push(Term::QU(j as i64, k, c.numer().to_string(), c.denom().to_string()));
                }
            }
        }
        PolyJson {
            vars: vec!["q".into(), "u".into()],
            terms,
            denominator: Some(Box::new(Self::from_qpoly(&den))),
        }
    }

    pub fn is_two_variable(&self) -> bool {
        self.vars.len() == 2
    }

    pub fn to_qpoly(&self) -> Result<QPoly, String> {
        if self.vars != ["q"] || self.denominator.is_some() {
            return Err(format!("expected a polynomial in q, found variables {:?}", self.vars));
        }
        let mut acc = QPoly::zero();
        for t in &self.terms {
            match t {
                Term::Q(k, n, d) => {
                    let k = usize::try_from(*k).map_err(|_| format!("negative degree {k}"))?;
                    acc = acc.add(&QPoly::monomial(rational(n, d)?, k));
                }
                Term::QU(..) => return Err("two-variable term in a polynomial in q".into()),
            }
        }
        Ok(acc)
    }

    pub fn to_upoly(&self) -> Result<UPoly, String> {
        if !self.is_two_variable() {
            return Ok(UPoly::constant(QRatFunc::from_poly(&self.to_qpoly()?)));
        }
        if self.vars != ["q", "u"] {
            return Err(format!("unknown variables {:?}", self.vars));
        }
        let mut acc = UPoly::zero();
        for t in &self.terms {
            match t {
                Term::QU(j, k, n, d) => {
                    let c = QRatFunc::from_rational(rational(n, d)?).mul(&QRatFunc::q_pow(*j));
                    acc = acc.add(&UPoly::monomial(c, *k));
                }
                Term::Q(..) => return Err("one-variable term in a two-variable polynomial".into()),
            }
        }
        if let Some(den) = &self.denominator {
            let den = den.to_qpoly()?;
            if den.is_zero() {
                return Err("zero denominator".into());
            }
            acc = acc.scale(&QRatFunc::from_poly(&den).inverse().map_err(|e| e.to_string())?);
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

impl RatFuncJson {
    pub fn from_ratfunc(f: &QRatFunc) -> Self {
        RatFuncJson { num: PolyJson::from_qpoly(&f.num()), den: PolyJson::from_qpoly(&f.den()) }
    }

    pub fn to_ratfunc(&self) -> Result<QRatFunc, String> {
        QRatFunc::ratio(&self.num.to_qpoly()?, &self.den.to_qpoly()?).map_err(|e| e.to_string())
    }
}

/// `prefactor · u^u_power · (u-1)(u-q) · reduced`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredJson {
    pub prefactor: RatFuncJson,
    pub u_power: u32,
    pub reduced: PolyJson,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub d: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    pub poly: PolyJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factored: Option<FactoredJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusMode {
    Subspaces,
    Tuples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusJson {
    pub d: u32,
    pub p: u32,
    pub m: u32,
    pub mode: CensusMode,
    pub total: u64,
    pub generating: u64,
    /// The matching polynomial evaluated at `q = p`.
    pub poly: String,
    pub agrees: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckJson {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "s_table")]
    STable,
    #[serde(rename = "a_table")]
    ATable,
    #[serde(rename = "a2")]
    A2,
    #[serde(rename = "r_table")]
    RTable,
    #[serde(rename = "mahler")]
    Mahler,
    #[serde(rename = "census")]
    Census,
    #[serde(rename = "verify-report")]
    VerifyReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportJson>,
}

impl OutputDocument {
    pub fn entries(kind: Kind, entries: Vec<Entry>) -> Self {
        OutputDocument { kind, entries, census: None, report: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use genpoly::parse::parse_expr;

    #[test]
    fn qpoly_round_trip() {
        let p = QPoly::from_i64s(&[0, 3, 0, -7]).scale(&Rational::new(1.into(), 6.into()));
        let j = PolyJson::from_qpoly(&p);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"vars":["q"],"terms":[[1,"1","2"],[3,"-7","6"]]}"#);
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_qpoly().unwrap(), p);
    }

    #[test]
    fn upoly_round_trip() {
        let a = parse_expr("u^2(u-1)(u-q)/(q(q-1)(q+1))").unwrap();
        let j = PolyJson::from_upoly(&a);
        let text = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.to_upoly().unwrap(), a);
        assert!(matches!(back.terms[0], Term::QU(..)));
    }

    #[test]
    fn document_round_trip() {
        let doc = OutputDocument {
            kind: Kind::Census,
            entries: vec![],
            census: Some(CensusJson {
                d: 2,
                p: 2,
                m: 2,
                mode: CensusMode::Subspaces,
                total: 35,
                generating: 16,
                poly: "16".into(),
                agrees: true,
                elapsed_ms: Some(0.123456789),
            }),
            report: None,
        };
        let text = serde_json::to_string_pretty(&doc).unwrap();
        assert_eq!(serde_json::from_str::<OutputDocument>(&text).unwrap(), doc);
    }

    #[test]
    fn malformed_terms_are_rejected() {
        let bad: PolyJson = serde_json::from_str(r#"{"vars":["q"],"terms":[[1,"x","1"]]}"#).unwrap();
        assert!(bad.to_qpoly().is_err());
        let zero_den: PolyJson = serde_json::from_str(r#"{"vars":["q"],"terms":[[1,"1","0"]]}"#).unwrap();
        assert!(zero_den.to_qpoly().is_err());
    }
}
