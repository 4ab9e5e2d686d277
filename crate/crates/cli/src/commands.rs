//! Subcommand implementations. Each returns an [`OutputDocument`] and an
//! exit status; errors carry their own exit code.

use std::time::Duration;

use genpoly::algebra::pgl_order;
use genpoly::counting::{
    ai_polynomial, compute_a_two_variable, compute_r_poly, compute_s_polys, mahler_expansion, GenSubspacePolynomial,
};
use genpoly::oracle::{
    budget_from_env, census_ai_tuples, census_generating_subspaces, parse_budget, CensusOptions,
    DEFAULT_SUBSPACE_BUDGET, DEFAULT_TUPLE_BUDGET,
};
use genpoly::verify::{self, Suite, VerifyOptions};
use genpoly::{Error, QPoly, Rational};

use crate::doc::{
    CensusJson, CensusMode, CheckJson, Entry, FactoredJson, Kind, OutputDocument, PolyJson, RatFuncJson, ReportJson,
};
use crate::render::{self, Style};

pub const DEFAULT_MAX_D: u32 = 5;

#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Refused(String),
    Failed(String),
}

impl CmdError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CmdError::Failed(_) => 1,
            CmdError::Usage(_) => 2,
            CmdError::Refused(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CmdError::Usage(m) | CmdError::Refused(m) | CmdError::Failed(m) => m,
        }
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Parse(_) => CmdError::Usage(e.to_string()),
            Error::BudgetExceeded { .. } => CmdError::Refused(e.to_string()),
            _ => CmdError::Failed(e.to_string()),
        }
    }
}

type CmdResult<T> = std::result::Result<T, CmdError>;

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub timing: bool,
    pub allow_large: bool,
}

impl Settings {
    fn ms(&self, d: Duration) -> Option<f64> {
        self.timing.then_some(d.as_secs_f64() * 1e3)
    }
}

pub fn check_d(d: u32, settings: Settings) -> CmdResult<()> {
    if d == 0 {
        return Err(CmdError::Usage("--d must be at least 1".into()));
    }
    if d > DEFAULT_MAX_D && !settings.allow_large {
        return Err(CmdError::Refused(format!("d = {d} exceeds {DEFAULT_MAX_D}; pass --allow-large to compute it anyway")));
    }
    Ok(())
}

fn check_m(d: u32, m: u32) -> CmdResult<()> {
    if m > d * d {
        return Err(CmdError::Usage(format!("--m must be at most d² = {}", d * d)));
    }
    Ok(())
}

fn ms_for(d: u32, m: Option<u32>) -> CmdResult<Vec<u32>> {
    match m {
        Some(m) => {
            check_m(d, m)?;
            Ok(vec![m])
        }
        None => Ok((0..=d * d).collect()),
    }
}

fn entry(name: String, d: u32, m: Option<u32>, poly: &QPoly) -> Entry {
    Entry { name, d, m, l: None, poly: PolyJson::from_qpoly(poly), factored: None }
}

fn s_entries(d: u32, m: Option<u32>, s: &[GenSubspacePolynomial]) -> CmdResult<Vec<Entry>> {
    Ok(ms_for(d, m)?
        .into_iter()
        .map(|m| entry(format!("s_{d}^({m})"), d, Some(m), &s[m as usize].value))
        .collect())
}

pub fn s_poly(d: u32, m: Option<u32>, settings: Settings) -> CmdResult<OutputDocument> {
    check_d(d, settings)?;
    if let Some(m) = m {
        check_m(d, m)?;
    }
    let s = compute_s_polys(d)?;
    Ok(OutputDocument::entries(Kind::STable, s_entries(d, m, &s)?))
}

fn a_entries(d: u32, ms: &[u32]) -> CmdResult<Vec<Entry>> {
    ms.iter()
        .map(|&m| Ok(entry(format!("a_{d}^({m})"), d, Some(m), &ai_polynomial(d, m)?.value)))
        .collect()
}

pub fn a_poly(d: u32, m: Option<u32>, two_variable: bool, settings: Settings) -> CmdResult<OutputDocument> {
    check_d(d, settings)?;
    if !two_variable {
        let ms = match m {
            Some(m) => vec![m],
            None => (0..=d * d).collect(),
        };
        return Ok(OutputDocument::entries(Kind::ATable, a_entries(d, &ms)?));
    }
    let s = compute_s_polys(d)?;
    let a = compute_a_two_variable(d, &s)?;
    let factored = a.factored.as_ref().map(|f| FactoredJson {
        prefactor: RatFuncJson::from_ratfunc(&f.prefactor),
        u_power: f.u_power,
        reduced: PolyJson::from_upoly(&f.reduced),
        text: render::factored(&f.prefactor, f.u_power, &f.reduced, Style::Plain),
    });
    let e = Entry {
        name: format!("a_{d}(q,u)"),
        d,
        m: None,
        l: None,
        poly: PolyJson::from_upoly(&a.value),
        factored,
    };
    Ok(OutputDocument::entries(Kind::A2, vec![e]))
}

fn r_entries(d: u32, m: Option<u32>, s: &[GenSubspacePolynomial]) -> CmdResult<Vec<Entry>> {
    ms_for(d, m)?
        .into_iter()
        .map(|m| Ok(entry(format!("r_{d}^({m})"), d, Some(m), &compute_r_poly(d, m, &s[m as usize].value)?)))
        .collect()
}

pub fn r_poly(d: u32, m: Option<u32>, settings: Settings) -> CmdResult<OutputDocument> {
    check_d(d, settings)?;
    let s = compute_s_polys(d)?;
    Ok(OutputDocument::entries(Kind::RTable, r_entries(d, m, &s)?))
}

pub fn mahler(d: u32, settings: Settings) -> CmdResult<OutputDocument> {
    check_d(d, settings)?;
    let s = compute_s_polys(d)?;
    let exp = mahler_expansion(d, &s)?;
    let entries = exp
        .coefficients
        .iter()
        .enumerate()
        .map(|(l, c)| Entry {
            name: format!("c_{l}"),
            d,
            m: None,
            l: Some(l as u32),
            poly: PolyJson::from_qpoly(c),
            factored: None,
        })
        .collect();
    Ok(OutputDocument::entries(Kind::Mahler, entries))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    S,
    A,
    R,
}

/// Every `d` in `1..=max_d`, with `m` up to `min(d², max_m)`.
pub fn table(kind: TableKind, max_d: u32, max_m: Option<u32>, settings: Settings) -> CmdResult<OutputDocument> {
    check_d(max_d, settings)?;
    let mut entries = Vec::new();
    for d in 1..=max_d {
        let top = max_m.map_or(d * d, |m| m.min(d * d));
        let ms: Vec<u32> = (0..=top).collect();
        match kind {
            TableKind::A => entries.extend(a_entries(d, &ms)?),
            TableKind::S | TableKind::R => {
                let s = compute_s_polys(d)?;
                for m in ms {
                    entries.extend(if kind == TableKind::S { s_entries(d, Some(m), &s)? } else { r_entries(d, Some(m), &s)? });
                }
            }
        }
    }
    let kind = match kind {
        TableKind::S => Kind::STable,
        TableKind::A => Kind::ATable,
        TableKind::R => Kind::RTable,
    };
    Ok(OutputDocument::entries(kind, entries))
}

/// `--budget` wins over `GENPOLY_BUDGET`, which wins over `default`.
pub fn budget(flag: Option<&str>, default: u64) -> CmdResult<u64> {
    match flag {
        Some(s) => parse_budget(s).ok_or_else(|| CmdError::Usage(format!("invalid budget {s:?}"))),
        None => Ok(budget_from_env(default)),
    }
}

fn workers(n: usize) -> CmdResult<usize> {
    if n == 0 {
        return Err(CmdError::Usage("--workers must be at least 1".into()));
    }
    Ok(n)
}

fn at(p: u32, poly: &QPoly) -> Rational {
    poly.eval_int(p as i64)
}

pub struct CensusArgs<'a> {
    pub d: u32,
    pub p: u32,
    pub m: u32,
    pub tuples: bool,
    pub budget: Option<&'a str>,
    pub workers: usize,
}

pub fn census(args: CensusArgs<'_>, settings: Settings) -> CmdResult<OutputDocument> {
    let CensusArgs { d, p, m, tuples, .. } = args;
    let workers = workers(args.workers)?;
    if d == 0 {
        return Err(CmdError::Usage("--d must be at least 1".into()));
    }
    let json = if tuples {
        let opts = CensusOptions { budget: budget(args.budget, DEFAULT_TUPLE_BUDGET)?, workers };
        let c = census_ai_tuples(d, p, m, opts)?;
        let poly = at(p, &pgl_order(d).mul(&ai_polynomial(d, m)?.value));
        CensusJson {
            d,
            p,
            m,
            mode: CensusMode::Tuples,
            total: c.total_tuples,
            generating: c.generating_tuples,
            agrees: poly == Rational::from_integer(c.generating_tuples.into()),
            poly: poly.to_string(),
            elapsed_ms: settings.ms(c.elapsed),
        }
    } else {
        let opts = CensusOptions { budget: budget(args.budget, DEFAULT_SUBSPACE_BUDGET)?, workers };
        let c = census_generating_subspaces(d, p, m, opts)?;
        check_m(d, m)?;
        let s = compute_s_polys(d)?;
        let poly = at(p, &s[m as usize].value);
        CensusJson {
            d,
            p,
            m,
            mode: CensusMode::Subspaces,
            total: c.total_subspaces,
            generating: c.generating_subspaces,
            agrees: poly == Rational::from_integer(c.generating_subspaces.into()),
            poly: poly.to_string(),
            elapsed_ms: settings.ms(c.elapsed),
        }
    };
    Ok(OutputDocument { kind: Kind::Census, entries: vec![], census: Some(json), report: None })
}

pub struct VerifyArgs<'a> {
    pub suite: Suite,
    pub budget: Option<&'a str>,
    pub workers: usize,
    pub max_d: u32,
}

/// Returns the report and whether every check passed.
pub fn verify(args: VerifyArgs<'_>, settings: Settings) -> CmdResult<(OutputDocument, bool)> {
    check_d(args.max_d, settings)?;
    let opts = VerifyOptions {
        census: CensusOptions { budget: budget(args.budget, DEFAULT_SUBSPACE_BUDGET)?, workers: workers(args.workers)? },
        max_d: args.max_d,
        ..VerifyOptions::default()
    };
    let results = verify::run(args.suite, &opts);
    let passed = results.iter().all(|c| c.passed);
    let checks = results
        .into_iter()
        .map(|c| CheckJson {
            suite: c.suite.to_string(),
            name: c.name,
            passed: c.passed,
            detail: c.detail,
            elapsed_ms: settings.ms(c.elapsed),
        })
        .collect();
    let report = ReportJson { suite: args.suite.to_string(), passed, checks };
    Ok((OutputDocument { kind: Kind::VerifyReport, entries: vec![], census: None, report: Some(report) }, passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: Settings = Settings { timing: false, allow_large: false };

    #[test]
    fn size_limits() {
        assert_eq!(check_d(0, S).unwrap_err().exit_code(), 2);
        assert_eq!(check_d(6, S).unwrap_err().exit_code(), 3);
        assert!(check_d(6, Settings { allow_large: true, ..S }).is_ok());
        assert_eq!(s_poly(2, Some(5), S).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn budget_flag_parsing() {
        assert_eq!(budget(Some("1e3"), 5).unwrap(), 1000);
        assert_eq!(budget(Some("abc"), 5).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn a_poly_specializations() {
        let doc = a_poly(2, Some(2), false, S).unwrap();
        assert_eq!(doc.entries[0].poly.to_qpoly().unwrap(), QPoly::from_i64s(&[0, 0, 0, 0, -1, 1]));
        let doc = a_poly(2, Some(1), false, S).unwrap();
        assert!(doc.entries[0].poly.terms.is_empty());
    }

    #[test]
    fn factored_text_expands_back() {
        for d in 2..=3 {
            let doc = a_poly(d, None, true, S).unwrap();
            let e = &doc.entries[0];
            let text = &e.factored.as_ref().unwrap().text;
            let parsed = genpoly::parse::parse_expr(text).unwrap();
            assert_eq!(parsed, e.poly.to_upoly().unwrap(), "{text}");
        }
    }

    #[test]
    fn census_examples() {
        let args = CensusArgs { d: 2, p: 2, m: 2, tuples: false, budget: None, workers: 1 };
        let c = census(args, S).unwrap().census.unwrap();
        assert_eq!((c.total, c.generating, c.poly.as_str(), c.agrees), (35, 16, "16", true));
        let args = CensusArgs { d: 3, p: 3, m: 5, tuples: false, budget: Some("1e7"), workers: 1 };
        assert_eq!(census(args, S).unwrap_err().exit_code(), 3);
    }
}
