//! Reference tables transcribed from the worked examples, embedded at
//! compile time from `golden/`.

use crate::algebra::{QPoly, QRatFunc, UPoly};
use crate::counting::extract_factorization;
use crate::error::{Error, Result};
use crate::parse::{parse_expr, parse_qpoly, parse_ratfunc};

pub const S_POLYS: &str = include_str!("../golden/s_polys.txt");
pub const A_TWO_VARIABLE: &str = include_str!("../golden/a_two_variable.txt");
pub const R_SPOT: &str = include_str!("../golden/r_spot.txt");
pub const ERRATA: &str = include_str!("../golden/errata.txt");

/// Splits a golden file into `(label, expression)` entries. Blank lines and
/// `#` comments are skipped; indented lines continue the previous entry.
pub fn entries(text: &str) -> Result<Vec<(String, String)>> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            let last = out
                .last_mut()
                .ok_or_else(|| Error::Parse("continuation line without an entry".into()))?;
            last.1.push(' ');
            last.1.push_str(trimmed);
            continue;
        }
        let (label, expr) = trimmed
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("missing '=' in {trimmed:?}")))?;
        out.push((label.trim().to_string(), expr.trim().to_string()));
    }
    Ok(out)
}

fn index(label: &str, prefix: &str) -> Result<(u32, Option<u32>)> {
    let bad = || Error::Parse(format!("bad label {label:?}"));
    let rest = label.strip_prefix(prefix).ok_or_else(bad)?;
    let (d, m) = match rest.split_once("^(") {
        Some((d, m)) => (d, Some(m.strip_suffix(')').ok_or_else(bad)?)),
        None => (rest, None),
    };
    let d = d.parse().map_err(|_| bad())?;
    let m = m.map(|m| m.parse().map_err(|_| bad())).transpose()?;
    Ok((d, m))
}

/// A transcribed `s_d^(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SEntry {
    pub d: u32,
    pub m: u32,
    pub value: QPoly,
}

pub fn s_table() -> Result<Vec<SEntry>> {
    entries(S_POLYS)?
        .into_iter()
        .map(|(label, expr)| {
            let (d, m) = index(&label, "s_")?;
            let m = m.ok_or_else(|| Error::Parse(format!("missing m in {label:?}")))?;
            Ok(SEntry { d, m, value: parse_qpoly(&expr)? })
        })
        .collect()
}

/// Transcribed `a_d(q,u)` for small `d`, expanded.
pub fn a_two_variable_table() -> Result<Vec<(u32, UPoly)>> {
    entries(A_TWO_VARIABLE)?
        .into_iter()
        .map(|(label, expr)| Ok((index(&label, "a_")?.0, parse_expr(&expr)?)))
        .collect()
}

/// A corrected coefficient of `u^u_power` in the reduced factor `ā_d` of a
/// transcribed `a_d(q,u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Erratum {
    pub d: u32,
    pub u_power: i64,
    pub coefficient: QRatFunc,
}

pub fn errata() -> Result<Vec<Erratum>> {
    entries(ERRATA)?
        .into_iter()
        .map(|(label, expr)| {
            let bad = || Error::Parse(format!("bad erratum label {label:?}"));
            let (head, power) = label.split_once(' ').ok_or_else(bad)?;
            let d = index(head, "a_")?.0;
            let u_power = power.strip_prefix("u^").and_then(|k| k.parse().ok()).ok_or_else(bad)?;
            Ok(Erratum { d, u_power, coefficient: parse_ratfunc(&expr)? })
        })
        .collect()
}

/// Applies the errata for `a_d` to a transcribed `a_d(q,u)`. Returns the
/// corrected polynomial and the `u`-powers that were changed.
pub fn apply_errata(d: u32, printed: &UPoly) -> Result<(UPoly, Vec<i64>)> {
    let fixes: Vec<Erratum> = errata()?.into_iter().filter(|e| e.d == d).collect();
    if fixes.is_empty() {
        return Ok((printed.clone(), Vec::new()));
    }
    let mut f = extract_factorization(d, printed)?;
    for e in &fixes {
        let old = f.reduced.coeff(e.u_power);
        f.reduced = f.reduced.add(&UPoly::monomial(e.coefficient.sub(&old), e.u_power));
    }
    Ok((f.expand(), fixes.iter().map(|e| e.u_power).collect()))
}

/// Reference data for `r_4^(9)`: the polynomial truncated to degree 6 and
/// the leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSpot {
    pub d: u32,
    pub m: u32,
    pub low: QPoly,
    pub low_degree: usize,
    pub lead: QPoly,
}

pub fn r_spot() -> Result<RSpot> {
    let mut low = None;
    let mut lead = None;
    let mut dm = None;
    for (label, expr) in entries(R_SPOT)? {
        let (head, kind) = label
            .split_once(' ')
            .ok_or_else(|| Error::Parse(format!("bad label {label:?}")))?;
        let (d, m) = index(head, "r_")?;
        dm = Some((d, m.unwrap_or(0)));
        match kind {
            "low" => low = Some(parse_qpoly(&expr)?),
            "lead" => lead = Some(parse_qpoly(&expr)?),
            other => return Err(Error::Parse(format!("unknown entry {other:?}"))),
        }
    }
    let missing = || Error::Parse("incomplete r table".into());
    let (d, m) = dm.ok_or_else(missing)?;
    Ok(RSpot { d, m, low: low.ok_or_else(missing)?, low_degree: 6, lead: lead.ok_or_else(missing)? })
}

/// `p` with all terms above degree `k` dropped.
pub fn truncate(p: &QPoly, k: usize) -> QPoly {
    let cs = p.coeffs();
    QPoly::from_coeffs(&cs[..cs.len().min(k + 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_files_parse() {
        let s = s_table().unwrap();
        assert_eq!(s.len(), 14);
        let s35 = s.iter().find(|e| e.d == 3 && e.m == 5).unwrap();
        assert_eq!(s35.value.degree(), Some(20));
        assert_eq!(s35.value.valuation(), 4);
        let a = a_two_variable_table().unwrap();
        assert_eq!(a.iter().map(|e| e.0).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(a[3].1.degree(), Some(4 + 2 + 10));
        let r = r_spot().unwrap();
        assert_eq!((r.d, r.m), (4, 9));
        assert_eq!(r.lead, QPoly::from_int(2).shift(39));
    }

    #[test]
    fn errata_touch_only_the_listed_coefficient() {
        let e = errata().unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!((e[0].d, e[0].u_power), (4, 2));
        let a4 = &a_two_variable_table().unwrap()[3].1;
        let (fixed, powers) = apply_errata(4, a4).unwrap();
        assert_eq!(powers, vec![2]);
        let before = extract_factorization(4, a4).unwrap().reduced;
        let after = extract_factorization(4, &fixed).unwrap().reduced;
        let changed: Vec<i64> = (0..=10).filter(|&k| before.coeff(k) != after.coeff(k)).collect();
        assert_eq!(changed, vec![2]);
        let a2 = &a_two_variable_table().unwrap()[1].1;
        assert_eq!(apply_errata(2, a2).unwrap(), (a2.clone(), vec![]));
    }

    #[test]
    fn truncation() {
        let p = QPoly::from_i64s(&[1, 2, 3, 4]);
        assert_eq!(truncate(&p, 1), QPoly::from_i64s(&[1, 2]));
        assert_eq!(truncate(&p, 9), p);
    }
}
