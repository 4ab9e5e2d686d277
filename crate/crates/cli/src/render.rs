//! Plain, LaTeX and CSV renderings of an [`OutputDocument`].

use genpoly::{QPoly, Rational, UPoly};
use num_traits::{One, Signed, Zero};

use crate::doc::{CensusJson, Entry, Kind, OutputDocument, PolyJson, ReportJson, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Latex,
}

fn power(var: &str, k: i64, style: Style) -> String {
    match (k, style) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (_, Style::Plain) => format!("{var}^{k}"),
        (_, Style::Latex) => format!("{var}^{{{k}}}"),
    }
}

fn magnitude(c: &Rational, style: Style) -> String {
    let c = c.abs();
    match style {
        _ if c.is_integer() => c.to_string(),
        Style::Plain => c.to_string(),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
    }
}

/// `c · var^k` without its sign.
fn unsigned_term(c: &Rational, var_part: &str, style: Style) -> String {
    if var_part.is_empty() {
        return magnitude(c, style);
    }
    if c.abs().is_one() {
        return var_part.to_string();
    }
    let mag = magnitude(c, style);
    if style == Style::Plain && !c.is_integer() {
        format!("{mag}*{var_part}")
    } else {
        format!("{mag}{var_part}")
    }
}

fn join_signed(parts: &[(bool, String)]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        if *neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        out.push_str(body);
    }
    out
}

/// Descending powers of `q`.
pub fn qpoly(p: &QPoly, style: Style) -> String {
    let parts: Vec<(bool, String)> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (c.is_negative(), unsigned_term(c, &power("q", k as i64, style), style)))
        .collect();
    join_signed(&parts)
}

fn paren(s: &str, style: Style) -> String {
    match style {
        Style::Plain => format!("({s})"),
        Style::Latex => format!("\\left({s}\\right)"),
    }
}

/// `Σ_k c_k(q) u^k` in descending powers of `u`, each `c_k` a polynomial.
pub fn u_sum(terms: &[(i64, QPoly)], style: Style) -> String {
    let mut parts = Vec::new();
    for (k, c) in terms.iter().rev() {
        if c.is_zero() {
            continue;
        }
        let u = power("u", *k, style);
        let nonzero: Vec<(usize, Rational)> =
            c.coeffs().into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        if let [(j, x)] = nonzero.as_slice() {
            let var = format!("{}{u}", power("q", *j as i64, style));
            parts.push((x.is_negative(), unsigned_term(x, &var, style)));
        } else if u.is_empty() && terms.len() == 1 {
            parts.push((false, qpoly(c, style)));
        } else {
            parts.push((false, format!("{}{u}", paren(&qpoly(c, style), style))));
        }
    }
    join_signed(&parts)
}

fn fraction(num: &str, den: &QPoly, style: Style) -> String {
    if den.is_one() {
        return num.to_string();
    }
    match style {
        Style::Plain => format!("({num})/({})", qpoly(den, style)),
        Style::Latex => format!("\\frac{{{num}}}{{{}}}", qpoly(den, style)),
    }
}

/// `a` as a single fraction `Σ N_k(q) u^k / D(q)`.
pub fn upoly(a: &UPoly, style: Style) -> String {
    let (terms, den) = a.common_denominator();
    fraction(&u_sum(&terms, style), &den, style)
}

/// `prefactor · u^power (u-1)(u-q) · reduced`, as one fraction.
pub fn factored(prefactor: &genpoly::QRatFunc, u_power: u32, reduced: &UPoly, style: Style) -> String {
    let (terms, rden) = reduced.common_denominator();
    let den = prefactor.den().mul(&rden);
    let mut num = String::new();
    let pnum = prefactor.num();
    if !pnum.is_one() {
        num.push_str(&paren(&qpoly(&pnum, style), style));
    }
    num.push_str(&power("u", u_power as i64, style));
    num.push_str("(u-1)(u-q)");
    let body = u_sum(&terms, style);
    if body != "1" {
        num.push_str(&paren(&body, style));
    }
    if style == Style::Plain && num.starts_with('(') && den.is_one() {
        return num;
    }
    fraction(&num, &den, style)
}

fn latex_name(name: &str) -> String {
    match name.split_once("^(") {
        Some((head, rest)) => format!("{head}^{{({rest}}}"),
        None => name.to_string(),
    }
}

fn poly_text(p: &PolyJson, style: Style) -> Result<String, String> {
    if p.is_two_variable() {
        Ok(upoly(&p.to_upoly()?, style))
    } else {
        Ok(qpoly(&p.to_qpoly()?, style))
    }
}

fn factored_text(e: &Entry, style: Style) -> Result<Option<String>, String> {
    let Some(f) = &e.factored else { return Ok(None) };
    match style {
        Style::Plain => Ok(Some(f.text.clone())),
        Style::Latex => {
            let pre = f.prefactor.to_ratfunc()?;
            Ok(Some(factored(&pre, f.u_power, &f.reduced.to_upoly()?, style)))
        }
    }
}

fn render_entries(entries: &[Entry], style: Style) -> Result<String, String> {
    let mut out = String::new();
    match style {
        Style::Plain => {
            for e in entries {
                out.push_str(&format!("{} = {}\n", e.name, poly_text(&e.poly, style)?));
                if let Some(t) = factored_text(e, style)? {
                    out.push_str(&format!("{} = {}\n", e.name, t));
                }
            }
        }
        Style::Latex => {
            let shown: Vec<&Entry> = entries.iter().filter(|e| !e.poly.terms.is_empty() || entries.len() == 1).collect();
            let mut lines = Vec::new();
            for e in &shown {
                lines.push(format!("{}&=&{}", latex_name(&e.name), poly_text(&e.poly, style)?));
                if let Some(t) = factored_text(e, style)? {
                    lines.push(format!("&=&{t}"));
                }
            }
            out.push_str("\\begin{eqnarray*}\n");
            let n = lines.len();
            for (i, l) in lines.into_iter().enumerate() {
                out.push_str(&l);
                out.push_str(if i + 1 == n { ".\n" } else { ",\\\\\n" });
            }
            out.push_str("\\end{eqnarray*}\n");
        }
    }
    Ok(out)
}

fn ms(x: Option<f64>) -> String {
    x.map(|v| format!(" ({v:.1} ms)")).unwrap_or_default()
}

fn render_census(c: &CensusJson, style: Style) -> String {
    let what = match c.mode {
        crate::doc::CensusMode::Subspaces => format!("s_{}^({})({})", c.d, c.m, c.p),
        crate::doc::CensusMode::Tuples => format!("|PGL_{}| a_{}^({})({})", c.d, c.d, c.m, c.p),
    };
    match style {
        Style::Plain => format!(
            "d={} p={} m={} {:?}: total {}, generating {}, {} = {}, {}{}\n",
            c.d,
            c.p,
            c.m,
            c.mode,
            c.total,
            c.generating,
            what,
            c.poly,
            if c.agrees { "agrees" } else { "DISAGREES" },
            ms(c.elapsed_ms)
        )
        .to_lowercase(),
        Style::Latex => format!(
            "\\begin{{tabular}}{{rrrrrrl}}\n$d$ & $p$ & $m$ & total & generating & polynomial & agrees\\\\\n\\hline\n{} & {} & {} & {} & {} & {} & {}\n\\end{{tabular}}\n",
            c.d, c.p, c.m, c.total, c.generating, c.poly, if c.agrees { "yes" } else { "no" }
        ),
    }
}

fn render_report(r: &ReportJson, style: Style) -> String {
    let passed = r.checks.iter().filter(|c| c.passed).count();
    match style {
        Style::Plain => {
            let mut out = String::new();
            for c in &r.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} [{}] {}: {}{}\n", c.suite, c.name, c.detail, ms(c.elapsed_ms)));
            }
            out.push_str(&format!("{passed}/{} checks passed\n", r.checks.len()));
            out
        }
        Style::Latex => {
            let mut out = String::from("\\begin{tabular}{llp{8cm}}\nsuite & check & result\\\\\n\\hline\n");
            for c in &r.checks {
                let name = c.name.replace('_', "\\_").replace('^', "\\^{}");
                out.push_str(&format!("{} & {} & {}\\\\\n", c.suite, name, if c.passed { "PASS" } else { "FAIL" }));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

pub fn render(doc: &OutputDocument, style: Style) -> Result<String, String> {
    let mut out = String::new();
    if !doc.entries.is_empty() || matches!(doc.kind, Kind::STable | Kind::ATable | Kind::A2 | Kind::RTable | Kind::Mahler) {
        out.push_str(&render_entries(&doc.entries, style)?);
    }
    if let Some(c) = &doc.census {
        out.push_str(&render_census(c, style));
    }
    if let Some(r) = &doc.report {
        out.push_str(&render_report(r, style));
    }
    Ok(out)
}

/// One row per polynomial term; two-variable entries add rows for the
/// denominator under the name `<name>/denominator`.
pub fn render_csv(doc: &OutputDocument) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| e.to_string();
    if let Some(c) = &doc.census {
        w.write_record(["d", "p", "m", "mode", "total", "generating", "poly", "agrees", "elapsed_ms"]).map_err(err)?;
        let mode = format!("{:?}", c.mode).to_lowercase();
        let elapsed = c.elapsed_ms.map(|x| x.to_string()).unwrap_or_default();
        w.write_record([
            c.d.to_string(),
            c.p.to_string(),
            c.m.to_string(),
            mode,
            c.total.to_string(),
            c.generating.to_string(),
            c.poly.clone(),
            c.agrees.to_string(),
            elapsed,
        ])
        .map_err(err)?;
    } else if let Some(r) = &doc.report {
        w.write_record(["suite", "name", "passed", "detail", "elapsed_ms"]).map_err(err)?;
        for c in &r.checks {
            let elapsed = c.elapsed_ms.map(|x| x.to_string()).unwrap_or_default();
            w.write_record([c.suite.clone(), c.name.clone(), c.passed.to_string(), c.detail.clone(), elapsed])
                .map_err(err)?;
        }
    } else {
        w.write_record(["name", "d", "m", "l", "deg_q", "deg_u", "num", "den"]).map_err(err)?;
        let opt = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_default();
        for e in &doc.entries {
            let mut rows: Vec<(String, &Term)> = e.poly.terms.iter().map(|t| (e.name.clone(), t)).collect();
            if let Some(den) = &e.poly.denominator {
                rows.extend(den.terms.iter().map(|t| (format!("{}/denominator", e.name), t)));
            }
            for (name, t) in rows {
                let (dq, du, n, d) = match t {
                    Term::Q(j, n, d) => (j.to_string(), String::new(), n, d),
                    Term::QU(j, k, n, d) => (j.to_string(), k.to_string(), n, d),
                };
                w.write_record([name, e.d.to_string(), opt(e.m), opt(e.l), dq, du, n.clone(), d.clone()])
                    .map_err(err)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}
