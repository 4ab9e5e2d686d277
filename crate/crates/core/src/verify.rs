//! Verification suites: algebraic identities, the transcribed example
//! tables, the finite-field oracle, and the structural theorems.
//!
//! Every check returns a [`CheckResult`]; a failing check never aborts the
//! suite.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{falling_q_product, gaussian_binomial, pgl_order, QPoly, QRatFunc, Rational, UPoly};
use crate::counting::{
    compute_a_two_variable, compute_r_poly, compute_s_polys, constant_term_check, factorial,
    mahler_expansion, r_degree_bound, s_poly_closed_form, solve_s_polys, AiTable,
};
use crate::error::{Error, Result};
use crate::oracle::{
    census_ai_tuples, census_decomposition_check, census_generating_subspaces, closure, closure_rounds,
    generates_full_algebra, CensusOptions, FFMatrix, FFSubspace, PrimeField, Vector, MAX_N,
};
use crate::series::{QSeries, Twist};
use crate::tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    GoldenTables,
    Oracle,
    Theorems,
    All,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Identities, Suite::GoldenTables, Suite::Oracle, Suite::Theorems];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::GoldenTables => "paper-tables",
            Suite::Oracle => "oracle",
            Suite::Theorems => "theorems",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Identities, Suite::GoldenTables, Suite::Oracle, Suite::Theorems, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub census: CensusOptions,
    /// Largest `d` for the theorem suite.
    pub max_d: u32,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { census: CensusOptions::default(), max_d: 5, seed: 0x5eed }
    }
}

/// Runs `f` and records its outcome. `Ok(detail)` passes.
pub fn check(suite: Suite, name: impl Into<String>, f: impl FnOnce() -> Result<String>) -> CheckResult {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let (passed, detail) = match out {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    CheckResult { suite, name: name.into(), passed, detail, elapsed }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::CheckFailed(what()))
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Vec<CheckResult> {
    match suite {
        Suite::Identities => identities(opts),
        Suite::GoldenTables => golden_tables(),
        Suite::Oracle => oracle(opts),
        Suite::Theorems => theorems(opts.max_d),
        Suite::All => Suite::ALL.iter().flat_map(|&s| run(s, opts)).collect(),
    }
}

// ---------------------------------------------------------------- identities

fn gb(a: i64, b: u32) -> QRatFunc {
    gaussian_binomial(a, b)
}

fn signed_q_pow(sign_odd: bool, e: i64) -> QRatFunc {
    let x = QRatFunc::q_pow(e);
    if sign_odd {
        x.neg()
    } else {
        x
    }
}

/// `[a'+a'' choose b] = Σ q^((a'-b')b'') [a' choose b'][a'' choose b'']`.
pub fn identity_1(max: i64) -> Result<usize> {
    let mut n = 0;
    for a1 in 0..=max {
        for a2 in 0..=max {
            for b in 0..=(a1 + a2) {
                let mut rhs = QRatFunc::zero();
                for b1 in 0..=b.min(a1) {
                    let b2 = b - b1;
                    if b2 > a2 {
                        continue;
                    }
                    let t = QRatFunc::q_pow((a1 - b1) * b2).mul(&gb(a1, b1 as u32)).mul(&gb(a2, b2 as u32));
                    rhs = rhs.add(&t);
                }
                ensure(gb(a1 + a2, b as u32) == rhs, || format!("identity (1) at a'={a1}, a''={a2}, b={b}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `[a choose b] = (-1)^b q^(ab - b(b-1)/2) [-a+b-1 choose b]`.
pub fn identity_2(range: std::ops::RangeInclusive<i64>, max_b: u32) -> Result<usize> {
    let mut n = 0;
    for a in range {
        for b in 0..=max_b as i64 {
            let rhs = signed_q_pow(b % 2 == 1, a * b - b * (b - 1) / 2).mul(&gb(-a + b - 1, b as u32));
            ensure(gb(a, b as u32) == rhs, || format!("identity (2) at a={a}, b={b}"))?;
            n += 1;
        }
    }
    Ok(n)
}

/// `Σ_b (-1)^b q^(b(b-1)/2) [a choose b] = δ_{a,0}`.
pub fn identity_3(max: i64) -> Result<usize> {
    for a in 0..=max {
        let sum = (0..=a).fold(QRatFunc::zero(), |acc, b| {
            acc.add(&signed_q_pow(b % 2 == 1, b * (b - 1) / 2).mul(&gb(a, b as u32)))
        });
        let expect = if a == 0 { QRatFunc::one() } else { QRatFunc::zero() };
        ensure(sum == expect, || format!("identity (3) at a={a}"))?;
    }
    Ok(max as usize + 1)
}

/// `(u-1)...(u-q^(a-1)) = Σ_b (-1)^b q^(b(b-1)/2) [a choose b] u^(a-b)`.
pub fn identity_4(max: i64) -> Result<usize> {
    for a in 0..=max {
        let lhs = falling_q_product(&UPoly::u(), a as u32);
        let rhs = (0..=a).fold(UPoly::zero(), |acc, b| {
            let c = signed_q_pow(b % 2 == 1, b * (b - 1) / 2).mul(&gb(a, b as u32));
            acc.add(&UPoly::monomial(c, a - b))
        });
        ensure(lhs == rhs, || format!("identity (4) at a={a}"))?;
    }
    Ok(max as usize + 1)
}

/// A small random element of `Q(q)`: an integer polynomial of degree <= 2,
/// sometimes divided by `1-q^k`.
pub fn random_ratfunc(rng: &mut impl Rng) -> QRatFunc {
    let cs: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
    let p = QRatFunc::from_poly(&QPoly::from_i64s(&cs));
    if rng.gen_bool(0.3) {
        let k = rng.gen_range(1..=3);
        p.div(&QRatFunc::one().sub(&QRatFunc::q_pow(k))).expect("nonzero")
    } else {
        p
    }
}

/// Random series with zero constant term.
pub fn random_series(rng: &mut impl Rng, order: usize) -> QSeries {
    let mut cs: Vec<QRatFunc> = (0..=order).map(|_| random_ratfunc(rng)).collect();
    cs[0] = QRatFunc::zero();
    QSeries::new(order, cs)
}

fn identities(opts: &VerifyOptions) -> Vec<CheckResult> {
    let s = Suite::Identities;
    let n_rand = 50;
    let order = 6;
    let mut out = vec![
        check(s, "identity (1), 0 <= a',a'' <= 6", || Ok(format!("{} cases", identity_1(6)?))),
        check(s, "identity (2), -6 <= a <= 6, 0 <= b <= 6", || Ok(format!("{} cases", identity_2(-6..=6, 6)?))),
        check(s, "identity (3), 0 <= a <= 10", || Ok(format!("{} cases", identity_3(10)?))),
        check(s, "identity (4), 0 <= a <= 10", || Ok(format!("{} cases", identity_4(10)?))),
        check(s, "Gaussian binomial at q=1 is the binomial coefficient", || {
            for a in 0..=10i64 {
                let mut c = Rational::one();
                for b in 0..=a as u32 {
                    ensure(gb(a, b).eval_int(1)? == c, || format!("[{a} choose {b}] at q=1"))?;
                    c = c * Rational::from_integer((a - b as i64).into()) / Rational::from_integer((b + 1).into());
                }
            }
            Ok("0 <= b <= a <= 10".into())
        }),
    ];
    let mut rng = StdRng::seed_from_u64(opts.seed);
    out.push(check(s, format!("Exp/Log round trip, {n_rand} random series, N={order}"), || {
        for k in 0..n_rand {
            let g = random_series(&mut rng, order);
            let f = g.plethystic_exp()?;
            ensure(f.plethystic_log()? == g, || format!("Log(Exp(g)) != g for sample {k}"))?;
            ensure(f.log()?.exp()? == f, || format!("exp(log(f)) != f for sample {k}"))?;
        }
        Ok(format!("{n_rand} samples"))
    }));
    out.push(check(s, "Exp is a homomorphism", || {
        for k in 0..10 {
            let (f, g) = (random_series(&mut rng, order), random_series(&mut rng, order));
            let lhs = f.add(&g)?.plethystic_exp()?;
            let rhs = f.plethystic_exp()?.mul(&g.plethystic_exp()?)?;
            ensure(lhs == rhs, || format!("Exp(f+g) != Exp(f)Exp(g) for sample {k}"))?;
        }
        Ok("10 samples".into())
    }));
    out.push(check(s, "Exp on generators q^i t^d", || {
        for i in 0..=3i64 {
            for d in 1..=3usize {
                let g = QSeries::monomial(order, QRatFunc::q_pow(i), d);
                let expect = QSeries::one(order).sub(&g)?.invert()?;
                ensure(g.plethystic_exp()? == expect, || format!("Exp(q^{i} t^{d})"))?;
            }
        }
        Ok("0 <= i <= 3, 1 <= d <= 3".into())
    }));
    out.push(check(s, "Adams operations are ring homomorphisms", || {
        for k in 0..10 {
            let (f, g) = (random_series(&mut rng, order), random_series(&mut rng, order));
            let (a, b) = (random_ratfunc(&mut rng), random_ratfunc(&mut rng));
            for i in 1..=3 {
                ensure(f.mul(&g)?.adams(i) == f.adams(i).mul(&g.adams(i))?, || format!("series product, i={i}, sample {k}"))?;
                ensure(f.add(&g)?.adams(i) == f.adams(i).add(&g.adams(i))?, || format!("series sum, i={i}, sample {k}"))?;
                ensure(a.mul(&b).adams(i) == a.adams(i).mul(&b.adams(i)), || format!("Q(q) product, i={i}, sample {k}"))?;
                ensure(a.add(&b).adams(i) == a.adams(i).add(&b.adams(i)), || format!("Q(q) sum, i={i}, sample {k}"))?;
            }
        }
        Ok("10 samples, 1 <= i <= 3".into())
    }));
    out.push(check(s, "twist turns the twisted product into the ordinary one", || {
        for k in 0..10 {
            let mut f = random_series(&mut rng, order);
            let mut g = random_series(&mut rng, order);
            f = f.add(&QSeries::one(order))?;
            g = g.add(&QSeries::one(order))?;
            for m in 0..=3 {
                let lhs = f.twisted_product(&g, m)?.twist_fixed(m);
                let rhs = f.twist_fixed(m).mul(&g.twist_fixed(m))?;
                ensure(lhs == rhs, || format!("T(f∘g) != T(f)T(g) at m={m}, sample {k}"))?;
                ensure(f.twist_fixed(m).twist_fixed_inverse(m) == f, || format!("twist inverse at m={m}"))?;
            }
        }
        Ok("10 samples, 0 <= m <= 3".into())
    }));
    out.push(check(s, "two-variable twist specializes to the fixed-m twist", || {
        for k in 0..5 {
            let f = random_series(&mut rng, order).to_useries();
            let f = f.map(|d, c| c.mul(&UPoly::u().pow(d as u32)));
            for m in 0..=4u32 {
                let lhs = Twist::TwoVariable.apply(&f).at_u_q_pow(m as i64);
                let rhs = f.at_u_q_pow(m as i64).twist_fixed(m);
                ensure(lhs == rhs, || format!("u=q^{m}, sample {k}"))?;
            }
        }
        Ok("5 samples, 0 <= m <= 4".into())
    }));
    out
}

// -------------------------------------------------------------- golden tables

fn golden_tables() -> Vec<CheckResult> {
    let s = Suite::GoldenTables;
    let mut out = Vec::new();
    out.push(check(s, "s_d^(m) tables for d = 1, 2, 3", || {
        let table = tables::s_table()?;
        let mut n = 0;
        for d in 1..=3 {
            let computed = compute_s_polys(d)?;
            for e in table.iter().filter(|e| e.d == d) {
                let got = &computed[e.m as usize].value;
                ensure(*got == e.value, || format!("s_{d}^({}): computed {got}, table {}", e.m, e.value))?;
                n += 1;
            }
        }
        Ok(format!("{n} polynomials match"))
    }));
    out.push(check(s, "a_d(q,u) factored forms for d = 1..4", || {
        let table = tables::a_two_variable_table()?;
        let mut notes = Vec::new();
        for (d, printed) in &table {
            let sp = compute_s_polys(*d)?;
            let got = compute_a_two_variable(*d, &sp)?.value;
            let (expect, fixed) = tables::apply_errata(*d, printed)?;
            ensure(got == expect, || format!("a_{d}(q,u) differs from the factored form"))?;
            if !fixed.is_empty() {
                ensure(got != *printed, || format!("erratum for a_{d} is not needed"))?;
                let powers: Vec<String> = fixed.iter().map(|k| format!("u^{k}")).collect();
                notes.push(format!("a_{d} with corrected {} coefficient", powers.join(", ")));
            }
        }
        let mut detail = format!("{} polynomials match", table.len());
        if !notes.is_empty() {
            detail.push_str(&format!(" ({})", notes.join("; ")));
        }
        Ok(detail)
    }));
    out.push(check(s, "r_4^(9) low-order and leading terms", || {
        let spot = tables::r_spot()?;
        let sp = compute_s_polys(spot.d)?;
        let r = compute_r_poly(spot.d, spot.m, &sp[spot.m as usize].value)?;
        let low = tables::truncate(&r, spot.low_degree);
        ensure(low == spot.low, || format!("low terms {low}, expected {}", spot.low))?;
        let deg = r.degree().unwrap_or(0);
        let lead = QPoly::monomial(r.leading().unwrap_or_else(Rational::zero), deg);
        ensure(lead == spot.lead, || format!("leading term {lead}, expected {}", spot.lead))?;
        Ok(format!("low terms {low}, leading term {lead}"))
    }));
    out
}

// -------------------------------------------------------------------- oracle

/// Random `dim`-dimensional (at most) subspace of `M_d(F_p)`.
pub fn random_subspace(rng: &mut impl Rng, field: PrimeField, d: usize, dim: usize) -> FFSubspace {
    let vs: Vec<Vector> = (0..dim).map(|_| random_vector(rng, field, d * d)).collect();
    FFSubspace::span(field, d, &vs)
}

fn random_vector(rng: &mut impl Rng, field: PrimeField, n: usize) -> Vector {
    let mut v = [0u8; MAX_N];
    for x in v.iter_mut().take(n) {
        *x = rng.gen_range(0..field.p()) as u8;
    }
    v
}

/// Random element of `GL_d(F_p)`.
pub fn random_invertible(rng: &mut impl Rng, field: PrimeField, d: usize) -> FFMatrix {
    loop {
        let g = FFMatrix::from_vector(d, random_vector(rng, field, d * d));
        if g.inverse(field).is_some() {
            return g;
        }
    }
}

fn s_value(d: u32, m: u32, p: u32, s_cache: &[Vec<QPoly>]) -> Rational {
    s_cache[d as usize][m as usize].eval_int(p as i64)
}

fn oracle(opts: &VerifyOptions) -> Vec<CheckResult> {
    let s = Suite::Oracle;
    let copts = opts.census;
    let mut out = Vec::new();
    let s_cache: Vec<Vec<QPoly>> = match (1..=3).map(compute_s_polys).collect::<Result<Vec<_>>>() {
        Ok(v) => std::iter::once(Vec::new())
            .chain(v.into_iter().map(|col| col.into_iter().map(|g| g.value).collect()))
            .collect(),
        Err(e) => {
            out.push(check(s, "s-polynomials for the oracle comparison", || Err(e)));
            return out;
        }
    };
    let cases: Vec<(u32, u32, u32)> = [2, 3, 5]
        .iter()
        .flat_map(|&p| (0..=4).map(move |m| (2, p, m)))
        .chain([1, 2, 3, 4, 8, 9].iter().map(|&m| (3, 2, m)))
        .collect();
    for (d, p, m) in cases {
        out.push(check(s, format!("census d={d} p={p} m={m}"), || {
            let c = census_generating_subspaces(d, p, m, copts)?;
            let poly = s_value(d, m, p, &s_cache);
            ensure(Rational::from_integer(c.generating_subspaces.into()) == poly, || {
                format!("census {} vs s_{d}^({m})({p}) = {poly}", c.generating_subspaces)
            })?;
            Ok(format!("{} of {} subspaces generate", c.generating_subspaces, c.total_subspaces))
        }));
    }
    let a2 = AiTable::compute(2, 2);
    for p in [2u32, 3] {
        out.push(check(s, format!("tuple census d=2 p={p} m=2"), || {
            let a2 = a2.clone()?;
            let t = census_ai_tuples(2, p, 2, CensusOptions { budget: copts.budget.max(crate::oracle::DEFAULT_TUPLE_BUDGET), ..copts })?;
            let expect = pgl_order(2).mul(a2.get(2, 2).expect("computed")).eval_int(p as i64);
            ensure(Rational::from_integer(t.generating_tuples.into()) == expect, || {
                format!("{} generating tuples, |PGL_2| a_2^(2) = {expect}", t.generating_tuples)
            })?;
            Ok(format!("{} of {} tuples generate", t.generating_tuples, t.total_tuples))
        }));
    }
    for m in 1..=3 {
        out.push(check(s, format!("rank decomposition d=2 p=2 m={m}"), || {
            let r = census_decomposition_check(2, 2, m, copts)?;
            Ok(format!("{} = {}", r.lhs, r.rhs))
        }));
    }
    let mut rng = StdRng::seed_from_u64(opts.seed);
    out.push(check(s, "closure is idempotent, extensive and monotone", || {
        for (d, p) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let field = PrimeField::new(p)?;
            for _ in 0..20 {
                let dim = rng.gen_range(0..=3);
                let u = random_subspace(&mut rng, field, d, dim);
                let c = closure(&u);
                ensure(u.is_subspace_of(&c), || format!("U not in closure (d={d}, p={p})"))?;
                ensure(closure(&c) == c, || format!("closure not idempotent (d={d}, p={p})"))?;
                let (c2, dims) = closure_rounds(&u);
                ensure(c2 == c, || format!("round-based closure differs (d={d}, p={p})"))?;
                ensure(dims.windows(2).rev().skip(1).all(|w| w[0] < w[1]), || format!("dimensions not increasing: {dims:?}"))?;
                let v = random_subspace(&mut rng, field, d, 1);
                let uv = FFSubspace::span(field, d, &[u.basis(), v.basis()].concat());
                ensure(c.is_subspace_of(&closure(&uv)), || format!("closure not monotone (d={d}, p={p})"))?;
            }
        }
        Ok("80 samples".into())
    }));
    out.push(check(s, "generation is invariant under conjugation", || {
        for (d, p) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let field = PrimeField::new(p)?;
            for _ in 0..20 {
                let dim = rng.gen_range(1..=3);
                let u = random_subspace(&mut rng, field, d, dim);
                let g = random_invertible(&mut rng, field, d);
                let uc = u.conjugate(&g);
                ensure(generates_full_algebra(&uc) == generates_full_algebra(&u), || format!("d={d}, p={p}"))?;
                ensure(closure(&uc) == closure(&u).conjugate(&g), || format!("closure does not commute with conjugation (d={d}, p={p})"))?;
                let n = d * d;
                ensure(generates_full_algebra(&u) == (closure(&u).dim() == n), || format!("bitset and generic closure differ (d={d}, p={p})"))?;
            }
        }
        Ok("80 samples".into())
    }));
    out
}

// ------------------------------------------------------------------ theorems

/// The structural checks for one `d`.
pub fn theorem_checks(d: u32) -> Vec<CheckResult> {
    let s = Suite::Theorems;
    let n = d * d;
    let mut out = Vec::new();
    let prep = (|| -> Result<(AiTable, Vec<crate::counting::GenSubspacePolynomial>)> {
        let table = AiTable::compute(d, n + 2)?;
        let sp = solve_s_polys(d, &table.column(d))?;
        Ok((table, sp))
    })();
    let (table, sp) = match prep {
        Ok(x) => x,
        Err(e) => {
            out.push(check(s, format!("d={d}: a_d^(m) and s_d^(m) are integral"), || Err(e)));
            return out;
        }
    };
    out.push(check(s, format!("d={d}: a_d^(m) and s_d^(m) are integral"), || {
        let all_int = table.column(d).iter().all(QPoly::has_integer_coeffs) && sp.iter().all(|g| g.value.has_integer_coeffs());
        ensure(all_int, || "non-integral coefficient".into())?;
        Ok(format!("m = 0..={}", n + 2))
    }));
    out.push(check(s, format!("d={d}: closed form agrees with the triangular solve"), || {
        let col = table.column(d);
        for m in 0..=n {
            let c = s_poly_closed_form(d, m, &col)?;
            ensure(c.value == sp[m as usize].value, || format!("m={m}"))?;
        }
        Ok(format!("m = 0..={n}"))
    }));
    let two = check(s, format!("d={d}: a_d(q,u) by series and by s-polynomials agree"), || {
        compute_a_two_variable(d, &sp).map(|_| "routes agree".into())
    });
    let a2 = compute_a_two_variable(d, &sp);
    out.push(two);
    if let Ok(a2) = &a2 {
        out.push(check(s, format!("d={d}: a_d(q,q^m) = a_d^(m)(q)"), || {
            for m in 0..=n + 2 {
                let at_m = a2.value.at_u_q_pow(m as i64);
                ensure(at_m == QRatFunc::from_poly(table.get(d, m).expect("computed")), || format!("m={m}"))?;
            }
            Ok(format!("m = 0..={}", n + 2))
        }));
        out.push(check(s, format!("d={d}: Mahler coefficients are integral and reconstruct a_d"), || {
            let mx = mahler_expansion(d, &sp)?;
            ensure(mx.reconstruct() == a2.value, || "reconstruction differs".into())?;
            Ok(format!("{} coefficients", mx.coefficients.len()))
        }));
        if d >= 2 {
            out.push(check(s, format!("d={d}: factorization u^d (u-1)(u-q) with top coefficients [r+1]_q"), || {
                let f = a2.factored.as_ref().ok_or_else(|| Error::InvalidArgument("no factorization".into()))?;
                ensure(f.expand() == a2.value && f.leading_terms_ok, || "factorization does not expand back".into())?;
                Ok(format!("deg ā_{d} = {}", f.reduced.degree().unwrap_or(0)))
            }));
            out.push(check(s, format!("d={d}: constant term of ā_d and its value (d-1)! at q=1"), || {
                let f = a2.factored.as_ref().ok_or_else(|| Error::InvalidArgument("no factorization".into()))?;
                let rep = constant_term_check(d, f)?;
                ensure(rep.at_q1 == factorial(d - 1), || format!("value at q=1 is {}", rep.at_q1))?;
                Ok(format!("ā_{d}(1,0) = {}", rep.at_q1))
            }));
        }
    }
    out.push(check(s, format!("d={d}: boundary values s_d^(d²-r) = [d² choose r]_q"), || {
        crate::counting::boundary_check(d, &sp)?;
        Ok(format!("r = 0..={}", d as i64 - 2))
    }));
    out.push(check(s, format!("d={d}: s_d^(m)(1) = 0 for m <= d-1"), || {
        let first = if d == 1 { 1 } else { 0 };
        for m in first..d {
            ensure(sp[m as usize].value.eval_int(1).is_zero(), || format!("m={m}"))?;
        }
        Ok(format!("m = {first}..={}", d as i64 - 1))
    }));
    out.push(check(s, format!("d={d}: deg s_d^(m) = m(d²-m)"), || {
        for m in 1..=n {
            if m == 1 && d > 1 {
                continue;
            }
            let deg = sp[m as usize].value.degree().map(|x| x as u32);
            ensure(deg == Some(m * (n - m)), || format!("m={m}: degree {deg:?}"))?;
        }
        Ok(format!("m = {}..={n}", if d > 1 { 2 } else { 1 }))
    }));
    if d <= 4 {
        out.push(check(s, format!("d={d}: degree bound on r_d^(m)"), || {
            for m in 1..=n {
                compute_r_poly(d, m, &sp[m as usize].value)?;
            }
            Ok(format!("bound m(d²-m)-(m-1)(d-1), e.g. {} at m=2", r_degree_bound(d, 2)))
        }));
    }
    out
}

fn theorems(max_d: u32) -> Vec<CheckResult> {
    (1..=max_d).flat_map(theorem_checks).collect()
}
