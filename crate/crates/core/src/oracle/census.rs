use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::field::PrimeField;
use super::linalg::{Vector, MAX_N};
use super::{check_dims, closure_dim2, closure_echelon, pack2, FFSubspace};
use crate::algebra::{gaussian_binomial, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_SUBSPACE_BUDGET: u64 = 10_000_000;
pub const DEFAULT_TUPLE_BUDGET: u64 = 100_000_000;

/// Reads `GENPOLY_BUDGET` (plain integer or `1e7` style), falling back to
/// `default`.
pub fn budget_from_env(default: u64) -> u64 {
    std::env::var("GENPOLY_BUDGET").ok().and_then(|s| parse_budget(&s)).unwrap_or(default)
}

/// Parses a budget such as `10000000` or `1e7`.
pub fn parse_budget(s: &str) -> Option<u64> {
    let s = s.trim();
    if let Ok(v) = s.parse::<u64>() {
        return Some(v);
    }
    let v: f64 = s.parse().ok()?;
    (v.is_finite() && (0.0..1.8e19).contains(&v)).then_some(v as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub budget: u64,
    pub workers: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { budget: DEFAULT_SUBSPACE_BUDGET, workers: 1 }
    }
}

impl CensusOptions {
    pub fn with_budget(budget: u64) -> Self {
        CensusOptions { budget, ..Self::default() }
    }
}

/// Outcome of a subspace census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub d: u32,
    pub p: u32,
    pub m: u32,
    pub total_subspaces: u64,
    pub generating_subspaces: u64,
    pub elapsed: Duration,
}

/// Outcome of a matrix-tuple census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleCensus {
    pub d: u32,
    pub p: u32,
    pub m: u32,
    pub total_tuples: u64,
    pub generating_tuples: u64,
    pub elapsed: Duration,
}

/// `[n choose m]_p`, the number of `m`-dimensional subspaces of `F_p^n`.
pub fn predicted_subspaces(n: u32, p: u32, m: u32) -> BigInt {
    let v = gaussian_binomial(n as i64, m)
        .eval(&Rational::from_integer(p.into()))
        .expect("polynomial has no poles");
    v.to_integer()
}

/// `p^(m d²)`.
pub fn predicted_tuples(d: u32, p: u32, m: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), (m * d * d) as usize)
}

fn within_budget(predicted: &BigInt, budget: u64) -> Result<u64> {
    match predicted.to_u64() {
        Some(v) if v <= budget => Ok(v),
        _ => Err(Error::BudgetExceeded { predicted: predicted.to_string(), budget }),
    }
}

/// All `m`-subsets of `0..n` in lexicographic order.
pub fn pivot_sets(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..m).rev().find(|&i| cur[i] < n - m + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..m {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Visits every reduced row-echelon basis with the given pivot columns.
/// Free entries run as an odometer, first free position fastest.
fn visit_pivot_set(field: PrimeField, n: usize, pivots: &[usize], visit: &mut impl FnMut(&[Vector])) {
    let mut rows: Vec<Vector> = pivots
        .iter()
        .map(|&c| {
            let mut v = [0u8; MAX_N];
            v[c] = 1;
            v
        })
        .collect();
    let mut free = Vec::new();
    for (i, &c) in pivots.iter().enumerate() {
        for j in c + 1..n {
            if !pivots.contains(&j) {
                free.push((i, j));
            }
        }
    }
    let p = field.p() as u8;
    loop {
        visit(&rows);
        let mut k = 0;
        loop {
            if k == free.len() {
                return;
            }
            let (i, j) = free[k];
            let next = rows[i][j] + 1;
            if next == p {
                rows[i][j] = 0;
                k += 1;
            } else {
                rows[i][j] = next;
                break;
            }
        }
    }
}

/// Visits every `m`-dimensional subspace of `M_d(F_p)` exactly once and
/// returns how many were visited. Refuses up front when `[d² choose m]_p`
/// exceeds `budget`.
pub fn enumerate_subspaces(
    d: u32,
    p: u32,
    m: u32,
    budget: u64,
    mut visitor: impl FnMut(&FFSubspace),
) -> Result<u64> {
    let field = check_dims(d, p)?;
    let n = (d * d) as usize;
    if m as usize > n {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds d² = {n}")));
    }
    within_budget(&predicted_subspaces(n as u32, p, m), budget)?;
    let mut count = 0u64;
    for ps in pivot_sets(n, m as usize) {
        visit_pivot_set(field, n, &ps, &mut |rows| {
            count += 1;
            visitor(&FFSubspace::span(field, d as usize, rows));
        });
    }
    Ok(count)
}

/// Counts `(visited, generating)` over the pivot sets `sets`.
fn count_generating(field: PrimeField, d: usize, sets: &[&Vec<usize>]) -> (u64, u64) {
    let n = d * d;
    let (mut total, mut good) = (0u64, 0u64);
    let mut packed = [0u16; MAX_N];
    for ps in sets {
        visit_pivot_set(field, n, ps, &mut |rows| {
            total += 1;
            let full = if field.p() == 2 {
                for (slot, r) in packed.iter_mut().zip(rows) {
                    *slot = pack2(r, n);
                }
                closure_dim2(d, &packed[..rows.len()]) == n
            } else {
                closure_echelon(field, d, rows).is_full()
            };
            if full {
                good += 1;
            }
        });
    }
    (total, good)
}

/// Splits `items` round-robin over `workers` threads and sums the results.
fn run_sharded<T: Sync>(items: &[T], workers: usize, job: impl Fn(&[&T]) -> (u64, u64) + Sync) -> (u64, u64) {
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return job(&items.iter().collect::<Vec<_>>());
    }
    let shards: Vec<Vec<&T>> = (0..workers)
        .map(|w| items.iter().skip(w).step_by(workers).collect())
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = shards.iter().map(|shard| scope.spawn(|| job(shard))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .fold((0, 0), |(a, b), (c, e)| (a + c, b + e))
    })
}

/// Number of `m`-dimensional subspaces of `M_d(F_p)` generating it as a
/// unital algebra. Identical for any worker count.
pub fn census_generating_subspaces(d: u32, p: u32, m: u32, opts: CensusOptions) -> Result<CensusResult> {
    let start = Instant::now();
    let field = check_dims(d, p)?;
    let n = (d * d) as usize;
    if m as usize > n {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds d² = {n}")));
    }
    let predicted = within_budget(&predicted_subspaces(n as u32, p, m), opts.budget)?;
    let sets = pivot_sets(n, m as usize);
    let (total, good) = run_sharded(&sets, opts.workers, |shard| count_generating(field, d as usize, shard));
    debug_assert_eq!(total, predicted);
    Ok(CensusResult {
        d,
        p,
        m,
        total_subspaces: total,
        generating_subspaces: good,
        elapsed: start.elapsed(),
    })
}

/// Number of `m`-tuples in `M_d(F_p)^m` generating `M_d(F_p)`, i.e. the
/// absolutely irreducible ones.
pub fn census_ai_tuples(d: u32, p: u32, m: u32, opts: CensusOptions) -> Result<TupleCensus> {
    let start = Instant::now();
    let field = check_dims(d, p)?;
    let total = within_budget(&predicted_tuples(d, p, m), opts.budget)?;
    let d = d as usize;
    let n = d * d;
    let per_matrix = (p as u64).pow(n as u32);
    // shard on the first matrix
    let firsts: Vec<u64> = if m == 0 { vec![0] } else { (0..per_matrix).collect() };
    let rest = m.saturating_sub(1);
    let job = |shard: &[&u64]| -> (u64, u64) {
        let mut seen = 0u64;
        let mut good = 0u64;
        let mut idx = vec![0u64; rest as usize];
        for &&first in shard {
            idx.iter_mut().for_each(|x| *x = 0);
            loop {
                seen += 1;
                let mut gens: Vec<u64> = Vec::with_capacity(m as usize);
                if m > 0 {
                    gens.push(first);
                }
                gens.extend(idx.iter().copied());
                let full = if p == 2 {
                    let g: Vec<u16> = gens.iter().map(|&x| x as u16).collect();
                    closure_dim2(d, &g) == n
                } else {
                    let g: Vec<Vector> = gens.iter().map(|&x| decode(x, p, n)).collect();
                    closure_echelon(field, d, &g).is_full()
                };
                if full {
                    good += 1;
                }
                // advance the remaining matrices
                let mut k = 0;
                while k < idx.len() {
                    idx[k] += 1;
                    if idx[k] == per_matrix {
                        idx[k] = 0;
                        k += 1;
                    } else {
                        break;
                    }
                }
                if k == idx.len() {
                    break;
                }
            }
        }
        (seen, good)
    };
    let (seen, good) = run_sharded(&firsts, opts.workers, job);
    debug_assert_eq!(seen, total);
    Ok(TupleCensus {
        d: d as u32,
        p,
        m,
        total_tuples: seen,
        generating_tuples: good,
        elapsed: start.elapsed(),
    })
}

/// Base-`p` digits of `x` as a vector of length `n` (for `p = 2` this is
/// the bitset layout).
fn decode(mut x: u64, p: u32, n: usize) -> Vector {
    let mut v = [0u8; MAX_N];
    for slot in v.iter_mut().take(n) {
        *slot = (x % p as u64) as u8;
        x /= p as u64;
    }
    v
}

/// Both sides of `#generating m-tuples = Σ_r (p^m-1)...(p^m-p^(r-1)) #S^(r)`,
/// every count measured by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub d: u32,
    pub p: u32,
    pub m: u32,
    pub lhs: BigInt,
    pub rhs: BigInt,
    /// `#S^(r)` for `r = 0..=min(m, d²)`.
    pub subspace_counts: Vec<u64>,
}

/// Checks the rank decomposition of generating tuples against measured
/// subspace counts; `IdentityViolated` if the two sides differ.
pub fn census_decomposition_check(d: u32, p: u32, m: u32, opts: CensusOptions) -> Result<DecompositionReport> {
    let tuples = census_ai_tuples(d, p, m, CensusOptions { budget: opts.budget.max(DEFAULT_TUPLE_BUDGET), ..opts })?;
    let lhs = BigInt::from(tuples.generating_tuples);
    let pm = num_traits::pow(BigInt::from(p), m as usize);
    let mut rhs = BigInt::zero();
    let mut rank_count = BigInt::one();
    let mut subspace_counts = Vec::new();
    for r in 0..=m.min(d * d) {
        if r > 0 {
            rank_count *= &pm - num_traits::pow(BigInt::from(p), (r - 1) as usize);
        }
        let c = census_generating_subspaces(d, p, r, opts)?.generating_subspaces;
        subspace_counts.push(c);
        rhs += &rank_count * c;
    }
    if lhs != rhs {
        return Err(Error::IdentityViolated { d, p, m, lhs: lhs.to_string(), rhs: rhs.to_string() });
    }
    Ok(DecompositionReport { d, p, m, lhs, rhs, subspace_counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pivot_sets_lexicographic() {
        assert_eq!(pivot_sets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(pivot_sets(3, 0), vec![Vec::<usize>::new()]);
        assert!(pivot_sets(2, 3).is_empty());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_subspaces(2, 2, 2, 1000, |_| {}).unwrap(), 35);
        let mut dims = Vec::new();
        assert_eq!(enumerate_subspaces(2, 2, 0, 1000, |u| dims.push(u.dim())).unwrap(), 1);
        assert_eq!(dims, vec![0]);
    }

    #[test]
    fn enumeration_visits_distinct_subspaces() {
        let mut seen = std::collections::HashSet::new();
        let n = enumerate_subspaces(2, 3, 2, 10_000, |u| {
            assert_eq!(u.dim(), 2);
            assert!(seen.insert(u.clone()));
        })
        .unwrap();
        assert_eq!(n as usize, seen.len());
        assert_eq!(BigInt::from(n), predicted_subspaces(4, 3, 2));
    }

    #[test]
    fn budget_refusal_reports_prediction() {
        let err = census_generating_subspaces(2, 2, 2, CensusOptions::with_budget(10)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { predicted: "35".into(), budget: 10 });
    }

    #[test]
    fn small_censuses() {
        let opts = CensusOptions::default();
        assert_eq!(census_generating_subspaces(2, 2, 2, opts).unwrap().generating_subspaces, 16);
        assert_eq!(census_generating_subspaces(2, 3, 3, opts).unwrap().generating_subspaces, 36);
        assert_eq!(census_generating_subspaces(2, 2, 4, opts).unwrap().generating_subspaces, 1);
        assert_eq!(census_generating_subspaces(2, 2, 0, opts).unwrap().generating_subspaces, 0);
    }

    #[test]
    fn tuple_censuses() {
        let opts = CensusOptions::default();
        assert_eq!(census_ai_tuples(2, 2, 2, opts).unwrap().generating_tuples, 96);
        assert_eq!(census_ai_tuples(2, 2, 1, opts).unwrap().generating_tuples, 0);
        for p in [2, 3, 5] {
            assert_eq!(census_ai_tuples(1, p, 1, opts).unwrap().generating_tuples, p as u64);
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let one = census_generating_subspaces(2, 3, 2, CensusOptions { budget: 10_000, workers: 1 }).unwrap();
        let four = census_generating_subspaces(2, 3, 2, CensusOptions { budget: 10_000, workers: 4 }).unwrap();
        assert_eq!(one.generating_subspaces, four.generating_subspaces);
        assert_eq!(one.total_subspaces, four.total_subspaces);
        let t1 = census_ai_tuples(2, 2, 2, CensusOptions { budget: 1000, workers: 1 }).unwrap();
        let t3 = census_ai_tuples(2, 2, 2, CensusOptions { budget: 1000, workers: 3 }).unwrap();
        assert_eq!(t1.generating_tuples, t3.generating_tuples);
    }

    #[test]
    fn decomposition_small() {
        let opts = CensusOptions::default();
        let rep = census_decomposition_check(2, 2, 2, opts).unwrap();
        assert_eq!(rep.lhs, BigInt::from(96));
        assert!(census_decomposition_check(2, 2, 1, opts).is_ok());
        let rep = census_decomposition_check(1, 3, 1, opts).unwrap();
        assert_eq!(rep.subspace_counts, vec![1, 1]);
        assert_eq!(rep.lhs, BigInt::from(3));
    }

    #[test]
    fn budget_parsing() {
        assert_eq!(parse_budget("1e7"), Some(10_000_000));
        assert_eq!(parse_budget(" 500 "), Some(500));
        assert_eq!(parse_budget("lots"), None);
    }
}
