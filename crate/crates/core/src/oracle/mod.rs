//! Brute-force ground truth over prime fields.
//!
//! A subspace `U` of `M_d(F_p)` generates `M_d(F_p)` as a unital algebra
//! exactly when the smallest multiplicatively closed subspace containing
//! `U` and the identity is everything. The census enumerates subspaces in
//! reduced row-echelon form (pivot sets in lexicographic order, then free
//! entries as an odometer) and runs that closure on each; matrix tuples are
//! enumerated directly.

mod census;
mod field;
mod linalg;

use crate::error::Result;

pub use census::{
    budget_from_env, census_ai_tuples, census_decomposition_check, census_generating_subspaces,
    enumerate_subspaces, parse_budget, pivot_sets, predicted_subspaces, predicted_tuples, CensusOptions,
    CensusResult, DecompositionReport, TupleCensus, DEFAULT_SUBSPACE_BUDGET, DEFAULT_TUPLE_BUDGET,
};
pub use field::PrimeField;
pub use linalg::{Echelon, Echelon2, Vector, MAX_N};

/// Largest matrix size the oracle handles (`d² <= 16`).
pub const MAX_D: usize = 4;

/// A `d x d` matrix over `F_p`, flattened row-major into a vector of
/// length `d²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FFMatrix {
    d: usize,
    entries: Vector,
}

impl FFMatrix {
    pub fn zero(d: usize) -> Self {
        assert!((1..=MAX_D).contains(&d), "matrix size must be 1..=4");
        FFMatrix { d, entries: [0; MAX_N] }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zero(d);
        for i in 0..d {
            m.entries[i * d + i] = 1;
        }
        m
    }

    /// Elementary matrix `E_ij`.
    pub fn unit(d: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(d);
        m.entries[i * d + j] = 1;
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[&[i64]]) -> Self {
        let d = rows.len();
        let mut m = Self::zero(d);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), d, "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m.entries[i * d + j] = x.rem_euclid(field.p() as i64) as u8;
            }
        }
        m
    }

    pub fn from_vector(d: usize, entries: Vector) -> Self {
        FFMatrix { d, entries }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.d + j]
    }

    pub fn as_vector(&self) -> &Vector {
        &self.entries
    }

    pub fn mul(&self, field: PrimeField, other: &Self) -> Self {
        FFMatrix { d: self.d, entries: mat_mul(field, self.d, &self.entries, &other.entries) }
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self, field: PrimeField) -> Option<Self> {
        let d = self.d;
        let mut a = self.entries;
        let mut inv = Self::identity(d).entries;
        for col in 0..d {
            let pivot = (col..d).find(|&r| a[r * d + col] != 0)?;
            for j in 0..d {
                a.swap(col * d + j, pivot * d + j);
                inv.swap(col * d + j, pivot * d + j);
            }
            let s = field.inv(a[col * d + col])?;
            for j in 0..d {
                a[col * d + j] = field.mul(a[col * d + j], s);
                inv[col * d + j] = field.mul(inv[col * d + j], s);
            }
            for r in 0..d {
                let k = a[r * d + col];
                if r == col || k == 0 {
                    continue;
                }
                for j in 0..d {
                    a[r * d + j] = field.sub(a[r * d + j], field.mul(k, a[col * d + j]));
                    inv[r * d + j] = field.sub(inv[r * d + j], field.mul(k, inv[col * d + j]));
                }
            }
        }
        Some(FFMatrix { d, entries: inv })
    }
}

pub(crate) fn mat_mul(field: PrimeField, d: usize, a: &Vector, b: &Vector) -> Vector {
    let mut c = [0u8; MAX_N];
    let p = field.p();
    for i in 0..d {
        for k in 0..d {
            let mut acc = 0u32;
            for j in 0..d {
                acc += a[i * d + j] as u32 * b[j * d + k] as u32;
            }
            c[i * d + k] = (acc % p) as u8;
        }
    }
    c
}

/// Product of `d x d` matrices over `F_2` packed as bitsets, entry `(i,j)`
/// at bit `i*d + j`.
#[inline]
pub(crate) fn mat_mul2(d: usize, a: u16, b: u16) -> u16 {
    let mask = (1u16 << d) - 1;
    let mut c = 0u16;
    for i in 0..d {
        let mut row = 0u16;
        for j in 0..d {
            if (a >> (i * d + j)) & 1 == 1 {
                row ^= (b >> (j * d)) & mask;
            }
        }
        c |= row << (i * d);
    }
    c
}

pub(crate) fn identity2(d: usize) -> u16 {
    (0..d).fold(0u16, |acc, i| acc | (1 << (i * d + i)))
}

pub(crate) fn pack2(v: &Vector, n: usize) -> u16 {
    (0..n).fold(0u16, |acc, k| acc | ((v[k] as u16 & 1) << k))
}

#[cfg(test)]
fn unpack2(bits: u16, n: usize) -> Vector {
    let mut v = [0u8; MAX_N];
    for (k, x) in v.iter_mut().enumerate().take(n) {
        *x = ((bits >> k) & 1) as u8;
    }
    v
}

/// A subspace of `M_d(F_p)` held by its reduced row-echelon basis, so
/// equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FFSubspace {
    d: usize,
    field: PrimeField,
    basis: Vec<Vector>,
}

impl FFSubspace {
    pub fn span(field: PrimeField, d: usize, vectors: &[Vector]) -> Self {
        let mut e = Echelon::new(field, d * d);
        for v in vectors {
            e.insert(*v);
        }
        Self::from_echelon(field, d, &e)
    }

    pub fn from_matrices(field: PrimeField, d: usize, mats: &[FFMatrix]) -> Self {
        let vs: Vec<Vector> = mats.iter().map(|m| m.entries).collect();
        Self::span(field, d, &vs)
    }

    fn from_echelon(field: PrimeField, d: usize, e: &Echelon) -> Self {
        FFSubspace { d, field, basis: e.rref() }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut e = Echelon::new(self.field, self.d * self.d);
        for b in &self.basis {
            e.insert(*b);
        }
        e.contains(v)
    }

    pub fn is_subspace_of(&self, other: &FFSubspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// `g U g⁻¹`; `g` must be invertible.
    pub fn conjugate(&self, g: &FFMatrix) -> Self {
        let gi = g.inverse(self.field).expect("conjugating matrix must be invertible");
        let vs: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| {
                let m = FFMatrix::from_vector(self.d, *b);
                g.mul(self.field, &m).mul(self.field, &gi).entries
            })
            .collect();
        Self::span(self.field, self.d, &vs)
    }
}

/// Incremental closure: every new basis element is multiplied with all
/// earlier ones (both orders) and the products folded into the echelon
/// basis. Stops early once the span is everything.
pub(crate) fn closure_echelon(field: PrimeField, d: usize, gens: &[Vector]) -> Echelon {
    let n = d * d;
    let mut e = Echelon::new(field, n);
    e.insert(FFMatrix::identity(d).entries);
    for g in gens {
        e.insert(*g);
    }
    let mut k = 0;
    while k < e.dim() && !e.is_full() {
        let a = e.rows()[k];
        for j in 0..=k {
            let b = e.rows()[j];
            e.insert(mat_mul(field, d, &a, &b));
            if j != k {
                e.insert(mat_mul(field, d, &b, &a));
            }
            if e.is_full() {
                return e;
            }
        }
        k += 1;
    }
    e
}

/// Bitset version of [`closure_echelon`] over `F_2`; returns the closure
/// dimension.
pub(crate) fn closure_dim2(d: usize, gens: &[u16]) -> usize {
    let n = d * d;
    let mut e = Echelon2::new();
    e.insert(identity2(d));
    for &g in gens {
        e.insert(g);
    }
    let mut k = 0;
    while k < e.dim() && e.dim() < n {
        let a = e.rows()[k];
        for j in 0..=k {
            let b = e.rows()[j];
            e.insert(mat_mul2(d, a, b));
            if j != k {
                e.insert(mat_mul2(d, b, a));
            }
            if e.dim() == n {
                return n;
            }
        }
        k += 1;
    }
    e.dim()
}

/// The unital subalgebra generated by `U`.
pub fn closure(u: &FFSubspace) -> FFSubspace {
    let e = closure_echelon(u.field, u.d, &u.basis);
    FFSubspace::from_echelon(u.field, u.d, &e)
}

/// Round-based closure `S <- S + S·S` starting from `U + k·I`; returns the
/// closure and the dimension after each round (the last entry repeats the
/// fixpoint dimension).
pub fn closure_rounds(u: &FFSubspace) -> (FFSubspace, Vec<usize>) {
    let (field, d) = (u.field, u.d);
    let mut e = Echelon::new(field, d * d);
    e.insert(FFMatrix::identity(d).entries);
    for b in &u.basis {
        e.insert(*b);
    }
    let mut dims = vec![e.dim()];
    loop {
        let current: Vec<Vector> = e.rows().to_vec();
        let mut next = e.clone();
        for a in &current {
            for b in &current {
                next.insert(mat_mul(field, d, a, b));
            }
        }
        let grew = next.dim() > e.dim();
        e = next;
        dims.push(e.dim());
        if !grew {
            break;
        }
    }
    (FFSubspace::from_echelon(field, d, &e), dims)
}

/// Whether `U` generates `M_d(F_p)` as a unital algebra.
pub fn generates_full_algebra(u: &FFSubspace) -> bool {
    let n = u.d * u.d;
    if u.field.p() == 2 {
        let gens: Vec<u16> = u.basis.iter().map(|v| pack2(v, n)).collect();
        closure_dim2(u.d, &gens) == n
    } else {
        closure_echelon(u.field, u.d, &u.basis).is_full()
    }
}

/// Validates `(d, p)` for the oracle.
pub(crate) fn check_dims(d: u32, p: u32) -> Result<PrimeField> {
    if d == 0 || d as usize > MAX_D {
        return Err(crate::Error::InvalidArgument(format!("oracle supports 1 <= d <= {MAX_D}, got {d}")));
    }
    PrimeField::new(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn three_units_generate_m2() {
        let u = FFSubspace::from_matrices(
            f(2),
            2,
            &[FFMatrix::unit(2, 0, 0), FFMatrix::unit(2, 0, 1), FFMatrix::unit(2, 1, 0)],
        );
        assert!(generates_full_algebra(&u));
    }

    #[test]
    fn scalars_do_not_generate() {
        for d in 2..=3 {
            let u = FFSubspace::from_matrices(f(3), d, &[FFMatrix::identity(d)]);
            assert!(!generates_full_algebra(&u));
            assert_eq!(closure(&u).dim(), 1);
        }
    }

    #[test]
    fn upper_triangular_is_closed() {
        let u = FFSubspace::from_matrices(
            f(2),
            2,
            &[FFMatrix::unit(2, 0, 0), FFMatrix::unit(2, 0, 1), FFMatrix::unit(2, 1, 1)],
        );
        assert!(!generates_full_algebra(&u));
        assert_eq!(closure(&u), u);
    }

    #[test]
    fn one_by_one_always_generates() {
        let zero = FFSubspace::span(f(5), 1, &[]);
        assert!(generates_full_algebra(&zero));
    }

    #[test]
    fn bitset_and_generic_closure_agree() {
        let d = 3;
        let field = f(2);
        // a few fixed pairs of 3x3 matrices over F_2
        let samples: [(u16, u16); 4] = [(0b000_000_110, 0b011_001_000), (0b100_010_001, 0b010_001_100), (0b000_000_001, 0b001_000_000), (0b110_011_001, 0b101_000_011)];
        for (a, b) in samples {
            let gens = [unpack2(a, 9), unpack2(b, 9)];
            let generic = closure_echelon(field, d, &gens).dim();
            assert_eq!(closure_dim2(d, &[a, b]), generic);
        }
    }

    #[test]
    fn matrix_inverse_roundtrip() {
        let field = f(5);
        let g = FFMatrix::from_rows(field, &[&[1, 2], &[3, 4]]);
        let gi = g.inverse(field).unwrap();
        assert_eq!(g.mul(field, &gi), FFMatrix::identity(2));
        let singular = FFMatrix::from_rows(field, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse(field).is_none());
    }

    #[test]
    fn bitset_multiplication_matches_generic() {
        let field = f(2);
        for a in (0u16..512).step_by(37) {
            for b in (0u16..512).step_by(53) {
                let c = mat_mul(field, 3, &unpack2(a, 9), &unpack2(b, 9));
                assert_eq!(pack2(&c, 9), mat_mul2(3, a, b));
            }
        }
    }
}
