//! Echelon bases for subspaces of `F_p^n`, `n <= 16`, with a bitset
//! variant for `p = 2`.

use super::field::PrimeField;

pub const MAX_N: usize = 16;

/// A vector of `F_p^n`; entries past `n` are zero.
pub type Vector = [u8; MAX_N];

/// Semi-echelon basis indexed by pivot (first nonzero) position, each row
/// scaled to have pivot entry 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    n: usize,
    by_pivot: [Option<Vector>; MAX_N],
    rows: Vec<Vector>,
}

impl Echelon {
    pub fn new(field: PrimeField, n: usize) -> Self {
        assert!(n <= MAX_N);
        Echelon { field, n, by_pivot: [None; MAX_N], rows: Vec::with_capacity(n) }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Basis vectors in insertion order.
    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    /// Reduces `v` against the basis; returns the residue.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        let f = self.field;
        for c in 0..self.n {
            if v[c] == 0 {
                continue;
            }
            if let Some(row) = &self.by_pivot[c] {
                let k = v[c];
                for j in c..self.n {
                    v[j] = f.sub(v[j], f.mul(k, row[j]));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(*v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r[..self.n].iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(r[pivot]).expect("nonzero pivot");
        for x in r[pivot..self.n].iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.by_pivot[pivot] = Some(r);
        self.rows.push(r);
        true
    }

    /// Canonical reduced row-echelon basis, rows sorted by pivot.
    pub fn rref(&self) -> Vec<Vector> {
        let f = self.field;
        let mut rows: Vec<(usize, Vector)> = (0..self.n)
            .filter_map(|c| self.by_pivot[c].map(|r| (c, r)))
            .collect();
        for i in (0..rows.len()).rev() {
            let (ci, ri) = rows[i];
            for (_, rj) in rows.iter_mut().take(i) {
                let k = rj[ci];
                if k != 0 {
                    for c in ci..self.n {
                        rj[c] = f.sub(rj[c], f.mul(k, ri[c]));
                    }
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Echelon basis over `F_2` with vectors packed into the low `n` bits of a
/// `u16`; the pivot of a vector is its highest set bit.
#[derive(Clone, Debug)]
pub struct Echelon2 {
    by_pivot: [u16; MAX_N],
    rows: Vec<u16>,
}

impl Default for Echelon2 {
    fn default() -> Self {
        Self::new()
    }
}

impl Echelon2 {
    pub fn new() -> Self {
        Echelon2 { by_pivot: [0; MAX_N], rows: Vec::with_capacity(MAX_N) }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn rows(&self) -> &[u16] {
        &self.rows
    }

    #[inline]
    pub fn reduce(&self, mut v: u16) -> u16 {
        while v != 0 {
            let b = 15 - v.leading_zeros() as usize;
            let row = self.by_pivot[b];
            if row == 0 {
                return v;
            }
            v ^= row;
        }
        0
    }

    #[inline]
    pub fn insert(&mut self, v: u16) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let b = 15 - r.leading_zeros() as usize;
        self.by_pivot[b] = r;
        self.rows.push(r);
        true
    }
}
