//! Reduced simplicial homology over `GF(p)`.
//!
//! Works in the augmented chain complex, with `C_{-1}` spanned by the empty
//! face, so `H̃_{-1}({∅}) = K` needs no special case.

use std::collections::BTreeMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex::VertexSet;

/// Characteristic used when none is given.
pub const DEFAULT_CHAR: u64 = 101;

/// The prime field `Z/pZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Accepts primes below 2^32 so products fit in a `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat. `a` must be nonzero.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Reduces a signed integer into `0..p`.
    pub fn from_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_CHAR }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense row-major matrix over a [`PrimeField`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from signed integer rows.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(x));
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Rank by Gaussian elimination on a private copy.
    pub fn rank(&self) -> usize {
        let mut scratch = self.data.clone();
        rank_in_place(self.field, &mut scratch, self.rows, self.cols)
    }
}

/// Row-reduces `data` (row-major, `rows × cols`) in place and returns the rank.
pub(crate) fn rank_in_place(field: PrimeField, data: &mut [u64], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in col..cols {
                data.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = field.inv(data[rank * cols + col]);
        for j in col..cols {
            data[rank * cols + j] = field.mul(data[rank * cols + j], inv);
        }
        for r in rank + 1..rows {
            let factor = data[r * cols + col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                let sub = field.mul(factor, data[rank * cols + j]);
                data[r * cols + j] = field.sub(data[r * cols + j], sub);
            }
        }
        rank += 1;
    }
    rank
}

/// Matrix of `∂_l : C_l → C_{l-1}` in the augmented complex. Rows index
/// `(l-1)`-faces and columns `l`-faces, both sorted by bitmask. The entry for
/// dropping the vertex at ascending position `k` (0-based) is `(-1)^k`.
pub fn boundary_matrix(complex: &SimplicialComplex, l: isize, field: PrimeField) -> Result<FieldMatrix> {
    if complex.is_void() || l < -1 || l > complex.dim() {
        return Err(Error::DimensionError { l, max: complex.dim() });
    }
    let cols_faces = complex.faces_of_dim(l);
    if l == -1 {
        // ∂_{-1} maps onto the zero space.
        return Ok(FieldMatrix::zeros(field, 0, cols_faces.len()));
    }
    let rows_faces = complex.faces_of_dim(l - 1);
    let mut m = FieldMatrix::zeros(field, rows_faces.len(), cols_faces.len());
    fill_boundary(field, rows_faces, cols_faces, &mut m.data);
    Ok(m)
}

fn fill_boundary(field: PrimeField, rows: &[VertexSet], cols: &[VertexSet], data: &mut [u64]) {
    let ncols = cols.len();
    let minus_one = field.neg(1);
    for (c, &face) in cols.iter().enumerate() {
        for (pos, sub) in face.facets_with_position() {
            let r = rows
                .binary_search(&sub)
                .expect("complex is closed under taking subsets");
            data[r * ncols + c] = if pos % 2 == 0 { 1 } else { minus_one };
        }
    }
}

fn boundary_rank(field: PrimeField, complex: &SimplicialComplex, l: isize, scratch: &mut Vec<u64>) -> usize {
    if l <= -1 || l > complex.dim() {
        return 0;
    }
    let cols = complex.faces_of_dim(l);
    let rows = complex.faces_of_dim(l - 1);
    if l == 0 {
        // Augmentation: every vertex maps to ∅.
        return usize::from(!cols.is_empty());
    }
    scratch.clear();
    scratch.resize(rows.len() * cols.len(), 0);
    fill_boundary(field, rows, cols, scratch);
    // Eliminate on whichever orientation has fewer rows.
    if rows.len() <= cols.len() {
        rank_in_place(field, scratch, rows.len(), cols.len())
    } else {
        let mut t = vec![0u64; scratch.len()];
        for r in 0..rows.len() {
            for c in 0..cols.len() {
                t[c * rows.len() + r] = scratch[r * cols.len() + c];
            }
        }
        rank_in_place(field, &mut t, cols.len(), rows.len())
    }
}

/// `dim H̃_l(Δ; K)` for `l = -1, 0, ..., dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReducedHomologyProfile {
    /// `dims[l + 1] = dim H̃_l`.
    dims: Vec<usize>,
}

impl ReducedHomologyProfile {
    /// `dim H̃_l`, zero outside the stored range.
    pub fn get(&self, l: isize) -> usize {
        if l < -1 {
            return 0;
        }
        self.dims.get((l + 1) as usize).copied().unwrap_or(0)
    }

    /// Pairs `(l, dim)` for every stored degree.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims.iter().enumerate().map(|(k, &d)| (k as isize - 1, d))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ_l (−1)^l dim H̃_l`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(l, d)| if l.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// JSON map `{"l": dim, ...}`.
    pub fn to_json_map(&self) -> BTreeMap<String, usize> {
        self.iter().map(|(l, d)| (l.to_string(), d)).collect()
    }
}

/// Reduced homology of a nonvoid complex.
pub fn reduced_homology(complex: &SimplicialComplex, field: PrimeField) -> Result<ReducedHomologyProfile> {
    let mut scratch = Vec::new();
    reduced_homology_with_scratch(complex, field, &mut scratch)
}

pub(crate) fn reduced_homology_with_scratch(
    complex: &SimplicialComplex,
    field: PrimeField,
    scratch: &mut Vec<u64>,
) -> Result<ReducedHomologyProfile> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let top = complex.dim();
    // ranks[l + 1] = rank ∂_l, for l = -1..=top+1.
    let ranks: Vec<usize> = (-1..=top + 1)
        .map(|l| boundary_rank(field, complex, l, scratch))
        .collect();
    let dims = (-1..=top)
        .map(|l| {
            let chains = complex.faces_of_dim(l).len();
            let idx = (l + 1) as usize;
            chains - ranks[idx] - ranks[idx + 1]
        })
        .collect();
    Ok(ReducedHomologyProfile { dims })
}

/// Reduced Euler characteristic from face counts: `Σ_{l ≥ -1} (−1)^l f_l`.
pub fn reduced_euler_from_faces(complex: &SimplicialComplex) -> i64 {
    (-1..=complex.dim())
        .map(|l| {
            let c = complex.faces_of_dim(l).len() as i64;
            if l.rem_euclid(2) == 0 {
                c
            } else {
                -c
            }
        })
        .sum()
}
