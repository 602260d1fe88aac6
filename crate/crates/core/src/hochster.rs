//! Graded Betti numbers of `R/I_Δ` from Hochster's formula,
//! `β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W)`, together with the derived
//! invariants of a Betti diagram and the componentwise partial order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hilbert_lex::hilbert_from_fvector;
use crate::homology::{reduced_homology_with_scratch, PrimeField};
use crate::vertex::{binomial, VertexSet};

/// Complexes on more vertices than this need an explicit degree cap.
pub const DEFAULT_HOCHSTER_CAP: usize = 20;

/// Sparse graded Betti numbers `(i, j) → β_{i,j}` of `R/I` over `GF(p)`.
/// Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BettiDiagram {
    n: usize,
    p: u64,
    betti: BTreeMap<(usize, usize), u64>,
}

impl BettiDiagram {
    pub fn new(n: usize, p: u64) -> Self {
        BettiDiagram {
            n,
            p,
            betti: BTreeMap::new(),
        }
    }

    /// Builds a diagram from `(i, j, value)` triples; zero values are dropped.
    pub fn from_entries<I>(n: usize, p: u64, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut d = Self::new(n, p);
        for (i, j, v) in entries {
            if i > j || j > n {
                return Err(Error::InvalidParameter(format!(
                    "entry ({i},{j}) outside 0 <= i <= j <= {n}"
                )));
            }
            d.set(i, j, v);
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Field characteristic the numbers were computed over.
    pub fn char(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.betti.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        if v == 0 {
            self.betti.remove(&(i, j));
        } else {
            self.betti.insert((i, j), v);
        }
    }

    fn add(&mut self, i: usize, j: usize, v: u64) {
        if v != 0 {
            *self.betti.entry((i, j)).or_insert(0) += v;
        }
    }

    /// Nonzero entries `((i, j), β_{i,j})` in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.betti.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological index with a nonzero entry (the projective dimension).
    pub fn max_i(&self) -> usize {
        self.betti.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest row `j - i` with a nonzero entry (the regularity).
    pub fn max_row(&self) -> usize {
        self.betti.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn max_j(&self) -> usize {
        self.betti.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Rows `j - i` holding a nonzero entry.
    pub fn support_rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.betti.keys().map(|&(i, j)| j - i).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    /// Column sums `s_i = Σ_j β_{i,j}` for `i = 0..=max_i`.
    pub fn total_betti(&self) -> BettiNumbers {
        let mut s = vec![0u64; self.max_i() + 1];
        for (&(i, _), &v) in &self.betti {
            s[i] += v;
        }
        BettiNumbers(s)
    }

    /// `d_j = Σ_i (−1)^i β_{i,j}` for `j = 0..=n`.
    pub fn diagonal_sums(&self) -> DiagonalSums {
        let len = (self.n + 1).max(self.max_j() + 1);
        let mut d = vec![0i64; len];
        for (&(i, j), &v) in &self.betti {
            let v = v as i64;
            d[j] += if i % 2 == 0 { v } else { -v };
        }
        DiagonalSums(d)
    }

    /// Componentwise comparison over the union of supports.
    pub fn compare(&self, other: &BettiDiagram) -> Result<DiagramOrder> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut some_less = false;
        let mut some_greater = false;
        let keys = self.betti.keys().chain(other.betti.keys());
        for &(i, j) in keys {
            match self.get(i, j).cmp(&other.get(i, j)) {
                Ordering::Less => some_less = true,
                Ordering::Greater => some_greater = true,
                Ordering::Equal => {}
            }
            if some_less && some_greater {
                return Ok(DiagramOrder::Incomparable);
            }
        }
        Ok(match (some_less, some_greater) {
            (false, false) => DiagramOrder::Equal,
            (true, false) => DiagramOrder::Less,
            (false, true) => DiagramOrder::Greater,
            (true, true) => DiagramOrder::Incomparable,
        })
    }

    /// Agreement on every entry with `j <= max_degree`.
    pub fn agrees_through_degree(&self, other: &BettiDiagram, max_degree: usize) -> bool {
        let keys = self.betti.keys().chain(other.betti.keys());
        keys.filter(|&&(_, j)| j <= max_degree)
            .all(|&(i, j)| self.get(i, j) == other.get(i, j))
    }

    /// The diagram restricted to entries with `j <= max_degree`.
    pub fn truncated(&self, max_degree: usize) -> BettiDiagram {
        BettiDiagram {
            n: self.n,
            p: self.p,
            betti: self
                .betti
                .iter()
                .filter(|(&(_, j), _)| j <= max_degree)
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }

    /// Same numbers, reinterpreted in a larger ambient ring.
    pub fn with_n(&self, n: usize) -> BettiDiagram {
        BettiDiagram {
            n,
            p: self.p,
            betti: self.betti.clone(),
        }
    }

    /// Macaulay2-style table: a `total:` header of column sums, then one row
    /// per `j - i` from 0 to the last nonzero row. Columns run over
    /// `i = 0..=max{i : s_i ≠ 0}` and are right-aligned; zeros inside the
    /// box print as `0`.
    pub fn render_macaulay2(&self) -> String {
        let cols = self.max_i() + 1;
        let rows = self.max_row() + 1;
        let totals = self.total_betti();
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(rows + 1);
        cells.push((0..cols).map(|i| totals.get(i).to_string()).collect());
        for r in 0..rows {
            cells.push((0..cols).map(|i| self.get(i, i + r).to_string()).collect());
        }
        let widths: Vec<usize> = (0..cols)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
            .collect();
        let labels: Vec<String> = std::iter::once("total:".to_string())
            .chain((0..rows).map(|r| format!("{r}:")))
            .collect();
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (label, row) in labels.iter().zip(&cells) {
            let _ = write!(out, "{label:>label_w$}");
            for (cell, w) in row.iter().zip(&widths) {
                let _ = write!(out, " {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            n: self.n,
            char: self.p,
            entries: self.entries().map(|((i, j), v)| BettiEntry { i, j, v }).collect(),
        }
    }

    pub fn from_json(json: &BettiJson) -> Result<Self> {
        Self::from_entries(json.n, json.char, json.entries.iter().map(|e| (e.i, e.j, e.v)))
    }
}

/// Wire form `{"n": .., "char": .., "entries": [{"i","j","v"}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub n: usize,
    pub char: u64,
    pub entries: Vec<BettiEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub v: u64,
}

/// Column sums `s_0, s_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiNumbers(pub Vec<u64>);

impl BettiNumbers {
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Diagonal alternating sums `d_0, d_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalSums(pub Vec<i64>);

impl DiagonalSums {
    pub fn get(&self, j: usize) -> i64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// Equality up to trailing zeros.
    pub fn same_as(&self, other: &DiagonalSums) -> bool {
        let len = self.0.len().max(other.0.len());
        (0..len).all(|j| self.get(j) == other.get(j))
    }

    pub fn abs_sum(&self) -> u64 {
        self.0.iter().map(|d| d.unsigned_abs()).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagramOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl DiagramOrder {
    pub fn reverse(self) -> DiagramOrder {
        match self {
            DiagramOrder::Less => DiagramOrder::Greater,
            DiagramOrder::Greater => DiagramOrder::Less,
            o => o,
        }
    }
}

/// Hochster's formula. With `degree_cap = Some(c)` only subsets of size `<= c`
/// are visited, so the result holds exactly the entries with `j <= c`.
pub fn betti_via_hochster(complex: &SimplicialComplex, p: u64, degree_cap: Option<usize>) -> Result<BettiDiagram> {
    betti_via_hochster_with_cap(complex, p, degree_cap, DEFAULT_HOCHSTER_CAP)
}

/// As [`betti_via_hochster`] with an explicit vertex cap for uncapped runs.
pub fn betti_via_hochster_with_cap(
    complex: &SimplicialComplex,
    p: u64,
    degree_cap: Option<usize>,
    vertex_cap: usize,
) -> Result<BettiDiagram> {
    let field = PrimeField::new(p)?;
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let ground = complex.ground();
    let nv = ground.cardinality();
    if let Some(v) = ground.iter().find(|&v| !complex.contains(VertexSet::singleton(v))) {
        return Err(Error::LinearGeneratorUnsupported(v));
    }
    if degree_cap.is_none() && nv > vertex_cap {
        return Err(Error::ComplexTooLarge { n: nv, cap: vertex_cap });
    }
    let max_size = degree_cap.map_or(nv, |c| c.min(nv));

    let labels = ground.to_vec();
    let mut diagram = BettiDiagram::new(complex.n(), p);
    for size in 0..=max_size {
        let count = binomial(nv, size);
        let partial = (0..count)
            .into_par_iter()
            .fold(
                || (Vec::<u64>::new(), vec![0u64; size + 1]),
                |(mut scratch, mut acc), rank| {
                    let w = unrank_combination(&labels, size, rank);
                    let sub = complex.restrict(w);
                    let h = reduced_homology_with_scratch(&sub, field, &mut scratch)
                        .expect("restrictions of a nonvoid complex are nonvoid");
                    for (l, dim) in h.iter() {
                        // i = j - l - 1
                        let i = size as isize - l - 1;
                        if dim > 0 && i >= 0 {
                            acc[i as usize] += dim as u64;
                        }
                    }
                    (scratch, acc)
                },
            )
            .map(|(_, acc)| acc)
            .reduce(
                || vec![0u64; size + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        for (i, v) in partial.into_iter().enumerate() {
            diagram.add(i, size, v);
        }
    }
    Ok(diagram)
}

/// The `rank`-th `k`-subset of `labels` in lexicographic order of index tuples.
fn unrank_combination(labels: &[usize], k: usize, mut rank: u64) -> VertexSet {
    let n = labels.len();
    let mut bits = 0u64;
    let mut start = 0;
    for slot in 0..k {
        let remaining = k - slot - 1;
        let mut idx = start;
        loop {
            let c = binomial(n - idx - 1, remaining);
            if rank < c {
                break;
            }
            rank -= c;
            idx += 1;
        }
        bits |= 1u64 << labels[idx];
        start = idx + 1;
    }
    VertexSet::from_bits(bits)
}

/// Hilbert-series consistency: `Σ_j d_j t^j ≡ (1 − t)^n Σ_d H(d) t^d` through
/// degree `n`, with `H` taken from `f`. Exact integer arithmetic.
pub fn hilbert_series_check(diagram: &BettiDiagram, f: &FVector) -> bool {
    let n = f.n();
    if diagram.n() != n || diagram.max_j() > n {
        return false;
    }
    let h = hilbert_from_fvector(f);
    let d = diagram.diagonal_sums();
    for j in 0..=n {
        // Coefficient of t^j in (1 - t)^n H(t).
        let mut coeff: i128 = 0;
        for k in 0..=j {
            let c = binomial(n, k) as i128;
            let term = c * h.value(j - k) as i128;
            coeff += if k % 2 == 0 { term } else { -term };
        }
        if coeff != d.get(j) as i128 {
            return false;
        }
    }
    true
}
