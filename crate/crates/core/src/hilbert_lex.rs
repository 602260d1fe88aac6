//! Hilbert functions of Stanley–Reisner rings, f-vector realizability and
//! the squarefree lex complex.
//!
//! The lex complex of `f` takes, in every cardinality `d`, the `f_{d-1}`
//! lex-smallest squarefree monomials of degree `d` as faces. Those families
//! are closed under taking subsets exactly when `f` satisfies Kruskal–Katona,
//! so the closure check doubles as the realizability test.

use std::ops::ControlFlow;

use crate::complex::{FVector, SimplicialComplex, SquarefreeIdeal};
use crate::error::{Error, Result};
use crate::vertex::{binomial, VertexSet, MAX_VERTICES};

/// `H(R/I, m)` for the Stanley–Reisner ring of a complex with f-vector `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    f: FVector,
}

impl HilbertFunction {
    pub fn fvector(&self) -> &FVector {
        &self.f
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.f.n()
    }

    /// `H(0) = 1`, `H(m) = Σ_i f_i C(m−1, i)` for `m > 0`.
    pub fn value(&self, m: usize) -> u128 {
        if m == 0 {
            return 1;
        }
        self.f
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &fi)| fi as u128 * binomial(m - 1, i) as u128)
            .sum()
    }

    /// `H(0), ..., H(max_degree)`.
    pub fn values(&self, max_degree: usize) -> Vec<u128> {
        (0..=max_degree).map(|m| self.value(m)).collect()
    }
}

pub fn hilbert_from_fvector(f: &FVector) -> HilbertFunction {
    HilbertFunction { f: f.clone() }
}

/// Inverts `H(m) = Σ_{i<m} f_i C(m−1, i)` for `m = 1..=n`. `values[m]` is
/// `H(m)`; `values[0]` must be 1. Values past degree `n` are checked for
/// consistency with the recovered f-vector.
pub fn fvector_from_hilbert(values: &[u128], n: usize) -> Result<FVector> {
    if values.len() < n + 1 {
        return Err(Error::NotAnFVector(format!(
            "need H(0..={n}), got {} values",
            values.len()
        )));
    }
    if values[0] != 1 {
        return Err(Error::NotAnFVector(format!("H(0) = {} but must be 1", values[0])));
    }
    let mut f: Vec<u64> = Vec::with_capacity(n);
    for (m, &value) in values.iter().enumerate().take(n + 1).skip(1) {
        let known: u128 = f
            .iter()
            .enumerate()
            .map(|(i, &fi)| fi as u128 * binomial(m - 1, i) as u128)
            .sum();
        if value < known {
            return Err(Error::NotAnFVector(format!(
                "H({m}) = {} forces a negative f_{}",
                value,
                m - 1
            )));
        }
        let fm = u64::try_from(value - known).map_err(|_| Error::NotAnFVector(format!("f_{} overflows", m - 1)))?;
        f.push(fm);
    }
    let f = FVector::new(f);
    f.check_bounds()?;
    let h = hilbert_from_fvector(&f);
    for (m, &v) in values.iter().enumerate().skip(n + 1) {
        if h.value(m) != v {
            return Err(Error::NotAnFVector(format!(
                "H({m}) = {v} disagrees with the value {} forced by lower degrees",
                h.value(m)
            )));
        }
    }
    Ok(f)
}

/// The `count` lex-smallest `d`-subsets of `{1..n}`, in lex-ascending order.
///
/// Reversing labels (`v ↦ n + 1 − v`) turns lex order into colex order, and
/// colex order on bitmasks is plain numeric order, so the first sets come
/// straight out of Gosper's hack.
pub(crate) fn lex_smallest(n: usize, d: usize, count: u64) -> Vec<VertexSet> {
    let mut out = Vec::with_capacity(count as usize);
    if count == 0 || d > n {
        return out;
    }
    if d == 0 {
        out.push(VertexSet::EMPTY);
        return out;
    }
    let limit: u64 = if n == 64 { u64::MAX } else { 1u64 << n };
    let mut mask: u64 = (1u64 << d) - 1;
    while (out.len() as u64) < count && mask < limit {
        let mut bits = 0u64;
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            // 0-based colex bit b is vertex n - b after reversal.
            bits |= 1u64 << (n - b);
            m &= m - 1;
        }
        out.push(VertexSet::from_bits(bits));
        mask = gosper_next(mask);
    }
    out
}

fn gosper_next(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    if r == 0 {
        return u64::MAX;
    }
    (((r ^ x) >> 2) / c) | r
}

/// Squarefree lex complex of `f`; fails with `NotAnFVector` exactly when no
/// complex on `n = f.n()` vertices with every vertex a face realizes `f`.
pub fn squarefree_lex_complex(f: &FVector) -> Result<SimplicialComplex> {
    let n = f.n();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    f.check_bounds()?;
    if f.get(0) != n as u64 {
        return Err(Error::NotAnFVector(format!(
            "f_0 = {} but all {n} vertices must be faces",
            f.get(0)
        )));
    }
    let mut faces: Vec<Vec<VertexSet>> = vec![vec![VertexSet::EMPTY]];
    for d in 1..=n {
        let count = f.get(d - 1);
        if count == 0 {
            if let Some(i) = (d..n).find(|&i| f.get(i) != 0) {
                return Err(Error::NotAnFVector(format!("f_{} = 0 but f_{i} = {}", d - 1, f.get(i))));
            }
            break;
        }
        let mut level = lex_smallest(n, d, count);
        level.sort_unstable();
        let prev = faces.last().expect("nonempty");
        for &face in &level {
            if let Some((_, sub)) = face
                .facets_with_position()
                .find(|(_, s)| prev.binary_search(s).is_err())
            {
                return Err(Error::NotAnFVector(format!(
                    "{f} violates Kruskal–Katona in dimension {}: lex face {face} needs {sub}",
                    d - 1
                )));
            }
        }
        faces.push(level);
    }
    Ok(SimplicialComplex::from_buckets(n, VertexSet::full(n), faces))
}

/// Whether some complex (with every vertex a face) has f-vector `f`.
pub fn is_kk_valid(f: &FVector) -> bool {
    squarefree_lex_complex(f).is_ok()
}

/// The squarefree lex ideal with the Hilbert function of `f`.
pub fn squarefree_lex_ideal(f: &FVector) -> Result<SquarefreeIdeal> {
    squarefree_lex_complex(f)?.minimal_nonfaces()
}

/// `Some(d)` when every minimal generator of the squarefree lex ideal of `f`
/// has degree `d`. `None` for mixed degrees and for the zero ideal.
pub fn lex_generated_in_single_degree(f: &FVector) -> Result<Option<usize>> {
    let degrees = squarefree_lex_ideal(f)?.generator_degrees();
    Ok(match degrees.as_slice() {
        [d] => Some(*d),
        _ => None,
    })
}

/// Largest `f_{d}` compatible with `f_{d-1} = prev` among `n` vertices: the
/// number of `(d+1)`-sets whose facets all lie in the first `prev` colex
/// `d`-sets.
fn max_next_entry(n: usize, d: usize, prev: u64) -> u64 {
    if d + 1 > n {
        return 0;
    }
    let rank = |mask: u64| -> u64 {
        let mut r = 0u64;
        let mut m = mask;
        let mut k = 1;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            r += binomial(b, k);
            k += 1;
            m &= m - 1;
        }
        r
    };
    let limit = 1u64 << n;
    let mut count = 0;
    let mut mask: u64 = (1u64 << (d + 1)) - 1;
    while mask < limit {
        let mut m = mask;
        let mut ok = true;
        while m != 0 {
            let low = m & m.wrapping_neg();
            if rank(mask & !low) >= prev {
                ok = false;
                break;
            }
            m &= m - 1;
        }
        if ok {
            count += 1;
        }
        mask = gosper_next(mask);
    }
    count
}

/// Calls `visit` on every realizable f-vector on `n` vertices (with every
/// vertex a face), in lexicographic order of entries.
pub fn for_each_realizable_fvector<F>(n: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&FVector) -> ControlFlow<()>,
{
    fn rec<F: FnMut(&FVector) -> ControlFlow<()>>(n: usize, f: &mut Vec<u64>, visit: &mut F) -> ControlFlow<()> {
        let d = f.len();
        let prev = *f.last().expect("f_0 is set");
        if d == n || prev == 0 {
            let mut full = f.clone();
            full.resize(n, 0);
            return visit(&FVector::new(full));
        }
        let max = max_next_entry(n, d, prev);
        for x in 0..=max {
            f.push(x);
            rec(n, f, visit)?;
            f.pop();
        }
        ControlFlow::Continue(())
    }
    if n == 0 {
        return visit(&FVector::new(Vec::new()));
    }
    let mut f = vec![n as u64];
    rec(n, &mut f, &mut visit)
}

/// Every realizable f-vector on `n` vertices.
pub fn realizable_fvectors(n: usize) -> Vec<FVector> {
    let mut out = Vec::new();
    let _ = for_each_realizable_fvector(n, |f| {
        out.push(f.clone());
        ControlFlow::Continue(())
    });
    out
}

/// The ideal generated by the first `g` lex-largest squarefree monomials of
/// degree `d`.
pub fn lex_prefix_ideal(n: usize, d: usize, g: u64) -> Result<SquarefreeIdeal> {
    if d < 2 || d > n || g == 0 || g > binomial(n, d) {
        return Err(Error::InvalidParameter(format!(
            "no lex prefix of {g} monomials in degree {d} on {n} variables"
        )));
    }
    // Lex-largest g of C(n,d) = complement of the lex-smallest C(n,d) - g.
    let total = binomial(n, d);
    let all = lex_smallest(n, d, total);
    SquarefreeIdeal::new(n, all.into_iter().rev().take(g as usize))
}
