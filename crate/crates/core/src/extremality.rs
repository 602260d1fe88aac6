//! Criteria deciding whether a Hilbert function has a unique minimal Betti
//! diagram, and the path and cycle complexes that witness unique minima for
//! f-vectors `(n, k, 0, ..., 0)`.
//!
//! Everything here works on diagrams rather than ideals, so diagrams computed
//! elsewhere can be fed in through the JSON interface.

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hilbert_lex::squarefree_lex_complex;
use crate::hochster::{betti_via_hochster, BettiDiagram, DiagramOrder};
use crate::vertex::VertexSet;

/// A diagonal on which no diagram of the set can be undercut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagWitness {
    /// Least degree `j` with `d_j ≠ 0` and `min_k β^{(k)}_{i,j} = 0` for all `i`.
    pub j: usize,
    /// Indices of two incomparable inputs.
    pub incomparable: (usize, usize),
}

/// Looks for a degree `j` whose diagonal sum is nonzero while every position
/// on that diagonal is zero in at least one input. Such a `j` rules out a
/// common lower bound, so the inputs cannot contain a unique minimum.
pub fn check_diag_witness(diagrams: &[BettiDiagram]) -> Result<Option<DiagWitness>> {
    let Some(first) = diagrams.first() else {
        return Ok(None);
    };
    let d = first.diagonal_sums();
    for other in &diagrams[1..] {
        if other.n() != first.n() {
            return Err(Error::AmbientMismatch(first.n(), other.n()));
        }
        if !other.diagonal_sums().same_as(&d) {
            return Err(Error::NotSameHilbertFunction);
        }
    }
    let max_j = diagrams.iter().map(BettiDiagram::max_j).max().unwrap_or(0);
    for j in 0..=max_j {
        if d.get(j) == 0 {
            continue;
        }
        let all_mins_zero = (0..=j).all(|i| diagrams.iter().map(|b| b.get(i, j)).min() == Some(0));
        if !all_mins_zero {
            continue;
        }
        let pair = incomparable_pair(diagrams)?.ok_or_else(|| {
            Error::InvalidParameter(format!("diagonal {j} qualifies but no two inputs are incomparable"))
        })?;
        return Ok(Some(DiagWitness { j, incomparable: pair }));
    }
    Ok(None)
}

fn incomparable_pair(diagrams: &[BettiDiagram]) -> Result<Option<(usize, usize)>> {
    for a in 0..diagrams.len() {
        for b in a + 1..diagrams.len() {
            if diagrams[a].compare(&diagrams[b])? == DiagramOrder::Incomparable {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// `Σ_i β_{i,j} = |d_j|` for every `j`: each diagonal carries no cancellation.
/// A diagram with this property has the least possible total `Σ s_i` for its
/// Hilbert function.
pub fn check_sum_equals_abs_diag(diagram: &BettiDiagram) -> bool {
    let d = diagram.diagonal_sums();
    let mut col_sum = vec![0u64; d.as_slice().len()];
    for ((_, j), v) in diagram.entries() {
        col_sum[j] += v;
    }
    col_sum.iter().enumerate().all(|(j, &s)| s == d.get(j).unsigned_abs())
}

/// Checks the total-Betti incomparability pattern with `a` in the role of the
/// ideal whose `s_1` is larger: `s_0` equal, `s_1^a > s_1^b`, some `k` with
/// `s_k^a < s_k^b` and `s_{k+i}^a ≤ s_{k+i}^b` for all `i > 0`, and
/// `β^a_{i,j} = 0` whenever `j − i` is even and `j > 0`. Returns the least
/// such `k`. Diagrams with different diagonal sums never qualify.
pub fn check_betti_family(a: &BettiDiagram, b: &BettiDiagram) -> Option<usize> {
    if a.n() != b.n() || !a.diagonal_sums().same_as(&b.diagonal_sums()) {
        return None;
    }
    let sa = a.total_betti();
    let sb = b.total_betti();
    if sa.get(0) != sb.get(0) || sa.get(1) <= sb.get(1) {
        return None;
    }
    let parity_ok = a.entries().all(|((i, j), _)| j == 0 || (j - i) % 2 == 1);
    if !parity_ok {
        return None;
    }
    let len = sa.as_slice().len().max(sb.as_slice().len());
    (2..len).find(|&k| sa.get(k) < sb.get(k) && (k + 1..len).all(|t| sa.get(t) <= sb.get(t)))
}

/// Whether `diagram` is supported on `(0,0)` and rows 1 and 2 only.
pub fn is_two_row(diagram: &BettiDiagram) -> bool {
    diagram
        .entries()
        .all(|((i, j), _)| (i, j) == (0, 0) || j - i == 1 || j - i == 2)
}

/// Two-row lex criterion: when the squarefree lex diagram of `f` lives on
/// rows 1–2 and `candidate` (with the same Hilbert function) has no
/// cancellation on any diagonal, `candidate` is the unique minimum among
/// squarefree monomial ideals with f-vector `f`.
pub fn check_tworow_unique_min(f: &FVector, candidate: &BettiDiagram, p: u64) -> Result<bool> {
    let lex = squarefree_lex_complex(f)?;
    let lex_betti = betti_via_hochster(&lex, p, None)?;
    Ok(is_two_row(&lex_betti)
        && candidate.n() == lex_betti.n()
        && candidate.diagonal_sums().same_as(&lex_betti.diagonal_sums())
        && check_sum_equals_abs_diag(candidate))
}

/// Isolated points `1..=n` plus the path `{1,2}, ..., {k,k+1}`.
pub fn path_complex(n: usize, k: usize) -> Result<SimplicialComplex> {
    if k < 1 || k + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "path needs 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let edges = (1..=k).map(|v| VertexSet::singleton(v).insert(v + 1));
    SimplicialComplex::from_facets(n, edges)
}

/// The `n`-cycle `{1,2}, ..., {n-1,n}, {n,1}`.
pub fn cycle_complex(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges = (1..=n).map(|v| VertexSet::singleton(v).insert(v % n + 1));
    SimplicialComplex::from_facets(n, edges)
}

/// The complex realizing `(n, k, 0, ..., 0)` with the minimal diagram:
/// isolated points for `k = 0`, a path for `1 <= k < n`, the cycle for `k = n`.
pub fn minimal_nk_complex(n: usize, k: usize) -> Result<SimplicialComplex> {
    match k {
        0 => SimplicialComplex::from_facets(n, []),
        k if k < n => path_complex(n, k),
        k if k == n && n >= 3 => cycle_complex(n),
        _ => Err(Error::InvalidParameter(format!("no minimal complex for n={n}, k={k}"))),
    }
}

/// `q`-linear: only `β_{0,0}` and row `q − 1` are nonzero.
pub fn is_linear(diagram: &BettiDiagram, q: usize) -> bool {
    diagram
        .entries()
        .all(|((i, j), _)| (i, j) == (0, 0) || (q >= 1 && j == i + q - 1))
}

/// Whether the cycle's diagram is supported on `(0,0)`, `(i, i+1)` for
/// `1 <= i <= n-2` and `(n-2, n)`.
pub fn cycle_support_ok(diagram: &BettiDiagram, n: usize) -> bool {
    diagram.entries().all(|((i, j), _)| {
        (i, j) == (0, 0) || (j == i + 1 && (1..=n.saturating_sub(2)).contains(&i)) || (i + 2 == n && j == n)
    })
}
