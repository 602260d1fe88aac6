//! Exhaustive search over complexes with a fixed f-vector and the poset of
//! their Betti diagrams.

use std::collections::{BTreeMap, HashSet};
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hochster::{betti_via_hochster, BettiDiagram, BettiJson, DiagramOrder};
use crate::vertex::{binomial, Combinations, VertexSet};

/// Limits for exhaustive runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `n` for labeled enumeration.
    pub max_n_labeled: usize,
    /// Largest `n` for enumeration up to isomorphism.
    pub max_n_iso: usize,
    /// Stop after this many complexes (after isomorphism reduction).
    pub max_complexes: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_n_labeled: 7,
            max_n_iso: 8,
            max_complexes: None,
        }
    }
}

impl SearchConfig {
    fn check(&self, n: usize, mod_iso: bool) -> Result<()> {
        let cap = if mod_iso { self.max_n_iso } else { self.max_n_labeled };
        if n > cap {
            return Err(Error::CapExceeded(format!(
                "enumeration on {n} vertices exceeds the cap of {cap}{}",
                if mod_iso { " (up to isomorphism)" } else { "" }
            )));
        }
        Ok(())
    }
}

/// Calls `visit` on every labeled complex on `1..=n` with f-vector `f`,
/// built dimension by dimension: the candidates in cardinality `d + 1` are
/// the sets whose facets were all chosen in cardinality `d`.
pub fn visit_labeled_complexes<F>(n: usize, f: &FVector, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&SimplicialComplex) -> ControlFlow<()>,
{
    if f.n() != n || f.get(0) != n as u64 || f.check_bounds().is_err() {
        return ControlFlow::Continue(());
    }
    let top = f.last_nonzero().unwrap_or(0);
    let ground = VertexSet::full(n);
    let mut levels: Vec<Vec<VertexSet>> = vec![vec![VertexSet::EMPTY], (1..=n).map(VertexSet::singleton).collect()];
    if n == 0 {
        levels.truncate(1);
    }

    fn rec<F: FnMut(&SimplicialComplex) -> ControlFlow<()>>(
        n: usize,
        ground: VertexSet,
        f: &FVector,
        top: usize,
        levels: &mut Vec<Vec<VertexSet>>,
        visit: &mut F,
    ) -> ControlFlow<()> {
        // levels[k] holds the chosen faces of cardinality k.
        let card = levels.len();
        if card > top + 1 {
            let c = SimplicialComplex::from_buckets(n, ground, levels.clone());
            return visit(&c);
        }
        let prev = &levels[card - 1];
        let mut candidates = Vec::new();
        for &sigma in prev {
            let hi = sigma.max_vertex().unwrap_or(0);
            for v in hi + 1..=n {
                let s = sigma.insert(v);
                if s.facets_with_position().all(|(_, t)| prev.binary_search(&t).is_ok()) {
                    candidates.push(s);
                }
            }
        }
        candidates.sort_unstable();
        let want = f.get(card - 1) as usize;
        if candidates.len() < want {
            return ControlFlow::Continue(());
        }
        for pick in Combinations::new(candidates.len(), want) {
            levels.push(pick.iter().map(|&i| candidates[i]).collect());
            let flow = rec(n, ground, f, top, levels, visit);
            levels.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    if n == 0 {
        let c = SimplicialComplex::from_buckets(0, ground, levels);
        return visit(&c);
    }
    rec(n, ground, f, top, &mut levels, &mut visit)
}

/// All `n!` permutations of `1..=n` as image tables (`perm[v-1]`).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (1..=n).collect();
    let mut c = vec![0usize; n];
    out.push(p.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Canonical form up to relabeling: the least sorted face encoding over all
/// permutations. Faces of cardinality below 2 are shared by every complex on
/// the same vertices and are skipped.
pub fn canonical_form(complex: &SimplicialComplex, perms: &[Vec<usize>]) -> Vec<u64> {
    let faces: Vec<VertexSet> = complex.faces().filter(|f| f.cardinality() >= 2).collect();
    let mut best: Option<Vec<u64>> = None;
    let mut buf = Vec::with_capacity(faces.len());
    for perm in perms {
        buf.clear();
        buf.extend(faces.iter().map(|f| f.permute(perm).bits()));
        buf.sort_unstable();
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.unwrap_or_default()
}

/// Every complex on `1..=n` with f-vector `f`, or one per isomorphism class
/// when `mod_iso`. Unrealizable `f` gives an empty list.
pub fn enumerate_complexes(n: usize, f: &FVector, mod_iso: bool) -> Result<Vec<SimplicialComplex>> {
    enumerate_complexes_with(n, f, mod_iso, &SearchConfig::default())
}

pub fn enumerate_complexes_with(
    n: usize,
    f: &FVector,
    mod_iso: bool,
    config: &SearchConfig,
) -> Result<Vec<SimplicialComplex>> {
    config.check(n, mod_iso)?;
    let perms = if mod_iso { permutations(n) } else { Vec::new() };
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    let _ = visit_labeled_complexes(n, f, |c| {
        if mod_iso && !seen.insert(canonical_form(c, &perms)) {
            return ControlFlow::Continue(());
        }
        out.push(c.clone());
        match config.max_complexes {
            Some(cap) if out.len() >= cap => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    });
    Ok(out)
}

/// Distinct Betti diagrams for one f-vector, with the componentwise order.
#[derive(Clone, Debug)]
pub struct BettiPoset {
    f: FVector,
    p: u64,
    diagrams: Vec<BettiDiagram>,
    witnesses: Vec<Option<SimplicialComplex>>,
    relation: Vec<Vec<DiagramOrder>>,
    complexes_seen: usize,
    truncated: bool,
}

impl BettiPoset {
    /// Builds a poset from explicit diagrams, each optionally paired with a
    /// complex attaining it. Duplicates collapse; all diagrams must share
    /// the diagonal sums of the first.
    pub fn from_diagrams<I>(f: FVector, p: u64, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BettiDiagram, Option<SimplicialComplex>)>,
    {
        let mut map: BTreeMap<BettiDiagram, Option<SimplicialComplex>> = BTreeMap::new();
        let mut count = 0;
        for (d, w) in items {
            count += 1;
            map.entry(d).or_insert(w);
        }
        let mut poset = Self::from_map(f, p, map)?;
        poset.complexes_seen = count;
        Ok(poset)
    }

    fn from_map(f: FVector, p: u64, map: BTreeMap<BettiDiagram, Option<SimplicialComplex>>) -> Result<Self> {
        let (diagrams, witnesses): (Vec<_>, Vec<_>) = map.into_iter().unzip();
        if let Some(first) = diagrams.first() {
            let d = first.diagonal_sums();
            if diagrams.iter().any(|b| !b.diagonal_sums().same_as(&d)) {
                return Err(Error::NotSameHilbertFunction);
            }
        }
        let relation = diagrams
            .iter()
            .map(|a| diagrams.iter().map(|b| a.compare(b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(BettiPoset {
            f,
            p,
            diagrams,
            witnesses,
            relation,
            complexes_seen: 0,
            truncated: false,
        })
    }

    pub fn fvector(&self) -> &FVector {
        &self.f
    }

    pub fn char(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn diagrams(&self) -> &[BettiDiagram] {
        &self.diagrams
    }

    pub fn witness(&self, idx: usize) -> Option<&SimplicialComplex> {
        self.witnesses.get(idx).and_then(Option::as_ref)
    }

    /// Relation of diagram `a` to diagram `b`.
    pub fn order(&self, a: usize, b: usize) -> DiagramOrder {
        self.relation[a][b]
    }

    pub fn index_of(&self, diagram: &BettiDiagram) -> Option<usize> {
        self.diagrams.binary_search(diagram).ok()
    }

    /// Complexes examined while building (after isomorphism reduction).
    pub fn complexes_seen(&self) -> usize {
        self.complexes_seen
    }

    /// Whether enumeration stopped at `max_complexes`.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Indices of diagrams with nothing strictly below them.
    pub fn minimal_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| self.relation[b][a] != DiagramOrder::Less))
            .collect()
    }

    /// Indices of diagrams with nothing strictly above them.
    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| self.relation[b][a] != DiagramOrder::Greater))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<&BettiDiagram> {
        self.minimal_indices().into_iter().map(|i| &self.diagrams[i]).collect()
    }

    pub fn has_unique_min(&self) -> bool {
        self.minimal_indices().len() == 1
    }

    /// The diagram below every other one, if any.
    pub fn minimum(&self) -> Option<&BettiDiagram> {
        (0..self.len())
            .find(|&a| (0..self.len()).all(|b| a == b || self.relation[a][b] == DiagramOrder::Less))
            .map(|a| &self.diagrams[a])
    }

    /// The diagram above every other one, if any.
    pub fn maximum(&self) -> Option<&BettiDiagram> {
        (0..self.len())
            .find(|&a| (0..self.len()).all(|b| a == b || self.relation[a][b] == DiagramOrder::Greater))
            .map(|a| &self.diagrams[a])
    }

    pub fn is_totally_ordered(&self) -> bool {
        self.relation
            .iter()
            .all(|row| row.iter().all(|&o| o != DiagramOrder::Incomparable))
    }

    /// Whether the cached relation is antisymmetric and matches `compare`.
    pub fn relation_consistent(&self) -> bool {
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| {
                let o = self.relation[a][b];
                o == self.relation[b][a].reverse() && (a == b) == (o == DiagramOrder::Equal)
            })
        })
    }

    /// Cover relations `(a, b)` with `a < b` and nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let less = |a: usize, b: usize| self.relation[a][b] == DiagramOrder::Less;
        let mut edges = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if less(a, b) && !(0..self.len()).any(|c| less(a, c) && less(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            fvector: self.f.entries().to_vec(),
            char: self.p,
            diagrams: self.diagrams.iter().map(BettiDiagram::to_json).collect(),
            edges: self.hasse_edges().into_iter().map(|(a, b)| [a, b]).collect(),
            unique_min: self.has_unique_min(),
        }
    }
}

/// Wire form of a poset. `edges` lists cover relations `[a, b]`, meaning
/// diagram `a` lies directly below diagram `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub fvector: Vec<u64>,
    pub char: u64,
    pub diagrams: Vec<BettiJson>,
    pub edges: Vec<[usize; 2]>,
    pub unique_min: bool,
}

const CHUNK: usize = 2048;

/// Enumerates complexes with f-vector `f` and collects their distinct Betti
/// diagrams over `GF(p)`.
pub fn build_poset(n: usize, f: &FVector, p: u64, mod_iso: bool) -> Result<BettiPoset> {
    build_poset_with(n, f, p, mod_iso, &SearchConfig::default())
}

pub fn build_poset_with(n: usize, f: &FVector, p: u64, mod_iso: bool, config: &SearchConfig) -> Result<BettiPoset> {
    config.check(n, mod_iso)?;
    crate::homology::PrimeField::new(p)?;
    let perms = if mod_iso { permutations(n) } else { Vec::new() };
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut found: BTreeMap<BettiDiagram, Option<SimplicialComplex>> = BTreeMap::new();
    let mut count = 0usize;
    let mut truncated = false;
    let mut chunk: Vec<SimplicialComplex> = Vec::with_capacity(CHUNK);
    let mut failure: Option<Error> = None;

    let flush = |chunk: &mut Vec<SimplicialComplex>,
                 seen: &mut HashSet<Vec<u64>>,
                 found: &mut BTreeMap<BettiDiagram, Option<SimplicialComplex>>,
                 count: &mut usize,
                 truncated: &mut bool|
     -> Result<()> {
        let fresh: Vec<SimplicialComplex> = if mod_iso {
            let forms: Vec<Vec<u64>> = chunk.par_iter().map(|c| canonical_form(c, &perms)).collect();
            chunk
                .drain(..)
                .zip(forms)
                .filter(|(_, form)| seen.insert(form.clone()))
                .map(|(c, _)| c)
                .collect()
        } else {
            std::mem::take(chunk)
        };
        let mut fresh = fresh;
        if let Some(cap) = config.max_complexes {
            let room = cap.saturating_sub(*count);
            if fresh.len() >= room {
                fresh.truncate(room);
                *truncated = true;
            }
        }
        *count += fresh.len();
        let diagrams: Vec<BettiDiagram> = fresh
            .par_iter()
            .map(|c| betti_via_hochster(c, p, None))
            .collect::<Result<_>>()?;
        for (d, c) in diagrams.into_iter().zip(fresh) {
            found.entry(d).or_insert(Some(c));
        }
        Ok(())
    };

    let _ = visit_labeled_complexes(n, f, |c| {
        chunk.push(c.clone());
        if chunk.len() >= CHUNK {
            if let Err(e) = flush(&mut chunk, &mut seen, &mut found, &mut count, &mut truncated) {
                failure = Some(e);
                return ControlFlow::Break(());
            }
            if truncated {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if !truncated {
        flush(&mut chunk, &mut seen, &mut found, &mut count, &mut truncated)?;
    }
    let mut poset = BettiPoset::from_map(f.clone(), p, found)?;
    poset.complexes_seen = count;
    poset.truncated = truncated;
    Ok(poset)
}

/// Number of labeled complexes on `n` vertices with `f_1 = k` and no 2-faces:
/// just `C(C(n,2), k)`.
pub fn graph_count(n: usize, k: usize) -> u64 {
    binomial(binomial(n, 2) as usize, k)
}
