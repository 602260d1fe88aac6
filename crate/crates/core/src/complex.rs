//! Simplicial complexes, squarefree monomial ideals and f-vectors.
//!
//! A [`SimplicialComplex`] stores every face, bucketed by cardinality and
//! sorted by bitmask within a bucket. Complexes built from facets or ideals
//! always contain every singleton of their vertex set: ideals with linear
//! generators are out of scope.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex::{binomial, VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    ground: VertexSet,
    /// `faces[k]` holds the faces of cardinality `k`, sorted. Empty for the
    /// void complex.
    faces: Vec<Vec<VertexSet>>,
}

impl SimplicialComplex {
    /// The void complex: no faces at all, not even the empty one.
    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            ground: VertexSet::EMPTY,
            faces: Vec::new(),
        }
    }

    /// The full simplex on `{1, ..., n}`.
    pub fn simplex(n: usize) -> Result<Self> {
        check_n(n)?;
        let ground = VertexSet::full(n);
        let faces = (0..=n)
            .map(|k| {
                let mut b: Vec<_> = ground.subsets_of_size(k).collect();
                b.sort_unstable();
                b
            })
            .collect();
        Ok(SimplicialComplex { n, ground, faces })
    }

    /// Smallest complex on `{1, ..., n}` containing the given facets and
    /// every singleton.
    pub fn from_facets<I>(n: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        check_n(n)?;
        let ground = VertexSet::full(n);
        let mut seen: HashSet<VertexSet> = HashSet::new();
        let mut stack: Vec<VertexSet> = (1..=n).map(VertexSet::singleton).collect();
        stack.push(VertexSet::EMPTY);
        for f in facets {
            if !f.is_subset(ground) {
                let vertex = f.difference(ground).iter().next().unwrap_or(0);
                return Err(Error::InvalidVertex { vertex, n });
            }
            stack.push(f);
        }
        while let Some(face) = stack.pop() {
            if !seen.insert(face) {
                continue;
            }
            for (_, sub) in face.facets_with_position() {
                if !seen.contains(&sub) {
                    stack.push(sub);
                }
            }
        }
        Ok(Self::from_face_set(n, ground, seen))
    }

    /// Builds a complex from an explicit face list on `{1, ..., n}`, checking
    /// downward closure and that every singleton is present. The empty face
    /// is added if missing.
    pub fn from_faces<I>(n: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        check_n(n)?;
        let ground = VertexSet::full(n);
        let mut set: HashSet<VertexSet> = HashSet::new();
        set.insert(VertexSet::EMPTY);
        for f in faces {
            if !f.is_subset(ground) {
                let vertex = f.difference(ground).iter().next().unwrap_or(0);
                return Err(Error::InvalidVertex { vertex, n });
            }
            set.insert(f);
        }
        for v in 1..=n {
            if !set.contains(&VertexSet::singleton(v)) {
                return Err(Error::LinearGeneratorUnsupported(v));
            }
        }
        for f in &set {
            if let Some((_, sub)) = f.facets_with_position().find(|(_, s)| !set.contains(s)) {
                return Err(Error::NotDownwardClosed(format!("{f} is a face but {sub} is not")));
            }
        }
        Ok(Self::from_face_set(n, ground, set))
    }

    /// Assembles sorted buckets. Callers guarantee closure.
    pub(crate) fn from_buckets(n: usize, ground: VertexSet, mut faces: Vec<Vec<VertexSet>>) -> Self {
        while faces.len() > 1 && faces.last().is_some_and(|b| b.is_empty()) {
            faces.pop();
        }
        for b in &mut faces {
            b.sort_unstable();
        }
        SimplicialComplex { n, ground, faces }
    }

    fn from_face_set(n: usize, ground: VertexSet, set: HashSet<VertexSet>) -> Self {
        let mut faces: Vec<Vec<VertexSet>> = vec![Vec::new(); ground.cardinality() + 1];
        for f in set {
            faces[f.cardinality()].push(f);
        }
        Self::from_buckets(n, ground, faces)
    }

    /// Ambient label bound: every label lies in `1..=n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The vertex set the complex lives on. `{1..n}` except for restrictions.
    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension: −1 for `{∅}`, and also −1 for the void complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Faces of cardinality `k`, sorted by bitmask.
    pub fn faces_of_cardinality(&self, k: usize) -> &[VertexSet] {
        self.faces.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Faces of dimension `l` (cardinality `l + 1`), `l ≥ −1`.
    pub fn faces_of_dim(&self, l: isize) -> &[VertexSet] {
        if l < -1 {
            return &[];
        }
        self.faces_of_cardinality((l + 1) as usize)
    }

    /// Every face, by increasing cardinality.
    pub fn faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces.iter().flatten().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces
            .get(face.cardinality())
            .is_some_and(|b| b.binary_search(&face).is_ok())
    }

    /// Inclusion-maximal faces, sorted by cardinality then bitmask.
    pub fn facets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for (k, bucket) in self.faces.iter().enumerate() {
            let above = self.faces.get(k + 1);
            for &f in bucket {
                let maximal = match above {
                    None => true,
                    Some(up) => !up.iter().any(|g| f.is_subset(*g)),
                };
                if maximal {
                    out.push(f);
                }
            }
        }
        out
    }

    /// Face counts by dimension, one entry per vertex of the ground set.
    pub fn f_vector(&self) -> FVector {
        let len = self.ground.cardinality();
        let entries = (0..len)
            .map(|i| self.faces_of_cardinality(i + 1).len() as u64)
            .collect();
        FVector::new(entries)
    }

    /// `Δ_W = Δ ∩ P(W)`, keeping the original labels. The result's ground
    /// set is `W ∩ ground`.
    pub fn restrict(&self, w: VertexSet) -> SimplicialComplex {
        let ground = self.ground.intersection(w);
        if self.is_void() {
            return SimplicialComplex::void(self.n);
        }
        let mut faces = Vec::with_capacity(self.faces.len());
        for bucket in &self.faces {
            let kept: Vec<VertexSet> = bucket.iter().copied().filter(|f| f.is_subset(w)).collect();
            if kept.is_empty() {
                break;
            }
            faces.push(kept);
        }
        SimplicialComplex {
            n: self.n,
            ground,
            faces,
        }
    }

    /// Generators of the Stanley–Reisner ideal: the minimal non-faces.
    pub fn minimal_nonfaces(&self) -> Result<SquarefreeIdeal> {
        if self.is_void() {
            return Err(Error::InvalidParameter(
                "the void complex has no Stanley–Reisner ideal".into(),
            ));
        }
        for v in self.ground.iter() {
            if !self.contains(VertexSet::singleton(v)) {
                return Err(Error::LinearGeneratorUnsupported(v));
            }
        }
        let mut gens = Vec::new();
        // A set S with |S| ≥ 2 is a minimal non-face iff S ∉ Δ and every
        // S − v ∈ Δ; generate S = σ ∪ {v} with v > max σ so each S is seen once.
        for bucket in self.faces.iter().skip(1) {
            for &sigma in bucket {
                let top = sigma.max_vertex().unwrap_or(0);
                for v in self.ground.iter().filter(|&v| v > top) {
                    let s = sigma.insert(v);
                    if self.contains(s) {
                        continue;
                    }
                    if s.facets_with_position().all(|(_, t)| self.contains(t)) {
                        gens.push(s);
                    }
                }
            }
        }
        Ok(SquarefreeIdeal::from_minimal(self.n, gens))
    }

    /// Relabels vertices: `perm[v - 1]` is the new label of `v`.
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .map(|b| b.iter().map(|f| f.permute(perm)).collect())
            .collect();
        SimplicialComplex::from_buckets(self.n, self.ground.permute(perm), faces)
    }

    /// Sorted bitmasks of all faces; two complexes on the same labels are
    /// equal iff their encodings are.
    pub fn encoding(&self) -> Vec<u64> {
        self.faces().map(VertexSet::bits).collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.n)?;
        for (k, face) in self.facets().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str("])")
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

/// A squarefree monomial ideal with no linear terms, by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<VertexSet>,
}

impl SquarefreeIdeal {
    /// Builds the ideal generated by `gens`. Duplicate and non-minimal
    /// generators are dropped; the ideal is unchanged by that.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, gens: I) -> Result<Self> {
        check_n(n)?;
        let ground = VertexSet::full(n);
        let mut all: Vec<VertexSet> = Vec::new();
        for g in gens {
            if !g.is_subset(ground) {
                let vertex = g.difference(ground).iter().next().unwrap_or(0);
                return Err(Error::InvalidVertex { vertex, n });
            }
            match g.cardinality() {
                0 => return Err(Error::InvalidIdeal("the unit ideal is not supported".into())),
                1 => return Err(Error::LinearGeneratorUnsupported(g.iter().next().unwrap_or(0))),
                _ => all.push(g),
            }
        }
        all.sort_unstable();
        all.dedup();
        let minimal: Vec<VertexSet> = all
            .iter()
            .copied()
            .filter(|&g| !all.iter().any(|&h| h != g && h.is_subset(g)))
            .collect();
        Ok(Self::from_minimal(n, minimal))
    }

    pub(crate) fn from_minimal(n: usize, mut gens: Vec<VertexSet>) -> Self {
        gens.sort_by(|a, b| a.cardinality().cmp(&b.cardinality()).then(b.cmp_lex(*a)));
        SquarefreeIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        SquarefreeIdeal { n, gens: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators ordered by degree, then lex-descending.
    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    /// Distinct generator degrees, ascending.
    pub fn generator_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.gens.iter().map(|g| g.cardinality()).collect();
        d.dedup();
        d
    }

    /// Stanley–Reisner complex: all subsets containing no generator.
    pub fn complex(&self) -> SimplicialComplex {
        let ground = VertexSet::full(self.n);
        let gen_set: HashSet<VertexSet> = self.gens.iter().copied().collect();
        let mut faces: Vec<Vec<VertexSet>> = vec![vec![VertexSet::EMPTY]];
        faces.push((1..=self.n).map(VertexSet::singleton).collect());
        loop {
            let prev = faces.last().expect("nonempty");
            let mut next = Vec::new();
            for &sigma in prev {
                let top = sigma.max_vertex().unwrap_or(0);
                for v in (top + 1)..=self.n {
                    let s = sigma.insert(v);
                    if gen_set.contains(&s) {
                        continue;
                    }
                    // Every facet of s in the previous level means no smaller
                    // generator divides s.
                    if s.facets_with_position().all(|(_, t)| prev.binary_search(&t).is_ok()) {
                        next.push(s);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            faces.push(next);
        }
        if self.n == 0 {
            faces.truncate(1);
        }
        SimplicialComplex::from_buckets(self.n, ground, faces)
    }

    /// Renders the generators as `x1*x2, x1*x3, ...`.
    pub fn to_monomial_string(&self) -> String {
        self.gens
            .iter()
            .map(|g| g.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join("*"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// `complex_of_ideal`: the Stanley–Reisner complex of `ideal`.
pub fn complex_of_ideal(ideal: &SquarefreeIdeal) -> SimplicialComplex {
    ideal.complex()
}

/// Face counts `(f_0, ..., f_{n-1})`; `f_i` counts faces of cardinality `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FVector(entries)
    }

    /// Ambient vertex count, i.e. the length of the vector.
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `f_i`, zero past the end.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Index of the last nonzero entry.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.0.iter().rposition(|&x| x != 0)
    }

    /// Checks the trivial bounds `f_i ≤ C(n, i+1)`.
    pub fn check_bounds(&self) -> Result<()> {
        let n = self.n();
        for (i, &fi) in self.0.iter().enumerate() {
            if fi > binomial(n, i + 1) {
                return Err(Error::NotAnFVector(format!(
                    "f_{i} = {fi} exceeds C({n},{}) = {}",
                    i + 1,
                    binomial(n, i + 1)
                )));
            }
        }
        Ok(())
    }

    /// Parses `6,8,4,0,0,0` (parentheses and spaces tolerated).
    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Ok(FVector(Vec::new()));
        }
        trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad f-vector entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(FVector)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FVector{self}")
    }
}

impl From<Vec<u64>> for FVector {
    fn from(v: Vec<u64>) -> Self {
        FVector(v)
    }
}

/// Convenience: a vertex set from a slice of labels, for tests and examples.
pub fn vset(n: usize, labels: &[usize]) -> Result<VertexSet> {
    VertexSet::from_vertices(n, labels.iter().copied())
}
