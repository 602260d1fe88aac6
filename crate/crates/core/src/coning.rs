//! The `j`-cone: a new vertex `n + 1` joined to every face of cardinality at
//! most `j`. The ∞-cone is the ordinary cone.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hochster::BettiDiagram;
use crate::vertex::{binomial, VertexSet, MAX_VERTICES};

/// A coning parameter: a nonnegative integer or ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeIndex {
    Finite(usize),
    Infinity,
}

impl ConeIndex {
    /// Whether faces of cardinality `k` get coned.
    pub fn admits(self, k: usize) -> bool {
        match self {
            ConeIndex::Finite(j) => k <= j,
            ConeIndex::Infinity => true,
        }
    }

    /// The finite value this index acts as on an `n`-vertex complex.
    pub fn effective(self, n: usize) -> usize {
        match self {
            ConeIndex::Finite(j) => j.min(n),
            ConeIndex::Infinity => n,
        }
    }
}

impl fmt::Display for ConeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeIndex::Finite(j) => write!(f, "{j}"),
            ConeIndex::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ConeIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" | "Inf" | "INF" => Ok(ConeIndex::Infinity),
            t => t
                .parse::<usize>()
                .map(ConeIndex::Finite)
                .map_err(|_| Error::Parse(format!("bad cone index {t:?}"))),
        }
    }
}

/// Parses a comma-separated list such as `0,inf,5`. Empty input is the empty list.
pub fn parse_cone_seq(s: &str) -> Result<Vec<ConeIndex>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}

/// `C_(j) Δ` on vertices `1..=n+1`.
pub fn cone_j(complex: &SimplicialComplex, j: ConeIndex) -> Result<SimplicialComplex> {
    let n = complex.n();
    if n + 1 > MAX_VERTICES {
        return Err(Error::TooManyVertices(n + 1));
    }
    if complex.ground() != VertexSet::full(n) {
        return Err(Error::InvalidParameter(
            "coning needs a complex on {1..n}; relabel restrictions first".into(),
        ));
    }
    let apex = n + 1;
    let mut faces: Vec<Vec<VertexSet>> = Vec::with_capacity(n + 2);
    for k in 0..=n + 1 {
        let mut level: Vec<VertexSet> = complex.faces_of_cardinality(k).to_vec();
        if k >= 1 && j.admits(k - 1) {
            level.extend(complex.faces_of_cardinality(k - 1).iter().map(|f| f.insert(apex)));
        }
        faces.push(level);
    }
    Ok(SimplicialComplex::from_buckets(n + 1, VertexSet::full(n + 1), faces))
}

/// The full cone.
pub fn cone_inf(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    cone_j(complex, ConeIndex::Infinity)
}

/// f-vector of `C_(j) Δ` from that of `Δ`: entries `m <= j` become
/// `f_m + f_{m-1}` (with `f_{-1} = 1`), later entries are kept, and the
/// vector grows by one slot.
pub fn fvector_cone_j(f: &FVector, j: ConeIndex) -> FVector {
    let n = f.n();
    let out = (0..=n)
        .map(|m| {
            let below = if m == 0 { 1 } else { f.get(m - 1) };
            if j.admits(m) {
                f.get(m) + below
            } else {
                f.get(m)
            }
        })
        .collect();
    FVector::new(out)
}

/// Betti diagram of `C_(0) Δ` (adding an isolated vertex) predicted from the
/// diagram of `Δ` on `n` vertices:
/// `β'_{0,j} = β_{0,j}`; `β'_{i,i+1} = β_{i-1,i} + β_{i,i+1} + C(n, i)`;
/// `β'_{i,j} = β_{i-1,j-1} + β_{i,j}` for `j >= i + 2`; zero for `1 <= i`, `j <= i`.
pub fn betti_of_zero_cone(diagram: &BettiDiagram) -> BettiDiagram {
    let n = diagram.n();
    let mut out = BettiDiagram::new(n + 1, diagram.char());
    for j in 0..=n + 1 {
        for i in 0..=j {
            let v = if i == 0 {
                diagram.get(0, j)
            } else if j <= i {
                0
            } else {
                let base = diagram.get(i - 1, j - 1) + diagram.get(i, j);
                if j == i + 1 {
                    base + binomial(n, i)
                } else {
                    base
                }
            };
            out.set(i, j, v);
        }
    }
    out
}

/// Left-to-right composition of cones.
pub fn cone_seq(complex: &SimplicialComplex, seq: &[ConeIndex]) -> Result<SimplicialComplex> {
    seq.iter().try_fold(complex.clone(), |acc, &j| cone_j(&acc, j))
}

pub fn fvector_cone_seq(f: &FVector, seq: &[ConeIndex]) -> FVector {
    seq.iter().fold(f.clone(), |acc, &j| fvector_cone_j(&acc, j))
}

/// The binary tree of f-vectors reached by `j`-coning and ∞-coning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeTree {
    pub root: FVector,
    pub j: ConeIndex,
    pub depth: usize,
    /// Keyed by the branch sequence, e.g. `"j,inf"`; the root is `""`.
    pub nodes: BTreeMap<String, FVector>,
}

/// One node of a [`ConeTree`] in wire form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNodeJson {
    pub index: String,
    pub fvector: Vec<u64>,
}

/// Two nodes with equal f-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    pub first: String,
    pub second: String,
    pub fvector: FVector,
}

impl ConeTree {
    /// Keys of the nodes at `depth` levels below the root.
    pub fn level(&self, depth: usize) -> impl Iterator<Item = (&String, &FVector)> {
        self.nodes.iter().filter(move |(k, _)| branch_len(k) == depth)
    }

    pub fn leaves(&self) -> impl Iterator<Item = (&String, &FVector)> {
        self.level(self.depth)
    }

    /// Pairs of leaves sharing an f-vector.
    pub fn leaf_collisions(&self) -> Vec<Collision> {
        collisions(self.leaves())
    }

    /// Pairs of nodes anywhere in the tree sharing an f-vector.
    pub fn all_collisions(&self) -> Vec<Collision> {
        collisions(self.nodes.iter())
    }

    /// Nodes whose `j`-child and ∞-child coincide.
    pub fn sibling_collisions(&self) -> Vec<String> {
        self.nodes
            .keys()
            .filter(|k| branch_len(k) < self.depth)
            .filter(|k| self.nodes[&child_key(k, "j")] == self.nodes[&child_key(k, "inf")])
            .cloned()
            .collect()
    }

    /// The branch sequence of a key as cone indices.
    pub fn key_to_seq(&self, key: &str) -> Vec<ConeIndex> {
        key.split(',')
            .filter(|s| !s.is_empty())
            .map(|s| if s == "j" { self.j } else { ConeIndex::Infinity })
            .collect()
    }

    pub fn to_json(&self) -> Vec<TreeNodeJson> {
        self.nodes
            .iter()
            .map(|(k, f)| TreeNodeJson {
                index: k.clone(),
                fvector: f.entries().to_vec(),
            })
            .collect()
    }
}

fn branch_len(key: &str) -> usize {
    if key.is_empty() {
        0
    } else {
        key.split(',').count()
    }
}

fn child_key(parent: &str, branch: &str) -> String {
    if parent.is_empty() {
        branch.to_string()
    } else {
        format!("{parent},{branch}")
    }
}

fn collisions<'a, I>(nodes: I) -> Vec<Collision>
where
    I: Iterator<Item = (&'a String, &'a FVector)>,
{
    let mut seen: BTreeMap<&FVector, &String> = BTreeMap::new();
    let mut out = Vec::new();
    for (k, f) in nodes {
        if let Some(prev) = seen.get(f) {
            out.push(Collision {
                first: (*prev).clone(),
                second: k.clone(),
                fvector: f.clone(),
            });
        } else {
            seen.insert(f, k);
        }
    }
    out
}

/// Builds the tree by direct coning, level by level.
pub fn cone_tree(root: &FVector, j: ConeIndex, depth: usize) -> ConeTree {
    let mut nodes = BTreeMap::new();
    nodes.insert(String::new(), root.clone());
    let mut frontier = vec![(String::new(), root.clone())];
    for _ in 0..depth {
        frontier = frontier
            .par_iter()
            .flat_map_iter(|(key, f)| {
                [
                    (child_key(key, "j"), fvector_cone_j(f, j)),
                    (child_key(key, "inf"), fvector_cone_j(f, ConeIndex::Infinity)),
                ]
            })
            .collect();
        nodes.extend(frontier.iter().cloned());
    }
    ConeTree {
        root: root.clone(),
        j,
        depth,
        nodes,
    }
}
