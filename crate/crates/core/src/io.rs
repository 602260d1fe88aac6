//! JSON schemas for complexes and ideals, and the monomial string parser.

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, SquarefreeIdeal};
use crate::error::{Error, Result};
use crate::vertex::VertexSet;

/// `{"n": 4, "facets": [[1,4],[2,3]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

/// `{"n": 4, "gens": [[1,2],[1,3],[2,3,4]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<usize>>,
}

/// Either input schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexOrIdeal {
    Complex(ComplexJson),
    Ideal(IdealJson),
}

impl ComplexOrIdeal {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("expected a complex or ideal: {e}")))
    }

    /// The complex described, converting ideals through Stanley–Reisner.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        match self {
            ComplexOrIdeal::Complex(c) => c.to_complex(),
            ComplexOrIdeal::Ideal(i) => Ok(i.to_ideal()?.complex()),
        }
    }
}

impl ComplexJson {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        ComplexJson {
            n: c.n(),
            facets: c
                .facets()
                .into_iter()
                .filter(|f| !f.is_empty())
                .map(VertexSet::to_vec)
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| VertexSet::from_vertices(self.n, f.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(self.n, facets)
    }
}

impl IdealJson {
    pub fn from_ideal(i: &SquarefreeIdeal) -> Self {
        IdealJson {
            n: i.n(),
            gens: i.gens().iter().map(|g| g.to_vec()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<SquarefreeIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| VertexSet::from_vertices(self.n, g.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        SquarefreeIdeal::new(self.n, gens)
    }
}

/// Parses generators given either as a JSON list of index lists
/// (`[[1,2],[2,3,4]]`) or as monomials (`x1*x2, x2*x3*x4`). Monomials are
/// squarefree products of 1-based variables; exponents are rejected.
pub fn parse_generators(text: &str) -> Result<Vec<Vec<usize>>> {
    let t = text.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t).map_err(|e| Error::Parse(format!("bad generator list: {e}")));
    }
    t.split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(parse_monomial)
        .collect()
}

fn parse_monomial(m: &str) -> Result<Vec<usize>> {
    let mut vars = Vec::new();
    for factor in m.split('*') {
        let f = factor.trim();
        if f.contains('^') {
            return Err(Error::Parse(format!("exponents are not allowed in {m:?}")));
        }
        let idx = f
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad variable {f:?} in {m:?}")))?;
        if vars.contains(&idx) {
            return Err(Error::Parse(format!("{m:?} is not squarefree")));
        }
        vars.push(idx);
    }
    Ok(vars)
}
