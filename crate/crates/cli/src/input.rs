use std::fs;
use std::io::Read;

use anyhow::{bail, Context, Result};
use minbetti::hochster::BettiJson;
use minbetti::io::{parse_generators, ComplexJson, ComplexOrIdeal, IdealJson};
use minbetti::{BettiDiagram, FVector, SimplicialComplex};

#[derive(clap::Args, Debug, Clone)]
pub struct ComplexSource {
    /// Ideal generators, as `[[1,2],[2,3]]` or `x1*x2, x2*x3`.
    #[arg(long, conflicts_with_all = ["facets", "input"])]
    pub gens: Option<String>,
    /// Facets of the complex, as `[[1,2],[2,3]]`.
    #[arg(long, conflicts_with = "input")]
    pub facets: Option<String>,
    /// JSON file holding a complex or an ideal; `-` reads standard input.
    #[arg(long)]
    pub input: Option<String>,
    /// Number of variables (vertices); required with --gens and --facets.
    #[arg(long)]
    pub n: Option<usize>,
}

impl ComplexSource {
    pub fn is_given(&self) -> bool {
        self.gens.is_some() || self.facets.is_some() || self.input.is_some()
    }

    pub fn load(&self) -> Result<SimplicialComplex> {
        if let Some(path) = &self.input {
            let text = read_text(path)?;
            let parsed = ComplexOrIdeal::parse(&text)?;
            return Ok(parsed.to_complex()?);
        }
        let n = || self.n.context("--n is required with --gens or --facets");
        if let Some(g) = &self.gens {
            let json = IdealJson {
                n: n()?,
                gens: parse_generators(g)?,
            };
            return Ok(json.to_ideal()?.complex());
        }
        if let Some(f) = &self.facets {
            let facets: Vec<Vec<usize>> = serde_json::from_str(f).with_context(|| format!("bad facet list {f:?}"))?;
            return Ok(ComplexJson { n: n()?, facets }.to_complex()?);
        }
        bail!("give one of --gens, --facets or --input")
    }
}

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
    }
}

pub fn read_diagram(path: &str) -> Result<BettiDiagram> {
    let text = read_text(path)?;
    let json: BettiJson = serde_json::from_str(&text).with_context(|| format!("{path} is not a Betti diagram"))?;
    Ok(BettiDiagram::from_json(&json)?)
}

pub fn parse_fvector(s: &str) -> Result<FVector> {
    let f = FVector::parse(s)?;
    f.check_bounds()?;
    Ok(f)
}
