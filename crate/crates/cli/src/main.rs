mod input;
mod verify;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use minbetti::coning::parse_cone_seq;
use minbetti::hilbert_lex::squarefree_lex_ideal;
use minbetti::io::{ComplexJson, IdealJson};
use minbetti::search::{build_poset_with, SearchConfig};
use minbetti::*;
use serde_json::json;

use input::{parse_fvector, read_diagram, ComplexSource};
use verify::Check;

#[derive(Parser, Debug)]
#[command(
    name = "minbetti",
    version,
    about = "Graded Betti numbers of squarefree monomial ideals"
)]
struct Cli {
    /// Field characteristic (a prime below 2^32).
    #[arg(long = "char", global = true, default_value_t = 101)]
    char_p: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Report {
    Minima,
    Poset,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Betti numbers via Hochster's formula.
    Betti {
        #[command(flatten)]
        source: ComplexSource,
        /// Only visit subsets of at most this size (entries with j <= cap).
        #[arg(long)]
        degree_cap: Option<usize>,
    },
    /// Apply a sequence of j-cones to an f-vector or a complex.
    Cone {
        #[arg(long, required_unless_present_any = ["gens", "facets", "input"])]
        fvector: Option<String>,
        #[command(flatten)]
        source: ComplexSource,
        /// Comma-separated cone indices, e.g. `0,inf,5`.
        #[arg(long)]
        seq: String,
        /// Also print the Betti diagram of the coned complex.
        #[arg(long)]
        betti: bool,
    },
    /// The tree of f-vectors reached by j-coning and full coning.
    Family {
        #[arg(long)]
        fvector: String,
        /// Cones applied before branching, e.g. `inf,inf,inf`.
        #[arg(long, default_value = "")]
        pre_cones: String,
        /// The finite branch index.
        #[arg(long)]
        j: ConeIndex,
        #[arg(long)]
        depth: usize,
        /// Report coinciding leaves; exit 1 if any.
        #[arg(long)]
        verify_distinct: bool,
        /// Emit every node rather than only the leaves.
        #[arg(long)]
        all_nodes: bool,
    },
    /// The squarefree lex complex and ideal of an f-vector.
    Lex {
        #[arg(long)]
        fvector: String,
        /// Also print the Betti diagram.
        #[arg(long)]
        betti: bool,
        /// Exit 0 if the lex ideal is generated in one degree, 1 otherwise.
        #[arg(long)]
        single_degree: bool,
    },
    /// Exhaustive Betti poset for an f-vector.
    Search {
        #[arg(long)]
        fvector: String,
        /// Enumerate up to vertex relabeling.
        #[arg(long)]
        mod_iso: bool,
        /// Stop after this many complexes.
        #[arg(long)]
        max_complexes: Option<usize>,
        #[arg(long, value_enum, default_value_t = Report::All)]
        report: Report,
    },
    /// Checks with PASS/FAIL output; exit 1 on any failure.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Recompute the two reference ideals on six variables and their criteria.
    #[command(name = "paper-examples", alias = "reference-pair")]
    ReferencePair,
    /// Path complexes on n vertices: 2-linearity and, for small n, minimality.
    Path {
        #[arg(long)]
        n: usize,
        /// Largest n for the exhaustive minimality search.
        #[arg(long, default_value_t = 5)]
        search_max_n: usize,
    },
    /// The n-cycle: Betti support and, for small n, minimality.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        search_max_n: usize,
    },
    /// Diagonal witness against a unique minimum among the given diagrams.
    Witness {
        #[arg(long, num_args = 2.., required = true)]
        diagrams: Vec<String>,
    },
    /// Total-Betti incomparability with the first diagram in the larger-s_1 role.
    Family {
        a: String,
        b: String,
        /// Exchange the roles of the two diagrams.
        #[arg(long)]
        swap: bool,
    },
    /// Whether a diagram is the unique minimum for a two-row lex f-vector.
    Tworow {
        #[arg(long)]
        fvector: String,
        #[arg(long)]
        diagram: String,
    },
    /// Randomized coning identities.
    Coning {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json(out: &mut String, value: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn run(cli: &Cli, out: &mut String) -> Result<Outcome> {
    let p = cli.char_p;
    PrimeField::new(p)?;
    match &cli.command {
        Command::Betti { source, degree_cap } => {
            let c = source.load()?;
            let b = betti_via_hochster(&c, p, *degree_cap)?;
            match cli.format {
                Format::Text => write!(out, "{}", b.render_macaulay2())?,
                Format::Json => print_json(out, &b.to_json())?,
            }
        }
        Command::Cone {
            fvector,
            source,
            seq,
            betti,
        } => {
            let seq = parse_cone_seq(seq)?;
            if source.is_given() {
                let coned = cone_seq(&source.load()?, &seq)?;
                let diagram = if *betti {
                    Some(betti_via_hochster(&coned, p, None)?)
                } else {
                    None
                };
                match cli.format {
                    Format::Text => {
                        writeln!(out, "f-vector: {}", coned.f_vector())?;
                        let facets: Vec<String> = coned.facets().iter().map(ToString::to_string).collect();
                        writeln!(out, "facets: {}", facets.join(" "))?;
                        if let Some(d) = diagram {
                            write!(out, "{}", d.render_macaulay2())?;
                        }
                    }
                    Format::Json => print_json(
                        out,
                        &json!({
                            "complex": ComplexJson::from_complex(&coned),
                            "fvector": coned.f_vector().entries(),
                            "betti": diagram.map(|d| d.to_json()),
                        }),
                    )?,
                }
            } else {
                let f = parse_fvector(fvector.as_deref().context("give --fvector or a complex")?)?;
                let g = fvector_cone_seq(&f, &seq);
                match cli.format {
                    Format::Text => writeln!(out, "{g}")?,
                    Format::Json => print_json(out, &g.entries())?,
                }
            }
        }
        Command::Family {
            fvector,
            pre_cones,
            j,
            depth,
            verify_distinct,
            all_nodes,
        } => {
            let root = fvector_cone_seq(&parse_fvector(fvector)?, &parse_cone_seq(pre_cones)?);
            let tree = cone_tree(&root, *j, *depth);
            let nodes: Vec<_> = tree
                .to_json()
                .into_iter()
                .filter(|node| *all_nodes || tree.key_to_seq(&node.index).len() == *depth)
                .collect();
            match cli.format {
                Format::Text => {
                    for node in &nodes {
                        let label = if node.index.is_empty() { "root" } else { &node.index };
                        writeln!(out, "{label}\t{}", FVector::new(node.fvector.clone()))?;
                    }
                }
                Format::Json => print_json(out, &nodes)?,
            }
            if *verify_distinct {
                let collisions = tree.leaf_collisions();
                let leaves = tree.leaves().count();
                let report = if collisions.is_empty() {
                    format!("PASS {leaves} leaves, all distinct")
                } else {
                    let list: Vec<String> = collisions
                        .iter()
                        .map(|c| format!("{} = {} = {}", c.first, c.second, c.fvector))
                        .collect();
                    format!(
                        "FAIL {} collisions among {leaves} leaves: {}",
                        collisions.len(),
                        list.join("; ")
                    )
                };
                match cli.format {
                    Format::Text => writeln!(out, "{report}")?,
                    Format::Json => eprintln!("{report}"),
                }
                if !collisions.is_empty() {
                    return Ok(Outcome::Failed);
                }
            }
        }
        Command::Lex {
            fvector,
            betti,
            single_degree,
        } => {
            let f = parse_fvector(fvector)?;
            let complex = squarefree_lex_complex(&f)?;
            let ideal = squarefree_lex_ideal(&f)?;
            let degree = lex_generated_in_single_degree(&f)?;
            let diagram = if *betti {
                Some(betti_via_hochster(&complex, p, None)?)
            } else {
                None
            };
            match cli.format {
                Format::Text => {
                    let facets: Vec<String> = complex.facets().iter().map(ToString::to_string).collect();
                    writeln!(out, "facets: {}", facets.join(" "))?;
                    writeln!(out, "ideal: {}", ideal.to_monomial_string())?;
                    writeln!(out, "generator degrees: {:?}", ideal.generator_degrees())?;
                    if let Some(d) = &diagram {
                        write!(out, "{}", d.render_macaulay2())?;
                    }
                }
                Format::Json => print_json(
                    out,
                    &json!({
                        "fvector": f.entries(),
                        "complex": ComplexJson::from_complex(&complex),
                        "ideal": IdealJson::from_ideal(&ideal),
                        "single_degree": degree,
                        "betti": diagram.map(|d| d.to_json()),
                    }),
                )?,
            }
            if *single_degree && degree.is_none() {
                return Ok(Outcome::Failed);
            }
        }
        Command::Search {
            fvector,
            mod_iso,
            max_complexes,
            report,
        } => {
            let f = parse_fvector(fvector)?;
            let config = SearchConfig {
                max_complexes: *max_complexes,
                ..SearchConfig::default()
            };
            let poset = build_poset_with(f.n(), &f, p, *mod_iso, &config)?;
            print_search(out, &poset, *report, cli.format)?;
        }
        Command::Verify { check } => return run_verify(out, check, p, cli.format),
    }
    Ok(Outcome::Ok)
}

fn print_search(out: &mut String, poset: &BettiPoset, report: Report, format: Format) -> Result<()> {
    let minima = poset.minimal_indices();
    match format {
        Format::Json => match report {
            Report::Minima => print_json(
                out,
                &json!({
                    "fvector": poset.fvector().entries(),
                    "char": poset.char(),
                    "minima": minima.iter().map(|&i| poset.diagrams()[i].to_json()).collect::<Vec<_>>(),
                    "unique_min": poset.has_unique_min(),
                }),
            )?,
            Report::Poset => print_json(out, &poset.to_json())?,
            Report::All => {
                let mut value = serde_json::to_value(poset.to_json())?;
                value["minima"] = json!(minima);
                value["maxima"] = json!(poset.maximal_indices());
                value["complexes_seen"] = json!(poset.complexes_seen());
                value["truncated"] = json!(poset.truncated());
                print_json(out, &value)?;
            }
        },
        Format::Text => {
            writeln!(
                out,
                "f-vector {} over GF({}): {} complexes, {} distinct diagrams{}",
                poset.fvector(),
                poset.char(),
                poset.complexes_seen(),
                poset.len(),
                if poset.truncated() { " (truncated)" } else { "" }
            )?;
            let shown: Vec<usize> = match report {
                Report::Minima => minima.clone(),
                _ => (0..poset.len()).collect(),
            };
            for i in shown {
                let tag = if minima.contains(&i) { " (minimal)" } else { "" };
                writeln!(out, "[{i}]{tag}")?;
                write!(out, "{}", poset.diagrams()[i].render_macaulay2())?;
            }
            if report != Report::Minima {
                let edges: Vec<String> = poset.hasse_edges().iter().map(|(a, b)| format!("{a}<{b}")).collect();
                writeln!(out, "covers: {}", edges.join(" "))?;
            }
            writeln!(out, "unique minimum: {}", poset.has_unique_min())?;
        }
    }
    Ok(())
}

fn report_checks(out: &mut String, checks: &[Check], format: Format) -> Result<Outcome> {
    match format {
        Format::Json => print_json(out, &checks)?,
        Format::Text => {
            for c in checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {}: {}", c.name, c.detail.trim_end())?;
            }
        }
    }
    Ok(if checks.iter().all(|c| c.pass) {
        Outcome::Ok
    } else {
        Outcome::Failed
    })
}

fn run_verify(out: &mut String, check: &VerifyCommand, p: u64, format: Format) -> Result<Outcome> {
    let checks = match check {
        VerifyCommand::ReferencePair => verify::reference_pair(p)?,
        VerifyCommand::Path { n, search_max_n } => verify::path(*n, p, *search_max_n)?,
        VerifyCommand::Cycle { n, search_max_n } => verify::cycle(*n, p, *search_max_n)?,
        VerifyCommand::Witness { diagrams } => {
            let ds = diagrams.iter().map(|d| read_diagram(d)).collect::<Result<Vec<_>>>()?;
            let w = check_diag_witness(&ds)?;
            let detail = match &w {
                Some(w) => format!("j = {}, incomparable inputs {:?}", w.j, w.incomparable),
                None => "no diagonal witness".to_string(),
            };
            vec![Check {
                name: "diagonal witness".into(),
                pass: w.is_some(),
                detail,
            }]
        }
        VerifyCommand::Family { a, b, swap } => {
            let (mut x, mut y) = (read_diagram(a)?, read_diagram(b)?);
            if *swap {
                std::mem::swap(&mut x, &mut y);
            }
            let k = check_betti_family(&x, &y);
            vec![Check {
                name: "total Betti incomparability".into(),
                pass: k.is_some(),
                detail: format!("k = {k:?}"),
            }]
        }
        VerifyCommand::Tworow { fvector, diagram } => {
            let f = parse_fvector(fvector)?;
            let d = read_diagram(diagram)?;
            let ok = check_tworow_unique_min(&f, &d, p)?;
            vec![Check {
                name: "two-row unique minimum".into(),
                pass: ok,
                detail: format!("f = {f}"),
            }]
        }
        VerifyCommand::Coning { samples, seed, max_n } => {
            let chars = if p == 101 { vec![2, 101] } else { vec![p] };
            verify::coning(*samples, *seed, *max_n, &chars)?
        }
    };
    report_checks(out, &checks, format)
}
