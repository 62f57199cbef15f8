//! Command implementations. Each returns the artifacts it produced; the
//! binary decides whether they go to stdout or into an output directory.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use smallcover_core::charfun::{coloring_from_hamiltonian, enumerate_characteristic_functions, orientability};
use smallcover_core::covers::analyze_involutions;
use smallcover_core::links::{chainmail_diagram, chord_diagram, intersection_graph};
use smallcover_core::{CharacteristicFunction, Cycle, Edge, Gf2Vec3, SimplePolytope3};

use crate::error::CliError;
use crate::formats;

#[derive(Debug, Parser)]
#[command(name = "smallcover", version, about = "Involution quotients and branch links of 3-dimensional small covers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaSource {
    File(PathBuf),
    Enumerate,
}

fn parse_lambda_source(s: &str) -> Result<LambdaSource, String> {
    Ok(if s == "enumerate" { LambdaSource::Enumerate } else { LambdaSource::File(PathBuf::from(s)) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Report,
    Dot,
    Pd,
    Gauss,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a polytope and, optionally, a characteristic function on it.
    Validate {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long)]
        lambda: Option<PathBuf>,
    },
    /// Quotient type of every involution of the orientation subgroup.
    Analyze {
        #[arg(long)]
        polytope: PathBuf,
        /// A λ document, or `enumerate` for every orientable class.
        #[arg(long, value_parser = parse_lambda_source)]
        lambda: LambdaSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List characteristic functions up to basis change.
    Enumerate {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long)]
        orientable: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chord diagram, intersection graph and chainmail link of a Hamiltonian involution.
    Link {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long, value_parser = parse_lambda_source)]
        lambda: LambdaSource,
        /// Involution as an integer 1..=7; defaults to the first Hamiltonian one.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        g: Option<u8>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::All)]
        format: Format,
    },
    /// Cut off vertices one after another.
    Truncate {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(required = true)]
        vertices: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The characteristic function induced by a Hamiltonian cycle.
    Ham2lambda {
        #[arg(long)]
        polytope: PathBuf,
        /// Comma-separated vertices in cyclic order.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Command {
    pub fn out_dir(&self) -> Option<&Path> {
        match self {
            Self::Validate { .. } => None,
            Self::Analyze { out, .. }
            | Self::Enumerate { out, .. }
            | Self::Link { out, .. }
            | Self::Truncate { out, .. }
            | Self::Ham2lambda { out, .. } => out.as_deref(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub name: String,
    pub contents: String,
}

impl Artifact {
    fn new(name: impl Into<String>, contents: String) -> Self {
        Self { name: name.into(), contents }
    }
}

pub fn run(command: &Command) -> Result<Vec<Artifact>, CliError> {
    match command {
        Command::Validate { polytope, lambda } => validate(polytope, lambda.as_deref()),
        Command::Analyze { polytope, lambda, .. } => analyze(polytope, lambda),
        Command::Enumerate { polytope, orientable, .. } => enumerate(polytope, *orientable),
        Command::Link { polytope, lambda, g, format, .. } => link(polytope, lambda, *g, *format),
        Command::Truncate { polytope, vertices, .. } => truncate(polytope, vertices),
        Command::Ham2lambda { polytope, cycle, .. } => ham2lambda(polytope, cycle),
    }
}

fn validate(polytope: &Path, lambda: Option<&Path>) -> Result<Vec<Artifact>, CliError> {
    let p = formats::load_polytope(polytope)?;
    let mut report = String::from("valid\n");
    report.push_str(&formats::polytope_header(&p));
    if let Some(path) = lambda {
        let l = formats::load_lambda(path, &p)?;
        let orientable = orientability(&l).is_some();
        report.push_str(&format!("lambda class={} orientable={orientable}\n", l.class_id(&p)));
    }
    Ok(vec![Artifact::new("validate.txt", report)])
}

fn lambdas(p: &SimplePolytope3, source: &LambdaSource) -> Result<Vec<CharacteristicFunction>, CliError> {
    match source {
        LambdaSource::File(path) => Ok(vec![formats::load_lambda(path, p)?]),
        LambdaSource::Enumerate => Ok(enumerate_characteristic_functions(p, true)),
    }
}

fn analyze(polytope: &Path, source: &LambdaSource) -> Result<Vec<Artifact>, CliError> {
    let p = formats::load_polytope(polytope)?;
    let mut report = formats::polytope_header(&p);
    for l in lambdas(&p, source)? {
        let a = analyze_involutions(&p, &l)?;
        report.push('\n');
        report.push_str(&formats::analysis_report(&p, &l, &a));
    }
    Ok(vec![Artifact::new("report.txt", report)])
}

fn enumerate(polytope: &Path, orientable_only: bool) -> Result<Vec<Artifact>, CliError> {
    let p = formats::load_polytope(polytope)?;
    let classes = enumerate_characteristic_functions(&p, orientable_only);
    let mut listing = formats::polytope_header(&p);
    listing.push_str(&format!("classes {} orientable_only={orientable_only}\n", classes.len()));
    let mut artifacts = Vec::with_capacity(classes.len() + 1);
    for l in &classes {
        let id = l.class_id(&p);
        let values: Vec<String> = l.values().iter().map(|v| v.bits().to_string()).collect();
        let line = match analyze_involutions(&p, l) {
            Ok(a) => {
                let ks: Vec<String> = a.reports.iter().map(|r| r.k().to_string()).collect();
                format!(
                    "class {id} lambda=[{}] orientable=true xi={} k={} hamiltonian={}\n",
                    values.join(","),
                    a.xi.bits(),
                    ks.join(","),
                    a.is_hamiltonian()
                )
            }
            Err(_) => format!("class {id} lambda=[{}] orientable=false\n", values.join(",")),
        };
        listing.push_str(&line);
        artifacts.push(Artifact::new(format!("lambda-{id}.json"), formats::lambda_doc(l)));
    }
    artifacts.insert(0, Artifact::new("classes.txt", listing));
    Ok(artifacts)
}

/// The canonical cut: the cycle edge from its first vertex back to its last.
fn canonical_cut(c: &Cycle) -> Edge {
    let vs = c.vertices();
    Edge::new(vs[0], vs[vs.len() - 1])
}

fn link(polytope: &Path, source: &LambdaSource, g: Option<u8>, format: Format) -> Result<Vec<Artifact>, CliError> {
    let p = formats::load_polytope(polytope)?;
    let wanted = g.map(|b| Gf2Vec3::from_bits(b).expect("clap restricts g to 1..=7"));
    let candidates = lambdas(&p, source)?;
    let single = candidates.len() == 1 && matches!(source, LambdaSource::File(_));

    let mut chosen = None;
    for l in &candidates {
        let a = analyze_involutions(&p, l)?;
        let report = match wanted {
            Some(g) => match a.report(g) {
                Some(r) if r.k() == 1 => r.clone(),
                Some(r) if single => return Err(CliError::InvolutionNotHamiltonian { g, k: r.k() }),
                None if single => return Err(CliError::NotInSubgroup(g)),
                _ => continue,
            },
            None => match a.first_hamiltonian() {
                Some(r) => r.clone(),
                None => continue,
            },
        };
        chosen = Some(report);
        break;
    }
    let report = chosen.ok_or(CliError::NotHamiltonian)?;
    let cycle = report.hamiltonian_cycle().expect("k = 1").clone();
    let d = chord_diagram(&p, &cycle, canonical_cut(&cycle))?;
    let graph = intersection_graph(&d)?;
    let diagram = chainmail_diagram(&graph, &d)?;

    let mut out = Vec::new();
    if matches!(format, Format::Report | Format::All) {
        out.push(Artifact::new("chords.txt", formats::chord_text(&d, &graph, report.involution)));
    }
    if matches!(format, Format::Dot | Format::All) {
        out.push(Artifact::new("graph.dot", formats::graph_dot(&graph)));
    }
    if matches!(format, Format::Pd | Format::All) {
        out.push(Artifact::new("link.pd", formats::pd_text(&diagram)));
    }
    if matches!(format, Format::Gauss | Format::All) {
        out.push(Artifact::new("link.gauss", formats::gauss_text(&diagram)));
    }
    Ok(out)
}

fn truncate(polytope: &Path, vertices: &[usize]) -> Result<Vec<Artifact>, CliError> {
    let mut p = formats::load_polytope(polytope)?;
    for &v in vertices {
        p = p.truncate_vertex(v)?;
    }
    Ok(vec![Artifact::new("polytope.json", formats::polytope_doc(&p))])
}

fn ham2lambda(polytope: &Path, cycle: &[usize]) -> Result<Vec<Artifact>, CliError> {
    let p = formats::load_polytope(polytope)?;
    let l = coloring_from_hamiltonian(&p, &Cycle::new(cycle.to_vec()))?;
    Ok(vec![Artifact::new("lambda.json", formats::lambda_doc(&l))])
}
