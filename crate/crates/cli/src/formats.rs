//! Input documents and the line-oriented text artifacts.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};
use smallcover_core::charfun::{classify_image, validate_star};
use smallcover_core::links::{Crossing, LinkDiagram};
use smallcover_core::{
    CharacteristicFunction, Cycle, Gf2Vec3, IntersectionGraph, InvolutionAnalysis, LinearChordDiagram,
    SimplePolytope3,
};

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeDoc {
    facets: Vec<Vec<usize>>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parse_error(path: &Path, message: impl ToString) -> CliError {
    CliError::Parse { path: path.to_path_buf(), message: message.to_string() }
}

pub fn parse_polytope(text: &str, path: &Path) -> Result<SimplePolytope3, CliError> {
    let doc: PolytopeDoc = serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
    Ok(SimplePolytope3::from_facets(doc.facets)?)
}

pub fn load_polytope(path: &Path) -> Result<SimplePolytope3, CliError> {
    parse_polytope(&read(path)?, path)
}

/// Raw facet vectors; the basis condition is checked separately.
pub fn parse_lambda_values(text: &str, path: &Path) -> Result<Vec<Gf2Vec3>, CliError> {
    let raw: Vec<u64> = serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
    raw.into_iter()
        .map(|b| {
            u8::try_from(b)
                .ok()
                .and_then(Gf2Vec3::from_bits)
                .ok_or_else(|| parse_error(path, format!("{b} is not a 3-bit vector (0..=7)")))
        })
        .collect()
}

pub fn load_lambda(path: &Path, p: &SimplePolytope3) -> Result<CharacteristicFunction, CliError> {
    let values = parse_lambda_values(&read(path)?, path)?;
    Ok(validate_star(p, values)?)
}

/// Polytope document with one facet per line, in input order.
pub fn polytope_doc(p: &SimplePolytope3) -> String {
    let mut out = String::from("{\n  \"facets\": [\n");
    let n = p.facet_count();
    for (i, f) in p.facets().iter().enumerate() {
        let vs: Vec<String> = f.iter().map(usize::to_string).collect();
        let comma = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    [{}]{comma}", vs.join(", "));
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn lambda_doc(l: &CharacteristicFunction) -> String {
    format!("[{}]\n", join(l.values().iter().map(|v| v.bits()), ", "))
}

/// SHA-256 of the polytope document, hex encoded.
pub fn polytope_hash(p: &SimplePolytope3) -> String {
    let digest = Sha256::digest(polytope_doc(p).as_bytes());
    digest.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn cycle_text(c: &Cycle) -> String {
    join(c.vertices(), "-")
}

pub fn polytope_header(p: &SimplePolytope3) -> String {
    format!(
        "polytope sha256={} facets={} vertices={} edges={}\n",
        polytope_hash(p),
        p.facet_count(),
        p.vertex_count(),
        p.edge_count()
    )
}

/// The per-class block of an analysis report.
pub fn analysis_report(p: &SimplePolytope3, l: &CharacteristicFunction, a: &InvolutionAnalysis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "class {} lambda=[{}]", l.class_id(p), join(l.values().iter().map(|v| v.bits()), ","));
    let _ = writeln!(out, "xi={}", a.xi.bits());
    if let Ok(image) = classify_image(l) {
        let _ = writeln!(out, "image={image}");
    }
    let _ = writeln!(out, "subgroup={}", join(a.subgroup.involutions(), ","));
    for r in &a.reports {
        let cycles = join(r.two_factor.cycles().iter().map(cycle_text), "|");
        let _ = writeln!(
            out,
            "g={} name={} k={} quotient={} cycles={}",
            r.involution,
            r.name(),
            r.k(),
            r.quotient,
            cycles
        );
    }
    let _ = writeln!(out, "hamiltonian={}", a.is_hamiltonian());
    let _ = writeln!(out, "rational_homology_sphere={}", a.is_rational_homology_sphere());
    out
}

/// Chord diagram and the absolute linking matrix it determines.
pub fn chord_text(d: &LinearChordDiagram, g: &IntersectionGraph, involution: Gf2Vec3) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "involution {involution}");
    let _ = writeln!(out, "cycle {}", cycle_text(d.cycle()));
    let _ = writeln!(out, "cut {} start {}", d.cut_edge(), d.order()[0]);
    let _ = writeln!(out, "order {}", join(d.order(), " "));
    let _ = writeln!(out, "chords {}", d.len());
    for (i, c) in d.chords().iter().enumerate() {
        let _ = writeln!(out, "chord {} {} {} edge={} side={}", i + 1, c.left, c.right, c.edge, c.side);
    }
    let _ = writeln!(out, "graph edges {}", g.edges().len());
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "interleave {} {}", a + 1, b + 1);
    }
    out
}

/// Intersection graph in DOT; side-A chords are boxes, side-B ellipses.
pub fn graph_dot(g: &IntersectionGraph) -> String {
    let mut out = String::from("graph intersection {\n");
    for c in 0..g.vertex_count() {
        let shape = match g.side(c) {
            smallcover_core::Side::A => "box",
            smallcover_core::Side::B => "ellipse",
        };
        let _ = writeln!(out, "  c{} [label=\"{}\", shape={shape}];", c + 1, g.chord_edge(c));
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  c{} -- c{};", a + 1, b + 1);
    }
    out.push_str("}\n");
    out
}

fn matrix_text(m: &[Vec<i32>]) -> String {
    let mut out = String::new();
    for row in m {
        let _ = writeln!(out, "{}", join(row, " "));
    }
    out
}

pub fn pd_text(link: &LinkDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "components {}", link.components.len());
    for (i, c) in link.components.iter().enumerate() {
        let last = c.first_arc + c.arc_count.saturating_sub(1);
        let arcs = if c.arc_count == 0 { "none".to_string() } else { format!("{}..{}", c.first_arc, last) };
        let _ = writeln!(out, "component {} chord={} arcs={arcs}", i + 1, c.chord + 1);
    }
    let _ = writeln!(out, "crossings {}", link.crossing_count());
    for Crossing { pd: [a, b, c, d], .. } in &link.crossings {
        let _ = writeln!(out, "X {a} {b} {c} {d}");
    }
    out.push_str("linking matrix\n");
    out.push_str(&matrix_text(&link.linking_matrix));
    out
}

pub fn gauss_text(link: &LinkDiagram) -> String {
    let mut out = String::new();
    for (i, code) in link.gauss_codes.iter().enumerate() {
        let mut line = format!("component {}:", i + 1);
        for e in code {
            let _ = write!(line, " {e}");
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallcover_core::catalog;

    #[test]
    fn polytope_doc_round_trips() {
        let p = catalog::cube();
        let text = polytope_doc(&p);
        let q = parse_polytope(&text, Path::new("cube.json")).unwrap();
        assert_eq!(p.facets(), q.facets());
        assert_eq!(polytope_hash(&p), polytope_hash(&q));
        assert_eq!(polytope_hash(&p).len(), 64);
    }

    #[test]
    fn lambda_values_reject_out_of_range() {
        let path = Path::new("l.json");
        assert_eq!(parse_lambda_values("[4, 2, 1, 7]", path).unwrap().len(), 4);
        assert!(matches!(parse_lambda_values("[4, 8]", path), Err(CliError::Parse { .. })));
        assert!(matches!(parse_lambda_values("[4, -1]", path), Err(CliError::Parse { .. })));
        assert!(matches!(parse_lambda_values("{}", path), Err(CliError::Parse { .. })));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let r = parse_polytope(r#"{"facets": [[0,1,2]], "extra": 1}"#, Path::new("p.json"));
        assert!(matches!(r, Err(CliError::Parse { .. })));
    }
}
