use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::LinkError;
use crate::charfun::{cycle_sides, Side};
use crate::polytope::{Cycle, Edge, SimplePolytope3};

/// An edge of the polytope off the Hamiltonian cycle, seen as a chord
/// between two positions of the Hamiltonian path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Chord {
    /// 1-based path positions, `left < right`.
    pub left: usize,
    pub right: usize,
    pub edge: Edge,
    pub side: Side,
}

impl Chord {
    /// Exactly one endpoint of `other` lies strictly between the endpoints of `self`.
    pub fn interleaves(&self, other: &Chord) -> bool {
        let (a, b) = (self.left, self.right);
        let (c, d) = (other.left, other.right);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

/// Positions `1..=2l` along a Hamiltonian path plus the matching formed by
/// the remaining edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChordDiagram {
    cycle: Cycle,
    cut_edge: Edge,
    order: Vec<usize>,
    position: Vec<usize>,
    chords: Vec<Chord>,
}

impl LinearChordDiagram {
    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn cut_edge(&self) -> Edge {
        self.cut_edge
    }

    /// `order()[i]` is the vertex at position `i + 1`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 1-based position of a vertex.
    pub fn position(&self, vertex: usize) -> usize {
        self.position[vertex]
    }

    /// Chords sorted by left endpoint.
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }
}

/// The chord diagram of `cycle` cut open at `cut_edge`, read from the
/// endpoint of the cut edge with the smaller vertex id.
pub fn chord_diagram(
    p: &SimplePolytope3,
    cycle: &Cycle,
    cut_edge: Edge,
) -> Result<LinearChordDiagram, LinkError> {
    chord_diagram_from(p, cycle, cut_edge, cut_edge.low())
}

/// As [`chord_diagram`], reading the path from `start`, which must be an
/// endpoint of `cut_edge`.
pub fn chord_diagram_from(
    p: &SimplePolytope3,
    cycle: &Cycle,
    cut_edge: Edge,
    start: usize,
) -> Result<LinearChordDiagram, LinkError> {
    let sides = cycle_sides(p, cycle)?;
    if !cycle.contains_edge(cut_edge) || !cut_edge.contains(start) {
        return Err(LinkError::EdgeNotInCycle(cut_edge));
    }
    let vs = cycle.vertices();
    let n = vs.len();
    let at = vs.iter().position(|&v| v == start).expect("Hamiltonian cycle visits every vertex");
    let forward = vs[(at + 1) % n] != cut_edge.other(start);
    let order: Vec<usize> = (0..n)
        .map(|k| if forward { vs[(at + k) % n] } else { vs[(at + n - k) % n] })
        .collect();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i + 1;
    }

    let mut chords: Vec<Chord> = p
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &e)| !cycle.contains_edge(e))
        .map(|(id, &edge)| {
            let [f, g] = p.edge_facets(id);
            debug_assert_eq!(sides[f], sides[g]);
            let (x, y) = (position[edge.low()], position[edge.high()]);
            Chord { left: x.min(y), right: x.max(y), edge, side: sides[f] }
        })
        .collect();
    chords.sort_unstable_by_key(|c| c.left);

    Ok(LinearChordDiagram { cycle: cycle.clone(), cut_edge, order, position, chords })
}

/// Chords as vertices, interleaving pairs as edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraph {
    chord_edges: Vec<Edge>,
    sides: Vec<Side>,
    edges: Vec<(usize, usize)>,
}

impl IntersectionGraph {
    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }

    /// Pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn side(&self, chord: usize) -> Side {
        self.sides[chord]
    }

    /// The polytope edge behind each chord.
    pub fn chord_edge(&self, chord: usize) -> Edge {
        self.chord_edges[chord]
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// The edge set in terms of polytope edges; independent of where the
    /// cycle was cut and which way it was read.
    pub fn labeled_edges(&self) -> BTreeSet<(Edge, Edge)> {
        self.edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.chord_edges[a], self.chord_edges[b]);
                (x.min(y), x.max(y))
            })
            .collect()
    }
}

pub fn intersection_graph(diagram: &LinearChordDiagram) -> Result<IntersectionGraph, LinkError> {
    let chords = diagram.chords();
    let mut edges = Vec::new();
    for (a, ca) in chords.iter().enumerate() {
        for (b, cb) in chords.iter().enumerate().skip(a + 1) {
            if ca.interleaves(cb) {
                if ca.side == cb.side {
                    return Err(LinkError::BipartitenessBreach { a, b });
                }
                edges.push((a, b));
            }
        }
    }
    Ok(IntersectionGraph {
        chord_edges: chords.iter().map(|c| c.edge).collect(),
        sides: chords.iter().map(|c| c.side).collect(),
        edges,
    })
}

/// Adjacency matrix of the intersection graph: the absolute linking numbers.
pub fn linking_matrix_from_graph(graph: &IntersectionGraph) -> Vec<Vec<i32>> {
    let n = graph.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for &(a, b) in graph.edges() {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    m
}
