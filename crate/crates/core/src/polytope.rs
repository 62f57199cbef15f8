//! Combinatorial simple 3-polytopes given by their facet cycles.
//!
//! A polytope is accepted when every facet is a simple cycle of length at
//! least three, every edge lies on exactly two facets, every vertex lies on
//! exactly three facets and has three neighbours, the boundary can be
//! oriented coherently, `V - E + F = 2`, and the 1-skeleton is connected.
//! Three-connectivity of the skeleton (and hence realizability as a convex
//! polytope) is *not* checked; every genuine simple polytope passes, but so
//! do a few non-polytopal cubic maps on the sphere.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// An undirected edge of the 1-skeleton, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn low(self) -> usize {
        self.0
    }

    pub fn high(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FacetDefect {
    TooShort,
    RepeatedVertex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeDefect {
    /// The edge lies on this many facets instead of two.
    FacetCount(usize),
    /// The facets cannot be oriented so that this edge is traversed in
    /// opposite directions by its two facets.
    Incoherent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeError {
    Empty,
    MalformedFacet { facet: usize, defect: FacetDefect },
    BadEdge { edge: Edge, defect: EdgeDefect },
    NonSimple { vertex: usize, facets: usize, degree: usize },
    EulerViolation { vertices: usize, edges: usize, facets: usize },
    DisconnectedSkeleton,
    UnknownVertex(usize),
}

impl fmt::Display for PolytopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "polytope has no facets"),
            Self::MalformedFacet { facet, defect: FacetDefect::TooShort } => {
                write!(f, "malformed facet {facet}: fewer than 3 vertices")
            }
            Self::MalformedFacet { facet, defect: FacetDefect::RepeatedVertex(v) } => {
                write!(f, "malformed facet {facet}: vertex {v} repeated")
            }
            Self::BadEdge { edge, defect: EdgeDefect::FacetCount(n) } => {
                write!(f, "bad edge {edge}: lies on {n} facets instead of 2")
            }
            Self::BadEdge { edge, defect: EdgeDefect::Incoherent } => {
                write!(f, "bad edge {edge}: facets cannot be oriented coherently")
            }
            Self::NonSimple { vertex, facets, degree } => write!(
                f,
                "non-simple vertex {vertex}: lies on {facets} facets with degree {degree}"
            ),
            Self::EulerViolation { vertices, edges, facets } => write!(
                f,
                "euler relation violated: V - E + F = {vertices} - {edges} + {facets} != 2"
            ),
            Self::DisconnectedSkeleton => write!(f, "1-skeleton is disconnected"),
            Self::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
        }
    }
}

impl core::error::Error for PolytopeError {}

/// A validated simple 3-polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePolytope3 {
    facets: Vec<Vec<usize>>,
    vertex_count: usize,
    edges: Vec<Edge>,
    edge_index: BTreeMap<Edge, usize>,
    edge_facets: Vec<[usize; 2]>,
    vertex_facets: Vec<[usize; 3]>,
    neighbors: Vec<[usize; 3]>,
    /// Facets whose input cycle runs against the coherent orientation fixed
    /// by facet 0.
    reversed: Vec<bool>,
}

impl SimplePolytope3 {
    /// Validates a list of facet cycles. Vertex ids are `0..=max`.
    pub fn from_facets(facets: Vec<Vec<usize>>) -> Result<Self, PolytopeError> {
        if facets.is_empty() {
            return Err(PolytopeError::Empty);
        }
        for (i, facet) in facets.iter().enumerate() {
            if facet.len() < 3 {
                return Err(PolytopeError::MalformedFacet { facet: i, defect: FacetDefect::TooShort });
            }
            let mut seen = facet.clone();
            seen.sort_unstable();
            if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
                return Err(PolytopeError::MalformedFacet {
                    facet: i,
                    defect: FacetDefect::RepeatedVertex(w[0]),
                });
            }
        }
        let vertex_count = facets.iter().flatten().copied().max().map_or(0, |m| m + 1);

        // (facet, traversed from low to high endpoint)
        let mut occurrences: BTreeMap<Edge, Vec<(usize, bool)>> = BTreeMap::new();
        for (i, facet) in facets.iter().enumerate() {
            for (a, b) in cyclic_pairs(facet) {
                occurrences.entry(Edge::new(a, b)).or_default().push((i, a < b));
            }
        }
        for (&edge, occ) in &occurrences {
            if occ.len() != 2 {
                return Err(PolytopeError::BadEdge { edge, defect: EdgeDefect::FacetCount(occ.len()) });
            }
        }

        let mut facets_at: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        for (i, facet) in facets.iter().enumerate() {
            for &v in facet {
                facets_at[v].push(i);
            }
        }
        let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        for edge in occurrences.keys() {
            adjacent[edge.0].push(edge.1);
            adjacent[edge.1].push(edge.0);
        }
        for v in 0..vertex_count {
            if facets_at[v].len() != 3 || adjacent[v].len() != 3 {
                return Err(PolytopeError::NonSimple {
                    vertex: v,
                    facets: facets_at[v].len(),
                    degree: adjacent[v].len(),
                });
            }
        }

        let edge_count = occurrences.len();
        if vertex_count + facets.len() != edge_count + 2 {
            return Err(PolytopeError::EulerViolation {
                vertices: vertex_count,
                edges: edge_count,
                facets: facets.len(),
            });
        }

        let mut seen = vec![false; vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacent[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(PolytopeError::DisconnectedSkeleton);
        }

        // Coherent orientation: facets sharing an edge must traverse it in
        // opposite directions once their flip flags are applied.
        let mut facet_edges: Vec<Vec<(usize, Edge, bool)>> = vec![Vec::new(); facets.len()];
        for (&edge, occ) in &occurrences {
            let [(f, df), (g, dg)] = [occ[0], occ[1]];
            facet_edges[f].push((g, edge, df ^ dg));
            facet_edges[g].push((f, edge, df ^ dg));
        }
        let mut reversed: Vec<Option<bool>> = vec![None; facets.len()];
        for root in 0..facets.len() {
            if reversed[root].is_some() {
                continue;
            }
            reversed[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(f) = queue.pop_front() {
                let rf = reversed[f].unwrap_or(false);
                for &(g, edge, differ) in &facet_edges[f] {
                    // Same raw direction means exactly one of the two must flip.
                    let want = rf ^ !differ;
                    match reversed[g] {
                        None => {
                            reversed[g] = Some(want);
                            queue.push_back(g);
                        }
                        Some(rg) if rg != want => {
                            return Err(PolytopeError::BadEdge { edge, defect: EdgeDefect::Incoherent });
                        }
                        Some(_) => {}
                    }
                }
            }
        }

        let edges: Vec<Edge> = occurrences.keys().copied().collect();
        let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let edge_facets = occurrences.values().map(|occ| sorted2(occ[0].0, occ[1].0)).collect();
        let vertex_facets = facets_at.iter().map(|fs| sorted3([fs[0], fs[1], fs[2]])).collect();
        let neighbors = adjacent.iter().map(|ns| sorted3([ns[0], ns[1], ns[2]])).collect();

        Ok(Self {
            facets,
            vertex_count,
            edges,
            edge_index,
            edge_facets,
            vertex_facets,
            neighbors,
            reversed: reversed.into_iter().map(|r| r.unwrap_or(false)).collect(),
        })
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Facet cycles exactly as given on input.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> &[usize] {
        &self.facets[i]
    }

    /// Facet `i` traversed in the coherent boundary orientation fixed by facet 0.
    pub fn oriented_facet(&self, i: usize) -> Vec<usize> {
        let mut cycle = self.facets[i].clone();
        if self.reversed[i] {
            cycle.reverse();
        }
        cycle
    }

    /// All edges in increasing order; edge ids index into this slice.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&Edge::new(a, b)).copied()
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// The two facets containing edge `id`, in increasing order.
    pub fn edge_facets(&self, id: usize) -> [usize; 2] {
        self.edge_facets[id]
    }

    /// The three facets containing vertex `v`, in increasing order.
    pub fn vertex_facets(&self, v: usize) -> [usize; 3] {
        self.vertex_facets[v]
    }

    /// The three neighbours of `v`, in increasing order.
    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.neighbors[v]
    }

    /// Whether `cycle` visits every vertex exactly once along skeleton edges.
    pub fn is_hamiltonian_cycle(&self, cycle: &Cycle) -> bool {
        let vs = cycle.vertices();
        if vs.len() != self.vertex_count {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        for &v in vs {
            if v >= self.vertex_count || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        cycle.edges().all(|e| self.edge_index.contains_key(&e))
    }

    /// Cuts off vertex `v`, replacing it with a triangular facet.
    ///
    /// Let `F` be the first facet (in input order) containing `v`, with
    /// `s` and `p` the successor and predecessor of `v` in its input cycle and
    /// `t` the third neighbour. Before renumbering, the new vertices on the
    /// edges towards `s`, `p`, `t` are `V`, `V + 1`, `V + 2`, and the new
    /// triangle `[V, V + 1, V + 2]` is appended as the last facet. Vertex `v`
    /// then disappears and every id above it shifts down by one, so the new
    /// vertices end up as `V - 1`, `V`, `V + 1`.
    pub fn truncate_vertex(&self, v: usize) -> Result<Self, PolytopeError> {
        if v >= self.vertex_count {
            return Err(PolytopeError::UnknownVertex(v));
        }
        let n = self.vertex_count;
        let first = self.vertex_facets[v][0];
        let succ = cyclic_neighbor(&self.facets[first], v, 1);
        let pred = cyclic_neighbor(&self.facets[first], v, -1);
        let cut_point = |w: usize| -> usize {
            if w == succ {
                n
            } else if w == pred {
                n + 1
            } else {
                n + 2
            }
        };

        let mut facets: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|facet| {
                let mut out = Vec::with_capacity(facet.len() + 1);
                let len = facet.len();
                for (i, &w) in facet.iter().enumerate() {
                    if w == v {
                        out.push(cut_point(facet[(i + len - 1) % len]));
                        out.push(cut_point(facet[(i + 1) % len]));
                    } else {
                        out.push(w);
                    }
                }
                out
            })
            .collect();
        facets.push(vec![n, n + 1, n + 2]);

        for facet in &mut facets {
            for w in facet.iter_mut() {
                if *w > v {
                    *w -= 1;
                }
            }
        }
        Self::from_facets(facets)
    }

    /// Every Hamiltonian cycle of the 1-skeleton, each reported once.
    ///
    /// A cycle is written starting at vertex 0 and heading to the smaller of
    /// its two neighbours on the cycle. The list is in lexicographic order.
    pub fn hamiltonian_cycles(&self) -> Vec<Cycle> {
        let n = self.vertex_count;
        let mut out = Vec::new();
        if n < 3 {
            return out;
        }
        let mut search = HamiltonSearch {
            polytope: self,
            path: Vec::with_capacity(n),
            on_path: vec![false; n],
            out: &mut out,
        };
        search.path.push(0);
        search.on_path[0] = true;
        search.extend();
        out
    }
}

struct HamiltonSearch<'a> {
    polytope: &'a SimplePolytope3,
    path: Vec<usize>,
    on_path: Vec<bool>,
    out: &'a mut Vec<Cycle>,
}

impl HamiltonSearch<'_> {
    fn extend(&mut self) {
        let n = self.polytope.vertex_count;
        let last = *self.path.last().expect("path starts at vertex 0");
        if self.path.len() == n {
            if self.polytope.neighbors[last].contains(&0) && self.path[1] < last {
                self.out.push(Cycle::new(self.path.clone()));
            }
            return;
        }
        if self.dead_end(last) {
            return;
        }
        for w in self.polytope.neighbors[last] {
            if self.on_path[w] {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            self.extend();
            self.path.pop();
            self.on_path[w] = false;
        }
    }

    /// True when some unvisited vertex can no longer be threaded through, or
    /// the start can no longer be re-entered.
    fn dead_end(&self, last: usize) -> bool {
        let p = self.polytope;
        if self.path.len() > 1 {
            let can_close = p.neighbors[0].iter().any(|&w| !self.on_path[w] || w == last);
            if !can_close {
                return true;
            }
        }
        (0..p.vertex_count).filter(|&u| !self.on_path[u]).any(|u| {
            let free = p.neighbors[u]
                .iter()
                .filter(|&&w| !self.on_path[w] || w == last || w == 0)
                .count();
            free < 2
        })
    }
}

/// A closed walk through distinct vertices; the closing edge is implicit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges in traversal order, ending with the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        cyclic_pairs(&self.vertices).map(|(a, b)| Edge::new(a, b))
    }

    pub fn contains_edge(&self, edge: Edge) -> bool {
        self.edges().any(|e| e == edge)
    }

    /// The same cycle rotated to start at its minimum vertex and reflected so
    /// that the second vertex is the smaller neighbour of the first.
    pub fn canonical(&self) -> Self {
        let n = self.vertices.len();
        if n < 3 {
            return self.clone();
        }
        let (start, _) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .expect("nonempty");
        let fwd = self.vertices[(start + 1) % n];
        let back = self.vertices[(start + n - 1) % n];
        let vertices = if fwd < back {
            (0..n).map(|k| self.vertices[(start + k) % n]).collect()
        } else {
            (0..n).map(|k| self.vertices[(start + n - k) % n]).collect()
        };
        Self { vertices }
    }
}

pub(crate) fn cyclic_pairs(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = cycle.len();
    (0..n).map(move |i| (cycle[i], cycle[(i + 1) % n]))
}

fn cyclic_neighbor(cycle: &[usize], v: usize, step: isize) -> usize {
    let n = cycle.len() as isize;
    let i = cycle.iter().position(|&w| w == v).expect("vertex on facet") as isize;
    cycle[(i + step).rem_euclid(n) as usize]
}

fn sorted2(a: usize, b: usize) -> [usize; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

fn sorted3(mut xs: [usize; 3]) -> [usize; 3] {
    xs.sort_unstable();
    xs
}
