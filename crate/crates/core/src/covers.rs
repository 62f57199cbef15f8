//! Involution quotients of orientable small covers.
//!
//! Each edge `F_i ∩ F_j` is labelled with `λ_i + λ_j`, an involution of the
//! orientation-preserving subgroup `G`. For a fixed involution `g`, the edges
//! not labelled `g` form a 2-factor of the skeleton; its `k` cycles are the
//! components of a trivial branch link and the quotient by `g` is
//! `#_{k-1} S²×S¹` (the 3-sphere when `k = 1`).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::charfun::{
    orientability, orientability_witness, orientation_subgroup, CharFunError, CharacteristicFunction,
    OrientationSubgroup,
};
use crate::gf2::{Gf2Functional, Gf2Vec3};
use crate::polytope::{Cycle, SimplePolytope3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverError {
    NotOrientable { witness: Option<[usize; 3]> },
    NotInSubgroup(Gf2Vec3),
    /// Labels at this vertex are not the three involutions of `G`.
    InternalInvariantBreach { vertex: usize },
    CharFun(CharFunError),
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotOrientable { witness: Some([i, j, k]) } => write!(
                f,
                "not orientable: facets {i} and {j} sum to facet {k}, so no functional is 1 on all three"
            ),
            Self::NotOrientable { witness: None } => write!(f, "not orientable"),
            Self::NotInSubgroup(g) => write!(f, "{g} is not an involution of the orientation subgroup"),
            Self::InternalInvariantBreach { vertex } => {
                write!(f, "edge labels at vertex {vertex} are not the three involutions")
            }
            Self::CharFun(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for CoverError {}

impl From<CharFunError> for CoverError {
    fn from(e: CharFunError) -> Self {
        Self::CharFun(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: Vec<Gf2Vec3>,
    subgroup: OrientationSubgroup,
}

impl EdgeLabeling {
    /// Labels indexed by edge id.
    pub fn labels(&self) -> &[Gf2Vec3] {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> Gf2Vec3 {
        self.labels[edge]
    }

    pub fn subgroup(&self) -> &OrientationSubgroup {
        &self.subgroup
    }
}

pub fn edge_labels(
    p: &SimplePolytope3,
    lambda: &CharacteristicFunction,
    subgroup: &OrientationSubgroup,
) -> Result<EdgeLabeling, CoverError> {
    let labels: Vec<Gf2Vec3> = (0..p.edge_count())
        .map(|e| {
            let [f, g] = p.edge_facets(e);
            lambda.value(f) + lambda.value(g)
        })
        .collect();
    let expected = subgroup.involutions();
    for v in 0..p.vertex_count() {
        let mut at_v: Vec<Gf2Vec3> = p
            .neighbors(v)
            .into_iter()
            .map(|w| labels[p.edge_id(v, w).expect("neighbours share an edge")])
            .collect();
        at_v.sort_unstable();
        if at_v != expected {
            return Err(CoverError::InternalInvariantBreach { vertex: v });
        }
    }
    Ok(EdgeLabeling { labels, subgroup: *subgroup })
}

/// The cycles of edges not labelled by a given involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    involution: Gf2Vec3,
    cycles: Vec<Cycle>,
}

impl TwoFactor {
    pub fn involution(&self) -> Gf2Vec3 {
        self.involution
    }

    /// Cycles ordered by their minimum vertex, each starting there and
    /// heading towards its smaller neighbour.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn k(&self) -> usize {
        self.cycles.len()
    }
}

pub fn two_factor(
    p: &SimplePolytope3,
    labeling: &EdgeLabeling,
    g: Gf2Vec3,
) -> Result<TwoFactor, CoverError> {
    if g.is_zero() || !labeling.subgroup.contains(g) {
        return Err(CoverError::NotInSubgroup(g));
    }
    let kept = |a: usize, b: usize| labeling.labels[p.edge_id(a, b).expect("adjacent")] != g;
    let mut visited = vec![false; p.vertex_count()];
    let mut cycles = Vec::new();
    for start in 0..p.vertex_count() {
        if visited[start] {
            continue;
        }
        let mut next: Vec<usize> = p.neighbors(start).into_iter().filter(|&w| kept(start, w)).collect();
        if next.len() != 2 {
            return Err(CoverError::InternalInvariantBreach { vertex: start });
        }
        next.sort_unstable();
        let mut cycle = vec![start];
        visited[start] = true;
        let (mut prev, mut cur) = (start, next[0]);
        while cur != start {
            if visited[cur] {
                return Err(CoverError::InternalInvariantBreach { vertex: cur });
            }
            visited[cur] = true;
            cycle.push(cur);
            let step = p
                .neighbors(cur)
                .into_iter()
                .find(|&w| w != prev && kept(cur, w))
                .ok_or(CoverError::InternalInvariantBreach { vertex: cur })?;
            prev = cur;
            cur = step;
        }
        cycles.push(Cycle::new(cycle));
    }
    Ok(TwoFactor { involution: g, cycles })
}

/// `#_{k-1} S²×S¹`, with `k = 1` meaning the 3-sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuotientType {
    k: usize,
}

impl QuotientType {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "a 2-factor has at least one cycle");
        Self { k }
    }

    /// Number of components of the trivial branch link.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_sphere(&self) -> bool {
        self.k == 1
    }

    pub fn ascii(&self) -> String {
        match self.k {
            1 => String::from("S^3"),
            2 => String::from("S^2xS^1"),
            k => alloc::format!("#_{} S^2xS^1", k - 1),
        }
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            1 => f.write_str("S³"),
            2 => f.write_str("S²×S¹"),
            k => {
                f.write_str("#")?;
                for d in alloc::format!("{}", k - 1).chars() {
                    let sub = char::from_u32(0x2080 + d.to_digit(10).expect("decimal digit"))
                        .expect("subscript digit");
                    write!(f, "{sub}")?;
                }
                f.write_str(" S²×S¹")
            }
        }
    }
}

pub fn quotient_type(tf: &TwoFactor) -> QuotientType {
    QuotientType::new(tf.k())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    pub involution: Gf2Vec3,
    /// Facets `[a, b]` at vertex 0 with `involution = λ_a + λ_b`.
    pub basis_pair: [usize; 2],
    pub two_factor: TwoFactor,
    pub quotient: QuotientType,
}

impl InvolutionReport {
    pub fn k(&self) -> usize {
        self.two_factor.k()
    }

    pub fn hamiltonian_cycle(&self) -> Option<&Cycle> {
        match self.two_factor.cycles() {
            [c] => Some(c),
            _ => None,
        }
    }

    /// `λa+λb` with 1-based facet numbers.
    pub fn name(&self) -> String {
        alloc::format!("λ{}+λ{}", self.basis_pair[0] + 1, self.basis_pair[1] + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionAnalysis {
    pub xi: Gf2Functional,
    pub subgroup: OrientationSubgroup,
    pub labeling: EdgeLabeling,
    /// One report per involution, in increasing order of the involution.
    pub reports: [InvolutionReport; 3],
}

impl InvolutionAnalysis {
    /// Some involution has a Hamiltonian 2-factor.
    pub fn is_hamiltonian(&self) -> bool {
        self.reports.iter().any(|r| r.k() == 1)
    }

    /// Every involution has a Hamiltonian 2-factor.
    pub fn is_rational_homology_sphere(&self) -> bool {
        self.reports.iter().all(|r| r.k() == 1)
    }

    pub fn report(&self, g: Gf2Vec3) -> Option<&InvolutionReport> {
        self.reports.iter().find(|r| r.involution == g)
    }

    /// The first involution, in increasing order, with a Hamiltonian 2-factor.
    pub fn first_hamiltonian(&self) -> Option<&InvolutionReport> {
        self.reports.iter().find(|r| r.k() == 1)
    }
}

pub fn analyze_involutions(
    p: &SimplePolytope3,
    lambda: &CharacteristicFunction,
) -> Result<InvolutionAnalysis, CoverError> {
    let xi = orientability(lambda).ok_or_else(|| CoverError::NotOrientable {
        witness: orientability_witness(lambda),
    })?;
    let subgroup = orientation_subgroup(xi)?;
    let labeling = edge_labels(p, lambda, &subgroup)?;
    let [a, b, c] = p.vertex_facets(0);
    let pairs = [[a, b], [a, c], [b, c]];
    let reports = subgroup.involutions().map(|g| {
        let basis_pair = pairs
            .into_iter()
            .find(|&[x, y]| lambda.value(x) + lambda.value(y) == g)
            .expect("vertex labels are exactly the involutions");
        (g, basis_pair)
    });
    let mut out = Vec::with_capacity(3);
    for (g, basis_pair) in reports {
        let tf = two_factor(p, &labeling, g)?;
        let quotient = quotient_type(&tf);
        out.push(InvolutionReport { involution: g, basis_pair, two_factor: tf, quotient });
    }
    let reports: [InvolutionReport; 3] = out.try_into().expect("three involutions");
    Ok(InvolutionAnalysis { xi, subgroup, labeling, reports })
}
