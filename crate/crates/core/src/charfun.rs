//! Characteristic functions of small covers over simple 3-polytopes.
//!
//! A characteristic function assigns a nonzero vector of GF(2)³ to every
//! facet so that the three facets at each vertex carry a basis. The small
//! cover is orientable exactly when a functional `ξ` takes the value 1 on
//! every facet vector; its kernel is the orientation-preserving subgroup.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf2::{is_basis, solve_unit_functional, Gf2Functional, Gf2Mat3, Gf2Vec3};
use crate::polytope::{Cycle, SimplePolytope3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharFunError {
    LengthMismatch { expected: usize, found: usize },
    ZeroVector { facet: usize },
    /// Vertices whose three facet vectors are linearly dependent.
    StarViolation { vertices: Vec<usize> },
    ZeroFunctional,
    NotOrientableImage { image_size: usize },
    NotHamiltonian,
    SideColoringConflict { facet: usize },
}

impl fmt::Display for CharFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} facet vectors, found {found}")
            }
            Self::ZeroVector { facet } => write!(f, "facet {facet} is assigned the zero vector"),
            Self::StarViolation { vertices } => {
                write!(f, "facet vectors are dependent at vertices {vertices:?}")
            }
            Self::ZeroFunctional => write!(f, "the zero functional has no proper kernel"),
            Self::NotOrientableImage { image_size } => {
                write!(f, "image of size {image_size} admits no common orientation functional")
            }
            Self::NotHamiltonian => write!(f, "cycle is not Hamiltonian"),
            Self::SideColoringConflict { facet } => {
                write!(f, "cycle does not split the facets into two 2-colourable discs (facet {facet})")
            }
        }
    }
}

impl core::error::Error for CharFunError {}

/// A facet colouring satisfying the basis condition at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacteristicFunction {
    values: Vec<Gf2Vec3>,
}

impl CharacteristicFunction {
    pub fn values(&self) -> &[Gf2Vec3] {
        &self.values
    }

    pub fn value(&self, facet: usize) -> Gf2Vec3 {
        self.values[facet]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Distinct facet vectors in increasing order.
    pub fn image(&self) -> Vec<Gf2Vec3> {
        let mut image = self.values.clone();
        image.sort_unstable();
        image.dedup();
        image
    }

    /// Applies a change of basis to every facet vector. Invertible matrices
    /// preserve the basis condition.
    pub fn transformed(&self, m: &Gf2Mat3) -> Self {
        debug_assert!(m.is_invertible());
        Self {
            values: self.values.iter().map(|&v| m.apply(v)).collect(),
        }
    }

    /// The representative of this function's basis-change orbit in which the
    /// three facets at vertex 0 carry `e1, e2, e3` (in increasing facet
    /// order), together with the matrix `M` with `pinned = M · self`.
    pub fn pinned(&self, p: &SimplePolytope3) -> (Self, Gf2Mat3) {
        let [a, b, c] = p.vertex_facets(0);
        let m = Gf2Mat3::to_standard_basis(self.values[a], self.values[b], self.values[c])
            .expect("facet vectors at a vertex form a basis");
        (self.transformed(&m), m)
    }

    /// Orbit identifier: the pinned values written as digits.
    pub fn class_id(&self, p: &SimplePolytope3) -> alloc::string::String {
        use core::fmt::Write;
        let (pinned, _) = self.pinned(p);
        let mut id = alloc::string::String::with_capacity(pinned.len());
        for v in pinned.values() {
            let _ = write!(id, "{}", v.bits());
        }
        id
    }
}

/// Checks the basis condition at every vertex.
pub fn validate_star(
    p: &SimplePolytope3,
    values: Vec<Gf2Vec3>,
) -> Result<CharacteristicFunction, CharFunError> {
    if values.len() != p.facet_count() {
        return Err(CharFunError::LengthMismatch { expected: p.facet_count(), found: values.len() });
    }
    if let Some(facet) = values.iter().position(|v| v.is_zero()) {
        return Err(CharFunError::ZeroVector { facet });
    }
    let vertices: Vec<usize> = (0..p.vertex_count())
        .filter(|&v| {
            let [a, b, c] = p.vertex_facets(v);
            !is_basis(values[a], values[b], values[c])
        })
        .collect();
    if !vertices.is_empty() {
        return Err(CharFunError::StarViolation { vertices });
    }
    Ok(CharacteristicFunction { values })
}

/// The functional `ξ` with `ξ(λ_F) = 1` on every facet, if one exists.
pub fn orientability(lambda: &CharacteristicFunction) -> Option<Gf2Functional> {
    solve_unit_functional(lambda.image())
}

/// Three facets `[i, j, k]` with `λ_i + λ_j = λ_k`, which rules out any `ξ`.
/// Every non-orientable characteristic function has such a triple.
pub fn orientability_witness(lambda: &CharacteristicFunction) -> Option<[usize; 3]> {
    let first_facet = |v: Gf2Vec3| lambda.values.iter().position(|&w| w == v);
    let image = lambda.image();
    for (x, &a) in image.iter().enumerate() {
        for &b in &image[x + 1..] {
            if image.contains(&(a + b)) {
                return Some([first_facet(a)?, first_facet(b)?, first_facet(a + b)?]);
            }
        }
    }
    None
}

/// The kernel of `ξ`: the identity and three involutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientationSubgroup {
    xi: Gf2Functional,
    involutions: [Gf2Vec3; 3],
}

impl OrientationSubgroup {
    pub fn xi(&self) -> Gf2Functional {
        self.xi
    }

    /// The nonzero elements in increasing order.
    pub fn involutions(&self) -> [Gf2Vec3; 3] {
        self.involutions
    }

    pub fn elements(&self) -> [Gf2Vec3; 4] {
        let [a, b, c] = self.involutions;
        [Gf2Vec3::ZERO, a, b, c]
    }

    pub fn contains(&self, g: Gf2Vec3) -> bool {
        !self.xi.eval(g)
    }
}

pub fn orientation_subgroup(xi: Gf2Functional) -> Result<OrientationSubgroup, CharFunError> {
    if xi.is_zero() {
        return Err(CharFunError::ZeroFunctional);
    }
    let mut kernel = Gf2Vec3::nonzero().filter(|&g| !xi.eval(g));
    let involutions = [
        kernel.next().expect("kernel of a nonzero functional has order 4"),
        kernel.next().expect("kernel of a nonzero functional has order 4"),
        kernel.next().expect("kernel of a nonzero functional has order 4"),
    ];
    Ok(OrientationSubgroup { xi, involutions })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ImageClass {
    /// Three colours: the image is a basis.
    ThreeColoring,
    /// Four colours: a basis together with its sum.
    FourColoring,
}

impl fmt::Display for ImageClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ThreeColoring => "three-coloring",
            Self::FourColoring => "four-coloring",
        })
    }
}

pub fn classify_image(lambda: &CharacteristicFunction) -> Result<ImageClass, CharFunError> {
    let image = lambda.image();
    let consistent = solve_unit_functional(image.iter().copied()).is_some();
    match (image.len(), consistent) {
        (3, true) => Ok(ImageClass::ThreeColoring),
        (4, true) => Ok(ImageClass::FourColoring),
        (n, _) => Err(CharFunError::NotOrientableImage { image_size: n }),
    }
}

/// One representative per basis-change orbit of characteristic functions.
///
/// Representatives are pinned: the facets at vertex 0 carry `e1, e2, e3` in
/// increasing facet order. Each orbit contains exactly one pinned function,
/// so no further reduction is needed. The remaining facets are filled in
/// index order with values in increasing order, and the result is sorted
/// lexicographically by facet values.
pub fn enumerate_characteristic_functions(
    p: &SimplePolytope3,
    orientable_only: bool,
) -> Vec<CharacteristicFunction> {
    let mut facet_vertices: Vec<Vec<usize>> = vec![Vec::new(); p.facet_count()];
    for v in 0..p.vertex_count() {
        for f in p.vertex_facets(v) {
            facet_vertices[f].push(v);
        }
    }
    let mut values: Vec<Option<Gf2Vec3>> = vec![None; p.facet_count()];
    let pinned = p.vertex_facets(0);
    for (f, e) in pinned.into_iter().zip([Gf2Vec3::E1, Gf2Vec3::E2, Gf2Vec3::E3]) {
        values[f] = Some(e);
    }
    let mut search = Enumeration {
        polytope: p,
        facet_vertices,
        values,
        orientable_only,
        out: Vec::new(),
    };
    search.fill(0);
    search.out
}

struct Enumeration<'a> {
    polytope: &'a SimplePolytope3,
    facet_vertices: Vec<Vec<usize>>,
    values: Vec<Option<Gf2Vec3>>,
    orientable_only: bool,
    out: Vec<CharacteristicFunction>,
}

impl Enumeration<'_> {
    fn fill(&mut self, facet: usize) {
        if facet == self.values.len() {
            let lambda = CharacteristicFunction {
                values: self.values.iter().map(|v| v.expect("all facets assigned")).collect(),
            };
            if !self.orientable_only || orientability(&lambda).is_some() {
                self.out.push(lambda);
            }
            return;
        }
        if self.values[facet].is_some() {
            self.fill(facet + 1);
            return;
        }
        for candidate in Gf2Vec3::nonzero() {
            if self.compatible(facet, candidate) {
                self.values[facet] = Some(candidate);
                self.fill(facet + 1);
                self.values[facet] = None;
            }
        }
    }

    fn compatible(&self, facet: usize, x: Gf2Vec3) -> bool {
        self.facet_vertices[facet].iter().all(|&v| {
            let others: Vec<Gf2Vec3> = self
                .polytope
                .vertex_facets(v)
                .into_iter()
                .filter(|&f| f != facet)
                .filter_map(|f| self.values[f])
                .collect();
            match others.as_slice() {
                [a, b] => is_basis(*a, *b, x),
                [a] => *a != x,
                _ => true,
            }
        })
    }
}

/// Which disc of the boundary, cut along a Hamiltonian cycle, a facet lies in.
/// Side `A` is the one containing facet 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// Splits the facets by a Hamiltonian cycle: neighbours across a cycle edge
/// lie on opposite sides, neighbours across any other edge on the same side.
pub fn cycle_sides(p: &SimplePolytope3, cycle: &Cycle) -> Result<Vec<Side>, CharFunError> {
    if !p.is_hamiltonian_cycle(cycle) {
        return Err(CharFunError::NotHamiltonian);
    }
    let on_cycle = cycle_edge_mask(p, cycle);
    let mut sides: Vec<Option<Side>> = vec![None; p.facet_count()];
    let mut adjacent: Vec<Vec<(usize, bool)>> = vec![Vec::new(); p.facet_count()];
    for (e, &crosses) in on_cycle.iter().enumerate() {
        let [f, g] = p.edge_facets(e);
        adjacent[f].push((g, crosses));
        adjacent[g].push((f, crosses));
    }
    sides[0] = Some(Side::A);
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        let side = sides[f].expect("queued facets are sided");
        for &(g, crosses) in &adjacent[f] {
            let want = if crosses { side.other() } else { side };
            match sides[g] {
                None => {
                    sides[g] = Some(want);
                    queue.push_back(g);
                }
                Some(s) if s != want => return Err(CharFunError::SideColoringConflict { facet: g }),
                Some(_) => {}
            }
        }
    }
    sides
        .into_iter()
        .enumerate()
        .map(|(f, s)| s.ok_or(CharFunError::SideColoringConflict { facet: f }))
        .collect()
}

pub(crate) fn cycle_edge_mask(p: &SimplePolytope3, cycle: &Cycle) -> Vec<bool> {
    let mut mask = vec![false; p.edge_count()];
    for e in cycle.edges() {
        if let Some(id) = p.edge_id(e.low(), e.high()) {
            mask[id] = true;
        }
    }
    mask
}

/// The four-colouring induced by a Hamiltonian cycle.
///
/// Side `A` (containing facet 0) is coloured with `e1, e2` and side `B` with
/// `e3, e1 + e2 + e3`. Within a side, colours alternate across non-cycle
/// edges by breadth-first search from the smallest facet of that side, which
/// receives `e1` (side `A`) or `e3` (side `B`). With this colouring every
/// non-cycle edge is labelled `e1 + e2`, so the involution `e1 + e2` has the
/// input cycle as its fixed 2-factor.
pub fn coloring_from_hamiltonian(
    p: &SimplePolytope3,
    cycle: &Cycle,
) -> Result<CharacteristicFunction, CharFunError> {
    let sides = cycle_sides(p, cycle)?;
    let on_cycle = cycle_edge_mask(p, cycle);
    let mut inner: Vec<Vec<usize>> = vec![Vec::new(); p.facet_count()];
    for e in (0..p.edge_count()).filter(|&e| !on_cycle[e]) {
        let [f, g] = p.edge_facets(e);
        inner[f].push(g);
        inner[g].push(f);
    }

    let mut colors: Vec<Option<Gf2Vec3>> = vec![None; p.facet_count()];
    for start in 0..p.facet_count() {
        if colors[start].is_some() {
            continue;
        }
        let (first, second) = match sides[start] {
            Side::A => (Gf2Vec3::E1, Gf2Vec3::E2),
            Side::B => (Gf2Vec3::E3, Gf2Vec3::E123),
        };
        colors[start] = Some(first);
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let next = if colors[f] == Some(first) { second } else { first };
            for &g in &inner[f] {
                match colors[g] {
                    None => {
                        colors[g] = Some(next);
                        queue.push_back(g);
                    }
                    Some(c) if c != next => return Err(CharFunError::SideColoringConflict { facet: g }),
                    Some(_) => {}
                }
            }
        }
    }
    let values = colors.into_iter().map(|c| c.expect("every facet coloured")).collect();
    validate_star(p, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn vecs(bits: &[u8]) -> Vec<Gf2Vec3> {
        bits.iter().map(|&b| Gf2Vec3::from_bits(b).unwrap()).collect()
    }

    #[test]
    fn simplex_canonical_lambda_is_valid_and_orientable() {
        let p = catalog::simplex();
        let lambda = validate_star(&p, vecs(&[4, 2, 1, 7])).unwrap();
        assert_eq!(orientability(&lambda), Gf2Functional::from_bits(7));
        assert_eq!(classify_image(&lambda), Ok(ImageClass::FourColoring));
    }

    #[test]
    fn dependent_vertex_is_reported() {
        let p = catalog::simplex();
        // λ4 = e1 + e2 collides with λ1, λ2 at the vertex F1 ∩ F2 ∩ F4 = vertex 1.
        let err = validate_star(&p, vecs(&[4, 2, 1, 6])).unwrap_err();
        assert_eq!(err, CharFunError::StarViolation { vertices: vec![1] });
        assert_eq!(validate_star(&p, vecs(&[4, 2, 1, 0])), Err(CharFunError::ZeroVector { facet: 3 }));
        assert_eq!(
            validate_star(&p, vecs(&[4, 2, 1])),
            Err(CharFunError::LengthMismatch { expected: 4, found: 3 })
        );
    }

    #[test]
    fn cube_three_coloring() {
        let p = catalog::cube();
        let lambda = validate_star(&p, vecs(&[4, 4, 2, 2, 1, 1])).unwrap();
        assert_eq!(orientability(&lambda), Gf2Functional::from_bits(7));
        assert_eq!(classify_image(&lambda), Ok(ImageClass::ThreeColoring));
    }

    #[test]
    fn non_orientable_image() {
        // Prism over a triangle: the triangles get e3, the sides e1, e2, e1+e2.
        let p = catalog::prism(3);
        let lambda = validate_star(&p, vecs(&[1, 1, 4, 2, 6])).unwrap();
        assert_eq!(orientability(&lambda), None);
        assert_eq!(orientability_witness(&lambda), Some([3, 2, 4]));
        assert_eq!(classify_image(&lambda), Err(CharFunError::NotOrientableImage { image_size: 4 }));
    }

    #[test]
    fn subgroup_of_standard_functionals() {
        let g = orientation_subgroup(Gf2Functional::from_bits(7).unwrap()).unwrap();
        assert_eq!(g.involutions(), [Gf2Vec3::from_bits(3).unwrap(), Gf2Vec3::from_bits(5).unwrap(), Gf2Vec3::from_bits(6).unwrap()]);
        let g = orientation_subgroup(Gf2Functional::from_bits(4).unwrap()).unwrap();
        assert_eq!(g.involutions(), vecs(&[1, 2, 3]).as_slice());
        assert_eq!(orientation_subgroup(Gf2Functional::ZERO), Err(CharFunError::ZeroFunctional));
    }

    #[test]
    fn simplex_has_one_orientable_class() {
        let classes = enumerate_characteristic_functions(&catalog::simplex(), true);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].values(), vecs(&[4, 2, 1, 7]).as_slice());
    }

    #[test]
    fn hamiltonian_coloring_of_simplex() {
        let p = catalog::simplex();
        // Avoids F1 ∩ F4 (vertices 1-2) and F2 ∩ F3 (vertices 0-3).
        let cycle = Cycle::new(vec![0, 1, 3, 2]);
        let lambda = coloring_from_hamiltonian(&p, &cycle).unwrap();
        assert_eq!(lambda.image().len(), 4);
        assert_eq!(lambda.class_id(&p), "4217");
        assert_eq!(
            coloring_from_hamiltonian(&p, &Cycle::new(vec![0, 1, 2])),
            Err(CharFunError::NotHamiltonian)
        );
    }
}
