//! Small reference polytopes.

use alloc::vec;
use alloc::vec::Vec;

use crate::polytope::SimplePolytope3;

/// The tetrahedron Δ³ with facets `[0,1,2], [0,1,3], [0,2,3], [1,2,3]`.
pub fn simplex() -> SimplePolytope3 {
    SimplePolytope3::from_facets(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
        .expect("simplex is valid")
}

/// The cube on vertices `0..8`, vertex `v` at `(v & 1, v >> 1 & 1, v >> 2 & 1)`.
/// Facets come in opposite pairs `(0, 1)`, `(2, 3)`, `(4, 5)`.
pub fn cube() -> SimplePolytope3 {
    SimplePolytope3::from_facets(vec![
        vec![0, 4, 6, 2],
        vec![1, 3, 7, 5],
        vec![0, 1, 5, 4],
        vec![2, 6, 7, 3],
        vec![0, 2, 3, 1],
        vec![4, 5, 7, 6],
    ])
    .expect("cube is valid")
}

/// The `n`-gonal prism: bottom `0..n`, top `n..2n`, then the side squares.
pub fn prism(n: usize) -> SimplePolytope3 {
    assert!(n >= 3, "a prism needs at least a triangular base");
    let mut facets = Vec::with_capacity(n + 2);
    facets.push((0..n).rev().collect());
    facets.push((n..2 * n).collect());
    for i in 0..n {
        let j = (i + 1) % n;
        facets.push(vec![i, j, n + j, n + i]);
    }
    SimplePolytope3::from_facets(facets).expect("prism is valid")
}

/// Successive vertex truncations of the simplex.
pub fn truncated_simplex(vertices: &[usize]) -> SimplePolytope3 {
    vertices.iter().fold(simplex(), |p, &v| {
        p.truncate_vertex(v).expect("truncation vertex exists")
    })
}

/// The three combinatorially distinct polytopes reachable from Δ³ by three
/// vertex truncations. Their facet-size profiles are `6 5 5 5 3 3 3` (three
/// original vertices cut), `6 6 4 4 4 3 3` and `6 5 5 4 4 3 3`.
pub fn thrice_truncated_simplices() -> [SimplePolytope3; 3] {
    [
        truncated_simplex(&[0, 0, 0]),
        truncated_simplex(&[0, 0, 2]),
        truncated_simplex(&[0, 0, 3]),
    ]
}

/// Facet-size profile, sorted descending; distinguishes the catalog entries.
pub fn facet_profile(p: &SimplePolytope3) -> Vec<usize> {
    let mut sizes: Vec<usize> = p.facets().iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}
