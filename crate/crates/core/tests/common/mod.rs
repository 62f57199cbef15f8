#![allow(dead_code)]

use smallcover_core::catalog;
use smallcover_core::SimplePolytope3;

pub fn corpus() -> Vec<(&'static str, SimplePolytope3)> {
    let [t3a, t3b, t3c] = catalog::thrice_truncated_simplices();
    vec![
        ("simplex", catalog::simplex()),
        ("cube", catalog::cube()),
        ("pentagonal prism", catalog::prism(5)),
        ("hexagonal prism", catalog::prism(6)),
        ("truncated simplex", catalog::truncated_simplex(&[0])),
        ("twice truncated simplex", catalog::truncated_simplex(&[0, 0])),
        ("thrice truncated simplex", t3a),
        ("thrice truncated simplex (b)", t3b),
        ("thrice truncated simplex (c)", t3c),
    ]
}
