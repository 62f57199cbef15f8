//! Structural invariants checked over the reference corpus, plus randomized
//! basis changes and vertex relabelings.

mod common;

use proptest::prelude::*;
use smallcover_core::catalog;
use smallcover_core::charfun::{
    coloring_from_hamiltonian, enumerate_characteristic_functions, orientability, Side,
};
use smallcover_core::covers::{analyze_involutions, two_factor};
use smallcover_core::links::{
    chainmail_diagram, chord_diagram, chord_diagram_from, intersection_graph, linking_matrix_from_graph,
    verify_alternating,
};
use smallcover_core::{CharacteristicFunction, Cycle, Gf2Mat3, Gf2Vec3, SimplePolytope3};

#[test]
fn edge_labels_at_each_vertex_are_the_involutions() {
    for (name, p) in common::corpus() {
        for l in enumerate_characteristic_functions(&p, true) {
            let a = analyze_involutions(&p, &l).unwrap();
            for v in 0..p.vertex_count() {
                let mut at_v: Vec<Gf2Vec3> = p.neighbors(v).iter().map(|&w| a.labeling.label(p.edge_id(v, w).unwrap())).collect();
                at_v.sort_unstable();
                assert_eq!(at_v, a.subgroup.involutions().to_vec(), "{name} vertex {v}");
            }
        }
    }
}

#[test]
fn two_factors_cover_every_vertex_once() {
    for (name, p) in common::corpus() {
        for l in enumerate_characteristic_functions(&p, true) {
            let a = analyze_involutions(&p, &l).unwrap();
            let mut double_cover = vec![0usize; p.edge_count()];
            for r in &a.reports {
                let mut seen = vec![0usize; p.vertex_count()];
                for c in r.two_factor.cycles() {
                    for &v in c.vertices() {
                        seen[v] += 1;
                    }
                    for e in c.edges() {
                        assert_ne!(a.labeling.label(p.edge_id(e.low(), e.high()).unwrap()), r.involution);
                        double_cover[p.edge_id(e.low(), e.high()).unwrap()] += 1;
                    }
                }
                assert!(seen.iter().all(|&s| s == 1), "{name}");
                assert_eq!(r.hamiltonian_cycle().is_some(), r.k() == 1);
            }
            // Each edge misses exactly one of the three involutions.
            assert!(double_cover.iter().all(|&c| c == 2), "{name}");
        }
    }
}

#[test]
fn chord_diagrams_and_links_over_every_cycle_and_cut() {
    for (name, p) in common::corpus() {
        for l in enumerate_characteristic_functions(&p, true) {
            let a = analyze_involutions(&p, &l).unwrap();
            for r in a.reports.iter().filter(|r| r.k() == 1) {
                let cycle = r.hamiltonian_cycle().unwrap();
                check_cycle(name, &p, cycle);
            }
        }
        for cycle in p.hamiltonian_cycles() {
            check_cycle(name, &p, &cycle);
        }
    }
}

fn check_cycle(name: &str, p: &SimplePolytope3, cycle: &Cycle) {
    let v = p.vertex_count();
    let mut reference = None;
    for cut in cycle.edges() {
        for start in [cut.low(), cut.high()] {
            let d = chord_diagram_from(p, cycle, cut, start).unwrap();
            assert_eq!(d.len(), v / 2, "{name}");
            let mut endpoints: Vec<usize> = d.chords().iter().flat_map(|c| [c.left, c.right]).collect();
            endpoints.sort_unstable();
            assert_eq!(endpoints, (1..=v).collect::<Vec<_>>(), "{name}: chords form a perfect matching");
            assert!(d.chords().iter().all(|c| c.right > c.left + 1));

            let g = intersection_graph(&d).unwrap();
            for &(x, y) in g.edges() {
                assert_ne!(g.side(x), g.side(y));
            }
            let labeled = g.labeled_edges();
            match &reference {
                None => reference = Some(labeled),
                Some(r) => assert_eq!(r, &labeled, "{name}: graph depends on the cut"),
            }

            let link = chainmail_diagram(&g, &d).unwrap();
            assert_eq!(link.crossing_count(), 2 * g.edges().len());
            assert_eq!(verify_alternating(&link), Ok(None), "{name}");
            let abs: Vec<Vec<i32>> =
                link.linking_matrix.iter().map(|row| row.iter().map(|x| x.abs()).collect()).collect();
            assert_eq!(abs, linking_matrix_from_graph(&g));
            for (i, code) in link.gauss_codes.iter().enumerate() {
                assert_eq!(code.len(), 2 * g.degree(i));
                let m = code.len();
                for t in 0..m {
                    assert_ne!(code[t].over, code[(t + 1) % m].over);
                }
            }
        }
    }
}

#[test]
fn hamiltonian_colouring_round_trip() {
    for (name, p) in common::corpus() {
        let classes: Vec<String> = enumerate_characteristic_functions(&p, true).iter().map(|l| l.class_id(&p)).collect();
        for cycle in p.hamiltonian_cycles() {
            let l = coloring_from_hamiltonian(&p, &cycle).unwrap();
            assert!(orientability(&l).is_some());
            let a = analyze_involutions(&p, &l).unwrap();
            let g = Gf2Vec3::E1 + Gf2Vec3::E2;
            let tf = two_factor(&p, &a.labeling, g).unwrap();
            assert_eq!(tf.cycles(), std::slice::from_ref(&cycle), "{name}");
            assert!(classes.contains(&l.class_id(&p)), "{name}");
        }
    }
}

#[test]
fn sides_split_the_facets_along_the_cycle() {
    for (name, p) in common::corpus() {
        for cycle in p.hamiltonian_cycles() {
            let sides = smallcover_core::charfun::cycle_sides(&p, &cycle).unwrap();
            assert_eq!(sides[0], Side::A);
            for e in 0..p.edge_count() {
                let [f, g] = p.edge_facets(e);
                let on_cycle = cycle.contains_edge(p.edges()[e]);
                assert_eq!(sides[f] != sides[g], on_cycle, "{name}");
            }
        }
    }
}

#[test]
fn cut_edge_must_lie_on_the_cycle() {
    let p = catalog::simplex();
    let cycle = p.hamiltonian_cycles().remove(0);
    let off = p.edges().iter().copied().find(|&e| !cycle.contains_edge(e)).unwrap();
    assert!(chord_diagram(&p, &cycle, off).is_err());
}

#[test]
fn truncation_is_independent_of_facet_order() {
    let base = catalog::truncated_simplex(&[0, 0]);
    let mut facets: Vec<Vec<usize>> = base.facets().to_vec();
    facets.reverse();
    for f in facets.iter_mut() {
        f.rotate_left(1);
    }
    let shuffled = SimplePolytope3::from_facets(facets).unwrap();
    for v in 0..base.vertex_count() {
        let a = base.truncate_vertex(v).unwrap();
        let b = shuffled.truncate_vertex(v).unwrap();
        assert_eq!(catalog::facet_profile(&a), catalog::facet_profile(&b));
        let ea: std::collections::BTreeSet<_> = a.edges().iter().copied().collect();
        let eb: std::collections::BTreeSet<_> = b.edges().iter().copied().collect();
        assert_eq!(ea.len(), eb.len());
        // New triangle uses the same three top ids either way.
        let top = a.vertex_count() - 3;
        let tri = |q: &SimplePolytope3| {
            q.facets().iter().any(|f| {
                let mut s = f.clone();
                s.sort_unstable();
                s == vec![top, top + 1, top + 2]
            })
        };
        assert!(tri(&a) && tri(&b));
    }
}

fn matrix_strategy() -> impl Strategy<Value = Gf2Mat3> {
    let group: Vec<Gf2Mat3> = Gf2Mat3::general_linear_group().collect();
    (0..group.len()).prop_map(move |i| group[i])
}

fn corpus_class_strategy() -> impl Strategy<Value = (SimplePolytope3, CharacteristicFunction)> {
    let items: Vec<(SimplePolytope3, CharacteristicFunction)> = common::corpus()
        .into_iter()
        .flat_map(|(_, p)| enumerate_characteristic_functions(&p, true).into_iter().map(move |l| (p.clone(), l)))
        .collect();
    (0..items.len()).prop_map(move |i| items[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_change_preserves_everything((p, l) in corpus_class_strategy(), m in matrix_strategy()) {
        let t = l.transformed(&m);
        prop_assert_eq!(t.class_id(&p), l.class_id(&p));
        let (a, b) = (analyze_involutions(&p, &l).unwrap(), analyze_involutions(&p, &t).unwrap());
        // Functionals transform by the inverse transpose; check on images instead.
        for x in 0..p.facet_count() {
            prop_assert!(b.xi.eval(t.value(x)));
        }
        let mut ka: Vec<usize> = a.reports.iter().map(|r| r.k()).collect();
        let mut kb: Vec<usize> = b.reports.iter().map(|r| r.k()).collect();
        ka.sort_unstable();
        kb.sort_unstable();
        prop_assert_eq!(ka, kb);
        for r in &a.reports {
            let image = m.apply(r.involution);
            let other = b.report(image).unwrap();
            prop_assert_eq!(&r.two_factor.cycles(), &other.two_factor.cycles());
        }
    }

    #[test]
    fn non_orientable_classes_have_a_witness(idx in 0usize..65) {
        let p = catalog::prism(5);
        let all = enumerate_characteristic_functions(&p, false);
        let l = &all[idx % all.len()];
        let w = smallcover_core::charfun::orientability_witness(l);
        prop_assert_eq!(orientability(l).is_none(), w.is_some());
        if let Some([i, j, k]) = w {
            prop_assert_eq!(l.value(i) + l.value(j), l.value(k));
        }
    }

    #[test]
    fn relabeling_vertices_preserves_enumeration(seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = catalog::prism(5);
        let mut perm: Vec<usize> = (0..p.vertex_count()).collect();
        perm.shuffle(&mut rng);
        let mut facets: Vec<Vec<usize>> = p.facets().iter().map(|f| f.iter().map(|&v| perm[v]).collect()).collect();
        facets.shuffle(&mut rng);
        let q = SimplePolytope3::from_facets(facets).unwrap();
        prop_assert_eq!(q.hamiltonian_cycles().len(), p.hamiltonian_cycles().len());
        prop_assert_eq!(
            enumerate_characteristic_functions(&q, false).len(),
            enumerate_characteristic_functions(&p, false).len()
        );
        let ks = |x: &SimplePolytope3| {
            let mut out: Vec<Vec<usize>> = enumerate_characteristic_functions(x, true)
                .iter()
                .map(|l| {
                    let mut k: Vec<usize> = analyze_involutions(x, l).unwrap().reports.iter().map(|r| r.k()).collect();
                    k.sort_unstable();
                    k
                })
                .collect();
            out.sort();
            out
        };
        prop_assert_eq!(ks(&q), ks(&p));
    }
}
