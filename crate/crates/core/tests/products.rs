mod common;

use forcing_lab::expr::GraphExpr;
use forcing_lab::{edgelist, Graph};
use proptest::prelude::*;

use common::graph;

/// `(g, h) ↦ (h, g)` as a permutation of row-major indices.
fn swap_perm(ng: usize, nh: usize) -> Vec<usize> {
    (0..ng * nh).map(|i| (i % nh) * ng + i / nh).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn tensor_degrees_multiply(g in graph(1, 6), h in graph(1, 6)) {
        let p = Graph::tensor(&g, &h);
        prop_assert!(p.check_invariants());
        for a in 0..g.order() {
            for b in 0..h.order() {
                let v = a * h.order() + b;
                prop_assert_eq!(p.label(v), Some((a, b)));
                prop_assert_eq!(p.degree(v), g.degree(a) * h.degree(b));
            }
        }
        prop_assert_eq!(p.max_degree(), g.max_degree() * h.max_degree());
        prop_assert_eq!(p.size(), 2 * g.size() * h.size());
    }

    #[test]
    fn cartesian_degrees_add(g in graph(1, 6), h in graph(1, 6)) {
        let p = Graph::cartesian(&g, &h);
        for a in 0..g.order() {
            for b in 0..h.order() {
                prop_assert_eq!(p.degree(a * h.order() + b), g.degree(a) + h.degree(b));
            }
        }
    }

    #[test]
    fn lexicographic_degree_formula(g in graph(1, 6), h in graph(1, 6)) {
        let p = Graph::lexicographic(&g, &h);
        for a in 0..g.order() {
            for b in 0..h.order() {
                prop_assert_eq!(p.degree(a * h.order() + b), g.degree(a) * h.order() + h.degree(b));
            }
        }
        prop_assert_eq!(p.max_degree(), g.max_degree() * h.order() + h.max_degree());
    }

    #[test]
    fn commutative_products_swap_coordinates(g in graph(1, 5), h in graph(1, 5)) {
        let perm = swap_perm(g.order(), h.order());
        prop_assert_eq!(Graph::tensor(&g, &h).relabel(&perm), Graph::tensor(&h, &g));
        prop_assert_eq!(Graph::cartesian(&g, &h).relabel(&perm), Graph::cartesian(&h, &g));
    }

    #[test]
    fn adjacency_rules(g in graph(1, 5), h in graph(1, 5)) {
        let (t, c, l) = (Graph::tensor(&g, &h), Graph::cartesian(&g, &h), Graph::lexicographic(&g, &h));
        let nh = h.order();
        for u in 0..g.order() * nh {
            for v in 0..g.order() * nh {
                let (a, b, x, y) = (u / nh, u % nh, v / nh, v % nh);
                prop_assert_eq!(t.adjacent(u, v), g.adjacent(a, x) && h.adjacent(b, y));
                prop_assert_eq!(c.adjacent(u, v), (a == x && h.adjacent(b, y)) || (b == y && g.adjacent(a, x)));
                prop_assert_eq!(l.adjacent(u, v), g.adjacent(a, x) || (a == x && h.adjacent(b, y)));
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph(0, 9)) {
        let text = edgelist::write(&g);
        prop_assert_eq!(edgelist::parse(&text).unwrap(), g);
    }
}

#[test]
fn expression_descriptor_round_trip() {
    for src in [
        "path:1",
        "cycle:5",
        "complete:4",
        "threesun",
        "tensor(path:3, complete:3)",
        "cartesian(cycle:3,cycle:4)",
        " lex ( complete:2 , tensor( cycle:3 , path:2 ) ) ",
    ] {
        let e = GraphExpr::parse(src).unwrap();
        let again = GraphExpr::parse(&e.to_string()).unwrap();
        assert_eq!(again, e);
        assert_eq!(again.build().unwrap(), e.build().unwrap());
    }
}

#[test]
fn file_descriptor_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sun.edges");
    std::fs::write(&path, edgelist::write(&Graph::three_sun())).unwrap();
    let e = GraphExpr::parse(&format!("file:{}", path.display())).unwrap();
    assert_eq!(e.build().unwrap(), Graph::three_sun());
    let again = GraphExpr::parse(&e.to_string()).unwrap();
    assert_eq!(again.build().unwrap(), Graph::three_sun());
}

#[test]
fn edge_list_errors_point_at_lines() {
    let err = edgelist::parse("3 2\n0 1\n1 1\n").unwrap_err();
    assert!(err.to_string().contains("line 3"), "{err}");
    let err = edgelist::parse("3 2\n0 1\n1 0\n").unwrap_err();
    assert!(err.to_string().contains("line 3"), "{err}");
    assert!(edgelist::parse("3 2\n0 1\n").is_err());
    assert!(edgelist::parse("# only a comment\n").is_err());
}
