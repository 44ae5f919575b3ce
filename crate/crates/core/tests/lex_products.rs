//! Power domination and zero forcing of lexicographic products against
//! domination data of the factors.

use forcing_lab::constructions::lex_zf_bound;
use forcing_lab::solvers::{self, greedy_minimal_set, Invariant};
use forcing_lab::{enumerate, Graph, VertexSet};

fn first_factors(max: usize) -> Vec<Graph> {
    (2..=max)
        .flat_map(enumerate::all_graphs)
        .filter(|g| g.isolated_vertices().is_empty())
        .collect()
}

/// `γ_P(G*H)` is `γ(G)` when `γ_P(H) = 1` and `γ_t(G)` otherwise, here on
/// second factors with at least two vertices and no isolated vertex.
#[test]
fn power_domination_of_lex_product_without_isolated_vertices() {
    let hs: Vec<Graph> = (2..=5)
        .flat_map(enumerate::all_graphs)
        .filter(|h| h.isolated_vertices().is_empty())
        .collect();
    for g in first_factors(5) {
        let dom = solvers::domination_number(&g).unwrap().value;
        let tdom = solvers::total_domination_number(&g).unwrap().value;
        for h in &hs {
            let pd_h = solvers::power_domination_number(h).unwrap().value;
            let want = if pd_h == 1 { dom } else { tdom };
            let got = solvers::power_domination_number(&Graph::lexicographic(&g, h)).unwrap().value;
            assert_eq!(got, want, "G={g:?} H={h:?}");
        }
    }
}

/// Outside that domain the formula breaks: `K_2 * 2K_1` is `C_4`, with
/// `γ_P = 1`, while `γ_P(2K_1) = 2` asks for `γ_t(K_2) = 2`.
#[test]
fn lex_power_domination_counterexample() {
    let k2 = Graph::complete(2);
    let two_k1 = Graph::empty(2);
    let lex = Graph::lexicographic(&k2, &two_k1);
    assert_eq!(lex, Graph::cycle(4).unwrap().relabel(&[0, 2, 1, 3]));
    assert_eq!(solvers::power_domination_number(&two_k1).unwrap().value, 2);
    assert_eq!(solvers::total_domination_number(&k2).unwrap().value, 2);
    assert_eq!(solvers::power_domination_number(&lex).unwrap().value, 1);
    // with H = K_1 the product is G itself, and γ_P(P_4) = 1 < γ(P_4) = 2
    let p4 = Graph::path(4);
    assert_eq!(Graph::lexicographic(&p4, &Graph::path(1)), p4);
    assert_eq!(solvers::power_domination_number(&p4).unwrap().value, 1);
    assert_eq!(solvers::domination_number(&p4).unwrap().value, 2);
}

#[test]
fn lex_zero_forcing_bound() {
    for g in first_factors(4) {
        let dom = solvers::domination_number(&g).unwrap().value;
        let tdom = solvers::total_domination_number(&g).unwrap().value;
        for h in (1..=4).flat_map(enumerate::all_graphs) {
            let pd_h = solvers::power_domination_number(&h).unwrap().value;
            let bound = lex_zf_bound(&g, &h, dom, tdom, pd_h == 1);
            let lex = Graph::lexicographic(&g, &h);
            let greedy = greedy_minimal_set(&lex, Invariant::ZeroForcing, &VertexSet::full(lex.order())).unwrap();
            let z = if greedy.len() <= bound {
                greedy.len()
            } else {
                solvers::zero_forcing_number(&lex).unwrap().value
            };
            assert!(z <= bound, "G={g:?} H={h:?}: {z} > {bound}");
        }
    }
}

#[test]
fn regular_lex_products_meet_min_degree() {
    let regular = |g: &Graph| g.degree_stats().regular;
    let hs: Vec<Graph> = (1..=5)
        .flat_map(enumerate::all_graphs)
        .filter(|h| regular(h) && solvers::power_domination_number(h).unwrap().value == 1)
        .collect();
    for n in 1..=4 {
        let g = Graph::complete(n);
        for h in &hs {
            let lex = Graph::lexicographic(&g, h);
            if !lex.has_edge() {
                continue;
            }
            let want = (n - 1) * h.order() + h.max_degree();
            assert_eq!(solvers::zero_forcing_number(&lex).unwrap().value, want, "K_{n} * {h:?}");
        }
    }
}

#[test]
fn complete_lex_cycle() {
    for (n, m) in [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)] {
        let lex = Graph::lexicographic(&Graph::complete(n), &Graph::cycle(m).unwrap());
        assert_eq!(solvers::zero_forcing_number(&lex).unwrap().value, (n - 1) * m + 2);
    }
}
