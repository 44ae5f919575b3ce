mod common;

use forcing_lab::enumerate;
use forcing_lab::solvers::{
    self, check_degree_sum_bound, greedy_minimal_set, pd_lower_bound_zf, satisfies, Invariant,
};
use forcing_lab::{Graph, SolveError, Solver, VertexSet};
use proptest::prelude::*;

use common::{brute_minimum, graph, naive_dom, naive_pd, naive_skew, naive_tdom, naive_zf};

type Pred = fn(&Graph, u64) -> bool;

const KINDS: [(Invariant, Pred); 5] = [
    (Invariant::ZeroForcing, naive_zf),
    (Invariant::SkewZeroForcing, naive_skew),
    (Invariant::PowerDomination, naive_pd),
    (Invariant::Domination, naive_dom),
    (Invariant::TotalDomination, naive_tdom),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Value and witness equal the brute-force minimum, which is the
    /// smallest size and then the lexicographically smallest member list.
    #[test]
    fn solvers_match_brute_force(g in graph(1, 9)) {
        let solver = Solver::default();
        for (kind, pred) in KINDS {
            let oracle = brute_minimum(&g, pred);
            match (solver.solve(&g, kind), oracle) {
                (Ok(r), Some((size, members))) => {
                    prop_assert_eq!(r.value, size, "{:?}", kind);
                    prop_assert_eq!(r.witness.to_vec(), members, "{:?}", kind);
                    prop_assert!(satisfies(&g, kind, &r.witness));
                }
                (Err(SolveError::Infeasible(_)), None) => {}
                (got, want) => prop_assert!(false, "{:?}: {:?} vs {:?}", kind, got, want),
            }
        }
    }

    #[test]
    fn general_bounds_hold(g in graph(1, 9)) {
        let z = solvers::zero_forcing_number(&g).unwrap().value;
        let pd = solvers::power_domination_number(&g).unwrap().value;
        let dom = solvers::domination_number(&g).unwrap().value;
        prop_assert!(g.min_degree() <= z);
        prop_assert!(pd <= dom);
        if g.has_edge() {
            prop_assert!(pd_lower_bound_zf(&g, z).unwrap() <= pd);
        }
        if g.isolated_vertices().is_empty() {
            for s in Solver::default().all_minimum_power_dominating_sets(&g).unwrap() {
                prop_assert!(check_degree_sum_bound(&g, &s, z).unwrap());
            }
        }
    }

    #[test]
    fn greedy_sets_are_minimal(g in graph(1, 9)) {
        for (kind, _) in KINDS {
            if let Some(s) = greedy_minimal_set(&g, kind, &VertexSet::full(g.order())) {
                prop_assert!(satisfies(&g, kind, &s));
                for v in s.iter() {
                    let mut smaller = s.clone();
                    smaller.remove(v);
                    prop_assert!(!satisfies(&g, kind, &smaller));
                }
            }
        }
    }
}

#[test]
fn all_minimum_sets_match_enumeration() {
    for n in 1..=6 {
        for g in enumerate::all_graphs(n) {
            let sets = Solver::default().all_minimum_power_dominating_sets(&g).unwrap();
            let size = sets[0].len();
            let want: Vec<Vec<usize>> = (0..1u64 << n)
                .filter(|&m| m.count_ones() as usize == size && naive_pd(&g, m))
                .map(common::members)
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let got: Vec<Vec<usize>> = sets.iter().map(VertexSet::to_vec).collect();
            assert_eq!(got, want, "{g:?}");
        }
    }
}

#[test]
fn zero_forcing_examples() {
    assert_eq!(solvers::zero_forcing_number(&Graph::path(9)).unwrap().value, 1);
    let sun = Graph::tensor(&Graph::three_sun(), &Graph::complete(3));
    assert_eq!(solvers::zero_forcing_number(&sun).unwrap().value, 7);
    let p3k3 = Graph::tensor(&Graph::path(3), &Graph::complete(3));
    assert_eq!(solvers::zero_forcing_number(&p3k3).unwrap().value, 5);
}

#[test]
fn skew_examples() {
    assert_eq!(solvers::skew_zero_forcing_number(&Graph::path(6)).unwrap().value, 0);
    assert_eq!(solvers::skew_zero_forcing_number(&Graph::three_sun()).unwrap().value, 0);
    assert_eq!(solvers::skew_zero_forcing_number(&Graph::path(5)).unwrap().value, 1);
}

#[test]
fn power_domination_examples() {
    assert_eq!(solvers::power_domination_number(&Graph::complete(7)).unwrap().value, 1);
    let p2k3 = Graph::tensor(&Graph::path(2), &Graph::complete(3));
    assert_eq!(solvers::power_domination_number(&p2k3).unwrap().value, 1);
    let c6k3 = Graph::tensor(&Graph::cycle(6).unwrap(), &Graph::complete(3));
    assert_eq!(solvers::power_domination_number(&c6k3).unwrap().value, 3);
    let edgeless = Graph::empty(4);
    let r = solvers::power_domination_number(&edgeless).unwrap();
    assert_eq!((r.value, r.witness), (4, VertexSet::full(4)));
}

#[test]
fn domination_examples() {
    assert_eq!(solvers::domination_number(&Graph::complete(5)).unwrap().value, 1);
    assert_eq!(solvers::total_domination_number(&Graph::cycle(4).unwrap()).unwrap().value, 2);
    assert_eq!(solvers::domination_number(&Graph::path(4)).unwrap().value, 2);
    assert!(matches!(
        solvers::total_domination_number(&Graph::empty(2)),
        Err(SolveError::Infeasible(_))
    ));
}

#[test]
fn lower_bound_examples() {
    assert_eq!(pd_lower_bound_zf(&Graph::complete(6), 5).unwrap(), 1);
    let p5k5 = Graph::tensor(&Graph::path(5), &Graph::complete(5));
    assert_eq!(pd_lower_bound_zf(&p5k5, 17).unwrap(), 3);
    assert_eq!(pd_lower_bound_zf(&Graph::path(2), 1).unwrap(), 1);
    assert!(pd_lower_bound_zf(&Graph::empty(3), 0).is_err());
    for n in 2..=8 {
        let k = Graph::complete(n);
        let z = solvers::zero_forcing_number(&k).unwrap().value;
        let pd = solvers::power_domination_number(&k).unwrap().value;
        assert_eq!(pd_lower_bound_zf(&k, z).unwrap(), pd);
    }
}

#[test]
fn degree_sum_examples() {
    let k4 = Graph::complete(4);
    assert!(check_degree_sum_bound(&k4, &VertexSet::from_iter(4, [0]), 3).unwrap());
    let c5 = Graph::cycle(5).unwrap();
    assert!(check_degree_sum_bound(&c5, &VertexSet::from_iter(5, [0]), 2).unwrap());
    let sun = Graph::tensor(&Graph::three_sun(), &Graph::complete(3));
    let pds = solvers::power_domination_number(&sun).unwrap().witness;
    assert!(check_degree_sum_bound(&sun, &pds, 7).unwrap());
    let p4 = Graph::path(4);
    assert!(check_degree_sum_bound(&p4, &VertexSet::empty(4), 1).is_err());
}

#[test]
fn budget_overrun_reports_progress() {
    let g = Graph::cartesian(&Graph::cycle(4).unwrap(), &Graph::cycle(5).unwrap());
    match Solver::new(1000).zero_forcing_number(&g) {
        Err(SolveError::BudgetExceeded {
            budget,
            proven_lower,
            projected,
            ..
        }) => {
            assert_eq!(budget, 1000);
            assert!(projected > 1000);
            assert!(proven_lower >= g.min_degree() && proven_lower <= 8);
        }
        other => panic!("{other:?}"),
    }
}
