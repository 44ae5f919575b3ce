//! Standard zero forcing, skew zero forcing, and power domination
//! closures.
//!
//! Every closure keeps, for each vertex, the number of white neighbors.
//! A vertex may force once that count reaches one (standard rule: only
//! blue vertices; skew rule: any vertex). Applicable forcers sit in a
//! min-heap so the force with the smallest `(forcer, forced)` pair always
//! runs first; each forcer has exactly one target, so ordering by forcer
//! is enough. The final set does not depend on this order.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// A blue vertex with exactly one white neighbor forces it.
    Standard,
    /// Any vertex with exactly one white neighbor forces it.
    Skew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForceEvent {
    pub forcer: usize,
    pub forced: usize,
    /// The forcer was white when it forced (skew rule only).
    pub white_force: bool,
}

/// Result of a closure run: the starting set, the forces in the order
/// they were performed, and the final blue set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chronology {
    pub rule: Rule,
    pub initial: VertexSet,
    pub events: Vec<ForceEvent>,
    pub final_set: VertexSet,
}

impl Chronology {
    pub fn is_complete(&self) -> bool {
        self.final_set.is_full()
    }

    /// Replays the events from `initial` on `g`, checking each force is
    /// legal at its turn under the recorded rule and that the replay ends
    /// at `final_set`.
    pub fn replay_is_valid(&self, g: &Graph) -> bool {
        let mut blue = self.initial.clone();
        for e in &self.events {
            if !g.adjacent(e.forcer, e.forced) || blue.contains(e.forced) {
                return false;
            }
            let whites = g
                .neighbors(e.forcer)
                .iter()
                .filter(|&&u| !blue.contains(u))
                .count();
            if whites != 1 {
                return false;
            }
            let forcer_blue = blue.contains(e.forcer);
            match self.rule {
                Rule::Standard if !forcer_blue || e.white_force => return false,
                Rule::Skew if e.white_force == forcer_blue => return false,
                _ => {}
            }
            blue.insert(e.forced);
        }
        blue == self.final_set
    }
}

fn canonical_closure(g: &Graph, initial: &VertexSet, rule: Rule) -> Chronology {
    let n = g.order();
    let mut blue: Vec<bool> = (0..n).map(|v| initial.contains(v)).collect();
    let mut white_count: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&u| !blue[u]).count())
        .collect();
    let can_force = |v: usize, blue: &[bool], wc: &[usize]| {
        wc[v] == 1 && (rule == Rule::Skew || blue[v])
    };
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| can_force(v, &blue, &white_count))
        .map(Reverse)
        .collect();
    let mut events = Vec::new();
    while let Some(Reverse(v)) = heap.pop() {
        if !can_force(v, &blue, &white_count) {
            continue;
        }
        let w = *g
            .neighbors(v)
            .iter()
            .find(|&&u| !blue[u])
            .expect("white count says one white neighbor");
        events.push(ForceEvent {
            forcer: v,
            forced: w,
            white_force: !blue[v],
        });
        blue[w] = true;
        for &u in g.neighbors(w) {
            white_count[u] -= 1;
            if can_force(u, &blue, &white_count) {
                heap.push(Reverse(u));
            }
        }
        if can_force(w, &blue, &white_count) {
            heap.push(Reverse(w));
        }
    }
    Chronology {
        rule,
        initial: initial.clone(),
        events,
        final_set: VertexSet::from_iter(n, (0..n).filter(|&v| blue[v])),
    }
}

/// Standard zero forcing closure of `b`.
pub fn zf_closure(g: &Graph, b: &VertexSet) -> Chronology {
    canonical_closure(g, b, Rule::Standard)
}

/// Skew zero forcing closure of `b` (`b` may be empty).
pub fn skew_zf_closure(g: &Graph, b: &VertexSet) -> Chronology {
    canonical_closure(g, b, Rule::Skew)
}

/// Power domination: dominate `N[S]`, then zero force. The chronology
/// starts at `N[S]` and lists only the propagation forces.
pub fn pd_closure(g: &Graph, s: &VertexSet) -> Chronology {
    canonical_closure(g, &g.closed_neighborhood(s), Rule::Standard)
}

pub fn is_zero_forcing(g: &Graph, b: &VertexSet) -> bool {
    Propagator::new(g).forces_all(b.iter(), Rule::Standard)
}

pub fn is_skew_zero_forcing(g: &Graph, b: &VertexSet) -> bool {
    Propagator::new(g).forces_all(b.iter(), Rule::Skew)
}

pub fn is_power_dominating(g: &Graph, s: &VertexSet) -> bool {
    Propagator::new(g).forces_all(g.closed_neighborhood(s).iter(), Rule::Standard)
}

/// Runs a closure choosing the next force through `choose`, which is
/// given the number of currently applicable forces and returns the
/// index of the one to perform. Applicable forces are rescanned from
/// scratch every step, so this is quadratic; it exists to check that
/// closures do not depend on force order.
pub fn closure_in_order<F>(g: &Graph, initial: &VertexSet, rule: Rule, mut choose: F) -> Chronology
where
    F: FnMut(usize) -> usize,
{
    let mut blue = initial.clone();
    let mut events = Vec::new();
    loop {
        let mut options = Vec::new();
        for v in 0..g.order() {
            if rule == Rule::Standard && !blue.contains(v) {
                continue;
            }
            let mut whites = g.neighbors(v).iter().filter(|&&u| !blue.contains(u));
            if let (Some(&w), None) = (whites.next(), whites.next()) {
                options.push(ForceEvent {
                    forcer: v,
                    forced: w,
                    white_force: !blue.contains(v),
                });
            }
        }
        if options.is_empty() {
            break;
        }
        let pick = options[choose(options.len()) % options.len()];
        blue.insert(pick.forced);
        events.push(pick);
    }
    Chronology {
        rule,
        initial: initial.clone(),
        events,
        final_set: blue,
    }
}

/// Reusable buffers for repeated "does this set force everything"
/// queries on one graph. Used by the exhaustive solvers.
pub struct Propagator<'g> {
    g: &'g Graph,
    blue: Vec<bool>,
    white_count: Vec<u32>,
    stack: Vec<usize>,
}

impl<'g> Propagator<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Propagator {
            g,
            blue: vec![false; n],
            white_count: vec![0; n],
            stack: Vec::with_capacity(n),
        }
    }

    /// Number of vertices blue at the end of the closure of `seeds`.
    pub fn closure_size<I>(&mut self, seeds: I, rule: Rule) -> usize
    where
        I: IntoIterator<Item = usize>,
    {
        let g = self.g;
        let n = g.order();
        self.blue.iter_mut().for_each(|b| *b = false);
        let mut count = 0;
        for v in seeds {
            if !self.blue[v] {
                self.blue[v] = true;
                count += 1;
            }
        }
        for v in 0..n {
            self.white_count[v] = g.neighbors(v).iter().filter(|&&u| !self.blue[u]).count() as u32;
        }
        self.stack.clear();
        for v in 0..n {
            if self.white_count[v] == 1 && (rule == Rule::Skew || self.blue[v]) {
                self.stack.push(v);
            }
        }
        while let Some(v) = self.stack.pop() {
            if self.white_count[v] != 1 || (rule == Rule::Standard && !self.blue[v]) {
                continue;
            }
            let w = *g
                .neighbors(v)
                .iter()
                .find(|&&u| !self.blue[u])
                .expect("one white neighbor");
            self.blue[w] = true;
            count += 1;
            for &u in g.neighbors(w) {
                self.white_count[u] -= 1;
                if self.white_count[u] == 1 && (rule == Rule::Skew || self.blue[u]) {
                    self.stack.push(u);
                }
            }
            if self.white_count[w] == 1 {
                self.stack.push(w);
            }
        }
        count
    }

    pub fn forces_all<I>(&mut self, seeds: I, rule: Rule) -> bool
    where
        I: IntoIterator<Item = usize>,
    {
        self.closure_size(seeds, rule) == self.g.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    #[test]
    fn path_endpoint_forces_everything() {
        let p = Graph::path(5);
        let c = zf_closure(&p, &set(5, &[0]));
        assert!(c.is_complete());
        assert_eq!(c.events.len(), 4);
        assert!(c.replay_is_valid(&p));
        assert!(is_zero_forcing(&p, &set(5, &[0])));
    }

    #[test]
    fn complete_graph_blocks_until_n_minus_one() {
        let k = Graph::complete(4);
        assert_eq!(zf_closure(&k, &set(4, &[0, 1])).final_set, set(4, &[0, 1]));
        assert!(zf_closure(&k, &set(4, &[0, 1, 2])).is_complete());
    }

    #[test]
    fn cycle_needs_two() {
        let c = Graph::cycle(4).unwrap();
        assert!(!is_zero_forcing(&c, &set(4, &[0])));
        assert!(is_zero_forcing(&c, &set(4, &[0, 1])));
    }

    #[test]
    fn skew_from_nothing() {
        let p2 = Graph::path(2);
        let c = skew_zf_closure(&p2, &VertexSet::empty(2));
        assert!(c.is_complete());
        assert!(c.events[0].white_force);
        assert!(c.replay_is_valid(&p2));
        assert!(skew_zf_closure(&Graph::path(6), &VertexSet::empty(6)).is_complete());
        let sun = Graph::three_sun();
        let c = skew_zf_closure(&sun, &VertexSet::empty(6));
        assert!(c.is_complete());
        assert!(c.replay_is_valid(&sun));
        assert!(!skew_zf_closure(&Graph::path(5), &VertexSet::empty(5)).is_complete());
    }

    #[test]
    fn skew_chronology_on_p6() {
        // the first three forces are white vertex forces, the rest are not
        let c = skew_zf_closure(&Graph::path(6), &VertexSet::empty(6));
        let flags: Vec<bool> = c.events.iter().map(|e| e.white_force).collect();
        assert_eq!(flags, vec![true, true, true, false, false, false]);
    }

    #[test]
    fn power_domination_basics() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(pd_closure(&c5, &set(5, &[0])).is_complete());
        let g = Graph::three_sun();
        let all = pd_closure(&g, &VertexSet::full(6));
        assert!(all.is_complete() && all.events.is_empty());
        assert!(is_power_dominating(&Graph::path(7), &set(7, &[3])));
        let k9 = Graph::complete(9);
        assert!((0..9).all(|v| is_power_dominating(&k9, &set(9, &[v]))));
        let pk = Graph::tensor(&Graph::path(2), &Graph::complete(3));
        assert!(is_power_dominating(&pk, &set(6, &[0])));
    }

    #[test]
    fn standard_replay_rejects_white_forcer() {
        let p = Graph::path(3);
        let bogus = Chronology {
            rule: Rule::Standard,
            initial: VertexSet::empty(3),
            events: vec![ForceEvent { forcer: 0, forced: 1, white_force: false }],
            final_set: set(3, &[1]),
        };
        assert!(!bogus.replay_is_valid(&p));
    }

    #[test]
    fn in_order_matches_canonical_when_choosing_first() {
        let g = Graph::three_sun();
        let a = closure_in_order(&g, &VertexSet::empty(6), Rule::Skew, |_| 0);
        let b = skew_zf_closure(&g, &VertexSet::empty(6));
        assert_eq!(a.final_set, b.final_set);
        assert_eq!(a.events, b.events);
    }
}
