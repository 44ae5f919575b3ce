//! Exact minimum-cardinality solvers by lexicographic subset sweep.
//!
//! Every solver tries cardinalities in increasing order and, within one
//! cardinality, enumerates combinations in lexicographic order. The first
//! passing set is therefore the lexicographically smallest minimum set.
//! A work budget (number of candidate subsets) caps the sweep; the check
//! happens before a cardinality level starts, using the level's full
//! combination count.

use thiserror::Error;

use crate::graph::Graph;
use crate::propagation::{Propagator, Rule};
use crate::vertex_set::VertexSet;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// Sweeping the next cardinality would pass the budget. Every
    /// cardinality below `proven_lower` was exhausted without success.
    #[error("budget of {budget} subsets exceeded at cardinality {cardinality} (projected {projected}); value is at least {proven_lower}")]
    BudgetExceeded {
        budget: u64,
        cardinality: usize,
        projected: u128,
        proven_lower: usize,
    },
    #[error("infeasible: {0}")]
    Infeasible(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    /// Candidate subsets examined.
    pub work: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    ZeroForcing,
    SkewZeroForcing,
    PowerDomination,
    Domination,
    TotalDomination,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::ZeroForcing => "zero forcing",
            Invariant::SkewZeroForcing => "skew zero forcing",
            Invariant::PowerDomination => "power domination",
            Invariant::Domination => "domination",
            Invariant::TotalDomination => "total domination",
        }
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic
/// order; returns false after the last one.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Membership test for one invariant, reusing buffers across calls.
struct Tester<'g> {
    g: &'g Graph,
    kind: Invariant,
    prop: Propagator<'g>,
    mark: Vec<bool>,
}

impl<'g> Tester<'g> {
    fn new(g: &'g Graph, kind: Invariant) -> Self {
        Tester {
            g,
            kind,
            prop: Propagator::new(g),
            mark: vec![false; g.order()],
        }
    }

    fn dominated(&mut self, set: &[usize], closed: bool) -> bool {
        self.mark.iter_mut().for_each(|m| *m = false);
        for &v in set {
            if closed {
                self.mark[v] = true;
            }
            for &u in self.g.neighbors(v) {
                self.mark[u] = true;
            }
        }
        self.mark.iter().all(|&m| m)
    }

    fn passes(&mut self, set: &[usize]) -> bool {
        match self.kind {
            Invariant::ZeroForcing => self.prop.forces_all(set.iter().copied(), Rule::Standard),
            Invariant::SkewZeroForcing => self.prop.forces_all(set.iter().copied(), Rule::Skew),
            Invariant::PowerDomination => {
                let g = self.g;
                let seeds = set
                    .iter()
                    .flat_map(|&v| std::iter::once(v).chain(g.neighbors(v).iter().copied()));
                self.prop.forces_all(seeds, Rule::Standard)
            }
            Invariant::Domination => self.dominated(set, true),
            Invariant::TotalDomination => self.dominated(set, false),
        }
    }
}

/// Checks one set against an invariant's defining predicate.
pub fn satisfies(g: &Graph, kind: Invariant, set: &VertexSet) -> bool {
    Tester::new(g, kind).passes(&set.to_vec())
}

#[derive(Debug, Clone, Copy)]
pub struct Solver {
    pub budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Solver {
    pub fn new(budget: u64) -> Self {
        Solver { budget }
    }

    /// Core sweep. `forced` vertices belong to every candidate; the free
    /// part ranges over `pool`. Returns the first passing set at the
    /// smallest cardinality `≥ start` (counting forced vertices), or all
    /// passing sets at that cardinality when `collect_all` is set.
    fn sweep(
        &self,
        g: &Graph,
        kind: Invariant,
        forced: &[usize],
        pool: &[usize],
        start: usize,
        collect_all: bool,
    ) -> Result<(Vec<VertexSet>, usize, u64), SolveError> {
        let n = g.order();
        let mut tester = Tester::new(g, kind);
        let mut work: u64 = 0;
        let first_free = start.saturating_sub(forced.len());
        let mut candidate = Vec::with_capacity(n);
        for k in first_free..=pool.len() {
            let level = binomial(pool.len(), k);
            let projected = work as u128 + level;
            if projected > self.budget as u128 {
                return Err(SolveError::BudgetExceeded {
                    budget: self.budget,
                    cardinality: forced.len() + k,
                    projected,
                    proven_lower: forced.len() + k,
                });
            }
            let mut found = Vec::new();
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                work += 1;
                candidate.clear();
                candidate.extend_from_slice(forced);
                candidate.extend(idx.iter().map(|&i| pool[i]));
                if tester.passes(&candidate) {
                    found.push(VertexSet::from_iter(n, candidate.iter().copied()));
                    if !collect_all {
                        break;
                    }
                }
                if !next_combination(&mut idx, pool.len()) {
                    break;
                }
            }
            if !found.is_empty() {
                return Ok((found, forced.len() + k, work));
            }
        }
        Err(SolveError::Infeasible(format!(
            "no {} set exists",
            kind.name()
        )))
    }

    fn solve_from(&self, g: &Graph, kind: Invariant, start: usize) -> Result<SolveResult, SolveError> {
        let mut forced = Vec::new();
        let mut pool: Vec<usize> = (0..g.order()).collect();
        match kind {
            Invariant::TotalDomination => {
                if let Some(&v) = g.isolated_vertices().first() {
                    return Err(SolveError::Infeasible(format!(
                        "vertex {v} is isolated, so no total dominating set exists"
                    )));
                }
            }
            Invariant::PowerDomination | Invariant::Domination => {
                // an isolated vertex is only covered by itself
                forced = g.isolated_vertices();
                pool.retain(|v| !forced.contains(v));
            }
            _ => {}
        }
        let (mut sets, value, work) = self.sweep(g, kind, &forced, &pool, start, false)?;
        Ok(SolveResult {
            value,
            witness: sets.remove(0),
            work,
        })
    }

    /// `Z(G)`. The sweep starts at `δ(G)`.
    pub fn zero_forcing_number(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.solve_from(g, Invariant::ZeroForcing, g.min_degree())
    }

    /// `Z⁻(G)`, which may be zero.
    pub fn skew_zero_forcing_number(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.solve_from(g, Invariant::SkewZeroForcing, 0)
    }

    /// `γ_P(G)`. An edgeless graph needs every vertex.
    pub fn power_domination_number(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.power_domination_number_from(g, 1)
    }

    /// `γ_P(G)` with a known lower bound (for instance `⌈Z/Δ⌉`) used as
    /// the starting cardinality.
    pub fn power_domination_number_from(
        &self,
        g: &Graph,
        lower: usize,
    ) -> Result<SolveResult, SolveError> {
        if g.order() == 0 {
            return Ok(SolveResult {
                value: 0,
                witness: VertexSet::empty(0),
                work: 0,
            });
        }
        if !g.has_edge() {
            return Ok(SolveResult {
                value: g.order(),
                witness: VertexSet::full(g.order()),
                work: 0,
            });
        }
        let isolated = g.isolated_vertices().len();
        self.solve_from(g, Invariant::PowerDomination, lower.max(isolated + 1))
    }

    pub fn domination_number(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.solve_from(g, Invariant::Domination, 0)
    }

    pub fn total_domination_number(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.solve_from(g, Invariant::TotalDomination, 0)
    }

    pub fn solve(&self, g: &Graph, kind: Invariant) -> Result<SolveResult, SolveError> {
        match kind {
            Invariant::ZeroForcing => self.zero_forcing_number(g),
            Invariant::SkewZeroForcing => self.skew_zero_forcing_number(g),
            Invariant::PowerDomination => self.power_domination_number(g),
            Invariant::Domination => self.domination_number(g),
            Invariant::TotalDomination => self.total_domination_number(g),
        }
    }

    /// Every minimum power dominating set, in lexicographic order.
    pub fn all_minimum_power_dominating_sets(
        &self,
        g: &Graph,
    ) -> Result<Vec<VertexSet>, SolveError> {
        if !g.has_edge() {
            return Ok(vec![VertexSet::full(g.order())]);
        }
        let forced = g.isolated_vertices();
        let pool: Vec<usize> = (0..g.order()).filter(|v| !forced.contains(v)).collect();
        let start = forced.len() + 1;
        self.sweep(g, Invariant::PowerDomination, &forced, &pool, start, true)
            .map(|(sets, _, _)| sets)
    }
}

pub fn zero_forcing_number(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().zero_forcing_number(g)
}

pub fn skew_zero_forcing_number(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().skew_zero_forcing_number(g)
}

pub fn power_domination_number(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().power_domination_number(g)
}

pub fn domination_number(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().domination_number(g)
}

pub fn total_domination_number(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().total_domination_number(g)
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `⌈Z / Δ(G)⌉`, a lower bound on `γ_P(G)` for graphs with an edge.
pub fn pd_lower_bound_zf(g: &Graph, z: usize) -> Result<usize, SolveError> {
    match g.max_degree() {
        0 => Err(SolveError::Infeasible(
            "the zero forcing bound needs a graph with an edge".into(),
        )),
        d => Ok(ceil_div(z, d)),
    }
}

/// Verdict of `Z(G) ≤ Σ_{u∈S} deg u` for a power dominating set `S` of a
/// graph without isolated vertices.
pub fn check_degree_sum_bound(g: &Graph, s: &VertexSet, z: usize) -> Result<bool, SolveError> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(SolveError::Infeasible(format!("vertex {v} is isolated")));
    }
    if !satisfies(g, Invariant::PowerDomination, s) {
        return Err(SolveError::Infeasible(format!(
            "{s} is not a power dominating set"
        )));
    }
    let degree_sum: usize = s.iter().map(|u| g.degree(u)).sum();
    Ok(z <= degree_sum)
}

/// Shrinks `start` to an inclusion-minimal set that still satisfies the
/// invariant, dropping vertices from the highest index down. Returns
/// `None` if `start` itself fails. Gives an upper bound when the exact
/// sweep is out of budget.
pub fn greedy_minimal_set(g: &Graph, kind: Invariant, start: &VertexSet) -> Option<VertexSet> {
    let mut tester = Tester::new(g, kind);
    let mut current = start.to_vec();
    if !tester.passes(&current) {
        return None;
    }
    let mut i = current.len();
    while i > 0 {
        i -= 1;
        let removed = current.remove(i);
        if !tester.passes(&current) {
            current.insert(i, removed);
        }
    }
    Some(VertexSet::from_iter(g.order(), current))
}
