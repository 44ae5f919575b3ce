//! The `compute` report: exact values where the budget allows, brackets
//! otherwise, plus the general lower bounds and nullity certificates.
//!
//! The serialized form is one `key: value` pair per line in a fixed
//! order. Wall times are only emitted on request so that repeated runs
//! produce identical output.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::constructions::{self, ConstructionOutput};
use crate::expr::{GraphExpr, Product};
use crate::graph::Graph;
use crate::linalg::{self, Family, RationalMatrix};
use crate::solvers::{self, Invariant, SolveError, Solver};
use crate::vertex_set::VertexSet;

pub const ALL_INVARIANTS: [Invariant; 5] = [
    Invariant::ZeroForcing,
    Invariant::SkewZeroForcing,
    Invariant::PowerDomination,
    Invariant::Domination,
    Invariant::TotalDomination,
];

pub fn key(inv: Invariant) -> &'static str {
    match inv {
        Invariant::ZeroForcing => "zf",
        Invariant::SkewZeroForcing => "skew",
        Invariant::PowerDomination => "pd",
        Invariant::Domination => "dom",
        Invariant::TotalDomination => "tdom",
    }
}

pub fn parse_invariant(s: &str) -> Result<Invariant, String> {
    ALL_INVARIANTS
        .into_iter()
        .find(|&inv| key(inv) == s)
        .ok_or_else(|| format!("unknown invariant {s:?} (expected zf, skew, pd, dom or tdom)"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
        }
    }
}

impl FromStr for MatrixKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "adjacency" => Ok(MatrixKind::Adjacency),
            "laplacian" => Ok(MatrixKind::Laplacian),
            other => Err(format!("unknown matrix {other:?} (expected adjacency or laplacian)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ComputeOptions {
    pub invariants: Vec<Invariant>,
    pub budget: u64,
    pub matrix: Option<MatrixKind>,
    pub timings: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            invariants: ALL_INVARIANTS.to_vec(),
            budget: solvers::DEFAULT_BUDGET,
            matrix: None,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Exact {
        value: usize,
        witness: VertexSet,
        work: u64,
        /// `search`, `certificate` (nullity meets a construction) or
        /// `bounds` (lower bound meets a verified set).
        method: &'static str,
    },
    Bounded {
        lower: usize,
        upper: usize,
        upper_witness: Option<VertexSet>,
    },
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct Field {
    pub invariant: Invariant,
    pub status: Status,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullityBound {
    pub matrix: MatrixKind,
    pub nullity: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexBound {
    pub domination: usize,
    pub total_domination: Option<usize>,
    pub second_factor_pd_is_one: bool,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateInfo {
    pub family: Family,
    pub t: usize,
    pub n: usize,
    pub nullity: usize,
    pub construction: usize,
    pub construction_valid: bool,
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub descriptor: String,
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub fields: Vec<Field>,
    /// `⌈Z/Δ⌉` from the exact `Z` or its proven lower bound.
    pub pd_from_zf: Option<usize>,
    pub pd_from_nullity: Option<NullityBound>,
    pub lex: Option<LexBound>,
    pub certificate: Option<CertificateInfo>,
    pub notes: Vec<String>,
    pub timings: bool,
}

fn tensor_complete_params(e: &GraphExpr) -> Option<(Family, usize, usize)> {
    let GraphExpr::Product(Product::Tensor, a, b) = e else {
        return None;
    };
    let GraphExpr::Complete(n) = **b else {
        return None;
    };
    let (family, t) = match **a {
        GraphExpr::Path(t) if t >= 2 => (Family::Path, t),
        GraphExpr::Cycle(t) if t >= 3 => (Family::Cycle, t),
        _ => return None,
    };
    (n >= 3).then_some((family, t, n))
}

fn lex_factors(e: &GraphExpr) -> Option<(&GraphExpr, &GraphExpr)> {
    match e {
        GraphExpr::Product(Product::Lex, a, b) => Some((a, b)),
        _ => None,
    }
}

/// Tightest verified upper bound among the candidates.
fn best_upper(g: &Graph, kind: Invariant, sets: Vec<VertexSet>, extra: Option<usize>) -> (usize, Option<VertexSet>) {
    let mut best: Option<VertexSet> = solvers::greedy_minimal_set(g, kind, &VertexSet::full(g.order()));
    for s in sets {
        if solvers::satisfies(g, kind, &s) && best.as_ref().is_none_or(|b| s.len() < b.len()) {
            best = Some(s);
        }
    }
    let from_set = best.as_ref().map_or(usize::MAX, VertexSet::len);
    match extra {
        Some(x) if x < from_set => (x, None),
        _ => (from_set, best),
    }
}

struct Ctx<'a> {
    g: &'a Graph,
    solver: Solver,
    zf_construction: Option<ConstructionOutput>,
    pd_construction: Option<ConstructionOutput>,
    nullity: Option<usize>,
    lex_bound: Option<usize>,
}

impl Ctx<'_> {
    fn from_solver(
        &self,
        kind: Invariant,
        result: Result<solvers::SolveResult, SolveError>,
        lower: usize,
        sets: Vec<VertexSet>,
        extra_upper: Option<usize>,
    ) -> Status {
        match result {
            Ok(r) => Status::Exact {
                value: r.value,
                witness: r.witness,
                work: r.work,
                method: "search",
            },
            Err(SolveError::BudgetExceeded { proven_lower, .. }) => {
                let lower = lower.max(proven_lower);
                let (upper, upper_witness) = best_upper(self.g, kind, sets, extra_upper);
                match upper_witness {
                    Some(w) if w.len() == lower => Status::Exact {
                        value: lower,
                        witness: w,
                        work: 0,
                        method: "bounds",
                    },
                    _ => Status::Bounded {
                        lower,
                        upper,
                        upper_witness,
                    },
                }
            }
            Err(SolveError::Infeasible(msg)) => Status::Skipped(msg),
        }
    }

    fn zero_forcing(&self) -> Status {
        if let (Some(c), Some(nullity)) = (&self.zf_construction, self.nullity) {
            if c.verify() && c.set.len() == nullity {
                return Status::Exact {
                    value: nullity,
                    witness: c.set.clone(),
                    work: 0,
                    method: "certificate",
                };
            }
        }
        let lower = self.g.min_degree().max(self.nullity.unwrap_or(0));
        let sets = self.zf_construction.iter().map(|c| c.set.clone()).collect();
        self.from_solver(
            Invariant::ZeroForcing,
            self.solver.zero_forcing_number(self.g),
            lower,
            sets,
            self.lex_bound,
        )
    }

    fn power_domination(&self, lower: usize) -> Status {
        let g = self.g;
        if !g.has_edge() {
            return self.from_solver(
                Invariant::PowerDomination,
                self.solver.power_domination_number(g),
                0,
                Vec::new(),
                None,
            );
        }
        let lower = lower.max(g.isolated_vertices().len() + 1);
        let sets: Vec<VertexSet> = self.pd_construction.iter().map(|c| c.set.clone()).collect();
        if let Some(s) = sets.iter().find(|s| s.len() == lower) {
            if solvers::satisfies(g, Invariant::PowerDomination, s) {
                return Status::Exact {
                    value: lower,
                    witness: s.clone(),
                    work: 0,
                    method: "bounds",
                };
            }
        }
        self.from_solver(
            Invariant::PowerDomination,
            self.solver.power_domination_number_from(g, lower),
            lower,
            sets,
            None,
        )
    }
}

fn lower_of(status: &Status) -> Option<usize> {
    match status {
        Status::Exact { value, .. } => Some(*value),
        Status::Bounded { lower, .. } => Some(*lower),
        Status::Skipped(_) => None,
    }
}

fn matrix_for(g: &Graph, kind: MatrixKind) -> RationalMatrix {
    match kind {
        MatrixKind::Adjacency => RationalMatrix::adjacency(g),
        MatrixKind::Laplacian => RationalMatrix::laplacian(g),
    }
}

fn lex_bound(a: &GraphExpr, b: &GraphExpr, solver: Solver, notes: &mut Vec<String>) -> Option<LexBound> {
    let (g, h) = match (a.build(), b.build()) {
        (Ok(g), Ok(h)) => (g, h),
        _ => return None,
    };
    if !g.isolated_vertices().is_empty() {
        notes.push("lexicographic bound skipped: first factor has an isolated vertex".into());
        return None;
    }
    let run = || -> Result<LexBound, SolveError> {
        let pd_h = solver.power_domination_number(&h)?.value;
        let domination = solver.domination_number(&g)?.value;
        let total = solver.total_domination_number(&g)?.value;
        Ok(LexBound {
            domination,
            total_domination: Some(total),
            second_factor_pd_is_one: pd_h == 1,
            bound: constructions::lex_zf_bound(&g, &h, domination, total, pd_h == 1),
        })
    };
    match run() {
        Ok(b) => Some(b),
        Err(e) => {
            notes.push(format!("lexicographic bound skipped: {e}"));
            None
        }
    }
}

pub fn compute(expr: &GraphExpr, g: &Graph, opts: &ComputeOptions) -> BoundReport {
    let solver = Solver::new(opts.budget);
    let mut notes = Vec::new();
    let tensor = tensor_complete_params(expr);

    let mut certificate = None;
    let mut zf_construction = None;
    let mut nullity = None;
    let mut pd_construction = None;
    if let Some((family, t, n)) = tensor {
        match constructions::tensor_complete_sandwich(family, t, n) {
            Ok(s) => {
                certificate = Some(CertificateInfo {
                    family,
                    t,
                    n,
                    nullity: s.nullity,
                    construction: s.construction.set.len(),
                    construction_valid: s.construction.verify(),
                });
                nullity = Some(s.nullity);
                zf_construction = Some(s.construction);
            }
            Err(e) => notes.push(format!("certificate unavailable: {e}")),
        }
        pd_construction = constructions::tensor_complete_pds(family, t, n).ok();
    }
    let lex = lex_factors(expr).and_then(|(a, b)| lex_bound(a, b, solver, &mut notes));

    let ctx = Ctx {
        g,
        solver,
        zf_construction,
        pd_construction,
        nullity,
        lex_bound: lex.as_ref().map(|l| l.bound),
    };

    let wanted = |inv: Invariant| opts.invariants.contains(&inv);
    let mut fields = Vec::new();
    let mut timed = |inv: Invariant, f: &mut dyn FnMut() -> Status| {
        if !wanted(inv) {
            fields.push(Field {
                invariant: inv,
                status: Status::Skipped("not requested".into()),
                elapsed: Duration::ZERO,
            });
            return;
        }
        let start = Instant::now();
        let status = f();
        fields.push(Field {
            invariant: inv,
            status,
            elapsed: start.elapsed(),
        });
    };

    let mut zf_lower = None;
    timed(Invariant::ZeroForcing, &mut || {
        let s = ctx.zero_forcing();
        zf_lower = lower_of(&s);
        s
    });
    timed(Invariant::SkewZeroForcing, &mut || {
        ctx.from_solver(
            Invariant::SkewZeroForcing,
            ctx.solver.skew_zero_forcing_number(g),
            0,
            Vec::new(),
            None,
        )
    });

    let pd_from_zf = zf_lower.and_then(|z| solvers::pd_lower_bound_zf(g, z).ok());
    let pd_from_nullity = opts.matrix.and_then(|kind| {
        let a = matrix_for(g, kind);
        match linalg::pd_lower_bound_nullity(g, &a) {
            Ok(bound) => Some(NullityBound {
                matrix: kind,
                nullity: a.nullity(),
                bound,
            }),
            Err(e) => {
                notes.push(format!("{} bound skipped: {e}", kind.name()));
                None
            }
        }
    });
    let pd_lower = pd_from_zf
        .unwrap_or(0)
        .max(pd_from_nullity.as_ref().map_or(0, |b| b.bound));
    timed(Invariant::PowerDomination, &mut || ctx.power_domination(pd_lower));
    timed(Invariant::Domination, &mut || {
        ctx.from_solver(
            Invariant::Domination,
            ctx.solver.domination_number(g),
            0,
            Vec::new(),
            None,
        )
    });
    timed(Invariant::TotalDomination, &mut || {
        ctx.from_solver(
            Invariant::TotalDomination,
            ctx.solver.total_domination_number(g),
            0,
            Vec::new(),
            None,
        )
    });

    BoundReport {
        descriptor: expr.to_string(),
        order: g.order(),
        size: g.size(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        fields,
        pd_from_zf,
        pd_from_nullity,
        lex,
        certificate,
        notes,
        timings: opts.timings,
    }
}

impl BoundReport {
    pub fn field(&self, inv: Invariant) -> Option<&Field> {
        self.fields.iter().find(|f| f.invariant == inv)
    }

    pub fn exact_value(&self, inv: Invariant) -> Option<usize> {
        match self.field(inv)?.status {
            Status::Exact { value, .. } => Some(value),
            _ => None,
        }
    }

    /// Ordered `(key, value)` pairs of the serialized report.
    pub fn entries(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = Vec::new();
        let mut put = |k: &str, v: String| out.push((k.to_string(), v));
        put("graph", self.descriptor.clone());
        put("order", self.order.to_string());
        put("size", self.size.to_string());
        put("min_degree", self.min_degree.to_string());
        put("max_degree", self.max_degree.to_string());
        for f in &self.fields {
            let k = key(f.invariant);
            match &f.status {
                Status::Exact {
                    value,
                    witness,
                    work,
                    method,
                } => {
                    put(&format!("{k}.status"), "exact".into());
                    put(&format!("{k}.value"), value.to_string());
                    put(&format!("{k}.method"), method.to_string());
                    put(&format!("{k}.witness"), witness.to_string());
                    put(&format!("{k}.work"), work.to_string());
                }
                Status::Bounded {
                    lower,
                    upper,
                    upper_witness,
                } => {
                    put(&format!("{k}.status"), "bounded".into());
                    put(&format!("{k}.lower"), lower.to_string());
                    put(&format!("{k}.upper"), upper.to_string());
                    if let Some(w) = upper_witness {
                        put(&format!("{k}.upper_witness"), w.to_string());
                    }
                }
                Status::Skipped(reason) => {
                    put(&format!("{k}.status"), "skipped".into());
                    put(&format!("{k}.reason"), reason.clone());
                }
            }
            if self.timings && !matches!(f.status, Status::Skipped(_)) {
                put(&format!("{k}.time_ms"), format!("{:.3}", f.elapsed.as_secs_f64() * 1e3));
            }
        }
        if let Some(b) = self.pd_from_zf {
            put("bound.pd_from_zf", b.to_string());
        }
        if let Some(b) = &self.pd_from_nullity {
            put("bound.pd_from_nullity", b.bound.to_string());
            put("bound.pd_from_nullity.matrix", b.matrix.name().into());
            put("bound.pd_from_nullity.nullity", b.nullity.to_string());
        }
        if let Some(l) = &self.lex {
            put("bound.lex_zf", l.bound.to_string());
            put("bound.lex_zf.domination", l.domination.to_string());
            if let Some(t) = l.total_domination {
                put("bound.lex_zf.total_domination", t.to_string());
            }
            put("bound.lex_zf.second_factor_pd_is_one", l.second_factor_pd_is_one.to_string());
        }
        if let Some(c) = &self.certificate {
            put("certificate.family", c.family.name().into());
            put("certificate.t", c.t.to_string());
            put("certificate.n", c.n.to_string());
            put("certificate.nullity", c.nullity.to_string());
            put("certificate.construction", c.construction.to_string());
            put("certificate.construction_valid", c.construction_valid.to_string());
            put(
                "certificate.equal",
                (c.construction_valid && c.nullity == c.construction).to_string(),
            );
        }
        for (i, n) in self.notes.iter().enumerate() {
            put(&format!("note.{i}"), n.clone());
        }
        out
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.entries() {
            let _ = writeln!(s, "{k}: {v}");
        }
        s
    }

    /// Internal consistency problems: exact witnesses that fail their
    /// predicate, and lower bounds above upper bounds.
    pub fn violations(&self, g: &Graph) -> Vec<String> {
        fn bracket(bad: &mut Vec<String>, inv: Invariant, lowers: &[(&str, usize)], uppers: &[(&str, usize)]) {
            for (ln, l) in lowers {
                for (un, u) in uppers {
                    if l > u {
                        bad.push(format!("{}: {ln} {l} exceeds {un} {u}", key(inv)));
                    }
                }
            }
        }
        let mut bad = Vec::new();
        for f in &self.fields {
            let (mut lowers, mut uppers) = (Vec::new(), Vec::new());
            match &f.status {
                Status::Exact { value, witness, .. } => {
                    if witness.len() != *value || !solvers::satisfies(g, f.invariant, witness) {
                        bad.push(format!("{}: witness {witness} does not verify", key(f.invariant)));
                    }
                    lowers.push(("value", *value));
                    uppers.push(("value", *value));
                }
                Status::Bounded {
                    lower,
                    upper,
                    upper_witness,
                } => {
                    if let Some(w) = upper_witness {
                        if w.len() != *upper || !solvers::satisfies(g, f.invariant, w) {
                            bad.push(format!("{}: upper witness {w} does not verify", key(f.invariant)));
                        }
                    }
                    lowers.push(("lower", *lower));
                    uppers.push(("upper", *upper));
                }
                Status::Skipped(_) => continue,
            }
            match f.invariant {
                Invariant::ZeroForcing => {
                    lowers.push(("minimum degree", self.min_degree));
                    if let Some(c) = &self.certificate {
                        lowers.push(("nullity", c.nullity));
                        if c.construction_valid {
                            uppers.push(("construction", c.construction));
                        }
                    }
                    if let Some(l) = &self.lex {
                        uppers.push(("lexicographic bound", l.bound));
                    }
                }
                Invariant::PowerDomination => {
                    if let Some(b) = self.pd_from_zf {
                        lowers.push(("zero forcing bound", b));
                    }
                    if let Some(b) = &self.pd_from_nullity {
                        lowers.push(("nullity bound", b.bound));
                    }
                }
                _ => {}
            }
            bracket(&mut bad, f.invariant, &lowers, &uppers);
        }
        if let (Some(pd), Some(dom)) = (
            self.exact_value(Invariant::PowerDomination),
            self.exact_value(Invariant::Domination),
        ) {
            if pd > dom {
                bad.push(format!("pd {pd} exceeds dom {dom}"));
            }
        }
        bad
    }
}
