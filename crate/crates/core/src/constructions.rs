//! Explicit zero forcing and power dominating sets for tensor and
//! Cartesian products.
//!
//! Nothing here checks its own output. Call [`ConstructionOutput::verify`]
//! (or the propagation predicates directly) to confirm a set does what it
//! claims.

use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{self, Family};
use crate::propagation::{self, Chronology};
use crate::solvers::{self, SolveError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    ZeroForcing,
    PowerDominating,
}

#[derive(Debug, Clone)]
pub struct ConstructionOutput {
    pub host: Graph,
    pub set: VertexSet,
    pub claimed_kind: SetKind,
    pub claimed_cardinality: usize,
    pub source: &'static str,
}

impl ConstructionOutput {
    /// Runs the matching closure on the host graph and checks the size.
    pub fn verify(&self) -> bool {
        let ok = match self.claimed_kind {
            SetKind::ZeroForcing => propagation::is_zero_forcing(&self.host, &self.set),
            SetKind::PowerDominating => propagation::is_power_dominating(&self.host, &self.set),
        };
        ok && self.set.len() == self.claimed_cardinality
    }
}

fn unsupported<T>(msg: impl Into<String>) -> Result<T, ConstructionError> {
    Err(ConstructionError::Unsupported(msg.into()))
}

/// Zero forcing set for `G × K_n` (`n ≥ 4`) of size
/// `(n−2)|G| + 2Z⁻(G)`, built from a minimum skew zero forcing set of `G`.
pub fn tensor_complete_zfs(g: &Graph, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if n < 4 {
        return unsupported(format!("the skew-chronology construction needs n ≥ 4, got {n}"));
    }
    let skew = solvers::skew_zero_forcing_number(g)?;
    tensor_complete_zfs_from(g, n, &skew.witness)
}

/// Same construction from any skew zero forcing set `b`; the result has
/// `|b|·n + (|G|−|b|)(n−2)` vertices.
///
/// Walks the canonical skew chronology of `b`. Copies `U_g` of `K_n`
/// above `g ∈ b` are taken whole. Otherwise a copy gets `n−2` vertices,
/// fixed the first time its base vertex is involved in a force: a
/// standard force `g → w` gives `U_w` its `n−2` smallest coordinates,
/// and a white vertex force `g → w` gives `U_g` everything except
/// coordinates `{0,1}` and `U_w` everything except `{2,3}`, so each
/// associate pair across the two copies keeps a member.
pub fn tensor_complete_zfs_from(
    g: &Graph,
    n: usize,
    b: &VertexSet,
) -> Result<ConstructionOutput, ConstructionError> {
    if n < 4 {
        return unsupported(format!("the skew-chronology construction needs n ≥ 4, got {n}"));
    }
    let chron: Chronology = propagation::skew_zf_closure(g, b);
    if !chron.is_complete() {
        return unsupported(format!("{b} is not a skew zero forcing set"));
    }
    let order = g.order();
    let host = Graph::tensor(g, &Graph::complete(n));
    let mut set = VertexSet::empty(order * n);
    let mut assigned = vec![false; order];
    let take = |v: usize, omit: &[usize], set: &mut VertexSet| {
        for h in (0..n).filter(|h| !omit.contains(h)) {
            set.insert(v * n + h);
        }
    };
    for v in b.iter() {
        take(v, &[], &mut set);
        assigned[v] = true;
    }
    for e in &chron.events {
        if e.white_force {
            debug_assert!(!assigned[e.forcer] && !assigned[e.forced]);
            take(e.forcer, &[0, 1], &mut set);
            take(e.forced, &[2, 3], &mut set);
            assigned[e.forcer] = true;
            assigned[e.forced] = true;
        } else if !assigned[e.forced] {
            take(e.forced, &[n - 2, n - 1], &mut set);
            assigned[e.forced] = true;
        }
    }
    debug_assert!(assigned.iter().all(|&a| a));
    let claimed = b.len() * n + (order - b.len()) * (n - 2);
    Ok(ConstructionOutput {
        host,
        set,
        claimed_kind: SetKind::ZeroForcing,
        claimed_cardinality: claimed,
        source: "tensor-complete skew chronology",
    })
}

/// The explicit set for `P_t × K_3`, `t` even:
/// `{(2i−2, 2), (2i−1, 0) : i = 1..t/2}` in 0-based coordinates.
pub fn even_path_k3_zfs(t: usize) -> Result<ConstructionOutput, ConstructionError> {
    if t < 2 || t % 2 == 1 {
        return unsupported(format!("P_t × K_3 set needs an even t ≥ 2, got {t}"));
    }
    let host = Graph::tensor(&Graph::path(t), &Graph::complete(3));
    let set = VertexSet::from_iter(
        3 * t,
        (1..=t / 2).flat_map(|i| [(2 * i - 2) * 3 + 2, (2 * i - 1) * 3]),
    );
    Ok(ConstructionOutput {
        host,
        set,
        claimed_kind: SetKind::ZeroForcing,
        claimed_cardinality: t,
        source: "even path times K_3",
    })
}

/// Zero forcing set of size `(n−2)t` for `P_t × K_n`, `t` even, `n ≥ 3`.
pub fn even_path_kn_zfs(t: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if t < 2 || t % 2 == 1 {
        return unsupported(format!("needs an even t ≥ 2, got {t}"));
    }
    match n {
        0..=2 => unsupported(format!("needs n ≥ 3, got {n}")),
        3 => even_path_k3_zfs(t),
        _ => {
            let mut out = tensor_complete_zfs(&Graph::path(t), n)?;
            out.source = "even path times K_n";
            Ok(out)
        }
    }
}

/// Zero forcing set for `C_t × K_n`: the last copy `U_{t−1}` (odd `t`)
/// or the last two copies (even `t`), plus the even-path set on the
/// remaining rows. Sizes `(n−2)t + 2` and `(n−2)t + 4`.
pub fn cycle_kn_zfs(t: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if t < 3 || n < 3 {
        return unsupported(format!("needs t, n ≥ 3, got t={t}, n={n}"));
    }
    let whole_copies = if t % 2 == 1 { 1 } else { 2 };
    let rows = t - whole_copies;
    let path_part = even_path_kn_zfs(rows, n)?;
    let host = Graph::tensor(&Graph::cycle(t).expect("t ≥ 3"), &Graph::complete(n));
    // row-major layout: path row r, column s sits at r*n + s in both hosts
    let mut set = VertexSet::from_iter(t * n, path_part.set.iter());
    for v in rows * n..t * n {
        set.insert(v);
    }
    Ok(ConstructionOutput {
        host,
        set,
        claimed_kind: SetKind::ZeroForcing,
        claimed_cardinality: (n - 2) * t + 2 * whole_copies,
        source: "cycle times K_n",
    })
}

/// Zero forcing set of size `(n−2)t + 2` for `P_t × K_n`, `t ≥ 3` odd,
/// `n ≥ 3`: the last copy plus the even-path set on the rows before it.
pub fn odd_path_kn_zfs(t: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    if t < 3 || t % 2 == 0 {
        return unsupported(format!("needs an odd t ≥ 3, got {t}"));
    }
    let path_part = even_path_kn_zfs(t - 1, n)?;
    let host = Graph::tensor(&Graph::path(t), &Graph::complete(n));
    let mut set = VertexSet::from_iter(t * n, path_part.set.iter());
    for v in (t - 1) * n..t * n {
        set.insert(v);
    }
    Ok(ConstructionOutput {
        host,
        set,
        claimed_kind: SetKind::ZeroForcing,
        claimed_cardinality: (n - 2) * t + 2,
        source: "odd path times K_n",
    })
}

/// Zero forcing construction for `F_t × K_n` matching the family and the
/// parity of `t`.
pub fn tensor_complete_zfs_for(family: Family, t: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    match family {
        Family::Path if t % 2 == 0 => even_path_kn_zfs(t, n),
        Family::Path => odd_path_kn_zfs(t, n),
        Family::Cycle => cycle_kn_zfs(t, n),
    }
}

/// Nullity lower bound next to a constructed zero forcing set.
#[derive(Debug, Clone)]
pub struct Sandwich {
    pub nullity: usize,
    pub construction: ConstructionOutput,
    /// The set forces the host and its size equals the nullity, so
    /// `Z = M = nullity` with no search.
    pub certified: bool,
}

pub fn tensor_complete_sandwich(family: Family, t: usize, n: usize) -> Result<Sandwich, ConstructionError> {
    let construction = tensor_complete_zfs_for(family, t, n)?;
    let nullity = linalg::tensor_nullity_certificate(family, t, n)
        .map_err(|e| ConstructionError::Unsupported(e.to_string()))?;
    let certified = construction.verify() && construction.set.len() == nullity;
    Ok(Sandwich {
        nullity,
        construction,
        certified,
    })
}

/// Two consecutive `C_n` layers `{(g, h) : h ∈ {0, 1}}` of `C_n □ C_m`.
pub fn torus_zfs(n: usize, m: usize) -> Result<ConstructionOutput, ConstructionError> {
    if n < 3 || m < n {
        return unsupported(format!("needs m ≥ n ≥ 3, got n={n}, m={m}"));
    }
    let host = Graph::cartesian(&Graph::cycle(n).expect("n ≥ 3"), &Graph::cycle(m).expect("m ≥ 3"));
    let set = VertexSet::from_iter(n * m, (0..n).flat_map(|g| [g * m, g * m + 1]));
    Ok(ConstructionOutput {
        host,
        set,
        claimed_kind: SetKind::ZeroForcing,
        claimed_cardinality: 2 * n,
        source: "two consecutive cycle layers",
    })
}

/// Rows (0-based) of the residue-class power dominating set for
/// `F_t × K_n`; every chosen vertex has second coordinate 0.
pub fn pds_rows(t: usize) -> Vec<usize> {
    let k = t / 4;
    // 1-based rows, shifted down at the end
    let mut rows: Vec<usize> = (1..=k).flat_map(|i| [4 * i - 2, 4 * i - 1]).collect();
    match t % 4 {
        0 => {}
        1 => rows.push(4 * k),
        2 => rows.extend([4 * k + 1, 4 * k + 2]),
        _ => rows.extend([4 * k + 2, 4 * k + 3]),
    }
    rows.into_iter().map(|r| r - 1).collect()
}

/// Size of the residue-class set: `⌈t/2⌉`, or `t/2 + 1` when `t ≡ 2 (mod 4)`.
pub fn pds_formula(t: usize) -> usize {
    if t % 4 == 2 {
        t / 2 + 1
    } else {
        t.div_ceil(2)
    }
}

/// Residue-class power dominating set for `P_t × K_n` (`t ≥ 2`) or
/// `C_t × K_n` (`t ≥ 3`), `n ≥ 3`.
pub fn tensor_complete_pds(family: Family, t: usize, n: usize) -> Result<ConstructionOutput, ConstructionError> {
    let min_t = match family {
        Family::Path => 2,
        Family::Cycle => 3,
    };
    if t < min_t || n < 3 {
        return unsupported(format!(
            "{} family needs t ≥ {min_t} and n ≥ 3, got t={t}, n={n}",
            family.name()
        ));
    }
    let base = family.graph(t).expect("t in range");
    let host = Graph::tensor(&base, &Graph::complete(n));
    let set = VertexSet::from_iter(t * n, pds_rows(t).into_iter().map(|r| r * n));
    Ok(ConstructionOutput {
        host,
        set,
        claimed_kind: SetKind::PowerDominating,
        claimed_cardinality: pds_formula(t),
        source: "residue classes mod 4",
    })
}

/// Upper bound `Z(G*H) ≤ c · (Δ(G)|H| + Δ(H))` with `c = γ(G)` when
/// `γ_P(H) = 1` and `c = γ_t(G)` otherwise.
pub fn lex_zf_bound(g: &Graph, h: &Graph, gamma_g: usize, gamma_t_g: usize, pd_h_is_one: bool) -> usize {
    let delta = g.max_degree() * h.order() + h.max_degree();
    let c = if pd_h_is_one { gamma_g } else { gamma_t_g };
    c * delta
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_construction_on_p6_k5() {
        let out = tensor_complete_zfs(&Graph::path(6), 5).unwrap();
        assert_eq!(out.set.len(), 18);
        assert!(out.verify());
    }

    #[test]
    fn skew_construction_on_three_sun() {
        let out = tensor_complete_zfs(&Graph::three_sun(), 4).unwrap();
        assert_eq!(out.set.len(), 12);
        assert!(out.verify());
    }

    #[test]
    fn skew_construction_with_nonempty_seed() {
        let out = tensor_complete_zfs(&Graph::path(5), 4).unwrap();
        assert_eq!(out.set.len(), 4 + 4 * 2);
        assert!(out.verify());
    }

    #[test]
    fn refuses_small_n() {
        assert!(matches!(
            tensor_complete_zfs(&Graph::three_sun(), 3),
            Err(ConstructionError::Unsupported(_))
        ));
        assert!(tensor_complete_zfs_from(&Graph::path(5), 4, &VertexSet::empty(5)).is_err());
    }

    #[test]
    fn even_path_k3() {
        let out = even_path_k3_zfs(2).unwrap();
        assert_eq!(out.set.to_vec(), vec![2, 3]);
        assert!(out.verify());
        assert!(even_path_k3_zfs(4).unwrap().verify());
        assert!(even_path_k3_zfs(3).is_err());
    }

    #[test]
    fn even_path_kn() {
        for (t, n, size) in [(4, 4, 8), (2, 5, 6), (6, 3, 6)] {
            let out = even_path_kn_zfs(t, n).unwrap();
            assert_eq!(out.set.len(), size);
            assert!(out.verify(), "t={t} n={n}");
        }
        assert!(even_path_kn_zfs(4, 2).is_err());
    }

    #[test]
    fn cycle_kn() {
        for (t, n, size) in [(3, 3, 5), (4, 3, 8), (5, 4, 12)] {
            let out = cycle_kn_zfs(t, n).unwrap();
            assert_eq!(out.set.len(), size);
            assert!(out.verify(), "t={t} n={n}");
        }
    }

    #[test]
    fn odd_path_kn() {
        for (t, n) in [(3, 3), (5, 4), (7, 5)] {
            let out = odd_path_kn_zfs(t, n).unwrap();
            assert_eq!(out.set.len(), (n - 2) * t + 2);
            assert!(out.verify());
        }
        assert!(odd_path_kn_zfs(4, 3).is_err());
    }

    #[test]
    fn sandwich_closes_small_grid() {
        for family in [Family::Path, Family::Cycle] {
            for t in 3..=6 {
                let s = tensor_complete_sandwich(family, t, 4).unwrap();
                assert!(s.certified, "{family:?} t={t}");
            }
        }
    }

    #[test]
    fn torus() {
        for (n, m) in [(3, 4), (3, 3), (4, 4)] {
            let out = torus_zfs(n, m).unwrap();
            assert_eq!(out.set.len(), 2 * n);
            assert!(out.verify());
        }
        assert!(torus_zfs(4, 3).is_err());
    }

    #[test]
    fn residue_sets() {
        let out = tensor_complete_pds(Family::Path, 6, 3).unwrap();
        assert_eq!(out.set.to_vec(), vec![3, 6, 12, 15]);
        assert!(out.verify());
        let c = tensor_complete_pds(Family::Cycle, 5, 4).unwrap();
        assert_eq!(c.set.len(), 3);
        assert!(c.verify());
        assert_eq!(tensor_complete_pds(Family::Path, 4, 3).unwrap().set.len(), 2);
        assert!(tensor_complete_pds(Family::Cycle, 2, 3).is_err());
    }

    #[test]
    fn lex_bound_values() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(lex_zf_bound(&Graph::complete(3), &c4, 1, 2, true), 10);
        assert_eq!(lex_zf_bound(&Graph::complete(1), &Graph::path(3), 1, 0, true), 2);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(lex_zf_bound(&c6, &Graph::cycle(3).unwrap(), 2, 3, true), 16);
    }
}
