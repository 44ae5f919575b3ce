//! Independent oracles for the acceptance run. Nothing here calls the
//! library's closure, solver or elimination code; graphs are read only
//! through their adjacency lists.

use forcing_lab::{Graph, RationalMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

/// Bitmask of a vertex list.
pub fn mask_of(vs: impl IntoIterator<Item = usize>) -> u64 {
    vs.into_iter().fold(0, |m, v| m | 1 << v)
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Colour change rule swept to a fixed point. With `skew` any vertex may
/// force, otherwise only blue ones.
pub fn closure_bools(g: &Graph, start: &[bool], skew: bool) -> Vec<bool> {
    let mut blue = start.to_vec();
    loop {
        let mut changed = false;
        for v in 0..g.order() {
            if !skew && !blue[v] {
                continue;
            }
            let white: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !blue[u]).collect();
            if white.len() == 1 {
                blue[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return blue;
        }
    }
}

pub fn closure(g: &Graph, start: u64, skew: bool) -> u64 {
    let bools: Vec<bool> = (0..g.order()).map(|v| start >> v & 1 == 1).collect();
    mask_of(closure_bools(g, &bools, skew).iter().enumerate().filter(|p| *p.1).map(|p| p.0))
}

/// Whether the observation rules started from `N[S]` reach every vertex,
/// for a member list of any length.
pub fn pd_members(g: &Graph, members: impl IntoIterator<Item = usize>) -> bool {
    let mut start = vec![false; g.order()];
    for v in members {
        start[v] = true;
        for &u in g.neighbors(v) {
            start[u] = true;
        }
    }
    closure_bools(g, &start, false).iter().all(|&b| b)
}

/// Whether the standard rule from `members` reaches every vertex.
pub fn zf_members(g: &Graph, members: impl IntoIterator<Item = usize>) -> bool {
    let mut start = vec![false; g.order()];
    for v in members {
        start[v] = true;
    }
    closure_bools(g, &start, false).iter().all(|&b| b)
}

pub fn closed_nbhd(g: &Graph, mask: u64) -> u64 {
    (0..g.order())
        .filter(|&v| mask >> v & 1 == 1)
        .fold(mask, |m, v| m | mask_of(g.neighbors(v).iter().copied()))
}

pub fn open_nbhd(g: &Graph, mask: u64) -> u64 {
    (0..g.order())
        .filter(|&v| mask >> v & 1 == 1)
        .fold(0, |m, v| m | mask_of(g.neighbors(v).iter().copied()))
}

pub fn zf(g: &Graph, mask: u64) -> bool {
    closure(g, mask, false) == full(g.order())
}

pub fn skew_zf(g: &Graph, mask: u64) -> bool {
    closure(g, mask, true) == full(g.order())
}

/// Observation rules: everything in `N[S]` is observed, then an observed
/// vertex with one unobserved neighbor observes it.
pub fn pd(g: &Graph, mask: u64) -> bool {
    zf(g, closed_nbhd(g, mask))
}

pub fn dom(g: &Graph, mask: u64) -> bool {
    closed_nbhd(g, mask) == full(g.order())
}

pub fn tdom(g: &Graph, mask: u64) -> bool {
    open_nbhd(g, mask) == full(g.order())
}

/// Minimum size of a passing mask over all `2^n` masks.
pub fn minimum(g: &Graph, pred: impl Fn(&Graph, u64) -> bool) -> Option<usize> {
    assert!(g.order() <= 20);
    (0..1u64 << g.order())
        .filter(|&m| pred(g, m))
        .map(|m| m.count_ones() as usize)
        .min()
}

/// Rank by Gaussian elimination over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect())
        .collect();
    let mut r = 0;
    for col in 0..m.cols() {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][col].clone();
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let f = &a[i][col] / &pivot;
                for c in col..m.cols() {
                    let sub = &f * &a[r][c];
                    a[i][c] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    if rng.gen_bool(0.35) {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(rng.gen_range(-6i64..=6)), BigInt::from(rng.gen_range(1i64..=4)))
}

/// Random rational matrix up to 5×5. Half are products through a narrow
/// inner dimension, so rank deficiency is common.
pub fn random_matrix<R: Rng>(rng: &mut R) -> RationalMatrix {
    let rows = rng.gen_range(1..=5);
    let cols = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        let inner = rng.gen_range(1..=2);
        let l = RationalMatrix::from_fn(rows, inner, |_, _| small_rational(rng));
        let r = RationalMatrix::from_fn(inner, cols, |_, _| small_rational(rng));
        &l * &r
    } else {
        RationalMatrix::from_fn(rows, cols, |_, _| small_rational(rng))
    }
}

/// Random graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("simple edge list")
}
