//! Shared strategies and brute-force oracles. The oracles here do not
//! call the library's closure or solver code.

#![allow(dead_code)]

use forcing_lab::{Graph, RationalMatrix, VertexSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

/// Random simple graph on `lo..=hi` vertices.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Random graph together with a random vertex subset.
pub fn graph_and_set(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.order();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let set = VertexSet::from_iter(n, (0..n).filter(|&v| bits[v]));
            (g.clone(), set)
        })
    })
}

pub fn mask_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Fixed-point colour change rule: sweep vertices until nothing changes.
pub fn naive_closure(g: &Graph, start: &[bool], skew: bool) -> Vec<bool> {
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

fn bools(n: usize, mask: u64) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

pub fn naive_zf(g: &Graph, mask: u64) -> bool {
    naive_closure(g, &bools(g.order(), mask), false).iter().all(|&b| b)
}

pub fn naive_skew(g: &Graph, mask: u64) -> bool {
    naive_closure(g, &bools(g.order(), mask), true).iter().all(|&b| b)
}

pub fn naive_closed_nbhd(g: &Graph, mask: u64) -> u64 {
    let mut out = mask;
    for v in 0..g.order() {
        if mask >> v & 1 == 1 {
            for &u in g.neighbors(v) {
                out |= 1 << u;
            }
        }
    }
    out
}

pub fn naive_open_nbhd(g: &Graph, mask: u64) -> u64 {
    let mut out = 0;
    for v in 0..g.order() {
        if mask >> v & 1 == 1 {
            for &u in g.neighbors(v) {
                out |= 1 << u;
            }
        }
    }
    out
}

pub fn naive_pd(g: &Graph, mask: u64) -> bool {
    naive_zf(g, naive_closed_nbhd(g, mask))
}

pub fn naive_dom(g: &Graph, mask: u64) -> bool {
    naive_closed_nbhd(g, mask) == full(g.order())
}

pub fn naive_tdom(g: &Graph, mask: u64) -> bool {
    naive_open_nbhd(g, mask) == full(g.order())
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Sorted members of a mask.
pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Smallest passing set: minimum size first, then lexicographically
/// smallest sorted member list. Scans all `2^n` masks.
pub fn brute_minimum(g: &Graph, pred: impl Fn(&Graph, u64) -> bool) -> Option<(usize, Vec<usize>)> {
    let n = g.order();
    assert!(n <= 16);
    (0..1u64 << n)
        .filter(|&m| pred(g, m))
        .map(|m| (m.count_ones() as usize, members(m)))
        .min()
}

/// Rank by textbook Gaussian elimination with rational division.
pub fn naive_rank(m: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] / &pivot;
                for c in col..m.cols() {
                    let sub = &f * &a[rank][c];
                    a[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    if rng.gen_bool(0.35) {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(rng.gen_range(-6i64..=6)), BigInt::from(rng.gen_range(1i64..=4)))
}

/// Random rational matrix, at most 6×6, often rank deficient: half the
/// time it is built as a product through a narrow inner dimension.
pub fn random_matrix<R: Rng>(rng: &mut R) -> RationalMatrix {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=6);
    if rng.gen_bool(0.5) {
        let inner = rng.gen_range(1..=3);
        let l = RationalMatrix::from_fn(rows, inner, |_, _| small_rational(rng));
        let r = RationalMatrix::from_fn(inner, cols, |_, _| small_rational(rng));
        &l * &r
    } else {
        RationalMatrix::from_fn(rows, cols, |_, _| small_rational(rng))
    }
}
