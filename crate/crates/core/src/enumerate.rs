//! Small-graph corpora: every graph on a few vertices up to isomorphism,
//! plus seeded random graphs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn mask_graph(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("generated edge list is simple")
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices (`n ≤ 7`). The representative is the one whose edge bitmask
/// is smallest over all relabelings.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let pairs = n * n.saturating_sub(1) / 2;
    let idx = pair_index(n);
    let edge_list: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1u32 << pairs) {
        for p in &perms {
            let mut image = 0u32;
            for (k, &(i, j)) in edge_list.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << idx[p[i]][p[j]];
                }
            }
            if image < mask {
                continue 'mask;
            }
        }
        out.push(mask_graph(n, mask));
    }
    out
}

/// Connected graphs on `1..=max_n` vertices, up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(all_graphs)
        .filter(Graph::is_connected)
        .collect()
}

/// `count` Erdős–Rényi graphs `G(n, p)` from a fixed seed.
pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).expect("generated edge list is simple")
        })
        .collect()
}
