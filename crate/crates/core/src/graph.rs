//! Simple undirected graphs, the named families, and the three graph
//! products.
//!
//! Product vertices are laid out row-major: the pair `(g, h)` lives at
//! index `g * |H| + h`, and product graphs remember the pair as a label.

use std::fmt;

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("{family} needs at least {min} vertices, got {got}")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
///
/// Equality compares vertex count and edges; coordinate labels are
/// bookkeeping and do not take part.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<(usize, usize)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints, and repeated edges (in either orientation).
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::Duplicate(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Internal constructor for generated graphs; `adj` must already be
    /// symmetric and loop-free.
    fn from_adjacency(mut adj: Vec<Vec<usize>>, labels: Option<Vec<(usize, usize)>>) -> Graph {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj, labels }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![Vec::new(); n], None)
    }

    pub fn path(t: usize) -> Graph {
        let mut adj = vec![Vec::new(); t];
        for i in 1..t {
            adj[i - 1].push(i);
            adj[i].push(i - 1);
        }
        Graph::from_adjacency(adj, None)
    }

    pub fn cycle(t: usize) -> Result<Graph, GraphError> {
        if t < 3 {
            return Err(GraphError::TooSmall {
                family: "cycle",
                min: 3,
                got: t,
            });
        }
        let mut adj = Graph::path(t).adj;
        adj[0].push(t - 1);
        adj[t - 1].push(0);
        Ok(Graph::from_adjacency(adj, None))
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph::from_adjacency(adj, None)
    }

    /// The counterexample graph `H_3`: triangle `{0,1,2}` with a pendant
    /// vertex on each corner (3 on 0, 4 on 1, 5 on 2). Degrees are
    /// `(3,3,3,1,1,1)`; the leaves are what make `Z⁻(H_3) = 0`.
    pub fn three_sun() -> Graph {
        Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)])
            .expect("edge list is valid")
    }

    /// Tensor (direct) product: `(g,h) ~ (g',h')` iff `g ~ g'` and `h ~ h'`.
    pub fn tensor(g: &Graph, h: &Graph) -> Graph {
        Graph::product(g, h, |g, h, a, b| {
            let mut out = Vec::new();
            for &a2 in &g.adj[a] {
                for &b2 in &h.adj[b] {
                    out.push((a2, b2));
                }
            }
            out
        })
    }

    /// Cartesian product: adjacent in exactly one coordinate, equal in the
    /// other.
    pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
        Graph::product(g, h, |g, h, a, b| {
            let mut out: Vec<(usize, usize)> = h.adj[b].iter().map(|&b2| (a, b2)).collect();
            out.extend(g.adj[a].iter().map(|&a2| (a2, b)));
            out
        })
    }

    /// Lexicographic product: `g ~ g'`, or `g = g'` and `h ~ h'`.
    pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
        Graph::product(g, h, |g, h, a, b| {
            let mut out: Vec<(usize, usize)> = h.adj[b].iter().map(|&b2| (a, b2)).collect();
            for &a2 in &g.adj[a] {
                out.extend((0..h.order()).map(|b2| (a2, b2)));
            }
            out
        })
    }

    fn product<F>(g: &Graph, h: &Graph, neighbors: F) -> Graph
    where
        F: Fn(&Graph, &Graph, usize, usize) -> Vec<(usize, usize)>,
    {
        let m = h.order();
        let n = g.order() * m;
        let mut adj = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        for a in 0..g.order() {
            for b in 0..m {
                adj.push(neighbors(g, h, a, b).into_iter().map(|(x, y)| x * m + y).collect());
                labels.push((a, b));
            }
        }
        Graph::from_adjacency(adj, Some(labels))
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Product coordinate of `v`, if this graph came from a product.
    pub fn label(&self, v: usize) -> Option<(usize, usize)> {
        self.labels.as_ref().map(|l| l[v])
    }

    pub fn labels(&self) -> Option<&[(usize, usize)]> {
        self.labels.as_deref()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let min = self.min_degree();
        let max = self.max_degree();
        DegreeStats {
            min,
            max,
            regular: min == max,
        }
    }

    pub fn has_edge(&self) -> bool {
        self.adj.iter().any(|l| !l.is_empty())
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            for &u in &self.adj[v] {
                out.insert(u);
            }
        }
        out
    }

    /// `N(S)`, the union of open neighborhoods.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.order());
        for v in s.iter() {
            for &u in &self.adj[v] {
                out.insert(u);
            }
        }
        out
    }

    /// Image of this graph under the vertex map `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&u| perm[u]).collect();
        }
        Graph::from_adjacency(adj, None)
    }

    /// Checks the structural invariants: symmetric, loop-free, no repeats,
    /// in range, and (if labelled) a row-major coordinate bijection.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        for (v, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &u in list {
                if u >= n || u == v || self.adj[u].binary_search(&v).is_err() {
                    return false;
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return false;
            }
            let cols = labels.iter().map(|l| l.1 + 1).max().unwrap_or(0);
            if cols == 0 && n > 0 {
                return false;
            }
            for (v, &(g, h)) in labels.iter().enumerate() {
                if g * cols + h != v {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
}
