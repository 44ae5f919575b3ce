//! Exact rational matrices: Kronecker products, fraction-free rank, and
//! the skew-symmetric building blocks whose Kronecker products certify
//! maximum-nullity lower bounds for tensor products with complete graphs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("pattern error: {0}")]
    Pattern(String),
    #[error("matrix is not symmetric")]
    Symmetry,
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error("dimension error: {0}")]
    Dimension(String),
}

/// Dense matrix of arbitrary-precision rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RationalMatrix {
    /// Panics on a zero dimension.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> BigRational>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Dimension("rows must be non-empty and equal length".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| int(rows[i][j])))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Adjacency matrix of `g`.
    pub fn adjacency(g: &Graph) -> Self {
        let n = g.order();
        Self::from_fn(n, n, |i, j| if g.adjacent(i, j) { int(1) } else { int(0) })
    }

    /// Laplacian `D - A` of `g`.
    pub fn laplacian(g: &Graph) -> Self {
        let n = g.order();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                int(g.degree(i) as i64)
            } else if g.adjacent(i, j) {
                int(-1)
            } else {
                int(0)
            }
        })
    }

    /// Kronecker product: block `(i, j)` is `a_ij · B`.
    pub fn kron(&self, b: &RationalMatrix) -> Self {
        Self::from_fn(self.rows * b.rows, self.cols * b.cols, |r, c| {
            &self[(r / b.rows, c / b.cols)] * &b[(r % b.rows, c % b.cols)]
        })
    }

    /// Row-scales to an integer matrix with the same rank.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Bareiss fraction-free elimination on the integer rescaling.
    /// Pivot: first nonzero entry, scanning rows downward within the
    /// current column. Returns (rank, last pivot, row-swap parity).
    fn bareiss(&self) -> (usize, BigInt, bool) {
        let mut m = self.to_integer_rows();
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut odd_swaps = false;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            if p != rank {
                m.swap(p, rank);
                odd_swaps = !odd_swaps;
            }
            let (top, rest) = m.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in rest.iter_mut() {
                for j in c + 1..self.cols {
                    let v = (&pivot_row[c] * &row[j] - &row[c] * &pivot_row[j]) / &prev;
                    row[j] = v;
                }
                row[c] = BigInt::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
        }
        (rank, prev, odd_swaps)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    /// `cols − rank`, the dimension of the right null space.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn determinant(&self) -> Result<BigRational, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Dimension("determinant of a non-square matrix".into()));
        }
        let (rank, last, odd) = self.bareiss();
        if rank < self.rows {
            return Ok(BigRational::zero());
        }
        // undo the row scaling
        let scale = (0..self.rows).fold(BigInt::one(), |acc, i| {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            acc * row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
        });
        let det = BigRational::new(last, scale);
        Ok(if odd { -det } else { det })
    }

    /// The graph of a combinatorially symmetric square matrix: `i ~ j`
    /// iff `a_ij ≠ 0` for `i ≠ j`. The diagonal is ignored.
    pub fn pattern_graph(&self) -> Result<Graph, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Pattern(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        let mut edges = Vec::new();
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                let a = !self[(i, j)].is_zero();
                let b = !self[(j, i)].is_zero();
                if a != b {
                    return Err(LinalgError::Pattern(format!(
                        "entries ({i},{j}) and ({j},{i}) disagree on being zero"
                    )));
                }
                if a {
                    edges.push((i, j));
                }
            }
        }
        Ok(Graph::from_edge_list(self.rows, &edges).expect("pattern edges are simple"))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| self[(i, i)].is_zero())
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        self.scale(&int(-1))
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        RationalMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(BigRational::zero(), |acc, k| acc + &self[(i, k)] * &rhs[(k, j)])
        })
    }
}

/// `A ⊗ I_m − I_n ⊗ B`, a matrix for the Cartesian product of the graphs
/// of `A` and `B`.
pub fn cartesian_operator(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
    if !a.is_square() || !b.is_square() {
        return Err(LinalgError::Dimension("both factors must be square".into()));
    }
    let left = a.kron(&RationalMatrix::identity(b.rows()));
    let right = RationalMatrix::identity(a.rows()).kron(b);
    Ok(&left - &right)
}

/// Rank-2 skew-symmetric matrix with entry `(i, j) = j − i`, the closed
/// form of `[1 y] [[0,1],[-1,0]] [1 y]^T` with `y = (1, …, n)`. Its graph
/// is `K_n`.
pub fn build_an(n: usize) -> Result<RationalMatrix, LinalgError> {
    if n < 2 {
        return Err(LinalgError::Dimension(format!("A_n needs n ≥ 2, got {n}")));
    }
    Ok(RationalMatrix::from_fn(n, n, |i, j| int(j as i64 - i as i64)))
}

/// Tridiagonal skew matrix: `+1` above the diagonal, `−1` below.
pub fn build_path_skew(t: usize) -> Result<RationalMatrix, LinalgError> {
    if t < 2 {
        return Err(LinalgError::Dimension(format!("path skew matrix needs t ≥ 2, got {t}")));
    }
    Ok(RationalMatrix::from_fn(t, t, |i, j| {
        if j == i + 1 {
            int(1)
        } else if i == j + 1 {
            int(-1)
        } else {
            int(0)
        }
    }))
}

/// Circulant skew matrix: `+1` at `(i, i+1 mod t)`, `−1` at `(i, i−1 mod t)`.
pub fn build_cycle_skew(t: usize) -> Result<RationalMatrix, LinalgError> {
    if t < 3 {
        return Err(LinalgError::Dimension(format!("cycle skew matrix needs t ≥ 3, got {t}")));
    }
    Ok(RationalMatrix::from_fn(t, t, |i, j| {
        if j == (i + 1) % t {
            int(1)
        } else if i == (j + 1) % t {
            int(-1)
        } else {
            int(0)
        }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
}

impl Family {
    pub fn graph(self, t: usize) -> Result<Graph, crate::graph::GraphError> {
        match self {
            Family::Path => Ok(Graph::path(t)),
            Family::Cycle => Graph::cycle(t),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            other => Err(format!("unknown family {other:?} (expected path or cycle)")),
        }
    }
}

/// Checks that `a` is a symmetric matrix whose graph is exactly `g` and
/// returns `⌈null(A) / Δ(G)⌉`, a lower bound on the power domination
/// number.
pub fn pd_lower_bound_nullity(g: &Graph, a: &RationalMatrix) -> Result<usize, LinalgError> {
    let pattern = a.pattern_graph()?;
    if pattern != *g {
        return Err(LinalgError::Pattern("matrix graph differs from the target graph".into()));
    }
    if !a.is_symmetric() {
        return Err(LinalgError::Symmetry);
    }
    match g.max_degree() {
        0 => Err(LinalgError::Pattern("the nullity bound needs a graph with an edge".into())),
        d => Ok(a.nullity().div_ceil(d)),
    }
}

/// Builds `B_t ⊗ A_n` for the path or cycle family, checks it is a
/// symmetric matrix whose graph is `F_t × K_n`, and returns its nullity:
/// a certified lower bound on maximum nullity and hence on `Z(F_t × K_n)`.
pub fn tensor_nullity_certificate(family: Family, t: usize, n: usize) -> Result<usize, LinalgError> {
    let b = match family {
        Family::Path => build_path_skew(t)?,
        Family::Cycle => build_cycle_skew(t)?,
    };
    let a = build_an(n)?;
    let m = b.kron(&a);
    let host = Graph::tensor(
        &family.graph(t).map_err(|e| LinalgError::Dimension(e.to_string()))?,
        &Graph::complete(n),
    );
    let pattern = m.pattern_graph().map_err(|e| LinalgError::Certificate(e.to_string()))?;
    if pattern != host {
        return Err(LinalgError::Certificate(format!(
            "graph of B⊗A is not {}({t}) × K_{n}",
            family.name()
        )));
    }
    if !m.is_symmetric() {
        return Err(LinalgError::Certificate("B⊗A is not symmetric".into()));
    }
    Ok(m.nullity())
}
