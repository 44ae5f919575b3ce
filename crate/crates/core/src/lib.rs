//! Exact zero forcing, skew zero forcing, and power domination for
//! graphs and graph products, with rational-arithmetic nullity
//! certificates.

pub mod constructions;
pub mod edgelist;
pub mod expr;
pub mod enumerate;
pub mod graph;
pub mod linalg;
pub mod propagation;
pub mod report;
pub mod solvers;
pub mod table;
pub mod verify;
pub mod vertex_set;

pub use graph::{Graph, GraphError};
pub use linalg::{Family, RationalMatrix};
pub use propagation::{Chronology, ForceEvent, Rule};
pub use solvers::{SolveError, SolveResult, Solver};
pub use vertex_set::VertexSet;
