//! Spectra of digraph products and the matrix constructions behind them.
//!
//! Vertex `(x, x')` of a product of digraphs on `n` and `n'` vertices is
//! numbered `x * n' + x'`, matching the Kronecker product index order.

pub mod catalog;
pub mod digraph;
pub mod dsrg;
pub mod eigen;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod matrix;
pub mod products;
pub mod verify;

pub use digraph::{Digraph, Dist, DistanceData, Metrics};
pub use eigen::{Spectrum, Tolerances};
pub use error::{Error, Hypothesis, Operand, Result};
pub use matrix::{ComplexMatrix, Construction, IntegerMatrix, MatrixKind, RealMatrix};
