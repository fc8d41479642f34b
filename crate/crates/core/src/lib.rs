pub mod classify;
pub mod cli;
pub mod complex;
pub mod error;
pub mod ideal;
pub mod oracles;
pub mod samples;
pub mod tree;
pub mod vertex_set;

pub use classify::{classify, ClassificationReport};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use ideal::{path_complex, path_ideal, SquarefreeMonomialIdeal};
pub use oracles::{cross_validate, CrossValidation, OracleVerdict};
pub use tree::{DirectedPath, RootedTree};
pub use vertex_set::{VertexId, VertexSet};
