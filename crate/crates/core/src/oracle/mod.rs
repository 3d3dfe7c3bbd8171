//! Exact-rational matrix ground truth for the combinatorics.

pub mod descent;
pub mod dims;
pub mod division;
pub mod identify;
pub mod linalg;
pub mod realize;
pub mod census;
pub mod sample;

pub use descent::{check_realizer, construct_descent_element, moment_maps, truncate, DescentRealizer, RationalMap};
pub use dims::{verify_dimension_identity, DimensionReport};
pub use identify::{ad_grading, centralizer_dim, centralizer_dim_in, identify, jacobson_morozov, triple_centralizer_dim};
pub use linalg::{Mat, Q};
pub use realize::{realize_triple, Ambient, MatrixRealization};
