//! Combinatorics of nilpotent orbits, generalized descent and theta lifts for
//! classical dual pairs, checked against an exact-rational matrix oracle.

pub mod cli;
pub mod cycles;
pub mod error;
pub mod forms;
pub mod oracle;
pub mod orbits;
pub mod rational;
pub mod theta;
pub mod verify;

pub use error::{Error, ErrorObject, Result};
pub use forms::{Base, Division, Epsilon, FormType, FormedSpace, GroupDescriptor, GroupFactor, Invariant};
pub use orbits::{AdmissibleTableau, Row};
