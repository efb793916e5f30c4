//! Braid groups, Artin's representation, the holomorph of a free group, Milnor's
//! reduced free groups, simplicial groups built from pure braids, and the graded
//! Kohno Lie algebra, with checkers for the identities relating them.

pub mod braid;
pub mod cli;
pub mod error;
pub mod garside;
pub mod gradedlie;
pub mod holomorph;
pub mod linalg;
pub mod reduced;
pub mod report;
pub mod simplicial;
pub mod words;

pub use error::{Error, Result};
