//! Exact computations for quivers with relations, quiver GIT moduli at
//! dimension vector (1,…,1), McKay quivers and the ADE dictionary, abelian
//! invariant rings, skew group rings and matrix factorizations.

pub mod error;
pub mod quiver;
pub mod rep;
pub mod scalars;
pub mod stability;

pub use error::{Error, Result};
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod mckay;
pub mod mf;
pub mod moduli;
pub mod skew;
pub mod toricend;
