//! Quintary lattice terms `L` and `U`, their products on lattices, and the
//! arithmetic semigroups on the naturals ordered by divisibility.

pub mod arithmetic;
pub mod boolean;
pub mod error;
pub mod grassmannian;
pub mod identities;
pub mod lattice;
pub mod products;
pub mod quintary;
pub mod search;

pub use error::{Error, Result};
pub use lattice::{Lattice, Quintuple};
pub use quintary::{eval_l, eval_u, Symmetry, TermId, Vertex};
pub use search::{CheckOptions, CheckReport, Exec, Verdict};
