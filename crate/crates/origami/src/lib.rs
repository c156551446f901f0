//! Computational origami kernel.
//!
//! The crate implements the seven single-fold axioms as geometric solvers,
//! solves quadratic and cubic equations through fold constructions, verifies
//! fold-based geometric demonstrations, checks single-vertex flat-foldability,
//! and computes scale-optimal uniaxial-base layouts in the unit square.
//!
//! Start with the runnable programs in `examples/`; the `origami` binary
//! exposes the same operations as JSON/SVG subcommands.

pub mod algebra;
pub mod axioms;
pub mod cli;
pub mod constructions;
mod error;
pub mod flatfold;
pub mod geom;
pub mod subdivision;
pub mod svg;
pub mod tree;

pub use error::{Error, Result};
pub use geom::{Line, Point, Tolerance};
