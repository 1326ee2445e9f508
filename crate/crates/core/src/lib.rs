//! Maximum rectilinear crossing numbers of regular graphs.
//!
//! The crate builds the extremal drawings (generalized stars and star-like
//! even drawings), counts their crossings with exact rational predicates,
//! evaluates the closed-form bounds, measures the endvertex-type statistics
//! behind the upper bound, and cross-checks all of it with an exhaustive
//! convex-position search and randomized drawings.

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod search;
pub mod svg;

pub use error::{Error, Result};
