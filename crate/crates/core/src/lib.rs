//! Exact-arithmetic engine for the cohomological data of projective
//! subschemes: Groebner bases, graded free resolutions, Ext and local
//! cohomology tables, sheaf cohomology signatures, stratum classification,
//! and one-parameter Groebner degenerations over k[t].

pub mod cohomology;
pub mod degeneration;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod scalar;
pub mod strata;
pub mod unipoly;

pub use error::{Error, Result};
