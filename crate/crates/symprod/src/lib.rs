//! Exact generating series for genera of symmetric products and
//! configuration spaces.
//!
//! The library is organized in layers:
//!
//! - [`laurent`]: sparse Laurent polynomials over the rationals, with the
//!   Adams substitution `x -> x^r` and variable specialization;
//! - [`series`]: truncated power series in `t` with Laurent-polynomial
//!   coefficients (product, inverse, exp, log, binomial factors);
//! - [`prelambda`]: sigma/lambda series of ring elements and the extraction
//!   of Adams operations from a sigma series;
//! - [`symgrp`]: integer partitions, conjugacy classes, irreducible
//!   characters of the symmetric group, and the sigma/lambda/Adams
//!   functionals on its representation ring;
//! - [`graded`]: tri-graded vector spaces with Koszul-signed tensor powers,
//!   used as a brute-force oracle against the series formulas;
//! - [`genera`]: the generating-series engine for symmetric products and
//!   configuration spaces, computed by two independent routes;
//! - [`parse`] and [`profile`]: the expression grammar and the JSON profile
//!   format used by the command-line tool.

pub mod error;
pub mod laurent;
pub mod series;
pub mod prelambda;
pub mod symgrp;
pub mod graded;
pub mod genera;
pub mod parse;
pub mod profile;

pub use error::{Error, Result};
pub use laurent::{rat, ratio, LaurentPoly, Monomial, Rat, VarSet};
pub use series::TruncatedSeries;
pub use prelambda::PreLambdaElement;
pub use symgrp::{ClassFunction, Functional, FunctionalKind, Partition};
pub use graded::{GradedDims, VirtualGradedDims};
pub use genera::{GenusData, GenusKind, GenusProfile, SpecializationReport};
pub use profile::ProfileFile;


// The book chapters double as doctests so the guide can never drift from
// the API. Only compiled when rustdoc collects tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/laurent.md")]
    mod laurent {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/prelambda.md")]
    mod prelambda {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/graded.md")]
    mod graded {}
    #[doc = include_str!("../../../book/src/genera.md")]
    mod genera {}
}
