//! Exact computations around cluster tilting in finite triangulated
//! categories given by Hom-tables, and the tau-tilting side over the
//! opposite endomorphism algebra of a tilting object.
//!
//! The crate is organized in layers:
//!
//! * [`exactlin`] — rational linear algebra (matrices, subspaces, radicals);
//! * [`homcat`] — finite additive categories with composition tables,
//!   ideals of morphisms factoring through an object, approximations;
//! * [`tricat`] — the triangulated shell: shift, Serre data, rigidity and
//!   ghost (relative) cluster tilting predicates, enumeration, completion;
//! * [`modalg`] — End(T)^op as a structure-constant algebra, modules over
//!   it, projective presentations, tau-rigidity and tilting predicates;
//! * [`bridge`] — the correspondence X ↦ (Hom(T,X), T ∩ X[-1]) between the
//!   two sides and executable verifiers for its expected properties;
//! * [`gen`] — generators of the shipped example categories (stable
//!   Nakayama, cluster and repetitive cluster orbit categories), the file
//!   format, and independent combinatorial oracles;
//! * [`cli`] — the command-line driver.

pub mod bridge;
pub mod cli;
pub mod exactlin;
pub mod gen;
pub mod homcat;
pub mod modalg;
pub mod tricat;

use thiserror::Error;

/// Top-level error type surfaced by loading, parsing, and precondition
/// checks. Invariant violations inside validated data abort with panics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column} (byte {byte}): {message}")]
    Parse {
        line: usize,
        column: usize,
        byte: usize,
        message: String,
    },
    #[error("category table is invalid:\n{}", .0.iter().map(|v| format!("  - {v}")).collect::<Vec<_>>().join("\n"))]
    InvalidTable(Vec<String>),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("category has no Serre data but the operation requires it")]
    MissingSerre,
    #[error("{0:?} is not cluster tilting")]
    NotClusterTilting(String),
    #[error("{0:?} is not rigid relative to the tilting object")]
    NotTiltingRigid(String),
    #[error("invalid generator parameters: {0}")]
    BadGeneratorSpec(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
