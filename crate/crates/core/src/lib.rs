//! Exact computations for bound quiver algebras: path bases, modules given as
//! quiver representations, Auslander-Reiten quivers built by knitting, cuts,
//! slices and tiltedness certificates.
//!
//! Everything is generic over an exact [`exactla::Field`]; the command line
//! front end works over `Q` and a handful of small prime fields.

pub mod algebra;
pub mod arquiver;
pub mod cli;
pub mod cuts;
pub mod exactla;
pub mod modrep;

pub use algebra::{AlgebraBasis, AlgebraPresentation, PathWord, Quiver};
pub use arquiver::{ARQuiver, KnitLimits};
pub use exactla::{Field, Fp, Matrix, Rational};
pub use modrep::{Module, ModuleMap};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("arrow ideal has no nilpotent power up to length {bound}")]
    NotFiniteDimensional { bound: usize },
    #[error("inadmissible ideal: {0}")]
    InadmissibleIdeal(String),
    #[error("endomorphism ring modulo its radical is not split over the ground field")]
    NonSplitEndomorphismRing,
    #[error("radical via trace form needs characteristic 0 or p > {dim} (got p = {p})")]
    UnsupportedRadicalComputation { p: u64, dim: usize },
    #[error("module does not have a local endomorphism ring")]
    NonLocalEndRing,
    #[error("knitting stopped: {0}")]
    LimitExceeded(String),
    #[error("cut enumeration exceeded cap of {cap} search nodes")]
    CapExceeded { cap: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("operation needs module data, quiver is combinatorial only")]
    NoModuleData,
    #[error("invalid translation quiver: {0}")]
    Validation(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("field mismatch: {0}")]
    Field(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
