//! Crate-wide error type with machine-readable codes for report emission.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown arrow `{name}` at line {line}")]
    UnknownArrow { name: String, line: usize },

    #[error("non-composable path at line {line}: {message}")]
    NonComposablePath { line: usize, message: String },

    #[error("relation terms are not parallel at line {line}: {message}")]
    NonParallelRelation { line: usize, message: String },

    #[error("ideal is not admissible: {message}")]
    NotAdmissible { message: String },

    #[error("bad scalar `{text}`: {message}")]
    BadScalar { text: String, message: String },

    #[error("the algebra is infinite dimensional: {message}")]
    InfiniteDimensional { message: String },

    #[error("presentation has multi-term relations but no `nilbound:` line")]
    MissingNilbound,

    #[error(
        "nil bound {bound} is not stable: dimension {dim_at_bound} at the bound \
         but {dim_above} one level higher; increase `nilbound:`"
    )]
    NilboundViolated {
        bound: usize,
        dim_at_bound: usize,
        dim_above: usize,
    },

    #[error("operation requires a monomial algebra")]
    NotMonomial,

    #[error("cycle {cycle} is not 2-truncated: {message}")]
    NotTwoTruncated { cycle: String, message: String },

    #[error("arrows do not chain into an oriented cycle: {message}")]
    EndpointMismatch { message: String },

    #[error("witness failed re-validation: {message}")]
    InvalidWitness { message: String },

    #[error("representation violates relation {relation}")]
    RelationViolation { relation: String },

    #[error("no 2-truncated oriented cycle found")]
    NoTwoTruncatedCycle,

    #[error("random generation exhausted after {attempts} attempts")]
    GenerationExhausted { attempts: usize },

    #[error("resource limit exceeded: {what} reached {size}, cap is {cap}")]
    ResourceLimit {
        what: String,
        size: usize,
        cap: usize,
    },

    #[error("time budget exhausted after {elapsed_ms} ms")]
    TimeBudget { elapsed_ms: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable code, embedded in JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse_error",
            Error::UnknownArrow { .. } => "unknown_arrow",
            Error::NonComposablePath { .. } => "non_composable_path",
            Error::NonParallelRelation { .. } => "non_parallel_relation",
            Error::NotAdmissible { .. } => "not_admissible",
            Error::BadScalar { .. } => "bad_scalar",
            Error::InfiniteDimensional { .. } => "infinite_dimensional",
            Error::MissingNilbound => "missing_nilbound",
            Error::NilboundViolated { .. } => "nilbound_violated",
            Error::NotMonomial => "not_monomial",
            Error::NotTwoTruncated { .. } => "not_two_truncated",
            Error::EndpointMismatch { .. } => "endpoint_mismatch",
            Error::InvalidWitness { .. } => "invalid_witness",
            Error::RelationViolation { .. } => "relation_violation",
            Error::NoTwoTruncatedCycle => "no_two_truncated_cycle",
            Error::GenerationExhausted { .. } => "generation_exhausted",
            Error::ResourceLimit { .. } => "resource_limit",
            Error::TimeBudget { .. } => "time_budget",
            Error::Io(_) => "io_error",
        }
    }

    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit { .. } | Error::TimeBudget { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
