use thiserror::Error;

/// Errors raised by the engine. Verification failures are not errors; they
/// are reported as verdicts with witnesses.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("rewriting exceeded the step budget of {budget} (last word: {word})")]
    NonTerminating { budget: usize, word: String },
    #[error("operator list has length {got}, tensor has degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for level {level}")]
    IndexOutOfRange { index: usize, level: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("bad index for `{family}`: {detail}")]
    BadIndex { family: String, detail: String },
    #[error("no {table} entry for generator `{generator}`")]
    MissingTable { table: &'static str, generator: String },
    #[error("`{0}` is not grouplike")]
    NotGrouplike(String),
    #[error("pair is not modular: delta(sigma) = {0}")]
    NotModular(String),
    #[error("modular pair is not in involution: {0}")]
    NotInvolutive(String),
    #[error("character does not respect relation {0}")]
    InvalidCharacter(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("Jacobi identity fails: {0}")]
    JacobiFailure(String),
    #[error("not a factorization: {0}")]
    NotAFactorization(String),
    #[error("matched-pair condition {index} violated: {detail}")]
    MatchedPairViolation { index: usize, detail: String },
    #[error("not a module algebra: {0}")]
    NotModuleAlgebra(String),
    #[error("not a comodule coalgebra: {0}")]
    NotComoduleCoalgebra(String),
    #[error("module data invalid: {0}")]
    InvalidModule(String),
    #[error("module sides do not match: {0}")]
    SidesMismatch(String),
    #[error("input certificate failed: {0}")]
    CertMismatch(String),
    #[error("coefficients are not SAYD: {0}")]
    NotSayd(String),
    #[error("wrong sides for this cocyclic family: {0}")]
    WrongSides(String),
    #[error("trace is not invariant: {0}")]
    TraceNotInvariant(String),
    #[error("instance is not finite-dimensional: {0}")]
    NotFiniteDimensional(String),
    #[error("presentation failed certification: {0}")]
    Uncertified(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
