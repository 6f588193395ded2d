use thiserror::Error;

use crate::group::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{what}: {num}/{den} is not integral")]
    NonIntegral {
        what: &'static str,
        num: i128,
        den: i128,
    },
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("{kind} expects {expected} arguments, got {got}")]
    Arity {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("unknown helper kind {0}")]
    UnknownKind(u8),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("m must lie in 1..={max}, got {m}")]
    MOutOfRange { m: u32, max: u32 },
    #[error("ell must be odd, got {0}")]
    EllEven(i64),
    #[error("|ell| must be below 2^20, got {0}")]
    EllTooLarge(i64),
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("ell = {ell} is divisible by p = {p}")]
    EllDivisibleByP { ell: i64, p: u64 },
    #[error("(p,m) = (3,1) requires (alpha-1)/3 = {0} to be 1 mod 3")]
    Hypothesis(i64),
    #[error("{what} requires {requirement}")]
    Unsupported {
        what: String,
        requirement: &'static str,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("family mismatch: {0} vs {1}")]
    FamilyMismatch(Family, Family),
    #[error("parameter mismatch between operands")]
    ParamsMismatch,
    #[error("operation not available for family {family}: {reason}")]
    Unsupported {
        family: Family,
        reason: &'static str,
    },
    #[error("cannot parse element from {0:?}")]
    Parse(String),
    #[error(transparent)]
    Params(#[from] ParamError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MorphismError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("not an endomorphism: {0}")]
    NotEndomorphism(crate::morphism::RelationViolation),
    #[error("endomorphism is not injective on the center")]
    NotAutomorphism,
    #[error("{name}: argument {arg} violates {constraint}")]
    Constraint {
        name: String,
        arg: String,
        constraint: &'static str,
    },
    #[error("automorphism order exceeds {0}")]
    OrderLimit(u64),
    #[error("cannot parse automorphism from {0:?}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AutError {
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("closure exceeded the member limit {0}")]
    LimitExceeded(usize),
    #[error("generator {0} is not an automorphism")]
    NotAutomorphism(usize),
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("coset enumeration exceeded the cap of {cap} cosets (defined {defined}, live {live})")]
    CapExceeded {
        cap: usize,
        defined: usize,
        live: usize,
    },
    #[error("cannot parse presentation: {0}")]
    Parse(String),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("table is incomplete")]
    Incomplete,
    #[error("{0}")]
    Unsupported(String),
}
