//! Exact arithmetic, automorphism enumeration and coset-enumeration checks
//! for the Macdonald 2-groups J, H = J/Z(J) and K = H/Z(H).

pub mod arith;
pub mod autenum;
pub mod commands;
pub mod error;
pub mod group;
pub mod morphism;
pub mod negative;
pub mod oracle;
pub mod params;
pub mod report;
pub mod verify;

pub use error::{ArithError, AutError, GroupError, MorphismError, ParamError};
pub use group::{formulas::CommCase, Element, Family, Group};
pub use morphism::{catalog, GenMap, NamedAut};
pub use params::{GroupParams, OddPrimeParams};
