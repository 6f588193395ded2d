//! Todd-Coxeter oracle for the closed formulas.

mod coset;
mod crosscheck;
mod oddp;
mod presentation;

pub use coset::{
    env_max_cosets, max_cosets_from_env, table_bytes, todd_coxeter, todd_coxeter_with, CosetTable,
    EnumStats, DEFAULT_MAX_COSETS, LARGE_MAX_COSETS,
};
pub use crosscheck::{cross_check, cross_check_with, CheckMode, Oracle, TableModel};
pub use oddp::{
    oddp_commutator, oddp_formula, oddp_range_check, OddPrimeCommutator, OddPrimeOracle,
};
pub use presentation::{
    commutator_word, format_word, inverse, normal_word, parse_word, power, reduce, EnumOptions,
    Letter, Presentation, Strategy, Word, A, B, C, GENERATORS,
};
