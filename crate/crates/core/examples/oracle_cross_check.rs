//! The closed formulas against the coset table, exhaustive or sampled.
//!
//! cargo run --example oracle_cross_check -- H 3

use macforge::oracle::{cross_check, CheckMode};
use macforge::{Family, GroupParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().unwrap_or_else(|| "H".into()).parse().unwrap();
    let m: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let mode = if m <= 2 {
        CheckMode::Exhaustive
    } else {
        CheckMode::Sampled {
            n: 100_000,
            seed: 1,
        }
    };
    let report = cross_check(family, GroupParams::new(m, 1).unwrap(), mode).unwrap();
    print!("{report}");
}
