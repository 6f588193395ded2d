//! Commutator identities for odd p, evaluated against the table of Jp.
//!
//! cargo run --example odd_prime

use macforge::oracle::{oddp_commutator, oddp_range_check, OddPrimeOracle};
use macforge::{CommCase, OddPrimeParams};

fn main() {
    let params = OddPrimeParams::new(3, 1, 1).unwrap();
    let o = OddPrimeOracle::build(params).unwrap();
    println!("Jp[3,1,1] has {} elements", o.table().len());
    for (case, n, t) in [
        (CommCase::CA, 2, 5),
        (CommCase::CB, -4, 3),
        (CommCase::AB, 2, 7),
    ] {
        let r = oddp_commutator(&o, case, n, t);
        let rhs: Vec<String> = r.factors.iter().map(|(g, e)| format!("{g}^{e}")).collect();
        println!(
            "{case} n={n} t={t}: {} [{}]",
            rhs.join(" "),
            if r.matches { "ok" } else { "MISMATCH" }
        );
    }
    print!("{}", oddp_range_check(params, 10).unwrap());

    match OddPrimeParams::new(3, 1, 2) {
        Ok(_) => println!("ell = 2 accepted"),
        Err(e) => println!("ell = 2 rejected: {e}"),
    }
}
