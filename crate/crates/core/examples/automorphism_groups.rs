//! Aut(G) by closure of a generating set, with its centrality filtration.
//!
//! cargo run --example automorphism_groups -- K 3

use macforge::autenum::{closure, filtration, standard_generators, DEFAULT_LIMIT};
use macforge::{Family, GroupParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().unwrap_or_else(|| "J".into()).parse().unwrap();
    let m: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let params = GroupParams::new(m, 1).unwrap();

    let gens = standard_generators(family, params).unwrap();
    let t = std::time::Instant::now();
    let set = closure(&gens, DEFAULT_LIMIT).unwrap();
    println!(
        "|Aut({family}[{m},1])| = {} from {} generators in {:.2?}",
        set.len(),
        gens.len(),
        t.elapsed()
    );
    let fr = filtration(&set).unwrap();
    for row in &fr.rows {
        let want = row
            .expected
            .map(|e| format!(" (stated {e})"))
            .unwrap_or_default();
        println!("  {:<12} {:>10}{want}", row.name, row.count);
    }
}
