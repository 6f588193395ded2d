//! Todd-Coxeter enumeration over the trivial subgroup.
//!
//! cargo run --example coset_enumeration

use macforge::oracle::{parse_word, todd_coxeter, Presentation, Strategy};

fn main() {
    let q16 = Presentation::parse("Q16", "A^4 = B^2\nb A B A\nA^8").unwrap();
    let t = todd_coxeter(&q16).unwrap();
    println!("{}: {} cosets, stats {:?}", q16.name, t.len(), t.stats());

    for name in ["K[2,1]", "H[2,1]", "J[2,1]", "Jp[3,1,1]"] {
        let p = Presentation::builtin(name).unwrap();
        for s in [Strategy::Hlt, Strategy::Felsch] {
            let start = std::time::Instant::now();
            let t = todd_coxeter(&p.clone().with_strategy(s)).unwrap();
            println!(
                "{name:<10} {s:?}: {:>6} cosets, {:>7} defined, {:.2?}",
                t.len(),
                t.stats().defined,
                start.elapsed()
            );
        }
    }

    // Words act on cosets; coset 0 is the identity.
    let j = todd_coxeter(&Presentation::builtin("J[2,1]").unwrap()).unwrap();
    let w = parse_word("a b A B C").unwrap();
    let c2 = parse_word("C^2").unwrap();
    println!(
        "[A,B] C lands on coset {}, C^2 on coset {}",
        j.resolve(&w),
        j.resolve(&c2)
    );
    println!("o(A) read off the table: {}", j.generator_order(0));
}
