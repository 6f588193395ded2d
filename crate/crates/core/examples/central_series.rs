//! Upper central series: term orders and the level of individual elements.
//!
//! cargo run --example central_series -- 3

use macforge::{Family, Group, GroupParams};

fn main() {
    let m: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let p = GroupParams::new(m, 1).unwrap();
    for f in [Family::J, Family::H, Family::K] {
        let g = Group::new(f, p);
        let orders: Vec<usize> = (0..=g.class()).map(|l| g.center_term(l).len()).collect();
        println!("{g}: |Z_i| = {orders:?}");
        for l in 1..=g.class() {
            let gens: Vec<String> = g
                .center_generators(l)
                .iter()
                .map(|x| g.format_word(*x))
                .collect();
            println!("  Z_{l} = <{}>", gens.join(", "));
        }
    }
    let j = Group::new(Family::J, p);
    for w in ["C", "A^2", "B^4 C^2", "A B"] {
        let x = j.parse_word(w).unwrap();
        println!("level of {w} in J: {}", j.central_level(x));
    }
}
