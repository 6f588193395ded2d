//! Normal-form arithmetic in J, H and K.
//!
//! cargo run --example arithmetic

use macforge::{CommCase, Family, Group, GroupParams};

fn main() {
    let p = GroupParams::new(2, 1).unwrap();
    for f in [Family::J, Family::H, Family::K] {
        let g = Group::new(f, p);
        println!(
            "{g}: order {}, exponent {}, class {}",
            g.order(),
            g.exponent(),
            g.class()
        );
    }

    let j = Group::new(Family::J, p);
    let (a, b, c) = (j.gen_a(), j.gen_b(), j.gen_c());
    let ab = j.mul(a, b);
    println!("BA      = {}", j.format_word(j.mul(b, a)));
    println!("(AB)^2  = {}", j.format_word(j.power(ab, 2)));
    println!("(AB)^-1 = {}", j.format_word(j.invert(ab)));
    println!("[A,B]   = {}", j.format_word(j.commutator(a, b)));
    println!(
        "o(A) = {}, o(C) = {}",
        j.element_order(a),
        j.element_order(c)
    );

    // The closed commutator formulas agree with x^-1 y^-1 x y.
    let x = j.commutator_special(CommCase::CB, 3, -2);
    let y = j.commutator(j.power(c, 3), j.power(b, -2));
    println!(
        "[C^3,B^-2] = {} (formula) = {} (direct)",
        j.format_word(x),
        j.format_word(y)
    );

    let parsed = j.parse_word("A^5 B^-3 C^2").unwrap();
    println!("A^5 B^-3 C^2 canonical: {}", j.format_triple(parsed));

    let h = Group::new(Family::H, p);
    let hab = h.mul(h.gen_a(), h.gen_b());
    println!("in H: (AB)^5 = {}", h.format_word(h.power(hab, 5)));
}
