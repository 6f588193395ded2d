//! Assignments that never extend to automorphisms, checked by brute force.
//!
//! cargo run --example non_extension

use macforge::negative::{ab_b_perturbations, extension_grid, gamma_lift_perturbations};
use macforge::{Family, Group, GroupParams};

fn main() {
    let p2 = GroupParams::new(2, 1).unwrap();
    let h = Group::new(Family::H, p2);
    let t = ab_b_perturbations(&h, &h.center_term(1));
    println!(
        "H m=2, A -> ABz, B -> Bw: {} pairs, {} extend",
        t.checked, t.disagreements
    );

    for m in [2, 3] {
        let t = gamma_lift_perturbations(GroupParams::new(m, 1).unwrap(), 200, 0);
        println!(
            "J m={m}, lifted map: {} samples, {} endomorphisms",
            t.checked, t.disagreements
        );
    }

    for m in [3, 4] {
        let t = extension_grid(GroupParams::new(m, 1).unwrap());
        println!(
            "H m={m}, grid: {} assignments, {} disagree with the condition",
            t.checked, t.disagreements
        );
    }
}
