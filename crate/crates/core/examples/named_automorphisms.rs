//! Generator-image maps: the named catalog, relation checks, composition.
//!
//! cargo run --example named_automorphisms

use macforge::morphism::{catalog, GenMap, NamedAut};
use macforge::{Family, Group, GroupParams};

fn main() {
    let j = Group::new(Family::J, GroupParams::new(2, 1).unwrap());
    for name in [
        NamedAut::Theta,
        NamedAut::Delta1,
        NamedAut::Delta2,
        NamedAut::Delta3,
    ] {
        let f = catalog(&name, &j).unwrap();
        println!(
            "{:<8} A -> {:<18} B -> {:<18} order {:>2}, level {}",
            name.name(),
            j.format_word(f.img_a()),
            j.format_word(f.img_b()),
            f.order(1 << 16).unwrap(),
            f.centrality_level()
        );
    }

    let (n, g) = NamedAut::parse("f[3]@K[3,1]").unwrap();
    let f3 = catalog(&n, &g).unwrap();
    let inv = f3.aut_inverse().unwrap();
    println!("f_3 on K[3,1]: inverse is {}", inv.format_raw());
    println!(
        "f_3 then its inverse is the identity: {}",
        f3.compose(&inv).is_identity()
    );

    // A -> AB, B -> B does not extend in H at m = 2.
    let h = Group::new(Family::H, GroupParams::new(2, 1).unwrap());
    let f = GenMap::from_images(h, h.mul(h.gen_a(), h.gen_b()), h.gen_b()).unwrap();
    match f.check_endomorphism() {
        Ok(()) => println!("A -> AB, B -> B is an endomorphism of H"),
        Err(v) => println!("A -> AB, B -> B fails: {v}"),
    }
}
