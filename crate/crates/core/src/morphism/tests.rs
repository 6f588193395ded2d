use super::*;
use crate::group::Family::{H, J, K};
use crate::params::GroupParams;

fn grp(f: Family, m: u32, ell: i64) -> Group {
    Group::new(f, GroupParams::new(m, ell).unwrap())
}

#[test]
fn theta_swaps_generators() {
    let g = grp(J, 2, 1);
    let t = catalog(&NamedAut::Theta, &g).unwrap();
    assert_eq!(t.apply(g.gen_a()), g.gen_b());
    assert_eq!(t.apply(g.gen_b()), g.gen_a());
    assert!(t.compose(&t).is_identity());
}

#[test]
fn ab_b_is_not_an_endomorphism_of_h() {
    let g = grp(H, 2, 1);
    let f = GenMap::from_images(g, g.mul(g.gen_a(), g.gen_b()), g.gen_b()).unwrap();
    assert!(f.check_endomorphism().is_err());
    assert!(matches!(
        f.is_automorphism(),
        Err(MorphismError::NotEndomorphism(_))
    ));
}

#[test]
fn delta3_images_at_m2() {
    let g = grp(J, 2, 1);
    let d = catalog(&NamedAut::Delta3, &g).unwrap();
    assert_eq!(d.img_a(), g.parse_word("A^3 B^2").unwrap());
    assert_eq!(d.img_b(), g.parse_word("B^3 A^2").unwrap());
}

#[test]
fn f3_inverse_is_f11() {
    let g = grp(K, 3, 1);
    let f3 = catalog(&NamedAut::F(3), &g).unwrap();
    let f11 = catalog(&NamedAut::F(11), &g).unwrap();
    assert_eq!(f3.aut_inverse().unwrap(), f11);
    assert!(f3.compose(&f11).is_identity());
}

#[test]
fn inner_c_centrality() {
    let g = grp(J, 2, 1);
    let f = catalog(&NamedAut::Inner(g.gen_c()), &g).unwrap();
    assert_eq!(f.centrality_level(), 3);
}

fn all_names(g: &Group) -> Vec<NamedAut> {
    let p = g.params();
    let mut v = vec![NamedAut::Inner(g.gen_a()), NamedAut::Inner(g.gen_b())];
    let z1 = g.center_generators(1);
    let z2 = g.center_generators(2);
    let e = g.identity();
    match g.family() {
        J => {
            v.extend([
                NamedAut::Theta,
                NamedAut::Delta1,
                NamedAut::Delta2,
                NamedAut::Delta3,
            ]);
            for &z in &z1 {
                v.extend([NamedAut::Omega(z, e), NamedAut::Omega(e, z)]);
            }
            for &z in &z2 {
                v.extend([NamedAut::PsiJ(z, e), NamedAut::PsiJ(e, z)]);
            }
            if p.m == 3 {
                v.extend([NamedAut::SigmaJ(1), NamedAut::SigmaJ(3)]);
            } else if p.m > 3 {
                v.extend([NamedAut::SigmaJ(0), NamedAut::SigmaJ(2)]);
            }
        }
        H => {
            v.extend([NamedAut::Nu, NamedAut::GammaH]);
            for &z in &z2 {
                v.extend([NamedAut::PiH(z, e), NamedAut::PiH(e, z)]);
            }
            if p.m > 2 {
                v.push(NamedAut::SigmaH);
            }
        }
        K => {
            v.extend([
                NamedAut::Mu,
                NamedAut::PhiK,
                NamedAut::F(3),
                NamedAut::F(-1),
            ]);
            v.extend((1..=5).map(NamedAut::Psi));
            for &z in &z1 {
                v.extend([NamedAut::Omega(z, e), NamedAut::Omega(e, z)]);
            }
            for &z in &z2 {
                v.extend([NamedAut::GammaK(z, e), NamedAut::GammaK(e, z)]);
            }
        }
    }
    v
}

#[test]
fn every_catalog_entry_is_an_automorphism() {
    for m in 2..=4 {
        for ell in [1, -1, 3] {
            for f in Family::ALL {
                let g = grp(f, m, ell);
                for n in all_names(&g) {
                    let h = catalog(&n, &g).unwrap_or_else(|e| panic!("{} in {g}: {e}", n));
                    assert!(h.order(1 << 16).is_ok());
                }
            }
        }
    }
}

#[test]
fn text_round_trip() {
    let g = grp(J, 3, -1);
    for n in all_names(&g) {
        let s = n.format(&g);
        let (back, g2) = NamedAut::parse(&s).unwrap();
        assert_eq!((back, g2), (n, g), "{s}");
    }
    let f = catalog(&NamedAut::Delta1, &g).unwrap();
    assert_eq!(GenMap::parse_raw(&f.format_raw()).unwrap(), f);
    assert!(NamedAut::parse("omega[(1,0,0),(0,0,0)]@J[2,1]").is_ok());
    assert!(NamedAut::parse("nosuch@J[2,1]").is_err());
}

#[test]
fn constraint_violations_are_reported() {
    let g = grp(J, 2, 1);
    let e = g.identity();
    assert!(matches!(
        catalog(&NamedAut::Omega(g.gen_a(), e), &g),
        Err(MorphismError::Constraint { .. })
    ));
    assert!(matches!(
        catalog(&NamedAut::SigmaJ(1), &g),
        Err(MorphismError::Constraint { .. })
    ));
    let g3 = grp(J, 3, 1);
    assert!(matches!(
        catalog(&NamedAut::SigmaJ(2), &g3),
        Err(MorphismError::Constraint { .. })
    ));
    let k = grp(K, 2, 1);
    assert!(matches!(
        catalog(&NamedAut::F(2), &k),
        Err(MorphismError::Constraint { .. })
    ));
    assert!(matches!(
        catalog(&NamedAut::Theta, &k),
        Err(MorphismError::Group(GroupError::FamilyMismatch(..)))
    ));
}

/// A -> ABz, B -> Bw never extends when m = 2, for z, w in Z_1(H).
#[test]
fn h_m2_ab_z_b_w_never_extends() {
    let g = grp(H, 2, 1);
    let ab = g.mul(g.gen_a(), g.gen_b());
    let z1 = g.center_term(1);
    assert_eq!(z1.len(), 4);
    for &z in &z1 {
        for &w in &z1 {
            let f = GenMap::from_images(g, g.mul(ab, z), g.mul(g.gen_b(), w)).unwrap();
            assert!(!f.extends_to_automorphism());
        }
    }
}

/// A -> A^(1+s) u1, B -> A^s B u2 with u1, u2 in Z_3(J) is never an endomorphism.
#[test]
fn gamma_lift_to_j_fails() {
    for m in 2..=3 {
        let g = grp(J, m, 1);
        let s = g.params().s;
        let z3 = g.center_term(3);
        let a1 = g.power(g.gen_a(), 1 + s);
        let as_b = g.mul(g.power(g.gen_a(), s), g.gen_b());
        let n = z3.len();
        for t in 0..128 {
            let u1 = z3[(t * 7919) % n];
            let u2 = z3[(t * 104_729 + 13) % n];
            let f = GenMap::from_images(g, g.mul(a1, u1), g.mul(as_b, u2)).unwrap();
            assert!(f.check_endomorphism().is_err());
        }
    }
}

/// f_n lies in Aut_2(K) exactly when n = 1 mod 2^(m-1).
#[test]
fn f_n_in_aut2_criterion() {
    for m in 2..=3 {
        let g = grp(K, m, 1);
        let (s, u) = (g.params().s, g.params().u);
        for n in (1..2 * u).step_by(2) {
            let f = catalog(&NamedAut::F(n), &g).unwrap();
            assert_eq!(f.centrality_level() <= 2, n % s == 1 % s, "m={m} n={n}");
        }
    }
}

#[test]
fn induced_map_on_quotient() {
    let g = grp(J, 2, 1);
    let t = catalog(&NamedAut::Theta, &g).unwrap();
    let h = grp(H, 2, 1);
    assert_eq!(
        t.induce_on_quotient().unwrap(),
        catalog(&NamedAut::Nu, &h).unwrap()
    );
    assert!(catalog(&NamedAut::Mu, &grp(K, 2, 1))
        .unwrap()
        .induce_on_quotient()
        .is_err());
}

#[test]
fn apply_table_agrees() {
    let g = grp(H, 3, 1);
    let f = catalog(&NamedAut::GammaH, &g).unwrap();
    let t = ApplyTable::new(&f);
    for x in g.elements().step_by(37) {
        assert_eq!(t.apply(x), f.apply(x));
    }
}

#[test]
fn automorphisms_are_multiplicative() {
    let g = grp(J, 2, 3);
    let f = catalog(&NamedAut::Delta3, &g).unwrap();
    let t = ApplyTable::new(&f);
    for x in g.elements().step_by(13) {
        for y in g.elements().step_by(29) {
            assert_eq!(t.apply(g.mul(x, y)), g.mul(t.apply(x), t.apply(y)));
        }
    }
}
