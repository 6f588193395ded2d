use macforge::arith::{phi, varphi};
use macforge::autenum::standard_generators;
use macforge::report::{Check, Report, ReportParams};
use macforge::{Element, Family, Group, GroupParams};
use proptest::prelude::*;

fn group(f: u8, m: u32, ell: i64) -> Group {
    let f = [Family::J, Family::H, Family::K][f as usize];
    Group::new(f, GroupParams::new(m, 2 * ell + 1).unwrap())
}

fn el(g: &Group, idx: u64) -> Element {
    g.from_index(idx % g.order())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn associativity(f in 0u8..3, m in 1u32..=4, ell in -6i64..6, x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let g = group(f, m, ell);
        let (x, y, z) = (el(&g, x), el(&g, y), el(&g, z));
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
    }

    #[test]
    fn inverse(f in 0u8..3, m in 1u32..=4, ell in -6i64..6, x in any::<u64>()) {
        let g = group(f, m, ell);
        let x = el(&g, x);
        prop_assert!(g.mul(x, g.invert(x)).is_identity());
        prop_assert_eq!(g.invert(g.invert(x)), x);
    }

    #[test]
    fn power_coherence(f in 0u8..3, m in 1u32..=4, ell in -6i64..6, x in any::<u64>(), a in -300i64..300, b in -300i64..300) {
        let g = group(f, m, ell);
        let x = el(&g, x);
        prop_assert_eq!(g.power(x, a + b), g.mul(g.power(x, a), g.power(x, b)));
        prop_assert_eq!(g.power(x, a * b), g.power(g.power(x, a), b));
        prop_assert!(g.power(x, g.exponent()).is_identity());
    }

    #[test]
    fn quotient_compatibility(f in 0u8..2, m in 1u32..=4, ell in -6i64..6, x in any::<u64>(), y in any::<u64>(), n in -500i64..500) {
        let g = group(f, m, ell);
        let q = g.quotient().unwrap();
        let (x, y) = (el(&g, x), el(&g, y));
        prop_assert_eq!(g.project(g.mul(x, y)), q.mul(g.project(x), g.project(y)));
        prop_assert_eq!(g.project(g.power(x, n)), q.power(g.project(x), n));
        prop_assert_eq!(g.project(g.commutator(x, y)), q.commutator(g.project(x), g.project(y)));
    }

    #[test]
    fn representative_independence(f in 0u8..3, m in 1u32..=4, i in -5000i64..5000, j in -5000i64..5000, k in -5000i64..5000, s in -3i64..3, t in -3i64..3) {
        let g = group(f, m, 0);
        let [oa, ob, oc] = [g.gen_a(), g.gen_b(), g.gen_c()].map(|x| g.element_order(x) as i64);
        let x = g.canonicalize(i, j, k);
        // A^i B^j C^k depends only on i, j, k modulo the generator orders.
        let prod = g.mul(g.mul(g.power(g.gen_a(), i), g.power(g.gen_b(), j)), g.power(g.gen_c(), k));
        prop_assert_eq!(g.word(i, j, k), prod);
        prop_assert_eq!(g.word(i + s * oa, j + t * ob, k + (s - t) * oc), prod);
        prop_assert_eq!(x, prod);
        prop_assert!(g.contains(x));
    }

    #[test]
    fn arith_identities(n in -1000i64..1000, t in -1000i64..1000) {
        let (ni, ti) = (n as i128, t as i128);
        prop_assert_eq!(phi(n + 1) + phi(n), ni * ni);
        prop_assert_eq!(phi(n + t), phi(n) + phi(t) + ni * ti);
        prop_assert_eq!(varphi(n + t), varphi(n) + varphi(t) + ni * phi(t) + phi(n) * ti);
        prop_assert_eq!(phi(-n), phi(n + 1));
    }

    #[test]
    fn automorphisms_are_multiplicative(m in 1u32..=3, gi in any::<usize>(), x in any::<u64>(), y in any::<u64>()) {
        let g = Group::new(Family::J, GroupParams::new(m, 1).unwrap());
        let gens = standard_generators(Family::J, *g.params()).unwrap();
        let f = &gens[gi % gens.len()];
        let (x, y) = (el(&g, x), el(&g, y));
        prop_assert_eq!(f.apply(g.mul(x, y)), g.mul(f.apply(x), f.apply(y)));
    }

    #[test]
    fn report_round_trip(names in proptest::collection::vec("[a-z_]{1,12}", 0..8), passes in proptest::collection::vec(any::<bool>(), 8), ms in any::<u32>()) {
        let mut r = Report::new(ReportParams {
            command: "x".into(),
            family: Some(Family::H),
            m: Some(2),
            ..Default::default()
        });
        for (n, &p) in names.iter().zip(&passes) {
            r.push(Check { name: n.clone(), expected: "e".into(), actual: "a".into(), pass: p, elapsed_ms: ms as u64 });
        }
        let back = Report::from_json(&r.to_json()).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(r.pass, r.checks.iter().all(|c| c.pass));
    }
}
