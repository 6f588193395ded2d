use macforge::verify::{expected_center_orders, expected_order, verify_formulas, VerifyOptions};
use macforge::{CommCase, Family, Group, GroupParams};

fn g(f: Family, m: u32) -> Group {
    Group::new(f, GroupParams::new(m, 1).unwrap())
}

#[test]
fn orders_by_enumeration() {
    let want = [
        (Family::J, [16, 2048, 262144]),
        (Family::H, [8, 512, 32768]),
        (Family::K, [4, 128, 4096]),
    ];
    for (f, orders) in want {
        for (m, &n) in (1..=3).zip(&orders) {
            assert_eq!(g(f, m).elements().count() as u64, n, "{f} m={m}");
            assert_eq!(expected_order(f, m), n);
        }
    }
}

#[test]
fn element_orders_and_exponents() {
    for m in 2..=4 {
        let j = g(Family::J, m);
        let e = 1i64 << (3 * m - 1);
        assert_eq!(j.element_order(j.gen_a()), e as u64);
        assert_eq!(j.element_order(j.gen_b()), e as u64);
        assert_eq!(j.element_order(j.gen_c()), 1 << (2 * m));
        assert_eq!(j.exponent(), e);
        assert_eq!(g(Family::H, m).exponent(), 1 << (2 * m));
        let k = g(Family::K, m);
        assert_eq!(k.exponent(), 2 * k.params().u);
    }
    // Q16 has exponent 8 although o(A) = 4.
    let q = g(Family::J, 1);
    assert_eq!(q.elements().map(|x| q.element_order(x)).max(), Some(8));
    assert_eq!(q.element_order(q.gen_a()), 4);
}

#[test]
fn center_orders_at_m2_and_m3() {
    for m in 2..=3 {
        for f in [Family::J, Family::H, Family::K] {
            let gr = g(f, m);
            let want = expected_center_orders(f, m);
            for (level, &n) in want.iter().enumerate() {
                assert_eq!(
                    gr.center_term(level as u32).len() as u64,
                    n,
                    "{f} m={m} Z_{level}"
                );
            }
        }
    }
}

#[test]
fn j_center_orders_stated() {
    for m in 2..=4 {
        let e = |x: u32| 1u64 << x;
        assert_eq!(
            expected_center_orders(Family::J, m)[1..5],
            [e(m), e(2 * m), e(4 * m - 2), e(5 * m - 1)]
        );
    }
}

#[test]
fn central_level_two_ways_at_m2() {
    for f in [Family::J, Family::H, Family::K] {
        let gr = g(f, 2);
        for x in gr.elements() {
            assert_eq!(gr.central_level(x), gr.generic_level(x), "{f} {x:?}");
        }
    }
}

#[test]
fn fixtures_at_m2() {
    let h = g(Family::H, 2);
    let (a, b) = (h.gen_a(), h.gen_b());
    let ab = h.mul(a, b);
    assert_eq!(h.power(ab, 5), h.word(5, 5, 2));
    assert_eq!(h.commutator(ab, b), h.word(0, 4, 1));
    for f in [Family::J, Family::H, Family::K] {
        for m in 1..=4 {
            let gr = g(f, m);
            assert_eq!(gr.commutator(gr.gen_a(), gr.gen_b()), gr.gen_c());
        }
    }
    let j = g(Family::J, 2);
    assert_eq!(j.mul(j.gen_b(), j.gen_a()), j.word(17, 1, 7));
    assert_eq!(j.power(j.mul(j.gen_a(), j.gen_b()), 2), j.word(10, 6, 7));
    assert_eq!(j.commutator_special(CommCase::CB, 1, 1), j.word(16, 4, 0));
}

#[test]
fn verify_suite_passes_at_m2_and_m3() {
    for (m, samples) in [(2, 20_000), (3, 5_000)] {
        for f in [Family::J, Family::H, Family::K] {
            let opts = VerifyOptions {
                samples,
                seed: 3,
                exhaustive: false,
                skip_oracle: true,
            };
            let r = verify_formulas(f, GroupParams::new(m, 1).unwrap(), opts).unwrap();
            assert!(r.pass, "{}", r.render_text());
        }
    }
}

#[test]
fn verify_suite_other_ell() {
    for ell in [-1, 3, -5] {
        let opts = VerifyOptions {
            samples: 5_000,
            skip_oracle: true,
            ..Default::default()
        };
        let r = verify_formulas(Family::J, GroupParams::new(2, ell).unwrap(), opts).unwrap();
        assert!(r.pass, "{}", r.render_text());
    }
}
