use super::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn g(f: Family, m: u32, ell: i64) -> Group {
    Group::new(f, GroupParams::new(m, ell).unwrap())
}

fn t(gr: &Group, i: i64, j: i64, k: i64) -> Element {
    gr.canonicalize(i, j, k)
}

fn random(gr: &Group, rng: &mut ChaCha8Rng) -> Element {
    gr.from_index(rng.gen_range(0..gr.order()))
}

// Multiplication by repeated generator steps, independent of the closed forms
// except through A*x and B*x with x canonical.
fn slow_power(gr: &Group, x: Element, n: i64) -> Element {
    let base = if n < 0 { gr.invert(x) } else { x };
    (0..n.abs()).fold(gr.identity(), |acc, _| gr.mul(acc, base))
}

#[test]
fn canonicalize_examples() {
    let j = g(Family::J, 2, 1);
    assert_eq!(t(&j, -1, 0, 0).triple(), [31, 0, 0]);
    assert_eq!(t(&j, 0, -1, 0).triple(), [8, 7, 0]);
    assert_eq!(t(&j, 1, 1, -1).triple(), [17, 1, 7]);
}

#[test]
fn mul_examples() {
    let j = g(Family::J, 2, 1);
    assert_eq!(j.mul(j.gen_a(), j.gen_b()).triple(), [1, 1, 0]);
    assert_eq!(j.mul(j.gen_b(), j.gen_a()).triple(), [17, 1, 7]);
    let k = g(Family::K, 3, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let x = random(&k, &mut rng);
        assert_eq!(k.mul(k.identity(), x), x);
    }
}

#[test]
fn invert_examples() {
    let j = g(Family::J, 2, 1);
    assert_eq!(j.invert(j.gen_a()).triple(), [31, 0, 0]);
    assert_eq!(j.invert(j.gen_b()).triple(), [8, 7, 0]);
    let h = g(Family::H, 2, 1);
    assert_eq!(h.invert(h.gen_c()).triple(), [0, 0, 7]);
}

#[test]
fn power_examples() {
    let h = g(Family::H, 2, 1);
    assert_eq!(h.power(t(&h, 1, 1, 0), 5).triple(), [5, 5, 2]);
    let j = g(Family::J, 2, 1);
    let ab = t(&j, 1, 1, 0);
    assert_eq!(j.power(ab, 2).triple(), [10, 6, 7]);
    assert_eq!(j.power(ab, 2), j.mul(ab, ab));
    let k = g(Family::K, 2, 1);
    for x in k.elements() {
        assert!(k.power(x, 0).is_identity());
    }
}

#[test]
fn special_commutator_examples() {
    for f in Family::ALL {
        for m in 1..=3 {
            let gr = g(f, m, 1);
            assert_eq!(gr.commutator_special(CommCase::AB, 1, 1), gr.gen_c());
            assert_eq!(gr.commutator(gr.gen_a(), gr.gen_b()), gr.gen_c());
        }
    }
    let j = g(Family::J, 2, 1);
    assert_eq!(
        j.commutator_special(CommCase::CA, 1, 1).triple(),
        [28, 0, 0]
    );
    assert_eq!(
        j.commutator_special(CommCase::CB, 1, 1).triple(),
        [16, 4, 0]
    );
}

#[test]
fn commutator_mod_center_examples() {
    let j = g(Family::J, 2, 1);
    let h = j.quotient().unwrap();
    let (ab, b) = (t(&j, 1, 1, 0), j.gen_b());
    let expect = j.z1_representative(j.word(0, 4, 1));
    assert_eq!(j.commutator_mod_z1(ab, b).unwrap(), expect);
    assert_eq!(j.z1_representative(j.commutator(ab, b)), expect);
    // exact in H: [AB,B] = B^4 C
    assert_eq!(h.commutator(t(&h, 1, 1, 0), h.gen_b()), t(&h, 0, 4, 1));
    assert_eq!(
        h.commutator_mod_z1(t(&h, 1, 1, 0), h.gen_b()).unwrap(),
        t(&h, 0, 4, 1)
    );
    let x = t(&j, 5, 3, 2);
    assert!(j.commutator_mod_z1(x, j.identity()).unwrap().is_identity());
    assert!(g(Family::K, 2, 1)
        .commutator_mod_z1(t(&h, 0, 0, 0), t(&h, 0, 0, 0))
        .is_err());
}

#[test]
fn commutator_mod_center_agrees() {
    for (f, m) in [
        (Family::J, 2),
        (Family::J, 3),
        (Family::H, 2),
        (Family::H, 3),
    ] {
        let gr = g(f, m, -3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..3000 {
            let (x, y) = (random(&gr, &mut rng), random(&gr, &mut rng));
            assert_eq!(
                gr.commutator_mod_z1(x, y).unwrap(),
                gr.z1_representative(gr.commutator(x, y)),
                "{gr} {x:?} {y:?}"
            );
        }
    }
}

#[test]
fn element_order_examples() {
    let j = g(Family::J, 2, 1);
    assert_eq!(j.element_order(j.gen_a()), 32);
    assert_eq!(j.element_order(j.gen_b()), 32);
    assert_eq!(j.element_order(j.gen_c()), 16);
    assert_eq!(j.element_order(j.identity()), 1);
}

#[test]
fn central_level_examples() {
    let j = g(Family::J, 2, 1);
    assert_eq!(j.central_level(t(&j, 8, 0, 0)), 1);
    assert_eq!(j.central_level(j.gen_c()), 4);
    assert_eq!(j.central_level(j.identity()), 0);
    assert_eq!(j.generic_level(j.gen_c()), 4);
    assert_eq!(j.central_level(j.gen_a()), 5);
}

#[test]
fn orders_by_generation() {
    // Breadth-first closure of {1} under right multiplication by A and B.
    for f in Family::ALL {
        for m in 1..=3 {
            let gr = g(f, m, 1);
            let mut seen = vec![false; gr.order() as usize];
            let mut queue = vec![gr.identity()];
            seen[0] = true;
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for s in [gr.gen_a(), gr.gen_b()] {
                    let y = gr.mul(x, s);
                    assert!(gr.contains(y));
                    let idx = gr.index(y) as usize;
                    if !seen[idx] {
                        seen[idx] = true;
                        queue.push(y);
                    }
                }
            }
            let expect = 1u64 << (7 * m - 3 - f.depth() * m);
            assert_eq!(queue.len() as u64, expect, "{gr}");
            assert_eq!(gr.order(), expect);
        }
    }
}

#[test]
fn exhaustive_associativity_m1() {
    for f in Family::ALL {
        let gr = g(f, 1, 1);
        let els: Vec<_> = gr.elements().collect();
        for &x in &els {
            assert!(gr.mul(x, gr.invert(x)).is_identity());
            for &y in &els {
                for &z in &els {
                    assert_eq!(gr.mul(gr.mul(x, y), z), gr.mul(x, gr.mul(y, z)));
                }
            }
        }
    }
}

#[test]
fn associativity_sampled() {
    for f in Family::ALL {
        for ell in [1, -1, 3] {
            let gr = g(f, 2, ell);
            let mut rng = ChaCha8Rng::seed_from_u64(0xA550C);
            for _ in 0..100_000 {
                let (x, y, z) = (
                    random(&gr, &mut rng),
                    random(&gr, &mut rng),
                    random(&gr, &mut rng),
                );
                assert_eq!(gr.mul(gr.mul(x, y), z), gr.mul(x, gr.mul(y, z)), "{gr}");
            }
        }
        let gr = g(f, 3, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20_000 {
            let (x, y, z) = (
                random(&gr, &mut rng),
                random(&gr, &mut rng),
                random(&gr, &mut rng),
            );
            assert_eq!(gr.mul(gr.mul(x, y), z), gr.mul(x, gr.mul(y, z)), "{gr}");
        }
    }
}

#[test]
fn inverses() {
    for f in [Family::K, Family::H] {
        let gr = g(f, 2, 1);
        for x in gr.elements() {
            assert!(gr.mul(x, gr.invert(x)).is_identity());
            assert!(gr.mul(gr.invert(x), x).is_identity());
        }
    }
    let j = g(Family::J, 2, 1);
    for x in j.elements() {
        assert!(j.mul(x, j.invert(x)).is_identity());
    }
    let j = g(Family::J, 3, -1);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100_000 {
        let x = random(&j, &mut rng);
        assert!(j.mul(x, j.invert(x)).is_identity());
    }
}

#[test]
fn power_coherence() {
    for f in Family::ALL {
        for m in 1..=3 {
            let gr = g(f, m, 3);
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..40 {
                let x = random(&gr, &mut rng);
                for n in -40..=40 {
                    assert_eq!(gr.power(x, n), slow_power(&gr, x, n), "{gr} {x:?} {n}");
                }
            }
        }
    }
}

#[test]
fn exponents() {
    for f in Family::ALL {
        for m in 1..=3 {
            let gr = g(f, m, 1);
            let e = gr.exponent();
            let mut max = 1;
            for x in gr
                .elements()
                .step_by(((gr.order() / 20_000).max(1)) as usize)
            {
                assert!(gr.power(x, e).is_identity());
                max = max.max(gr.element_order(x));
            }
            assert_eq!(max as i64, e, "{gr}");
        }
    }
}

#[test]
fn closed_forms_match_projection() {
    for m in 1..=3 {
        for ell in [1, -3] {
            let j = g(Family::J, m, ell);
            let h = j.quotient().unwrap();
            let k = h.quotient().unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            for _ in 0..20_000 {
                let (x, y) = (random(&j, &mut rng), random(&j, &mut rng));
                let n = rng.gen_range(-100..100);
                let (hx, hy) = (j.project(x), j.project(y));
                let (kx, ky) = (h.project(hx), h.project(hy));
                assert_eq!(j.project(j.mul(x, y)), h.mul(hx, hy));
                assert_eq!(h.project(h.mul(hx, hy)), k.mul(kx, ky));
                assert_eq!(h.mul_closed(hx, hy), h.mul(hx, hy));
                assert_eq!(k.mul_closed(kx, ky), k.mul(kx, ky));
                assert_eq!(h.power_closed(hx, n), h.power(hx, n));
                assert_eq!(k.power_closed(kx, n), k.power(kx, n));
                assert_eq!(j.project(j.power(x, n)), h.power(hx, n));
            }
        }
    }
}

#[test]
fn k_big_commutator_mod_center() {
    let k = g(Family::K, 3, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..5000 {
        let (x, y) = (random(&k, &mut rng), random(&k, &mut rng));
        let c = formulas::k_big_commutator_c(x.triple(), y.triple());
        let z = k.mul(k.commutator(x, y), k.invert(k.power(k.gen_c(), c)));
        assert!(k.central_level(z) <= 1);
    }
}

#[test]
fn h_power_two_u() {
    let h = g(Family::H, 3, 1);
    let u2 = 2 * h.params().u;
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..5000 {
        let x = random(&h, &mut rng);
        let [a, b, _] = x.triple();
        let expect = h.canonicalize(0, 0, formulas::h_power_2u_c(h.params(), a, b));
        assert_eq!(h.power(x, u2), expect);
    }
}

#[test]
fn relations_hold() {
    for f in Family::ALL {
        for m in 1..=3 {
            for ell in [1, -1, 5] {
                let gr = g(f, m, ell);
                let (a, b, c) = (gr.gen_a(), gr.gen_b(), gr.gen_c());
                let alpha = gr.params().alpha;
                assert_eq!(gr.conj(a, c), gr.power(a, alpha));
                assert_eq!(gr.conj(b, gr.invert(c)), gr.power(b, alpha));
                if f == Family::J {
                    let p = *gr.params();
                    let (u2, us2) = (2 * p.u, 2 * p.u * p.s);
                    assert!(gr.mul(gr.power(a, u2), gr.power(b, u2)).is_identity());
                    assert_eq!(gr.power(a, us2), gr.power(c, u2));
                    assert_eq!(gr.power(b, us2), gr.power(c, u2));
                    assert_eq!(gr.element_order(a) as i64, 4 * p.u * p.s);
                    assert_eq!(gr.element_order(c) as i64, 4 * p.u);
                }
            }
        }
    }
}

#[test]
fn representative_independence() {
    let j = g(Family::J, 2, 3);
    let [oa, oc] = [32i64, 16];
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..20_000 {
        let x = random(&j, &mut rng).triple();
        let y = random(&j, &mut rng).triple();
        let base = j.mul(
            j.canonicalize(x[0], x[1], x[2]),
            j.canonicalize(y[0], y[1], y[2]),
        );
        let r = &j.ring;
        let p = j.params;
        for shift in [[oa, 0, 0], [0, oa, 0], [0, 0, oc]] {
            let xs = [x[0] + shift[0], x[1] + shift[1], x[2] + shift[2]];
            let ys = [
                y[0] - 2 * shift[0],
                y[1] - 3 * shift[1],
                y[2] + 5 * shift[2],
            ];
            assert_eq!(j.element_of_raw(formulas::j_product(r, &p, xs, y)), base);
            assert_eq!(j.element_of_raw(formulas::j_product(r, &p, x, ys)), base);
            let inv = j.invert(j.canonicalize(x[0], x[1], x[2]));
            assert_eq!(j.element_of_raw(formulas::j_inverse(r, &p, xs)), inv);
            for n in [-7, 3, 12] {
                let pw = j.power(j.canonicalize(x[0], x[1], x[2]), n);
                assert_eq!(j.element_of_raw(formulas::j_power(r, &p, xs, n, true)), pw);
            }
        }
    }
}

#[test]
fn special_vs_generic() {
    for f in Family::ALL {
        let gr = g(f, 2, 1);
        let bound = 2 * gr.exponent();
        let (a, b, c) = (gr.gen_a(), gr.gen_b(), gr.gen_c());
        for n in -bound..=bound {
            let (an, cn) = (gr.power(a, n), gr.power(c, n));
            for t in -bound..=bound {
                let (at, bt) = (gr.power(a, t), gr.power(b, t));
                assert_eq!(
                    gr.commutator_special(CommCase::CA, n, t),
                    gr.commutator(cn, at)
                );
                assert_eq!(
                    gr.commutator_special(CommCase::CB, n, t),
                    gr.commutator(cn, bt)
                );
                assert_eq!(
                    gr.commutator_special(CommCase::AB, n, t),
                    gr.commutator(an, bt)
                );
            }
        }
    }
}

#[test]
fn central_series_counts() {
    for m in 2..=3u32 {
        for f in Family::ALL {
            let gr = g(f, m, 1);
            let mut counts = vec![0u64; gr.class() as usize + 1];
            for x in gr.elements() {
                counts[gr.central_level(x) as usize] += 1;
            }
            let cum: Vec<u64> = counts
                .iter()
                .scan(0, |acc, c| {
                    *acc += c;
                    Some(*acc)
                })
                .collect();
            let e = |x: u32| 1u64 << x;
            let expect: Vec<u64> = match f {
                Family::J => vec![1, e(m), e(2 * m), e(4 * m - 2), e(5 * m - 1), e(7 * m - 3)],
                Family::H => vec![1, e(m), e(3 * m - 2), e(4 * m - 1), e(6 * m - 3)],
                Family::K => vec![1, e(2 * m - 2), e(3 * m - 1), e(5 * m - 3)],
            };
            assert_eq!(cum, expect, "{gr}");
            for lvl in 0..=gr.class() {
                assert_eq!(gr.center_term(lvl).len() as u64, expect[lvl as usize]);
            }
        }
    }
}

#[test]
fn explicit_and_generic_levels_agree() {
    for f in Family::ALL {
        let gr = g(f, 2, 1);
        for x in gr.elements() {
            assert_eq!(gr.explicit_level(x), Some(gr.generic_level(x)), "{x:?}");
        }
    }
}

#[test]
fn m1_structure() {
    let j = g(Family::J, 1, 1);
    assert_eq!(j.class(), 3);
    let involutions = j.elements().filter(|&x| j.element_order(x) == 2).count();
    assert_eq!(involutions, 1);
    assert_eq!(j.center_term(1).len(), 2);
    let k = g(Family::K, 1, 1);
    assert!(k.is_abelian());
    assert_eq!(k.center_term(1).len(), 4);
}

#[test]
fn text_round_trip() {
    let j = g(Family::J, 2, -3);
    for x in j.elements().step_by(37) {
        let w = j.format_word(x);
        assert_eq!(j.parse_word(&w).unwrap(), x);
        let tr = j.format_triple(x);
        assert_eq!(parse_triple(&tr).unwrap(), (j, x));
        assert_eq!(j.parse_element(&tr).unwrap(), x);
    }
    assert_eq!(j.parse_word("B A").unwrap().triple(), [17, 1, 7]);
    assert_eq!(j.parse_word("B^-1").unwrap().triple(), [8, 7, 0]);
    assert!(j.parse_word("A^x").is_err());
    assert!(j.parse_element("(0,0,0)@J[2,1]").is_err());
    assert_eq!("K[3,-1]".parse::<Group>().unwrap(), g(Family::K, 3, -1));
}

#[test]
fn family_mismatch_is_reported() {
    let j = g(Family::J, 2, 1);
    let h = g(Family::H, 2, 1);
    assert_eq!(
        j.try_mul(j.gen_a(), h.gen_a()),
        Err(GroupError::FamilyMismatch(Family::J, Family::H))
    );
}

proptest! {
    #[test]
    fn canonical_ranges(i in -10_000i64..10_000, jj in -10_000i64..10_000, k in -10_000i64..10_000, m in 1u32..=4) {
        for f in Family::ALL {
            let gr = g(f, m, 1);
            let x = gr.canonicalize(i, jj, k);
            prop_assert!(gr.contains(x));
            prop_assert_eq!(gr.canonicalize(x.i as i64, x.j as i64, x.k as i64), x);
            prop_assert_eq!(gr.word(i, jj, k), x);
        }
    }

    #[test]
    fn multiplicative_inverse_law(seed in any::<u64>(), m in 1u32..=4, ell in -9i64..9) {
        let gr = g(Family::J, m, 2 * ell + 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random(&gr, &mut rng), random(&gr, &mut rng));
        prop_assert_eq!(gr.invert(gr.mul(x, y)), gr.mul(gr.invert(y), gr.invert(x)));
        prop_assert_eq!(gr.power(gr.mul(x, y), -1), gr.invert(gr.mul(x, y)));
    }
}
