use macforge::oracle::{cross_check, oddp_range_check, todd_coxeter, CheckMode, Presentation};
use macforge::{Family, GroupParams, OddPrimeParams};

fn gp(m: u32, ell: i64) -> GroupParams {
    GroupParams::new(m, ell).unwrap()
}

#[test]
fn exhaustive_up_to_m2() {
    for m in 1..=2 {
        for f in [Family::J, Family::H, Family::K] {
            let r = cross_check(f, gp(m, 1), CheckMode::Exhaustive).unwrap();
            assert!(r.pass, "{}", r.render_text());
        }
    }
}

#[test]
fn other_ell_at_m2() {
    for ell in [-1, 3] {
        let r = cross_check(
            Family::J,
            gp(2, ell),
            CheckMode::Sampled { n: 20_000, seed: 9 },
        )
        .unwrap();
        assert!(r.pass, "{}", r.render_text());
    }
}

#[test]
fn h_and_k_sampled_at_m3() {
    for f in [Family::H, Family::K] {
        let r = cross_check(
            f,
            gp(3, 1),
            CheckMode::Sampled {
                n: 100_000,
                seed: 1,
            },
        )
        .unwrap();
        assert!(r.pass, "{}", r.render_text());
        let n = r.checks.iter().find(|c| c.name == "coset_count").unwrap();
        assert_eq!(n.actual, if f == Family::H { "32768" } else { "4096" });
    }
}

#[test]
fn default_cap_is_too_small_for_j_at_m3() {
    let p = Presentation::family(Family::J, gp(3, 1)).with_max_cosets(1 << 21);
    assert!(todd_coxeter(&p).is_err());
}

#[test]
fn oddp_both_primes() {
    let r = oddp_range_check(OddPrimeParams::new(3, 1, 1).unwrap(), 20).unwrap();
    assert!(r.pass, "{}", r.render_text());
    let r = oddp_range_check(OddPrimeParams::new(5, 1, 2).unwrap(), 20).unwrap();
    assert!(r.pass, "{}", r.render_text());
}
