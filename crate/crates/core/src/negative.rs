//! Assignments that provably do not extend, checked by brute force.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::{Element, Family, Group};
use crate::morphism::GenMap;
use crate::params::GroupParams;

/// Outcome of a family of extension checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Tally {
    pub checked: u64,
    /// Checks whose outcome differed from the claimed one.
    pub disagreements: u64,
}

impl Tally {
    fn see(&mut self, agrees: bool) {
        self.checked += 1;
        self.disagreements += u64::from(!agrees);
    }
}

fn extends(g: Group, a: Element, b: Element) -> bool {
    GenMap::from_images(g, a, b).is_ok_and(|f| f.extends_to_automorphism())
}

/// In H at m = 2, A -> ABz, B -> Bw for every z, w in `perturbations`.
/// The claim is that none of them extends.
pub fn ab_b_perturbations(g: &Group, perturbations: &[Element]) -> Tally {
    let (a, b) = (g.gen_a(), g.gen_b());
    let ab = g.mul(a, b);
    let mut t = Tally::default();
    for &z in perturbations {
        for &w in perturbations {
            t.see(!extends(*g, g.mul(ab, z), g.mul(b, w)));
        }
    }
    t
}

/// In J, A -> A^(1+s) u1, B -> A^s B u2 with u1, u2 drawn from Z_3(J).
/// The claim is that none of them is an endomorphism.
pub fn gamma_lift_perturbations(params: GroupParams, samples: usize, seed: u64) -> Tally {
    let g = Group::new(Family::J, params);
    let s = params.s;
    let z3 = g.center_term(3);
    let a1 = g.power(g.gen_a(), 1 + s);
    let as_b = g.mul(g.power(g.gen_a(), s), g.gen_b());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for _ in 0..samples {
        let u1 = z3[rng.gen_range(0..z3.len())];
        let u2 = z3[rng.gen_range(0..z3.len())];
        let f = GenMap::from_images(g, g.mul(a1, u1), g.mul(as_b, u2));
        t.see(f.is_ok_and(|f| f.check_endomorphism().is_err()));
    }
    t
}

/// The claimed condition for A -> A^a B^x z, B -> B^b A^y z' to extend in H (m > 2),
/// with x = rd, y = re.
pub fn predicted_extension(params: GroupParams, d: bool, e: bool, a: i64, b: i64) -> bool {
    let (s, r) = (params.s, params.s / 2);
    let m2s = |v: i64| v.rem_euclid(2 * s);
    match (d, e) {
        (false, false) => m2s(a) == 1 && m2s(b) == 1,
        (true, true) => m2s(a) == m2s(1 + r) && m2s(b) == m2s(1 + r),
        _ => false,
    }
}

/// Every d, e in {0,1}, odd a, b mod 2u with ab = 1 mod s, and z, z' in Z_1(H),
/// comparing extension checking against `predicted_extension`. Needs m > 2.
pub fn extension_grid(params: GroupParams) -> Tally {
    assert!(params.m > 2, "the grid is stated for m > 2");
    let g = Group::new(Family::H, params);
    let (s, u) = (params.s, params.u);
    let r = s / 2;
    let z1 = g.center_term(1);
    let (ga, gb) = (g.gen_a(), g.gen_b());
    let mut t = Tally::default();
    for d in [false, true] {
        for e in [false, true] {
            let (x, y) = (r * i64::from(d), r * i64::from(e));
            for a in (1..2 * u).step_by(2) {
                for b in (1..2 * u).step_by(2) {
                    if (a * b).rem_euclid(s) != 1 {
                        continue;
                    }
                    let want = predicted_extension(params, d, e, a, b);
                    let ia = g.mul(g.power(ga, a), g.power(gb, x));
                    let ib = g.mul(g.power(gb, b), g.power(ga, y));
                    for &z in &z1 {
                        let ia = g.mul(ia, z);
                        for &z2 in &z1 {
                            t.see(extends(g, ia, g.mul(ib, z2)) == want);
                        }
                    }
                }
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(m: u32) -> GroupParams {
        GroupParams::new(m, 1).unwrap()
    }

    #[test]
    fn ab_b_fails_over_the_center() {
        let g = Group::new(Family::H, gp(2));
        let z1 = g.center_term(1);
        let t = ab_b_perturbations(&g, &z1);
        assert_eq!(
            t,
            Tally {
                checked: 16,
                disagreements: 0
            }
        );
    }

    #[test]
    fn gamma_lift_fails() {
        for m in 2..=3 {
            let t = gamma_lift_perturbations(gp(m), 100, 5);
            assert_eq!(t.disagreements, 0);
        }
    }

    #[test]
    fn grid_at_m3() {
        let t = extension_grid(gp(3));
        assert_eq!(t.checked, 4 * 128 * 64);
        assert_eq!(t.disagreements, 0);
    }

    #[test]
    fn predicted_condition() {
        let p = gp(3);
        assert!(predicted_extension(p, false, false, 9, 1));
        assert!(!predicted_extension(p, false, false, 3, 3));
        // r = 2, so a = b = 3 mod 8.
        assert!(predicted_extension(p, true, true, 3, 11));
        assert!(!predicted_extension(p, true, false, 1, 1));
    }
}
