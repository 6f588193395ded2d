//! The arithmetic invariant suite behind `verify-formulas`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::OracleError;
use crate::group::{formulas::CommCase, Element, Family, Group};
use crate::oracle::{cross_check_with, CheckMode, Oracle};
use crate::params::GroupParams;
use crate::report::{Report, ReportParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Random samples per sampled property.
    pub samples: usize,
    pub seed: u64,
    /// Exhaust every element (and pairs, where affordable) instead of sampling.
    pub exhaustive: bool,
    /// Skip the coset-table cross-check.
    pub skip_oracle: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 100_000,
            seed: 0,
            exhaustive: false,
            skip_oracle: false,
        }
    }
}

/// Triples checked exhaustively for associativity when |G|^3 is at most this.
const ASSOC_EXHAUSTIVE: u64 = 1 << 24;

/// Counter with a first witness.
#[derive(Default)]
struct Count {
    checked: u64,
    bad: u64,
    witness: Option<String>,
}

impl Count {
    fn see(&mut self, ok: bool, w: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.bad += 1;
            self.witness.get_or_insert_with(w);
        }
    }

    fn push(self, report: &mut Report, name: &str, t: Instant) {
        let mut actual = format!("{} checked, {} failures", self.checked, self.bad);
        if let Some(w) = self.witness {
            actual.push_str(&format!(" (first: {w})"));
        }
        report.check_that(
            name,
            "0 failures",
            actual,
            self.bad == 0 && self.checked > 0,
            t.elapsed().as_millis() as u64,
        );
    }
}

fn tr(x: Element) -> String {
    let [i, j, k] = x.triple();
    format!("({i},{j},{k})")
}

/// Stated orders of A, B, C.
fn generator_orders(g: &Group) -> [u64; 3] {
    let p = g.params();
    let (s, u) = (p.s as u64, p.u as u64);
    match g.family() {
        Family::J => [4 * u * s, 4 * u * s, 4 * u],
        Family::H => [2 * u, 2 * u, 2 * u],
        Family::K => [2 * u, 2 * u, s],
    }
}

/// |Z_i| for i = 0..=class, as stated for m > 1.
pub fn expected_center_orders(family: Family, m: u32) -> Vec<u64> {
    let e = |x: u32| 1u64 << x;
    match family {
        Family::J => vec![1, e(m), e(2 * m), e(4 * m - 2), e(5 * m - 1), e(7 * m - 3)],
        Family::H => vec![1, e(m), e(3 * m - 2), e(4 * m - 1), e(6 * m - 3)],
        Family::K => vec![1, e(2 * m - 2), e(3 * m - 1), e(5 * m - 3)],
    }
}

/// 2^(7m-3), 2^(6m-3), 2^(5m-3).
pub fn expected_order(family: Family, m: u32) -> u64 {
    1 << ([7, 6, 5][family.depth() as usize] * m - 3)
}

fn random(g: &Group, rng: &mut ChaCha8Rng) -> Element {
    g.from_index(rng.gen_range(0..g.order()))
}

/// Sample of elements: all of them when exhaustive, else `n` random ones.
fn elements(g: &Group, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Vec<Element> {
    if opts.exhaustive {
        g.elements().collect()
    } else {
        (0..opts.samples).map(|_| random(g, rng)).collect()
    }
}

/// Run the arithmetic invariants and, unless skipped, the oracle cross-check.
pub fn verify_formulas(
    family: Family,
    params: GroupParams,
    opts: VerifyOptions,
) -> Result<Report, OracleError> {
    let g = Group::new(family, params);
    let m = params.m;
    let mut report = Report::new(ReportParams {
        command: "verify-formulas".into(),
        family: Some(family),
        m: Some(m),
        ell: Some(params.ell),
        seed: (!opts.exhaustive).then_some(opts.seed),
        ..Default::default()
    });
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (a, b, c) = (g.gen_a(), g.gen_b(), g.gen_c());

    // Normal-form closure.
    let t = Instant::now();
    let mut distinct = 0u64;
    let mut canon = Count::default();
    for x in g.elements() {
        let [i, j, k] = x.triple();
        let y = g.canonicalize(i, j, k);
        canon.see(y == x, || tr(x));
        distinct += 1;
    }
    report.check_eq(
        "group_order",
        expected_order(family, m),
        distinct,
        t.elapsed().as_millis() as u64,
    );
    canon.push(&mut report, "canonical_forms_fixed", t);

    // Associativity.
    let t = Instant::now();
    let mut assoc = Count::default();
    let n = g.order();
    if opts.exhaustive && n * n * n <= ASSOC_EXHAUSTIVE {
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                for z in g.elements() {
                    assoc.see(g.mul(xy, z) == g.mul(x, g.mul(y, z)), || {
                        format!("{} {} {}", tr(x), tr(y), tr(z))
                    });
                }
            }
        }
    } else {
        for _ in 0..opts.samples {
            let (x, y, z) = (
                random(&g, &mut rng),
                random(&g, &mut rng),
                random(&g, &mut rng),
            );
            assoc.see(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)), || {
                format!("{} {} {}", tr(x), tr(y), tr(z))
            });
        }
    }
    assoc.push(&mut report, "associativity", t);

    // Identity and inverses, over every element.
    let t = Instant::now();
    let mut inv = Count::default();
    for x in g.elements() {
        let xi = g.invert(x);
        inv.see(
            g.mul(x, xi).is_identity() && g.mul(xi, x).is_identity() && g.mul(g.identity(), x) == x,
            || tr(x),
        );
    }
    inv.push(&mut report, "inverses", t);

    // Powers against iterated products, |n| <= 40.
    let t = Instant::now();
    let mut pw = Count::default();
    let sample = (opts.samples / 80).max(16);
    for _ in 0..sample {
        let x = random(&g, &mut rng);
        let xi = g.invert(x);
        let (mut up, mut down) = (g.identity(), g.identity());
        for n in 0..=40i64 {
            pw.see(g.power(x, n) == up, || format!("{}^{n}", tr(x)));
            pw.see(g.power(x, -n) == down, || format!("{}^-{n}", tr(x)));
            up = g.mul(up, x);
            down = g.mul(down, xi);
        }
    }
    pw.push(&mut report, "power_coherence", t);

    // Exponent: x^e = 1 everywhere sampled, and some sampled element has order e.
    let t = Instant::now();
    let e = g.exponent();
    let mut exp = Count::default();
    let mut max_order = 1u64;
    let xs: Vec<Element> = if n <= 1 << 15 || opts.exhaustive {
        g.elements().collect()
    } else {
        (0..opts.samples.min(20_000))
            .map(|_| random(&g, &mut rng))
            .chain([a])
            .collect()
    };
    for &x in &xs {
        exp.see(g.power(x, e).is_identity(), || tr(x));
        max_order = max_order.max(g.element_order(x));
    }
    exp.push(&mut report, "power_exponent_is_identity", t);
    report.check_eq("exponent", e as u64, max_order, 0);

    let orders = [a, b, c].map(|x| g.element_order(x));
    let want = generator_orders(&g);
    report.check_that(
        "generator_orders",
        &format!("{want:?}"),
        format!("{orders:?}"),
        orders == want,
        0,
    );

    // Defining relations.
    let alpha = params.alpha;
    let mut rel = vec![
        ("a_conj_c", g.conj(a, c) == g.power(a, alpha)),
        (
            "b_conj_c_inverse",
            g.conj(b, g.invert(c)) == g.power(b, alpha),
        ),
        ("commutator_a_b", g.commutator(a, b) == c),
    ];
    if family == Family::J {
        let (u2, us2) = (2 * params.u, 2 * params.u * params.s);
        rel.push((
            "a_2u_b_2u",
            g.mul(g.power(a, u2), g.power(b, u2)).is_identity(),
        ));
        rel.push(("a_2us_c_2u", g.power(a, us2) == g.power(c, u2)));
    }
    let failed: Vec<&str> = rel.iter().filter(|r| !r.1).map(|r| r.0).collect();
    report.check_that(
        "relations_hold",
        "all",
        if failed.is_empty() {
            "all".to_string()
        } else {
            failed.join(", ")
        },
        failed.is_empty(),
        0,
    );
    if family == Family::H {
        let t = Instant::now();
        let u = params.u;
        let mut nh = Count::default();
        for x in elements(&g, &opts, &mut rng).into_iter().take(20_000) {
            let [i, j, _] = x.triple();
            let want = g.canonicalize(0, 0, u * i * j);
            nh.see(g.power(x, 2 * u) == want, || tr(x));
        }
        nh.push(&mut report, "h_power_2u_is_c_uab", t);
    }

    // Quotient compatibility.
    if let Some(q) = g.quotient() {
        let t = Instant::now();
        let mut qc = Count::default();
        for _ in 0..opts.samples {
            let (x, y) = (random(&g, &mut rng), random(&g, &mut rng));
            let k = rng.gen_range(-100..100);
            let (px, py) = (g.project(x), g.project(y));
            qc.see(
                g.project(g.mul(x, y)) == q.mul(px, py)
                    && g.project(g.power(x, k)) == q.power(px, k),
                || format!("{} {}", tr(x), tr(y)),
            );
        }
        qc.push(&mut report, "quotient_compatible", t);
    }
    if family != Family::J {
        let t = Instant::now();
        let mut co = Count::default();
        for _ in 0..opts.samples.min(50_000) {
            let (x, y) = (random(&g, &mut rng), random(&g, &mut rng));
            let k = rng.gen_range(-100..100);
            co.see(
                g.mul_closed(x, y) == g.mul(x, y) && g.power_closed(x, k) == g.power(x, k),
                || format!("{} {}", tr(x), tr(y)),
            );
        }
        co.push(&mut report, "closed_forms_match", t);
    }

    // Special commutators against x^-1 y^-1 x y.
    let t = Instant::now();
    let bound = (2 * e).min(64);
    let mut sc = Count::default();
    for nn in -bound..=bound {
        let (an, cn) = (g.power(a, nn), g.power(c, nn));
        for tt in -bound..=bound {
            let (at, bt) = (g.power(a, tt), g.power(b, tt));
            sc.see(
                g.commutator_special(CommCase::CA, nn, tt) == g.commutator(cn, at)
                    && g.commutator_special(CommCase::CB, nn, tt) == g.commutator(cn, bt)
                    && g.commutator_special(CommCase::AB, nn, tt) == g.commutator(an, bt),
                || format!("n={nn} t={tt}"),
            );
        }
    }
    sc.push(&mut report, "special_commutators", t);

    // Central series.
    if m > 1 {
        let t = Instant::now();
        let mut counts = vec![0u64; g.class() as usize + 1];
        let mut agree = Count::default();
        let check_generic = n <= 1 << 18;
        for x in g.elements() {
            let lvl = g.central_level(x);
            counts[lvl as usize] += 1;
            if check_generic {
                agree.see(g.generic_level(x) == lvl, || tr(x));
            }
        }
        let cum: Vec<u64> = counts
            .iter()
            .scan(0, |s, c| {
                *s += c;
                Some(*s)
            })
            .collect();
        let want = expected_center_orders(family, m);
        report.check_that(
            "center_orders",
            &format!("{want:?}"),
            format!("{cum:?}"),
            cum == want,
            t.elapsed().as_millis() as u64,
        );
        if check_generic {
            agree.push(&mut report, "central_level_two_ways", t);
        }
    }

    fixtures(&g, &mut report);

    if !opts.skip_oracle {
        let t = Instant::now();
        let oracle = Oracle::build(family, params)?;
        report.check_eq(
            "coset_count",
            g.order(),
            oracle.table().len() as u64,
            t.elapsed().as_millis() as u64,
        );
        let mode = if opts.exhaustive {
            CheckMode::Exhaustive
        } else {
            CheckMode::Sampled {
                n: opts.samples,
                seed: opts.seed,
            }
        };
        cross_check_with(&oracle, mode, &mut report);
    }
    report.recompute();
    Ok(report)
}

/// Worked values at (m, ell) = (2, 1).
fn fixtures(g: &Group, report: &mut Report) {
    let p = g.params();
    if p.m != 2 || p.ell != 1 {
        return;
    }
    let w = |i, j, k| g.canonicalize(i, j, k);
    let (a, b) = (g.gen_a(), g.gen_b());
    let ab = g.mul(a, b);
    let mut eq = |name: &str, got: Element, want: Element| {
        report.check_eq(name, g.format_word(want), g.format_word(got), 0);
    };
    match g.family() {
        Family::H => {
            eq("fixture_ab_pow5", g.power(ab, 5), w(5, 5, 2));
            eq("fixture_comm_ab_b", g.commutator(ab, b), w(0, 4, 1));
        }
        Family::J => {
            eq("fixture_ba", g.mul(b, a), w(17, 1, 7));
            eq("fixture_ab_squared", g.power(ab, 2), w(10, 6, 7));
            eq(
                "fixture_cb_special",
                g.commutator_special(CommCase::CB, 1, 1),
                w(16, 4, 0),
            );
            eq(
                "fixture_ca_special",
                g.commutator_special(CommCase::CA, 1, 1),
                w(28, 0, 0),
            );
        }
        Family::K => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_verify() {
        for m in 1..=2 {
            for f in [Family::J, Family::H, Family::K] {
                let opts = VerifyOptions {
                    samples: 3000,
                    exhaustive: m == 1,
                    ..Default::default()
                };
                let r = verify_formulas(f, GroupParams::new(m, 1).unwrap(), opts).unwrap();
                assert!(r.pass, "{}", r.render_text());
            }
        }
    }

    #[test]
    fn fixtures_are_present_at_m2() {
        let opts = VerifyOptions {
            samples: 500,
            skip_oracle: true,
            ..Default::default()
        };
        let r = verify_formulas(Family::J, GroupParams::new(2, 1).unwrap(), opts).unwrap();
        assert!(r.checks.iter().any(|c| c.name == "fixture_ba" && c.pass));
        assert!(r.checks.iter().all(|c| c.name != "coset_count"));
    }
}
