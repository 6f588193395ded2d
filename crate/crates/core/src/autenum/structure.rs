//! Factor orders, Klein-group and relation checks on Aut(T).

use std::time::Instant;

use super::{
    aut2_generators, aut3_h_generators, closure, filtration::filtration_report, pair_level,
    standard_generators, Filtration, DEFAULT_LIMIT,
};
use crate::error::AutError;
use crate::group::{Family, Group};
use crate::morphism::{catalog, GenMap, NamedAut};
use crate::params::GroupParams;
use crate::report::{Report, ReportParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    /// Everything except J at m >= 3.
    Quick,
    /// Also J at m = 3 (2^24 automorphisms).
    Full,
}

/// f^-1 g^-1 f g.
fn aut_commutator(f: &GenMap, g: &GenMap) -> Result<GenMap, AutError> {
    Ok(f.aut_inverse()?
        .compose(&g.aut_inverse()?)
        .compose(f)
        .compose(g))
}

/// Whether the images of `gens` in G/N form an elementary abelian 2-group,
/// i.e. all squares and pairwise commutators lie in N.
fn elementary_abelian_mod(
    gens: &[GenMap],
    in_n: impl Fn(&GenMap) -> bool,
) -> Result<bool, AutError> {
    for (i, f) in gens.iter().enumerate() {
        if !in_n(&f.compose(f)) {
            return Ok(false);
        }
        for g in &gens[i + 1..] {
            if !in_n(&aut_commutator(f, g)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Some pair of generators does not commute modulo N.
fn nonabelian_mod(gens: &[GenMap], in_n: impl Fn(&GenMap) -> bool) -> Result<bool, AutError> {
    for (i, f) in gens.iter().enumerate() {
        for g in &gens[i + 1..] {
            if !in_n(&aut_commutator(f, g)?) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn level(f: &GenMap) -> u32 {
    pair_level(f.group(), f.img_a(), f.img_b())
}

/// Closure, filtration and factor-group checks against the stated orders.
pub fn verify_structure(
    family: Family,
    params: GroupParams,
    depth: Depth,
) -> Result<Report, AutError> {
    let m = params.m;
    if m > 3 {
        return Err(AutError::Unsupported(format!(
            "m = {m}: automorphism groups are too large"
        )));
    }
    if family == Family::J && m == 3 && depth == Depth::Quick {
        return Err(AutError::Unsupported(
            "J at m = 3 has 2^24 automorphisms; rerun with full depth".into(),
        ));
    }
    let g = Group::new(family, params);
    let mut report = Report::new(ReportParams {
        command: "aut".into(),
        family: Some(family),
        m: Some(m),
        ell: Some(params.ell),
        ..Default::default()
    });

    let t = Instant::now();
    let gens = standard_generators(family, params)?;
    let set = closure(&gens, DEFAULT_LIMIT)?;
    let closure_ms = t.elapsed().as_millis() as u64;

    let t = Instant::now();
    let fil = Filtration::new(&set)?;
    let fr = filtration_report(&fil)?;
    fr.add_to(&mut report);
    if let Some(c) = report.checks.iter_mut().find(|c| c.name == "aut") {
        c.elapsed_ms = closure_ms;
    }
    if let Some(c) = report
        .checks
        .iter_mut()
        .find(|c| c.name == "filtration_monotone")
    {
        c.elapsed_ms = t.elapsed().as_millis() as u64;
    }
    let count = |n: &str| fr.count(n).unwrap_or(0);
    let ratio = |a: &str, b: &str| count(a) as f64 / count(b) as f64;
    let factor = |report: &mut Report, top: &str, bottom: &str, expected: u64| {
        report.check_eq(
            &format!("factor_{top}_over_{bottom}"),
            expected.to_string(),
            format_ratio(ratio(top, bottom)),
            0,
        );
    };

    // Lagrange: a subgroup generated by a subset has order dividing |Aut|.
    let t = Instant::now();
    let sub = closure(&gens[..gens.len() / 2], DEFAULT_LIMIT)?;
    report.check_that(
        "lagrange_subgroup_divides",
        "divides",
        format!("{} | {}", sub.len(), set.len()),
        set.len() % sub.len() == 0,
        t.elapsed().as_millis() as u64,
    );

    // Closure axioms on a deterministic sample of members.
    let t = Instant::now();
    let step = (set.len() / 64).max(1);
    let mut closed = true;
    for i in (0..set.len()).step_by(step) {
        let f = set.get(i);
        let h = set.get((i * 7 + 3) % set.len());
        closed &= set.contains(&f.aut_inverse()?) && set.contains(&f.compose(&h));
    }
    report.check_that(
        "closure_is_group",
        "inverses and products stay in the set",
        closed,
        closed,
        t.elapsed().as_millis() as u64,
    );

    if m == 1 {
        report.recompute();
        return Ok(report);
    }

    let t = Instant::now();
    match family {
        Family::K => {
            factor(&mut report, "inn_aut_1", "aut_1", 1 << (2 * m - 2));
            factor(&mut report, "aut_2", "inn_aut_1", 16);
            factor(
                &mut report,
                "aut",
                "aut_2",
                if m == 2 { 6 } else { 1 << (m + 1) },
            );
            let a2 = aut2_generators(&g)?;
            let sub = closure(&a2, DEFAULT_LIMIT)?;
            report.check_eq("aut_2_generated", count("aut_2"), sub.len() as u64, 0);
            let ip = fil.inn_product(1)?;
            let ok = elementary_abelian_mod(&a2, |f| ip.contains(f))?;
            report.check_that(
                "aut_2_mod_inn_aut_1_exponent_2",
                "elementary abelian",
                ok,
                ok,
                0,
            );
            if m == 2 {
                let nonab = nonabelian_mod(&gens, |f| level(f) <= 2)?;
                report.check_that(
                    "aut_mod_aut_2_nonabelian",
                    "non-abelian of order 6 (GL_2(Z/2))",
                    nonab,
                    nonab,
                    0,
                );
            }
            let mu = catalog(&NamedAut::Mu, &g)?;
            let mut inverted = true;
            for n in [-1, 3, 5] {
                let f = catalog(&NamedAut::F(n), &g)?;
                let r = mu.compose(&f).compose(&mu).compose(&f);
                inverted &= level(&r) <= 2;
            }
            report.check_that(
                "mu_inverts_f_n_mod_aut_2",
                "f_n^mu f_n in Aut_2",
                inverted,
                inverted,
                0,
            );
        }
        Family::H => {
            factor(&mut report, "inn_aut_2", "aut_2", 1 << (2 * m - 2));
            factor(&mut report, "aut_3", "inn_aut_2", 4);
            factor(&mut report, "aut", "aut_3", if m == 2 { 2 } else { 4 });
            let a3 = aut3_h_generators(&g)?;
            let sub = closure(&a3, DEFAULT_LIMIT)?;
            report.check_eq("aut_3_generated", count("aut_3"), sub.len() as u64, 0);
            let ip = fil.inn_product(2)?;
            let ok = elementary_abelian_mod(&a3, |f| ip.contains(f))?;
            report.check_that("aut_3_mod_inn_aut_2_klein", "elementary abelian", ok, ok, 0);
            if m > 2 {
                let ok = elementary_abelian_mod(&gens, |f| level(f) <= 3)?;
                report.check_that("aut_mod_aut_3_klein", "elementary abelian", ok, ok, 0);
            }
        }
        Family::J => {
            factor(&mut report, "aut_2", "aut_1", 1 << (2 * m));
            factor(&mut report, "aut_3", "aut_2", 1 << (2 * m - 1));
            factor(&mut report, "inn_aut_3", "aut_3", 1 << (2 * m - 2));
            factor(&mut report, "aut_4", "inn_aut_3", 2);
            factor(&mut report, "aut", "aut_4", if m == 2 { 2 } else { 4 });
            if m > 2 {
                let ok = elementary_abelian_mod(&gens, |f| level(f) <= 4)?;
                report.check_that("aut_mod_aut_4_klein", "elementary abelian", ok, ok, 0);
            }
        }
    }
    if let Some(c) = report.checks.last_mut() {
        c.elapsed_ms = t.elapsed().as_millis() as u64;
    }
    report.recompute();
    Ok(report)
}

fn format_ratio(x: f64) -> String {
    if x.fract() == 0.0 {
        format!("{}", x as u64)
    } else {
        format!("{x}")
    }
}
