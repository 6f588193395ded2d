//! The odd-prime commutator identities against the coset table of Jp.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::coset::{todd_coxeter, CosetTable};
use super::crosscheck::TableModel;
use super::presentation::{commutator_word, power, Presentation, A, B, C};
use crate::arith::{phi, varphi};
use crate::error::OracleError;
use crate::group::formulas::CommCase;
use crate::params::OddPrimeParams;
use crate::report::{Report, ReportParams};

/// Coset table of the Sylow p-subgroup presentation.
pub struct OddPrimeOracle {
    params: OddPrimeParams,
    table: CosetTable,
}

impl OddPrimeOracle {
    pub fn build(params: OddPrimeParams) -> Result<Self, OracleError> {
        let table = todd_coxeter(&Presentation::odd_prime(&params))?;
        Ok(OddPrimeOracle { params, table })
    }

    pub fn params(&self) -> &OddPrimeParams {
        &self.params
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }
}

/// Formula output for one commutator, with the oracle verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddPrimeCommutator {
    pub case: CommCase,
    pub n: i64,
    pub t: i64,
    /// (generator, exponent) factors in order, exponents reduced mod the
    /// generator orders found in the table.
    pub factors: Vec<(char, i64)>,
    pub matches: bool,
}

/// Right-hand sides as (generator, exponent) with exact exponents.
pub fn oddp_formula(p: &OddPrimeParams, case: CommCase, n: i64, t: i64) -> Vec<(u8, i128)> {
    let pm = p.p_pow(p.m) as i128;
    let l = p.ell as i128;
    let (ni, ti) = (n as i128, t as i128);
    match case {
        CommCase::CA => vec![(A, -pm * l * ni * ti - pm * pm * l * l * phi(n) * ti)],
        CommCase::CB => vec![(B, pm * l * ni * ti - pm * pm * l * l * phi(n + 1) * ti)],
        CommCase::AB => {
            let chi = p.chi_p.0 as i128;
            let delta = if p.p == 3 { 3i128.pow(p.m - 1) } else { 0 };
            let xi = pm
                * pm
                * l
                * l
                * chi
                * (2 * varphi(n + 1) * ti + (2 * ni - 7) * phi(n) * phi(t)
                    - 2 * ni * phi(t)
                    - (3 * ni + 1) * ni * varphi(t)
                    - 2 * delta * l * phi(n) * phi(t));
            vec![
                (A, -pm * l * phi(n) * ti),
                (B, pm * l * ni * phi(t)),
                (C, ni * ti - pm * l * phi(n) * phi(t)),
                (A, xi),
            ]
        }
    }
}

/// Evaluate one identity and compare it with the table.
pub fn oddp_commutator(o: &OddPrimeOracle, case: CommCase, n: i64, t: i64) -> OddPrimeCommutator {
    let model = TableModel::new(&o.table);
    commutator_with(o, &model, case, n, t)
}

fn commutator_with(
    o: &OddPrimeOracle,
    model: &TableModel<'_>,
    case: CommCase,
    n: i64,
    t: i64,
) -> OddPrimeCommutator {
    let orders = model.generator_orders();
    let (x, y) = match case {
        CommCase::CA => (C, A),
        CommCase::CB => (C, B),
        CommCase::AB => (A, B),
    };
    let word = commutator_word(&power(x, n), &power(y, t));
    let lhs = o.table.resolve(&word);
    let factors: Vec<(u8, i64)> = oddp_formula(&o.params, case, n, t)
        .into_iter()
        .map(|(g, e)| (g, e.rem_euclid(orders[g as usize] as i128) as i64))
        .collect();
    let rhs = factors
        .iter()
        .fold(0, |c, &(g, e)| model.act_power(c, g, e));
    OddPrimeCommutator {
        case,
        n,
        t,
        factors: factors
            .iter()
            .map(|&(g, e)| (['A', 'B', 'C'][g as usize], e))
            .collect(),
        matches: lhs == rhs,
    }
}

/// All three identities for |n|, |t| <= range.
pub fn oddp_range_check(params: OddPrimeParams, range: i64) -> Result<Report, OracleError> {
    let mut report = Report::new(ReportParams {
        command: "oddp".into(),
        m: Some(params.m),
        ell: Some(params.ell),
        p: Some(params.p),
        ..Default::default()
    });
    let t0 = Instant::now();
    let o = OddPrimeOracle::build(params)?;
    // The group order is recorded, not judged.
    report.check_that(
        "coset_count",
        "recorded",
        o.table.len(),
        true,
        t0.elapsed().as_millis() as u64,
    );
    let model = TableModel::new(&o.table);
    for case in [CommCase::CA, CommCase::CB, CommCase::AB] {
        let t = Instant::now();
        let mut checked = 0u64;
        let mut first_bad: Option<(i64, i64)> = None;
        let mut bad = 0u64;
        for n in -range..=range {
            for tt in -range..=range {
                let r = commutator_with(&o, &model, case, n, tt);
                checked += 1;
                if !r.matches {
                    bad += 1;
                    first_bad.get_or_insert((n, tt));
                }
            }
        }
        let mut actual = format!("{checked} checked, {bad} mismatches");
        if let Some((n, tt)) = first_bad {
            actual.push_str(&format!(" (first: n={n}, t={tt})"));
        }
        report.check_that(
            &format!("identity_{}", format!("{case:?}").to_lowercase()),
            "0 mismatches",
            actual,
            bad == 0,
            t.elapsed().as_millis() as u64,
        );
    }
    report.recompute();
    Ok(report)
}
