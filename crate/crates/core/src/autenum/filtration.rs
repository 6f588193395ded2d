//! Counts along 1 <= Aut_1 <= Aut_2 <= ... <= Aut, with Inn-products.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::{closure, pair_level, AutSet};
use crate::error::AutError;
use crate::group::{Family, Group};
use crate::morphism::{catalog, ApplyTable, GenMap, NamedAut};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationRow {
    pub name: String,
    pub count: u64,
    pub expected: Option<u64>,
    /// Row belongs to the displayed normal series (counts must increase along it).
    pub in_series: bool,
    /// Independent recount, for rows computed by a formula.
    pub recount: Option<u64>,
}

impl FiltrationRow {
    pub fn pass(&self) -> Option<bool> {
        self.expected
            .map(|e| e == self.count && self.recount.is_none_or(|r| r == self.count))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    pub group: String,
    pub rows: Vec<FiltrationRow>,
}

impl FiltrationReport {
    pub fn row(&self, name: &str) -> Option<&FiltrationRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn count(&self, name: &str) -> Option<u64> {
        self.row(name).map(|r| r.count)
    }

    /// Series rows in order.
    pub fn series(&self) -> Vec<&FiltrationRow> {
        self.rows.iter().filter(|r| r.in_series).collect()
    }

    pub fn is_monotone(&self) -> bool {
        self.series().windows(2).all(|w| w[0].count <= w[1].count)
    }

    pub fn pass(&self) -> bool {
        self.is_monotone() && self.rows.iter().all(|r| r.pass() != Some(false))
    }

    /// Adds one check per row with an expectation, plus the monotonicity check.
    pub fn add_to(&self, report: &mut Report) {
        for r in &self.rows {
            if let Some(e) = r.expected {
                report.check_eq(&r.name, e, r.count, 0);
            }
            if let Some(n) = r.recount {
                report.check_eq(&format!("{}_recount", r.name), r.count, n, 0);
            }
        }
        let counts: Vec<String> = self.series().iter().map(|r| r.count.to_string()).collect();
        report.check_that(
            "filtration_monotone",
            "non-decreasing",
            counts.join("/"),
            self.is_monotone(),
            0,
        );
    }
}

/// Orders stated for each family; rows without a stated value are omitted.
pub fn expected_orders(family: Family, m: u32) -> Vec<(String, u64)> {
    let p = |e: u32| 1u64 << e;
    let v: Vec<(&str, u64)> = match (family, m) {
        (Family::J, 1) => vec![("aut", 32), ("inn", 8)],
        (_, 1) => vec![],
        (Family::J, m) => vec![
            ("aut_1", p(2 * m)),
            ("aut_2", p(4 * m)),
            ("aut_3", p(6 * m - 1)),
            ("inn_aut_3", p(8 * m - 3)),
            ("aut_4", p(8 * m - 2)),
            ("aut", if m == 2 { p(15) } else { p(8 * m) }),
            ("inn", p(6 * m - 3)),
        ],
        (Family::H, m) => vec![
            ("aut_2", p(6 * m - 4)),
            ("inn_aut_2", p(8 * m - 6)),
            ("aut_3", p(8 * m - 4)),
            ("aut", if m == 2 { p(13) } else { p(8 * m - 2) }),
            ("inn", p(5 * m - 3)),
        ],
        (Family::K, m) => vec![
            ("aut_1", p(4 * m - 4)),
            ("inn_aut_1", p(6 * m - 6)),
            ("aut_2", p(6 * m - 2)),
            ("aut", if m == 2 { 3 * p(11) } else { p(7 * m - 1) }),
            ("inn", p(3 * m - 1)),
        ],
    };
    v.into_iter().map(|(n, c)| (n.to_string(), c)).collect()
}

/// The product Inn(T) Aut_i(T), held as a transversal of Inn modulo Inn ∩ Aut_i.
#[derive(Debug, Clone)]
pub struct InnProduct {
    level: u32,
    reps: Vec<GenMap>,
    tables: Vec<ApplyTable>,
    inv_tables: Vec<ApplyTable>,
}

impl InnProduct {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn transversal(&self) -> &[GenMap] {
        &self.reps
    }

    /// f is in Inn Aut_i iff f t^-1 is in Aut_i for some representative t.
    pub fn contains(&self, f: &GenMap) -> bool {
        let g = f.group();
        self.inv_tables
            .iter()
            .any(|t| pair_level(g, t.apply(f.img_a()), t.apply(f.img_b())) <= self.level)
    }
}

/// Levels of every member of a closed set, with its inner automorphism subgroup.
#[derive(Debug, Clone)]
pub struct Filtration<'a> {
    set: &'a AutSet,
    levels: Vec<u8>,
    inn: AutSet,
    inn_levels: Vec<u8>,
}

impl<'a> Filtration<'a> {
    pub fn new(set: &'a AutSet) -> Result<Self, AutError> {
        let g = *set.group();
        let levels = set
            .pairs()
            .map(|(a, b)| pair_level(&g, a, b) as u8)
            .collect();
        let gens = [
            catalog(&NamedAut::Inner(g.gen_a()), &g)?,
            catalog(&NamedAut::Inner(g.gen_b()), &g)?,
        ];
        let inn = closure(&gens, set.len().max(2))?;
        let inn_levels = inn
            .pairs()
            .map(|(a, b)| pair_level(&g, a, b) as u8)
            .collect();
        Ok(Filtration {
            set,
            levels,
            inn,
            inn_levels,
        })
    }

    pub fn group(&self) -> &Group {
        self.set.group()
    }

    pub fn set(&self) -> &AutSet {
        self.set
    }

    pub fn inn(&self) -> &AutSet {
        &self.inn
    }

    /// Inn(T) is contained in the set.
    pub fn inn_is_subset(&self) -> bool {
        self.inn.pairs().all(|(a, b)| self.set.contains_pair(a, b))
    }

    pub fn aut_count(&self, level: u32) -> u64 {
        self.levels
            .iter()
            .filter(|&&l| u32::from(l) <= level)
            .count() as u64
    }

    pub fn inn_cap_count(&self, level: u32) -> u64 {
        self.inn_levels
            .iter()
            .filter(|&&l| u32::from(l) <= level)
            .count() as u64
    }

    /// Members of Aut_level in discovery order.
    pub fn aut_members(&self, level: u32) -> impl Iterator<Item = GenMap> + '_ {
        self.levels
            .iter()
            .enumerate()
            .filter(move |(_, &l)| u32::from(l) <= level)
            .map(|(i, _)| self.set.get(i))
    }

    pub fn inn_product(&self, level: u32) -> Result<InnProduct, AutError> {
        let g = self.group();
        let mut reps: Vec<GenMap> = Vec::new();
        let mut inv_tables: Vec<ApplyTable> = Vec::new();
        for (a, b) in self.inn.pairs() {
            let known = inv_tables
                .iter()
                .any(|t| pair_level(g, t.apply(a), t.apply(b)) <= level);
            if !known {
                let f = GenMap::from_images(*g, a, b)?;
                inv_tables.push(ApplyTable::new(&f.aut_inverse()?));
                reps.push(f);
            }
        }
        let tables = reps.iter().map(ApplyTable::new).collect();
        Ok(InnProduct {
            level,
            reps,
            tables,
            inv_tables,
        })
    }

    /// |Inn Aut_i| as |Inn| |Aut_i| / |Inn ∩ Aut_i|.
    pub fn inn_product_formula(&self, level: u32) -> u64 {
        self.inn.len() as u64 * self.aut_count(level) / self.inn_cap_count(level)
    }

    /// |Inn Aut_i| by listing the products a t, a in Aut_i, t in a transversal.
    pub fn inn_product_enumerated(&self, p: &InnProduct) -> u64 {
        let mut seen = FxHashSet::default();
        for (i, &l) in self.levels.iter().enumerate() {
            if u32::from(l) > p.level {
                continue;
            }
            let (a, b) = self.set.decode(self.set.keys[i]);
            for t in &p.tables {
                seen.insert(self.set.key(t.apply(a), t.apply(b)));
            }
        }
        seen.len() as u64
    }
}

/// Per-level counts, Inn-products and expected orders for a closed set.
pub fn filtration(set: &AutSet) -> Result<FiltrationReport, AutError> {
    filtration_report(&Filtration::new(set)?)
}

pub(crate) fn filtration_report(f: &Filtration<'_>) -> Result<FiltrationReport, AutError> {
    let set = f.set;
    let g = *set.group();
    let c = g.class();
    let expected = expected_orders(g.family(), g.params().m);
    let exp = |name: &str| expected.iter().find(|(n, _)| n == name).map(|&(_, v)| v);
    let mut rows = Vec::new();
    let mut row =
        |name: String, count: u64, in_series: bool, recount: Option<u64>, expected: Option<u64>| {
            rows.push(FiltrationRow {
                expected: expected.or_else(|| exp(&name)),
                name,
                count,
                in_series,
                recount,
            })
        };
    let z1 = g.center_term(1).len() as u64;
    for i in 1..c {
        row(format!("aut_{i}"), f.aut_count(i), true, None, None);
        if i + 2 == c {
            let p = f.inn_product(i)?;
            let n = f.inn_product_enumerated(&p);
            row(
                format!("inn_aut_{i}"),
                f.inn_product_formula(i),
                true,
                Some(n),
                None,
            );
        }
    }
    row("aut".into(), set.len() as u64, true, None, None);
    row("inn".into(), f.inn.len() as u64, false, None, None);
    for i in 0..c {
        let zi = g.center_term(i + 1).len() as u64;
        row(
            format!("inn_cap_aut_{i}"),
            f.inn_cap_count(i),
            false,
            None,
            Some(zi / z1),
        );
    }
    row(
        "inn_in_set".into(),
        u64::from(f.inn_is_subset()),
        false,
        None,
        Some(1),
    );
    Ok(FiltrationReport {
        group: g.to_string(),
        rows,
    })
}
