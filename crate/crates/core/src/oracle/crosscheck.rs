//! Closed formulas against the regular representation from a coset table.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::coset::{todd_coxeter, CosetTable};
use super::presentation::{Presentation, A, B, C};
use crate::error::OracleError;
use crate::group::{Element, Family, Group};
use crate::params::GroupParams;
use crate::report::{Report, ReportParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Every element, every pair for products and commutators.
    Exhaustive,
    /// `n` random samples; each sample checks a product, an inverse, a power
    /// and a commutator.
    Sampled { n: usize, seed: u64 },
}

/// Power tables are built when they stay below this many entries.
const POWER_TABLE_LIMIT: usize = 1 << 24;

/// Samples per independently seeded chunk.
const CHUNK: usize = 4096;

/// Right multiplication by A^i B^j C^k on the cosets of a complete table.
pub struct TableModel<'a> {
    table: &'a CosetTable,
    orders: [u64; 3],
    /// powers[g][e * n + c] = c * g^e, for 0 <= e < orders[g].
    powers: Option<[Vec<u32>; 3]>,
}

impl<'a> TableModel<'a> {
    pub fn new(table: &'a CosetTable) -> Self {
        let orders = [A, B, C].map(|g| table.generator_order(g));
        let n = table.len();
        let total: u64 = orders.iter().sum::<u64>() * n as u64;
        let powers = (total as usize <= POWER_TABLE_LIMIT).then(|| {
            [A, B, C].map(|g| {
                let o = orders[g as usize] as usize;
                let mut v = Vec::with_capacity(o * n);
                v.extend(0..n as u32);
                for e in 1..o {
                    for c in 0..n {
                        let prev = v[(e - 1) * n + c];
                        v.push(table.act_col(prev, 2 * g as usize));
                    }
                }
                v
            })
        });
        TableModel {
            table,
            orders,
            powers,
        }
    }

    pub fn table(&self) -> &CosetTable {
        self.table
    }

    /// Orders of A, B, C in the table.
    pub fn generator_orders(&self) -> [u64; 3] {
        self.orders
    }

    /// c * g^e.
    pub fn act_power(&self, c: u32, g: u8, e: i64) -> u32 {
        let o = self.orders[g as usize];
        let e = e.rem_euclid(o as i64) as u64;
        match &self.powers {
            Some(p) => p[g as usize][e as usize * self.table.len() + c as usize],
            None if 2 * e <= o => self.table.act_power(c, g, e as i64, o),
            // Walk backwards along the inverse column.
            None => (0..o - e).fold(c, |x, _| self.table.act_col(x, 2 * g as usize + 1)),
        }
    }

    /// c * A^i B^j C^k.
    pub fn act_triple(&self, c: u32, [i, j, k]: [i64; 3]) -> u32 {
        let c = self.act_power(c, A, i);
        let c = self.act_power(c, B, j);
        self.act_power(c, C, k)
    }

    /// c * (A^i B^j C^k)^-1.
    pub fn act_triple_inverse(&self, c: u32, [i, j, k]: [i64; 3]) -> u32 {
        let c = self.act_power(c, C, -k);
        let c = self.act_power(c, B, -j);
        self.act_power(c, A, -i)
    }
}

/// A group together with its coset table and the normal-form bijection.
pub struct Oracle {
    group: Group,
    table: CosetTable,
    /// Coset of each element, by `Group::index`.
    coset_of: Vec<u32>,
    /// Group index of each coset; `u64::MAX` where no triple lands.
    index_of: Vec<u64>,
    /// First collision of two triples on one coset.
    collision: Option<(Element, Element)>,
}

impl Oracle {
    /// Enumerate the family presentation and map normal forms onto cosets.
    pub fn build(family: Family, params: GroupParams) -> Result<Self, OracleError> {
        let group = Group::new(family, params);
        let table = todd_coxeter(&Presentation::family(family, params))?;
        Ok(Self::from_table(group, table))
    }

    pub fn from_table(group: Group, table: CosetTable) -> Self {
        let [mi, mj, mk] = group.moduli().map(|m| m as usize);
        let n = table.len();
        let mut coset_of = vec![0u32; mi * mj * mk];
        let mut index_of = vec![u64::MAX; n];
        let mut collision = None;
        // Walk A^i, then B^j, then C^k, one letter at a time.
        let mut ca = 0u32;
        for i in 0..mi {
            let mut cb = ca;
            for j in 0..mj {
                let mut cc = cb;
                for k in 0..mk {
                    let x = group.canonicalize(i as i64, j as i64, k as i64);
                    let idx = group.index(x);
                    coset_of[idx as usize] = cc;
                    if (cc as usize) < n {
                        let prev = std::mem::replace(&mut index_of[cc as usize], idx);
                        if prev != u64::MAX && prev != idx && collision.is_none() {
                            collision = Some((group.from_index(prev), x));
                        }
                    }
                    cc = table.act_col(cc, 2 * C as usize);
                }
                cb = table.act_col(cb, 2 * B as usize);
            }
            ca = table.act_col(ca, 2 * A as usize);
        }
        Oracle {
            group,
            table,
            coset_of,
            index_of,
            collision,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn model(&self) -> TableModel<'_> {
        TableModel::new(&self.table)
    }

    pub fn coset(&self, x: Element) -> u32 {
        self.coset_of[self.group.index(x) as usize]
    }

    /// The element sitting at a coset, if the bijection reaches it.
    pub fn element(&self, coset: u32) -> Option<Element> {
        let idx = *self.index_of.get(coset as usize)?;
        (idx != u64::MAX).then(|| self.group.from_index(idx))
    }

    /// Normal forms biject onto cosets.
    pub fn is_bijection(&self) -> bool {
        self.collision.is_none()
            && self.coset_of.len() == self.table.len()
            && self.index_of.iter().all(|&i| i != u64::MAX)
    }

    pub fn collision(&self) -> Option<(Element, Element)> {
        self.collision
    }
}

#[derive(Debug, Default, Clone)]
struct Tally {
    checked: u64,
    mismatches: u64,
    witness: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.mismatches += other.mismatches;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
    }

    fn add_to(&self, report: &mut Report, name: &str, elapsed_ms: u64) {
        let mut actual = format!("{} checked, {} mismatches", self.checked, self.mismatches);
        if let Some(w) = &self.witness {
            let _ = write!(actual, " (first: {w})");
        }
        report.check_that(
            name,
            "0 mismatches",
            actual,
            self.mismatches == 0 && self.checked > 0,
            elapsed_ms,
        );
    }
}

#[derive(Debug, Default, Clone)]
struct Tallies {
    mul: Tally,
    invert: Tally,
    power: Tally,
    commutator: Tally,
    order: Tally,
}

impl Tallies {
    fn merge(&mut self, o: Tallies) {
        self.mul.merge(o.mul);
        self.invert.merge(o.invert);
        self.power.merge(o.power);
        self.commutator.merge(o.commutator);
        self.order.merge(o.order);
    }
}

fn t(x: Element) -> [i64; 3] {
    x.triple()
}

fn fmt_t(x: Element) -> String {
    let [i, j, k] = x.triple();
    format!("({i},{j},{k})")
}

struct Checker<'a> {
    o: &'a Oracle,
    m: TableModel<'a>,
}

impl Checker<'_> {
    fn mul(&self, tl: &mut Tally, x: Element, y: Element) {
        let g = &self.o.group;
        let got = self.o.coset(g.mul(x, y));
        let want = self.m.act_triple(self.o.coset(x), t(y));
        tl.record(got == want, || format!("{} * {}", fmt_t(x), fmt_t(y)));
    }

    fn invert(&self, tl: &mut Tally, x: Element) {
        let got = self.o.coset(self.o.group.invert(x));
        let want = self.m.act_triple_inverse(0, t(x));
        tl.record(got == want, || format!("{}^-1", fmt_t(x)));
    }

    fn power(&self, tl: &mut Tally, x: Element, n: i64) {
        let got = self.o.coset(self.o.group.power(x, n));
        let mut want = 0;
        for _ in 0..n.unsigned_abs() {
            want = if n >= 0 {
                self.m.act_triple(want, t(x))
            } else {
                self.m.act_triple_inverse(want, t(x))
            };
        }
        tl.record(got == want, || format!("{}^{n}", fmt_t(x)));
    }

    fn commutator(&self, tl: &mut Tally, x: Element, y: Element) {
        let got = self.o.coset(self.o.group.commutator(x, y));
        let c = self.m.act_triple_inverse(0, t(x));
        let c = self.m.act_triple_inverse(c, t(y));
        let c = self.m.act_triple(c, t(x));
        let want = self.m.act_triple(c, t(y));
        tl.record(got == want, || format!("[{}, {}]", fmt_t(x), fmt_t(y)));
    }

    /// Order in the table against `element_order`; also checks every power
    /// along the way.
    fn order(&self, tl: &mut Tally, pw: &mut Tally, x: Element) {
        let g = &self.o.group;
        let mut c = 0u32;
        let mut n = 0u64;
        loop {
            c = self.m.act_triple(c, t(x));
            n += 1;
            let ok = self.o.coset(g.power(x, n as i64)) == c;
            pw.record(ok, || format!("{}^{n}", fmt_t(x)));
            if c == 0 || n > g.exponent() as u64 {
                break;
            }
        }
        let want = g.element_order(x);
        tl.record(c == 0 && n == want, || {
            format!("o{} = {want}, table {n}", fmt_t(x))
        });
    }
}

fn sample_chunk(ch: &Checker<'_>, seed: u64, chunk: u64, count: usize) -> Tallies {
    let g = &ch.o.group;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    let mut tl = Tallies::default();
    let exp = g.exponent();
    for _ in 0..count {
        let x = g.from_index(rng.gen_range(0..g.order()));
        let y = g.from_index(rng.gen_range(0..g.order()));
        let n = rng.gen_range(-exp - 1..=exp + 1);
        ch.mul(&mut tl.mul, x, y);
        ch.invert(&mut tl.invert, x);
        ch.power(&mut tl.power, x, n);
        ch.commutator(&mut tl.commutator, x, y);
    }
    // Orders on a smaller slice of the same stream.
    for _ in 0..count / 16 + 1 {
        let x = g.from_index(rng.gen_range(0..g.order()));
        let mut pw = Tally::default();
        ch.order(&mut tl.order, &mut pw, x);
        tl.power.merge(pw);
    }
    tl
}

fn sampled(ch: &Checker<'_>, n: usize, seed: u64) -> Tallies {
    let chunks: Vec<(u64, usize)> = (0..n.div_ceil(CHUNK))
        .map(|i| (i as u64, CHUNK.min(n - i * CHUNK)))
        .collect();
    let threads = std::thread::available_parallelism()
        .map_or(1, |t| t.get())
        .min(chunks.len().max(1));
    let mut total = Tallies::default();
    if threads <= 1 {
        for &(i, c) in &chunks {
            total.merge(sample_chunk(ch, seed, i, c));
        }
        return total;
    }
    let parts: Vec<Tallies> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|w| {
                let chunks = &chunks;
                s.spawn(move || {
                    let mut acc = Tallies::default();
                    for &(i, c) in chunks.iter().skip(w).step_by(threads) {
                        acc.merge(sample_chunk(ch, seed, i, c));
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sampling thread panicked"))
            .collect()
    });
    for p in parts {
        total.merge(p);
    }
    total
}

fn exhaustive(ch: &Checker<'_>) -> Tallies {
    let g = &ch.o.group;
    let mut tl = Tallies::default();
    for x in g.elements() {
        ch.invert(&mut tl.invert, x);
        ch.order(&mut tl.order, &mut tl.power, x);
        ch.power(&mut tl.power, x, -1);
        for y in g.elements() {
            ch.mul(&mut tl.mul, x, y);
            ch.commutator(&mut tl.commutator, x, y);
        }
    }
    tl
}

/// Check normal-form uniqueness and the closed formulas against the coset
/// table of the defining presentation.
pub fn cross_check(
    family: Family,
    params: GroupParams,
    mode: CheckMode,
) -> Result<Report, OracleError> {
    let mut report = Report::new(ReportParams {
        command: "oracle".into(),
        family: Some(family),
        m: Some(params.m),
        ell: Some(params.ell),
        seed: match mode {
            CheckMode::Sampled { seed, .. } => Some(seed),
            CheckMode::Exhaustive => None,
        },
        ..Default::default()
    });
    let t0 = Instant::now();
    let oracle = Oracle::build(family, params)?;
    let g = *oracle.group();
    report.check_eq(
        "coset_count",
        g.order(),
        oracle.table().len() as u64,
        t0.elapsed().as_millis() as u64,
    );
    cross_check_with(&oracle, mode, &mut report);
    Ok(report)
}

/// The checks of [`cross_check`] on an already built oracle.
pub fn cross_check_with(oracle: &Oracle, mode: CheckMode, report: &mut Report) {
    let g = *oracle.group();
    let witness = oracle
        .collision()
        .map(|(x, y)| format!(" ({} and {} share a coset)", fmt_t(x), fmt_t(y)))
        .unwrap_or_default();
    report.check_that(
        "normal_form_bijection",
        "bijection",
        if oracle.is_bijection() {
            "bijection".to_string()
        } else {
            format!("not a bijection{witness}")
        },
        oracle.is_bijection(),
        0,
    );
    if !oracle.is_bijection() {
        report.recompute();
        return;
    }
    let t = Instant::now();
    let ch = Checker {
        o: oracle,
        m: oracle.model(),
    };
    let tl = match mode {
        CheckMode::Exhaustive => exhaustive(&ch),
        CheckMode::Sampled { n, seed } => sampled(&ch, n, seed),
    };
    let ms = t.elapsed().as_millis() as u64;
    tl.mul.add_to(report, "mul_agrees", ms);
    tl.invert.add_to(report, "invert_agrees", 0);
    tl.power.add_to(report, "power_agrees", 0);
    tl.commutator.add_to(report, "commutator_agrees", 0);
    tl.order.add_to(report, "element_orders_agree", 0);
    if g.family() == Family::J && g.params().m == 1 {
        let n = involutions(&ch);
        report.check_eq("unique_involution", 1, n, 0);
    }
    report.recompute();
}

/// Involutions counted in the table (the quaternion certificate at m = 1).
fn involutions(ch: &Checker<'_>) -> u64 {
    let g = &ch.o.group;
    g.elements()
        .filter(|&x| {
            let c = ch.m.act_triple(0, t(x));
            c != 0 && ch.m.act_triple(c, t(x)) == 0
        })
        .count() as u64
}
