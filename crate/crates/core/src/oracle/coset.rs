//! Todd-Coxeter enumeration over the trivial subgroup.
//!
//! Two strategies: HLT with lookahead, and Felsch (definitions in table order,
//! every deduction pushed through all relator conjugates). Felsch defines far
//! fewer cosets on presentations with long power relators.

use super::presentation::{EnumOptions, Letter, Presentation, Strategy, GENERATORS};
use crate::error::OracleError;

const NONE: u32 = u32::MAX;
const COLS: usize = 2 * GENERATORS.len();

/// Default cap on the number of simultaneously allocated cosets.
pub const DEFAULT_MAX_COSETS: usize = 1 << 21;

/// Cap used for J at m >= 3, which needs about 3.4e7 live cosets under HLT
/// (roughly 1 GB of table).
pub const LARGE_MAX_COSETS: usize = 1 << 25;

/// The cap set in `MACFORGE_MAX_COSETS`, if any.
pub fn env_max_cosets() -> Option<usize> {
    std::env::var("MACFORGE_MAX_COSETS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
}

/// The cap from `MACFORGE_MAX_COSETS`, or the default.
pub fn max_cosets_from_env() -> usize {
    env_max_cosets().unwrap_or(DEFAULT_MAX_COSETS)
}

/// Bytes held by a table of `cosets` rows during enumeration.
pub fn table_bytes(cosets: usize) -> usize {
    cosets * (COLS * 4 + 4 + 1)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Cosets defined in total.
    pub defined: usize,
    /// Largest number of live cosets at any time.
    pub max_live: usize,
    pub coincidences: usize,
    pub lookaheads: usize,
}

/// A complete coset table of the trivial subgroup: the regular
/// representation of the group. Coset 0 is the subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    table: Vec<u32>,
    len: usize,
    stats: EnumStats,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn stats(&self) -> EnumStats {
        self.stats
    }

    #[inline]
    pub fn act(&self, coset: u32, l: Letter) -> u32 {
        self.table[coset as usize * COLS + l.column()]
    }

    #[inline]
    pub fn act_col(&self, coset: u32, col: usize) -> u32 {
        self.table[coset as usize * COLS + col]
    }

    /// Image of coset 0 under a word.
    pub fn resolve(&self, word: &[Letter]) -> u32 {
        self.resolve_from(0, word)
    }

    pub fn resolve_from(&self, coset: u32, word: &[Letter]) -> u32 {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Order of a generator (its cycle length through coset 0).
    pub fn generator_order(&self, gen: u8) -> u64 {
        let l = Letter::new(gen, false);
        let mut c = self.act(0, l);
        let mut n = 1;
        while c != 0 {
            c = self.act(c, l);
            n += 1;
        }
        n
    }

    /// coset * gen^n, with n reduced by the generator order `order`.
    pub fn act_power(&self, coset: u32, gen: u8, n: i64, order: u64) -> u32 {
        let n = n.rem_euclid(order as i64) as u64;
        let l = Letter::new(gen, false);
        (0..n).fold(coset, |c, _| self.act(c, l))
    }

    /// Every column is a permutation of the cosets.
    pub fn columns_are_permutations(&self) -> bool {
        (0..COLS).all(|col| {
            let mut seen = vec![false; self.len];
            (0..self.len).all(|c| {
                let d = self.act_col(c as u32, col) as usize;
                d < self.len && !std::mem::replace(&mut seen[d], true)
            }) && (0..self.len).all(|c| {
                let d = self.act_col(c as u32, col);
                self.act_col(d, col ^ 1) == c as u32
            })
        })
    }

    /// Every relator fixes every coset.
    pub fn satisfies(&self, p: &Presentation) -> bool {
        (0..self.len as u32).all(|c| p.relators.iter().all(|r| self.resolve_from(c, r) == c))
    }
}

struct Enumerator {
    rels: Vec<Vec<usize>>,
    /// Felsch only: distinct cyclic conjugates of relators and their inverses,
    /// grouped by first column.
    conjugates: Vec<Vec<Vec<usize>>>,
    deductions: Vec<(u32, usize)>,
    felsch: bool,
    /// HLT only: for long power relators g^n, a bit marking cosets known to
    /// lie on a closed g-cycle of length dividing n; their scan is skipped.
    power_bit: Vec<Option<u8>>,
    marks: Vec<u8>,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    cap: usize,
    queue: Vec<u32>,
    stats: EnumStats,
}

impl Enumerator {
    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * COLS + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * COLS + col] = v;
    }

    fn n(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn new_coset(&mut self) -> u32 {
        let n = self.n() as u32;
        self.parent.push(n);
        self.marks.push(0);
        self.table.resize(self.table.len() + COLS, NONE);
        self.live += 1;
        self.stats.defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        n
    }

    fn define(&mut self, c: u32, col: usize) -> u32 {
        let d = self.new_coset();
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        if self.felsch {
            self.deductions.push((c, col));
        }
        d
    }

    /// Felsch: push each recorded deduction through the relator conjugates
    /// that start with its letter (and with the inverse letter at the target).
    fn process_deductions(&mut self) {
        while let Some((c, col)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            for w in 0..self.conjugates[col].len() {
                if !self.is_live(c) {
                    break;
                }
                self.scan_word(c, Word::Conjugate(col, w), false);
            }
            let d = self.get(c, col);
            if d == NONE || !self.is_live(d) {
                continue;
            }
            for w in 0..self.conjugates[col ^ 1].len() {
                if !self.is_live(d) {
                    break;
                }
                self.scan_word(d, Word::Conjugate(col ^ 1, w), false);
            }
        }
    }

    fn word(&self, w: Word) -> &[usize] {
        match w {
            Word::Relator(r) => &self.rels[r],
            Word::Conjugate(col, i) => &self.conjugates[col][i],
        }
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, k: u32, l: u32) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.stats.coincidences += 1;
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..COLS {
                let d = self.get(g, col);
                if d == NONE {
                    continue;
                }
                self.set(d, col ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let t = self.get(mu, col);
                if t != NONE {
                    self.merge(nu, t);
                } else {
                    let t = self.get(nu, col ^ 1);
                    if t != NONE {
                        self.merge(mu, t);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, col ^ 1, mu);
                        if self.felsch {
                            self.deductions.push((mu, col));
                        }
                    }
                }
            }
        }
    }

    /// After a power relator scan at `c`, mark its cycle if it closed.
    fn mark_cycle(&mut self, c: u32, r: usize, bit: u8) {
        if !self.is_live(c) {
            return;
        }
        let col = self.rels[r][0];
        let mut x = c;
        for _ in 0..self.rels[r].len() {
            x = self.get(x, col);
            if x == NONE {
                return;
            }
            if x == c {
                break;
            }
        }
        if x != c {
            return;
        }
        loop {
            self.marks[x as usize] |= bit;
            x = self.get(x, col);
            if x == c {
                return;
            }
        }
    }

    /// Scan relator `r` at coset `a`, defining cosets when `fill` is set.
    fn scan(&mut self, a: u32, r: usize, fill: bool) {
        self.scan_word(a, Word::Relator(r), fill)
    }

    fn scan_word(&mut self, a: u32, w: Word, fill: bool) {
        let len = self.word(w).len();
        let (mut f, mut b) = (a, a);
        let (mut i, mut j) = (0usize, len as isize - 1);
        loop {
            while (i as isize) <= j {
                let t = self.get(f, self.word(w)[i]);
                if t == NONE {
                    break;
                }
                f = t;
                i += 1;
            }
            if (i as isize) > j {
                if f != a {
                    self.coincidence(f, a);
                }
                return;
            }
            while j >= i as isize {
                let t = self.get(b, self.word(w)[j as usize] ^ 1);
                if t == NONE {
                    break;
                }
                b = t;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            }
            if j == i as isize {
                let col = self.word(w)[i];
                self.set(f, col, b);
                self.set(b, col ^ 1, f);
                if self.felsch {
                    self.deductions.push((f, col));
                }
                return;
            }
            if !fill {
                return;
            }
            let col = self.word(w)[i];
            self.define(f, col);
        }
    }

    /// Scan every relator at every live coset without defining new ones.
    fn lookahead(&mut self) {
        self.stats.lookaheads += 1;
        for c in 0..self.n() as u32 {
            for r in 0..self.rels.len() {
                if !self.is_live(c) {
                    break;
                }
                match self.power_bit[r] {
                    Some(bit) if self.marks[c as usize] & bit != 0 => {}
                    Some(bit) => {
                        self.scan(c, r, false);
                        self.mark_cycle(c, r, bit);
                    }
                    None => self.scan(c, r, false),
                }
            }
        }
    }

    /// Renumber live cosets in order; returns the new index of the first live
    /// coset at or after `pos`.
    fn compact(&mut self, pos: usize) -> usize {
        let n = self.n();
        let mut map = vec![NONE; n];
        let mut next = 0u32;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] == c as u32 {
                *slot = next;
                next += 1;
            }
        }
        let new_pos = (pos..n)
            .find(|&c| map[c] != NONE)
            .map_or(next as usize, |c| map[c] as usize);
        // map[c] <= c, so rows can move down in place.
        for c in 0..n {
            let to = map[c];
            if to == NONE {
                continue;
            }
            for col in 0..COLS {
                let v = self.table[c * COLS + col];
                self.table[to as usize * COLS + col] =
                    if v == NONE { NONE } else { map[v as usize] };
            }
            self.marks[to as usize] = self.marks[c];
        }
        self.table.truncate(next as usize * COLS);
        self.marks.truncate(next as usize);
        self.parent = (0..next).collect();
        self.live = next as usize;
        new_pos
    }
}

#[derive(Clone, Copy)]
enum Word {
    Relator(usize),
    Conjugate(usize, usize),
}

fn conjugates_by_column(rels: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new(); COLS];
    for r in rels {
        let inv: Vec<usize> = r.iter().rev().map(|c| c ^ 1).collect();
        for w in [r, &inv] {
            for i in 0..w.len() {
                let conj: Vec<usize> = w[i..].iter().chain(&w[..i]).copied().collect();
                let bucket = &mut out[conj[0]];
                if !bucket.contains(&conj) {
                    bucket.push(conj);
                }
            }
        }
    }
    out
}

/// Power relators at least this long get closed-cycle marks.
const LONG_POWER: usize = 32;

/// Enumerate the cosets of the trivial subgroup using the presentation's options.
pub fn todd_coxeter(p: &Presentation) -> Result<CosetTable, OracleError> {
    todd_coxeter_with(p, p.options)
}

pub fn todd_coxeter_with(p: &Presentation, opts: EnumOptions) -> Result<CosetTable, OracleError> {
    let rels: Vec<Vec<usize>> = p
        .relators
        .iter()
        .map(|r| r.iter().map(|l| l.column()).collect())
        .collect();
    let felsch = opts.strategy == Strategy::Felsch;
    let mut next_bit = 1u8;
    let power_bit = rels
        .iter()
        .map(|w| {
            let long =
                !felsch && w.len() >= LONG_POWER && w.iter().all(|&c| c == w[0]) && next_bit != 0;
            long.then(|| {
                let b = next_bit;
                next_bit = next_bit.wrapping_shl(1);
                b
            })
        })
        .collect();
    // A single coset's relator scans define at most this many new cosets.
    let slack = if felsch {
        COLS
    } else {
        rels.iter().map(Vec::len).sum::<usize>() + COLS
    };
    let mut e = Enumerator {
        conjugates: if felsch {
            conjugates_by_column(&rels)
        } else {
            Vec::new()
        },
        rels,
        deductions: Vec::new(),
        felsch,
        power_bit,
        marks: Vec::new(),
        table: Vec::new(),
        parent: Vec::new(),
        live: 0,
        cap: opts.max_cosets,
        queue: Vec::new(),
        stats: EnumStats::default(),
    };
    e.new_coset();
    let mut c = 0usize;
    while c < e.n() {
        if e.n() + slack > e.cap {
            if !felsch {
                e.lookahead();
            }
            c = e.compact(c);
            if e.n() + slack > e.cap {
                return Err(OracleError::CapExceeded {
                    cap: e.cap,
                    defined: e.stats.defined,
                    live: e.live,
                });
            }
            continue;
        }
        let cc = c as u32;
        if felsch {
            for col in 0..COLS {
                if e.is_live(cc) && e.get(cc, col) == NONE {
                    e.define(cc, col);
                    e.process_deductions();
                }
            }
            c += 1;
            continue;
        }
        for r in 0..e.rels.len() {
            if !e.is_live(cc) {
                break;
            }
            if let Some(bit) = e.power_bit[r] {
                if e.marks[c] & bit != 0 {
                    continue;
                }
                e.scan(cc, r, true);
                e.mark_cycle(cc, r, bit);
                continue;
            }
            e.scan(cc, r, true);
        }
        if e.is_live(cc) {
            for col in 0..COLS {
                if e.get(cc, col) == NONE {
                    e.define(cc, col);
                }
            }
        }
        c += 1;
    }
    e.compact(0);
    let t = CosetTable {
        len: e.live,
        table: e.table,
        stats: e.stats,
    };
    if t.table.contains(&NONE) || !t.satisfies(p) {
        return Err(OracleError::Incomplete);
    }
    Ok(t)
}
