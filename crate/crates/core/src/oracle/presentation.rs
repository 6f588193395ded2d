//! Finite presentations on the generators A, B, C.
//!
//! Text format: one relator per line, letters `A B C` and their inverses
//! `a b c`, each optionally followed by `^n`. A line `u = v` stands for the
//! relator `u v^-1`. Blank lines and lines starting with `#` are skipped.
//! The relator `c a b A B` (defining C = [A,B]) is always added.

use std::fmt;

use crate::error::OracleError;
use crate::group::{Family, Group};
use crate::params::{GroupParams, OddPrimeParams};

pub const GENERATORS: [char; 3] = ['A', 'B', 'C'];

/// A generator or its inverse. The column of a letter in a coset table is
/// `2 * gen + inv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: u8,
    pub inv: bool,
}

impl Letter {
    pub const fn new(gen: u8, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    pub fn column(self) -> usize {
        2 * self.gen as usize + self.inv as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = GENERATORS[self.gen as usize];
        if self.inv {
            write!(f, "{}", c.to_ascii_lowercase())
        } else {
            write!(f, "{c}")
        }
    }
}

pub type Word = Vec<Letter>;

pub const A: u8 = 0;
pub const B: u8 = 1;
pub const C: u8 = 2;

/// g^n as letters.
pub fn power(gen: u8, n: i64) -> Word {
    vec![Letter::new(gen, n < 0); n.unsigned_abs() as usize]
}

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// Free and cyclic reduction.
pub fn reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    while out.len() >= 2 && out[0] == out[out.len() - 1].inverse() {
        out.pop();
        out.remove(0);
    }
    out
}

/// The word A^i B^j C^k.
pub fn normal_word(i: i64, j: i64, k: i64) -> Word {
    let mut w = power(A, i);
    w.extend(power(B, j));
    w.extend(power(C, k));
    w
}

/// [x, y] = x^-1 y^-1 x y.
pub fn commutator_word(x: &[Letter], y: &[Letter]) -> Word {
    let mut w = inverse(x);
    w.extend(inverse(y));
    w.extend_from_slice(x);
    w.extend_from_slice(y);
    w
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Hlt,
    Felsch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub max_cosets: usize,
    pub strategy: Strategy,
}

impl Default for EnumOptions {
    /// HLT with the cap from `MACFORGE_MAX_COSETS` (default 2^21).
    fn default() -> Self {
        EnumOptions {
            max_cosets: super::coset::max_cosets_from_env(),
            strategy: Strategy::Hlt,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub relators: Vec<Word>,
    pub options: EnumOptions,
}

impl Presentation {
    /// A presentation with the given relators plus the definition of C.
    pub fn new(name: impl Into<String>, relators: Vec<Word>) -> Self {
        // C^-1 [A,B]
        let mut all = vec![vec![Letter::new(C, true)]];
        all[0].extend(commutator_word(
            &[Letter::new(A, false)],
            &[Letter::new(B, false)],
        ));
        all.extend(relators);
        let relators = all
            .iter()
            .map(|r| reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        Presentation {
            name: name.into(),
            relators,
            options: EnumOptions::default(),
        }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.options.strategy = strategy;
        self
    }

    pub fn with_max_cosets(mut self, max_cosets: usize) -> Self {
        self.options.max_cosets = max_cosets;
        self
    }

    pub fn num_generators(&self) -> usize {
        GENERATORS.len()
    }

    /// Relators for x^[x,y] = x^alpha and y^[y,x] = y^alpha.
    fn macdonald(alpha: i64) -> Vec<Word> {
        let (a, b, c) = (
            Letter::new(A, false),
            Letter::new(B, false),
            Letter::new(C, false),
        );
        // C^-1 A C A^-alpha
        let mut r1 = vec![c.inverse(), a, c];
        r1.extend(power(A, -alpha));
        // C B C^-1 B^-alpha
        let mut r2 = vec![c, b, c.inverse()];
        r2.extend(power(B, -alpha));
        vec![r1, r2]
    }

    /// J, H or K with the presentations used for each family.
    pub fn family(family: Family, p: GroupParams) -> Self {
        let mut rels = Self::macdonald(p.alpha);
        let o = match family {
            Family::J => 4 * p.u * p.s,
            Family::H | Family::K => 2 * p.u,
        };
        rels.push(power(A, o));
        rels.push(power(B, o));
        if family == Family::K {
            rels.push(power(C, p.s));
        }
        let mut pres = Self::new(Group::new(family, p).to_string(), rels);
        if family == Family::J && p.m >= 3 {
            pres.options.max_cosets =
                super::coset::env_max_cosets().unwrap_or(super::coset::LARGE_MAX_COSETS);
        }
        pres
    }

    /// The Sylow p-subgroup for odd p: A^(p^3m) = B^(p^3m) = 1.
    pub fn odd_prime(p: &OddPrimeParams) -> Self {
        let mut rels = Self::macdonald(p.alpha);
        let o = p.p_pow(3 * p.m);
        rels.push(power(A, o));
        rels.push(power(B, o));
        Self::new(format!("Jp[{},{},{}]", p.p, p.m, p.ell), rels)
    }

    /// <u, v | u^4 = v^2, u^v = u^-1, u^8 = 1> with u = A, v = B.
    pub fn quaternion() -> Self {
        let (a, b) = (Letter::new(A, false), Letter::new(B, false));
        let mut r1 = power(A, 4);
        r1.extend(power(B, -2));
        let r2 = vec![b.inverse(), a, b, a];
        Self::new("Q16", vec![r1, r2, power(A, 8)])
    }

    /// "J[m,ell]", "H[m,ell]", "K[m,ell]", "Jp[p,m,ell]" or "Q16".
    pub fn builtin(name: &str) -> Result<Self, OracleError> {
        let name = name.trim();
        let perr = || OracleError::Parse(format!("unknown built-in presentation {name:?}"));
        if name == "Q16" {
            return Ok(Self::quaternion());
        }
        if let Some(rest) = name.strip_prefix("Jp") {
            let v = crate::group::text::parse_bracket_ints(rest).ok_or_else(perr)?;
            let [p, m, ell] = v[..] else {
                return Err(perr());
            };
            let p = OddPrimeParams::new(
                u64::try_from(p).map_err(|_| perr())?,
                u32::try_from(m).map_err(|_| perr())?,
                ell,
            )?;
            return Ok(Self::odd_prime(&p));
        }
        let g: Group = name.parse().map_err(|_| perr())?;
        Ok(Self::family(g.family(), *g.params()))
    }

    /// Parse the text format.
    pub fn parse(name: &str, text: &str) -> Result<Self, OracleError> {
        let mut rels = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let rel = match line.split_once('=') {
                Some((l, r)) => {
                    let mut w = parse_word(l)?;
                    w.extend(inverse(&parse_word(r)?));
                    w
                }
                None => parse_word(line)?,
            };
            rels.push(rel);
        }
        Ok(Self::new(name, rels))
    }

    /// Text form accepted by [`Presentation::parse`] (the C relator is implied).
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.name);
        for r in self.relators.iter().skip(1) {
            out.push_str(&format_word(r));
            out.push('\n');
        }
        out
    }
}

/// Letters with run-length exponents, e.g. "c A C a^9".
pub fn format_word(w: &[Letter]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let n = j - i;
        parts.push(if n == 1 {
            w[i].to_string()
        } else {
            format!("{}^{}", w[i], n)
        });
        i = j;
    }
    parts.join(" ")
}

/// Parse letters with optional exponents, e.g. "A^4 b^2", "cAC a^-9".
pub fn parse_word(s: &str) -> Result<Word, OracleError> {
    let perr = || OracleError::Parse(s.trim().to_string());
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        if ch.is_whitespace() || ch == '*' {
            continue;
        }
        if ch == '1' && out.is_empty() && chars.peek().is_none() {
            break;
        }
        let gen = match ch.to_ascii_uppercase() {
            'A' => A,
            'B' => B,
            'C' => C,
            _ => return Err(perr()),
        };
        let base = Letter::new(gen, ch.is_ascii_lowercase());
        let mut n: i64 = 1;
        if chars.peek() == Some(&'^') {
            chars.next();
            let mut num = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() || (num.is_empty() && (d == '-' || d == '+')) {
                    num.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            n = num.parse().map_err(|_| perr())?;
        }
        let l = if n < 0 { base.inverse() } else { base };
        out.extend(std::iter::repeat_n(l, n.unsigned_abs() as usize));
    }
    Ok(out)
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
