//! Upper central series membership.

use super::{Element, Group};

/// Congruence conditions i = 0 mod di, j = 0 mod dj, k = 0 mod dk on canonical triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Congruence {
    pub di: i64,
    pub dj: i64,
    pub dk: i64,
}

impl Congruence {
    pub fn holds(&self, x: Element) -> bool {
        x.i as i64 % self.di == 0 && x.j as i64 % self.dj == 0 && x.k as i64 % self.dk == 0
    }
}

impl Group {
    /// Z_level as congruences on canonical triples, for m > 1.
    ///
    /// Z_i(H) and Z_i(K) are the images of Z_(i+1)(J) and Z_(i+2)(J), so one
    /// table for J serves all three families.
    pub fn center_congruence(&self, level: u32) -> Option<Congruence> {
        let p = self.params();
        if p.m == 1 {
            return None;
        }
        let (s, u) = (p.s, p.u);
        let [mi, mj, mk] = self.moduli();
        let c = |di, dj, dk| Congruence { di, dj, dk };
        let lvl = level + self.family().depth();
        let cong = match lvl {
            0 => c(4 * u * s, 2 * u, 2 * u),
            1 => c(2 * u, 2 * u, 2 * u),
            2 => c(2 * u, 2 * u, s),
            3 => c(2 * s, 2 * s, s),
            4 => c(s, s, 1),
            _ => c(1, 1, 1),
        };
        // Divisors larger than the canonical range mean "equal to zero".
        Some(c(cong.di.min(mi), cong.dj.min(mj), cong.dk.min(mk)))
    }

    /// Least i with x in Z_i, read off the explicit generators (m > 1 only).
    pub fn explicit_level(&self, x: Element) -> Option<u32> {
        (0..=self.class()).find(|&lvl| {
            self.center_congruence(lvl)
                .map(|c| c.holds(x))
                .unwrap_or(false)
        })
    }

    /// Least i with x in Z_i, from x in Z_i iff [x,A], [x,B] in Z_(i-1).
    pub fn generic_level(&self, x: Element) -> u32 {
        if x.is_identity() {
            return 0;
        }
        let la = self.generic_level(self.commutator(x, self.gen_a()));
        let lb = self.generic_level(self.commutator(x, self.gen_b()));
        1 + la.max(lb)
    }

    /// Least i with x in Z_i. Uses the explicit description when m > 1.
    pub fn central_level(&self, x: Element) -> u32 {
        self.explicit_level(x)
            .unwrap_or_else(|| self.generic_level(x))
    }

    /// All elements of Z_level.
    pub fn center_term(&self, level: u32) -> Vec<Element> {
        match self.center_congruence(level) {
            Some(c) => {
                let [mi, mj, mk] = self.moduli();
                let mut out = Vec::new();
                for k in (0..mk).step_by(c.dk as usize) {
                    for j in (0..mj).step_by(c.dj as usize) {
                        for i in (0..mi).step_by(c.di as usize) {
                            out.push(self.canonicalize(i, j, k));
                        }
                    }
                }
                out
            }
            None => self
                .elements()
                .filter(|&x| self.generic_level(x) <= level)
                .collect(),
        }
    }

    /// Generators of Z_level as listed for each family (m > 1), or all of
    /// Z_level when no explicit list applies.
    pub fn center_generators(&self, level: u32) -> Vec<Element> {
        match self.center_congruence(level) {
            Some(c) => {
                let g = [
                    self.canonicalize(c.di, 0, 0),
                    self.canonicalize(0, c.dj, 0),
                    self.canonicalize(0, 0, c.dk),
                ];
                let mut v: Vec<Element> = g.into_iter().filter(|x| !x.is_identity()).collect();
                v.sort();
                v.dedup();
                v
            }
            None => self.center_term(level),
        }
    }

    /// Only K at m = 1 is abelian.
    pub fn is_abelian(&self) -> bool {
        self.class() <= 1
    }
}
