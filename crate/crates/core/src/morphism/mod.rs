//! Endomorphisms given by the images of A and B.
//!
//! Composition is left to right: (x)(fg) = ((x)f)g.

mod catalog;

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{GroupError, MorphismError};
use crate::group::{parse_triple, Element, Family, Group};

pub use catalog::{catalog, NamedAut};

/// The images of A and B, with the image of C = [A,B] cached.
#[derive(Debug, Clone, Copy)]
pub struct GenMap {
    group: Group,
    img_a: Element,
    img_b: Element,
    img_c: Element,
}

impl PartialEq for GenMap {
    fn eq(&self, o: &Self) -> bool {
        self.group == o.group && self.img_a == o.img_a && self.img_b == o.img_b
    }
}
impl Eq for GenMap {}

impl Hash for GenMap {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.group.hash(h);
        self.img_a.hash(h);
        self.img_b.hash(h);
    }
}

/// A defining relation that an assignment fails to preserve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationViolation {
    pub relation: &'static str,
    pub lhs: Element,
    pub rhs: Element,
}

impl fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = |e: &Element| format!("({},{},{})", e.i(), e.j(), e.k());
        write!(f, "{}: {} != {}", self.relation, t(&self.lhs), t(&self.rhs))
    }
}

/// Precomputed powers of the generator images; applying the map then costs two products.
#[derive(Debug, Clone)]
pub struct ApplyTable {
    group: Group,
    a: Vec<Element>,
    b: Vec<Element>,
    c: Vec<Element>,
}

impl ApplyTable {
    pub fn new(f: &GenMap) -> Self {
        let g = f.group;
        let [mi, mj, mk] = g.moduli();
        let pows = |x: Element, n: i64| {
            let mut v = Vec::with_capacity(n as usize);
            let mut acc = g.identity();
            for _ in 0..n {
                v.push(acc);
                acc = g.mul(acc, x);
            }
            v
        };
        ApplyTable {
            group: g,
            a: pows(f.img_a, mi),
            b: pows(f.img_b, mj),
            c: pows(f.img_c, mk),
        }
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        let g = &self.group;
        g.mul(
            g.mul(self.a[x.i() as usize], self.b[x.j() as usize]),
            self.c[x.k() as usize],
        )
    }
}

impl GenMap {
    /// The assignment A -> a, B -> b. Not checked for being a homomorphism.
    pub fn from_images(group: Group, a: Element, b: Element) -> Result<Self, MorphismError> {
        for x in [a, b] {
            if x.family() != group.family() {
                return Err(GroupError::FamilyMismatch(group.family(), x.family()).into());
            }
            if !group.contains(x) {
                return Err(GroupError::ParamsMismatch.into());
            }
        }
        Ok(GenMap {
            group,
            img_a: a,
            img_b: b,
            img_c: group.commutator(a, b),
        })
    }

    pub fn identity(group: Group) -> Self {
        GenMap {
            group,
            img_a: group.gen_a(),
            img_b: group.gen_b(),
            img_c: group.gen_c(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }
    pub fn img_a(&self) -> Element {
        self.img_a
    }
    pub fn img_b(&self) -> Element {
        self.img_b
    }
    pub fn img_c(&self) -> Element {
        self.img_c
    }

    pub fn is_identity(&self) -> bool {
        self.img_a == self.group.gen_a() && self.img_b == self.group.gen_b()
    }

    /// imgA^i imgB^j imgC^k for x = A^i B^j C^k.
    pub fn apply(&self, x: Element) -> Element {
        let g = &self.group;
        let [i, j, k] = x.triple();
        let a = g.power(self.img_a, i);
        let b = g.power(self.img_b, j);
        let c = g.power(self.img_c, k);
        g.mul(g.mul(a, b), c)
    }

    pub fn try_apply(&self, x: Element) -> Result<Element, MorphismError> {
        if x.family() != self.group.family() {
            return Err(GroupError::FamilyMismatch(self.group.family(), x.family()).into());
        }
        Ok(self.apply(x))
    }

    /// Checks every defining relation of the family on the images.
    pub fn check_endomorphism(&self) -> Result<(), RelationViolation> {
        let g = &self.group;
        let p = g.params();
        let (x, y, c) = (self.img_a, self.img_b, self.img_c);
        let fail = |relation, lhs, rhs| Err(RelationViolation { relation, lhs, rhs });

        let lhs = g.conj(x, c);
        let rhs = g.power(x, p.alpha);
        if lhs != rhs {
            return fail("A^[A,B] = A^alpha", lhs, rhs);
        }
        let lhs = g.conj(y, g.invert(c));
        let rhs = g.power(y, p.alpha);
        if lhs != rhs {
            return fail("B^[B,A] = B^alpha", lhs, rhs);
        }
        // Redundant for J, where the two conjugation relations already present the group.
        let order = g.element_order(g.gen_a()) as i64;
        for (name, z) in [("A^o(A) = 1", x), ("B^o(B) = 1", y)] {
            let w = g.power(z, order);
            if !w.is_identity() {
                return fail(name, w, g.identity());
            }
        }
        if g.family() == Family::K {
            let w = g.power(c, p.s);
            if !w.is_identity() {
                return fail("[A,B]^s = 1", w, g.identity());
            }
        }
        Ok(())
    }

    /// An endomorphism of a finite nilpotent group is bijective iff it is
    /// injective on the center.
    pub fn is_automorphism(&self) -> Result<bool, MorphismError> {
        self.check_endomorphism()
            .map_err(MorphismError::NotEndomorphism)?;
        Ok(self
            .group
            .center_term(1)
            .into_iter()
            .all(|z| z.is_identity() || !self.apply(z).is_identity()))
    }

    /// Does the assignment extend to an automorphism?
    pub fn extends_to_automorphism(&self) -> bool {
        matches!(self.is_automorphism(), Ok(true))
    }

    /// x(fg) = (xf)g.
    pub fn compose(&self, g: &GenMap) -> GenMap {
        assert_eq!(self.group, g.group, "composing maps of different groups");
        GenMap::from_images(self.group, g.apply(self.img_a), g.apply(self.img_b))
            .expect("same group")
    }

    pub fn try_compose(&self, g: &GenMap) -> Result<GenMap, MorphismError> {
        if self.group != g.group {
            return Err(GroupError::ParamsMismatch.into());
        }
        Ok(self.compose(g))
    }

    /// Order of an automorphism, found by iteration.
    pub fn order(&self, limit: u64) -> Result<u64, MorphismError> {
        let mut cur = *self;
        let mut n = 1;
        while !cur.is_identity() {
            if n >= limit {
                return Err(MorphismError::OrderLimit(limit));
            }
            cur = cur.compose(self);
            n += 1;
        }
        Ok(n)
    }

    /// f^-1 as the last non-identity iterate of f.
    pub fn aut_inverse(&self) -> Result<GenMap, MorphismError> {
        if !self.is_automorphism()? {
            return Err(MorphismError::NotAutomorphism);
        }
        let n = self.order(1 << 20)?;
        let mut inv = GenMap::identity(self.group);
        for _ in 1..n {
            inv = inv.compose(self);
        }
        Ok(inv)
    }

    /// Least i such that f acts trivially on T/Z_i(T).
    pub fn centrality_level(&self) -> u32 {
        let g = &self.group;
        let da = g.mul(self.img_a, g.invert(g.gen_a()));
        let db = g.mul(self.img_b, g.invert(g.gen_b()));
        g.central_level(da).max(g.central_level(db))
    }

    /// The induced map on T/Z_1(T), for T in {J, H}.
    pub fn induce_on_quotient(&self) -> Result<GenMap, MorphismError> {
        let g = &self.group;
        let q = g.quotient().ok_or(GroupError::Unsupported {
            family: g.family(),
            reason: "quotient by the center is not one of J, H, K",
        })?;
        GenMap::from_images(q, g.project(self.img_a), g.project(self.img_b))
    }

    /// The same assignment read in another group with the same family and
    /// canonical triples (used when comparing parameter choices).
    pub fn format_raw(&self) -> String {
        format!(
            "{} ; {}",
            self.group.format_triple(self.img_a),
            self.group.format_triple(self.img_b)
        )
    }

    /// Inverse of [`GenMap::format_raw`].
    pub fn parse_raw(s: &str) -> Result<GenMap, MorphismError> {
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| MorphismError::Parse(s.to_string()))?;
        let (ga, xa) = parse_triple(a)?;
        let (gb, xb) = parse_triple(b)?;
        if ga != gb {
            return Err(GroupError::ParamsMismatch.into());
        }
        GenMap::from_images(ga, xa, xb)
    }
}

impl fmt::Display for GenMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.group;
        write!(
            f,
            "A -> {}, B -> {} in {}",
            g.format_word(self.img_a),
            g.format_word(self.img_b),
            g
        )
    }
}

#[cfg(test)]
mod tests;
