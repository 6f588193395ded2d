//! Normal-form arithmetic in J, H = J/Z(J) and K = H/Z(H).
//!
//! Elements are canonical triples (i,j,k) standing for A^i B^j C^k. Every
//! operation evaluates the J identities modulo o(A) and then reduces by the
//! moduli of the target family.

mod central;
pub mod formulas;
pub(crate) mod text;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Ring, W};
use crate::error::GroupError;
use crate::params::GroupParams;
use formulas::CommCase;

pub use central::Congruence;
pub use text::parse_triple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    J,
    H,
    K,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::J, Family::H, Family::K];

    /// Number of central quotients taken from J.
    pub fn depth(self) -> u32 {
        match self {
            Family::J => 0,
            Family::H => 1,
            Family::K => 2,
        }
    }

    pub fn quotient(self) -> Option<Family> {
        match self {
            Family::J => Some(Family::H),
            Family::H => Some(Family::K),
            Family::K => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::J => "J",
            Family::H => "H",
            Family::K => "K",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, GroupError> {
        match s.trim() {
            "J" | "j" => Ok(Family::J),
            "H" | "h" => Ok(Family::H),
            "K" | "k" => Ok(Family::K),
            other => Err(GroupError::Parse(other.to_string())),
        }
    }
}

/// A canonical element A^i B^j C^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    family: Family,
    i: u32,
    j: u32,
    k: u32,
}

impl Element {
    pub fn family(&self) -> Family {
        self.family
    }
    pub fn i(&self) -> u32 {
        self.i
    }
    pub fn j(&self) -> u32 {
        self.j
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn triple(&self) -> [i64; 3] {
        [self.i as i64, self.j as i64, self.k as i64]
    }
    pub fn is_identity(&self) -> bool {
        self.i == 0 && self.j == 0 && self.k == 0
    }
}

/// One of the groups J, H, K for fixed parameters. Cheap to copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Group {
    family: Family,
    params: GroupParams,
    ring: Ring,
    moduli: [i64; 3],
}

impl Group {
    pub fn new(family: Family, params: GroupParams) -> Self {
        let GroupParams { s, u, .. } = params;
        let moduli = match family {
            Family::J => [4 * u * s, 2 * u, 2 * u],
            Family::H => [2 * u, 2 * u, 2 * u],
            Family::K => [2 * u, 2 * u, s],
        };
        Group {
            family,
            params,
            ring: Ring::new(4 * u * s),
            moduli,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    /// Canonical ranges of i, j, k.
    pub fn moduli(&self) -> [i64; 3] {
        self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().map(|&m| m as u64).product()
    }

    /// Group exponent: 2^(3m-1) for J (8 at m=1), 2^(2m) for H, 2u for K.
    pub fn exponent(&self) -> i64 {
        let p = &self.params;
        match self.family {
            Family::J if p.m == 1 => 8,
            Family::J => 4 * p.u * p.s,
            Family::H => 4 * p.u,
            Family::K => 2 * p.u,
        }
    }

    /// Nilpotency class.
    pub fn class(&self) -> u32 {
        if self.params.m == 1 {
            // J is quaternion of order 16, H dihedral of order 8, K Klein four.
            return 3 - self.family.depth();
        }
        5 - self.family.depth()
    }

    /// The quotient by the center, if it is one of the three families.
    pub fn quotient(&self) -> Option<Group> {
        self.family.quotient().map(|f| Group::new(f, self.params))
    }

    /// Image of `x` in `self.quotient()`.
    pub fn project(&self, x: Element) -> Element {
        self.assert_member(x);
        let q = self.quotient().expect("K has no quotient family here");
        q.canonicalize(x.i as i64, x.j as i64, x.k as i64)
    }

    /// The canonical element equal to A^i B^j C^k.
    pub fn canonicalize(&self, i: i64, j: i64, k: i64) -> Element {
        let [mi, mj, mk] = self.moduli;
        let (i, j, k) = match self.family {
            Family::J => {
                let p = &self.params;
                let (u2, us2) = (2 * p.u, 2 * p.u * p.s);
                let mut i = i.rem_euclid(mi);
                // C^(2u) = A^(2us)
                let mut k = k.rem_euclid(2 * u2);
                if k >= u2 {
                    k -= u2;
                    i += us2;
                }
                // B^(2u) = A^(-2u)
                let j = j.rem_euclid(mi);
                i -= (j / u2) * u2;
                (i.rem_euclid(mi), j % u2, k)
            }
            _ => (i.rem_euclid(mi), j.rem_euclid(mj), k.rem_euclid(mk)),
        };
        Element {
            family: self.family,
            i: i as u32,
            j: j as u32,
            k: k as u32,
        }
    }

    fn element_of_raw(&self, raw: [W; 3]) -> Element {
        let r = &self.ring;
        self.canonicalize(r.reduce(raw[0]), r.reduce(raw[1]), r.reduce(raw[2]))
    }

    pub fn identity(&self) -> Element {
        self.canonicalize(0, 0, 0)
    }
    pub fn gen_a(&self) -> Element {
        self.canonicalize(1, 0, 0)
    }
    pub fn gen_b(&self) -> Element {
        self.canonicalize(0, 1, 0)
    }
    pub fn gen_c(&self) -> Element {
        self.canonicalize(0, 0, 1)
    }

    /// Mixed-radix index in `0..order()`.
    pub fn index(&self, x: Element) -> u64 {
        let [mi, mj, _] = self.moduli;
        x.i as u64 + mi as u64 * (x.j as u64 + mj as u64 * x.k as u64)
    }

    pub fn from_index(&self, idx: u64) -> Element {
        let [mi, mj, _] = self.moduli.map(|m| m as u64);
        Element {
            family: self.family,
            i: (idx % mi) as u32,
            j: ((idx / mi) % mj) as u32,
            k: (idx / (mi * mj)) as u32,
        }
    }

    /// Every element, in index order.
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let g = *self;
        (0..g.order()).map(move |n| g.from_index(n))
    }

    pub fn contains(&self, x: Element) -> bool {
        let [mi, mj, mk] = self.moduli;
        x.family == self.family && (x.i as i64) < mi && (x.j as i64) < mj && (x.k as i64) < mk
    }

    fn check(&self, x: Element) -> Result<(), GroupError> {
        if x.family != self.family {
            return Err(GroupError::FamilyMismatch(self.family, x.family));
        }
        if !self.contains(x) {
            return Err(GroupError::ParamsMismatch);
        }
        Ok(())
    }

    #[inline]
    fn assert_member(&self, x: Element) {
        assert_eq!(x.family, self.family, "element from another family");
    }

    /// Product x*y.
    ///
    /// Panics if an operand belongs to another family; see [`Group::try_mul`].
    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.assert_member(x);
        self.assert_member(y);
        self.element_of_raw(formulas::j_product(
            &self.ring,
            &self.params,
            x.triple(),
            y.triple(),
        ))
    }

    pub fn try_mul(&self, x: Element, y: Element) -> Result<Element, GroupError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn invert(&self, x: Element) -> Element {
        self.assert_member(x);
        self.element_of_raw(formulas::j_inverse(&self.ring, &self.params, x.triple()))
    }

    /// x^n for any integer n.
    pub fn power(&self, x: Element, n: i64) -> Element {
        self.assert_member(x);
        // 8us is a multiple of every family's exponent, including J at m=1.
        let n = n.rem_euclid(2 * self.ring.modulus());
        self.element_of_raw(formulas::j_power(
            &self.ring,
            &self.params,
            x.triple(),
            n,
            true,
        ))
    }

    /// The commutator identities for the given family.
    pub fn commutator_special(&self, case: CommCase, n: i64, t: i64) -> Element {
        let full = self.family == Family::J;
        self.element_of_raw(formulas::special_commutator(
            &self.ring,
            &self.params,
            case,
            n,
            t,
            full,
        ))
    }

    /// [x,y] = x^-1 y^-1 x y.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        let xi = self.invert(x);
        let yi = self.invert(y);
        self.mul(self.mul(xi, yi), self.mul(x, y))
    }

    pub fn try_commutator(&self, x: Element, y: Element) -> Result<Element, GroupError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.commutator(x, y))
    }

    /// [x,y] modulo Z_1: in J a representative with i reduced mod 2u, exact in H.
    pub fn commutator_mod_z1(&self, x: Element, y: Element) -> Result<Element, GroupError> {
        self.check(x)?;
        self.check(y)?;
        if self.family == Family::K {
            return Err(GroupError::Unsupported {
                family: Family::K,
                reason: "the closed form is stated for J and H",
            });
        }
        let raw = formulas::big_commutator(&self.ring, &self.params, x.triple(), y.triple());
        let e = self.element_of_raw(raw);
        Ok(self.z1_representative(e))
    }

    /// For J, the representative of x Z_1(J) with i < 2u; identity map otherwise.
    pub fn z1_representative(&self, x: Element) -> Element {
        match self.family {
            Family::J => Element {
                i: x.i % (2 * self.params.u as u32),
                ..x
            },
            _ => x,
        }
    }

    /// x^g = g^-1 x g.
    pub fn conj(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(self.invert(g), x), g)
    }

    /// Least n >= 1 with x^n = 1. All orders are powers of two.
    pub fn element_order(&self, x: Element) -> u64 {
        let mut y = x;
        let mut n = 1u64;
        while !y.is_identity() {
            y = self.mul(y, y);
            n *= 2;
        }
        n
    }

    /// Product via the family's own transcribed identities (H and K), or the
    /// J formula for J.
    pub fn mul_closed(&self, x: Element, y: Element) -> Element {
        let (r, p) = (&self.ring, &self.params);
        let raw = match self.family {
            Family::J => formulas::j_product(r, p, x.triple(), y.triple()),
            Family::H => formulas::h_product(r, p, x.triple(), y.triple()),
            Family::K => formulas::k_product(r, p, x.triple(), y.triple()),
        };
        self.element_of_raw(raw)
    }

    /// Power via the family's own transcribed identities.
    pub fn power_closed(&self, x: Element, n: i64) -> Element {
        let (r, p) = (&self.ring, &self.params);
        let n = n.rem_euclid(2 * r.modulus());
        let raw = match self.family {
            Family::J => formulas::j_power(r, p, x.triple(), n, true),
            Family::H => formulas::j_power(r, p, x.triple(), n, false),
            Family::K => formulas::k_power(r, p, x.triple(), n),
        };
        self.element_of_raw(raw)
    }

    /// Product of A^i B^j C^k for arbitrary integer exponents.
    pub fn word(&self, i: i64, j: i64, k: i64) -> Element {
        let a = self.power(self.gen_a(), i);
        let b = self.power(self.gen_b(), j);
        let c = self.power(self.gen_c(), k);
        self.mul(self.mul(a, b), c)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.params)
    }
}

#[cfg(test)]
mod tests;
