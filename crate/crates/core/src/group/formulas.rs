//! Closed-form normal-form arithmetic.
//!
//! The J formulas are evaluated over any [`Eval`] backend; the H and K
//! formulas are separate transcriptions of their own product/power/commutator
//! identities, kept so they can be compared against the projected J results.

use crate::arith::{xi1, xi2, xi3, xi4, Eval};
use crate::params::GroupParams;

pub type Raw<V> = [V; 3];

fn consts<E: Eval>(e: &E, p: &GroupParams) -> (E::V, E::V) {
    let sl2 = e.lit(2 * p.s) * e.lit(p.ell);
    let ul4 = e.lit(4 * p.u) * e.lit(p.ell) * e.lit(p.ell);
    (sl2, ul4)
}

/// (A^iB^jC^k)(A^aB^bC^c) in J, with the xi_2 tail folded into the A-exponent.
pub fn j_product<E: Eval>(e: &E, p: &GroupParams, x: [i64; 3], y: [i64; 3]) -> Raw<E::V> {
    let [i, j, k] = x;
    let [a, b, c] = y;
    let l = |v| e.lit(v);
    let (sl2, _) = consts(e, p);
    let ea = l(i) + l(a) + sl2 * (l(j) * e.phi(a) - l(k) * l(a)) + xi2(e, p, j, k, a, b);
    let eb = l(j) + l(b) + sl2 * (l(k) * l(b) - l(j) * l(a) * l(b) - e.phi(j) * l(a));
    let ec = l(k) + l(c) - l(j) * l(a) + sl2 * (l(j) * l(k) * l(a) - e.phi(j + 1) * e.phi(a));
    [ea, eb, ec]
}

/// (A^aB^bC^c)^-1 in J.
pub fn j_inverse<E: Eval>(e: &E, p: &GroupParams, x: [i64; 3]) -> Raw<E::V> {
    let [a, b, c] = x;
    let l = |v| e.lit(v);
    let (sl2, _) = consts(e, p);
    let ea = -l(a) - sl2 * (e.phi(a + 1) * l(b) + l(a) * l(c)) + xi3(e, p, a, b, c);
    let eb = -l(b) + sl2 * (l(a) * e.phi(b + 1) + l(b) * l(c));
    let ec = -l(c) - l(a) * l(b) - sl2 * e.phi(a + 1) * e.phi(b);
    [ea, eb, ec]
}

/// (A^aB^bC^c)^n in J. With `with_xi = false` this is the H power identity.
pub fn j_power<E: Eval>(e: &E, p: &GroupParams, x: [i64; 3], n: i64, with_xi: bool) -> Raw<E::V> {
    let [a, b, c] = x;
    let l = |v| e.lit(v);
    let (sl2, _) = consts(e, p);
    let (pa, pb, pn) = (e.phi(a), e.phi(b), e.phi(n));
    let vn = e.varphi(n);
    let g = pa * l(b) - l(a) * l(c);
    let a2 = l(a) * l(a);
    let mut ea = l(n) * l(a) + sl2 * (a2 * l(b) * vn + g * pn);
    let eb = l(n) * l(b)
        + sl2 * ((l(b) * (l(c) - l(a) * l(b)) - l(a) * pb) * pn - l(2) * l(a) * l(b) * l(b) * vn);
    let ec = l(n) * l(c) - l(a) * l(b) * pn
        + sl2
            * (a2 * pb * vn + pa * pb * pn
                - a2 * l(b) * l(b) * e.sigma2(1, n)
                - g * l(b) * e.varphi(n + 1));
    if with_xi {
        ea = ea + xi4(e, p, a, b, c, n);
    }
    [ea, eb, ec]
}

/// [A^iB^jC^k, A^aB^bC^c] modulo Z_1(J); exact in H.
pub fn big_commutator<E: Eval>(e: &E, p: &GroupParams, x: [i64; 3], y: [i64; 3]) -> Raw<E::V> {
    let [i, j, k] = x;
    let [a, b, c] = y;
    let l = |v| e.lit(v);
    let (sl2, _) = consts(e, p);
    let (pi, pj, pa, pb) = (e.phi(i), e.phi(j), e.phi(a), e.phi(b));
    let ea = sl2 * (l(j) * pa - pi * l(b) + l(i) * l(c) - l(k) * l(a));
    let eb =
        sl2 * (l(i) * pb - pj * l(a) + l(k) * l(b) + l(j) * (l(i) * l(b) - l(a) * l(b) - l(c)));
    let ec = l(i) * l(b) - l(j) * l(a)
        + sl2
            * (pa * (pj + l(j) * l(b)) - pi * (pb + l(j) * l(b)) + l(i) * l(j) * l(c)
                - l(k) * l(a) * l(b));
    [ea, eb, ec]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CommCase {
    /// [C^n, A^t]
    CA,
    /// [C^n, B^t]
    CB,
    /// [A^n, B^t]
    AB,
}

impl std::str::FromStr for CommCase {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "CA" => Ok(CommCase::CA),
            "CB" => Ok(CommCase::CB),
            "AB" => Ok(CommCase::AB),
            _ => Err(format!("unknown commutator case {s:?}")),
        }
    }
}

impl std::fmt::Display for CommCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CommCase::CA => "CA",
            CommCase::CB => "CB",
            CommCase::AB => "AB",
        })
    }
}

/// The commutator identities for [C^n,A^t], [C^n,B^t], [A^n,B^t].
/// `full = false` drops the 4u ell^2 terms and xi_1, giving the H and K versions.
pub fn special_commutator<E: Eval>(
    e: &E,
    p: &GroupParams,
    case: CommCase,
    n: i64,
    t: i64,
    full: bool,
) -> Raw<E::V> {
    let l = |v| e.lit(v);
    let (sl2, ul4) = consts(e, p);
    let zero = l(0);
    match case {
        CommCase::CA => {
            let mut ea = -sl2 * l(n) * l(t);
            if full {
                ea = ea - ul4 * e.phi(n) * l(t);
            }
            [ea, zero, zero]
        }
        CommCase::CB => {
            let mut eb = sl2 * l(n) * l(t);
            if full {
                eb = eb - ul4 * e.phi(n + 1) * l(t);
            }
            [zero, eb, zero]
        }
        CommCase::AB => {
            let mut ea = -sl2 * e.phi(n) * l(t);
            if full {
                ea = ea + xi1(e, p, n, t);
            }
            let eb = sl2 * l(n) * e.phi(t);
            let ec = l(n) * l(t) - sl2 * e.phi(n) * e.phi(t);
            [ea, eb, ec]
        }
    }
}

/// Product in K, transcribed directly.
pub fn k_product<E: Eval>(e: &E, p: &GroupParams, x: [i64; 3], y: [i64; 3]) -> Raw<E::V> {
    let [i, j, k] = x;
    let [n, t, q] = y;
    let l = |v| e.lit(v);
    let (sl2, _) = consts(e, p);
    [
        l(i) + l(n) + sl2 * (l(j) * e.phi(n) - l(k) * l(n)),
        l(j) + l(t) + sl2 * (l(k) * l(t) - l(j) * l(n) * l(t) - e.phi(j) * l(n)),
        l(k) + l(q) - l(j) * l(n),
    ]
}

/// Power in K, transcribed directly.
pub fn k_power<E: Eval>(e: &E, p: &GroupParams, x: [i64; 3], n: i64) -> Raw<E::V> {
    let [i, j, k] = x;
    let l = |v| e.lit(v);
    let (sl2, _) = consts(e, p);
    let (pn, vn) = (e.phi(n), e.varphi(n));
    [
        l(n) * l(i) + sl2 * (l(i) * l(i) * l(j) * vn + (e.phi(i) * l(j) - l(i) * l(k)) * pn),
        l(n) * l(j)
            + sl2
                * ((l(j) * (l(k) - l(i) * l(j)) - l(i) * e.phi(j)) * pn
                    - l(2) * l(i) * l(j) * l(j) * vn),
        l(n) * l(k) - l(i) * l(j) * pn,
    ]
}

/// Product in H: the J product without the xi_2 tail.
pub fn h_product<E: Eval>(e: &E, p: &GroupParams, x: [i64; 3], y: [i64; 3]) -> Raw<E::V> {
    let [i, j, k] = x;
    let [a, b, c] = y;
    let l = |v| e.lit(v);
    let (sl2, _) = consts(e, p);
    [
        l(i) + l(a) + sl2 * (l(j) * e.phi(a) - l(k) * l(a)),
        l(j) + l(b) + sl2 * (l(k) * l(b) - l(j) * l(a) * l(b) - e.phi(j) * l(a)),
        l(k) + l(c) - l(j) * l(a) + sl2 * (l(j) * l(k) * l(a) - e.phi(j + 1) * e.phi(a)),
    ]
}

/// The exponent of C in (A^aB^bC^c)^(2u) in H, namely uab.
pub fn h_power_2u_c(p: &GroupParams, a: i64, b: i64) -> i64 {
    p.u * a * b
}

/// Exact integer exponent pieces for the K big commutator: c^(it - jn).
pub fn k_big_commutator_c(x: [i64; 3], y: [i64; 3]) -> i64 {
    x[0] * y[1] - x[1] * y[0]
}
