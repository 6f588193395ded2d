//! Integer helpers phi, varphi, sigma_1..3 and the xi corrections.
//!
//! Formulas are written once against [`Eval`] and evaluated either exactly
//! (checked `i128`, [`Exact`]) or modulo a power of two ([`Ring`]), which is
//! what the group arithmetic uses.

use std::cell::RefCell;
use std::num::Wrapping;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ArithError;
use crate::params::GroupParams;

/// phi(n) = (n-1)n/2.
pub fn phi(n: i64) -> i128 {
    let n = n as i128;
    (n - 1) * n / 2
}

/// varphi(n) = n(n-1)(n-2)/6.
///
/// Panics only if the result leaves `i128`, i.e. for |n| beyond about 2^42.
pub fn varphi(n: i64) -> i128 {
    exact_varphi(n as i128).expect("varphi argument too large")
}

fn exact_varphi(n: i128) -> Result<i128, ArithError> {
    // One of three consecutive integers is divisible by 3; divide before multiplying.
    let mut f = [n, n - 1, n - 2];
    let i3 = f.iter().position(|x| x.rem_euclid(3) == 0).unwrap();
    f[i3] /= 3;
    let i2 = f.iter().position(|x| x.rem_euclid(2) == 0).unwrap();
    f[i2] /= 2;
    f[0].checked_mul(f[1])
        .and_then(|x| x.checked_mul(f[2]))
        .ok_or(ArithError::Overflow("varphi"))
}

fn exact_phi(n: i128) -> Result<i128, ArithError> {
    let (a, b) = if n.rem_euclid(2) == 0 {
        (n / 2, n - 1)
    } else {
        (n, (n - 1) / 2)
    };
    a.checked_mul(b).ok_or(ArithError::Overflow("phi"))
}

fn div_exact(what: &'static str, num: i128, den: i128) -> Result<i128, ArithError> {
    if num.rem_euclid(den) != 0 {
        return Err(ArithError::NonIntegral { what, num, den });
    }
    Ok(num / den)
}

fn mul3(a: i128, b: i128, c: i128, what: &'static str) -> Result<i128, ArithError> {
    a.checked_mul(b)
        .and_then(|x| x.checked_mul(c))
        .ok_or(ArithError::Overflow(what))
}

/// sigma_1(k,t) = k phi(t) (k phi(t) - 1) / 2.
pub fn sigma1_exact(k: i128, t: i128) -> Result<i128, ArithError> {
    let x = k
        .checked_mul(exact_phi(t)?)
        .ok_or(ArithError::Overflow("sigma1"))?;
    exact_phi(x)
}

/// sigma_2(k,t) = k phi(t) (k^2 phi(t) - 1) / 6.
pub fn sigma2_exact(k: i128, t: i128) -> Result<i128, ArithError> {
    let p = exact_phi(t)?;
    let kp = k.checked_mul(p).ok_or(ArithError::Overflow("sigma2"))?;
    let inner = kp
        .checked_mul(k)
        .and_then(|x| x.checked_sub(1))
        .ok_or(ArithError::Overflow("sigma2"))?;
    let num = kp
        .checked_mul(inner)
        .ok_or(ArithError::Overflow("sigma2"))?;
    div_exact("sigma2", num, 6)
}

/// sigma_3(t) = [ (t-1)t(6(t-1)^3 + 9(t-1)^2 + t - 2)/30 - 3 phi(t)^2 + 4 varphi(t) + 2 phi(t) ] / 6.
pub fn sigma3_exact(t: i128) -> Result<i128, ArithError> {
    let o = ArithError::Overflow("sigma3");
    let tm = t - 1;
    let poly = tm
        .checked_pow(3)
        .and_then(|c| c.checked_mul(6))
        .and_then(|c| c.checked_add(tm.checked_mul(tm)?.checked_mul(9)?))
        .and_then(|c| c.checked_add(t - 2))
        .ok_or(o.clone())?;
    let first = div_exact("sigma3", mul3(tm, t, poly, "sigma3")?, 30)?;
    let p = exact_phi(t)?;
    let rest = p
        .checked_mul(p)
        .and_then(|x| x.checked_mul(-3))
        .and_then(|x| x.checked_add(exact_varphi(t).ok()?.checked_mul(4)?))
        .and_then(|x| x.checked_add(p.checked_mul(2)?))
        .ok_or(o.clone())?;
    div_exact("sigma3", first.checked_add(rest).ok_or(o)?, 6)
}

/// sigma(kind, k, t) for kind in {1,2,3}; sigma_3 ignores k.
pub fn sigma(kind: u8, k: i64, t: i64) -> Result<i128, ArithError> {
    match kind {
        1 => sigma1_exact(k as i128, t as i128),
        2 => sigma2_exact(k as i128, t as i128),
        3 => sigma3_exact(t as i128),
        other => Err(ArithError::UnknownKind(other)),
    }
}

/// Evaluation backend for the transcribed formulas.
///
/// Helper arguments are always passed as plain integers; a backend may reduce
/// them by any period that preserves the helper's value in its own codomain.
pub trait Eval {
    type V: Copy
        + Add<Output = Self::V>
        + Sub<Output = Self::V>
        + Mul<Output = Self::V>
        + Neg<Output = Self::V>;
    fn lit(&self, x: i64) -> Self::V;
    fn phi(&self, n: i64) -> Self::V;
    fn varphi(&self, n: i64) -> Self::V;
    fn sigma1(&self, k: i64, t: i64) -> Self::V;
    fn sigma2(&self, k: i64, t: i64) -> Self::V;
    fn sigma3(&self, t: i64) -> Self::V;
    /// Turn an exactly computed intermediate into a helper argument.
    fn arg(&self, x: i128) -> i64;
}

/// Arithmetic modulo 2^bits carried out in wrapping `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    modulus: i64,
}

pub type W = Wrapping<i64>;

impl Ring {
    pub fn new(modulus: i64) -> Self {
        assert!(
            modulus > 0 && modulus.count_ones() == 1,
            "modulus must be a power of two"
        );
        assert!(modulus <= 1 << 40, "modulus too large");
        Ring { modulus }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Least non-negative residue.
    #[inline]
    pub fn reduce(&self, x: W) -> i64 {
        x.0 & (self.modulus - 1)
    }

    #[inline]
    fn period(&self, factor: i64, n: i64) -> i128 {
        n.rem_euclid(factor * self.modulus) as i128
    }
}

impl Eval for Ring {
    type V = W;

    #[inline]
    fn lit(&self, x: i64) -> W {
        Wrapping(x)
    }

    #[inline]
    fn phi(&self, n: i64) -> W {
        let n = self.period(2, n);
        Wrapping(((n - 1) * n / 2) as i64)
    }

    #[inline]
    fn varphi(&self, n: i64) -> W {
        let n = self.period(6, n);
        Wrapping((n * (n - 1) * (n - 2) / 6) as i64)
    }

    fn sigma1(&self, k: i64, t: i64) -> W {
        let k = self.period(2, k);
        let t = self.period(4, t);
        let x = k * ((t - 1) * t / 2);
        Wrapping((x * (x - 1) / 2) as i64)
    }

    fn sigma2(&self, k: i64, t: i64) -> W {
        let six = 6 * self.modulus as i128;
        let k = self.period(6, k);
        let t = self.period(12, t);
        let p = ((t - 1) * t / 2).rem_euclid(six);
        let num = (k * p).rem_euclid(six) * (k * k * p - 1).rem_euclid(six);
        let num = num.rem_euclid(six);
        debug_assert_eq!(num % 6, 0);
        Wrapping((num / 6) as i64)
    }

    fn sigma3(&self, t: i64) -> W {
        let t = self.period(360, t);
        Wrapping(sigma3_exact(t).expect("sigma3 on reduced argument") as i64)
    }

    #[inline]
    fn arg(&self, x: i128) -> i64 {
        x.rem_euclid(360 * self.modulus as i128) as i64
    }
}

/// Checked exact evaluation. Overflow or a non-integral quotient poisons the
/// evaluator; read the outcome with [`Exact::finish`].
#[derive(Debug, Default)]
pub struct Exact {
    failure: RefCell<Option<ArithError>>,
}

/// Checked `i128`; `None` after overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ck(pub Option<i128>);

impl Add for Ck {
    type Output = Ck;
    fn add(self, o: Ck) -> Ck {
        Ck(self.0.zip(o.0).and_then(|(a, b)| a.checked_add(b)))
    }
}
impl Sub for Ck {
    type Output = Ck;
    fn sub(self, o: Ck) -> Ck {
        Ck(self.0.zip(o.0).and_then(|(a, b)| a.checked_sub(b)))
    }
}
impl Mul for Ck {
    type Output = Ck;
    fn mul(self, o: Ck) -> Ck {
        Ck(self.0.zip(o.0).and_then(|(a, b)| a.checked_mul(b)))
    }
}
impl Neg for Ck {
    type Output = Ck;
    fn neg(self) -> Ck {
        Ck(self.0.and_then(i128::checked_neg))
    }
}

impl Exact {
    pub fn new() -> Self {
        Self::default()
    }

    fn lift(&self, r: Result<i128, ArithError>) -> Ck {
        match r {
            Ok(v) => Ck(Some(v)),
            Err(e) => {
                self.failure.borrow_mut().get_or_insert(e);
                Ck(None)
            }
        }
    }

    pub fn finish(&self, v: Ck, what: &'static str) -> Result<i128, ArithError> {
        if let Some(e) = self.failure.borrow_mut().take() {
            return Err(e);
        }
        v.0.ok_or(ArithError::Overflow(what))
    }
}

impl Eval for Exact {
    type V = Ck;

    fn lit(&self, x: i64) -> Ck {
        Ck(Some(x as i128))
    }
    fn phi(&self, n: i64) -> Ck {
        self.lift(exact_phi(n as i128))
    }
    fn varphi(&self, n: i64) -> Ck {
        self.lift(exact_varphi(n as i128))
    }
    fn sigma1(&self, k: i64, t: i64) -> Ck {
        self.lift(sigma1_exact(k as i128, t as i128))
    }
    fn sigma2(&self, k: i64, t: i64) -> Ck {
        self.lift(sigma2_exact(k as i128, t as i128))
    }
    fn sigma3(&self, t: i64) -> Ck {
        self.lift(sigma3_exact(t as i128))
    }
    fn arg(&self, x: i128) -> i64 {
        match i64::try_from(x) {
            Ok(v) => v,
            Err(_) => {
                self.lift(Err(ArithError::Overflow("helper argument")));
                0
            }
        }
    }
}

/// xi_1(n,t) from the commutator identity for [A^n, B^t].
pub fn xi1<E: Eval>(e: &E, p: &GroupParams, n: i64, t: i64) -> E::V {
    let c = |x| e.lit(x);
    let pre = c(2) * c(p.u) * c(p.ell) * c(p.ell);
    let body = c(2) * e.varphi(n + 1) * c(t) + c(2 * n - 7) * e.phi(n) * e.phi(t)
        - c(2 * n) * e.phi(t)
        - c(3 * n + 1) * c(n) * e.varphi(t);
    pre * body
}

/// xi_2(j,k,a,b): the A-tail of the product (A^iB^jC^k)(A^aB^bC^c).
pub fn xi2<E: Eval>(e: &E, p: &GroupParams, j: i64, k: i64, a: i64, b: i64) -> E::V {
    let c = |x| e.lit(x);
    let pre = c(2) * c(p.u) * c(p.ell) * c(p.ell);
    let (pj, pa, pk) = (e.phi(j), e.phi(a), e.phi(k));
    let body = pj * pa * (c(-2) * c(j) + c(2) * c(a) - c(2) * c(b) + c(5))
        - c(2) * pj * c(a) * (c(j) + c(k) + c(b) - c(1))
        - c(j) * pa * (c(4) * c(k) - c(2) * c(a) + c(1))
        + c(2) * pk * (c(a) - c(b))
        - c(k) * c(a) * (c(j) - c(2))
        - c(2) * c(j) * (c(a) * c(b) + e.varphi(a + 1))
        + (c(3) * c(a) + c(1)) * c(a) * e.varphi(j);
    pre * body
}

/// xi_3(a,b,c): the A-tail of (A^aB^bC^c)^-1.
pub fn xi3<E: Eval>(e: &E, p: &GroupParams, a: i64, b: i64, cc: i64) -> E::V {
    let c = |x| e.lit(x);
    let (a1, b1) = (a as i128, b as i128);
    let sl = 2 * p.s as i128 * p.ell as i128;
    let third = e.arg(-a1 - sl * phi(a + 1) * b1);
    let fourth = e.arg(-b1 + sl * a1 * phi(b + 1));
    c(4) * c(p.u) * c(p.ell) * c(p.ell) * (c(a) * e.phi(b) - e.phi(a) * c(b)) * c(cc)
        + xi2(e, p, -b, 0, -a, 0)
        + xi2(e, p, 0, -cc, third, fourth)
}

/// xi_4(a,b,c,n): the A-tail of (A^aB^bC^c)^n.
pub fn xi4<E: Eval>(e: &E, p: &GroupParams, a: i64, b: i64, cc: i64, n: i64) -> E::V {
    let c = |x| e.lit(x);
    let (pa, pb, pc, pn) = (e.phi(a), e.phi(b), e.phi(cc), e.phi(n));
    let (vb, vn, vn1) = (e.varphi(b), e.varphi(n), e.varphi(n + 1));
    let (ca, cb, ccc) = (c(a), c(b), c(cc));
    let a2 = ca * ca;
    let s11 = e.sigma1(1, n);
    let s21 = e.sigma2(1, n);
    let g = pa * cb - ca * ccc;
    let body = ca * (vb + c(2) * pb - c(2) * pc) * pn
        + a2 * (c(3) * vb - c(2) * cb * pb) * (c(2) * vn + pn)
        + c(2) * ca * pb * ccc * vn
        - c(2) * a2 * cb * pb * (s11 - vn)
        + (c(2) * cb * ccc + c(7) * pb) * (a2 * vn + pa * pn)
        - c(2) * pb * (ca + cb) * (e.sigma1(a, n) - ca * vn)
        - c(2) * cb * e.sigma2(a, n)
        + (c(2) * pb - c(2) * ccc - cb) * (a2 * cb * s21 + g * vn1)
        + c(2) * cb * (ca * g + cb * cb * (pa - a2)) * (s11 + vn1)
        + c(2) * a2 * cb * cb * (ca - cb) * (e.sigma3(n) + s11 - vn)
        - c(2) * ccc * ((ccc - ca * cb) * cb * vn1 - c(2) * ca * cb * cb * s21)
        + c(2)
            * cb
            * (e.sigma1(a * b, n) + (e.phi(cc + 1) - ca * cb * ccc) * pn
                - ca * cb * (c(2) * ccc + c(1)) * vn);
    c(2) * c(p.u) * c(p.ell) * c(p.ell) * body
}

/// Exact evaluation of xi_kind; arities are 2, 4, 3, 4.
pub fn xi(kind: u8, args: &[i64], params: &GroupParams) -> Result<i128, ArithError> {
    let (name, arity) = match kind {
        1 => ("xi1", 2),
        2 => ("xi2", 4),
        3 => ("xi3", 3),
        4 => ("xi4", 4),
        other => return Err(ArithError::UnknownKind(other)),
    };
    if args.len() != arity {
        return Err(ArithError::Arity {
            kind: name,
            expected: arity,
            got: args.len(),
        });
    }
    let e = Exact::new();
    let v = match kind {
        1 => xi1(&e, params, args[0], args[1]),
        2 => xi2(&e, params, args[0], args[1], args[2], args[3]),
        3 => xi3(&e, params, args[0], args[1], args[2]),
        _ => xi4(&e, params, args[0], args[1], args[2], args[3]),
    };
    e.finish(v, name)
}
