//! Group parameters for the 2-groups and the odd-prime variant.

use serde::{Deserialize, Serialize};

use crate::error::ParamError;

/// Largest supported `m`. At m=5, |J| = 2^32 and every packed triple still fits a `u32`.
pub const MAX_M: u32 = 5;

/// Bound on |ell|; keeps every helper argument comfortably inside `i128`.
pub const MAX_ABS_ELL: i64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    pub m: u32,
    pub ell: i64,
    pub alpha: i64,
    pub s: i64,
    pub u: i64,
    pub r: Option<i64>,
    pub rbar: Option<i64>,
}

impl GroupParams {
    pub fn new(m: u32, ell: i64) -> Result<Self, ParamError> {
        if m == 0 || m > MAX_M {
            return Err(ParamError::MOutOfRange { m, max: MAX_M });
        }
        if ell % 2 == 0 {
            return Err(ParamError::EllEven(ell));
        }
        if ell.abs() >= MAX_ABS_ELL {
            return Err(ParamError::EllTooLarge(ell));
        }
        let s = 1i64 << (m - 1);
        let u = s * s;
        Ok(GroupParams {
            m,
            ell,
            alpha: 1 + (1i64 << m) * ell,
            s,
            u,
            r: (m > 1).then_some(s / 2),
            rbar: (m > 2).then_some(s / 4),
        })
    }

    /// o(A) = o(B) = 4us = 2^(3m-1) in J.
    pub fn order_a_j(&self) -> i64 {
        4 * self.u * self.s
    }

    /// o(C) = 4u = 2^(2m) in J.
    pub fn order_c_j(&self) -> i64 {
        4 * self.u
    }

    pub fn r(&self) -> Result<i64, ParamError> {
        self.r.ok_or(ParamError::Unsupported {
            what: "r = s/2".into(),
            requirement: "m > 1",
        })
    }

    pub fn rbar(&self) -> Result<i64, ParamError> {
        self.rbar.ok_or(ParamError::Unsupported {
            what: "rbar = r/2".into(),
            requirement: "m > 2",
        })
    }
}

impl std::fmt::Display for GroupParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]", self.m, self.ell)
    }
}

/// Parameters for the odd-prime commutator identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddPrimeParams {
    pub p: u64,
    pub m: u32,
    pub ell: i64,
    pub alpha: i64,
    /// chi_p as numerator/denominator: 1/2 for p = 2, (1+p^m)/2 otherwise.
    pub chi_p: (i64, i64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl OddPrimeParams {
    pub fn new(p: u64, m: u32, ell: i64) -> Result<Self, ParamError> {
        if !is_prime(p) {
            return Err(ParamError::NotPrime(p));
        }
        if m == 0 || m > MAX_M {
            return Err(ParamError::MOutOfRange { m, max: MAX_M });
        }
        if ell.abs() >= MAX_ABS_ELL {
            return Err(ParamError::EllTooLarge(ell));
        }
        if ell.rem_euclid(p as i64) == 0 {
            return Err(ParamError::EllDivisibleByP { ell, p });
        }
        let pm =
            (p as i64)
                .checked_pow(m)
                .filter(|v| *v < 1 << 20)
                .ok_or(ParamError::Unsupported {
                    what: format!("p^m with p={p}, m={m}"),
                    requirement: "p^m < 2^20",
                })?;
        let alpha = 1 + pm * ell;
        if (p, m) == (3, 1) && ((alpha - 1) / 3).rem_euclid(3) != 1 {
            return Err(ParamError::Hypothesis((alpha - 1) / 3));
        }
        let chi_p = if p == 2 { (1, 2) } else { ((1 + pm) / 2, 1) };
        Ok(OddPrimeParams {
            p,
            m,
            ell,
            alpha,
            chi_p,
        })
    }

    pub fn p_pow(&self, e: u32) -> i64 {
        (self.p as i64).pow(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_constants() {
        let p = GroupParams::new(3, -1).unwrap();
        assert_eq!(
            (p.s, p.u, p.r, p.rbar, p.alpha),
            (4, 16, Some(2), Some(1), -7)
        );
        assert_eq!(p.order_a_j(), 256);
        assert_eq!(p.order_c_j(), 64);
        let p1 = GroupParams::new(1, 1).unwrap();
        assert_eq!((p1.s, p1.u, p1.r), (1, 1, None));
        assert!(p1.r().is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GroupParams::new(2, 2).is_err());
        assert!(GroupParams::new(0, 1).is_err());
        assert!(GroupParams::new(6, 1).is_err());
    }

    #[test]
    fn odd_prime_hypothesis() {
        // alpha = 4: (alpha-1)/3 = 1
        assert!(OddPrimeParams::new(3, 1, 1).is_ok());
        // alpha = 7: (alpha-1)/3 = 2
        assert_eq!(OddPrimeParams::new(3, 1, 2), Err(ParamError::Hypothesis(2)));
        assert!(OddPrimeParams::new(5, 1, 2).is_ok());
        assert!(OddPrimeParams::new(9, 1, 1).is_err());
        assert!(OddPrimeParams::new(5, 1, 10).is_err());
        assert_eq!(OddPrimeParams::new(5, 1, 2).unwrap().chi_p, (3, 1));
    }
}
