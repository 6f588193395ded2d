//! The named automorphisms of J, H and K.

use std::fmt;

use super::GenMap;
use crate::error::{GroupError, MorphismError};
use crate::group::{Element, Family, Group};

/// A named automorphism. Element arguments belong to the group the name is
/// instantiated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedAut {
    /// A <-> B in J.
    Theta,
    /// A <-> B in H.
    Nu,
    /// a <-> b in K.
    Mu,
    /// A -> Ax, B -> By with x, y in Z_1 (J or K).
    Omega(Element, Element),
    /// A -> Ax, B -> By with x, y in Z_2(J).
    PsiJ(Element, Element),
    /// a -> ax, b -> by with x, y in Z_2(K).
    GammaK(Element, Element),
    /// A -> Ax, B -> By with x, y in Z_2(H).
    PiH(Element, Element),
    /// a -> a^n, b -> b^t with nt = 1 mod 2u.
    F(i64),
    /// a -> a b^r, b -> b.
    PhiK,
    /// A -> A^(1+s), B -> B A^s.
    GammaH,
    /// A -> A^(1+r) B^r, B -> B^(1+r) A^r (m > 2).
    SigmaH,
    /// A -> A B^(2s), B -> B^(1-4s) A^(2s).
    Delta1,
    /// A -> A, B -> B A^u.
    Delta2,
    /// A -> A^(1+s) B^s, B -> B^(1+s(2d+s-3)) A^s with d = 1 iff m = 2.
    Delta3,
    /// A -> A^(1+r) B^r A^(s(sk+r ell-2)), B -> B^(1+r) A^r (m > 2; k odd iff m = 3).
    SigmaJ(i64),
    /// The K automorphisms psi1..psi5.
    Psi(u8),
    /// Conjugation by g.
    Inner(Element),
}

impl NamedAut {
    pub fn name(&self) -> &'static str {
        match self {
            NamedAut::Theta => "theta",
            NamedAut::Nu => "nu",
            NamedAut::Mu => "mu",
            NamedAut::Omega(..) => "omega",
            NamedAut::PsiJ(..) => "psi_J",
            NamedAut::GammaK(..) => "gamma_K",
            NamedAut::PiH(..) => "pi_H",
            NamedAut::F(_) => "f",
            NamedAut::PhiK => "phi_K",
            NamedAut::GammaH => "gamma_H",
            NamedAut::SigmaH => "sigma_H",
            NamedAut::Delta1 => "delta1",
            NamedAut::Delta2 => "delta2",
            NamedAut::Delta3 => "delta3",
            NamedAut::SigmaJ(_) => "sigma_J",
            NamedAut::Psi(1) => "psi1",
            NamedAut::Psi(2) => "psi2",
            NamedAut::Psi(3) => "psi3",
            NamedAut::Psi(4) => "psi4",
            NamedAut::Psi(_) => "psi5",
            NamedAut::Inner(_) => "inner",
        }
    }

    /// The family this name lives in, if it is tied to one.
    pub fn family(&self) -> Option<Family> {
        match self {
            NamedAut::Theta | NamedAut::PsiJ(..) | NamedAut::Delta1 | NamedAut::Delta2 => {
                Some(Family::J)
            }
            NamedAut::Delta3 | NamedAut::SigmaJ(_) => Some(Family::J),
            NamedAut::Nu | NamedAut::PiH(..) | NamedAut::GammaH | NamedAut::SigmaH => {
                Some(Family::H)
            }
            NamedAut::Mu | NamedAut::GammaK(..) | NamedAut::F(_) | NamedAut::PhiK => {
                Some(Family::K)
            }
            NamedAut::Psi(_) => Some(Family::K),
            NamedAut::Omega(..) | NamedAut::Inner(_) => None,
        }
    }

    fn args(&self) -> Vec<String> {
        let t = |x: &Element| format!("({},{},{})", x.i(), x.j(), x.k());
        match self {
            NamedAut::Omega(x, y)
            | NamedAut::PsiJ(x, y)
            | NamedAut::GammaK(x, y)
            | NamedAut::PiH(x, y) => vec![t(x), t(y)],
            NamedAut::F(n) | NamedAut::SigmaJ(n) => vec![n.to_string()],
            NamedAut::Inner(g) => vec![t(g)],
            _ => vec![],
        }
    }

    /// "name[args]@J[m,ell]".
    pub fn format(&self, group: &Group) -> String {
        let args = self.args();
        if args.is_empty() {
            format!("{}@{}", self.name(), group)
        } else {
            format!("{}[{}]@{}", self.name(), args.join(","), group)
        }
    }

    /// Inverse of [`NamedAut::format`].
    pub fn parse(s: &str) -> Result<(NamedAut, Group), MorphismError> {
        let perr = || MorphismError::Parse(s.to_string());
        let (head, g) = s.trim().rsplit_once('@').ok_or_else(perr)?;
        let group: Group = g.parse()?;
        let (name, args) = match head.find('[') {
            Some(i) => {
                let inner = head[i..]
                    .strip_prefix('[')
                    .and_then(|x| x.strip_suffix(']'))
                    .ok_or_else(perr)?;
                (&head[..i], split_args(inner))
            }
            None => (head, vec![]),
        };
        let elem = |a: &str| -> Result<Element, MorphismError> {
            let a = a.trim();
            if a.starts_with('(') && !a.contains('@') {
                return Ok(group.parse_element(&format!("{a}@{group}"))?);
            }
            Ok(group.parse_element(a)?)
        };
        let int = |a: &str| a.trim().parse::<i64>().map_err(|_| perr());
        let named = match (name.trim(), &args[..]) {
            ("theta", []) => NamedAut::Theta,
            ("nu", []) => NamedAut::Nu,
            ("mu", []) => NamedAut::Mu,
            ("omega", [x, y]) => NamedAut::Omega(elem(x)?, elem(y)?),
            ("psi_J", [x, y]) => NamedAut::PsiJ(elem(x)?, elem(y)?),
            ("gamma_K", [x, y]) => NamedAut::GammaK(elem(x)?, elem(y)?),
            ("pi_H", [x, y]) => NamedAut::PiH(elem(x)?, elem(y)?),
            ("f", [n]) => NamedAut::F(int(n)?),
            ("phi_K", []) => NamedAut::PhiK,
            ("gamma_H", []) => NamedAut::GammaH,
            ("sigma_H", []) => NamedAut::SigmaH,
            ("delta1", []) => NamedAut::Delta1,
            ("delta2", []) => NamedAut::Delta2,
            ("delta3", []) => NamedAut::Delta3,
            ("sigma_J", [k]) => NamedAut::SigmaJ(int(k)?),
            ("psi1", []) => NamedAut::Psi(1),
            ("psi2", []) => NamedAut::Psi(2),
            ("psi3", []) => NamedAut::Psi(3),
            ("psi4", []) => NamedAut::Psi(4),
            ("psi5", []) => NamedAut::Psi(5),
            ("inner", [x]) => NamedAut::Inner(elem(x)?),
            _ => return Err(perr()),
        };
        Ok((named, group))
    }
}

impl fmt::Display for NamedAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args = self.args();
        if args.is_empty() {
            f.write_str(self.name())
        } else {
            write!(f, "{}[{}]", self.name(), args.join(","))
        }
    }
}

/// Split on commas that are not inside parentheses.
fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if !s[start..].trim().is_empty() {
        out.push(s[start..].trim());
    }
    out
}

/// Inverse of n modulo a power of two (n odd).
fn inverse_mod_pow2(n: i64, modulus: i64) -> i64 {
    // Newton iteration doubles the number of correct bits each step.
    let mut t = n.rem_euclid(modulus);
    for _ in 0..6 {
        t = (t * (2 - n * t)).rem_euclid(modulus);
    }
    t
}

/// Instantiate a name in a group. Fails if the name does not belong to the
/// family, an argument violates its constraint, or the resulting map is not
/// an automorphism.
pub fn catalog(name: &NamedAut, group: &Group) -> Result<GenMap, MorphismError> {
    let g = group;
    let p = *g.params();
    if let Some(f) = name.family() {
        if f != g.family() {
            return Err(GroupError::FamilyMismatch(f, g.family()).into());
        }
    }
    let constraint = |arg: String, constraint: &'static str| MorphismError::Constraint {
        name: name.name().to_string(),
        arg,
        constraint,
    };
    let check_elem = |x: &Element| -> Result<(), MorphismError> {
        if x.family() != g.family() {
            return Err(GroupError::FamilyMismatch(g.family(), x.family()).into());
        }
        if !g.contains(*x) {
            return Err(GroupError::ParamsMismatch.into());
        }
        Ok(())
    };
    let in_center = |x: &Element, level: u32, what| -> Result<(), MorphismError> {
        check_elem(x)?;
        if g.central_level(*x) > level {
            return Err(constraint(g.format_word(*x), what));
        }
        Ok(())
    };
    let (a, b) = (g.gen_a(), g.gen_b());
    let pw = |x: Element, n: i64| g.power(x, n);
    let mul = |x: Element, y: Element| g.mul(x, y);
    let need_r = || {
        p.r()
            .map_err(|_| constraint(format!("m = {}", p.m), "requires m > 1"))
    };
    let need_m3 = || {
        if p.m > 2 {
            Ok(p.s / 2)
        } else {
            Err(constraint(format!("m = {}", p.m), "requires m > 2"))
        }
    };
    let s = p.s;

    let (ia, ib) = match *name {
        NamedAut::Theta | NamedAut::Nu | NamedAut::Mu => (b, a),
        NamedAut::Omega(x, y) => {
            if g.family() == Family::H {
                return Err(GroupError::FamilyMismatch(Family::J, Family::H).into());
            }
            in_center(&x, 1, "x in Z_1")?;
            in_center(&y, 1, "y in Z_1")?;
            (mul(a, x), mul(b, y))
        }
        NamedAut::PsiJ(x, y) | NamedAut::GammaK(x, y) | NamedAut::PiH(x, y) => {
            in_center(&x, 2, "x in Z_2")?;
            in_center(&y, 2, "y in Z_2")?;
            (mul(a, x), mul(b, y))
        }
        NamedAut::F(n) => {
            if n % 2 == 0 {
                return Err(constraint(n.to_string(), "n odd"));
            }
            let t = inverse_mod_pow2(n, 2 * p.u);
            (pw(a, n), pw(b, t))
        }
        NamedAut::PhiK => (mul(a, pw(b, need_r()?)), b),
        NamedAut::GammaH => (pw(a, 1 + s), mul(b, pw(a, s))),
        NamedAut::SigmaH => {
            let r = need_m3()?;
            (mul(pw(a, 1 + r), pw(b, r)), mul(pw(b, 1 + r), pw(a, r)))
        }
        NamedAut::Delta1 => (mul(a, pw(b, 2 * s)), mul(pw(b, 1 - 4 * s), pw(a, 2 * s))),
        NamedAut::Delta2 => (a, mul(b, pw(a, p.u))),
        NamedAut::Delta3 => {
            let d = i64::from(p.m == 2);
            (
                mul(pw(a, 1 + s), pw(b, s)),
                mul(pw(b, 1 + s * (2 * d + s - 3)), pw(a, s)),
            )
        }
        NamedAut::SigmaJ(k) => {
            let r = need_m3()?;
            let want_odd = p.m == 3;
            if (k.rem_euclid(2) == 1) != want_odd {
                return Err(constraint(
                    k.to_string(),
                    if want_odd {
                        "k odd when m = 3"
                    } else {
                        "k even when m > 3"
                    },
                ));
            }
            let e = s * (s * k + r * p.ell - 2);
            (
                mul(mul(pw(a, 1 + r), pw(b, r)), pw(a, e)),
                mul(pw(b, 1 + r), pw(a, r)),
            )
        }
        NamedAut::Psi(i) => match i {
            1 => (pw(a, 1 + s), b),
            2 => (a, pw(b, 1 + s)),
            3 => (mul(a, pw(b, s)), b),
            4 => (a, mul(b, pw(a, s))),
            5 => (mul(pw(a, 1 + s), pw(b, s)), b),
            _ => return Err(constraint(i.to_string(), "psi index in 1..=5")),
        },
        NamedAut::Inner(x) => {
            check_elem(&x)?;
            (g.conj(a, x), g.conj(b, x))
        }
    };
    let f = GenMap::from_images(*g, ia, ib)?;
    if !f.is_automorphism()? {
        return Err(MorphismError::NotAutomorphism);
    }
    Ok(f)
}
