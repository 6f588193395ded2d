//! Text forms: "A^i B^j C^k", "(i,j,k)@J[m,ell]" and group tags "J[m,ell]".

use std::str::FromStr;

use super::{Element, Family, Group};
use crate::error::GroupError;
use crate::params::GroupParams;

fn perr(s: &str) -> GroupError {
    GroupError::Parse(s.to_string())
}

/// Parse "[m,ell]" (also used by the oracle for "[p,m,ell]").
pub(crate) fn parse_bracket_ints(s: &str) -> Option<Vec<i64>> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
    inner
        .split(',')
        .map(|t| t.trim().parse::<i64>().ok())
        .collect()
}

impl FromStr for Group {
    type Err = GroupError;

    /// "J[2,1]", "H[3,-1]", ...
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let s = s.trim();
        let open = s.find('[').ok_or_else(|| perr(s))?;
        let family: Family = s[..open].parse()?;
        let v = parse_bracket_ints(&s[open..]).ok_or_else(|| perr(s))?;
        let [m, ell] = v[..] else {
            return Err(perr(s));
        };
        let m = u32::try_from(m).map_err(|_| perr(s))?;
        Ok(Group::new(family, GroupParams::new(m, ell)?))
    }
}

impl Group {
    /// "A^i B^j C^k" with all three exponents present.
    pub fn format_word(&self, x: Element) -> String {
        format!("A^{} B^{} C^{}", x.i, x.j, x.k)
    }

    /// "(i,j,k)@J[m,ell]".
    pub fn format_triple(&self, x: Element) -> String {
        format!("({},{},{})@{}", x.i, x.j, x.k, self)
    }

    /// Parse a product of generator powers such as "A^3 B^-1 C", "B*A", "1".
    /// Exponents may be any integers; the result is canonical.
    pub fn parse_word(&self, s: &str) -> Result<Element, GroupError> {
        let mut acc = self.identity();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            let g = match c {
                ' ' | '*' | '\t' => continue,
                '1' | 'e' if acc.is_identity() => continue,
                'A' => self.gen_a(),
                'B' => self.gen_b(),
                'C' => self.gen_c(),
                _ => return Err(perr(s)),
            };
            let mut exp = 1i64;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut num = String::new();
                if let Some(&sign) = chars.peek() {
                    if sign == '-' || sign == '+' {
                        num.push(sign);
                        chars.next();
                    }
                }
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    num.push(d);
                    chars.next();
                }
                exp = num.parse().map_err(|_| perr(s))?;
            }
            acc = self.mul(acc, self.power(g, exp));
        }
        Ok(acc)
    }

    /// Parse either textual form; the triple form must name this group.
    pub fn parse_element(&self, s: &str) -> Result<Element, GroupError> {
        if s.trim_start().starts_with('(') {
            let (g, x) = parse_triple(s)?;
            if g != *self {
                return Err(GroupError::ParamsMismatch);
            }
            return Ok(x);
        }
        self.parse_word(s)
    }
}

/// Parse "(i,j,k)@J[m,ell]"; the triple is canonicalized.
pub fn parse_triple(s: &str) -> Result<(Group, Element), GroupError> {
    let (t, g) = s.trim().split_once('@').ok_or_else(|| perr(s))?;
    let group: Group = g.parse()?;
    let inner = t
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| perr(s))?;
    let v: Vec<i64> = inner
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| perr(s))?;
    let [i, j, k] = v[..] else {
        return Err(perr(s));
    };
    Ok((group, group.canonicalize(i, j, k)))
}
