//! Text forms of polynomials.
//!
//! Two grammars are shared by every front end:
//!
//! - the coefficient list `c0 c1 ... cn`, whitespace separated rationals
//!   `p` or `p/q`, lowest degree first (`0` or the empty string is the zero
//!   polynomial);
//! - the literal form `3/2*x^2 + x - 1/3` in the variable `x` (or `X`).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Rational, UniPoly};
use crate::{Error, Result};

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render as the whitespace-separated coefficient list.
pub fn to_coeff_list(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p.coeffs().iter().map(format_rational).collect();
    parts.join(" ")
}

pub fn parse_coeff_list(s: &str) -> Result<UniPoly> {
    s.split_whitespace()
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()
        .map(UniPoly::new)
}

/// Render in literal form, highest degree first, e.g. `x^4-2`.
pub fn to_literal(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        let var = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        if var.is_empty() {
            out.push_str(&format_rational(&a));
        } else if a.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&format_rational(&a));
            out.push('*');
            out.push_str(&var);
        }
    }
    out
}

/// Parse the literal form. Accepts `*` or juxtaposition between coefficient
/// and variable, `x` or `X`, and arbitrary whitespace.
pub fn parse_literal(s: &str) -> Result<UniPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial literal".into()));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    for (i, ch) in compact.char_indices() {
        let after_caret = compact[..i].ends_with('^');
        if (ch == '+' || ch == '-') && !after_caret {
            if !cur.is_empty() {
                terms.push((sign, core::mem::take(&mut cur)));
            } else if i != 0 {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            sign = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("trailing sign in `{s}`")));
    }
    terms.push((sign, cur));

    let mut acc = UniPoly::zero();
    for (neg, term) in terms {
        let (coef, exp) = parse_term(&term).ok_or_else(|| Error::Parse(format!("invalid term `{term}`")))?;
        let coef = if neg { -coef } else { coef };
        acc = &acc + &UniPoly::monomial(coef, exp);
    }
    Ok(acc)
}

fn parse_term(t: &str) -> Option<(Rational, usize)> {
    let Some(pos) = t.find(['x', 'X']) else {
        return parse_rational(t).ok().map(|c| (c, 0));
    };
    let (head, tail) = t.split_at(pos);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coef = if head.is_empty() { Rational::one() } else { parse_rational(head).ok()? };
    let tail = &tail[1..];
    let exp = if tail.is_empty() {
        1
    } else {
        tail.strip_prefix('^')?.parse().ok()?
    };
    Some((coef, exp))
}

/// Accept either grammar: literal when the text mentions `x`, coefficient list otherwise.
pub fn parse_any(s: &str) -> Result<UniPoly> {
    if s.contains(['x', 'X']) {
        parse_literal(s)
    } else {
        parse_coeff_list(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_forms() {
        assert_eq!(parse_literal("x^4-2").unwrap(), UniPoly::from_ints(&[-2, 0, 0, 0, 1]));
        assert_eq!(parse_literal("-x + 3/2").unwrap().coeffs()[0], Rational::new(3.into(), 2.into()));
        assert_eq!(parse_literal("2x^2 - 3*x").unwrap(), UniPoly::from_ints(&[0, -3, 2]));
        assert_eq!(parse_literal("X^14 + 4 X^13").unwrap().degree(), Some(14));
        assert!(parse_literal("x^").is_err());
        assert!(parse_literal("x+").is_err());
        assert!(parse_literal("").is_err());
    }

    #[test]
    fn literal_printing() {
        assert_eq!(to_literal(&UniPoly::from_ints(&[-2, 0, 0, 0, 1])), "x^4-2");
        let p = parse_literal("3/2*x^2+x-1/3").unwrap();
        assert_eq!(to_literal(&p), "3/2*x^2+x-1/3");
        assert_eq!(parse_literal(&to_literal(&p)).unwrap(), p);
    }

    #[test]
    fn coefficient_list() {
        let p = parse_coeff_list("1/2 0 -3").unwrap();
        assert_eq!(to_coeff_list(&p), "1/2 0 -3");
        assert!(parse_coeff_list("0").unwrap().is_zero());
        assert_eq!(to_coeff_list(&UniPoly::zero()), "0");
        assert!(parse_coeff_list("1/0").is_err());
    }
}
