//! Divisor literals: `2*(x^2-5; split; x+1) - oo+ + 3*oo-`.
//!
//! A term is an optional integer multiplier followed by `*` and either a
//! place at infinity (`oo+`, `oo-` on Even models, `oo` on Odd models) or an
//! affine point `(p; branch)` / `(p; split; q)` with `branch` one of
//! `split`, `ramified`, `inert`. The zero divisor is `0`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::text::{parse_literal, to_literal};
use crate::{Error, Result};

use super::{Branch, ClosedPoint, Divisor, InfPlace};

pub fn format_point(pt: &ClosedPoint) -> String {
    match pt {
        ClosedPoint::Infinite(InfPlace::Plus) => "oo+".into(),
        ClosedPoint::Infinite(InfPlace::Minus) => "oo-".into(),
        ClosedPoint::Infinite(InfPlace::Single) => "oo".into(),
        ClosedPoint::Affine { p, branch: Branch::Split(q) } => format!("({}; split; {})", to_literal(p), to_literal(q)),
        ClosedPoint::Affine { p, branch: Branch::Ramified } => format!("({}; ramified)", to_literal(p)),
        ClosedPoint::Affine { p, branch: Branch::Inert } => format!("({}; inert)", to_literal(p)),
    }
}

pub fn format_divisor(d: &Divisor) -> String {
    if d.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (pt, k)) in d.terms().enumerate() {
        let sep = match (i, k < 0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sep);
        if k.abs() != 1 {
            out.push_str(&format!("{}*", k.abs()));
        }
        out.push_str(&format_point(pt));
    }
    out
}

pub fn parse_point(s: &str) -> Result<ClosedPoint> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid point `{s}`"));
    match s {
        "oo+" => return Ok(ClosedPoint::Infinite(InfPlace::Plus)),
        "oo-" => return Ok(ClosedPoint::Infinite(InfPlace::Minus)),
        "oo" => return Ok(ClosedPoint::Infinite(InfPlace::Single)),
        _ => {}
    }
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
    let parts: Vec<&str> = inner.split(';').map(str::trim).collect();
    let p = parse_literal(parts[0])?;
    if p.is_zero() || !p.is_monic() {
        return Err(Error::Parse(format!("point polynomial must be monic in `{s}`")));
    }
    let branch = match (parts.get(1).copied(), parts.len()) {
        (Some("split"), 3) => Branch::Split(parse_literal(parts[2])?.rem(&p)),
        (Some("ramified"), 2) => Branch::Ramified,
        (Some("inert"), 2) => Branch::Inert,
        _ => return Err(bad()),
    };
    Ok(ClosedPoint::affine(p, branch))
}

pub fn parse_divisor(s: &str) -> Result<Divisor> {
    let s = s.trim();
    if s == "0" {
        return Ok(Divisor::zero());
    }
    let mut d = Divisor::zero();
    let mut depth = 0i32;
    let mut start = 0;
    let mut sign = 1i64;
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        // a sign written directly after `oo` names the place
        let place_sign = cur.ends_with("oo");
        if depth == 0 && (ch == '+' || ch == '-') && !place_sign {
            if !cur.trim().is_empty() {
                terms.push((sign, core::mem::take(&mut cur)));
            } else if i != start {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            sign = if ch == '-' { -1 } else { 1 };
            start = i + 1;
        } else {
            cur.push(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("trailing sign in `{s}`")));
    }
    terms.push((sign, cur));
    for (sign, term) in terms {
        let term = term.trim();
        let (k, rest) = match term.split_once('*') {
            Some((k, rest)) if !k.trim_start().starts_with('(') => {
                let k: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("invalid multiplier in `{term}`")))?;
                (k, rest)
            }
            _ => (1, term),
        };
        d.add_point(parse_point(rest)?, sign * k);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["oo+ - oo-", "2*(x^2-5; split; x+1) - 3*oo+", "-(x-2; inert) + 7*oo", "(x^3-x-1; ramified)"] {
            let d = parse_divisor(s).unwrap();
            assert_eq!(parse_divisor(&format_divisor(&d)).unwrap(), d, "{s}");
        }
        assert!(parse_divisor("0").unwrap().is_zero());
        assert_eq!(format_divisor(&Divisor::zero()), "0");
    }

    #[test]
    fn signs_and_multipliers() {
        let d = parse_divisor("3*oo+ + oo- - 2*oo+").unwrap();
        assert_eq!(d.infinite_coefficient(InfPlace::Plus), 1);
        assert_eq!(d.infinite_coefficient(InfPlace::Minus), 1);
        assert_eq!(format_divisor(&d), "oo+ + oo-");
        let d = parse_divisor("-oo+").unwrap();
        assert_eq!(d.infinite_coefficient(InfPlace::Plus), -1);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_divisor("oo+ +").is_err());
        assert!(parse_divisor("(x^2-5; wobbly)").is_err());
        assert!(parse_divisor("(2x-1; inert)").is_err());
        assert!(parse_divisor("x*oo+").is_err());
        assert!(parse_divisor("(x-1; split)").is_err());
    }
}
