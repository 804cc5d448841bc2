use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{rational_sqrt, squarefree_part, Rational, UniPoly};
use crate::{Error, Result};

/// A rational point `(x, y)` with `y != 0` on `r y^2 = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistHit {
    pub r: i64,
    pub x: Rational,
    pub y: Rational,
}

impl TwistHit {
    pub fn verify(&self, f: &UniPoly) -> bool {
        !self.y.is_zero() && Rational::from_integer(self.r.into()) * &self.y * &self.y == f.eval(&self.x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistCensusResult {
    pub m: u64,
    pub height_bound: u64,
    /// One hit per twist that has one, ordered by `|r|` then `r`.
    pub hits: Vec<TwistHit>,
}

/// Squarefree `r` with `0 < |r| <= m`, ordered by `|r|` then `r`.
pub fn squarefree_twists(m: u64) -> Vec<i64> {
    let mut out = Vec::new();
    for a in 1..=m as i64 {
        if is_squarefree(a) {
            out.push(-a);
            out.push(a);
        }
    }
    out
}

fn is_squarefree(n: i64) -> bool {
    (2..).take_while(|p| p * p <= n).all(|p| n % (p * p) != 0)
}

/// Abscissae `p/q` in lowest terms with `q > 0` and `|p|, q <= h`.
pub fn abscissae(h: u64) -> Vec<Rational> {
    let h = h as i64;
    let mut out = Vec::new();
    for q in 1..=h {
        for p in -h..=h {
            if p.gcd(&q) == 1 {
                out.push(Rational::new(p.into(), q.into()));
            }
        }
    }
    out
}

/// Values `f(x)` with their sign, precomputed once for every twist.
pub fn tabulate(f: &UniPoly, h: u64) -> Vec<(Rational, Rational)> {
    abscissae(h)
        .into_iter()
        .map(|x| {
            let v = f.eval(&x);
            (x, v)
        })
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// The first tabulated point on the twist by `r`, if any.
pub fn search_twist(table: &[(Rational, Rational)], r: i64) -> Option<TwistHit> {
    let rr = Rational::from_integer(BigInt::from(r));
    for (x, v) in table {
        if v.is_negative() != (r < 0) {
            continue;
        }
        if let Some(y) = rational_sqrt(&(v / &rr)) {
            return Some(TwistHit { r, x: x.clone(), y });
        }
    }
    None
}

pub fn check_census_input(f: &UniPoly, m: u64, height_bound: u64) -> Result<()> {
    if f.degree().is_none_or(|d| d < 6) {
        return Err(Error::BadInput("census needs deg f >= 6".into()));
    }
    if squarefree_part(f)?.degree() != f.degree() {
        return Err(Error::NotSquarefree);
    }
    if m == 0 || height_bound == 0 {
        return Err(Error::BadInput("bounds must be positive".into()));
    }
    Ok(())
}

/// Non-Weierstrass rational points on `r y^2 = f(x)` for squarefree
/// `|r| <= m`, searched over affine `x` of height at most `height_bound`.
pub fn twist_census(f: &UniPoly, m: u64, height_bound: u64) -> Result<TwistCensusResult> {
    check_census_input(f, m, height_bound)?;
    let table = tabulate(f, height_bound);
    let hits = squarefree_twists(m)
        .into_iter()
        .filter_map(|r| search_twist(&table, r))
        .filter(|h| h.verify(f))
        .collect();
    Ok(TwistCensusResult { m, height_bound, hits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, text::parse_literal};

    #[test]
    fn twist_by_two() {
        let f = parse_literal("x^6+1").unwrap();
        let res = twist_census(&f, 2, 1).unwrap();
        let rs: Vec<i64> = res.hits.iter().map(|h| h.r).collect();
        assert_eq!(rs, [1, 2]);
        assert_eq!(res.hits[1].y, rat(1));
        assert!(res.hits.iter().all(|h| h.verify(&f)));
    }

    #[test]
    fn sign_obstruction() {
        let f = parse_literal("-x^6-x^2-1").unwrap();
        let res = twist_census(&f, 10, 5).unwrap();
        assert!(res.hits.iter().all(|h| h.r < 0));
    }

    #[test]
    fn ordering_and_squarefreeness() {
        assert_eq!(squarefree_twists(5), [-1, 1, -2, 2, -3, 3, -5, 5]);
        assert_eq!(abscissae(1).len(), 3);
    }

    #[test]
    fn bad_inputs() {
        assert!(twist_census(&parse_literal("x^5+1").unwrap(), 3, 3).is_err());
        assert_eq!(twist_census(&parse_literal("x^6+2x^3+1").unwrap(), 3, 3), Err(Error::NotSquarefree));
    }
}
