use num_traits::{One, Zero};

use crate::arith::{factor_over_q, poly_gcd, poly_inverse_mod, Rational, UniPoly};
use crate::{Error, Result};

use super::{Branch, ClosedPoint, Divisor, HyperCurve, InfPlace, Parity};

/// The function `(u(x) + v(x) y) / den(x)`, with `den` monic and
/// `gcd(u, v, den) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveFunction {
    u: UniPoly,
    v: UniPoly,
    den: UniPoly,
}

impl CurveFunction {
    pub fn new(u: UniPoly, v: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::BadInput("zero denominator".into()));
        }
        let g = poly_gcd(&poly_gcd(&u, &v), &den);
        let (u, v, den) = if g.degree().unwrap_or(0) > 0 {
            (u.div_rem(&g).0, v.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (u, v, den)
        };
        let s = Rational::one() / den.lc().unwrap();
        Ok(CurveFunction { u: u.scale(&s), v: v.scale(&s), den: den.scale(&s) })
    }

    pub fn polynomial(u: UniPoly, v: UniPoly) -> Self {
        CurveFunction { u, v, den: UniPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::polynomial(UniPoly::constant(c), UniPoly::zero())
    }

    pub fn x_poly(h: UniPoly) -> Self {
        Self::polynomial(h, UniPoly::zero())
    }

    pub fn y() -> Self {
        Self::polynomial(UniPoly::zero(), UniPoly::one())
    }

    pub fn u(&self) -> &UniPoly {
        &self.u
    }

    pub fn v(&self) -> &UniPoly {
        &self.v
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.v.is_zero() && self.u.is_constant() && self.den.is_one()
    }

    /// `(u^2 - v^2 f) / den^2`, the product with the conjugate.
    pub fn norm(&self, f: &UniPoly) -> (UniPoly, UniPoly) {
        (&(&self.u * &self.u) - &(&(&self.v * &self.v) * f), &self.den * &self.den)
    }

    pub fn add(&self, o: &Self) -> Self {
        let u = &(&self.u * &o.den) + &(&o.u * &self.den);
        let v = &(&self.v * &o.den) + &(&o.v * &self.den);
        Self::new(u, v, &self.den * &o.den).unwrap()
    }

    pub fn mul(&self, o: &Self, f: &UniPoly) -> Self {
        let u = &(&self.u * &o.u) + &(&(&self.v * &o.v) * f);
        let v = &(&self.u * &o.v) + &(&self.v * &o.u);
        Self::new(u, v, &self.den * &o.den).unwrap()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.u.scale(c), self.v.scale(c), self.den.clone()).unwrap()
    }

    /// `self - c`.
    pub fn sub_constant(&self, c: &Rational) -> Self {
        Self::new(&self.u - &self.den.scale(c), self.v.clone(), self.den.clone()).unwrap()
    }

    /// `1 / self = den (u - v y) / (u^2 - v^2 f)`.
    pub fn inverse(&self, f: &UniPoly) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let (n, _) = self.norm(f);
        Self::new(&self.den * &self.u, -&(&self.den * &self.v), n)
    }
}

/// `div(h(x))`.
pub(crate) fn divisor_of_x_poly(c: &HyperCurve, h: &UniPoly) -> Result<Divisor> {
    let fac = factor_over_q(h)?;
    let mut d = Divisor::zero();
    for (p, k) in &fac.factors {
        for (pt, e) in c.points_above(p)? {
            d.add_point(pt, (e as i64) * (*k as i64));
        }
    }
    add_infinite(c, &mut d, -(h.degree().unwrap() as i64), -(h.degree().unwrap() as i64));
    Ok(d)
}

/// Adds orders at infinity given in the Even convention (one value per
/// place); Odd models take twice the first value.
fn add_infinite(c: &HyperCurve, d: &mut Divisor, plus: i64, minus: i64) {
    match c.parity() {
        Parity::Even => {
            d.add_point(ClosedPoint::Infinite(InfPlace::Plus), plus);
            d.add_point(ClosedPoint::Infinite(InfPlace::Minus), minus);
        }
        Parity::Odd => {
            debug_assert_eq!(plus, minus);
            d.add_point(ClosedPoint::Infinite(InfPlace::Single), 2 * plus);
        }
    }
}

fn ord(p: &UniPoly, a: &UniPoly) -> i64 {
    a.multiplicity_of(p) as i64
}

/// Affine divisor of `u + v y` for coprime nonzero `u`, `v`.
fn affine_divisor_coprime(c: &HyperCurve, u: &UniPoly, v: &UniPoly) -> Result<Divisor> {
    let f = c.f();
    let n = &(u * u) - &(&(v * v) * f);
    let mut d = Divisor::zero();
    if n.is_constant() {
        return Ok(d);
    }
    for (p, k) in factor_over_q(&n)?.factors {
        if f.rem(&p).is_zero() {
            let o = (2 * ord(&p, u)).min(2 * ord(&p, v) + 1);
            d.add_point(ClosedPoint::affine(p, Branch::Ramified), o);
        } else {
            // p cannot divide v, so y = -u/v on the unique zero above p
            let inv = poly_inverse_mod(v, &p).expect("v is a unit modulo p");
            let q = (&(-u) * &inv).rem(&p);
            d.add_point(ClosedPoint::affine(p, Branch::Split(q)), k as i64);
        }
    }
    Ok(d)
}

/// Orders of `u + v y` at `oo+` and `oo-` on an Even model.
///
/// Without cancellation of leading terms both orders are the smaller pole
/// order. Cancellation happens at no more than one place, and there the
/// order follows from `ord+ + ord- = -deg(u^2 - v^2 f)`.
fn infinite_orders(c: &HyperCurve, u: &UniPoly, v: &UniPoly) -> (i64, i64) {
    let g = c.genus() as i64;
    let du = u.degree().map(|d| d as i64);
    let dv = v.degree().map(|d| d as i64);
    let a = du.map(|d| -d);
    let b = dv.map(|d| -d - g - 1);
    match (a, b) {
        (Some(a), None) => (a, a),
        (None, Some(b)) => (b, b),
        (Some(a), Some(b)) if a != b => (a.min(b), a.min(b)),
        (Some(a), Some(_)) => {
            // leading terms cancel at exactly one place
            let cl = c.lc_root() * v.lc().unwrap();
            let n = &(u * u) - &(&(v * v) * c.f());
            let total = -(n.degree().unwrap() as i64);
            if u.lc().unwrap() + &cl == Rational::zero() {
                (total - a, a)
            } else {
                (a, total - a)
            }
        }
        (None, None) => unreachable!("zero function"),
    }
}

/// The principal divisor of a nonzero function.
pub fn divisor_of_function(c: &HyperCurve, w: &CurveFunction) -> Result<Divisor> {
    if w.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut d = Divisor::zero();
    if w.v.is_zero() {
        d = d.add(&divisor_of_x_poly(c, &w.u)?);
    } else if w.u.is_zero() {
        d = d.add(&divisor_of_x_poly(c, &w.v)?);
        d = d.add(&divisor_of_y(c)?);
    } else {
        let g = poly_gcd(&w.u, &w.v);
        let (u1, v1) = (w.u.div_rem(&g).0, w.v.div_rem(&g).0);
        d = d.add(&divisor_of_x_poly(c, &g)?);
        d = d.add(&affine_divisor_coprime(c, &u1, &v1)?);
        match c.parity() {
            Parity::Even => {
                let (p, m) = infinite_orders(c, &u1, &v1);
                add_infinite(c, &mut d, p, m);
            }
            Parity::Odd => {
                let g = c.genus() as i64;
                let o = (-2 * u1.degree().unwrap() as i64).min(-2 * v1.degree().unwrap() as i64 - (2 * g + 1));
                d.add_point(ClosedPoint::Infinite(InfPlace::Single), o);
            }
        }
    }
    d = d.sub(&divisor_of_x_poly(c, &w.den)?);
    debug_assert_eq!(d.degree(), 0);
    Ok(d)
}

fn divisor_of_y(c: &HyperCurve) -> Result<Divisor> {
    let mut d = Divisor::zero();
    for (p, _) in factor_over_q(c.f())?.factors {
        d.add_point(ClosedPoint::affine(p, Branch::Ramified), 1);
    }
    let g = c.genus() as i64;
    match c.parity() {
        Parity::Even => add_infinite(c, &mut d, -(g + 1), -(g + 1)),
        Parity::Odd => d.add_point(ClosedPoint::Infinite(InfPlace::Single), -(2 * g + 1)),
    }
    Ok(d)
}
