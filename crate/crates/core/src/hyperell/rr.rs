use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{hensel_sqrt, Rational, UniPoly};
use crate::linalg::Matrix;
use crate::{Error, Result};

use super::function::divisor_of_function;
use super::{expansion_at_infinity, Branch, ClosedPoint, CurveFunction, Divisor, HyperCurve, InfPlace, Parity};

/// A basis of `L(D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RRSpace {
    pub divisor: Divisor,
    pub basis: Vec<CurveFunction>,
}

impl RRSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Re-checks `div(w) + D >= 0` for every basis element.
    pub fn verify(&self, c: &HyperCurve) -> Result<bool> {
        for w in &self.basis {
            if !divisor_of_function(c, w)?.add(&self.divisor).is_effective() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn infinity_divisor(c: &HyperCurve, n_plus: i64, n_minus: i64) -> Divisor {
    match c.parity() {
        Parity::Even => Divisor::infinite(InfPlace::Plus, n_plus).add(&Divisor::infinite(InfPlace::Minus, n_minus)),
        Parity::Odd => Divisor::infinite(InfPlace::Single, n_plus),
    }
}

fn monomial(i: usize) -> UniPoly {
    UniPoly::monomial(Rational::from_integer(1.into()), i)
}

/// `L(n+ oo+ + n- oo-)` on an Even model; on an Odd model `n_minus` is
/// ignored and the space is `L(n_plus oo)`.
///
/// Even models search inside `{x^i : i <= B} + {x^j y : j <= B - g - 1}` with
/// `B = max(n+, n-)`, which contains the whole space: a function `u + v y`
/// has order `-deg u` or `-deg v - g - 1` at one of the two places at least.
pub fn rr_space_infty(c: &HyperCurve, n_plus: i64, n_minus: i64) -> RRSpace {
    match c.parity() {
        Parity::Odd => rr_infty_odd(c, n_plus),
        Parity::Even => rr_infty_even(c, n_plus, n_minus),
    }
}

fn rr_infty_odd(c: &HyperCurve, n: i64) -> RRSpace {
    let g = c.genus() as i64;
    let mut basis = Vec::new();
    if n >= 0 {
        for i in 0..=(n / 2) {
            basis.push(CurveFunction::x_poly(monomial(i as usize)));
        }
        if n > 2 * g {
            for j in 0..=((n - 2 * g - 1) / 2) {
                basis.push(CurveFunction::polynomial(UniPoly::zero(), monomial(j as usize)));
            }
        }
    }
    RRSpace { divisor: infinity_divisor(c, n, n), basis }
}

fn rr_infty_even(c: &HyperCurve, n_plus: i64, n_minus: i64) -> RRSpace {
    let g = c.genus() as i64;
    let divisor = infinity_divisor(c, n_plus, n_minus);
    let b = n_plus.max(n_minus);
    if b < 0 {
        return RRSpace { divisor, basis: Vec::new() };
    }
    let nu = (b + 1) as usize;
    let nv = (b - g).max(0) as usize;
    let cols = nu + nv;
    let mut mat = Matrix::zeros(0, cols);
    for (place, n) in [(InfPlace::Plus, n_plus), (InfPlace::Minus, n_minus)] {
        if -b > -n - 1 {
            continue;
        }
        // coefficient of t^k for -b <= k <= -n - 1 must vanish
        let terms = (b - n) as usize;
        let ys = expansion_at_infinity(c, place, terms.max(1)).unwrap();
        for k in -b..=(-n - 1) {
            let mut row = alloc::vec![Rational::zero(); cols];
            if k <= 0 {
                row[(-k) as usize] = Rational::from_integer(1.into());
            }
            for j in 0..nv {
                // x^j y = t^-j * y
                if let Some(v) = ys.coeff(k + j as i64) {
                    row[nu + j] = v;
                }
            }
            mat.push_row(row);
        }
    }
    let basis = mat
        .nullspace()
        .into_iter()
        .map(|vec| {
            let u = UniPoly::new(vec[..nu].to_vec());
            let v = UniPoly::new(vec[nu..].to_vec());
            CurveFunction::polynomial(u, v)
        })
        .collect();
    RRSpace { divisor, basis }
}

/// `L(D)` for `D` whose affine part is effective.
///
/// With `h = prod p^k_p` clearing the allowed affine poles, `W` lies in
/// `L(D)` iff `F = h W` lies in `L(D_inf + deg h * div_inf(x))` and vanishes
/// to the required order at every point above each `p`.
pub fn rr_space(c: &HyperCurve, d: &Divisor) -> Result<RRSpace> {
    let (np, nm) = match c.parity() {
        Parity::Even => (d.infinite_coefficient(InfPlace::Plus), d.infinite_coefficient(InfPlace::Minus)),
        Parity::Odd => {
            let n = d.infinite_coefficient(InfPlace::Single);
            (n, n)
        }
    };
    let affine = d.affine_part();
    if affine.is_zero() {
        let mut s = rr_space_infty(c, np, nm);
        s.divisor = d.clone();
        return Ok(s);
    }
    if !affine.is_effective() {
        return Err(Error::UnsupportedDivisorShape("negative affine part".into()));
    }
    let mut by_p: BTreeMap<UniPoly, Vec<(ClosedPoint, i64)>> = BTreeMap::new();
    for (pt, k) in affine.terms() {
        c.validate_point(pt)?;
        if let ClosedPoint::Affine { p, .. } = pt {
            by_p.entry(p.clone()).or_default().push((pt.clone(), k));
        }
    }
    // (point, required order of F there)
    let mut conditions: Vec<(ClosedPoint, i64)> = Vec::new();
    let mut h = UniPoly::one();
    for (p, pts) in &by_p {
        let above = c.points_above(p)?;
        let e_of = |pt: &ClosedPoint| above.iter().find(|(q, _)| q == pt).map(|(_, e)| *e as i64).unwrap();
        let k = pts.iter().map(|(pt, m)| (m + e_of(pt) - 1) / e_of(pt)).max().unwrap();
        h = &h * &p.pow(k as u32);
        for (pt, e) in &above {
            let m = pts.iter().find(|(q, _)| q == pt).map(|(_, m)| *m).unwrap_or(0);
            let r = *e as i64 * k - m;
            if r > 0 {
                conditions.push((pt.clone(), r));
            }
        }
    }
    let dh = h.degree().unwrap() as i64;
    let big = match c.parity() {
        Parity::Even => rr_space_infty(c, np + dh, nm + dh),
        Parity::Odd => rr_space_infty(c, np + 2 * dh, 0),
    };
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let n = big.basis.len();
    for (pt, r) in &conditions {
        let residues: Vec<Vec<Rational>> =
            big.basis.iter().map(|w| residue(c, pt, *r, w.u(), w.v())).collect::<Result<_>>()?;
        let len = residues.iter().map(Vec::len).max().unwrap_or(0);
        for i in 0..len {
            rows.push(residues.iter().map(|res| res.get(i).cloned().unwrap_or_default()).collect());
        }
    }
    let mat = Matrix::from_rows(rows, n);
    let mut basis = Vec::new();
    for vec in mat.nullspace() {
        let mut u = UniPoly::zero();
        let mut v = UniPoly::zero();
        for (coef, w) in vec.iter().zip(&big.basis) {
            if !coef.is_zero() {
                u = &u + &w.u().scale(coef);
                v = &v + &w.v().scale(coef);
            }
        }
        basis.push(CurveFunction::new(u, v, h.clone())?);
    }
    Ok(RRSpace { divisor: d.clone(), basis })
}

/// Coordinates whose vanishing means `ord_P(U + V y) >= r`.
fn residue(c: &HyperCurve, pt: &ClosedPoint, r: i64, u: &UniPoly, v: &UniPoly) -> Result<Vec<Rational>> {
    let ClosedPoint::Affine { p, branch } = pt else {
        return Err(Error::InfinitePlace);
    };
    let r = r as u32;
    let dp = p.degree().unwrap();
    let coords = |a: &UniPoly, k: u32| -> Vec<Rational> {
        let m = p.pow(k);
        let rem = a.rem(&m);
        (0..dp * k as usize).map(|i| rem.coeff(i)).collect()
    };
    Ok(match branch {
        Branch::Split(q) => {
            let qr = hensel_sqrt(c.f(), p, q, r)?;
            coords(&(u + &(v * &qr)), r)
        }
        Branch::Ramified => {
            let mut out = coords(u, r.div_ceil(2));
            out.extend(coords(v, r / 2));
            out
        }
        Branch::Inert => {
            let mut out = coords(u, r);
            out.extend(coords(v, r));
            out
        }
    })
}

/// `div(dx / y)`.
pub fn canonical_divisor(c: &HyperCurve) -> Divisor {
    let g = c.genus() as i64;
    match c.parity() {
        Parity::Even => infinity_divisor(c, g - 1, g - 1),
        Parity::Odd => infinity_divisor(c, 2 * g - 2, 2 * g - 2),
    }
}

/// The effective divisor `D_base + div(w)`.
pub fn decompose_effective(c: &HyperCurve, w: &CurveFunction, base: &Divisor) -> Result<Divisor> {
    let d = base.add(&divisor_of_function(c, w)?);
    if d.is_effective() {
        Ok(d)
    } else {
        Err(Error::NotInLinearSeries)
    }
}
