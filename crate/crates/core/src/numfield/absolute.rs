use crate::arith::{factor_over_q, param_resultant, poly_gcd, rational_sqrt, Rational, UniPoly};
use crate::{Error, Result};

use super::{factor_over_nf, NfPoly, NumberField};

const SHIFT_SEARCH_CAP: i64 = 64;

/// A square root of `f` modulo the monic irreducible `p`, if one exists.
///
/// Returns `Some(q)` with `deg q < deg p` and `q^2 = f mod p`. When `p`
/// divides `f` the answer is `Some(0)`.
pub fn sqrt_mod(p: &UniPoly, f: &UniPoly) -> Result<Option<UniPoly>> {
    let k = NumberField::trusted(p.monic());
    let fbar = k.reduce(f);
    if fbar.is_zero() {
        return Ok(Some(UniPoly::zero()));
    }
    if fbar.is_constant() {
        if let Some(r) = rational_sqrt(&fbar.coeff(0)) {
            return Ok(Some(UniPoly::constant(r)));
        }
    }
    let z2 = NfPoly::new(&k, alloc::vec![-fbar, UniPoly::zero(), UniPoly::one()]);
    let fac = factor_over_nf(&z2)?;
    let root = fac.factors.iter().find(|(g, _)| g.degree() == Some(1)).map(|(g, _)| g.coeff(0).neg());
    Ok(root.map(|r| r.repr().clone()))
}

/// Minimal polynomial over Q of `y + c x` at the degree-`2 deg p` point
/// `p(x) = 0, y^2 = f(x)`, for the first `c >= shift_seed` that makes the
/// resultant squarefree.
pub fn absolute_minpoly(p: &UniPoly, f: &UniPoly, shift_seed: i64) -> Result<UniPoly> {
    if !p.is_monic() {
        return Err(Error::BadInput("point polynomial must be monic".into()));
    }
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if f.rem(p).is_zero() {
        return Err(Error::NotInert);
    }
    for c in shift_seed..shift_seed.saturating_add(SHIFT_SEARCH_CAP) {
        let c = Rational::from_integer(c.into());
        let cx = UniPoly::monomial(c.clone(), 1);
        let r = param_resultant(p, 2 * n, |z| {
            let lin = &UniPoly::constant(z.clone()) - &cx;
            &(&lin * &lin) - f
        });
        if r.degree() != Some(2 * n) || !poly_gcd(&r, &r.derivative()).is_constant() {
            continue;
        }
        return if factor_over_q(&r)?.is_irreducible() { Ok(r.monic()) } else { Err(Error::NotInert) };
    }
    Err(Error::Degenerate)
}
