use super::{poly_inverse_mod, UniPoly};
use crate::{Error, Result};

/// Lift a square root of `f` modulo an irreducible `p` to one modulo `p^k`.
///
/// Returns `q` with `q^2 = f (mod p^k)`, `q = q0 (mod p)` and
/// `deg q < k * deg p`. The branch must be unramified: `2*q0` is a unit mod `p`.
pub fn hensel_sqrt(f: &UniPoly, p: &UniPoly, q0: &UniPoly, k: u32) -> Result<UniPoly> {
    if p.is_constant() || !p.is_monic() {
        return Err(Error::BadInput("modulus must be monic of positive degree".into()));
    }
    if k == 0 {
        return Err(Error::BadInput("precision must be positive".into()));
    }
    let q0 = q0.rem(p);
    if !(&(&q0 * &q0) - f).rem(p).is_zero() {
        return Err(Error::BadInput("q0^2 is not congruent to f modulo p".into()));
    }
    if q0.is_zero() {
        return Err(Error::RamifiedBranch);
    }
    let mut q = q0;
    let mut prec = 1u32;
    while prec < k {
        prec = (2 * prec).min(k);
        let modulus = p.pow(prec);
        let two_q = q.scale(&super::Rational::from_integer(2.into()));
        let inv = poly_inverse_mod(&two_q, &modulus).ok_or(Error::RamifiedBranch)?;
        let err = &(&q * &q) - f;
        q = (&q - &(&err * &inv)).rem(&modulus);
    }
    Ok(q.rem(&p.pow(k)))
}
