use alloc::vec::Vec;

use crate::arith::{factor_over_q, poly_gcd, Rational, UniPoly};
use crate::{Error, Result};

use super::{NfElement, NfPoly, NumberField};

const SHIFT_CAP: usize = 50;

/// Factorization over a number field: `unit * prod f_i^e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfFactorization {
    pub unit: NfElement,
    pub factors: Vec<(NfPoly, usize)>,
}

impl NfFactorization {
    pub fn expand(&self) -> NfPoly {
        let field = self.unit.field();
        let mut acc = NfPoly::from_elements(field, core::slice::from_ref(&self.unit));
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Number of linear factors counted with multiplicity.
    pub fn linear_count(&self) -> usize {
        self.factors.iter().filter(|(f, _)| f.degree() == Some(1)).map(|(_, e)| e).sum()
    }
}

/// Factor `a` over its field into monic irreducibles (Trager's norm method).
pub fn factor_over_nf(a: &NfPoly) -> Result<NfFactorization> {
    let unit = a.lc().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&a.monic()) {
        for f in factor_squarefree(&part)? {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|(f, _), (g, _)| cmp_nfpoly(f, g));
    Ok(NfFactorization { unit, factors })
}

fn cmp_nfpoly(f: &NfPoly, g: &NfPoly) -> core::cmp::Ordering {
    f.degree().cmp(&g.degree()).then_with(|| f.coeff_reprs().cmp(g.coeff_reprs()))
}

/// Yun's algorithm over the field, for a monic input.
fn squarefree_decomposition(a: &NfPoly) -> Vec<(NfPoly, usize)> {
    let mut out = Vec::new();
    if a.degree().unwrap_or(0) == 0 {
        return out;
    }
    let da = a.derivative();
    let c = a.gcd(&da);
    let mut w = a.div_rem(&c).0;
    let mut y = da.div_rem(&c).0;
    let mut i = 1;
    loop {
        let z = y.sub(&w.derivative());
        if z.is_zero() {
            if w.degree() != Some(0) {
                out.push((w.monic(), i));
            }
            break;
        }
        let g = w.gcd(&z);
        if g.degree() != Some(0) {
            out.push((g.clone(), i));
        }
        w = w.div_rem(&g).0;
        y = z.div_rem(&g).0;
        i += 1;
        if w.degree() == Some(0) {
            break;
        }
    }
    out
}

fn shifts() -> impl Iterator<Item = i64> {
    (0..).map(|k: i64| if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 })
}

fn factor_squarefree(a: &NfPoly) -> Result<Vec<NfPoly>> {
    let field = a.field();
    let n = a.degree().unwrap_or(0);
    if n <= 1 {
        return Ok(alloc::vec![a.monic()]);
    }
    if let Some(r) = a.to_rational() {
        if field.degree() == 1 {
            return rational_factors(field, &r);
        }
    }
    let theta = field.generator();
    for s in shifts().take(SHIFT_CAP) {
        let st = theta.mul(&field.from_rational(Rational::from_integer(s.into())));
        let b = a.translate(&st.neg());
        let norm = b.norm();
        if !poly_gcd(&norm, &norm.derivative()).is_constant() {
            continue;
        }
        let fac = factor_over_q(&norm)?;
        if fac.factors.len() == 1 {
            return Ok(alloc::vec![a.monic()]);
        }
        let mut out = Vec::with_capacity(fac.factors.len());
        for (g, _) in &fac.factors {
            let h = b.gcd(&NfPoly::from_rational(field, g));
            out.push(h.translate(&st).monic());
        }
        return Ok(out);
    }
    Err(Error::Degenerate)
}

fn rational_factors(field: &NumberField, r: &UniPoly) -> Result<Vec<NfPoly>> {
    Ok(factor_over_q(r)?
        .factors
        .iter()
        .map(|(f, _)| NfPoly::from_rational(field, f))
        .collect())
}

impl NfPoly {
    /// True if some element of the field is a root.
    pub fn has_root(&self) -> Result<bool> {
        Ok(factor_over_nf(self)?.linear_count() > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::text::parse_literal;
    use crate::numfield::nf_new;

    fn lit(s: &str) -> UniPoly {
        parse_literal(s).unwrap()
    }

    fn check(k: &NumberField, a: &UniPoly) -> NfFactorization {
        let p = NfPoly::from_rational(k, a);
        let fac = factor_over_nf(&p).unwrap();
        assert_eq!(fac.expand(), p);
        fac
    }

    #[test]
    fn shift_order() {
        let v: Vec<i64> = shifts().take(5).collect();
        assert_eq!(v, [0, 1, -1, 2, -2]);
    }

    #[test]
    fn sqrt2_splits_its_polynomial() {
        let k = nf_new(&lit("x^2-2")).unwrap();
        let fac = check(&k, &lit("x^2-2"));
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.linear_count(), 2);
        let fac = check(&k, &lit("x^2-3"));
        assert_eq!(fac.factors.len(), 1);
    }

    #[test]
    fn cube_root_two() {
        let k = nf_new(&lit("x^3-2")).unwrap();
        let fac = check(&k, &lit("x^3-2"));
        let degs: Vec<_> = fac.factors.iter().map(|(f, _)| f.degree().unwrap()).collect();
        assert_eq!(degs, [1, 2]);
    }

    #[test]
    fn repeated_factors() {
        let k = nf_new(&lit("x^2+1")).unwrap();
        let fac = check(&k, &lit("x^6+3x^4+3x^2+1"));
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(_, e)| *e == 3));
    }

    #[test]
    fn cyclotomic_splits_completely() {
        let k = nf_new(&lit("x^4+1")).unwrap();
        let fac = check(&k, &lit("x^4+1"));
        assert_eq!(fac.linear_count(), 4);
    }
}
