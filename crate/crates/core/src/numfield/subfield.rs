use alloc::vec::Vec;

use crate::arith::UniPoly;
use crate::linalg::Matrix;
use crate::Result;

use super::{factor_over_nf, NfPoly, NumberField};

/// Degrees of the principal subfields of a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubfieldReport {
    /// One entry per irreducible factor of the minimal polynomial over the
    /// field, sorted ascending.
    pub principal_subfield_degrees: Vec<usize>,
    pub is_primitive: bool,
}

impl SubfieldReport {
    /// Smallest principal subfield degree strictly between 1 and the field degree.
    pub fn proper_subfield_degree(&self, d: usize) -> Option<usize> {
        self.principal_subfield_degrees.iter().copied().find(|&k| k > 1 && k < d)
    }
}

/// Principal subfields of `K`.
///
/// For each irreducible factor `F` of the minimal polynomial over `K`, the
/// subfield is `{g(theta) : g(x) = g(theta) mod F}`; its degree is the
/// dimension of the kernel of `g -> (g mod F) - g(theta)` on polynomials of
/// degree `< d`.
pub fn principal_subfields(k: &NumberField) -> Result<SubfieldReport> {
    let d = k.degree();
    let m = NfPoly::from_rational(k, k.min_poly());
    let fac = factor_over_nf(&m)?;
    let theta = k.generator();
    let mut degrees = Vec::with_capacity(fac.factors.len());
    for (f, _) in &fac.factors {
        let e = f.degree().unwrap();
        let mut mat = Matrix::zeros(e * d, d);
        let mut r = NfPoly::from_elements(k, &[k.one()]);
        let x = NfPoly::new(k, alloc::vec![UniPoly::zero(), UniPoly::one()]);
        let mut tpow = k.one();
        for j in 0..d {
            let diff = r.sub(&NfPoly::from_elements(k, &[tpow.clone()]));
            for (i, c) in diff.coeff_reprs().iter().enumerate() {
                for l in 0..d {
                    mat.set(i * d + l, j, c.coeff(l));
                }
            }
            r = r.mul(&x).rem(f);
            tpow = tpow.mul(&theta);
        }
        degrees.push(d - mat.rank());
    }
    degrees.sort_unstable();
    let is_primitive = degrees.iter().all(|&s| s == 1 || s == d);
    Ok(SubfieldReport { principal_subfield_degrees: degrees, is_primitive })
}

/// Primitivity verdict for the field defined by an irreducible polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitivity {
    /// Degree 1: the rationals themselves, not counted as primitive.
    Trivial,
    Primitive,
    Imprimitive { subfield_degree: usize },
}

pub fn primitivity(m: &UniPoly) -> Result<Primitivity> {
    let k = NumberField::new(m)?;
    let d = k.degree();
    if d == 1 {
        return Ok(Primitivity::Trivial);
    }
    if is_prime(d) {
        return Ok(Primitivity::Primitive);
    }
    let report = principal_subfields(&k)?;
    Ok(match report.proper_subfield_degree(d) {
        None => Primitivity::Primitive,
        Some(subfield_degree) => Primitivity::Imprimitive { subfield_degree },
    })
}

/// True iff `Q[x]/(m)` has no subfield strictly between `Q` and itself.
/// Degree 1 gives false.
pub fn is_primitive_field(m: &UniPoly) -> Result<bool> {
    Ok(primitivity(m)? == Primitivity::Primitive)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}
