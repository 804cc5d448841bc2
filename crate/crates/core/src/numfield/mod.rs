//! Number fields `K = Q[t]/(m(t))`, polynomials over them, Trager
//! factorization, principal subfields and the primitivity test.

mod absolute;
mod nfpoly;
mod subfield;
mod trager;

use alloc::sync::Arc;

use num_traits::Zero;

use crate::arith::{factor_over_q, param_resultant, poly_inverse_mod, squarefree_part, Rational, UniPoly};
use crate::{Error, Result};

pub use absolute::{absolute_minpoly, sqrt_mod};
pub use nfpoly::NfPoly;
pub use subfield::{is_primitive_field, primitivity, principal_subfields, Primitivity, SubfieldReport};
pub use trager::{factor_over_nf, NfFactorization};

/// The field `Q[t]/(m)` for a monic irreducible `m`.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberField {
    min_poly: Arc<UniPoly>,
}

impl core::fmt::Debug for NumberField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Q[t]/({:?})", self.min_poly)
    }
}

/// Validating constructor; `m` is made monic.
pub fn nf_new(m: &UniPoly) -> Result<NumberField> {
    NumberField::new(m)
}

impl NumberField {
    pub fn new(m: &UniPoly) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if m.is_constant() {
            return Err(Error::BadInput("constant minimal polynomial".into()));
        }
        if !factor_over_q(m)?.is_irreducible() {
            return Err(Error::ReduciblePolynomial);
        }
        Ok(Self::trusted(m.monic()))
    }

    /// Skips the irreducibility check; callers guarantee it.
    pub(crate) fn trusted(m: UniPoly) -> Self {
        debug_assert!(m.is_monic());
        NumberField { min_poly: Arc::new(m) }
    }

    pub fn min_poly(&self) -> &UniPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree().unwrap()
    }

    pub fn element(&self, repr: &UniPoly) -> NfElement {
        NfElement { field: self.clone(), repr: repr.rem(&self.min_poly) }
    }

    pub fn from_rational(&self, c: Rational) -> NfElement {
        self.element(&UniPoly::constant(c))
    }

    pub fn zero(&self) -> NfElement {
        self.element(&UniPoly::zero())
    }

    pub fn one(&self) -> NfElement {
        self.element(&UniPoly::one())
    }

    /// The class of `t`.
    pub fn generator(&self) -> NfElement {
        self.element(&UniPoly::x())
    }

    pub(crate) fn reduce(&self, p: &UniPoly) -> UniPoly {
        p.rem(&self.min_poly)
    }

    pub(crate) fn mul_repr(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        (a * b).rem(&self.min_poly)
    }

    pub(crate) fn inv_repr(&self, a: &UniPoly) -> Option<UniPoly> {
        poly_inverse_mod(a, &self.min_poly)
    }
}

/// An element of a [`NumberField`], stored as a polynomial of degree `< d`.
#[derive(Clone, PartialEq, Eq)]
pub struct NfElement {
    field: NumberField,
    repr: UniPoly,
}

impl core::fmt::Debug for NfElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{:?}", self.repr)
    }
}

impl NfElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn repr(&self) -> &UniPoly {
        &self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        NfElement { field: self.field.clone(), repr: &self.repr + &o.repr }
    }

    pub fn sub(&self, o: &Self) -> Self {
        NfElement { field: self.field.clone(), repr: &self.repr - &o.repr }
    }

    pub fn mul(&self, o: &Self) -> Self {
        NfElement { field: self.field.clone(), repr: self.field.mul_repr(&self.repr, &o.repr) }
    }

    pub fn neg(&self) -> Self {
        NfElement { field: self.field.clone(), repr: -&self.repr }
    }

    pub fn inverse(&self) -> Option<Self> {
        self.field.inv_repr(&self.repr).map(|repr| NfElement { field: self.field.clone(), repr })
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Characteristic polynomial of multiplication by `self`, as
    /// `Res_t(m(t), z - e(t))`.
    pub fn charpoly(&self) -> UniPoly {
        let m = self.field.min_poly();
        let d = self.field.degree();
        param_resultant(m, d, |z| &UniPoly::constant(z.clone()) - &self.repr)
    }
}

/// Minimal polynomial of `e` over the rationals.
pub fn nf_minpoly(e: &NfElement) -> UniPoly {
    if e.repr.is_constant() {
        let c = if e.repr.is_zero() { Rational::zero() } else { e.repr.coeff(0) };
        return UniPoly::linear_root(&c);
    }
    squarefree_part(&e.charpoly()).expect("characteristic polynomial is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, text::parse_literal};

    fn lit(s: &str) -> UniPoly {
        parse_literal(s).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(nf_new(&lit("x^2-2")).unwrap().degree(), 2);
        assert_eq!(nf_new(&lit("x^2-1")), Err(Error::ReduciblePolynomial));
        assert_eq!(nf_new(&UniPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(nf_new(&lit("2x^4-4")).unwrap().min_poly(), &lit("x^4-2"));
    }

    #[test]
    fn minimal_polynomials() {
        let k = nf_new(&lit("x^2-2")).unwrap();
        assert_eq!(nf_minpoly(&k.generator()), lit("x^2-2"));
        let k4 = nf_new(&lit("x^4-2")).unwrap();
        assert_eq!(nf_minpoly(&k4.generator().pow(2)), lit("x^2-2"));
        assert_eq!(nf_minpoly(&k4.from_rational(rat(3))), lit("x-3"));
        let e = k4.generator().add(&k4.generator().pow(2));
        assert_eq!(nf_minpoly(&e).degree(), Some(4));
    }

    #[test]
    fn inverse_round_trip() {
        let k = nf_new(&lit("x^3-x-1")).unwrap();
        let e = k.element(&lit("x^2+3x-1/2"));
        let inv = e.inverse().unwrap();
        assert_eq!(e.mul(&inv), k.one());
        assert!(k.zero().inverse().is_none());
    }
}
