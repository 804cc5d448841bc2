use alloc::vec::Vec;

use crate::arith::{param_resultant, Rational, UniPoly};

use super::{NfElement, NumberField};

/// Dense polynomial in `x` over a number field, lowest degree first.
///
/// Each coefficient is a reduced representative in `t`.
#[derive(Clone, PartialEq, Eq)]
pub struct NfPoly {
    field: NumberField,
    coeffs: Vec<UniPoly>,
}

impl core::fmt::Debug for NfPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl NfPoly {
    pub fn new(field: &NumberField, coeffs: Vec<UniPoly>) -> Self {
        let coeffs = coeffs.iter().map(|c| field.reduce(c)).collect();
        Self::from_reduced(field, coeffs)
    }

    fn from_reduced(field: &NumberField, mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NfPoly { field: field.clone(), coeffs }
    }

    /// Embed a rational polynomial.
    pub fn from_rational(field: &NumberField, p: &UniPoly) -> Self {
        Self::from_reduced(field, p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    pub fn from_elements(field: &NumberField, cs: &[NfElement]) -> Self {
        Self::from_reduced(field, cs.iter().map(|c| c.repr().clone()).collect())
    }

    pub fn zero(field: &NumberField) -> Self {
        NfPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient representatives, lowest degree first.
    pub fn coeff_reprs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> NfElement {
        self.field.element(self.coeffs.get(i).unwrap_or(&UniPoly::zero()))
    }

    /// The coefficients all lie in Q; returns that rational polynomial.
    pub fn to_rational(&self) -> Option<UniPoly> {
        self.coeffs
            .iter()
            .map(|c| if c.is_zero() { Some(Rational::default()) } else if c.is_constant() { Some(c.coeff(0)) } else { None })
            .collect::<Option<Vec<_>>>()
            .map(UniPoly::new)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = UniPoly::zero();
        let cs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Self::from_reduced(&self.field, cs)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = UniPoly::zero();
        let cs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Self::from_reduced(&self.field, cs)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = alloc::vec![UniPoly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        let out = out.iter().map(|c| self.field.reduce(c)).collect();
        Self::from_reduced(&self.field, out)
    }

    pub fn scale(&self, c: &NfElement) -> Self {
        let cs = self.coeffs.iter().map(|a| self.field.mul_repr(a, c.repr())).collect();
        Self::from_reduced(&self.field, cs)
    }

    pub fn lc(&self) -> Option<NfElement> {
        self.coeffs.last().map(|c| self.field.element(c))
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero element of a field")),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = self.field.inv_repr(d.coeffs.last().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        let qlen = (r.len() + 1).saturating_sub(d.coeffs.len());
        let mut q = alloc::vec![UniPoly::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let c = self.field.mul_repr(top, &inv);
            for (i, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    r[k + i] = self.field.reduce(&(&r[k + i] - &(&c * dc)));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_reduced(&self.field, q), Self::from_reduced(&self.field, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> Self {
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rational::from_integer((i as i64).into())))
            .collect();
        Self::from_reduced(&self.field, cs)
    }

    /// Monic gcd over the field; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `self(x + c)`.
    pub fn translate(&self, c: &NfElement) -> Self {
        let lin = Self::from_reduced(&self.field, alloc::vec![c.repr().clone(), UniPoly::one()]);
        let mut acc = Self::zero(&self.field);
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::from_reduced(&self.field, alloc::vec![a.clone()]));
        }
        acc
    }

    /// Evaluate at an element of the field.
    pub fn eval(&self, at: &NfElement) -> NfElement {
        let mut acc = self.field.zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(&self.field.element(a));
        }
        acc
    }

    /// `Res_t(m(t), A(x, t))`, the norm down to `Q[x]`.
    pub fn norm(&self) -> UniPoly {
        let Some(n) = self.degree() else { return UniPoly::zero() };
        let m = self.field.min_poly();
        let bound = n * self.field.degree();
        param_resultant(m, bound, |z| {
            let mut acc = UniPoly::zero();
            for a in self.coeffs.iter().rev() {
                acc = &acc.scale(z) + a;
            }
            acc
        })
    }
}
