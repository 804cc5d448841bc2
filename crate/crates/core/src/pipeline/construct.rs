use num_traits::{One, Zero};

use crate::arith::{factor_over_q, resultant, squarefree_part, Rational, UniPoly};
use crate::hyperell::{
    divisor_of_function, point_field, rr_space, Branch, ClosedPoint, CurveFunction, Divisor, HyperCurve,
};
use crate::numfield::{nf_minpoly, primitivity, NumberField, Primitivity};
use crate::{Error, Result};

use super::classes::{classify_effective, Outcome};

const ALPHA_SEARCH_CAP: i64 = 1000;

/// A curve `Y^2 = h(X) = f(X^2)` carrying a ramified point whose residue
/// field is a given primitive field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveConstruction {
    pub curve: HyperCurve,
    pub alpha: Rational,
    /// Minimal polynomial of `phi^2`, `phi = theta - alpha`.
    pub f: UniPoly,
    pub h: UniPoly,
    /// The ramified point over the minimal polynomial of `phi`.
    pub witness: ClosedPoint,
}

/// `alpha` is admissible iff `2 alpha` is not a sum of two conjugates of
/// `theta`, i.e. `Res_t(m(t), m(2 alpha - t)) != 0`.
pub fn is_admissible(m: &UniPoly, alpha: &Rational) -> Result<bool> {
    let two_alpha = alpha * Rational::from_integer(2.into());
    let reflect = UniPoly::new(alloc::vec![two_alpha, -Rational::one()]);
    Ok(!resultant(m, &m.compose(&reflect))?.is_zero())
}

/// Searches `alpha = seed, seed + 1, ...` for the first admissible value and
/// builds the curve.
pub fn construct_primitive_curve(m: &UniPoly, alpha_seed: &Rational) -> Result<PrimitiveConstruction> {
    let k = NumberField::new(m)?;
    let d = k.degree();
    if d < 3 {
        return Err(Error::BadInput("field degree must be at least 3".into()));
    }
    if primitivity(k.min_poly())? != Primitivity::Primitive {
        return Err(Error::NotPrimitive);
    }
    let mono = k.min_poly();
    let mut alpha = alpha_seed.clone();
    let mut tries = 0;
    while !is_admissible(mono, &alpha)? {
        tries += 1;
        if tries >= ALPHA_SEARCH_CAP {
            return Err(Error::Degenerate);
        }
        alpha += Rational::one();
    }
    let phi = k.generator().sub(&k.from_rational(alpha.clone()));
    let f = nf_minpoly(&phi.mul(&phi));
    let x2 = UniPoly::monomial(Rational::one(), 2);
    let h = f.compose(&x2);
    if f.degree() != Some(d) || squarefree_part(&h)?.degree() != h.degree() {
        return Err(Error::NotSeparable);
    }
    let curve = HyperCurve::new(&h).map_err(|e| match e {
        Error::NotSquarefree => Error::NotSeparable,
        e => e,
    })?;
    let p = mono.compose(&UniPoly::new(alloc::vec![alpha.clone(), Rational::one()]));
    let witness = ClosedPoint::affine(p, Branch::Ramified);
    curve.validate_point(&witness)?;
    Ok(PrimitiveConstruction { curve, alpha, f, h, witness })
}

/// A function whose fiber over 0 is the irreducible effective divisor `p`:
/// the inverse of a nonconstant element of `L(p)`.
pub fn fiber_function(c: &HyperCurve, p: &Divisor) -> Result<CurveFunction> {
    let space = rr_space(c, p)?;
    let w0 = space
        .basis
        .iter()
        .find(|w| !w.is_constant())
        .ok_or_else(|| Error::BadInput("L(D) has only constants".into()))?;
    w0.inverse(c.f())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberOutcome {
    IrreduciblePrimitive,
    IrreducibleImprimitive { subfield_degree: usize },
    Reducible,
    /// The fiber has a repeated point: `beta` is a branch value.
    Degenerate,
}

impl FiberOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            FiberOutcome::IrreduciblePrimitive => "irreducible-primitive",
            FiberOutcome::IrreducibleImprimitive { .. } => "irreducible-imprimitive",
            FiberOutcome::Reducible => "reducible",
            FiberOutcome::Degenerate => "degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub beta: Rational,
    pub outcome: FiberOutcome,
    /// Zero divisor of `w - beta`.
    pub fiber: Divisor,
    pub minpoly: Option<UniPoly>,
}

/// Classifies the fiber `w = beta`.
pub fn specialize_fiber(c: &HyperCurve, w: &CurveFunction, beta: &Rational) -> Result<FiberReport> {
    if w.is_constant() || w.is_zero() {
        return Err(Error::ConstantFunction);
    }
    let shifted = w.sub_constant(beta);
    let (zeros, poles) = divisor_of_function(c, &shifted)?.split_signs();
    let d = poles.degree();
    let mut report = FiberReport { beta: beta.clone(), outcome: FiberOutcome::Degenerate, fiber: zeros, minpoly: None };
    if report.fiber.degree() != d || report.fiber.terms().any(|(_, k)| k > 1) {
        return Ok(report);
    }
    let (outcome, minpoly) = classify_effective(c, &report.fiber, d as u64)?;
    report.outcome = match outcome {
        Outcome::Primitive => FiberOutcome::IrreduciblePrimitive,
        Outcome::Imprimitive { subfield_degree } => FiberOutcome::IrreducibleImprimitive { subfield_degree },
        _ => FiberOutcome::Reducible,
    };
    report.minpoly = minpoly;
    Ok(report)
}

/// The residue field of the witness, re-derived from the curve.
pub fn witness_field(pc: &PrimitiveConstruction) -> Result<UniPoly> {
    let m = point_field(&pc.curve, &pc.witness)?;
    debug_assert!(factor_over_q(&m)?.is_irreducible());
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, text::parse_literal};
    use crate::numfield::is_primitive_field;

    fn lit(s: &str) -> UniPoly {
        parse_literal(s).unwrap()
    }

    #[test]
    fn cube_root_of_two() {
        let pc = construct_primitive_curve(&lit("x^3-2"), &rat(0)).unwrap();
        assert_eq!(pc.alpha, rat(0));
        assert_eq!(pc.f, lit("x^3-4"));
        assert_eq!(pc.h, lit("x^6-4"));
        assert_eq!(pc.curve.genus(), 2);
        assert!(is_primitive_field(&witness_field(&pc).unwrap()).unwrap());
    }

    #[test]
    fn quintic() {
        let pc = construct_primitive_curve(&lit("x^5-x-1"), &rat(0)).unwrap();
        assert_eq!(pc.h.degree(), Some(10));
        assert_eq!(pc.curve.genus(), 4);
        assert_eq!(pc.witness.degree(), 5);
    }

    #[test]
    fn admissibility() {
        // zeta8 + zeta8^5 = 0
        assert!(!is_admissible(&lit("x^4+1"), &rat(0)).unwrap());
        assert!(is_admissible(&lit("x^4+1"), &rat(1)).unwrap());
        assert!(is_admissible(&lit("x^3-x-1"), &rat(0)).unwrap());
    }

    #[test]
    fn rejects_imprimitive_fields() {
        assert_eq!(construct_primitive_curve(&lit("x^4-2"), &rat(0)), Err(Error::NotPrimitive));
        assert_eq!(construct_primitive_curve(&lit("x^2-2"), &rat(0)).map(|_| ()), Err(Error::BadInput("field degree must be at least 3".into())));
    }

    #[test]
    fn fiber_over_zero_is_the_witness() {
        let pc = construct_primitive_curve(&lit("x^3-2"), &rat(0)).unwrap();
        let p = Divisor::point(pc.witness.clone(), 1);
        let w = fiber_function(&pc.curve, &p).unwrap();
        let r = specialize_fiber(&pc.curve, &w, &rat(0)).unwrap();
        assert_eq!(r.fiber, p);
        assert_eq!(r.outcome, FiberOutcome::IrreduciblePrimitive);
        assert_eq!(specialize_fiber(&pc.curve, &CurveFunction::constant(rat(2)), &rat(0)), Err(Error::ConstantFunction));
    }
}
