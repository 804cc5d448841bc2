use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::UniPoly;
use crate::hyperell::{decompose_effective, point_field, rr_space, ClosedPoint, Divisor, HyperCurve, InfPlace, Parity};
use crate::numfield::{primitivity, Primitivity};
use crate::{Error, Result};

/// A finite Mordell-Weil group given by cyclic factors, plus an effective
/// divisor used to move classes into degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MWSpec {
    /// `(order, generator)`; generators have degree 0.
    pub cyclic_factors: Vec<(u64, Divisor)>,
    pub base_point_divisor: Divisor,
}

impl MWSpec {
    pub fn order(&self) -> u64 {
        self.cyclic_factors.iter().map(|(n, _)| *n).product()
    }

    pub fn validate(&self, c: &HyperCurve) -> Result<()> {
        for (n, g) in &self.cyclic_factors {
            if *n == 0 {
                return Err(Error::BadInput("cyclic factor of order 0".into()));
            }
            if g.degree() != 0 {
                return Err(Error::BadInput(format!("generator has degree {}", g.degree())));
            }
            if !g.is_supported_at_infinity() {
                return Err(Error::UnsupportedDivisorShape("generator with affine support".into()));
            }
            for pt in g.points() {
                c.validate_point(pt)?;
            }
        }
        let b = &self.base_point_divisor;
        if b.is_zero() || !b.is_effective() {
            return Err(Error::BadInput("base divisor must be nonzero and effective".into()));
        }
        for pt in b.points() {
            c.validate_point(pt)?;
        }
        Ok(())
    }
}

/// Coefficient vectors of every group element, each coordinate running
/// over `-(n-1)/2 ..= n/2`, in lexicographic order.
pub fn class_labels(mw: &MWSpec) -> Vec<Vec<i64>> {
    let ranges: Vec<(i64, i64)> =
        mw.cyclic_factors.iter().map(|(n, _)| (-((*n as i64 - 1) / 2), *n as i64 / 2)).collect();
    let mut out = Vec::new();
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        out.push(cur.clone());
        let mut i = ranges.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                break;
            }
            cur[i] = ranges[i].0;
        }
    }
}

pub fn format_label(label: &[i64]) -> String {
    let parts: Vec<String> = label.iter().map(|a| format!("{a}")).collect();
    parts.join(",")
}

/// `d = q deg(base) + r` gives the shift `q base + r oo+` (or `r oo`).
pub fn degree_shift(c: &HyperCurve, mw: &MWSpec, d: u64) -> Result<Divisor> {
    let db = mw.base_point_divisor.degree() as u64;
    if db == 0 {
        return Err(Error::BadInput("base divisor has degree 0".into()));
    }
    let place = match c.parity() {
        Parity::Even => InfPlace::Plus,
        Parity::Odd => InfPlace::Single,
    };
    let (q, r) = (d / db, d % db);
    Ok(mw.base_point_divisor.scale(q as i64).add(&Divisor::infinite(place, r as i64)))
}

/// Representative of the class with coefficient vector `label`.
pub fn class_divisor(mw: &MWSpec, shift: &Divisor, label: &[i64]) -> Divisor {
    let mut d = shift.clone();
    for ((_, g), a) in mw.cyclic_factors.iter().zip(label) {
        d = d.add(&g.scale(*a));
    }
    d
}

/// Every class with its representative, in canonical order.
pub fn class_representatives(c: &HyperCurve, mw: &MWSpec, d: u64) -> Result<Vec<(Vec<i64>, Divisor)>> {
    if d < 2 {
        return Err(Error::BadInput("degree must be at least 2".into()));
    }
    mw.validate(c)?;
    let shift = degree_shift(c, mw, d)?;
    Ok(class_labels(mw)
        .into_iter()
        .map(|l| {
            let div = class_divisor(mw, &shift, &l);
            (l, div)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: Vec<i64>,
    pub divisor: Divisor,
    pub ell: usize,
}

pub fn enumerate_classes(c: &HyperCurve, mw: &MWSpec, d: u64) -> Result<Vec<ClassInfo>> {
    class_representatives(c, mw, d)?
        .into_iter()
        .map(|(label, divisor)| {
            let ell = rr_space(c, &divisor)?.dim();
            Ok(ClassInfo { label, divisor, ell })
        })
        .collect()
}

/// Why a class with `ell >= 2` holds no primitive divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkipReason {
    /// `3 <= d <= g`: a pencil of degree `d` and the hyperelliptic map
    /// cannot be independent, so every member has a quadratic subfield.
    HyperellipticCover,
    /// Recorded without a justification from the cover data.
    Unjustified,
}

impl SkipReason {
    pub fn tag(&self) -> &'static str {
        match self {
            SkipReason::HyperellipticCover => "hyperelliptic-cover",
            SkipReason::Unjustified => "unjustified",
        }
    }
}

pub fn skip_reason(c: &HyperCurve, d: u64) -> SkipReason {
    if d >= 3 && d <= c.genus() as u64 {
        SkipReason::HyperellipticCover
    } else {
        SkipReason::Unjustified
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    SkippedPositiveDim(SkipReason),
    NoEffective,
    Reducible,
    Imprimitive { subfield_degree: usize },
    Primitive,
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::SkippedPositiveDim(_) => "skipped_positive_dim",
            Outcome::NoEffective => "no_effective",
            Outcome::Reducible => "reducible",
            Outcome::Imprimitive { .. } => "imprimitive",
            Outcome::Primitive => "primitive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitVerdict {
    pub label: Vec<i64>,
    pub ell: usize,
    pub outcome: Outcome,
    /// The unique effective divisor in the class, when `ell = 1`.
    pub witness: Option<Divisor>,
    /// Minimal polynomial of the residue field of an irreducible witness.
    pub minpoly: Option<UniPoly>,
}

/// Classifies one class of degree `d`.
pub fn classify_class(c: &HyperCurve, d: u64, label: &[i64], divisor: &Divisor) -> Result<OrbitVerdict> {
    let space = rr_space(c, divisor)?;
    let ell = space.dim();
    let mut v = OrbitVerdict { label: label.to_vec(), ell, outcome: Outcome::NoEffective, witness: None, minpoly: None };
    if ell >= 2 {
        v.outcome = Outcome::SkippedPositiveDim(skip_reason(c, d));
        return Ok(v);
    }
    if ell == 0 {
        return Ok(v);
    }
    let e = decompose_effective(c, &space.basis[0], divisor)?;
    let (outcome, minpoly) = classify_effective(c, &e, d)?;
    v.outcome = outcome;
    v.minpoly = minpoly;
    v.witness = Some(e);
    Ok(v)
}

/// Reducible unless `e` is one closed point of degree `d` with multiplicity
/// one; otherwise the primitivity of its residue field decides.
pub(crate) fn classify_effective(c: &HyperCurve, e: &Divisor, d: u64) -> Result<(Outcome, Option<UniPoly>)> {
    if !e.is_irreducible() || e.degree() != d as i64 {
        return Ok((Outcome::Reducible, None));
    }
    let pt = e.points()[0];
    if matches!(pt, ClosedPoint::Infinite(_)) {
        return Ok((Outcome::Reducible, None));
    }
    let m = point_field(c, pt)?;
    let outcome = match primitivity(&m)? {
        Primitivity::Primitive => Outcome::Primitive,
        Primitivity::Imprimitive { subfield_degree } => Outcome::Imprimitive { subfield_degree },
        Primitivity::Trivial => Outcome::Reducible,
    };
    Ok((outcome, Some(m)))
}

/// Counts per outcome.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub classes: usize,
    pub skipped_positive_dim: usize,
    pub no_effective: usize,
    pub reducible: usize,
    pub imprimitive: usize,
    pub primitive: usize,
}

impl Summary {
    pub fn of(verdicts: &[OrbitVerdict]) -> Self {
        let mut s = Summary { classes: verdicts.len(), ..Summary::default() };
        for v in verdicts {
            match v.outcome {
                Outcome::SkippedPositiveDim(_) => s.skipped_positive_dim += 1,
                Outcome::NoEffective => s.no_effective += 1,
                Outcome::Reducible => s.reducible += 1,
                Outcome::Imprimitive { .. } => s.imprimitive += 1,
                Outcome::Primitive => s.primitive += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.skipped_positive_dim + self.no_effective + self.reducible + self.imprimitive + self.primitive
    }
}

/// Sequential classification of every class; see [`classify_class`].
pub fn classify_points(c: &HyperCurve, mw: &MWSpec, d: u64) -> Result<(Vec<OrbitVerdict>, Summary)> {
    let verdicts = class_representatives(c, mw, d)?
        .iter()
        .map(|(l, div)| classify_class(c, d, l, div))
        .collect::<Result<Vec<_>>>()?;
    let s = Summary::of(&verdicts);
    Ok((verdicts, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::text::parse_literal;
    use crate::hyperell::curve_new;

    fn mw(order: u64) -> MWSpec {
        MWSpec {
            cyclic_factors: alloc::vec![(
                order,
                Divisor::infinite(InfPlace::Plus, 1).sub(&Divisor::infinite(InfPlace::Minus, 1))
            )],
            base_point_divisor: Divisor::infinite(InfPlace::Plus, 1).add(&Divisor::infinite(InfPlace::Minus, 1)),
        }
    }

    #[test]
    fn labels_are_symmetric_and_ordered() {
        let l = class_labels(&mw(35));
        assert_eq!(l.len(), 35);
        assert_eq!(l[0], [-17]);
        assert_eq!(l[34], [17]);
        let l = class_labels(&mw(4));
        assert_eq!(l, [[-1], [0], [1], [2]]);
        let two = MWSpec { cyclic_factors: alloc::vec![mw(2).cyclic_factors[0].clone(), mw(3).cyclic_factors[0].clone()], ..mw(1) };
        assert_eq!(class_labels(&two), [[0, -1], [0, 0], [0, 1], [1, -1], [1, 0], [1, 1]]);
        assert_eq!(class_labels(&mw(1)), [[0]]);
    }

    #[test]
    fn trivial_group_hyperelliptic_pencil() {
        let c = curve_new(&parse_literal("x^6+x+1").unwrap()).unwrap();
        let cls = enumerate_classes(&c, &mw(1), 2).unwrap();
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].ell, 2);
    }

    #[test]
    fn odd_degree_shift() {
        let c = curve_new(&parse_literal("x^5+x+3").unwrap()).unwrap();
        let spec = MWSpec { cyclic_factors: alloc::vec![], base_point_divisor: Divisor::infinite(InfPlace::Single, 1) };
        assert_eq!(degree_shift(&c, &spec, 3).unwrap(), Divisor::infinite(InfPlace::Single, 3));
        assert_eq!(class_labels(&spec), [Vec::<i64>::new()]);
    }

    #[test]
    fn rejects_affine_generators() {
        let c = curve_new(&parse_literal("x^6+x+1").unwrap()).unwrap();
        let mut spec = mw(3);
        spec.cyclic_factors[0].1 =
            crate::hyperell::text::parse_divisor("(x; split; 1) - oo+").unwrap();
        assert!(matches!(class_representatives(&c, &spec, 2), Err(Error::UnsupportedDivisorShape(_))));
    }
}
