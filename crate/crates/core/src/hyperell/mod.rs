//! Hyperelliptic models `y^2 = f(x)` over Q: closed points, divisors,
//! principal divisors of functions `(u + v y)/den`, expansions at infinity
//! and Riemann-Roch spaces.

mod divisor;
mod function;
mod point;
mod rr;
mod series;
pub mod text;

use alloc::vec::Vec;

use crate::arith::{rational_sqrt, squarefree_part, Rational, UniPoly};
use crate::numfield::{absolute_minpoly, sqrt_mod};
use crate::{Error, Result};

pub use divisor::Divisor;
pub use function::{divisor_of_function, CurveFunction};
pub use point::{Branch, ClosedPoint, InfPlace};
pub use rr::{canonical_divisor, decompose_effective, rr_space, rr_space_infty, RRSpace};
pub use series::{expansion_at_infinity, sqrt_series, LaurentSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    /// `deg f = 2g + 1`: one ramified place at infinity.
    Odd,
    /// `deg f = 2g + 2`: two rational places at infinity.
    Even,
}

/// The curve `y^2 = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperCurve {
    f: UniPoly,
    genus: usize,
    parity: Parity,
    /// Even models: the positive square root `c` of the leading coefficient.
    /// At `oo+` the function `y / x^(g+1)` takes the value `+c`.
    lc_root: Rational,
}

/// Validating constructor.
pub fn curve_new(f: &UniPoly) -> Result<HyperCurve> {
    HyperCurve::new(f)
}

impl HyperCurve {
    pub fn new(f: &UniPoly) -> Result<Self> {
        let n = f.degree().ok_or(Error::ZeroPolynomial)?;
        if n < 5 {
            return Err(Error::DegreeTooSmall);
        }
        if squarefree_part(f)?.degree() != Some(n) {
            return Err(Error::NotSquarefree);
        }
        let genus = n.div_ceil(2) - 1;
        let (parity, lc_root) = if n % 2 == 1 {
            (Parity::Odd, Rational::default())
        } else {
            let c = rational_sqrt(f.lc().unwrap()).ok_or(Error::IrrationalInfinitePlaces)?;
            (Parity::Even, c)
        };
        Ok(HyperCurve { f: f.clone(), genus, parity, lc_root })
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub(crate) fn lc_root(&self) -> &Rational {
        &self.lc_root
    }

    pub fn infinite_places(&self) -> Vec<InfPlace> {
        match self.parity {
            Parity::Odd => alloc::vec![InfPlace::Single],
            Parity::Even => alloc::vec![InfPlace::Plus, InfPlace::Minus],
        }
    }

    /// The closed points over the monic irreducible `p`, with their
    /// ramification indices over the x-line.
    pub fn points_above(&self, p: &UniPoly) -> Result<Vec<(ClosedPoint, u32)>> {
        if self.f.rem(p).is_zero() {
            return Ok(alloc::vec![(ClosedPoint::affine(p.clone(), Branch::Ramified), 2)]);
        }
        Ok(match sqrt_mod(p, &self.f)? {
            Some(q) => {
                let neg = (-&q).rem(p);
                alloc::vec![
                    (ClosedPoint::affine(p.clone(), Branch::Split(q)), 1),
                    (ClosedPoint::affine(p.clone(), Branch::Split(neg)), 1),
                ]
            }
            None => alloc::vec![(ClosedPoint::affine(p.clone(), Branch::Inert), 1)],
        })
    }

    /// Checks that a closed point lies on this curve with the stated branch.
    pub fn validate_point(&self, pt: &ClosedPoint) -> Result<()> {
        let bad = |m: &str| Err(Error::BadInput(m.into()));
        match pt {
            ClosedPoint::Infinite(place) => {
                if self.infinite_places().contains(place) {
                    Ok(())
                } else {
                    bad("infinite place does not exist on this model")
                }
            }
            ClosedPoint::Affine { p, branch } => {
                if !p.is_monic() || !crate::arith::is_irreducible(p) {
                    return bad("point polynomial must be monic irreducible");
                }
                let fr = self.f.rem(p);
                match branch {
                    Branch::Ramified if fr.is_zero() => Ok(()),
                    Branch::Ramified => bad("ramified point needs p | f"),
                    _ if fr.is_zero() => bad("p divides f: the point is ramified"),
                    Branch::Split(q) => {
                        if q.degree().is_some_and(|d| d >= p.degree().unwrap()) {
                            return bad("split branch must be reduced modulo p");
                        }
                        if (&(q * q) - &self.f).rem(p).is_zero() {
                            Ok(())
                        } else {
                            bad("split branch q must satisfy q^2 = f mod p")
                        }
                    }
                    Branch::Inert => {
                        if sqrt_mod(p, &self.f)?.is_none() {
                            Ok(())
                        } else {
                            bad("f is a square modulo p: the point splits")
                        }
                    }
                }
            }
        }
    }
}

/// Minimal polynomial of a generator of the residue field of an affine point.
pub fn point_field(c: &HyperCurve, pt: &ClosedPoint) -> Result<UniPoly> {
    match pt {
        ClosedPoint::Infinite(_) => Err(Error::InfinitePlace),
        ClosedPoint::Affine { p, branch: Branch::Inert } => absolute_minpoly(p, c.f(), 0),
        ClosedPoint::Affine { p, .. } => Ok(p.clone()),
    }
}
