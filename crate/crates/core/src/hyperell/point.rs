use crate::arith::UniPoly;

/// One of the places at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InfPlace {
    /// Even models: `y / x^(g+1) -> +c`.
    Plus,
    /// Even models: `y / x^(g+1) -> -c`.
    Minus,
    /// Odd models: the single ramified place.
    Single,
}

/// How `y^2 = f(x)` behaves over an irreducible `p(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// `f` is a nonzero square mod `p`; the point has `y = q(x) mod p`.
    Split(UniPoly),
    /// `p | f`; the point has `y = 0`.
    Ramified,
    /// `f` is not a square mod `p`; one point of degree `2 deg p`.
    Inert,
}

/// A Galois orbit of geometric points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosedPoint {
    Affine { p: UniPoly, branch: Branch },
    Infinite(InfPlace),
}

impl ClosedPoint {
    pub fn affine(p: UniPoly, branch: Branch) -> Self {
        ClosedPoint::Affine { p, branch }
    }

    pub fn degree(&self) -> usize {
        match self {
            ClosedPoint::Infinite(_) => 1,
            ClosedPoint::Affine { p, branch: Branch::Inert } => 2 * p.degree().unwrap(),
            ClosedPoint::Affine { p, .. } => p.degree().unwrap(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ClosedPoint::Infinite(_))
    }

    /// Ramification index over the x-line.
    pub fn ramification(&self) -> u32 {
        match self {
            ClosedPoint::Affine { branch: Branch::Ramified, .. } | ClosedPoint::Infinite(InfPlace::Single) => 2,
            _ => 1,
        }
    }
}
