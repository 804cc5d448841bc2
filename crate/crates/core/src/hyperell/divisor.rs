use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{ClosedPoint, InfPlace};

/// A formal integer combination of closed points. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    support: BTreeMap<ClosedPoint, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn point(pt: ClosedPoint, k: i64) -> Self {
        let mut d = Self::zero();
        d.add_point(pt, k);
        d
    }

    pub fn infinite(place: InfPlace, k: i64) -> Self {
        Self::point(ClosedPoint::Infinite(place), k)
    }

    pub fn from_terms<I: IntoIterator<Item = (ClosedPoint, i64)>>(terms: I) -> Self {
        let mut d = Self::zero();
        for (p, k) in terms {
            d.add_point(p, k);
        }
        d
    }

    pub fn add_point(&mut self, pt: ClosedPoint, k: i64) {
        if k == 0 {
            return;
        }
        let v = self.coefficient(&pt) + k;
        if v == 0 {
            self.support.remove(&pt);
        } else {
            self.support.insert(pt, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut d = self.clone();
        for (p, k) in &o.support {
            d.add_point(p.clone(), *k);
        }
        d
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Divisor { support: self.support.iter().map(|(p, v)| (p.clone(), v * k)).collect() }
    }

    pub fn coefficient(&self, pt: &ClosedPoint) -> i64 {
        self.support.get(pt).copied().unwrap_or(0)
    }

    pub fn infinite_coefficient(&self, place: InfPlace) -> i64 {
        self.coefficient(&ClosedPoint::Infinite(place))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ClosedPoint, i64)> {
        self.support.iter().map(|(p, k)| (p, *k))
    }

    /// Number of distinct points in the support.
    pub fn len(&self) -> usize {
        self.support.len()
    }

    /// Same as [`Divisor::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.support.iter().map(|(p, k)| k * p.degree() as i64).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.support.values().all(|&k| k > 0)
    }

    /// A single closed point with multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.support.len() == 1 && self.support.values().all(|&k| k == 1)
    }

    pub fn is_supported_at_infinity(&self) -> bool {
        self.support.keys().all(ClosedPoint::is_infinite)
    }

    pub fn affine_part(&self) -> Self {
        Divisor { support: self.support.iter().filter(|(p, _)| !p.is_infinite()).map(|(p, k)| (p.clone(), *k)).collect() }
    }

    pub fn infinite_part(&self) -> Self {
        Divisor { support: self.support.iter().filter(|(p, _)| p.is_infinite()).map(|(p, k)| (p.clone(), *k)).collect() }
    }

    /// Positive and negative parts: `self = zeros - poles`.
    pub fn split_signs(&self) -> (Self, Self) {
        let pos = self.support.iter().filter(|(_, k)| **k > 0).map(|(p, k)| (p.clone(), *k)).collect();
        let neg = self.support.iter().filter(|(_, k)| **k < 0).map(|(p, k)| (p.clone(), -*k)).collect();
        (Divisor { support: pos }, Divisor { support: neg })
    }

    pub fn points(&self) -> Vec<&ClosedPoint> {
        self.support.keys().collect()
    }
}
