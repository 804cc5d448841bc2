use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::{Error, Result};

/// Resultant of two nonzero polynomials, normalized as
/// `lc(a)^deg(b) * lc(b)^deg(a) * prod (alpha_i - beta_j)`,
/// i.e. the determinant of the Sylvester matrix.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Rational> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(resultant_nonzero(a, b))
}

pub(crate) fn resultant_nonzero(a: &UniPoly, b: &UniPoly) -> Rational {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = Rational::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            return acc * pow(b.lc().unwrap(), da);
        }
        if da == 0 {
            return acc * pow(a.lc().unwrap(), db);
        }
        let r = a.rem(&b);
        let Some(dr) = r.degree() else {
            return Rational::zero();
        };
        // res(a, b) = (-1)^(da*db) * lc(b)^(da - dr) * res(b, r)
        if da * db % 2 == 1 {
            acc = -acc;
        }
        acc *= pow(b.lc().unwrap(), da - dr);
        a = b;
        b = r;
    }
}

fn pow(base: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// `Res_t(m(t), A(z, t))` as a polynomial in `z`, for monic `m`.
///
/// `specialize(z0)` must return `A(z0, t)`. The result has degree at most
/// `degree_bound` and is recovered by interpolation through the integer
/// points `0..=degree_bound`.
pub fn param_resultant<F>(m: &UniPoly, degree_bound: usize, mut specialize: F) -> UniPoly
where
    F: FnMut(&Rational) -> UniPoly,
{
    debug_assert!(m.is_monic());
    let points: Vec<(Rational, Rational)> = (0..=degree_bound)
        .map(|i| {
            let z = Rational::from_integer(i.into());
            let a = specialize(&z);
            let v = if a.is_zero() { Rational::zero() } else { resultant_nonzero(m, &a) };
            (z, v)
        })
        .collect();
    interpolate(&points)
}

/// Newton interpolation through distinct abscissae.
pub fn interpolate(points: &[(Rational, Rational)]) -> UniPoly {
    let n = points.len();
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            dd[i] = num / (xs[i] - xs[i - level]);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &UniPoly::linear_root(xs[i])) + &UniPoly::constant(dd[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), Rational::from_integer((-1).into()));
        assert!(resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap().is_zero());
        assert!(resultant(&p(&[1, 0, 1]), &p(&[1, 0, 1])).unwrap().is_zero());
        assert_eq!(resultant(&UniPoly::zero(), &p(&[1])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[3, -1, 0, 2]);
        let pts: Vec<_> = (0..6)
            .map(|i| {
                let x = Rational::from_integer(i.into());
                let y = f.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(interpolate(&pts), f);
    }

    #[test]
    fn param_resultant_is_charpoly() {
        // Res_t(t^2 - 2, z - t) = z^2 - 2
        let m = p(&[-2, 0, 1]);
        let r = param_resultant(&m, 2, |z| UniPoly::new(alloc::vec![z.clone(), -Rational::one()]));
        assert_eq!(r, m);
    }
}
