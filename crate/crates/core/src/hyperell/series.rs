use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::{Error, Result};

use super::{HyperCurve, InfPlace, Parity};

/// A truncated Laurent series `sum_i coeffs[i] t^(valuation + i)`, known
/// modulo `t^(valuation + coeffs.len())`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    pub valuation: i64,
    pub coeffs: Vec<Rational>,
}

impl LaurentSeries {
    /// Exponent of the first unknown term.
    pub fn precision(&self) -> i64 {
        self.valuation + self.coeffs.len() as i64
    }

    /// Coefficient of `t^k`; `None` beyond the precision.
    pub fn coeff(&self, k: i64) -> Option<Rational> {
        if k >= self.precision() {
            None
        } else if k < self.valuation {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[(k - self.valuation) as usize].clone())
        }
    }

    /// Exponent of the first nonzero known term.
    pub fn order(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.valuation + i as i64)
    }
}

/// First `n` coefficients of `sqrt(a)` for a power series `a` with `a[0] = 1`.
pub fn sqrt_series(a: &[Rational], n: usize) -> Vec<Rational> {
    assert!(a.first().is_some_and(One::is_one), "series must start with 1");
    let two = Rational::from_integer(2.into());
    let mut s: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            s.push(Rational::one());
            continue;
        }
        let mut acc = a.get(k).cloned().unwrap_or_default();
        for i in 1..k {
            acc -= &s[i] * &s[k - i];
        }
        s.push(acc / &two);
    }
    s
}

/// Expansion of `y` at a place at infinity, `k` terms.
///
/// Even models use `t = 1/x`, and `y = +-c t^-(g+1) (1 + ...)` with the `+`
/// sign at `oo+`. Odd models use `t` with `x = a t^-2`, `a` the leading
/// coefficient of `f`, and then `y = a^(g+1) t^-(2g+1) (1 + ...)`.
pub fn expansion_at_infinity(c: &HyperCurve, place: InfPlace, k: usize) -> Result<LaurentSeries> {
    let g = c.genus() as i64;
    let f = c.f();
    match (c.parity(), place) {
        (Parity::Even, InfPlace::Plus | InfPlace::Minus) => {
            let lc = f.lc().unwrap();
            let rev: Vec<Rational> = f.coeffs().iter().rev().map(|x| x / lc).collect();
            let mut s = sqrt_series(&rev, k);
            let scale = if place == InfPlace::Plus { c.lc_root().clone() } else { -c.lc_root().clone() };
            for x in &mut s {
                *x *= &scale;
            }
            Ok(LaurentSeries { valuation: -(g + 1), coeffs: s })
        }
        (Parity::Odd, InfPlace::Single) => {
            let a = f.lc().unwrap();
            let n = f.degree().unwrap();
            // f(a t^-2) = a^(n+1) t^(-2n) R(t^2), R_j = f_(n-j) a^(-j-1)
            let mut r = Vec::with_capacity(n + 1);
            let mut apow = a.clone();
            for j in 0..=n {
                r.push(&f.coeff(n - j) / &apow);
                apow *= a;
            }
            let half = k.div_ceil(2);
            let s = sqrt_series(&r, half);
            let mut lead = Rational::one();
            for _ in 0..=g {
                lead *= a;
            }
            let mut coeffs = alloc::vec![Rational::zero(); k];
            for (j, sj) in s.iter().enumerate() {
                if 2 * j < k {
                    coeffs[2 * j] = sj * &lead;
                }
            }
            Ok(LaurentSeries { valuation: -(2 * g + 1), coeffs })
        }
        _ => Err(Error::BadInput("place does not exist on this model".into())),
    }
}
