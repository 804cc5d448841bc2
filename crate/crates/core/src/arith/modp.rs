//! Polynomials over a prime field `F_p` with a machine-word modulus, and
//! Berlekamp factorization of squarefree inputs.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Polynomial over `F_p`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

impl PrimePoly {
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        let mut p = PrimePoly { modulus, coeffs: coeffs.into_iter().map(|c| c % modulus).collect() };
        p.trim();
        p
    }

    /// Reduce an integer polynomial modulo `modulus`.
    pub fn from_bigints(modulus: u64, cs: &[BigInt]) -> Self {
        let m = BigInt::from(modulus);
        Self::new(modulus, cs.iter().map(|c| c.mod_floor(&m).to_u64().unwrap()).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn zero_like(&self) -> Self {
        PrimePoly { modulus: self.modulus, coeffs: Vec::new() }
    }

    fn constant(&self, c: u64) -> Self {
        PrimePoly::new(self.modulus, vec![c])
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => self.scale(inv_mod(lc, self.modulus)),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.modulus;
        PrimePoly::new(p, self.coeffs.iter().map(|a| a * (c % p) % p).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(o.coeffs.len());
        let cs = (0..n)
            .map(|i| (self.coeffs.get(i).copied().unwrap_or(0) + o.coeffs.get(i).copied().unwrap_or(0)) % p)
            .collect();
        PrimePoly::new(p, cs)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(o.coeffs.len());
        let cs = (0..n)
            .map(|i| (self.coeffs.get(i).copied().unwrap_or(0) + p - o.coeffs.get(i).copied().unwrap_or(0)) % p)
            .collect();
        PrimePoly::new(p, cs)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return self.zero_like();
        }
        let p = self.modulus;
        let mut cs = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                cs[i + j] = (cs[i + j] + a * b) % p;
            }
        }
        PrimePoly::new(p, cs)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.modulus;
        let dd = d.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return (self.zero_like(), self.zero_like());
        };
        if nd < dd {
            return (self.zero_like(), self.clone());
        }
        let inv = inv_mod(d.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = rem[i + dd] * inv % p;
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - c * dc % p) % p;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (PrimePoly::new(p, quot), PrimePoly::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        PrimePoly::new(p, self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (self.constant(1), self.zero_like());
        let (mut t0, mut t1) = (self.zero_like(), self.constant(1));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
            t0 = core::mem::replace(&mut t1, t);
        }
        let inv = r0.coeffs.last().map_or(1, |&lc| inv_mod(lc, self.modulus));
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = self.constant(1).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree().is_some_and(|d| d == 0 || self.gcd(&self.derivative()).degree() == Some(0))
    }
}

/// Factor a monic squarefree polynomial over `F_p` into monic irreducibles
/// by Berlekamp's algorithm. Deterministic: the splitting loop tries
/// kernel vectors in echelon order and shifts `s = 0..p` in order.
pub fn berlekamp(f: &PrimePoly) -> Vec<PrimePoly> {
    let p = f.modulus;
    let n = f.degree().expect("nonzero input");
    debug_assert!(f.coeffs[n] == 1);
    if n <= 1 {
        return vec![f.clone()];
    }
    // Row i holds x^(i*p) mod f.
    let xp = PrimePoly::new(p, vec![0, 1]).pow_mod(p, f);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = f.constant(1);
    for _ in 0..n {
        let mut row = cur.coeffs.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = cur.mul(&xp).rem(f);
    }
    // Kernel of (Q - I)^T: vectors c with sum_i c_i (Q_ij - delta_ij) = 0.
    let mut mat = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            let v = if i == j { (row[j] + p - 1) % p } else { row[j] };
            mat[j][i] = v;
        }
    }
    let kernel = nullspace_mod(mat, n, p);
    let r = kernel.len();
    let mut factors = vec![f.clone()];
    if r == 1 {
        return factors;
    }
    for v in kernel.iter() {
        let vp = PrimePoly::new(p, v.clone());
        if vp.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors {
            if h.degree() == Some(1) {
                next.push(h);
                continue;
            }
            let mut rest = h;
            for s in 0..p {
                if rest.degree() == Some(1) {
                    break;
                }
                let g = rest.gcd(&vp.sub(&vp.constant(s)));
                if g.degree().is_some_and(|d| d >= 1) && g.degree() != rest.degree() {
                    rest = rest.div_rem(&g).0.monic();
                    next.push(g);
                }
            }
            next.push(rest);
        }
        factors = next;
        if factors.len() == r {
            break;
        }
    }
    factors.sort_by(|a, b| a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    factors
}

/// Nullspace basis of an `n x n` matrix over `F_p`, via reduced row echelon form.
fn nullspace_mod(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p - factor * m[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[i][free]) % p;
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: u64, cs: &[u64]) -> PrimePoly {
        PrimePoly::new(p, cs.to_vec())
    }

    #[test]
    fn berlekamp_splits_x4_minus_1_mod_29() {
        // 29 = 1 mod 4, so x^4 - 1 splits into linear factors.
        let f = pp(29, &[28, 0, 0, 0, 1]);
        let fs = berlekamp(&f);
        assert_eq!(fs.len(), 4);
        assert!(fs.iter().all(|g| g.degree() == Some(1)));
        let prod = fs.iter().fold(pp(29, &[1]), |a, b| a.mul(b));
        assert_eq!(prod, f);
    }

    #[test]
    fn berlekamp_irreducible() {
        // x^2 + 1 is irreducible mod 23 (23 = 3 mod 4).
        let f = pp(23, &[1, 0, 1]);
        assert_eq!(berlekamp(&f), vec![f]);
    }

    #[test]
    fn berlekamp_mixed_degrees() {
        // (x^2+1)(x-3)(x^3+x+1) mod 23
        let a = pp(23, &[1, 0, 1]).mul(&pp(23, &[20, 1])).mul(&pp(23, &[1, 1, 0, 1]));
        let fs = berlekamp(&a);
        let prod = fs.iter().fold(pp(23, &[1]), |x, y| x.mul(y));
        assert_eq!(prod, a);
        for g in &fs {
            assert_eq!(berlekamp(g).len(), 1, "factor {g:?} should be irreducible");
        }
    }

    #[test]
    fn ext_gcd_mod_p() {
        let a = pp(31, &[1, 2, 1]);
        let b = pp(31, &[3, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, pp(31, &[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
