//! Factorization over the rationals: squarefree decomposition followed by
//! Zassenhaus (modular factorization, quadratic Hensel lifting, subset
//! recombination).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{berlekamp, PrimePoly};
use super::{poly_gcd, Rational, UniPoly};
use crate::{Error, Result};

/// `unit * prod factor_i^mult_i`, factors monic irreducible and pairwise coprime,
/// ordered by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    /// Multiply the factorization back out.
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// `a / gcd(a, a')`, made monic.
pub fn squarefree_part(a: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = poly_gcd(a, &a.derivative());
    Ok(a.exact_div(&g).expect("gcd divides").monic())
}

/// Yun's algorithm: `a = lc * prod s_i^i` with `s_i` monic squarefree and pairwise coprime.
/// Only nonconstant `s_i` are returned.
pub fn squarefree_decomposition(a: &UniPoly) -> Vec<(UniPoly, usize)> {
    let a = a.monic();
    if a.is_constant() {
        return Vec::new();
    }
    let da = a.derivative();
    let b = poly_gcd(&a, &da);
    let mut c = a.exact_div(&b).unwrap();
    let mut d = &da.exact_div(&b).unwrap() - &c.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !c.is_constant() {
        let ai = poly_gcd(&c, &d);
        c = c.exact_div(&ai).unwrap();
        d = &d.exact_div(&ai).unwrap() - &c.derivative();
        if !ai.is_constant() {
            out.push((ai, i));
        }
        i += 1;
    }
    out
}

/// Complete factorization into monic irreducibles over the rationals.
pub fn factor_over_q(a: &UniPoly) -> Result<Factorization> {
    let unit = a.lc().cloned().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    for (s, mult) in squarefree_decomposition(a) {
        for f in factor_squarefree(&s) {
            factors.push((f, mult));
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

pub fn is_irreducible(a: &UniPoly) -> bool {
    a.degree().is_some_and(|d| d >= 1) && factor_over_q(a).is_ok_and(|f| f.is_irreducible())
}

/// Rational roots with multiplicity, from the linear factors.
pub fn rational_roots(a: &UniPoly) -> Result<Vec<Rational>> {
    let fac = factor_over_q(a)?;
    let mut roots = Vec::new();
    for (f, m) in &fac.factors {
        if f.degree() == Some(1) {
            let r = -f.coeff(0);
            roots.extend(core::iter::repeat_n(r, *m));
        }
    }
    Ok(roots)
}

/// Monic irreducible factors of a squarefree polynomial, sorted.
fn factor_squarefree(s: &UniPoly) -> Vec<UniPoly> {
    if s.degree() == Some(1) {
        return vec![s.monic()];
    }
    let (_, prim) = s.to_primitive_integer();
    let mut out: Vec<UniPoly> = zassenhaus(&prim).iter().map(|f| UniPoly::from_bigints(f).monic()).collect();
    out.sort();
    out
}

// ---- integer polynomial helpers -------------------------------------------------

type ZPoly = Vec<BigInt>;

fn z_trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_trim(out)
}

fn z_add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    z_trim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default()).collect())
}

fn z_sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    z_trim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()).collect())
}

fn z_scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    z_trim(a.iter().map(|x| x * c).collect())
}

/// Coefficients reduced into `[0, m)`.
fn z_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    z_trim(a.iter().map(|x| x.mod_floor(m)).collect())
}

/// Coefficients reduced into `(-m/2, m/2]`.
fn z_symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    z_trim(
        a.iter()
            .map(|x| {
                let r = x.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division by a monic polynomial over the integers.
fn z_divrem_monic(a: &[BigInt], h: &[BigInt]) -> (ZPoly, ZPoly) {
    let dh = h.len() - 1;
    debug_assert!(h[dh].is_one());
    if a.len() <= dh {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - dh];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dh].clone();
        if c.is_zero() {
            continue;
        }
        for (j, hc) in h.iter().enumerate() {
            rem[i + j] -= &c * hc;
        }
        quot[i] = c;
    }
    rem.truncate(dh);
    (z_trim(quot), z_trim(rem))
}

/// Exact division over Z, `None` if `b` does not divide `a` in `Z[x]`.
fn z_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len() - 1;
    if a.len() <= db {
        return a.is_empty().then(Vec::new);
    }
    let lb = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let (c, r) = rem[i + db].div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[i + j] -= &c * bc;
        }
        quot[i] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| z_trim(quot))
}

fn z_from_modp(f: &PrimePoly) -> ZPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

// ---- Zassenhaus --------------------------------------------------------------------

const PRIME_FLOOR: u64 = 20;
const PRIME_COUNT: usize = 3;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Pick the prime with the fewest modular factors among the first
/// `PRIME_COUNT` primes above `PRIME_FLOOR` that keep the degree and squarefreeness.
fn choose_prime(f: &[BigInt]) -> (u64, Vec<PrimePoly>) {
    let deg = f.len() - 1;
    let mut best: Option<(u64, Vec<PrimePoly>)> = None;
    let mut tried = 0;
    let mut p = PRIME_FLOOR;
    while tried < PRIME_COUNT {
        p += 1;
        if !is_prime(p) {
            continue;
        }
        let fp = PrimePoly::from_bigints(p, f);
        if fp.degree() != Some(deg) || !fp.is_squarefree() {
            continue;
        }
        tried += 1;
        let factors = berlekamp(&fp.monic());
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
    }
    best.unwrap()
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial of degree >= 1.
fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let (p, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].abs();
    let norm2 = f.iter().map(|c| c * c).fold(BigInt::zero(), |a, b| a + b).sqrt() + 1u32;
    let bound = BigInt::from(2u32) * &lc * (BigInt::one() << n) * norm2;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut doublings = 0;
    while modulus <= bound {
        modulus = &modulus * &modulus;
        doublings += 1;
    }
    let lifted = multi_lift(f, &modular.iter().map(z_from_modp).collect::<Vec<_>>(), &pb, doublings);
    recombine(f.to_vec(), lifted, &modulus)
}

/// Lift `f = lc(f) * prod factors (mod p)` to `mod p^(2^doublings)`.
/// Returned factors are monic modulo the final modulus.
fn multi_lift(f: &[BigInt], factors: &[ZPoly], p: &BigInt, doublings: u32) -> Vec<ZPoly> {
    let mut modulus = p.clone();
    for _ in 0..doublings {
        modulus = &modulus * &modulus;
    }
    if factors.len() == 1 {
        let lc_inv = inv_mod_big(f.last().unwrap(), &modulus);
        return vec![z_mod(&z_scale(f, &lc_inv), &modulus)];
    }
    let k = factors.len() / 2;
    let (left, right) = factors.split_at(k);
    let lc = f.last().unwrap().clone();
    let g0 = z_mod(&left.iter().fold(vec![lc], |acc, g| z_mul(&acc, g)), p);
    let h0 = z_mod(&right.iter().fold(vec![BigInt::one()], |acc, h| z_mul(&acc, h)), p);
    let (g, h) = hensel_pair(f, g0, h0, p, doublings);
    let mut out = multi_lift(&g, left, p, doublings);
    out.extend(multi_lift(&h, right, p, doublings));
    out
}

/// Quadratic Hensel lifting of `f = g*h (mod p)` with `h` monic, `doublings` times.
fn hensel_pair(f: &[BigInt], g: ZPoly, h: ZPoly, p: &BigInt, doublings: u32) -> (ZPoly, ZPoly) {
    let pu: u64 = p.try_into().unwrap();
    let gp = PrimePoly::from_bigints(pu, &g);
    let hp = PrimePoly::from_bigints(pu, &h);
    let (one, s, t) = gp.ext_gcd(&hp);
    debug_assert_eq!(one.degree(), Some(0));
    let (mut g, mut h) = (g, h);
    let (mut s, mut t) = (z_from_modp(&s), z_from_modp(&t));
    let mut m = p.clone();
    for _ in 0..doublings {
        let m2 = &m * &m;
        // Gathen & Gerhard, quadratic Hensel step.
        let e = z_mod(&z_sub(f, &z_mul(&g, &h)), &m2);
        let (q, r) = z_divrem_monic(&z_mod(&z_mul(&s, &e), &m2), &h);
        let g_new = z_mod(&z_add(&z_add(&g, &z_mul(&t, &e)), &z_mul(&q, &g)), &m2);
        let h_new = z_mod(&z_add(&h, &r), &m2);
        let b = z_mod(&z_sub(&z_add(&z_mul(&s, &g_new), &z_mul(&t, &h_new)), &[BigInt::one()]), &m2);
        let (c, d) = z_divrem_monic(&z_mod(&z_mul(&s, &b), &m2), &h_new);
        s = z_mod(&z_sub(&s, &d), &m2);
        t = z_mod(&z_sub(&z_sub(&t, &z_mul(&t, &b)), &z_mul(&c, &g_new)), &m2);
        g = g_new;
        h = h_new;
        m = m2;
    }
    (g, h)
}

fn primitive_part(a: ZPoly) -> ZPoly {
    let mut content = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if a.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    a.iter().map(|c| c / &content).collect()
}

/// Classic subset recombination of lifted monic factors.
fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut matched = None;
        for subset in Combinations::new(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            // Cheap constant-term screen before forming the full product.
            let c0 = subset.iter().fold(lc.clone(), |acc, &i| (acc * &lifted[i][0]).mod_floor(modulus));
            let c0 = z_symmetric(&[c0], modulus).pop().unwrap_or_default();
            let f0 = &f[0] * &lc;
            if c0.is_zero() != f0.is_zero() || (!c0.is_zero() && !(&f0 % &c0).is_zero()) {
                continue;
            }
            let prod = subset.iter().fold(vec![lc], |acc, &i| z_mod(&z_mul(&acc, &lifted[i]), modulus));
            let cand = primitive_part(z_symmetric(&prod, modulus));
            if let Some(q) = z_exact_div(&f, &cand) {
                matched = Some((subset, cand, q));
                break;
            }
        }
        match matched {
            Some((subset, cand, q)) => {
                found.push(cand);
                f = q;
                lifted = lifted.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, g)| g).collect();
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(primitive_part(f));
    }
    found
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
