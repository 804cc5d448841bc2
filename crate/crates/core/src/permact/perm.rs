use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A permutation of `{0, ..., n-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl core::fmt::Debug for Perm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n as u32).collect() }
    }

    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || core::mem::replace(&mut seen[i], true) {
                return Err(Error::BadInput(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Perm { images: images.into_iter().map(|i| i as u32).collect() })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self * right`: apply `right` first, then `self`.
    ///
    /// This is the only place the composition order is fixed.
    pub fn compose(&self, right: &Perm) -> Perm {
        Perm { images: right.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `c * self * c^-1`.
    pub fn conjugate_by(&self, c: &Perm) -> Perm {
        c.compose(self).compose(&c.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Nontrivial cycles, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = alloc::vec![s];
            seen[s] = true;
            let mut j = self.apply(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(core::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable();
        lens
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

/// Parse cycle notation such as `(0 1 2 3)(4 5)` into a permutation of
/// degree `n`. Commas may separate entries; `()` or the empty string is the
/// identity. Cycles are composed right to left.
pub fn parse_cycles(n: usize, s: &str) -> Result<Perm> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in `{s}`"));
    let mut acc = Perm::identity(n);
    let mut rest = s.trim();
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
        let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let inner = &body[..close];
        let pts = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("invalid point")))
            .collect::<Result<Vec<_>>>()?;
        let mut seen = alloc::vec![false; n];
        for &p in &pts {
            if p >= n {
                return Err(bad("point out of range"));
            }
            if core::mem::replace(&mut seen[p], true) {
                return Err(bad("repeated point"));
            }
        }
        cycles.push(pts);
        rest = body[close + 1..].trim_start();
    }
    for c in cycles.iter().rev() {
        let mut img: Vec<usize> = (0..n).collect();
        for (i, &p) in c.iter().enumerate() {
            img[p] = c[(i + 1) % c.len()];
        }
        acc = Perm::from_images(img)?.compose(&acc);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_order() {
        let a = parse_cycles(3, "(0 1)").unwrap();
        let b = parse_cycles(3, "(1 2)").unwrap();
        // apply b then a: 1 -> 2 -> 2, 2 -> 1 -> 0
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(parse_cycles(3, "(0 1)(1 2)").unwrap(), ab);
    }

    #[test]
    fn parse_and_print() {
        let p = parse_cycles(6, "(0 1 2 3)(4 5)").unwrap();
        assert_eq!(alloc::format!("{p:?}"), "(0 1 2 3)(4 5)");
        assert_eq!(p.cycle_type(), [2, 4]);
        assert!(p.is_even());
        assert!(parse_cycles(3, "(0 3)").is_err());
        assert!(parse_cycles(3, "(0 1 0)").is_err());
        assert!(parse_cycles(3, "(0 1").is_err());
        assert!(parse_cycles(3, "").unwrap().is_identity());
    }

    #[test]
    fn inverse_and_conjugate() {
        let p = parse_cycles(5, "(0 1 2 3 4)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        let c = parse_cycles(5, "(0 1)").unwrap();
        assert_eq!(p.conjugate_by(&c).cycle_type(), [5]);
    }
}
