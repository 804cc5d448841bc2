//! Transitive permutation groups of small degree, one per conjugacy class,
//! generated by brute force.
//!
//! Every transitive group of degree at most 7 is generated by two elements,
//! so pairs `(a, b)` with `a` a conjugacy-class representative of `S_n` and
//! `b` arbitrary reach a member of every class. For prime `n` a transitive
//! group contains an `n`-cycle, so `a` is fixed to `(0 1 ... n-1)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{is_transitive, Perm, PermGroup};

/// A materialized group together with generators.
#[derive(Debug, Clone)]
pub struct CorpusGroup {
    pub group: PermGroup,
    pub elements: Vec<Perm>,
}

impl CorpusGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn symmetric_group(n: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Perm::from_images(cur.clone()).unwrap());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn perm_of_cycle_type(n: usize, parts: &[usize]) -> Perm {
    let mut img: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in parts {
        for k in 0..len {
            img[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    Perm::from_images(img).unwrap()
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).all(|p| !n.is_multiple_of(p))
}

fn signature(elements: &[Perm]) -> (usize, Vec<(Vec<usize>, usize)>) {
    let mut hist: Vec<(Vec<usize>, usize)> = Vec::new();
    for e in elements {
        let ct = e.cycle_type();
        match hist.iter_mut().find(|(c, _)| *c == ct) {
            Some((_, k)) => *k += 1,
            None => hist.push((ct, 1)),
        }
    }
    hist.sort();
    (elements.len(), hist)
}

/// Is there `c` in `S_n` with `c G c^-1 = H`?
pub fn are_conjugate(g: &CorpusGroup, h: &CorpusGroup, sym: &[Perm]) -> bool {
    g.order() == h.order()
        && sym.iter().any(|c| g.group.generators().iter().all(|x| h.contains(&x.conjugate_by(c))))
}

/// Is some conjugate of `small` contained in `big`?
pub fn embeds_in(small: &CorpusGroup, big: &CorpusGroup, sym: &[Perm]) -> bool {
    big.order().is_multiple_of(small.order())
        && sym.iter().any(|c| small.group.generators().iter().all(|x| big.contains(&x.conjugate_by(c))))
}

/// One transitive group of degree `n` per conjugacy class in `S_n`.
pub fn transitive_groups(n: usize) -> Vec<CorpusGroup> {
    assert!((1..=7).contains(&n), "corpus covers degrees 1..=7");
    let sym = symmetric_group(n);
    let firsts: Vec<Perm> = if is_prime(n) {
        alloc::vec![perm_of_cycle_type(n, &[n])]
    } else {
        partitions(n, n).iter().map(|p| perm_of_cycle_type(n, p)).collect()
    };
    let mut seen: BTreeSet<Vec<Perm>> = BTreeSet::new();
    let mut classes: Vec<(CorpusGroup, (usize, Vec<(Vec<usize>, usize)>))> = Vec::new();
    for a in &firsts {
        for b in &sym {
            let group = PermGroup::new(n, alloc::vec![a.clone(), b.clone()]).unwrap();
            if !is_transitive(&group) {
                continue;
            }
            let elements = group.elements().unwrap();
            if !seen.insert(elements.clone()) {
                continue;
            }
            let cand = CorpusGroup { group, elements };
            let sig = signature(&cand.elements);
            let dup = classes.iter().any(|(g, s)| *s == sig && are_conjugate(&cand, g, &sym));
            if !dup {
                classes.push((cand, sig));
            }
        }
    }
    let mut out: Vec<CorpusGroup> = classes.into_iter().map(|(g, _)| g).collect();
    out.sort_by_key(CorpusGroup::order);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_helpers() {
        assert_eq!(symmetric_group(4).len(), 24);
        assert_eq!(partitions(5, 5).len(), 7);
        assert_eq!(perm_of_cycle_type(5, &[3, 2]).cycle_type(), [2, 3]);
    }

    #[test]
    fn small_degree_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| transitive_groups(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 5]);
    }
}
