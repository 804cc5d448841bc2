//! Permutation groups acting on `{0, ..., n-1}`: orbits, block systems,
//! primitivity and the stabilizer characterization of primitivity.
//!
//! Groups are small; they are materialized by breadth-first closure up to
//! an order cap.

pub mod corpus;
mod perm;

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::{Error, Result};

pub use perm::{parse_cycles, Perm};

/// Default cap on the order of a materialized group.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::BadInput("degree must be positive".into()));
        }
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::BadInput("generator degree mismatch".into()));
        }
        Ok(PermGroup { degree, generators })
    }

    /// Parse generators in cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|g| parse_cycles(degree, g)).collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_under(self.degree, &self.generators, point)
    }

    /// All elements, sorted, or `GroupTooLarge` once more than `cap` are found.
    pub fn elements_capped(&self, cap: usize) -> Result<Vec<Perm>> {
        let id = Perm::identity(self.degree);
        let mut seen = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn elements(&self) -> Result<Vec<Perm>> {
        self.elements_capped(DEFAULT_ORDER_CAP)
    }
}

fn orbit_under(n: usize, gens: &[Perm], point: usize) -> Vec<usize> {
    let mut seen = alloc::vec![false; n];
    seen[point] = true;
    let mut stack = alloc::vec![point];
    let mut out = alloc::vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
                out.push(y);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_transitive(g: &PermGroup) -> bool {
    g.orbit(0).len() == g.degree
}

/// A partition of the point set into blocks of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    /// Blocks sorted internally and by least element.
    pub partition: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.partition[0].len()
    }

    /// True if every generator maps every block onto a block.
    pub fn is_stable_under(&self, g: &PermGroup) -> bool {
        let mut label = alloc::vec![0; g.degree];
        for (i, b) in self.partition.iter().enumerate() {
            for &x in b {
                label[x] = i;
            }
        }
        g.generators.iter().all(|s| {
            self.partition.iter().all(|b| {
                let l = label[s.apply(b[0])];
                b.iter().all(|&x| label[s.apply(x)] == l)
            })
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The finest block system in which `a` and `b` share a block.
fn block_system_joining(g: &PermGroup, a: usize, b: usize) -> BlockSystem {
    let n = g.degree;
    let mut uf = UnionFind::new(n);
    uf.union(a, b);
    let mut queue = alloc::vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        for s in &g.generators {
            let (sx, sy) = (s.apply(x), s.apply(y));
            if uf.union(sx, sy) {
                queue.push((sx, sy));
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut index = alloc::vec![usize::MAX; n];
    for x in 0..n {
        let r = uf.find(x);
        if index[r] == usize::MAX {
            index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[r]].push(x);
    }
    BlockSystem { partition: blocks }
}

/// A minimal nontrivial block system, or `None` when the action is primitive.
///
/// Tries every pair `{seed, b}` and keeps the system with the smallest blocks
/// (ties broken by the smallest `b`).
pub fn minimal_blocks(g: &PermGroup, seed: usize) -> Result<Option<BlockSystem>> {
    if !is_transitive(g) {
        return Err(Error::NotTransitive);
    }
    if seed >= g.degree {
        return Err(Error::BadInput("seed out of range".into()));
    }
    let mut best: Option<BlockSystem> = None;
    for b in (0..g.degree).filter(|&b| b != seed) {
        let sys = block_system_joining(g, seed, b);
        if sys.partition.len() == 1 {
            continue;
        }
        if best.as_ref().is_none_or(|cur| sys.block_size() < cur.block_size()) {
            best = Some(sys);
        }
    }
    Ok(best)
}

pub fn is_primitive_action(g: &PermGroup) -> Result<bool> {
    Ok(minimal_blocks(g, 0)?.is_none())
}

/// Checks that the stabilizer of a point is a maximal subgroup exactly when
/// the action is primitive.
///
/// For every `h` outside `Stab(0)`, the subgroup `H = <Stab(0), h>` contains
/// `Stab(0)` as its own point stabilizer, so `|H| = |H.0| |Stab(0)|` and `H`
/// is proper iff the orbit of 0 under `Stab(0)` and `h` is not everything.
pub fn verify_stabilizer_lemma(g: &PermGroup) -> Result<bool> {
    verify_stabilizer_lemma_capped(g, DEFAULT_ORDER_CAP)
}

pub fn verify_stabilizer_lemma_capped(g: &PermGroup, cap: usize) -> Result<bool> {
    if !is_transitive(g) {
        return Err(Error::NotTransitive);
    }
    let elems = g.elements_capped(cap)?;
    let n = g.degree;
    let stab: Vec<&Perm> = elems.iter().filter(|e| e.apply(0) == 0).collect();
    debug_assert_eq!(stab.len() * n, elems.len());
    let stab_gens: Vec<Perm> = stab.iter().map(|p| (*p).clone()).collect();
    let mut intermediate = false;
    for h in elems.iter().filter(|e| e.apply(0) != 0) {
        let mut gens = stab_gens.clone();
        gens.push(h.clone());
        if orbit_under(n, &gens, 0).len() < n {
            intermediate = true;
            break;
        }
    }
    let primitive = is_primitive_action(g)?;
    Ok(intermediate == !primitive)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&grp(4, &["(0 1 2 3)"])));
        assert!(!is_transitive(&grp(3, &["(0 1)"])));
        assert!(is_transitive(&grp(4, &["(0 1)", "(0 1 2 3)"])));
    }

    #[test]
    fn dihedral_blocks() {
        let d4 = grp(4, &["(0 1 2 3)", "(0 2)"]);
        let b = minimal_blocks(&d4, 0).unwrap().unwrap();
        assert_eq!(b.partition, [[0, 2], [1, 3]]);
        assert!(b.is_stable_under(&d4));
        assert!(verify_stabilizer_lemma(&d4).unwrap());
    }

    #[test]
    fn alternating_four_is_primitive() {
        let a4 = grp(4, &["(0 1 2)", "(1 2 3)"]);
        assert_eq!(minimal_blocks(&a4, 0).unwrap(), None);
        assert!(verify_stabilizer_lemma(&a4).unwrap());
    }

    #[test]
    fn cyclic_six() {
        let c6 = grp(6, &["(0 1 2 3 4 5)"]);
        let b = minimal_blocks(&c6, 0).unwrap().unwrap();
        assert!(b.block_size() == 2 || b.block_size() == 3);
        assert!(verify_stabilizer_lemma(&c6).unwrap());
        assert!(!is_primitive_action(&grp(4, &["(0 1 2 3)"])).unwrap());
    }

    #[test]
    fn symmetric_groups() {
        assert!(is_primitive_action(&grp(5, &["(0 1)", "(0 1 2 3 4)"])).unwrap());
        assert!(is_primitive_action(&grp(2, &["(0 1)"])).unwrap());
        assert_eq!(grp(5, &["(0 1)", "(0 1 2 3 4)"]).elements().unwrap().len(), 120);
    }

    #[test]
    fn errors() {
        assert_eq!(minimal_blocks(&grp(3, &["(0 1)"]), 0), Err(Error::NotTransitive));
        let s5 = grp(5, &["(0 1)", "(0 1 2 3 4)"]);
        assert_eq!(verify_stabilizer_lemma_capped(&s5, 10), Err(Error::GroupTooLarge(10)));
    }
}
