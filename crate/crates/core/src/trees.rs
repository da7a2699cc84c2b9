//! Rooted trees, simple cuts and grafting.
//!
//! A `RootedTree` is stored in canonical form: the child list is sorted by
//! the total order `(size, child list)` compared recursively, so structural
//! equality coincides with rooted-tree isomorphism. A `Forest` is a sorted
//! multiset of canonical trees; the empty forest is the unit monomial.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    children: Vec<RootedTree>,
    size: u32,
}

impl RootedTree {
    /// Single vertex `[]`.
    pub fn leaf() -> Self {
        RootedTree { children: Vec::new(), size: 1 }
    }

    /// Root with the given subtrees; children are sorted into canonical form.
    pub fn node(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<u32>();
        RootedTree { children, size }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    /// All trees obtained by attaching one new leaf below some vertex,
    /// listed once per vertex (so isomorphic results repeat).
    pub fn graft_all(&self) -> Vec<RootedTree> {
        let mut out = Vec::new();
        // attach at the root
        let mut grown = self.children.clone();
        grown.push(RootedTree::leaf());
        out.push(RootedTree::node(grown));
        // attach inside the i-th subtree
        for i in 0..self.children.len() {
            for sub in self.children[i].graft_all() {
                let mut cs = self.children.clone();
                cs[i] = sub;
                out.push(RootedTree::node(cs));
            }
        }
        out
    }

    /// All simple cuts, including the empty cut `(∅, self)`.
    ///
    /// A cut is simple when no root-to-vertex path contains two cut edges;
    /// it splits the tree into the cut branches and the trunk containing
    /// the root.
    pub fn simple_cuts(&self) -> Vec<(Forest, RootedTree)> {
        // Per child edge: either cut it (the whole subtree becomes a branch)
        // or keep it and recurse into the subtree.
        let mut acc: Vec<(Vec<RootedTree>, Vec<RootedTree>)> = vec![(Vec::new(), Vec::new())];
        for child in &self.children {
            let mut options: Vec<(Vec<RootedTree>, Option<RootedTree>)> =
                vec![(vec![child.clone()], None)];
            for (branch, trunk) in child.simple_cuts() {
                options.push((branch.0, Some(trunk)));
            }
            let mut next = Vec::new();
            for (branches, kept) in &acc {
                for (opt_branches, opt_trunk) in &options {
                    let mut b = branches.clone();
                    b.extend(opt_branches.iter().cloned());
                    let mut k = kept.clone();
                    if let Some(t) = opt_trunk {
                        k.push(t.clone());
                    }
                    next.push((b, k));
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|(branches, kept)| (Forest::new(branches), RootedTree::node(kept)))
            .collect()
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.children.cmp(&other.children))
    }
}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sorted multiset of canonical rooted trees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Forest(Vec<RootedTree>);

impl Forest {
    pub fn new(mut trees: Vec<RootedTree>) -> Self {
        trees.sort();
        Forest(trees)
    }

    pub fn empty() -> Self {
        Forest(Vec::new())
    }

    pub fn single(t: RootedTree) -> Self {
        Forest(vec![t])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Total vertex count, i.e. the weight of the forest monomial.
    pub fn total_size(&self) -> u32 {
        self.0.iter().map(|t| t.size()).sum()
    }

    /// Union of multisets (the product of the forest monomials).
    pub fn merge(&self, other: &Forest) -> Forest {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Forest::new(v)
    }

    /// Remove one occurrence of `t`; `None` when absent.
    pub fn remove_one(&self, t: &RootedTree) -> Option<Forest> {
        let pos = self.0.iter().position(|x| x == t)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Forest(v))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One representative per isomorphism class, all sizes `1..=max`, in
/// canonical order.
pub fn enumerate_trees(max: u32) -> Vec<RootedTree> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![Vec::new()];
    for n in 1..=max {
        let mut level = Vec::new();
        if n == 1 {
            level.push(RootedTree::leaf());
        } else {
            // choose a non-increasing multiset of previously built trees
            // with total size n-1
            let pool: Vec<RootedTree> = by_size
                .iter()
                .flatten()
                .cloned()
                .collect();
            let mut stack: Vec<(Vec<RootedTree>, usize, u32)> = vec![(Vec::new(), 0, n - 1)];
            while let Some((chosen, start, remaining)) = stack.pop() {
                if remaining == 0 {
                    level.push(RootedTree::node(chosen));
                    continue;
                }
                for (idx, t) in pool.iter().enumerate().skip(start) {
                    if t.size() <= remaining {
                        let mut c = chosen.clone();
                        c.push(t.clone());
                        stack.push((c, idx, remaining - t.size()));
                    }
                }
            }
        }
        level.sort();
        level.dedup();
        by_size.push(level);
    }
    let mut all: Vec<RootedTree> = by_size.into_iter().flatten().collect();
    all.sort();
    all
}

/// Counts of isomorphism classes by size, `1..=max`.
pub fn tree_counts(max: u32) -> Vec<usize> {
    let all = enumerate_trees(max);
    (1..=max)
        .map(|n| all.iter().filter(|t| t.size() == n).count())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> RootedTree {
        let mut t = RootedTree::leaf();
        for _ in 1..n {
            t = RootedTree::node(vec![t]);
        }
        t
    }

    #[test]
    fn counts_match_known_series() {
        assert_eq!(tree_counts(6), vec![1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn path_and_cherry_are_distinct() {
        let cherry = RootedTree::node(vec![RootedTree::leaf(), RootedTree::leaf()]);
        assert_ne!(path(3), cherry);
        assert_eq!(enumerate_trees(3).len(), 4);
    }

    #[test]
    fn cuts_of_small_trees() {
        assert_eq!(RootedTree::leaf().simple_cuts().len(), 1);

        let t2 = path(2);
        let cuts = t2.simple_cuts();
        assert_eq!(cuts.len(), 2);
        assert!(cuts.contains(&(Forest::empty(), t2.clone())));
        assert!(cuts.contains(&(Forest::single(RootedTree::leaf()), RootedTree::leaf())));

        // 3-path: empty cut, top edge, root edge; the 2-edge subset is not simple
        let p3 = path(3);
        let cuts = p3.simple_cuts();
        assert_eq!(cuts.len(), 3);
        assert!(cuts.contains(&(Forest::single(RootedTree::leaf()), path(2))));
        assert!(cuts.contains(&(Forest::single(path(2)), RootedTree::leaf())));
    }

    #[test]
    fn graft_multiplicity_sums_to_size() {
        for t in enumerate_trees(5) {
            let grown = t.graft_all();
            assert_eq!(grown.len() as u32, t.size());
            for g in grown {
                assert_eq!(g.size(), t.size() + 1);
            }
        }
    }

    #[test]
    fn display_round_trip_shape() {
        let cherry = RootedTree::node(vec![RootedTree::leaf(), RootedTree::leaf()]);
        assert_eq!(cherry.to_string(), "[[][]]");
        assert_eq!(path(3).to_string(), "[[[]]]");
    }
}
