//! Rooted-tree combinatorics: planar trees with decorated vertices and
//! labeled leaves, grafting, enumeration, unshuffles, and permutation signs.
//!
//! Trees are stored planar. Symmetric-operad elements are planar trees with
//! a leaf labeling; [`DecoratedTree::canonicalize`] sorts the children of
//! every antisymmetric vertex by least leaf label while accumulating the
//! sign of each adjacent swap, which gives a unique normal form for
//! equality testing.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{weighted_inversions, Scalar};

/// Whether a generator is a non-symmetric (planar) operation or a graded
/// antisymmetric one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symmetry {
    Planar,
    Antisymmetric,
}

/// An abstract n-ary operation decorating tree vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub arity: usize,
    pub degree: i64,
    pub symmetry: Symmetry,
}

impl Generator {
    pub fn planar(arity: usize, degree: i64) -> Self {
        Generator {
            arity,
            degree,
            symmetry: Symmetry::Planar,
        }
    }

    pub fn antisymmetric(arity: usize, degree: i64) -> Self {
        Generator {
            arity,
            degree,
            symmetry: Symmetry::Antisymmetric,
        }
    }

    /// Display name: `mu{n}` for planar generators, `l{n}` for
    /// antisymmetric ones.
    pub fn label(&self) -> String {
        match self.symmetry {
            Symmetry::Planar => format!("mu{}", self.arity),
            Symmetry::Antisymmetric => format!("l{}", self.arity),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TreeNode {
    /// A leaf carrying its input label.
    Leaf(usize),
    /// An internal vertex; the child count always equals the generator
    /// arity.
    Vertex(Generator, Vec<TreeNode>),
}

impl TreeNode {
    pub fn leaf_count(&self) -> usize {
        match self {
            TreeNode::Leaf(_) => 1,
            TreeNode::Vertex(_, ch) => ch.iter().map(|c| c.leaf_count()).sum(),
        }
    }

    /// Sum of generator degrees in this subtree.
    pub fn degree(&self) -> i64 {
        match self {
            TreeNode::Leaf(_) => 0,
            TreeNode::Vertex(g, ch) => g.degree + ch.iter().map(|c| c.degree()).sum::<i64>(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            TreeNode::Leaf(_) => 0,
            TreeNode::Vertex(_, ch) => 1 + ch.iter().map(|c| c.vertex_count()).sum::<usize>(),
        }
    }

    fn min_leaf(&self) -> usize {
        match self {
            TreeNode::Leaf(l) => *l,
            TreeNode::Vertex(_, ch) => ch.iter().map(|c| c.min_leaf()).min().unwrap(),
        }
    }

    fn collect_labels(&self, out: &mut Vec<usize>) {
        match self {
            TreeNode::Leaf(l) => out.push(*l),
            TreeNode::Vertex(_, ch) => ch.iter().for_each(|c| c.collect_labels(out)),
        }
    }

    fn map_labels(&self, f: &impl Fn(usize) -> usize) -> TreeNode {
        match self {
            TreeNode::Leaf(l) => TreeNode::Leaf(f(*l)),
            TreeNode::Vertex(g, ch) => {
                TreeNode::Vertex(*g, ch.iter().map(|c| c.map_labels(f)).collect())
            }
        }
    }
}

/// A rooted tree with ordered leaves and decorated internal vertices, every
/// vertex of arity ≥ 2. Leaf labels are a permutation of `1..=n`; planar
/// (non-symmetric) trees keep the identity labeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DecoratedTree {
    root: TreeNode,
}

impl DecoratedTree {
    /// The tree with a single leaf and no vertices.
    pub fn trivial() -> Self {
        DecoratedTree {
            root: TreeNode::Leaf(1),
        }
    }

    /// A single vertex with bare leaves `1..=arity`.
    pub fn corolla(gen: Generator) -> Self {
        assert!(gen.arity >= 2, "corolla arity must be at least 2");
        DecoratedTree {
            root: TreeNode::Vertex(gen, (1..=gen.arity).map(TreeNode::Leaf).collect()),
        }
    }

    pub fn from_node(root: TreeNode) -> Self {
        let t = DecoratedTree { root };
        debug_assert!(t.is_well_formed(), "malformed tree {t:?}");
        t
    }

    pub fn root(&self) -> &TreeNode {
        &self.root
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaf_count()
    }

    /// Sum of the vertex generator degrees.
    pub fn degree(&self) -> i64 {
        self.root.degree()
    }

    pub fn vertex_count(&self) -> usize {
        self.root.vertex_count()
    }

    /// Leaf labels read left to right.
    pub fn leaf_labels(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.root.collect_labels(&mut out);
        out
    }

    /// True when every vertex arity matches its child count and the leaf
    /// labels form a bijection onto `1..=n`.
    pub fn is_well_formed(&self) -> bool {
        fn arity_ok(node: &TreeNode) -> bool {
            match node {
                TreeNode::Leaf(_) => true,
                TreeNode::Vertex(g, ch) => {
                    g.arity == ch.len() && g.arity >= 2 && ch.iter().all(arity_ok)
                }
            }
        }
        let labels: BTreeSet<usize> = self.leaf_labels().into_iter().collect();
        arity_ok(&self.root)
            && labels.len() == self.leaf_count()
            && labels == (1..=self.leaf_count()).collect()
    }

    /// Operadic composition: replaces the leaf labeled `slot` by `inner`.
    /// Labels re-index so the result is labeled by `1..=n+m-1`: inner
    /// labels shift up by `slot - 1` and outer labels above `slot` shift
    /// up by `m - 1`.
    pub fn graft(&self, slot: usize, inner: &DecoratedTree) -> Result<DecoratedTree> {
        let n = self.leaf_count();
        if slot < 1 || slot > n {
            return Err(Error::SlotOutOfRange { slot, max: n });
        }
        let m = inner.leaf_count();
        let shifted_inner = inner.root.map_labels(&|l| l + slot - 1);
        fn plug(node: &TreeNode, slot: usize, m: usize, inner: &TreeNode) -> TreeNode {
            match node {
                TreeNode::Leaf(l) if *l == slot => inner.clone(),
                TreeNode::Leaf(l) if *l > slot => TreeNode::Leaf(l + m - 1),
                TreeNode::Leaf(l) => TreeNode::Leaf(*l),
                TreeNode::Vertex(g, ch) => {
                    TreeNode::Vertex(*g, ch.iter().map(|c| plug(c, slot, m, inner)).collect())
                }
            }
        }
        Ok(DecoratedTree {
            root: plug(&self.root, slot, m, &shifted_inner),
        })
    }

    /// Applies a relabeling `l ↦ perm[l-1]` to every leaf.
    pub fn relabel(&self, perm: &[usize]) -> DecoratedTree {
        DecoratedTree {
            root: self.root.map_labels(&|l| perm[l - 1]),
        }
    }

    /// Normal form for symmetric-operad elements: recursively sorts the
    /// children of every antisymmetric vertex by least leaf label. Each
    /// adjacent swap of subtrees `s`, `t` contributes the sign
    /// `-(-1)^(|s||t|)` (sign representation times the Koszul factor on
    /// the subtree degrees). Planar vertices keep their child order.
    /// Returns the canonical tree and the accumulated sign.
    pub fn canonicalize(&self) -> (DecoratedTree, Scalar) {
        fn canon(node: &TreeNode) -> (TreeNode, i64) {
            match node {
                TreeNode::Leaf(l) => (TreeNode::Leaf(*l), 0),
                TreeNode::Vertex(g, ch) => {
                    let mut exp = 0i64;
                    let mut kids: Vec<TreeNode> = Vec::with_capacity(ch.len());
                    for c in ch {
                        let (cc, e) = canon(c);
                        exp += e;
                        kids.push(cc);
                    }
                    if g.symmetry == Symmetry::Antisymmetric {
                        let n = kids.len();
                        for pass in 0..n {
                            for k in 0..n - 1 - pass {
                                if kids[k].min_leaf() > kids[k + 1].min_leaf() {
                                    exp += 1 + kids[k].degree() * kids[k + 1].degree();
                                    kids.swap(k, k + 1);
                                }
                            }
                        }
                    }
                    (TreeNode::Vertex(*g, kids), exp)
                }
            }
        }
        let (root, exp) = canon(&self.root);
        (DecoratedTree { root }, Scalar::sign(exp))
    }

    /// Compact one-line rendering, e.g. `mu2(mu2(1,2),3)`.
    pub fn compact(&self) -> String {
        fn render(node: &TreeNode, out: &mut String) {
            match node {
                TreeNode::Leaf(l) => out.push_str(&l.to_string()),
                TreeNode::Vertex(g, ch) => {
                    out.push_str(&g.label());
                    out.push('(');
                    for (k, c) in ch.iter().enumerate() {
                        if k > 0 {
                            out.push(',');
                        }
                        render(c, out);
                    }
                    out.push(')');
                }
            }
        }
        let mut s = String::new();
        render(&self.root, &mut s);
        s
    }

    /// Indented ASCII rendering used by the report output.
    pub fn pretty(&self) -> String {
        fn render(node: &TreeNode, prefix: &str, is_last: bool, is_root: bool, out: &mut String) {
            let connector = if is_root {
                String::new()
            } else if is_last {
                format!("{prefix}`- ")
            } else {
                format!("{prefix}+- ")
            };
            match node {
                TreeNode::Leaf(l) => {
                    out.push_str(&format!("{connector}{l}\n"));
                }
                TreeNode::Vertex(g, ch) => {
                    out.push_str(&format!("{connector}{}\n", g.label()));
                    let child_prefix = if is_root {
                        String::new()
                    } else if is_last {
                        format!("{prefix}   ")
                    } else {
                        format!("{prefix}|  ")
                    };
                    for (k, c) in ch.iter().enumerate() {
                        render(c, &child_prefix, k + 1 == ch.len(), false, out);
                    }
                }
            }
        }
        let mut s = String::new();
        render(&self.root, "", true, true, &mut s);
        s
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

/// All compositions of `n` into `k` positive parts, lexicographic.
pub(crate) fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            acc.push(n);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for first in 1..=n - (k - 1) {
            acc.push(first);
            go(n - first, k - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && n >= k {
        go(n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Enumerates all planar trees with `n` ordered leaves (identity labeling)
/// whose vertices are decorated from `gens`, each tree exactly once, in a
/// deterministic leftmost-first order.
pub fn enumerate_trees(n: usize, gens: &[Generator]) -> Vec<DecoratedTree> {
    assert!(n >= 1, "trees need at least one leaf");
    fn go(n: usize, start: usize, gens: &[Generator]) -> Vec<TreeNode> {
        let mut out = Vec::new();
        if n == 1 {
            out.push(TreeNode::Leaf(start));
            return out;
        }
        for g in gens {
            if g.arity < 2 || g.arity > n {
                continue;
            }
            for parts in compositions(n, g.arity) {
                let mut offsets = Vec::with_capacity(parts.len());
                let mut off = start;
                for p in &parts {
                    offsets.push(off);
                    off += p;
                }
                let child_lists: Vec<Vec<TreeNode>> = parts
                    .iter()
                    .zip(&offsets)
                    .map(|(&p, &o)| go(p, o, gens))
                    .collect();
                let mut pick = vec![0usize; parts.len()];
                'product: loop {
                    let children: Vec<TreeNode> = pick
                        .iter()
                        .enumerate()
                        .map(|(m, &c)| child_lists[m][c].clone())
                        .collect();
                    out.push(TreeNode::Vertex(*g, children));
                    for m in (0..pick.len()).rev() {
                        pick[m] += 1;
                        if pick[m] < child_lists[m].len() {
                            continue 'product;
                        }
                        pick[m] = 0;
                    }
                    break;
                }
            }
        }
        out
    }
    go(n, 1, gens)
        .into_iter()
        .map(|root| DecoratedTree { root })
        .collect()
}

/// Enumerates canonical representatives of labeled trees for a symmetric
/// family: every planar shape combined with every leaf labeling,
/// canonicalized and deduplicated. Deterministic ascending order.
pub fn enumerate_labeled_trees(n: usize, gens: &[Generator]) -> Vec<DecoratedTree> {
    let shapes = enumerate_trees(n, gens);
    let mut seen: BTreeSet<DecoratedTree> = BTreeSet::new();
    for shape in &shapes {
        for perm in permutations(n) {
            let (canon, _) = shape.relabel(&perm).canonicalize();
            seen.insert(canon);
        }
    }
    seen.into_iter().collect()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            acc.push(v);
            go(rest, acc, out);
            acc.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// An `(i, n-i)`-unshuffle: a permutation increasing on the first `i` and
/// on the last `n-i` positions, in one-line notation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Unshuffle {
    pub perm: Vec<usize>,
    pub block: usize,
}

/// All `(i, n-i)`-unshuffles of `1..=n` in lexicographic order; there are
/// exactly `binomial(n, i)` of them.
pub fn unshuffles(i: usize, n: usize) -> Result<Vec<Unshuffle>> {
    if i < 1 || i >= n {
        return Err(Error::BadUnshuffleBlock { i, n, max: n.saturating_sub(1) });
    }
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (1..=i).collect();
    loop {
        let chosen: BTreeSet<usize> = subset.iter().copied().collect();
        let mut perm = subset.clone();
        perm.extend((1..=n).filter(|k| !chosen.contains(k)));
        out.push(Unshuffle { perm, block: i });
        // next i-subset in lexicographic order
        let mut k = i;
        while k > 0 && subset[k - 1] == n - (i - k) {
            k -= 1;
        }
        if k == 0 {
            break;
        }
        subset[k - 1] += 1;
        for m in k..i {
            subset[m] = subset[m - 1] + 1;
        }
    }
    Ok(out)
}

/// The plain signature of a permutation in one-line notation.
pub fn permutation_sign(perm: &[usize]) -> Scalar {
    let degrees = vec![0i64; perm.len()];
    let (inv, _) = weighted_inversions(perm, &degrees);
    Scalar::sign(inv as i64)
}

/// The Koszul sign of rearranging graded arguments
/// `x_1 ⊗ … ⊗ x_n ↦ x_{σ(1)} ⊗ … ⊗ x_{σ(n)}`: every crossing pair
/// contributes the product of the degrees it transposes.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> Scalar {
    let (_, kos) = weighted_inversions(perm, degrees);
    Scalar::sign(kos)
}

/// χ(σ) = sgn(σ) · Koszul sign, the antisymmetric-family sign.
pub fn chi(perm: &[usize], degrees: &[i64]) -> Scalar {
    let (inv, kos) = weighted_inversions(perm, degrees);
    Scalar::sign(inv as i64 + kos)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(n: usize) -> Generator {
        Generator::planar(n, n as i64 - 2)
    }

    fn ell(n: usize) -> Generator {
        Generator::antisymmetric(n, n as i64 - 2)
    }

    #[test]
    fn graft_builds_the_left_comb() {
        let c2 = DecoratedTree::corolla(mu(2));
        let comb = c2.graft(1, &c2).unwrap();
        assert_eq!(comb.compact(), "mu2(mu2(1,2),3)");
        assert_eq!(comb.leaf_count(), 3);
        assert_eq!(comb.leaf_labels(), vec![1, 2, 3]);
    }

    #[test]
    fn graft_with_trivial_tree_is_identity() {
        let t = DecoratedTree::corolla(mu(3))
            .graft(2, &DecoratedTree::corolla(mu(2)))
            .unwrap();
        for slot in 1..=t.leaf_count() {
            assert_eq!(t.graft(slot, &DecoratedTree::trivial()).unwrap(), t);
        }
    }

    #[test]
    fn graft_at_second_slot_of_three_corolla() {
        let t = DecoratedTree::corolla(mu(3))
            .graft(2, &DecoratedTree::corolla(mu(2)))
            .unwrap();
        assert_eq!(t.compact(), "mu3(1,mu2(2,3),4)");
    }

    #[test]
    fn graft_slot_out_of_range() {
        let c2 = DecoratedTree::corolla(mu(2));
        assert!(c2.graft(3, &c2).is_err());
        assert!(c2.graft(0, &c2).is_err());
    }

    #[test]
    fn operadic_associativity_of_graft() {
        let ts: Vec<DecoratedTree> = enumerate_trees(3, &[mu(2), mu(3)]);
        for t in &ts {
            for s in &ts {
                for u in &ts {
                    for i in 1..=t.leaf_count() {
                        // nested: (t ∘_i s) ∘_{i-1+k} u == t ∘_i (s ∘_k u)
                        for k in 1..=s.leaf_count() {
                            let lhs = t.graft(i, s).unwrap().graft(i - 1 + k, u).unwrap();
                            let rhs = t.graft(i, &s.graft(k, u).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                        // disjoint, i < j: grafting order does not matter
                        for j in i + 1..=t.leaf_count() {
                            let lhs = t.graft(j, s).unwrap().graft(i, u).unwrap();
                            let rhs = t
                                .graft(i, u)
                                .unwrap()
                                .graft(j + u.leaf_count() - 1, s)
                                .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tree_enumeration_counts() {
        // planar binary trees: Catalan numbers
        let catalan = [1usize, 1, 2, 5, 14, 42, 132];
        for n in 1..=7 {
            assert_eq!(enumerate_trees(n, &[mu(2)]).len(), catalan[n - 1], "n = {n}");
        }
        // all arities: little Schröder numbers from the independent
        // recurrence t·s_t = 3(2t-3)·s_{t-1} - (t-3)·s_{t-2}
        let mut schroeder: Vec<i64> = vec![1, 1, 1]; // index 0 unused
        for t in 3..=6i64 {
            let s = (3 * (2 * t - 3) * schroeder[t as usize - 1]
                - (t - 3) * schroeder[t as usize - 2])
                / t;
            schroeder.push(s);
        }
        assert_eq!(schroeder, vec![1, 1, 1, 3, 11, 45, 197]);
        for n in 1..=6usize {
            let gens: Vec<Generator> = (2..=n.max(2)).map(mu).collect();
            assert_eq!(enumerate_trees(n, &gens).len() as i64, schroeder[n], "n = {n}");
        }
        // n = 3 with arities {2,3}: the corolla plus the two binary trees
        assert_eq!(enumerate_trees(3, &[mu(2), mu(3)]).len(), 3);
        // n = 4 with arities {2,3,4}: the pentagon's 5 + 5 + 1 cells
        assert_eq!(enumerate_trees(4, &[mu(2), mu(3), mu(4)]).len(), 11);
        // n = 1: the bare leaf
        assert_eq!(enumerate_trees(1, &[mu(2)]).len(), 1);
    }

    #[test]
    fn trees_enumerated_once_and_well_formed() {
        let gens: Vec<Generator> = (2..=5).map(mu).collect();
        let ts = enumerate_trees(5, &gens);
        let set: BTreeSet<_> = ts.iter().cloned().collect();
        assert_eq!(set.len(), ts.len());
        assert!(ts.iter().all(|t| t.is_well_formed()));
        assert!(ts.iter().all(|t| t.leaf_count() == 5));
    }

    #[test]
    fn unshuffle_counts_and_completeness() {
        assert_eq!(unshuffles(2, 3).unwrap().len(), 3);
        assert_eq!(unshuffles(2, 4).unwrap().len(), 6);
        assert_eq!(unshuffles(3, 4).unwrap().len(), 4);
        for n in 2..=6 {
            assert_eq!(unshuffles(1, n).unwrap().len(), n);
            for i in 1..n {
                let us = unshuffles(i, n).unwrap();
                // independent oracle: filter all permutations
                let brute: Vec<Vec<usize>> = permutations(n)
                    .into_iter()
                    .filter(|p| {
                        p[..i].windows(2).all(|w| w[0] < w[1])
                            && p[i..].windows(2).all(|w| w[0] < w[1])
                    })
                    .collect();
                let got: Vec<Vec<usize>> = us.iter().map(|u| u.perm.clone()).collect();
                assert_eq!(got, brute, "({i},{})-unshuffles", n - i);
            }
        }
        assert!(unshuffles(0, 3).is_err());
        assert!(unshuffles(3, 3).is_err());
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(chi(&[1, 2, 3], &[5, -2, 7]), Scalar::one());
        // transposition of two degree-0 arguments: sgn = -1, Koszul = +1
        assert_eq!(permutation_sign(&[2, 1]), Scalar::from_int(-1));
        assert_eq!(koszul_sign(&[2, 1], &[0, 0]), Scalar::one());
        assert_eq!(chi(&[2, 1], &[0, 0]), Scalar::from_int(-1));
        // transposition of two odd-degree arguments: sgn = -1, Koszul = -1
        assert_eq!(koszul_sign(&[2, 1], &[1, 3]), Scalar::from_int(-1));
        assert_eq!(chi(&[2, 1], &[1, 3]), Scalar::one());
    }

    #[test]
    fn chi_is_multiplicative() {
        // applying τ then σ composes to k ↦ τ(σ(k)); the χ-signs multiply
        // with σ reading the τ-permuted degrees
        let degrees: Vec<Vec<i64>> = vec![vec![0, 1, 2, 1], vec![1, 1, 1, 1], vec![3, 0, 2, 5]];
        for sigma in permutations(4) {
            for tau in permutations(4) {
                for degs in &degrees {
                    let composed: Vec<usize> = sigma.iter().map(|&k| tau[k - 1]).collect();
                    let tau_degs: Vec<i64> = tau.iter().map(|&k| degs[k - 1]).collect();
                    let lhs = chi(&composed, degs);
                    let rhs = chi(&sigma, &tau_degs) * chi(&tau, degs);
                    assert_eq!(lhs, rhs, "σ = {sigma:?}, τ = {tau:?}, degs = {degs:?}");
                }
            }
        }
    }

    #[test]
    fn canonicalization_of_antisymmetric_vertices() {
        // l2(l2(2,3),1) normalizes to -l2(1,l2(2,3)) for degree-0 subtrees
        let inner = TreeNode::Vertex(
            Generator::antisymmetric(2, 0),
            vec![TreeNode::Leaf(2), TreeNode::Leaf(3)],
        );
        let t = DecoratedTree::from_node(TreeNode::Vertex(
            Generator::antisymmetric(2, 0),
            vec![inner, TreeNode::Leaf(1)],
        ));
        let (canon, sign) = t.canonicalize();
        assert_eq!(canon.compact(), "l2(1,l2(2,3))");
        assert_eq!(sign, Scalar::from_int(-1));
        // canonical forms are stable
        let (again, s2) = canon.canonicalize();
        assert_eq!(again, canon);
        assert_eq!(s2, Scalar::one());
    }

    #[test]
    fn canonicalization_koszul_factor_for_odd_subtrees() {
        // swapping two odd-degree subtrees at an antisymmetric vertex picks
        // up -(-1)^{1·1} = +1
        let a = TreeNode::Vertex(
            ell(3),
            vec![TreeNode::Leaf(4), TreeNode::Leaf(5), TreeNode::Leaf(6)],
        );
        let b = TreeNode::Vertex(
            ell(3),
            vec![TreeNode::Leaf(1), TreeNode::Leaf(2), TreeNode::Leaf(3)],
        );
        let t = DecoratedTree::from_node(TreeNode::Vertex(ell(2), vec![a, b]));
        let (canon, sign) = t.canonicalize();
        assert_eq!(canon.compact(), "l2(l3(1,2,3),l3(4,5,6))");
        assert_eq!(sign, Scalar::one());
    }

    #[test]
    fn labeled_enumeration_collapses_antisymmetric_orbits() {
        // unordered binary labeled trees: (2n-3)!! of them
        let double_factorial = [1usize, 1, 3, 15, 105];
        for n in 2..=5 {
            let ts = enumerate_labeled_trees(n, &[ell(2)]);
            assert_eq!(ts.len(), double_factorial[n - 1], "n = {n}");
        }
    }

    #[test]
    fn pretty_printer_shape() {
        let t = DecoratedTree::corolla(mu(2))
            .graft(1, &DecoratedTree::corolla(mu(2)))
            .unwrap();
        assert_eq!(t.pretty(), "mu2\n+- mu2\n|  +- 1\n|  `- 2\n`- 3\n");
    }
}
