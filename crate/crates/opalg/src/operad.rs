//! Free differential graded operads.
//!
//! The two families built here are the minimal models governing strongly
//! homotopy associative algebras (one planar generator `mu_n` of degree
//! `n-2` per arity) and strongly homotopy Lie algebras (one antisymmetric
//! generator `l_n` of degree `n-2` per arity). The differential is given on
//! generators, extends as a derivation, and squares to zero — which
//! [`check_d_squared`] verifies symbolically, arity by arity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{GradedMap, GradedSpace, Mat, Scalar};
use crate::report::{CheckLine, Report};
use crate::trees::{
    enumerate_labeled_trees, enumerate_trees, permutation_sign, permutations, unshuffles,
    DecoratedTree, TreeNode,
};

pub use crate::trees::{Generator, Symmetry};

/// A finite exact-rational linear combination of decorated trees, all with
/// the same leaf count and the same total degree. Trees are kept in
/// canonical form, so equality of elements is map equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeElement {
    leaves: usize,
    terms: BTreeMap<DecoratedTree, Scalar>,
}

impl FreeElement {
    pub fn zero(leaves: usize) -> Self {
        FreeElement {
            leaves,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(tree: DecoratedTree) -> Self {
        let mut e = FreeElement::zero(tree.leaf_count());
        e.add_term(tree, Scalar::one());
        e
    }

    /// Adds `coeff · tree`, canonicalizing the tree first and dropping the
    /// term if it cancels.
    pub fn add_term(&mut self, tree: DecoratedTree, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        assert_eq!(
            tree.leaf_count(),
            self.leaves,
            "all trees of an element share the leaf count"
        );
        let (canon, sign) = tree.canonicalize();
        if let Some((existing, _)) = self.terms.first_key_value() {
            assert_eq!(
                existing.degree(),
                canon.degree(),
                "elements must be degree-homogeneous"
            );
        }
        let c = coeff * sign;
        let slot = self.terms.entry(canon.clone()).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&canon);
        }
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        assert_eq!(self.leaves, other.leaves);
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero(self.leaves);
        }
        FreeElement {
            leaves: self.leaves,
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    /// Common degree of the terms; `None` for the zero element.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next().map(|t| t.degree())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DecoratedTree, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, tree: &DecoratedTree) -> Scalar {
        self.terms.get(tree).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Relabels every leaf through `perm` and recanonicalizes.
    pub fn relabel(&self, perm: &[usize]) -> FreeElement {
        let mut out = FreeElement::zero(self.leaves);
        for (t, c) in &self.terms {
            out.add_term(t.relabel(perm), c.clone());
        }
        out
    }
}

impl std::fmt::Display for FreeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{t}")?;
        }
        Ok(())
    }
}

/// The generator of arity `n` for the homotopy associative family.
pub fn mu(n: usize) -> Generator {
    Generator::planar(n, n as i64 - 2)
}

/// The generator of arity `n` for the homotopy Lie family.
pub fn ell(n: usize) -> Generator {
    Generator::antisymmetric(n, n as i64 - 2)
}

/// Differential of the arity-`n` planar generator: the sum over inner/outer
/// splittings `i + j = n + 1` (both ≥ 2) and slots `s + 1` of
/// `(-1)^(j + s(j+1)) · mu_i ∘_{s+1} mu_j`. The argument-degree part of the
/// axiom sign lives in the action on elements, not here.
pub fn ainf_generator_diff(n: usize) -> Result<FreeElement> {
    if n < 2 {
        return Err(Error::ArityTooSmall(n));
    }
    let mut out = FreeElement::zero(n);
    for j in 2..=n.saturating_sub(1) {
        let i = n + 1 - j;
        let outer = DecoratedTree::corolla(mu(i));
        let inner = DecoratedTree::corolla(mu(j));
        for s in 0..=(i - 1) {
            let tree = outer.graft(s + 1, &inner)?;
            let sign = Scalar::sign((j + s * (j + 1)) as i64);
            out.add_term(tree, sign);
        }
    }
    Ok(out)
}

/// Differential of the arity-`n` antisymmetric generator: the sum over
/// `i + j = n + 1` (both ≥ 2) and all `(i, n-i)`-unshuffles σ of
/// `sgn(σ) (-1)^(i(j-1)) · l_j ∘_1 l_i`, with the leaves relabeled through
/// σ, an overall factor `(-1)^n`, and each term canonicalized. The Koszul
/// part of χ(σ) appears when the element acts on graded arguments.
pub fn linf_generator_diff(n: usize) -> Result<FreeElement> {
    if n < 2 {
        return Err(Error::ArityTooSmall(n));
    }
    let mut out = FreeElement::zero(n);
    let global = Scalar::sign(n as i64);
    for i in 2..=n.saturating_sub(1) {
        let j = n + 1 - i;
        let two_vertex = DecoratedTree::corolla(ell(j)).graft(1, &DecoratedTree::corolla(ell(i)))?;
        for u in unshuffles(i, n)? {
            let tree = two_vertex.relabel(&u.perm);
            let coeff = &global * &(permutation_sign(&u.perm) * Scalar::sign((i * (j - 1)) as i64));
            out.add_term(tree, coeff);
        }
    }
    Ok(out)
}

/// A free operad with a differential given on generators and extended as a
/// derivation.
#[derive(Clone, Debug)]
pub struct DgFreeOperad {
    generators: Vec<Generator>,
    diffs: BTreeMap<Generator, FreeElement>,
}

impl DgFreeOperad {
    pub fn from_parts(generators: Vec<Generator>, diffs: BTreeMap<Generator, FreeElement>) -> Self {
        DgFreeOperad { generators, diffs }
    }

    /// The minimal-model operad for the associative family, with one planar
    /// generator per arity `2..=max_arity`.
    pub fn a_infinity(max_arity: usize) -> Self {
        let generators: Vec<Generator> = (2..=max_arity).map(mu).collect();
        let diffs = generators
            .iter()
            .map(|g| (*g, ainf_generator_diff(g.arity).expect("arity ≥ 2")))
            .collect();
        DgFreeOperad { generators, diffs }
    }

    /// The minimal-model operad for the Lie family, with one antisymmetric
    /// generator per arity `2..=max_arity`.
    pub fn l_infinity(max_arity: usize) -> Self {
        let generators: Vec<Generator> = (2..=max_arity).map(ell).collect();
        let diffs = generators
            .iter()
            .map(|g| (*g, linf_generator_diff(g.arity).expect("arity ≥ 2")))
            .collect();
        DgFreeOperad { generators, diffs }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn max_arity(&self) -> usize {
        self.generators.iter().map(|g| g.arity).max().unwrap_or(0)
    }

    pub fn diff_of(&self, g: &Generator) -> Result<&FreeElement> {
        self.diffs.get(g).ok_or(Error::UnknownGenerator(g.arity))
    }

    /// Replaces the stored differential of one generator. Used to study
    /// deliberately corrupted structures.
    pub fn override_diff(&mut self, g: Generator, diff: FreeElement) {
        self.diffs.insert(g, diff);
    }

    /// `"ainf"` or `"linf"` by the symmetry of the generators.
    pub fn family_label(&self) -> &'static str {
        match self.generators.first().map(|g| g.symmetry) {
            Some(Symmetry::Antisymmetric) => "linf",
            _ => "ainf",
        }
    }
}

/// Extends the generator differential to an arbitrary element by the
/// derivation rule: a tree `g(T_1, …, T_k)` maps to the generator
/// differential spliced at the root plus, with the Koszul prefix sign
/// `(-1)^(|g| + |T_1| + … + |T_{m-1}|)`, the derivative of each subtree in
/// place. Splicing reorders the subtrees by the replacement's leaf labels,
/// contributing the matching Koszul sign on subtree degrees.
///
/// Every replacement site carries one extra factor
/// `(-1)^(arity(replaced vertex) + leaf count of the element)`. On a bare
/// corolla the factor is `+1`, so `∂(corolla)` is the stored generator
/// table; on nested trees it reconciles the displayed per-term signs of
/// the generator tables with the shift-convention bookkeeping that makes
/// the extension square to zero. The square-zero suites pin this down.
pub fn extend_derivation(op: &DgFreeOperad, x: &FreeElement) -> Result<FreeElement> {
    fn derive(op: &DgFreeOperad, node: &TreeNode, total_leaves: usize) -> Result<Vec<(TreeNode, Scalar)>> {
        match node {
            TreeNode::Leaf(_) => Ok(Vec::new()),
            TreeNode::Vertex(g, children) => {
                let mut out = Vec::new();

                // root replacement
                let diff = op.diff_of(g)?;
                let site = Scalar::sign((g.arity + total_leaves) as i64);
                let child_degrees: Vec<i64> = children.iter().map(|c| c.degree()).collect();
                for (u, c) in diff.terms() {
                    let lambda = u.leaf_labels();
                    let reorder = crate::trees::koszul_sign(&lambda, &child_degrees);
                    let cross = Scalar::sign(crossing_exponent(u.root(), &child_degrees, &mut 0));
                    let spliced = splice(u.root(), children);
                    out.push((spliced, c * &(&reorder * &(&site * &cross))));
                }

                // subtree replacements
                let mut prefix = g.degree;
                for (m, child) in children.iter().enumerate() {
                    let sign = Scalar::sign(prefix);
                    for (rep, c) in derive(op, child, total_leaves)? {
                        let mut kids = children.clone();
                        kids[m] = rep;
                        out.push((TreeNode::Vertex(*g, kids), c * &sign));
                    }
                    prefix += child_degrees[m];
                }
                Ok(out)
            }
        }
    }

    // Substitutes the m-th subtree for the leaf labeled m.
    fn splice(u: &TreeNode, children: &[TreeNode]) -> TreeNode {
        match u {
            TreeNode::Leaf(m) => children[m - 1].clone(),
            TreeNode::Vertex(g, ch) => {
                TreeNode::Vertex(*g, ch.iter().map(|c| splice(c, children)).collect())
            }
        }
    }

    // Koszul cost of interleaving the replacement's vertices with the
    // spliced subtrees: walking the replacement in planar preorder, every
    // vertex crosses the subtrees whose leaves were already passed.
    fn crossing_exponent(u: &TreeNode, child_degrees: &[i64], passed: &mut i64) -> i64 {
        match u {
            TreeNode::Leaf(m) => {
                *passed += child_degrees[m - 1];
                0
            }
            TreeNode::Vertex(g, ch) => {
                let mut exp = g.degree * *passed;
                for c in ch {
                    exp += crossing_exponent(c, child_degrees, passed);
                }
                exp
            }
        }
    }

    let mut out = FreeElement::zero(x.leaves());
    for (tree, coeff) in x.terms() {
        for (node, c) in derive(op, tree.root(), x.leaves())? {
            out.add_term(DecoratedTree::from_node(node), coeff * &c);
        }
    }
    Ok(out)
}

/// Verifies `∂∘∂ = 0` on every generator of arity at most `max_arity`.
/// Failures list the offending residual.
pub fn check_d_squared(op: &DgFreeOperad, max_arity: usize) -> Result<Report> {
    let name = format!("dsq-{}", op.family_label());
    let mut report = Report::new();
    for g in op.generators().iter().filter(|g| g.arity <= max_arity) {
        let residual = extend_derivation(op, op.diff_of(g)?)?;
        if residual.is_zero() {
            report.push(CheckLine::pass(&name, g.arity));
        } else {
            let first = residual
                .terms()
                .next()
                .map(|(t, c)| format!("({c})·{t}"));
            report.push(CheckLine::fail(&name, g.arity, residual.term_count(), first));
        }
    }
    Ok(report)
}

/// True when the image of every generator differential consists of
/// decomposable elements, i.e. every tree has at least two vertices.
pub fn is_minimal(op: &DgFreeOperad) -> bool {
    op.generators().iter().all(|g| {
        op.diff_of(g)
            .map(|d| d.terms().all(|(t, _)| t.vertex_count() >= 2))
            .unwrap_or(false)
    })
}

/// Quotient presentation: associative or Lie.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Presentation {
    Ass,
    Lie,
}

impl Presentation {
    /// The binary generator of the presentation, in degree 0.
    pub fn generator(&self) -> Generator {
        match self {
            Presentation::Ass => Generator::planar(2, 0),
            Presentation::Lie => Generator::antisymmetric(2, 0),
        }
    }

    /// The arity-3 relator whose operadic ideal cuts out the presentation:
    /// the associativity difference, or the three-term cyclic Jacobi sum.
    pub fn relator(&self) -> FreeElement {
        let g = self.generator();
        let c = DecoratedTree::corolla(g);
        let comb = |p: &[usize]| c.graft(1, &c).unwrap().relabel(p);
        let mut r = FreeElement::zero(3);
        match self {
            Presentation::Ass => {
                r.add_term(c.graft(1, &c).unwrap(), Scalar::one());
                r.add_term(c.graft(2, &c).unwrap(), -Scalar::one());
            }
            Presentation::Lie => {
                r.add_term(comb(&[1, 2, 3]), Scalar::one());
                r.add_term(comb(&[2, 3, 1]), Scalar::one());
                r.add_term(comb(&[3, 1, 2]), Scalar::one());
            }
        }
        r
    }
}

/// Default arity cap for the brute-force ideal computation.
pub const QUOTIENT_ARITY_CAP: usize = 5;

/// An arity component of a quotient operad, with the projection from the
/// free tree span.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    /// canonical basis trees of the free span
    pub trees: Vec<DecoratedTree>,
    /// the free span as a graded space (everything in degree 0)
    pub tree_space: GradedSpace,
    /// quotient basis, named by representing trees
    pub space: GradedSpace,
    /// degree-0 projection from the free span onto the quotient
    pub projection: GradedMap,
}

/// The arity-`n` component of the quotient of the free operad on one binary
/// generator by the relator ideal, computed by brute-force relator
/// placement (and, for the symmetric presentation, closing under all leaf
/// relabelings).
pub fn quotient_arity_space(pres: Presentation, n: usize) -> Result<QuotientSpace> {
    quotient_arity_space_with_cap(pres, n, QUOTIENT_ARITY_CAP)
}

pub fn quotient_arity_space_with_cap(
    pres: Presentation,
    n: usize,
    cap: usize,
) -> Result<QuotientSpace> {
    if n > cap {
        return Err(Error::CapExceeded {
            arity: n,
            cap,
            what: "quotient".into(),
        });
    }
    if n < 1 {
        return Err(Error::ArityTooSmall(n));
    }
    let g = pres.generator();
    let symmetric = g.symmetry == Symmetry::Antisymmetric;
    let basis: Vec<DecoratedTree> = if symmetric {
        enumerate_labeled_trees(n, &[g])
    } else {
        enumerate_trees(n, &[g])
    };
    let index: BTreeMap<DecoratedTree, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();
    let tree_space = GradedSpace::new(
        basis
            .iter()
            .map(|t| (t.compact(), 0i64))
            .collect::<Vec<_>>(),
    )?;

    // Ideal rows: α ∘_s (relator ∘ (β1, β2, β3)) over all planar pieces,
    // then every global relabeling when the operad is symmetric.
    let relator = pres.relator();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let push_elem = |e: &FreeElement, rows: &mut Vec<Vec<Scalar>>| {
        let mut row = vec![Scalar::zero(); basis.len()];
        for (t, c) in e.terms() {
            let k = index[t];
            row[k] += c;
        }
        rows.push(row);
    };
    if n >= 3 {
        for a in 1..=n - 2 {
            let outers = enumerate_trees(a, &[g]);
            let m_total = n - a + 1;
            for alpha in &outers {
                for slot in 1..=a {
                    for parts in crate::trees::compositions(m_total, 3) {
                        let inners: Vec<Vec<DecoratedTree>> =
                            parts.iter().map(|&p| enumerate_trees(p, &[g])).collect();
                        let mut pick = vec![0usize; 3];
                        'product: loop {
                            let mut elem = FreeElement::zero(n);
                            for (rt, c) in relator.terms() {
                                let plugged = rt
                                    .graft(3, &inners[2][pick[2]])?
                                    .graft(2, &inners[1][pick[1]])?
                                    .graft(1, &inners[0][pick[0]])?;
                                elem.add_term(alpha.graft(slot, &plugged)?, c.clone());
                            }
                            if symmetric {
                                for perm in permutations(n) {
                                    let relabeled = elem.relabel(&perm);
                                    if !relabeled.is_zero() {
                                        push_elem(&relabeled, &mut rows);
                                    }
                                }
                            } else if !elem.is_zero() {
                                push_elem(&elem, &mut rows);
                            }
                            for m in (0..3).rev() {
                                pick[m] += 1;
                                if pick[m] < inners[m].len() {
                                    continue 'product;
                                }
                                pick[m] = 0;
                            }
                            break;
                        }
                    }
                }
            }
        }
    }

    // Row-reduce the ideal and read the quotient off the free columns.
    let mut mat = Mat::zeros(rows.len(), basis.len());
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            mat[(r, c)] = v.clone();
        }
    }
    let (rref, pivots) = mat.rref();
    let mut is_pivot = vec![false; basis.len()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free_cols: Vec<usize> = (0..basis.len()).filter(|&c| !is_pivot[c]).collect();
    let space = GradedSpace::new(
        free_cols
            .iter()
            .map(|&c| (basis[c].compact(), 0i64))
            .collect::<Vec<_>>(),
    )?;

    let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
    for (q, &c) in free_cols.iter().enumerate() {
        entries.push((q, c, Scalar::one()));
    }
    for (row_idx, &p) in pivots.iter().enumerate() {
        for (q, &c) in free_cols.iter().enumerate() {
            let v = rref[(row_idx, c)].clone();
            if !v.is_zero() {
                entries.push((q, p, -v));
            }
        }
    }
    let projection = GradedMap::from_entries(tree_space.clone(), space.clone(), 0, entries)?;

    Ok(QuotientSpace {
        trees: basis,
        tree_space,
        space,
        projection,
    })
}

/// The augmentation onto the quotient presentation: kills any tree with a
/// vertex of arity ≥ 3 and any element of nonzero degree, and projects
/// all-binary trees to their class. Returns the quotient component and the
/// image coordinates.
pub fn alpha_map(pres: Presentation, x: &FreeElement) -> Result<(QuotientSpace, Vec<Scalar>)> {
    let q = quotient_arity_space(pres, x.leaves())?;
    let mut coords = vec![Scalar::zero(); q.space.dim()];
    if x.degree().unwrap_or(0) != 0 {
        return Ok((q, coords));
    }
    let index: BTreeMap<&DecoratedTree, usize> =
        q.trees.iter().enumerate().map(|(k, t)| (t, k)).collect();
    for (t, c) in x.terms() {
        let all_binary = {
            fn binary(node: &TreeNode) -> bool {
                match node {
                    TreeNode::Leaf(_) => true,
                    TreeNode::Vertex(g, ch) => g.arity == 2 && ch.iter().all(binary),
                }
            }
            binary(t.root())
        };
        if !all_binary {
            continue;
        }
        // degree-0 binary trees decorated by the presentation generator
        let k = *index
            .get(t)
            .ok_or_else(|| Error::UnknownGenerator(t.leaf_count()))?;
        for (row, v) in q.projection.column(k) {
            coords[*row] += &(c * v);
        }
    }
    Ok((q, coords))
}

/// Betti numbers of the arity-`n` component of the operad: the tree span
/// graded by total degree, with the derivation differential. Returns
/// `(degree, dimension)` pairs for nonzero dimensions, ascending.
pub fn arity_homology(op: &DgFreeOperad, n: usize) -> Result<Vec<(i64, usize)>> {
    let gens: Vec<Generator> = op
        .generators()
        .iter()
        .copied()
        .filter(|g| g.arity <= n)
        .collect();
    let symmetric = gens.iter().any(|g| g.symmetry == Symmetry::Antisymmetric);
    let basis: Vec<DecoratedTree> = if symmetric {
        enumerate_labeled_trees(n, &gens)
    } else {
        enumerate_trees(n, &gens)
    };
    let index: BTreeMap<&DecoratedTree, usize> =
        basis.iter().enumerate().map(|(k, t)| (t, k)).collect();

    // images of the basis trees under the derivation differential
    let mut images: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(basis.len());
    for t in &basis {
        let d = extend_derivation(op, &FreeElement::unit(t.clone()))?;
        let mut col = Vec::new();
        for (u, c) in d.terms() {
            col.push((index[u], c.clone()));
        }
        images.push(col);
    }

    // per-degree blocks and exact ranks
    let mut degrees: Vec<i64> = basis.iter().map(|t| t.degree()).collect::<Vec<_>>();
    degrees.sort_unstable();
    degrees.dedup();
    let in_degree = |k: i64| -> Vec<usize> {
        (0..basis.len()).filter(|&j| basis[j].degree() == k).collect()
    };
    let mut rank_out: BTreeMap<i64, usize> = BTreeMap::new();
    for &k in &degrees {
        let cols = in_degree(k);
        let rows = in_degree(k - 1);
        if cols.is_empty() || rows.is_empty() {
            rank_out.insert(k, 0);
            continue;
        }
        let mut block = Mat::zeros(rows.len(), cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for (tgt, c) in &images[j] {
                if let Some(ii) = rows.iter().position(|r| r == tgt) {
                    block[(ii, jj)] = c.clone();
                }
            }
        }
        rank_out.insert(k, block.rank());
    }

    let mut betti = Vec::new();
    for &k in &degrees {
        let dim = in_degree(k).len();
        let rk = rank_out.get(&k).copied().unwrap_or(0);
        let rk_above = rank_out.get(&(k + 1)).copied().unwrap_or(0);
        let b = dim - rk - rk_above;
        if b > 0 {
            betti.push((k, b));
        }
    }
    Ok(betti)
}
