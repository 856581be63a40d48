//! Homotopy-algebra structures on concrete chain complexes.
//!
//! An algebra is a graded space with a degree −1 differential and a family
//! of operations `mu_n` (or `l_n`) of degree `n-2`. The checkers assemble
//! each axiom as a single exact matrix and report the first nonzero entry
//! of the residual, per arity. Morphisms are families `f_n` of degree
//! `n-1`; their coherence is checked through the shift isomorphism, where
//! all components become degree 0 and the identities are composition
//! sums with no loose signs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{permutation_map, tensor_power_map, GradedMap, GradedSpace, Scalar};
use crate::operad::FreeElement;
use crate::report::{CheckLine, Report};
use crate::trees::{koszul_sign, permutation_sign, unshuffles, TreeNode};

/// Anything that owns a graded space and an arity-indexed operation family.
/// Operations not stored are zero; decorations beyond `max_arity` are
/// errors.
pub trait OperationSource {
    fn space(&self) -> &GradedSpace;
    fn operation(&self, arity: usize) -> Option<&GradedMap>;
    fn max_arity(&self) -> usize;
}

fn validate_family(
    space: &GradedSpace,
    d: &GradedMap,
    ops: &BTreeMap<usize, GradedMap>,
) -> Result<()> {
    if d.source() != space || d.target() != space {
        return Err(Error::SpaceMismatch(
            "differential must be an endomorphism of the underlying space".into(),
        ));
    }
    if d.degree() != -1 {
        return Err(Error::DegreeViolation(format!(
            "differential degree must be -1, got {}",
            d.degree()
        )));
    }
    let dd = d.compose(d)?;
    if let Some((r, c, v)) = dd.first_nonzero() {
        return Err(Error::NotSquareZero {
            row: r,
            col: c,
            value: v.to_string(),
        });
    }
    for (&n, m) in ops {
        if n < 2 {
            return Err(Error::ArityTooSmall(n));
        }
        if m.source() != &space.tensor_power(n) || m.target() != space {
            return Err(Error::SpaceMismatch(format!(
                "operation of arity {n} must map the {n}-th tensor power to the space"
            )));
        }
        if m.degree() != n as i64 - 2 {
            return Err(Error::DegreeViolation(format!(
                "operation of arity {n} must have degree {}, got {}",
                n as i64 - 2,
                m.degree()
            )));
        }
    }
    Ok(())
}

/// A strongly homotopy associative structure: operations `mu_n` of degree
/// `n-2` on a complex, recorded up to `max_arity`.
#[derive(Clone, Debug)]
pub struct AInfAlgebra {
    pub space: GradedSpace,
    pub d: GradedMap,
    ops: BTreeMap<usize, GradedMap>,
    pub max_arity: usize,
}

impl AInfAlgebra {
    pub fn new(
        space: GradedSpace,
        d: GradedMap,
        ops: BTreeMap<usize, GradedMap>,
        max_arity: usize,
    ) -> Result<Self> {
        validate_family(&space, &d, &ops)?;
        Ok(AInfAlgebra {
            space,
            d,
            ops,
            max_arity,
        })
    }

    pub fn op(&self, n: usize) -> Option<&GradedMap> {
        self.ops.get(&n)
    }

    pub fn ops(&self) -> impl Iterator<Item = (usize, &GradedMap)> {
        self.ops.iter().map(|(n, m)| (*n, m))
    }
}

impl OperationSource for AInfAlgebra {
    fn space(&self) -> &GradedSpace {
        &self.space
    }
    fn operation(&self, arity: usize) -> Option<&GradedMap> {
        self.ops.get(&arity)
    }
    fn max_arity(&self) -> usize {
        self.max_arity
    }
}

/// A strongly homotopy Lie structure: graded antisymmetric brackets `l_n`
/// of degree `n-2`. Antisymmetry is verified by [`check_linf`] before the
/// axiom is tested.
#[derive(Clone, Debug)]
pub struct LInfAlgebra {
    pub space: GradedSpace,
    pub d: GradedMap,
    ops: BTreeMap<usize, GradedMap>,
    pub max_arity: usize,
}

impl LInfAlgebra {
    pub fn new(
        space: GradedSpace,
        d: GradedMap,
        ops: BTreeMap<usize, GradedMap>,
        max_arity: usize,
    ) -> Result<Self> {
        validate_family(&space, &d, &ops)?;
        Ok(LInfAlgebra {
            space,
            d,
            ops,
            max_arity,
        })
    }

    pub fn op(&self, n: usize) -> Option<&GradedMap> {
        self.ops.get(&n)
    }

    pub fn ops(&self) -> impl Iterator<Item = (usize, &GradedMap)> {
        self.ops.iter().map(|(n, m)| (*n, m))
    }
}

impl OperationSource for LInfAlgebra {
    fn space(&self) -> &GradedSpace {
        &self.space
    }
    fn operation(&self, arity: usize) -> Option<&GradedMap> {
        self.ops.get(&arity)
    }
    fn max_arity(&self) -> usize {
        self.max_arity
    }
}

fn zero_op(space: &GradedSpace, n: usize) -> GradedMap {
    GradedMap::zero(space.tensor_power(n), space.clone(), n as i64 - 2)
}

/// The induced differential `[op, ∂]` on `n`-ary operations:
/// `Σ_s op∘(1⊗…⊗∂⊗…⊗1) − (−1)^n ∂∘op`, Koszul signs included by the
/// tensor construction.
pub fn bracket_with_d(
    space: &GradedSpace,
    d: &GradedMap,
    op: &GradedMap,
    n: usize,
) -> Result<GradedMap> {
    let id = GradedMap::identity(space.clone());
    let mut acc = GradedMap::zero(op.source().clone(), op.target().clone(), op.degree() - 1);
    for s in 0..n {
        let mut factors: Vec<&GradedMap> = Vec::with_capacity(n);
        for m in 0..n {
            factors.push(if m == s { d } else { &id });
        }
        let slotwise = tensor_power_map(&factors);
        acc = acc.add(&op.compose(&slotwise)?)?;
    }
    let after = d.compose(op)?.scale(&Scalar::sign(n as i64));
    acc.sub(&after)
}

/// Per-arity check of the homotopy-associativity hierarchy
/// `Σ ± mu_i(1⊗…⊗mu_j⊗…⊗1) = [mu_n, ∂]`, each side assembled as one
/// exact matrix.
pub fn check_ainf(alg: &AInfAlgebra) -> Result<Report> {
    let mut report = Report::new();
    let id = GradedMap::identity(alg.space.clone());
    for n in 2..=alg.max_arity {
        let zero_n = zero_op(&alg.space, n);
        let mut lhs = GradedMap::zero(alg.space.tensor_power(n), alg.space.clone(), n as i64 - 3);
        for j in 2..=n.saturating_sub(1) {
            let i = n + 1 - j;
            let (Some(outer), Some(inner)) = (alg.op(i), alg.op(j)) else {
                continue;
            };
            for s in 0..=(i - 1) {
                let mut factors: Vec<&GradedMap> = Vec::with_capacity(i);
                for m in 0..i {
                    factors.push(if m == s { inner } else { &id });
                }
                let term = outer.compose(&tensor_power_map(&factors))?;
                lhs = lhs.add(&term.scale(&Scalar::sign((j + s * (j + 1)) as i64)))?;
            }
        }
        let op_n = alg.op(n).unwrap_or(&zero_n);
        let rhs = bracket_with_d(&alg.space, &alg.d, op_n, n)?;
        push_residual(&mut report, "ainf-axiom", n, &lhs.sub(&rhs)?);
    }
    Ok(report)
}

/// Per-arity check of the homotopy Jacobi hierarchy over unshuffles,
/// preceded by the graded-antisymmetry gate on every bracket.
pub fn check_linf(alg: &LInfAlgebra) -> Result<Report> {
    let mut report = Report::new();
    for n in 2..=alg.max_arity {
        // antisymmetry: precomposition with an adjacent transposition is
        // multiplication by its χ-sign, i.e. l∘P_τ + l = 0
        let zero_n = zero_op(&alg.space, n);
        let l_n = alg.op(n).unwrap_or(&zero_n);
        let mut antisym_ok = true;
        let mut first: Option<String> = None;
        let mut residual_terms = 0usize;
        for s in 1..n {
            let mut perm: Vec<usize> = (1..=n).collect();
            perm.swap(s - 1, s);
            let p = permutation_map(&alg.space, &perm);
            let residual = l_n.compose(&p)?.add(l_n)?;
            if !residual.is_zero() {
                antisym_ok = false;
                residual_terms += residual.nnz();
                if first.is_none() {
                    first = residual
                        .first_nonzero()
                        .map(|(r, c, v)| format!("l{n}∘τ_{s} + l{n} has ({r} <- {c}) = {v}"));
                }
            }
        }
        if antisym_ok {
            report.push(CheckLine::pass("linf-antisym", n));
        } else {
            report.push(CheckLine::fail("linf-antisym", n, residual_terms, first));
            // the axiom below is only meaningful for antisymmetric brackets
            continue;
        }

        let mut lhs = GradedMap::zero(alg.space.tensor_power(n), alg.space.clone(), n as i64 - 3);
        let id = GradedMap::identity(alg.space.clone());
        for i in 2..=n.saturating_sub(1) {
            let j = n + 1 - i;
            let (Some(outer), Some(inner)) = (alg.op(j), alg.op(i)) else {
                continue;
            };
            let mut factors: Vec<&GradedMap> = vec![inner];
            for _ in 0..(n - i) {
                factors.push(&id);
            }
            let block = outer.compose(&tensor_power_map(&factors))?;
            for u in unshuffles(i, n)? {
                let p = permutation_map(&alg.space, &u.perm);
                let coeff = permutation_sign(&u.perm) * Scalar::sign((i * (j - 1)) as i64);
                lhs = lhs.add(&block.compose(&p)?.scale(&coeff))?;
            }
        }
        let rhs = bracket_with_d(&alg.space, &alg.d, l_n, n)?.scale(&Scalar::sign(n as i64));
        push_residual(&mut report, "linf-axiom", n, &lhs.sub(&rhs)?);
    }
    Ok(report)
}

fn push_residual(report: &mut Report, name: &str, arity: usize, residual: &GradedMap) {
    if residual.is_zero() {
        report.push(CheckLine::pass(name, arity));
    } else {
        let first = residual
            .first_nonzero()
            .map(|(r, c, v)| format!("({r} <- {c}) = {v}"));
        report.push(CheckLine::fail(name, arity, residual.nnz(), first));
    }
}

/// Evaluates a free-operad element on a tuple of basis arguments: each
/// tree is evaluated bottom-up with the Koszul signs of threading
/// operations past arguments, plus the sign of rearranging the arguments
/// by the leaf labeling; terms combine linearly. Operations the algebra
/// does not store are zero; decorations above its `max_arity` are an
/// error.
pub fn evaluate_action<F: OperationSource>(
    elem: &FreeElement,
    alg: &F,
    args: &[usize],
) -> Result<Vec<Scalar>> {
    if args.len() != elem.leaves() {
        return Err(Error::SpaceMismatch(format!(
            "element takes {} arguments, got {}",
            elem.leaves(),
            args.len()
        )));
    }
    let space = alg.space();
    let dim = space.dim();
    let arg_degrees: Vec<i64> = args.iter().map(|&a| space.degree(a)).collect();

    // recursive evaluation of a planar tree on a slice of arguments,
    // returning a sparse vector
    fn eval<F: OperationSource>(
        node: &TreeNode,
        alg: &F,
        args: &[usize],
    ) -> Result<Vec<(usize, Scalar)>> {
        let space = alg.space();
        match node {
            TreeNode::Leaf(_) => Ok(vec![(args[0], Scalar::one())]),
            TreeNode::Vertex(g, children) => {
                if g.arity > alg.max_arity() {
                    return Err(Error::MissingOperation(g.arity));
                }
                let Some(op) = alg.operation(g.arity) else {
                    return Ok(Vec::new());
                };
                // split the arguments into blocks per child
                let mut blocks: Vec<&[usize]> = Vec::with_capacity(children.len());
                let mut offset = 0usize;
                for c in children {
                    let w = c.leaf_count();
                    blocks.push(&args[offset..offset + w]);
                    offset += w;
                }
                // Koszul: threading child operators past earlier blocks
                let mut distribute = 0i64;
                let mut prefix = 0i64;
                for (m, c) in children.iter().enumerate() {
                    distribute += c.degree() * prefix;
                    prefix += blocks[m].iter().map(|&a| space.degree(a)).sum::<i64>();
                }
                let base = Scalar::sign(distribute);
                let mut parts: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(children.len());
                for (m, c) in children.iter().enumerate() {
                    let v = eval(c, alg, blocks[m])?;
                    if v.is_empty() {
                        return Ok(Vec::new());
                    }
                    parts.push(v);
                }
                // tensor the child results and push through the operation
                let dim = space.dim();
                let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
                let mut pick = vec![0usize; parts.len()];
                'product: loop {
                    let mut coeff = base.clone();
                    let mut flat = 0usize;
                    for (m, p) in parts.iter().enumerate() {
                        let (idx, c) = &p[pick[m]];
                        flat = flat * dim + idx;
                        coeff *= c;
                    }
                    for (row, c) in op.column(flat) {
                        let slot = out.entry(*row).or_insert_with(Scalar::zero);
                        *slot += &(&coeff * c);
                    }
                    for m in (0..parts.len()).rev() {
                        pick[m] += 1;
                        if pick[m] < parts[m].len() {
                            continue 'product;
                        }
                        pick[m] = 0;
                    }
                    break;
                }
                Ok(out.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            }
        }
    }

    let mut result = vec![Scalar::zero(); dim];
    for (tree, coeff) in elem.terms() {
        let labels = tree.leaf_labels();
        let sign = koszul_sign(&labels, &arg_degrees);
        let planar_args: Vec<usize> = labels.iter().map(|&m| args[m - 1]).collect();
        let v = eval(tree.root(), alg, &planar_args)?;
        let scale = coeff * &sign;
        for (idx, c) in v {
            result[idx] += &(&scale * &c);
        }
    }
    Ok(result)
}

/// A family of maps `f_n` of degree `n-1` between two homotopy
/// associative structures; `f_1` is the underlying chain map.
#[derive(Clone, Debug)]
pub struct AInfMorphism {
    pub source: AInfAlgebra,
    pub target: AInfAlgebra,
    components: BTreeMap<usize, GradedMap>,
}

impl AInfMorphism {
    pub fn new(
        source: AInfAlgebra,
        target: AInfAlgebra,
        components: BTreeMap<usize, GradedMap>,
    ) -> Result<Self> {
        if !components.contains_key(&1) {
            return Err(Error::MissingOperation(1));
        }
        for (&n, f) in &components {
            if f.source() != &source.space.tensor_power(n) || f.target() != &target.space {
                return Err(Error::SpaceMismatch(format!(
                    "morphism component {n} must map the source {n}-th tensor power to the target space"
                )));
            }
            if f.degree() != n as i64 - 1 {
                return Err(Error::DegreeViolation(format!(
                    "morphism component {n} must have degree {}, got {}",
                    n as i64 - 1,
                    f.degree()
                )));
            }
        }
        Ok(AInfMorphism {
            source,
            target,
            components,
        })
    }

    /// The strict morphism with `f_1 = g` and no higher components.
    pub fn strict(source: AInfAlgebra, target: AInfAlgebra, g: GradedMap) -> Result<Self> {
        let mut components = BTreeMap::new();
        components.insert(1, g);
        AInfMorphism::new(source, target, components)
    }

    pub fn identity(alg: &AInfAlgebra) -> Self {
        let mut components = BTreeMap::new();
        components.insert(1, GradedMap::identity(alg.space.clone()));
        AInfMorphism {
            source: alg.clone(),
            target: alg.clone(),
            components,
        }
    }

    pub fn component(&self, n: usize) -> Option<&GradedMap> {
        self.components.get(&n)
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &GradedMap)> {
        self.components.iter().map(|(n, m)| (*n, m))
    }

    pub fn check_limit(&self) -> usize {
        self.source.max_arity.min(self.target.max_arity)
    }
}

/// Conjugates an `n`-ary operation through the degree shift: the matrix
/// keeps its entries up to the column sign
/// `(-1)^(Σ_m (n-m)(deg_m + 1))`, and the result acts on the suspended
/// spaces. [`unsuspend_operation`] inverts it.
pub(crate) fn suspend_operation(
    g: &GradedMap,
    base_source: &GradedSpace,
    n: usize,
    target: &GradedSpace,
) -> GradedMap {
    shift_conjugate(g, base_source, n, target, true)
}

/// Inverse of [`suspend_operation`]: takes a map between suspended spaces
/// back down, using the unsuspended factor degrees for the column signs.
pub(crate) fn unsuspend_operation(
    g_hat: &GradedMap,
    base_source: &GradedSpace,
    n: usize,
    target: &GradedSpace,
) -> GradedMap {
    shift_conjugate(g_hat, base_source, n, target, false)
}

fn shift_conjugate(
    g: &GradedMap,
    base_source: &GradedSpace,
    n: usize,
    target: &GradedSpace,
    up: bool,
) -> GradedMap {
    let dim = base_source.dim();
    let (new_source, new_target, new_degree) = if up {
        (
            base_source.suspend().tensor_power(n),
            target.suspend(),
            g.degree() + 1 - n as i64,
        )
    } else {
        (
            base_source.tensor_power(n),
            target.clone(),
            g.degree() - 1 + n as i64,
        )
    };
    let mut entries = Vec::new();
    for col in 0..dim.pow(n as u32) {
        let gcol = g.column(col);
        if gcol.is_empty() {
            continue;
        }
        let parts = GradedSpace::tensor_index_decode(dim, n, col);
        let mut exp = 0i64;
        for (m, &p) in parts.iter().enumerate() {
            exp += (n - 1 - m) as i64 * (base_source.degree(p) + 1);
        }
        let sign = Scalar::sign(exp);
        for (row, c) in gcol {
            entries.push((*row, col, c * &sign));
        }
    }
    GradedMap::from_entries(new_source, new_target, new_degree, entries)
        .expect("shift conjugation preserves homogeneity")
}

pub(crate) struct Suspended {
    pub space: GradedSpace,
    /// b_1 = shifted differential, b_n = shifted operations, all degree -1
    pub b: BTreeMap<usize, GradedMap>,
}

pub(crate) fn suspend_algebra(alg: &AInfAlgebra) -> Suspended {
    let mut b = BTreeMap::new();
    b.insert(1, suspend_operation(&alg.d, &alg.space, 1, &alg.space));
    for (n, op) in alg.ops() {
        b.insert(n, suspend_operation(op, &alg.space, n, &alg.space));
    }
    Suspended {
        space: alg.space.suspend(),
        b,
    }
}

fn suspended_components(f: &AInfMorphism) -> BTreeMap<usize, GradedMap> {
    f.components()
        .map(|(n, c)| (n, suspend_operation(c, &f.source.space, n, &f.target.space)))
        .collect()
}

use crate::trees::compositions;

/// Checks the morphism identities per arity: through the shift, for every
/// `n`,
/// `Σ F_{p+1+q}∘(1^p ⊗ b_j ⊗ 1^q) = Σ b_k∘(F_{i_1} ⊗ … ⊗ F_{i_k})`.
/// At `n = 1` this is exactly the chain-map condition on `f_1`.
pub fn check_morphism(f: &AInfMorphism) -> Result<Report> {
    let mut report = Report::new();
    let src = suspend_algebra(&f.source);
    let tgt = suspend_algebra(&f.target);
    let fs = suspended_components(f);
    let id_src = GradedMap::identity(src.space.clone());

    for n in 1..=f.check_limit() {
        let mut lhs = GradedMap::zero(src.space.tensor_power(n), tgt.space.clone(), -1);
        for j in 1..=n {
            let Some(bj) = src.b.get(&j) else { continue };
            for p in 0..=(n - j) {
                let q = n - j - p;
                let Some(fc) = fs.get(&(p + 1 + q)) else {
                    continue;
                };
                let mut factors: Vec<&GradedMap> = Vec::with_capacity(p + 1 + q);
                for _ in 0..p {
                    factors.push(&id_src);
                }
                factors.push(bj);
                for _ in 0..q {
                    factors.push(&id_src);
                }
                lhs = lhs.add(&fc.compose(&tensor_power_map(&factors))?)?;
            }
        }

        let mut rhs = GradedMap::zero(src.space.tensor_power(n), tgt.space.clone(), -1);
        for k in 1..=n {
            let Some(bk) = tgt.b.get(&k) else { continue };
            for parts in compositions(n, k) {
                let mut factors: Vec<&GradedMap> = Vec::with_capacity(k);
                let mut missing = false;
                for &i in &parts {
                    match fs.get(&i) {
                        Some(fc) => factors.push(fc),
                        None => {
                            missing = true;
                            break;
                        }
                    }
                }
                if missing {
                    continue;
                }
                rhs = rhs.add(&bk.compose(&tensor_power_map(&factors))?)?;
            }
        }

        push_residual(&mut report, "morphism", n, &lhs.sub(&rhs)?);
    }
    Ok(report)
}

/// Composite of two morphisms: through the shift the components are
/// `(g∘f)_n = Σ G_k∘(F_{i_1} ⊗ … ⊗ F_{i_k})`, pulled back down.
pub fn compose_morphisms(g: &AInfMorphism, f: &AInfMorphism) -> Result<AInfMorphism> {
    if g.source.space != f.target.space {
        return Err(Error::SpaceMismatch(
            "compose: target of the inner morphism differs from source of the outer".into(),
        ));
    }
    let fs = suspended_components(f);
    let gs = suspended_components(g);
    let src_space = f.source.space.suspend();
    let tgt_space = g.target.space.suspend();
    let limit = f.check_limit().min(g.check_limit());

    let mut components = BTreeMap::new();
    for n in 1..=limit {
        let mut acc = GradedMap::zero(src_space.tensor_power(n), tgt_space.clone(), 0);
        for k in 1..=n {
            let Some(gk) = gs.get(&k) else { continue };
            for parts in compositions(n, k) {
                let mut factors: Vec<&GradedMap> = Vec::with_capacity(k);
                let mut missing = false;
                for &i in &parts {
                    match fs.get(&i) {
                        Some(fc) => factors.push(fc),
                        None => {
                            missing = true;
                            break;
                        }
                    }
                }
                if missing {
                    continue;
                }
                acc = acc.add(&gk.compose(&tensor_power_map(&factors))?)?;
            }
        }
        if !acc.is_zero() || n == 1 {
            components.insert(
                n,
                unsuspend_operation(&acc, &f.source.space, n, &g.target.space),
            );
        }
    }
    AInfMorphism::new(f.source.clone(), g.target.clone(), components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::operad::ainf_generator_diff;

    #[test]
    fn bracket_vanishes_on_chain_maps_and_zero_differentials() {
        let a = fixtures::massey_dga();
        // mu2 is a chain map (Leibniz), so [mu2, ∂] = 0
        let b = bracket_with_d(&a.space, &a.d, a.op(2).unwrap(), 2).unwrap();
        assert!(b.is_zero());

        // zero differential kills the bracket entirely
        let l = fixtures::two_dim_lie();
        let b = bracket_with_d(&l.space, &l.d, l.op(2).unwrap(), 2).unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn associative_dga_passes_all_arities() {
        let a = fixtures::massey_dga();
        let r = check_ainf(&a).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn non_associative_product_fails_at_three() {
        let a = fixtures::non_associative_dga();
        let r = check_ainf(&a).unwrap();
        assert!(!r.passed());
        let failing: Vec<usize> = r.failures().map(|l| l.arity).collect();
        assert_eq!(failing, vec![3]);
    }

    #[test]
    fn lie_algebra_passes_and_jacobi_violation_fails() {
        let ok = fixtures::two_dim_lie();
        let r = check_linf(&ok).unwrap();
        assert!(r.passed(), "{r}");

        let abelian = fixtures::abelian_linf();
        assert!(check_linf(&abelian).unwrap().passed());

        let bad = fixtures::jacobi_violating_bracket();
        let r = check_linf(&bad).unwrap();
        assert!(!r.passed());
        let failing: Vec<(String, usize)> =
            r.failures().map(|l| (l.name.clone(), l.arity)).collect();
        assert_eq!(failing, vec![("linf-axiom".to_string(), 3)]);
    }

    #[test]
    fn antisymmetry_gate_rejects_unsymmetric_brackets() {
        let bad = fixtures::non_antisymmetric_bracket();
        let r = check_linf(&bad).unwrap();
        assert!(r
            .lines
            .iter()
            .any(|l| l.name == "linf-antisym" && !l.pass));
    }

    #[test]
    fn evaluate_rejects_decorations_beyond_max_arity() {
        let a = fixtures::non_associative_dga(); // max_arity 3
        let elem = FreeElement::unit(crate::trees::DecoratedTree::corolla(crate::operad::mu(4)));
        let args = vec![0usize; 4];
        assert!(matches!(
            evaluate_action(&elem, &a, &args),
            Err(Error::MissingOperation(4))
        ));
    }

    #[test]
    fn evaluate_single_corolla_and_zero() {
        let a = fixtures::massey_dga();
        let mu2 = crate::operad::mu(2);
        let elem = FreeElement::unit(crate::trees::DecoratedTree::corolla(mu2));
        let ia = a.space.index_of("a").unwrap();
        let ib = a.space.index_of("b").unwrap();
        let v = evaluate_action(&elem, &a, &[ia, ib]).unwrap();
        let iu = a.space.index_of("u").unwrap();
        for (k, c) in v.iter().enumerate() {
            if k == iu {
                assert!(c.is_one());
            } else {
                assert!(c.is_zero(), "unexpected value at {}", a.space.name(k));
            }
        }
        let zero = FreeElement::zero(3);
        let v = evaluate_action(&zero, &a, &[ia, ib, ia]).unwrap();
        assert!(v.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn action_of_generator_differential_on_associative_arguments() {
        // ∂mu3 on (a, b, c) evaluates to mu2(mu2(a,b),c) - mu2(a,mu2(b,c)),
        // which vanishes on an associative product
        let a = fixtures::massey_dga();
        let d3 = ainf_generator_diff(3).unwrap();
        let idx: Vec<usize> = ["a", "b", "c"]
            .iter()
            .map(|n| a.space.index_of(n).unwrap())
            .collect();
        let v = evaluate_action(&d3, &a, &idx).unwrap();
        assert!(v.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn identity_and_strict_morphisms_pass() {
        let a = fixtures::massey_dga();
        let id = AInfMorphism::identity(&a);
        let r = check_morphism(&id).unwrap();
        assert!(r.passed(), "{r}");

        // a strict dga endomorphism: e ↦ -e, f ↦ f on the square dga
        let d = fixtures::square_dga();
        let entries = vec![(0, 0, -Scalar::one()), (1, 1, Scalar::one())];
        let g = GradedMap::from_entries(d.space.clone(), d.space.clone(), 0, entries).unwrap();
        let m = AInfMorphism::strict(d.clone(), d.clone(), g).unwrap();
        let r = check_morphism(&m).unwrap();
        assert!(r.passed(), "{r}");

        // a non-multiplicative chain map fails at n = 2
        let bad = GradedMap::identity(d.space.clone()).scale(&Scalar::from_int(2));
        let m = AInfMorphism::strict(d.clone(), d.clone(), bad).unwrap();
        let r = check_morphism(&m).unwrap();
        let failing: Vec<usize> = r.failures().map(|l| l.arity).collect();
        assert_eq!(failing, vec![2]);
    }

    #[test]
    fn morphism_composition_is_unital_and_associative() {
        let d = fixtures::square_dga();
        let neg = {
            let entries = vec![(0, 0, -Scalar::one()), (1, 1, Scalar::one())];
            let g = GradedMap::from_entries(d.space.clone(), d.space.clone(), 0, entries).unwrap();
            AInfMorphism::strict(d.clone(), d.clone(), g).unwrap()
        };
        let id = AInfMorphism::identity(&d);

        let left = compose_morphisms(&id, &neg).unwrap();
        let right = compose_morphisms(&neg, &id).unwrap();
        assert_eq!(left.component(1), neg.component(1));
        assert_eq!(right.component(1), neg.component(1));

        // strict composition is the matrix product
        let twice = compose_morphisms(&neg, &neg).unwrap();
        assert_eq!(
            twice.component(1).unwrap(),
            &GradedMap::identity(d.space.clone())
        );
        assert!(twice.component(2).is_none());

        // associativity on a strict triple
        let lhs = compose_morphisms(&compose_morphisms(&neg, &neg).unwrap(), &neg).unwrap();
        let rhs = compose_morphisms(&neg, &compose_morphisms(&neg, &neg).unwrap()).unwrap();
        assert_eq!(lhs.component(1), rhs.component(1));
    }
}
