//! Constructive transfer of homotopy structure onto homology.
//!
//! Given an algebra on a complex and a contraction onto its homology, the
//! transfer produces operations `X_k` on the homology (with zero
//! differential) and a morphism back into the complex whose first
//! component is the contraction's inclusion. Everything is assembled
//! through the degree shift: with `I`, `P`, `H` the shifted contraction
//! maps and `b_j` the shifted operations,
//!
//! ```text
//! λ_n = Σ_j b_j ∘ (F_{i_1} ⊗ … ⊗ F_{i_j}),   i_1 + … + i_j = n,
//! B_n = P ∘ λ_n,     F_n = −H ∘ λ_n,          F_1 = I,
//! ```
//!
//! a recursion over sums of trees with the contraction's homotopy on the
//! internal edges. The construction is accepted because
//! [`verify_transfer`] certifies its output exactly; the checker, not the
//! formula, is the contract.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{tensor_power_map, Contraction, GradedMap, GradedSpace, Mat};
use crate::halg::{
    check_ainf, check_morphism, suspend_algebra, suspend_operation, unsuspend_operation,
    AInfAlgebra, AInfMorphism,
};
use crate::report::{CheckLine, Report};
use crate::trees::compositions;

/// Inputs to the transfer: a source algebra and a contraction of its
/// underlying complex.
#[derive(Clone, Debug)]
pub struct TransferProblem {
    pub source: AInfAlgebra,
    pub contraction: Contraction,
    pub max_arity: usize,
}

/// Output of the transfer: the structure on homology and the morphism
/// back into the source, with first component the contraction inclusion.
#[derive(Clone, Debug)]
pub struct TransferResult {
    pub transferred: AInfAlgebra,
    pub morphism: AInfMorphism,
}

/// Default arity bound for transfers.
pub const TRANSFER_ARITY_DEFAULT: usize = 5;

/// Runs the transfer. Refuses invalid contractions (all side conditions
/// are required) and sources that fail their own axiom check up to
/// `max_arity`. The output is certified by [`verify_transfer`] before
/// being returned.
pub fn transfer(problem: &TransferProblem) -> Result<TransferResult> {
    let src = &problem.source;
    let con = &problem.contraction;
    con.validate()?;
    if con.space != src.space {
        return Err(Error::SpaceMismatch(
            "contraction is over a different space than the algebra".into(),
        ));
    }
    if con.d != src.d {
        return Err(Error::InvalidContraction(
            "contraction differential differs from the algebra differential".into(),
        ));
    }
    let source_check = check_ainf(src)?;
    if let Some(line) = source_check.failures().next() {
        return Err(Error::SourceAxiomFailure(line.arity));
    }

    // shifted contraction data and operations
    let sus = suspend_algebra(src);
    let homology = con.homology.clone();
    let s_h = homology.suspend();
    let inc = suspend_operation(&con.i, &homology, 1, &src.space);
    let proj = suspend_operation(&con.p, &src.space, 1, &homology);
    let htp = suspend_operation(&con.h, &src.space, 1, &src.space);

    // F_k: (sH)^{⊗k} -> sC, degree 0; B_k: (sH)^{⊗k} -> sH, degree -1
    let mut f_parts: BTreeMap<usize, GradedMap> = BTreeMap::new();
    f_parts.insert(1, inc.clone());
    let mut b_parts: BTreeMap<usize, GradedMap> = BTreeMap::new();

    for n in 2..=problem.max_arity {
        let mut lambda = GradedMap::zero(s_h.tensor_power(n), sus.space.clone(), -1);
        for j in 2..=n {
            let Some(bj) = sus.b.get(&j) else { continue };
            for parts in compositions(n, j) {
                let factors: Vec<&GradedMap> = parts.iter().map(|i| &f_parts[i]).collect();
                lambda = lambda.add(&bj.compose(&tensor_power_map(&factors))?)?;
            }
        }
        b_parts.insert(n, proj.compose(&lambda)?);
        f_parts.insert(n, htp.compose(&lambda)?.neg());
    }

    // pull everything back down the shift
    let d_zero = GradedMap::zero(homology.clone(), homology.clone(), -1);
    let mut ops = BTreeMap::new();
    for (n, b) in &b_parts {
        if !b.is_zero() {
            ops.insert(*n, unsuspend_operation(b, &homology, *n, &homology));
        }
    }
    let transferred = AInfAlgebra::new(homology.clone(), d_zero, ops, problem.max_arity)?;

    let mut components = BTreeMap::new();
    for (n, f) in &f_parts {
        if *n == 1 || !f.is_zero() {
            components.insert(*n, unsuspend_operation(f, &homology, *n, &src.space));
        }
    }
    let morphism = AInfMorphism::new(transferred.clone(), src.clone(), components)?;

    let result = TransferResult {
        transferred,
        morphism,
    };
    let certificate = verify_transfer(&result)?;
    if !certificate.passed() {
        return Err(Error::InvalidContraction(format!(
            "transfer output failed its own verification:\n{certificate}"
        )));
    }
    Ok(result)
}

/// Per-degree Betti numbers of a complex, by exact rank computation.
fn betti_numbers(space: &GradedSpace, d: &GradedMap) -> Vec<(i64, usize)> {
    let degrees = space.degrees();
    let block_rank = |k: i64| -> usize {
        let cols = space.indices_in_degree(k);
        let rows = space.indices_in_degree(k - 1);
        if cols.is_empty() || rows.is_empty() {
            return 0;
        }
        let mut m = Mat::zeros(rows.len(), cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for (row, c) in d.column(j) {
                if let Some(ii) = rows.iter().position(|r| r == row) {
                    m[(ii, jj)] = c.clone();
                }
            }
        }
        m.rank()
    };
    let mut out = Vec::new();
    for &k in &degrees {
        let dim = space.indices_in_degree(k).len();
        let b = dim - block_rank(k) - block_rank(k + 1);
        if b > 0 {
            out.push((k, b));
        }
    }
    out
}

/// Certifies a transfer output: the transferred structure passes its
/// axiom check, the morphism passes its coherence check, and the first
/// component induces an isomorphism on homology (exact rank conditions).
pub fn verify_transfer(result: &TransferResult) -> Result<Report> {
    let mut report = Report::new();
    report.merge(check_ainf(&result.transferred)?);
    report.merge(check_morphism(&result.morphism)?);

    let f1 = result
        .morphism
        .component(1)
        .expect("morphisms always carry a first component");
    let target = &result.morphism.target;
    let h_space = &result.transferred.space;

    // f1 lands in cycles, is injective, meets the image of d trivially,
    // and the homology dimensions agree per degree
    let mut ok = true;
    let mut details = Vec::new();
    if !target.d.compose(f1)?.is_zero() {
        ok = false;
        details.push("d∘f1 ≠ 0".to_string());
    }
    let dense_f1 = to_dense(f1);
    if dense_f1.rank() != h_space.dim() {
        ok = false;
        details.push("f1 is not injective".to_string());
    }
    let dense_d = to_dense(&target.d);
    let stacked = stack_columns(&dense_f1, &dense_d);
    if stacked.rank() != h_space.dim() + dense_d.rank() {
        ok = false;
        details.push("image of f1 meets the image of d".to_string());
    }
    let complex_betti = betti_numbers(&target.space, &target.d);
    let h_betti: Vec<(i64, usize)> = {
        let mut per: BTreeMap<i64, usize> = BTreeMap::new();
        for (_, deg) in h_space.iter() {
            *per.entry(deg).or_insert(0) += 1;
        }
        per.into_iter().collect()
    };
    if complex_betti != h_betti {
        ok = false;
        details.push(format!(
            "homology dimensions differ: complex {complex_betti:?} vs transferred {h_betti:?}"
        ));
    }
    if ok {
        report.push(CheckLine::pass("quasi-iso", 1));
    } else {
        report.push(CheckLine::fail("quasi-iso", 1, details.len(), Some(details.join("; "))));
    }
    Ok(report)
}

fn to_dense(map: &GradedMap) -> Mat {
    let mut m = Mat::zeros(map.target().dim(), map.source().dim());
    for j in 0..map.source().dim() {
        for (i, c) in map.column(j) {
            m[(*i, j)] = c.clone();
        }
    }
    m
}

fn stack_columns(a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.rows, b.rows);
    let mut m = Mat::zeros(a.rows, a.cols + b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            m[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols {
            m[(i, a.cols + j)] = b[(i, j)].clone();
        }
    }
    m
}
