//! Homology of a complex together with contraction data.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{GradedMap, GradedSpace, Mat, Scalar};

/// A contraction of a complex onto its homology: projection `p`,
/// inclusion `i` and homotopy `h` with
///
/// * `p ∘ i = id`,
/// * `d∘h + h∘d = id − i∘p`,
/// * side conditions `h∘h = 0`, `p∘h = 0`, `h∘i = 0`.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub space: GradedSpace,
    pub d: GradedMap,
    pub homology: GradedSpace,
    pub p: GradedMap,
    pub i: GradedMap,
    pub h: GradedMap,
}

impl Contraction {
    /// The trivial contraction of a complex with zero differential.
    pub fn trivial(space: GradedSpace) -> Self {
        let d = GradedMap::zero(space.clone(), space.clone(), -1);
        Contraction {
            homology: space.clone(),
            p: GradedMap::identity(space.clone()),
            i: GradedMap::identity(space.clone()),
            h: GradedMap::zero(space.clone(), space.clone(), 1),
            space,
            d,
        }
    }

    /// Checks every contraction identity exactly, entry by entry.
    pub fn validate(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::InvalidContraction(what.to_string()));
        if self.d.degree() != -1
            || self.p.degree() != 0
            || self.i.degree() != 0
            || self.h.degree() != 1
        {
            return fail("wrong degrees: need |d| = -1, |p| = |i| = 0, |h| = +1");
        }
        let dd = self.d.compose(&self.d)?;
        if let Some((r, c, v)) = dd.first_nonzero() {
            return Err(Error::NotSquareZero {
                row: r,
                col: c,
                value: v.to_string(),
            });
        }
        if self.p.compose(&self.i)? != GradedMap::identity(self.homology.clone()) {
            return fail("p∘i is not the identity on homology");
        }
        let lhs = self
            .d
            .compose(&self.h)?
            .add(&self.h.compose(&self.d)?)?
            .add(&self.i.compose(&self.p)?)?;
        if lhs != GradedMap::identity(self.space.clone()) {
            return fail("d∘h + h∘d + i∘p is not the identity");
        }
        if !self.h.compose(&self.h)?.is_zero() {
            return fail("h∘h ≠ 0");
        }
        if !self.p.compose(&self.h)?.is_zero() {
            return fail("p∘h ≠ 0");
        }
        if !self.h.compose(&self.i)?.is_zero() {
            return fail("h∘i ≠ 0");
        }
        Ok(())
    }
}

struct DegreeData {
    /// global basis positions of this degree, in basis order
    idx: Vec<usize>,
    /// basis positions spanning a chosen complement of ker d (pivot columns)
    a_basis: Vec<usize>,
    /// kernel basis of d restricted to this degree, coordinates over `idx`
    kernel: Vec<Vec<Scalar>>,
    /// image of d arriving from one degree above, coordinates over `idx`;
    /// the m-th vector is d of `lift[m]`
    image: Vec<Vec<Scalar>>,
    /// global basis positions one degree up that `image` lifts to
    lift: Vec<usize>,
}

/// Computes homology of `(space, d)` by exact Gaussian elimination and
/// returns contraction data satisfying all side conditions.
///
/// The splittings pivot on the first usable column in basis order, so the
/// output is deterministic: `ker d` is split as homology ⊕ im d, and a
/// complement of `ker d` is spanned by the pivot basis vectors. Fails when
/// `d` has the wrong degree or does not square to zero; the error names the
/// first nonzero entry of `d∘d`.
pub fn homology_with_contraction(space: &GradedSpace, d: &GradedMap) -> Result<Contraction> {
    if d.source() != space || d.target() != space {
        return Err(Error::SpaceMismatch(
            "differential must be an endomorphism of the space".into(),
        ));
    }
    if d.degree() != -1 {
        return Err(Error::DegreeViolation(format!(
            "differential must have degree -1, got {}",
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

    let degrees = space.degrees();
    let mut data: BTreeMap<i64, DegreeData> = BTreeMap::new();
    for &k in &degrees {
        let idx = space.indices_in_degree(k);
        data.insert(
            k,
            DegreeData {
                idx,
                a_basis: Vec::new(),
                kernel: Vec::new(),
                image: Vec::new(),
                lift: Vec::new(),
            },
        );
    }
    for &k in &degrees {
        let idx = data[&k].idx.clone();
        let tgt_idx = space.indices_in_degree(k - 1);
        let mut block = Mat::zeros(tgt_idx.len(), idx.len());
        for (j, &col) in idx.iter().enumerate() {
            for (row, c) in d.column(col) {
                let r = tgt_idx
                    .iter()
                    .position(|t| t == row)
                    .expect("degree bookkeeping of d");
                block[(r, j)] = c.clone();
            }
        }
        let (_, pivots) = block.rref();
        let a_basis: Vec<usize> = pivots.iter().map(|&p| idx[p]).collect();
        let image: Vec<Vec<Scalar>> = pivots.iter().map(|&p| block.column(p)).collect();
        let kernel = block.kernel_basis();
        {
            let entry = data.get_mut(&k).unwrap();
            entry.a_basis = a_basis.clone();
            entry.kernel = kernel;
        }
        if !image.is_empty() {
            let below = data
                .get_mut(&(k - 1))
                .expect("nonzero image lands in a populated degree");
            below.image = image;
            below.lift = a_basis;
        }
    }

    // Homology representatives: inside each kernel, the complement of the
    // image, picked deterministically by pivoting [image | kernel].
    let mut h_basis: Vec<(String, i64)> = Vec::new();
    let mut chosen: BTreeMap<i64, Vec<Vec<Scalar>>> = BTreeMap::new();
    for (&k, dd) in &data {
        let n = dd.idx.len();
        let mut cols: Vec<Vec<Scalar>> = dd.image.clone();
        cols.extend(dd.kernel.iter().cloned());
        let stacked = Mat::from_columns(n, &cols);
        let (_, pivots) = stacked.rref();
        let mut h_here = Vec::new();
        for &p in &pivots {
            if p >= dd.image.len() {
                h_here.push(dd.kernel[p - dd.image.len()].clone());
            }
        }
        for m_idx in 0..h_here.len() {
            h_basis.push((format!("h{}_{}", k, m_idx), k));
        }
        chosen.insert(k, h_here);
    }
    let homology = GradedSpace::new(h_basis)?;

    // Assemble p, i, h from the per-degree decomposition [image | H' | A].
    let mut p_entries: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut i_entries: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut h_entries: Vec<(usize, usize, Scalar)> = Vec::new();

    for (&k, dd) in &data {
        let n = dd.idx.len();
        let h_here = &chosen[&k];
        let n_im = dd.image.len();
        let n_h = h_here.len();
        let mut cols: Vec<Vec<Scalar>> = dd.image.clone();
        cols.extend(h_here.iter().cloned());
        for &a in &dd.a_basis {
            let mut unit = vec![Scalar::zero(); n];
            let pos = dd.idx.iter().position(|&x| x == a).unwrap();
            unit[pos] = Scalar::one();
            cols.push(unit);
        }
        assert_eq!(cols.len(), n, "image ⊕ homology ⊕ complement must fill the degree");
        let decomposition = Mat::from_columns(n, &cols);
        let inv = decomposition.inverse();

        let h_global: Vec<usize> = homology.indices_in_degree(k);
        assert_eq!(h_global.len(), n_h);

        // i: homology basis element ↦ its chosen cycle representative.
        for (m_idx, rep) in h_here.iter().enumerate() {
            for (pos, c) in rep.iter().enumerate() {
                if !c.is_zero() {
                    i_entries.push((dd.idx[pos], h_global[m_idx], c.clone()));
                }
            }
        }

        for (j, &col) in dd.idx.iter().enumerate() {
            // p: the H'-block of the decomposition coordinates.
            for m_idx in 0..n_h {
                let c = inv[(n_im + m_idx, j)].clone();
                if !c.is_zero() {
                    p_entries.push((h_global[m_idx], col, c));
                }
            }
            // h: the image block lifts along d to the pivot basis one
            // degree up; everything else maps to zero.
            for m_idx in 0..n_im {
                let c = inv[(m_idx, j)].clone();
                if !c.is_zero() {
                    h_entries.push((dd.lift[m_idx], col, c));
                }
            }
        }
    }

    let p = GradedMap::from_entries(space.clone(), homology.clone(), 0, p_entries)?;
    let i = GradedMap::from_entries(homology.clone(), space.clone(), 0, i_entries)?;
    let h = GradedMap::from_entries(space.clone(), space.clone(), 1, h_entries)?;

    let contraction = Contraction {
        space: space.clone(),
        d: d.clone(),
        homology,
        p,
        i,
        h,
    };
    contraction.validate()?;
    Ok(contraction)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_differential_gives_trivial_contraction() {
        let v = GradedSpace::new(vec![("a", 0), ("b", 1), ("c", 3)]).unwrap();
        let d = GradedMap::zero(v.clone(), v.clone(), -1);
        let c = homology_with_contraction(&v, &d).unwrap();
        assert_eq!(c.homology.dim(), 3);
        assert!(c.h.is_zero());
        assert_eq!(c.p.compose(&c.i).unwrap(), GradedMap::identity(c.homology.clone()));
        c.validate().unwrap();
    }

    #[test]
    fn acyclic_two_term_complex() {
        // x in degree 1, y in degree 0, d(x) = 2y: homology vanishes and
        // h inverts d on the image.
        let v = GradedSpace::new(vec![("x", 1), ("y", 0)]).unwrap();
        let d = GradedMap::from_entries(
            v.clone(),
            v.clone(),
            -1,
            vec![(1, 0, Scalar::from_int(2))],
        )
        .unwrap();
        let c = homology_with_contraction(&v, &d).unwrap();
        assert_eq!(c.homology.dim(), 0);
        assert_eq!(c.h.entry(0, 1), Scalar::new(1, 2));
        c.validate().unwrap();
    }

    #[test]
    fn rank_one_differential_on_three_dims() {
        // x (deg 1) -> y (deg 0), z (deg 0) untouched.
        let v = GradedSpace::new(vec![("x", 1), ("y", 0), ("z", 0)]).unwrap();
        let d =
            GradedMap::from_entries(v.clone(), v.clone(), -1, vec![(1, 0, Scalar::one())]).unwrap();
        let c = homology_with_contraction(&v, &d).unwrap();
        // rank-nullity oracle: dim ker - rank per degree
        // degree 1: ker = 0; degree 0: ker = 2, image = 1 -> homology 1.
        assert_eq!(c.homology.dim(), 1);
        assert_eq!(c.homology.degree(0), 0);
        c.validate().unwrap();
    }

    #[test]
    fn rejects_non_square_zero() {
        let v = GradedSpace::new(vec![("a", 2), ("b", 1), ("c", 0)]).unwrap();
        let d = GradedMap::from_entries(
            v.clone(),
            v.clone(),
            -1,
            vec![(1, 0, Scalar::one()), (2, 1, Scalar::one())],
        )
        .unwrap();
        let err = homology_with_contraction(&v, &d).unwrap_err();
        match err {
            Error::NotSquareZero { row, col, .. } => {
                assert_eq!(row, "c");
                assert_eq!(col, "a");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
