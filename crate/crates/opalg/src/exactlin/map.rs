//! Degree-homogeneous linear maps between graded spaces.
//!
//! Maps are stored as sparse columns. Tensor products of maps follow the
//! Koszul sign rule: moving a map of degree `d` past an element of degree
//! `e` contributes `(-1)^(d*e)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{GradedSpace, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMap {
    source: GradedSpace,
    target: GradedSpace,
    degree: i64,
    /// cols[j] holds the nonzero entries of the image of source basis
    /// element j, sorted by target index.
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl GradedMap {
    pub fn zero(source: GradedSpace, target: GradedSpace, degree: i64) -> Self {
        let cols = vec![Vec::new(); source.dim()];
        GradedMap {
            source,
            target,
            degree,
            cols,
        }
    }

    pub fn identity(space: GradedSpace) -> Self {
        let cols = (0..space.dim()).map(|j| vec![(j, Scalar::one())]).collect();
        GradedMap {
            source: space.clone(),
            target: space,
            degree: 0,
            cols,
        }
    }

    /// Builds a map from `(target index, source index, coefficient)`
    /// triples, checking degree homogeneity of every nonzero entry.
    pub fn from_entries(
        source: GradedSpace,
        target: GradedSpace,
        degree: i64,
        entries: Vec<(usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); source.dim()];
        for (row, col, c) in entries {
            if c.is_zero() {
                continue;
            }
            if target.degree(row) != source.degree(col) + degree {
                return Err(Error::DegreeViolation(format!(
                    "entry ({} <- {}) breaks homogeneity: |{}| = {} but |{}| + {} = {}",
                    target.name(row),
                    source.name(col),
                    target.name(row),
                    target.degree(row),
                    source.name(col),
                    degree,
                    source.degree(col) + degree,
                )));
            }
            let slot = acc[col].entry(row).or_insert_with(Scalar::zero);
            *slot += &c;
        }
        let cols = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        Ok(GradedMap {
            source,
            target,
            degree,
            cols,
        })
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.cols[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// First nonzero entry in column-major order, as
    /// `(target name, source name, value)`.
    pub fn first_nonzero(&self) -> Option<(String, String, Scalar)> {
        for (j, col) in self.cols.iter().enumerate() {
            if let Some((i, c)) = col.first() {
                return Some((
                    self.target.name(*i).to_string(),
                    self.source.name(j).to_string(),
                    c.clone(),
                ));
            }
        }
        None
    }

    /// Composition `self ∘ f`. Degrees add.
    pub fn compose(&self, f: &GradedMap) -> Result<GradedMap> {
        if f.target != self.source {
            return Err(Error::SpaceMismatch(
                "compose: inner target differs from outer source".into(),
            ));
        }
        let mut cols = Vec::with_capacity(f.source.dim());
        for j in 0..f.source.dim() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, c) in &f.cols[j] {
                for (i, d) in &self.cols[*k] {
                    let slot = acc.entry(*i).or_insert_with(Scalar::zero);
                    *slot += &(c * d);
                }
            }
            cols.push(
                acc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<Vec<_>>(),
            );
        }
        Ok(GradedMap {
            source: f.source.clone(),
            target: self.target.clone(),
            degree: self.degree + f.degree,
            cols,
        })
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap> {
        if self.source != other.source || self.target != other.target || self.degree != other.degree
        {
            return Err(Error::SpaceMismatch(
                "add: maps must share source, target and degree".into(),
            ));
        }
        let mut cols = Vec::with_capacity(self.cols.len());
        for j in 0..self.cols.len() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (i, c) in self.cols[j].iter().chain(other.cols[j].iter()) {
                let slot = acc.entry(*i).or_insert_with(Scalar::zero);
                *slot += c;
            }
            cols.push(
                acc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<Vec<_>>(),
            );
        }
        Ok(GradedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            cols,
        })
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedMap {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> GradedMap {
        let cols = if c.is_zero() {
            vec![Vec::new(); self.cols.len()]
        } else {
            self.cols
                .iter()
                .map(|col| col.iter().map(|(i, v)| (*i, v * c)).collect())
                .collect()
        };
        GradedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            cols,
        }
    }

    /// Applies the map to a coordinate vector over the source basis.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.source.dim(), "vector length mismatch");
        let mut out = vec![Scalar::zero(); self.target.dim()];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, d) in &self.cols[j] {
                out[*i] += &(c * d);
            }
        }
        out
    }
}

/// Weighted inversion data of a permutation given in one-line notation
/// (1-based images). Returns `(#inversions, Σ weights)` where the weight
/// of a crossing pair is the product of the degrees it transposes.
pub(crate) fn weighted_inversions(perm: &[usize], degrees: &[i64]) -> (u64, i64) {
    debug_assert_eq!(perm.len(), degrees.len());
    let mut inv = 0u64;
    let mut kos = 0i64;
    for k in 0..perm.len() {
        for l in k + 1..perm.len() {
            if perm[k] > perm[l] {
                inv += 1;
                kos += degrees[perm[k] - 1] * degrees[perm[l] - 1];
            }
        }
    }
    (inv, kos)
}

fn mixed_radix_encode(dims: &[usize], parts: &[usize]) -> usize {
    dims.iter()
        .zip(parts)
        .fold(0usize, |acc, (d, p)| acc * d + p)
}

/// Tensor product of maps, acting on the flat tensor product of their
/// sources with the Koszul sign rule.
pub fn tensor_power_map(factors: &[&GradedMap]) -> GradedMap {
    assert!(!factors.is_empty(), "tensor product needs at least one factor");
    let sources: Vec<&GradedSpace> = factors.iter().map(|f| f.source()).collect();
    let targets: Vec<&GradedSpace> = factors.iter().map(|f| f.target()).collect();
    let source = GradedSpace::tensor(&sources);
    let target = GradedSpace::tensor(&targets);
    let degree: i64 = factors.iter().map(|f| f.degree()).sum();
    let src_dims: Vec<usize> = sources.iter().map(|s| s.dim()).collect();
    let tgt_dims: Vec<usize> = targets.iter().map(|t| t.dim()).collect();

    // Nonzero source columns per factor; the cartesian product over these
    // visits exactly the columns with a chance of being nonzero.
    let live: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| {
            (0..f.source().dim())
                .filter(|&j| !f.column(j).is_empty())
                .collect()
        })
        .collect();

    let mut cols = vec![Vec::new(); source.dim()];
    if live.iter().any(|l| l.is_empty()) {
        return GradedMap {
            source,
            target,
            degree,
            cols,
        };
    }

    let n = factors.len();
    let mut choice = vec![0usize; n];
    'outer: loop {
        let parts: Vec<usize> = (0..n).map(|m| live[m][choice[m]]).collect();
        let flat_src = mixed_radix_encode(&src_dims, &parts);

        // Koszul: factor m (degree |f_m|) moves past the first m-1
        // source slots.
        let mut kos = 0i64;
        let mut prefix = 0i64;
        for m in 0..n {
            kos += factors[m].degree() * prefix;
            prefix += sources[m].degree(parts[m]);
        }
        let base = Scalar::sign(kos);

        // Cartesian product of the per-factor column entries.
        let entry_cols: Vec<&[(usize, Scalar)]> =
            (0..n).map(|m| factors[m].column(parts[m])).collect();
        let mut pick = vec![0usize; n];
        let mut out: Vec<(usize, Scalar)> = Vec::new();
        'inner: loop {
            let mut coeff = base.clone();
            let mut rows = Vec::with_capacity(n);
            for m in 0..n {
                let (r, c) = &entry_cols[m][pick[m]];
                rows.push(*r);
                coeff *= c;
            }
            out.push((mixed_radix_encode(&tgt_dims, &rows), coeff));
            for m in (0..n).rev() {
                pick[m] += 1;
                if pick[m] < entry_cols[m].len() {
                    continue 'inner;
                }
                pick[m] = 0;
            }
            break;
        }
        out.sort_by_key(|(r, _)| *r);
        cols[flat_src] = out;

        for m in (0..n).rev() {
            choice[m] += 1;
            if choice[m] < live[m].len() {
                continue 'outer;
            }
            choice[m] = 0;
        }
        break;
    }

    GradedMap {
        source,
        target,
        degree,
        cols,
    }
}

/// The Koszul-signed permutation action on a tensor power:
/// `a_1 ⊗ … ⊗ a_n ↦ ± a_{σ(1)} ⊗ … ⊗ a_{σ(n)}` where the sign counts
/// degree-weighted crossings. `perm` is in one-line notation, 1-based.
pub fn permutation_map(space: &GradedSpace, perm: &[usize]) -> GradedMap {
    let n = perm.len();
    let power = space.tensor_power(n);
    let dim = space.dim();
    let mut cols = Vec::with_capacity(power.dim());
    for flat in 0..power.dim() {
        let parts = GradedSpace::tensor_index_decode(dim, n, flat);
        let degrees: Vec<i64> = parts.iter().map(|&p| space.degree(p)).collect();
        let (_, kos) = weighted_inversions(perm, &degrees);
        let permuted: Vec<usize> = perm.iter().map(|&k| parts[k - 1]).collect();
        let row = GradedSpace::tensor_index_encode(dim, &permuted);
        cols.push(vec![(row, Scalar::sign(kos))]);
    }
    GradedMap {
        source: power.clone(),
        target: power,
        degree: 0,
        cols,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space3() -> GradedSpace {
        GradedSpace::new(vec![("a", 0), ("b", 1), ("c", 2)]).unwrap()
    }

    #[test]
    fn compose_identity_and_zero() {
        let v = space3();
        let id = GradedMap::identity(v.clone());
        let f = GradedMap::from_entries(
            v.clone(),
            v.clone(),
            1,
            vec![(1, 0, Scalar::from_int(2)), (2, 1, Scalar::new(1, 3))],
        )
        .unwrap();
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
        let z = GradedMap::zero(v.clone(), v.clone(), 0);
        assert!(f.compose(&z).unwrap().is_zero());
    }

    #[test]
    fn degree_homogeneity_enforced() {
        let v = space3();
        // a has degree 0, c degree 2: an entry c <- a in a degree-1 map is illegal.
        let bad = GradedMap::from_entries(v.clone(), v, 1, vec![(2, 0, Scalar::one())]);
        assert!(bad.is_err());
    }

    #[test]
    fn compose_rejects_space_mismatch() {
        let v = space3();
        let w = GradedSpace::new(vec![("p", 0), ("q", 1)]).unwrap();
        let f = GradedMap::identity(v);
        let g = GradedMap::identity(w);
        assert!(matches!(
            g.compose(&f),
            Err(crate::error::Error::SpaceMismatch(_))
        ));
    }

    #[test]
    fn tensor_identity_is_identity() {
        let v = space3();
        let id = GradedMap::identity(v.clone());
        let t = tensor_power_map(&[&id, &id]);
        assert_eq!(t, GradedMap::identity(v.tensor_power(2)));
    }

    #[test]
    fn koszul_sign_in_tensor() {
        // d ⊗ id on a ⊗ b picks up no sign; id ⊗ d on b ⊗ a picks up
        // (-1)^{|d||b|} = -1 for odd b.
        let v = GradedSpace::new(vec![("x0", 0), ("x1", 1)]).unwrap();
        let d = GradedMap::from_entries(v.clone(), v.clone(), -1, vec![(0, 1, Scalar::one())])
            .unwrap();
        let id = GradedMap::identity(v.clone());

        let left = tensor_power_map(&[&d, &id]);
        // column x1 ⊗ x0 = flat 2 -> x0 ⊗ x0 with +1
        assert_eq!(left.entry(0, 2), Scalar::one());

        let right = tensor_power_map(&[&id, &d]);
        // column x1 ⊗ x1 = flat 3 -> x1 ⊗ x0 = flat 2 with sign (-1)^{1·1}
        assert_eq!(right.entry(2, 3), Scalar::from_int(-1));
        // column x0 ⊗ x1 = flat 1 -> x0 ⊗ x0 with +1 (x0 even)
        assert_eq!(right.entry(0, 1), Scalar::one());
    }

    #[test]
    fn double_swap_is_identity() {
        let v = space3();
        let swap = permutation_map(&v, &[2, 1]);
        let twice = swap.compose(&swap).unwrap();
        assert_eq!(twice, GradedMap::identity(v.tensor_power(2)));
    }
}
