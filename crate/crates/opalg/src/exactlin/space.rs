//! Finite-dimensional integer-graded vector spaces with named bases.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// An ordered basis of named, graded elements. Names are unique within a
/// space; degrees may be any integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSpace {
    basis: Vec<(String, i64)>,
}

impl GradedSpace {
    pub fn new<S: Into<String>>(basis: Vec<(S, i64)>) -> Result<Self> {
        let basis: Vec<(String, i64)> = basis.into_iter().map(|(n, d)| (n.into(), d)).collect();
        let mut seen = BTreeMap::new();
        for (name, _) in &basis {
            if seen.insert(name.clone(), ()).is_some() {
                return Err(Error::DuplicateBasisName(name.clone()));
            }
        }
        Ok(GradedSpace { basis })
    }

    /// The zero space.
    pub fn empty() -> Self {
        GradedSpace { basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].0
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|(n, _)| n == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.basis.iter().map(|(n, d)| (n.as_str(), *d))
    }

    /// Degrees occurring in the basis, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.basis.iter().map(|(_, d)| *d).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Basis indices sitting in a given degree, in basis order.
    pub fn indices_in_degree(&self, degree: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == degree).collect()
    }

    /// The space with every degree shifted up by one.
    pub fn suspend(&self) -> GradedSpace {
        GradedSpace {
            basis: self.basis.iter().map(|(n, d)| (n.clone(), d + 1)).collect(),
        }
    }

    /// Flat tensor product. Basis elements are tuples in row-major order
    /// (the last factor varies fastest); degrees add; names are joined
    /// with `⊗`.
    pub fn tensor(factors: &[&GradedSpace]) -> GradedSpace {
        assert!(!factors.is_empty(), "tensor product needs at least one factor");
        let mut basis: Vec<(String, i64)> = vec![(String::new(), 0)];
        for f in factors {
            let mut next = Vec::with_capacity(basis.len() * f.dim());
            for (name, deg) in &basis {
                for (fname, fdeg) in f.iter() {
                    let joined = if name.is_empty() {
                        fname.to_string()
                    } else {
                        format!("{name}⊗{fname}")
                    };
                    next.push((joined, deg + fdeg));
                }
            }
            basis = next;
        }
        GradedSpace { basis }
    }

    /// The n-fold tensor power of one space.
    pub fn tensor_power(&self, n: usize) -> GradedSpace {
        let factors: Vec<&GradedSpace> = std::iter::repeat(self).take(n).collect();
        GradedSpace::tensor(&factors)
    }

    /// Decodes a flat tensor-power index into per-factor indices.
    pub fn tensor_index_decode(dim: usize, n: usize, flat: usize) -> Vec<usize> {
        let mut out = vec![0usize; n];
        let mut rest = flat;
        for k in (0..n).rev() {
            out[k] = rest % dim;
            rest /= dim;
        }
        out
    }

    /// Encodes per-factor indices into a flat tensor-power index.
    pub fn tensor_index_encode(dim: usize, parts: &[usize]) -> usize {
        parts.iter().fold(0, |acc, &p| acc * dim + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_names() {
        assert!(GradedSpace::new(vec![("a", 0), ("a", 1)]).is_err());
    }

    #[test]
    fn tensor_is_row_major() {
        let v = GradedSpace::new(vec![("a", 1), ("b", 2)]).unwrap();
        let vv = v.tensor_power(2);
        assert_eq!(vv.dim(), 4);
        assert_eq!(vv.name(0), "a⊗a");
        assert_eq!(vv.name(1), "a⊗b");
        assert_eq!(vv.degree(3), 4);
        assert_eq!(GradedSpace::tensor_index_decode(2, 2, 1), vec![0, 1]);
        assert_eq!(GradedSpace::tensor_index_encode(2, &[1, 0]), 2);
    }

    #[test]
    fn suspension_shifts_degrees() {
        let v = GradedSpace::new(vec![("a", -1), ("b", 3)]).unwrap();
        let sv = v.suspend();
        assert_eq!(sv.degree(0), 0);
        assert_eq!(sv.degree(1), 4);
    }
}
