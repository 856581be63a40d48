//! Dense exact Gaussian elimination for the small matrices that show up in
//! homology, quotient and rank computations.

use crate::exactlin::Scalar;

/// A dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Mat::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, c) in col.iter().enumerate() {
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Reduced row-echelon form with the pivot columns, chosen as the first
    /// usable column in order so the output is deterministic.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let v = &m[(r, c)] - &(&factor * &m[(row, c)]);
                    m[(r, c)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the kernel, one vector per free column, deterministic.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row_idx, &p) in pivots.iter().enumerate() {
                let c = &r[(row_idx, free)];
                if !c.is_zero() {
                    v[p] = -c;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix by Gauss–Jordan on `[self | I]`.
    /// Panics when singular.
    pub fn inverse(&self) -> Mat {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (red, pivots) = aug.rref();
        assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "singular matrix");
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        inv
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_kernel() {
        // [1 2 3; 2 4 6; 0 1 1] has rank 2.
        let mut m = Mat::zeros(3, 3);
        let vals = [[1, 2, 3], [2, 4, 6], [0, 1, 1]];
        for i in 0..3 {
            for j in 0..3 {
                m[(i, j)] = Scalar::from_int(vals[i][j]);
            }
        }
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        // check m * k = 0
        for row in 0..3 {
            let mut acc = Scalar::zero();
            for j in 0..3 {
                acc += &(&m[(row, j)] * &ker[0][j]);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let mut m = Mat::zeros(2, 2);
        m[(0, 0)] = Scalar::from_int(2);
        m[(0, 1)] = Scalar::from_int(1);
        m[(1, 0)] = Scalar::from_int(7);
        m[(1, 1)] = Scalar::from_int(4);
        let inv = m.inverse();
        let mut prod = Mat::zeros(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Scalar::zero();
                for k in 0..2 {
                    acc += &(&m[(i, k)] * &inv[(k, j)]);
                }
                prod[(i, j)] = acc;
            }
        }
        assert_eq!(prod, Mat::identity(2));
    }
}
