//! Dense matrices over any exact scalar field, with fraction-free-ish
//! Gaussian elimination for determinants, inverses, kernels and rank.

use crate::error::{Error, Result};
use crate::exact::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<T: Scalar> {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries, length rows·cols.
    pub a: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn new(rows: usize, cols: usize, a: Vec<T>) -> Mat<T> {
        assert_eq!(a.len(), rows * cols, "entry count mismatch");
        Mat { rows, cols, a }
    }

    pub fn zero(rows: usize, cols: usize) -> Mat<T> {
        Mat::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Mat<T> {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Mat<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.a[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat<T> {
        let mut m = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        m
    }

    /// Conjugate transpose (equal to `transpose` for scalars with trivial
    /// involution).
    pub fn conj_transpose(&self) -> Mat<T> {
        let mut m = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(j, i) = self.at(i, j).conj();
            }
        }
        m
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat::new(self.rows, self.cols, self.a.iter().map(f).collect())
    }

    pub fn add(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::new(
            self.rows,
            self.cols,
            self.a
                .iter()
                .zip(&other.a)
                .map(|(x, y)| x.add(y))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::new(
            self.rows,
            self.cols,
            self.a
                .iter()
                .zip(&other.a)
                .map(|(x, y)| x.sub(y))
                .collect(),
        )
    }

    pub fn neg(&self) -> Mat<T> {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, s: &T) -> Mat<T> {
        self.map(|x| x.mul(s))
    }

    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut m = Mat::<T>::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.at(i, k);
                if lik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = lik.mul(other.at(k, j));
                    let cur = m.at(i, j).add(&t);
                    *m.at_mut(i, j) = cur;
                }
            }
        }
        m
    }

    /// Stack horizontally: [self | other].
    pub fn hcat(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.rows, other.rows);
        let mut m = Mat::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.cols {
                *m.at_mut(i, self.cols + j) = other.at(i, j).clone();
            }
        }
        m
    }

    /// Stack vertically: [self; other].
    pub fn vcat(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.cols);
        let mut a = self.a.clone();
        a.extend(other.a.iter().cloned());
        Mat::new(self.rows + other.rows, self.cols, a)
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Mat<T>) -> Mat<T> {
        let mut m = Mat::zero(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(i, j) = self.at(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                *m.at_mut(self.rows + i, self.cols + j) = other.at(i, j).clone();
            }
        }
        m
    }

    /// Leading principal k×k submatrix.
    pub fn leading(&self, k: usize) -> Mat<T> {
        assert!(k <= self.rows && k <= self.cols);
        let mut m = Mat::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                *m.at_mut(i, j) = self.at(i, j).clone();
            }
        }
        m
    }

    /// Reduce to row echelon form in place; returns (rank, det-scale sign
    /// tracking as the accumulated product of pivots times swap parity).
    fn echelon(&mut self) -> (usize, T) {
        let mut det = T::one();
        let mut pr = 0; // pivot row
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(piv) = (pr..self.rows).find(|&i| !self.at(i, pc).is_zero()) else {
                det = T::zero();
                continue;
            };
            if piv != pr {
                for j in 0..self.cols {
                    self.a.swap(pr * self.cols + j, piv * self.cols + j);
                }
                det = det.neg();
            }
            let p = self.at(pr, pc).clone();
            det = det.mul(&p);
            let pinv = p.inv().expect("nonzero pivot");
            for j in pc..self.cols {
                let v = self.at(pr, j).mul(&pinv);
                *self.at_mut(pr, j) = v;
            }
            for i in 0..self.rows {
                if i == pr || self.at(i, pc).is_zero() {
                    continue;
                }
                let f = self.at(i, pc).clone();
                for j in pc..self.cols {
                    let v = self.at(i, j).sub(&f.mul(self.at(pr, j)));
                    *self.at_mut(i, j) = v;
                }
            }
            pr += 1;
        }
        (pr, det)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelon().0
    }

    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let (rank, det) = m.echelon();
        if rank < self.rows {
            T::zero()
        } else {
            det
        }
    }

    pub fn inverse(&self) -> Result<Mat<T>> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = self.hcat(&Mat::identity(n));
        aug.echelon();
        // invertible iff the left block reduced to the identity
        let id = Mat::<T>::identity(n);
        for i in 0..n {
            for j in 0..n {
                if aug.at(i, j) != id.at(i, j) {
                    return Err(Error::Singular);
                }
            }
        }
        let mut inv = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Ok(inv)
    }

    /// Basis of the right kernel, as columns of a matrix (cols = nullity).
    pub fn kernel(&self) -> Mat<T> {
        let mut m = self.clone();
        m.echelon();
        // identify pivot columns
        let mut pivots = Vec::new();
        let mut pr = 0;
        for j in 0..m.cols {
            if pr < m.rows && !m.at(pr, j).is_zero() {
                pivots.push(j);
                pr += 1;
            }
        }
        let free: Vec<usize> = (0..m.cols).filter(|j| !pivots.contains(j)).collect();
        let mut k = Mat::zero(self.cols, free.len());
        for (fi, &f) in free.iter().enumerate() {
            *k.at_mut(f, fi) = T::one();
            for (pi, &p) in pivots.iter().enumerate() {
                *k.at_mut(p, fi) = m.at(pi, f).neg();
            }
        }
        k
    }

    /// Solve self·x = b for a single column b; None if inconsistent or the
    /// solution is not unique in the pivot variables (free vars set to 0).
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let rhs = Mat::new(self.rows, 1, b.to_vec());
        let mut aug = self.hcat(&rhs);
        aug.echelon();
        let mut x = vec![T::zero(); self.cols];
        let mut pr = 0;
        for j in 0..self.cols {
            if pr < aug.rows && !aug.at(pr, j).is_zero() {
                x[j] = aug.at(pr, self.cols).clone();
                pr += 1;
            }
        }
        // consistency: remaining rows must have zero rhs
        for i in pr..aug.rows {
            if !aug.at(i, self.cols).is_zero() {
                return None;
            }
        }
        // verify (guards the free-variable choice)
        let xv = Mat::new(self.cols, 1, x.clone());
        if self.mul(&xv).a == rhs.a {
            Some(x)
        } else {
            None
        }
    }

    /// Column echelon canonical form: unique reduced basis of the column
    /// space, used to compare subspaces.
    pub fn column_echelon(&self) -> Mat<T> {
        let mut m = self.transpose();
        m.echelon();
        let r = {
            let mut r = 0;
            for i in 0..m.rows {
                if (0..m.cols).any(|j| !m.at(i, j).is_zero()) {
                    r = i + 1;
                }
            }
            r
        };
        let mut top = Mat::zero(r, m.cols);
        for i in 0..r {
            for j in 0..m.cols {
                *top.at_mut(i, j) = m.at(i, j).clone();
            }
        }
        top.transpose()
    }
}
