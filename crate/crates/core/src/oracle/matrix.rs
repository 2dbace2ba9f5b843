//! Dense matrices over the rationals with exact Gaussian elimination.

use std::fmt;
use std::ops::Mul;

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = Q::from_integer(x);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = *x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Q::zero(), |acc, j| {
                    let a = self[(i, j)];
                    if a.is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        acc + a * v[j]
                    }
                })
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let x = m[(row, j)];
                m[(row, j)] = x * inv;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m[(r, col)];
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let x = m[(row, j)];
                    if !x.is_zero() {
                        m[(r, j)] = m[(r, j)] - f * x;
                    }
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

    /// Basis of the kernel, as the columns of a `cols x nullity` matrix.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (b, &f) in free.iter().enumerate() {
            basis[(f, b)] = Q::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                basis[(pc, b)] = -r[(pr, f)];
            }
        }
        basis
    }

    /// Unique solution of `self * x = b` for a matrix of full column rank;
    /// `None` if `b` is outside the column space.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        assert_eq!(pivots.len(), self.cols, "solve needs full column rank");
        Some((0..self.cols).map(|i| r[(i, self.cols)]).collect())
    }

    /// Standard basis vectors `e_j` that extend the column space of `self` to
    /// the whole ambient space, chosen greedily by index.
    pub fn complement_basis(&self) -> Vec<usize> {
        let mut aug = Matrix::zeros(self.rows, self.cols + self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols + i)] = Q::one();
        }
        aug.rref()
            .1
            .into_iter()
            .filter(|&p| p >= self.cols)
            .map(|p| p - self.cols)
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;

    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for p in 0..self.cols {
                let a = self[(i, p)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs[(p, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)] + a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.nullspace();
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::zeros(3, 4).nullspace().cols(), 4);
        assert_eq!(Matrix::identity(5).rank(), 5);
    }

    #[test]
    fn solve_and_complement() {
        let a = Matrix::from_rows(&[vec![1, 0], vec![1, 1], vec![0, 1]]);
        let b: Vec<Q> = [2, 5, 3].iter().map(|&x| Q::from_integer(x)).collect();
        assert_eq!(a.solve(&b), Some(vec![Q::from_integer(2), Q::from_integer(3)]));
        let off: Vec<Q> = [1, 0, 0].iter().map(|&x| Q::from_integer(x)).collect();
        assert_eq!(a.solve(&off), None);
        assert_eq!(a.complement_basis(), vec![0]);
        assert_eq!(Matrix::zeros(2, 0).complement_basis(), vec![0, 1]);
    }

    #[test]
    fn rational_pivots() {
        let m = Matrix::from_rows(&[vec![2, 3], vec![4, 5]]);
        assert_eq!(m.rank(), 2);
        let b = vec![Q::from_integer(1), Q::from_integer(1)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        assert_eq!(x[0], Q::new(-1, 1));
    }
}
