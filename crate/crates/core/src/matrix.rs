//! Small dense row-major matrices.
//!
//! Only what the ladder representations and the truncated-basis oracle need:
//! products, sums, adjoints and diagonal extraction. Sizes stay below ~100.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![T::zero(); dim * dim],
        }
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.dim).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// True when every entry off the main diagonal is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }
}

impl<T> Matrix<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl Matrix<Complex64> {
    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.dim + j]
    }
}

impl<T> Mul for &Matrix<T>
where
    T: Clone + Zero + Mul<Output = T>,
{
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = Matrix::<T>::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let lhs = &self[(i, k)];
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let term = lhs.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + term;
                }
            }
        }
        out
    }
}

impl<T> Add for &Matrix<T>
where
    T: Clone + Zero,
{
    type Output = Matrix<T>;

    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T> Sub for &Matrix<T>
where
    T: Clone + Zero + Sub<Output = T>,
{
    type Output = Matrix<T>;

    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_shift_matrices_is_diagonal() {
        let mut up = Matrix::<f64>::zeros(3);
        up[(1, 0)] = 2.0;
        up[(2, 1)] = 3.0;
        let down = up.transpose();
        let p = &down * &up;
        assert!(p.is_diagonal());
        assert_eq!(p.diagonal(), vec![4.0, 9.0, 0.0]);
    }
}
