// SPDX-License-Identifier: Apache-2.0

//! Square matrices over [`CycloNumber`] with exact determinant, inverse and
//! kernel computations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;

use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct UMatrix {
    dim: usize,
    data: Vec<CycloNumber>,
}

impl UMatrix {
    pub fn from_rows(rows: Vec<Vec<CycloNumber>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        UMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> CycloNumber) -> Self {
        let data = (0..dim * dim).map(|i| f(i / dim, i % dim)).collect();
        UMatrix { dim, data }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, CycloNumber::one())
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| CycloNumber::zero())
    }

    pub fn scalar(dim: usize, c: CycloNumber) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                c.clone()
            } else {
                CycloNumber::zero()
            }
        })
    }

    pub fn diag(entries: Vec<CycloNumber>) -> Self {
        let dim = entries.len();
        Self::from_fn(dim, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                CycloNumber::zero()
            }
        })
    }

    /// Diagonal matrix of roots of unity `diag(ζ_n^{e_0}, ζ_n^{e_1}, …)`.
    pub fn diag_roots(n: u32, exps: &[i64]) -> Self {
        Self::diag(
            exps.iter()
                .map(|&e| CycloNumber::root_of_unity(n, e))
                .collect(),
        )
    }

    /// Permutation matrix with `M[i][perm[i]] = 1`.
    pub fn permutation(perm: &[usize]) -> Self {
        let dim = perm.len();
        Self::from_fn(dim, |i, j| {
            if perm[i] == j {
                CycloNumber::one()
            } else {
                CycloNumber::zero()
            }
        })
    }

    /// The cyclic shift `(x1, x2, x3) ↦ (x2, x3, x1)` shared by several generators.
    pub fn cyclic_shift3() -> Self {
        Self::permutation(&[1, 2, 0])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNumber) {
        self.data[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[CycloNumber] {
        &self.data
    }

    /// Least common multiple of the entry orders.
    pub fn order(&self) -> u32 {
        self.data.iter().fold(1u32, |acc, c| acc.lcm(&c.order()))
    }

    pub fn canonical(&self) -> Self {
        UMatrix {
            dim: self.dim,
            data: self.data.iter().map(CycloNumber::canonical).collect(),
        }
    }

    /// Hash key: canonical entry coefficients at a fixed order.
    pub fn key_at(&self, order: u32) -> Vec<BigRational> {
        self.data.iter().flat_map(|c| c.key_at(order)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose `M*`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        UMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> CycloNumber {
        (0..self.dim)
            .fold(CycloNumber::zero(), |acc, i| &acc + self.get(i, i))
            .canonical()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// `M · M* = I`, exactly.
    pub fn is_unitary(&self) -> bool {
        (self * &self.adjoint()).is_identity()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Exact determinant by Laplace expansion along the first row for small
    /// dimensions and Gaussian elimination otherwise.
    pub fn det(&self) -> CycloNumber {
        if self.dim <= 4 {
            return laplace_det(self.dim, &self.data).canonical();
        }
        let (_, det) = self.echelon();
        det.canonical()
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.dim);
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &b).canonical();
            }
            b = (&b * &b).canonical();
            e >>= 1;
        }
        Ok(acc)
    }

    /// Gauss–Jordan inverse over the cyclotomic field.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.canonical();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::DivisionByZero)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p_inv = a.get(col, col).inv()?;
            a.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.add_row_multiple(r, col, &(-&f));
                    inv.add_row_multiple(r, col, &(-&f));
                }
            }
        }
        Ok(inv.canonical())
    }

    /// Basis of `ker(M)` from the reduced row echelon form. Each basis vector
    /// has a 1 in its free coordinate.
    pub fn kernel(&self) -> Vec<Vec<CycloNumber>> {
        let (rref, _) = self.echelon();
        let n = self.dim;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for r in 0..n {
            if let Some(c) = (0..n).find(|&c| !rref.get(r, c).is_zero()) {
                pivots.push((r, c));
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        (0..n)
            .filter(|c| !pivot_cols.contains(c))
            .map(|free| {
                let mut v = vec![CycloNumber::zero(); n];
                v[free] = CycloNumber::one();
                for &(r, pc) in &pivots {
                    v[pc] = (-rref.get(r, free)).canonical();
                }
                v
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.dim - self.kernel().len()
    }

    /// Reduced row echelon form together with the determinant.
    fn echelon(&self) -> (Self, CycloNumber) {
        let n = self.dim;
        let mut a = self.canonical();
        let mut det = CycloNumber::one();
        let mut row = 0;
        for col in 0..n {
            if row == n {
                break;
            }
            let Some(pivot) = (row..n).find(|&r| !a.get(r, col).is_zero()) else {
                det = CycloNumber::zero();
                continue;
            };
            if pivot != row {
                a.swap_rows(row, pivot);
                det = -&det;
            }
            let p = a.get(row, col).clone();
            det = (&det * &p).canonical();
            let p_inv = p.inv().expect("nonzero pivot");
            a.scale_row(row, &p_inv);
            for r in 0..n {
                if r != row && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.add_row_multiple(r, row, &(-&f));
                }
            }
            row += 1;
        }
        if row < n {
            det = CycloNumber::zero();
        }
        (a, det)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 != r2 {
            for c in 0..self.dim {
                self.data.swap(r1 * self.dim + c, r2 * self.dim + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, f: &CycloNumber) {
        for c in 0..self.dim {
            let v = (self.get(r, c) * f).canonical();
            self.set(r, c, v);
        }
    }

    /// `row[r] += f · row[src]`
    fn add_row_multiple(&mut self, r: usize, src: usize, f: &CycloNumber) {
        for c in 0..self.dim {
            let v = (self.get(r, c) + &(self.get(src, c) * f)).canonical();
            self.set(r, c, v);
        }
    }

    pub fn apply(&self, v: &[CycloNumber]) -> Vec<CycloNumber> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .fold(CycloNumber::zero(), |acc, j| {
                        &acc + &(self.get(i, j) * &v[j])
                    })
                    .canonical()
            })
            .collect()
    }

    /// Complex embedding, row-major.
    pub fn embed(&self) -> Vec<Complex64> {
        self.data.iter().map(CycloNumber::embed).collect()
    }
}

fn laplace_det(dim: usize, data: &[CycloNumber]) -> CycloNumber {
    match dim {
        0 => CycloNumber::one(),
        1 => data[0].clone(),
        _ => {
            let mut acc = CycloNumber::zero();
            for j in 0..dim {
                let a = &data[j];
                if a.is_zero() {
                    continue;
                }
                let minor: Vec<CycloNumber> = (1..dim)
                    .flat_map(|r| (0..dim).filter(move |&c| c != j).map(move |c| (r, c)))
                    .map(|(r, c)| data[r * dim + c].clone())
                    .collect();
                let term = a * &laplace_det(dim - 1, &minor);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

impl Mul for &UMatrix {
    type Output = UMatrix;
    fn mul(self, rhs: &UMatrix) -> UMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        UMatrix::from_fn(n, |i, j| {
            let mut acc = CycloNumber::zero();
            for k in 0..n {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if !a.raw_coeffs().iter().all(num_traits::Zero::is_zero)
                    && !b.raw_coeffs().iter().all(num_traits::Zero::is_zero)
                {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }
}

impl Add for &UMatrix {
    type Output = UMatrix;
    fn add(self, rhs: &UMatrix) -> UMatrix {
        UMatrix::from_fn(self.dim, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &UMatrix {
    type Output = UMatrix;
    fn sub(self, rhs: &UMatrix) -> UMatrix {
        UMatrix::from_fn(self.dim, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &UMatrix {
    type Output = UMatrix;
    fn neg(self) -> UMatrix {
        UMatrix::from_fn(self.dim, |i, j| -self.get(i, j))
    }
}

impl Mul for UMatrix {
    type Output = UMatrix;
    fn mul(self, rhs: UMatrix) -> UMatrix {
        &self * &rhs
    }
}

impl fmt::Display for UMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for UMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UMatrix{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;

    fn w(k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(3, k)
    }

    #[test]
    fn permutation_and_diag_relations() {
        let a = UMatrix::cyclic_shift3();
        let b = UMatrix::diag_roots(3, &[0, 1, 2]);
        assert!(a.pow(3).unwrap().is_identity());
        assert!(b.pow(3).unwrap().is_identity());
        let comm = &(&a.inverse().unwrap() * &b.inverse().unwrap()) * &(&a * &b);
        assert_eq!(comm, UMatrix::scalar(3, w(1)));
        assert!(a.is_unitary() && b.is_unitary());
    }

    #[test]
    fn determinants() {
        let b = UMatrix::diag_roots(3, &[0, 1, 2]);
        assert!(b.det().is_one());
        assert!((&b - &UMatrix::identity(3)).det().is_zero());
        let m = UMatrix::from_rows(vec![
            vec![1.into(), 2.into(), 0.into()],
            vec![0.into(), 1.into(), 3.into()],
            vec![4.into(), 0.into(), 1.into()],
        ]);
        // 1*(1) - 2*(0 - 12) = 25
        assert_eq!(m.det(), CycloNumber::from_int(25));
    }

    #[test]
    fn kernel_of_cyclic_shift_minus_identity() {
        let a = UMatrix::cyclic_shift3();
        let ker = (&a - &UMatrix::identity(3)).kernel();
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        assert!(v[0] == v[1] && v[1] == v[2]);
        assert_eq!(UMatrix::zero(3).kernel().len(), 3);
    }

    #[test]
    fn inverse_round_trip() {
        let m = UMatrix::from_rows(vec![
            vec![1.into(), w(1), 1.into()],
            vec![1.into(), 1.into(), w(1)],
            vec![w(1), 1.into(), 1.into()],
        ]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        // M M* = 3 I
        assert_eq!(
            &m * &m.adjoint(),
            UMatrix::scalar(3, CycloNumber::from_rational(rat(3, 1)))
        );
    }

    #[test]
    fn singular_inverse_fails() {
        assert!(matches!(
            UMatrix::zero(2).inverse(),
            Err(Error::DivisionByZero)
        ));
    }
}
