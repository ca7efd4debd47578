use std::fmt;

use crate::error::{Error, Result};
use crate::polyalg::{Field, Polynomial, Ring, Scalar};

/// Dense square matrix over an exact field, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare);
        }
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| !field.contains(e)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&a| field.from_i64(a)).collect())
                .collect(),
        )
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn zero(field: Field, n: usize) -> Self {
        Matrix {
            n,
            entries: vec![field.zero(); n * n],
        }
    }

    pub fn diagonal(field: Field, diag: Vec<Scalar>) -> Self {
        let n = diag.len();
        let mut m = Self::zero(field, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(field: Field, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zero(field, n);
        for (j, &i) in perm.iter().enumerate() {
            m.entries[i * n + j] = field.one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc: Option<Scalar> = None;
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b);
                    acc = Some(match acc {
                        None => t,
                        Some(s) => s.add(&t),
                    });
                }
                out.push(acc.unwrap_or_else(|| self.entries[0].field().zero()));
            }
        }
        Ok(Matrix { n, entries: out })
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.n;
        if n == 0 {
            return Some(self.clone());
        }
        let field = self.entries[0].field();
        let mut a = self.rows();
        let mut inv = Matrix::identity(field, n).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let s = a[col][col].inv();
            for j in 0..n {
                a[col][j] = a[col][j].mul(&s);
                inv[col][j] = inv[col][j].mul(&s);
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let c = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = a[r][j].sub(&a[col][j].mul(&c));
                    inv[r][j] = inv[r][j].sub(&inv[col][j].mul(&c));
                }
            }
        }
        Some(Matrix::from_rows(field, inv).expect("square"))
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix, field: Field) -> Matrix {
        let n = self.n + other.n;
        let mut m = Matrix::zero(field, n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m.set(self.n + i, self.n + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// `m` copies of this matrix on variables ordered copy-minor: variable
    /// `(i, j)` (copy `j` of `i`) sits at index `i * m + j`.
    pub fn vector_copies(&self, m: usize, field: Field) -> Matrix {
        let n = self.n * m;
        let mut out = Matrix::zero(field, n);
        for k in 0..self.n {
            for i in 0..self.n {
                let a = self.get(k, i);
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    out.set(k * m + j, i * m + j, a.clone());
                }
            }
        }
        out
    }

    /// Images of the variables under this element: `x_j -> sum_k M[k][j] x_k`.
    pub fn variable_images(&self, ring: Ring) -> Vec<Polynomial> {
        (0..self.n)
            .map(|j| {
                let mut p = ring.zero();
                for k in 0..self.n {
                    let a = self.get(k, j);
                    if !a.is_zero() {
                        p = &p + &ring.var(k).scale(a);
                    }
                }
                p
            })
            .collect()
    }

    /// Integer-string rows, entries as residues or reduced fractions.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows()
            .into_iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_strings()
            .into_iter()
            .map(|r| format!("[{}]", r.join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}
