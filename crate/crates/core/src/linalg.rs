//! Dense exact matrices over [`Scalar`], with row reduction.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: alloc::vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid(alloc::string::String::from(
                "ragged matrix rows",
            )));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn multiply(&self, rhs: &Matrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::SizeMismatch(self.cols, rhs.rows));
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank(self.to_rows())
    }

    /// A basis of `{v : self v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        kernel(self.to_rows(), self.cols)
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix shapes differ"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a - b)
    }
}

/// Panics on incompatible shapes; see [`Matrix::multiply`].
impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.multiply(rhs).expect("compatible shapes")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            f.write_str("  ")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", v)?;
            }
            writeln!(f)?;
        }
        f.write_str("]")
    }
}

/// Reduced row echelon form in place; returns pivot columns.
///
/// Pivots are the first nonzero entry scanning rows top to bottom.
pub fn row_reduce(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *v -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a list of row vectors.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    row_reduce(&mut rows, cols).len()
}

/// Rank computed incrementally: rows are reduced against an echelon basis as they arrive,
/// so memory stays proportional to the rank.
#[derive(Clone, Debug, Default)]
pub struct IncrementalRank {
    /// Echelon rows with their pivot column; each pivot entry is 1.
    basis: Vec<(usize, Vec<Scalar>)>,
}

impl IncrementalRank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Adds a row; returns `true` when it raised the rank.
    pub fn push(&mut self, mut row: Vec<Scalar>) -> bool {
        for (c, b) in &self.basis {
            if row[*c].is_zero() {
                continue;
            }
            let f = row[*c].clone();
            for (v, p) in row.iter_mut().zip(b) {
                if !p.is_zero() {
                    *v -= &(&f * p);
                }
            }
        }
        let Some(c) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let inv = row[c].inverse().expect("nonzero pivot");
        for v in row.iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        // keep earlier rows free of the new pivot column
        for (_, b) in self.basis.iter_mut() {
            if b[c].is_zero() {
                continue;
            }
            let f = b[c].clone();
            for (v, p) in b.iter_mut().zip(&row) {
                if !p.is_zero() {
                    *v -= &(&f * p);
                }
            }
        }
        self.basis.push((c, row));
        true
    }
}

/// A basis of the null space of the matrix given by `rows` (with `cols` columns).
pub fn kernel(mut rows: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let pivots = row_reduce(&mut rows, cols);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&rows[r][free];
        }
        out.push(v);
    }
    out
}

/// Solves `A x = b` for square invertible `A` given by rows.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = a.rows();
    if a.cols() != n || b.len() != n {
        return Err(Error::SizeMismatch(a.cols(), b.len()));
    }
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .cloned()
                .chain(core::iter::once(b[i].clone()))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut rows, n);
    if pivots.len() < n {
        return Err(Error::Invalid(alloc::string::String::from(
            "singular system",
        )));
    }
    Ok(rows.into_iter().map(|r| r[n].clone()).collect())
}

/// Coefficients `x` with `sum_k x_k columns[k] = target`; the columns must be independent.
pub fn solve_in_span(columns: &[Vec<Scalar>], target: &[Scalar]) -> Result<Vec<Scalar>> {
    let k = columns.len();
    let mut rows: Vec<Vec<Scalar>> = (0..target.len())
        .map(|i| {
            columns
                .iter()
                .map(|c| c[i].clone())
                .chain(core::iter::once(target[i].clone()))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut rows, k + 1);
    if pivots.len() != k || pivots.contains(&k) {
        return Err(Error::Invalid(alloc::string::String::from(
            "target outside the span",
        )));
    }
    Ok(rows.into_iter().take(k).map(|r| r[k].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ];
        assert_eq!(rank(rows.clone()), 2);
        let k = kernel(rows.clone(), 3);
        assert_eq!(k.len(), 1);
        let m = Matrix::from_rows(rows).unwrap();
        assert!(m.apply(&k[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn incremental_matches_batch() {
        let r2 = Scalar::sqrt_int(2);
        let rows = vec![
            vec![r2.clone(), s(1), s(0)],
            vec![s(2), r2.clone(), s(0)],
            vec![s(0), s(0), Scalar::i()],
        ];
        let mut inc = IncrementalRank::new();
        for r in rows.clone() {
            inc.push(r);
        }
        assert_eq!(inc.rank(), rank(rows));
        assert_eq!(inc.rank(), 2);
    }

    #[test]
    fn solve_small() {
        let a = Matrix::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(3)]]).unwrap();
        let x = solve(&a, &[s(3), s(4)]).unwrap();
        assert_eq!(x, vec![s(1), s(1)]);
    }
}
