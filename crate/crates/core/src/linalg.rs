//! Dense matrices over a finite field, row reduction, kernels, and the two
//! maps from top-level data to mid-level data: coordinate expansion and
//! entrywise trace.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form with zero rows dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelon {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&c) = data.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvalidElement(c));
        }
        Ok(Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from rows; every row must have the width of the first.
    pub fn from_rows(field: &Field, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_width(field, cols, rows)
    }

    /// Like [`Mat::from_rows`] with an explicit width, so that an empty row
    /// list still has a definite shape.
    pub fn from_rows_width(field: &Field, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::shape(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn matmul(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field {
            return Err(Error::LevelMismatch {
                expected: self.field.to_string(),
                got: other.field.to_string(),
            });
        }
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b != 0 {
                        let idx = i * other.cols + j;
                        out.data[idx] = f.add(out.data[idx], f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::shape(format!(
                "cannot stack {}x{} over {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field || self.rows != other.rows {
            return Err(Error::shape(format!(
                "cannot place {}x{} beside {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Apply `f` to every entry, landing in `field`.
    pub fn map(&self, field: &Field, f: impl Fn(u32) -> u32) -> Mat {
        Mat {
            field: field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// The same entries regarded over an extension field.
    pub fn embed(&self, ext: &Field) -> Result<Mat> {
        if !ext.has_subfield(&self.field) {
            return Err(Error::LevelMismatch {
                expected: format!("an extension of {}", self.field),
                got: ext.to_string(),
            });
        }
        Ok(self.map(ext, |x| x))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    /// Deterministic Gauss-Jordan elimination: columns left to right, the
    /// first nonzero entry at or below the current row becomes the pivot.
    pub fn rref(&self) -> RowEchelon {
        let f = &self.field;
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(a[r * cols + c]).expect("pivot is nonzero");
            if inv != 1 {
                for j in c..cols {
                    a[r * cols + j] = f.mul(a[r * cols + j], inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = a[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = a[r * cols + j];
                    if v != 0 {
                        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, v));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r * cols);
        RowEchelon {
            mat: Mat {
                field: f.clone(),
                rows: r,
                cols,
                data: a,
            },
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rows form a basis of `{v : A v^T = 0}`.
    pub fn kernel(&self) -> Mat {
        let RowEchelon { mat: r, pivots, .. } = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Mat::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Replace each entry by its coordinates over the immediate base field
    /// (`1, x, ..., x^(d-1)` with `x` the class of the generator), giving a
    /// `rows x (cols * d)` matrix over the base.
    pub fn expand_coords(&self) -> Mat {
        let Some(base) = self.field.base() else {
            return self.clone();
        };
        let d = self.field.degree();
        let mut data = Vec::with_capacity(self.data.len() * d);
        for &x in &self.data {
            data.extend(self.field.digits(x));
        }
        Mat {
            field: base.clone(),
            rows: self.rows,
            cols: self.cols * d,
            data,
        }
    }

    /// Inverse of [`Mat::expand_coords`]: group every `degree(ext)`
    /// consecutive entries into one element of `ext`.
    pub fn collapse(&self, ext: &Field) -> Result<Mat> {
        if ext.base().is_none_or(|b| **b != *self.field) {
            return Err(Error::LevelMismatch {
                expected: format!("an extension over {}", self.field),
                got: ext.to_string(),
            });
        }
        let d = ext.degree();
        if !self.cols.is_multiple_of(d) {
            return Err(Error::shape(format!(
                "{} columns is not a multiple of {d}",
                self.cols
            )));
        }
        let data = self.data.chunks(d).map(|c| ext.from_digits(c)).collect();
        Ok(Mat {
            field: ext.clone(),
            rows: self.rows,
            cols: self.cols / d,
            data,
        })
    }

    /// Entrywise relative trace to the immediate base field.
    pub fn trace_entrywise(&self) -> Mat {
        match self.field.base() {
            None => self.clone(),
            Some(base) => self.map(base, |x| self.field.trace_to_base(x)),
        }
    }
}

impl RowEchelon {
    /// Subtract pivot-row multiples from `v`; the residual is zero iff `v`
    /// lies in the row space.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.mat.field();
        let mut v = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let factor = v[c];
            if factor == 0 {
                continue;
            }
            for (j, &x) in self.mat.row(i).iter().enumerate() {
                if x != 0 {
                    v[j] = f.sub(v[j], f.mul(factor, x));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coefficients expressing `v` in the rref rows, if it lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{}; {}x{}]", self.field, self.rows, self.cols)?;
        for r in self.rows() {
            write!(f, "\n  {:?}", r)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::GaloisField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(field: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Mat {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Mat::new(field, rows, cols, data).unwrap()
    }

    #[test]
    fn trivial_ranks() {
        let f = GaloisField::prime(3).unwrap();
        assert_eq!(Mat::identity(&f, 4).rank(), 4);
        assert_eq!(Mat::zeros(&f, 3, 5).rank(), 0);
        assert_eq!(Mat::zeros(&f, 0, 5).rank(), 0);
        assert_eq!(Mat::identity(&f, 3).kernel().nrows(), 0);
        assert_eq!(Mat::zeros(&f, 2, 3).kernel().nrows(), 3);
    }

    #[test]
    fn rank_nullity_and_kernel() {
        let f = GaloisField::prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = random(&f, 4, 6, &mut rng);
            let k = a.kernel();
            assert_eq!(k.nrows(), 6 - a.rank());
            assert!(a.matmul(&k.transpose()).unwrap().is_zero());
        }
    }

    #[test]
    fn rref_idempotent_and_transpose_rank() {
        let f = GaloisField::with_order(2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (r, c) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let a = random(&f, r, c, &mut rng);
            let e = a.rref();
            assert_eq!(e.mat.rref().mat, e.mat);
            assert_eq!(a.rank(), a.transpose().rank());
        }
    }

    #[test]
    fn expansion_and_trace_in_f4() {
        let f2 = GaloisField::prime(2).unwrap();
        let f4 = GaloisField::extension(&f2, vec![1, 1, 1]).unwrap();
        let m = Mat::from_rows(&f4, &[vec![2], vec![1]]).unwrap();
        assert_eq!(m.expand_coords().to_rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(m.expand_coords().collapse(&f4).unwrap(), m);
        let g = Mat::from_rows(&f4, &[vec![2, 3, 0, 2, 0], vec![0, 2, 3, 0, 2]]).unwrap();
        assert_eq!(
            g.trace_entrywise().to_rows(),
            vec![vec![1, 1, 0, 1, 0], vec![0, 1, 1, 0, 1]]
        );
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let f = GaloisField::prime(2).unwrap();
        let err = Mat::from_rows(&f, &[vec![1, 0], vec![1]]).unwrap_err();
        assert!(err.to_string().contains("row 2"));
    }

    #[test]
    fn membership_by_reduction() {
        let f = GaloisField::prime(5).unwrap();
        let a = Mat::from_rows(&f, &[vec![1, 2, 3], vec![0, 1, 4]]).unwrap();
        let e = a.rref();
        assert!(e.contains(&[1, 3, 2]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(e.coordinates(&[2, 4, 1]).unwrap(), vec![2, 4]);
    }
}
