//! Additive (`F_q`-linear) codes in `F_{q^m}^n` and linear codes over a
//! single tower level.
//!
//! An [`AdditiveCode`] is stored canonically: its basis is the reduced row
//! echelon form of the coordinate expansion over `F_q`, collapsed back to
//! `F_{q^m}`. Two codes are equal exactly when their stored bases are.
//! Every dimension of an additive code is an `F_q`-dimension.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldTower, Level};
use crate::linalg::{Mat, RowEchelon};

/// Largest number of codewords [`min_distance`](AdditiveCode::min_distance)
/// will enumerate.
pub const MAX_ENUMERATED_WORDS: u64 = 1 << 24;

#[derive(Clone)]
pub struct AdditiveCode {
    tower: FieldTower,
    n: usize,
    basis: Mat,
    echelon: RowEchelon,
}

#[derive(Clone)]
pub struct LinearCode {
    tower: FieldTower,
    level: Level,
    n: usize,
    gen: RowEchelon,
}

fn check_width(v: &[u32], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::shape(format!("vector of length {} for a code of length {n}", v.len())));
    }
    Ok(())
}

fn check_field(m: &Mat, field: &Field, n: usize) -> Result<()> {
    if m.field() != field {
        return Err(Error::LevelMismatch {
            expected: field.to_string(),
            got: m.field().to_string(),
        });
    }
    if m.ncols() != n {
        return Err(Error::shape(format!("{} columns for length {n}", m.ncols())));
    }
    Ok(())
}

impl AdditiveCode {
    /// The `F_q`-span of the rows of a top-level matrix.
    pub fn span_fq(tower: &FieldTower, rows: &Mat) -> Result<Self> {
        check_field(rows, tower.top(), rows.ncols())?;
        Ok(Self::from_expanded(tower, rows.ncols(), &rows.expand_coords()))
    }

    /// Code whose `F_q`-coordinate vectors span the rows of `expanded`
    /// (an `r x nm` matrix over the middle field).
    pub(crate) fn from_expanded(tower: &FieldTower, n: usize, expanded: &Mat) -> Self {
        let echelon = expanded.rref();
        let basis = echelon
            .mat
            .collapse(tower.top())
            .expect("expanded width is a multiple of m");
        AdditiveCode {
            tower: tower.clone(),
            n,
            basis,
            echelon,
        }
    }

    pub fn zero(tower: &FieldTower, n: usize) -> Self {
        Self::from_expanded(tower, n, &Mat::zeros(tower.mid(), 0, n * tower.m()))
    }

    pub fn full(tower: &FieldTower, n: usize) -> Self {
        Self::from_expanded(tower, n, &Mat::identity(tower.mid(), n * tower.m()))
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// `F_q`-dimension.
    pub fn dim(&self) -> usize {
        self.echelon.rank
    }

    /// Canonical `F_q`-basis over `F_{q^m}`.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// Reduced echelon form of the coordinate expansion.
    pub fn expanded(&self) -> &RowEchelon {
        &self.echelon
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.n * self.tower.m()
    }

    pub fn member(&self, v: &[u32]) -> Result<bool> {
        check_width(v, self.n)?;
        if let Some(&c) = v.iter().find(|&&c| !self.tower.top().contains(c)) {
            return Err(Error::InvalidElement(c));
        }
        let coords: Vec<u32> = v.iter().flat_map(|&x| self.tower.mid_coords(x)).collect();
        Ok(self.echelon.contains(&coords))
    }

    fn compatible(&self, other: &AdditiveCode) -> Result<()> {
        if self.tower != other.tower {
            return Err(Error::shape("codes live over different towers"));
        }
        if self.n != other.n {
            return Err(Error::shape(format!("lengths {} and {} differ", self.n, other.n)));
        }
        Ok(())
    }

    /// `C + D`.
    pub fn join(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        self.compatible(other)?;
        let stacked = self.echelon.mat.vstack(&other.echelon.mat)?;
        Ok(Self::from_expanded(&self.tower, self.n, &stacked))
    }

    /// `C ∩ D`, from the left kernel of the stacked expansions.
    pub fn meet(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        self.compatible(other)?;
        let a = &self.echelon.mat;
        let stacked = a.vstack(&other.echelon.mat)?;
        let left_kernel = stacked.transpose().kernel();
        let first: Vec<Vec<u32>> = left_kernel
            .rows()
            .map(|r| r[..self.dim()].to_vec())
            .collect();
        let coeffs = Mat::from_rows_width(self.tower.mid(), self.dim(), &first)?;
        let words = coeffs.matmul(a)?;
        Ok(Self::from_expanded(&self.tower, self.n, &words))
    }

    /// `C ⊆ D`.
    pub fn is_subcode_of(&self, other: &AdditiveCode) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.echelon.mat.rows().all(|r| other.echelon.contains(r)))
    }

    /// Some nonzero codeword, if any.
    pub fn nonzero_word(&self) -> Option<Vec<u32>> {
        (self.dim() > 0).then(|| self.basis.row(0).to_vec())
    }

    /// `aC = {(a_1 c_1, ..., a_n c_n)}` for nonzero `a_i`.
    pub fn scale(&self, a: &[u32]) -> Result<AdditiveCode> {
        let b = scale_rows(&self.basis, a, self.tower.top())?;
        Self::span_fq(&self.tower, &b)
    }

    /// `Tr(C)`, a linear code over `F_q`.
    pub fn trace_code(&self) -> LinearCode {
        let t = self.basis.trace_entrywise();
        LinearCode::from_mat(&self.tower, Level::Mid, &t).expect("trace lands in the middle field")
    }

    /// Minimum Hamming weight over the nonzero codewords.
    pub fn min_distance(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        let words = (self.tower.q() as u64).checked_pow(self.dim() as u32);
        if words.is_none_or(|w| w > MAX_ENUMERATED_WORDS) {
            return Err(Error::DimensionCap(format!(
                "{}^{} codewords",
                self.tower.q(),
                self.dim()
            )));
        }
        let top = self.tower.top();
        let gens = fp_generators(self.tower.mid(), top, &self.basis);
        Ok(min_weight(top, self.n, &gens))
    }
}

impl PartialEq for AdditiveCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.tower == other.tower && self.basis == other.basis
    }
}

impl Eq for AdditiveCode {}

impl fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AdditiveCode(n={}, dim_fq={}) basis {:?}",
            self.n, self.echelon.rank, self.basis
        )
    }
}

impl LinearCode {
    /// Row space of `rows`, whose entries live at `level`.
    pub fn from_mat(tower: &FieldTower, level: Level, rows: &Mat) -> Result<Self> {
        check_field(rows, tower.field(level), rows.ncols())?;
        Ok(LinearCode {
            tower: tower.clone(),
            level,
            n: rows.ncols(),
            gen: rows.rref(),
        })
    }

    pub fn from_rows(tower: &FieldTower, level: Level, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let m = Mat::from_rows_width(tower.field(level), n, rows)?;
        Self::from_mat(tower, level, &m)
    }

    pub fn zero(tower: &FieldTower, level: Level, n: usize) -> Self {
        Self::from_mat(tower, level, &Mat::zeros(tower.field(level), 0, n)).unwrap()
    }

    pub fn full(tower: &FieldTower, level: Level, n: usize) -> Self {
        Self::from_mat(tower, level, &Mat::identity(tower.field(level), n)).unwrap()
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn field(&self) -> &Field {
        self.tower.field(self.level)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Dimension over the code's own field.
    pub fn dim(&self) -> usize {
        self.gen.rank
    }

    /// Canonical (reduced echelon) generator matrix.
    pub fn gen(&self) -> &Mat {
        &self.gen.mat
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn member(&self, v: &[u32]) -> Result<bool> {
        check_width(v, self.n)?;
        if let Some(&c) = v.iter().find(|&&c| !self.field().contains(c)) {
            return Err(Error::InvalidElement(c));
        }
        Ok(self.gen.contains(v))
    }

    fn compatible(&self, other: &LinearCode) -> Result<()> {
        if self.tower != other.tower || self.level != other.level {
            return Err(Error::shape("codes live over different fields"));
        }
        if self.n != other.n {
            return Err(Error::shape(format!("lengths {} and {} differ", self.n, other.n)));
        }
        Ok(())
    }

    pub fn join(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        Self::from_mat(&self.tower, self.level, &self.gen().vstack(other.gen())?)
    }

    pub fn meet(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        let stacked = self.gen().vstack(other.gen())?;
        let left_kernel = stacked.transpose().kernel();
        let first: Vec<Vec<u32>> = left_kernel.rows().map(|r| r[..self.dim()].to_vec()).collect();
        let coeffs = Mat::from_rows_width(self.field(), self.dim(), &first)?;
        Self::from_mat(&self.tower, self.level, &coeffs.matmul(self.gen())?)
    }

    /// Euclidean dual `{v : v · c = 0 for all c}`.
    pub fn dual(&self) -> LinearCode {
        let k = if self.dim() == 0 {
            Mat::identity(self.field(), self.n)
        } else {
            self.gen().kernel()
        };
        Self::from_mat(&self.tower, self.level, &k).unwrap()
    }

    pub fn scale(&self, a: &[u32]) -> Result<LinearCode> {
        let b = scale_rows(self.gen(), a, self.field())?;
        Self::from_mat(&self.tower, self.level, &b)
    }

    /// The additive code `{alpha^j g}` spanned over `F_q`; as a set it is
    /// the code itself.
    pub fn lift(&self) -> Result<AdditiveCode> {
        if self.level != Level::Top {
            return Err(Error::LevelMismatch {
                expected: Level::Top.to_string(),
                got: self.level.to_string(),
            });
        }
        let top = self.tower.top();
        let alpha = self.tower.alpha();
        let mut rows = Vec::with_capacity(self.dim() * self.tower.m());
        let mut power = 1u32;
        for _ in 0..self.tower.m() {
            for r in self.gen().rows() {
                rows.push(r.iter().map(|&x| top.mul(power, x)).collect());
            }
            power = top.mul(power, alpha);
        }
        AdditiveCode::span_fq(&self.tower, &Mat::from_rows_width(top, self.n, &rows)?)
    }

    pub fn min_distance(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        let q = self.field().order() as u64;
        if q.checked_pow(self.dim() as u32).is_none_or(|w| w > MAX_ENUMERATED_WORDS) {
            return Err(Error::DimensionCap(format!("{q}^{} codewords", self.dim())));
        }
        let f = self.field();
        let gens = fp_generators(f, f, self.gen());
        Ok(min_weight(f, self.n, &gens))
    }

    /// `[n, k, d]`, with `d = 0` for the zero code.
    pub fn params(&self) -> Result<(usize, usize, usize)> {
        let d = if self.is_zero() { 0 } else { self.min_distance()? };
        Ok((self.n, self.dim(), d))
    }

    /// `C ∩ C^⊥ = {0}`, decided by `rank(G G^T) = dim`.
    pub fn is_lcd(&self) -> bool {
        let g = self.gen();
        g.matmul(&g.transpose()).expect("square product").rank() == self.dim()
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.level == other.level
            && self.tower == other.tower
            && self.gen.mat == other.gen.mat
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearCode({}, n={}, k={}) gen {:?}",
            self.level,
            self.n,
            self.dim(),
            self.gen.mat
        )
    }
}

fn scale_rows(m: &Mat, a: &[u32], field: &Field) -> Result<Mat> {
    check_width(a, m.ncols())?;
    if let Some(i) = a.iter().position(|&x| x == 0) {
        return Err(Error::ZeroScaling(i + 1));
    }
    if let Some(&c) = a.iter().find(|&&c| !field.contains(c)) {
        return Err(Error::InvalidElement(c));
    }
    let rows: Vec<Vec<u32>> = m
        .rows()
        .map(|r| r.iter().zip(a).map(|(&x, &s)| field.mul(x, s)).collect())
        .collect();
    Mat::from_rows_width(field, m.ncols(), &rows)
}

/// `F_p`-basis of the span over `scalars` of the rows: each row times the
/// elements of code `p^j`, which form an `F_p`-basis of `scalars`.
fn fp_generators(scalars: &Field, ambient: &Field, rows: &Mat) -> Vec<Vec<u32>> {
    let p = scalars.characteristic();
    let mut gens = Vec::new();
    for r in rows.rows() {
        let mut b = 1u32;
        for _ in 0..scalars.absolute_degree() {
            gens.push(r.iter().map(|&x| ambient.mul(b, x)).collect());
            b *= p;
        }
    }
    gens
}

/// Minimum nonzero weight over all `F_p`-combinations of `gens`, walking an
/// odometer so that each step adds a single generator.
fn min_weight(field: &Field, n: usize, gens: &[Vec<u32>]) -> usize {
    let p = field.characteristic();
    let mut digits = vec![0u32; gens.len()];
    let mut word = vec![0u32; n];
    let mut best = usize::MAX;
    'outer: loop {
        let mut i = 0;
        loop {
            if i == gens.len() {
                break 'outer;
            }
            for (w, &g) in word.iter_mut().zip(&gens[i]) {
                *w = field.add(*w, g);
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        let weight = word.iter().filter(|&&x| x != 0).count();
        if weight > 0 && weight < best {
            best = weight;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldTower {
        FieldTower::new(2, 1, 2).unwrap()
    }

    fn top(t: &FieldTower, rows: &[Vec<u32>]) -> Mat {
        Mat::from_rows(t.top(), rows).unwrap()
    }

    #[test]
    fn spans() {
        let t = f4();
        assert_eq!(AdditiveCode::zero(&t, 3).dim(), 0);
        let c = AdditiveCode::span_fq(&t, &top(&t, &[vec![1, 2, 0], vec![1, 2, 0]])).unwrap();
        assert_eq!(c.dim(), 1);
        let a = AdditiveCode::span_fq(&t, &top(&t, &[vec![1, 2, 0], vec![0, 3, 1]])).unwrap();
        let b = AdditiveCode::span_fq(&t, &top(&t, &[vec![0, 3, 1], vec![1, 2, 0]])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn counterexample_intersection() {
        let t = f4();
        let c = AdditiveCode::span_fq(&t, &top(&t, &[vec![1, 1, 0], vec![2, 2, 0], vec![3, 0, 3]]))
            .unwrap();
        let d = AdditiveCode::span_fq(&t, &top(&t, &[vec![1, 1, 1], vec![2, 2, 2], vec![2, 2, 0]]))
            .unwrap();
        assert!(c.member(&[2, 2, 0]).unwrap());
        assert!(d.member(&[2, 2, 0]).unwrap());
        let m = c.meet(&d).unwrap();
        assert!(m.dim() >= 1);
        assert!(m.member(&[2, 2, 0]).unwrap());
        let j = c.join(&d).unwrap();
        assert_eq!(j.dim(), c.dim() + d.dim() - m.dim());
        assert_eq!(c.meet(&c).unwrap(), c);
    }

    #[test]
    fn lift_dimension_and_full_space() {
        let t = FieldTower::new(5, 1, 2).unwrap();
        let g = LinearCode::from_rows(&t, Level::Top, 4, &[vec![1, 1, 1, 1], vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(g.lift().unwrap().dim(), 4);
        assert!(LinearCode::full(&t, Level::Top, 3).lift().unwrap().is_full());
    }

    #[test]
    fn distances_and_lcd() {
        let t = FieldTower::new(2, 1, 1).unwrap();
        assert_eq!(LinearCode::full(&t, Level::Mid, 5).min_distance().unwrap(), 1);
        let rep = LinearCode::from_rows(&t, Level::Mid, 5, &[vec![1; 5]]).unwrap();
        assert_eq!(rep.min_distance().unwrap(), 5);
        assert!(rep.is_lcd());
        assert!(LinearCode::zero(&t, Level::Mid, 4).is_lcd());
        assert!(matches!(
            LinearCode::zero(&t, Level::Mid, 4).min_distance(),
            Err(Error::ZeroCode)
        ));
    }

    #[test]
    fn table_row_one() {
        let t = f4();
        let c = AdditiveCode::span_fq(&t, &top(&t, &[vec![2, 3, 0, 2, 0], vec![0, 2, 3, 0, 2]]))
            .unwrap();
        let tc = c.trace_code();
        assert_eq!(tc.params().unwrap(), (5, 2, 3));
        assert!(!tc.is_lcd());
    }

    #[test]
    fn scaling() {
        let t = f4();
        let c = AdditiveCode::span_fq(&t, &top(&t, &[vec![1, 2, 0], vec![0, 3, 1]])).unwrap();
        assert_eq!(c.scale(&[1, 1, 1]).unwrap(), c);
        let a = [2, 3, 2];
        let inv: Vec<u32> = a.iter().map(|&x| t.top().inv(x).unwrap()).collect();
        assert_eq!(c.scale(&a).unwrap().scale(&inv).unwrap(), c);
        assert!(matches!(c.scale(&[1, 0, 1]), Err(Error::ZeroScaling(2))));
    }

    #[test]
    fn additive_min_distance() {
        let t = f4();
        let c = AdditiveCode::span_fq(&t, &top(&t, &[vec![1, 1, 0], vec![2, 0, 2]])).unwrap();
        assert_eq!(c.min_distance().unwrap(), 2);
        assert!(matches!(AdditiveCode::zero(&t, 2).min_distance(), Err(Error::ZeroCode)));
    }

    #[test]
    fn euclidean_dual() {
        let t = FieldTower::new(5, 1, 2).unwrap();
        let g = LinearCode::from_rows(&t, Level::Top, 4, &[vec![1, 1, 1, 1], vec![1, 2, 3, 4]]).unwrap();
        let h = LinearCode::from_rows(&t, Level::Top, 4, &[vec![1, 0, 2, 2], vec![0, 1, 3, 1]]).unwrap();
        assert_eq!(g.dual(), h);
        assert_eq!(g.dual().dual(), g);
    }
}
