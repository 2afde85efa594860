//! Univariate polynomials over a [`GaloisField`].
//!
//! Coefficients are stored low degree first with trailing zeros stripped, so
//! the zero polynomial is the empty vector. The slice-level routines in
//! [`raw`] are shared with field construction; [`Poly`] wraps them with a
//! field handle.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, GaloisField};

pub mod raw {
    use super::GaloisField;

    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn trimmed(mut v: Vec<u32>) -> Vec<u32> {
        trim(&mut v);
        v
    }

    pub fn add(f: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                f.add(x, y)
            })
            .collect();
        trimmed(out)
    }

    pub fn sub(f: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                f.sub(x, y)
            })
            .collect();
        trimmed(out)
    }

    pub fn scale(f: &GaloisField, a: &[u32], c: u32) -> Vec<u32> {
        trimmed(a.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(f: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(x, y));
                }
            }
        }
        trimmed(out)
    }

    /// `(quotient, remainder)`, or `None` when `b` is zero.
    pub fn divmod(f: &GaloisField, a: &[u32], b: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
        let b = &b[..b.iter().rposition(|&c| c != 0)? + 1];
        let mut r = trimmed(a.to_vec());
        if r.len() < b.len() {
            return Some((Vec::new(), r));
        }
        let lead_inv = f.inv(*b.last().unwrap()).ok()?;
        let db = b.len() - 1;
        let mut q = vec![0u32; r.len() - db];
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = f.mul(*r.last().unwrap(), lead_inv);
            q[shift] = c;
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    r[shift + j] = f.sub(r[shift + j], f.mul(c, bj));
                }
            }
            trim(&mut r);
        }
        Some((trimmed(q), r))
    }

    pub fn rem(f: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
        divmod(f, a, b).expect("nonzero modulus").1
    }

    pub fn monic(f: &GaloisField, a: &[u32]) -> Vec<u32> {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => scale(f, a, f.inv(lead).expect("trimmed lead is nonzero")),
        }
    }

    /// Monic gcd; `gcd(0, 0)` is zero.
    pub fn gcd(f: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut x = trimmed(a.to_vec());
        let mut y = trimmed(b.to_vec());
        while !y.is_empty() {
            let r = rem(f, &x, &y);
            x = y;
            y = r;
        }
        monic(f, &x)
    }

    /// `(g, s, t)` with `s a + t b = g` and `g` the monic gcd.
    pub fn ext_gcd(f: &GaloisField, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
        let (mut r0, mut r1) = (trimmed(a.to_vec()), trimmed(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u32], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u32]);
        while !r1.is_empty() {
            let (q, r) = divmod(f, &r0, &r1).unwrap();
            let s2 = sub(f, &s0, &mul(f, &q, &s1));
            let t2 = sub(f, &t0, &mul(f, &q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.last() {
            None => (Vec::new(), s0, t0),
            Some(&lead) => {
                let li = f.inv(lead).unwrap();
                (scale(f, &r0, li), scale(f, &s0, li), scale(f, &t0, li))
            }
        }
    }

    /// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
    pub fn inverse_mod(f: &GaloisField, a: &[u32], m: &[u32]) -> Option<Vec<u32>> {
        let (g, s, _) = ext_gcd(f, a, m);
        if g != [1] {
            return None;
        }
        Some(rem(f, &s, m))
    }

    pub fn mulmod(f: &GaloisField, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
        rem(f, &mul(f, a, b), m)
    }

    pub fn powmod(f: &GaloisField, a: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
        let mut result = rem(f, &[1], m);
        let mut base = rem(f, a, m);
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(f, &result, &base, m);
            }
            base = mulmod(f, &base, &base, m);
            e >>= 1;
        }
        result
    }

    /// Rabin's test: `f` of degree `d` is irreducible over `F_Q` iff
    /// `X^(Q^d) = X mod f` and `gcd(X^(Q^(d/r)) - X, f) = 1` for every prime
    /// `r | d`. Constant polynomials are reported reducible.
    pub fn is_irreducible(f: &GaloisField, poly: &[u32]) -> bool {
        let poly = trimmed(poly.to_vec());
        if poly.len() < 2 {
            return false;
        }
        let d = poly.len() - 1;
        if d == 1 {
            return true;
        }
        if poly[0] == 0 {
            return false;
        }
        let q = f.order() as u64;
        let x = vec![0u32, 1];
        // frob[j] = X^(Q^j) mod poly
        let mut frob = vec![rem(f, &x, &poly)];
        for j in 1..=d {
            let next = powmod(f, &frob[j - 1], q, &poly);
            frob.push(next);
        }
        if frob[d] != rem(f, &x, &poly) {
            return false;
        }
        for (r, _) in crate::gf::factorize(d as u64) {
            let h = sub(f, &frob[d / r as usize], &x);
            if gcd(f, &h, &poly) != [1] {
                return false;
            }
        }
        true
    }

    /// Horner evaluation at `x`, where coefficients live in a subfield of `f`.
    pub fn eval(f: &GaloisField, poly: &[u32], x: u32) -> u32 {
        poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }
}

/// A polynomial with coefficients in `field`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<u32>) -> Result<Self> {
        if let Some(&c) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvalidElement(c));
        }
        Ok(Poly {
            field: field.clone(),
            coeffs: raw::trimmed(coeffs),
        })
    }

    pub(crate) fn from_raw(field: &Field, coeffs: Vec<u32>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: raw::trimmed(coeffs),
        }
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_raw(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::from_raw(field, vec![1])
    }

    /// `X^d`.
    pub fn monomial(field: &Field, d: usize) -> Self {
        let mut c = vec![0; d + 1];
        c[d] = 1;
        Self::from_raw(field, c)
    }

    /// `X^n - lambda`.
    pub fn x_pow_minus(field: &Field, n: usize, lambda: u32) -> Self {
        let mut c = vec![0; n + 1];
        c[n] = 1;
        c[0] = field.sub(c[0], lambda);
        Self::from_raw(field, c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::LevelMismatch {
                expected: self.field.to_string(),
                got: other.field.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(Self::from_raw(&self.field, raw::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(Self::from_raw(&self.field, raw::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(Self::from_raw(&self.field, raw::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn divmod(&self, other: &Poly) -> Result<(Poly, Poly)> {
        self.check(other)?;
        let (q, r) =
            raw::divmod(&self.field, &self.coeffs, &other.coeffs).ok_or(Error::ZeroPolynomial)?;
        Ok((Self::from_raw(&self.field, q), Self::from_raw(&self.field, r)))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(Self::from_raw(&self.field, raw::gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn monic(&self) -> Poly {
        Self::from_raw(&self.field, raw::monic(&self.field, &self.coeffs))
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        if self.coeffs.len() < 2 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(raw::is_irreducible(&self.field, &self.coeffs))
    }

    /// Evaluate at `x`, an element of `at` (which must contain the
    /// coefficient field).
    pub fn eval(&self, at: &GaloisField, x: u32) -> Result<u32> {
        if !at.has_subfield(&self.field) {
            return Err(Error::LevelMismatch {
                expected: format!("a field containing {}", self.field),
                got: at.to_string(),
            });
        }
        if !at.contains(x) {
            return Err(Error::InvalidElement(x));
        }
        Ok(raw::eval(at, &self.coeffs, x))
    }

    /// The same polynomial regarded over an extension of its field.
    pub fn embed(&self, ext: &Field) -> Result<Poly> {
        if !ext.has_subfield(&self.field) {
            return Err(Error::LevelMismatch {
                expected: format!("an extension of {}", self.field),
                got: ext.to_string(),
            });
        }
        Ok(Self::from_raw(ext, self.coeffs.clone()))
    }
}

impl fmt::Display for Poly {
    /// Human form such as `1+2X+X^2`, with coefficients as field codes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}X")?,
                _ => write!(f, "{coeff}X^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field, self)
    }
}
