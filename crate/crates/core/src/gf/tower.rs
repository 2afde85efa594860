use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{is_prime, Field, GaloisField};
use super::moduli;
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Largest top field order accepted for a user tower.
pub const MAX_TOWER_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Prime,
    Mid,
    Top,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Prime => "prime",
            Level::Mid => "mid",
            Level::Top => "top",
        })
    }
}

/// An element tagged with the tower level it lives at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Elem {
    pub level: Level,
    pub code: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
}

/// `F_p ⊆ F_q = F_{p^k} ⊆ F_{q^m}`.
///
/// The middle field is always a degree-`k` extension of `F_p` and the top a
/// degree-`m` extension of the middle field, so `k = 1` or `m = 1` give
/// degree-one extensions. Codes of lower levels are valid codes of every
/// higher level.
#[derive(Clone)]
pub struct FieldTower {
    p: u32,
    k: usize,
    m: usize,
    prime: Field,
    mid: Field,
    top: Field,
}

impl FieldTower {
    /// Tower with the default moduli.
    pub fn new(p: u32, k: usize, m: usize) -> Result<Self> {
        Self::with_moduli(p, k, m, None, None)
    }

    /// Tower with an optional `(mid, top)` modulus pair.
    pub fn build(p: u32, k: usize, m: usize, moduli: Option<(Vec<u32>, Vec<u32>)>) -> Result<Self> {
        match moduli {
            Some((a, b)) => Self::with_moduli(p, k, m, Some(a), Some(b)),
            None => Self::new(p, k, m),
        }
    }

    /// Either modulus may be supplied independently; missing ones are
    /// the defaults (the top default is taken over the chosen mid field).
    pub fn with_moduli(
        p: u32,
        k: usize,
        m: usize,
        mid_modulus: Option<Vec<u32>>,
        top_modulus: Option<Vec<u32>>,
    ) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 || m == 0 {
            return Err(Error::OutOfRange {
                what: "extension degree",
                detail: format!("k = {k}, m = {m}; both must be at least 1"),
            });
        }
        let order = (p as u64)
            .checked_pow((k * m) as u32)
            .filter(|&o| o <= MAX_TOWER_ORDER);
        if order.is_none() {
            return Err(Error::FieldTooLarge(
                (p as u64).saturating_pow((k * m) as u32),
            ));
        }
        let prime = GaloisField::prime(p)?;
        let mid = match mid_modulus {
            Some(c) => checked_extension(&prime, c, k)?,
            None if k == 1 => GaloisField::extension_unchecked(&prime, vec![0, 1])?,
            None => GaloisField::extension_unchecked(
                &prime,
                moduli::default_prime_modulus(&prime, k)?,
            )?,
        };
        let top = match top_modulus {
            Some(c) => checked_extension(&mid, c, m)?,
            None if m == 1 => GaloisField::extension_unchecked(&mid, vec![0, 1])?,
            None => GaloisField::extension_unchecked(&mid, moduli::default_top_modulus(&mid, m)?)?,
        };
        Ok(FieldTower {
            p,
            k,
            m,
            prime,
            mid,
            top,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `q = p^k`.
    pub fn q(&self) -> u32 {
        self.mid.order()
    }

    /// `q^m`.
    pub fn qm(&self) -> u32 {
        self.top.order()
    }

    pub fn prime(&self) -> &Field {
        &self.prime
    }

    pub fn mid(&self) -> &Field {
        &self.mid
    }

    pub fn top(&self) -> &Field {
        &self.top
    }

    pub fn field(&self, level: Level) -> &Field {
        match level {
            Level::Prime => &self.prime,
            Level::Mid => &self.mid,
            Level::Top => &self.top,
        }
    }

    pub fn mid_modulus(&self) -> &[u32] {
        self.mid.modulus()
    }

    pub fn top_modulus(&self) -> &[u32] {
        self.top.modulus()
    }

    /// The level a field handle belongs to, if it is one of ours.
    pub fn level_of(&self, field: &GaloisField) -> Option<Level> {
        [Level::Top, Level::Mid, Level::Prime]
            .into_iter()
            .find(|&l| **self.field(l) == *field)
    }

    pub fn elem(&self, level: Level, code: u32) -> Result<Elem> {
        if !self.field(level).contains(code) {
            return Err(Error::InvalidElement(code));
        }
        Ok(Elem { level, code })
    }

    pub fn zero(&self, level: Level) -> Elem {
        Elem { level, code: 0 }
    }

    pub fn one(&self, level: Level) -> Elem {
        Elem { level, code: 1 }
    }

    /// Coefficients of `x` over the next-lower level, low degree first.
    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        self.field(x.level).digits(x.code)
    }

    /// View `x` at a higher (or equal) level.
    pub fn embed(&self, x: Elem, level: Level) -> Result<Elem> {
        if level < x.level {
            return Err(Error::LevelMismatch {
                expected: format!("{} or lower", level),
                got: x.level.to_string(),
            });
        }
        Ok(Elem { level, code: x.code })
    }

    fn same_level(&self, x: Elem, y: Elem) -> Result<Level> {
        if x.level != y.level {
            return Err(Error::LevelMismatch {
                expected: x.level.to_string(),
                got: y.level.to_string(),
            });
        }
        Ok(x.level)
    }

    fn require(&self, x: Elem, level: Level) -> Result<()> {
        if x.level != level {
            return Err(Error::LevelMismatch {
                expected: level.to_string(),
                got: x.level.to_string(),
            });
        }
        Ok(())
    }

    pub fn arith(&self, op: ArithOp, x: Elem, y: Option<Elem>) -> Result<Elem> {
        let binary = |y: Option<Elem>| {
            y.ok_or_else(|| Error::shape("binary operation needs two operands"))
        };
        match op {
            ArithOp::Add => self.add(x, binary(y)?),
            ArithOp::Sub => self.sub(x, binary(y)?),
            ArithOp::Mul => self.mul(x, binary(y)?),
            ArithOp::Neg => Ok(self.neg(x)),
            ArithOp::Inv => self.inv(x),
        }
    }

    pub fn add(&self, x: Elem, y: Elem) -> Result<Elem> {
        let l = self.same_level(x, y)?;
        Ok(Elem {
            level: l,
            code: self.field(l).add(x.code, y.code),
        })
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Result<Elem> {
        let l = self.same_level(x, y)?;
        Ok(Elem {
            level: l,
            code: self.field(l).sub(x.code, y.code),
        })
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Result<Elem> {
        let l = self.same_level(x, y)?;
        Ok(Elem {
            level: l,
            code: self.field(l).mul(x.code, y.code),
        })
    }

    pub fn neg(&self, x: Elem) -> Elem {
        Elem {
            level: x.level,
            code: self.field(x.level).neg(x.code),
        }
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        Ok(Elem {
            level: x.level,
            code: self.field(x.level).inv(x.code)?,
        })
    }

    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        Elem {
            level: x.level,
            code: self.field(x.level).pow(x.code, e),
        }
    }

    /// `Tr(x) = x + x^q + ... + x^(q^(m-1))` on raw top codes.
    #[inline]
    pub fn trace(&self, x: u32) -> u32 {
        self.top.trace_to_base(x)
    }

    pub fn trace_to_mid(&self, x: Elem) -> Result<Elem> {
        self.require(x, Level::Top)?;
        Ok(Elem {
            level: Level::Mid,
            code: self.trace(x.code),
        })
    }

    /// `x -> x^(p^j)` on raw top codes.
    #[inline]
    pub fn frobenius(&self, j: usize, x: u32) -> u32 {
        self.top.frobenius(x, j)
    }

    pub fn automorphism(&self, j: usize, x: Elem) -> Result<Elem> {
        self.require(x, Level::Top)?;
        self.check_automorphism(j)?;
        Ok(Elem {
            level: Level::Top,
            code: self.frobenius(j, x.code),
        })
    }

    pub fn check_automorphism(&self, j: usize) -> Result<()> {
        if j >= self.k * self.m {
            return Err(Error::OutOfRange {
                what: "automorphism exponent",
                detail: format!("j = {j}, need 0 <= j < {}", self.k * self.m),
            });
        }
        Ok(())
    }

    pub fn multiplicative_order(&self, x: Elem) -> Result<u64> {
        self.field(x.level).multiplicative_order(x.code)
    }

    /// The basis element `alpha`, the class of `X` modulo the top modulus.
    pub fn alpha(&self) -> u32 {
        self.top.generator()
    }

    /// Coordinates of a top code in the basis `1, alpha, ..., alpha^(m-1)`.
    pub fn mid_coords(&self, x: u32) -> Vec<u32> {
        self.top.digits(x)
    }

    pub fn from_mid_coords(&self, coords: &[u32]) -> u32 {
        self.top.from_digits(coords)
    }

    /// True iff the top elements are linearly independent over `F_q`.
    pub fn independent_over_mid(&self, xs: &[Elem]) -> Result<bool> {
        for &x in xs {
            self.require(x, Level::Top)?;
        }
        if xs.is_empty() {
            return Ok(true);
        }
        let col = Mat::from_rows(&self.top, &xs.iter().map(|x| vec![x.code]).collect::<Vec<_>>())?;
        Ok(col.expand_coords().rank() == xs.len())
    }
}

fn checked_extension(base: &Field, modulus: Vec<u32>, degree: usize) -> Result<Field> {
    let trimmed = crate::poly::raw::trimmed(modulus);
    if trimmed.len() != degree + 1 {
        return Err(Error::DegreeMismatch {
            expected: degree,
            got: trimmed.len().saturating_sub(1),
        });
    }
    GaloisField::extension(base, trimmed)
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.m == other.m && self.top == other.top
    }
}

impl Eq for FieldTower {}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldTower(p={}, k={}, m={}, mid={:?}, top={:?})",
            self.p,
            self.k,
            self.m,
            self.mid_modulus(),
            self.top_modulus()
        )
    }
}

impl fmt::Display for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{} ⊆ F_{} ⊆ F_{}", self.p, self.q(), self.qm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_example_towers() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        assert_eq!(t.top_modulus(), &[1, 1, 1]);
        let w = t.elem(Level::Top, t.alpha()).unwrap();
        let w2 = t.mul(w, w).unwrap();
        assert_eq!(t.add(w, w2).unwrap(), t.one(Level::Top));
        assert_eq!(FieldTower::new(5, 1, 2).unwrap().qm(), 25);
        let t = FieldTower::new(2, 3, 2).unwrap();
        assert_eq!((t.q(), t.qm()), (8, 64));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(FieldTower::new(4, 1, 2), Err(Error::NotPrime(4))));
        assert!(matches!(
            FieldTower::build(2, 1, 2, Some((vec![0, 1], vec![1, 0, 1]))),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(matches!(
            FieldTower::build(2, 1, 2, Some((vec![0, 1], vec![1, 1, 0, 1]))),
            Err(Error::DegreeMismatch { expected: 2, got: 3 })
        ));
        assert!(matches!(FieldTower::new(2, 4, 5), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn trace_in_f4() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let tr = |c| t.trace_to_mid(t.elem(Level::Top, c).unwrap()).unwrap().code;
        assert_eq!(tr(0), 0);
        assert_eq!(tr(1), 0);
        assert_eq!(tr(2), 1);
        assert_eq!(tr(3), 1);
        assert!(t.trace_to_mid(t.one(Level::Mid)).is_err());
    }

    #[test]
    fn automorphisms() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let w = t.elem(Level::Top, 2).unwrap();
        assert_eq!(t.automorphism(1, w).unwrap().code, 3);
        assert_eq!(t.automorphism(0, w).unwrap(), w);
        assert!(t.automorphism(2, w).is_err());
        let t = FieldTower::new(3, 2, 2).unwrap();
        for x in 0..t.qm() {
            let e = t.elem(Level::Top, x).unwrap();
            let a = t.automorphism(1, e).unwrap();
            assert_eq!(t.automorphism(3, a).unwrap(), e);
        }
    }

    #[test]
    fn orders() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        assert_eq!(t.multiplicative_order(t.one(Level::Top)).unwrap(), 1);
        assert_eq!(t.multiplicative_order(t.elem(Level::Top, 2).unwrap()).unwrap(), 3);
        let t3 = FieldTower::new(3, 1, 1).unwrap();
        assert_eq!(t3.multiplicative_order(t3.elem(Level::Prime, 2).unwrap()).unwrap(), 2);
        assert!(matches!(
            t3.multiplicative_order(t3.zero(Level::Prime)),
            Err(Error::ZeroOrder)
        ));
    }

    #[test]
    fn independence() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let e = |c| t.elem(Level::Top, c).unwrap();
        assert!(t.independent_over_mid(&[e(1), e(2)]).unwrap());
        assert!(!t.independent_over_mid(&[e(1), e(1)]).unwrap());
        assert!(!t.independent_over_mid(&[e(0)]).unwrap());
        assert!(t.independent_over_mid(&[]).unwrap());
    }

    #[test]
    fn arith_dispatch() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let w = t.elem(Level::Top, 2).unwrap();
        let w2 = t.elem(Level::Top, 3).unwrap();
        assert_eq!(t.arith(ArithOp::Add, w, Some(w2)).unwrap().code, 1);
        assert_eq!(t.arith(ArithOp::Inv, w, None).unwrap(), w2);
        assert!(matches!(t.inv(t.zero(Level::Top)), Err(Error::ZeroInverse)));
        assert!(matches!(
            t.add(w, t.one(Level::Mid)),
            Err(Error::LevelMismatch { .. })
        ));
    }
}
