use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::raw;

/// Shared handle to a finite field.
pub type Field = Arc<GaloisField>;

/// Largest field order accepted by the internal constructors. Splitting
/// fields used for factoring `X^n - lambda` may exceed the user-facing tower
/// cap, but elements must still fit comfortably in a `u32` code.
pub const MAX_INTERNAL_ORDER: u64 = 1 << 24;

/// Fields up to this order get full multiplication and inverse tables.
const TABLE_ORDER: u32 = 256;

/// A finite field given as a chain of simple extensions over `F_p`.
///
/// Elements are `u32` codes: an element `c_0 + c_1 x + ... + c_{d-1} x^{d-1}`
/// of `base[x]/(modulus)` has code `sum code(c_j) * |base|^j`. Unfolding the
/// recursion, a code is the base-`p` digit string of the element's
/// coordinates in the tower basis, so every subfield in the chain embeds by
/// the identity on codes and addition is digitwise mod `p` at every level.
pub struct GaloisField {
    p: u32,
    order: u32,
    base: Option<Field>,
    degree: usize,
    abs_degree: usize,
    modulus: Vec<u32>,
    mul_table: Option<Box<[u32]>>,
    inv_table: Option<Box<[u32]>>,
    basis_traces: Vec<u32>,
    primitive: OnceLock<u32>,
}

impl GaloisField {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let mut f = GaloisField {
            p,
            order: p,
            base: None,
            degree: 1,
            abs_degree: 1,
            modulus: Vec::new(),
            mul_table: None,
            inv_table: None,
            basis_traces: vec![1],
            primitive: OnceLock::new(),
        };
        f.build_tables();
        Ok(Arc::new(f))
    }

    /// `base[x]/(modulus)`; the modulus is checked to be monic and irreducible.
    pub fn extension(base: &Field, modulus: Vec<u32>) -> Result<Field> {
        let modulus = raw::trimmed(modulus);
        if modulus.len() < 2 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: modulus.len().saturating_sub(1),
            });
        }
        if modulus.iter().any(|&c| c >= base.order) || *modulus.last().unwrap() != 1 {
            return Err(Error::ReducibleModulus(format!(
                "{:?} is not a monic polynomial over {}",
                modulus, base
            )));
        }
        if !raw::is_irreducible(base, &modulus) {
            return Err(Error::ReducibleModulus(format!("{:?} over {}", modulus, base)));
        }
        Self::extension_unchecked(base, modulus)
    }

    /// Same as [`GaloisField::extension`] without the irreducibility test.
    pub(crate) fn extension_unchecked(base: &Field, modulus: Vec<u32>) -> Result<Field> {
        let degree = modulus.len() - 1;
        let order = (base.order as u64).checked_pow(degree as u32);
        let order = match order {
            Some(o) if o <= MAX_INTERNAL_ORDER => o as u32,
            _ => {
                return Err(Error::FieldTooLarge(
                    (base.order as u64).saturating_pow(degree as u32),
                ))
            }
        };
        let mut f = GaloisField {
            p: base.p,
            order,
            base: Some(base.clone()),
            degree,
            abs_degree: base.abs_degree * degree,
            modulus,
            mul_table: None,
            inv_table: None,
            basis_traces: Vec::new(),
            primitive: OnceLock::new(),
        };
        f.build_tables();
        f.basis_traces = (0..degree)
            .map(|j| {
                let x_j = (base.order as u64).pow(j as u32) as u32;
                f.trace_definitional(x_j)
            })
            .collect();
        Ok(Arc::new(f))
    }

    /// `F_{p^e}` built with default (lexicographically least) moduli as a
    /// single extension of the prime field.
    pub fn with_order(p: u32, e: usize) -> Result<Field> {
        let prime = Self::prime(p)?;
        if e == 1 {
            return Ok(prime);
        }
        let modulus = super::moduli::default_prime_modulus(&prime, e)?;
        Self::extension_unchecked(&prime, modulus)
    }

    fn build_tables(&mut self) {
        if self.order > TABLE_ORDER {
            return;
        }
        let q = self.order as usize;
        let mut mul = vec![0u32; q * q].into_boxed_slice();
        for a in 0..q {
            for b in a..q {
                let c = self.mul_slow(a as u32, b as u32);
                mul[a * q + b] = c;
                mul[b * q + a] = c;
            }
        }
        let mut inv = vec![0u32; q].into_boxed_slice();
        for a in 1..q {
            for b in 1..q {
                if mul[a * q + b] == 1 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        self.mul_table = Some(mul);
        self.inv_table = Some(inv);
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree over the immediate base field (1 for a prime field).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> usize {
        self.abs_degree
    }

    pub fn base(&self) -> Option<&Field> {
        self.base.as_ref()
    }

    /// Order of the immediate base field (`p` for prime fields).
    pub fn base_order(&self) -> u32 {
        self.base.as_ref().map_or(self.p, |b| b.order)
    }

    /// The defining modulus over the base field, low degree first; empty
    /// for a prime field.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.base.is_none()
    }

    /// True when `sub` occurs in this field's chain (including itself).
    pub fn has_subfield(&self, sub: &GaloisField) -> bool {
        let mut cur = Some(self);
        while let Some(f) = cur {
            if f == sub {
                return true;
            }
            cur = f.base.as_deref();
        }
        false
    }

    #[inline]
    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.base.is_none() {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let (mut out, mut scale) = (0u32, 1u32);
        while a > 0 || b > 0 {
            let s = a % p + b % p;
            out += if s >= p { s - p } else { s } * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut a = a;
        let (mut out, mut scale) = (0u32, 1u32);
        while a > 0 {
            let d = a % p;
            if d != 0 {
                out += (p - d) * scale;
            }
            a /= p;
            scale *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.mul_table {
            return t[a as usize * self.order as usize + b as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let base = match &self.base {
            None => return ((a as u64 * b as u64) % self.p as u64) as u32,
            Some(base) => base,
        };
        if a == 0 || b == 0 {
            return 0;
        }
        let d = self.degree;
        let bo = base.order;
        let mut da = [0u32; 32];
        let mut db = [0u32; 32];
        decode(a, bo, &mut da[..d]);
        decode(b, bo, &mut db[..d]);
        let mut prod = [0u32; 64];
        for i in 0..d {
            if da[i] == 0 {
                continue;
            }
            for j in 0..d {
                if db[j] != 0 {
                    prod[i + j] = base.add(prod[i + j], base.mul(da[i], db[j]));
                }
            }
        }
        for i in (d..2 * d - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..d {
                let m = self.modulus[j];
                if m != 0 {
                    prod[i - d + j] = base.sub(prod[i - d + j], base.mul(c, m));
                }
            }
        }
        encode(&prod[..d], bo)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        if let Some(t) = &self.inv_table {
            return Ok(t[a as usize]);
        }
        match &self.base {
            None => Ok(inv_mod_prime(a, self.p)),
            Some(base) => {
                let digits = self.digits(a);
                raw::inverse_mod(base, &digits, &self.modulus)
                    .map(|c| encode(&c, base.order))
                    .ok_or(Error::ZeroInverse)
            }
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1u32;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// The Frobenius power `a^(p^j)`.
    pub fn frobenius(&self, a: u32, j: usize) -> u32 {
        let mut x = a;
        for _ in 0..j % self.abs_degree {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// Coordinates over the immediate base field (length `degree`).
    pub fn digits(&self, a: u32) -> Vec<u32> {
        let mut out = vec![0u32; self.degree];
        if self.base.is_none() {
            out[0] = a;
        } else {
            decode(a, self.base_order(), &mut out);
        }
        out
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        if self.base.is_none() {
            return digits.first().copied().unwrap_or(0);
        }
        encode(digits, self.base_order())
    }

    /// The residue class of `x` in `base[x]/(modulus)` (the tower generator).
    pub fn generator(&self) -> u32 {
        match &self.base {
            None => 1,
            Some(b) if self.degree == 1 => b.neg(self.modulus[0]),
            Some(b) => b.order,
        }
    }

    /// `Tr(a) = sum_{j<d} a^(Q^j)` with `Q` the base order, by definition.
    pub fn trace_definitional(&self, a: u32) -> u32 {
        let q = self.base_order() as u64;
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.degree {
            acc = self.add(acc, x);
            x = self.pow(x, q);
        }
        acc
    }

    /// Relative trace to the immediate base field, evaluated by linearity
    /// from the traces of the power basis.
    pub fn trace_to_base(&self, a: u32) -> u32 {
        match &self.base {
            None => a,
            Some(base) => {
                let mut acc = 0;
                let mut a = a;
                for &t in &self.basis_traces {
                    let c = a % base.order;
                    a /= base.order;
                    if c != 0 && t != 0 {
                        acc = base.add(acc, base.mul(c, t));
                    }
                }
                acc
            }
        }
    }

    /// Least `t >= 1` with `a^t = 1`.
    pub fn multiplicative_order(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroOrder);
        }
        let group = self.order as u64 - 1;
        let mut t = group;
        for (r, _) in factorize(group) {
            while t.is_multiple_of(r) && self.pow(a, t / r) == 1 {
                t /= r;
            }
        }
        Ok(t)
    }

    /// The least code generating the multiplicative group.
    pub fn primitive(&self) -> u32 {
        *self.primitive.get_or_init(|| {
            let group = self.order as u64 - 1;
            let primes: Vec<u64> = factorize(group).into_iter().map(|(r, _)| r).collect();
            (1..self.order)
                .find(|&c| primes.iter().all(|&r| self.pow(c, group / r) != 1))
                .expect("every finite field has a primitive element")
        })
    }

    /// `log_w(a)` for the cached primitive `w`, by walking the powers.
    pub fn log_primitive(&self, a: u32) -> Option<u64> {
        if a == 0 || a >= self.order {
            return None;
        }
        let w = self.primitive();
        let mut x = 1u32;
        for e in 0..self.order as u64 - 1 {
            if x == a {
                return Some(e);
            }
            x = self.mul(x, w);
        }
        None
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.order)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(1..self.order)
    }

    /// Elements of the field in code order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        self.p == other.p
            && self.order == other.order
            && self.modulus == other.modulus
            && match (&self.base, &other.base) {
                (None, None) => true,
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
    }
}

impl Eq for GaloisField {}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.abs_degree == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.abs_degree)
        }
    }
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaloisField({}", self)?;
        if !self.modulus.is_empty() {
            write!(f, ", modulus {:?}", self.modulus)?;
        }
        write!(f, ")")
    }
}

#[inline]
fn decode(mut a: u32, base: u32, out: &mut [u32]) {
    for d in out.iter_mut() {
        *d = a % base;
        a /= base;
    }
}

#[inline]
fn encode(digits: &[u32], base: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * base + d)
}

fn inv_mod_prime(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
