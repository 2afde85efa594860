//! Default defining polynomials.
//!
//! The default modulus of degree `d` over a field `F_Q` is the least monic
//! irreducible polynomial, where polynomials are ordered lexicographically
//! by coefficient codes from the leading term down (equivalently by the
//! integer `sum c_i Q^i` of the non-leading coefficients). A versioned table
//! of these polynomials ships in `data/moduli_v1.txt`; lookups outside the
//! table fall back to the same search.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::field::{Field, GaloisField};
use crate::error::{Error, Result};
use crate::poly::raw;

pub const TABLE_VERSION: &str = "moduli_v1";

const TABLE_TEXT: &str = include_str!("../../data/moduli_v1.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    /// Degree `d` over `F_p`.
    Prime { p: u32, d: usize },
    /// Degree `m` over the default `F_{p^k}`.
    Top { p: u32, k: usize, m: usize },
}

fn table() -> &'static HashMap<Key, Vec<u32>> {
    static TABLE: OnceLock<HashMap<Key, Vec<u32>>> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(TABLE_TEXT).expect("shipped moduli table is well formed"))
}

fn parse_table(text: &str) -> std::result::Result<HashMap<Key, Vec<u32>>, String> {
    let mut out = HashMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, coeffs) = line
            .split_once(':')
            .ok_or_else(|| format!("line {}: missing ':'", no + 1))?;
        let nums = |s: &str| -> std::result::Result<Vec<u64>, String> {
            s.split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|e| format!("line {}: {e}", no + 1)))
                .collect()
        };
        let mut parts = head.split_whitespace();
        let tag = parts.next().ok_or_else(|| format!("line {}: empty", no + 1))?;
        let params = nums(&parts.collect::<Vec<_>>().join(" "))?;
        let key = match (tag, params.as_slice()) {
            ("F", [p, d]) => Key::Prime {
                p: *p as u32,
                d: *d as usize,
            },
            ("T", [p, k, m]) => Key::Top {
                p: *p as u32,
                k: *k as usize,
                m: *m as usize,
            },
            _ => return Err(format!("line {}: bad header {head:?}", no + 1)),
        };
        let coeffs = nums(coeffs)?.into_iter().map(|c| c as u32).collect();
        out.insert(key, coeffs);
    }
    Ok(out)
}

/// The least monic irreducible polynomial of degree `d` over `base`, by
/// exhaustive search in the canonical order.
pub fn least_irreducible(base: &GaloisField, d: usize) -> Result<Vec<u32>> {
    if d == 0 {
        return Err(Error::DegreeMismatch { expected: 1, got: 0 });
    }
    let q = base.order() as u64;
    let total = q
        .checked_pow(d as u32)
        .ok_or(Error::FieldTooLarge(u64::MAX))?;
    let mut coeffs = vec![0u32; d + 1];
    coeffs[d] = 1;
    for v in 0..total {
        let mut x = v;
        for c in coeffs.iter_mut().take(d) {
            *c = (x % q) as u32;
            x /= q;
        }
        if d > 1 && coeffs[0] == 0 {
            continue;
        }
        if raw::is_irreducible(base, &coeffs) {
            return Ok(coeffs);
        }
    }
    Err(Error::Exhausted(format!("irreducible polynomial of degree {d} over {base}")))
}

/// Default modulus of degree `d` over `F_p`.
pub fn default_prime_modulus(prime: &Field, d: usize) -> Result<Vec<u32>> {
    let key = Key::Prime {
        p: prime.characteristic(),
        d,
    };
    match table().get(&key) {
        Some(c) => Ok(c.clone()),
        None => least_irreducible(prime, d),
    }
}

/// Default modulus of degree `m` over `mid`. The table is consulted only
/// when `mid` is itself built from the default modulus.
pub fn default_top_modulus(mid: &Field, m: usize) -> Result<Vec<u32>> {
    let p = mid.characteristic();
    let k = mid.absolute_degree();
    let mid_is_default = k == 1
        || table()
            .get(&Key::Prime { p, d: k })
            .is_some_and(|c| c.as_slice() == mid.modulus());
    if mid_is_default {
        let key = if k == 1 {
            Key::Prime { p, d: m }
        } else {
            Key::Top { p, k, m }
        };
        if let Some(c) = table().get(&key) {
            return Ok(c.clone());
        }
    }
    least_irreducible(mid, m)
}

/// Render the full table for towers with `q^m <= max_order`; used to
/// regenerate `data/moduli_v1.txt`.
pub fn render_table(max_order: u64) -> Result<String> {
    let mut out = String::new();
    out.push_str("# Default moduli, version 1.\n");
    out.push_str("# F p d : coefficients of the least monic irreducible of degree d over F_p\n");
    out.push_str("# T p k m : same, degree m over F_{p^k} built from its F entry\n");
    out.push_str("# Coefficients are field codes, low degree first.\n");
    let primes: Vec<u32> = (2..=max_order as u32)
        .filter(|&p| super::is_prime(p as u64))
        .collect();
    for &p in &primes {
        let prime = GaloisField::prime(p)?;
        let mut d = 2;
        while (p as u64).pow(d as u32) <= max_order {
            let c = least_irreducible(&prime, d)?;
            out.push_str(&format!("F {p} {d} : {}\n", join(&c)));
            d += 1;
        }
    }
    for &p in &primes {
        let prime = GaloisField::prime(p)?;
        let mut k = 2;
        while (p as u64).pow(2 * k as u32) <= max_order {
            let mid = GaloisField::extension_unchecked(&prime, least_irreducible(&prime, k)?)?;
            let mut m = 2;
            while (p as u64).pow((k * m) as u32) <= max_order {
                let c = least_irreducible(&mid, m)?;
                out.push_str(&format!("T {p} {k} {m} : {}\n", join(&c)));
                m += 1;
            }
            k += 1;
        }
    }
    Ok(out)
}

fn join(c: &[u32]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_defaults() {
        let f2 = GaloisField::prime(2).unwrap();
        let f3 = GaloisField::prime(3).unwrap();
        let f5 = GaloisField::prime(5).unwrap();
        assert_eq!(default_prime_modulus(&f2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(default_prime_modulus(&f2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(default_prime_modulus(&f3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(default_prime_modulus(&f5, 2).unwrap(), vec![2, 0, 1]);
        let f8 = GaloisField::extension(&f2, vec![1, 1, 0, 1]).unwrap();
        assert_eq!(default_top_modulus(&f8, 2).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn shipped_table_matches_search() {
        assert_eq!(render_table(1 << 16).unwrap(), TABLE_TEXT);
    }

    #[test]
    #[ignore = "rewrites data/moduli_v1.txt"]
    fn regenerate_table() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/moduli_v1.txt");
        std::fs::write(path, render_table(1 << 16).unwrap()).unwrap();
    }
}
