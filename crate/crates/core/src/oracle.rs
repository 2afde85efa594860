//! Brute-force references for small instances.
//!
//! Nothing here is used by the fast paths; tests and the `--verify` flag of
//! the command line tool compare against these routines.

use std::collections::{HashMap, HashSet};
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::acp::PairVerdict;
use crate::code::{AdditiveCode, LinearCode};
use crate::constacyclic::{complementary_pairs, decompose_ring, shift};
use crate::error::{Error, Result};
use crate::form::FormSpec;
use crate::gf::{factorize, Field, FieldTower, GaloisField};
use crate::linalg::Mat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_vectors: u64,
    pub max_subspaces: u64,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_vectors: 1 << 14,
            max_subspaces: 10_000_000,
        }
    }
}

impl EnumBudget {
    pub fn new(max_vectors: u64, max_subspaces: u64) -> Result<Self> {
        if max_vectors == 0 || max_subspaces == 0 {
            return Err(Error::OutOfRange {
                what: "budget",
                detail: "limits must be positive".into(),
            });
        }
        Ok(EnumBudget {
            max_vectors,
            max_subspaces,
        })
    }

    fn check_words(&self, q: u64, dim: usize) -> Result<()> {
        match q.checked_pow(dim as u32) {
            Some(t) if t <= self.max_vectors => Ok(()),
            _ => Err(Error::BudgetExceeded(format!(
                "{q}^{dim} codewords exceed {}",
                self.max_vectors
            ))),
        }
    }

    fn check_vectors(&self, tower: &FieldTower, n: usize) -> Result<u64> {
        let total = (tower.q() as u64)
            .checked_pow((n * tower.m()) as u32)
            .filter(|&t| t <= self.max_vectors);
        total.ok_or_else(|| {
            Error::BudgetExceeded(format!(
                "{}^{} vectors exceed {}",
                tower.q(),
                n * tower.m(),
                self.max_vectors
            ))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// The vector of `F_{q^m}^n` with index `idx` (first coordinate least
/// significant).
fn vector_at(tower: &FieldTower, n: usize, mut idx: u64) -> Vec<u32> {
    let qm = tower.qm() as u64;
    (0..n)
        .map(|_| {
            let d = (idx % qm) as u32;
            idx /= qm;
            d
        })
        .collect()
}

/// Every codeword of `C`, by running over all `F_q`-combinations of the
/// basis.
pub fn codewords(c: &AdditiveCode) -> Vec<Vec<u32>> {
    let tower = c.tower();
    let (top, q) = (tower.top(), tower.q());
    let basis: Vec<&[u32]> = c.basis().rows().collect();
    let mut coeffs = vec![0u32; basis.len()];
    let mut out = Vec::new();
    loop {
        let mut w = vec![0u32; c.len()];
        for (a, row) in coeffs.iter().zip(&basis) {
            if *a != 0 {
                for (x, &r) in w.iter_mut().zip(row.iter()) {
                    *x = top.add(*x, top.mul(*a, r));
                }
            }
        }
        out.push(w);
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return out;
            }
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// A dual computed by filtering all of `F_{q^m}^n`.
pub fn brute_dual(f: &FormSpec, c: &AdditiveCode, side: Side, budget: &EnumBudget) -> Result<AdditiveCode> {
    let tower = f.tower();
    let n = f.len();
    if c.len() != n || c.tower() != tower {
        return Err(Error::shape("code and form differ in tower or length"));
    }
    let total = budget.check_vectors(tower, n)?;
    let basis: Vec<&[u32]> = c.basis().rows().collect();
    let mut kept = Vec::new();
    for idx in 0..total {
        let v = vector_at(tower, n, idx);
        let mut ok = true;
        for g in &basis {
            let b = match side {
                Side::Left => f.eval_b(&v, g)?,
                Side::Right => f.eval_b(g, &v)?,
            };
            if b != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            kept.push(v);
        }
    }
    let dual = AdditiveCode::span_fq(tower, &Mat::from_rows_width(tower.top(), n, &kept)?)?;
    debug_assert_eq!(kept.len() as u64, (tower.q() as u64).pow(dual.dim() as u32));
    Ok(dual)
}

/// `log_q size` for a subspace of `q^k` elements.
fn log_size(q: u64, size: usize) -> usize {
    let (mut k, mut s) = (0, 1u64);
    while s < size as u64 {
        s *= q;
        k += 1;
    }
    k
}

/// Complementarity by listing `C ∩ D` and comparing `|C| |D|` with
/// `q^(nm)`; the budget bounds the size of each listed code. The witness is the least common nonzero word.
pub fn brute_acp(c: &AdditiveCode, d: &AdditiveCode, budget: &EnumBudget) -> Result<PairVerdict> {
    let tower = c.tower();
    if d.tower() != tower || d.len() != c.len() {
        return Err(Error::shape("codes differ in tower or length"));
    }
    let q = tower.q() as u64;
    budget.check_words(q, c.dim().max(d.dim()))?;
    let cw = codewords(c);
    let dw: HashSet<Vec<u32>> = codewords(d).into_iter().collect();
    let mut common: Vec<&Vec<u32>> = cw
        .iter()
        .filter(|w| dw.contains(*w) && w.iter().any(|&x| x != 0))
        .collect();
    common.sort();
    let dims = (log_size(q, cw.len()), log_size(q, dw.len()), c.len() * tower.m());
    Ok(PairVerdict {
        is_complementary: common.is_empty() && dims.0 + dims.1 == dims.2,
        witness: common.first().map(|w| w.to_vec()),
        dims,
    })
}

/// Every codeword of a linear code, by running over all combinations of its
/// generator rows.
pub fn linear_codewords(c: &LinearCode) -> Vec<Vec<u32>> {
    let f = c.field();
    let rows: Vec<&[u32]> = c.gen().rows().collect();
    let mut coeffs = vec![0u32; rows.len()];
    let mut out = Vec::new();
    loop {
        let mut w = vec![0u32; c.len()];
        for (a, row) in coeffs.iter().zip(&rows) {
            for (x, &r) in w.iter_mut().zip(row.iter()) {
                *x = f.add(*x, f.mul(*a, r));
            }
        }
        out.push(w);
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return out;
            }
            coeffs[i] += 1;
            if coeffs[i] < f.order() {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// LCP check by listing both codes.
pub fn brute_lcp(c: &LinearCode, d: &LinearCode, budget: &EnumBudget) -> Result<PairVerdict> {
    if d.tower() != c.tower() || d.level() != c.level() || d.len() != c.len() {
        return Err(Error::shape("codes differ in tower, level or length"));
    }
    let q = c.field().order() as u64;
    budget.check_words(q, c.dim().max(d.dim()))?;
    let cw = linear_codewords(c);
    let dw: HashSet<Vec<u32>> = linear_codewords(d).into_iter().collect();
    let mut common: Vec<&Vec<u32>> = cw
        .iter()
        .filter(|w| dw.contains(*w) && w.iter().any(|&x| x != 0))
        .collect();
    common.sort();
    let dims = (log_size(q, cw.len()), log_size(q, dw.len()), c.len());
    Ok(PairVerdict {
        is_complementary: common.is_empty() && dims.0 + dims.1 == dims.2,
        witness: common.first().map(|w| w.to_vec()),
        dims,
    })
}

/// Least nonzero Hamming weight by listing, or `None` for the zero code.
pub fn brute_min_distance(words: &[Vec<u32>]) -> Option<usize> {
    words
        .iter()
        .map(|w| w.iter().filter(|&&x| x != 0).count())
        .filter(|&wt| wt > 0)
        .min()
}

/// `Σ_v [dim choose v]_Q`.
pub fn subspace_total(q: &BigUint, dim: usize) -> BigUint {
    let one = BigUint::from(1u32);
    (0..=dim)
        .map(|v| {
            let (mut num, mut den) = (one.clone(), one.clone());
            for j in 0..v {
                num *= q.pow(dim as u32) - q.pow(j as u32);
                den *= q.pow(v as u32) - q.pow(j as u32);
            }
            num / den
        })
        .sum()
}

/// Every subspace of `field^dim` as its reduced row echelon basis, ordered
/// by dimension, then pivot columns, then free entries.
pub fn enumerate_subspaces_in(
    field: &Field,
    dim: usize,
    budget: &EnumBudget,
) -> Result<SubspaceIter> {
    let total = subspace_total(&BigUint::from(field.order()), dim);
    if total > BigUint::from(budget.max_subspaces) {
        return Err(Error::BudgetExceeded(format!(
            "{total} subspaces exceed {}",
            budget.max_subspaces
        )));
    }
    Ok(SubspaceIter {
        field: field.clone(),
        dim,
        v: 0,
        pivots: None,
        free: Vec::new(),
        digits: Vec::new(),
    })
}

/// [`enumerate_subspaces_in`] over the default field of order `q`.
pub fn enumerate_subspaces(q: u64, dim: usize, budget: &EnumBudget) -> Result<SubspaceIter> {
    let f = factorize(q);
    if f.len() != 1 || q > u32::MAX as u64 {
        return Err(Error::OutOfRange {
            what: "Q",
            detail: format!("{q} is not a prime power"),
        });
    }
    let (p, e) = f[0];
    enumerate_subspaces_in(&GaloisField::with_order(p as u32, e as usize)?, dim, budget)
}

pub struct SubspaceIter {
    field: Field,
    dim: usize,
    v: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
}

impl SubspaceIter {
    fn reset_free(&mut self) {
        let piv = self.pivots.as_ref().unwrap();
        self.free = piv
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..self.dim).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
            .collect();
        self.digits = vec![0; self.free.len()];
    }

    fn current(&self) -> Mat {
        let piv = self.pivots.as_ref().unwrap();
        let mut m = Mat::zeros(&self.field, piv.len(), self.dim);
        for (r, &p) in piv.iter().enumerate() {
            m.set(r, p, 1);
        }
        for (&(r, c), &x) in self.free.iter().zip(&self.digits) {
            m.set(r, c, x);
        }
        m
    }

    fn advance(&mut self) {
        let q = self.field.order();
        for x in self.digits.iter_mut().rev() {
            *x += 1;
            if *x < q {
                return;
            }
            *x = 0;
        }
        let piv = self.pivots.as_mut().unwrap();
        let v = piv.len();
        let mut i = v;
        while i > 0 {
            i -= 1;
            if piv[i] < self.dim - v + i {
                piv[i] += 1;
                for j in i + 1..v {
                    piv[j] = piv[j - 1] + 1;
                }
                self.reset_free();
                return;
            }
        }
        self.pivots = None;
        self.v += 1;
    }
}

impl Iterator for SubspaceIter {
    type Item = Mat;

    fn next(&mut self) -> Option<Mat> {
        if self.pivots.is_none() {
            if self.v > self.dim {
                return None;
            }
            self.pivots = Some((0..self.v).collect());
            self.reset_free();
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumMode {
    Componentwise,
    Raw,
}

impl FromStr for EnumMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "componentwise" => Ok(EnumMode::Componentwise),
            "raw" => Ok(EnumMode::Raw),
            _ => Err(Error::OutOfRange {
                what: "mode",
                detail: format!("{s:?}, expected componentwise or raw"),
            }),
        }
    }
}

/// Complementary pairs of subspaces of `field^dim`, counted pair by pair.
fn count_pairs(subs: &[Mat], dim: usize) -> u64 {
    let mut by_dim: HashMap<usize, Vec<&Mat>> = HashMap::new();
    for s in subs {
        by_dim.entry(s.nrows()).or_default().push(s);
    }
    let mut count = 0;
    for (&a, firsts) in &by_dim {
        let Some(seconds) = by_dim.get(&(dim - a)) else {
            continue;
        };
        for x in firsts {
            for y in seconds {
                if x.vstack(y).unwrap().rank() == dim {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Count `λ`-constacyclic complementary pairs by enumeration.
///
/// `Componentwise` enumerates every `K_i`-subspace of every component and
/// multiplies the per-component pair counts. `Raw` never factors anything:
/// it generates all shift-closed `F_q`-subspaces of `F_{q^m}^n` as sums of
/// the cyclic submodules generated by single vectors, then counts
/// complementary pairs among them.
pub fn enumerate_constacyclic_acp(
    tower: &FieldTower,
    n: usize,
    lambda: u32,
    mode: EnumMode,
    budget: &EnumBudget,
) -> Result<BigUint> {
    match mode {
        EnumMode::Componentwise => componentwise_count(tower, n, lambda, budget),
        EnumMode::Raw => {
            let subs = enumerate_submodules(tower, n, lambda, budget)?;
            let mats: Vec<Mat> = subs.iter().map(|c| c.expanded().mat.clone()).collect();
            Ok(BigUint::from(count_pairs(&mats, n * tower.m())))
        }
    }
}

fn componentwise_count(
    tower: &FieldTower,
    n: usize,
    lambda: u32,
    budget: &EnumBudget,
) -> Result<BigUint> {
    let dec = decompose_ring(tower, n, lambda)?;
    let m = tower.m();
    let squares: BigUint = dec
        .components()
        .iter()
        .map(|c| subspace_total(&BigUint::from(c.field.order()), m).pow(2))
        .sum();
    if squares > BigUint::from(budget.max_subspaces) {
        return Err(Error::BudgetExceeded(format!(
            "{squares} component subspace pairs exceed {}",
            budget.max_subspaces
        )));
    }
    let mut total = BigUint::from(1u32);
    for c in dec.components() {
        let subs: Vec<Mat> = enumerate_subspaces_in(&c.field, m, budget)?.collect();
        total *= count_pairs(&subs, m);
    }
    Ok(total)
}

/// All `λ`-constacyclic `F_q`-linear codes of length `n`, in discovery
/// order.
pub fn enumerate_submodules(
    tower: &FieldTower,
    n: usize,
    lambda: u32,
    budget: &EnumBudget,
) -> Result<Vec<AdditiveCode>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "length",
            detail: "n must be positive".into(),
        });
    }
    if lambda == 0 || !tower.mid().contains(lambda) {
        return Err(Error::InvalidElement(lambda));
    }
    let total = budget.check_vectors(tower, n)?;
    let top = tower.top();
    let mut cyclic: HashMap<Vec<u32>, AdditiveCode> = HashMap::new();
    for idx in 1..total {
        let mut v = vector_at(tower, n, idx);
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let next = shift(tower, &v, lambda);
            rows.push(v);
            v = next;
        }
        let c = AdditiveCode::span_fq(tower, &Mat::from_rows_width(top, n, &rows)?)?;
        cyclic.entry(c.basis().data().to_vec()).or_insert(c);
    }
    let mut gens: Vec<AdditiveCode> = cyclic.into_values().collect();
    gens.sort_by(|a, b| (a.dim(), a.basis().data()).cmp(&(b.dim(), b.basis().data())));
    let zero = AdditiveCode::zero(tower, n);
    let mut seen: HashSet<Vec<u32>> = HashSet::from([zero.basis().data().to_vec()]);
    let mut out = vec![zero];
    let mut head = 0;
    while head < out.len() {
        let s = out[head].clone();
        head += 1;
        for g in &gens {
            if g.is_subcode_of(&s)? {
                continue;
            }
            let j = s.join(g)?;
            if seen.insert(j.basis().data().to_vec()) {
                out.push(j);
            }
        }
        if out.len() as u64 > budget.max_subspaces {
            return Err(Error::BudgetExceeded(format!(
                "more than {} submodules",
                budget.max_subspaces
            )));
        }
    }
    Ok(out)
}

/// Per-component complementary pair counts predicted by the formula, for
/// comparison with the componentwise enumeration.
pub fn predicted_component_counts(tower: &FieldTower, n: usize, lambda: u32) -> Result<Vec<BigUint>> {
    let q = BigUint::from(tower.q());
    Ok(crate::constacyclic::factor_degrees(tower, n, lambda)?
        .into_iter()
        .map(|d| complementary_pairs(tower.m(), &q.pow(d as u32)))
        .collect())
}
