//! Random instances and property checks shared by the property suite and the
//! acceptance target.
#![allow(dead_code)]

use std::collections::HashMap;

use acp_core::acp::{self, rank_iff};
use acp_core::constacyclic::{self as cc, ConstacyclicCode, RingDecomposition};
use acp_core::construct::trace_pair;
use acp_core::oracle::{self, EnumBudget, Side};
use acp_core::{AdditiveCode, Error, FieldTower, FormSpec, Level, LinearCode, Mat};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `(label, p, k, m)`.
pub const TOWERS: [(&str, u32, usize, usize); 4] = [
    ("F4/F2", 2, 1, 2),
    ("F9/F3", 3, 1, 2),
    ("F64/F8", 2, 3, 2),
    ("F8/F2", 2, 1, 3),
];

pub const PROPERTIES: [&str; 9] = [
    "dual dimensions",
    "double duals",
    "sum/intersection duals",
    "ACP invariant under duals",
    "rank criterion",
    "lift equivalence",
    "trace pair",
    "componentwise criterion",
    "oracle agreement",
];

pub fn tower(idx: usize) -> FieldTower {
    let (_, p, k, m) = TOWERS[idx];
    FieldTower::new(p, k, m).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(t: &FieldTower, n: usize, r: &mut ChaCha8Rng) -> Vec<u32> {
    (0..n).map(|_| t.top().random(r)).collect()
}

/// The `F_q`-span of a few random vectors.
pub fn random_additive(t: &FieldTower, n: usize, r: &mut ChaCha8Rng) -> AdditiveCode {
    let count = r.gen_range(0..=n * t.m() + 1);
    let rows: Vec<Vec<u32>> = (0..count).map(|_| random_vector(t, n, r)).collect();
    AdditiveCode::span_fq(t, &Mat::from_rows_width(t.top(), n, &rows).unwrap()).unwrap()
}

/// Random vectors are added to `D` while they stay outside `C + D`.
pub fn random_complement(c: &AdditiveCode, r: &mut ChaCha8Rng) -> AdditiveCode {
    let t = c.tower();
    let n = c.len();
    let mut d = AdditiveCode::zero(t, n);
    let mut sum = c.clone();
    while !sum.is_full() {
        let v = random_vector(t, n, r);
        if !sum.member(&v).unwrap() {
            let one = AdditiveCode::span_fq(t, &Mat::from_rows(t.top(), &[v]).unwrap()).unwrap();
            d = d.join(&one).unwrap();
            sum = sum.join(&one).unwrap();
        }
    }
    d
}

/// A random subspace of exactly `F_q`-dimension `dim`.
pub fn random_of_dim(t: &FieldTower, n: usize, dim: usize, r: &mut ChaCha8Rng) -> AdditiveCode {
    let mut c = AdditiveCode::zero(t, n);
    while c.dim() < dim {
        let v = random_vector(t, n, r);
        let one = AdditiveCode::span_fq(t, &Mat::from_rows(t.top(), &[v]).unwrap()).unwrap();
        c = c.join(&one).unwrap();
    }
    c
}

pub fn random_form(t: &FieldTower, n: usize, r: &mut ChaCha8Rng) -> FormSpec {
    let mu = (0..n).map(|_| t.top().random_nonzero(r)).collect();
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(r);
    let pi = r.gen_range(0..t.k() * t.m());
    FormSpec::new(t, mu, sigma, pi).unwrap()
}

/// A pair `(C, D)` that is complementary about half of the time.
pub fn random_pair(t: &FieldTower, n: usize, r: &mut ChaCha8Rng) -> (AdditiveCode, AdditiveCode) {
    let c = random_additive(t, n, r);
    let d = match r.gen_range(0..3) {
        0 | 1 => random_complement(&c, r),
        _ => random_of_dim(t, n, n * t.m() - c.dim(), r),
    };
    (c, d)
}

pub fn random_linear(t: &FieldTower, n: usize, r: &mut ChaCha8Rng) -> LinearCode {
    let count = r.gen_range(0..=n);
    let rows: Vec<Vec<u32>> = (0..count).map(|_| random_vector(t, n, r)).collect();
    LinearCode::from_rows(t, Level::Top, n, &rows).unwrap()
}

fn fail(name: &str, detail: impl std::fmt::Display) -> Result<(), String> {
    Err(format!("{name}: {detail}"))
}

fn check(ok: bool, name: &str, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        fail(name, detail())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

pub fn prop_dual_dims(f: &FormSpec, c: &AdditiveCode) -> Result<(), String> {
    let nm = c.len() * c.tower().m();
    let (l, r) = (f.left_dual(c).map_err(e2s)?, f.right_dual(c).map_err(e2s)?);
    check(c.dim() + l.dim() == nm && c.dim() + r.dim() == nm, PROPERTIES[0], || {
        format!("dim C = {}, left {}, right {}, nm = {nm}", c.dim(), l.dim(), r.dim())
    })
}

pub fn prop_double_duals(f: &FormSpec, c: &AdditiveCode) -> Result<(), String> {
    let (l, r) = (f.left_dual(c).map_err(e2s)?, f.right_dual(c).map_err(e2s)?);
    let (lr, rl) = (f.right_dual(&l).map_err(e2s)?, f.left_dual(&r).map_err(e2s)?);
    check(lr == *c && rl == *c, PROPERTIES[1], || "double dual differs from C".into())
}

/// The four sum/intersection identities.
pub fn prop_lemma(f: &FormSpec, c: &AdditiveCode, d: &AdditiveCode) -> Result<(), String> {
    let sum = c.join(d).map_err(e2s)?;
    let meet = c.meet(d).map_err(e2s)?;
    for (side, dual) in [
        ("left", FormSpec::left_dual as fn(&FormSpec, &AdditiveCode) -> acp_core::Result<AdditiveCode>),
        ("right", FormSpec::right_dual),
    ] {
        let (dc, dd) = (dual(f, c).map_err(e2s)?, dual(f, d).map_err(e2s)?);
        check(dual(f, &sum).map_err(e2s)? == dc.meet(&dd).map_err(e2s)?, PROPERTIES[2], || {
            format!("{side}: (C+D)^⊥ != C^⊥ ∩ D^⊥")
        })?;
        check(dual(f, &meet).map_err(e2s)? == dc.join(&dd).map_err(e2s)?, PROPERTIES[2], || {
            format!("{side}: (C∩D)^⊥ != C^⊥ + D^⊥")
        })?;
    }
    Ok(())
}

/// `(C, D)` ACP iff both dual pairs are.
pub fn prop_dual_pairs(f: &FormSpec, c: &AdditiveCode, d: &AdditiveCode) -> Result<(), String> {
    let a = acp::is_acp(c, d).map_err(e2s)?.is_complementary;
    let acp_of = |(x, y): (AdditiveCode, AdditiveCode)| acp::is_acp(&x, &y).map(|v| v.is_complementary);
    let l = acp_of(acp::dual_pair(f, c, d).map_err(e2s)?).map_err(e2s)?;
    let r = acp_of(acp::right_dual_pair(f, c, d).map_err(e2s)?).map_err(e2s)?;
    check(a == l && a == r, PROPERTIES[3], || format!("ACP {a}, left duals {l}, right duals {r}"))
}

/// Under `dim C + dim D = nm`, the rank criterion decides ACP.
pub fn prop_rank_iff(f: &FormSpec, c: &AdditiveCode, d: &AdditiveCode) -> Result<(), String> {
    let nm = c.len() * c.tower().m();
    let a = acp::is_acp(c, d).map_err(e2s)?.is_complementary;
    match rank_iff(f, c, d) {
        Ok(r) => check(c.dim() + d.dim() == nm && r.holds == a, PROPERTIES[4], || {
            format!("rank criterion {} vs ACP {a} (ranks {:?}, targets {:?})", r.holds, r.ranks, r.targets)
        }),
        Err(Error::DimensionHypothesis { .. }) => {
            check(c.dim() + d.dim() != nm, PROPERTIES[4], || "hypothesis wrongly rejected".into())
        }
        Err(e) => fail(PROPERTIES[4], e),
    }
}

/// LCP over `F_{q^m}` iff the lifted pair is ACP.
pub fn prop_lift(c: &LinearCode, d: &LinearCode) -> Result<(), String> {
    let l = acp::is_lcp(c, d).map_err(e2s)?.is_complementary;
    let a = acp::is_acp(&c.lift().map_err(e2s)?, &d.lift().map_err(e2s)?)
        .map_err(e2s)?
        .is_complementary;
    check(l == a, PROPERTIES[5], || format!("LCP {l}, lifted ACP {a}"))
}

/// An ACP has an LCP trace pair over `F_q`.
pub fn prop_trace_pair(c: &AdditiveCode, d: &AdditiveCode) -> Result<(), String> {
    let tp = trace_pair(c, d).map_err(e2s)?;
    check(!tp.premise.is_complementary || tp.verdict.is_complementary, PROPERTIES[6], || {
        format!(
            "ACP with trace dims {} + {} over length {}, basis C {:?}, basis D {:?}",
            tp.first.dim(),
            tp.second.dim(),
            c.len(),
            c.basis().to_rows(),
            d.basis().to_rows()
        )
    })
}

/// Two constacyclic codes built from component subspaces; `D` is a
/// componentwise complement about half of the time.
pub fn random_constacyclic_pair(
    dec: &RingDecomposition,
    r: &mut ChaCha8Rng,
) -> (ConstacyclicCode, ConstacyclicCode) {
    let m = dec.tower().m();
    let mut cs = Vec::new();
    let mut ds = Vec::new();
    let complement = r.gen_bool(0.5);
    for comp in dec.components() {
        let k = &comp.field;
        let rows: Vec<Vec<u32>> = (0..r.gen_range(0..=m))
            .map(|_| (0..m).map(|_| k.random(r)).collect())
            .collect();
        let c = Mat::from_rows_width(k, m, &rows).unwrap().rref().mat;
        let d = if complement {
            let mut d = Mat::zeros(k, 0, m);
            while c.nrows() + d.nrows() < m || c.vstack(&d).unwrap().rank() < m {
                let v: Vec<u32> = (0..m).map(|_| k.random(r)).collect();
                let cand = d.vstack(&Mat::from_rows(k, &[v]).unwrap()).unwrap();
                if c.vstack(&cand).unwrap().rank() == c.nrows() + cand.nrows() {
                    d = cand;
                }
            }
            d
        } else {
            let rows: Vec<Vec<u32>> = (0..r.gen_range(0..=m))
                .map(|_| (0..m).map(|_| k.random(r)).collect())
                .collect();
            Mat::from_rows_width(k, m, &rows).unwrap()
        };
        cs.push(c);
        ds.push(d);
    }
    let lam = dec.lambda();
    (
        ConstacyclicCode::new(dec.reassemble(&cs).unwrap(), lam).unwrap(),
        ConstacyclicCode::new(dec.reassemble(&ds).unwrap(), lam).unwrap(),
    )
}

pub fn prop_componentwise(
    dec: &RingDecomposition,
    c: &ConstacyclicCode,
    d: &ConstacyclicCode,
) -> Result<(), String> {
    let comp = cc::is_acp_constacyclic(c, d, dec).map_err(e2s)?.verdict;
    let def = acp::is_acp(c.code(), d.code()).map_err(e2s)?;
    check(comp.is_complementary == def.is_complementary && comp.dims == def.dims, PROPERTIES[7], || {
        format!("componentwise {comp:?}, definitional {def:?}")
    })
}

/// Fast duals and verdicts against brute force, skipped past the budget.
pub fn prop_oracle(f: &FormSpec, c: &AdditiveCode, d: &AdditiveCode) -> Result<(), String> {
    let b = EnumBudget::default();
    for side in [Side::Left, Side::Right] {
        match oracle::brute_dual(f, c, side, &b) {
            Ok(slow) => {
                let fast = match side {
                    Side::Left => f.left_dual(c),
                    Side::Right => f.right_dual(c),
                }
                .map_err(e2s)?;
                check(slow == fast, PROPERTIES[8], || format!("{side:?} dual differs from brute force"))?;
            }
            Err(Error::BudgetExceeded(_)) => {}
            Err(e) => return fail(PROPERTIES[8], e),
        }
    }
    match oracle::brute_acp(c, d, &b) {
        Ok(slow) => {
            let fast = acp::is_acp(c, d).map_err(e2s)?;
            check(
                slow.is_complementary == fast.is_complementary && slow.dims == fast.dims,
                PROPERTIES[8],
                || format!("ACP verdict {fast:?} vs brute {slow:?}"),
            )?;
            if let Some(w) = &fast.witness {
                check(c.member(w).unwrap() && d.member(w).unwrap(), PROPERTIES[8], || {
                    "witness outside C ∩ D".into()
                })?;
            }
        }
        Err(Error::BudgetExceeded(_)) => {}
        Err(e) => return fail(PROPERTIES[8], e),
    }
    Ok(())
}

/// Lengths coprime to `p` with `n ≤ 5`.
pub fn constacyclic_lengths(t: &FieldTower) -> Vec<usize> {
    (1..=5).filter(|n| n % t.p() as usize != 0).collect()
}

/// Runs one random instance of every property.
pub struct Runner {
    pub tower: FieldTower,
    decs: HashMap<(usize, u32), RingDecomposition>,
}

impl Runner {
    pub fn new(idx: usize) -> Self {
        Runner {
            tower: tower(idx),
            decs: HashMap::new(),
        }
    }

    pub fn decomposition(&mut self, n: usize, lambda: u32) -> &RingDecomposition {
        let t = self.tower.clone();
        self.decs
            .entry((n, lambda))
            .or_insert_with(|| cc::decompose_ring(&t, n, lambda).unwrap())
    }

    /// `(property index, result)` for each property.
    pub fn run(&mut self, seed: u64, n: usize) -> Vec<(usize, Result<(), String>)> {
        let t = self.tower.clone();
        let mut r = rng(seed);
        let f = random_form(&t, n, &mut r);
        let (c, d) = random_pair(&t, n, &mut r);
        let mut out = vec![
            (0, prop_dual_dims(&f, &c)),
            (1, prop_double_duals(&f, &c)),
            (2, prop_lemma(&f, &c, &d)),
            (3, prop_dual_pairs(&f, &c, &d)),
            (4, prop_rank_iff(&f, &c, &d)),
        ];
        let lc = random_linear(&t, n, &mut r);
        let ld = if r.gen_bool(0.5) {
            linear_complement(&lc, &mut r)
        } else {
            random_linear(&t, n, &mut r)
        };
        out.push((5, prop_lift(&lc, &ld)));
        out.push((6, prop_trace_pair(&c, &d)));
        let lens = constacyclic_lengths(&t);
        let cn = lens[seed as usize % lens.len()];
        let lambda = r.gen_range(1..t.q());
        let dec = self.decomposition(cn, lambda).clone();
        let (cc_, dc) = random_constacyclic_pair(&dec, &mut r);
        out.push((7, prop_componentwise(&dec, &cc_, &dc)));
        out.push((8, prop_oracle(&f, &c, &d)));
        out
    }
}

/// A linear complement of `C` in `F_{q^m}^n`.
pub fn linear_complement(c: &LinearCode, r: &mut ChaCha8Rng) -> LinearCode {
    let t = c.tower();
    let n = c.len();
    let mut d = LinearCode::zero(t, Level::Top, n);
    let mut sum = c.clone();
    while sum.dim() < n {
        let v = random_vector(t, n, r);
        if !sum.member(&v).unwrap() {
            let one = LinearCode::from_rows(t, Level::Top, n, &[v]).unwrap();
            d = d.join(&one).unwrap();
            sum = sum.join(&one).unwrap();
        }
    }
    d
}
