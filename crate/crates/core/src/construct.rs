//! Building-up constructions of complementary pairs.
//!
//! Every report carries a verdict recomputed from its output codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::acp::{is_acp, is_lcp, PairVerdict};
use crate::code::{AdditiveCode, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldTower, Level};
use crate::linalg::Mat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Certificate {
    None,
    Scaling(Vec<u32>),
    Lambda(u32),
    Alphas(Vec<u32>),
}

#[derive(Debug, Clone)]
pub struct ConstructionReport<C> {
    pub summary: String,
    pub first: C,
    pub second: C,
    pub verdict: PairVerdict,
    pub certificate: Certificate,
}

fn same_shape(c: &LinearCode, d: &LinearCode) -> Result<()> {
    if c.tower() != d.tower() || c.level() != d.level() || c.len() != d.len() {
        return Err(Error::shape("codes must share tower, level and length"));
    }
    Ok(())
}

/// Lift both codes to additive codes and test the lifted pair.
pub fn lift_pair(c: &LinearCode, d: &LinearCode) -> Result<ConstructionReport<AdditiveCode>> {
    same_shape(c, d)?;
    let (lc, ld) = (c.lift()?, d.lift()?);
    let verdict = is_acp(&lc, &ld)?;
    Ok(ConstructionReport {
        summary: format!("lift of [{}, {}] and [{}, {}] codes", c.len(), c.dim(), d.len(), d.dim()),
        first: lc,
        second: ld,
        verdict,
        certificate: Certificate::None,
    })
}

#[derive(Debug, Clone)]
pub struct TracePair {
    pub first: LinearCode,
    pub second: LinearCode,
    /// ACP verdict of the input pair (form-free).
    pub premise: PairVerdict,
    /// LCP verdict of the trace codes over `F_q`.
    pub verdict: PairVerdict,
}

/// `(Tr(C), Tr(D))` with its LCP verdict.
pub fn trace_pair(c: &AdditiveCode, d: &AdditiveCode) -> Result<TracePair> {
    let premise = is_acp(c, d)?;
    let (tc, td) = (c.trace_code(), d.trace_code());
    let verdict = is_lcp(&tc, &td)?;
    Ok(TracePair {
        first: tc,
        second: td,
        premise,
        verdict,
    })
}

#[derive(Debug, Clone)]
pub struct ScalingFound {
    pub a: Vec<u32>,
    /// LCP verdict of `(aC̃, D̃)`.
    pub lcp: PairVerdict,
    /// ACP verdict of the lifted pair.
    pub lifted: PairVerdict,
    /// Number of candidate vectors tried, including the successful one.
    pub tried: u64,
}

/// Check a specific scaling vector.
pub fn check_scaling(c: &LinearCode, d: &LinearCode, a: &[u32]) -> Result<(PairVerdict, PairVerdict)> {
    let sc = c.scale(a)?;
    let lcp = is_lcp(&sc, d)?;
    let lifted = is_acp(&sc.lift()?, &d.lift()?)?;
    Ok((lcp, lifted))
}

/// Search for `a` in `(F_{q^m}^*)^n` making `(aC̃, D̃)` an LCP.
///
/// Candidates are tried in a fixed order: the all-ones vector, then the
/// next `budget` exponent vectors `e` in lexicographic order (first
/// coordinate most significant) with `a_i = w^(e_i)` for the primitive `w`,
/// then `budget` vectors drawn from a ChaCha generator seeded with `seed`.
pub fn find_scaling(
    c: &LinearCode,
    d: &LinearCode,
    budget: u64,
    seed: u64,
) -> Result<Option<ScalingFound>> {
    same_shape(c, d)?;
    if c.level() != Level::Top {
        return Err(Error::LevelMismatch {
            expected: Level::Top.to_string(),
            got: c.level().to_string(),
        });
    }
    if c.dim() + d.dim() != c.len() {
        return Err(Error::Precondition(format!(
            "dim C + dim D = {} but the length is {}",
            c.dim() + d.dim(),
            c.len()
        )));
    }
    let n = c.len();
    let top = c.tower().top();
    let w = top.primitive();
    let group = top.order() - 1;
    let powers: Vec<u32> = (0..group)
        .scan(1u32, |x, _| {
            let cur = *x;
            *x = top.mul(*x, w);
            Some(cur)
        })
        .collect();
    let mut tried = 0u64;
    let mut attempt = |a: Vec<u32>| -> Result<Option<ScalingFound>> {
        tried += 1;
        let sc = c.scale(&a)?;
        let lcp = is_lcp(&sc, d)?;
        if !lcp.is_complementary {
            return Ok(None);
        }
        let lifted = is_acp(&sc.lift()?, &d.lift()?)?;
        Ok(Some(ScalingFound {
            a,
            lcp,
            lifted,
            tried,
        }))
    };
    if let Some(found) = attempt(vec![1; n])? {
        return Ok(Some(found));
    }
    let mut exps = vec![0u32; n];
    for _ in 0..budget {
        if !increment(&mut exps, group) {
            break;
        }
        let a = exps.iter().map(|&e| powers[e as usize]).collect();
        if let Some(found) = attempt(a)? {
            return Ok(Some(found));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let a = (0..n).map(|_| rng.gen_range(1..top.order())).collect();
        if let Some(found) = attempt(a)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Lexicographic successor with the last coordinate varying fastest;
/// false after the final vector.
fn increment(v: &mut [u32], radix: u32) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x < radix {
            return true;
        }
        *x = 0;
    }
    false
}

/// Vandermonde generator `(b_j^i)` for `0 <= i < k`.
pub fn vandermonde(tower: &FieldTower, points: &[Elem], k: usize) -> Result<Mat> {
    let top = tower.top();
    let mut rows = Vec::with_capacity(k);
    let mut cur = vec![1u32; points.len()];
    for _ in 0..k {
        rows.push(cur.clone());
        for (x, p) in cur.iter_mut().zip(points) {
            *x = top.mul(*x, p.code);
        }
    }
    Mat::from_rows_width(top, points.len(), &rows)
}

/// `RS_k(b)` over `F_{q^m}` and its Euclidean dual.
pub fn rs_code(tower: &FieldTower, points: &[Elem], k: usize) -> Result<(LinearCode, LinearCode)> {
    let n = points.len();
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "dimension",
            detail: format!("k = {k}, need 1 <= k <= {n}"),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for p in points {
        tower.elem(p.level, p.code)?;
        if !seen.insert(p.code) {
            return Err(Error::Precondition(format!(
                "evaluation points must be distinct; {} repeats",
                p.code
            )));
        }
    }
    let g = vandermonde(tower, points, k)?;
    let c = LinearCode::from_mat(tower, Level::Top, &g)?;
    let d = c.dual();
    Ok((c, d))
}

#[derive(Debug, Clone)]
pub struct Expansion {
    /// `G̃_ex1 = [[λ, P], [0, G̃_1]]`.
    pub gen1: Mat,
    /// `G̃_ex2 = [P'^T | G̃_2]`.
    pub gen2: Mat,
    pub lambda: u32,
    pub first: LinearCode,
    pub second: LinearCode,
    /// LCP verdict of the expanded pair.
    pub verdict: PairVerdict,
    /// ACP verdict of the lifted expanded pair.
    pub lifted: PairVerdict,
}

fn check_expansion_inputs(tower: &FieldTower, g1: &Mat, g2: &Mat, p: &[u32]) -> Result<()> {
    let top = tower.top();
    let n = g1.ncols();
    if g1.field() != top || g2.field() != top || g2.ncols() != n || p.len() != n {
        return Err(Error::shape("G_1, G_2 and P must be top-level with a common length"));
    }
    if g1.rank() != g1.nrows() || g2.rank() != g2.nrows() {
        return Err(Error::Precondition("generator rows must be independent".into()));
    }
    if p.iter().all(|&x| x == 0) {
        return Err(Error::Precondition("P must be nonzero".into()));
    }
    if let Some(&c) = p.iter().find(|&&c| !top.contains(c)) {
        return Err(Error::InvalidElement(c));
    }
    let c = LinearCode::from_mat(tower, Level::Top, g1)?;
    let d = LinearCode::from_mat(tower, Level::Top, g2)?;
    if !is_lcp(&c, &d)?.is_complementary {
        return Err(Error::Precondition("the input pair is not an LCP".into()));
    }
    Ok(())
}

fn expansion_mats(g1: &Mat, g2: &Mat, p: &[u32], lambda: u32) -> Result<(Mat, Mat)> {
    let top = g1.field();
    let (k, n) = (g1.nrows(), g1.ncols());
    let mut rows1 = Vec::with_capacity(k + 1);
    rows1.push(std::iter::once(lambda).chain(p.iter().copied()).collect::<Vec<_>>());
    for r in g1.rows() {
        rows1.push(std::iter::once(0).chain(r.iter().copied()).collect());
    }
    let rows2: Vec<Vec<u32>> = g2
        .rows()
        .enumerate()
        .map(|(i, r)| std::iter::once(p[i]).chain(r.iter().copied()).collect())
        .collect();
    Ok((
        Mat::from_rows_width(top, n + 1, &rows1)?,
        Mat::from_rows_width(top, n + 1, &rows2)?,
    ))
}

fn finish_expansion(tower: &FieldTower, gen1: Mat, gen2: Mat, lambda: u32) -> Result<Expansion> {
    let first = LinearCode::from_mat(tower, Level::Top, &gen1)?;
    let second = LinearCode::from_mat(tower, Level::Top, &gen2)?;
    let verdict = is_lcp(&first, &second)?;
    let lifted = is_acp(&first.lift()?, &second.lift()?)?;
    Ok(Expansion {
        gen1,
        gen2,
        lambda,
        first,
        second,
        verdict,
        lifted,
    })
}

/// Expand an LCP `(C̃, D̃)` to length `n + 1`, taking `λ` as the first power
/// of the primitive element that makes the stacked generators nonsingular.
pub fn expand_pair(tower: &FieldTower, g1: &Mat, g2: &Mat, p: &[u32]) -> Result<Expansion> {
    check_expansion_inputs(tower, g1, g2, p)?;
    let top = tower.top();
    let w = top.primitive();
    let mut lambda = 1u32;
    for _ in 0..top.order() - 1 {
        let (a, b) = expansion_mats(g1, g2, p, lambda)?;
        if a.vstack(&b)?.rank() == g1.ncols() + 1 {
            return finish_expansion(tower, a, b, lambda);
        }
        lambda = top.mul(lambda, w);
    }
    Err(Error::Exhausted("lambda making the expanded pair complementary".into()))
}

/// [`expand_pair`] with a prescribed `λ`; the verdict may be negative.
pub fn expand_pair_with(
    tower: &FieldTower,
    g1: &Mat,
    g2: &Mat,
    p: &[u32],
    lambda: u32,
) -> Result<Expansion> {
    check_expansion_inputs(tower, g1, g2, p)?;
    let (a, b) = expansion_mats(g1, g2, p, lambda)?;
    finish_expansion(tower, a, b, lambda)
}

/// `(Σ α_i C_i, Σ α_i D_i)` from `m` LCPs over `F_q` and `F_q`-independent
/// `α_0, ..., α_(m-1)`.
pub fn combine_lcps(
    tower: &FieldTower,
    alphas: &[u32],
    pairs: &[(LinearCode, LinearCode)],
) -> Result<ConstructionReport<AdditiveCode>> {
    let m = tower.m();
    if alphas.len() != m || pairs.len() != m {
        return Err(Error::shape(format!(
            "need {m} alphas and {m} pairs, got {} and {}",
            alphas.len(),
            pairs.len()
        )));
    }
    let elems = alphas
        .iter()
        .map(|&a| tower.elem(Level::Top, a))
        .collect::<Result<Vec<_>>>()?;
    if !tower.independent_over_mid(&elems)? {
        return Err(Error::Precondition("alphas are not independent over F_q".into()));
    }
    let n = pairs[0].0.len();
    for (i, (c, d)) in pairs.iter().enumerate() {
        if c.level() != Level::Mid || d.level() != Level::Mid || *c.tower() != *tower {
            return Err(Error::LevelMismatch {
                expected: "codes over the middle field".into(),
                got: format!("pair {} over {} and {}", i + 1, c.level(), d.level()),
            });
        }
        if c.len() != n || d.len() != n {
            return Err(Error::shape("all pairs must have a common length"));
        }
        if !is_lcp(c, d)?.is_complementary {
            return Err(Error::Precondition(format!("pair {} is not an LCP", i + 1)));
        }
    }
    let top = tower.top();
    let combine = |pick: &dyn Fn(&(LinearCode, LinearCode)) -> &LinearCode| -> Result<AdditiveCode> {
        let mut rows = Vec::new();
        for (a, pair) in alphas.iter().zip(pairs) {
            for r in pick(pair).gen().rows() {
                rows.push(r.iter().map(|&x| top.mul(*a, x)).collect());
            }
        }
        AdditiveCode::span_fq(tower, &Mat::from_rows_width(top, n, &rows)?)
    };
    let c = combine(&|p| &p.0)?;
    let d = combine(&|p| &p.1)?;
    let verdict = is_acp(&c, &d)?;
    Ok(ConstructionReport {
        summary: format!("combination of {m} LCPs of length {n}"),
        first: c,
        second: d,
        verdict,
        certificate: Certificate::Alphas(alphas.to_vec()),
    })
}

#[derive(Debug, Clone)]
pub struct ParityExpansion {
    /// `[[1, d], [0, G̃]]`.
    pub gen1: Mat,
    /// `[[1, c], [0, H̃]]`.
    pub parity2: Mat,
    pub first: LinearCode,
    pub second: LinearCode,
    /// ACP verdict of the lifted pair.
    pub verdict: PairVerdict,
}

/// Expand `C̃` by `(1, d)` and `D̃ = {v : H̃ v^T = 0}` by the parity row
/// `(1, c)`, then lift.
///
/// `d · c^T = 0` alone does not make the expanded pair complementary: with
/// `(C̃, D̃)` an LCP, `G̃_ex1 H̃_ex2^T` is nonsingular iff
/// `1 + d c^T - d H̃^T (G̃ H̃^T)^(-1) G̃ c^T ≠ 0`. The precondition is
/// therefore `d · c^T = 0` together with `G̃ c^T = 0` (c ∈ C̃^⊥) or
/// `H̃ d^T = 0` (d ∈ D̃), under which that quantity is 1.
pub fn parity_expansion(
    tower: &FieldTower,
    g: &Mat,
    h: &Mat,
    c: &[u32],
    d: &[u32],
) -> Result<ParityExpansion> {
    let top = tower.top();
    let n = g.ncols();
    if g.field() != top || h.field() != top || h.ncols() != n || c.len() != n || d.len() != n {
        return Err(Error::shape("G, H, c and d must be top-level with a common length"));
    }
    if let Some(&x) = c.iter().chain(d).find(|&&x| !top.contains(x)) {
        return Err(Error::InvalidElement(x));
    }
    if g.rank() != g.nrows() || h.rank() != h.nrows() {
        return Err(Error::Precondition("G and H must have independent rows".into()));
    }
    let ct = LinearCode::from_mat(tower, Level::Top, g)?;
    let dt = LinearCode::from_mat(tower, Level::Top, &h.kernel())?;
    if !is_lcp(&ct, &dt)?.is_complementary {
        return Err(Error::Precondition("the input pair is not an LCP".into()));
    }
    let dot = |x: &[u32], y: &[u32]| {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| top.add(acc, top.mul(a, b)))
    };
    if dot(d, c) != 0 {
        return Err(Error::Precondition("d · c^T must vanish".into()));
    }
    let c_in_dual = g.rows().all(|r| dot(r, c) == 0);
    let d_in_code = h.rows().all(|r| dot(r, d) == 0);
    if !c_in_dual && !d_in_code {
        return Err(Error::Precondition(
            "need c in the Euclidean dual of C or d in D".into(),
        ));
    }
    let extend = |lead: &[u32], rest: &Mat| -> Result<Mat> {
        let mut rows = vec![std::iter::once(1).chain(lead.iter().copied()).collect::<Vec<_>>()];
        for r in rest.rows() {
            rows.push(std::iter::once(0).chain(r.iter().copied()).collect());
        }
        Mat::from_rows_width(top, n + 1, &rows)
    };
    let gen1 = extend(d, g)?;
    let parity2 = extend(c, h)?;
    let first = LinearCode::from_mat(tower, Level::Top, &gen1)?;
    let second = LinearCode::from_mat(tower, Level::Top, &parity2.kernel())?;
    let verdict = is_acp(&first.lift()?, &second.lift()?)?;
    Ok(ParityExpansion {
        gen1,
        parity2,
        first,
        second,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f25() -> FieldTower {
        FieldTower::new(5, 1, 2).unwrap()
    }

    fn pts(t: &FieldTower, codes: &[u32]) -> Vec<Elem> {
        codes.iter().map(|&c| t.elem(Level::Top, c).unwrap()).collect()
    }

    #[test]
    fn rs_generator_and_dual() {
        let t = f25();
        let p = pts(&t, &[1, 2, 3, 4]);
        let g = vandermonde(&t, &p, 2).unwrap();
        assert_eq!(g.to_rows(), vec![vec![1, 1, 1, 1], vec![1, 2, 3, 4]]);
        let (c, d) = rs_code(&t, &p, 2).unwrap();
        assert_eq!(c.params().unwrap(), (4, 2, 3));
        assert_eq!(d.params().unwrap(), (4, 2, 3));
        let (full, _) = rs_code(&t, &p, 4).unwrap();
        assert_eq!(full.min_distance().unwrap(), 1);
        assert!(rs_code(&t, &pts(&t, &[1, 1]), 1).is_err());
        assert!(rs_code(&t, &p, 5).is_err());
    }

    #[test]
    fn scaling_search() {
        let t = f25();
        let (c, d) = rs_code(&t, &pts(&t, &[1, 2, 3, 4]), 2).unwrap();
        let (lcp, lifted) = check_scaling(&c, &d, &[2, 1, 1, 1]).unwrap();
        assert!(lcp.is_complementary && lifted.is_complementary);
        assert!(!is_lcp(&c, &d).unwrap().is_complementary);
        assert!(find_scaling(&c, &d, 0, 1).unwrap().is_none());
        let found = find_scaling(&c, &d, 100, 1).unwrap().unwrap();
        assert!(found.lcp.is_complementary && found.lifted.is_complementary);
        let full = LinearCode::full(&t, Level::Top, 4);
        let zero = LinearCode::zero(&t, Level::Top, 4);
        assert_eq!(find_scaling(&full, &zero, 0, 0).unwrap().unwrap().a, vec![1; 4]);
        assert!(matches!(find_scaling(&c, &c.join(&d).unwrap(), 1, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn expansion_length_one() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let g1 = Mat::from_rows(t.top(), &[vec![1]]).unwrap();
        let g2 = Mat::zeros(t.top(), 0, 1);
        let e = expand_pair(&t, &g1, &g2, &[2]).unwrap();
        assert!(e.verdict.is_complementary && e.lifted.is_complementary);
        assert_eq!(e.first.dim() + e.second.dim(), 2);
    }

    #[test]
    fn parity_expansion_trivial_and_rejections() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let g = Mat::from_rows(t.top(), &[vec![1, 0, 0]]).unwrap();
        let h = Mat::from_rows(t.top(), &[vec![1, 0, 0]]).unwrap();
        let r = parity_expansion(&t, &g, &h, &[0, 0, 0], &[0, 0, 0]).unwrap();
        assert!(r.verdict.is_complementary);
        assert!(matches!(
            parity_expansion(&t, &g, &h, &[1, 0, 0], &[1, 0, 0]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn orthogonality_alone_is_insufficient() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let top = t.top();
        let g = Mat::from_rows(top, &[vec![1, 1]]).unwrap();
        let h = Mat::from_rows(top, &[vec![1, 0]]).unwrap();
        let mut found = None;
        'search: for c0 in 0..4 {
            for c1 in 0..4 {
                for d0 in 0..4 {
                    for d1 in 0..4 {
                        let (c, d) = ([c0, c1], [d0, d1]);
                        if top.add(top.mul(c0, d0), top.mul(c1, d1)) != 0 {
                            continue;
                        }
                        let (a, b) = expansion_mats_parity(&g, &h, &c, &d);
                        let ca = LinearCode::from_mat(&t, Level::Top, &a).unwrap();
                        let db = LinearCode::from_mat(&t, Level::Top, &b.kernel()).unwrap();
                        if !is_lcp(&ca, &db).unwrap().is_complementary {
                            found = Some((c, d));
                            break 'search;
                        }
                    }
                }
            }
        }
        let (c, d) = found.expect("a counterexample exists");
        assert!(matches!(parity_expansion(&t, &g, &h, &c, &d), Err(Error::Precondition(_))));
    }

    fn expansion_mats_parity(g: &Mat, h: &Mat, c: &[u32], d: &[u32]) -> (Mat, Mat) {
        let ext = |lead: &[u32], rest: &Mat| {
            let mut rows = vec![std::iter::once(1).chain(lead.iter().copied()).collect::<Vec<_>>()];
            rows.extend(rest.rows().map(|r| std::iter::once(0).chain(r.iter().copied()).collect()));
            Mat::from_rows(g.field(), &rows).unwrap()
        };
        (ext(d, g), ext(c, h))
    }

    #[test]
    fn combine_single_pair() {
        let t = FieldTower::new(2, 1, 1).unwrap();
        let c = LinearCode::from_rows(&t, Level::Mid, 2, &[vec![1, 0]]).unwrap();
        let d = LinearCode::from_rows(&t, Level::Mid, 2, &[vec![1, 1]]).unwrap();
        let r = combine_lcps(&t, &[1], &[(c, d)]).unwrap();
        assert!(r.verdict.is_complementary);
        assert_eq!(r.certificate, Certificate::Alphas(vec![1]));
    }
}
