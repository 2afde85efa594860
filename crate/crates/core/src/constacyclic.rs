//! Constacyclic `F_q`-linear codes: cyclotomic cosets, the factorization of
//! `X^n - λ`, the component decomposition of `F_{q^m}[X]/(X^n - λ)` and the
//! complementary pair count.
//!
//! A vector `(v_0, ..., v_(n-1))` is identified with `Σ v_j X^j` modulo
//! `X^n - λ`, so the `λ`-shift is multiplication by `X`. For each monic
//! irreducible factor `p_i` of `X^n - λ` over `F_q` the component
//! `F_{q^m}[X]/(p_i)` is an `m`-dimensional space over
//! `K_i = F_q[X]/(p_i)`, with coordinates taken along `1, α, ..., α^(m-1)`.

use num_bigint::BigUint;
use serde::Serialize;

use crate::acp::PairVerdict;
use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::gf::{moduli, Field, FieldTower, GaloisField, Level, MAX_INTERNAL_ORDER};
use crate::linalg::Mat;
use crate::poly::{raw, Poly};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least `L >= 1` with `b^L ≡ 1 (mod n)`; requires `gcd(b, n) = 1`.
fn order_mod(b: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let (mut x, mut l) = (b % n, 1);
    while x != 1 {
        x = x * b % n;
        l += 1;
    }
    l
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetPartition {
    pub modulus: u64,
    pub base: u64,
    /// Orbits of `Z_N` under multiplication by `base`, each sorted, ordered
    /// by least element.
    pub cosets: Vec<Vec<u64>>,
}

impl CosetPartition {
    /// The cosets meeting `residues`, in partition order.
    pub fn restrict(&self, residues: &[u64]) -> Vec<Vec<u64>> {
        self.cosets
            .iter()
            .filter(|c| c.iter().any(|u| residues.contains(u)))
            .cloned()
            .collect()
    }

    pub fn coset_of(&self, u: u64) -> Option<&[u64]> {
        let u = u % self.modulus;
        self.cosets.iter().find(|c| c.contains(&u)).map(Vec::as_slice)
    }
}

/// The orbit partition of `Z_N` under `x ↦ bx`.
pub fn cyclotomic_cosets(modulus: u64, base: u64) -> Result<CosetPartition> {
    if modulus == 0 {
        return Err(Error::OutOfRange {
            what: "modulus",
            detail: "N must be positive".into(),
        });
    }
    if gcd(base, modulus) != 1 {
        return Err(Error::NotCoprime { a: base, b: modulus });
    }
    let mut seen = vec![false; modulus as usize];
    let mut cosets = Vec::new();
    for i in 0..modulus {
        if seen[i as usize] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = i;
        while !seen[x as usize] {
            seen[x as usize] = true;
            c.push(x);
            x = x * base % modulus;
        }
        c.sort_unstable();
        cosets.push(c);
    }
    Ok(CosetPartition {
        modulus,
        base,
        cosets,
    })
}

/// How a `q`-coset relates to the `q^m`-cosets it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CosetKind {
    /// The `q`-coset is itself a `q^m`-coset.
    Shared,
    /// The `q`-coset splits into `m` `q^m`-cosets of equal size.
    Merged,
    /// The `q`-coset splits into `g` cosets with `1 < g < m`.
    Partial(usize),
}

fn kind_of(degree: usize, m: usize) -> CosetKind {
    let g = gcd(degree as u64, m as u64) as usize;
    match g {
        1 => CosetKind::Shared,
        _ if g == m => CosetKind::Merged,
        _ => CosetKind::Partial(g),
    }
}

#[derive(Debug, Clone)]
pub struct Factorization {
    /// Multiplicative order of `λ`.
    pub t: u64,
    /// `N = nt`.
    pub big_n: u64,
    /// The field holding the roots.
    pub splitting: Field,
    /// Primitive `N`-th root with `ζ^n = λ`, as a code in `splitting`.
    pub zeta: u32,
    /// One coset per factor, aligned with `factors`.
    pub cosets: Vec<Vec<u64>>,
    /// Monic irreducible factors in canonical order.
    pub factors: Vec<Poly>,
}

fn check_ring_args(tower: &FieldTower, n: usize, lambda: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "length",
            detail: "n must be positive".into(),
        });
    }
    if gcd(n as u64, tower.p() as u64) != 1 {
        return Err(Error::NotCoprime {
            a: n as u64,
            b: tower.p() as u64,
        });
    }
    if lambda == 0 {
        return Err(Error::Precondition("lambda must be nonzero".into()));
    }
    if !tower.mid().contains(lambda) {
        return Err(Error::InvalidElement(lambda));
    }
    tower.mid().multiplicative_order(lambda)
}

/// The residues `1 + tj mod N` for `0 <= j < n`, whose powers of `ζ` are
/// the roots of `X^n - λ`.
fn root_residues(n: usize, t: u64) -> Vec<u64> {
    let big_n = n as u64 * t;
    (0..n as u64).map(|j| (1 + t * j) % big_n).collect()
}

/// Cosets ordered by the multiplicative order of their roots, then by least
/// element.
fn canonical_order(cosets: &mut [Vec<u64>], big_n: u64) {
    cosets.sort_by_key(|c| (big_n / gcd(c[0], big_n), c[0]));
}

fn splitting_field(tower: &FieldTower, big_n: u64) -> Result<Field> {
    let top = tower.top();
    let l = order_mod(top.order() as u64, big_n) as usize;
    if l == 1 {
        return Ok(top.clone());
    }
    let order = (top.order() as u64).checked_pow(l as u32);
    if order.is_none_or(|o| o > MAX_INTERNAL_ORDER) {
        return Err(Error::FieldTooLarge(order.unwrap_or(u64::MAX)));
    }
    GaloisField::extension(top, moduli::least_irreducible(top, l)?)
}

fn find_zeta(s: &GaloisField, big_n: u64, n: usize, lambda: u32) -> Result<u32> {
    let g = s.primitive();
    let step = (s.order() as u64 - 1) / big_n;
    (1..=big_n)
        .filter(|&u| gcd(u, big_n) == 1)
        .map(|u| s.pow(g, step * u))
        .find(|&z| s.pow(z, n as u64) == lambda)
        .ok_or_else(|| Error::Exhausted("N-th root of unity with ζ^n = λ".into()))
}

/// Factor `X^n - λ` over the field at `level` (mid or top) into monic
/// irreducibles, one per cyclotomic coset of the root residues.
pub fn factor_xn_minus_lambda(
    tower: &FieldTower,
    n: usize,
    lambda: u32,
    level: Level,
) -> Result<Factorization> {
    let t = check_ring_args(tower, n, lambda)?;
    let target = match level {
        Level::Mid | Level::Top => tower.field(level).clone(),
        Level::Prime => {
            return Err(Error::LevelMismatch {
                expected: "mid or top".into(),
                got: level.to_string(),
            })
        }
    };
    let big_n = n as u64 * t;
    let s = splitting_field(tower, big_n)?;
    let zeta = find_zeta(&s, big_n, n, lambda)?;
    let residues = root_residues(n, t);
    let mut cosets = cyclotomic_cosets(big_n, target.order() as u64)?.restrict(&residues);
    canonical_order(&mut cosets, big_n);
    let mut factors = Vec::with_capacity(cosets.len());
    for c in &cosets {
        let mut f = vec![1u32];
        for &u in c {
            let root = s.pow(zeta, u);
            f = raw::mul(&s, &f, &[s.neg(root), 1]);
        }
        if let Some(&bad) = f.iter().find(|&&x| !target.contains(x)) {
            return Err(Error::Precondition(format!(
                "factor coefficient {bad} escapes {target}"
            )));
        }
        factors.push(Poly::new(&target, f)?);
    }
    let product = factors
        .iter()
        .try_fold(Poly::one(&target), |acc, f| acc.mul(f))?;
    if product != Poly::x_pow_minus(&target, n, lambda) {
        return Err(Error::Precondition("factor product differs from X^n - λ".into()));
    }
    Ok(Factorization {
        t,
        big_n,
        splitting: s,
        zeta,
        cosets,
        factors,
    })
}

#[derive(Debug, Clone)]
pub struct Component {
    /// The `q`-coset of root residues.
    pub coset: Vec<u64>,
    pub degree: usize,
    /// `p_i` over `F_q`.
    pub factor: Poly,
    /// `K_i = F_q[X]/(p_i)`.
    pub field: Field,
    pub kind: CosetKind,
    /// Indices into the `F_{q^m}` factorization of the factors dividing `p_i`.
    pub top_factors: Vec<usize>,
    /// CRT idempotent `e_i` over `F_q`: `1 mod p_i`, `0 mod p_j` for `j ≠ i`.
    pub idempotent: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct RingDecomposition {
    tower: FieldTower,
    n: usize,
    lambda: u32,
    over_q: Factorization,
    over_qm: Factorization,
    components: Vec<Component>,
    /// `X^n - λ` over the top field.
    modulus_top: Vec<u32>,
    /// Each `p_i` with coefficients read in the top field.
    factors_top: Vec<Vec<u32>>,
    idempotents_top: Vec<Vec<u32>>,
}

/// Both factorizations of `X^n - λ`, the coset classification and the
/// component maps.
pub fn decompose_ring(tower: &FieldTower, n: usize, lambda: u32) -> Result<RingDecomposition> {
    let over_q = factor_xn_minus_lambda(tower, n, lambda, Level::Mid)?;
    let over_qm = factor_xn_minus_lambda(tower, n, lambda, Level::Top)?;
    let mid = tower.mid();
    let big = Poly::x_pow_minus(mid, n, lambda);
    let mut components = Vec::with_capacity(over_q.factors.len());
    for (coset, p) in over_q.cosets.iter().zip(&over_q.factors) {
        let degree = coset.len();
        let field = GaloisField::extension(mid, p.coeffs().to_vec())?;
        let top_factors = over_qm
            .cosets
            .iter()
            .enumerate()
            .filter(|(_, c)| coset.contains(&c[0]))
            .map(|(j, _)| j)
            .collect();
        let (cofactor, r) = raw::divmod(mid, big.coeffs(), p.coeffs()).expect("nonzero divisor");
        debug_assert!(r.is_empty());
        let inv = raw::inverse_mod(mid, &raw::rem(mid, &cofactor, p.coeffs()), p.coeffs())
            .ok_or_else(|| Error::Precondition("X^n - λ has a repeated factor".into()))?;
        let mut e = raw::mulmod(mid, &cofactor, &inv, big.coeffs());
        e.resize(n, 0);
        components.push(Component {
            coset: coset.clone(),
            degree,
            factor: p.clone(),
            field,
            kind: kind_of(degree, tower.m()),
            top_factors,
            idempotent: e,
        });
    }
    let factors_top = components.iter().map(|c| c.factor.coeffs().to_vec()).collect();
    let idempotents_top = components.iter().map(|c| c.idempotent.clone()).collect();
    Ok(RingDecomposition {
        tower: tower.clone(),
        n,
        lambda,
        over_q,
        over_qm,
        components,
        modulus_top: big.coeffs().to_vec(),
        factors_top,
        idempotents_top,
    })
}

impl RingDecomposition {
    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn over_q(&self) -> &Factorization {
        &self.over_q
    }

    pub fn over_qm(&self) -> &Factorization {
        &self.over_qm
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.degree).collect()
    }

    /// `v ↦ v(X) mod p_i` in `K_i`-coordinates.
    pub fn project(&self, i: usize, v: &[u32]) -> Vec<u32> {
        let top = self.tower.top();
        let c = &self.components[i];
        let mut r = raw::rem(top, v, &self.factors_top[i]);
        r.resize(c.degree, 0);
        let digits: Vec<Vec<u32>> = r.iter().map(|&x| top.digits(x)).collect();
        (0..self.tower.m())
            .map(|j| {
                let col: Vec<u32> = digits.iter().map(|d| d[j]).collect();
                c.field.from_digits(&col)
            })
            .collect()
    }

    /// The inverse of [`project`](Self::project) on component `i`, landing
    /// in the `i`-th summand of `F_{q^m}^n`.
    pub fn inject(&self, i: usize, x: &[u32]) -> Vec<u32> {
        let top = self.tower.top();
        let c = &self.components[i];
        let digits: Vec<Vec<u32>> = x.iter().map(|&e| c.field.digits(e)).collect();
        let poly: Vec<u32> = (0..c.degree)
            .map(|k| {
                let coords: Vec<u32> = digits.iter().map(|d| d[k]).collect();
                top.from_digits(&coords)
            })
            .collect();
        let mut out = raw::mulmod(top, &raw::trimmed(poly), &self.idempotents_top[i], &self.modulus_top);
        out.resize(self.n, 0);
        out
    }

    /// A `K_i`-basis of component `i` inside `F_{q^m}^n`, one vector per row.
    pub fn component_basis(&self, i: usize) -> Mat {
        let m = self.tower.m();
        let rows: Vec<Vec<u32>> = (0..m)
            .map(|j| {
                let mut e = vec![0; m];
                e[j] = 1;
                self.inject(i, &e)
            })
            .collect();
        Mat::from_rows_width(self.tower.top(), self.n, &rows).unwrap()
    }

    /// `C = ⊕ C_i` from `K_i`-subspaces given by generator rows.
    pub fn reassemble(&self, parts: &[Mat]) -> Result<AdditiveCode> {
        if parts.len() != self.components.len() {
            return Err(Error::shape(format!(
                "{} parts for {} components",
                parts.len(),
                self.components.len()
            )));
        }
        let mut rows = Vec::new();
        for (i, (part, c)) in parts.iter().zip(&self.components).enumerate() {
            if part.field() != &c.field || part.ncols() != self.tower.m() {
                return Err(Error::shape(format!("component {i} has the wrong field or width")));
            }
            let x = c.field.generator();
            for r in part.rows() {
                let mut cur = r.to_vec();
                for _ in 0..c.degree {
                    rows.push(self.inject(i, &cur));
                    cur = cur.iter().map(|&e| c.field.mul(e, x)).collect();
                }
            }
        }
        AdditiveCode::span_fq(&self.tower, &Mat::from_rows_width(self.tower.top(), self.n, &rows)?)
    }
}

/// `(λ c_(n-1), c_0, ..., c_(n-2))`.
pub fn shift(tower: &FieldTower, v: &[u32], lambda: u32) -> Vec<u32> {
    let n = v.len();
    let mut out = Vec::with_capacity(n);
    if n > 0 {
        out.push(tower.top().mul(lambda, v[n - 1]));
        out.extend_from_slice(&v[..n - 1]);
    }
    out
}

/// True iff the `λ`-shift of every basis row lies in `C`.
pub fn is_constacyclic(c: &AdditiveCode, lambda: u32) -> Result<bool> {
    let tower = c.tower();
    if lambda == 0 || !tower.mid().contains(lambda) {
        return Err(Error::InvalidElement(lambda));
    }
    for r in c.basis().rows() {
        if !c.member(&shift(tower, r, lambda))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstacyclicCode {
    code: AdditiveCode,
    lambda: u32,
}

impl ConstacyclicCode {
    pub fn new(code: AdditiveCode, lambda: u32) -> Result<Self> {
        if !is_constacyclic(&code, lambda)? {
            return Err(Error::NotConstacyclic(lambda.to_string()));
        }
        Ok(ConstacyclicCode { code, lambda })
    }

    /// The smallest `λ`-constacyclic code containing the rows of `rows`.
    pub fn closure(tower: &FieldTower, rows: &Mat, lambda: u32) -> Result<Self> {
        let mut code = AdditiveCode::span_fq(tower, rows)?;
        loop {
            let shifted: Vec<Vec<u32>> = code.basis().rows().map(|r| shift(tower, r, lambda)).collect();
            let s = Mat::from_rows_width(tower.top(), code.len(), &shifted)?;
            let next = code.join(&AdditiveCode::span_fq(tower, &s)?)?;
            if next.dim() == code.dim() {
                return Self::new(code, lambda);
            }
            code = next;
        }
    }

    pub fn code(&self) -> &AdditiveCode {
        &self.code
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }
}

fn check_decomposition(c: &ConstacyclicCode, dec: &RingDecomposition) -> Result<()> {
    if c.lambda != dec.lambda {
        return Err(Error::Precondition(format!(
            "code is {}-constacyclic but the decomposition is for λ = {}",
            c.lambda, dec.lambda
        )));
    }
    if *c.code.tower() != dec.tower || c.code.len() != dec.n {
        return Err(Error::shape("code and decomposition differ in tower or length"));
    }
    Ok(())
}

/// The projections `C_i`, each a reduced generator matrix over `K_i`.
pub fn components(c: &ConstacyclicCode, dec: &RingDecomposition) -> Result<Vec<Mat>> {
    check_decomposition(c, dec)?;
    let m = dec.tower.m();
    Ok(dec
        .components
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            let rows: Vec<Vec<u32>> = c.code.basis().rows().map(|r| dec.project(i, r)).collect();
            Mat::from_rows_width(&comp.field, m, &rows).unwrap().rref().mat
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub verdict: PairVerdict,
    /// First component whose pair is not complementary.
    pub failing: Option<usize>,
    /// `(dim C_i, dim D_i)` over `K_i`.
    pub component_dims: Vec<(usize, usize)>,
}

/// The componentwise criterion: `C_i ⊕ D_i = K_i^m` for every `i`.
pub fn is_acp_constacyclic(
    c: &ConstacyclicCode,
    d: &ConstacyclicCode,
    dec: &RingDecomposition,
) -> Result<ComponentVerdict> {
    if c.lambda != d.lambda {
        return Err(Error::Precondition("codes have different λ".into()));
    }
    let (cs, ds) = (components(c, dec)?, components(d, dec)?);
    let m = dec.tower.m();
    let mut failing = None;
    let mut witness = None;
    let mut dims = Vec::with_capacity(cs.len());
    for (i, (a, b)) in cs.iter().zip(&ds).enumerate() {
        dims.push((a.nrows(), b.nrows()));
        let stack = a.vstack(b)?;
        let rank = stack.rank();
        if failing.is_none() && (rank != m || stack.nrows() != m) {
            failing = Some(i);
            if rank < stack.nrows() {
                let y = stack.transpose().kernel();
                let coeffs = &y.row(0)[..a.nrows()];
                let field = a.field();
                let common: Vec<u32> = (0..m)
                    .map(|j| {
                        coeffs
                            .iter()
                            .zip(a.rows())
                            .fold(0, |acc, (&x, r)| field.add(acc, field.mul(x, r[j])))
                    })
                    .collect();
                if common.iter().any(|&x| x != 0) {
                    witness = Some(dec.inject(i, &common));
                }
            }
        }
    }
    let fq_dim = |pick: fn(&(usize, usize)) -> usize| -> usize {
        dims.iter().zip(&dec.components).map(|(x, comp)| pick(x) * comp.degree).sum()
    };
    Ok(ComponentVerdict {
        verdict: PairVerdict {
            is_complementary: failing.is_none(),
            witness,
            dims: (fq_dim(|x| x.0), fq_dim(|x| x.1), dec.n * m),
        },
        failing,
        component_dims: dims,
    })
}

/// `[m choose v]_Q`.
pub fn gaussian_binomial(m: usize, v: usize, q: u64) -> Result<BigUint> {
    if v > m {
        return Err(Error::OutOfRange {
            what: "v",
            detail: format!("{v} > {m}"),
        });
    }
    if q < 2 {
        return Err(Error::OutOfRange {
            what: "Q",
            detail: format!("{q} < 2"),
        });
    }
    Ok(gaussian_big(m, v, &BigUint::from(q)))
}

fn gaussian_big(m: usize, v: usize, q: &BigUint) -> BigUint {
    let (mut num, mut den) = (BigUint::from(1u32), BigUint::from(1u32));
    for j in 0..v {
        num *= q.pow(m as u32) - q.pow(j as u32);
        den *= q.pow(v as u32) - q.pow(j as u32);
    }
    num / den
}

/// Complementary subspace pairs of an `m`-dimensional space over `F_Q`:
/// `Σ_v [m choose v]_Q Q^(v(m-v))`.
pub fn complementary_pairs(m: usize, q: &BigUint) -> BigUint {
    (0..=m)
        .map(|v| gaussian_big(m, v, q) * q.pow((v * (m - v)) as u32))
        .sum()
}

/// The degrees `d_i` of the irreducible factors of `X^n - λ` over `F_q`,
/// from the cyclotomic cosets alone.
pub fn factor_degrees(tower: &FieldTower, n: usize, lambda: u32) -> Result<Vec<usize>> {
    let t = check_ring_args(tower, n, lambda)?;
    let big_n = n as u64 * t;
    let mut cosets = cyclotomic_cosets(big_n, tower.q() as u64)?.restrict(&root_residues(n, t));
    canonical_order(&mut cosets, big_n);
    Ok(cosets.iter().map(Vec::len).collect())
}

/// Number of `λ`-constacyclic complementary pairs: the product over every
/// component of [`complementary_pairs`]`(m, q^(d_i))`.
pub fn count_acp(tower: &FieldTower, n: usize, lambda: u32) -> Result<BigUint> {
    let q = BigUint::from(tower.q());
    Ok(factor_degrees(tower, n, lambda)?
        .into_iter()
        .map(|d| complementary_pairs(tower.m(), &q.pow(d as u32)))
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_mod_ten() {
        let p = cyclotomic_cosets(10, 3).unwrap();
        assert_eq!(
            p.cosets,
            vec![vec![0], vec![1, 3, 7, 9], vec![2, 4, 6, 8], vec![5]]
        );
        assert_eq!(cyclotomic_cosets(5, 1).unwrap().cosets.len(), 5);
        assert!(matches!(cyclotomic_cosets(10, 5), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn factor_x3_minus_1_over_f2() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let f = factor_xn_minus_lambda(&t, 3, 1, Level::Mid).unwrap();
        let coeffs: Vec<&[u32]> = f.factors.iter().map(Poly::coeffs).collect();
        assert_eq!(coeffs, vec![&[1, 1][..], &[1, 1, 1][..]]);
        let g = factor_xn_minus_lambda(&t, 3, 1, Level::Top).unwrap();
        assert_eq!(g.factors.len(), 3);
    }

    #[test]
    fn factor_x10_minus_1_over_f3() {
        let t = FieldTower::new(3, 1, 2).unwrap();
        let f = factor_xn_minus_lambda(&t, 10, 1, Level::Mid).unwrap();
        let coeffs: Vec<&[u32]> = f.factors.iter().map(Poly::coeffs).collect();
        assert_eq!(
            coeffs,
            vec![&[2, 1][..], &[1, 1], &[1, 1, 1, 1, 1], &[1, 2, 1, 2, 1]]
        );
        let d = decompose_ring(&t, 10, 1).unwrap();
        assert_eq!(d.degrees(), vec![1, 1, 4, 4]);
        let kinds: Vec<CosetKind> = d.components().iter().map(|c| c.kind).collect();
        assert_eq!(
            kinds,
            vec![CosetKind::Shared, CosetKind::Shared, CosetKind::Merged, CosetKind::Merged]
        );
        assert_eq!(count_acp(&t, 10, 1).unwrap(), BigUint::from(8_651_976_256u64));
    }

    #[test]
    fn decomposition_small() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let d = decompose_ring(&t, 3, 1).unwrap();
        let kinds: Vec<CosetKind> = d.components().iter().map(|c| c.kind).collect();
        assert_eq!(kinds, vec![CosetKind::Shared, CosetKind::Merged]);
        assert_eq!(d.components()[1].top_factors.len(), 2);
        let v = [1, 2, 3];
        let sum = (0..2).fold(vec![0; 3], |acc, i| {
            let w = d.inject(i, &d.project(i, &v));
            acc.iter().zip(&w).map(|(&a, &b)| t.top().add(a, b)).collect()
        });
        assert_eq!(sum, v);
        let one = decompose_ring(&t, 1, 1).unwrap();
        assert_eq!(one.components().len(), 1);
        assert_eq!(one.components()[0].kind, CosetKind::Shared);
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_binomial(2, 0, 2).unwrap(), BigUint::from(1u32));
        assert_eq!(gaussian_binomial(2, 1, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(gaussian_binomial(2, 1, 3).unwrap(), BigUint::from(4u32));
        assert!(gaussian_binomial(2, 3, 2).is_err());
    }

    #[test]
    fn small_counts() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        assert_eq!(count_acp(&t, 1, 1).unwrap(), BigUint::from(8u32));
        assert_eq!(count_acp(&t, 3, 1).unwrap(), BigUint::from(176u32));
        assert!(count_acp(&t, 2, 1).is_err());
        assert!(count_acp(&t, 0, 1).is_err());
    }

    #[test]
    fn shift_closure() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let r = Mat::from_rows(t.top(), &[vec![1, 2, 0]]).unwrap();
        let c = ConstacyclicCode::closure(&t, &r, 1).unwrap();
        assert!(is_constacyclic(c.code(), 1).unwrap());
        let line = AdditiveCode::span_fq(&t, &r).unwrap();
        assert!(!is_constacyclic(&line, 1).unwrap());
        assert!(is_constacyclic(&AdditiveCode::zero(&t, 3), 1).unwrap());
        assert!(is_constacyclic(&AdditiveCode::full(&t, 3), 1).unwrap());
    }
}
