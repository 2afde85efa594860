//! Complementary-pair verdicts and the trace rank criteria.

use serde::Serialize;

use crate::code::{AdditiveCode, LinearCode};
use crate::error::{Error, Result};
use crate::form::FormSpec;
use crate::linalg::Mat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub is_complementary: bool,
    /// A nonzero common codeword when the codes intersect.
    pub witness: Option<Vec<u32>>,
    /// `(dim C, dim D, ambient dimension)`.
    pub dims: (usize, usize, usize),
}

/// `C ∩ D = {0}` and `dim C + dim D = nm`, all over `F_q`.
pub fn is_acp(c: &AdditiveCode, d: &AdditiveCode) -> Result<PairVerdict> {
    let meet = c.meet(d)?;
    let ambient = c.len() * c.tower().m();
    Ok(PairVerdict {
        is_complementary: meet.is_zero() && c.dim() + d.dim() == ambient,
        witness: meet.nonzero_word(),
        dims: (c.dim(), d.dim(), ambient),
    })
}

/// `C̃ ∩ D̃ = {0}` and `dim C̃ + dim D̃ = n` over the codes' field.
pub fn is_lcp(c: &LinearCode, d: &LinearCode) -> Result<PairVerdict> {
    let meet = c.meet(d)?;
    Ok(PairVerdict {
        is_complementary: meet.is_zero() && c.dim() + d.dim() == c.len(),
        witness: (!meet.is_zero()).then(|| meet.gen().row(0).to_vec()),
        dims: (c.dim(), d.dim(), c.len()),
    })
}

/// `Tr(M (π(G) P)^T)`, an `n x rows(G)` matrix over `F_q`.
pub fn traced_twist(f: &FormSpec, g: &Mat) -> Result<Mat> {
    Ok(f.twist(g)?.trace_entrywise())
}

/// The necessary condition: the `n x (k_1 + k_2)` matrix
/// `[Tr(M (π(G_1) P)^T) | Tr(M (π(G_2) P)^T)]` has full row rank `n`.
/// Returns the verdict and the rank.
pub fn rank_necessary_mats(f: &FormSpec, g1: &Mat, g2: &Mat) -> Result<(bool, usize)> {
    let a = traced_twist(f, g1)?.hstack(&traced_twist(f, g2)?)?;
    let r = a.rank();
    Ok((r == f.len(), r))
}

/// [`rank_necessary_mats`] on the canonical bases of two codes.
pub fn rank_necessary(f: &FormSpec, c: &AdditiveCode, d: &AdditiveCode) -> Result<(bool, usize)> {
    rank_necessary_mats(f, c.basis(), d.basis())
}

/// The same test on parity-check matrices.
pub fn rank_necessary_parity(
    f: &FormSpec,
    c: &AdditiveCode,
    d: &AdditiveCode,
) -> Result<(bool, usize)> {
    rank_necessary_mats(f, &f.parity_check(c)?, &f.parity_check(d)?)
}

/// `Tr(H M (π(G) P)^T)`; entry `(r, l)` equals `B(h_r, g_l)`.
pub fn trace_product(f: &FormSpec, h: &Mat, g: &Mat) -> Result<Mat> {
    Ok(h.matmul(&f.twist(g)?)?.trace_entrywise())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankIff {
    /// `Tr(H_2 M (π(G_1) P)^T)`.
    pub first: Mat,
    /// `Tr(H_1 M (π(G_2) P)^T)`.
    pub second: Mat,
    pub ranks: (usize, usize),
    /// `(dim C, dim D)` over `F_q`.
    pub targets: (usize, usize),
    pub holds: bool,
}

/// The iff criterion from explicit matrices: `G_i` spans code `i` over
/// `F_q` and `H_i` is a parity-check matrix for it. The standing hypothesis
/// `dim C + dim D = nm` is enforced.
pub fn rank_iff_mats(f: &FormSpec, g1: &Mat, h1: &Mat, g2: &Mat, h2: &Mat) -> Result<RankIff> {
    let tower = f.tower();
    let c = AdditiveCode::span_fq(tower, g1)?;
    let d = AdditiveCode::span_fq(tower, g2)?;
    let nm = f.len() * tower.m();
    if c.dim() + d.dim() != nm {
        return Err(Error::DimensionHypothesis {
            sum: c.dim() + d.dim(),
            expected: nm,
        });
    }
    let first = trace_product(f, h2, g1)?;
    let second = trace_product(f, h1, g2)?;
    let ranks = (first.rank(), second.rank());
    let targets = (c.dim(), d.dim());
    Ok(RankIff {
        holds: ranks == targets,
        first,
        second,
        ranks,
        targets,
    })
}

/// The iff criterion on two codes, with canonical bases as generators and
/// left-dual bases as parity checks.
pub fn rank_iff(f: &FormSpec, c: &AdditiveCode, d: &AdditiveCode) -> Result<RankIff> {
    let h1 = f.parity_check(c)?;
    let h2 = f.parity_check(d)?;
    rank_iff_mats(f, c.basis(), &h1, d.basis(), &h2)
}

/// `(C^⊥L, D^⊥L)`.
pub fn dual_pair(
    f: &FormSpec,
    c: &AdditiveCode,
    d: &AdditiveCode,
) -> Result<(AdditiveCode, AdditiveCode)> {
    Ok((f.left_dual(c)?, f.left_dual(d)?))
}

/// `(C^⊥R, D^⊥R)`.
pub fn right_dual_pair(
    f: &FormSpec,
    c: &AdditiveCode,
    d: &AdditiveCode,
) -> Result<(AdditiveCode, AdditiveCode)> {
    Ok((f.right_dual(c)?, f.right_dual(d)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{FieldTower, Level};

    fn f4() -> FieldTower {
        FieldTower::new(2, 1, 2).unwrap()
    }

    fn code(t: &FieldTower, rows: &[Vec<u32>]) -> AdditiveCode {
        AdditiveCode::span_fq(t, &Mat::from_rows(t.top(), rows).unwrap()).unwrap()
    }

    #[test]
    fn full_and_zero() {
        let t = f4();
        let full = AdditiveCode::full(&t, 3);
        let zero = AdditiveCode::zero(&t, 3);
        let v = is_acp(&full, &zero).unwrap();
        assert!(v.is_complementary);
        assert_eq!(v.dims, (6, 0, 6));
        let f = FormSpec::identity(&t, 3);
        assert!(rank_iff(&f, &full, &zero).unwrap().holds);
        let (a, b) = dual_pair(&f, &full, &zero).unwrap();
        assert!(a.is_zero() && b.is_full());
        assert_eq!(rank_necessary(&f, &zero, &zero).unwrap(), (false, 0));
    }

    #[test]
    fn counterexample_is_not_complementary() {
        let t = f4();
        let c = code(&t, &[vec![1, 1, 0], vec![2, 2, 0], vec![3, 0, 3]]);
        let d = code(&t, &[vec![1, 1, 1], vec![2, 2, 2], vec![2, 2, 0]]);
        let v = is_acp(&c, &d).unwrap();
        assert!(!v.is_complementary);
        let w = v.witness.unwrap();
        assert!(c.member(&w).unwrap() && d.member(&w).unwrap());
        let f = FormSpec::identity(&t, 3);
        assert_eq!(rank_necessary(&f, &c, &d).unwrap(), (true, 3));
        assert!(!rank_iff(&f, &c, &d).unwrap().holds);
    }

    #[test]
    fn hypothesis_is_enforced() {
        let t = f4();
        let c = code(&t, &[vec![1, 1, 0]]);
        let f = FormSpec::identity(&t, 3);
        assert!(matches!(
            rank_iff(&f, &c, &c),
            Err(Error::DimensionHypothesis { sum: 2, expected: 6 })
        ));
    }

    #[test]
    fn lcp_self_pair_fails() {
        let t = f4();
        let c = LinearCode::from_rows(&t, Level::Top, 2, &[vec![1, 2]]).unwrap();
        let v = is_lcp(&c, &c).unwrap();
        assert!(!v.is_complementary);
        assert!(v.witness.is_some());
    }
}
