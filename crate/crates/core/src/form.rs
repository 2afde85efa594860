//! The twisted trace forms
//! `B(a, b) = Σ Tr(μ_i a_i π(b_σ(i)))` and `B̃(a, b) = Σ μ_i a_i π(b_σ(i))`
//! with `π(x) = x^(p^j)`, and the left and right duals of additive codes.
//!
//! A parity-check matrix of `C` is, by convention, an `F_q`-basis of the
//! left dual `C^⊥L`. With that convention `v ∈ C` iff `B(h, v) = 0` for
//! every row `h`.

use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::gf::FieldTower;
use crate::linalg::Mat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpec {
    tower: FieldTower,
    mu: Vec<u32>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    pi: usize,
}

impl FormSpec {
    /// `sigma` is zero-based: `sigma[i]` is the image of position `i`.
    pub fn new(tower: &FieldTower, mu: Vec<u32>, sigma: Vec<usize>, pi: usize) -> Result<Self> {
        let n = mu.len();
        if sigma.len() != n {
            return Err(Error::InvalidForm(format!(
                "mu has {n} entries but sigma has {}",
                sigma.len()
            )));
        }
        if let Some(i) = mu.iter().position(|&x| x == 0) {
            return Err(Error::InvalidForm(format!("mu_{} is zero", i + 1)));
        }
        if let Some(&c) = mu.iter().find(|&&c| !tower.top().contains(c)) {
            return Err(Error::InvalidElement(c));
        }
        let mut sigma_inv = vec![usize::MAX; n];
        for (i, &s) in sigma.iter().enumerate() {
            if s >= n || sigma_inv[s] != usize::MAX {
                return Err(Error::InvalidForm(format!(
                    "sigma is not a permutation of 1..{n}"
                )));
            }
            sigma_inv[s] = i;
        }
        if pi >= tower.k() * tower.m() {
            return Err(Error::InvalidForm(format!(
                "pi exponent {pi} out of range 0..{}",
                tower.k() * tower.m()
            )));
        }
        Ok(FormSpec {
            tower: tower.clone(),
            mu,
            sigma,
            sigma_inv,
            pi,
        })
    }

    /// All-ones `μ`, identity `σ`, identity `π`.
    pub fn identity(tower: &FieldTower, n: usize) -> Self {
        Self::new(tower, vec![1; n], (0..n).collect(), 0).unwrap()
    }

    /// The permutation `σ(i) = n + 1 - i`.
    pub fn antidiagonal(n: usize) -> Vec<usize> {
        (0..n).rev().collect()
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn pi_exp(&self) -> usize {
        self.pi
    }

    pub fn is_identity(&self) -> bool {
        self.pi == 0
            && self.mu.iter().all(|&x| x == 1)
            && self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    #[inline]
    pub fn pi(&self, x: u32) -> u32 {
        self.tower.frobenius(self.pi, x)
    }

    #[inline]
    pub fn pi_inv(&self, x: u32) -> u32 {
        let km = self.tower.k() * self.tower.m();
        self.tower.frobenius((km - self.pi) % km, x)
    }

    fn check_vec(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.len() {
            return Err(Error::shape(format!(
                "vector of length {} for a form of length {}",
                v.len(),
                self.len()
            )));
        }
        if let Some(&c) = v.iter().find(|&&c| !self.tower.top().contains(c)) {
            return Err(Error::InvalidElement(c));
        }
        Ok(())
    }

    fn check_code(&self, c: &AdditiveCode) -> Result<()> {
        if *c.tower() != self.tower || c.len() != self.len() {
            return Err(Error::shape(format!(
                "code of length {} does not match the form of length {}",
                c.len(),
                self.len()
            )));
        }
        Ok(())
    }

    /// `B̃(a, b)`, an element of `F_{q^m}`.
    pub fn eval_btilde(&self, a: &[u32], b: &[u32]) -> Result<u32> {
        self.check_vec(a)?;
        self.check_vec(b)?;
        let top = self.tower.top();
        Ok((0..self.len()).fold(0, |acc, i| {
            let t = top.mul(top.mul(self.mu[i], a[i]), self.pi(b[self.sigma[i]]));
            top.add(acc, t)
        }))
    }

    /// `B(a, b) = Tr(B̃(a, b))`, an element of `F_q`.
    pub fn eval_b(&self, a: &[u32], b: &[u32]) -> Result<u32> {
        Ok(self.tower.trace(self.eval_btilde(a, b)?))
    }

    /// `M = diag(μ)`.
    pub fn m_matrix(&self) -> Mat {
        let top = self.tower.top();
        let mut m = Mat::zeros(top, self.len(), self.len());
        for (i, &x) in self.mu.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// `P` with `P_ij = 1` iff `i = σ(j)`.
    pub fn p_matrix(&self) -> Mat {
        let mut p = Mat::zeros(self.tower.top(), self.len(), self.len());
        for j in 0..self.len() {
            p.set(self.sigma[j], j, 1);
        }
        p
    }

    /// `M (π(G) P)^T`, an `n x rows(G)` matrix over `F_{q^m}`.
    pub fn twist(&self, g: &Mat) -> Result<Mat> {
        if g.ncols() != self.len() {
            return Err(Error::shape(format!(
                "{} columns for a form of length {}",
                g.ncols(),
                self.len()
            )));
        }
        let top = self.tower.top();
        let pg = g.map(top, |x| self.pi(x));
        self.m_matrix().matmul(&pg.matmul(&self.p_matrix())?.transpose())
    }

    /// `C^⊥L = {a : B(a, c) = 0 for all c ∈ C}`.
    ///
    /// Writing `a_i = Σ_j a_ij α^j`, the condition for a basis row `g` is
    /// `Σ_(i,j) a_ij Tr(α^j μ_i π(g_σ(i))) = 0`, an `F_q`-linear system.
    pub fn left_dual(&self, c: &AdditiveCode) -> Result<AdditiveCode> {
        self.check_code(c)?;
        let (n, m) = (self.len(), self.tower.m());
        let top = self.tower.top();
        let powers = self.alpha_powers();
        let mut sys = Mat::zeros(self.tower.mid(), c.dim(), n * m);
        for (l, g) in c.basis().rows().enumerate() {
            for i in 0..n {
                let base = top.mul(self.mu[i], self.pi(g[self.sigma[i]]));
                for (j, &aj) in powers.iter().enumerate() {
                    sys.set(l, i * m + j, self.tower.trace(top.mul(aj, base)));
                }
            }
        }
        Ok(AdditiveCode::from_expanded(&self.tower, n, &sys.kernel()))
    }

    /// `C^⊥R = {b : B(c, b) = 0 for all c ∈ C}`.
    ///
    /// The condition is `F_q`-linear in `y = π(b)`; the solution space in
    /// `y` is pulled back entrywise through `π^(-1)`, which maps
    /// `F_q`-subspaces to `F_q`-subspaces.
    pub fn right_dual(&self, c: &AdditiveCode) -> Result<AdditiveCode> {
        self.check_code(c)?;
        let (n, m) = (self.len(), self.tower.m());
        let top = self.tower.top();
        let powers = self.alpha_powers();
        let mut sys = Mat::zeros(self.tower.mid(), c.dim(), n * m);
        for (l, g) in c.basis().rows().enumerate() {
            for k in 0..n {
                let i = self.sigma_inv[k];
                let base = top.mul(self.mu[i], g[i]);
                for (j, &aj) in powers.iter().enumerate() {
                    sys.set(l, k * m + j, self.tower.trace(top.mul(aj, base)));
                }
            }
        }
        let ys = sys.kernel().collapse(top)?;
        let bs = ys.map(top, |x| self.pi_inv(x));
        AdditiveCode::span_fq(&self.tower, &bs)
    }

    /// An `F_q`-basis of `C^⊥L`, one codeword per row.
    pub fn parity_check(&self, c: &AdditiveCode) -> Result<Mat> {
        Ok(self.left_dual(c)?.basis().clone())
    }

    fn alpha_powers(&self) -> Vec<u32> {
        let top = self.tower.top();
        let alpha = self.tower.alpha();
        let mut out = Vec::with_capacity(self.tower.m());
        let mut x = 1;
        for _ in 0..self.tower.m() {
            out.push(x);
            x = top.mul(x, alpha);
        }
        out
    }
}
