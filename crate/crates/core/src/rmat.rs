//! Vector-representation R-matrices for SL_q(N) and Sp_q(2n).
//!
//! Index convention: `R^{in}_{jm}` maps `e_j ⊗ e_m` to the coefficient of
//! `e_i ⊗ e_n`. As a dense `N² × N²` matrix the row index is `i*N + n` and
//! the column index `j*N + m`. All indices are zero based in code.

use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::{FieldConfig, Scalar, Series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RMatrixError {
    #[error("unsupported configuration: {0}")]
    UnsupportedConfig(String),
    #[error("braid operator is not diagonalizable over Q(p): {0}")]
    SpectralFailure(String),
}

/// R-matrix data of the fundamental corepresentation.
#[derive(Clone, Debug)]
pub struct RData {
    config: FieldConfig,
    r: Matrix,
    r_inv: Matrix,
    z: Scalar,
}

/// One nonzero entry for JSON dumps.
#[derive(Serialize)]
pub struct REntry {
    pub i: usize,
    pub n: usize,
    pub j: usize,
    pub m: usize,
    pub value: String,
}

/// A braid-operator eigenvalue with its spectral idempotent.
#[derive(Clone, Debug)]
pub struct Spectral {
    pub eigenvalue: Scalar,
    pub projector: Matrix,
    pub rank: usize,
}

/// `rho_i` exponents of the C series: `(n, n-1, ..., 1, -1, ..., -n)`.
pub fn sp_rho(n_mat: usize, i: usize) -> i32 {
    let half = (n_mat / 2) as i32;
    if i < n_mat / 2 {
        half - i as i32
    } else {
        half - i as i32 - 1
    }
}

/// `eps_i`: `+1` on the first half, `-1` on the second.
pub fn sp_eps(n_mat: usize, i: usize) -> i32 {
    if i < n_mat / 2 {
        1
    } else {
        -1
    }
}

/// `i' = N - 1 - i` in zero-based indexing.
pub fn sp_prime(n_mat: usize, i: usize) -> usize {
    n_mat - 1 - i
}

fn entries_a(cfg: &FieldConfig) -> Matrix {
    let n = cfg.n;
    let q = cfg.q();
    let diff = &q - &q.pow(-1);
    let mut r = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for k in 0..n {
            let row = i * n + k;
            if i == k {
                r.set(row, row, q.clone());
            } else {
                r.set(row, row, Scalar::one());
            }
            if i > k {
                // R^{ik}_{ki}
                r.set(row, k * n + i, diff.clone());
            }
        }
    }
    r
}

fn entries_c(cfg: &FieldConfig) -> Matrix {
    let n = cfg.n;
    let q = cfg.q();
    let diff = &q - &q.pow(-1);
    let mut r = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for k in 0..n {
            let row = i * n + k;
            let diag = if i == k {
                q.clone()
            } else if k == sp_prime(n, i) {
                q.pow(-1)
            } else {
                Scalar::one()
            };
            r.set(row, row, diag);
        }
    }
    for i in 0..n {
        for j in 0..i {
            // (q - q^-1) E_ij ⊗ E_ji
            let row = i * n + j;
            let col = j * n + i;
            let v = r.get(row, col) + &diff;
            r.set(row, col, v);
            // -(q - q^-1) q^(rho_i - rho_j) eps_i eps_j E_ij ⊗ E_i'j'
            let row = i * n + sp_prime(n, i);
            let col = j * n + sp_prime(n, j);
            let c = &(&diff * &q.pow(sp_rho(n, i) - sp_rho(n, j)))
                * &Scalar::from_i64((sp_eps(n, i) * sp_eps(n, j)) as i64);
            let v = r.get(row, col) - &c;
            r.set(row, col, v);
        }
    }
    r
}

impl RData {
    pub fn build(config: &FieldConfig) -> Result<RData, RMatrixError> {
        let r = match config.series {
            Series::A if config.n >= 2 => entries_a(config),
            Series::C if config.n >= 2 && config.n.is_multiple_of(2) => entries_c(config),
            _ => {
                return Err(RMatrixError::UnsupportedConfig(format!(
                    "{:?} series with N = {}",
                    config.series, config.n
                )))
            }
        };
        RData::from_matrix(config, r)
    }

    /// Wraps an arbitrary (possibly corrupted) matrix; used by the oracles' tests.
    pub fn from_matrix(config: &FieldConfig, r: Matrix) -> Result<RData, RMatrixError> {
        let r_inv = r
            .inverse()
            .ok_or_else(|| RMatrixError::UnsupportedConfig("singular R-matrix".into()))?;
        Ok(RData {
            config: config.clone(),
            r,
            r_inv,
            z: config.z(),
        })
    }

    pub fn config(&self) -> &FieldConfig {
        &self.config
    }

    pub fn n(&self) -> usize {
        self.config.n
    }

    pub fn z(&self) -> &Scalar {
        &self.z
    }

    /// `R^{in}_{jm}`
    pub fn entry(&self, i: usize, n: usize, j: usize, m: usize) -> &Scalar {
        let d = self.n();
        self.r.get(i * d + n, j * d + m)
    }

    /// `(R^{-1})^{in}_{jm}`
    pub fn inv_entry(&self, i: usize, n: usize, j: usize, m: usize) -> &Scalar {
        let d = self.n();
        self.r_inv.get(i * d + n, j * d + m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.r
    }

    pub fn r_inverse(&self) -> &Matrix {
        &self.r_inv
    }

    fn flip(&self) -> Matrix {
        let d = self.n();
        let mut p = Matrix::zeros(d * d, d * d);
        for a in 0..d {
            for b in 0..d {
                p.set(a * d + b, b * d + a, Scalar::one());
            }
        }
        p
    }

    /// Braid form `R̂ = flip ∘ R`.
    pub fn rhat(&self) -> Matrix {
        self.flip().mul(&self.r)
    }

    /// Checks `R12 R13 R23 = R23 R13 R12` exactly.
    pub fn check_yang_baxter(&self) -> bool {
        let d = self.n();
        let id = Matrix::identity(d);
        let r12 = self.r.kron(&id);
        let r23 = id.kron(&self.r);
        // P23 swaps the last two tensor legs
        let mut p23 = Matrix::zeros(d * d * d, d * d * d);
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    p23.set(a * d * d + b * d + c, a * d * d + c * d + b, Scalar::one());
                }
            }
        }
        let r13 = p23.mul(&r12).mul(&p23);
        let lhs = r12.mul(&r13).mul(&r23);
        let rhs = r23.mul(&r13).mul(&r12);
        lhs == rhs
    }

    /// Braid relation of `R̂` on three tensor legs.
    pub fn check_braid_relation(&self) -> bool {
        let d = self.n();
        let id = Matrix::identity(d);
        let rh = self.rhat();
        let a = rh.kron(&id);
        let b = id.kron(&rh);
        a.mul(&b).mul(&a) == b.mul(&a).mul(&b)
    }

    /// Monic minimal polynomial of `R̂`, coefficients from the constant term up.
    pub fn minimal_polynomial(&self) -> Vec<Scalar> {
        minimal_polynomial(&self.rhat())
    }

    pub fn spectral_projectors(&self) -> Result<Vec<Spectral>, RMatrixError> {
        spectral_projectors(&self.rhat(), self.config.root_exponent as i32 * 4 * self.n() as i32)
    }

    /// Nonzero entries, row-major, for debug dumps.
    pub fn sparse_entries(&self) -> Vec<REntry> {
        let d = self.n();
        let mut out = Vec::new();
        for i in 0..d {
            for n in 0..d {
                for j in 0..d {
                    for m in 0..d {
                        let v = self.entry(i, n, j, m);
                        if !v.is_zero() {
                            out.push(REntry {
                                i: i + 1,
                                n: n + 1,
                                j: j + 1,
                                m: m + 1,
                                value: v.to_string(),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.sparse_entries()).expect("serializable")
    }
}

/// Smallest `k` with `I, A, ..., A^k` dependent; returns the monic relation.
pub fn minimal_polynomial(a: &Matrix) -> Vec<Scalar> {
    let n = a.rows();
    let mut powers = vec![Matrix::identity(n)];
    loop {
        let next = powers.last().unwrap().mul(a);
        powers.push(next);
        let k = powers.len();
        // columns are the flattened powers
        let mut m = Matrix::zeros(n * n, k);
        for (c, pw) in powers.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    m.set(i * n + j, c, pw.get(i, j).clone());
                }
            }
        }
        let ns = m.nullspace();
        if let Some(v) = ns.into_iter().next() {
            let lead = v[k - 1].inv().expect("relation involves the top power");
            return v.iter().map(|x| x * &lead).collect();
        }
    }
}

fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Roots of the form `±p^e`, `|e| <= bound`, with multiplicity ignored.
pub fn monomial_roots(coeffs: &[Scalar], bound: i32) -> Vec<Scalar> {
    let mut roots = Vec::new();
    for e in -bound..=bound {
        for sign in [1i64, -1] {
            let x = &Scalar::from_i64(sign) * &Scalar::p_pow(e);
            if eval_poly(coeffs, &x).is_zero() {
                roots.push(x);
            }
        }
    }
    roots
}

/// Lagrange idempotents `P_i = Π_{j≠i} (A - λ_j)/(λ_i - λ_j)`.
pub fn spectral_projectors(a: &Matrix, bound: i32) -> Result<Vec<Spectral>, RMatrixError> {
    let mp = minimal_polynomial(a);
    let degree = mp.len() - 1;
    let roots = monomial_roots(&mp, bound);
    if roots.len() != degree {
        return Err(RMatrixError::SpectralFailure(format!(
            "minimal polynomial of degree {degree} has {} distinct monomial roots",
            roots.len()
        )));
    }
    let n = a.rows();
    let id = Matrix::identity(n);
    let mut out = Vec::new();
    for (i, li) in roots.iter().enumerate() {
        let mut p = id.clone();
        for (j, lj) in roots.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = (li - lj).inv().expect("distinct eigenvalues");
            p = p.mul(&a.sub(&id.scale(lj))).scale(&denom);
        }
        let rank = p.rank();
        out.push(Spectral {
            eigenvalue: li.clone(),
            projector: p,
            rank,
        });
    }
    Ok(out)
}
