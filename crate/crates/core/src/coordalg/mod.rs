//! The coordinate algebra as a free word algebra with Hopf structure on
//! generators, quantum minors and corepresentations.

mod corep;
mod descriptor;
mod registry;
mod word;
mod weight;

use std::sync::Arc;

use thiserror::Error;

use crate::linalg::Matrix;
use crate::rmat::{sp_eps, sp_prime, sp_rho, RData, RMatrixError};
use crate::scalar::{FieldConfig, Scalar, Series};

pub use corep::{Corep, CorepLabel};
pub use descriptor::Descriptor;
pub use registry::Registry;
pub use weight::{weyl_dim, YoungWeight};
pub use word::{CoordElem, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoordError {
    #[error(transparent)]
    RMatrix(#[from] RMatrixError),
    #[error("invalid minor degree {k} for {group}")]
    InvalidDegree { k: usize, group: String },
    #[error("cannot parse corepresentation descriptor near '{token}'")]
    Parse { token: String },
    #[error("compressed entries are not a corepresentation: {0}")]
    NotInvariant(String),
    #[error("{0}")]
    Unsupported(String),
}

/// O(G_q) for a fixed configuration: R-matrix, antipode table and the
/// quadratic exterior relations.
#[derive(Debug)]
pub struct CoordAlgebra {
    config: FieldConfig,
    r: Arc<RData>,
    /// `swap[a][b]` for `a < b`: `y_b y_a = swap[a][b] · y_a y_b`.
    swap: Vec<Vec<Scalar>>,
    antipode: Vec<CoordElem>,
}

impl CoordAlgebra {
    pub fn new(config: &FieldConfig) -> Result<CoordAlgebra, CoordError> {
        let r = Arc::new(RData::build(config)?);
        let n = config.n;
        let swap = match config.series {
            Series::A => exterior_swaps(&r)?,
            Series::C => Vec::new(),
        };
        let mut alg = CoordAlgebra {
            config: config.clone(),
            r,
            swap,
            antipode: Vec::new(),
        };
        alg.antipode = match config.series {
            Series::A => {
                let q = config.q();
                let mut t = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let rows: Vec<usize> = (0..n).filter(|&x| x != j).collect();
                        let cols: Vec<usize> = (0..n).filter(|&x| x != i).collect();
                        let c = (-&q).pow(i as i32 - j as i32);
                        t.push(alg.minor(&rows, &cols)?.scale(&c));
                    }
                }
                t
            }
            Series::C => {
                let q = config.q();
                let mut t = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let c = &Scalar::from_i64((sp_eps(n, i) * sp_eps(n, j)) as i64)
                            * &q.pow(sp_rho(n, j) - sp_rho(n, i));
                        t.push(CoordElem::generator(sp_prime(n, j), sp_prime(n, i), n).scale(&c));
                    }
                }
                t
            }
        };
        Ok(alg)
    }

    pub fn config(&self) -> &FieldConfig {
        &self.config
    }

    pub fn n(&self) -> usize {
        self.config.n
    }

    pub fn rdata(&self) -> &Arc<RData> {
        &self.r
    }

    pub fn generator(&self, i: usize, j: usize) -> CoordElem {
        CoordElem::generator(i, j, self.n())
    }

    pub fn multiply(&self, a: &CoordElem, b: &CoordElem) -> CoordElem {
        a.mul(b)
    }

    pub fn counit(&self, a: &CoordElem) -> Scalar {
        a.counit(self.n())
    }

    /// `S(u^i_j)` for all generators, row-major.
    pub fn antipode_generators(&self) -> &[CoordElem] {
        &self.antipode
    }

    pub fn antipode(&self, a: &CoordElem) -> CoordElem {
        a.anti_substitute(&self.antipode)
    }

    /// Nonzero entries of `R u_1 u_2 - u_2 u_1 R`.
    pub fn frt_relations(&self) -> Vec<CoordElem> {
        let n = self.n();
        let r = &self.r;
        let mut out = Vec::new();
        for (a, b, c, d) in quadruples(n) {
            let mut e = CoordElem::zero();
            for k in 0..n {
                for l in 0..n {
                    let x = r.entry(a, b, k, l);
                    if !x.is_zero() {
                        e = e.add(&self.generator(k, c).mul(&self.generator(l, d)).scale(x));
                    }
                    let y = r.entry(k, l, c, d);
                    if !y.is_zero() {
                        e = e.sub(&self.generator(b, l).mul(&self.generator(a, k)).scale(y));
                    }
                }
            }
            if !e.is_zero() {
                out.push(e);
            }
        }
        out
    }

    /// `Σ_k S(u^i_k) u^k_j - δ_ij` and `Σ_k u^i_k S(u^k_j) - δ_ij`.
    pub fn antipode_relations(&self) -> Vec<CoordElem> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut left = CoordElem::zero();
                let mut right = CoordElem::zero();
                for k in 0..n {
                    left = left.add(&self.antipode[i * n + k].mul(&self.generator(k, j)));
                    right = right.add(&self.generator(i, k).mul(&self.antipode[k * n + j]));
                }
                if i == j {
                    left = left.sub(&CoordElem::unit());
                    right = right.sub(&CoordElem::unit());
                }
                out.push(left);
                out.push(right);
            }
        }
        out
    }

    /// `y_b y_a = c · y_a y_b` for `a < b` (A series).
    pub fn exterior_swap(&self, a: usize, b: usize) -> &Scalar {
        &self.swap[a][b]
    }

    /// Quantum minor `D^I_J`, rows `I` and columns `J` increasing, zero based.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<CoordElem, CoordError> {
        let k = rows.len();
        let n = self.n();
        assert_eq!(k, cols.len());
        if k == 0 || k > n || (self.config.series == Series::C && k > 1) {
            return Err(CoordError::InvalidDegree {
                k,
                group: self.config.label(),
            });
        }
        let mut out = CoordElem::zero();
        for perm in permutations(k) {
            let seq: Vec<usize> = perm.iter().map(|&p| rows[p]).collect();
            let coef = self.reorder_coefficient(&seq);
            let pairs: Vec<(usize, usize)> = seq.iter().zip(cols).map(|(&i, &j)| (i, j)).collect();
            out.add_term(Word::from_pairs(&pairs, n), &coef);
        }
        Ok(out)
    }

    /// Coefficient `c` with `y_{s1}···y_{sk} = c · y_{sorted}` for distinct indices.
    fn reorder_coefficient(&self, seq: &[usize]) -> Scalar {
        let mut s = seq.to_vec();
        let mut c = Scalar::one();
        for end in (1..s.len()).rev() {
            for t in 0..end {
                if s[t] > s[t + 1] {
                    c = &c * &self.swap[s[t + 1]][s[t]];
                    s.swap(t, t + 1);
                }
            }
        }
        c
    }

    /// The k-th exterior power coaction table: `D^I_J` over increasing index sets.
    pub fn exterior_coaction(&self, k: usize) -> Result<Vec<Vec<CoordElem>>, CoordError> {
        if k == 0 || k > self.n() || (self.config.series == Series::C && k > 1) {
            return Err(CoordError::InvalidDegree {
                k,
                group: self.config.label(),
            });
        }
        let sets = subsets(self.n(), k);
        sets.iter()
            .map(|i| sets.iter().map(|j| self.minor(i, j)).collect())
            .collect()
    }

    pub fn minor_corep(&self, k: usize) -> Result<Corep, CoordError> {
        let table = self.exterior_coaction(k)?;
        let dim = table.len();
        Ok(Corep::new(dim, table.into_iter().flatten().collect(), CorepLabel::Minor(k)))
    }

    /// `D_{q,k}`: the principal minor on the first `k` rows and columns.
    pub fn principal_minor(&self, k: usize) -> Result<CoordElem, CoordError> {
        let idx: Vec<usize> = (0..k).collect();
        self.minor(&idx, &idx)
    }

    pub fn contragredient(&self, v: &Corep) -> Corep {
        let m = v.dim();
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                entries.push(self.antipode(v.entry(j, i)));
            }
        }
        Corep::new(m, entries, CorepLabel::Contragredient(Box::new(v.label().clone())))
    }

    pub fn fundamental(&self) -> Corep {
        Corep::fundamental(self.n())
    }
}

/// Coefficients of the quadratic exterior relations, read off the kernel of
/// the antisymmetrizer: the `q`-eigenspace of `R̂` spans the relations.
#[allow(clippy::needless_range_loop)]
fn exterior_swaps(r: &RData) -> Result<Vec<Vec<Scalar>>, CoordError> {
    let n = r.n();
    let q = r.config().q();
    let spectral = r.spectral_projectors()?;
    let p: &Matrix = &spectral
        .iter()
        .find(|s| s.eigenvalue == q)
        .ok_or_else(|| CoordError::Unsupported("no q-eigenspace of the braid operator".into()))?
        .projector;
    let mut swap = vec![vec![Scalar::zero(); n]; n];
    for a in 0..n {
        let col = p.column(a * n + a);
        let only_diag = col.iter().enumerate().all(|(k, v)| v.is_zero() || k == a * n + a);
        if !only_diag {
            return Err(CoordError::Unsupported("y_i^2 is not a relation".into()));
        }
        for b in a + 1..n {
            let col = p.column(a * n + b);
            let (ab, ba) = (a * n + b, b * n + a);
            let support_ok = col.iter().enumerate().all(|(k, v)| v.is_zero() || k == ab || k == ba);
            if !support_ok || col[ba].is_zero() {
                return Err(CoordError::Unsupported("unexpected exterior relation".into()));
            }
            // col[ab] y_a y_b + col[ba] y_b y_a = 0
            swap[a][b] = -&col[ab].div(&col[ba]).expect("nonzero");
        }
    }
    Ok(swap)
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
fn quadruples(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n * n * n * n).map(move |x| (x / (n * n * n), x / (n * n) % n, x / n % n, x % n))
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}
