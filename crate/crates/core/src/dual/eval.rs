//! Evaluation matrices: functionals against all words up to a degree.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::coordalg::Word;
use crate::linalg::{EchelonBasis, Matrix};
use crate::scalar::Scalar;

use super::functional::Functional;
use super::matrep::MatRep;
use super::DualError;

/// Degree-escalation policy for rank and equality certificates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Policy {
    pub start_degree: usize,
    pub stability_window: usize,
    pub d_max: usize,
}

impl Default for Policy {
    fn default() -> Self {
        Policy {
            start_degree: 2,
            stability_window: 2,
            d_max: 6,
        }
    }
}

impl Policy {
    /// Checks exactly the words of degree at most `d`.
    pub fn fixed(d: usize) -> Policy {
        Policy {
            start_degree: d,
            stability_window: 1,
            d_max: d,
        }
    }
}

/// A value together with the word degree up to which it was certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certified<T> {
    pub value: T,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Equality {
    /// No difference on any word up to `degree`.
    Equal { degree: usize },
    /// An exact witness of inequality.
    Different { witness: String, left: Scalar, right: Scalar },
    /// Agreement so far, but the policy ran out before the check was meaningful.
    Undecided { degree: usize },
}

impl Equality {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equality::Equal { .. })
    }
}

/// Precomputed layout for evaluating many functionals at once.
struct Plan {
    n: usize,
    reps: Vec<Arc<MatRep>>,
    rows: Vec<Vec<usize>>,
    terms: Vec<Vec<(usize, usize, usize, Scalar)>>,
}

type State = Vec<Vec<Vec<Scalar>>>;

impl Plan {
    fn new(fs: &[Functional]) -> Plan {
        let mut reps: Vec<Arc<MatRep>> = Vec::new();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut terms = Vec::with_capacity(fs.len());
        for f in fs {
            let ri = match reps.iter().position(|r| Arc::ptr_eq(r, f.rep())) {
                Some(i) => i,
                None => {
                    reps.push(f.rep().clone());
                    rows.push(Vec::new());
                    reps.len() - 1
                }
            };
            let mut t = Vec::new();
            for (&(r, c), v) in f.terms() {
                let slot = match rows[ri].iter().position(|&x| x == r) {
                    Some(s) => s,
                    None => {
                        rows[ri].push(r);
                        rows[ri].len() - 1
                    }
                };
                t.push((ri, slot, c, v.clone()));
            }
            terms.push(t);
        }
        let n = fs.first().map_or(1, |f| f.rep().n());
        Plan { n, reps, rows, terms }
    }

    fn initial(&self) -> State {
        self.reps
            .iter()
            .zip(&self.rows)
            .map(|(rep, rows)| {
                rows.iter()
                    .map(|&r| {
                        let mut v = vec![Scalar::zero(); rep.dim()];
                        v[r] = Scalar::one();
                        v
                    })
                    .collect()
            })
            .collect()
    }

    fn step(&self, state: &State, g: usize) -> State {
        state
            .iter()
            .zip(&self.reps)
            .map(|(vs, rep)| {
                vs.iter()
                    .map(|v| rep.generator_index(g).left_mul(v))
                    .collect()
            })
            .collect()
    }

    fn column(&self, state: &State) -> Vec<Scalar> {
        self.terms
            .iter()
            .map(|t| {
                let mut acc = Scalar::zero();
                for (ri, slot, c, v) in t {
                    acc.add_mul(v, &state[*ri][*slot][*c]);
                }
                acc
            })
            .collect()
    }

    fn dfs(&self, state: &State, left: usize, out: &mut Vec<Vec<Scalar>>) {
        if left == 0 {
            out.push(self.column(state));
            return;
        }
        for g in 0..self.n * self.n {
            let next = self.step(state, g);
            self.dfs(&next, left - 1, out);
        }
    }

    /// Columns for the words of exactly `degree`, in lexicographic order.
    fn columns(&self, degree: usize) -> Vec<Vec<Scalar>> {
        let init = self.initial();
        if degree == 0 {
            return vec![self.column(&init)];
        }
        let parts: Vec<Vec<Vec<Scalar>>> = (0..self.n * self.n)
            .into_par_iter()
            .map(|g| {
                let s = self.step(&init, g);
                let mut out = Vec::new();
                self.dfs(&s, degree - 1, &mut out);
                out
            })
            .collect();
        parts.into_iter().flatten().collect()
    }
}

/// Values of each functional on each word of exactly `degree`, as columns.
pub fn eval_columns(fs: &[Functional], degree: usize) -> Vec<Vec<Scalar>> {
    if fs.is_empty() {
        return Vec::new();
    }
    Plan::new(fs).columns(degree)
}

/// Rows are functionals, columns all words of degree at most `degree`
/// ordered by degree and then lexicographically.
pub fn eval_matrix(fs: &[Functional], degree: usize) -> Matrix {
    let plan = Plan::new(fs);
    let cols: Vec<Vec<Scalar>> = (0..=degree).flat_map(|d| plan.columns(d)).collect();
    let mut m = Matrix::zeros(fs.len(), cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Rank of the evaluation matrix at `degree`, stopping early at full rank.
pub fn rank_at(fs: &[Functional], degree: usize) -> usize {
    subset_ranks(fs, &[(0..fs.len()).collect()], degree)[0]
}

/// Ranks of several row subsets of one evaluation matrix at `degree`.
pub fn subset_ranks(fs: &[Functional], subsets: &[Vec<usize>], degree: usize) -> Vec<usize> {
    if fs.is_empty() {
        return vec![0; subsets.len()];
    }
    let plan = Plan::new(fs);
    let mut bases: Vec<EchelonBasis> = subsets.iter().map(|s| EchelonBasis::new(s.len())).collect();
    for d in 0..=degree {
        if bases.iter().all(EchelonBasis::is_full) {
            break;
        }
        for col in plan.columns(d) {
            for (b, s) in bases.iter_mut().zip(subsets) {
                if !b.is_full() {
                    b.insert(s.iter().map(|&i| col[i].clone()).collect());
                }
            }
        }
    }
    bases.iter().map(EchelonBasis::rank).collect()
}

/// Indices of a maximal subfamily of `fs` that is independent on the
/// words up to `degree`, chosen greedily in order.
pub fn independent_subset(fs: &[Functional], degree: usize) -> Vec<usize> {
    if fs.is_empty() {
        return Vec::new();
    }
    let m = eval_matrix(fs, degree);
    let mut basis = EchelonBasis::new(m.cols());
    (0..fs.len()).filter(|&i| basis.insert(m.row(i).to_vec())).collect()
}

/// Escalates the degree until the rank is constant over
/// `stability_window` consecutive degrees (or full), failing at `d_max`.
pub fn stabilized_rank(fs: &[Functional], policy: &Policy) -> Result<Certified<usize>, DualError> {
    if fs.is_empty() {
        return Ok(Certified { value: 0, degree: 0 });
    }
    let plan = Plan::new(fs);
    let mut basis = EchelonBasis::new(fs.len());
    let mut ranks = Vec::new();
    for d in 0..=policy.d_max {
        if !basis.is_full() {
            for col in plan.columns(d) {
                basis.insert(col);
                if basis.is_full() {
                    break;
                }
            }
        }
        ranks.push(basis.rank());
        if basis.is_full() {
            return Ok(Certified { value: basis.rank(), degree: d });
        }
        let w = policy.stability_window.max(1);
        if d >= policy.start_degree && ranks.len() >= w && ranks[ranks.len() - w..].iter().all(|&r| r == basis.rank()) {
            return Ok(Certified { value: basis.rank(), degree: d });
        }
    }
    Err(DualError::RankUnstable { ranks })
}

/// Compares two functionals on every word up to `degree`.
pub fn functional_equal(f: &Functional, g: &Functional, degree: usize) -> Equality {
    let plan = Plan::new(&[f.clone(), g.clone()]);
    for d in 0..=degree {
        let words = Word::all_of_degree(d, plan.n);
        for (w, col) in words.into_iter().zip(plan.columns(d)) {
            if col[0] != col[1] {
                return Equality::Different {
                    witness: w.render(plan.n),
                    left: col[0].clone(),
                    right: col[1].clone(),
                };
            }
        }
    }
    Equality::Equal { degree }
}

/// Whether every functional in `small` lies in the span of `big`, judged
/// on the words up to `degree`.
pub fn span_contains(big: &[Functional], small: &[Functional], degree: usize) -> bool {
    let mut all = big.to_vec();
    all.extend_from_slice(small);
    let ranks = subset_ranks(&all, &[(0..big.len()).collect(), (0..all.len()).collect()], degree);
    ranks[0] == ranks[1]
}

/// Mutual containment: `(rank a, rank b, rank a∪b)`.
pub fn span_ranks(a: &[Functional], b: &[Functional], degree: usize) -> (usize, usize, usize) {
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    let na = a.len();
    let r = subset_ranks(
        &all,
        &[(0..na).collect(), (na..all.len()).collect(), (0..all.len()).collect()],
        degree,
    );
    (r[0], r[1], r[2])
}

/// JSON array of rows, each an array of scalar strings.
pub fn export_json(m: &Matrix) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|s| s.to_string()).collect())
        .collect();
    serde_json::to_string(&rows).expect("serializable")
}
