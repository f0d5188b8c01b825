//! Matrix corepresentations `v` with `Δ(v^i_j) = Σ_k v^i_k ⊗ v^k_j`.

use std::fmt;

use crate::linalg::Matrix;
use crate::scalar::Scalar;

use super::word::CoordElem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorepLabel {
    Trivial,
    Fundamental,
    Contragredient(Box<CorepLabel>),
    Tensor(Vec<CorepLabel>),
    Minor(usize),
    Projected { parent: Box<CorepLabel>, projector: String },
    Sum(Vec<CorepLabel>),
}

impl fmt::Display for CorepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[CorepLabel]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            CorepLabel::Trivial => write!(f, "1"),
            CorepLabel::Fundamental => write!(f, "u"),
            CorepLabel::Contragredient(inner) if **inner == CorepLabel::Fundamental => write!(f, "uc"),
            CorepLabel::Contragredient(inner) => write!(f, "contra({inner})"),
            CorepLabel::Tensor(v) => write!(f, "tensor({})", join(v)),
            CorepLabel::Minor(k) => write!(f, "minor:{k}"),
            CorepLabel::Projected { parent, projector } => write!(f, "proj:{projector}({parent})"),
            CorepLabel::Sum(v) => write!(f, "sum({})", join(v)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corep {
    dim: usize,
    entries: Vec<CoordElem>,
    label: CorepLabel,
}

impl Corep {
    pub fn new(dim: usize, entries: Vec<CoordElem>, label: CorepLabel) -> Corep {
        assert_eq!(entries.len(), dim * dim);
        Corep { dim, entries, label }
    }

    pub fn trivial() -> Corep {
        Corep::new(1, vec![CoordElem::unit()], CorepLabel::Trivial)
    }

    pub fn fundamental(n: usize) -> Corep {
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| CoordElem::generator(i, j, n)))
            .collect();
        Corep::new(n, entries, CorepLabel::Fundamental)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &CorepLabel {
        &self.label
    }

    pub fn entry(&self, i: usize, j: usize) -> &CoordElem {
        &self.entries[i * self.dim + j]
    }

    /// Highest word degree among the entries.
    pub fn degree(&self) -> usize {
        self.entries.iter().map(CoordElem::degree).max().unwrap_or(0)
    }

    /// `(v⊗w)^{(i,k)}_{(j,l)} = v^i_j w^k_l`, pair index `i*dim(w) + k`.
    pub fn tensor(v: &Corep, w: &Corep) -> Corep {
        let (a, b) = (v.dim, w.dim);
        let mut entries = Vec::with_capacity(a * a * b * b);
        for i in 0..a {
            for k in 0..b {
                for j in 0..a {
                    for l in 0..b {
                        entries.push(v.entry(i, j).mul(w.entry(k, l)));
                    }
                }
            }
        }
        Corep::new(a * b, entries, CorepLabel::Tensor(vec![v.label.clone(), w.label.clone()]))
    }

    pub fn direct_sum(parts: &[Corep]) -> Corep {
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let mut entries = vec![CoordElem::zero(); dim * dim];
        let mut off = 0;
        for p in parts {
            for i in 0..p.dim {
                for j in 0..p.dim {
                    entries[(off + i) * dim + off + j] = p.entry(i, j).clone();
                }
            }
            off += p.dim;
        }
        Corep::new(dim, entries, CorepLabel::Sum(parts.iter().map(|p| p.label.clone()).collect()))
    }

    /// Compresses onto the image of the idempotent `p`: with `p = B C` and
    /// `C B = I`, the new entries are `C v B`. Invariance is not checked here.
    pub fn compress(&self, p: &Matrix, name: &str) -> Corep {
        assert_eq!(p.rows(), self.dim);
        let (rref, pivots) = p.transpose().rref();
        // rows of rref span the row space of p^T, i.e. the column space of p
        let r = pivots.len();
        let mut b = Matrix::zeros(self.dim, r);
        for (c, _) in pivots.iter().enumerate() {
            for i in 0..self.dim {
                b.set(i, c, rref.get(c, i).clone());
            }
        }
        // C = rows of p at the pivot coordinates of B's echelon form
        let mut c = Matrix::zeros(r, self.dim);
        for (a, &pc) in pivots.iter().enumerate() {
            for j in 0..self.dim {
                c.set(a, j, p.get(pc, j).clone());
            }
        }
        let mut entries = Vec::with_capacity(r * r);
        for a in 0..r {
            for bcol in 0..r {
                let mut e = CoordElem::zero();
                for i in 0..self.dim {
                    let ca = c.get(a, i);
                    if ca.is_zero() {
                        continue;
                    }
                    for j in 0..self.dim {
                        let bj = b.get(j, bcol);
                        if bj.is_zero() {
                            continue;
                        }
                        e = e.add(&self.entry(i, j).scale(&(ca * bj)));
                    }
                }
                entries.push(e);
            }
        }
        Corep::new(
            r,
            entries,
            CorepLabel::Projected {
                parent: Box::new(self.label.clone()),
                projector: name.to_string(),
            },
        )
    }

    /// `ε(v^i_j) = δ_ij`, exact.
    pub fn counit_ok(&self, n: usize) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.entry(i, j).counit(n);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn scaled(&self, c: &Scalar) -> Corep {
        Corep::new(self.dim, self.entries.iter().map(|e| e.scale(c)).collect(), self.label.clone())
    }
}
