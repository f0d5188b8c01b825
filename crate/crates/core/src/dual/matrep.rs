//! Multiplicative matrix representations of the word algebra.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use crate::coordalg::{CoordElem, Word};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

use super::DualError;

static NEXT_ID: AtomicUsize = AtomicUsize::new(1);

/// Row-sparse square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    dim: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMat {
    pub fn zeros(dim: usize) -> SparseMat {
        SparseMat {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn from_dense(m: &Matrix) -> SparseMat {
        assert_eq!(m.rows(), m.cols());
        let rows = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMat { dim: m.rows(), rows }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `acc += c * (row i of self)`
    fn axpy_row(&self, i: usize, c: &Scalar, acc: &mut [Scalar]) {
        for (j, v) in &self.rows[i] {
            acc[*j].add_mul(c, v);
        }
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                self.axpy_row(i, c, &mut out);
            }
        }
        out
    }

    pub fn identity(dim: usize) -> SparseMat {
        SparseMat {
            dim,
            rows: (0..dim).map(|i| vec![(i, Scalar::one())]).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize, Scalar)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(i, r)| r.first().map(|(j, v)| (i, *j, v.clone())))
    }

    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        let mut acc = vec![Scalar::zero(); other.dim];
        let mut touched: Vec<usize> = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, x) in row {
                    for (j, y) in &other.rows[*k] {
                        if acc[*j].is_zero() {
                            touched.push(*j);
                        }
                        acc[*j].add_mul(x, y);
                    }
                }
                touched.sort_unstable();
                touched.dedup();
                let out: Vec<(usize, Scalar)> = touched
                    .drain(..)
                    .filter_map(|j| {
                        let v = std::mem::take(&mut acc[j]);
                        (!v.is_zero()).then_some((j, v))
                    })
                    .collect();
                out
            })
            .collect();
        SparseMat { dim: self.dim, rows }
    }

    pub fn add_scaled(&mut self, other: &SparseMat, c: &Scalar) {
        let scaled = SparseMat {
            dim: other.dim,
            rows: other
                .rows
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
                .collect(),
        };
        self.add_assign(&scaled);
    }

    pub fn kron(a: &SparseMat, b: &SparseMat) -> SparseMat {
        let dim = a.dim * b.dim;
        let mut rows = vec![Vec::new(); dim];
        for (i, ra) in a.rows.iter().enumerate() {
            for (k, rb) in b.rows.iter().enumerate() {
                let row = &mut rows[i * b.dim + k];
                for (j, x) in ra {
                    for (l, y) in rb {
                        row.push((j * b.dim + l, x * y));
                    }
                }
            }
        }
        SparseMat { dim, rows }
    }

    fn add_assign(&mut self, other: &SparseMat) {
        for (i, r) in other.rows.iter().enumerate() {
            let mut dense: std::collections::BTreeMap<usize, Scalar> =
                self.rows[i].drain(..).collect();
            for (j, v) in r {
                let e = dense.entry(*j).or_default();
                *e = &*e + v;
            }
            self.rows[i] = dense.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
    }
}

/// A multiplicative map `F` from words to `d × d` matrices, fixed by its
/// values on the generators: `F(w1 w2) = F(w1) F(w2)`, `F(1) = I`.
#[derive(Debug)]
pub struct MatRep {
    id: usize,
    n: usize,
    dim: usize,
    gens: Vec<SparseMat>,
    label: String,
}

impl MatRep {
    /// `gens[k*n + l]` is the value on `u^k_l`.
    pub fn new(label: impl Into<String>, n: usize, dim: usize, gens: Vec<Matrix>) -> Arc<MatRep> {
        assert_eq!(gens.len(), n * n);
        Arc::new(MatRep {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            n,
            dim,
            gens: gens.iter().map(SparseMat::from_dense).collect(),
            label: label.into(),
        })
    }

    fn from_sparse(label: String, n: usize, dim: usize, gens: Vec<SparseMat>) -> Arc<MatRep> {
        Arc::new(MatRep {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            n,
            dim,
            gens,
            label,
        })
    }

    pub fn id(&self) -> usize {
        self.id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generator(&self, k: usize, l: usize) -> &SparseMat {
        &self.gens[k * self.n + l]
    }

    pub fn generator_index(&self, g: usize) -> &SparseMat {
        &self.gens[g]
    }

    pub fn value_word_sparse(&self, w: &Word) -> SparseMat {
        let mut m = SparseMat::identity(self.dim);
        for &g in w.letters() {
            m = m.mul(&self.gens[g as usize]);
        }
        m
    }

    pub fn value_sparse(&self, a: &CoordElem) -> SparseMat {
        let mut acc = SparseMat::zeros(self.dim);
        for (w, c) in a.terms() {
            acc.add_scaled(&self.value_word_sparse(w), c);
        }
        acc
    }

    /// `F(w)` as a dense matrix.
    pub fn value_word(&self, w: &Word) -> Matrix {
        self.value_word_sparse(w).to_dense()
    }

    pub fn value(&self, a: &CoordElem) -> Matrix {
        self.value_sparse(a).to_dense()
    }

    /// Row `r` of `F(w)`.
    pub fn row_on_word(&self, r: usize, w: &Word) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[r] = Scalar::one();
        for &g in w.letters() {
            v = self.gens[g as usize].left_mul(&v);
        }
        v
    }

    pub fn entry_on(&self, r: usize, c: usize, a: &CoordElem) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, coef) in a.terms() {
            let v = self.row_on_word(r, w);
            acc.add_mul(coef, &v[c]);
        }
        acc
    }

    /// Convolution product: entry `((a,b),(c,d))` is `f_ac * g_bd`.
    pub fn conv(f: &MatRep, g: &MatRep) -> Arc<MatRep> {
        assert_eq!(f.n, g.n);
        let n = f.n;
        let mut gens = Vec::with_capacity(n * n);
        for k in 0..n {
            for l in 0..n {
                let mut acc = SparseMat::zeros(f.dim * g.dim);
                for m in 0..n {
                    let a = f.generator(k, m);
                    let b = g.generator(m, l);
                    if a.nnz() == 0 || b.nnz() == 0 {
                        continue;
                    }
                    acc.add_assign(&SparseMat::kron(a, b));
                }
                gens.push(acc);
            }
        }
        MatRep::from_sparse(format!("({})*({})", f.label, g.label), n, f.dim * g.dim, gens)
    }

    /// Convolution of a list of representations, left to right.
    pub fn conv_all(reps: &[&MatRep]) -> Arc<MatRep> {
        let mut acc = MatRep::conv(reps[0], reps[1]);
        for r in &reps[2..] {
            acc = MatRep::conv(&acc, r);
        }
        acc
    }

    /// Block-diagonal direct sum; returns the block offsets.
    pub fn direct_sum(reps: &[&MatRep]) -> (Arc<MatRep>, Vec<usize>) {
        let n = reps[0].n;
        let mut offsets = Vec::new();
        let mut dim = 0;
        for r in reps {
            assert_eq!(r.n, n);
            offsets.push(dim);
            dim += r.dim;
        }
        let gens = (0..n * n)
            .map(|g| {
                let mut rows = Vec::with_capacity(dim);
                for (r, &off) in reps.iter().zip(&offsets) {
                    for row in &r.gens[g].rows {
                        rows.push(row.iter().map(|(j, v)| (j + off, v.clone())).collect());
                    }
                }
                SparseMat { dim, rows }
            })
            .collect();
        let label = reps.iter().map(|r| r.label.as_str()).collect::<Vec<_>>().join(" + ");
        (MatRep::from_sparse(label, n, dim, gens), offsets)
    }

    /// The representation `A` with `A[j][i] = S(f_ij)`, obtained by inverting
    /// the block matrix `[F(u^m_l)]_{m,l}` and transposing each block.
    pub fn antipode_rep(f: &MatRep) -> Result<Arc<MatRep>, DualError> {
        let (n, d) = (f.n, f.dim);
        let mut block = Matrix::zeros(n * d, n * d);
        for m in 0..n {
            for l in 0..n {
                for (a, row) in f.generator(m, l).rows.iter().enumerate() {
                    for (b, v) in row {
                        block.set(m * d + a, l * d + b, v.clone());
                    }
                }
            }
        }
        let inv = block
            .inverse()
            .ok_or_else(|| DualError::AntipodeFailure(f.label.clone()))?;
        let gens = (0..n)
            .flat_map(|k| (0..n).map(move |l| (k, l)))
            .map(|(k, l)| {
                let mut g = Matrix::zeros(d, d);
                for a in 0..d {
                    for b in 0..d {
                        g.set(b, a, inv.get(k * d + a, l * d + b).clone());
                    }
                }
                g
            })
            .collect();
        Ok(MatRep::new(format!("S({})", f.label), n, d, gens))
    }

    /// Whether two representations have identical generator values.
    pub fn same_values(&self, other: &MatRep) -> bool {
        self.n == other.n && self.dim == other.dim && self.gens == other.gens
    }
}
