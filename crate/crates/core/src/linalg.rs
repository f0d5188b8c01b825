//! Dense exact linear algebra over [`Scalar`].

use std::fmt;

use crate::scalar::{Scalar, Specialization};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx].add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&Scalar::from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // cheapest nonzero pivot in this column
            let Some(p) = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| m.get(i, c).weight())
            else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let t = m.get(r, j);
                    if t.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * t);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank by forward elimination only.
    fn echelon_rank(mut self) -> usize {
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows)
                .filter(|&i| !self.get(i, c).is_zero())
                .min_by_key(|&i| self.get(i, c).weight())
            else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for i in r + 1..self.rows {
                if self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c) * &inv;
                for j in c..self.cols {
                    let t = self.get(r, j);
                    if t.is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&f * t);
                    self.set(i, j, v);
                }
            }
            r += 1;
        }
        r
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<(usize, Scalar)>> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        sparse_rank(&rows, self.cols)
    }

    /// Basis of `{x : self * x = 0}` as columns.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Basis of `{y : y^T * self = 0}`.
    pub fn left_nullspace(&self) -> Vec<Vec<Scalar>> {
        self.transpose().nullspace()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn pow(&self, e: usize) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained echelon basis of a subspace of K^dim.
///
/// Vectors are kept fully reduced against each other's pivots, so membership
/// tests cost one pass over the basis.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    dim: usize,
    basis: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> EchelonBasis {
        EchelonBasis { dim, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.dim
    }

    /// Reduces `v` against the basis; returns the residual.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        debug_assert_eq!(v.len(), self.dim);
        for (p, b) in &self.basis {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<Scalar>) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut r = self.reduce(v);
        let Some(p) = (0..self.dim)
            .filter(|&i| !r[i].is_zero())
            .min_by_key(|&i| r[i].weight())
        else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, b) in self.basis.iter_mut() {
            let f = b[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in b.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        self.basis.push((p, r));
        true
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.basis.iter().map(|(_, v)| v)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Rank of sparse rows over `cols` columns, eliminating separately inside each
/// block of rows linked by shared nonzero columns.
pub fn sparse_rank(rows: &[Vec<(usize, Scalar)>], cols: usize) -> usize {
    let mut parent: Vec<usize> = (0..cols).collect();
    for row in rows {
        if let Some(&(first, _)) = row.first() {
            for &(c, _) in &row[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, c));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        if let Some(&(first, _)) = row.first() {
            blocks.entry(find(&mut parent, first)).or_default().push(i);
        }
    }
    blocks
        .values()
        .map(|members| {
            let mut local = std::collections::BTreeMap::new();
            for &i in members {
                for &(c, _) in &rows[i] {
                    let next = local.len();
                    local.entry(c).or_insert(next);
                }
            }
            let mut m = Matrix::zeros(members.len(), local.len());
            for (r, &i) in members.iter().enumerate() {
                for (c, v) in &rows[i] {
                    m.set(r, local[c], v.clone());
                }
            }
            m.echelon_rank()
        })
        .sum()
}

/// Rank of the image of sparse rows under `spec`, a lower bound on the exact
/// rank. `None` if an entry has a pole.
pub fn sparse_rank_mod(rows: &[Vec<(usize, Scalar)>], spec: &Specialization) -> Option<usize> {
    let m = spec.modulus;
    let mut pivots: std::collections::BTreeMap<usize, Vec<(usize, u64)>> = std::collections::BTreeMap::new();
    for row in rows {
        let mut v: std::collections::BTreeMap<usize, u64> = std::collections::BTreeMap::new();
        for (c, x) in row {
            let e = spec.eval(x)?;
            if e != 0 {
                v.insert(*c, e);
            }
        }
        while let Some((&lead, &a)) = v.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                let inv = spec.inv(a);
                pivots.insert(lead, v.iter().map(|(&c, &x)| (c, spec.mul(x, inv))).collect());
                break;
            };
            for &(c, y) in p {
                let e = v.entry(c).or_insert(0);
                *e = (*e + m - spec.mul(a, y)) % m;
                if *e == 0 {
                    v.remove(&c);
                }
            }
        }
    }
    Some(pivots.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    #[test]
    fn rank_nullspace_inverse() {
        let p = Scalar::p();
        let m = Matrix::from_rows(vec![
            vec![p.clone(), s(1), s(0)],
            vec![s(1), p.clone(), s(1)],
            vec![&p + &s(1), &p + &s(1), s(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let x = Matrix::from_rows(ns.to_vec()).transpose();
        assert!(m.mul(&x).is_zero());
        assert!(m.inverse().is_none());

        let a = Matrix::from_rows(vec![vec![p.clone(), s(1)], vec![s(1), p.clone()]]);
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).is_identity());
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(vec![s(1), s(2), s(3)]));
        assert!(e.insert(vec![s(0), Scalar::p(), s(1)]));
        assert!(!e.insert(vec![s(2), &Scalar::p() + &s(4), s(7)]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(vec![s(1), &s(2) + &Scalar::p(), s(4)]));
        assert!(!e.contains(vec![s(0), s(0), s(1)]));
    }
}
