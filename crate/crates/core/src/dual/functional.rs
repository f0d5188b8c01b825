//! Linear functionals realized as combinations of entries of one [`MatRep`].

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coordalg::{CoordElem, Word};
use crate::scalar::Scalar;

use super::matrep::MatRep;

#[derive(Clone, Debug)]
pub struct Functional {
    rep: Arc<MatRep>,
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl Functional {
    /// The zero functional housed in `rep`.
    pub fn zero(rep: &Arc<MatRep>) -> Functional {
        Functional {
            rep: rep.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn entry(rep: &Arc<MatRep>, r: usize, c: usize) -> Functional {
        Functional::combination(rep, [((r, c), Scalar::one())])
    }

    pub fn combination(
        rep: &Arc<MatRep>,
        terms: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Functional {
        let mut f = Functional::zero(rep);
        for (k, v) in terms {
            f.add_term(k, &v);
        }
        f
    }

    fn add_term(&mut self, k: (usize, usize), v: &Scalar) {
        assert!(k.0 < self.rep.dim() && k.1 < self.rep.dim());
        if v.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_default();
        *e = &*e + v;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn rep(&self) -> &Arc<MatRep> {
        &self.rep
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.terms.iter()
    }

    /// Whether no entry occurs with nonzero coefficient. A `false` answer
    /// does not prove the functional is nonzero.
    pub fn is_trivially_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Functional {
        Functional::combination(&self.rep, self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    /// Re-expresses the functional inside a direct sum at block `offset`.
    pub fn embed(&self, rep: &Arc<MatRep>, offset: usize) -> Functional {
        Functional::combination(
            rep,
            self.terms.iter().map(|(&(r, c), v)| ((r + offset, c + offset), v.clone())),
        )
    }

    pub fn add(&self, other: &Functional) -> Functional {
        if Arc::ptr_eq(&self.rep, &other.rep) {
            let mut out = self.clone();
            for (k, v) in &other.terms {
                out.add_term(*k, v);
            }
            return out;
        }
        let (sum, off) = MatRep::direct_sum(&[&self.rep, &other.rep]);
        let mut out = self.embed(&sum, off[0]);
        for (&(r, c), v) in &other.terms {
            out.add_term((r + off[1], c + off[1]), v);
        }
        out
    }

    pub fn sub(&self, other: &Functional) -> Functional {
        self.add(&other.scale(&Scalar::from_i64(-1)))
    }

    /// Convolution product `self * other`, housed in `conv(self.rep, other.rep)`.
    pub fn mul(&self, other: &Functional) -> Functional {
        let rep = MatRep::conv(&self.rep, &other.rep);
        self.mul_in(other, &rep)
    }

    /// As [`Functional::mul`] with a prebuilt `conv(self.rep, other.rep)`.
    pub fn mul_in(&self, other: &Functional, rep: &Arc<MatRep>) -> Functional {
        let d = other.rep.dim();
        assert_eq!(rep.dim(), self.rep.dim() * d);
        let mut out = Functional::zero(rep);
        for (&(a, c), x) in &self.terms {
            for (&(b, e), y) in &other.terms {
                out.add_term((a * d + b, c * d + e), &(x * y));
            }
        }
        out
    }

    pub fn value_at_unit(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (&(r, c), v) in &self.terms {
            if r == c {
                acc = &acc + v;
            }
        }
        acc
    }

    pub fn evaluate_word(&self, w: &Word) -> Scalar {
        let mut rows: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
        let mut acc = Scalar::zero();
        for (&(r, c), v) in &self.terms {
            let row = rows.entry(r).or_insert_with(|| self.rep.row_on_word(r, w));
            acc.add_mul(v, &row[c]);
        }
        acc
    }

    pub fn evaluate(&self, a: &CoordElem) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in a.terms() {
            acc.add_mul(c, &self.evaluate_word(w));
        }
        acc
    }
}

/// Rewrites all functionals into one shared direct-sum representation.
pub fn unify(fs: &[Functional]) -> Vec<Functional> {
    let mut reps: Vec<&Arc<MatRep>> = Vec::new();
    for f in fs {
        if !reps.iter().any(|r| Arc::ptr_eq(r, &f.rep)) {
            reps.push(&f.rep);
        }
    }
    if reps.len() <= 1 {
        return fs.to_vec();
    }
    let plain: Vec<&MatRep> = reps.iter().map(|r| r.as_ref()).collect();
    let (sum, offsets) = MatRep::direct_sum(&plain);
    fs.iter()
        .map(|f| {
            let k = reps.iter().position(|r| Arc::ptr_eq(r, &f.rep)).unwrap();
            f.embed(&sum, offsets[k])
        })
        .collect()
}
