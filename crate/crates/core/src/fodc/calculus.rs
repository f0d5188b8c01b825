use std::sync::Arc;

use serde::Serialize;

use crate::coordalg::{CoordElem, Corep, Word};
use crate::dual::{
    functional_equal, independent_subset, span_ranks, stabilized_rank, Certified, Dual, Equality,
    Functional, MatRep, Policy,
};
use crate::linalg::{EchelonBasis, Matrix};
use crate::scalar::{Scalar, Zeta};

use super::FodcError;

/// `X_ij = ε_ζ l(v^i_j) - δ_ij ε`, housed in `conv(ε_ζ, L^{-,c}_v, L+_v) ⊕ ε`.
#[derive(Clone, Debug)]
pub struct QuantumLieAlgebra {
    pub zeta: Zeta,
    pub corep: Arc<Corep>,
    /// `conv(ε_ζ, L^{-,c}_v, L+_v)`; its entries also give the right action.
    pub right: Arc<MatRep>,
    pub basis: Vec<Functional>,
    pub eps: Functional,
    pub certified_dim: Certified<usize>,
}

impl QuantumLieAlgebra {
    pub fn dim_v(&self) -> usize {
        self.corep.dim()
    }

    /// Number of basis functionals, `m²`.
    pub fn invariant_dim(&self) -> usize {
        self.basis.len()
    }

    /// `X ∪ {ε}`
    pub fn with_eps(&self) -> Vec<Functional> {
        let mut v = self.basis.clone();
        v.push(self.eps.clone());
        v
    }

    /// All `X_ij(w)` at once.
    pub fn values_on(&self, w: &Word) -> Vec<Scalar> {
        let rep = self.eps.rep();
        let val = rep.value_word_sparse(w).to_dense();
        self.basis
            .iter()
            .map(|x| {
                let mut acc = Scalar::zero();
                for (&(r, c), v) in x.terms() {
                    acc.add_mul(v, val.get(r, c));
                }
                acc
            })
            .collect()
    }
}

pub fn quantum_lie(
    dual: &Dual,
    v: &Arc<Corep>,
    zeta: &Zeta,
    policy: &Policy,
) -> Result<QuantumLieAlgebra, FodcError> {
    let ez = dual.eps_zeta(zeta)?;
    let (mc, p) = dual.adapted(v);
    let right = MatRep::conv_all(&[&ez, &mc, &p]);
    let m = v.dim();
    let (rep, off) = MatRep::direct_sum(&[&right, dual.eps()]);
    let e = off[1];
    let eps = Functional::entry(&rep, e, e);
    let basis: Vec<Functional> = (0..m * m)
        .map(|idx| {
            let (i, j) = (idx / m, idx % m);
            let mut terms: Vec<((usize, usize), Scalar)> =
                (0..m).map(|k| ((k * m + k, i * m + j), Scalar::one())).collect();
            if i == j {
                terms.push(((e, e), Scalar::from_i64(-1)));
            }
            Functional::combination(&rep, terms)
        })
        .collect();
    let certified_dim = stabilized_rank(&basis, policy)?;
    Ok(QuantumLieAlgebra {
        zeta: *zeta,
        corep: v.clone(),
        right,
        basis,
        eps,
        certified_dim,
    })
}

/// The inner calculus `d a = θ a - a θ` in free left-module coordinates
/// `Σ_I a_I ω_I` over the basis `ω_ij`.
#[derive(Clone, Debug)]
pub struct Calculus {
    pub lie: QuantumLieAlgebra,
}

impl Calculus {
    pub fn new(lie: QuantumLieAlgebra) -> Calculus {
        Calculus { lie }
    }

    pub fn n(&self) -> usize {
        self.lie.eps.rep().n()
    }

    /// Indices of `θ = Σ_i ω_ii`.
    pub fn theta(&self) -> Vec<usize> {
        let m = self.lie.dim_v();
        (0..m).map(|i| i * m + i).collect()
    }

    /// `(da)_I = a' X_I(a'')`.
    pub fn differential(&self, a: &CoordElem) -> Vec<CoordElem> {
        let n = self.n();
        let mut out = vec![CoordElem::zero(); self.lie.basis.len()];
        for (w, c) in a.terms() {
            for (w1, w2) in w.coproduct_splits(n) {
                for (slot, x) in out.iter_mut().zip(self.lie.values_on(&w2)) {
                    if !x.is_zero() {
                        slot.add_term(w1.clone(), &(c * &x));
                    }
                }
            }
        }
        out
    }

    pub fn left_mul(&self, a: &CoordElem, form: &[CoordElem]) -> Vec<CoordElem> {
        form.iter().map(|f| a.mul(f)).collect()
    }

    /// `ω_I b = Σ_J b' F_IJ(b'') ω_J` with `F` the right-action representation.
    pub fn right_mul(&self, form: &[CoordElem], b: &CoordElem) -> Vec<CoordElem> {
        let n = self.n();
        let dim = form.len();
        let mut out = vec![CoordElem::zero(); dim];
        for (w, c) in b.terms() {
            for (w1, w2) in w.coproduct_splits(n) {
                let f = self.lie.right.value_word_sparse(&w2);
                for (i, fi) in form.iter().enumerate() {
                    if fi.is_zero() {
                        continue;
                    }
                    for (j, v) in f.row(i) {
                        let coef = c * v;
                        out[*j] = out[*j].add(&fi.mul(&CoordElem::from_term(w1.clone(), coef)));
                    }
                }
            }
        }
        out
    }

    /// Coefficients of `d(ab) - a·db - da·b`.
    pub fn leibniz_defect(&self, a: &CoordElem, b: &CoordElem) -> Vec<CoordElem> {
        let dab = self.differential(&a.mul(b));
        let adb = self.left_mul(a, &self.differential(b));
        let dab2 = self.right_mul(&self.differential(a), b);
        dab.iter()
            .zip(adb.iter().zip(&dab2))
            .map(|(x, (y, z))| x.sub(y).sub(z))
            .collect()
    }

    /// Leibniz rule on `(a, b)`, each defect coefficient decided by separation.
    pub fn leibniz_holds(&self, dual: &Dual, a: &CoordElem, b: &CoordElem, policy: &Policy) -> Equality {
        for coef in self.leibniz_defect(a, b) {
            let e = dual.separated_equal(&coef, &CoordElem::zero(), policy);
            if !e.is_equal() {
                return e;
            }
        }
        Equality::Equal { degree: a.degree() + b.degree() }
    }

    /// `a ∈ R_Γ` iff `ε(a) = 0` and `X(a) = 0` for every basis element.
    pub fn right_ideal_member(&self, a: &CoordElem) -> bool {
        if !a.counit(self.n()).is_zero() {
            return false;
        }
        self.lie.basis.iter().all(|x| x.evaluate(a).is_zero())
    }
}

/// `(D^{-1})^j_i = Σ_n r(S²(v^j_n) ⊗ v^n_i)`
pub fn d_inverse_matrix(dual: &Dual, v: &Corep) -> Matrix {
    let alg = dual.alg();
    let m = v.dim();
    let s2: Vec<CoordElem> = (0..m * m)
        .map(|e| alg.antipode(&alg.antipode(v.entry(e / m, e % m))))
        .collect();
    let mut d = Matrix::zeros(m, m);
    for j in 0..m {
        for i in 0..m {
            let mut acc = Scalar::zero();
            for k in 0..m {
                acc = &acc + &dual.r_form(&s2[j * m + k], v.entry(k, i));
            }
            d.set(j, i, acc);
        }
    }
    d
}

/// `c_ζ(v) = ε_ζ Tr(L D^{-1}) = Σ_ij ε_ζ l(v^i_j) (D^{-1})^j_i`
pub fn central_element(dual: &Dual, v: &Corep, zeta: &Zeta) -> Result<Functional, FodcError> {
    let ez = dual.eps_zeta(zeta)?;
    let (mc, p) = dual.adapted(v);
    let rep = MatRep::conv_all(&[&ez, &mc, &p]);
    let m = v.dim();
    let dinv = d_inverse_matrix(dual, v);
    let mut terms = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let c = dinv.get(j, i);
            if c.is_zero() {
                continue;
            }
            for k in 0..m {
                terms.push(((k * m + k, i * m + j), c.clone()));
            }
        }
    }
    Ok(Functional::combination(&rep, terms))
}

/// Commutation with all `l±^i_j` on words up to `degree`.
pub fn check_central(dual: &Dual, c: &Functional, degree: usize) -> Equality {
    let n = dual.n();
    for l in [dual.lplus(), dual.lminus()] {
        let left = MatRep::conv(c.rep(), l);
        let right = MatRep::conv(l, c.rep());
        for i in 0..n {
            for j in 0..n {
                let f = Functional::entry(l, i, j);
                let cf = c.mul_in(&f, &left);
                let fc = f.mul_in(c, &right);
                let e = functional_equal(&cf, &fc, degree);
                if !e.is_equal() {
                    return e;
                }
            }
        }
    }
    Equality::Equal { degree }
}

/// A basis of `span{χ_b : deg b ≤ degree}`, `χ_b(a) = c(ab) - ε(a) c(b)`.
pub fn quantum_lie_from_central(
    dual: &Dual,
    c: &Functional,
    degree: usize,
) -> Result<Vec<Functional>, FodcError> {
    let central = check_central(dual, c, degree);
    if !central.is_equal() {
        return Err(FodcError::NotCentral(format!("{central:?}")));
    }
    let rep = c.rep().clone();
    let d = rep.dim();
    let mut rows: Vec<usize> = c.terms().map(|(&(r, _), _)| r).collect();
    rows.dedup();
    let width = rows.len() * d + 1;
    let mut span = EchelonBasis::new(width);
    for w in Word::all_up_to(degree, dual.n()) {
        let val = rep.value_word_sparse(&w).to_dense();
        let mut v = vec![Scalar::zero(); width];
        let mut cb = Scalar::zero();
        for (&(r, s), coef) in c.terms() {
            let ri = rows.iter().position(|&x| x == r).unwrap();
            for k in 0..d {
                v[ri * d + k].add_mul(coef, val.get(k, s));
            }
            cb.add_mul(coef, val.get(r, s));
        }
        v[width - 1] = -&cb;
        span.insert(v);
        if span.is_full() {
            break;
        }
    }
    let (sum, off) = MatRep::direct_sum(&[&rep, dual.eps()]);
    let formal: Vec<Functional> = span
        .vectors()
        .map(|v| {
            let terms = v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(idx, s)| {
                if idx == width - 1 {
                    ((off[1], off[1]), s.clone())
                } else {
                    ((rows[idx / d], idx % d), s.clone())
                }
            });
            Functional::combination(&sum, terms)
        })
        .collect();
    Ok(independent_subset(&formal, degree)
        .into_iter()
        .map(|i| formal[i].clone())
        .collect())
}

/// Ranks witnessing a span comparison at one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanCertificate {
    pub left: usize,
    pub right: usize,
    pub union: usize,
    pub degree: usize,
}

impl SpanCertificate {
    pub fn equal(&self) -> bool {
        self.left == self.union && self.right == self.union
    }

    pub fn left_in_right(&self) -> bool {
        self.right == self.union
    }
}

pub fn compare_spans(a: &[Functional], b: &[Functional], degree: usize) -> SpanCertificate {
    let (left, right, union) = span_ranks(a, b, degree);
    SpanCertificate { left, right, union, degree }
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub basis: Vec<Functional>,
    pub part_ranks: Vec<usize>,
    pub union_rank: usize,
    pub degree: usize,
}

/// Union of quantum Lie algebras, certified direct when ranks add up.
pub fn direct_sum(cals: &[Calculus], policy: &Policy) -> Result<DirectSum, FodcError> {
    if cals.len() < 2 {
        return Err(FodcError::Invalid("direct sum needs at least two calculi".into()));
    }
    let mut basis = Vec::new();
    let mut parts = Vec::new();
    let mut degree = 0;
    for c in cals {
        parts.push(c.lie.certified_dim.value);
        degree = degree.max(c.lie.certified_dim.degree);
        basis.extend(c.lie.basis.iter().cloned());
    }
    let union = stabilized_rank(&basis, &Policy { start_degree: degree.max(policy.start_degree), ..*policy })?;
    let total: usize = parts.iter().sum();
    if union.value != total {
        return Err(FodcError::NotDirect { parts, union: union.value });
    }
    Ok(DirectSum {
        basis,
        part_ranks: parts,
        union_rank: union.value,
        degree: union.degree,
    })
}

/// `span{ε_{ζζ'} l((v⊗w)^{ik}_{jl})} = span{ε_ζ l(v^i_j) ε_ζ' l(w^k_l)}`.
pub fn tensor_identity_check(
    dual: &Dual,
    v: &Corep,
    w: &Corep,
    zeta: &Zeta,
    zeta2: &Zeta,
    degree: usize,
) -> Result<SpanCertificate, FodcError> {
    let vw = Corep::tensor(v, w);
    let ezz = dual.eps_zeta(&zeta.mul(zeta2))?;
    let (fvw, lvw) = dual.l_corep(&vw);
    let left_rep = MatRep::conv(&ezz, &fvw);
    let left: Vec<Functional> = lvw.iter().map(|f| relabel(f, &left_rep)).collect();

    let ez = dual.eps_zeta(zeta)?;
    let ez2 = dual.eps_zeta(zeta2)?;
    let (fv, lv) = dual.l_corep(v);
    let (fw, lw) = dual.l_corep(w);
    let av = MatRep::conv(&ez, &fv);
    let aw = MatRep::conv(&ez2, &fw);
    let prod = MatRep::conv(&av, &aw);
    let mut right = Vec::new();
    for x in &lv {
        for y in &lw {
            right.push(relabel(x, &av).mul_in(&relabel(y, &aw), &prod));
        }
    }
    Ok(compare_spans(&left, &right, degree))
}

/// Moves a functional on `F` to the same entries of `conv(ε_ζ, F)`.
fn relabel(f: &Functional, rep: &Arc<MatRep>) -> Functional {
    assert_eq!(f.rep().dim(), rep.dim());
    Functional::combination(rep, f.terms().map(|(k, v)| (*k, v.clone())))
}
