//! L-functionals, the universal r-form and the separating family.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::coordalg::{CoordAlgebra, CoordElem, Corep, Word, YoungWeight};
use crate::linalg::{EchelonBasis, Matrix};
use crate::scalar::{FieldConfig, Scalar, Zeta};

use super::eval::{span_contains, Equality, Policy};
use super::functional::{unify, Functional};
use rayon::prelude::*;

use super::matrep::{MatRep, SparseMat};
use super::DualError;

/// Whether L-functionals carry the factor `z` of the r-form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    WithZ,
    ZFree,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Base {
    Plus,
    Minus,
    MinusC,
}

/// Dual-side toolkit for one configuration. Derived representations are
/// cached, so repeated requests return the same `Arc`.
pub struct Dual {
    alg: Arc<CoordAlgebra>,
    lplus: Arc<MatRep>,
    lminus: Arc<MatRep>,
    lmc: Arc<MatRep>,
    eps: Arc<MatRep>,
    tensor_powers: Mutex<BTreeMap<(Base, usize), Arc<MatRep>>>,
    powers: Mutex<BTreeMap<(usize, usize), Arc<MatRep>>>,
    characters: Mutex<BTreeMap<Zeta, Arc<MatRep>>>,
}

impl Dual {
    pub fn new(alg: Arc<CoordAlgebra>) -> Dual {
        Dual::with_normalization(alg, Normalization::WithZ)
    }

    pub fn with_normalization(alg: Arc<CoordAlgebra>, norm: Normalization) -> Dual {
        let n = alg.n();
        let r = alg.rdata().clone();
        let z = match norm {
            Normalization::WithZ => r.z().clone(),
            Normalization::ZFree => Scalar::one(),
        };
        let zi = z.inv().expect("z is nonzero");
        let build = |label: &str, f: &dyn Fn(usize, usize, usize, usize) -> Scalar| {
            let gens = (0..n * n)
                .map(|g| {
                    let (k, l) = (g / n, g % n);
                    let mut m = Matrix::zeros(n, n);
                    for i in 0..n {
                        for j in 0..n {
                            m.set(i, j, f(i, j, k, l));
                        }
                    }
                    m
                })
                .collect();
            MatRep::new(label, n, n, gens)
        };
        let lplus = build("L+", &|i, j, k, l| r.entry(k, i, l, j) * &z);
        let lminus = build("L-", &|i, j, k, l| r.inv_entry(i, k, j, l) * &zi);
        let lmc = build("L-c", &|i, j, k, l| r.entry(j, k, i, l) * &z);
        let eps = {
            let gens = (0..n * n)
                .map(|g| {
                    let v = if g / n == g % n { Scalar::one() } else { Scalar::zero() };
                    Matrix::from_rows(vec![vec![v]])
                })
                .collect();
            MatRep::new("eps", n, 1, gens)
        };
        Dual {
            alg,
            lplus,
            lminus,
            lmc,
            eps,
            tensor_powers: Mutex::new(BTreeMap::new()),
            powers: Mutex::new(BTreeMap::new()),
            characters: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn for_config(config: &FieldConfig) -> Result<Dual, crate::coordalg::CoordError> {
        Ok(Dual::new(Arc::new(CoordAlgebra::new(config)?)))
    }

    pub fn alg(&self) -> &Arc<CoordAlgebra> {
        &self.alg
    }

    pub fn config(&self) -> &FieldConfig {
        self.alg.config()
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    /// `l+^i_j(u^k_l) = z R^{ki}_{lj}`
    pub fn lplus(&self) -> &Arc<MatRep> {
        &self.lplus
    }

    /// `l-^i_j(u^k_l) = z^{-1} (R^{-1})^{ik}_{jl}`
    pub fn lminus(&self) -> &Arc<MatRep> {
        &self.lminus
    }

    /// `(L^{-,c})^i_j = S(l-^j_i) = r(u^j_i ⊗ ·)`, read off the R-matrix.
    pub fn lmc(&self) -> &Arc<MatRep> {
        &self.lmc
    }

    /// The counit as a one-dimensional representation.
    pub fn eps(&self) -> &Arc<MatRep> {
        &self.eps
    }

    pub fn eps_functional(&self) -> Functional {
        Functional::entry(&self.eps, 0, 0)
    }

    pub fn lplus_entry(&self, i: usize, j: usize) -> Functional {
        Functional::entry(&self.lplus, i, j)
    }

    pub fn lminus_entry(&self, i: usize, j: usize) -> Functional {
        Functional::entry(&self.lminus, i, j)
    }

    /// `ε_ζ(u^i_j) = ζ δ_ij`
    pub fn eps_zeta(&self, zeta: &Zeta) -> Result<Arc<MatRep>, DualError> {
        if !zeta.is_admissible(self.config()) {
            return Err(DualError::InvalidCharacter(format!(
                "{zeta} is not admissible for {}",
                self.config().label()
            )));
        }
        if zeta.is_one() {
            return Ok(self.eps.clone());
        }
        let mut cache = self.characters.lock().unwrap();
        if let Some(r) = cache.get(zeta) {
            return Ok(r.clone());
        }
        let v = zeta.value().map_err(|e| DualError::InvalidCharacter(e.to_string()))?;
        let n = self.n();
        let gens = (0..n * n)
            .map(|g| {
                let x = if g / n == g % n { v.clone() } else { Scalar::zero() };
                Matrix::from_rows(vec![vec![x]])
            })
            .collect();
        let rep = MatRep::new(format!("eps[{zeta}]"), n, 1, gens);
        cache.insert(*zeta, rep.clone());
        Ok(rep)
    }

    fn tensor_power(&self, base: Base, k: usize) -> Arc<MatRep> {
        if k == 0 {
            return self.eps.clone();
        }
        let b = match base {
            Base::Plus => &self.lplus,
            Base::Minus => &self.lminus,
            Base::MinusC => &self.lmc,
        };
        if k == 1 {
            return b.clone();
        }
        if let Some(r) = self.tensor_powers.lock().unwrap().get(&(base, k)) {
            return r.clone();
        }
        let prev = self.tensor_power(base, k - 1);
        let rep = MatRep::conv(&prev, b);
        self.tensor_powers.lock().unwrap().insert((base, k), rep.clone());
        rep
    }

    pub fn lplus_power(&self, k: usize) -> Arc<MatRep> {
        self.tensor_power(Base::Plus, k)
    }

    pub fn lminus_power(&self, k: usize) -> Arc<MatRep> {
        self.tensor_power(Base::Minus, k)
    }

    pub fn lmc_power(&self, k: usize) -> Arc<MatRep> {
        self.tensor_power(Base::MinusC, k)
    }

    /// `conv(L^{-,c} ⊗k1, L+ ⊗k2)`
    pub fn power(&self, k1: usize, k2: usize) -> Arc<MatRep> {
        if k1 == 0 {
            return self.lplus_power(k2);
        }
        if k2 == 0 {
            return self.lmc_power(k1);
        }
        if let Some(r) = self.powers.lock().unwrap().get(&(k1, k2)) {
            return r.clone();
        }
        let rep = MatRep::conv(&self.lmc_power(k1), &self.lplus_power(k2));
        self.powers.lock().unwrap().insert((k1, k2), rep.clone());
        rep
    }

    fn seq_index(&self, seq: impl Iterator<Item = usize>) -> usize {
        seq.fold(0, |acc, x| acc * self.n() + x)
    }

    /// `l^i_j = S(l-^i_k) l+^k_j`
    pub fn l_generator(&self, i: usize, j: usize) -> Functional {
        self.l_of(&CoordElem::generator(i, j, self.n()))
    }

    /// `l(a) = q(· ⊗ a)`, expanded through the bicharacter axioms into
    /// entries of `conv(L^{-,c} ⊗m, L+ ⊗m)` for each degree `m` of `a`.
    pub fn l_of(&self, a: &CoordElem) -> Functional {
        let n = self.n();
        let mut by_degree: BTreeMap<usize, Vec<(&Word, &Scalar)>> = BTreeMap::new();
        for (w, c) in a.terms() {
            by_degree.entry(w.degree()).or_default().push((w, c));
        }
        let mut parts = Vec::new();
        for (m, words) in by_degree {
            let rep = self.power(m, m);
            let nm = n.pow(m as u32);
            let mut f = Functional::zero(&rep);
            for (w, c) in words {
                let pairs: Vec<_> = w.pairs(n).collect();
                let col = self.seq_index(pairs.iter().map(|p| p.0)) * nm
                    + self.seq_index(pairs.iter().rev().map(|p| p.1));
                for kidx in 0..nm {
                    let ks = digits(kidx, n, m);
                    let row = kidx * nm + self.seq_index(ks.iter().rev().copied());
                    f = f.add(&Functional::combination(&rep, [((row, col), c.clone())]));
                }
            }
            parts.push(f);
        }
        match parts.len() {
            0 => Functional::zero(&self.eps),
            1 => parts.pop().unwrap(),
            _ => {
                let u = unify(&parts);
                u.iter().skip(1).fold(u[0].clone(), |acc, f| acc.add(f))
            }
        }
    }

    /// `r(a ⊗ b)` with `r(u^i_j ⊗ u^n_m) = z R^{in}_{jm}`.
    pub fn r_form(&self, a: &CoordElem, b: &CoordElem) -> Scalar {
        let n = self.n();
        let mut acc = Scalar::zero();
        for (w, c) in a.terms() {
            let m = w.degree();
            let rep = self.lmc_power(m);
            let pairs: Vec<_> = w.pairs(n).collect();
            let row = self.seq_index(pairs.iter().map(|p| p.1));
            let col = self.seq_index(pairs.iter().map(|p| p.0));
            acc.add_mul(c, &rep.entry_on(row, col, b));
        }
        acc
    }

    /// Convolution inverse of the r-form, `r(S(a) ⊗ b)`.
    pub fn rbar_form(&self, a: &CoordElem, b: &CoordElem) -> Scalar {
        self.r_form(&self.alg.antipode(a), b)
    }

    /// `q(a ⊗ b) = r(b' ⊗ a') r(a'' ⊗ b'')`
    pub fn q_form(&self, a: &CoordElem, b: &CoordElem) -> Scalar {
        self.l_of(b).evaluate(a)
    }

    /// `[q(a ⊗ b)]` over `words × words`, evaluating each row word once per degree.
    pub fn gram_matrix(&self, words: &[Word]) -> Matrix {
        let n = self.n();
        let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (j, w) in words.iter().enumerate() {
            by_degree.entry(w.degree()).or_default().push(j);
        }
        let mut g = Matrix::zeros(words.len(), words.len());
        for (m, cols) in by_degree {
            let rep = self.power(m, m);
            let nm = n.pow(m as u32);
            let slots: Vec<(usize, Vec<usize>)> = cols
                .iter()
                .map(|&j| {
                    let pairs: Vec<_> = words[j].pairs(n).collect();
                    let col = self.seq_index(pairs.iter().map(|p| p.0)) * nm
                        + self.seq_index(pairs.iter().rev().map(|p| p.1));
                    let rows = (0..nm)
                        .map(|k| k * nm + self.seq_index(digits(k, n, m).into_iter().rev()))
                        .collect();
                    (col, rows)
                })
                .collect();
            let values: Vec<Vec<Scalar>> = words
                .par_iter()
                .map(|a| {
                    let f = rep.value_word_sparse(a);
                    slots
                        .iter()
                        .map(|(col, rows)| {
                            let mut acc = Scalar::zero();
                            for &r in rows {
                                if let Some((_, v)) = f.row(r).iter().find(|(c, _)| c == col) {
                                    acc = &acc + v;
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            for (i, row) in values.into_iter().enumerate() {
                for (&j, v) in cols.iter().zip(row) {
                    g.set(i, j, v);
                }
            }
        }
        g
    }

    /// `τ(-2λ) = Π_k ((l+^1_1 ··· l+^k_k)^2)^{m_k}`
    pub fn tau_functional(&self, weight: &YoungWeight) -> Functional {
        let mut seq = Vec::new();
        for (j, &mult) in weight.m.iter().enumerate() {
            for _ in 0..2 * mult {
                seq.extend(0..=j);
            }
        }
        let rep = self.lplus_power(seq.len());
        let idx = self.seq_index(seq.into_iter());
        Functional::entry(&rep, idx, idx)
    }

    /// `K_i = l-^1_1 ··· l-^i_i` (one based `i`).
    pub fn k_functional(&self, i: usize) -> Functional {
        let rep = self.lminus_power(i);
        let idx = self.seq_index(0..i);
        Functional::entry(&rep, idx, idx)
    }

    /// `K_{α_i} = l-^i_i l+^{i+1}_{i+1}` (one based `i`).
    pub fn k_alpha(&self, i: usize) -> Functional {
        self.lminus_entry(i - 1, i - 1).mul(&self.lplus_entry(i, i))
    }

    /// Representations `(L^{-,c}_v, L+_v)` whose entries are
    /// `r(v^j_i ⊗ ·)` and `r(· ⊗ v^i_j)`.
    pub fn adapted(&self, v: &Corep) -> (Arc<MatRep>, Arc<MatRep>) {
        let n = self.n();
        let m = v.dim();
        let lmc_vals: Vec<Matrix> = (0..m * m)
            .map(|e| self.lmc.value(v.entry(e / m, e % m)))
            .collect();
        let lp_vals: Vec<Matrix> = (0..m * m)
            .map(|e| self.lplus.value(v.entry(e / m, e % m)))
            .collect();
        let mut plus = Vec::with_capacity(n * n);
        let mut minus = Vec::with_capacity(n * n);
        for k in 0..n {
            for l in 0..n {
                let mut p = Matrix::zeros(m, m);
                let mut c = Matrix::zeros(m, m);
                for i in 0..m {
                    for j in 0..m {
                        p.set(i, j, lmc_vals[i * m + j].get(l, k).clone());
                        c.set(i, j, lp_vals[j * m + i].get(k, l).clone());
                    }
                }
                plus.push(p);
                minus.push(c);
            }
        }
        let label = v.label().to_string();
        (
            MatRep::new(format!("L-c[{label}]"), n, m, minus),
            MatRep::new(format!("L+[{label}]"), n, m, plus),
        )
    }

    /// `conv(L^{-,c}_v, L+_v)` and the functionals `l(v^i_j)`, row-major.
    pub fn l_corep(&self, v: &Corep) -> (Arc<MatRep>, Vec<Functional>) {
        let (mc, p) = self.adapted(v);
        let rep = MatRep::conv(&mc, &p);
        let fs = l_entries(&rep, v.dim());
        (rep, fs)
    }

    /// `ad_R(f) x = S(f') x f''`, housed in `conv(S(F), X, F)`.
    pub fn ad_r(&self, f: &Functional, x: &Functional) -> Result<Functional, DualError> {
        let a = MatRep::antipode_rep(f.rep())?;
        let rep = MatRep::conv_all(&[&a, x.rep(), f.rep()]);
        Ok(ad_in(&rep, f, x))
    }

    /// Entries of all `conv(L^{-,c} ⊗k1, L+ ⊗k2)` with `k1 + k2 = level`.
    pub fn separating_level(&self, level: usize) -> Vec<Arc<MatRep>> {
        (0..=level).map(|k1| self.power(k1, level - k1)).collect()
    }

    /// Decides `a = b` in the quotient algebra by evaluating the separating
    /// family. Equality is certified once the family level exceeds the
    /// degree of `a - b`; a difference is always an exact certificate.
    pub fn separated_equal(&self, a: &CoordElem, b: &CoordElem, policy: &Policy) -> Equality {
        let diff = a.sub(b);
        if diff.is_zero() {
            return Equality::Equal { degree: 0 };
        }
        let needed = diff.degree() + 1;
        for level in 0..=policy.d_max {
            for rep in self.separating_level(level) {
                if let Some((r, c, v)) = rep.value_sparse(&diff).first_nonzero() {
                    return Equality::Different {
                        witness: format!("{}[{r}][{c}]", rep.label()),
                        left: v,
                        right: Scalar::zero(),
                    };
                }
            }
            if level >= needed {
                return Equality::Equal { degree: level };
            }
        }
        Equality::Undecided { degree: policy.d_max }
    }

    /// Comatrix identity `Δ(v^i_j) = Σ_k v^i_k ⊗ v^k_j`, paired against
    /// `F ⊗ G` for all `F, G` in the separating family up to `level`.
    pub fn check_comatrix(&self, v: &Corep, level: usize) -> Equality {
        let reps: Vec<Arc<MatRep>> = (0..=level).flat_map(|l| self.separating_level(l)).collect();
        let m = v.dim();
        let n = self.n();
        // defect Δ(v^i_j) - Σ_k v^i_k ⊗ v^k_j in the free algebra, grouped by right leg
        let defects: Vec<BTreeMap<Word, CoordElem>> = (0..m * m)
            .map(|e| {
                let (i, j) = (e / m, e % m);
                let mut t: BTreeMap<Word, CoordElem> = BTreeMap::new();
                for (w, c) in v.entry(i, j).terms() {
                    for (a, b) in w.coproduct_splits(n) {
                        t.entry(b).or_insert_with(CoordElem::zero).add_term(a, c);
                    }
                }
                for k in 0..m {
                    for (a, ca) in v.entry(i, k).terms() {
                        for (b, cb) in v.entry(k, j).terms() {
                            t.entry(b.clone()).or_insert_with(CoordElem::zero).add_term(a.clone(), &-(ca * cb));
                        }
                    }
                }
                t.retain(|_, x| !x.is_zero());
                t
            })
            .collect();
        let failures: Vec<Equality> = reps
            .par_iter()
            .filter_map(|f| {
                for (e, t) in defects.iter().enumerate() {
                    // y_rc = Σ_b F(a-part)_rc b, to be killed by every G
                    let fvals: Vec<(&Word, SparseMat)> = t.iter().map(|(b, x)| (b, f.value_sparse(x))).collect();
                    for r in 0..f.dim() {
                        let mut ys: BTreeMap<usize, CoordElem> = BTreeMap::new();
                        for (b, fv) in &fvals {
                            for (c, x) in fv.row(r) {
                                ys.entry(*c).or_insert_with(CoordElem::zero).add_term((*b).clone(), x);
                            }
                        }
                        for (c, y) in ys {
                            for g in &reps {
                                if let Some((gr, gc, x)) = g.value_sparse(&y).first_nonzero() {
                                    return Some(Equality::Different {
                                        witness: format!(
                                            "({})[{r}][{c}] x ({})[{gr}][{gc}] on entry ({},{})",
                                            f.label(),
                                            g.label(),
                                            e / m,
                                            e % m
                                        ),
                                        left: x,
                                        right: Scalar::zero(),
                                    });
                                }
                            }
                        }
                    }
                }
                None
            })
            .collect();
        failures.into_iter().next().unwrap_or(Equality::Equal { degree: level })
    }

    /// Right-coideal and `ad_R`-invariance test for `span(basis)`, judged on
    /// words up to `degree`.
    pub fn coideal_check(&self, basis: &[Functional], degree: usize) -> Result<CoidealReport, DualError> {
        if basis.is_empty() {
            return Ok(CoidealReport { right_coideal: true, ad_invariant: true, degree });
        }
        let basis = unify(basis);
        let rep = basis[0].rep().clone();
        let d = rep.dim();
        // Δ(X) ∈ span(basis) ⊗ A°: a ↦ X(ab) for all words b
        let mut images = Vec::new();
        for x in &basis {
            let rows: Vec<usize> = {
                let mut r: Vec<usize> = x.terms().map(|(&(r, _), _)| r).collect();
                r.dedup();
                r
            };
            let mut span = EchelonBasis::new(rows.len() * d);
            for w in Word::all_up_to(degree, self.n()) {
                let val = rep.value_word(&w);
                let mut coeffs = vec![Scalar::zero(); rows.len() * d];
                for (&(r, c), alpha) in x.terms() {
                    let ri = rows.iter().position(|&z| z == r).unwrap();
                    for k in 0..d {
                        coeffs[ri * d + k].add_mul(alpha, val.get(k, c));
                    }
                }
                span.insert(coeffs);
                if span.is_full() {
                    break;
                }
            }
            for v in span.vectors() {
                let terms = v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(idx, s)| ((rows[idx / d], idx % d), s.clone()));
                images.push(Functional::combination(&rep, terms));
            }
        }
        let right_coideal = span_contains(&basis, &images, degree);
        let mut ad_images = Vec::new();
        for l in [&self.lplus, &self.lminus] {
            let a = MatRep::antipode_rep(l)?;
            let big = MatRep::conv_all(&[&a, &rep, l]);
            for i in 0..self.n() {
                for j in 0..self.n() {
                    let f = Functional::entry(l, i, j);
                    for x in &basis {
                        ad_images.push(ad_in(&big, &f, x));
                    }
                }
            }
        }
        let ad_invariant = span_contains(&basis, &ad_images, degree);
        Ok(CoidealReport { right_coideal, ad_invariant, degree })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealReport {
    pub right_coideal: bool,
    pub ad_invariant: bool,
    pub degree: usize,
}

impl CoidealReport {
    pub fn passed(&self) -> bool {
        self.right_coideal && self.ad_invariant
    }
}

/// `l(v^i_j) = Σ_k F[(k,k),(i,j)]` for `F = conv(L^{-,c}_v, L+_v)`.
pub(crate) fn l_entries(rep: &Arc<MatRep>, m: usize) -> Vec<Functional> {
    (0..m * m)
        .map(|e| {
            let (i, j) = (e / m, e % m);
            Functional::combination(rep, (0..m).map(|k| ((k * m + k, i * m + j), Scalar::one())))
        })
        .collect()
}

/// `ad_R(f) x` inside a prebuilt `conv(S(F), X, F)`.
pub(crate) fn ad_in(rep: &Arc<MatRep>, f: &Functional, x: &Functional) -> Functional {
    let df = f.rep().dim();
    let dx = x.rep().dim();
    assert_eq!(rep.dim(), df * dx * df);
    let mut terms = Vec::new();
    for (&(r, c), alpha) in f.terms() {
        for t in 0..df {
            for (&(a, b), beta) in x.terms() {
                let row = (t * dx + a) * df + t;
                let col = (r * dx + b) * df + c;
                terms.push(((row, col), alpha * beta));
            }
        }
    }
    Functional::combination(rep, terms)
}

fn digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in (0..len).rev() {
        out[d] = x % base;
        x /= base;
    }
    out
}
