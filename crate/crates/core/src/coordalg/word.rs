//! Words in the generators `u^i_j` and their formal linear combinations.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A monomial `u^{i1}_{j1} ... u^{im}_{jm}`, stored as generator indices
/// `i*N + j` (zero based). The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn generator(i: usize, j: usize, n: usize) -> Word {
        Word(vec![(i * n + j) as u8])
    }

    pub fn from_pairs(pairs: &[(usize, usize)], n: usize) -> Word {
        Word(pairs.iter().map(|&(i, j)| (i * n + j) as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// `(row, column)` of each letter.
    pub fn pairs(&self, n: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(move |&g| (g as usize / n, g as usize % n))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `ε(w)`: one for the unit, otherwise the product of `δ_ij` over letters.
    pub fn counit(&self, n: usize) -> bool {
        self.pairs(n).all(|(i, j)| i == j)
    }

    /// All `N^m` terms of `Δ(w) = Σ w' ⊗ w''`, each with coefficient one.
    pub fn coproduct_splits(&self, n: usize) -> Vec<(Word, Word)> {
        let pairs: Vec<_> = self.pairs(n).collect();
        let m = pairs.len();
        let total = n.pow(m as u32);
        let mut out = Vec::with_capacity(total);
        let mut mid = vec![0usize; m];
        for _ in 0..total {
            let left = Word(pairs.iter().zip(&mid).map(|(&(i, _), &k)| (i * n + k) as u8).collect());
            let right = Word(pairs.iter().zip(&mid).map(|(&(_, j), &k)| (k * n + j) as u8).collect());
            out.push((left, right));
            for d in (0..m).rev() {
                mid[d] += 1;
                if mid[d] < n {
                    break;
                }
                mid[d] = 0;
            }
        }
        out
    }

    /// All words of exactly the given degree in lexicographic order.
    pub fn all_of_degree(degree: usize, n: usize) -> Vec<Word> {
        let g = n * n;
        let count = g.pow(degree as u32);
        (0..count)
            .map(|mut idx| {
                let mut v = vec![0u8; degree];
                for d in (0..degree).rev() {
                    v[d] = (idx % g) as u8;
                    idx /= g;
                }
                Word(v)
            })
            .collect()
    }

    /// All words of degree at most `degree`, ordered by degree then lexicographically.
    pub fn all_up_to(degree: usize, n: usize) -> Vec<Word> {
        (0..=degree).flat_map(|d| Word::all_of_degree(d, n)).collect()
    }

    pub fn render(&self, n: usize) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.pairs(n)
            .map(|(i, j)| format!("u^{}_{}", i + 1, j + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A finite linear combination of words. No relations of the quantum group
/// are applied; two elements represent the same element of the quotient
/// only if every functional in a separating family agrees on them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoordElem {
    terms: BTreeMap<Word, Scalar>,
}

impl CoordElem {
    pub fn zero() -> CoordElem {
        CoordElem::default()
    }

    pub fn unit() -> CoordElem {
        CoordElem::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> CoordElem {
        CoordElem::from_term(w, Scalar::one())
    }

    pub fn from_term(w: Word, c: Scalar) -> CoordElem {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        CoordElem { terms }
    }

    pub fn generator(i: usize, j: usize, n: usize) -> CoordElem {
        CoordElem::from_word(Word::generator(i, j, n))
    }

    pub fn scalar(c: Scalar) -> CoordElem {
        CoordElem::from_term(Word::unit(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest word degree occurring, zero for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &CoordElem) -> CoordElem {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &CoordElem) -> CoordElem {
        self.add(&other.scale(&Scalar::from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> CoordElem {
        if c.is_zero() {
            return CoordElem::zero();
        }
        CoordElem {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul(&self, other: &CoordElem) -> CoordElem {
        let mut out = CoordElem::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), &(x * y));
            }
        }
        out
    }

    pub fn counit(&self, n: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in &self.terms {
            if w.counit(n) {
                acc = &acc + c;
            }
        }
        acc
    }

    /// Image under the anti-multiplicative extension of `table` on generators.
    pub fn anti_substitute(&self, table: &[CoordElem]) -> CoordElem {
        let mut out = CoordElem::zero();
        for (w, c) in &self.terms {
            let mut acc = CoordElem::scalar(c.clone());
            for &g in w.0.iter().rev() {
                acc = acc.mul(&table[g as usize]);
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn render(&self, n: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    w.render(n)
                } else {
                    format!("({c})*{}", w.render(n))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
