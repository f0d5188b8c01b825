//! Algebraic invariants checked on generated inputs.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use qfodc::coordalg::{CoordElem, Word};
use qfodc::dual::Dual;
use qfodc::linalg::{sparse_rank, sparse_rank_mod, Matrix};
use qfodc::scalar::{parse_scalar, Cyclotomic, FieldConfig, Scalar, Specialization, Zeta};

/// `Σ c_k p^e_k (+ w Σ ...)`, a Laurent polynomial in `p` with optional `w` part.
fn laurent(ext: Cyclotomic) -> impl Strategy<Value = Scalar> {
    let part = prop::collection::vec((-4i64..=4, -3i32..=3), 0..3).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Scalar::zero(), |acc, (c, e)| &acc + &(&Scalar::from_i64(c) * &Scalar::p_pow(e)))
    });
    (part.clone(), part).prop_map(move |(re, im)| match ext {
        Cyclotomic::Rational => re,
        _ => &re + &(&im * &Scalar::root_of_unity(ext)),
    })
}

/// Quotients of Laurent polynomials.
fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        Just(Cyclotomic::Rational),
        Just(Cyclotomic::Order3),
        Just(Cyclotomic::Order4)
    ]
    .prop_flat_map(|ext| (laurent(ext), laurent(ext)))
    .prop_map(|(a, b)| if b.is_zero() { a } else { a.div(&b).unwrap() })
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    prop_oneof![
        Just(Cyclotomic::Rational),
        Just(Cyclotomic::Order3),
        Just(Cyclotomic::Order4)
    ]
    .prop_flat_map(|ext| (laurent(ext), laurent(ext), laurent(ext), laurent(ext)))
    .prop_map(|(a, b, c, d)| {
        let q = if d.is_zero() { c.clone() } else { c.div(&d).unwrap() };
        (a, b, q)
    })
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(laurent(Cyclotomic::Rational), r * c).prop_map(move |v| {
            // sparsify so that rank deficiency is common
            let rows = v
                .chunks(c)
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, x)| if (i + j) % 3 == 0 { Scalar::zero() } else { x.clone() })
                        .collect()
                })
                .collect();
            Matrix::from_rows(rows)
        })
    })
}

fn sl2() -> &'static Arc<Dual> {
    static D: OnceLock<Arc<Dual>> = OnceLock::new();
    D.get_or_init(|| Arc::new(Dual::for_config(&FieldConfig::sl(2).unwrap()).unwrap()))
}

fn word(n: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, 0..n), 0..=max).prop_map(move |p| Word::from_pairs(&p, n))
}

fn element(n: usize) -> impl Strategy<Value = CoordElem> {
    prop::collection::vec((word(n, 2), -3i64..=3), 1..3).prop_map(|terms| {
        terms
            .into_iter()
            .fold(CoordElem::zero(), |acc, (w, c)| acc.add(&CoordElem::from_word(w).scale(&Scalar::from_i64(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_text_roundtrip(a in scalar()) {
        let text = a.to_string();
        prop_assert_eq!(parse_scalar(&text).unwrap(), a, "{}", text);
    }

    #[test]
    fn specialization_is_a_ring_map((a, b, _) in triple()) {
        let s = Specialization::default();
        let m = s.modulus;
        if let (Some(x), Some(y)) = (s.eval(&a), s.eval(&b)) {
            prop_assert_eq!(s.eval(&(&a * &b)), Some(s.mul(x, y)));
            prop_assert_eq!(s.eval(&(&a + &b)), Some((x + y) % m));
        }
    }

    #[test]
    fn zeta_group_and_text(k in 0u32..12, j in 0u32..12, order in prop::sample::select(vec![1u32, 2, 3, 4])) {
        let a = Zeta::new(k % order, order);
        let b = Zeta::new(j % order, order);
        prop_assert!(a.mul(&a.inverse()).is_one());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(Zeta::parse(&a.to_string()).unwrap(), a);
        prop_assert_eq!(a.mul(&b).value().unwrap(), &a.value().unwrap() * &b.value().unwrap());
    }

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank(), m.rref().1.len());
    }

    #[test]
    fn nullspace_is_annihilated(m in small_matrix()) {
        let null = m.nullspace();
        prop_assert_eq!(null.len() + m.rank(), m.cols());
        for v in &null {
            for i in 0..m.rows() {
                let mut acc = Scalar::zero();
                for (j, x) in v.iter().enumerate() {
                    acc.add_mul(m.get(i, j), x);
                }
                prop_assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn modular_rank_bounds_exact_rank(m in small_matrix()) {
        let rows: Vec<Vec<(usize, Scalar)>> = (0..m.rows())
            .map(|i| m.row(i).iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let exact = sparse_rank(&rows, m.cols());
        prop_assert_eq!(exact, m.rref().1.len());
        if let Some(r) = sparse_rank_mod(&rows, &Specialization::default()) {
            prop_assert!(r <= exact);
        }
    }

    #[test]
    fn antipode_reverses_products(a in element(2), b in element(2)) {
        let alg = sl2().alg();
        prop_assert_eq!(alg.antipode(&a.mul(&b)), alg.antipode(&b).mul(&alg.antipode(&a)));
    }

    #[test]
    fn counit_is_multiplicative(a in element(2), b in element(2)) {
        prop_assert_eq!(a.mul(&b).counit(2), &a.counit(2) * &b.counit(2));
        prop_assert_eq!(sl2().alg().counit(&sl2().alg().antipode(&a)), a.counit(2));
    }

    #[test]
    fn l_functionals_are_multiplicative(a in word(2, 3), b in word(2, 3)) {
        for rep in [sl2().lplus(), sl2().lminus()] {
            prop_assert_eq!(rep.value_word(&a.concat(&b)), rep.value_word(&a).mul(&rep.value_word(&b)));
        }
    }

    #[test]
    fn gram_entries_match_the_pairing(a in word(2, 2), b in word(2, 2)) {
        let g = sl2().gram_matrix(&[a.clone(), b.clone()]);
        let (x, y) = (CoordElem::from_word(a), CoordElem::from_word(b));
        prop_assert_eq!(g.get(0, 1), &sl2().q_form(&x, &y));
        prop_assert_eq!(g.get(1, 0), &sl2().q_form(&y, &x));
    }
}
