//! Acceptance criteria. Each test writes one `PASS`/`FAIL` line to stdout
//! (bypassing the capture of the test harness) and then asserts.

use std::io::Write;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qfodc::coordalg::{CoordElem, Registry, Word, YoungWeight};
use qfodc::dual::{
    functional_equal, rank_at, span_ranks, stabilized_rank, Dual, MatRep, Policy,
};
use qfodc::fodc::{
    central_element, check_central, classify, direct_sum, quantum_lie, quantum_lie_from_central,
    tensor_identity_check, Calculus, LibraryConfig,
};
use qfodc::linalg::Matrix;
use qfodc::rmat::RData;
use qfodc::scalar::{FieldConfig, Zeta};

fn report(id: u32, title: &str, ok: bool, detail: &str) {
    let line = format!(
        "{} criterion {id:>2} {title}: {detail}\n",
        if ok { "PASS" } else { "FAIL" }
    );
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
    assert!(ok, "criterion {id} failed: {detail}");
}

fn sl(n: usize) -> FieldConfig {
    FieldConfig::sl(n).unwrap()
}

fn sp(rank: usize) -> FieldConfig {
    FieldConfig::sp(rank, 1).unwrap()
}

fn dual(cfg: &FieldConfig) -> Arc<Dual> {
    Arc::new(Dual::for_config(cfg).unwrap())
}

fn zeta(s: &str, cfg: &FieldConfig) -> Zeta {
    Zeta::parse_admissible(s, cfg).unwrap()
}

#[test]
fn c01_r_matrix_validity() {
    let mut parts = Vec::new();
    let mut ok = true;
    for (cfg, expected) in [(sl(2), 2), (sl(3), 2), (sl(4), 2), (sp(1), 3), (sp(2), 3)] {
        let r = RData::build(&cfg).unwrap();
        let ybe = r.check_yang_baxter() && r.check_braid_relation();
        let degree = r.minimal_polynomial().len() - 1;
        let good = ybe && degree == expected;
        ok &= good;
        parts.push(format!(
            "{} ybe={} degree={degree} (expected {expected}){}",
            cfg.label(),
            ybe,
            if good { "" } else { " MISMATCH" }
        ));
    }
    report(1, "R-matrix validity", ok, &parts.join("; "));
}

/// `⟨f, a x b⟩` for all relations `x` and words `a, b` with total degree at most 3.
fn relations_vanish(d: &Dual, rep: &MatRep) -> bool {
    let alg = d.alg();
    let mut rels = alg.frt_relations();
    rels.extend(alg.antipode_relations());
    let n = d.n();
    rels.iter().all(|x| {
        let room = 3usize.saturating_sub(x.degree());
        Word::all_up_to(room, n).iter().all(|a| {
            Word::all_up_to(room - a.degree(), n).iter().all(|b| {
                let e = CoordElem::from_word(a.clone()).mul(x).mul(&CoordElem::from_word(b.clone()));
                rep.value(&e).is_zero()
            })
        })
    })
}

/// `⟨f^i_j, ab⟩ = Σ_k ⟨f^i_k, a⟩⟨f^k_j, b⟩` for every cut of every word up to degree 3.
fn multiplicative(d: &Dual, rep: &MatRep) -> bool {
    Word::all_up_to(3, d.n()).iter().all(|w| {
        let whole = rep.value_word(w);
        let letters = w.letters();
        (0..=letters.len()).all(|cut| {
            let a = Word(letters[..cut].to_vec());
            let b = Word(letters[cut..].to_vec());
            rep.value_word(&a).mul(&rep.value_word(&b)) == whole
        })
    })
}

/// `l+^i_j(u^k_l) = z R^{ki}_{lj}` and `l-^i_j(u^k_l) = z^{-1} (R^{-1})^{ik}_{jl}`.
fn generator_values(d: &Dual) -> bool {
    let n = d.n();
    let r = d.alg().rdata();
    let z = r.z().clone();
    let zi = z.inv().unwrap();
    let mut ok = true;
    for k in 0..n {
        for l in 0..n {
            let g = d.alg().generator(k, l);
            let (p, m) = (d.lplus().value(&g), d.lminus().value(&g));
            for i in 0..n {
                for j in 0..n {
                    ok &= *p.get(i, j) == &z * r.entry(k, i, l, j);
                    ok &= *m.get(i, j) == &zi * r.inv_entry(i, k, j, l);
                }
            }
        }
    }
    ok
}

/// `Σ_k S(l-^i_k) l-^k_j = δ_ij ε`, with `S(f)(a) = f(S(a))` on the coordinate side.
fn convolution_inverse(d: &Dual) -> bool {
    let alg = d.alg();
    let n = d.n();
    let lm = d.lminus();
    Word::all_up_to(3, n).iter().all(|w| {
        let mut total = Matrix::zeros(n, n);
        for (a, b) in w.coproduct_splits(n) {
            let sa = lm.value(&alg.antipode(&CoordElem::from_word(a)));
            total = total.add(&sa.mul(&lm.value_word(&b)));
        }
        let expected = Matrix::identity(n).scale(&CoordElem::from_word(w.clone()).counit(n));
        total == expected
    })
}

#[test]
fn c02_hopf_duality_engine() {
    let mut parts = Vec::new();
    let mut ok = true;
    for cfg in [sl(2), sl(3)] {
        let d = dual(&cfg);
        let rel = relations_vanish(&d, d.lplus()) && relations_vanish(&d, d.lminus());
        let cop = generator_values(&d) && multiplicative(&d, d.lplus()) && multiplicative(&d, d.lminus());
        let inv = convolution_inverse(&d);
        ok &= rel && cop && inv;
        parts.push(format!("{} relations={rel} multiplicative={cop} inverse={inv}", cfg.label()));
    }
    report(2, "Hopf-duality engine", ok, &parts.join("; "));
}

#[test]
fn c03_minor_tau_identity() {
    let mut parts = Vec::new();
    let mut ok = true;
    for (cfg, ks) in [(sl(2), vec![1]), (sl(3), vec![1, 2]), (sp(1), vec![1])] {
        let d = dual(&cfg);
        for k in ks {
            let minor = d.alg().principal_minor(k).unwrap();
            let e = functional_equal(&d.l_of(&minor), &d.tau_functional(&YoungWeight::fundamental(k)), 4);
            ok &= e.is_equal();
            parts.push(format!("{} k={k} {:?}", cfg.label(), e));
        }
    }
    report(3, "minor-tau identity", ok, &parts.join("; "));
}

fn criterion4_calculi() -> Vec<(FieldConfig, Arc<Dual>, Calculus)> {
    let mut out = Vec::new();
    for (cfg, zs) in [(sl(2), vec!["1", "-1"]), (sl(3), vec!["1", "w", "w^2"])] {
        let d = dual(&cfg);
        let reg = Registry::new(d.clone());
        let u = reg.resolve("u").unwrap();
        for z in zs {
            let ql = quantum_lie(&d, &u, &zeta(z, &cfg), &Policy::default()).unwrap();
            out.push((cfg.clone(), d.clone(), Calculus::new(ql)));
        }
    }
    out
}

#[test]
fn c04_dimension_counts() {
    let mut parts = Vec::new();
    let mut ok = true;
    for (cfg, _, cal) in criterion4_calculi() {
        let m2 = cal.lie.invariant_dim();
        let with_eps = stabilized_rank(&cal.lie.with_eps(), &Policy::default()).unwrap();
        let good = cal.lie.certified_dim.value == m2 && with_eps.value == m2 + 1;
        ok &= good;
        parts.push(format!(
            "{} zeta={} dim={} (deg {}) with eps={} (deg {})",
            cfg.label(),
            cal.lie.zeta,
            cal.lie.certified_dim.value,
            cal.lie.certified_dim.degree,
            with_eps.value,
            with_eps.degree
        ));
    }
    let expected_dims = [4, 4, 9, 9, 9];
    let dims: Vec<usize> = criterion4_calculi().iter().map(|(_, _, c)| c.lie.certified_dim.value).collect();
    ok &= dims == expected_dims;
    report(4, "dimension counts", ok, &parts.join("; "));
}

#[test]
fn c05_centrality_and_nonvanishing() {
    let cfg = sl(2);
    let d = dual(&cfg);
    let reg = Registry::new(d.clone());
    let u = reg.resolve("u").unwrap();
    let z = zeta("-1", &cfg);
    let c = central_element(&d, &u, &z).unwrap();
    let central = check_central(&d, &c, 3);
    let ql = quantum_lie(&d, &u, &z, &Policy::default()).unwrap();
    let eps = d.eps_functional();
    let projected = c.sub(&eps.scale(&c.value_at_unit()));
    let nonzero = rank_at(std::slice::from_ref(&projected), 3) == 1;
    let (rx, rp, union) = span_ranks(&ql.basis, &[projected], 3);
    let inside = union == rx;
    let ok = central.is_equal() && nonzero && inside && rp == 1;
    report(
        5,
        "centrality and nonvanishing",
        ok,
        &format!("SL_q(2) zeta=-1 central {central:?}; P(c) nonzero={nonzero}; ranks X={rx} P(c)={rp} union={union}"),
    );
}

#[test]
fn c06_central_generation() {
    let cfg = sl(2);
    let d = dual(&cfg);
    let reg = Registry::new(d.clone());
    let u = reg.resolve("u").unwrap();
    let z = zeta("-1", &cfg);
    let c = central_element(&d, &u, &z).unwrap();
    let chi = quantum_lie_from_central(&d, &c, 3).unwrap();
    let ql = quantum_lie(&d, &u, &z, &Policy::default()).unwrap();
    let (a, b, union) = span_ranks(&chi, &ql.basis, 3);
    let ok = a == union && b == union && union == 4;
    report(
        6,
        "central generation",
        ok,
        &format!("SL_q(2) zeta=-1 rank(chi)={a} rank(X)={b} union={union} at degree 3"),
    );
}

#[test]
fn c07_coideal_invariance() {
    let mut parts = Vec::new();
    let mut ok = true;
    for (cfg, d, cal) in criterion4_calculi() {
        let r = d.coideal_check(&cal.lie.with_eps(), 3).unwrap();
        ok &= r.passed();
        parts.push(format!(
            "{} zeta={} coideal={} ad={} (deg {})",
            cfg.label(),
            cal.lie.zeta,
            r.right_coideal,
            r.ad_invariant,
            r.degree
        ));
    }
    report(7, "coideal and ad-invariance", ok, &parts.join("; "));
}

#[test]
fn c08_tensor_identity() {
    let cfg = sl(2);
    let d = dual(&cfg);
    let reg = Registry::new(d.clone());
    let u = reg.resolve("u").unwrap();
    let one = zeta("1", &cfg);
    let c = tensor_identity_check(&d, &u, &u, &one, &one, 3).unwrap();
    report(
        8,
        "tensor identity",
        c.equal(),
        &format!("SL_q(2) X(u⊗u) vs X(u)X(u): ranks {} {} union {} at degree {}", c.left, c.right, c.union, c.degree),
    );
}

#[test]
fn c09_direct_sums() {
    let cfg = sl(2);
    let d = dual(&cfg);
    let reg = Registry::new(d.clone());
    let policy = Policy::default();
    let minus = zeta("-1", &cfg);
    let plus = zeta("1", &cfg);
    let one = reg.resolve("1").unwrap();
    let u = reg.resolve("u").unwrap();
    let parts = [
        Calculus::new(quantum_lie(&d, &one, &minus, &policy).unwrap()),
        Calculus::new(quantum_lie(&d, &u, &minus, &policy).unwrap()),
    ];
    let sum = direct_sum(&parts, &policy).unwrap();

    let sum_minus = quantum_lie(&d, &reg.resolve("sum(1,u)").unwrap(), &minus, &policy).unwrap();
    let rep_minus = classify(&reg, &sum_minus.basis, &LibraryConfig::default(), &policy).unwrap();
    let mut dims_minus: Vec<usize> = rep_minus.components.iter().map(|c| c.dim).collect();
    dims_minus.sort();

    let sum_plus = quantum_lie(&d, &reg.resolve("sum(1,u)").unwrap(), &plus, &policy).unwrap();
    let rep_plus = classify(&reg, &sum_plus.basis, &LibraryConfig::default(), &policy).unwrap();

    let ok = sum.part_ranks == [1, 4]
        && sum.union_rank == 5
        && dims_minus == [1, 4]
        && rep_minus.total_dim == 5
        && rep_minus.complete
        && sum_plus.certified_dim.value == 4
        && rep_plus.total_dim == 4
        && rep_plus.complete;
    report(
        9,
        "direct sums",
        ok,
        &format!(
            "Γ_-1(1)⊕Γ_-1(u) parts {:?} union {}; classify Γ_-1(1⊕u) dims {:?} total {}; Γ_1(1⊕u) rank {} classify total {}",
            sum.part_ranks, sum.union_rank, dims_minus, rep_minus.total_dim, sum_plus.certified_dim.value, rep_plus.total_dim
        ),
    );
}

#[test]
fn c10_factorizability() {
    let cfg = sl(2);
    let d = dual(&cfg);
    let words: Vec<CoordElem> = Word::all_up_to(2, d.n()).into_iter().map(CoordElem::from_word).collect();
    let rows: Vec<Vec<_>> = words
        .iter()
        .map(|a| words.iter().map(|b| d.q_form(a, b)).collect())
        .collect();
    let rank = Matrix::from_rows(rows).rank();
    report(
        10,
        "factorizability",
        rank == 14,
        &format!("SL_q(2) Gram matrix over {} words of degree <= 2 has rank {rank} (expected 14)", words.len()),
    );
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> CoordElem {
    let mut e = CoordElem::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let degree = rng.gen_range(0..=2);
        let letters: Vec<(usize, usize)> = (0..degree).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let c = qfodc::scalar::Scalar::from_i64(rng.gen_range(1..=3));
        e = e.add(&CoordElem::from_word(Word::from_pairs(&letters, n)).scale(&c));
    }
    e
}

#[test]
fn c11_leibniz_and_triviality() {
    let mut parts = Vec::new();
    let mut ok = true;
    let policy = Policy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (cfg, d, cal) in criterion4_calculi() {
        let n = d.n();
        let mut passed = 0;
        for _ in 0..20 {
            let a = random_element(&mut rng, n);
            let b = random_element(&mut rng, n);
            if cal.leibniz_holds(&d, &a, &b, &policy).is_equal() {
                passed += 1;
            }
        }
        let d1 = cal.differential(&CoordElem::unit()).iter().all(CoordElem::is_zero);
        let x1 = cal.lie.basis.iter().all(|x| x.value_at_unit().is_zero());
        ok &= passed == 20 && d1 && x1;
        parts.push(format!("{} zeta={} leibniz {passed}/20 d(1)=0 {d1} X(1)=0 {x1}", cfg.label(), cal.lie.zeta));
    }
    for cfg in [sl(2), sl(3)] {
        let d = dual(&cfg);
        let reg = Registry::new(d.clone());
        let one = reg.resolve("1").unwrap();
        let cal = Calculus::new(quantum_lie(&d, &one, &zeta("1", &cfg), &policy).unwrap());
        let zero = Word::all_up_to(3, d.n()).into_iter().all(|w| {
            cal.differential(&CoordElem::from_word(w))
                .iter()
                .all(|c| d.separated_equal(c, &CoordElem::zero(), &policy).is_equal())
        });
        ok &= zero && cal.lie.certified_dim.value == 0;
        parts.push(format!("{} trivial calculus d=0 on degree <= 3: {zero}", cfg.label()));
    }
    report(11, "Leibniz and triviality", ok, &parts.join("; "));
}
