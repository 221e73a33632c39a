use super::*;

fn cfg() -> EMConfig {
    EMConfig::default()
}

#[test]
fn jets_of_binomial() {
    // binom(w+1, 2) = (w+1)w/2 at w = 0: 0 + w'/2 + w'^2/2
    let j = binomial_jets(0, 2);
    assert_eq!(j[2], [Rational::new(), Rational::from((1, 2)), Rational::from((1, 2))]);
    // value jets match the exact generalized binomial
    let j = binomial_jets(-2, 8);
    for (l, c) in j.iter().enumerate() {
        assert_eq!(c[0], Rational::from(binomial(l as i64 - 3, l as i64)));
    }
}

#[test]
fn oracle_examples() {
    let c = cfg();
    for (n, r, s) in [(2u32, 1u32, 0.0), (3, 2, 0.25), (5, 1, 0.1)] {
        let p = SphereProblem::new(n, r, s).unwrap();
        let a = oracle_log_det(&p, &c).unwrap();
        let b = log_higher_det(&p, &c).unwrap();
        assert_eq!(a.path, DetPath::Oracle);
        assert!(a.log_det.sub(&b.log_det).to_f64().abs() < 1e-8, "n={n} r={r} s={s}");
    }
}

#[test]
fn oracle_refuses_outside_disc() {
    let p = SphereProblem::new(4, 1, 0.34).unwrap();
    assert!(matches!(oracle_log_det(&p, &cfg()), Err(Error::Domain(_))));
    let p = SphereProblem::yamabe(3).unwrap();
    assert!(oracle_log_det(&p, &cfg()).is_err());
}

#[test]
fn pole_term_matches_splitting_constant() {
    // Only d with l = 2r+d-1 contributes a digamma; the oracle and the
    // splitting route must agree on each block, which pins that constant.
    let c = cfg();
    let p = SphereProblem::new(1, 2, 0.2).unwrap();
    let a = oracle_log_det(&p, &c).unwrap().log_det;
    let b = crate::spectral::log_det_from_blocks(&p, crate::spectral::BlockPath::Splitting, &c).unwrap();
    assert!(a.sub(&b).to_f64().abs() < 1e-20);
}

#[test]
fn determinant_grid_agrees() {
    let reports = verify_determinants(&cfg()).unwrap();
    for r in &reports {
        assert!(r.passed, "{r}");
    }
    assert_eq!(reports.len(), 60 + 24);
}

#[test]
fn quadrature_basics() {
    let (v, _) = integrate(|x| Ok(x.exp()), 0.0, 1.0, 1e-13).unwrap();
    assert!((v - (1f64.exp() - 1.0)).abs() < 1e-13);
    let (v, _) = integrate(|x| Ok(x.sqrt()), 0.0, 1.0, 1e-10).unwrap();
    assert!((v - 2.0 / 3.0).abs() < 1e-10);
    assert_eq!(integrate(Ok, 0.3, 0.3, 1e-10).unwrap().0, 0.0);
}

#[test]
fn phi_examples() {
    let c = cfg();
    assert!(check_phi(2, 2, 0.3, 1.2, &c).unwrap().passed);
    assert!(check_phi(1, 1, 0.5, 1.0, &c).unwrap().passed);
    assert!(phi_closed_form(2, 2, 0.0, 1.2, &c).unwrap().to_f64().abs() < 1e-25);
    assert_eq!(phi_quadrature(2, 2, 0.0, 1.2, &c).unwrap().to_f64(), 0.0);
    assert!(phi_quadrature(0, 2, 0.3, 1.2, &c).is_err());
    assert!(phi_quadrature(1, 1, 0.3, 0.2, &c).is_err());
}

#[test]
fn integral_lemma_examples() {
    let c = cfg();
    let rep = check_int_mg_lemma(1, 0, 0.5, 1.0, &c).unwrap();
    assert!(rep.passed, "{rep}");
    let rep = check_int_mg_lemma(2, 1, 0.25, 1.5, &c).unwrap();
    assert!(rep.passed, "{rep}");
    let rep = check_int_mg_lemma(3, 2, 0.0, 1.5, &c).unwrap();
    assert!(rep.main_value.to_f64().abs() < 1e-25 && rep.passed);
}

#[test]
fn combinatorial_lemmas_exact() {
    assert_eq!(lemma_i_sum(2, 3), Rational::from(2));
    let reports = check_combinatorial_lemmas(6, 12, 8);
    for r in &reports {
        assert!(r.passed, "{r}");
    }
    for m in 0..=8i64 {
        for r in 1..=6i64 {
            for l in 1..=m {
                assert_eq!(lemma_k_sum(m, r, l), 0);
            }
        }
    }
}

#[test]
fn polynomial_and_gamma_suites() {
    assert!(verify_polynomials().iter().all(|r| r.passed));
    let g = verify_gammas(&cfg()).unwrap();
    for r in &g {
        assert!(r.passed, "{r}");
    }
}

#[test]
fn oracle_is_deterministic() {
    let c = cfg();
    let p = SphereProblem::new(4, 3, -0.3).unwrap();
    let a = oracle_log_det(&p, &c).unwrap();
    let b = oracle_log_det(&p, &c).unwrap();
    assert_eq!(a, b);
    let a = verify_combinatorics();
    assert_eq!(a, verify_combinatorics());
}
