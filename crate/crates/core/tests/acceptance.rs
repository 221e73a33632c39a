//! Acceptance criteria, one test per criterion. Each prints a single
//! `PASS`/`FAIL` line with its measured runtime and then asserts.

use std::time::{Duration, Instant};

use rug::Float;
use zetadet::exact::{bernoulli_polynomial, binomial, sign, Rational};
use zetadet::hurwitz::{hurwitz_zeta, hurwitz_zeta_dw};
use zetadet::oracle::{
    check_combinatorial_lemmas, check_int_mg_lemma, check_phi, oracle_log_det, PHI_PAIRS, PHI_T, PHI_Z,
};
use zetadet::poly::RationalPolynomial as Poly;
use zetadet::spectral::{
    log_det_laplacian, log_det_yamabe, log_higher_det, log_i_d, BlockPath, DetPath, SphereProblem,
};
use zetadet::sphere::{
    alpha_minus_sum, alpha_plus_sum, alpha_poly, beta_minus_sum, beta_plus_sum, beta_poly, ckn, ckn_closed,
    f_poly, n_check, p_n, series::check_t_generating_function, shift_gap, t_poly, xi_minus, xi_plus,
    zeta_tilde_poly,
};
use zetadet::EMConfig;

const LAPLACIAN: [f64; 6] = [39.47841760, 3.195311486, 3.338851214, 1.736943483, 1.762919348, 1.290018366];
const YAMABE: [f64; 6] = [16.0, 3.195311486, 1.136114502, 1.045620218, 0.9885797293, 0.9952570855];
const GOLDEN_REL_TOL: f64 = 5e-9;

fn cfg() -> EMConfig {
    EMConfig::default()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn pq(c: &[(i64, i64)]) -> Poly {
    Poly::from_coeffs(c.iter().map(|&(n, d)| q(n, d)).collect())
}

/// Prints the verdict line and fails the test when a check failed or the
/// runtime limit was exceeded.
fn verdict(id: &str, what: &str, failures: &[String], elapsed: Duration, limit: Duration) {
    let slow = elapsed > limit;
    let ok = failures.is_empty() && !slow;
    println!(
        "{} criterion {id}: {what} ({} failures, {:.2?} of {:.0?} allowed)",
        if ok { "PASS" } else { "FAIL" },
        failures.len(),
        elapsed,
        limit
    );
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id}: {failures:?}");
    assert!(!slow, "criterion {id}: {elapsed:?} exceeds {limit:?}");
}

fn golden(id: &str, values: &[f64; 6], f: fn(u32, DetPath, &EMConfig) -> zetadet::Result<zetadet::spectral::DetResult>) {
    let start = Instant::now();
    let c = cfg();
    let mut failures = Vec::new();
    for n in 1..=6u32 {
        let want = values[n as usize - 1];
        for path in [DetPath::ClosedFormR1, DetPath::Factorization] {
            let got = f(n, path, &c).unwrap().det().to_f64();
            let rel = (got - want).abs() / want;
            if rel > GOLDEN_REL_TOL {
                failures.push(format!("n={n} {path}: {got} vs {want} (rel {rel:.2e})"));
            }
        }
    }
    let what = format!("published determinants n=1..6, both paths, rel ≤ {GOLDEN_REL_TOL:e}");
    verdict(id, &what, &failures, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn criterion_1_laplacian_determinants() {
    golden("1", &LAPLACIAN, log_det_laplacian);
}

#[test]
fn criterion_2_yamabe_determinants() {
    golden("2", &YAMABE, log_det_yamabe);
}

#[test]
fn criterion_3_exact_polynomials() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut check = |ok: bool, name: String| {
        if !ok {
            failures.push(name);
        }
    };
    let table: Vec<(u32, i64, Poly)> = vec![
        (1, 0, pq(&[(2, 1)])),
        (2, 0, pq(&[(0, 1), (2, 1)])),
        (2, 1, pq(&[(2, 1)])),
        (3, 0, pq(&[(0, 1), (0, 1), (1, 1)])),
        (3, 1, pq(&[(0, 1), (2, 1)])),
        (3, 2, pq(&[(1, 1)])),
        (4, 0, pq(&[(0, 1), (-1, 12), (0, 1), (1, 3)])),
        (4, 1, pq(&[(-1, 12), (0, 1), (1, 1)])),
        (4, 2, pq(&[(0, 1), (1, 1)])),
        (4, 3, pq(&[(1, 3)])),
        (5, 0, pq(&[(0, 1), (0, 1), (-1, 12), (0, 1), (1, 12)])),
        (5, 1, pq(&[(0, 1), (-1, 6), (0, 1), (1, 3)])),
        (5, 2, pq(&[(-1, 12), (0, 1), (1, 2)])),
        (5, 3, pq(&[(0, 1), (1, 3)])),
        (5, 4, pq(&[(1, 12)])),
        (6, 0, pq(&[(0, 1), (3, 320), (0, 1), (-1, 24), (0, 1), (1, 60)])),
        (6, 1, pq(&[(3, 320), (0, 1), (-1, 8), (0, 1), (1, 12)])),
        (6, 2, pq(&[(0, 1), (-1, 8), (0, 1), (1, 6)])),
        (6, 3, pq(&[(-1, 24), (0, 1), (1, 6)])),
        (6, 4, pq(&[(0, 1), (1, 12)])),
        (6, 5, pq(&[(1, 60)])),
    ];
    check(table.len() == 21, "table size".into());
    for (n, d, expect) in table {
        check(t_poly(n, d) == expect, format!("T[{n},{d}]"));
    }

    let s2 = Poly::monomial(1, 2);
    let f1 = |c: &[i64], den: i64| -> Poly { (&Poly::from_ints(c) * &s2).scale(&q(1, den)) };
    check(f_poly(2, 1) == Poly::monomial(2, 2), "f2".into());
    check(f_poly(4, 1) == f1(&[-3, 0, 8], 36), "f4".into());
    check(f_poly(6, 1) == f1(&[405, 0, -1200, 0, 368], 43200), "f6".into());
    check(f_poly(8, 1) == f1(&[-70875, 0, 217560, 0, -90160, 0, 8448], 50_803_200), "f8".into());
    check(
        f_poly(10, 1) == f1(&[17_364_375, 0, -54_247_200, 0, 25_425_120, 0, -3_548_160, 0, 144_128], 73_156_608_000),
        "f10".into(),
    );

    // β examples at depths 1, 2, 3
    for n in 1..=6u32 {
        let ni = n as i64;
        let gap = shift_gap(n);
        for l in 1..ni {
            check(beta_poly(n, 1, l) == Poly::constant(-1), format!("β1 n={n} l={l}"));
            check(beta_poly(n, 2, l) == -&gap, format!("β2 n={n} l={l}"));
            check(beta_poly(n, 3, l) == -&gap.pow(2), format!("β3 n={n} l={l}"));
        }
        check(beta_poly(n, 1, ni) == Poly::constant(-2), format!("β1 n={n} l=n"));
        check(beta_poly(n, 2, ni) == gap.scale(&q(-2, 1)), format!("β2 n={n} l=n"));
        check(beta_poly(n, 2, ni + 1) == Poly::constant(ni * (ni + 1)), format!("β2 n={n} l=n+1"));
        check(beta_poly(n, 2, ni + 2) == Poly::constant(-2 * ni * (ni + 1)), format!("β2 n={n} l=n+2"));
        let m = ni * (ni + 1);
        check(beta_poly(n, 3, ni) == gap.pow(2).scale(&q(-2, 1)), format!("β3 n={n} l=n"));
        check(
            beta_poly(n, 3, ni + 1) == Poly::from_coeffs(vec![q(m * (ni * ni + 1), 2), q(0, 1), q(-2 * m, 1)]),
            format!("β3 n={n} l=n+1"),
        );
        check(
            beta_poly(n, 3, ni + 2) == Poly::from_coeffs(vec![q(-m * (2 * ni * ni + 5 * ni + 7), 1), q(0, 1), q(4 * m, 1)]),
            format!("β3 n={n} l=n+2"),
        );
        check(beta_poly(n, 3, ni + 3) == Poly::constant(3 * m * (ni + 2) * (ni + 3)), format!("β3 n={n} l=n+3"));
        check(beta_poly(n, 3, ni + 4) == Poly::constant(-2 * m * (ni + 2) * (ni + 3)), format!("β3 n={n} l=n+4"));
    }

    // α, β, T identities for n ≤ 5
    for n in 1..=5u32 {
        let ni = n as i64;
        for d in 0..ni {
            let t = t_poly(n, d);
            check(t.derivative() == t_poly(n, d + 1).scale(&q(d + 1, 1)), format!("T' n={n} d={d}"));
            check(t.reflect() == t.scale(&q(sign(ni + d + 1), 1)), format!("T parity n={n} d={d}"));
            let mut rhs = Poly::zero();
            for l in d..ni {
                let c = Rational::from(binomial(l, d));
                rhs = &rhs + &(&Poly::monomial(2, 1).pow((l - d) as u32) * &t_poly(n, l).reflect()).scale(&c);
            }
            check(t == rhs, format!("T shift n={n} d={d}"));
        }
        for r in 1..=4u32 {
            let ri = r as i64;
            for k in ri..=(2 * ri + ni - 2) {
                let a = alpha_poly(n, r, k);
                check(alpha_plus_sum(n, r, k) == a, format!("α+ n={n} r={r} k={k}"));
                check(alpha_minus_sum(n, r, k).reflect() == a, format!("α- n={n} r={r} k={k}"));
            }
            let lmax = 2 * ri + ni - 2;
            for l in 1..=lmax {
                let b = beta_poly(n, r, l);
                check(b.is_even(), format!("β even n={n} r={r} l={l}"));
                check(beta_plus_sum(n, r, l) == b, format!("β+ n={n} r={r} l={l}"));
                check(beta_minus_sum(n, r, l) == b, format!("β- n={n} r={r} l={l}"));
            }
            for si in -6..=6i64 {
                let s = q(si, 4);
                let x = Poly::x();
                let lhs = (ri..=lmax).fold(Poly::zero(), |acc, k| {
                    &acc + &Poly::monomial(alpha_poly(n, r, k).eval(&s), k as usize - 1)
                });
                let p = p_n(n).compose(&Poly::linear(Rational::from(-&s)));
                let rhs = -&(&(&p * &x.pow(r - 1)) * &Poly::linear(Rational::from(-2 * &s)).pow(r - 1));
                check(lhs == rhs, format!("α generating n={n} r={r} s={s}"));
                let lhs = (1..=lmax).fold(Poly::zero(), |acc, l| {
                    let binom = Poly::binomial(&Poly::linear(l - 1), l as usize - 1);
                    &acc + &binom.scale(&beta_poly(n, r, l).eval(&s))
                });
                let p = p_n(n).compose(&Poly::linear(n_check(n) + 1));
                let xp = Poly::linear(xi_plus(n).eval(&s)).pow(r - 1);
                let xm = Poly::linear(xi_minus(n).eval(&s)).pow(r - 1);
                check(lhs == -&(&(&p * &xp) * &xm), format!("β generating n={n} r={r} s={s}"));
            }
        }
    }
    check(check_t_generating_function(5, 12).is_ok(), "T generating series to order 12".into());
    verdict(
        "3",
        "T table, f examples, β examples, α/β/T identities exact",
        &failures,
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_4_block_paths() {
    let start = Instant::now();
    let c = cfg();
    let mut failures = Vec::new();
    let mut worst = 0f64;
    for n in 2..=4u32 {
        for r in 1..=3u32 {
            for s in [0.0, 0.2] {
                let p = SphereProblem::new(n, r, s).unwrap();
                for d in 0..n {
                    let a = log_i_d(&p, d, BlockPath::MilnorProduct, &c).unwrap();
                    let b = log_i_d(&p, d, BlockPath::Splitting, &c).unwrap();
                    let diff = a.sub(&b).to_f64().abs();
                    worst = worst.max(diff);
                    if diff > 1e-9 {
                        failures.push(format!("n={n} r={r} s={s} d={d}: {diff:.2e}"));
                    }
                }
            }
        }
    }
    let what = format!("log I^d Milnor product vs splitting ≤ 1e-9 (worst {worst:.1e})");
    verdict("4", &what, &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_5_oracle_equivalence() {
    let start = Instant::now();
    let c = cfg();
    let mut failures = Vec::new();
    let mut worst = 0f64;
    for n in 2..=5u32 {
        for r in 1..=3u32 {
            for s in [0.0, 0.1, -0.1, 0.3, -0.3] {
                let p = SphereProblem::new(n, r, s).unwrap();
                let a = oracle_log_det(&p, &c).unwrap().log_det;
                let b = log_higher_det(&p, &c).unwrap().log_det;
                let diff = a.sub(&b).to_f64().abs();
                worst = worst.max(diff);
                if diff > 1e-8 {
                    failures.push(format!("n={n} r={r} s={s}: {diff:.2e}"));
                }
            }
        }
    }
    let what = format!("oracle vs factorization ≤ 1e-8 on 60 grid points (worst {worst:.1e})");
    verdict("5", &what, &failures, start.elapsed(), Duration::from_secs(120));
}

#[test]
fn criterion_6_quadrature() {
    let start = Instant::now();
    let c = cfg();
    let mut failures = Vec::new();
    let mut worst = 0f64;
    for &(m, r) in &PHI_PAIRS {
        for &t in &PHI_T {
            for &z in &PHI_Z {
                for rep in [check_phi(m, r, t, z, &c).unwrap(), check_int_mg_lemma(r, m, t, z, &c).unwrap()] {
                    worst = worst.max(rep.abs_diff);
                    if !rep.passed || rep.tolerance > 1e-7 {
                        failures.push(rep.to_string());
                    }
                }
            }
        }
    }
    let what = format!("iterated digamma integral and log-Milnor integral vs closed forms ≤ 1e-7 (worst {worst:.1e})");
    verdict("6", &what, &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_7_combinatorial_lemmas() {
    let start = Instant::now();
    let mut failures: Vec<String> = check_combinatorial_lemmas(8, 20, 8)
        .into_iter()
        .filter(|r| !r.passed)
        .map(|r| r.to_string())
        .collect();
    for n in 1..=8u32 {
        for k in 0..=10u32 {
            for l in 0..=(k as i64) {
                if ckn(k, n, l) != ckn_closed(k, n, l) {
                    failures.push(format!("ckn k={k} n={n} l={l}"));
                }
            }
        }
    }
    verdict("7", "I, J, K and c^k_n exact", &failures, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn criterion_8_hurwitz_kernel() {
    let start = Instant::now();
    let c = cfg();
    let mut failures = Vec::new();
    for k in 1..=12usize {
        for z in [0.3, 1.0, 2.5] {
            let v = hurwitz_zeta(1 - k as i64, z, &c).unwrap();
            let b = bernoulli_polynomial(k).eval(&Rational::from_f64(z).unwrap()) / Rational::from(k as i64);
            let diff = Float::with_val(256, &v.value + &b).to_f64().abs();
            if diff > 1e-12 {
                failures.push(format!("ζ(1-{k}, {z}): {diff:.2e}"));
            }
        }
    }
    let h = 1e-6;
    for w in [-1.5, 0.5, 2.5] {
        for a in [0.5, 1.25, 3.0] {
            let d = hurwitz_zeta_dw(w, a, &c).unwrap().to_f64();
            let p = hurwitz_zeta(w + h, a, &c).unwrap().to_f64();
            let m = hurwitz_zeta(w - h, a, &c).unwrap().to_f64();
            let diff = ((p - m) / (2.0 * h) - d).abs();
            if diff > 1e-8 {
                failures.push(format!("∂w at w={w} a={a}: {diff:.2e}"));
            }
        }
    }
    for z in [q(1, 2), q(1, 1), q(2, 1)] {
        let d = hurwitz_zeta_dw(0i64, z.clone(), &c).unwrap().to_f64().exp();
        let zf = Float::with_val(128, &z);
        let gamma = zf.gamma().to_f64();
        let expect = gamma / (2.0 * std::f64::consts::PI).sqrt();
        if (d - expect).abs() > 1e-10 {
            failures.push(format!("Lerch at z={z}"));
        }
    }
    verdict("8", "Bernoulli values, central differences, Lerch", &failures, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_9_rational_special_values() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in [1u32, 3, 5, 7] {
        for r in 1..=3u32 {
            if zeta_tilde_poly(n, r) != -&shift_gap(n).pow(r - 1) {
                failures.push(format!("n={n} r={r}"));
            }
        }
    }
    verdict("9", "ζ̃(1-r) = -(ň²-s²)^{r-1} for odd n ≤ 7", &failures, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn qualitative_yamabe_approaches_one() {
    let start = Instant::now();
    let c = cfg();
    let mut failures = Vec::new();
    let gaps: Vec<(u32, f64)> = (7..=12u32)
        .map(|n| (n, (log_det_yamabe(n, DetPath::Factorization, &c).unwrap().det().to_f64() - 1.0).abs()))
        .collect();
    for &(n, g) in &gaps {
        println!("    |det(Y_{n}) - 1| = {g:.3e}");
        if g >= 0.02 {
            failures.push(format!("n={n}: {g:.3e}"));
        }
    }
    if gaps[5].1 >= gaps[0].1 {
        failures.push(format!("n=12 gap {:.3e} not below n=7 gap {:.3e}", gaps[5].1, gaps[0].1));
    }
    verdict("Q", "|det(Y_n) - 1| < 0.02 for n=7..12, smaller at 12 than at 7", &failures, start.elapsed(), Duration::from_secs(30));
}
