use super::series::check_t_generating_function;
use super::*;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Polynomial from `(numerator, denominator)` pairs, lowest degree first.
fn pq(c: &[(i64, i64)]) -> Poly {
    Poly::from_coeffs(c.iter().map(|&(n, d)| q(n, d)).collect())
}

#[test]
fn p_n_small() {
    assert_eq!(p_n(1), Poly::constant(2));
    assert_eq!(p_n(2), Poly::monomial(2, 1));
    for n in 1..=10u32 {
        let p = p_n(n);
        assert_eq!(p.degree(), Some(n as usize - 1));
        let expect = p.scale(&q(sign(n as i64 + 1), 1));
        assert_eq!(p.reflect(), expect, "n={n}");
    }
}

#[test]
fn table_of_t_polynomials() {
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
    assert_eq!(table.len(), 21);
    for (n, d, expect) in table {
        assert_eq!(t_poly(n, d), expect, "T[{n},{d}]");
    }
    assert!(t_poly(3, -1).is_zero());
    assert!(t_poly(3, 3).is_zero());
}

#[test]
fn t_polynomial_lemmas() {
    for n in 1..=8u32 {
        for d in 0..n as i64 {
            let t = t_poly(n, d);
            // derivative recurrence
            assert_eq!(t.derivative(), t_poly(n, d + 1).scale(&q(d + 1, 1)));
            // parity
            assert_eq!(t.reflect(), t.scale(&q(sign(n as i64 + d + 1), 1)));
            // shift identity
            let mut rhs = Poly::zero();
            for l in d..n as i64 {
                let c = Rational::from(binomial(l, d));
                rhs = &rhs + &(&two_s().pow((l - d) as u32) * &t_poly(n, l).reflect()).scale(&c);
            }
            assert_eq!(t, rhs, "shift n={n} d={d}");
            // independent Stirling construction
            assert_eq!(t, t_poly_stirling(n, d), "stirling n={n} d={d}");
            assert_eq!(t.degree(), Some(n as usize - 1 - d as usize));
        }
    }
    for n in 1..=10 {
        assert_eq!(t_poly(n, 0), t_n0_product(n), "product n={n}");
    }
}

#[test]
fn t_generating_function_to_order_twelve() {
    assert_eq!(check_t_generating_function(5, 12), Ok(()));
}

#[test]
fn f_vanishes_for_odd_n() {
    for n in [1, 3, 5, 7] {
        for r in 1..=5 {
            assert!(f_poly(n, r).is_zero(), "n={n} r={r}");
        }
    }
    for n in [2, 4, 6, 8] {
        for r in 1..=4 {
            assert!(f_poly(n, r).is_even());
        }
    }
}

#[test]
fn f_depth_one_examples() {
    let s2 = Poly::monomial(1, 2);
    let s = |c: &[i64], den: i64| -> Poly { (&Poly::from_ints(c) * &s2).scale(&q(1, den)) };
    assert_eq!(f_poly(2, 1), Poly::monomial(2, 2));
    assert_eq!(f_poly(4, 1), s(&[-3, 0, 8], 36));
    assert_eq!(f_poly(6, 1), s(&[405, 0, -1200, 0, 368], 43200));
    assert_eq!(f_poly(8, 1), s(&[-70875, 0, 217560, 0, -90160, 0, 8448], 50_803_200));
    assert_eq!(
        f_poly(10, 1),
        s(&[17_364_375, 0, -54_247_200, 0, 25_425_120, 0, -3_548_160, 0, 144_128], 73_156_608_000)
    );
}

#[test]
fn f_closed_forms_in_r() {
    for r in 1..=5u32 {
        let ri = r as i64;
        let lead = q(sign(ri + 1), ri * ri) / Rational::from(binomial(2 * ri, ri));
        let base = Poly::monomial(Rational::from(Integer::from(1) << (2 * r)) * &lead, 2 * r as usize);
        let u = Poly::monomial(4, 2); // (2s)^2
        let u2 = u.pow(2);
        assert_eq!(f_poly(2, r), base, "f2 r={r}");
        let inner4 = &Poly::constant(q(-1, 24)) + &u.scale(&q(3 * ri + 1, 12 * (2 * ri + 1) * (2 * ri + 2)));
        assert_eq!(f_poly(4, r), &base * &inner4, "f4 r={r}");
        let inner6 = &(&Poly::constant(q(3, 640)) - &u.scale(&q(3 * ri + 1, 96 * (2 * ri + 1) * (2 * ri + 2))))
            + &u2.scale(&q(
                15 * ri * ri + 25 * ri + 6,
                480 * (2 * ri + 1) * (2 * ri + 2) * (2 * ri + 3) * (2 * ri + 4),
            ));
        assert_eq!(f_poly(6, r), &base * &inner6, "f6 r={r}");
    }
}

#[test]
fn alpha_examples_and_sides() {
    assert_eq!(alpha_poly(1, 1, 1), Poly::constant(-2));
    for n in 1..=6u32 {
        for k in 1..=(n as i64) {
            let expect = t_poly(n, k - 1).scale(&q(sign(n as i64 + k + 1), 1));
            assert_eq!(alpha_poly(n, 1, k), expect);
        }
    }
    for n in 1..=5u32 {
        for r in 1..=4u32 {
            for k in (r as i64)..=(2 * r as i64 + n as i64 - 2) {
                let a = alpha_poly(n, r, k);
                assert_eq!(alpha_plus_sum(n, r, k), a, "α+ n={n} r={r} k={k}");
                assert_eq!(alpha_minus_sum(n, r, k).reflect(), a, "α- n={n} r={r} k={k}");
            }
            assert!(alpha_poly(n, r, r as i64 - 1).is_zero());
        }
    }
}

#[test]
fn alpha_generating_identity() {
    // Σ_k α(s,k) X^{k-1} = -P_n(X - s) X^{r-1} (X - 2s)^{r-1}, checked at
    // more s-points than the degree in s so the identity holds in Q[s, X].
    for n in 1..=5u32 {
        for r in 1..=4u32 {
            for si in -6..=6i64 {
                let s = q(si, 3);
                let x = Poly::x();
                let lhs = ((r as i64)..=(2 * r as i64 + n as i64 - 2)).fold(Poly::zero(), |acc, k| {
                    &acc + &Poly::monomial(alpha_poly(n, r, k).eval(&s), k as usize - 1)
                });
                let shift = Poly::linear(Rational::from(-&s));
                let p = p_n(n).compose(&shift);
                let rhs = -&(&(&p * &x.pow(r - 1)) * &Poly::linear(Rational::from(-2 * &s)).pow(r - 1));
                assert_eq!(lhs, rhs, "n={n} r={r} s={s}");
            }
        }
    }
}

#[test]
fn beta_generating_identity_and_sides() {
    for n in 1..=5u32 {
        for r in 1..=4u32 {
            let lmax = 2 * r as i64 + n as i64 - 2;
            for l in 1..=lmax {
                let b = beta_poly(n, r, l);
                assert!(b.is_even(), "n={n} r={r} l={l}");
                assert_eq!(beta_plus_sum(n, r, l), b, "β+ n={n} r={r} l={l}");
                assert_eq!(beta_minus_sum(n, r, l), b, "β- n={n} r={r} l={l}");
            }
            // B(s, Y) = -P_n(Y + 1 + ň)(Y + ξ⁺)^{r-1}(Y + ξ⁻)^{r-1} at rational s
            for si in -6..=6i64 {
                let s = q(si, 4);
                let lhs = (1..=lmax).fold(Poly::zero(), |acc, l| {
                    let binom = Poly::binomial(&Poly::linear(l - 1), l as usize - 1);
                    &acc + &binom.scale(&beta_poly(n, r, l).eval(&s))
                });
                let nc = n_check(n);
                let p = p_n(n).compose(&Poly::linear(Rational::from(&nc + 1)));
                let xp = Poly::linear(xi_plus(n).eval(&s)).pow(r - 1);
                let xm = Poly::linear(xi_minus(n).eval(&s)).pow(r - 1);
                let rhs = -&(&(&p * &xp) * &xm);
                assert_eq!(lhs, rhs, "B n={n} r={r} s={s}");
            }
        }
    }
}

#[test]
fn beta_examples() {
    for n in 1..=6u32 {
        let ni = n as i64;
        for l in 1..ni {
            assert_eq!(beta_poly(n, 1, l), Poly::constant(-1));
        }
        assert_eq!(beta_poly(n, 1, ni), Poly::constant(-2));
        let gap = shift_gap(n);
        // depth 2
        for l in 1..ni {
            assert_eq!(beta_poly(n, 2, l), -&gap);
        }
        assert_eq!(beta_poly(n, 2, ni), gap.scale(&q(-2, 1)));
        assert_eq!(beta_poly(n, 2, ni + 1), Poly::constant(ni * (ni + 1)));
        assert_eq!(beta_poly(n, 2, ni + 2), Poly::constant(-2 * ni * (ni + 1)));
        // depth 3
        let g2 = gap.pow(2);
        for l in 1..ni {
            assert_eq!(beta_poly(n, 3, l), -&g2);
        }
        assert_eq!(beta_poly(n, 3, ni), g2.scale(&q(-2, 1)));
        let m = ni * (ni + 1);
        assert_eq!(
            beta_poly(n, 3, ni + 1),
            Poly::from_coeffs(vec![q(m * (ni * ni + 1), 2), q(0, 1), q(-2 * m, 1)])
        );
        assert_eq!(
            beta_poly(n, 3, ni + 2),
            Poly::from_coeffs(vec![q(-m * (2 * ni * ni + 5 * ni + 7), 1), q(0, 1), q(4 * m, 1)])
        );
        assert_eq!(beta_poly(n, 3, ni + 3), Poly::constant(3 * m * (ni + 2) * (ni + 3)));
        assert_eq!(beta_poly(n, 3, ni + 4), Poly::constant(-2 * m * (ni + 2) * (ni + 3)));
        for r in 1..=5u32 {
            let lmax = ni + 2 * r as i64 - 2;
            assert_eq!(beta_poly(n, r, ni), gap.pow(r - 1).scale(&q(-2, 1)));
            assert_eq!(
                beta_poly(n, r, lmax),
                Poly::constant(Rational::from(rising(ni, 2 * r - 2) * -2))
            );
            assert!(beta_poly(n, r, lmax + 1).is_zero());
            assert!(beta_poly(n, r, 0).is_zero());
        }
    }
}

#[test]
fn ckn_recurrence_and_closed_form() {
    for n in 1..=8u32 {
        let ni = n as i64;
        assert_eq!(ckn(0, n, 0), 2);
        for k in 0..=10u32 {
            assert_eq!(ckn(k, n, 0), Rational::from(Integer::from(Integer::i_pow_u(n as i32, k)) + 1));
            assert_eq!(ckn(k, n, k as i64), Rational::from(rising(ni, k) * (2 * sign(k as i64))));
            for l in 0..=k as i64 {
                assert_eq!(ckn(k, n, l), ckn_closed(k, n, l), "k={k} n={n} l={l}");
            }
            assert_eq!(ckn(k, n, k as i64 + 1), 0);
            assert_eq!(ckn_closed(k, n, k as i64 + 1), 0, "closed vanishes above k");
        }
    }
}

#[test]
fn barnes_coefficients() {
    assert_eq!(b_barnes(1, 0), Poly::one());
    assert_eq!(b_barnes(2, 0), Poly::from_ints(&[1, -1]));
    assert_eq!(b_barnes(2, 1), Poly::one());
    assert!(b_barnes(2, 2).is_zero());
    for l in 1..=8u32 {
        let lhs = (0..l as i64).fold(Poly::zero(), |acc, k| &acc + &Poly::monomial(b_barnes(l, k).eval(&q(1, 1)), k as usize));
        let rhs = Poly::binomial(&Poly::linear(l as i64 - 2), l as usize - 1);
        assert_eq!(lhs, rhs, "l={l}");
    }
    // defining identity binom(m+n-1, n-1) = Σ b_{n,k}(z)(m+z)^k at sample (m, z)
    for n in 1..=7u32 {
        for m in 0..5i64 {
            for z in [q(1, 2), q(7, 3), q(-2, 5)] {
                let lhs = Rational::from(binomial(m + n as i64 - 1, n as i64 - 1));
                let mz = Rational::from(&z + m);
                let direct = (0..n as i64).fold(Rational::new(), |acc, k| {
                    let mut p = Rational::from(1);
                    for _ in 0..k {
                        p *= &mz;
                    }
                    acc + b_barnes(n, k).eval(&z) * p
                });
                assert_eq!(lhs, direct, "n={n} m={m} z={z}");
            }
        }
    }
}

#[test]
fn milnor_coefficients() {
    for r in 1..=6u32 {
        assert_eq!(c_milnor(r, r as i64), Poly::constant(factorial(r - 1)));
        // first coefficient is (z-1)^{r-1}
        assert_eq!(c_milnor(r, 1), Poly::linear(-1).pow(r - 1));
        if r >= 2 {
            let expect = Poly::from_ints(&[-(r as i64), 2]).scale(&q(1, 2)).scale(&Rational::from(factorial(r - 1)));
            assert_eq!(c_milnor(r, r as i64 - 1), expect);
        }
        // (T+z)^{r-1} = Σ_j c_{r,j}(z) binom(T+j-1, j-1), checked at many z
        for zi in -4..=4i64 {
            let z = q(zi, 3);
            let lhs = Poly::linear(z.clone()).pow(r - 1);
            let rhs = (1..=r as i64).fold(Poly::zero(), |acc, j| {
                let b = Poly::binomial(&Poly::linear(j - 1), j as usize - 1);
                &acc + &b.scale(&c_milnor(r, j).eval(&z))
            });
            assert_eq!(lhs, rhs, "r={r} z={z}");
        }
    }
}

#[test]
fn determinant_exponents() {
    assert_eq!(d_det_coeffs(2).unwrap(), vec![q(0, 1), q(-4, 1)]);
    assert_eq!(d_det_coeffs(3).unwrap(), vec![q(-2, 1), q(0, 1), q(-2, 1)]);
    assert_eq!(d_det_coeffs(4).unwrap(), vec![q(0, 1), q(-13, 3), q(0, 1), q(-2, 3)]);
    assert_eq!(d_det_coeffs(6).unwrap(), vec![q(0, 1), q(-149, 30), q(0, 1), q(-2, 1), q(0, 1), q(-1, 30)]);
    assert!(d_det_coeffs(1).is_err());
    for n in 2..=12u32 {
        let d = d_det_coeffs(n).unwrap();
        assert_eq!(d, d_det_coeffs_by_ladder(n).unwrap(), "n={n}");
        for (k, c) in d.iter().enumerate() {
            if (k as u32 + n).is_multiple_of(2) {
                assert_eq!(*c, 0, "parity n={n} k={k}");
            }
        }
    }
}

#[test]
fn yamabe_exponents() {
    assert!(y_det_coeffs(2).is_err());
    let y3 = y_det_coeffs(3).unwrap();
    // det(Y_3) = 2^{1/4} e^{-(2^{-2}-1) ... }: only ζ'(-2) survives
    let expo: Vec<Rational> = y3
        .iter()
        .enumerate()
        .map(|(k, y)| y * (Rational::from((1, Integer::from(1) << k as u32)) - 1))
        .collect();
    assert_eq!(expo, vec![q(0, 1), q(0, 1), q(3, 2)]);
    assert_eq!(y_det_two_power(3).unwrap(), q(1, 4));
    assert_eq!(y_det_coeffs(4).unwrap(), vec![q(0, 1), q(-1, 3), q(0, 1), q(-2, 3)]);
    assert_eq!(y_det_two_power(5).unwrap(), q(-1, 64));
    for n in 3..=14u32 {
        let y = y_det_coeffs(n).unwrap();
        assert_eq!(y, y_det_coeffs_by_ladder(n).unwrap(), "n={n}");
        for (k, c) in y.iter().enumerate() {
            if (k as u32 + n).is_multiple_of(2) {
                assert_eq!(*c, 0, "parity n={n} k={k}");
            }
        }
    }
}

#[test]
fn zeta_tilde_odd_dimensions() {
    for n in [1u32, 3, 5, 7] {
        for r in 1..=3u32 {
            let expect = -&shift_gap(n).pow(r - 1);
            assert_eq!(zeta_tilde_poly(n, r), expect, "n={n} r={r}");
        }
    }
}

#[test]
fn table_entries_render() {
    let rows = family_table(Family::T, 3, None, None).unwrap();
    let rendered: Vec<String> = rows.iter().map(|e| e.value.display_in("s").to_string()).collect();
    assert_eq!(rendered, vec!["s^2", "2s", "1"]);
    assert_eq!(rows[0].key(), "T[n=3,d=0]");
    assert_eq!(rows[0].exact_value(), "0/1 0/1 1/1");
    let beta = family_table(Family::Beta, 2, Some(1), None).unwrap();
    let vals: Vec<String> = beta.iter().map(|e| e.exact_value()).collect();
    assert_eq!(vals, vec!["-1/1", "-2/1"]);
    assert!(family_table(Family::DDet, 1, None, None).is_err());
    assert!(family_table(Family::T, 3, None, Some(5)).is_err());
}

proptest! {
    #[test]
    fn beta_even_and_sides_agree(n in 1u32..=6, r in 1u32..=4, l_off in 0i64..12) {
        let lmax = 2 * r as i64 + n as i64 - 2;
        let l = 1 + l_off % lmax;
        let b = beta_poly(n, r, l);
        prop_assert!(b.is_even());
        prop_assert_eq!(beta_plus_sum(n, r, l), b);
    }

    #[test]
    fn alpha_reflection(n in 1u32..=6, r in 1u32..=4, k_off in 0i64..12) {
        let k = r as i64 + k_off % (r as i64 + n as i64 - 1);
        prop_assert_eq!(alpha_minus_sum(n, r, k).reflect(), alpha_plus_sum(n, r, k));
    }
}
