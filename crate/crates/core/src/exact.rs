//! Exact combinatorial numbers over the integers and rationals.
//!
//! Bernoulli numbers follow the `t e^t / (e^t - 1)` generating function,
//! so `B_1 = +1/2` and `B_k = B_k(1)` throughout the crate.

pub use rug::{Integer, Rational};

use crate::memo::{Memo, Table};
use crate::poly::RationalPolynomial;

static BERNOULLI: Table<Rational> = Table::new();
static BERNOULLI_POLY: Table<RationalPolynomial> = Table::new();
static STIRLING_ROWS: Table<Vec<Integer>> = Table::new();

/// `B_k` with `B_1 = +1/2`.
pub fn bernoulli_number(k: usize) -> Rational {
    BERNOULLI.get(k, |prev| {
        // Multiplying the generating function by (e^t - 1)/t gives
        // sum_j binom(m, j) B_j / (m - j + 1) = 1.
        let m = prev.len();
        let mut acc = Rational::from(1);
        for (j, b) in prev.iter().enumerate() {
            let w = Rational::from((binomial(m as i64, j as i64), (m - j + 1) as u64));
            acc -= w * b;
        }
        acc
    })
}

/// Bernoulli polynomial `B_k(z)` from `t e^{tz} / (e^t - 1)`.
pub fn bernoulli_polynomial(k: usize) -> RationalPolynomial {
    BERNOULLI_POLY.get(k, |prev| {
        // t e^{tz}/(e^t-1) = (t e^t/(e^t-1)) e^{t(z-1)}
        let k = prev.len();
        let mut coeffs = vec![Rational::new(); k + 1];
        for j in 0..=k {
            let c = bernoulli_number(j) * binomial(k as i64, j as i64);
            // (z - 1)^{k-j}
            let e = k - j;
            for (i, slot) in coeffs.iter_mut().enumerate().take(e + 1) {
                let sign = if (e - i) % 2 == 0 { 1 } else { -1 };
                *slot += Rational::from(&c * binomial(e as i64, i as i64)) * sign;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    })
}

/// Signed Stirling number of the first kind, defined by
/// `(w)_n = Σ_m (-1)^{n+m} s(n, m) w^m`. Out-of-range `m` gives 0.
pub fn stirling_first(n: usize, m: i64) -> Integer {
    if m < 0 || m as usize > n {
        return Integer::new();
    }
    STIRLING_ROWS
        .get(n, |prev| {
            let Some(last) = prev.last() else {
                return vec![Integer::from(1)];
            };
            // s(n+1, m) = s(n, m-1) - n s(n, m)
            let n = prev.len() - 1;
            (0..=n + 1)
                .map(|m| {
                    let a = if m > 0 { last[m - 1].clone() } else { Integer::new() };
                    let b = last.get(m).cloned().unwrap_or_default();
                    a - b * n as u64
                })
                .collect()
        })
        .swap_remove(m as usize)
}

/// `H(m, n) = Σ_{j=m}^{n} 1/j`, zero for an empty range. Non-positive
/// indices are skipped, so `harmonic(1, n)` is zero for `n ≤ 0`.
pub fn harmonic(m: i64, n: i64) -> Rational {
    let mut acc = Rational::new();
    for j in m.max(1)..=n {
        acc += Rational::from((1, j));
    }
    acc
}

/// Binomial coefficient `binom(n, k)` with generalised (polynomial) upper
/// index; zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::new();
    }
    static CACHE: Memo<(i64, i64), Integer> = Memo::new();
    if (0..=64).contains(&n) && k <= n {
        return CACHE.get_or_insert_with(&(n, k), || Integer::from(Integer::binomial_u(n as u32, k as u32)));
    }
    let mut num = Integer::from(1);
    for i in 0..k {
        num *= n - i;
    }
    num / factorial(k as u32)
}

/// Combinatorial binomial: zero unless `0 ≤ k ≤ n`.
pub fn binomial_nat(n: i64, k: i64) -> Integer {
    if k < 0 || n < 0 || k > n {
        Integer::new()
    } else {
        binomial(n, k)
    }
}

/// Binomial with a rational upper index.
pub fn binomial_rat(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::from(1);
    for i in 0..k {
        acc *= Rational::from(x - i);
    }
    acc / factorial(k)
}

pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn rising(x: i64, k: u32) -> Integer {
    let mut acc = Integer::from(1);
    for i in 0..k as i64 {
        acc *= x + i;
    }
    acc
}

/// `(-1)^e` as an integer.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
