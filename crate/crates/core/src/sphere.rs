//! Exact polynomial families attached to the sphere spectrum.
//!
//! Every family is built over `Q` and, where it depends on the shift
//! parameter, is returned as a polynomial in `s`. The shorthand used in the
//! docs: `ň = (n-1)/2`, `ξ±(s) = 1 + ň ± s`.
//!
//! Accessors return the zero polynomial outside a family's index range
//! whenever that is the natural convention (for instance `T_{n,d} = 0` for
//! `d < 0` or `d ≥ n`).

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{
    bernoulli_polynomial, binomial, binomial_nat, binomial_rat, factorial, harmonic, rising, sign,
    stirling_first, Integer, Rational,
};
use crate::memo::Memo;
use crate::poly::{rational_string, RationalPolynomial as Poly};

pub mod series;

/// `ň = (n - 1)/2`.
pub fn n_check(n: u32) -> Rational {
    Rational::from((n as i64 - 1, 2))
}

/// `ξ⁺(s) = 1 + ň + s` as a polynomial in `s`.
pub fn xi_plus(n: u32) -> Poly {
    Poly::linear(n_check(n) + 1)
}

/// `ξ⁻(s) = 1 + ň - s` as a polynomial in `s`.
pub fn xi_minus(n: u32) -> Poly {
    Poly::from_coeffs(vec![n_check(n) + 1, Rational::from(-1)])
}

/// `ň² - s²`.
pub fn shift_gap(n: u32) -> Poly {
    Poly::from_coeffs(vec![n_check(n).square(), Rational::new(), Rational::from(-1)])
}

/// `2s`.
fn two_s() -> Poly {
    Poly::monomial(2, 1)
}

fn assert_dim(n: u32) {
    assert!(n >= 1, "sphere dimension must be positive");
}

/// Multiplicity polynomial `P_n(z) = binom(z+ň+1, n) - binom(z+ň-1, n)`.
pub fn p_n(n: u32) -> Poly {
    assert_dim(n);
    static CACHE: Memo<u32, Poly> = Memo::new();
    CACHE.get_or_insert_with(&n, || {
        let nc = n_check(n);
        let hi = Poly::linear(Rational::from(&nc + 1));
        let lo = Poly::linear(Rational::from(&nc - 1));
        &Poly::binomial(&hi, n as usize) - &Poly::binomial(&lo, n as usize)
    })
}

/// `T_{n,d}(s)`, the Taylor coefficients of `P_n` about `z = s`:
/// `P_n(z) = Σ_d T_{n,d}(s) (z - s)^d`.
pub fn t_poly(n: u32, d: i64) -> Poly {
    assert_dim(n);
    if d < 0 || d >= n as i64 {
        return Poly::zero();
    }
    static CACHE: Memo<(u32, i64), Poly> = Memo::new();
    CACHE.get_or_insert_with(&(n, d), || {
        if d == 0 {
            p_n(n)
        } else {
            t_poly(n, d - 1).derivative().scale(&Rational::from((1, d)))
        }
    })
}

/// `T_{n,d}(s)` from the Stirling-number double sum; an independent route
/// to [`t_poly`].
pub fn t_poly_stirling(n: u32, d: i64) -> Poly {
    assert_dim(n);
    if d < 0 || d >= n as i64 {
        return Poly::zero();
    }
    let nc = n_check(n);
    let a = Poly::linear(Rational::from(1 - &nc));
    let b = Poly::linear(Rational::from(-1 - &nc));
    let mut acc = Poly::zero();
    for m in (d + 1)..=(n as i64) {
        let w = Rational::from(binomial(m, d) * stirling_first(n as usize, m) * sign(n as i64 + m));
        let e = (m - d) as u32;
        acc = &acc + &(&a.pow(e) - &b.pow(e)).scale(&w);
    }
    acc.scale(&Rational::from((1, factorial(n))))
}

/// `T_{n,0}(s)` from its product form, e.g. `2/(n-1)! Π_{j=0}^{(n-3)/2} (s² - j²)`
/// for odd `n ≥ 3`.
pub fn t_n0_product(n: u32) -> Poly {
    assert_dim(n);
    let s2 = Poly::monomial(1, 2);
    let lead = Rational::from((2, factorial(n - 1)));
    match n {
        1 => Poly::constant(2),
        2 => Poly::monomial(2, 1),
        _ if n % 2 == 1 => (0..=((n as i64 - 3) / 2))
            .map(|j| &s2 - &Poly::constant(j * j))
            .fold(Poly::constant(lead), |acc, f| &acc * &f),
        _ => (1..=((n as i64 - 2) / 2))
            .map(|j| &s2 - &Poly::constant(Rational::from((2 * j - 1, 2)).square()))
            .fold(Poly::monomial(lead * 2, 1).scale(&Rational::from((1, 2))), |acc, f| &acc * &f),
    }
}

/// Coefficient `(-1)^{r+d} (r-1)! / (2 (r+d)_r) · H(r, r+d-1)` of the
/// explicit exponential term in the building block `I^d_{n,r}`.
pub fn explicit_term_coeff(r: u32, d: u32) -> Rational {
    let r_i = r as i64;
    let d_i = d as i64;
    Rational::from((factorial(r - 1) * sign(r_i + d_i), rising(r_i + d_i, r) * 2u32))
        * harmonic(r_i, r_i + d_i - 1)
}

/// `f_{n,r}(s) = Σ_{d=1}^{n-1} c_{r,d} H(r, r+d-1) (2s)^{2r+d-1} T_{n,d}(s)`.
pub fn f_poly(n: u32, r: u32) -> Poly {
    assert_dim(n);
    assert!(r >= 1, "depth must be positive");
    static CACHE: Memo<(u32, u32), Poly> = Memo::new();
    CACHE.get_or_insert_with(&(n, r), || {
        let mut acc = Poly::zero();
        for d in 1..n {
            let c = explicit_term_coeff(r, d);
            if c == 0 {
                continue;
            }
            let term = &Poly::monomial(Rational::from(Integer::from(1) << (2 * r + d - 1)) * c, (2 * r + d - 1) as usize)
                * &t_poly(n, d as i64);
            acc = &acc + &term;
        }
        acc
    })
}

/// `α_{n,r}(s,k) = (-1)^{n+k+1} Σ_j binom(r-1, j) (2s)^{r-1-j} T_{n,k-r-j}(s)`
/// for `r ≤ k ≤ 2r+n-2`, zero otherwise.
pub fn alpha_poly(n: u32, r: u32, k: i64) -> Poly {
    assert_dim(n);
    let (r_i, n_i) = (r as i64, n as i64);
    if k < r_i || k > 2 * r_i + n_i - 2 {
        return Poly::zero();
    }
    let mut acc = Poly::zero();
    for j in 0..=(r_i - 1).min(k - r_i) {
        let c = Rational::from(binomial(r_i - 1, j));
        let term = &two_s().pow((r_i - 1 - j) as u32).scale(&c) * &t_poly(n, k - r_i - j);
        acc = &acc + &term;
    }
    acc.scale(&Rational::from(sign(n_i + k + 1)))
}

/// `α⁺_{n,r}(s,k)` from its defining sum over `d`.
pub fn alpha_plus_sum(n: u32, r: u32, k: i64) -> Poly {
    let (r_i, n_i) = (r as i64, n as i64);
    if k < r_i || k > 2 * r_i + n_i - 2 {
        return Poly::zero();
    }
    let mut acc = Poly::zero();
    for d in (k - 2 * r_i + 1).max(0)..n_i {
        let c = Rational::from(binomial(r_i + d - 1, k - r_i) * sign(k + d));
        let e = (2 * r_i + d - k - 1) as u32;
        acc = &acc + &(&two_s().pow(e).scale(&c) * &t_poly(n, d));
    }
    acc
}

/// `α⁻_{n,r}(s,k)` from its defining sum over `d`.
pub fn alpha_minus_sum(n: u32, r: u32, k: i64) -> Poly {
    let (r_i, n_i) = (r as i64, n as i64);
    if k < r_i || k > 2 * r_i + n_i - 2 {
        return Poly::zero();
    }
    let mut acc = Poly::zero();
    for d in (k - 2 * r_i + 1).max(0)..=(n_i - 1).min(k - r_i) {
        let e = 2 * r_i + d - k - 1;
        let c = Rational::from(-binomial(r_i - 1, e));
        acc = &acc + &(&two_s().pow(e as u32).scale(&c) * &t_poly(n, d));
    }
    acc
}

/// `c^k_n(l)` from its difference equation in `k`, with `c^0_n(0) = 2`.
/// Zero for `l` outside `[0, k]`.
pub fn ckn(k: u32, n: u32, l: i64) -> Rational {
    if l < 0 || l > k as i64 {
        return Rational::new();
    }
    static CACHE: Memo<(u32, u32), Vec<Integer>> = Memo::new();
    let row = CACHE.get_or_insert_with(&(k, n), || {
        if k == 0 {
            return vec![Integer::from(2)];
        }
        let prev = {
            let p: Vec<Integer> = (0..k as i64).map(|l| ckn(k - 1, n, l).numer().clone()).collect();
            p
        };
        let n_i = n as i64;
        let k_i = k as i64;
        (0..=k_i)
            .map(|l| {
                if l == 0 {
                    Integer::from(&prev[0] * n_i) - (n_i - 1)
                } else if l < k_i {
                    Integer::from(&prev[l as usize] * (n_i + l))
                        - Integer::from(&prev[l as usize - 1] * (n_i + l - 1))
                } else {
                    Integer::from(&prev[l as usize - 1] * -(n_i + k_i - 1))
                }
            })
            .collect()
    });
    Rational::from(row[l as usize].clone())
}

/// Closed expression for `c^k_n(l)`. The ratio `(n+2j-1)/(n+j-1)` is read
/// as its limit `1` at `n = 1, j = 0`.
pub fn ckn_closed(k: u32, n: u32, l: i64) -> Rational {
    if l < 0 {
        return Rational::new();
    }
    let n_i = n as i64;
    let mut sum = Rational::new();
    for j in 0..=l {
        let ratio = if n_i + j - 1 == 0 {
            Rational::from(1)
        } else {
            Rational::from((n_i + 2 * j - 1, n_i + j - 1))
        };
        let pow = Integer::from(Integer::i_pow_u((n_i + j) as i32, k));
        sum += ratio * Rational::from(binomial(l, j) * sign(j) * pow);
    }
    Rational::from(1) + sum * binomial(n_i + l - 1, l)
}

/// `β_{n,r}(s,l)`, the Barnes-gamma exponents of the determinant.
///
/// Equal to `-(ň²-s²)^{r-1}` for `1 ≤ l ≤ n-1`, and to a `c^k_n`-weighted
/// double sum over `p + q = k` for `n ≤ l ≤ n+2r-2`; zero otherwise.
pub fn beta_poly(n: u32, r: u32, l: i64) -> Poly {
    assert_dim(n);
    assert!(r >= 1, "depth must be positive");
    let (r_i, n_i) = (r as i64, n as i64);
    if l < 1 || l > n_i + 2 * r_i - 2 {
        return Poly::zero();
    }
    static CACHE: Memo<(u32, u32, i64), Poly> = Memo::new();
    CACHE.get_or_insert_with(&(n, r, l), || {
        if l < n_i {
            return -&shift_gap(n).pow(r - 1);
        }
        let xp = xi_plus(n);
        let xm = xi_minus(n);
        let mut acc = Poly::zero();
        for k in (l - n_i)..=(2 * r_i - 2) {
            let c = ckn(k as u32, n, l - n_i) * sign(k);
            if c == 0 {
                continue;
            }
            let mut inner = Poly::zero();
            for p in 0..=(r_i - 1).min(k) {
                let q = k - p;
                if q > r_i - 1 {
                    continue;
                }
                let w = Rational::from(binomial(r_i - 1, p) * binomial(r_i - 1, q));
                let term = &xp.pow((r_i - 1 - p) as u32) * &xm.pow((r_i - 1 - q) as u32);
                inner = &inner + &term.scale(&w);
            }
            acc = &acc + &inner.scale(&c);
        }
        -acc
    })
}

/// `β⁺_{n,r}(s,l) = Σ_k c_{k,l}(ξ⁺(s)) α_{n,r}(s,k)`; an independent route
/// to [`beta_poly`] through the Milnor reduction coefficients.
pub fn beta_plus_sum(n: u32, r: u32, l: i64) -> Poly {
    beta_side_sum(n, r, l, &xi_plus(n), false)
}

/// `β⁻_{n,r}(s,l) = Σ_k c_{k,l}(ξ⁻(s)) α_{n,r}(-s,k)`.
pub fn beta_minus_sum(n: u32, r: u32, l: i64) -> Poly {
    beta_side_sum(n, r, l, &xi_minus(n), true)
}

fn beta_side_sum(n: u32, r: u32, l: i64, xi: &Poly, reflect: bool) -> Poly {
    let (r_i, n_i) = (r as i64, n as i64);
    if l < 1 || l > n_i + 2 * r_i - 2 {
        return Poly::zero();
    }
    let mut acc = Poly::zero();
    for k in r_i.max(l)..=(2 * r_i + n_i - 2) {
        let c = c_milnor(k as u32, l).compose(xi);
        let a = alpha_poly(n, r, k);
        let a = if reflect { a.reflect() } else { a };
        acc = &acc + &(&c * &a);
    }
    acc
}

/// Barnes coefficients `b_{n,k}(z)` with
/// `binom(m+n-1, n-1) = Σ_k b_{n,k}(z) (m+z)^k`.
pub fn b_barnes(n: u32, k: i64) -> Poly {
    assert_dim(n);
    let n_i = n as i64;
    if k < 0 || k > n_i - 1 {
        return Poly::zero();
    }
    static CACHE: Memo<(u32, i64), Poly> = Memo::new();
    CACHE.get_or_insert_with(&(n, k), || {
        let coeffs: Vec<Rational> = (k..n_i)
            .map(|j| Rational::from(binomial(j, k) * stirling_first(n as usize, j + 1)))
            .collect();
        Poly::from_coeffs(coeffs).scale(&Rational::from((sign(n_i - 1 - k), factorial(n - 1))))
    })
}

/// Milnor reduction coefficients
/// `c_{r,l}(z) = Σ_{k<l} binom(l-1, k) (-1)^k (z-k-1)^{r-1}`, which satisfy
/// `(T+z)^{r-1} = Σ_j c_{r,j}(z) binom(T+j-1, j-1)`.
pub fn c_milnor(r: u32, l: i64) -> Poly {
    assert!(r >= 1, "depth must be positive");
    if l < 1 || l > r as i64 {
        return Poly::zero();
    }
    static CACHE: Memo<(u32, i64), Poly> = Memo::new();
    CACHE.get_or_insert_with(&(r, l), || {
        let mut acc = Poly::zero();
        for k in 0..l {
            let base = Poly::linear(-k - 1).pow(r - 1);
            acc = &acc + &base.scale(&Rational::from(binomial(l - 1, k) * sign(k)));
        }
        acc
    })
}

/// `d_n(0..n-1)`: coefficients of the generating polynomial
/// `-binom(z+n-2, n-1)(n+2z-1)/z + (-1)^n binom(-z+n-2, n-1)(n-2z-1)/(-z)`.
pub fn d_det_coeffs(n: u32) -> Result<Vec<Rational>> {
    if n < 2 {
        return Err(Error::domain(format!(
            "d_n(k) is defined for n ≥ 2 (got n = {n}); det(Δ_1) = 4π² is closed"
        )));
    }
    let n_i = n as i64;
    let up = Poly::binomial(&Poly::linear(n_i - 2), n as usize - 1);
    let down = Poly::binomial(&Poly::from_ints(&[n_i - 2, -1]), n as usize - 1);
    let numer = &(-&(&up * &Poly::from_ints(&[n_i - 1, 2])))
        - &(&down * &Poly::from_ints(&[n_i - 1, -2])).scale(&Rational::from(sign(n_i)));
    let gen = numer.div_x().expect("generating numerator vanishes at z = 0");
    Ok((0..n as usize).map(|k| gen.coeff(k)).collect())
}

/// `d_n(k) = Σ_{l=k+1}^{n} b_{l,k}(1) p_n(l)` from the ladder-exponent route.
pub fn d_det_coeffs_by_ladder(n: u32) -> Result<Vec<Rational>> {
    if n < 2 {
        return Err(Error::domain(format!("d_n(k) is defined for n ≥ 2 (got n = {n})")));
    }
    let n_i = n as i64;
    let ladder = |l: i64| -> Rational {
        if l == n_i {
            Rational::from(-4)
        } else {
            let inner = binomial_nat(n_i - 2, l - 2) * 2u32 + binomial_nat(n_i - 2, l - 1);
            Rational::from(-1 - (inner * sign(n_i - l)))
        }
    };
    Ok(ladder_sum(n, &Rational::from(1), ladder))
}

fn ladder_sum(n: u32, at: &Rational, exponent: impl Fn(i64) -> Rational) -> Vec<Rational> {
    (0..n as i64)
        .map(|k| {
            ((k + 1)..=(n as i64))
                .map(|l| b_barnes(l as u32, k).eval(at) * exponent(l))
                .fold(Rational::new(), |a, b| a + b)
        })
        .collect()
}

/// `y_n(0..n-1)`: coefficients of the odd/even generating polynomials that
/// express `log det(Y_n)` through `ζ'(-k)`.
pub fn y_det_coeffs(n: u32) -> Result<Vec<Rational>> {
    if n < 3 {
        return Err(Error::domain(format!(
            "y_n(k) is defined for n ≥ 3 (got n = {n}); det(Y_1), det(Y_2) are closed"
        )));
    }
    let m = (n / 2) as i64;
    let half = Rational::from((1, 2));
    let bin_pair = |shift: Rational, k: usize| -> Poly {
        // binom(z + shift, k) binom(-z + shift, k)
        let a = Poly::binomial(&Poly::linear(shift.clone()), k);
        let b = Poly::binomial(&Poly::from_coeffs(vec![shift, Rational::from(-1)]), k);
        &a * &b
    };
    let inv = |n: i64, k: i64| Rational::from((1, binomial(n, k)));
    let gen = if n % 2 == 1 {
        let first = bin_pair(Rational::from(m) - Rational::from((3, 2)), (m - 1) as usize)
            .scale(&(inv(2 * m - 2, m - 1) * sign(m)));
        let second = bin_pair(Rational::from(m) - &half, m as usize)
            .scale(&(inv(2 * m, m) * (4 * sign(m + 1))));
        &first + &second
    } else {
        let first = bin_pair(Rational::from(m - 2), (m - 1) as usize)
            .scale(&(inv(2 * m - 2, m - 1) * (sign(m) * (2 * m - 2))));
        let second = bin_pair(Rational::from(m - 1), m as usize)
            .scale(&(inv(2 * m, m) * (4 * sign(m + 1) * 2 * m)));
        (&first + &second)
            .div_x()
            .expect("even generating numerator vanishes at z = 0")
    };
    Ok((0..n as usize).map(|k| gen.coeff(k)).collect())
}

/// `y_n(k)` as `Σ_l b_{l,k}(z₀) q_n(l)` from the ladder-exponent route
/// (`z₀ = 1/2` for odd `n`, `1` for even `n`).
pub fn y_det_coeffs_by_ladder(n: u32) -> Result<Vec<Rational>> {
    if n < 3 {
        return Err(Error::domain(format!("y_n(k) is defined for n ≥ 3 (got n = {n})")));
    }
    let m = (n / 2) as i64;
    if n % 2 == 1 {
        let q = |l: i64| {
            Rational::from(
                (binomial_nat(m - 1, l - m) + binomial_nat(m, l - m - 1) * 4u32) * sign(l),
            )
        };
        Ok(ladder_sum(n, &Rational::from((1, 2)), q))
    } else {
        let q = |l: i64| {
            Rational::from(
                (binomial_nat(m - 2, l - m) + binomial_nat(m - 1, l - m - 1) * 4u32) * sign(l + 1),
            )
        };
        Ok(ladder_sum(n, &Rational::from(1), q))
    }
}

/// Exponent of 2 in `det(Y_{2m+1})`: `-Σ_k 2^{-k} B_{k+1}/(k+1) · y_n(k)`.
pub fn y_det_two_power(n: u32) -> Result<Rational> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::domain(format!("two-power exponent needs odd n ≥ 3 (got {n})")));
    }
    let y = y_det_coeffs(n)?;
    Ok(y.iter().enumerate().fold(Rational::new(), |acc, (k, c)| {
        let b = crate::exact::bernoulli_number(k + 1);
        acc - b * c / Rational::from((Integer::from(1) << k as u32) * (k as u64 + 1))
    }))
}

/// Exact `ζ̃_{L_n(s)}(1-r)` as a polynomial in `s`.
pub fn zeta_tilde_poly(n: u32, r: u32) -> Poly {
    assert_dim(n);
    assert!(r >= 1, "depth must be positive");
    let (r_i, n_i) = (r as i64, n as i64);
    let xm = xi_minus(n);
    let mut acc = Poly::zero();
    for d in 0..n_i {
        let t = t_poly(n, d);
        let mut inner = Poly::zero();
        for l in 0..r_i {
            let k = 2 * r_i + d - l - 1;
            let b = bernoulli_polynomial(k as usize).compose(&xm);
            let c = Rational::from((binomial(r_i - 1, l), k));
            inner = &inner + &(&b * &two_s().pow(l as u32)).scale(&c);
        }
        acc = &acc - &(&t * &inner);
        let e = (2 * r_i + d - 1) as u32;
        let c = Rational::from((sign(r_i + 1), binomial(2 * r_i + d - 1, r_i) * (2 * r_i)));
        let m2s = Poly::monomial(-2, 1).pow(e);
        acc = &acc + &(&t * &m2s).scale(&c);
    }
    acc
}

/// Which polynomial family an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    P,
    T,
    F,
    Alpha,
    Beta,
    Ckn,
    BBarnes,
    CMilnor,
    DDet,
    YDet,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::T => "T",
            Family::F => "f",
            Family::Alpha => "alpha",
            Family::Beta => "beta",
            Family::Ckn => "ckn",
            Family::BBarnes => "b",
            Family::CMilnor => "c",
            Family::DDet => "d",
            Family::YDet => "y",
        }
    }

    /// Name of the polynomial variable.
    pub fn var(self) -> &'static str {
        match self {
            Family::P | Family::BBarnes | Family::CMilnor => "z",
            _ => "s",
        }
    }

    /// Index names, in the order they appear in an entry.
    pub fn index_names(self) -> &'static [&'static str] {
        match self {
            Family::P => &["n"],
            Family::T => &["n", "d"],
            Family::F => &["n", "r"],
            Family::Alpha => &["n", "r", "k"],
            Family::Beta => &["n", "r", "l"],
            Family::Ckn => &["k", "n", "l"],
            Family::BBarnes => &["n", "k"],
            Family::CMilnor => &["r", "l"],
            Family::DDet => &["n", "k"],
            Family::YDet => &["n", "k"],
        }
    }
}

/// One exact table entry: a family, its indices and the polynomial value
/// (constants are degree-0 polynomials).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialFamilyEntry {
    pub family: Family,
    pub indices: Vec<i64>,
    pub value: Poly,
}

impl PolynomialFamilyEntry {
    /// `T[n=3,d=0]`-style key.
    pub fn key(&self) -> String {
        let idx: Vec<String> = self
            .family
            .index_names()
            .iter()
            .zip(&self.indices)
            .map(|(name, v)| format!("{name}={v}"))
            .collect();
        format!("{}[{}]", self.family.tag(), idx.join(","))
    }

    /// Coefficients, lowest degree first, as space-separated `num/den`.
    pub fn exact_value(&self) -> String {
        if self.value.is_zero() {
            return rational_string(&Rational::new());
        }
        self.value.exact_strings().join(" ")
    }
}

impl fmt::Display for PolynomialFamilyEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.key(), self.value.display_in(self.family.var()))
    }
}

/// Builds the table entries for a family. `n` is required; `r` defaults to 1.
/// With `k`/`l`/`d` absent, every valid index is listed.
pub fn family_table(family: Family, n: u32, r: Option<u32>, idx: Option<i64>) -> Result<Vec<PolynomialFamilyEntry>> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let r = r.unwrap_or(1);
    if r == 0 {
        return Err(Error::domain("r must be positive"));
    }
    let (n_i, r_i) = (n as i64, r as i64);
    let entry = |indices: Vec<i64>, value: Poly| PolynomialFamilyEntry { family, indices, value };
    let pick = |range: std::ops::RangeInclusive<i64>| -> Result<Vec<i64>> {
        match idx {
            Some(i) if range.contains(&i) => Ok(vec![i]),
            Some(i) => Err(Error::domain(format!("index {i} outside {range:?}"))),
            None => Ok(range.collect()),
        }
    };
    Ok(match family {
        Family::P => vec![entry(vec![n_i], p_n(n))],
        Family::T => pick(0..=n_i - 1)?
            .into_iter()
            .map(|d| entry(vec![n_i, d], t_poly(n, d)))
            .collect(),
        Family::F => vec![entry(vec![n_i, r_i], f_poly(n, r))],
        Family::Alpha => pick(r_i..=2 * r_i + n_i - 2)?
            .into_iter()
            .map(|k| entry(vec![n_i, r_i, k], alpha_poly(n, r, k)))
            .collect(),
        Family::Beta => pick(1..=2 * r_i + n_i - 2)?
            .into_iter()
            .map(|l| entry(vec![n_i, r_i, l], beta_poly(n, r, l)))
            .collect(),
        Family::Ckn => {
            // here `r` plays the role of k
            pick(0..=r_i)?
                .into_iter()
                .map(|l| entry(vec![r_i, n_i, l], Poly::constant(ckn(r, n, l))))
                .collect()
        }
        Family::BBarnes => pick(0..=n_i - 1)?
            .into_iter()
            .map(|k| entry(vec![n_i, k], b_barnes(n, k)))
            .collect(),
        Family::CMilnor => pick(1..=n_i)?
            .into_iter()
            .map(|l| entry(vec![n_i, l], c_milnor(n, l)))
            .collect(),
        Family::DDet => {
            let d = d_det_coeffs(n)?;
            pick(0..=n_i - 1)?
                .into_iter()
                .map(|k| entry(vec![n_i, k], Poly::constant(d[k as usize].clone())))
                .collect()
        }
        Family::YDet => {
            let y = y_det_coeffs(n)?;
            pick(0..=n_i - 1)?
                .into_iter()
                .map(|k| entry(vec![n_i, k], Poly::constant(y[k as usize].clone())))
                .collect()
        }
    })
}

/// Exact value of `binom(x, k)` re-exported for callers assembling
/// generating functions at rational points.
pub fn binomial_at(x: &Rational, k: u32) -> Rational {
    binomial_rat(x, k)
}

#[cfg(test)]
mod tests;
