//! Zeta-regularized determinants of `L_n(s)^r` on `S^n`, where `L_n(s)` is
//! the shifted Laplacian with eigenvalues `(k+ň)² - s²`.
//!
//! Production path: `log Det = δ (ň²-s²)^{r-1} log(ň²-s²) + f_{n,r}(s)
//! + Σ_l β_{n,r}(s,l) [log Γ_l(ξ⁺) + log Γ_l(ξ⁻)]`, where `δ = 1` iff `|s| < ň`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{bernoulli_polynomial, binomial, binomial_nat, factorial, harmonic, rising, sign, Integer, Rational};
use crate::hurwitz::{digamma, hurwitz_zeta, riemann_zeta_deriv};
use crate::multigamma::{log_barnes_gammas, log_milnor_gamma_direct, milnor_from_barnes};
use crate::poly::RationalPolynomial as Poly;
use crate::real::{Arg, EMConfig, Real};
use crate::sphere::{
    beta_poly, d_det_coeffs, explicit_term_coeff, f_poly, n_check, t_poly, xi_minus, y_det_coeffs,
    y_det_two_power, zeta_tilde_poly,
};

/// Eigenvalue `k(k+n-1)` of the Laplacian on `S^n`.
pub fn eigenvalue(n: u32, k: u64) -> Integer {
    Integer::from(k) * (Integer::from(k) + (n as u64 - 1))
}

/// Multiplicity `binom(n+k, n) - binom(n+k-2, n)`.
pub fn multiplicity(n: u32, k: u64) -> Integer {
    let (n, k) = (n as i64, k as i64);
    binomial_nat(n + k, n) - binomial_nat(n + k - 2, n)
}

/// `ζ̃(1-r)` of the factor-zeta of `L_n(s)`, exact in `s`.
pub fn zeta_tilde_value(n: u32, r: u32, s: &Rational) -> Rational {
    zeta_tilde_poly(n, r).eval(s)
}

/// Two-variable Hurwitz zeta `Σ_{k≥0} (k+a1)^{-w1} (k+a2)^{-w2}` through
/// `Σ_l binom(w1+l-1, l) (a2-a1)^l ζ(w1+w2+l, a2)`; needs `|a2-a1| < min(1, a2)`.
pub fn two_var_hurwitz(
    a1: impl Into<Arg>,
    a2: impl Into<Arg>,
    w1: impl Into<Arg>,
    w2: impl Into<Arg>,
    cfg: &EMConfig,
) -> Result<Real> {
    let (a1, a2, w1, w2) = (a1.into(), a2.into(), w1.into(), w2.into());
    let prec = cfg.precision_bits;
    let delta = a2.add_rational(&Rational::new()).to_float(prec) - a1.to_float(prec);
    let delta = delta.to_f64();
    let a2f = a2.to_f64();
    if a2f.is_nan() || a2f <= 0.0 || delta.abs() >= a2f.min(1.0) {
        return Err(Error::domain(format!(
            "two_var_hurwitz: need |a2-a1| < min(1, a2), got a1 = {a1}, a2 = {a2}"
        )));
    }
    let wsum = w1.to_float(prec) + w2.to_float(prec);
    if wsum.is_integer() && wsum.to_f64() <= 1.0 {
        return Err(Error::Pole {
            function: "two_var_hurwitz",
            at: wsum.to_f64(),
        });
    }
    let w1f = w1.to_f64();
    let delta_f = Real::new(a2.to_float(prec) - a1.to_float(prec), 0.0);
    let mut binom = Real::from_rational(&Rational::from(1), prec);
    let mut power = Real::from_rational(&Rational::from(1), prec);
    let mut acc = Real::zero(prec);
    let budget = cfg.target_abs_err / 4.0;
    for l in 0u64.. {
        let w = Arg::from(wsum.clone()).add_rational(&Rational::from(l));
        let zeta = hurwitz_zeta(w, a2.clone(), cfg)?;
        let term = binom.mul(&power).mul(&zeta);
        acc = acc.add(&term);
        let rho = (1.0 + (w1f - 1.0).abs() / (l as f64 + 2.0)) * delta.abs() / a2f;
        let tail = term.to_f64().abs() * rho / (1.0 - rho);
        if rho < 1.0 && l > 2 && tail < budget {
            return Ok(acc.with_extra_err(tail));
        }
        if l > 20_000 {
            return Err(Error::Convergence {
                function: "two_var_hurwitz",
                best: acc.to_f64(),
                bound: tail,
            });
        }
        // binom(w1+l, l+1) = binom(w1+l-1, l) (w1+l)/(l+1)
        let factor = Real::new(w1.to_float(prec) + l as f64, 0.0)
            .scale(&Rational::from((1, l + 1)));
        binom = binom.mul(&factor);
        power = power.mul(&delta_f);
    }
    unreachable!()
}

/// A determinant problem: dimension `n`, depth `r`, shift `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereProblem {
    pub n: u32,
    pub r: u32,
    pub s: Arg,
}

impl SphereProblem {
    pub fn new(n: u32, r: u32, s: impl Into<Arg>) -> Result<Self> {
        let s = s.into();
        if n == 0 {
            return Err(Error::domain("sphere dimension must be positive"));
        }
        if r == 0 {
            return Err(Error::domain("depth r must be positive"));
        }
        let p = SphereProblem { n, r, s };
        if !p.xi_minus().is_positive() || !p.xi_plus().is_positive() {
            return Err(Error::domain(format!(
                "shift s = {} must satisfy |s| < {}",
                p.s,
                n_check(n) + 1
            )));
        }
        Ok(p)
    }

    /// `Δ_n` itself: `r = 1`, `s = ň`.
    pub fn laplacian(n: u32) -> Result<Self> {
        Self::new(n, 1, n_check(n.max(1)))
    }

    /// Conformal Laplacian `Y_n`: `r = 1`, `s = 1/2`.
    pub fn yamabe(n: u32) -> Result<Self> {
        Self::new(n, 1, Rational::from((1, 2)))
    }

    pub fn n_check(&self) -> Rational {
        n_check(self.n)
    }

    pub fn xi_plus(&self) -> Arg {
        self.s.add_rational(&(self.n_check() + 1))
    }

    pub fn xi_minus(&self) -> Arg {
        self.s.neg().add_rational(&(self.n_check() + 1))
    }

    /// Whether the zero mode shift `ň² - s²` is a genuine positive eigenvalue
    /// factor, i.e. `|s| < ň`.
    pub fn prefactor_active(&self) -> bool {
        let nc = self.n_check();
        match &self.s {
            Arg::Exact(q) => Rational::from(q.abs_ref()).cmp(&nc) == Ordering::Less,
            Arg::Approx(x) => x.to_f64().abs() < nc.to_f64(),
        }
    }

    fn poly_at(&self, p: &Poly, prec: u32) -> Real {
        self.s.eval_poly(p, prec)
    }

    fn two_s(&self) -> Arg {
        match &self.s {
            Arg::Exact(q) => Arg::Exact(Rational::from(q * 2u32)),
            Arg::Approx(x) => Arg::Approx(rug::Float::with_val(x.prec(), x * 2u32)),
        }
    }

    /// `(ň²-s²)^{r-1} log(ň²-s²)` when active, else zero.
    pub fn prefactor_term(&self, prec: u32) -> Result<Real> {
        if !self.prefactor_active() {
            return Ok(Real::zero(prec));
        }
        let gap = self.poly_at(&crate::sphere::shift_gap(self.n), prec);
        Ok(gap.powi(self.r - 1).mul(&gap.ln()?))
    }
}

impl fmt::Display for SphereProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} r={} s={}", self.n, self.r, self.s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DetPath {
    /// Barnes-gamma factorization with exact `β` exponents.
    Factorization,
    /// Closed `ζ'(-k)` forms, `r = 1` only.
    ClosedFormR1,
    /// Independent two-variable Hurwitz series, `|s| < 1/3`.
    Oracle,
}

impl DetPath {
    pub fn name(self) -> &'static str {
        match self {
            DetPath::Factorization => "factorization",
            DetPath::ClosedFormR1 => "closed_form_r1",
            DetPath::Oracle => "oracle",
        }
    }
}

impl fmt::Display for DetPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DetResult {
    pub log_det: Real,
    pub prefactor_active: bool,
    pub path: DetPath,
}

impl DetResult {
    pub fn det(&self) -> Real {
        self.log_det.exp()
    }
}

/// `log Det(L_n(s)^r)` along the factorization path.
pub fn log_higher_det(problem: &SphereProblem, cfg: &EMConfig) -> Result<DetResult> {
    cfg.validate()?;
    let (n, r) = (problem.n, problem.r);
    let prec = cfg.precision_bits;
    let top = n + 2 * r - 2;
    let (plus, minus) = rayon::join(
        || log_barnes_gammas(top, problem.xi_plus(), cfg),
        || log_barnes_gammas(top, problem.xi_minus(), cfg),
    );
    let (plus, minus) = (plus?, minus?);
    let mut acc = problem.prefactor_term(prec)?;
    acc = acc.add(&problem.poly_at(&f_poly(n, r), prec));
    for l in 1..=top {
        let beta = problem.poly_at(&beta_poly(n, r, l as i64), prec);
        let i = l as usize - 1;
        acc = acc.add(&beta.mul(&plus[i].add(&minus[i])));
    }
    Ok(DetResult {
        log_det: acc,
        prefactor_active: problem.prefactor_active(),
        path: DetPath::Factorization,
    })
}

/// Route used for the building block `log I^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockPath {
    /// Milnor-gamma product with `G_k` from the Barnes reduction.
    MilnorProduct,
    /// Five-term splitting; its infinite part summed as a series in `2s`.
    Splitting,
}

fn pow_real(x: &Arg, e: u32, prec: u32) -> Real {
    x.eval_poly(&Poly::monomial(1, e as usize), prec)
}

/// `log I^d_{n,r}(s)`; the reduced determinant is `Σ_d T_{n,d}(s) log I^d`.
pub fn log_i_d(problem: &SphereProblem, d: u32, path: BlockPath, cfg: &EMConfig) -> Result<Real> {
    match path {
        BlockPath::MilnorProduct => log_i_d_product(problem, d, cfg),
        BlockPath::Splitting => log_i_d_split(problem, d, cfg),
    }
}

fn log_i_d_product(p: &SphereProblem, d: u32, cfg: &EMConfig) -> Result<Real> {
    let (r, prec) = (p.r, cfg.precision_bits);
    let (r_i, d_i) = (r as i64, d as i64);
    let top = 2 * r + d - 1;
    let (xp, xm) = (p.xi_plus(), p.xi_minus());
    let (gp, gm) = rayon::join(|| log_barnes_gammas(top, xp.clone(), cfg), || log_barnes_gammas(top, xm.clone(), cfg));
    let (gp, gm) = (gp?, gm?);
    let ts = p.two_s();
    let mut acc = pow_real(&ts, top, prec).scale(&explicit_term_coeff(r, d));
    for k in r_i..=(2 * r_i + d_i - 1) {
        let e = (2 * r_i + d_i - k - 1) as u32;
        let w = pow_real(&ts, e, prec);
        let cp = Rational::from(binomial(r_i + d_i - 1, k - r_i) * sign(k + d_i));
        let lg = milnor_from_barnes(k as u32, &xp, &gp, prec);
        acc = acc.add(&w.mul(&lg).scale(&cp));
        if k >= r_i + d_i {
            let cm = Rational::from(binomial(r_i - 1, e as i64));
            let lg = milnor_from_barnes(k as u32, &xm, &gm, prec);
            acc = acc.sub(&w.mul(&lg).scale(&cm));
        }
    }
    Ok(acc)
}

fn log_i_d_split(p: &SphereProblem, d: u32, cfg: &EMConfig) -> Result<Real> {
    let (r, prec) = (p.r, cfg.precision_bits);
    let (r_i, d_i) = (r as i64, d as i64);
    let xm = p.xi_minus();
    let ts = p.two_s();
    let top = 2 * r_i + d_i - 1;
    let ratio = ts.to_f64().abs() / xm.to_f64();
    if ratio >= 1.0 {
        return Err(Error::domain(format!(
            "splitting route needs |2s| < 1 + ň - s (got {})",
            p.s
        )));
    }
    let lg = |k: i64| log_milnor_gamma_direct(k as u32, xm.clone(), cfg);

    // Exact polynomial part in s: Bernoulli terms of the second and third
    // pieces plus the harmonic part of the fourth.
    let xm_poly = xi_minus(p.n);
    let two_s = Poly::monomial(2, 1);
    let bern = |k: i64| bernoulli_polynomial(k as usize).compose(&xm_poly).scale(&Rational::from((1, k)));
    let mut exact = Poly::zero();
    for l in 1..r_i {
        let c = Rational::from(binomial(r_i - 1, l)) * harmonic(r_i - l, r_i - 1);
        exact = &exact - &(&bern(top - l) * &two_s.pow(l as u32)).scale(&c);
    }
    for l in r_i..top {
        let c = Rational::from((sign(r_i + 1 + l), binomial(l, r_i) * r));
        exact = &exact + &(&bern(top - l) * &two_s.pow(l as u32)).scale(&c);
    }
    let c4 = Rational::from((factorial(r - 1) * sign(r_i + d_i), rising(r_i + d_i, r)));
    let half_h = harmonic(r_i, r_i + d_i - 1) / Rational::from(2);
    exact = &exact - &two_s.pow(top as u32).scale(&(c4.clone() * half_h));
    let mut acc = p.poly_at(&exact, prec);

    acc = acc.sub(&lg(top)?.scale(&Rational::from(2)));
    for k in (r_i + d_i)..=(top - 1) {
        let e = (top - k) as u32;
        let c = Rational::from(binomial(r_i - 1, e as i64) * 2u32);
        acc = acc.sub(&pow_real(&ts, e, prec).mul(&lg(k)?).scale(&c));
    }
    let psi = digamma(xm.clone(), cfg)?;
    acc = acc.add(&pow_real(&ts, top as u32, prec).mul(&psi).scale(&c4));

    // (-1)^r (r-1)! Σ_{L≥2} ζ(L, ξ⁻) (-2s)^{L+m} / (L+m-r+1)_r, m = 2r+d-2
    let m = top - 1;
    let neg_ts = ts.neg();
    let lead = Rational::from(factorial(r - 1) * sign(r_i));
    let budget = cfg.target_abs_err / 4.0;
    let mut series = Real::zero(prec);
    for big_l in 2i64.. {
        let zeta = hurwitz_zeta(big_l, xm.clone(), cfg)?;
        let c = Rational::from((1, rising(big_l + m - r_i + 1, r)));
        let term = pow_real(&neg_ts, (big_l + m) as u32, prec).mul(&zeta).scale(&c);
        series = series.add(&term);
        let tail = term.to_f64().abs() * ratio / (1.0 - ratio);
        if tail < budget || term.value.is_zero() {
            series = series.with_extra_err(tail);
            break;
        }
        if big_l > 100_000 {
            return Err(Error::Convergence {
                function: "log_i_d",
                best: series.to_f64(),
                bound: tail,
            });
        }
    }
    Ok(acc.add(&series.scale(&lead)))
}

/// `Σ_d T_{n,d}(s) log I^d(s)`, which equals `log Det` minus the prefactor term.
pub fn log_det_from_blocks(problem: &SphereProblem, path: BlockPath, cfg: &EMConfig) -> Result<Real> {
    let prec = cfg.precision_bits;
    let mut acc = Real::zero(prec);
    for d in 0..problem.n {
        let t = problem.poly_at(&t_poly(problem.n, d as i64), prec);
        if t.value.is_zero() && t.err_bound == 0.0 {
            continue;
        }
        acc = acc.add(&t.mul(&log_i_d(problem, d, path, cfg)?));
    }
    Ok(acc)
}

fn zeta_deriv_sum(coeffs: &[Rational], weight: impl Fn(usize) -> Rational, cfg: &EMConfig) -> Result<Real> {
    let mut acc = Real::zero(cfg.precision_bits);
    for (k, c) in coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let z = riemann_zeta_deriv(k as u32, cfg)?;
        acc = acc.add(&z.scale(&(c.clone() * weight(k))));
    }
    Ok(acc)
}

fn ln2pi_sq(prec: u32) -> Real {
    let pi = rug::Float::with_val(prec, rug::float::Constant::Pi);
    Real::new(pi * 2u32, 0.0).ln().expect("positive").scale(&Rational::from(2))
}

/// `log det(Δ_n)`.
pub fn log_det_laplacian(n: u32, path: DetPath, cfg: &EMConfig) -> Result<DetResult> {
    let problem = SphereProblem::laplacian(n)?;
    match path {
        DetPath::Factorization => log_higher_det(&problem, cfg),
        DetPath::Oracle => crate::oracle::oracle_log_det(&problem, cfg),
        DetPath::ClosedFormR1 => {
            cfg.validate()?;
            let prec = cfg.precision_bits;
            let log_det = if n == 1 {
                ln2pi_sq(prec)
            } else {
                let d = d_det_coeffs(n)?;
                let nc = n_check(n);
                let f = Real::from_rational(&f_poly(n, 1).eval(&nc), prec);
                let tail = zeta_deriv_sum(&d, |_| Rational::from(1), cfg)?;
                let ln_n1 = Real::from_rational(&Rational::from(n - 1), prec).ln()?;
                f.add(&tail).sub(&ln_n1)
            };
            Ok(DetResult {
                log_det,
                prefactor_active: problem.prefactor_active(),
                path,
            })
        }
    }
}

/// `log det(Y_n)`, `Y_n = Δ_n + n(n-2)/4`.
pub fn log_det_yamabe(n: u32, path: DetPath, cfg: &EMConfig) -> Result<DetResult> {
    let problem = SphereProblem::yamabe(n)?;
    match path {
        DetPath::Factorization => log_higher_det(&problem, cfg),
        DetPath::Oracle => crate::oracle::oracle_log_det(&problem, cfg),
        DetPath::ClosedFormR1 => {
            cfg.validate()?;
            let prec = cfg.precision_bits;
            let ln2 = Real::from_rational(&Rational::from(2), prec).ln()?;
            let log_det = match n {
                1 => ln2.scale(&Rational::from(4)),
                2 => {
                    let z = riemann_zeta_deriv(1, cfg)?;
                    Real::from_rational(&Rational::from((1, 2)), prec).sub(&z.scale(&Rational::from(4)))
                }
                _ if n % 2 == 1 => {
                    let y = y_det_coeffs(n)?;
                    let tail = zeta_deriv_sum(
                        &y,
                        |k| Rational::from((1, Integer::from(1) << k as u32)) - 1,
                        cfg,
                    )?;
                    ln2.scale(&y_det_two_power(n)?).add(&tail)
                }
                _ => {
                    let y = y_det_coeffs(n)?;
                    let f = Real::from_rational(&f_poly(n, 1).eval(&Rational::from((1, 2))), prec);
                    f.add(&zeta_deriv_sum(&y, |_| Rational::from(1), cfg)?)
                }
            };
            Ok(DetResult {
                log_det,
                prefactor_active: problem.prefactor_active(),
                path,
            })
        }
    }
}
