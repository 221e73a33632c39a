//! Hurwitz zeta `ζ(w, a)`, its `w`-derivative, digamma and log-gamma for
//! real arguments, by Euler–Maclaurin summation.
//!
//! `ζ(w, a) = Σ_{k<N} (k+a)^{-w} + x^{1-w}/(w-1) + x^{-w}/2
//!          + Σ_{j=1}^{J} B_{2j}/(2j)! (w)_{2j-1} x^{-w-2j+1} + R`, `x = N + a`.
//!
//! The derivative is taken term by term. The remainder is bounded by four
//! times the first omitted correction, and `N` grows geometrically until
//! that bound meets the target.

use rug::Float;

use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, factorial, Rational};
use crate::memo::Memo;
use crate::real::{Arg, EMConfig, Real};

const SAFETY: f64 = 4.0;
const MAX_TERMS: u64 = 1 << 16;

fn check_args(function: &'static str, w: &Arg, a: &Arg) -> Result<()> {
    if let Arg::Exact(q) = w {
        if *q == 1 {
            return Err(Error::Pole { function, at: 1.0 });
        }
    } else if w.to_f64() == 1.0 {
        return Err(Error::Pole { function, at: 1.0 });
    }
    if !a.is_positive() {
        return Err(Error::domain(format!("{function}: shift a = {a} must be positive")));
    }
    Ok(())
}

/// `B_{2j}/(2j)!` as floats, `j = 1..=jmax`.
fn em_coeffs(jmax: usize, prec: u32) -> Vec<Float> {
    (1..=jmax)
        .map(|j| {
            let c = bernoulli_number(2 * j) / Rational::from(factorial(2 * j as u32));
            Float::with_val(prec, &c)
        })
        .collect()
}

/// Number of corrections to use at order `w`: enough for the correction
/// terms to decay in `x`.
fn corrections_for(w: f64, cfg: &EMConfig) -> usize {
    let base = (cfg.correction_order / 2) as usize;
    let need = ((4.0 - w) / 2.0).ceil().max(1.0) as usize;
    base.max(need).min(20)
}

/// Magnitude of correction `j` (value and derivative parts) at `x` as f64
/// estimates; used only to choose `N` and to bound the remainder.
fn omitted_term_bound(w: f64, j: usize, x: f64) -> (f64, f64) {
    // |B_{2j}|/(2j)! ≤ 2.2 (2π)^{-2j}
    let c = 2.2 * (2.0 * std::f64::consts::PI).powi(-(2 * j as i32));
    let (mut p, mut dp) = (1.0f64, 0.0f64);
    for i in 0..(2 * j - 1) {
        let f = w + i as f64;
        dp = dp * f.abs() + p;
        p *= f.abs();
    }
    let xp = x.powf(-w - 2.0 * j as f64 + 1.0);
    let lx = x.ln().abs();
    (SAFETY * c * p * xp, SAFETY * c * (dp + lx * p) * xp)
}

struct Pair {
    value: Real,
    deriv: Real,
}

fn em_pair(w: &Arg, a: &Arg, cfg: &EMConfig, prec: u32) -> Result<Pair> {
    let wf = w.to_f64();
    let af = a.to_f64();
    let jmax = corrections_for(wf, cfg);
    let budget = cfg.target_abs_err / 2.0;

    // choose N from the first omitted term
    let mut n = cfg.truncation_start.max(2);
    let trunc = loop {
        let (bv, bd) = omitted_term_bound(wf, jmax + 1, n as f64 + af);
        let b = bv.max(bd);
        if b <= budget {
            break (bv, bd);
        }
        if n >= MAX_TERMS {
            break (bv, bd);
        }
        n = (n + n / 2).max(n + 1).min(MAX_TERMS);
    };

    let w_f = w.to_float(prec);
    let a_f = a.to_float(prec);
    let mut sum = Float::new(prec);
    let mut dsum = Float::new(prec);
    let mut max_term = 0f64;
    for k in 0..n {
        let base = Float::with_val(prec, &a_f + k);
        let l = Float::with_val(prec, base.ln_ref());
        let t = (-Float::with_val(prec, &w_f * &l)).exp();
        max_term = max_term.max(t.to_f64().abs() * (1.0 + l.to_f64().abs()));
        dsum -= Float::with_val(prec, &t * &l);
        sum += t;
    }

    let x = Float::with_val(prec, &a_f + n);
    let lx = Float::with_val(prec, x.ln_ref());
    let x_mw = (-Float::with_val(prec, &w_f * &lx)).exp(); // x^{-w}
    let wm1 = Float::with_val(prec, &w_f - 1);
    // x^{1-w}/(w-1)
    let lead = Float::with_val(prec, &x_mw * &x) / &wm1;
    sum += &lead;
    dsum -= Float::with_val(prec, &lead * &lx);
    dsum -= Float::with_val(prec, &lead / &wm1);
    let half = Float::with_val(prec, &x_mw / 2u32);
    sum += &half;
    dsum -= Float::with_val(prec, &half * &lx);

    let coeffs = em_coeffs(jmax, prec);
    let x2 = Float::with_val(prec, &x * &x);
    // p = (w)_{2j-1}, dp = d/dw p, xp = x^{-w-2j+1}
    let mut p = Float::with_val(prec, &w_f);
    let mut dp = Float::with_val(prec, 1u32);
    let mut xp = Float::with_val(prec, &x_mw / &x);
    for (idx, c) in coeffs.iter().enumerate() {
        let j = idx + 1;
        if j > 1 {
            for i in [2 * j - 3, 2 * j - 2] {
                let f = Float::with_val(prec, &w_f + i as u32);
                dp = Float::with_val(prec, &dp * &f) + &p;
                p *= &f;
            }
            xp /= &x2;
        }
        let cx = Float::with_val(prec, c * &xp);
        sum += Float::with_val(prec, &cx * &p);
        let d = Float::with_val(prec, &dp - Float::with_val(prec, &p * &lx));
        dsum += Float::with_val(prec, &cx * &d);
    }

    let u = 2f64.powi(1 - prec as i32);
    let scale = max_term.max(lead.to_f64().abs() * (1.0 + lx.to_f64().abs()) + 1.0);
    let rounding = 4.0 * (n as f64 + jmax as f64 + 8.0) * scale * u;
    if trunc.0.max(trunc.1) > budget {
        // more precision cannot shrink the truncation error
        return Err(Error::Convergence {
            function: "hurwitz_zeta",
            best: sum.to_f64(),
            bound: trunc.0.max(trunc.1),
        });
    }
    let value = Real::new(sum, trunc.0 + rounding);
    let deriv = Real::new(dsum, trunc.1 + rounding);
    Ok(Pair { value, deriv })
}

fn with_escalation<T>(
    function: &'static str,
    cfg: &EMConfig,
    mut run: impl FnMut(u32) -> Result<T>,
    err_of: impl Fn(&T) -> (f64, f64),
) -> Result<T> {
    cfg.validate()?;
    let mut prec = cfg.precision_bits;
    loop {
        let out = run(prec)?;
        let (err, best) = err_of(&out);
        if err <= cfg.target_abs_err {
            return Ok(out);
        }
        if prec >= cfg.max_precision_bits {
            return Err(Error::Convergence {
                function,
                best,
                bound: err,
            });
        }
        prec = (prec + prec / 2).min(cfg.max_precision_bits);
    }
}

/// `(ζ(w, a), ∂_w ζ(w, a))` from one Euler–Maclaurin pass.
pub fn hurwitz_pair(w: impl Into<Arg>, a: impl Into<Arg>, cfg: &EMConfig) -> Result<(Real, Real)> {
    let (w, a) = (w.into(), a.into());
    check_args("hurwitz_zeta", &w, &a)?;
    let pair = with_escalation(
        "hurwitz_zeta",
        cfg,
        |prec| em_pair(&w, &a, cfg, prec),
        |p| {
            (
                p.value.err_bound.max(p.deriv.err_bound),
                p.value.to_f64(),
            )
        },
    )?;
    Ok((pair.value, pair.deriv))
}

/// `ζ(w, a)` for real `w ≠ 1` and `a > 0`.
pub fn hurwitz_zeta(w: impl Into<Arg>, a: impl Into<Arg>, cfg: &EMConfig) -> Result<Real> {
    let (w, a) = (w.into(), a.into());
    check_args("hurwitz_zeta", &w, &a)?;
    with_escalation(
        "hurwitz_zeta",
        cfg,
        |prec| em_pair(&w, &a, cfg, prec).map(|p| p.value),
        |v| (v.err_bound, v.to_f64()),
    )
}

/// `∂ζ/∂w (w, a)`.
pub fn hurwitz_zeta_dw(w: impl Into<Arg>, a: impl Into<Arg>, cfg: &EMConfig) -> Result<Real> {
    hurwitz_pair(w, a, cfg).map(|(_, d)| d)
}

/// `ζ'(-k) = ∂_w ζ(w, 1)` at `w = -k`, cached per precision and target.
pub fn riemann_zeta_deriv(k: u32, cfg: &EMConfig) -> Result<Real> {
    static CACHE: Memo<(u32, u32, u64, u64), Result<Real>> = Memo::new();
    let key = (k, cfg.precision_bits, cfg.target_abs_err.to_bits(), cfg.truncation_start);
    CACHE.get_or_insert_with(&key, || hurwitz_zeta_dw(-(k as i64), 1i64, cfg))
}

/// Digamma `ψ(z)` for `z > 0`: upward shift, then the asymptotic series
/// `ln x - 1/(2x) - Σ B_{2j}/(2j x^{2j})`.
pub fn digamma(z: impl Into<Arg>, cfg: &EMConfig) -> Result<Real> {
    let z = z.into();
    if !z.is_positive() {
        return Err(Error::domain(format!("digamma: argument {z} must be positive")));
    }
    with_escalation("digamma", cfg, |prec| digamma_at(&z, cfg, prec), |v| (v.err_bound, v.to_f64()))
}

/// Shift count so that the first omitted asymptotic term
/// `|B_{2J+2}| / (c x^{2J+2})` is below `budget`.
fn asymptotic_shift(zf: f64, jmax: usize, budget: f64) -> u64 {
    let mut m = 0u64;
    loop {
        let x = zf + m as f64;
        let b = SAFETY * omitted_bernoulli(jmax + 1) * x.powi(-(2 * jmax as i32 + 2));
        if b <= budget || m > MAX_TERMS {
            return m;
        }
        m = (m + m / 2).max(m + 4);
    }
}

fn omitted_bernoulli(j: usize) -> f64 {
    bernoulli_number(2 * j).to_f64().abs()
}

fn digamma_at(z: &Arg, cfg: &EMConfig, prec: u32) -> Result<Real> {
    let jmax = 20usize;
    let zf = z.to_f64();
    let m = asymptotic_shift(zf, jmax, cfg.target_abs_err / 2.0);
    let z_f = z.to_float(prec);
    let mut acc = Float::new(prec);
    for k in 0..m {
        acc -= Float::with_val(prec, &z_f + k).recip();
    }
    let x = Float::with_val(prec, &z_f + m);
    acc += Float::with_val(prec, x.ln_ref());
    acc -= Float::with_val(prec, x.recip_ref()) / 2u32;
    let x2 = Float::with_val(prec, &x * &x);
    let mut xp = Float::with_val(prec, 1u32);
    for j in 1..=jmax {
        xp /= &x2;
        let b = Float::with_val(prec, &bernoulli_number(2 * j)) / (2 * j as u32);
        acc -= b * &xp;
    }
    let trunc = SAFETY * omitted_bernoulli(jmax + 1) * x.to_f64().powi(-(2 * jmax as i32 + 2));
    let u = 2f64.powi(1 - prec as i32);
    let rounding = 4.0 * (m as f64 + 30.0) * (acc.to_f64().abs() + 1.0 / zf + x.to_f64().ln().abs()) * u;
    Ok(Real::new(acc, trunc + rounding))
}

/// `ln Γ(z)` for `z > 0` by Stirling's series after an upward shift.
pub fn ln_gamma(z: impl Into<Arg>, cfg: &EMConfig) -> Result<Real> {
    let z = z.into();
    if !z.is_positive() {
        return Err(Error::domain(format!("ln_gamma: argument {z} must be positive")));
    }
    with_escalation("ln_gamma", cfg, |prec| ln_gamma_at(&z, cfg, prec), |v| (v.err_bound, v.to_f64()))
}

fn ln_gamma_at(z: &Arg, cfg: &EMConfig, prec: u32) -> Result<Real> {
    let jmax = 20usize;
    let zf = z.to_f64();
    let m = asymptotic_shift(zf, jmax, cfg.target_abs_err / 2.0);
    let z_f = z.to_float(prec);
    let mut acc = Float::new(prec);
    let mut shift_mag = 0f64;
    for k in 0..m {
        let l = Float::with_val(prec, &z_f + k).ln();
        shift_mag += l.to_f64().abs();
        acc -= l;
    }
    let x = Float::with_val(prec, &z_f + m);
    let lx = Float::with_val(prec, x.ln_ref());
    acc += Float::with_val(prec, &x - 0.5f64) * &lx;
    acc -= &x;
    let two_pi = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
    acc += two_pi.ln() / 2u32;
    let x2 = Float::with_val(prec, &x * &x);
    let mut xp = Float::with_val(prec, x.recip_ref());
    for j in 1..=jmax {
        if j > 1 {
            xp /= &x2;
        }
        let b = Float::with_val(prec, &bernoulli_number(2 * j)) / ((2 * j * (2 * j - 1)) as u32);
        acc += b * &xp;
    }
    let trunc = SAFETY * omitted_bernoulli(jmax + 1) * x.to_f64().powi(-(2 * jmax as i32 + 1));
    let u = 2f64.powi(1 - prec as i32);
    let scale = shift_mag + x.to_f64() * (1.0 + lx.to_f64().abs()) + 2.0;
    let rounding = 4.0 * (m as f64 + 30.0) * scale * u;
    Ok(Real::new(acc, trunc + rounding))
}
