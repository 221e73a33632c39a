//! Barnes multiple zeta/gamma and Milnor gamma functions in log space,
//! for real positive arguments.
//!
//! `ζ_n(w, z) = Σ_k b_{n,k}(z) ζ(w-k, z)`, `log Γ_n(z) = Σ_k b_{n,k}(z) ζ'(-k, z)`
//! and `log G_r(z) = Σ_l c_{r,l}(z) log Γ_l(z)`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{binomial, Rational};
use crate::hurwitz::{hurwitz_pair, hurwitz_zeta, hurwitz_zeta_dw};
use crate::real::{Arg, EMConfig, Real};
use crate::sphere::{b_barnes, c_milnor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaKind {
    Barnes(u32),
    Milnor(u32),
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaKind::Barnes(n) => write!(f, "barnes({n})"),
            GammaKind::Milnor(r) => write!(f, "milnor({r})"),
        }
    }
}

/// Logarithm of a gamma-type value together with what it is.
#[derive(Clone, Debug, PartialEq)]
pub struct LogGammaValue {
    pub log_value: Real,
    pub kind: GammaKind,
    pub argument: Arg,
}

fn positive(function: &str, z: &Arg) -> Result<()> {
    if z.is_positive() {
        Ok(())
    } else {
        Err(Error::domain(format!("{function}: argument {z} must be positive")))
    }
}

/// Barnes zeta `ζ_n(w, z)`; poles at `w = 1, …, n`.
pub fn barnes_zeta(n: u32, w: impl Into<Arg>, z: impl Into<Arg>, cfg: &EMConfig) -> Result<Real> {
    let (w, z) = (w.into(), z.into());
    if n == 0 {
        return Err(Error::domain("barnes_zeta: n must be positive"));
    }
    positive("barnes_zeta", &z)?;
    if w.is_integer() {
        let wf = w.to_f64();
        if (1.0..=n as f64).contains(&wf) {
            return Err(Error::Pole {
                function: "barnes_zeta",
                at: wf,
            });
        }
    }
    let prec = cfg.precision_bits;
    let mut acc = Real::zero(prec);
    for k in 0..n as i64 {
        let b = z.eval_poly(&b_barnes(n, k), prec);
        let wk = w.add_rational(&Rational::from(-k));
        let zeta = hurwitz_zeta(wk, z.clone(), cfg)?;
        acc = acc.add(&b.mul(&zeta));
    }
    Ok(acc)
}

/// `ζ'(-k, z)` for `k = 0..count`.
fn zeta_derivs_at(count: u32, z: &Arg, cfg: &EMConfig) -> Result<Vec<Real>> {
    (0..count as i64)
        .into_par_iter()
        .map(|k| hurwitz_pair(-k, z.clone(), cfg).map(|(_, d)| d))
        .collect()
}

fn combine_barnes(n: u32, z: &Arg, derivs: &[Real], prec: u32) -> Real {
    let mut acc = Real::zero(prec);
    for k in 0..n as i64 {
        let b = z.eval_poly(&b_barnes(n, k), prec);
        acc = acc.add(&b.mul(&derivs[k as usize]));
    }
    acc
}

/// `log Γ_n(z)` for `z > 0`. `n = 0` gives `-log z` (`Γ_0(z) = 1/z`).
pub fn log_barnes_gamma(n: u32, z: impl Into<Arg>, cfg: &EMConfig) -> Result<LogGammaValue> {
    let z = z.into();
    positive("log_barnes_gamma", &z)?;
    let prec = cfg.precision_bits;
    let log_value = if n == 0 {
        Real::new(z.to_float(prec), 0.0).ln()?.neg()
    } else {
        let derivs = zeta_derivs_at(n, &z, cfg)?;
        combine_barnes(n, &z, &derivs, prec)
    };
    Ok(LogGammaValue {
        log_value,
        kind: GammaKind::Barnes(n),
        argument: z,
    })
}

/// `log Γ_l(z)` for `l = 1..=max_n`, sharing the `ζ'(-k, z)` evaluations.
pub fn log_barnes_gammas(max_n: u32, z: impl Into<Arg>, cfg: &EMConfig) -> Result<Vec<Real>> {
    let z = z.into();
    positive("log_barnes_gamma", &z)?;
    let derivs = zeta_derivs_at(max_n, &z, cfg)?;
    Ok((1..=max_n)
        .map(|n| combine_barnes(n, &z, &derivs, cfg.precision_bits))
        .collect())
}

/// `log G_r(z)` through the reduction to Barnes gammas.
pub fn log_milnor_gamma(r: u32, z: impl Into<Arg>, cfg: &EMConfig) -> Result<LogGammaValue> {
    let z = z.into();
    if r == 0 {
        return Err(Error::domain("log_milnor_gamma: depth must be positive"));
    }
    positive("log_milnor_gamma", &z)?;
    let gammas = log_barnes_gammas(r, z.clone(), cfg)?;
    let log_value = milnor_from_barnes(r, &z, &gammas, cfg.precision_bits);
    Ok(LogGammaValue {
        log_value,
        kind: GammaKind::Milnor(r),
        argument: z,
    })
}

/// `Σ_l c_{r,l}(z) log Γ_l(z)` from precomputed `log Γ_1..`.
pub fn milnor_from_barnes(r: u32, z: &Arg, gammas: &[Real], prec: u32) -> Real {
    let mut acc = Real::zero(prec);
    for l in 1..=r as i64 {
        let c = z.eval_poly(&c_milnor(r, l), prec);
        acc = acc.add(&c.mul(&gammas[l as usize - 1]));
    }
    acc
}

/// `log G_r(z) = ζ'(1-r, z)` straight from the definition.
pub fn log_milnor_gamma_direct(r: u32, z: impl Into<Arg>, cfg: &EMConfig) -> Result<Real> {
    if r == 0 {
        return Err(Error::domain("log_milnor_gamma: depth must be positive"));
    }
    hurwitz_zeta_dw(1 - r as i64, z, cfg)
}

/// Residuals of the ladder relation and of its `m`-fold product form.
#[derive(Clone, Debug)]
pub struct LadderReport {
    pub n: u32,
    pub z: f64,
    /// `log Γ_n(z+1) - log Γ_n(z) + log Γ_{n-1}(z)`.
    pub step_residual: f64,
    /// `(m, residual)` for `log Γ_n(z+m) = Σ_l (-1)^l binom(m,l) log Γ_{n-l}(z)`.
    pub product_residuals: Vec<(u32, f64)>,
    pub tolerance: f64,
    pub passed: bool,
}

pub fn ladder_check(n: u32, z: impl Into<Arg>, cfg: &EMConfig) -> Result<LadderReport> {
    let z = z.into();
    if n == 0 {
        return Err(Error::domain("ladder_check: n must be positive"));
    }
    positive("ladder_check", &z)?;
    let tolerance = 1e-10;
    let lg = |k: u32, at: &Arg| log_barnes_gamma(k, at.clone(), cfg).map(|v| v.log_value);
    let base: Vec<Real> = (0..=n).map(|k| lg(k, &z)).collect::<Result<_>>()?;
    let one = z.add_rational(&Rational::from(1));
    let step = lg(n, &one)?.sub(&base[n as usize]).add(&base[n as usize - 1]);
    let step_residual = step.to_f64().abs();
    let mut product_residuals = Vec::new();
    for m in 0..n {
        let shifted = lg(n, &z.add_rational(&Rational::from(m)))?;
        let mut rhs = Real::zero(cfg.precision_bits);
        for l in 0..=m {
            let c = Rational::from(binomial(m as i64, l as i64) * crate::exact::sign(l as i64));
            rhs = rhs.add(&base[(n - l) as usize].scale(&c));
        }
        product_residuals.push((m, shifted.sub(&rhs).to_f64().abs()));
    }
    let passed = step_residual <= tolerance && product_residuals.iter().all(|(_, r)| *r <= tolerance);
    Ok(LadderReport {
        n,
        z: z.to_f64(),
        step_residual,
        product_residuals,
        tolerance,
        passed,
    })
}
