//! Truncated power series in `t` whose coefficients are polynomials in `s`,
//! used to check the `T_{n,d}` generating function exactly.

use crate::exact::{binomial_rat, factorial, Rational};
use crate::poly::RationalPolynomial as Poly;

use super::t_poly;

/// `Σ_{i ≤ order} c_i t^i` with `c_i ∈ Q[s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    coeffs: Vec<Poly>,
}

impl PolySeries {
    pub fn zero(order: usize) -> Self {
        PolySeries {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = Poly::one();
        out
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        PolySeries {
            coeffs: coeffs.into_iter().map(Poly::constant).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        PolySeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> Self {
        PolySeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `exp(c·self)` for a series with zero constant term.
    pub fn exp_scaled(&self, c: &Poly) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs a zero constant term");
        let order = self.order();
        let x = self.scale(c);
        let mut out = Self::one(order);
        let mut power = Self::one(order);
        for j in 1..=order {
            power = power.mul(&x);
            let w = Poly::constant(Rational::from((1, factorial(j as u32))));
            out = out.add(&power.scale(&w));
        }
        out
    }
}

/// `arcsinh t = Σ_m (-1)^m binom(2m, m) t^{2m+1} / (4^m (2m+1))`, truncated.
pub fn arcsinh_series(order: usize) -> PolySeries {
    let mut coeffs = vec![Rational::new(); order + 1];
    let mut m = 0usize;
    while 2 * m < order {
        // binom(-1/2, m) = (-1)^m binom(2m, m) / 4^m
        let c = binomial_rat(&Rational::from((-1, 2)), m as u32) / Rational::from(2 * m as u64 + 1);
        coeffs[2 * m + 1] = c;
        m += 1;
    }
    PolySeries::from_rationals(coeffs)
}

/// Right side of the generating function,
/// `(2/d!) (2 arcsinh t)^d (t + √(1+t²))^{2s}`, as a truncated series in `t`.
pub fn t_generating_series(d: u32, order: usize) -> PolySeries {
    let a = arcsinh_series(order);
    // t + √(1+t²) = exp(arcsinh t)
    let e = a.exp_scaled(&Poly::monomial(2, 1));
    let two_a = a.scale(&Poly::constant(2));
    let mut pow = PolySeries::one(order);
    for _ in 0..d {
        pow = pow.mul(&two_a);
    }
    pow.mul(&e)
        .scale(&Poly::constant(Rational::from((2, factorial(d)))))
}

/// Compares `Σ_n T_{n,d}(s) (2t)^{n-1}` with [`t_generating_series`]
/// coefficientwise for `d ≤ d_max` through `t^order`. Returns the first
/// mismatch as `(d, power of t)`.
pub fn check_t_generating_function(d_max: u32, order: usize) -> Result<(), (u32, usize)> {
    for d in 0..=d_max {
        let rhs = t_generating_series(d, order);
        for i in 0..=order {
            let n = i as u32 + 1;
            let lhs = t_poly(n, d as i64).scale(&Rational::from(crate::exact::Integer::from(1) << i as u32));
            if &lhs != rhs.coeff(i) {
                return Err((d, i));
            }
        }
    }
    Ok(())
}
