use std::f64::consts::PI;
use std::sync::OnceLock;

use super::gamma::gamma_complex;
use super::periodic::periodic_series;
use super::phase::{exp_i_pi, sin_pi_complex};
use super::{finite, ComplexScalar, ComplexSum, DIRECT_RE_MIN};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, factorial, rational_to_f64};

const EM_TERMS: usize = 12;
const EM_MAX_SHIFT: f64 = 2.0e5;

/// `B_{2j}/(2j)!` for `j = 1..=EM_TERMS+1`.
fn em_coefficients() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        (1..=EM_TERMS + 1)
            .map(|j| {
                let b = bernoulli_number(2 * j);
                rational_to_f64(&(b / crate::exact::int(factorial(2 * j as u64))))
            })
            .collect()
    })
}

fn one() -> ComplexScalar {
    ComplexScalar::new(1.0, 0.0)
}

/// Euler–Maclaurin after shifting the start of the sum to `x = a + N`.
pub(crate) fn hurwitz_em(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    let coeffs = em_coefficients();
    let sm1 = s - 1.0;
    // log of |(s)_{2J+1}|, the rising factorial in the first omitted term
    let log_rising: f64 = (0..=2 * EM_TERMS).map(|i| (s + i as f64).norm().ln()).sum();
    let log_next = coeffs[EM_TERMS].abs().ln() + log_rising;
    let scale_of = |x: f64| {
        let first = (-s * a.ln()).exp().norm();
        let integral = ((-sm1) * x.ln()).exp().norm() / sm1.norm();
        first.max(integral).max(1e-300)
    };
    let mut x = 15f64.max(s.norm()).max(a);
    loop {
        let bound = log_next - (s.re + 2.0 * EM_TERMS as f64 + 1.0) * x.ln();
        if bound <= (1e-17 * scale_of(x)).ln() || x > EM_MAX_SHIFT {
            break;
        }
        x *= 1.25;
    }
    let n = (x - a).ceil().max(0.0) as u64;
    let x = a + n as f64;

    let mut sum = ComplexSum::default();
    for k in (0..n).rev() {
        sum.add((-s * (a + k as f64).ln()).exp());
    }
    let ln_x = x.ln();
    let x_pow = (-s * ln_x).exp();
    sum.add(x_pow * x / sm1);
    sum.add(x_pow * 0.5);
    // B_{2j}/(2j)! · (s)_{2j-1} · x^{-s-2j+1}
    let mut rising = s;
    let mut xp = x_pow / x;
    let inv_x2 = 1.0 / (x * x);
    for (j, c) in coeffs.iter().take(EM_TERMS).enumerate() {
        if j > 0 {
            let k = 2.0 * j as f64;
            rising *= (s + (k - 1.0)) * (s + k);
            xp *= inv_x2;
        }
        sum.add(rising * xp * *c);
    }
    finite(sum.value(), "hurwitz_zeta")
}

/// `ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)` left of the direct region.
pub fn riemann_zeta(s: ComplexScalar) -> Result<ComplexScalar> {
    if s == one() {
        return Err(Error::Pole("ζ(s) has a pole at s = 1".into()));
    }
    if s.re >= DIRECT_RE_MIN {
        return hurwitz_em(s, 1.0);
    }
    let t = one() - s;
    let v = (s * 2f64.ln()).exp()
        * ((s - 1.0) * PI.ln()).exp()
        * sin_pi_complex(s * 0.5)
        * gamma_complex(t)?
        * hurwitz_em(t, 1.0)?;
    finite(v, "riemann_zeta")
}

/// `ζ(s, a) = Σ_{n>=0} (n + a)^{-s}`, continued to all `s ≠ 1`, for `a > 0`.
pub fn hurwitz_zeta(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidArgument(format!("a = {a} must be positive")));
    }
    if s == one() {
        return Err(Error::Pole("ζ(s, a) has a pole at s = 1".into()));
    }
    if s.re >= DIRECT_RE_MIN {
        return hurwitz_em(s, a);
    }
    // ζ(s, a) = ζ(s, {a}) - Σ_{k<⌊a⌋} ({a} + k)^{-s}
    let whole = a.floor();
    let frac = a - whole;
    let base = if frac == 0.0 {
        riemann_zeta(s)?
    } else {
        hurwitz_reflected(s, frac)?
    };
    let first = if frac == 0.0 { 1.0 } else { 0.0 };
    let mut sum = ComplexSum::default();
    sum.add(base);
    let mut k = first;
    while frac + k < a {
        sum.add(-(-s * (frac + k).ln()).exp());
        k += 1.0;
    }
    finite(sum.value(), "hurwitz_zeta")
}

/// `ζ(s,a) = Γ(1-s)/(2π)^{1-s} [e^{-iπ(1-s)/2} Li_{1-s}(e^{2πia}) + e^{iπ(1-s)/2} Li_{1-s}(e^{-2πia})]`.
fn hurwitz_reflected(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    let t = one() - s;
    let (li_pos, li_neg) = (periodic_series(t, a)?, periodic_series(t, 1.0 - a)?);
    let w = t * 0.5;
    let bracket = exp_i_pi(-w) * li_pos + exp_i_pi(w) * li_neg;
    let v = gamma_complex(t)? * (-t * (2.0 * PI).ln()).exp() * bracket;
    finite(v, "hurwitz_zeta")
}
