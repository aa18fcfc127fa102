//! Second backend for `ζ(s, a)`:
//!
//! ```text
//! ζ(s,a) = a^{-s}/2 + a^{1-s}/(s-1)
//!        + 2 ∫_0^∞ sin(s·atan(x/a)) / ((x² + a²)^{s/2} (e^{2πx} - 1)) dx
//! ```
//!
//! The integral is done with adaptive Gauss–Legendre panels.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::{finite, ComplexScalar, ComplexSum};
use crate::error::{Error, Result};

const GL_ORDER: usize = 20;
const MAX_DEPTH: u32 = 10;
const MAX_X: f64 = 400.0;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on `P_n`.
fn gauss_legendre() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| {
        let n = GL_ORDER;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
        }
        out
    })
}

fn gl_panel(f: &impl Fn(f64) -> ComplexScalar, lo: f64, hi: f64) -> ComplexScalar {
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut sum = ComplexSum::default();
    for &(x, w) in gauss_legendre() {
        sum.add(f(mid + half * x) * (w * half));
    }
    sum.value()
}

fn adaptive(
    f: &impl Fn(f64) -> ComplexScalar,
    lo: f64,
    hi: f64,
    whole: ComplexScalar,
    tol: f64,
    depth: u32,
) -> ComplexScalar {
    let mid = 0.5 * (lo + hi);
    let left = gl_panel(f, lo, mid);
    let right = gl_panel(f, mid, hi);
    let split = left + right;
    if (split - whole).norm() <= tol || depth >= MAX_DEPTH {
        return split;
    }
    adaptive(f, lo, mid, left, tol / 2.0, depth + 1) + adaptive(f, mid, hi, right, tol / 2.0, depth + 1)
}

/// `ζ(s, a)` from Hermite's integral, `a > 0`, `s ≠ 1`.
pub fn hurwitz_zeta_hermite(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidArgument(format!("a = {a} must be positive")));
    }
    if s == ComplexScalar::new(1.0, 0.0) {
        return Err(Error::Pole("ζ(s, a) has a pole at s = 1".into()));
    }
    let a2 = a * a;
    let half_s = s * 0.5;
    let integrand = |x: f64| {
        let num = (s * (x / a).atan()).sin();
        let den = (half_s * (x * x + a2).ln()).exp() * (2.0 * PI * x).exp_m1();
        num / den
    };

    let peak = (-s.re).max(0.0) / (2.0 * PI) + 1.0;
    let mut panels = Vec::new();
    // Fine panels near the origin, where atan(x/a) varies on the scale a.
    let mut x = 0.0;
    let first = a.min(0.5);
    while x < 1.0 {
        let next = (x + first).min(1.0);
        panels.push((x, next));
        x = next;
    }
    let mut total = ComplexSum::default();
    let mut mass = 0.0;
    let mut quiet = 0;
    let mut idx = 0;
    loop {
        let (lo, hi) = if idx < panels.len() {
            panels[idx]
        } else {
            let lo = x;
            x += 1.0;
            (lo, x)
        };
        idx += 1;
        let whole = gl_panel(&integrand, lo, hi);
        let tol = 2e-15 * (mass + whole.norm()).max(1e-300);
        let piece = adaptive(&integrand, lo, hi, whole, tol, 0);
        total.add(piece);
        mass += piece.norm();
        if hi >= peak && piece.norm() <= 1e-18 * mass {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        if hi >= MAX_X {
            break;
        }
    }
    let a_pow = (-s * a.ln()).exp();
    let v = a_pow * 0.5 + a_pow * a / (s - 1.0) + total.value() * 2.0;
    finite(v, "hurwitz_zeta_hermite")
}
