//! Double-precision evaluation of `ζ(s,a)`, `Li_s(e^{2πia})`, `Γ`, `ψ` and the
//! six combined functions.
//!
//! Direct methods (Euler–Maclaurin for `ζ(s,a)`, a partial sum with an
//! asymptotic tail for `Li_s`) are used for `Re s >= -1/2`. Left of that line
//! every function is obtained from its reflection partner at `1 - s`, which
//! then lies in the direct region. Trigonometric factors go through
//! [`sin_pi`]/[`cos_pi`], so trivial zeros come out as exact zeros.

mod combined;
mod fourier;
mod gamma;
mod hermite;
mod hurwitz;
mod periodic;
mod phase;

pub use combined::{
    combined, combined_with_contract, functional_equation_residual, multiplication_residual,
    Evaluation, FunctionalEquationCheck,
};
pub use fourier::{fourier_bernoulli, FourierBernoulli};
pub use gamma::{digamma_real, gamma_complex};
pub use hermite::hurwitz_zeta_hermite;
pub use hurwitz::{hurwitz_zeta, riemann_zeta};
pub use periodic::periodic_zeta;
pub use phase::{cos_pi, cos_pi_complex, exp_i_pi, sin_pi, sin_pi_complex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A complex number `s = σ + it` in double precision.
pub type ComplexScalar = num_complex::Complex64;

/// The region in which numeric results are expected to meet `abs_tol`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrecisionContract {
    pub abs_tol: f64,
    pub max_abs_re: f64,
    pub max_abs_im: f64,
    pub a_min: f64,
    pub a_max: f64,
}

impl Default for PrecisionContract {
    fn default() -> Self {
        PrecisionContract {
            abs_tol: 1e-12,
            max_abs_re: 30.0,
            max_abs_im: 30.0,
            a_min: 1e-3,
            a_max: 1.0 - 1e-3,
        }
    }
}

impl PrecisionContract {
    pub fn covers(&self, s: ComplexScalar, a: f64) -> bool {
        s.re.abs() <= self.max_abs_re
            && s.im.abs() <= self.max_abs_im
            && a >= self.a_min
            && a <= self.a_max
    }
}

/// Where the direct series methods take over from reflection.
pub(crate) const DIRECT_RE_MIN: f64 = -0.5;

pub(crate) fn finite(v: ComplexScalar, what: &'static str) -> Result<ComplexScalar> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what))
    }
}

pub(crate) fn check_a_open(a: f64) -> Result<()> {
    if a > 0.0 && a < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("a = {a} must lie in (0, 1)")))
    }
}

/// Neumaier's compensated sum.
#[derive(Clone, Copy, Default, Debug)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[derive(Clone, Copy, Default, Debug)]
pub(crate) struct ComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexSum {
    pub fn add(&mut self, z: ComplexScalar) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> ComplexScalar {
        ComplexScalar::new(self.re.value(), self.im.value())
    }
}
