use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{combined, cos_pi, gamma_complex, sin_pi, CompensatedSum};
use crate::values::FunctionTag;

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha == 0.0 || !(alpha.abs() <= 0.5) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {alpha} must lie in [-1/2, 1/2] without 0"
        )));
    }
    Ok(())
}

fn z_real(s: f64, alpha: f64) -> Result<f64> {
    Ok(combined(FunctionTag::Z, Complex64::new(s, 0.0), alpha.abs())?.re)
}

/// `|e^{2πiα} - 1|² = 2 - 2cos 2πα`.
fn chord2(alpha: f64) -> f64 {
    2.0 - 2.0 * cos_pi(2.0 * alpha)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeSum {
    pub value: f64,
    pub tail_bound: f64,
}

/// `Σ_{|n| <= K} |n + α|^{-s}` with the bound `2 (K - 1/2)^{1-s} / (s - 1)` on the rest.
pub fn lattice_sum(s: f64, alpha: f64, cutoff: u64) -> Result<LatticeSum> {
    check_alpha(alpha)?;
    if !(s > 1.0) || cutoff == 0 {
        return Err(Error::InvalidArgument(format!(
            "lattice sum needs s > 1 and a positive cutoff (s = {s}, K = {cutoff})"
        )));
    }
    let mut sum = CompensatedSum::default();
    for n in (1..=cutoff).rev() {
        let n = n as f64;
        sum.add((n + alpha).abs().powf(-s));
        sum.add((n - alpha).abs().powf(-s));
    }
    sum.add(alpha.abs().powf(-s));
    let k = cutoff as f64;
    Ok(LatticeSum {
        value: sum.value(),
        tail_bound: 2.0 * (k - 0.5).powf(1.0 - s) / (s - 1.0),
    })
}

/// Exponent `λ ∈ (1, 2)` and scale `C > 0` of the density
/// `ρ(α) = C |e^{2πiα} - 1|² Z(λ + 1, |α|)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralParams {
    pub lambda: f64,
    pub c: f64,
}

impl SpectralParams {
    pub fn new(lambda: f64, c: f64) -> Result<Self> {
        if !(lambda > 1.0 && lambda < 2.0) || !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "need 1 < lambda < 2 and C > 0 (lambda = {lambda}, C = {c})"
            )));
        }
        Ok(SpectralParams { lambda, c })
    }
}

pub fn spectral_density(p: SpectralParams, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(p.c * chord2(alpha) * z_real(p.lambda + 1.0, alpha)?)
}

/// Density of the increments of a subordinated fractional process:
///
/// ```text
/// ρ² δ^{2H} Γ(2H+1) sin(πH) / (2π)^{2+2H+2ψ} · (2 - 2cos 2πα)^{ψ+1} · Z(1+2H+2ψ, |α|)
/// ```
pub fn ft_spectral_density(rho: f64, delta: f64, h: f64, psi: f64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(rho > 0.0) || !(delta > 0.0) || !(h > 0.0 && h <= 1.0) || !(psi > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "need rho, delta, psi > 0 and 0 < H <= 1 (rho = {rho}, delta = {delta}, H = {h}, psi = {psi})"
        )));
    }
    let gamma = gamma_complex(Complex64::new(2.0 * h + 1.0, 0.0))?.re;
    let pref = rho * rho * delta.powf(2.0 * h) * gamma * sin_pi(h)
        / (2.0 * PI).powf(2.0 + 2.0 * h + 2.0 * psi);
    Ok(pref * chord2(alpha).powf(psi + 1.0) * z_real(1.0 + 2.0 * h + 2.0 * psi, alpha)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_examples() {
        let l = lattice_sum(2.0, 0.5, 1_000_000).unwrap();
        assert!((l.value - PI * PI).abs() <= l.tail_bound + 1e-10);
        let l = lattice_sum(3.0, -0.25, 1_000_000).unwrap();
        assert!((l.value - z_real(3.0, 0.25).unwrap()).abs() <= l.tail_bound + 1e-10);
        let l = lattice_sum(2.0, 1.0 / 3.0, 100_000).unwrap();
        assert!((l.value - z_real(2.0, 1.0 / 3.0).unwrap()).abs() <= l.tail_bound + 1e-10);
        assert!(lattice_sum(2.0, 0.0, 10).is_err());
    }

    #[test]
    fn density_examples() {
        let p = SpectralParams::new(1.5, 1.0).unwrap();
        let v = spectral_density(p, 0.5).unwrap();
        assert_eq!(v, 4.0 * z_real(2.5, 0.5).unwrap());
        assert_eq!(spectral_density(p, 0.17).unwrap(), spectral_density(p, -0.17).unwrap());
        for a in [0.01, 0.1, 0.49] {
            assert!(spectral_density(p, a).unwrap() > 0.0);
        }
        assert!(spectral_density(p, 0.0).is_err());
        assert!(SpectralParams::new(2.0, 1.0).is_err());
    }

    #[test]
    fn ft_density_against_lattice_sum() {
        let v = ft_spectral_density(1.0, 1.0, 0.5, 0.5, 0.25).unwrap();
        let l = lattice_sum(3.0, 0.25, 1_000_000).unwrap();
        let want = 1.0 / (2.0 * PI).powi(4) * 2f64.powf(1.5) * l.value;
        assert!((v - want).abs() <= 1e-12 * want.abs() + l.tail_bound);
        let double_rho = ft_spectral_density(2.0, 1.0, 0.5, 0.5, 0.25).unwrap();
        assert!((double_rho / v - 4.0).abs() < 1e-14);
        let double_delta = ft_spectral_density(1.0, 2.0, 0.3, 0.5, 0.25).unwrap();
        let base = ft_spectral_density(1.0, 1.0, 0.3, 0.5, 0.25).unwrap();
        assert!((double_delta / base - 2f64.powf(0.6)).abs() < 1e-14);
    }
}
