use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{combined, hurwitz_zeta, periodic_zeta};
use crate::values::FunctionTag;

/// 50 equispaced points on `[0.01, 0.49]`.
pub fn default_a_grid() -> Vec<f64> {
    (0..50).map(|i| 0.01 + 0.48 * i as f64 / 49.0).collect()
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() || grid.iter().any(|&a| !(a > 0.0 && a < 0.5)) {
        return Err(Error::InvalidArgument("a-grid must be non-empty and inside (0, 1/2)".into()));
    }
    Ok(())
}

/// `max_a |f(s, a)|` over the grid.
pub fn grid_max_abs(f: FunctionTag, s: Complex64, grid: &[f64]) -> Result<f64> {
    check_grid(grid)?;
    let mags = grid
        .par_iter()
        .map(|&a| Ok(combined(f, s, a)?.norm()))
        .collect::<Result<Vec<f64>>>()?;
    Ok(mags.into_iter().fold(0.0, f64::max))
}

/// Whether `f(s, ·)` stays within `tol` of zero on the whole grid.
pub fn vanishing_check(f: FunctionTag, s: Complex64, grid: &[f64], tol: f64) -> Result<bool> {
    Ok(grid_max_abs(f, s, grid)? <= tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Hurwitz,
    Periodic,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub a: f64,
    pub magnitude: f64,
}

/// The grid point maximising `|ζ(s, a)|` or `|Li_s(e^{2πia})|`.
pub fn nonvanishing_witness(kind: WitnessKind, s: Complex64, grid: &[f64]) -> Result<Witness> {
    check_grid(grid)?;
    let values = grid
        .par_iter()
        .map(|&a| {
            let v = match kind {
                WitnessKind::Hurwitz => hurwitz_zeta(s, a)?,
                WitnessKind::Periodic => periodic_zeta(s, a)?,
            };
            Ok(Witness { a, magnitude: v.norm() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(values
        .into_iter()
        .fold(Witness { a: grid[0], magnitude: -1.0 }, |best, w| {
            if w.magnitude > best.magnitude { w } else { best }
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use FunctionTag::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn vanishing_examples() {
        let g = default_a_grid();
        assert!(vanishing_check(P, re(-4.0), &g, 1e-10).unwrap());
        assert!(!vanishing_check(P, re(-3.0), &g, 1e-10).unwrap());
        assert!(vanishing_check(O, re(-3.0), &g, 1e-10).unwrap());
        assert!(vanishing_check(Z, re(1.0), &g, 1e-10).is_err());
        assert!(vanishing_check(Z, re(-2.0), &[0.6], 1e-10).is_err());
    }

    #[test]
    fn witness_examples() {
        let g = default_a_grid();
        let w = nonvanishing_witness(WitnessKind::Hurwitz, re(-2.0), &g).unwrap();
        // -B_3(a)/3 = -(a^3 - 3a^2/2 + a/2)/3
        let b3 = w.a.powi(3) - 1.5 * w.a * w.a + 0.5 * w.a;
        assert!(w.magnitude > 1e-3 && (w.magnitude - b3.abs() / 3.0).abs() < 1e-13);
        let w = nonvanishing_witness(WitnessKind::Periodic, Complex64::new(1.0, 5.0), &g).unwrap();
        assert!(w.magnitude > 1e-6);
        let w = nonvanishing_witness(WitnessKind::Hurwitz, re(0.5), &g).unwrap();
        assert!(w.magnitude > 1e-6);
    }
}
