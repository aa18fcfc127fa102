use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::phase::{cos_pi, sin_pi};
use super::CompensatedSum;
use crate::error::{Error, Result};

/// A truncated Fourier series value and a bound on the omitted tail.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourierBernoulli {
    pub value: f64,
    pub tail_bound: f64,
}

/// `B_n(a)` for `0 < a < 1` from the first `m` Fourier modes:
///
/// ```text
/// B_{2k}(a)   = (-1)^{k+1} 2 (2k)!   / (2π)^{2k}   Σ cos(2πja) / j^{2k}
/// B_{2k-1}(a) = (-1)^k     2 (2k-1)! / (2π)^{2k-1} Σ sin(2πja) / j^{2k-1}
/// ```
///
/// The odd-order tail is bounded by summation by parts, which needs
/// `sin πa ≠ 0`.
pub fn fourier_bernoulli(n: u32, a: f64, m: u64) -> Result<FourierBernoulli> {
    if n == 0 || m == 0 || !(a > 0.0 && a < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "fourier_bernoulli needs n >= 1, M >= 1 and 0 < a < 1 (n = {n}, a = {a}, M = {m})"
        )));
    }
    let even = n % 2 == 0;
    let k = if even { n / 2 } else { (n + 1) / 2 };
    let sign = if (if even { k + 1 } else { k }) % 2 == 0 { 1.0 } else { -1.0 };
    let fact: f64 = (1..=n).map(f64::from).product();
    let prefactor = 2.0 * fact / (2.0 * PI).powi(n as i32);
    let p = n as i32;
    let mut sum = CompensatedSum::default();
    for j in (1..=m).rev() {
        let jf = j as f64;
        // reduce j·a mod 1 before scaling by 2
        let x = 2.0 * ((a * jf) - (a * jf).floor() + a.mul_add(jf, -(a * jf)));
        let trig = if even { cos_pi(x) } else { sin_pi(x) };
        sum.add(trig / jf.powi(p));
    }
    let tail = if even {
        (m as f64).powi(1 - p) / (p - 1) as f64
    } else {
        ((m + 1) as f64).powi(-p) / sin_pi(a).abs()
    };
    Ok(FourierBernoulli {
        value: sign * prefactor * sum.value(),
        tail_bound: prefactor * tail,
    })
}
