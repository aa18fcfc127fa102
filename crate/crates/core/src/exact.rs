//! Exact rational machinery: Bernoulli polynomials and numbers, Stirling
//! numbers of the second kind, binomial coefficients.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, QPolynomial};

/// Arbitrary-precision fraction in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Nearest-double conversion that survives numerators and denominators
/// beyond the `f64` range.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = q.numer();
    let d = q.denom();
    let shift = n.bits() as i64 - d.bits() as i64;
    let (n_s, d_s) = if shift > 0 {
        (n.clone(), d << (shift as usize))
    } else {
        (n << ((-shift) as usize), d.clone())
    };
    let mant = Rational::new(n_s, d_s).to_f64().unwrap_or(f64::NAN);
    mant * 2f64.powi(shift as i32)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

const DEFAULT_BERNOULLI_CACHE_CAP: usize = 64;

static BERNOULLI_CACHE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_BERNOULLI_CACHE_CAP);

fn bernoulli_cache() -> &'static RwLock<Vec<QPolynomial>> {
    static CACHE: OnceLock<RwLock<Vec<QPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![QPolynomial::one()]))
}

/// Changes how many Bernoulli polynomials are retained in the shared table.
/// Orders beyond the cap are still computed, just not stored.
pub fn set_bernoulli_cache_cap(cap: usize) {
    BERNOULLI_CACHE_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Appends `B_m` for `m = table.len()..=n` using
/// `sum_{k=0}^{m} C(m+1,k) B_k(t) = (m+1) t^m`.
fn extend_bernoulli(table: &mut Vec<QPolynomial>, n: usize) {
    while table.len() <= n {
        let m = table.len();
        let mut acc = QPolynomial::zero();
        for (k, bk) in table.iter().enumerate() {
            acc = acc.add(&bk.scale(&int(binomial(m as u64 + 1, k as u64))));
        }
        let next = QPolynomial::monomial(m, Rational::one())
            .sub(&acc.scale(&rat(1, m as i64 + 1)));
        table.push(next);
    }
}

/// The Bernoulli polynomial `B_n(t)`, defined by `z e^{tz}/(e^z - 1)`.
pub fn bernoulli_poly(n: usize) -> QPolynomial {
    {
        let table = bernoulli_cache().read().expect("bernoulli cache poisoned");
        if let Some(p) = table.get(n) {
            return p.clone();
        }
    }
    let cap = BERNOULLI_CACHE_CAP.load(Ordering::Relaxed);
    let mut table = bernoulli_cache().write().expect("bernoulli cache poisoned");
    if n < cap {
        extend_bernoulli(&mut table, n);
        return table[n].clone();
    }
    if table.len() < cap {
        extend_bernoulli(&mut table, cap - 1);
    }
    let mut local = table.clone();
    drop(table);
    extend_bernoulli(&mut local, n);
    local.swap_remove(n)
}

/// `B_n := B_n(1)`, so `B_1 = +1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_poly(n).coeffs().iter().fold(Rational::zero(), |acc, c| acc + c)
}

/// Stirling number of the second kind from the alternating sum
/// `r! S(n,r) = sum_{m=1}^{r} (-1)^{r-m} C(r,m) m^n`, with `S(0,0) = 1`.
pub fn stirling2(n: u32, r: u32) -> Result<BigInt> {
    if r > n {
        return Err(Error::InvalidArgument(format!(
            "stirling2 requires r <= n, got n = {n}, r = {r}"
        )));
    }
    if r == 0 {
        return Ok(if n == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let mut sum = BigInt::zero();
    for m in 1..=r {
        let term = binomial(r as u64, m as u64) * num_traits::pow(BigInt::from(m), n as usize);
        if (r - m) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum / factorial(r as u64))
}

pub fn poly_eval(p: &QPolynomial, x: &Rational) -> Rational {
    p.eval(x)
}

/// `p(1 - t)`.
pub fn poly_reflect(p: &QPolynomial) -> QPolynomial {
    p.compose(&Poly::new(vec![Rational::one(), -Rational::one()]))
}
