//! Exact values of `Z, P, Q, Y, O, X` at integers.
//!
//! At a rational point `a = r/q` the bodies live in `Q` or a cyclotomic field;
//! for symbolic `a` they are polynomials in `a`, rational functions of
//! `c = -e^{2πia}`, or a sum of the two.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{cos_frac, sin_frac, CyclotomicElement};
use crate::error::{Error, Result};
use crate::euler::{
    euler_at_zero, one_plus_c_inv, substitute_c_cyclotomic, substitute_c_numeric, GaussianRational,
    RationalFunctionC,
};
use crate::exact::{bernoulli_poly, factorial, int, rat, rational_to_f64, Rational};
use crate::poly::QPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FunctionTag {
    Z,
    P,
    Q,
    Y,
    O,
    X,
}

impl FunctionTag {
    pub const ALL: [FunctionTag; 6] = [
        FunctionTag::Z,
        FunctionTag::P,
        FunctionTag::Q,
        FunctionTag::Y,
        FunctionTag::O,
        FunctionTag::X,
    ];

    pub fn as_char(self) -> char {
        match self {
            FunctionTag::Z => 'Z',
            FunctionTag::P => 'P',
            FunctionTag::Q => 'Q',
            FunctionTag::Y => 'Y',
            FunctionTag::O => 'O',
            FunctionTag::X => 'X',
        }
    }

    /// Whether positive closed forms exist at even (`Z, P, Q`) or odd arguments.
    pub fn even_family(self) -> bool {
        matches!(self, FunctionTag::Z | FunctionTag::P | FunctionTag::Q)
    }
}

impl fmt::Display for FunctionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for FunctionTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Z" | "z" => Ok(FunctionTag::Z),
            "P" | "p" => Ok(FunctionTag::P),
            "Q" | "q" => Ok(FunctionTag::Q),
            "Y" | "y" => Ok(FunctionTag::Y),
            "O" | "o" => Ok(FunctionTag::O),
            "X" | "x" => Ok(FunctionTag::X),
            other => Err(Error::InvalidArgument(format!("unknown function `{other}`"))),
        }
    }
}

/// The argument `a`: either a reduced fraction in `(0, 1/2]` or a free symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArgumentSpec {
    RationalPoint { r: u64, q: u64 },
    Symbolic,
}

impl ArgumentSpec {
    pub fn rational(r: u64, q: u64) -> Result<Self> {
        if q < 2 || r == 0 || 2 * r > q || r.gcd(&q) != 1 {
            return Err(Error::InvalidArgument(format!(
                "a = {r}/{q} must be a reduced fraction with 0 < a <= 1/2"
            )));
        }
        Ok(ArgumentSpec::RationalPoint { r, q })
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match *self {
            ArgumentSpec::RationalPoint { r, q } => Some(rat(r as i64, q as i64)),
            ArgumentSpec::Symbolic => None,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            ArgumentSpec::RationalPoint { r, q } => Some(r as f64 / q as f64),
            ArgumentSpec::Symbolic => None,
        }
    }
}

impl fmt::Display for ArgumentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgumentSpec::RationalPoint { r, q } => write!(f, "{r}/{q}"),
            ArgumentSpec::Symbolic => f.write_str("a"),
        }
    }
}

impl FromStr for ArgumentSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "symbolic" || s == "a" {
            return Ok(ArgumentSpec::Symbolic);
        }
        let (r, q) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidArgument(format!("expected r/q or `symbolic`, got `{s}`")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad integer `{t}` in `{s}`")))
        };
        ArgumentSpec::rational(parse(r)?, parse(q)?)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ValueBody {
    Rational(Rational),
    Cyclotomic(CyclotomicElement),
    /// Polynomial in `a`.
    Polynomial(QPolynomial),
    /// Rational function of `c = -e^{2πia}`.
    RationalFunction(RationalFunctionC),
    /// `poly_part(a) + ratfunc_part(c)`.
    Mixed {
        poly_part: QPolynomial,
        ratfunc_part: RationalFunctionC,
    },
}

/// `π^{pi_exponent} × body`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactValue {
    pub pi_exponent: i32,
    pub body: ValueBody,
}

/// Which kind of number an exact value is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueClass {
    Rational { pi_exponent: i32 },
    Cyclotomic { pi_exponent: i32, order: u64 },
    PolynomialInA { pi_exponent: i32 },
    RationalFunctionOfC { pi_exponent: i32 },
    Mixed { pi_exponent: i32 },
}

fn superscript(n: i32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut s = String::new();
    if n < 0 {
        s.push('⁻');
    }
    for ch in n.unsigned_abs().to_string().chars() {
        s.push(DIGITS[ch.to_digit(10).unwrap() as usize]);
    }
    s
}

fn pi_prefix(e: i32) -> String {
    match e {
        0 => String::new(),
        1 => "π × ".into(),
        _ => format!("π{} × ", superscript(e)),
    }
}

impl fmt::Display for ValueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ValueClass::Rational { pi_exponent } => {
                write!(f, "{}rational", pi_prefix(pi_exponent))
            }
            ValueClass::Cyclotomic { pi_exponent, order } => {
                write!(f, "{}cyclotomic(ℚ(ζ_{order}))", pi_prefix(pi_exponent))
            }
            ValueClass::PolynomialInA { pi_exponent } => {
                write!(f, "{}polynomial in a", pi_prefix(pi_exponent))
            }
            ValueClass::RationalFunctionOfC { pi_exponent } => {
                write!(f, "{}rational function of c", pi_prefix(pi_exponent))
            }
            ValueClass::Mixed { pi_exponent } => {
                write!(f, "{}polynomial in a + rational function of c", pi_prefix(pi_exponent))
            }
        }
    }
}

impl ValueBody {
    pub fn kind(&self) -> &'static str {
        match self {
            ValueBody::Rational(_) => "rational",
            ValueBody::Cyclotomic(_) => "cyclotomic",
            ValueBody::Polynomial(_) => "polynomial",
            ValueBody::RationalFunction(_) => "rational_function",
            ValueBody::Mixed { .. } => "mixed",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ValueBody::Rational(q) => q.is_zero(),
            ValueBody::Cyclotomic(e) => e.is_zero(),
            ValueBody::Polynomial(p) => p.is_zero(),
            ValueBody::RationalFunction(f) => f.is_zero(),
            ValueBody::Mixed {
                poly_part,
                ratfunc_part,
            } => poly_part.is_zero() && ratfunc_part.is_zero(),
        }
    }

    fn scale(&self, k: &Rational) -> ValueBody {
        match self {
            ValueBody::Rational(q) => ValueBody::Rational(q * k),
            ValueBody::Cyclotomic(e) => ValueBody::Cyclotomic(e.scalar_mul(k)),
            ValueBody::Polynomial(p) => ValueBody::Polynomial(p.scale(k)),
            ValueBody::RationalFunction(f) => ValueBody::RationalFunction(f.scale_rational(k)),
            ValueBody::Mixed {
                poly_part,
                ratfunc_part,
            } => ValueBody::Mixed {
                poly_part: poly_part.scale(k),
                ratfunc_part: ratfunc_part.scale_rational(k),
            },
        }
    }

    /// Splits into `(polynomial in a, rational function of c)` for symbolic bodies.
    fn symbolic_parts(&self) -> Option<(QPolynomial, RationalFunctionC)> {
        match self {
            ValueBody::Rational(q) => Some((QPolynomial::constant(q.clone()), RationalFunctionC::zero())),
            ValueBody::Polynomial(p) => Some((p.clone(), RationalFunctionC::zero())),
            ValueBody::RationalFunction(f) => Some((QPolynomial::zero(), f.clone())),
            ValueBody::Mixed {
                poly_part,
                ratfunc_part,
            } => Some((poly_part.clone(), ratfunc_part.clone())),
            ValueBody::Cyclotomic(_) => None,
        }
    }

    /// Sum of two bodies; `None` when one is a rational-point value and the
    /// other symbolic.
    fn add(&self, other: &ValueBody) -> Option<ValueBody> {
        use ValueBody as B;
        match (self, other) {
            (B::Rational(x), B::Rational(y)) => Some(B::Rational(x + y)),
            (B::Rational(x), B::Cyclotomic(e)) | (B::Cyclotomic(e), B::Rational(x)) => {
                Some(B::Cyclotomic(e + &CyclotomicElement::from_rational(x.clone())))
            }
            (B::Cyclotomic(e), B::Cyclotomic(f)) => Some(B::Cyclotomic(e + f)),
            (B::Cyclotomic(_), _) | (_, B::Cyclotomic(_)) => None,
            _ => {
                let (p1, f1) = self.symbolic_parts()?;
                let (p2, f2) = other.symbolic_parts()?;
                Some(mixed(p1.add(&p2), f1.add(&f2)))
            }
        }
    }
}

/// Canonical symbolic body: constants in `ratfunc_part` are folded into the
/// polynomial and empty parts are dropped.
fn mixed(mut poly: QPolynomial, mut f: RationalFunctionC) -> ValueBody {
    if let Some(k) = f.as_constant() {
        if k.im.is_zero() {
            poly = poly.add(&QPolynomial::constant(k.re));
            f = RationalFunctionC::zero();
        }
    }
    if f.is_zero() {
        ValueBody::Polynomial(poly)
    } else if poly.is_zero() {
        ValueBody::RationalFunction(f)
    } else {
        ValueBody::Mixed {
            poly_part: poly,
            ratfunc_part: f,
        }
    }
}

impl ExactValue {
    pub fn new(pi_exponent: i32, body: ValueBody) -> Self {
        ExactValue { pi_exponent, body }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> ExactValue {
        ExactValue::new(self.pi_exponent, self.body.scale(k))
    }

    /// Sum of two values with the same power of `π` and compatible bodies.
    pub fn add(&self, other: &ExactValue) -> Result<ExactValue> {
        if self.pi_exponent != other.pi_exponent && !self.is_zero() && !other.is_zero() {
            return Err(Error::InvalidArgument("values carry different powers of π".into()));
        }
        let e = if self.is_zero() { other.pi_exponent } else { self.pi_exponent };
        let body = self
            .body
            .add(&other.body)
            .ok_or_else(|| Error::InvalidArgument("cannot add a symbolic and a point value".into()))?;
        Ok(ExactValue::new(e, body))
    }

    /// Replaces a body that is secretly rational by [`ValueBody::Rational`].
    pub fn collapsed(&self) -> ExactValue {
        let body = match &self.body {
            ValueBody::Cyclotomic(e) => e.as_rational().map(ValueBody::Rational),
            ValueBody::Polynomial(p) if p.degree().unwrap_or(0) == 0 => {
                Some(ValueBody::Rational(p.coeff(0)))
            }
            ValueBody::RationalFunction(f) => f
                .as_constant()
                .filter(|k| k.im.is_zero())
                .map(|k| ValueBody::Rational(k.re)),
            _ => None,
        };
        ExactValue::new(self.pi_exponent, body.unwrap_or_else(|| self.body.clone()))
    }

    pub fn classify(&self) -> ValueClass {
        let v = self.collapsed();
        let pi_exponent = v.pi_exponent;
        match &v.body {
            ValueBody::Rational(_) => ValueClass::Rational { pi_exponent },
            ValueBody::Cyclotomic(e) => ValueClass::Cyclotomic {
                pi_exponent,
                order: e.order(),
            },
            ValueBody::Polynomial(_) => ValueClass::PolynomialInA { pi_exponent },
            ValueBody::RationalFunction(_) => ValueClass::RationalFunctionOfC { pi_exponent },
            ValueBody::Mixed { .. } => ValueClass::Mixed { pi_exponent },
        }
    }

    /// The body as a complex number; `a` is needed only for symbolic bodies.
    pub fn body_numeric(&self, a: Option<f64>) -> Result<Complex64> {
        let need_a = || {
            a.ok_or_else(|| Error::InvalidArgument("symbolic value needs a numeric a".into()))
        };
        Ok(match &self.body {
            ValueBody::Rational(q) => Complex64::new(rational_to_f64(q), 0.0),
            ValueBody::Cyclotomic(e) => e.embed_complex(),
            ValueBody::Polynomial(p) => Complex64::new(p.eval_f64(need_a()?), 0.0),
            ValueBody::RationalFunction(f) => substitute_c_numeric(f, need_a()?)?,
            ValueBody::Mixed {
                poly_part,
                ratfunc_part,
            } => {
                let a = need_a()?;
                substitute_c_numeric(ratfunc_part, a)? + poly_part.eval_f64(a)
            }
        })
    }

    /// `π^{pi_exponent} × body` as a complex number.
    pub fn to_complex(&self, a: Option<f64>) -> Result<Complex64> {
        Ok(self.body_numeric(a)? * std::f64::consts::PI.powi(self.pi_exponent))
    }

    /// Specializes a symbolic value at `a = r/q`: polynomials are evaluated
    /// exactly and `c` becomes `-ζ_q^r`.
    pub fn at_rational(&self, r: u64, q: u64) -> Result<ExactValue> {
        let a = rat(r as i64, q as i64);
        let f_at = |f: &RationalFunctionC| substitute_c_cyclotomic(f, r as i64, q);
        let body = match &self.body {
            ValueBody::Rational(_) | ValueBody::Cyclotomic(_) => self.body.clone(),
            ValueBody::Polynomial(p) => ValueBody::Rational(p.eval_rational(&a)),
            ValueBody::RationalFunction(f) => ValueBody::Cyclotomic(f_at(f)?),
            ValueBody::Mixed {
                poly_part,
                ratfunc_part,
            } => ValueBody::Cyclotomic(
                &f_at(ratfunc_part)? + &CyclotomicElement::from_rational(poly_part.eval_rational(&a)),
            ),
        };
        Ok(ExactValue::new(self.pi_exponent, body))
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match &self.body {
            ValueBody::Rational(q) => q.to_string(),
            ValueBody::Cyclotomic(e) => e.to_string(),
            ValueBody::Polynomial(p) => p.display_in("a"),
            ValueBody::RationalFunction(r) => r.to_string(),
            ValueBody::Mixed {
                poly_part,
                ratfunc_part,
            } => format!("{} + {}", poly_part.display_in("a"), ratfunc_part),
        };
        if self.is_zero() {
            return f.write_str("0");
        }
        match self.pi_exponent {
            0 => f.write_str(&body),
            1 => write!(f, "π·({body})"),
            e => write!(f, "π^{e}·({body})"),
        }
    }
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        rat(1, 1)
    } else {
        rat(-1, 1)
    }
}

fn pow2(k: u32) -> Rational {
    int(num_bigint::BigInt::from(2).pow(k))
}

fn fact(k: u64) -> Rational {
    int(factorial(k))
}

/// `k · B_m` as a body: rational at a point, a polynomial in `a` otherwise.
fn bernoulli_body(k: &Rational, m: usize, a: &ArgumentSpec) -> ValueBody {
    let b = bernoulli_poly(m);
    match a.as_rational() {
        Some(x) => ValueBody::Rational(k * b.eval_rational(&x)),
        None => ValueBody::Polynomial(b.scale(k)),
    }
}

/// `k · Σ_{m=1}^{q} trig(rm, q) B_deg(m/q)` in a cyclotomic field.
fn trig_bernoulli_sum(
    k: &Rational,
    trig: fn(i64, u64) -> CyclotomicElement,
    deg: usize,
    r: u64,
    q: u64,
) -> ValueBody {
    let b = bernoulli_poly(deg);
    let mut acc = CyclotomicElement::zero();
    for m in 1..=q {
        let bm = b.eval_rational(&rat(m as i64, q as i64));
        if !bm.is_zero() {
            acc = &acc + &trig((r * m) as i64, q).scalar_mul(&bm);
        }
    }
    ValueBody::Cyclotomic(acc.scalar_mul(k))
}

fn q_pow(q: u64, e: u32) -> Rational {
    int(num_bigint::BigInt::from(q).pow(e))
}

/// `i(c-1)/(1+c)`, which equals `cot πa` at `c = -e^{2πia}`.
pub fn cot_pi_a() -> RationalFunctionC {
    let c = RationalFunctionC::c();
    c.sub(&RationalFunctionC::one())
        .scale(&GaussianRational::i())
        .div(&RationalFunctionC::one().add(&c))
        .expect("1 + c is nonzero")
}

fn half_sum(x: ExactValue, y: ExactValue) -> Result<ExactValue> {
    Ok(x.add(&y)?.scale(&rat(1, 2)))
}

/// Values at `s = -n`, `n ≥ 0`.
pub fn value_at_negative_int(f: FunctionTag, n: u32, a: ArgumentSpec) -> Result<ExactValue> {
    let n64 = n as i64;
    let deg = n as usize + 1;
    let body = match f {
        FunctionTag::Z => {
            let k = (sign(n64) - Rational::one()) / int(n64 + 1);
            bernoulli_body(&k, deg, &a)
        }
        FunctionTag::Y => {
            let k = (sign(n64 + 1) - Rational::one()) / int(n64 + 1);
            bernoulli_body(&k, deg, &a)
        }
        FunctionTag::P | FunctionTag::O => {
            let is_p = f == FunctionTag::P;
            match a {
                ArgumentSpec::RationalPoint { r, q } => {
                    let k = -(q_pow(q, n) * rat(2, 1)) / int(n64 + 1);
                    let trig = if is_p { cos_frac } else { sin_frac };
                    trig_bernoulli_sum(&k, trig, deg, r, q)
                }
                ArgumentSpec::Symbolic if n == 0 => {
                    if is_p {
                        ValueBody::Rational(rat(-1, 1))
                    } else {
                        ValueBody::RationalFunction(cot_pi_a())
                    }
                }
                ArgumentSpec::Symbolic => {
                    let base = euler_at_zero(n as usize).div(&one_plus_c_inv())?;
                    let v = if is_p {
                        base.scale_rational(&(Rational::one() - sign(n64)))
                    } else {
                        // -(1+(-1)^n)/i = i(1+(-1)^n)
                        base.scale(&GaussianRational::new(
                            Rational::zero(),
                            Rational::one() + sign(n64),
                        ))
                    };
                    mixed(QPolynomial::zero(), v)
                }
            }
        }
        FunctionTag::Q => {
            return half_sum(
                value_at_negative_int(FunctionTag::Z, n, a)?,
                value_at_negative_int(FunctionTag::P, n, a)?,
            )
        }
        FunctionTag::X => {
            return half_sum(
                value_at_negative_int(FunctionTag::Y, n, a)?,
                value_at_negative_int(FunctionTag::O, n, a)?,
            )
        }
    };
    Ok(ExactValue::new(0, body))
}

/// Values at positive `s` of the admissible parity: even for `Z, P, Q`,
/// odd for `Y, O, X`.
pub fn value_at_positive_int(f: FunctionTag, s: u32, a: ArgumentSpec) -> Result<ExactValue> {
    if s == 0 {
        return value_at_negative_int(f, 0, a);
    }
    let no_closed_form = Error::NoClosedForm {
        function: f.as_char(),
        s: s as i64,
    };
    if f.even_family() {
        if s == 1 {
            return Err(match f {
                FunctionTag::P => Error::Pole(
                    "P(1, a) = -2 log(2 sin πa) has no exact value; use the numeric evaluator".into(),
                ),
                _ => Error::Pole(format!("{f}(s, a) has a pole at s = 1")),
            });
        }
        if s % 2 == 1 {
            return Err(no_closed_form);
        }
    } else if s % 2 == 0 {
        return Err(no_closed_form);
    }
    let sl = s as i64;
    let body = match f {
        FunctionTag::Z => {
            let n = sl / 2;
            match a {
                ArgumentSpec::RationalPoint { r, q } => {
                    let k = sign(n + 1) * q_pow(q, s - 1) * pow2(s) / fact(s as u64);
                    trig_bernoulli_sum(&k, cos_frac, s as usize, r, q)
                }
                ArgumentSpec::Symbolic => {
                    let k = sign(n) * pow2(s) / fact(s as u64 - 1);
                    let v = euler_at_zero(s as usize - 1)
                        .scale_rational(&k)
                        .div(&one_plus_c_inv())?;
                    mixed(QPolynomial::zero(), v)
                }
            }
        }
        FunctionTag::P => {
            let n = sl / 2;
            let k = sign(n + 1) * pow2(s) / fact(s as u64);
            bernoulli_body(&k, s as usize, &a)
        }
        FunctionTag::Y => {
            let n = (sl + 1) / 2;
            match a {
                ArgumentSpec::RationalPoint { r, q } => {
                    let k = sign(n) * q_pow(q, s - 1) * pow2(s) / fact(s as u64);
                    trig_bernoulli_sum(&k, sin_frac, s as usize, r, q)
                }
                ArgumentSpec::Symbolic if s == 1 => ValueBody::RationalFunction(cot_pi_a()),
                ArgumentSpec::Symbolic => {
                    let k = sign(n) * pow2(s) / fact(s as u64 - 1);
                    let minus_i = GaussianRational::new(Rational::zero(), -k);
                    let v = euler_at_zero(s as usize - 1)
                        .scale(&minus_i)
                        .div(&one_plus_c_inv())?;
                    mixed(QPolynomial::zero(), v)
                }
            }
        }
        FunctionTag::O => {
            let n = (sl + 1) / 2;
            let k = sign(n) * pow2(s) / fact(s as u64);
            bernoulli_body(&k, s as usize, &a)
        }
        FunctionTag::Q => {
            return half_sum(
                value_at_positive_int(FunctionTag::Z, s, a)?,
                value_at_positive_int(FunctionTag::P, s, a)?,
            )
        }
        FunctionTag::X => {
            return half_sum(
                value_at_positive_int(FunctionTag::Y, s, a)?,
                value_at_positive_int(FunctionTag::O, s, a)?,
            )
        }
    };
    Ok(ExactValue::new(s as i32, body))
}

/// Dispatches on the sign of `s`.
pub fn special_value(f: FunctionTag, s: i64, a: ArgumentSpec) -> Result<ExactValue> {
    if s <= 0 {
        let n = u32::try_from(-s).map_err(|_| Error::InvalidArgument(format!("s = {s} out of range")))?;
        value_at_negative_int(f, n, a)
    } else {
        let s = u32::try_from(s).map_err(|_| Error::InvalidArgument(format!("s = {s} out of range")))?;
        value_at_positive_int(f, s, a)
    }
}

pub fn classify_value(v: &ExactValue) -> ValueClass {
    v.classify()
}

/// The non-positive integers `s` in `lo..=hi` where the symbolic value of `f`
/// is identically zero in `a`.
pub fn vanishing_pattern(f: FunctionTag, lo: i64, hi: i64) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for s in (lo..=hi.min(0)).rev() {
        if special_value(f, s, ArgumentSpec::Symbolic)?.is_zero() {
            out.push(s);
        }
    }
    Ok(out)
}
