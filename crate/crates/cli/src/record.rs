//! The serialized shape of a computed value.

use serde::{Deserialize, Serialize};
use zetavals_core::{
    ArgumentSpec, CyclotomicElement, ExactValue, FunctionTag, GaussianRational, QPolynomial,
    RationalFunctionC, ValueBody,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SValue {
    Integer(i64),
    Complex { re: f64, im: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AValue {
    Rational { num: u64, den: u64 },
    Decimal(f64),
    /// Always the string `"symbolic"`.
    Symbolic(String),
}

impl AValue {
    pub fn symbolic() -> Self {
        AValue::Symbolic("symbolic".into())
    }

    pub fn from_spec(spec: &ArgumentSpec) -> Self {
        match *spec {
            ArgumentSpec::RationalPoint { r, q } => AValue::Rational { num: r, den: q },
            ArgumentSpec::Symbolic => AValue::symbolic(),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            AValue::Rational { num, den } => Some(num as f64 / den as f64),
            AValue::Decimal(x) => Some(x),
            AValue::Symbolic(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussianCoeff {
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalFunctionPayload {
    /// Ascending powers of `c`.
    pub numerator: Vec<GaussianCoeff>,
    pub denominator: Vec<GaussianCoeff>,
}

/// Exact body. Rationals are strings `"p/q"`; coefficient lists are in
/// ascending degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BodyPayload {
    Rational(String),
    Cyclotomic {
        order: u64,
        coeffs: Vec<String>,
    },
    Mixed {
        poly_part: Vec<String>,
        ratfunc_part: RationalFunctionPayload,
    },
    RationalFunction(RationalFunctionPayload),
    Polynomial {
        coeffs: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactRecord {
    pub pi_exponent: i32,
    pub body_kind: String,
    pub body_payload: BodyPayload,
    /// Human-readable rendering, e.g. `π^2·(-1/6)`.
    pub display: String,
    pub class: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericRecord {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub function: FunctionTag,
    pub s: SValue,
    pub a: AValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericRecord>,
    /// `|exact - numeric| / max(1, |exact|)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// Set when the point is outside the numeric precision contract or the
    /// exact/numeric residual exceeds the tolerance.
    #[serde(default)]
    pub degraded: bool,
}

fn poly_payload(p: &QPolynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn gaussian(g: &GaussianRational) -> GaussianCoeff {
    GaussianCoeff {
        re: g.re.to_string(),
        im: g.im.to_string(),
    }
}

fn ratfunc_payload(f: &RationalFunctionC) -> RationalFunctionPayload {
    RationalFunctionPayload {
        numerator: f.numerator().coeffs().iter().map(gaussian).collect(),
        denominator: f.denominator().coeffs().iter().map(gaussian).collect(),
    }
}

fn cyclotomic_payload(e: &CyclotomicElement) -> BodyPayload {
    BodyPayload::Cyclotomic {
        order: e.order(),
        coeffs: e.coeffs().iter().map(|c| c.to_string()).collect(),
    }
}

impl ExactRecord {
    pub fn new(v: &ExactValue) -> Self {
        let body_payload = match &v.body {
            ValueBody::Rational(q) => BodyPayload::Rational(q.to_string()),
            ValueBody::Cyclotomic(e) => cyclotomic_payload(e),
            ValueBody::Polynomial(p) => BodyPayload::Polynomial {
                coeffs: poly_payload(p),
            },
            ValueBody::RationalFunction(f) => BodyPayload::RationalFunction(ratfunc_payload(f)),
            ValueBody::Mixed {
                poly_part,
                ratfunc_part,
            } => BodyPayload::Mixed {
                poly_part: poly_payload(poly_part),
                ratfunc_part: ratfunc_payload(ratfunc_part),
            },
        };
        ExactRecord {
            pi_exponent: v.pi_exponent,
            body_kind: v.body.kind().to_string(),
            body_payload,
            display: v.to_string(),
            class: v.classify().to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zetavals_core::special_value;

    #[test]
    fn payload_shapes() {
        let a = ArgumentSpec::rational(1, 3).unwrap();
        let r = ExactRecord::new(&special_value(FunctionTag::Z, -1, a).unwrap().collapsed());
        assert_eq!(r.body_payload, BodyPayload::Rational("1/18".into()));
        let r = ExactRecord::new(&special_value(FunctionTag::P, 2, a).unwrap());
        assert_eq!(r.pi_exponent, 2);
        let r = ExactRecord::new(&special_value(FunctionTag::Z, 2, ArgumentSpec::Symbolic).unwrap());
        assert_eq!(r.body_kind, "rational_function");
        let r = ExactRecord::new(&special_value(FunctionTag::Q, 2, ArgumentSpec::Symbolic).unwrap());
        assert!(matches!(r.body_payload, BodyPayload::Mixed { .. }));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<ExactRecord>(&json).unwrap(), r);
    }
}
