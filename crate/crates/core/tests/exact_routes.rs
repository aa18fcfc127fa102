//! The symbolic and the rational-point constructions must agree exactly.

use num_integer::Integer;
use zetavals_core::{
    li_neg_euler, li_neg_stirling, special_value, ArgumentSpec, CyclotomicElement, FunctionTag,
    ValueBody,
};

fn as_cyclotomic(body: &ValueBody) -> CyclotomicElement {
    match body {
        ValueBody::Rational(q) => CyclotomicElement::from_rational(q.clone()),
        ValueBody::Cyclotomic(e) => e.clone(),
        other => panic!("expected a point value, got {}", other.kind()),
    }
}

fn points(max_q: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for q in 2..=max_q {
        for r in 1..=q / 2 {
            if r.gcd(&q) == 1 {
                out.push((r, q));
            }
        }
    }
    out
}

#[test]
fn stirling_and_euler_routes_agree() {
    for n in 1..=12 {
        assert_eq!(li_neg_stirling(n).unwrap(), li_neg_euler(n).unwrap(), "n = {n}");
    }
}

#[test]
fn symbolic_values_specialize_to_point_values() {
    for f in FunctionTag::ALL {
        for s in -8i64..=8 {
            let Ok(symbolic) = special_value(f, s, ArgumentSpec::Symbolic) else {
                continue;
            };
            for (r, q) in points(12) {
                let point = special_value(f, s, ArgumentSpec::rational(r, q).unwrap()).unwrap();
                let specialized = symbolic.at_rational(r, q).unwrap();
                assert_eq!(specialized.pi_exponent, point.pi_exponent);
                assert_eq!(
                    as_cyclotomic(&specialized.body),
                    as_cyclotomic(&point.body),
                    "{f}({s}, {r}/{q})"
                );
            }
        }
    }
}

#[test]
fn constant_values_at_zero() {
    for (r, q) in points(12) {
        let a = ArgumentSpec::rational(r, q).unwrap();
        let p = special_value(FunctionTag::P, 0, a).unwrap().collapsed();
        let q_val = special_value(FunctionTag::Q, 0, a).unwrap().collapsed();
        assert_eq!(p.body, ValueBody::Rational(zetavals_core::rat(-1, 1)));
        assert_eq!(q_val.body, ValueBody::Rational(zetavals_core::rat(-1, 2)));
    }
}
