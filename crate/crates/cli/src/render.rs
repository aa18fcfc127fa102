//! JSON lines, CSV and LaTeX output.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::record::{AValue, BodyPayload, GaussianCoeff, OutputRecord, RationalFunctionPayload, SValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// Something that can be laid out as one table row.
pub trait Tabular: Serialize {
    fn headers() -> &'static [&'static str];
    fn row(&self) -> Vec<String>;
    /// LaTeX cells; defaults to the CSV cells escaped.
    fn latex_row(&self) -> Vec<String> {
        self.row().iter().map(|c| latex_escape(c)).collect()
    }
}

pub fn write_all<T: Tabular>(out: &mut dyn Write, format: Format, rows: &[T]) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(T::headers())?;
            for r in rows {
                w.write_record(r.row())?;
            }
            w.flush()?;
        }
        Format::Latex => {
            let cols = "l".repeat(T::headers().len());
            writeln!(out, "\\begin{{tabular}}{{{cols}}}")?;
            writeln!(out, "\\hline")?;
            let head: Vec<String> = T::headers().iter().map(|h| latex_escape(h)).collect();
            writeln!(out, "{} \\\\", head.join(" & "))?;
            writeln!(out, "\\hline")?;
            for r in rows {
                writeln!(out, "{} \\\\", r.latex_row().join(" & "))?;
            }
            writeln!(out, "\\hline")?;
            writeln!(out, "\\end{{tabular}}")?;
        }
    }
    Ok(())
}

pub fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            'π' => out.push_str("$\\pi$"),
            'ζ' => out.push_str("$\\zeta$"),
            'ℚ' => out.push_str("$\\mathbb{Q}$"),
            '×' => out.push_str("$\\times$"),
            '·' => out.push_str("$\\cdot$"),
            '⁻' => out.push_str("$^{-}$"),
            '⁰' | '¹' | '²' | '³' | '⁴' | '⁵' | '⁶' | '⁷' | '⁸' | '⁹' => {
                let d = "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|c| c == ch).unwrap_or(0);
                out.push_str(&format!("$^{d}$"));
            }
            _ => out.push(ch),
        }
    }
    out
}

fn s_cell(s: &SValue) -> String {
    match s {
        SValue::Integer(n) => n.to_string(),
        SValue::Complex { re, im } => format!("{re}{im:+}i"),
    }
}

fn a_cell(a: &AValue) -> String {
    match a {
        AValue::Rational { num, den } => format!("{num}/{den}"),
        AValue::Decimal(x) => x.to_string(),
        AValue::Symbolic(s) => s.clone(),
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:e}")).unwrap_or_default()
}

/// `p/q` as `\frac{p}{q}` (keeping the sign outside).
fn frac(q: &str) -> String {
    match q.split_once('/') {
        Some((p, d)) => match p.strip_prefix('-') {
            Some(p) => format!("-\\frac{{{p}}}{{{d}}}"),
            None => format!("\\frac{{{p}}}{{{d}}}"),
        },
        None => q.to_string(),
    }
}

/// `Σ coeffs[k] · term(k)` with zero coefficients dropped.
fn latex_sum(coeffs: &[String], term: impl Fn(usize) -> String) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let t = term(k);
        let piece = match (c.as_str(), t.is_empty()) {
            (_, true) => frac(c),
            ("1", false) => t,
            ("-1", false) => format!("-{t}"),
            _ => format!("{}{t}", frac(c)),
        };
        parts.push(piece);
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        match p.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    out
}

fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{{{k}}}"),
    }
}

fn gaussian_poly(coeffs: &[GaussianCoeff]) -> String {
    let mut terms = Vec::new();
    for (k, g) in coeffs.iter().enumerate() {
        let c = match (g.re.as_str(), g.im.as_str()) {
            ("0", "0") => continue,
            (re, "0") => re.to_string(),
            ("0", im) => imag_coeff(im),
            (re, im) => format!("({} + {}i)", frac(re), frac(im)),
        };
        terms.push((c, k));
    }
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(c, k)| {
            let p = power("c", *k);
            if p.is_empty() {
                frac(c)
            } else if c == "1" {
                p
            } else if c == "-1" {
                format!("-{p}")
            } else {
                format!("{}{p}", frac(c))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
        .replace("+ -", "- ")
}

fn imag_coeff(im: &str) -> String {
    match im {
        "1" => "i".into(),
        "-1" => "-i".into(),
        _ => format!("{}i", frac(im)),
    }
}

fn ratfunc(f: &RationalFunctionPayload) -> String {
    let num = gaussian_poly(&f.numerator);
    if f.denominator.len() == 1 {
        return num;
    }
    format!("\\frac{{{num}}}{{{}}}", gaussian_poly(&f.denominator))
}

/// LaTeX math for an exact value.
pub fn latex_exact(pi_exponent: i32, body: &BodyPayload) -> String {
    let inner = match body {
        BodyPayload::Rational(q) => frac(q),
        BodyPayload::Cyclotomic { order, coeffs } => {
            latex_sum(coeffs, |k| power(&format!("\\zeta_{{{order}}}"), k))
        }
        BodyPayload::Polynomial { coeffs } => latex_sum(coeffs, |k| power("a", k)),
        BodyPayload::RationalFunction(f) => ratfunc(f),
        BodyPayload::Mixed {
            poly_part,
            ratfunc_part,
        } => format!(
            "{} + {}",
            latex_sum(poly_part, |k| power("a", k)),
            ratfunc(ratfunc_part)
        ),
    };
    if inner == "0" {
        return inner;
    }
    let pi = match pi_exponent {
        0 => return inner,
        1 => "\\pi".to_string(),
        e => format!("\\pi^{{{e}}}"),
    };
    match inner.as_str() {
        "1" => return pi,
        "-1" => return format!("-{pi}"),
        _ => {}
    }
    match pi_exponent {
        1 => format!("\\pi\\left({inner}\\right)"),
        e => format!("\\pi^{{{e}}}\\left({inner}\\right)"),
    }
}

impl Tabular for OutputRecord {
    fn headers() -> &'static [&'static str] {
        &[
            "function", "s", "a", "pi_exponent", "body_kind", "exact", "class", "numeric_re",
            "numeric_im", "residual", "degraded",
        ]
    }

    fn row(&self) -> Vec<String> {
        let (pe, kind, disp, class) = match &self.exact {
            Some(e) => (
                e.pi_exponent.to_string(),
                e.body_kind.clone(),
                e.display.clone(),
                e.class.clone(),
            ),
            None => Default::default(),
        };
        vec![
            self.function.to_string(),
            s_cell(&self.s),
            a_cell(&self.a),
            pe,
            kind,
            disp,
            class,
            self.numeric.map(|n| n.re.to_string()).unwrap_or_default(),
            self.numeric.map(|n| n.im.to_string()).unwrap_or_default(),
            opt(self.residual),
            self.degraded.to_string(),
        ]
    }

    fn latex_row(&self) -> Vec<String> {
        let mut cells: Vec<String> = self.row().iter().map(|c| latex_escape(c)).collect();
        if let Some(e) = &self.exact {
            cells[5] = format!("${}$", latex_exact(e.pi_exponent, &e.body_payload));
        }
        cells
    }
}
