use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use zetavals_core::analysis::{
    find_a0, ft_spectral_density, scan_real_zeros, spectral_density, SpectralParams, ZeroReport,
};
use zetavals_core::numeric::{combined, PrecisionContract};
use zetavals_core::{special_value, ArgumentSpec, FunctionTag};

use crate::error::CliError;
use crate::record::{AValue, ExactRecord, NumericRecord, OutputRecord, SValue};
use crate::render::{write_all, Format, Tabular};
use crate::suites::{self, rational_points, Suite, DEFAULT_TOL};

#[derive(Debug, Parser)]
#[command(name = "zetavals", version, about = "Exact and numeric special values of Hurwitz-type zeta functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One value: exact form, numeric cross-check and their residual.
    Value(ValueArgs),
    /// Exact values over all reduced r/q with q <= q-max and |s| <= n-max.
    Table(TableArgs),
    /// Run a verification suite; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Real zeros in a window, or the constant a0.
    Zeros(ZerosArgs),
    /// Spectral densities on an alpha grid.
    Spectral(SpectralArgs),
}

impl Cli {
    pub fn format(&self) -> Format {
        match &self.command {
            Command::Value(a) => a.format,
            Command::Table(a) => a.format,
            Command::Verify(a) => a.format,
            Command::Zeros(a) => a.format,
            Command::Spectral(a) => a.format,
        }
    }
}

fn parse_function(s: &str) -> Result<FunctionTag, String> {
    s.parse().map_err(|e: zetavals_core::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct ValueArgs {
    #[arg(long, value_parser = parse_function)]
    pub function: FunctionTag,
    /// An integer for the exact value; `x` or `x,y` for a numeric-only evaluation.
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    /// `r/q`, `symbolic`, or a decimal (numeric only).
    #[arg(long)]
    pub a: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, env = "ZETAVAL_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 6)]
    pub q_max: u64,
    #[arg(long, default_value_t = 6)]
    pub n_max: i64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, env = "ZETAVAL_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Write here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, env = "ZETAVAL_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, value_parser = parse_function, required_unless_present = "find_a0")]
    pub function: Option<FunctionTag>,
    /// May be repeated.
    #[arg(long, default_values_t = [0.3])]
    pub a: Vec<f64>,
    /// `lo:hi`.
    #[arg(long, allow_hyphen_values = true, default_value = "-20.5:0.5")]
    pub window: String,
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    /// Print the root of a -> Q(1/2, a) in [0.05, 0.2] instead of scanning.
    #[arg(long)]
    pub find_a0: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SpectralArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long = "C", alias = "c", default_value_t = 1.0)]
    pub c: f64,
    /// `lo:hi:step`, inclusive.
    #[arg(long, allow_hyphen_values = true, default_value = "0.01:0.49:0.02")]
    pub alpha_grid: String,
    /// `rho,delta,H,psi`: adds the subordinated-process density column.
    #[arg(long)]
    pub ft: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Value(a) => cmd_value(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Zeros(a) => cmd_zeros(a, out),
        Command::Spectral(a) => cmd_spectral(a, out),
    }
}

fn parse_s(s: &str) -> Result<SValue, CliError> {
    if let Ok(n) = s.trim().parse::<i64>() {
        return Ok(SValue::Integer(n));
    }
    let bad = || CliError::Usage(format!("cannot parse s = `{s}`; expected an integer, `x` or `x,y`"));
    let (re, im) = match s.split_once(',') {
        Some((x, y)) => (x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 0.0),
    };
    Ok(SValue::Complex { re, im })
}

/// `r/q` and `symbolic` stay exact; anything else must be a decimal in `(0, 1)`.
fn parse_a(a: &str) -> Result<AValue, CliError> {
    let t = a.trim();
    if t.contains('/') || t == "symbolic" || t == "a" {
        return Ok(AValue::from_spec(&t.parse::<ArgumentSpec>()?));
    }
    match t.parse::<f64>() {
        Ok(x) if x > 0.0 && x < 1.0 => Ok(AValue::Decimal(x)),
        _ => Err(CliError::Usage(format!("a = `{a}` is not r/q, `symbolic`, or a decimal in (0, 1)"))),
    }
}

fn s_complex(s: &SValue) -> Complex64 {
    match *s {
        SValue::Integer(n) => Complex64::new(n as f64, 0.0),
        SValue::Complex { re, im } => Complex64::new(re, im),
    }
}

/// Builds the record for one `(f, s, a)`; exact only for integer `s` and
/// exact `a`.
pub fn value_record(f: FunctionTag, s: SValue, a: AValue, tol: f64) -> Result<OutputRecord, CliError> {
    let exact = match (&s, &a) {
        (SValue::Integer(n), AValue::Rational { num, den }) => {
            Some(special_value(f, *n, ArgumentSpec::rational(*num, *den)?)?.collapsed())
        }
        (SValue::Integer(n), AValue::Symbolic(_)) => Some(special_value(f, *n, ArgumentSpec::Symbolic)?),
        (SValue::Complex { .. }, AValue::Symbolic(_)) => {
            return Err(CliError::Usage("a numeric s needs a numeric or r/q value of a".into()))
        }
        _ => None,
    };
    let sc = s_complex(&s);
    let numeric = match a.as_f64() {
        Some(x) => Some(combined(f, sc, x)?),
        None => None,
    };
    let residual = match (&exact, numeric) {
        (Some(e), Some(n)) => {
            let e = e.to_complex(None)?;
            Some((e - n).norm() / e.norm().max(1.0))
        }
        _ => None,
    };
    let out_of_contract = a
        .as_f64()
        .is_some_and(|x| !PrecisionContract::default().covers(sc, x));
    Ok(OutputRecord {
        function: f,
        degraded: out_of_contract || residual.is_some_and(|r| r > tol),
        exact: exact.as_ref().map(ExactRecord::new),
        numeric: numeric.map(|v| NumericRecord { re: v.re, im: v.im }),
        residual,
        s,
        a,
    })
}

fn cmd_value(args: &ValueArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rec = value_record(args.function, parse_s(&args.s)?, parse_a(&args.a)?, args.tol)?;
    write_all(out, args.format, &[rec])?;
    Ok(())
}

/// Every exact value on the grid, in `(function, s, q, r)` order.
pub fn table_records(q_max: u64, n_max: i64, tol: f64) -> Vec<OutputRecord> {
    let points = rational_points(q_max);
    let mut jobs = Vec::new();
    for f in FunctionTag::ALL {
        for s in -n_max..=n_max {
            for &(r, q) in &points {
                jobs.push((f, s, r, q));
            }
        }
    }
    // values without a closed form (wrong parity, poles) are simply absent
    jobs.par_iter()
        .filter_map(|&(f, s, r, q)| {
            value_record(f, SValue::Integer(s), AValue::Rational { num: r, den: q }, tol).ok()
        })
        .collect()
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = table_records(args.q_max, args.n_max, args.tol);
    match &args.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_all(&mut w, args.format, &rows)?;
            w.flush()?;
        }
        None => write_all(out, args.format, &rows)?,
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let checks = suites::run(args.suite, args.tol, args.seed)?;
    write_all(out, args.format, &checks)?;
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.check.as_str()).collect();
    // vanishing checks that must stay large are left out of the maximum
    let max = checks
        .iter()
        .filter(|c| !(c.pass && c.residual > c.tol))
        .map(|c| c.residual)
        .fold(0.0, f64::max);
    eprintln!("{} checks, {} failed, max residual {max:e}", checks.len(), failed.len());
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(failed.join("; ")))
    }
}

fn parse_window(w: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Usage(format!("window `{w}` is not lo:hi"));
    let (lo, hi) = w.split_once(':').ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct A0Record {
    pub a0: f64,
    pub z_half: f64,
    pub p_half: f64,
}

impl Tabular for A0Record {
    fn headers() -> &'static [&'static str] {
        &["a0", "z_half", "p_half"]
    }

    fn row(&self) -> Vec<String> {
        vec![format!("{:.10}", self.a0), format!("{:e}", self.z_half), format!("{:e}", self.p_half)]
    }
}

impl Tabular for ZeroReport {
    fn headers() -> &'static [&'static str] {
        &["function", "a", "window", "zeros", "expected", "verdict"]
    }

    fn row(&self) -> Vec<String> {
        let zeros: Vec<String> = self.zeros.iter().map(|z| format!("{:.10}", z.location)).collect();
        let expected: Vec<String> = self.expected.iter().map(|k| k.to_string()).collect();
        vec![
            self.function.to_string(),
            self.a.to_string(),
            format!("{}:{}", self.window[0], self.window[1]),
            zeros.join(" "),
            expected.join(" "),
            format!("{:?}", self.verdict).to_lowercase(),
        ]
    }
}

fn cmd_zeros(args: &ZerosArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.find_a0 {
        let r = find_a0()?;
        let rec = A0Record {
            a0: r.a0,
            z_half: r.z_half,
            p_half: r.p_half,
        };
        match args.format {
            Format::Json => write_all(out, Format::Json, &[rec])?,
            _ => writeln!(out, "{:.10}", rec.a0)?,
        }
        if r.z_half.abs() > 1e-8 || r.p_half.abs() > 1e-8 {
            return Err(CliError::Failed(format!(
                "Z(1/2, a0) = {:e}, P(1/2, a0) = {:e} exceed 1e-8",
                r.z_half, r.p_half
            )));
        }
        return Ok(());
    }
    let f = args
        .function
        .ok_or_else(|| CliError::Usage("--function is required without --find-a0".into()))?;
    let (lo, hi) = parse_window(&args.window)?;
    let reports = args
        .a
        .par_iter()
        .map(|&a| scan_real_zeros(f, a, lo, hi, args.step))
        .collect::<Result<Vec<_>, _>>()?;
    write_all(out, args.format, &reports)?;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralRow {
    pub alpha: f64,
    pub density: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralFtRow {
    pub alpha: f64,
    pub density: f64,
    pub ft_density: f64,
}

impl Tabular for SpectralRow {
    fn headers() -> &'static [&'static str] {
        &["alpha", "density"]
    }

    fn row(&self) -> Vec<String> {
        vec![self.alpha.to_string(), format!("{:e}", self.density)]
    }
}

impl Tabular for SpectralFtRow {
    fn headers() -> &'static [&'static str] {
        &["alpha", "density", "ft_density"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.alpha.to_string(),
            format!("{:e}", self.density),
            format!("{:e}", self.ft_density),
        ]
    }
}

/// `lo:hi:step`, inclusive of `hi` up to rounding.
pub fn parse_grid(g: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("grid `{g}` is not lo:hi:step with step > 0"));
    let parts: Vec<f64> = g
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let [lo, hi, step] = parts[..] else {
        return Err(bad());
    };
    if !(step > 0.0) || hi < lo {
        return Err(bad());
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    // snap to 12 decimals so 0.1:0.3:0.1 yields 0.3, not 0.30000000000000004
    Ok((0..=n).map(|i| ((lo + i as f64 * step) * 1e12).round() / 1e12).collect())
}

fn cmd_spectral(args: &SpectralArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = SpectralParams::new(args.lambda, args.c)?;
    let ft = match &args.ft {
        Some(spec) => {
            let v: Vec<f64> = spec
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage(format!("--ft `{spec}` is not rho,delta,H,psi")))?;
            let [rho, delta, h, psi] = v[..] else {
                return Err(CliError::Usage(format!("--ft `{spec}` needs four numbers")));
            };
            Some((rho, delta, h, psi))
        }
        None => None,
    };
    let mut alphas = parse_grid(&args.alpha_grid)?;
    if alphas.iter().any(|&a| a == 0.0) {
        eprintln!("note: alpha = 0 skipped (the density diverges there)");
        alphas.retain(|&a| a != 0.0);
    }
    let mut rows = Vec::with_capacity(alphas.len());
    let mut ft_rows = Vec::new();
    for alpha in alphas {
        let density = spectral_density(p, alpha)?;
        match ft {
            Some((rho, delta, h, psi)) => ft_rows.push(SpectralFtRow {
                alpha,
                density,
                ft_density: ft_spectral_density(rho, delta, h, psi, alpha)?,
            }),
            None => rows.push(SpectralRow { alpha, density }),
        }
    }
    if ft.is_some() {
        write_all(out, args.format, &ft_rows)?;
    } else {
        write_all(out, args.format, &rows)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_parsing() {
        assert_eq!(parse_s("-3").unwrap(), SValue::Integer(-3));
        assert_eq!(parse_s("0.5,2").unwrap(), SValue::Complex { re: 0.5, im: 2.0 });
        assert!(parse_s("x").is_err());
        assert_eq!(parse_a("1/3").unwrap(), AValue::Rational { num: 1, den: 3 });
        assert_eq!(parse_a("0.37").unwrap(), AValue::Decimal(0.37));
        assert_eq!(parse_a("symbolic").unwrap(), AValue::symbolic());
        assert!(parse_a("2/3").is_err());
        assert!(parse_a("1.5").is_err());
        assert_eq!(parse_window("-20.5:0.5").unwrap(), (-20.5, 0.5));
        assert_eq!(parse_grid("0.01:0.49:0.02").unwrap().len(), 25);
    }

    #[test]
    fn value_records() {
        let r = value_record(FunctionTag::Z, SValue::Integer(-1), AValue::Rational { num: 1, den: 3 }, 1e-9)
            .unwrap();
        assert_eq!(r.exact.as_ref().unwrap().display, "1/18");
        assert!(r.residual.unwrap() < 1e-12 && !r.degraded);
        let r = value_record(FunctionTag::P, SValue::Integer(2), AValue::Rational { num: 1, den: 2 }, 1e-9)
            .unwrap();
        assert!((r.numeric.unwrap().re + 1.6449340668482264).abs() < 1e-12);
        assert!(r.residual.unwrap() < 1e-11);
        let e = value_record(FunctionTag::Z, SValue::Integer(3), AValue::Rational { num: 1, den: 3 }, 1e-9);
        assert!(e.unwrap_err().to_string().contains("no closed form"));
        let r = value_record(FunctionTag::Q, SValue::Complex { re: 0.5, im: 3.0 }, AValue::Decimal(0.2), 1e-9)
            .unwrap();
        assert!(r.exact.is_none() && r.numeric.is_some());
    }

    #[test]
    fn table_has_expected_cell() {
        let rows = table_records(4, 4, 1e-9);
        let cell = rows
            .iter()
            .find(|r| {
                r.function == FunctionTag::O
                    && r.s == SValue::Integer(1)
                    && r.a == AValue::Rational { num: 1, den: 4 }
            })
            .unwrap();
        assert_eq!(cell.exact.as_ref().unwrap().display, "π·(1/2)");
        assert!(rows.iter().all(|r| !r.degraded));
    }
}
