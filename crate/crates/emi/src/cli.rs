//! Argument definitions and subcommand handlers for the `emi` binary.

use clap::{Args, Parser, Subcommand, ValueEnum};
use emi_core::pi::{matched_digits, ReferencePi};
use emi_core::{closed_form_arctan, EmiConfig, Integrand, Mode, Rat, Real, Value, DEFAULT_PRECISION};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::parallel::Workers;
use crate::report::{render_document, Format, ReportDocument};
use crate::verify::{self, Group};

#[derive(Debug, Parser)]
#[command(name = "emi", version, about = "Enhanced midpoint integration and arctangent sums for π")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// π = 4·arctan(1) by enhanced midpoint integration.
    Pi(PiArgs),
    /// arctan(x) as the integral of x/(1+x²t²) over [0, 1].
    Arctan(ArctanArgs),
    /// Integrate a built-in integrand over [0, 1].
    Integrate(IntegrateArgs),
    /// Digit and error table for π over a grid of L and M.
    Scan(ScanArgs),
    /// Run the cross-check suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Number of subintervals.
    #[arg(long = "L", default_value_t = 1000)]
    pub subintervals: u32,
    /// Taylor order at each midpoint.
    #[arg(long = "M", default_value_t = 0)]
    pub order: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Float)]
    pub mode: ModeArg,
    /// Significant digits carried (float mode adds guard digits on top).
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    pub precision: u32,
    /// Digits printed, truncated.
    #[arg(long, default_value_t = 50)]
    pub digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl RunArgs {
    fn config(&self) -> Result<EmiConfig> {
        let config = EmiConfig {
            subintervals: self.subintervals,
            order: self.order,
            mode: self.mode.into(),
            precision: self.precision,
        };
        config.validate()?;
        if self.digits > self.precision {
            return Err(emi_core::Error::PrecisionExceeded { requested: self.digits, available: self.precision }.into());
        }
        Ok(config)
    }
}

#[derive(Debug, Clone, Args)]
pub struct PiArgs {
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ArctanArgs {
    /// Argument as `p/q` or a decimal.
    #[arg(long)]
    pub x: String,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct IntegrateArgs {
    /// arctan-kernel, exp, runge, or poly:k.
    #[arg(long)]
    pub integrand: String,
    /// Parameter of arctan-kernel (default 1).
    #[arg(long)]
    pub x: Option<String>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    /// Comma-separated subinterval counts.
    #[arg(long = "L", value_delimiter = ',', required = true)]
    pub subintervals: Vec<u32>,
    /// Comma-separated Taylor orders.
    #[arg(long = "M", value_delimiter = ',', required = true)]
    pub orders: Vec<u32>,
    #[arg(long, value_enum, default_value_t = ModeArg::Float)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    pub precision: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Restrict to these groups (repeatable); all by default.
    #[arg(long, value_enum)]
    pub group: Vec<Group>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PiDocument {
    #[serde(rename = "L")]
    pub l: u32,
    #[serde(rename = "M")]
    pub m: u32,
    pub mode: String,
    pub precision: u32,
    pub exact: Option<String>,
    pub value: String,
    pub matched_digits: usize,
    pub terms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ArctanDocument {
    pub x: String,
    #[serde(rename = "L")]
    pub l: u32,
    #[serde(rename = "M")]
    pub m: u32,
    pub mode: String,
    pub precision: u32,
    pub exact: Option<String>,
    pub value: String,
    pub closed_form: Option<String>,
    pub agree: Option<bool>,
    pub terms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IntegrateDocument {
    pub integrand: String,
    pub x: Option<String>,
    #[serde(rename = "L")]
    pub l: u32,
    #[serde(rename = "M")]
    pub m: u32,
    pub mode: String,
    pub precision: u32,
    pub exact: Option<String>,
    pub value: String,
    pub terms: u64,
}

fn exact_string(value: &Value) -> Option<String> {
    value.as_rat().map(Rat::to_string)
}

fn parse_rat(s: &str) -> Result<Rat> {
    s.parse().map_err(|e: emi_core::Error| CliError::Usage(format!("--x: {e}")))
}

pub fn run_pi(args: &PiArgs, workers: &Workers) -> Result<String> {
    let run = &args.run;
    let config = run.config()?;
    let value = workers.pi_emi(config.subintervals, config.order, config.mode, config.precision)?;
    let rendered = value.render(run.digits)?;
    let doc = PiDocument {
        l: config.subintervals,
        m: config.order,
        mode: config.mode.name().into(),
        precision: config.precision,
        exact: exact_string(&value),
        matched_digits: matched_digits(&rendered, &ReferencePi::standard())?,
        value: rendered,
        terms: config.term_count(),
    };
    render_document(&doc, run.format)
}

/// Closed form and engine agree: exactly in exact mode, to the output
/// precision in float mode.
fn values_agree(a: &Value, b: &Value, precision: u32) -> Result<bool> {
    Ok(match (a, b) {
        (Value::Exact(x), Value::Exact(y)) => x == y,
        _ => {
            let working = precision + emi_core::GUARD_DIGITS;
            let (x, y) = (a.to_real(working)?, b.to_real(working)?);
            let diff = (&x - &y).abs();
            match (diff.leading_exponent(), x.abs().max(y.abs()).leading_exponent()) {
                (None, _) => true,
                (Some(d), Some(scale)) => d < scale - precision as i64,
                (Some(_), None) => false,
            }
        }
    })
}

pub fn run_arctan(args: &ArctanArgs, workers: &Workers) -> Result<String> {
    let run = &args.run;
    let config = run.config()?;
    let x = parse_rat(&args.x)?;
    let result = workers.emi_integrate(&Integrand::arctan_kernel(x.clone()), &config)?;
    let (closed_form, agree) = if matches!(config.order, 0 | 2 | 6) {
        let closed = closed_form_arctan(&x, config.subintervals, config.order, config.mode, config.precision)?;
        let agree = values_agree(&result.value, &closed, config.precision)?;
        (Some(closed.render(run.digits)?), Some(agree))
    } else {
        (None, None)
    };
    let doc = ArctanDocument {
        x: x.to_string(),
        l: config.subintervals,
        m: config.order,
        mode: config.mode.name().into(),
        precision: config.precision,
        exact: exact_string(&result.value),
        value: result.value.render(run.digits)?,
        closed_form,
        agree,
        terms: result.term_count,
    };
    let out = render_document(&doc, run.format)?;
    if agree == Some(false) {
        return Err(CliError::Verification(format!(
            "{out}closed form and generic engine disagree for x={x} L={} M={}",
            config.subintervals, config.order
        )));
    }
    Ok(out)
}

pub fn run_integrate(args: &IntegrateArgs, workers: &Workers) -> Result<String> {
    let run = &args.run;
    let config = run.config()?;
    let x = args.x.as_deref().map(parse_rat).transpose()?;
    let integrand = Integrand::from_name(&args.integrand, x)?;
    let result = workers.emi_integrate(&integrand, &config)?;
    let doc = IntegrateDocument {
        integrand: integrand.name(),
        x: integrand.parameter().map(Rat::to_string),
        l: config.subintervals,
        m: config.order,
        mode: config.mode.name().into(),
        precision: config.precision,
        exact: exact_string(&result.value),
        value: result.value.render(run.digits)?,
        terms: result.term_count,
    };
    render_document(&doc, run.format)
}

pub fn run_scan(args: &ScanArgs, workers: &Workers) -> Result<String> {
    Real::zero(args.precision)?;
    let report = workers.convergence_scan(
        &args.subintervals,
        &args.orders,
        args.mode.into(),
        args.precision,
        &ReferencePi::standard(),
    )?;
    ReportDocument::from(&report).render(args.format)
}

/// Runs the selected groups; fails with the first counterexample.
pub fn run_verify(args: &VerifyArgs, reference: &ReferencePi) -> Result<String> {
    let reports = verify::run(&args.group, reference);
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    match reports.iter().find(|r| !r.passed()) {
        Some(_) => Err(CliError::Verification(out)),
        None => Ok(out),
    }
}

pub fn execute(cli: &Cli, workers: &Workers) -> Result<String> {
    match &cli.command {
        Command::Pi(a) => run_pi(a, workers),
        Command::Arctan(a) => run_arctan(a, workers),
        Command::Integrate(a) => run_integrate(a, workers),
        Command::Scan(a) => run_scan(a, workers),
        Command::Verify(a) => run_verify(a, &ReferencePi::standard()),
    }
}
