//! fracalc: command line front end for the fracalc-core numerics.

mod config;
mod output;
mod parse;

use std::path::PathBuf;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fracalc_core::num_complex::Complex64;

use fracalc_core::axioms;
use fracalc_core::catalog::Catalog;
use fracalc_core::circuits::{self, ElementKind, FracElement};
use fracalc_core::differint::{
    compare_rl_gl, gl_differint, gl_differint_fast, rl_derivative, rl_integral,
};
use fracalc_core::grid::{Grid, Order, SampledSignal};
use fracalc_core::special::gamma;
use fracalc_core::transforms::{
    laplace_numeric, verify_laplace_differint_rule, z_transform_truncated, z_truncation_bound,
};

#[derive(Parser)]
#[command(name = "fracalc", version, about = "Numerical fractional calculus toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the gamma function at a real or complex argument
    Gamma {
        /// Argument, e.g. "5", "0.5", or "2+3i"
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Apply a fractional differintegral to a sampled signal
    Differint {
        #[arg(long, value_enum)]
        method: Method,
        /// Fractional order; positive differentiates, negative integrates
        #[arg(long, allow_negative_numbers = true)]
        order: f64,
        /// Evaluate through the FFT convolution path (gl only)
        #[arg(long)]
        fast: bool,
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Compare the RL and GL routes over a ladder of resolutions
    Compare {
        #[arg(long, allow_negative_numbers = true)]
        order: f64,
        /// Comma-separated node counts, e.g. 256,512,1024
        #[arg(long, value_delimiter = ',', required = true)]
        resolutions: Vec<usize>,
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Numerically evaluate a Laplace transform on a finite horizon
    Laplace {
        /// Comma-separated evaluation points, e.g. "2" or "1+2i,3"
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        s: Vec<String>,
        /// Upper integration limit T
        #[arg(long)]
        horizon: f64,
        #[arg(long, default_value_t = 4000)]
        n: usize,
        /// Check L{J^v f}(s) = s^-v L{f}(s) at this order instead of plain evaluation
        #[arg(long)]
        verify_rule: Option<f64>,
        /// Catalog function sampled on [0, horizon]
        #[arg(long = "fn", value_enum, default_value_t = CatalogName::Const)]
        function: CatalogName,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Evaluate a truncated Z-transform outside the unit circle
    Ztransform {
        /// Evaluation point, e.g. "2" or "1.5-0.5i"
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Highest retained index N
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = SeqKind::Step)]
        seq: SeqKind,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Solve initial value problems
    Solve {
        #[command(subcommand)]
        kind: SolveCmd,
    },
    /// Fractional circuit element analysis
    Circuit {
        #[command(subcommand)]
        kind: CircuitCmd,
    },
    /// Run every module invariant suite and report pass/fail
    Axioms,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Rl,
    Gl,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum SeqKind {
    Step,
    Impulse,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum CatalogName {
    Const,
    Linear,
    Square,
    Sin,
    #[value(name = "exp_decay")]
    ExpDecay,
}

impl CatalogName {
    fn as_catalog(self) -> Catalog {
        match self {
            CatalogName::Const => Catalog::Const,
            CatalogName::Linear => Catalog::Linear,
            CatalogName::Square => Catalog::Square,
            CatalogName::Sin => Catalog::Sin,
            CatalogName::ExpDecay => Catalog::ExpDecay,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ElementName {
    Resistoductor,
    Integrator,
    Differentiator,
}

impl ElementName {
    fn as_kind(self) -> ElementKind {
        match self {
            ElementName::Resistoductor => ElementKind::Resistoductor,
            ElementName::Integrator => ElementKind::FracIntegrator,
            ElementName::Differentiator => ElementKind::FracDifferentiator,
        }
    }
}

#[derive(Args)]
struct SignalArgs {
    /// Catalog function to sample
    #[arg(long = "fn", value_enum, conflicts_with = "input")]
    function: Option<CatalogName>,
    /// CSV file with x,value rows on a uniform grid
    #[arg(long, conflicts_with_all = ["a", "b", "n"])]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    b: f64,
    #[arg(long, default_value_t = 1024)]
    n: usize,
}

impl SignalArgs {
    fn load(&self) -> Result<SampledSignal> {
        match (&self.function, &self.input) {
            (Some(f), None) => {
                let grid = Grid::new(self.a, self.b, self.n)?;
                Ok(f.as_catalog().sample(grid)?)
            }
            (None, Some(path)) => output::read_signal_csv(path),
            (None, None) => bail!("one of --fn or --input is required"),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        }
    }
}

#[derive(Args)]
struct OutArgs {
    /// Write the primary output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum SolveCmd {
    /// Linear fractional differential equation, implicit GL stepping
    Fde {
        /// JSON document {v, a, y0, T, n, forcing}
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Linear fractional difference equation on the unit-step lattice
    Fdiff {
        /// JSON document {v, a, y0, n, forcing}
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Subcommand)]
enum CircuitCmd {
    /// Impedance of a single element at one frequency point
    Impedance {
        #[arg(long, value_enum)]
        element: ElementName,
        #[arg(long)]
        gain: f64,
        #[arg(long)]
        order: f64,
        /// Complex frequency, e.g. "1i" or "0.5+2i"
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Unit step response of a fractional integrator
    Step {
        #[arg(long)]
        gain: f64,
        #[arg(long)]
        order: f64,
        #[arg(long, default_value_t = 1.0)]
        t_end: f64,
        #[arg(long, default_value_t = 1024)]
        n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Log-spaced frequency response table
    Bode {
        #[arg(long, value_enum)]
        element: ElementName,
        #[arg(long)]
        gain: f64,
        #[arg(long)]
        order: f64,
        #[arg(long, default_value_t = 0.01)]
        omega_min: f64,
        #[arg(long, default_value_t = 100.0)]
        omega_max: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Gamma { z } => cmd_gamma(&z),
        Cmd::Differint { method, order, fast, signal, out } => {
            cmd_differint(method, order, fast, &signal, &out)
        }
        Cmd::Compare { order, resolutions, signal, out } => {
            cmd_compare(order, &resolutions, &signal, &out)
        }
        Cmd::Laplace { s, horizon, n, verify_rule, function, out } => {
            cmd_laplace(&s, horizon, n, verify_rule, function, &out)
        }
        Cmd::Ztransform { z, terms, seq, out } => cmd_ztransform(&z, terms, seq, &out),
        Cmd::Solve { kind } => match kind {
            SolveCmd::Fde { config, out } => config::run_fde(&config, &out),
            SolveCmd::Fdiff { config, out } => config::run_fdiff(&config, &out),
        },
        Cmd::Circuit { kind } => cmd_circuit(kind),
        Cmd::Axioms => cmd_axioms(),
    }
}

fn cmd_gamma(z: &str) -> Result<()> {
    let arg = parse::parse_complex(z)?;
    let value = gamma(arg)?;
    println!("{}", parse::format_complex(value));
    Ok(())
}

fn cmd_differint(
    method: Method,
    order: f64,
    fast: bool,
    signal: &SignalArgs,
    out: &OutArgs,
) -> Result<()> {
    let f = signal.load()?;
    let result = match method {
        Method::Gl => {
            let v = Order::new(order)?;
            if fast {
                gl_differint_fast(&f, v)?
            } else {
                gl_differint(&f, v)?
            }
        }
        Method::Rl => {
            if fast {
                bail!("--fast applies to the gl method only");
            }
            if order > 0.0 {
                rl_derivative(&f, Order::new(order)?)?
            } else if order < 0.0 {
                rl_integral(&f, Order::new(-order)?)?
            } else {
                rl_integral(&f, Order::new(0.0)?)?
            }
        }
    };
    output::write_signal(&result, out.out.as_deref(), out.format == Format::Json)
}

fn cmd_compare(
    order: f64,
    resolutions: &[usize],
    signal: &SignalArgs,
    out: &OutArgs,
) -> Result<()> {
    let finest = *resolutions
        .iter()
        .max()
        .ok_or_else(|| anyhow!("at least one resolution is required"))?;
    let f = match (&signal.function, &signal.input) {
        (Some(name), None) => {
            let grid = Grid::new(signal.a, signal.b, finest)?;
            name.as_catalog().sample(grid)?
        }
        _ => signal.load()?,
    };
    let report = compare_rl_gl(&f, Order::new(order)?, resolutions)?;
    output::write_report(&report, out.out.as_deref(), out.format == Format::Json)
}

fn cmd_laplace(
    s_args: &[String],
    horizon: f64,
    n: usize,
    verify_rule: Option<f64>,
    function: CatalogName,
    out: &OutArgs,
) -> Result<()> {
    let points: Vec<Complex64> =
        s_args.iter().map(|t| parse::parse_complex(t)).collect::<Result<_>>()?;
    let grid = Grid::new(0.0, horizon, n)?;
    let f = function.as_catalog().sample(grid)?;
    if let Some(v) = verify_rule {
        let report = verify_laplace_differint_rule(&f, v, &points)?;
        return output::write_rule_report(&report, out.out.as_deref(), out.format == Format::Json);
    }
    let evals: Vec<_> =
        points.iter().map(|&s| laplace_numeric(&f, s)).collect::<Result<_, _>>()?;
    output::write_laplace(&evals, out.out.as_deref(), out.format == Format::Json)
}

fn cmd_ztransform(z: &str, terms: usize, seq: SeqKind, out: &OutArgs) -> Result<()> {
    let z = parse::parse_complex(z)?;
    let mut values = vec![0.0; terms + 1];
    match seq {
        SeqKind::Step => values.fill(1.0),
        SeqKind::Impulse => values[0] = 1.0,
    }
    let ev = z_transform_truncated(&values, z)?;
    let peak = values.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let bound = z_truncation_bound(peak, z, ev.terms);
    output::write_zeval(&ev, bound, out.out.as_deref(), out.format == Format::Json)
}

fn cmd_circuit(kind: CircuitCmd) -> Result<()> {
    match kind {
        CircuitCmd::Impedance { element, gain, order, s } => {
            let e = FracElement::new(element.as_kind(), gain, order)?;
            let s = parse::parse_complex(&s)?;
            let z = circuits::impedance(&e, s)?;
            println!(
                "{} (magnitude {}, phase {} deg)",
                parse::format_complex(z),
                z.norm(),
                z.arg().to_degrees()
            );
            Ok(())
        }
        CircuitCmd::Step { gain, order, t_end, n, out } => {
            let e = FracElement::new(ElementKind::FracIntegrator, gain, order)?;
            let grid = Grid::new(0.0, t_end, n)?;
            let resp = circuits::step_response(&e, grid)?;
            eprintln!("gl cross-check trimmed sup gap {:.3e}", resp.gl_sup_gap);
            output::write_signal(&resp.signal, out.out.as_deref(), out.format == Format::Json)
        }
        CircuitCmd::Bode { element, gain, order, omega_min, omega_max, points, out } => {
            if points < 2 || !omega_min.is_finite() || omega_min <= 0.0 || !omega_max.is_finite() || omega_max <= omega_min {
                bail!("bode sweep needs 0 < omega_min < omega_max and at least two points");
            }
            let e = FracElement::new(element.as_kind(), gain, order)?;
            let ratio = omega_max / omega_min;
            let omegas: Vec<f64> = (0..points)
                .map(|i| omega_min * ratio.powf(i as f64 / (points - 1) as f64))
                .collect();
            let table = circuits::bode_data(&e, &omegas)?;
            output::write_bode(&table, out.out.as_deref(), out.format == Format::Json)
        }
    }
}

fn cmd_axioms() -> Result<()> {
    let reports = axioms::run_all();
    let mut failed = 0usize;
    for r in &reports {
        println!("suite {:>2}  {}", r.number, r.title);
        for c in &r.checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            println!("  [{tag}] {} ({})", c.name, c.detail);
        }
        if !r.passed() {
            failed += 1;
        }
    }
    println!("{} of {} suites passed", reports.len() - failed, reports.len());
    if failed > 0 {
        bail!("{failed} invariant suite(s) failed");
    }
    Ok(())
}
