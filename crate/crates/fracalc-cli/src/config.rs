//! JSON problem setup for the solve subcommands.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use fracalc_core::fde::{solve_frac_difference, solve_linear_fde, FdeProblem};
use fracalc_core::grid::{Grid, SampledSignal};

use crate::output;
use crate::OutArgs;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveConfig {
    pub v: f64,
    pub a: f64,
    pub y0: f64,
    #[serde(rename = "T", default)]
    pub t_end: Option<f64>,
    pub n: usize,
    pub forcing: Forcing,
}

#[derive(Deserialize)]
#[serde(untagged)]
pub enum Forcing {
    Named(String),
    Inline(Vec<f64>),
}

impl Forcing {
    /// Expands to `len` samples.
    fn expand(&self, len: usize) -> Result<Vec<f64>> {
        match self {
            Forcing::Inline(values) => {
                if values.len() != len {
                    bail!("inline forcing has {} entries, the grid needs {len}", values.len());
                }
                Ok(values.clone())
            }
            Forcing::Named(name) => {
                let mut u = vec![0.0; len];
                if name == "zero" {
                    return Ok(u);
                }
                if name == "impulse" {
                    u[0] = 1.0;
                    return Ok(u);
                }
                if let Some(c) = name.strip_prefix("const:") {
                    let c: f64 = c
                        .trim()
                        .parse()
                        .with_context(|| format!("bad constant in forcing '{name}'"))?;
                    u.fill(c);
                    return Ok(u);
                }
                bail!("unknown forcing '{name}', expected zero, impulse, const:<c>, or an array");
            }
        }
    }
}

fn load(path: &Path) -> Result<SolveConfig> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("bad config in {}", path.display()))
}

pub fn run_fde(path: &Path, out: &OutArgs) -> Result<()> {
    let cfg = load(path)?;
    let Some(t_end) = cfg.t_end else {
        bail!("fde config needs a horizon field T");
    };
    let grid = Grid::new(0.0, t_end, cfg.n)?;
    let u = SampledSignal::new(grid, cfg.forcing.expand(cfg.n + 1)?)?;
    let problem = FdeProblem::new(cfg.v, cfg.a, u, cfg.y0)?;
    let sol = solve_linear_fde(&problem)?;
    eprintln!("scheme {}, residual sup norm {:.3e}", sol.scheme, sol.residual_norm);
    output::write_signal(&sol.y, out.out.as_deref(), out.format == crate::Format::Json)
}

pub fn run_fdiff(path: &Path, out: &OutArgs) -> Result<()> {
    let cfg = load(path)?;
    let u = cfg.forcing.expand(cfg.n + 1)?;
    let y = solve_frac_difference(cfg.v, cfg.a, &u, cfg.y0)?;
    output::write_sequence(&y, out.out.as_deref(), out.format == crate::Format::Json)
}
