//! CSV and JSON serialization for the primary outputs.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use fracalc_core::circuits::BodePoint;
use fracalc_core::differint::EquivalenceReport;
use fracalc_core::grid::{Grid, SampledSignal};
use fracalc_core::transforms::{LaplaceEvaluation, RuleReport, ZEvaluation};

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = File::create(p).with_context(|| format!("cannot create {}", p.display()))?;
            Ok(Box::new(f))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn finish_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<()> {
    let mut w = sink(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Serialize)]
struct GridJson {
    a: f64,
    b: f64,
    n: usize,
}

impl From<Grid> for GridJson {
    fn from(g: Grid) -> GridJson {
        GridJson { a: g.a, b: g.b, n: g.n }
    }
}

#[derive(Serialize)]
struct SignalJson {
    grid: GridJson,
    values: Vec<f64>,
}

pub fn write_signal(s: &SampledSignal, path: Option<&Path>, json: bool) -> Result<()> {
    if json {
        let doc = SignalJson { grid: s.grid.into(), values: s.values.clone() };
        return finish_json(&doc, path);
    }
    let mut w = csv::Writer::from_writer(sink(path)?);
    w.write_record(["x", "value"])?;
    for (j, v) in s.values.iter().enumerate() {
        w.write_record([num(s.grid.x(j)), num(*v)])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads the `x,value` format back in, recovering the uniform grid.
pub fn read_signal_csv(path: &Path) -> Result<SampledSignal> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;
    let mut xs = Vec::new();
    let mut values = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        if rec.len() != 2 {
            bail!("{}: expected two columns x,value", path.display());
        }
        xs.push(rec[0].trim().parse::<f64>()?);
        values.push(rec[1].trim().parse::<f64>()?);
    }
    if xs.len() < 2 {
        bail!("{}: need at least two rows", path.display());
    }
    let n = xs.len() - 1;
    let grid = Grid::new(xs[0], xs[n], n)?;
    for (j, x) in xs.iter().enumerate() {
        if (x - grid.x(j)).abs() > 1e-9 * grid.h.max(1.0) {
            bail!("{}: x column is not uniformly spaced at row {j}", path.display());
        }
    }
    Ok(SampledSignal::new(grid, values)?)
}

#[derive(Serialize)]
struct RowJson {
    n: usize,
    sup_gap: f64,
    est_order: Option<f64>,
}

#[derive(Serialize)]
struct ReportJson {
    order: f64,
    rows: Vec<RowJson>,
}

pub fn write_report(rep: &EquivalenceReport, path: Option<&Path>, json: bool) -> Result<()> {
    if json {
        let doc = ReportJson {
            order: rep.order,
            rows: rep
                .rows
                .iter()
                .map(|r| RowJson { n: r.n, sup_gap: r.sup_gap, est_order: r.est_order })
                .collect(),
        };
        return finish_json(&doc, path);
    }
    let mut w = csv::Writer::from_writer(sink(path)?);
    w.write_record(["n", "sup_gap", "est_order"])?;
    for r in &rep.rows {
        let order = r.est_order.map(num).unwrap_or_default();
        w.write_record([r.n.to_string(), num(r.sup_gap), order])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct LaplaceJson {
    s: [f64; 2],
    horizon: f64,
    value: [f64; 2],
    tail_bound: f64,
}

pub fn write_laplace(evals: &[LaplaceEvaluation], path: Option<&Path>, json: bool) -> Result<()> {
    if json {
        let doc: Vec<LaplaceJson> = evals
            .iter()
            .map(|e| LaplaceJson {
                s: [e.s.re, e.s.im],
                horizon: e.horizon,
                value: [e.value.re, e.value.im],
                tail_bound: e.tail_bound,
            })
            .collect();
        return finish_json(&doc, path);
    }
    let mut w = csv::Writer::from_writer(sink(path)?);
    w.write_record(["s_re", "s_im", "value_re", "value_im", "tail_bound"])?;
    for e in evals {
        w.write_record([num(e.s.re), num(e.s.im), num(e.value.re), num(e.value.im), num(e.tail_bound)])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct RuleRowJson {
    s: [f64; 2],
    lhs: [f64; 2],
    rhs: [f64; 2],
    abs_gap: f64,
}

pub fn write_rule_report(rep: &RuleReport, path: Option<&Path>, json: bool) -> Result<()> {
    if json {
        #[derive(Serialize)]
        struct Doc {
            order: f64,
            rows: Vec<RuleRowJson>,
        }
        let doc = Doc {
            order: rep.order,
            rows: rep
                .rows
                .iter()
                .map(|r| RuleRowJson {
                    s: [r.s.re, r.s.im],
                    lhs: [r.lhs.re, r.lhs.im],
                    rhs: [r.rhs.re, r.rhs.im],
                    abs_gap: r.abs_gap,
                })
                .collect(),
        };
        return finish_json(&doc, path);
    }
    let mut w = csv::Writer::from_writer(sink(path)?);
    w.write_record(["s_re", "s_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_gap"])?;
    for r in &rep.rows {
        w.write_record([
            num(r.s.re),
            num(r.s.im),
            num(r.lhs.re),
            num(r.lhs.im),
            num(r.rhs.re),
            num(r.rhs.im),
            num(r.abs_gap),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_zeval(ev: &ZEvaluation, bound: f64, path: Option<&Path>, json: bool) -> Result<()> {
    if json {
        #[derive(Serialize)]
        struct Doc {
            z: [f64; 2],
            terms: usize,
            value: [f64; 2],
            truncation_bound: f64,
        }
        let doc = Doc {
            z: [ev.z.re, ev.z.im],
            terms: ev.terms,
            value: [ev.value.re, ev.value.im],
            truncation_bound: bound,
        };
        return finish_json(&doc, path);
    }
    let mut w = csv::Writer::from_writer(sink(path)?);
    w.write_record(["z_re", "z_im", "terms", "value_re", "value_im", "truncation_bound"])?;
    w.write_record([
        num(ev.z.re),
        num(ev.z.im),
        ev.terms.to_string(),
        num(ev.value.re),
        num(ev.value.im),
        num(bound),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn write_bode(table: &[BodePoint], path: Option<&Path>, json: bool) -> Result<()> {
    if json {
        #[derive(Serialize)]
        struct Point {
            omega: f64,
            mag_db: f64,
            phase_deg: f64,
        }
        let doc: Vec<Point> = table
            .iter()
            .map(|p| Point { omega: p.omega, mag_db: p.mag_db, phase_deg: p.phase_deg })
            .collect();
        return finish_json(&doc, path);
    }
    let mut w = csv::Writer::from_writer(sink(path)?);
    w.write_record(["omega", "mag_db", "phase_deg"])?;
    for p in table {
        w.write_record([num(p.omega), num(p.mag_db), num(p.phase_deg)])?;
    }
    w.flush()?;
    Ok(())
}

/// Sequence output for the difference-equation solver, one row per step.
pub fn write_sequence(values: &[f64], path: Option<&Path>, json: bool) -> Result<()> {
    if json {
        return finish_json(&values.to_vec(), path);
    }
    let mut w = csv::Writer::from_writer(sink(path)?);
    w.write_record(["k", "value"])?;
    for (k, v) in values.iter().enumerate() {
        w.write_record([k.to_string(), num(*v)])?;
    }
    w.flush()?;
    Ok(())
}
