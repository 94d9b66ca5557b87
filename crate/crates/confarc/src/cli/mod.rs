//! Command-line frontend: curve ingestion, invariant tables, convergence
//! studies, the check suite, and CSV/JSON export.
//!
//! All randomness flows from the single `--seed` flag and output assembly
//! is single-threaded and ordered, so identical configurations produce
//! byte-identical files. Numbers are serialized with 17 significant digits
//! in CSV; JSON numbers use the shortest lossless representation.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on input errors, 3 on
//! numerical errors.

pub mod checks;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::curve::Curve;
use crate::grassmann::{tri_inner, TRI_INDICES};
use crate::halfmeasure::convergence_order;
use crate::osculating::osculating_circle;
use crate::sphereavg::{psi_theta_half_measure, sphere_curve};
use crate::{Error, Result};
use checks::{CheckStatus, C_STAR};

#[derive(Debug, Parser)]
#[command(
    name = "confarc",
    about = "Conformal invariants of space curves via the light-cone model",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Path to a curve specification JSON file.
    #[arg(long, global = true)]
    pub curve: Option<PathBuf>,

    /// Number of output samples (at least 8).
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,

    /// Quadrature / classification tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    /// Seed for every pseudo-random draw.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output path (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-sample conformal invariants: rho, its element, curvature,
    /// torsion, conformal torsion, vertex flag.
    Invariants,
    /// Polygonal half-measure refinement study of the osculating-circle
    /// curve against the quadrature value.
    Halfmeasure,
    /// Conformal-angle and cross-ratio h-sweeps at the domain midpoint.
    Angle,
    /// Theta-averaged half-measures of the tangent sphere families.
    Sphereavg,
    /// Run the named identity/invariance suite; exit 1 on any failure.
    Check {
        /// Corrupt the circle-space metric signature (negative control:
        /// the arc-length identity check must fail).
        #[arg(long)]
        corrupt_signature: bool,
    },
    /// Emit the osculating-circle coordinates of the curve in the fixed
    /// Pluecker wire order.
    ExportEmbedding,
}

/// A rectangular report with a summary block; the single output shape of
/// every subcommand.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub summary: Vec<(String, Value)>,
}

fn fmt_cell(v: &Value) -> String {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.is_i64() || n.is_u64() {
                    n.to_string()
                } else {
                    format!("{f:.16e}")
                }
            } else {
                n.to_string()
            }
        }
        Value::Bool(b) => b.to_string(),
        Value::String(s) => s.clone(),
        Value::Null => "nan".to_string(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(fmt_cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        for (key, value) in &self.summary {
            out.push_str(&format!("# {key},{}\n", fmt_cell(value)));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let summary: serde_json::Map<String, Value> =
            self.summary.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let doc = json!({
            "command": self.command,
            "columns": self.columns,
            "rows": self.rows,
            "summary": summary,
        });
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn load_curve(cli: &Cli) -> Result<Curve> {
    let path = cli
        .curve
        .as_ref()
        .ok_or_else(|| Error::InvalidSpec("--curve PATH is required for this command".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidSpec(format!("cannot read {}: {e}", path.display())))?;
    Curve::from_json(&text)
}

fn validate(cli: &Cli) -> Result<()> {
    if cli.samples < 8 {
        return Err(Error::InvalidSpec(format!("--samples must be at least 8, got {}", cli.samples)));
    }
    if cli.tol.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::InvalidSpec(format!("--tol must be positive, got {}", cli.tol)));
    }
    Ok(())
}

/// Execute a parsed invocation; the `Ok` value is the process exit code.
pub fn run(cli: &Cli) -> Result<i32> {
    validate(cli)?;
    let (report, failed) = match &cli.command {
        Command::Invariants => (cmd_invariants(cli)?, false),
        Command::Halfmeasure => (cmd_halfmeasure(cli)?, false),
        Command::Angle => (cmd_angle(cli)?, false),
        Command::Sphereavg => (cmd_sphereavg(cli)?, false),
        Command::Check { corrupt_signature } => {
            let (report, ok) = cmd_check(cli, *corrupt_signature)?;
            (report, !ok)
        }
        Command::ExportEmbedding => (cmd_export(cli)?, false),
    };
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Numerical(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::Numerical(format!("stdout: {e}")))?;
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn cmd_invariants(cli: &Cli) -> Result<Report> {
    let curve = load_curve(cli)?;
    let (a, b) = curve.domain();
    let n = cli.samples;
    let vertex_tol = curve.vertex_tolerance(a, b)?.max(cli.tol);
    let mut rows = Vec::with_capacity(n);
    let mut s_acc = 0.0;
    let mut rho_acc = 0.0;
    let mut prev_t = a;
    for k in 0..n {
        let t = a + (b - a) * k as f64 / (n - 1) as f64;
        if k > 0 {
            s_acc += crate::numeric::adaptive_simpson(|u| Ok(curve.jet(u)?.speed()), prev_t, t, cli.tol)?;
            rho_acc += curve.conformal_arclength(prev_t, t, cli.tol)?;
        }
        let f = curve.frenet(t)?;
        let element = curve.conformal_arclength_element(t)?;
        let torsion = curve.conformal_torsion(t).ok();
        let vertex = curve.is_vertex(t, vertex_tol)?;
        rows.push(vec![
            num(t),
            num(s_acc),
            num(rho_acc),
            num(element),
            num(f.kappa),
            num(f.tau),
            torsion.map_or(Value::Null, num),
            json!(vertex),
        ]);
        prev_t = t;
    }
    Ok(Report {
        command: "invariants".into(),
        columns: ["t", "s", "rho", "drho_dt", "kappa", "tau", "conformal_torsion", "is_vertex"]
            .map(String::from)
            .to_vec(),
        rows,
        summary: vec![("rho_total".into(), num(rho_acc)), ("arclength_total".into(), num(s_acc))],
    })
}

fn cmd_halfmeasure(cli: &Cli) -> Result<Report> {
    let curve = load_curve(cli)?;
    let (a, b) = curve.domain();
    let rho = curve.conformal_arclength(a, b, cli.tol.min(1e-11))?;
    let mut ns = Vec::new();
    let mut n = 16usize;
    while n <= cli.samples.max(16) * 16 && n <= 1 << 14 {
        ns.push(n);
        n *= 2;
    }
    let value = |t: f64| Ok(*osculating_circle(&curve, t)?.gamma.tri());
    let ddot = |t: f64| Ok(osculating_circle(&curve, t)?.gamma_ddot);
    let report = convergence_order(value, ddot, a, b, &ns, tri_inner)?;
    let rows = report
        .rows
        .iter()
        .map(|r| vec![json!(r.n), num(r.polygonal), num(report.quadrature), num(r.error)])
        .collect();
    let scaled = 12.0f64.powf(0.25) * report.rows.last().unwrap().polygonal;
    Ok(Report {
        command: "halfmeasure".into(),
        columns: ["n", "polygonal", "quadrature", "error"].map(String::from).to_vec(),
        rows,
        summary: vec![
            ("fitted_order".into(), num(report.fitted_order)),
            ("rho".into(), num(rho)),
            ("scaled_polygonal".into(), num(scaled)),
            ("rel_defect".into(), num(if rho > 0.0 { (scaled - rho).abs() / rho } else { scaled.abs() })),
        ],
    })
}

fn cmd_angle(cli: &Cli) -> Result<Report> {
    let curve = load_curve(cli)?;
    let (a, b) = curve.domain();
    let t0 = a + 0.37 * (b - a);
    let f = curve.frenet(t0)?;
    let factor = f.element_fourth().sqrt();
    let drho_ds = f.element_fourth().powf(0.25);
    let mut rows = Vec::new();
    let mut hs = Vec::new();
    let mut theta_err = Vec::new();
    for k in 0..8 {
        let h = 0.1 * 0.5f64.powi(k);
        let theta = crate::confangle::conformal_angle(&curve, t0, t0 + h)?;
        let gap2 = (curve.point(t0 + h)? - curve.point(t0)?).norm_squared();
        let lemma_ratio = if factor > 0.0 { 6.0 * theta / (gap2 * factor) } else { f64::NAN };
        let via = crate::confangle::arclength_via_angle(&curve, t0, h)?;
        let probe = crate::confangle::infinitesimal_cross_ratio(&curve, t0, h).ok();
        hs.push(h);
        theta_err.push((lemma_ratio - 1.0).abs());
        rows.push(vec![
            num(h),
            num(theta),
            num(lemma_ratio),
            num(via),
            num(drho_ds),
            probe.map_or(Value::Null, |p| num(p.cross.re)),
            probe.map_or(Value::Null, |p| num(p.cross.im)),
            probe.map_or(Value::Null, |p| num(p.rho_ratio)),
        ]);
    }
    Ok(Report {
        command: "angle".into(),
        columns:
            ["h", "theta", "lemma_ratio", "arclength_via_angle", "drho_ds", "cross_re", "cross_im", "rho_ratio"]
                .map(String::from)
                .to_vec(),
        rows,
        summary: vec![
            ("t0".into(), num(t0)),
            ("lemma_order".into(), num(crate::numeric::loglog_slope(&hs, &theta_err))),
        ],
    })
}

fn cmd_sphereavg(cli: &Cli) -> Result<Report> {
    let curve = load_curve(cli)?;
    let (a, b) = curve.domain();
    let (wa, wb) = (a + 0.1 * (b - a), a + 0.45 * (b - a));
    let grid = (cli.samples.max(100) * 4).min(2000);
    let sc = sphere_curve(&curve, wa, wb, grid)?;
    let theta_count = 64usize;
    let mut rows = Vec::with_capacity(theta_count);
    let mut acc = 0.0;
    for k in 0..theta_count {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / theta_count as f64;
        let measure = psi_theta_half_measure(&sc, theta);
        acc += measure;
        rows.push(vec![num(theta), num(measure)]);
    }
    let average = acc / theta_count as f64;
    let (t0, t1) = sc.t_window();
    let rho = curve.conformal_arclength(t0, t1, cli.tol.min(1e-11))?;
    let ratio = average / rho;
    Ok(Report {
        command: "sphereavg".into(),
        columns: ["theta", "half_measure"].map(String::from).to_vec(),
        rows,
        summary: vec![
            ("average".into(), num(average)),
            ("rho".into(), num(rho)),
            ("ratio".into(), num(ratio)),
            ("c_star".into(), num(C_STAR)),
            ("rel_dev".into(), num((ratio - C_STAR).abs() / C_STAR)),
        ],
    })
}

fn cmd_check(cli: &Cli, corrupt_signature: bool) -> Result<(Report, bool)> {
    let curve = load_curve(cli)?;
    let results = checks::run_all(&curve, cli.seed, corrupt_signature)?;
    let mut rows = Vec::with_capacity(results.len());
    let mut all_ok = true;
    for r in &results {
        let status = match r.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skip",
        };
        all_ok &= r.passed();
        rows.push(vec![
            json!(r.name),
            json!(status),
            num(r.measured),
            num(r.threshold),
            json!(r.detail),
        ]);
    }
    let report = Report {
        command: "check".into(),
        columns: ["property", "status", "measured", "threshold", "detail"].map(String::from).to_vec(),
        rows,
        summary: vec![
            ("seed".into(), json!(cli.seed)),
            ("all_passed".into(), json!(all_ok)),
        ],
    };
    Ok((report, all_ok))
}

fn cmd_export(cli: &Cli) -> Result<Report> {
    let curve = load_curve(cli)?;
    let (a, b) = curve.domain();
    let n = cli.samples;
    let mut columns = vec!["t".to_string()];
    columns.extend(TRI_INDICES.iter().map(|idx| format!("p{}{}{}", idx[0], idx[1], idx[2])));
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let t = a + (b - a) * k as f64 / (n - 1) as f64;
        let gamma = osculating_circle(&curve, t)?.gamma;
        let mut row = vec![num(t)];
        row.extend(gamma.tri().iter().map(|&x| num(x)));
        rows.push(row);
    }
    Ok(Report {
        command: "export-embedding".into(),
        columns,
        rows,
        summary: vec![("samples".into(), json!(n))],
    })
}
