//! Batch front-end for the bound catalogue: verify inequalities against the
//! enclosure oracles, tabulate margins, certify accuracy tags, run the
//! qualitative-checker registry, and explore the double-ratio tower.
//!
//! Exit codes: 0 success; 2 violations, mismatches or failed expectations;
//! 3 oracle convergence failure; 4 configuration errors.

// Domain guards use the `!(v > 0.0)` form so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ratio_bounds::accuracy::certify_accuracy_table;
use ratio_bounds::bounds::pcf::double_ratio_tower;
use ratio_bounds::riccati::registry::registry;
use ratio_bounds::riccati::Verdict;
use ratio_bounds::types::{sample_axis, Sampling};
use ratio_bounds::verify::{catalog, verify_bound, CatalogBound, OracleCache};
use ratio_bounds::{Error, Grid, OracleConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ratio-bounds",
    version,
    about = "Certified bounds for ratios of contiguous hypergeometric-type functions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Selection {
    /// Family filter: pcf | bessel | kummer | gauss.
    #[arg(long)]
    family: Option<String>,
    /// Single bound identifier (see `verify` output for the catalogue ids).
    #[arg(long)]
    bound: Option<String>,
    /// JSON grid override: {"params": [[..], ..], "x": {"min":, "max":, "count":, "scheme":}}.
    #[arg(long)]
    grid_file: Option<PathBuf>,
    /// Output format for report files.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output directory (verify) or file (tabulate).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Starting recursion depth for the oracles.
    #[arg(long)]
    depth: Option<usize>,
    /// Target relative width for the oracles.
    #[arg(long)]
    target_width: Option<f64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the inequality suites over their default (or overridden) grids.
    Verify(Selection),
    /// Emit per-point oracle/bound comparisons.
    Tabulate(Selection),
    /// Certify the catalogued accuracy tags by order fits.
    Accuracy {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the registered nullcline/residual instances (and the corrupted
    /// candidates that must fail).
    Riccati {
        #[arg(long)]
        instance: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the iterated double ratios and report the observed
    /// monotonicity/ordering/sub-unity flags (observations, not proofs).
    Conjecture {
        #[arg(long)]
        n: f64,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        target_width: Option<f64>,
    },
}

fn oracle_config(depth: Option<usize>, target: Option<f64>) -> OracleConfig {
    let mut cfg = OracleConfig::default();
    if let Some(d) = depth {
        cfg.depth = d.max(1);
    }
    if let Some(t) = target {
        cfg.target_rel_width = t;
    }
    cfg
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NotConverged { .. } | Error::NoConvergence => 3,
        Error::InvalidGrid(_) | Error::Domain(_) => 4,
        _ => 3,
    }
}

fn selected_bounds(sel: &Selection) -> Result<Vec<CatalogBound>, (u8, String)> {
    if let Some(f) = sel.family.as_deref() {
        if !["pcf", "bessel", "kummer", "confluent", "gauss"].contains(&f) {
            return Err((4, format!("unknown family {f:?}")));
        }
    }
    let mut cat: Vec<CatalogBound> = catalog()
        .into_iter()
        .filter(|cb| {
            sel.family
                .as_deref()
                .is_none_or(|f| ratio_bounds::verify::family_matches(cb.family, f))
        })
        .filter(|cb| sel.bound.as_deref().is_none_or(|id| cb.id == id))
        .collect();
    if cat.is_empty() {
        return Err((
            4,
            format!(
                "no catalogued bound matches --family {:?} --bound {:?}",
                sel.family, sel.bound
            ),
        ));
    }
    if let Some(path) = &sel.grid_file {
        let grid = load_grid_file(path).map_err(|m| (4, m))?;
        for cb in &mut cat {
            let params = grid
                .params
                .clone()
                .unwrap_or_else(|| cb.grid.params.clone());
            let arity = cb.grid.params.first().map(|p| p.len()).unwrap_or(0);
            if params.iter().any(|p| p.len() != arity) {
                return Err((
                    4,
                    format!(
                        "grid file parameter tuples must have {arity} entries for {}",
                        cb.id
                    ),
                ));
            }
            let xs = grid.xs.clone().unwrap_or_else(|| cb.grid.xs.clone());
            cb.grid = Grid::new(params, xs).map_err(|e| (4, e.to_string()))?;
        }
    }
    Ok(cat)
}

struct GridOverride {
    params: Option<Vec<Vec<f64>>>,
    xs: Option<Vec<f64>>,
}

fn load_grid_file(path: &PathBuf) -> Result<GridOverride, String> {
    #[derive(serde::Deserialize)]
    struct AxisSpec {
        min: f64,
        max: f64,
        count: usize,
        #[serde(default = "default_scheme")]
        scheme: String,
    }
    fn default_scheme() -> String {
        "linear".into()
    }
    #[derive(serde::Deserialize)]
    struct GridFile {
        params: Option<Vec<Vec<f64>>>,
        x: Option<AxisSpec>,
    }
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path:?}: {e}"))?;
    let gf: GridFile = serde_json::from_str(&text).map_err(|e| format!("bad grid file: {e}"))?;
    let xs = match gf.x {
        None => None,
        Some(ax) => {
            if !(ax.count >= 2 && ax.max > ax.min) {
                return Err("grid file x axis needs count >= 2 and max > min".into());
            }
            let scheme = match ax.scheme.as_str() {
                "linear" => Sampling::Linear,
                "log" => Sampling::Log,
                "mixed" => Sampling::Mixed,
                other => return Err(format!("unknown sampling scheme {other:?}")),
            };
            Some(sample_axis(ax.min, ax.max, ax.count, scheme))
        }
    };
    if let Some(params) = &gf.params {
        if params.is_empty() {
            return Err("grid file params must be non-empty when given".into());
        }
    }
    Ok(GridOverride {
        params: gf.params,
        xs,
    })
}

fn cmd_verify(sel: Selection) -> u8 {
    let bounds = match selected_bounds(&sel) {
        Ok(b) => b,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    let mut cache = OracleCache::new(oracle_config(sel.depth, sel.target_width));
    let keep = sel.out.is_some();
    let mut reports = Vec::new();
    for cb in &bounds {
        match verify_bound(cb, &mut cache, keep) {
            Ok(rep) => {
                println!(
                    "{:34} points {:6}  skipped {:6}  violations {:3}  min margin {}",
                    rep.bound_id,
                    rep.num_points,
                    rep.num_skipped,
                    rep.num_violations,
                    output::fmt_float(rep.min_margin),
                );
                reports.push(rep);
            }
            Err(e) => {
                eprintln!("error verifying {}: {e}", cb.id);
                return exit_code_for(&e);
            }
        }
    }
    if reports.iter().any(|r| r.num_points == 0) {
        eprintln!("error: a selected bound had an empty effective grid");
        return 4;
    }
    if let Some(dir) = &sel.out {
        if let Err(e) = output::write_verify_reports(dir, &reports, sel.format == Format::Json) {
            eprintln!("error writing reports: {e}");
            return 4;
        }
    }
    let violations: usize = reports.iter().map(|r| r.num_violations).sum();
    println!("total: {} bounds, {} violations", reports.len(), violations);
    if violations > 0 {
        2
    } else {
        0
    }
}

fn cmd_tabulate(sel: Selection) -> u8 {
    let bounds = match selected_bounds(&sel) {
        Ok(b) => b,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    let mut cache = OracleCache::new(oracle_config(sel.depth, sel.target_width));
    let mut rows = Vec::new();
    for cb in &bounds {
        match verify_bound(cb, &mut cache, true) {
            Ok(rep) => {
                let recs = rep.records.unwrap_or_default();
                for r in recs {
                    rows.push(output::TabulateRow::new(cb.family.name(), &rep.bound_id, r));
                }
            }
            Err(e) => {
                eprintln!("error tabulating {}: {e}", cb.id);
                return exit_code_for(&e);
            }
        }
    }
    if rows.is_empty() {
        eprintln!("error: empty grid after validity filtering");
        return 4;
    }
    rows.sort_by(output::TabulateRow::order);
    if let Err(e) = output::write_tabulate(sel.out.as_deref(), &rows, sel.format == Format::Json) {
        eprintln!("error writing table: {e}");
        return 4;
    }
    0
}

fn cmd_accuracy(family: Option<String>, format: Format, out: Option<PathBuf>) -> u8 {
    if let Some(f) = family.as_deref() {
        if !["pcf", "bessel", "kummer", "confluent", "gauss"].contains(&f) {
            eprintln!("error: unknown family {f:?}");
            return 4;
        }
    }
    let checks: Vec<_> = certify_accuracy_table(&OracleConfig::default())
        .into_iter()
        .filter(|c| {
            family
                .as_deref()
                .is_none_or(|f| ratio_bounds::verify::family_matches(c.family, f))
        })
        .collect();
    if checks.is_empty() {
        eprintln!("error: no accuracy entries match the filter");
        return 4;
    }
    let mut mismatches = 0;
    for c in &checks {
        let status = if c.matched { "MATCH" } else { "MISMATCH" };
        let got = match (&c.fit, &c.error) {
            (Some(f), _) => format!(
                "fitted {} (stderr {})",
                output::fmt_float(f.exponent),
                output::fmt_float(f.std_err)
            ),
            (None, Some(e)) => format!("error: {e}"),
            _ => "no fit".into(),
        };
        println!(
            "{:24} {:9} expected {:+} {got} {status}",
            c.bound_id,
            c.side.name(),
            c.expected_exponent
        );
        if !c.matched {
            mismatches += 1;
        }
    }
    if let Some(path) = &out {
        if let Err(e) = output::write_accuracy(path, &checks, format == Format::Json) {
            eprintln!("error writing report: {e}");
            return 4;
        }
    }
    println!("total: {} checks, {} mismatches", checks.len(), mismatches);
    if mismatches > 0 {
        2
    } else {
        0
    }
}

fn cmd_riccati(instance: Option<String>, format: Format, out: Option<PathBuf>) -> u8 {
    let insts: Vec<_> = registry()
        .into_iter()
        .filter(|i| instance.as_deref().is_none_or(|id| i.id == id))
        .collect();
    if insts.is_empty() {
        eprintln!("error: no registered instance named {instance:?}");
        return 4;
    }
    let cfg = OracleConfig::default();
    let mut rows = Vec::new();
    let mut unexpected = 0;
    for inst in &insts {
        match inst.run(&cfg) {
            Ok(outcome) => {
                let verdict = match outcome.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::Fail => "FAIL",
                    Verdict::Inconclusive => "INCONCLUSIVE",
                };
                let expected = if inst.expect_pass {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                };
                let ok = outcome.verdict == expected;
                if !ok {
                    unexpected += 1;
                }
                println!(
                    "{:32} {:12} (expected {:4}) min margin {}  {}",
                    inst.id,
                    verdict,
                    if inst.expect_pass { "PASS" } else { "FAIL" },
                    output::fmt_float(outcome.min_margin),
                    if ok { "as expected" } else { "UNEXPECTED" },
                );
                rows.push(output::RiccatiRow {
                    id: inst.id,
                    verdict,
                    expected: if inst.expect_pass { "PASS" } else { "FAIL" },
                    as_expected: ok,
                    min_margin: outcome.min_margin,
                    num_points: outcome.num_points,
                });
            }
            Err(e) => {
                eprintln!("error running {}: {e}", inst.id);
                return exit_code_for(&e);
            }
        }
    }
    if let Some(path) = &out {
        if let Err(e) = output::write_riccati(path, &rows, format == Format::Json) {
            eprintln!("error writing report: {e}");
            return 4;
        }
    }
    if unexpected > 0 {
        2
    } else {
        0
    }
}

fn cmd_conjecture(
    n: f64,
    kmax: usize,
    format: Format,
    out: Option<PathBuf>,
    depth: Option<usize>,
    target: Option<f64>,
) -> u8 {
    if !(n > 0.5) || kmax < 1 {
        eprintln!("error: conjecture exploration needs --n > 0.5 and --kmax >= 1");
        return 4;
    }
    let cfg = oracle_config(depth, target);
    let xs = sample_axis(-20.0, 20.0, 81, Sampling::Linear);
    let tower = match double_ratio_tower(n, kmax, &xs, &cfg) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error building tower: {e}");
            return exit_code_for(&e);
        }
    };
    println!(
        "double-ratio tower at n = {n}, k <= {kmax}, {} x points in [-20, 20]",
        xs.len()
    );
    println!("(observed flags with enclosure uncertainties; exploration only, no proof claimed)");
    for k in 1..=tower.k_max {
        let row = &tower.values[k - 1];
        let max_unc = row.iter().map(|e| e.width()).fold(0.0f64, f64::max);
        print!(
            "k={k}: increasing-in-x violations {}/{}",
            tower.increasing_violations[k - 1],
            xs.len() - 1
        );
        if k >= 2 {
            print!(
                ", points not below 1: {}/{}",
                tower.below_one_violations[k - 1],
                xs.len()
            );
        }
        if k >= 3 {
            print!(
                ", ordering vs k={}: violations {}/{}",
                k - 1,
                tower.ordering_violations[k - 3],
                xs.len()
            );
        }
        println!(", max enclosure width {}", output::fmt_float(max_unc));
    }
    if let Some(path) = &out {
        if let Err(e) = output::write_tower(path, &tower, format == Format::Json) {
            eprintln!("error writing tower: {e}");
            return 4;
        }
    }
    0
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Verify(sel) => cmd_verify(sel),
        Cmd::Tabulate(sel) => cmd_tabulate(sel),
        Cmd::Accuracy {
            family,
            format,
            out,
        } => cmd_accuracy(family, format, out),
        Cmd::Riccati {
            instance,
            format,
            out,
        } => cmd_riccati(instance, format, out),
        Cmd::Conjecture {
            n,
            kmax,
            format,
            out,
            depth,
            target_width,
        } => cmd_conjecture(n, kmax, format, out, depth, target_width),
    };
    ExitCode::from(code)
}
