//! Report serialization: CSV with 17 significant digits, JSON mirrors of
//! the same records. Rows are sorted before writing so identical inputs
//! produce byte-identical files.

use ratio_bounds::accuracy::TagCheck;
use ratio_bounds::bounds::pcf::DoubleRatioTower;
use ratio_bounds::types::{PointRecord, VerificationReport};
use serde::Serialize;
use std::cmp::Ordering;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

/// 17 significant digits: enough to round-trip any f64 exactly.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn sanitize(id: &str) -> String {
    id.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '.' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

#[derive(Serialize)]
struct ReportSummary<'a> {
    bound_id: &'a str,
    num_points: usize,
    num_skipped: usize,
    num_violations: usize,
    min_margin: f64,
    worst_params: &'a [f64],
    worst_x: f64,
}

#[derive(Serialize)]
struct RecordRow<'a> {
    params: &'a [f64],
    x: f64,
    oracle_lo: f64,
    oracle_hi: f64,
    bound: f64,
    margin: f64,
    violation: bool,
}

pub fn write_verify_reports(
    dir: &Path,
    reports: &[VerificationReport],
    json: bool,
) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut summary_rows = Vec::new();
    for rep in reports {
        summary_rows.push(ReportSummary {
            bound_id: &rep.bound_id,
            num_points: rep.num_points,
            num_skipped: rep.num_skipped,
            num_violations: rep.num_violations,
            min_margin: rep.min_margin,
            worst_params: &rep.worst_params,
            worst_x: rep.worst_x,
        });
        let Some(records) = &rep.records else {
            continue;
        };
        let name = sanitize(&rep.bound_id);
        if json {
            let rows: Vec<RecordRow> = records.iter().map(record_row).collect();
            fs::write(
                dir.join(format!("{name}.json")),
                serde_json::to_string_pretty(&rows)?,
            )?;
        } else {
            let mut w = Vec::new();
            writeln!(w, "p1,p2,p3,x,oracle_lo,oracle_hi,bound,margin,violation")?;
            for r in records {
                writeln!(w, "{}", record_csv(r))?;
            }
            fs::write(dir.join(format!("{name}.csv")), w)?;
        }
    }
    if json {
        fs::write(
            dir.join("summary.json"),
            serde_json::to_string_pretty(&summary_rows)?,
        )?;
    } else {
        let mut w = Vec::new();
        writeln!(
            w,
            "bound_id,num_points,num_skipped,num_violations,min_margin,worst_x"
        )?;
        for s in &summary_rows {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                s.bound_id,
                s.num_points,
                s.num_skipped,
                s.num_violations,
                fmt_float(s.min_margin),
                fmt_float(s.worst_x)
            )?;
        }
        fs::write(dir.join("summary.csv"), w)?;
    }
    Ok(())
}

fn params_cols(params: &[f64]) -> (String, String, String) {
    let get = |i: usize| params.get(i).map(|&v| fmt_float(v)).unwrap_or_default();
    (get(0), get(1), get(2))
}

fn record_csv(r: &PointRecord) -> String {
    let (p1, p2, p3) = params_cols(&r.params);
    format!(
        "{p1},{p2},{p3},{},{},{},{},{},{}",
        fmt_float(r.x),
        fmt_float(r.oracle_lo),
        fmt_float(r.oracle_hi),
        fmt_float(r.bound),
        fmt_float(r.margin),
        r.violation
    )
}

fn record_row(r: &PointRecord) -> RecordRow<'_> {
    RecordRow {
        params: &r.params,
        x: r.x,
        oracle_lo: r.oracle_lo,
        oracle_hi: r.oracle_hi,
        bound: r.bound,
        margin: r.margin,
        violation: r.violation,
    }
}

#[derive(Serialize)]
pub struct TabulateRow {
    pub family: &'static str,
    pub bound_id: String,
    pub params: Vec<f64>,
    pub x: f64,
    pub oracle_lo: f64,
    pub oracle_hi: f64,
    pub bound: f64,
    pub margin: f64,
    pub rel_sharpness: f64,
}

impl TabulateRow {
    pub fn new(family: &'static str, bound_id: &str, r: PointRecord) -> Self {
        let mid = 0.5 * (r.oracle_lo + r.oracle_hi);
        let rel = if mid != 0.0 {
            (r.bound - mid).abs() / mid.abs()
        } else {
            f64::NAN
        };
        TabulateRow {
            family,
            bound_id: bound_id.to_owned(),
            params: r.params,
            x: r.x,
            oracle_lo: r.oracle_lo,
            oracle_hi: r.oracle_hi,
            bound: r.bound,
            margin: r.margin,
            rel_sharpness: rel,
        }
    }

    pub fn order(a: &Self, b: &Self) -> Ordering {
        (a.family, &a.bound_id)
            .cmp(&(b.family, &b.bound_id))
            .then_with(|| a.params.partial_cmp(&b.params).unwrap_or(Ordering::Equal))
            .then_with(|| a.x.partial_cmp(&b.x).unwrap_or(Ordering::Equal))
    }
}

pub fn write_tabulate(path: Option<&Path>, rows: &[TabulateRow], json: bool) -> io::Result<()> {
    let mut w: Vec<u8> = Vec::new();
    if json {
        serde_json::to_writer_pretty(&mut w, rows)?;
        w.push(b'\n');
    } else {
        writeln!(
            w,
            "family,bound_id,p1,p2,p3,x,oracle_lo,oracle_hi,bound,margin,rel_sharpness"
        )?;
        for r in rows {
            let (p1, p2, p3) = params_cols(&r.params);
            writeln!(
                w,
                "{},{},{p1},{p2},{p3},{},{},{},{},{},{}",
                r.family,
                r.bound_id,
                fmt_float(r.x),
                fmt_float(r.oracle_lo),
                fmt_float(r.oracle_hi),
                fmt_float(r.bound),
                fmt_float(r.margin),
                fmt_float(r.rel_sharpness)
            )?;
        }
    }
    match path {
        Some(p) => fs::write(p, w),
        None => io::stdout().write_all(&w),
    }
}

#[derive(Serialize)]
struct AccuracyRow<'a> {
    bound_id: &'a str,
    side: &'static str,
    expected_exponent: f64,
    fitted_exponent: Option<f64>,
    std_err: Option<f64>,
    coefficient: Option<f64>,
    matched: bool,
}

pub fn write_accuracy(path: &Path, checks: &[TagCheck], json: bool) -> io::Result<()> {
    let rows: Vec<AccuracyRow> = checks
        .iter()
        .map(|c| AccuracyRow {
            bound_id: &c.bound_id,
            side: c.side.name(),
            expected_exponent: c.expected_exponent,
            fitted_exponent: c.fit.as_ref().map(|f| f.exponent),
            std_err: c.fit.as_ref().map(|f| f.std_err),
            coefficient: c.fit.as_ref().map(|f| f.coefficient),
            matched: c.matched,
        })
        .collect();
    let mut w: Vec<u8> = Vec::new();
    if json {
        serde_json::to_writer_pretty(&mut w, &rows)?;
        w.push(b'\n');
    } else {
        writeln!(
            w,
            "bound_id,side,expected_exponent,fitted_exponent,std_err,coefficient,matched"
        )?;
        for r in rows {
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                r.bound_id,
                r.side,
                fmt_float(r.expected_exponent),
                r.fitted_exponent.map(fmt_float).unwrap_or_default(),
                r.std_err.map(fmt_float).unwrap_or_default(),
                r.coefficient.map(fmt_float).unwrap_or_default(),
                r.matched
            )?;
        }
    }
    fs::write(path, w)
}

#[derive(Serialize)]
pub struct RiccatiRow {
    pub id: &'static str,
    pub verdict: &'static str,
    pub expected: &'static str,
    pub as_expected: bool,
    pub min_margin: f64,
    pub num_points: usize,
}

pub fn write_riccati(path: &Path, rows: &[RiccatiRow], json: bool) -> io::Result<()> {
    let mut w: Vec<u8> = Vec::new();
    if json {
        serde_json::to_writer_pretty(&mut w, rows)?;
        w.push(b'\n');
    } else {
        writeln!(w, "id,verdict,expected,as_expected,min_margin,num_points")?;
        for r in rows {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                r.id,
                r.verdict,
                r.expected,
                r.as_expected,
                fmt_float(r.min_margin),
                r.num_points
            )?;
        }
    }
    fs::write(path, w)
}

#[derive(Serialize)]
struct TowerRow {
    k: usize,
    x: f64,
    lo: f64,
    hi: f64,
}

pub fn write_tower(path: &Path, tower: &DoubleRatioTower, json: bool) -> io::Result<()> {
    let mut rows = Vec::new();
    for (ki, row) in tower.values.iter().enumerate() {
        for (xi, enc) in row.iter().enumerate() {
            rows.push(TowerRow {
                k: ki + 1,
                x: tower.xs[xi],
                lo: enc.lo(),
                hi: enc.hi(),
            });
        }
    }
    let mut w: Vec<u8> = Vec::new();
    if json {
        serde_json::to_writer_pretty(&mut w, &rows)?;
        w.push(b'\n');
    } else {
        writeln!(w, "k,x,lo,hi")?;
        for r in rows {
            writeln!(
                w,
                "{},{},{},{}",
                r.k,
                fmt_float(r.x),
                fmt_float(r.lo),
                fmt_float(r.hi)
            )?;
        }
    }
    fs::write(path, w)
}
