//! Serialization of verification reports. The JSON and CSV forms contain
//! only deterministic fields; wall-clock times go to a separate file.

use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;

use super::{ParamPoint, PointRecord, VerificationReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(Error::Config(format!("unknown report format {other:?} (json, csv or text)"))),
        }
    }
}

#[derive(Serialize)]
struct ComplexOut {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexOut {
    fn from(z: Complex64) -> Self {
        ComplexOut { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct ParamsOut {
    mu: ComplexOut,
    nu: ComplexOut,
    x: f64,
    y: f64,
    p: f64,
}

impl From<&ParamPoint> for ParamsOut {
    fn from(pt: &ParamPoint) -> Self {
        ParamsOut { mu: pt.mu().into(), nu: pt.nu().into(), x: pt.x, y: pt.y, p: pt.p }
    }
}

#[derive(Serialize)]
struct RecordOut<'a> {
    id: &'a str,
    kind: &'a str,
    params: ParamsOut,
    lhs: Option<ComplexOut>,
    rhs: Option<ComplexOut>,
    rel_error: Option<f64>,
    verdict: &'a str,
    evaluations: usize,
    wall_time_ms: Option<f64>,
    error: Option<&'a str>,
}

fn record_out<'a>(report: &'a VerificationReport, r: &'a PointRecord) -> RecordOut<'a> {
    RecordOut {
        id: report.id,
        kind: report.kind.as_str(),
        params: (&r.params).into(),
        lhs: r.lhs.map(Into::into),
        rhs: r.rhs.map(Into::into),
        rel_error: r.rel_error,
        verdict: r.verdict.as_str(),
        evaluations: r.evaluations,
        wall_time_ms: None,
        error: r.error.as_deref(),
    }
}

/// Write all point records of `reports`, in order.
pub fn write_report<W: Write>(reports: &[VerificationReport], format: ReportFormat, mut out: W) -> Result<()> {
    match format {
        ReportFormat::Json => {
            let records: Vec<RecordOut> =
                reports.iter().flat_map(|rep| rep.records.iter().map(move |r| record_out(rep, r))).collect();
            serde_json::to_writer_pretty(&mut out, &records).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            writeln!(
                out,
                "id,kind,mu,nu,x,y,p,lhs_re,lhs_im,rhs_re,rhs_im,rel_error,verdict,evaluations,wall_time_ms"
            )?;
            let opt = |v: Option<f64>| v.map_or(String::new(), |v| v.to_string());
            for rep in reports {
                for r in &rep.records {
                    let pt = &r.params;
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},",
                        rep.id,
                        rep.kind.as_str(),
                        pt.mu().re,
                        pt.nu().re,
                        pt.x,
                        pt.y,
                        pt.p,
                        opt(r.lhs.map(|z| z.re)),
                        opt(r.lhs.map(|z| z.im)),
                        opt(r.rhs.map(|z| z.re)),
                        opt(r.rhs.map(|z| z.im)),
                        opt(r.rel_error),
                        r.verdict.as_str(),
                        r.evaluations,
                    )?;
                }
            }
        }
        ReportFormat::Text => {
            for rep in reports {
                let expect = if rep.as_expected() { "as expected" } else { "UNEXPECTED" };
                writeln!(
                    out,
                    "{:<20} {:<15} {:<7} max_rel_error={:<10} tol={:e} points={} evaluations={} ({expect})",
                    rep.id,
                    rep.kind.as_str(),
                    rep.verdict.as_str(),
                    rep.max_rel_error.map_or("n/a".into(), |e| format!("{e:.3e}")),
                    rep.tolerance,
                    rep.records.len(),
                    rep.evaluations,
                )?;
                for r in rep.records.iter().filter(|r| r.error.is_some()) {
                    writeln!(out, "    {:?}: {}", r.params, r.error.as_deref().unwrap_or_default())?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TimingOut<'a> {
    id: &'a str,
    wall_time_ms: f64,
    points_ms: Vec<f64>,
}

/// Per-case and per-point wall-clock times, for the sidecar file.
pub fn write_timing<W: Write>(reports: &[VerificationReport], mut out: W) -> Result<()> {
    let rows: Vec<TimingOut> = reports
        .iter()
        .map(|r| TimingOut {
            id: r.id,
            wall_time_ms: r.wall_time_ms,
            points_ms: r.records.iter().map(|p| p.wall_time_ms).collect(),
        })
        .collect();
    serde_json::to_writer_pretty(&mut out, &rows).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}
