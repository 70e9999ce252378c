//! Machine-readable report emission. JSON schemas are versioned; CSV output
//! has a fixed header, UTF-8, LF line endings, and rows already arrive
//! sorted (by graph6 string, or by (p, q, r) for verdict tables), so files
//! are byte-stable across runs.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use crate::runner::{BoundReport, CheckStatus, SearchOutcome, VerifyOutcome, CHECK_NAMES};
use crate::verdict::TripleVerdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct Versioned<T: Serialize> {
    schema: &'static str,
    #[serde(flatten)]
    body: T,
}

fn emit_json<T: Serialize>(out: &mut dyn Write, schema: &'static str, body: T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, &Versioned { schema, body })?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct List<T: Serialize> {
    rows: Vec<T>,
}

fn status_cell(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Skip => "skip",
    }
}

pub fn emit_verdicts(
    out: &mut dyn Write,
    verdicts: &[TripleVerdict],
    format: Format,
) -> Result<()> {
    match format {
        Format::Json => emit_json(
            out,
            "alphamu.verdicts.v1",
            List {
                rows: verdicts.to_vec(),
            },
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "p",
                "q",
                "r",
                "status",
                "provenance",
                "witness_family",
                "witness_graph6",
            ])?;
            for v in verdicts {
                w.write_record([
                    v.p.to_string(),
                    v.q.to_string(),
                    v.r.to_string(),
                    format!("{:?}", v.status),
                    v.provenance.clone(),
                    v.witness
                        .as_ref()
                        .map_or(String::new(), |w| w.family.clone()),
                    v.witness
                        .as_ref()
                        .map_or(String::new(), |w| w.graph6.clone()),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

pub fn emit_verify(out: &mut dyn Write, outcome: &VerifyOutcome, format: Format) -> Result<()> {
    match format {
        Format::Json => emit_json(out, "alphamu.verify.v1", outcome),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["p", "q", "r", "graph6", "alpha_p", "alpha_q_line", "holds"])?;
            for row in &outcome.rows {
                w.write_record([
                    outcome.p.to_string(),
                    outcome.q.to_string(),
                    outcome.r.to_string(),
                    row.graph6.clone(),
                    row.alpha_p.to_string(),
                    row.alpha_q_line.to_string(),
                    row.holds.to_string(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

pub fn emit_search(out: &mut dyn Write, outcome: &SearchOutcome, format: Format) -> Result<()> {
    match format {
        Format::Json => emit_json(out, "alphamu.search.v1", outcome),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "p",
                "q",
                "r",
                "witness_graph6",
                "alpha_p",
                "alpha_q_line",
                "log",
            ])?;
            let (g6, a, al) = outcome.witness.as_ref().map_or(
                (String::new(), String::new(), String::new()),
                |w| {
                    (
                        w.graph6.clone(),
                        w.alpha_p.to_string(),
                        w.alpha_q_line.to_string(),
                    )
                },
            );
            w.write_record([
                outcome.p.to_string(),
                outcome.q.to_string(),
                outcome.r.to_string(),
                g6,
                a,
                al,
                outcome.log.join("; "),
            ])?;
            w.flush()?;
            Ok(())
        }
    }
}

pub fn emit_bounds(out: &mut dyn Write, reports: &[BoundReport], format: Format) -> Result<()> {
    match format {
        Format::Json => emit_json(
            out,
            "alphamu.bounds.v1",
            List {
                rows: reports.to_vec(),
            },
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Vec<String> = ["graph6", "n", "r"].map(str::to_string).into();
            header.extend((0..=4).map(|p| format!("alpha_{p}")));
            header.extend((0..=4).map(|q| format!("alpha_{q}_line")));
            header.push("mu".into());
            header.push("rho".into());
            header.extend(CHECK_NAMES.iter().map(|s| s.to_string()));
            header.push("notes".into());
            w.write_record(&header)?;
            for rep in reports {
                let mut row = vec![rep.graph6.clone(), rep.n.to_string(), rep.r.to_string()];
                row.extend(rep.alpha.iter().map(|a| a.to_string()));
                row.extend(rep.alpha_line.iter().map(|a| a.to_string()));
                row.push(rep.mu.to_string());
                row.push(rep.rho.map_or(String::new(), |v| v.to_string()));
                row.extend(rep.checks.iter().map(|c| status_cell(c.status).to_string()));
                // notes carry the values behind every non-pass cell
                let notes: Vec<String> = rep
                    .checks
                    .iter()
                    .filter(|c| c.status != CheckStatus::Pass)
                    .map(|c| format!("{}: {}", c.name, c.detail))
                    .collect();
                row.push(notes.join("; "));
                w.write_record(&row)?;
            }
            w.flush()?;
            Ok(())
        }
    }
}
