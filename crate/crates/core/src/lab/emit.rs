//! CSV and JSON output for sweeps.
//!
//! Row CSV header:
//! `alpha,p,trial,seed,status,dim,f0,f1,f2,betti0,..,bettiK,torsion_flag,contains_K,gamma_le_m,ms`.
//! Floats are written with 17 significant digits. Missing values are empty
//! cells; `torsion_flag` is `unchecked` for prime-field rows. The per-alpha
//! table goes to a sibling file with extension `.agg.csv`.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::sweep::{Aggregate, SweepOutput, SweepRow, TrialStatus};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::MalformedInput(format!("unknown format {s:?}"))),
        }
    }
}

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(String::new, |v| v.to_string())
}

fn flag(b: Option<bool>) -> String {
    opt(b.map(u8::from))
}

pub fn row_header(kmax: usize) -> Vec<String> {
    let mut h: Vec<String> = [
        "alpha", "p", "trial", "seed", "status", "dim", "f0", "f1", "f2",
    ]
    .map(String::from)
    .into();
    h.extend((0..=kmax).map(|k| format!("betti{k}")));
    h.extend(["torsion_flag", "contains_K", "gamma_le_m", "ms"].map(String::from));
    h
}

fn row_record(row: &SweepRow, kmax: usize, checked: bool) -> Vec<String> {
    let ok = row.status == TrialStatus::Ok;
    let mut r = vec![
        float(row.alpha),
        float(row.p),
        row.trial.to_string(),
        row.seed.to_string(),
        row.status.as_str().to_string(),
        opt(row.dim),
    ];
    r.extend((0..3).map(|i| opt(row.f.map(|f| f[i]))));
    r.extend((0..=kmax).map(|k| opt(row.betti.get(k))));
    r.push(match (ok, checked) {
        (false, _) => String::new(),
        (true, false) => "unchecked".into(),
        (true, true) => flag(row.torsion),
    });
    r.push(flag(row.contains_k));
    r.push(flag(row.gamma_le_m));
    r.push(opt(row.ms.map(float)));
    r
}

fn to_csv(header: Vec<String>, records: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for r in records {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

/// Row table as CSV text.
pub fn rows_csv(output: &SweepOutput) -> String {
    let kmax = output.config.kmax;
    let checked = output.config.mode == crate::homology::HomologyMode::Exact;
    to_csv(
        row_header(kmax),
        output.rows.iter().map(|r| row_record(r, kmax, checked)),
    )
}

pub fn aggregate_header(kmax: usize) -> Vec<String> {
    let mut h: Vec<String> = ["alpha", "p", "trials", "skipped"].map(String::from).into();
    h.extend((0..=kmax).map(|k| format!("P_betti{k}_pos")));
    h.extend(["P_contains_K", "P_gamma_le_m", "mean_dim"].map(String::from));
    h
}

fn aggregate_record(a: &Aggregate) -> Vec<String> {
    let mut r = vec![
        float(a.alpha),
        float(a.p),
        a.trials.to_string(),
        a.skipped.to_string(),
    ];
    r.extend(a.p_betti_positive.iter().map(|&x| float(x)));
    r.push(opt(a.p_contains_k.map(float)));
    r.push(opt(a.p_gamma_le_m.map(float)));
    r.push(opt(a.mean_dim.map(float)));
    r
}

/// Aggregate table as CSV text.
pub fn aggregates_csv(output: &SweepOutput) -> String {
    to_csv(
        aggregate_header(output.config.kmax),
        output.aggregates.iter().map(aggregate_record),
    )
}

/// Path of the aggregate table written next to a row CSV.
pub fn aggregate_path(path: &Path) -> PathBuf {
    path.with_extension("agg.csv")
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Writes the sweep to `path`. CSV also writes [`aggregate_path`].
pub fn emit(output: &SweepOutput, format: Format, path: &Path) -> Result<()> {
    match format {
        Format::Csv => {
            write(path, &rows_csv(output))?;
            write(&aggregate_path(path), &aggregates_csv(output))
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(output).map_err(|e| Error::Serialize {
                path: path.to_path_buf(),
                message: e.to_string(),
            })?;
            write(path, &(text + "\n"))
        }
    }
}

fn cell<T: FromStr>(s: &str, column: &str) -> Result<Option<T>> {
    if s.is_empty() {
        return Ok(None);
    }
    s.parse()
        .map(Some)
        .map_err(|_| Error::MalformedInput(format!("bad {column} value {s:?}")))
}

fn required<T: FromStr>(s: &str, column: &str) -> Result<T> {
    cell(s, column)?.ok_or_else(|| Error::MalformedInput(format!("missing {column}")))
}

fn bool_cell(s: &str, column: &str) -> Result<Option<bool>> {
    match s {
        "" | "unchecked" => Ok(None),
        "0" => Ok(Some(false)),
        "1" => Ok(Some(true)),
        _ => Err(Error::MalformedInput(format!("bad {column} flag {s:?}"))),
    }
}

/// Parses a row CSV written by [`rows_csv`].
pub fn parse_rows_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::MalformedInput(e.to_string()))?
        .clone();
    let kmax = header
        .len()
        .checked_sub(14)
        .ok_or_else(|| Error::MalformedInput("row header too short".into()))?;
    if header
        .iter()
        .ne(row_header(kmax).iter().map(String::as_str))
    {
        return Err(Error::MalformedInput("unexpected row header".into()));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let rec = record.map_err(|e| Error::MalformedInput(e.to_string()))?;
        let c = |i: usize| rec.get(i).unwrap_or("");
        let status = match c(4) {
            "ok" => TrialStatus::Ok,
            "skipped" => TrialStatus::Skipped,
            s => return Err(Error::MalformedInput(format!("bad status {s:?}"))),
        };
        let f = match (cell(c(6), "f0")?, cell(c(7), "f1")?, cell(c(8), "f2")?) {
            (Some(a), Some(b), Some(d)) => Some([a, b, d]),
            _ => None,
        };
        let betti = (0..=kmax)
            .map(|k| cell::<usize>(c(9 + k), "betti"))
            .collect::<Result<Option<Vec<_>>>>()?
            .unwrap_or_default();
        let tail = 10 + kmax;
        rows.push(SweepRow {
            alpha: required(c(0), "alpha")?,
            p: required(c(1), "p")?,
            trial: required(c(2), "trial")?,
            seed: required(c(3), "seed")?,
            status,
            dim: cell(c(5), "dim")?,
            f,
            betti,
            torsion: bool_cell(c(tail), "torsion_flag")?,
            contains_k: bool_cell(c(tail + 1), "contains_K")?,
            gamma_le_m: bool_cell(c(tail + 2), "gamma_le_m")?,
            ms: cell(c(tail + 3), "ms")?,
        });
    }
    Ok(rows)
}
