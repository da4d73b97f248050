//! Report emission as JSON, CSV, or an aligned text table.

use std::collections::BTreeMap;

use clap::ValueEnum;
use matchex::theorems::ConnectivityBound;
use matchex::{ComplexStats, HomologyProfile, MorseSummary, VerificationReport};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Anything a command prints: a JSON document plus a flat table view.
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn reports(reports: &[VerificationReport]) -> Self {
        Output {
            json: serde_json::to_value(reports).expect("reports serialize"),
            header: vec!["theorem", "params", "pass", "millis"],
            rows: reports
                .iter()
                .map(|r| {
                    vec![
                        r.theorem.clone(),
                        r.params.to_string(),
                        r.pass.to_string(),
                        r.millis.to_string(),
                    ]
                })
                .collect(),
        }
    }

    /// One row per nonzero dimension.
    pub fn homology(profile: &HomologyProfile) -> Self {
        Output {
            json: serde_json::to_value(profile).expect("profile serializes"),
            header: vec!["dim", "betti", "torsion"],
            rows: profile
                .nonzero()
                .map(|g| {
                    let torsion: Vec<String> = g.torsion.iter().map(|t| t.to_string()).collect();
                    vec![g.dim.to_string(), g.betti.to_string(), torsion.join(" ")]
                })
                .collect(),
        }
    }

    pub fn stats(stats: &ComplexStats) -> Self {
        let rows = stats
            .f_vector
            .iter()
            .enumerate()
            .map(|(d, f)| vec![d.to_string(), f.to_string()])
            .collect();
        Output {
            json: serde_json::to_value(stats).expect("stats serialize"),
            header: vec!["dim", "faces"],
            rows,
        }
    }

    pub fn stats_and_homology(stats: &ComplexStats, profile: &HomologyProfile) -> Self {
        let h = Output::homology(profile);
        Output {
            json: json!({ "stats": stats, "homology": profile }),
            ..h
        }
    }

    pub fn morse(summary: &MorseSummary, acyclic: bool, critical: Vec<String>) -> Self {
        let dims: BTreeMap<isize, (usize, usize)> = summary
            .critical_by_dim
            .iter()
            .map(|(&d, &c)| (d, (c, 0)))
            .chain(summary.cw_cells.iter().map(|(&d, &c)| (d as isize, (0, c))))
            .fold(BTreeMap::new(), |mut acc, (d, (c, w))| {
                let e: &mut (usize, usize) = acc.entry(d).or_default();
                e.0 += c;
                e.1 += w;
                acc
            });
        Output {
            json: json!({ "summary": summary, "acyclic": acyclic, "critical": critical }),
            header: vec!["dim", "critical", "cw_cells"],
            rows: dims
                .into_iter()
                .map(|(d, (c, w))| vec![d.to_string(), c.to_string(), w.to_string()])
                .collect(),
        }
    }

    pub fn bound(b: &ConnectivityBound) -> Self {
        let json = b.to_json();
        let keys = ["n", "d", "k", "r", "epsilon", "nu", "shifted_conn_bound"];
        let row = keys
            .iter()
            .map(|k| match &json[k] {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            })
            .collect();
        Output {
            json,
            header: keys.to_vec(),
            rows: vec![row],
        }
    }
}

pub fn emit(out: &Output, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.header).expect("in-memory write");
            for row in &out.rows {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV from UTF-8 fields")
        }
        Format::Text => table(&out.header, &out.rows),
    }
}

pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for row in rows {
        s += &line(row.iter().map(String::as_str).collect());
    }
    s
}
