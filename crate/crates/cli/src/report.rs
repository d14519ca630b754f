use std::collections::BTreeMap;
use std::io::{self, Write};

use serde_json::{json, Value};

use scrolldiv::ScrollData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// What a command produces: structured data for JSON, one table for CSV and
/// the human view, a few free-form summary lines, and named cross-checks.
#[derive(Debug, Default)]
pub struct Report {
    pub result: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    pub checks: BTreeMap<String, bool>,
    /// The Betti oracle could not certify its table.
    pub incomplete: bool,
}

impl Report {
    pub fn check(&mut self, name: &str, ok: bool) {
        self.checks.insert(name.to_string(), ok);
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn render(&self, data: &ScrollData, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                let doc = json!({
                    "sigma": data.sigma(),
                    "n": data.n(),
                    "prime": data.prime(),
                    "result": self.result,
                    "checks": self.checks,
                });
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()
            }
            Format::Table => {
                writeln!(out, "sigma = {:?}, n = {}, p = {}", data.sigma(), data.n(), data.prime())?;
                for line in &self.notes {
                    writeln!(out, "{line}")?;
                }
                if !self.rows.is_empty() {
                    writeln!(out)?;
                    write_aligned(out, &self.header, &self.rows)?;
                }
                if !self.checks.is_empty() {
                    writeln!(out)?;
                    for (name, ok) in &self.checks {
                        writeln!(out, "check {name}: {}", if *ok { "ok" } else { "FAILED" })?;
                    }
                }
                Ok(())
            }
        }
    }
}

fn write_aligned(out: &mut impl Write, header: &[String], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header))?;
    writeln!(out, "{}", widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  "))?;
    for r in rows {
        writeln!(out, "{}", line(r))?;
    }
    Ok(())
}

pub fn strings<I, T>(items: I) -> Vec<String>
where
    I: IntoIterator<Item = T>,
    T: ToString,
{
    items.into_iter().map(|x| x.to_string()).collect()
}
