use std::io::Write;

use serde::Serialize;

use crate::args::Format;

pub const DECIMALS: usize = 10;

pub fn fixed(x: f64) -> String {
    format!("{x:.DECIMALS$}")
}

#[derive(Debug, Clone, Serialize)]
pub struct Params {
    pub a: f64,
    pub b: f64,
    pub lambda: Option<f64>,
    pub n: u32,
    pub l: u32,
    pub m: f64,
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Stabilized {
    pub value: f64,
    pub index: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct NumerovSummary {
    pub energy: f64,
    pub nodes: u32,
    pub mismatch: f64,
    pub match_radius: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactSummary {
    pub energy: f64,
    pub kappa: f64,
    pub cap_n_tilde: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriticalSummary {
    pub critical_lambda: f64,
    pub binding_threshold: f64,
}

/// One run. The first five keys are always present.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub params: Params,
    pub corrections: Vec<f64>,
    pub partial_sums: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized: Option<Stabilized>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_pct: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerov: Option<NumerovSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical: Option<CriticalSummary>,
}

impl Report {
    pub fn new(command: &'static str, params: Params) -> Self {
        Self {
            command,
            params,
            corrections: Vec::new(),
            partial_sums: Vec::new(),
            stabilized: None,
            reference: None,
            error_pct: None,
            numerov: None,
            exact: None,
            critical: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Deviation {
    pub column: String,
    pub max_abs: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub command: &'static str,
    pub runs: Vec<Report>,
    pub deviation: Vec<Deviation>,
}

#[derive(Debug, Clone, Default)]
pub struct Grid {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Grid {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }

    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let cols = self.header.len();
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, cell) in cells.iter().enumerate().take(cols) {
                if i > 0 {
                    s.push_str("  ");
                }
                let pad = widths[i] - cell.chars().count();
                if i == 0 {
                    s.push_str(cell);
                    s.extend(std::iter::repeat_n(' ', pad));
                } else {
                    s.extend(std::iter::repeat_n(' ', pad));
                    s.push_str(cell);
                }
            }
            s.trim_end().to_string()
        };
        writeln!(out, "{}", line(&self.header))?;
        for row in &self.rows {
            writeln!(out, "{}", line(row))?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()
    }
}

/// A finished command: structured data for JSON, a grid for text and CSV,
/// and free-form notes appended to the text form.
pub struct Rendered<T: Serialize> {
    pub data: T,
    pub grid: Grid,
    pub notes: Vec<String>,
}

impl<T: Serialize> Rendered<T> {
    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Text => {
                self.grid.write_text(out)?;
                if !self.notes.is_empty() {
                    writeln!(out)?;
                    for note in &self.notes {
                        writeln!(out, "{note}")?;
                    }
                }
                Ok(())
            }
            Format::Csv => self.grid.write_csv(out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.data)?;
                writeln!(out)
            }
        }
    }
}
