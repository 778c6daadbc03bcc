//! JSON, CSV and plain-table renderings of spectra.
//!
//! JSON and CSV carry 12 significant digits; the table rounds to 2 decimals.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use signed_spectra::{SignedBipartiteGraph, Spectrum};

use crate::error::CliResult;
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// `x` rounded to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[derive(Debug, Serialize)]
struct Entry {
    value: f64,
    multiplicity: usize,
}

fn entries(s: &Spectrum) -> Vec<Entry> {
    s.pairs()
        .iter()
        .map(|&(value, multiplicity)| Entry {
            value: sig12(value),
            multiplicity,
        })
        .collect()
}

#[derive(Debug, Serialize)]
struct InstanceOut<'a> {
    pattern: &'a str,
    graph: &'a SignedBipartiteGraph,
}

#[derive(Debug, Serialize)]
struct SpectrumOut<'a> {
    instance: InstanceOut<'a>,
    methods: BTreeMap<&'a str, Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<&'a BTreeMap<String, bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pass: Option<bool>,
}

/// What `spectrum` prints: one spectrum per method and, when several
/// methods ran, the cross-check results.
#[derive(Debug)]
pub struct SpectrumReport<'a> {
    pub instance: &'a Instance,
    pub spectra: Vec<(&'a str, &'a Spectrum)>,
    pub max_deviation: Option<f64>,
    pub checks: Option<&'a BTreeMap<String, bool>>,
    pub pass: Option<bool>,
}

impl SpectrumReport<'_> {
    pub fn write<W: Write>(&self, format: Format, out: &mut W) -> CliResult<()> {
        match format {
            Format::Json => self.write_json(out),
            Format::Csv => self.write_csv(out),
            Format::Pretty => self.write_pretty(out),
        }
    }

    fn write_json<W: Write>(&self, out: &mut W) -> CliResult<()> {
        let doc = SpectrumOut {
            instance: InstanceOut {
                pattern: &self.instance.label,
                graph: &self.instance.graph,
            },
            methods: self.spectra.iter().map(|&(name, s)| (name, entries(s))).collect(),
            max_deviation: self.max_deviation.map(sig12),
            checks: self.checks,
            pass: self.pass,
        };
        serde_json::to_writer(&mut *out, &doc)?;
        writeln!(out).map_err(write_err)?;
        Ok(())
    }

    fn write_csv<W: Write>(&self, out: &mut W) -> CliResult<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["method", "value", "multiplicity"])?;
        for &(name, s) in &self.spectra {
            for &(value, mult) in s.pairs() {
                w.write_record([name, &sig12(value).to_string(), &mult.to_string()])?;
            }
        }
        w.flush().map_err(write_err)?;
        Ok(())
    }

    fn write_pretty<W: Write>(&self, out: &mut W) -> CliResult<()> {
        let g = &self.instance.graph;
        let mut text = format!("K_{{{},{}}}  {}\n", g.p(), g.q(), self.instance.label);
        for &(name, s) in &self.spectra {
            text.push_str(&format!("\n{name}\n{:>12}  {:>12}\n", "eigenvalue", "multiplicity"));
            for &(value, mult) in s.pairs() {
                text.push_str(&format!("{value:>12.2}  {mult:>12}\n"));
            }
        }
        if let Some(d) = self.max_deviation {
            text.push_str(&format!("\nmax deviation: {d:.3e}\n"));
        }
        if let Some(checks) = self.checks {
            for (name, ok) in checks {
                text.push_str(&format!("{name}: {}\n", if *ok { "ok" } else { "FAILED" }));
            }
        }
        out.write_all(text.as_bytes()).map_err(write_err)?;
        Ok(())
    }
}

fn write_err(source: std::io::Error) -> crate::error::CliError {
    crate::error::CliError::Io {
        path: "<output>".into(),
        source,
    }
}
