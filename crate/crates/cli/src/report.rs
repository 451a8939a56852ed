//! JSON and CSV reports.

use std::io::Write;

use serde::Serialize;

use digraph_spectra::eigen::Spectrum;
use digraph_spectra::matrix::MatrixKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ClosedForm,
    Eigensolver,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub re: f64,
    pub im: f64,
    pub mult: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub matrix: String,
    pub spectrum: Vec<Entry>,
    pub tolerance: f64,
    pub source: Source,
}

impl SpectrumReport {
    pub fn new(kind: MatrixKind, spectrum: &Spectrum, tolerance: f64, source: Source) -> Self {
        SpectrumReport {
            matrix: kind.name().to_string(),
            spectrum: entries(spectrum),
            tolerance,
            source,
        }
    }
}

/// Already sorted by real part descending, then imaginary part ascending.
pub fn entries(s: &Spectrum) -> Vec<Entry> {
    s.items()
        .iter()
        .map(|it| Entry {
            re: it.value.re,
            im: it.value.im,
            mult: it.mult,
        })
        .collect()
}

#[derive(Serialize)]
struct CsvRow<'a> {
    matrix: &'a str,
    re: f64,
    im: f64,
    mult: usize,
}

/// One `matrix,re,im,mult` row per distinct value.
pub fn write_csv<W: Write>(out: W, reports: &[&SpectrumReport]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        for e in &r.spectrum {
            w.serialize(CsvRow {
                matrix: &r.matrix,
                re: e.re,
                im: e.im,
                mult: e.mult,
            })?;
        }
    }
    w.flush()?;
    Ok(())
}
