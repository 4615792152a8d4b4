//! Serialisation of report lists: JSON with fixed 17-significant-digit floats,
//! and a flat CSV with one row per report.

use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::error::{Error, Result};
use crate::verify::VerificationReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: u32,
    /// Echo of whatever produced the reports (command, parameters, tolerances).
    pub config: serde_json::Value,
    pub reports: Vec<VerificationReport>,
}

impl ReportDocument {
    pub fn new(config: serde_json::Value, reports: Vec<VerificationReport>) -> Self {
        Self { version: SCHEMA_VERSION, config, reports }
    }
}

/// `v` with exactly 17 significant digits, e.g. `2.3270657789575591e1`.
///
/// Seventeen digits always identify an `f64` uniquely, so parsing the text
/// and formatting again reproduces it byte for byte.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Pretty-printed JSON whose floats all go through [`format_f64`].
#[derive(Default)]
struct FixedDigits {
    inner: serde_json::ser::PrettyFormatter<'static>,
}

impl Formatter for FixedDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object_value(w)
    }
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Parameter(format!("serialisation failed: {e}"))
}

/// Any serialisable value as JSON in the report float format.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedDigits::default());
    value.serialize(&mut ser).map_err(io_error)?;
    out.push(b'\n');
    String::from_utf8(out).map_err(io_error)
}

pub fn from_json(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(io_error)
}

const CSV_HEADER: [&str; 10] = [
    "id",
    "predicted_re",
    "predicted_im",
    "estimated_re",
    "estimated_im",
    "abs_error",
    "rel_error",
    "tolerance",
    "status",
    "detail",
];

fn csv_float(v: f64) -> String {
    if v.is_finite() {
        format_f64(v)
    } else {
        String::new()
    }
}

/// One row per report; the fields of the JSON report, flattened.
pub fn to_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(io_error)?;
    for r in reports {
        let status = serde_json::to_value(r.status).map_err(io_error)?;
        w.write_record([
            r.id.clone(),
            csv_float(r.predicted.re),
            csv_float(r.predicted.im),
            csv_float(r.estimated.re),
            csv_float(r.estimated.im),
            csv_float(r.abs_error),
            csv_float(r.rel_error),
            csv_float(r.tolerance),
            status.as_str().unwrap_or_default().to_string(),
            r.detail.clone(),
        ])
        .map_err(io_error)?;
    }
    String::from_utf8(w.into_inner().map_err(io_error)?).map_err(io_error)
}
