//! CSV form of error tables.
//!
//! Columns are `t,x,approx,exact,err_iter1,...,err_iterN`, where
//! `err_iterK` is `|S_K - exact|`. Numbers use 12 significant digits in
//! scientific notation so the 1e-18-scale entries keep their digits.

use std::io::{Read, Write};

use crate::{ErrorTableRow, HarnessError};

fn num(v: f64) -> String {
    format!("{v:.11e}")
}

/// Writes `rows` in order. An empty slice writes the bare
/// `t,x,approx,exact` header.
pub fn emit_csv<W: Write>(rows: &[ErrorTableRow], dest: W) -> Result<(), HarnessError> {
    let n = rows
        .iter()
        .map(|r| r.abs_error_per_iteration.len())
        .max()
        .unwrap_or(0);
    let mut w = ::csv::Writer::from_writer(dest);
    let mut header: Vec<String> = ["t", "x", "approx", "exact"].map(String::from).to_vec();
    header.extend((1..n).map(|k| format!("err_iter{k}")));
    w.write_record(&header)?;
    for r in rows {
        let mut record: Vec<String> = [r.t, r.x, r.approximate, r.exact].map(num).to_vec();
        record.extend(r.abs_error_per_iteration.iter().skip(1).map(|e| num(*e)));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads back what [`emit_csv`] wrote. The `S_0` error is not stored, so
/// it comes back as NaN.
pub fn read_csv<R: Read>(src: R) -> Result<Vec<ErrorTableRow>, HarnessError> {
    let mut r = ::csv::Reader::from_reader(src);
    let header = r.headers()?.clone();
    if header.len() < 4 || &header[0] != "t" || &header[3] != "exact" {
        return Err(HarnessError::Csv(::csv::Error::from(std::io::Error::new(
            std::io::ErrorKind::InvalidData,
            "unexpected header",
        ))));
    }
    let mut rows = Vec::new();
    for record in r.deserialize::<Vec<f64>>() {
        let values = record?;
        let mut errors = vec![f64::NAN];
        errors.extend_from_slice(&values[4..]);
        rows.push(ErrorTableRow {
            t: values[0],
            x: values[1],
            approximate: values[2],
            exact: values[3],
            abs_error_per_iteration: errors,
        });
    }
    Ok(rows)
}
