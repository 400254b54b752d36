//! Point clouds as CSV: one `x,y,z` row per point, optional `x,y,z` header.
//!
//! Values are written in Rust's shortest round-trip float formatting, so a
//! write followed by a read reproduces the points bit for bit.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::Point3;

pub fn read_points<R: Read>(reader: R) -> Result<Vec<Point3>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);

    let mut points = Vec::new();
    let mut first = true;
    for record in rdr.records() {
        let record =
            record.map_err(|e| Error::Parse { line: e.position().map_or(0, |p| p.line()), message: e.to_string() })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        if first && is_header(&record) {
            first = false;
            continue;
        }
        first = false;
        if record.len() != 3 {
            return Err(Error::Parse { line, message: format!("expected 3 fields, found {}", record.len()) });
        }
        let mut xyz = [0.0; 3];
        for (slot, field) in xyz.iter_mut().zip(record.iter()) {
            *slot =
                field.parse::<f64>().map_err(|_| Error::Parse { line, message: format!("not a number: {field:?}") })?;
            if !slot.is_finite() {
                return Err(Error::Parse { line, message: format!("non-finite coordinate: {field:?}") });
            }
        }
        points.push(Point3::from(xyz));
    }
    Ok(points)
}

fn is_header(record: &csv::StringRecord) -> bool {
    let fields: Vec<_> = record.iter().map(str::to_ascii_lowercase).collect();
    fields == ["x", "y", "z"]
}

pub fn write_points<W: Write>(writer: W, points: &[Point3], header: bool) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
    let to_err = |e: csv::Error| Error::Io(e.to_string());
    if header {
        w.write_record(["x", "y", "z"]).map_err(to_err)?;
    }
    for p in points {
        w.write_record([p.x.to_string(), p.y.to_string(), p.z.to_string()]).map_err(to_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_points_file(path: impl AsRef<Path>) -> Result<Vec<Point3>> {
    read_points(BufReader::new(File::open(path)?))
}

pub fn write_points_file(path: impl AsRef<Path>, points: &[Point3], header: bool) -> Result<()> {
    write_points(BufWriter::new(File::create(path)?), points, header)
}
