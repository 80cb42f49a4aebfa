//! Rendering reports as JSON, CSV or plain text.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn open(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Top-level keys of the first row fix the column order; nested values are
/// written as JSON.
pub fn write_csv(w: &mut dyn Write, rows: &[Value]) -> io::Result<()> {
    let Some(first) = rows.first().and_then(Value::as_object) else {
        return Ok(());
    };
    let columns: Vec<&String> = first.keys().collect();
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(columns.iter().map(|c| c.as_str()))?;
    for row in rows {
        let obj = row.as_object().cloned().unwrap_or_default();
        csv.write_record(columns.iter().map(|c| obj.get(*c).map(cell).unwrap_or_default()))?;
    }
    csv.flush()
}

/// `key: value` lines, one level of nesting indented.
pub fn write_text(w: &mut dyn Write, doc: &Value) -> io::Result<()> {
    fn go(w: &mut dyn Write, obj: &Map<String, Value>, indent: usize) -> io::Result<()> {
        for (k, v) in obj {
            match v {
                Value::Object(inner) if indent == 0 => {
                    writeln!(w, "{k}:")?;
                    go(w, inner, indent + 2)?;
                }
                _ => writeln!(w, "{:indent$}{k}: {}", "", cell(v))?,
            }
        }
        Ok(())
    }
    match doc {
        Value::Object(obj) => go(w, obj, 0),
        other => writeln!(w, "{}", cell(other)),
    }
}

pub fn write_document(w: &mut dyn Write, format: Format, doc: &Value) -> io::Result<()> {
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(doc).expect("values serialize")),
        Format::Csv => write_csv(w, std::slice::from_ref(doc)),
        Format::Text => write_text(w, doc),
    }
}
