//! Fixed-schema CSV for sweep results.
//!
//! Header `phi,d1_postselected,d1_total,d2_total`, plus `,quantum_d1` when
//! the quantum model ran. Values carry 17 significant digits so every
//! double survives a write/read round trip; lines end in `\n` with no
//! trailing separators. The writer is deterministic: one scenario, one
//! byte stream.

use std::io::{self, BufRead, Write};

use crate::sweep::{SweepResult, SweepRow};

pub const HEADER_CLASSICAL: &str = "phi,d1_postselected,d1_total,d2_total";
pub const HEADER_WITH_QUANTUM: &str = "phi,d1_postselected,d1_total,d2_total,quantum_d1";

#[derive(Debug, thiserror::Error)]
pub enum CsvError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// 17 significant digits: enough to reproduce any f64 bit for bit.
fn format_value(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn write_csv(result: &SweepResult, sink: &mut dyn Write) -> io::Result<()> {
    let quantum = result.rows.first().is_some_and(|r| r.quantum_d1.is_some());
    let header = if quantum {
        HEADER_WITH_QUANTUM
    } else {
        HEADER_CLASSICAL
    };
    writeln!(sink, "{header}")?;
    for row in &result.rows {
        write!(
            sink,
            "{},{},{},{}",
            format_value(row.phi),
            format_value(row.d1_postselected),
            format_value(row.d1_total),
            format_value(row.d2_total),
        )?;
        if let Some(q) = row.quantum_d1 {
            write!(sink, ",{}", format_value(q))?;
        }
        writeln!(sink)?;
    }
    Ok(())
}

pub fn read_csv(source: impl BufRead) -> Result<SweepResult, CsvError> {
    let mut lines = source.lines().enumerate();
    let (_, header) = lines.next().ok_or(CsvError::Malformed {
        line: 1,
        message: "missing header".into(),
    })?;
    let header = header?;
    let quantum = match header.as_str() {
        HEADER_CLASSICAL => false,
        HEADER_WITH_QUANTUM => true,
        other => {
            return Err(CsvError::Malformed {
                line: 1,
                message: format!("unexpected header `{other}`"),
            })
        }
    };
    let columns = if quantum { 5 } else { 4 };

    let mut rows = Vec::new();
    for (index, line) in lines {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != columns {
            return Err(CsvError::Malformed {
                line: index + 1,
                message: format!("expected {columns} fields, got {}", fields.len()),
            });
        }
        let mut values = [0.0f64; 5];
        for (slot, field) in values.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| CsvError::Malformed {
                line: index + 1,
                message: format!("`{field}` is not a number"),
            })?;
        }
        rows.push(SweepRow {
            phi: values[0],
            d1_postselected: values[1],
            d1_total: values[2],
            d2_total: values[3],
            quantum_d1: quantum.then_some(values[4]),
        });
    }
    Ok(SweepResult { rows })
}
