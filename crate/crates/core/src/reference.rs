//! Reference energy tables (CSV, first column `n`, levels numbered from 0).

use crate::error::ReferenceError;
use crate::scalar::{parse_rational, Rational};

/// ⁷Li₂ Morse energies in units of ħω₀ for `n = 0..=24`, columns `morse`, `ley_koo`, `aim`.
pub const TABLE1_CSV: &str = include_str!("../data/table1.csv");

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceTable {
    columns: Vec<String>,
    /// `cells[n][j]`: exact decimal value and its original text.
    cells: Vec<Vec<(Rational, String)>>,
}

impl ReferenceTable {
    pub fn parse(text: &str) -> Result<Self, ReferenceError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_line, header) =
            lines.next().ok_or(ReferenceError::Parse { line: 1, message: "empty reference table".into() })?;
        let mut names = header.split(',').map(str::trim);
        if names.next() != Some("n") {
            return Err(ReferenceError::Parse { line: header_line, message: "first column must be `n`".into() });
        }
        let columns: Vec<String> = names.map(String::from).collect();
        if columns.is_empty() {
            return Err(ReferenceError::Parse { line: header_line, message: "no value columns".into() });
        }
        let mut cells = Vec::new();
        for (line, row) in lines {
            let fields: Vec<&str> = row.split(',').map(str::trim).collect();
            if fields.len() != columns.len() + 1 {
                return Err(ReferenceError::Parse {
                    line,
                    message: format!("expected {} fields, found {}", columns.len() + 1, fields.len()),
                });
            }
            let n: usize = fields[0]
                .parse()
                .map_err(|_| ReferenceError::Parse { line, message: format!("bad level index `{}`", fields[0]) })?;
            if n != cells.len() {
                return Err(ReferenceError::MissingRow { n: cells.len(), line });
            }
            let values = fields[1..]
                .iter()
                .map(|f| {
                    parse_rational(f)
                        .map(|v| (v, f.to_string()))
                        .map_err(|e| ReferenceError::Parse { line, message: e.to_string() })
                })
                .collect::<Result<Vec<_>, _>>()?;
            cells.push(values);
        }
        Ok(ReferenceTable { columns, cells })
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    /// Number of levels.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn index(&self, column: &str) -> Result<usize, ReferenceError> {
        self.columns.iter().position(|c| c == column).ok_or_else(|| ReferenceError::MissingColumn(column.into()))
    }

    /// Exact values of one column, indexed by `n`.
    pub fn column(&self, column: &str) -> Result<Vec<Rational>, ReferenceError> {
        let j = self.index(column)?;
        Ok(self.cells.iter().map(|row| row[j].0.clone()).collect())
    }

    /// The column as printed.
    pub fn column_text(&self, column: &str) -> Result<Vec<&str>, ReferenceError> {
        let j = self.index(column)?;
        Ok(self.cells.iter().map(|row| row[j].1.as_str()).collect())
    }
}

/// The bundled ⁷Li₂ table.
pub fn table1() -> ReferenceTable {
    ReferenceTable::parse(TABLE1_CSV).expect("bundled table is well formed")
}
