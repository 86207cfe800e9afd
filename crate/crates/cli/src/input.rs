//! Matrix and vector files.
//!
//! Two matrix layouts are accepted. Plain text starts with the dimension
//! `n` followed by `n·n` reals in row-major order, separated by any
//! whitespace. CSV has one row per line with comma-separated cells. A
//! file containing a comma is read as CSV. `#` starts a comment in both.

use std::path::Path;

use mattol_core::Matrix;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InputError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("matrix is not square: {rows} rows but row {row} has {cols} entries")]
    NonSquare { rows: usize, row: usize, cols: usize },

    #[error("line {line}, column {col}: entry is not finite")]
    NonFinite { line: usize, col: usize },

    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

impl Token<'_> {
    fn end_col(&self) -> usize {
        self.col + self.text.chars().count()
    }

    fn real(&self) -> Result<f64, InputError> {
        let x: f64 = self.text.parse().map_err(|_| InputError::Parse {
            line: self.line,
            col: self.col,
            msg: format!("invalid number '{}'", self.text),
        })?;
        if x.is_finite() {
            Ok(x)
        } else {
            Err(InputError::NonFinite {
                line: self.line,
                col: self.col,
            })
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Whitespace-separated tokens of one line; columns count characters from 1.
fn line_tokens(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let line = strip_comment(line);
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    line: line_no,
                    col: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    out
}

fn tokens(src: &str) -> Vec<Token<'_>> {
    src.lines()
        .enumerate()
        .flat_map(|(i, l)| line_tokens(i + 1, l))
        .collect()
}

fn empty() -> InputError {
    InputError::Parse {
        line: 1,
        col: 1,
        msg: "no data".into(),
    }
}

fn parse_text(src: &str) -> Result<Matrix, InputError> {
    let toks = tokens(src);
    let first = toks.first().ok_or_else(empty)?;
    let n: usize = first
        .text
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| InputError::Parse {
            line: first.line,
            col: first.col,
            msg: format!("expected a positive dimension, found '{}'", first.text),
        })?;
    let entries = &toks[1..];
    let want = n * n;
    if entries.len() != want {
        let (line, col) = match entries.get(want) {
            Some(extra) => (extra.line, extra.col),
            None => {
                let last = toks.last().expect("nonempty");
                (last.line, last.end_col())
            }
        };
        return Err(InputError::Parse {
            line,
            col,
            msg: format!("expected {want} entries for n = {n}, found {}", entries.len()),
        });
    }
    let data = entries.iter().map(Token::real).collect::<Result<Vec<_>, _>>()?;
    Matrix::from_row_major(n, &data).map_err(|e| InputError::Parse {
        line: first.line,
        col: first.col,
        msg: e.to_string(),
    })
}

fn parse_csv(src: &str) -> Result<Matrix, InputError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 1;
        for cell in line.split(',') {
            let lead = cell.len() - cell.trim_start().len();
            let tok = Token {
                text: cell.trim(),
                line: i + 1,
                col: col + cell[..lead].chars().count(),
            };
            if tok.text.is_empty() {
                return Err(InputError::Parse {
                    line: tok.line,
                    col: tok.col,
                    msg: "empty cell".into(),
                });
            }
            row.push(tok.real()?);
            col += cell.chars().count() + 1;
        }
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(empty());
    }
    if let Some((r, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(InputError::NonSquare {
            rows: n,
            row: r + 1,
            cols: row.len(),
        });
    }
    Matrix::from_rows(&rows).map_err(|e| InputError::Parse {
        line: 1,
        col: 1,
        msg: e.to_string(),
    })
}

/// Parses a matrix, choosing the layout by the presence of a comma.
pub fn parse_matrix_str(src: &str) -> Result<Matrix, InputError> {
    if strip_comments(src).contains(',') {
        parse_csv(src)
    } else {
        parse_text(src)
    }
}

fn strip_comments(src: &str) -> String {
    src.lines().map(strip_comment).collect::<Vec<_>>().join("\n")
}

/// Parses a vector of reals separated by whitespace or commas.
pub fn parse_vector_str(src: &str) -> Result<Vec<f64>, InputError> {
    let spaced = src.replace(',', " ");
    let v = tokens(&spaced).iter().map(Token::real).collect::<Result<Vec<_>, _>>()?;
    if v.is_empty() {
        return Err(empty());
    }
    Ok(v)
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

pub fn parse_matrix_file(path: impl AsRef<Path>) -> Result<Matrix, InputError> {
    parse_matrix_str(&read(path.as_ref())?)
}

pub fn parse_vector_file(path: impl AsRef<Path>) -> Result<Vec<f64>, InputError> {
    parse_vector_str(&read(path.as_ref())?)
}
