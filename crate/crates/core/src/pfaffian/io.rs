//! Line-oriented matrix files.
//!
//! A colored anti-alternating matrix starts with the header `n p q`
//! (`p + q = 2n`), followed by the blocks `a` (p rows of q entries), `b` and
//! `c`, the latter two as strict upper triangles:
//!
//! ```text
//! # the n = 2 example
//! 2 2 2
//! a
//! a[1,1] a[1,2]
//! a[2,1] a[2,2]
//! b
//! b[1,2]
//! c
//! c[1,2]
//! ```
//!
//! A plain alternating matrix starts with `full 2m` and lists all `2m` rows.
//! Entries are separated by whitespace, so each entry must be written
//! without spaces. `#` starts a comment.

use super::alternating::{AlternatingMatrix, AntiAlternatingMatrix};
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::foundations::Ring;

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixFile<R> {
    Colored(AntiAlternatingMatrix<R>),
    Full(AlternatingMatrix<R>),
}

impl<R: Ring> MatrixFile<R> {
    /// The alternating matrix whose Pfaffian is meant: `X J` or the matrix
    /// itself.
    pub fn alternating(&self) -> AlternatingMatrix<R> {
        match self {
            MatrixFile::Colored(x) => x.times_j(),
            MatrixFile::Full(a) => a.clone(),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..pos],
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: idx + 1,
                tokens,
            });
        }
    }
    out
}

fn located(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Located {
        line,
        column,
        message: message.into(),
    }
}

struct Cursor<'a, 'b, R> {
    lines: &'b [Line<'a>],
    pos: usize,
    entry: &'b dyn Fn(&str) -> Result<R>,
}

impl<R> Cursor<'_, '_, R> {
    fn end_line(&self) -> usize {
        self.lines.last().map_or(1, |l| l.number + 1)
    }

    fn next_line(&mut self, what: &str) -> Result<&Line<'_>> {
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| located(self.end_line(), 1, format!("unexpected end of file, expected {what}")))?;
        self.pos += 1;
        Ok(line)
    }

    fn row(&mut self, len: usize, what: &str) -> Result<Vec<R>> {
        let entry = self.entry;
        let line = self.next_line(what)?;
        if line.tokens.len() != len {
            let col = line.tokens.get(len).map_or(1, |t| t.column);
            return Err(located(
                line.number,
                col,
                format!("{what} needs {len} entries, found {}", line.tokens.len()),
            ));
        }
        line.tokens
            .iter()
            .map(|t| {
                entry(t.text).map_err(|e| match e {
                    Error::Parse { column, message } => located(line.number, t.column + column - 1, message),
                    other => located(line.number, t.column, other.to_string()),
                })
            })
            .collect()
    }

    fn label(&mut self, name: &str) -> Result<()> {
        let line = self.next_line(&format!("block label {name:?}"))?;
        if line.tokens.len() != 1 || line.tokens[0].text != name {
            return Err(located(line.number, line.tokens[0].column, format!("expected block label {name:?}")));
        }
        Ok(())
    }
}

fn parse_usize(tok: &Token<'_>, line: usize) -> Result<usize> {
    tok.text
        .parse()
        .map_err(|_| located(line, tok.column, format!("expected a nonnegative integer, found {:?}", tok.text)))
}

/// Parses a matrix file, reading each entry with `entry`.
///
/// Syntax problems give [`Error::Located`]; well-formed files whose matrix
/// has the wrong shape give [`Error::OddSize`], [`Error::NotAlternating`]
/// or [`Error::InvalidColoring`].
pub fn parse_matrix_file<R: Ring>(text: &str, entry: &dyn Fn(&str) -> Result<R>) -> Result<MatrixFile<R>> {
    let lines = tokenize(text);
    let mut cur = Cursor {
        lines: &lines,
        pos: 0,
        entry,
    };
    let header = cur.next_line("a header")?;
    let hl = header.number;
    let toks = &header.tokens;
    if toks[0].text == "full" {
        if toks.len() != 2 {
            return Err(located(hl, toks[0].column, "header \"full\" takes one size"));
        }
        let size = parse_usize(&toks[1], hl)?;
        let mut rows = Vec::with_capacity(size);
        for r in 0..size {
            rows.push(cur.row(size, &format!("row {}", r + 1))?);
        }
        cur.finish()?;
        if size % 2 != 0 {
            return Err(Error::OddSize(size));
        }
        let m = if size == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows)? };
        return Ok(MatrixFile::Full(AlternatingMatrix::try_new(m)?));
    }
    if toks.len() != 3 {
        return Err(located(hl, toks[0].column, "header must be \"n p q\" or \"full 2m\""));
    }
    let n = parse_usize(&toks[0], hl)?;
    let p = parse_usize(&toks[1], hl)?;
    let q = parse_usize(&toks[2], hl)?;
    if p + q != 2 * n || n == 0 {
        return Err(Error::InvalidColoring(format!("header {n} {p} {q} needs p + q = 2n > 0")));
    }
    cur.label("a")?;
    let mut a = Vec::with_capacity(p);
    for r in 0..p {
        a.push(cur.row(q, &format!("row {} of a", r + 1))?);
    }
    let mut triangle = |name: &str, size: usize| -> Result<Vec<Vec<R>>> {
        cur.label(name)?;
        (0..size.saturating_sub(1))
            .map(|r| cur.row(size - 1 - r, &format!("row {} of {name}", r + 1)))
            .collect()
    };
    let b = triangle("b", p)?;
    let c = triangle("c", q)?;
    cur.finish()?;
    let a = if p == 0 { Matrix::from_fn(0, q, |_, _| unreachable!()) } else { Matrix::from_rows(a)? };
    Ok(MatrixFile::Colored(AntiAlternatingMatrix::from_blocks(a, b, c)?))
}

impl<R> Cursor<'_, '_, R> {
    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            Some(extra) => Err(located(extra.number, extra.tokens[0].column, "unexpected trailing content")),
            None => Ok(()),
        }
    }
}
