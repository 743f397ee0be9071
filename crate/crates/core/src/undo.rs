//! Character edits over a row/column text buffer with a bounded LIFO undo
//! history.

use std::fmt;

use thiserror::Error;

use crate::containers::BoundedStack;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UndoError {
    #[error("position ({row},{column}) with selection {selection} is outside the text")]
    Bounds { row: usize, column: usize, selection: usize },
    #[error("nothing to undo")]
    HistoryEmpty,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TextBuffer {
    rows: Vec<Vec<char>>,
}

impl TextBuffer {
    pub fn new() -> Self {
        Self { rows: vec![Vec::new()] }
    }

    pub fn from_lines<S: AsRef<str>>(lines: &[S]) -> Self {
        let mut rows: Vec<Vec<char>> = lines.iter().map(|l| l.as_ref().chars().collect()).collect();
        if rows.is_empty() {
            rows.push(Vec::new());
        }
        Self { rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn line(&self, row: usize) -> Option<String> {
        self.rows.get(row).map(|r| r.iter().collect())
    }

    pub fn lines(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.iter().collect()).collect()
    }

    fn check(&self, row: usize, column: usize, selection: usize) -> Result<(), UndoError> {
        let fits = self.rows.get(row).is_some_and(|r| column.checked_add(selection).is_some_and(|end| end <= r.len()));
        if fits {
            Ok(())
        } else {
            Err(UndoError::Bounds { row, column, selection })
        }
    }
}

impl fmt::Display for TextBuffer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.iter().collect::<String>())?;
        }
        Ok(())
    }
}

/// What one edit did: the character typed, where, and what it overwrote.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndoElement {
    pub ch: char,
    pub row: usize,
    pub column: usize,
    pub replaced: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndoStack {
    entries: BoundedStack<UndoElement>,
}

impl UndoStack {
    pub fn new(capacity: usize) -> Self {
        Self {
            entries: BoundedStack::new(capacity),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.entries.max()
    }

    pub fn peek(&self) -> Option<&UndoElement> {
        self.entries.peek().ok()
    }
}

/// Replaces `selection` characters at `(row, column)` with `ch` and records
/// the edit. A full history forgets its oldest entry.
pub fn apply_edit(
    buf: &mut TextBuffer,
    history: &mut UndoStack,
    row: usize,
    column: usize,
    ch: char,
    selection: usize,
) -> Result<(), UndoError> {
    buf.check(row, column, selection)?;
    let line = &mut buf.rows[row];
    let replaced: String = line.splice(column..column + selection, [ch]).collect();
    history.entries.push_evicting(UndoElement {
        ch,
        row,
        column,
        replaced,
    });
    Ok(())
}

/// Reverses the newest edit. Undo itself is not recorded.
pub fn undo_last(buf: &mut TextBuffer, history: &mut UndoStack) -> Result<UndoElement, UndoError> {
    let top = history.entries.peek().map_err(|_| UndoError::HistoryEmpty)?;
    let line = buf
        .rows
        .get_mut(top.row)
        .filter(|l| l.get(top.column) == Some(&top.ch))
        .ok_or(UndoError::Bounds {
            row: top.row,
            column: top.column,
            selection: 1,
        })?;
    line.splice(top.column..top.column + 1, top.replaced.chars());
    Ok(history.entries.pop().expect("peeked above"))
}
