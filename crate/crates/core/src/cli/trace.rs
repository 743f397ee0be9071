//! Input trace files: `<frame> <KEY> <DOWN|UP>` per line, `#` comments.

use crate::simkernel::{InputEvent, Key, KeyEdge};

use super::CliError;

/// Parses a trace, requiring nondecreasing frames below `frames`.
pub fn parse_trace(text: &str, frames: u64) -> Result<Vec<InputEvent>, CliError> {
    let mut events = Vec::new();
    let mut last = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: String| CliError::Trace { line: n + 1, reason };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [frame, key, edge] = fields[..] else {
            return Err(bad(format!("expected `<frame> <KEY> <DOWN|UP>`, got {line:?}")));
        };
        let frame: u64 = frame.parse().map_err(|_| bad(format!("bad frame number {frame:?}")))?;
        let key: Key = key.parse().map_err(bad)?;
        let edge: KeyEdge = edge.parse().map_err(bad)?;
        if frame < last {
            return Err(bad(format!("frame {frame} comes after frame {last}")));
        }
        if frame >= frames {
            return Err(bad(format!("frame {frame} is past the last frame {}", frames.saturating_sub(1))));
        }
        last = frame;
        events.push(InputEvent::new(frame, key, edge));
    }
    Ok(events)
}

pub fn format_trace(events: &[InputEvent]) -> String {
    events.iter().map(|e| format!("{} {} {}\n", e.frame, e.key, e.edge)).collect()
}
