//! Character edits recorded on a bounded history, then undone.

use acc_kit::undo::{apply_edit, undo_last, TextBuffer, UndoStack};

fn main() {
    let mut buf = TextBuffer::from_lines(&["hello world", "second line"]);
    let mut history = UndoStack::new(8);
    apply_edit(&mut buf, &mut history, 0, 0, 'J', 1).unwrap();
    apply_edit(&mut buf, &mut history, 0, 6, 'W', 5).unwrap();
    apply_edit(&mut buf, &mut history, 1, 0, '>', 0).unwrap();
    println!("{buf}\n--");
    while let Ok(e) = undo_last(&mut buf, &mut history) {
        println!("undid {:?} at {},{}", e.ch, e.row, e.column);
    }
    println!("--\n{buf}");
}
