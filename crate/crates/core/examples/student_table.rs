//! A table of student records sorted by one column, rows kept intact.

use acc_kit::algorithms::{sort_records_by_key, sorted_insert, RecordKey, StudentRecord};
use acc_kit::containers::ShiftArray;

fn print(rows: &[StudentRecord]) {
    println!("Name\tID\tg1\tg2\tg3\tg4\tg5\taverage");
    for r in rows {
        let grades: Vec<String> = r.grades.iter().map(|g| g.to_string()).collect();
        println!("{}\t{}\t{}\t{}", r.name, r.id, grades.join("\t"), r.average);
    }
}

fn main() {
    let mut rows = vec![
        StudentRecord::with_grades("x", 141, &[67, 34, 0, 69, 24]),
        StudentRecord::with_grades("x", 778, &[58, 62, 64, 5, 45]),
        StudentRecord::with_grades("x", 881, &[27, 61, 91, 95, 42]),
        StudentRecord::with_grades("x", 427, &[36, 91, 4, 2, 53]),
        StudentRecord::with_grades("x", 392, &[82, 21, 16, 18, 95]),
    ];
    print(&rows);
    sort_records_by_key(&mut rows, RecordKey::Id);
    println!();
    print(&rows);

    let mut arr = ShiftArray::from_values(&[44, 36, 25, 12], 5).unwrap();
    sorted_insert(&mut arr, 39).unwrap();
    println!("\nsorted insert of 39: {:?}", arr.as_slice());
}
