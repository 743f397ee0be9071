//! Schoolbook addition on digit sequences.

use acc_kit::algorithms::{add_by_digits, DigitNumber};

fn main() {
    let a: DigitNumber = "27".parse().unwrap();
    let b: DigitNumber = "15".parse().unwrap();
    println!("{a} + {b} = {}", add_by_digits(&a, &b));

    let big: DigitNumber = "99999999999999999999999999".parse().unwrap();
    println!("{big} + 1 = {}", add_by_digits(&big, &DigitNumber::from_u64(1)));
}
