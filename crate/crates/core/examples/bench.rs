//! Prints the search, sort and container benchmark CSV.

use acc_kit::cli::bench::{run_bench, to_csv, Suite};

fn main() {
    let mut rows = Vec::new();
    rows.extend(run_bench(Suite::Search, &[16, 256, 4096], 100, 1).unwrap());
    rows.extend(run_bench(Suite::Sort, &[16, 64, 256], 5, 1).unwrap());
    rows.extend(run_bench(Suite::Containers, &[16, 256], 20, 1).unwrap());
    print!("{}", to_csv(&rows));
}
