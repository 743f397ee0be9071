//! Instrumented search, sort and container workloads on seeded data.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::algorithms::{
    binary_search_counted, linear_search_first_counted, sort_descending_counted, sorted_insert_counted, OpCounts,
    SearchOutcome, SortStrategy,
};
use crate::containers::{BoundedQueue, BoundedStack, LinkedList, ShiftArray};
use crate::rng::Lcg32;

pub const CSV_HEADER: &str = "suite,op,n,reps,comparisons,moves,nanos";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Search,
    Sort,
    Containers,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "search" => Ok(Suite::Search),
            "sort" => Ok(Suite::Sort),
            "containers" => Ok(Suite::Containers),
            other => Err(format!("unknown suite {other:?} (expected search, sort or containers)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Search => "search",
            Suite::Sort => "sort",
            Suite::Containers => "containers",
        })
    }
}

/// One CSV row. `comparisons` and `moves` are the worst single repetition;
/// `nanos` is the total wall time over all repetitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub suite: Suite,
    pub op: &'static str,
    pub n: usize,
    pub reps: usize,
    pub comparisons: u64,
    pub moves: u64,
    pub nanos: u128,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{},{}",
            self.suite, self.op, self.n, self.reps, self.comparisons, self.moves, self.nanos
        )
    }
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

struct Cell {
    worst: OpCounts,
    nanos: u128,
}

impl Cell {
    fn new() -> Self {
        Self {
            worst: OpCounts::default(),
            nanos: 0,
        }
    }

    fn record(&mut self, c: OpCounts, started: Instant) {
        self.nanos += started.elapsed().as_nanos();
        self.worst.comparisons = self.worst.comparisons.max(c.comparisons);
        self.worst.moves = self.worst.moves.max(c.moves);
    }

    fn row(&self, suite: Suite, op: &'static str, n: usize, reps: usize) -> BenchRow {
        BenchRow {
            suite,
            op,
            n,
            reps,
            comparisons: self.worst.comparisons,
            moves: self.worst.moves,
            nanos: self.nanos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BenchError {
    #[error("sizes must be nonempty and positive")]
    Sizes,
    #[error("reps must be positive")]
    Reps,
    #[error("{0}")]
    Disagreement(String),
}

/// Runs one suite for every size; rows come out ordered by (n, op).
pub fn run_bench(suite: Suite, sizes: &[usize], reps: usize, seed: u32) -> Result<Vec<BenchRow>, BenchError> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(BenchError::Sizes);
    }
    if reps == 0 {
        return Err(BenchError::Reps);
    }
    let mut rows = Vec::new();
    for &n in sizes {
        let mut rng = Lcg32::new(seed ^ n as u32);
        match suite {
            Suite::Search => search_cells(n, reps, &mut rng, &mut rows)?,
            Suite::Sort => sort_cells(n, reps, &mut rng, &mut rows)?,
            Suite::Containers => container_cells(n, reps, &mut rng, &mut rows),
        }
    }
    Ok(rows)
}

/// Strictly increasing even values, so every odd value is absent.
fn sorted_evens(n: usize, rng: &mut Lcg32) -> Vec<i64> {
    let mut v = 0i64;
    (0..n)
        .map(|_| {
            v += 2 + 2 * rng.below(3) as i64;
            v
        })
        .collect()
}

fn search_cells(n: usize, reps: usize, rng: &mut Lcg32, rows: &mut Vec<BenchRow>) -> Result<(), BenchError> {
    let data = sorted_evens(n, rng);
    let mut cells: [Cell; 4] = std::array::from_fn(|_| Cell::new());
    for rep in 0..reps {
        // The first two repetitions pin the extremes; the rest are random.
        let pick = match rep {
            0 => n - 1,
            1 => 0,
            _ => rng.below(n as u32) as usize,
        };
        let present = data[pick];
        let absent = present + 1 - 2 * (rep % 2) as i64;

        let mut c = OpCounts::default();
        let t = Instant::now();
        let lin = linear_search_first_counted(&data, &present, &mut c);
        cells[0].record(c, t);

        let mut c = OpCounts::default();
        let t = Instant::now();
        let bin = binary_search_counted(&data, &present, &mut c);
        cells[1].record(c, t);
        if lin != bin.index() {
            return Err(BenchError::Disagreement(format!("search n={n} target={present}: {lin:?} vs {bin:?}")));
        }

        let mut c = OpCounts::default();
        let t = Instant::now();
        let lin = linear_search_first_counted(&data, &absent, &mut c);
        cells[2].record(c, t);

        let mut c = OpCounts::default();
        let t = Instant::now();
        let bin = binary_search_counted(&data, &absent, &mut c);
        cells[3].record(c, t);
        if lin.is_some() || bin != SearchOutcome::NotFound {
            return Err(BenchError::Disagreement(format!("search n={n} found absent {absent}")));
        }
    }
    for (cell, op) in cells.iter().zip(["linear", "binary", "linear_absent", "binary_absent"]) {
        rows.push(cell.row(Suite::Search, op, n, reps));
    }
    Ok(())
}

fn sort_cells(n: usize, reps: usize, rng: &mut Lcg32, rows: &mut Vec<BenchRow>) -> Result<(), BenchError> {
    let mut cells: [Cell; 3] = std::array::from_fn(|_| Cell::new());
    for _ in 0..reps {
        let data: Vec<i64> = (0..n).map(|_| rng.below(10 * n as u32) as i64).collect();

        let mut c = OpCounts::default();
        let t = Instant::now();
        let a = sort_descending_counted(&data, SortStrategy::ExtractMax, &mut c);
        cells[0].record(c, t);

        let mut c = OpCounts::default();
        let t = Instant::now();
        let b = sort_descending_counted(&data, SortStrategy::InPlace, &mut c);
        cells[1].record(c, t);

        let mut c = OpCounts::default();
        let t = Instant::now();
        let mut arr = ShiftArray::new(n);
        for &v in &data {
            sorted_insert_counted(&mut arr, v, &mut c).expect("capacity n");
        }
        cells[2].record(c, t);

        if a != b || a.as_slice() != arr.as_slice() {
            return Err(BenchError::Disagreement(format!("sort n={n}: strategies disagree")));
        }
    }
    for (cell, op) in cells.iter().zip(["extract_max", "in_place", "sorted_insert"]) {
        rows.push(cell.row(Suite::Sort, op, n, reps));
    }
    Ok(())
}

/// Fill-then-drain workloads. Queue moves count the elements shifted down on
/// each dequeue; list comparisons count links followed to reach a position.
fn container_cells(n: usize, reps: usize, rng: &mut Lcg32, rows: &mut Vec<BenchRow>) {
    let mut cells: [Cell; 3] = std::array::from_fn(|_| Cell::new());
    for _ in 0..reps {
        let mut c = OpCounts::default();
        let t = Instant::now();
        let mut q = BoundedQueue::new(n);
        for i in 0..n {
            q.enqueue(i).expect("capacity n");
            c.moves += 1;
        }
        while !q.is_empty() {
            c.moves += q.len() as u64 - 1;
            q.dequeue().expect("nonempty");
        }
        cells[0].record(c, t);

        let mut c = OpCounts::default();
        let t = Instant::now();
        let mut s = BoundedStack::new(n);
        for i in 0..n {
            s.push(i).expect("capacity n");
            c.moves += 1;
        }
        while s.pop().is_ok() {
            c.moves += 1;
        }
        cells[1].record(c, t);

        let mut c = OpCounts::default();
        let t = Instant::now();
        let mut list = LinkedList::new();
        for i in 0..n {
            let at = rng.below(i as u32 + 1) as usize;
            if at < list.len() {
                c.comparisons += at as u64;
            }
            list.insert(at, i);
            c.moves += 1;
        }
        while !list.is_empty() {
            let at = rng.below(list.len() as u32) as usize;
            c.comparisons += at as u64;
            list.delete(at).expect("in range");
            c.moves += 1;
        }
        cells[2].record(c, t);
    }
    for (cell, op) in cells.iter().zip(["queue", "stack", "list"]) {
        rows.push(cell.row(Suite::Containers, op, n, reps));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row<'a>(rows: &'a [BenchRow], op: &str, n: usize) -> &'a BenchRow {
        rows.iter().find(|r| r.op == op && r.n == n).unwrap()
    }

    #[test]
    fn search_bounds_at_1024() {
        let rows = run_bench(Suite::Search, &[1024], 50, 1).unwrap();
        assert!(row(&rows, "binary", 1024).comparisons <= 11);
        assert_eq!(row(&rows, "linear", 1024).comparisons, 1024);
        assert_eq!(row(&rows, "linear_absent", 1024).comparisons, 1024);
    }

    #[test]
    fn csv_header_is_exact() {
        let rows = run_bench(Suite::Sort, &[8], 2, 1).unwrap();
        let csv = to_csv(&rows);
        assert!(csv.starts_with("suite,op,n,reps,comparisons,moves,nanos\n"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn counters_are_deterministic() {
        let strip = |rows: Vec<BenchRow>| rows.into_iter().map(|r| (r.op, r.n, r.comparisons, r.moves)).collect::<Vec<_>>();
        for suite in [Suite::Search, Suite::Sort, Suite::Containers] {
            let a = strip(run_bench(suite, &[16, 64], 3, 9).unwrap());
            let b = strip(run_bench(suite, &[16, 64], 3, 9).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(run_bench(Suite::Search, &[], 1, 1), Err(BenchError::Sizes));
        assert_eq!(run_bench(Suite::Search, &[0], 1, 1), Err(BenchError::Sizes));
        assert_eq!(run_bench(Suite::Search, &[4], 0, 1), Err(BenchError::Reps));
    }
}
