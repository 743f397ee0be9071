//! Scalar and array algorithms: accumulation, max-find, digit-wise addition,
//! array matching, linear and binary search, descending sorts, sorted insert
//! and whole-record table sort.
//!
//! The `*_counted` variants report exact comparison and element-move counts
//! through [`OpCounts`]; the bench harness reads those.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::containers::{ContainerError, ShiftArray};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgorithmError {
    #[error("input is empty")]
    Empty,
    #[error("arrays differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("{0} is not a decimal digit")]
    NotADigit(u8),
    #[error("cannot parse {0:?} as a decimal number")]
    Parse(String),
    #[error(transparent)]
    Container(#[from] ContainerError),
}

/// Exact operation counters.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounts {
    pub comparisons: u64,
    pub moves: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accumulation {
    Sum,
    Product,
}

/// Left fold from the neutral element: 0 for sums, 1 for products.
pub fn accumulate(values: &[i64], mode: Accumulation) -> i64 {
    match mode {
        Accumulation::Sum => values.iter().sum(),
        Accumulation::Product => values.iter().product(),
    }
}

/// `n!` as the product of `1..=n`.
pub fn factorial(n: u32) -> i64 {
    let factors: Vec<i64> = (1..=i64::from(n)).collect();
    accumulate(&factors, Accumulation::Product)
}

/// Sums a stream of entries until the first zero, which ends the run and is
/// not itself added.
pub fn sum_until_zero<I: IntoIterator<Item = i64>>(entries: I) -> i64 {
    let mut sum = 0;
    let mut run = true;
    let mut entries = entries.into_iter();
    while run {
        match entries.next() {
            Some(0) | None => run = false,
            Some(price) => sum += price,
        }
    }
    sum
}

/// A non-negative decimal number stored as digits, least significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitNumber {
    digits: Vec<u8>,
}

impl DigitNumber {
    /// Builds from least-significant-first digits, dropping high zeros.
    pub fn new(mut digits: Vec<u8>) -> Result<Self, AlgorithmError> {
        if let Some(&bad) = digits.iter().find(|&&d| d > 9) {
            return Err(AlgorithmError::NotADigit(bad));
        }
        while digits.len() > 1 && digits.last() == Some(&0) {
            digits.pop();
        }
        if digits.is_empty() {
            digits.push(0);
        }
        Ok(Self { digits })
    }

    pub fn from_u64(mut n: u64) -> Self {
        let mut digits = Vec::new();
        loop {
            digits.push((n % 10) as u8);
            n /= 10;
            if n == 0 {
                break;
            }
        }
        Self { digits }
    }

    /// `None` when the value does not fit in a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        self.digits
            .iter()
            .rev()
            .try_fold(0u64, |acc, &d| acc.checked_mul(10)?.checked_add(u64::from(d)))
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }
}

impl fmt::Display for DigitNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.digits.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DigitNumber {
    type Err = AlgorithmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(AlgorithmError::Parse(s.to_string()));
        }
        Self::new(s.bytes().rev().map(|b| b - b'0').collect())
    }
}

/// Column-by-column addition with carry, right to left.
pub fn add_by_digits(a: &DigitNumber, b: &DigitNumber) -> DigitNumber {
    let width = a.digits.len().max(b.digits.len());
    let mut out = Vec::with_capacity(width + 1);
    let mut carry = 0u8;
    for col in 0..width {
        let x = a.digits.get(col).copied().unwrap_or(0);
        let y = b.digits.get(col).copied().unwrap_or(0);
        let total = x + y + carry;
        out.push(total % 10);
        carry = total / 10;
    }
    if carry > 0 {
        out.push(carry);
    }
    DigitNumber::new(out).expect("column sums are digits")
}

/// Maximum value and the first index holding it.
pub fn find_max<T: PartialOrd + Clone>(values: &[T]) -> Result<(T, usize), AlgorithmError> {
    let first = values.first().ok_or(AlgorithmError::Empty)?;
    let mut max_index = 0;
    let mut max = first;
    for (i, v) in values.iter().enumerate().skip(1) {
        if max < v {
            max = v;
            max_index = i;
        }
    }
    Ok((max.clone(), max_index))
}

/// Number of positions where the two arrays hold equal members.
pub fn match_arrays<T: PartialEq>(a: &[T], b: &[T]) -> Result<usize, AlgorithmError> {
    if a.len() != b.len() {
        return Err(AlgorithmError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x == y).count())
}

/// Every index holding `target`, ascending.
pub fn linear_search<T: PartialEq + ?Sized, U: std::borrow::Borrow<T>>(values: &[U], target: &T) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| (*v).borrow() == target)
        .map(|(i, _)| i)
        .collect()
}

/// First index holding `target`, counting one comparison per element visited.
pub fn linear_search_first_counted<T: PartialEq>(values: &[T], target: &T, counts: &mut OpCounts) -> Option<usize> {
    for (i, v) in values.iter().enumerate() {
        counts.comparisons += 1;
        if v == target {
            return Some(i);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(usize),
    NotFound,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn index(&self) -> Option<usize> {
        match *self {
            SearchOutcome::Found(i) => Some(i),
            SearchOutcome::NotFound => None,
        }
    }
}

/// Halving search over an ascending slice.
pub fn binary_search<T: PartialOrd>(sorted: &[T], target: &T) -> SearchOutcome {
    binary_search_counted(sorted, target, &mut OpCounts::default())
}

/// Halving search that counts one three-way comparison per probe.
///
/// Probes the midpoint `(low + high) / 2`, stops on a match, on a collapsed
/// range (`low == high`), or once the range is empty (`low > high`).
pub fn binary_search_counted<T: PartialOrd>(sorted: &[T], target: &T, counts: &mut OpCounts) -> SearchOutcome {
    let mut low: i64 = 0;
    let mut high: i64 = sorted.len() as i64 - 1;
    while low <= high {
        let mid = (low + high) / 2;
        let probe = &sorted[mid as usize];
        counts.comparisons += 1;
        if target == probe {
            return SearchOutcome::Found(mid as usize);
        }
        if low == high {
            break;
        }
        if target > probe {
            low = mid + 1;
        } else {
            high = mid - 1;
        }
    }
    SearchOutcome::NotFound
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SortStrategy {
    /// Repeatedly move the largest remaining element into a new sequence.
    ExtractMax,
    /// Pairwise compare-and-swap against each leading position.
    InPlace,
}

pub fn sort_descending<T: PartialOrd + Clone>(values: &[T], strategy: SortStrategy) -> Vec<T> {
    sort_descending_counted(values, strategy, &mut OpCounts::default())
}

/// Descending sort with exact counters. A swap counts as three moves; an
/// extraction counts one move for the append plus one per element shifted
/// down to close the gap.
pub fn sort_descending_counted<T: PartialOrd + Clone>(values: &[T], strategy: SortStrategy, counts: &mut OpCounts) -> Vec<T> {
    match strategy {
        SortStrategy::ExtractMax => {
            let mut unsorted = values.to_vec();
            let mut sorted = Vec::with_capacity(values.len());
            while !unsorted.is_empty() {
                let mut tallest = 0;
                for i in 0..unsorted.len() {
                    counts.comparisons += 1;
                    if unsorted[i] > unsorted[tallest] {
                        tallest = i;
                    }
                }
                counts.moves += 1 + (unsorted.len() - 1 - tallest) as u64;
                sorted.push(unsorted.remove(tallest));
            }
            sorted
        }
        SortStrategy::InPlace => {
            let mut data = values.to_vec();
            let n = data.len();
            for i in 0..n {
                for j in i..n {
                    counts.comparisons += 1;
                    if data[i] < data[j] {
                        data.swap(i, j);
                        counts.moves += 3;
                    }
                }
            }
            data
        }
    }
}

/// Inserts into a descending array before the first smaller element, or at
/// the end when none is smaller. Returns the insertion index.
pub fn sorted_insert(arr: &mut ShiftArray, value: i64) -> Result<usize, AlgorithmError> {
    sorted_insert_counted(arr, value, &mut OpCounts::default())
}

pub fn sorted_insert_counted(arr: &mut ShiftArray, value: i64, counts: &mut OpCounts) -> Result<usize, AlgorithmError> {
    if arr.is_full() {
        return Err(ContainerError::Capacity {
            capacity: arr.capacity(),
        }
        .into());
    }
    let mut index = arr.len();
    for (i, &resident) in arr.as_slice().iter().enumerate() {
        counts.comparisons += 1;
        if value > resident {
            index = i;
            break;
        }
    }
    counts.moves += (arr.len() - index) as u64 + 1;
    arr.insert_at(index, value)?;
    Ok(index)
}

/// Grade slot value meaning "not recorded yet".
pub const UNSET_GRADE: i64 = -1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StudentRecord {
    pub name: String,
    pub id: i64,
    pub grades: Vec<i64>,
    pub average: i64,
}

impl StudentRecord {
    /// A record with `grade_count` unset grades.
    pub fn new(name: impl Into<String>, id: i64, grade_count: usize) -> Self {
        Self {
            name: name.into(),
            id,
            grades: vec![UNSET_GRADE; grade_count],
            average: UNSET_GRADE,
        }
    }

    /// A record with the given grades and their truncated mean.
    pub fn with_grades(name: impl Into<String>, id: i64, grades: &[i64]) -> Self {
        let mut rec = Self {
            name: name.into(),
            id,
            grades: grades.to_vec(),
            average: UNSET_GRADE,
        };
        rec.recompute_average();
        rec
    }

    /// Truncated mean over recorded grades; unset when none are recorded.
    pub fn recompute_average(&mut self) {
        let recorded: Vec<i64> = self.grades.iter().copied().filter(|&g| g != UNSET_GRADE).collect();
        self.average = if recorded.is_empty() {
            UNSET_GRADE
        } else {
            accumulate(&recorded, Accumulation::Sum) / recorded.len() as i64
        };
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKey {
    Id,
    Average,
    Grade(usize),
}

impl RecordKey {
    fn of(&self, rec: &StudentRecord) -> i64 {
        match *self {
            RecordKey::Id => rec.id,
            RecordKey::Average => rec.average,
            RecordKey::Grade(i) => rec.grades.get(i).copied().unwrap_or(UNSET_GRADE),
        }
    }
}

/// Sorts descending by one column, swapping whole rows.
pub fn sort_records_by_key(records: &mut [StudentRecord], key: RecordKey) {
    let n = records.len();
    for i in 0..n {
        for j in i..n {
            if key.of(&records[i]) < key.of(&records[j]) {
                records.swap(i, j);
            }
        }
    }
}
