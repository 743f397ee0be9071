use acc_kit::algorithms::{
    accumulate, add_by_digits, binary_search, binary_search_counted, factorial, find_max, linear_search,
    match_arrays, sort_descending, sort_descending_counted, sorted_insert, sum_until_zero, Accumulation, DigitNumber,
    OpCounts, SortStrategy,
};
use acc_kit::containers::ShiftArray;
use proptest::prelude::*;

fn ascending() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-50i32..50, 0..300).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

proptest! {
    #[test]
    fn binary_agrees_with_scan(arr in ascending(), target in -60i32..60) {
        let hits = linear_search(&arr, &target);
        let got = binary_search(&arr, &target);
        prop_assert_eq!(got.found(), !hits.is_empty());
        if let Some(i) = got.index() {
            prop_assert!(hits.contains(&i));
        }
    }

    #[test]
    fn binary_comparisons_are_logarithmic(arr in ascending(), target in -60i32..60) {
        let mut c = OpCounts::default();
        binary_search_counted(&arr, &target, &mut c);
        let bound = if arr.is_empty() { 0 } else { arr.len().ilog2() as u64 + 2 };
        prop_assert!(c.comparisons <= bound, "{} > {}", c.comparisons, bound);
    }

    #[test]
    fn both_sorts_match_std(values in prop::collection::vec(-1000i64..1000, 0..80)) {
        let mut want = values.clone();
        want.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(sort_descending(&values, SortStrategy::ExtractMax), want.clone());
        prop_assert_eq!(sort_descending(&values, SortStrategy::InPlace), want);
    }

    #[test]
    fn in_place_comparisons_are_quadratic(values in prop::collection::vec(any::<i16>(), 0..40)) {
        let mut c = OpCounts::default();
        sort_descending_counted(&values, SortStrategy::InPlace, &mut c);
        let n = values.len() as u64;
        prop_assert!(c.comparisons <= n * (n + 1) / 2);
    }

    #[test]
    fn sorted_insert_keeps_descending(values in prop::collection::vec(-100i64..100, 1..30)) {
        let mut arr = ShiftArray::new(values.len());
        for &v in &values {
            sorted_insert(&mut arr, v).unwrap();
            prop_assert!(arr.as_slice().windows(2).all(|w| w[0] >= w[1]));
        }
        let mut want = values.clone();
        want.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(arr.as_slice(), want.as_slice());
    }

    #[test]
    fn digit_sum_matches_integers(a in any::<u64>(), b in any::<u64>()) {
        let sum = add_by_digits(&DigitNumber::from_u64(a), &DigitNumber::from_u64(b));
        prop_assert_eq!(sum.to_string(), (a as u128 + b as u128).to_string());
    }

    #[test]
    fn digits_round_trip_text(s in "[1-9][0-9]{0,40}|0") {
        let n: DigitNumber = s.parse().unwrap();
        prop_assert_eq!(n.to_string(), s);
    }

    #[test]
    fn find_max_returns_first_maximum(values in prop::collection::vec(-20i32..20, 1..50)) {
        let (m, i) = find_max(&values).unwrap();
        let want = *values.iter().max().unwrap();
        prop_assert_eq!(m, want);
        prop_assert_eq!(i, values.iter().position(|&v| v == want).unwrap());
    }

    #[test]
    fn match_arrays_counts_positions(pairs in prop::collection::vec((0u8..3, 0u8..3), 0..40)) {
        let (a, b): (Vec<u8>, Vec<u8>) = pairs.iter().copied().unzip();
        prop_assert_eq!(match_arrays(&a, &b).unwrap(), pairs.iter().filter(|(x, y)| x == y).count());
    }

    #[test]
    fn accumulate_matches_iterators(values in prop::collection::vec(-9i64..9, 0..12)) {
        prop_assert_eq!(accumulate(&values, Accumulation::Sum), values.iter().sum::<i64>());
        prop_assert_eq!(accumulate(&values, Accumulation::Product), values.iter().product::<i64>());
    }
}

#[test]
fn worked_examples() {
    let data = [1, 4, 6, 9, 13, 25, 67, 99];
    assert_eq!(binary_search(&data, &13).index(), Some(4));
    assert!(!binary_search(&data, &5).found());
    assert!(!binary_search::<i32>(&[], &1).found());
    assert_eq!(linear_search(&[3, 7, 3], &3), vec![0, 2]);
    assert_eq!(factorial(5), 120);
    assert_eq!(factorial(0), 1);
    assert_eq!(sum_until_zero([4, 5, 0, 9]), 9);
    assert!(match_arrays(&[1], &[1, 2]).is_err());
    assert!(find_max::<i32>(&[]).is_err());
}
