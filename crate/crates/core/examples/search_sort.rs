//! Linear vs binary search and the two descending sorts, with counters.

use acc_kit::algorithms::{
    binary_search_counted, linear_search_first_counted, sort_descending_counted, OpCounts, SortStrategy,
};

fn main() {
    let data = [1, 4, 6, 9, 13, 25, 67, 99];
    for target in [13, 5, 99] {
        let (mut lin, mut bin) = (OpCounts::default(), OpCounts::default());
        let a = linear_search_first_counted(&data, &target, &mut lin);
        let b = binary_search_counted(&data, &target, &mut bin);
        println!(
            "{target:>3}: linear {a:?} ({} cmp), binary {b:?} ({} cmp)",
            lin.comparisons, bin.comparisons
        );
    }

    let heights = [170, 182, 165, 190, 175];
    for strategy in [SortStrategy::ExtractMax, SortStrategy::InPlace] {
        let mut c = OpCounts::default();
        let sorted = sort_descending_counted(&heights, strategy, &mut c);
        println!("{strategy:?}: {sorted:?} comparisons={} moves={}", c.comparisons, c.moves);
    }
}
