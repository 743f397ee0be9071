//! Solves Towers of Hanoi with the recursive plan, printing each state.

use acc_kit::hanoi::{Bar, HanoiGame};

fn solve(n: u32, from: Bar, to: Bar, via: Bar, game: &mut HanoiGame) {
    if n == 0 {
        return;
    }
    solve(n - 1, from, via, to, game);
    assert!(game.move_disk(from, to).unwrap());
    println!("{from} -> {to}\n{game}");
    solve(n - 1, via, to, from, game);
}

fn main() {
    let n = std::env::args().nth(1).map_or(3, |a| a.parse().expect("disk count"));
    let mut game = HanoiGame::new(n);
    println!("{game}");
    solve(n, Bar::A, Bar::C, Bar::B, &mut game);
    println!("won: {}", game.is_won());
}
