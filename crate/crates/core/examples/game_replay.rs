//! Replays an input trace through the headless world and prints a digest.
//!
//! Run with `cargo run --example game_replay -- [frames] [seed]`.

use acc_kit::cli::sim::SimRun;
use acc_kit::cli::trace::parse_trace;
use acc_kit::simkernel::WorldConfig;

const TRACE: &str = "\
# drift up, fire, then walk right into the prize
0 UP DOWN
6 UP UP
8 SPACE DOWN
9 SPACE UP
10 DOWN DOWN
16 DOWN UP
20 RIGHT DOWN
";

fn main() {
    let mut args = std::env::args().skip(1);
    let frames: u64 = args.next().map_or(120, |a| a.parse().expect("frames"));
    let seed: u32 = args.next().map_or(7, |a| a.parse().expect("seed"));
    let events = parse_trace(TRACE, frames).expect("valid trace");
    let (summary, world) = SimRun::new(WorldConfig::default(), seed, frames, events).run().unwrap();
    println!("{summary}");
    println!("prize visible: {}", world.prize.visible);
}
