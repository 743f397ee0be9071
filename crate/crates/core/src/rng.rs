//! Platform-independent 32-bit linear congruential generator.

const MULTIPLIER: u32 = 1_664_525;
const INCREMENT: u32 = 1_013_904_223;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lcg32 {
    state: u32,
}

impl Lcg32 {
    pub fn new(seed: u32) -> Self {
        Self { state: seed }
    }

    pub fn state(&self) -> u32 {
        self.state
    }

    /// Advances the state and returns its high 16 bits.
    pub fn next_raw(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state >> 16
    }

    /// A draw in `0..n`. `n` must be positive.
    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0, "below() needs a positive bound");
        self.next_raw() % n
    }

    /// Uniform step in `[-2, 2]`.
    pub fn jitter(&mut self) -> i32 {
        self.below(5) as i32 - 2
    }

    /// A draw in the inclusive range `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        // Two draws give 32 bits of output.
        let wide = ((self.next_raw() as u64) << 16) | self.next_raw() as u64;
        lo + (wide % span) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_state_follows_the_recurrence() {
        let mut rng = Lcg32::new(0);
        rng.next_raw();
        assert_eq!(rng.state(), 1_013_904_223);
        rng.next_raw();
        assert_eq!(rng.state(), 1_013_904_223u32.wrapping_mul(1_664_525).wrapping_add(1_013_904_223));
    }

    #[test]
    fn jitter_stays_in_range() {
        let mut rng = Lcg32::new(42);
        for _ in 0..10_000 {
            let j = rng.jitter();
            assert!((-2..=2).contains(&j));
        }
    }

    #[test]
    fn same_seed_same_draws() {
        let a: Vec<i32> = {
            let mut r = Lcg32::new(7);
            (0..100).map(|_| r.jitter()).collect()
        };
        let b: Vec<i32> = {
            let mut r = Lcg32::new(7);
            (0..100).map(|_| r.jitter()).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn jitter_is_roughly_uniform() {
        let mut rng = Lcg32::new(1);
        let mut counts = [0u32; 5];
        let draws = 100_000;
        for _ in 0..draws {
            counts[(rng.jitter() + 2) as usize] += 1;
        }
        for c in counts {
            let freq = c as f64 / draws as f64;
            assert!((freq - 0.2).abs() < 0.02, "frequency {freq}");
        }
    }

    #[test]
    fn range_inclusive_hits_both_ends() {
        let mut rng = Lcg32::new(3);
        let draws: Vec<i64> = (0..1000).map(|_| rng.range_inclusive(-1, 1)).collect();
        assert!(draws.contains(&-1) && draws.contains(&1) && draws.contains(&0));
        assert!(draws.iter().all(|d| (-1..=1).contains(d)));
    }
}
