//! Tower of Hanoi over three bounded stacks with move legality enforced.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::containers::BoundedStack;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HanoiError {
    #[error("bar {0} is empty")]
    SourceEmpty(Bar),
    #[error("source and destination are both bar {0}")]
    SameBar(Bar),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bar {
    A,
    B,
    C,
}

impl Bar {
    pub const ALL: [Bar; 3] = [Bar::A, Bar::B, Bar::C];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bar::A => "A",
            Bar::B => "B",
            Bar::C => "C",
        })
    }
}

impl FromStr for Bar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" | "1" => Ok(Bar::A),
            "B" | "b" | "2" => Ok(Bar::B),
            "C" | "c" | "3" => Ok(Bar::C),
            other => Err(format!("no bar {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HanoiGame {
    bars: [BoundedStack<u32>; 3],
    n: u32,
}

impl HanoiGame {
    /// `n` disks stacked on A, smallest on top.
    pub fn new(n: u32) -> Self {
        let mut bars = std::array::from_fn(|_| BoundedStack::new(n as usize));
        for size in (1..=n).rev() {
            bars[0].push(size).expect("capacity n");
        }
        Self { bars, n }
    }

    pub fn disk_count(&self) -> u32 {
        self.n
    }

    /// Disks bottom to top.
    pub fn bar(&self, bar: Bar) -> &[u32] {
        self.bars[bar.index()].as_slice()
    }

    pub fn top(&self, bar: Bar) -> Option<u32> {
        self.bars[bar.index()].peek().ok().copied()
    }

    /// Whether a disk of `size` may be placed on `bar`.
    pub fn accepts(&self, bar: Bar, size: u32) -> bool {
        self.top(bar).is_none_or(|top| top > size)
    }

    /// Moves the top disk of `from` onto `to`. Returns false, leaving the
    /// game untouched, when that would put a disk on a smaller one.
    pub fn move_disk(&mut self, from: Bar, to: Bar) -> Result<bool, HanoiError> {
        if from == to {
            return Err(HanoiError::SameBar(from));
        }
        let disk = self.top(from).ok_or(HanoiError::SourceEmpty(from))?;
        if !self.accepts(to, disk) {
            return Ok(false);
        }
        self.bars[from.index()].pop().expect("peeked above");
        self.bars[to.index()].push(disk).expect("capacity n");
        Ok(true)
    }

    pub fn is_won(&self) -> bool {
        self.bars[Bar::C.index()].len() == self.n as usize
    }
}

impl fmt::Display for HanoiGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, bar) in Bar::ALL.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{bar}:")?;
            for d in self.bar(*bar) {
                write!(f, " {d}")?;
            }
        }
        Ok(())
    }
}
