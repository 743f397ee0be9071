//! Small, deterministic implementations of classic data structures,
//! algorithms, a headless 2D game kernel, PPM filters and a set of
//! interactive command processors built on them.

pub mod algorithms;
pub mod cli;
pub mod containers;
pub mod rng;
pub mod simkernel;
pub mod imaging;
pub mod hanoi;
pub mod ledger;
pub mod lending;
pub mod undo;
