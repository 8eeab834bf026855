//! Std front end for `dindex-core`: graph6 I/O, certificate JSON, corpus
//! sweeps against the label bounds, and the `dindex` command-line tool.
//!
//! * [`graph6`]: parsing and writing graph6 lines.
//! * [`json`]: serde mirrors of certificates and solver results.
//! * [`config`]: run configuration shared by every subcommand.
//! * [`rows`]: one output row per input graph for each subcommand.
//! * [`pool`]: order-preserving parallel map over input lines.

pub mod config;
pub mod graph6;
pub mod json;
pub mod pool;
pub mod rows;

use std::time::Instant;

use dindex_core::solver::Clock;

/// Wall-clock time since construction.
#[derive(Debug, Clone, Copy)]
pub struct StdClock(Instant);

impl StdClock {
    pub fn start() -> Self {
        StdClock(Instant::now())
    }
}

impl Clock for StdClock {
    fn elapsed_ms(&self) -> u64 {
        self.0.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
    }
}
