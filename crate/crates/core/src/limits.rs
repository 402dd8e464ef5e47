//! Resource caps. Defaults can be overridden through environment variables;
//! explicit settings (CLI flags) take precedence over both.

use std::env;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring cardinality accepted (`PPMOD_MAX_RING_SIZE`).
    pub max_ring_size: u64,
    /// Candidate presentations examined by module enumeration
    /// (`PPMOD_MAX_CANDIDATES`).
    pub max_candidates: u64,
    /// Nodes visited by the backtracking extension search
    /// (`PPMOD_MAX_BACKTRACK`).
    pub max_backtrack: u64,
    /// Largest module examined by power and direct-sum tests
    /// (`PPMOD_MAX_POWER_SIZE`).
    pub max_power_size: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_ring_size: 256, max_candidates: 100_000, max_backtrack: 1 << 16, max_power_size: 4096 }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let d = Limits::default();
        Limits {
            max_ring_size: read("PPMOD_MAX_RING_SIZE").unwrap_or(d.max_ring_size),
            max_candidates: read("PPMOD_MAX_CANDIDATES").unwrap_or(d.max_candidates),
            max_backtrack: read("PPMOD_MAX_BACKTRACK").unwrap_or(d.max_backtrack),
            max_power_size: read("PPMOD_MAX_POWER_SIZE").unwrap_or(d.max_power_size),
        }
    }
}

fn read(var: &str) -> Option<u64> {
    env::var(var).ok()?.trim().parse().ok()
}
