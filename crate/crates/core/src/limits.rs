//! Process-wide size limits for exhaustive work.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default element-count limit for full-space scans (2^20).
pub const DEFAULT_EXHAUSTIVE_CAP: u64 = 1 << 20;

/// Rings up to this size get pairwise (N^2) axiom checks in the exhaustive suites.
pub const PAIRWISE_LIMIT: u64 = 10_000;

/// Environment variable read by the CLI to override the exhaustive cap.
pub const CAP_ENV_VAR: &str = "RICKART_MAX_ELEMENTS";

static EXHAUSTIVE_CAP: AtomicU64 = AtomicU64::new(DEFAULT_EXHAUSTIVE_CAP);

pub fn exhaustive_cap() -> u64 {
    EXHAUSTIVE_CAP.load(Ordering::Relaxed)
}

pub fn set_exhaustive_cap(cap: u64) {
    EXHAUSTIVE_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Reads [`CAP_ENV_VAR`] and applies it if it parses as a positive integer.
pub fn apply_env_override() -> Option<u64> {
    let value = std::env::var(CAP_ENV_VAR).ok()?;
    let cap = value.trim().parse::<u64>().ok().filter(|c| *c > 0)?;
    set_exhaustive_cap(cap);
    Some(cap)
}

pub(crate) fn ensure_within(what: &str, needed: u128, cap: u64) -> Result<()> {
    if needed > cap as u128 {
        Err(Error::cap(what, needed, cap as u128))
    } else {
        Ok(())
    }
}
