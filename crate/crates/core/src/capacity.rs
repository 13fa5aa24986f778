//! Size guards for the exponential code paths.
//!
//! Enumeration and the all-minors oracle are for desk-scale verification;
//! rather than silently attempting a sweep that cannot finish, they refuse
//! grids above a limit. Setting the environment variable `TNN_MAX_CELLS`
//! to a cell count `m·p` overrides every guard at once.

use crate::error::{Error, Result};

const ENV_OVERRIDE: &str = "TNN_MAX_CELLS";

fn env_limit() -> Option<usize> {
    std::env::var(ENV_OVERRIDE)
        .ok()
        .and_then(|v| v.parse().ok())
}

/// Guard on `m·p` with a per-call default, overridable via `TNN_MAX_CELLS`.
pub fn check_cells(rows: usize, cols: usize, default_limit: usize) -> Result<()> {
    let limit = env_limit().unwrap_or(default_limit);
    let cells = rows * cols;
    if cells > limit {
        return Err(Error::Capacity { cells, limit });
    }
    Ok(())
}

/// Guard for the brute-force oracle. The default admits shapes up to
/// `m + p ≤ 16` (an 8×8 matrix has 12869 minors, still tractable);
/// `TNN_MAX_CELLS` switches the bound to cells when set.
pub fn check_oracle(rows: usize, cols: usize) -> Result<()> {
    match env_limit() {
        Some(limit) => {
            let cells = rows * cols;
            if cells > limit {
                return Err(Error::Capacity { cells, limit });
            }
            Ok(())
        }
        None => {
            if rows + cols > 16 {
                return Err(Error::Capacity {
                    cells: rows * cols,
                    limit: 64,
                });
            }
            Ok(())
        }
    }
}
