//! Command-line experiments over `grundy-core`: graph specs, record
//! formats and the work behind each subcommand.

pub mod commands;
pub mod record;
pub mod spec;

use std::ops::RangeInclusive;

/// Parses `A..B` or `A..=B` (both inclusive) or a single `N`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a nonnegative integer"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(format!("empty range '{s}'"));
    }
    Ok(a..=b)
}
