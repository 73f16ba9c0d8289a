//! Order-preserving maps over integer ranges. With the `parallel` feature
//! [`map_range`] fans out over rayon; [`map_range_seq`] is always serial.

use std::ops::RangeInclusive;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_range_seq<T, F>(range: RangeInclusive<u64>, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    range.map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range<T, F>(range: RangeInclusive<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<T, F>(range: RangeInclusive<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    map_range_seq(range, f)
}

/// Runs `f` on a dedicated pool of `threads` workers. Without the
/// `parallel` feature this just calls `f`.
#[cfg(feature = "parallel")]
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<T: Send>(_threads: usize, f: impl FnOnce() -> T + Send) -> T {
    f()
}
