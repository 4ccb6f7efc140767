//! Trial fan-out with a sequential fallback.
//!
//! With the `parallel` feature (default) independent trials run on the rayon
//! pool; without it, [`Execution::Parallel`] silently runs sequentially.
//! Results always come back in index order, so reports do not depend on the
//! schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// `(0..count).map(job)` collected in index order.
    pub fn map_indexed<T, F>(self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..count).map(job).collect(),
            Execution::Parallel => par_map(count, job),
        }
    }

    /// `items.iter().map(job)` collected in input order.
    pub fn map_slice<I, T, F>(self, items: &[I], job: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        self.map_indexed(items.len(), |i| job(&items[i]))
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, F>(count: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).into_par_iter().map(job).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, F>(count: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).map(job).collect()
}
