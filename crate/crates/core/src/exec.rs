//! Data-parallel helpers with a sequential fallback.
//!
//! Each helper takes the `parallel` switch from the caller's [`Config`]; with
//! the `parallel` feature disabled the switch is ignored. Searches return the
//! match with the smallest index so results are schedule independent.
//!
//! [`Config`]: crate::Config

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn find_first<T, F>(parallel: bool, n: u64, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().find_map_first(f);
    }
    let _ = parallel;
    (0..n).find_map(f)
}

pub(crate) fn map<T, F>(parallel: bool, n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

pub(crate) fn filter_map<T, F>(parallel: bool, n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().filter_map(f).collect();
    }
    let _ = parallel;
    (0..n).filter_map(f).collect()
}

pub(crate) fn all<F>(parallel: bool, n: u64, f: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().all(f);
    }
    let _ = parallel;
    (0..n).all(f)
}
