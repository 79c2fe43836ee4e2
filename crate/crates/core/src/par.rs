//! Execution switch for the data-parallel sweeps.
//!
//! With the `parallel` feature the filters and maps below run on rayon's
//! global pool; without it only [`Exec::Sequential`] exists.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Keeps the items satisfying `pred`, preserving input order.
pub fn filter<T, F>(exec: Exec, items: &[T], pred: F) -> Vec<T>
where
    T: Clone + Send + Sync,
    F: Fn(&T) -> bool + Send + Sync,
{
    match exec {
        Exec::Sequential => items.iter().filter(|x| pred(x)).cloned().collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().filter(|x| pred(x)).cloned().collect(),
    }
}

/// Maps every item, preserving input order.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    match exec {
        Exec::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(f).collect(),
    }
}
