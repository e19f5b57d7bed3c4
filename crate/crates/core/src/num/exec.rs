//! Indexed map helpers with a rayon and a sequential implementation. Both
//! return results in index order, so downstream pairwise reductions are
//! bit-identical regardless of the execution mode or worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map_indexed_seq<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed_par<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

/// Dispatch on the `parallel` feature.
pub(crate) fn map_indexed<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        map_indexed_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_indexed_seq(n, f)
    }
}
