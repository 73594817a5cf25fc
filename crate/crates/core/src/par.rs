//! Row-parallel helpers; fall back to sequential loops without the `parallel` feature.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Calls `f(y, row)` for each `width`-long row of `out`.
pub(crate) fn for_each_row<T, F>(out: &mut [T], width: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    out.par_chunks_mut(width).enumerate().for_each(|(y, row)| f(y, row));
    #[cfg(not(feature = "parallel"))]
    out.chunks_mut(width).enumerate().for_each(|(y, row)| f(y, row));
}
