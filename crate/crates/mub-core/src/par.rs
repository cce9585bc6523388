//! Data-parallel loop helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers hand work to rayon;
//! without it they run plain loops. Results are bit-identical either way:
//! parallel regions only fill independent outputs, and any order-sensitive
//! floating-point reduction is done sequentially by the caller.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// True when built with the rayon-backed `parallel` feature.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Work items below this count stay on the calling thread.
pub(crate) const MIN_PAR_ITEMS: usize = 8;

/// Computes `f(0), …, f(n-1)` into a vector, in index order.
pub(crate) fn map_indexed<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if n >= MIN_PAR_ITEMS {
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Splits `data` into consecutive chunks of `chunk` elements and calls
/// `f(start_index, chunk)` on each.
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    debug_assert!(chunk > 0);
    #[cfg(feature = "parallel")]
    if data.len() >= MIN_PAR_ITEMS * chunk {
        data.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, c)| f(i * chunk, c));
        return;
    }
    let mut start = 0;
    for c in data.chunks_mut(chunk) {
        let len = c.len();
        f(start, c);
        start += len;
    }
}
