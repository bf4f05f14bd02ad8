//! Batch execution for independent cells: data-parallel with rayon when the
//! `parallel` feature is on, plain iteration otherwise. Results always come
//! back in input order, so the two paths are interchangeable.

/// Maps `f` over the batch, in parallel when built with the `parallel`
/// feature.
#[cfg(feature = "parallel")]
pub fn map_batch<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_batch<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    map_batch_sequential(items, f)
}

/// Always-sequential variant, kept for benchmark comparisons against the
/// parallel path.
pub fn map_batch_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Derives a per-cell seed from a base seed, splitmix64-style, so cells stay
/// independent and the batch result does not depend on execution order.
pub fn cell_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree_in_order() {
        let items: Vec<u64> = (0..257).collect();
        let f = |x: &u64| x.wrapping_mul(2654435761).rotate_left(9);
        assert_eq!(map_batch(&items, f), map_batch_sequential(&items, f));
    }

    #[test]
    fn cell_seeds_are_distinct() {
        let mut seeds: Vec<u64> = (0..4096).map(|i| cell_seed(42, i)).collect();
        seeds.sort_unstable();
        seeds.dedup();
        assert_eq!(seeds.len(), 4096);
    }
}
