//! Leftmost/rightmost binary search over suffix-array ranks, shared by the
//! classical and quantum engines so both get the same boundary behaviour.

use std::cmp::Ordering;

/// Finds the maximal contiguous rank range `[low, high]` (1-based) on which
/// `cmp` answers `Equal`, assuming `cmp` is monotone non-decreasing over
/// ranks. Returns `None` when no rank compares equal. Both passes scan the
/// full `[1, n]` range, so the number of comparisons per pass is
/// `floor(log2 n) + 1` regardless of the outcome.
pub(crate) fn equal_rank_range<E>(
    n: usize,
    mut cmp: impl FnMut(usize) -> Result<Ordering, E>,
) -> Result<Option<(usize, usize)>, E> {
    let mut low = None;
    let (mut lo, mut hi) = (1usize, n);
    while lo <= hi {
        let mid = (lo + hi) / 2;
        match cmp(mid)? {
            Ordering::Equal => {
                low = Some(mid);
                hi = mid - 1;
            }
            Ordering::Less => lo = mid + 1,
            Ordering::Greater => hi = mid - 1,
        }
    }
    let Some(low) = low else { return Ok(None) };

    let mut high = low;
    let (mut lo, mut hi) = (1usize, n);
    while lo <= hi {
        let mid = (lo + hi) / 2;
        match cmp(mid)? {
            Ordering::Equal => {
                high = high.max(mid);
                lo = mid + 1;
            }
            Ordering::Less => lo = mid + 1,
            Ordering::Greater => hi = mid - 1,
        }
    }
    Ok(Some((low, high)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::convert::Infallible;

    fn range_of(values: &[i32], needle: i32) -> Option<(usize, usize)> {
        let res: Result<_, Infallible> =
            equal_rank_range(values.len(), |rank| Ok(values[rank - 1].cmp(&needle)));
        res.unwrap()
    }

    #[test]
    fn finds_equal_blocks() {
        assert_eq!(range_of(&[1, 2, 2, 2, 3], 2), Some((2, 4)));
        assert_eq!(range_of(&[2, 2], 2), Some((1, 2)));
        assert_eq!(range_of(&[1, 3], 2), None);
        assert_eq!(range_of(&[2], 2), Some((1, 1)));
        assert_eq!(range_of(&[1], 2), None);
        assert_eq!(range_of(&[3], 2), None);
    }

    #[test]
    fn boundary_blocks() {
        assert_eq!(range_of(&[2, 2, 3, 4], 2), Some((1, 2)));
        assert_eq!(range_of(&[0, 1, 2, 2], 2), Some((3, 4)));
        let all = vec![5; 17];
        assert_eq!(range_of(&all, 5), Some((1, 17)));
    }

    #[test]
    fn comparison_count_stays_within_one_of_log() {
        for n in [1usize, 2, 3, 7, 8, 9, 1024] {
            let values: Vec<i32> = (0..n as i32).collect();
            for needle in [-1, n as i32 / 2, n as i32 + 1] {
                let mut calls = 0usize;
                let _ = equal_rank_range(n, |rank| -> Result<_, Infallible> {
                    calls += 1;
                    Ok(values[rank - 1].cmp(&needle))
                });
                let depth = n.ilog2() as usize + 1;
                let passes = if (0..n as i32).contains(&needle) {
                    2
                } else {
                    1
                };
                assert!(
                    calls <= passes * depth && calls + passes >= passes * depth,
                    "n={n} needle={needle}: {calls} calls vs depth {depth}"
                );
            }
        }
    }
}
