//! Segment tree over (len, ind) pairs with lazy range max-update, bulk push,
//! and point queries.
//!
//! The lazy tag is itself a pending-max pair: max is a commutative idempotent
//! monoid, so tags merge by max and a full push simply folds every tag into
//! the leaves below it.

use crate::Error;

/// A (length, dictionary index) candidate. Larger `len` wins; length ties go
/// to the smaller `ind`, which keeps engine output deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchPair {
    pub len: u32,
    pub ind: i32,
}

impl MatchPair {
    /// Neutral element, doubling as "no match".
    pub const NEUTRAL: MatchPair = MatchPair { len: 0, ind: -1 };

    pub fn new(len: u32, ind: i32) -> Self {
        MatchPair { len, ind }
    }

    /// The preferred pair of the two.
    pub fn max_with(self, other: MatchPair) -> MatchPair {
        if other.len > self.len || (other.len == self.len && other.ind < self.ind) {
            other
        } else {
            self
        }
    }
}

/// Segment tree supporting `a[q] <- max(a[q], x)` over ranges, a full push,
/// and point reads. Point reads are O(log l) while updates are pending and
/// O(1) after a push with no later update.
#[derive(Debug, Clone)]
pub struct MaxSegmentTree {
    len: usize,
    cap: usize, // power of two >= len
    // nodes[1..cap): pending-max tags; nodes[cap..cap+cap): leaf values
    nodes: Vec<MatchPair>,
    dirty: bool,
}

impl MaxSegmentTree {
    /// Builds the tree over initial leaves in O(l).
    pub fn new(leaves: &[MatchPair]) -> Result<Self, Error> {
        if leaves.is_empty() {
            return Err(Error::SegtreeEmpty);
        }
        let len = leaves.len();
        let cap = len.next_power_of_two();
        let mut nodes = vec![MatchPair::NEUTRAL; 2 * cap];
        nodes[cap..cap + len].copy_from_slice(leaves);
        Ok(MaxSegmentTree {
            len,
            cap,
            nodes,
            dirty: false,
        })
    }

    /// Tree over `len` neutral leaves.
    pub fn neutral(len: usize) -> Result<Self, Error> {
        Self::new(&vec![MatchPair::NEUTRAL; len])
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Lazily applies `a[q] <- max(a[q], x)` for q in `[i, j]`, 1-based
    /// inclusive, in O(log l).
    pub fn update(&mut self, i: usize, j: usize, x: MatchPair) -> Result<(), Error> {
        if i < 1 || j < i || j > self.len {
            return Err(Error::SegtreeBounds {
                lo: i,
                hi: j,
                size: self.len,
            });
        }
        self.dirty = true;
        self.update_rec(1, 1, self.cap, i, j, x);
        Ok(())
    }

    fn update_rec(
        &mut self,
        node: usize,
        node_lo: usize,
        node_hi: usize,
        i: usize,
        j: usize,
        x: MatchPair,
    ) {
        if j < node_lo || node_hi < i {
            return;
        }
        if i <= node_lo && node_hi <= j {
            self.nodes[node] = self.nodes[node].max_with(x);
            return;
        }
        let mid = (node_lo + node_hi) / 2;
        self.update_rec(node * 2, node_lo, mid, i, j, x);
        self.update_rec(node * 2 + 1, mid + 1, node_hi, i, j, x);
    }

    /// Folds every pending tag down into the leaves, O(l).
    pub fn push(&mut self) {
        for node in 1..self.cap {
            let tag = self.nodes[node];
            if tag != MatchPair::NEUTRAL {
                self.nodes[node * 2] = self.nodes[node * 2].max_with(tag);
                self.nodes[node * 2 + 1] = self.nodes[node * 2 + 1].max_with(tag);
                self.nodes[node] = MatchPair::NEUTRAL;
            }
        }
        self.dirty = false;
    }

    /// Current logical `a[i]`, 1-based.
    pub fn request(&self, i: usize) -> Result<MatchPair, Error> {
        if i < 1 || i > self.len {
            return Err(Error::SegtreeBounds {
                lo: i,
                hi: i,
                size: self.len,
            });
        }
        let leaf = self.cap + i - 1;
        let mut acc = self.nodes[leaf];
        if self.dirty {
            let mut node = leaf / 2;
            while node >= 1 {
                acc = acc.max_with(self.nodes[node]);
                node /= 2;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn empty_is_an_error() {
        assert!(matches!(MaxSegmentTree::new(&[]), Err(Error::SegtreeEmpty)));
    }

    #[test]
    fn no_updates_returns_initial_values() {
        let mut st = MaxSegmentTree::neutral(2).unwrap();
        st.push();
        assert_eq!(st.request(1).unwrap(), MatchPair::NEUTRAL);

        let st = MaxSegmentTree::new(&[MatchPair::new(3, 2), MatchPair::new(1, 1)]).unwrap();
        assert_eq!(st.request(2).unwrap(), MatchPair::new(1, 1));
    }

    #[test]
    fn single_leaf_tree() {
        let mut st = MaxSegmentTree::new(&[MatchPair::NEUTRAL]).unwrap();
        st.update(1, 1, MatchPair::new(4, 2)).unwrap();
        st.push();
        assert_eq!(st.request(1).unwrap(), MatchPair::new(4, 2));
    }

    #[test]
    fn range_update_then_push() {
        let mut st = MaxSegmentTree::neutral(3).unwrap();
        st.update(1, 2, MatchPair::new(5, 1)).unwrap();
        st.push();
        assert_eq!(st.request(1).unwrap(), MatchPair::new(5, 1));
        assert_eq!(st.request(2).unwrap(), MatchPair::new(5, 1));
        assert_eq!(st.request(3).unwrap(), MatchPair::NEUTRAL);
    }

    #[test]
    fn neutral_update_is_invisible() {
        let mut st = MaxSegmentTree::new(&[MatchPair::new(2, 3)]).unwrap();
        st.update(1, 1, MatchPair::NEUTRAL).unwrap();
        st.push();
        assert_eq!(st.request(1).unwrap(), MatchPair::new(2, 3));
    }

    #[test]
    fn length_ties_prefer_smaller_index() {
        let mut st = MaxSegmentTree::neutral(3).unwrap();
        st.update(1, 3, MatchPair::new(2, 9)).unwrap();
        st.update(2, 2, MatchPair::new(2, 4)).unwrap();
        st.push();
        assert_eq!(st.request(2).unwrap(), MatchPair::new(2, 4));
        assert_eq!(st.request(1).unwrap(), MatchPair::new(2, 9));
    }

    #[test]
    fn request_reflects_pending_updates_before_push() {
        let mut st = MaxSegmentTree::neutral(8).unwrap();
        st.update(2, 7, MatchPair::new(3, 1)).unwrap();
        assert_eq!(st.request(5).unwrap(), MatchPair::new(3, 1));
        assert_eq!(st.request(1).unwrap(), MatchPair::NEUTRAL);
    }

    #[test]
    fn bounds_are_checked() {
        let mut st = MaxSegmentTree::neutral(4).unwrap();
        assert!(st.update(0, 2, MatchPair::NEUTRAL).is_err());
        assert!(st.update(3, 2, MatchPair::NEUTRAL).is_err());
        assert!(st.update(1, 5, MatchPair::NEUTRAL).is_err());
        assert!(st.request(0).is_err());
        assert!(st.request(5).is_err());
    }

    fn random_pair(rng: &mut impl Rng) -> MatchPair {
        MatchPair::new(rng.gen_range(0..6), rng.gen_range(1..10))
    }

    /// Differential test against a brute-force array under random
    /// update/push/request interleavings.
    #[test]
    fn agrees_with_brute_force_interleavings() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(42);
        for _ in 0..30 {
            let l = rng.gen_range(1..=300);
            let mut st = MaxSegmentTree::neutral(l).unwrap();
            let mut brute = vec![MatchPair::NEUTRAL; l];
            for _ in 0..400 {
                match rng.gen_range(0..10) {
                    0 => st.push(),
                    1..=5 => {
                        let i = rng.gen_range(1..=l);
                        let j = rng.gen_range(i..=l);
                        let x = random_pair(&mut rng);
                        st.update(i, j, x).unwrap();
                        for q in i..=j {
                            brute[q - 1] = brute[q - 1].max_with(x);
                        }
                    }
                    _ => {
                        let i = rng.gen_range(1..=l);
                        assert_eq!(st.request(i).unwrap(), brute[i - 1]);
                    }
                }
            }
            st.push();
            for i in 1..=l {
                assert_eq!(st.request(i).unwrap(), brute[i - 1]);
            }
        }
    }

    #[test]
    fn updates_are_idempotent_and_commute() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(9);
        let l = 64;
        let updates: Vec<(usize, usize, MatchPair)> = (0..40)
            .map(|_| {
                let i = rng.gen_range(1..=l);
                let j = rng.gen_range(i..=l);
                (i, j, random_pair(&mut rng))
            })
            .collect();

        let apply = |ups: &[(usize, usize, MatchPair)], twice: bool| {
            let mut st = MaxSegmentTree::neutral(l).unwrap();
            for &(i, j, x) in ups {
                st.update(i, j, x).unwrap();
                if twice {
                    st.update(i, j, x).unwrap();
                }
            }
            st.push();
            (1..=l).map(|i| st.request(i).unwrap()).collect::<Vec<_>>()
        };

        let base = apply(&updates, false);
        assert_eq!(base, apply(&updates, true), "idempotence");
        let mut reversed = updates.clone();
        reversed.reverse();
        assert_eq!(base, apply(&reversed, false), "commutativity");
    }
}
