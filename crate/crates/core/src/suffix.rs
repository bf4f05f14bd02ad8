//! Suffix array construction by induced sorting (SA-IS), linear in the text
//! length. A naive sort-based builder is kept alongside for differential
//! testing.

use crate::Error;

/// Lexicographic order of all suffixes of a text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArray {
    // positions[r] is the 1-based start of the suffix with rank r+1
    positions: Vec<u32>,
}

impl SuffixArray {
    /// Number of suffixes (= text length).
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// 1-based start position of the suffix with 1-based rank.
    pub fn at(&self, rank: usize) -> usize {
        self.positions[rank - 1] as usize
    }

    /// All start positions in rank order, 1-based.
    pub fn as_slice(&self) -> &[u32] {
        &self.positions
    }
}

/// Builds the suffix array of `text` (symbols are small unsigned values).
///
/// An implicit terminal symbol smaller than the whole alphabet is appended
/// internally and stripped from the output.
pub fn suffix_array(text: &[u8]) -> Result<SuffixArray, Error> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    let mut s: Vec<u32> = Vec::with_capacity(text.len() + 1);
    s.extend(text.iter().map(|&c| c as u32 + 1));
    s.push(0); // sentinel
    let k = *s.iter().max().unwrap() as usize + 1;
    let sa = sais(&s, k);
    // sa[0] is the sentinel suffix; drop it and shift to 1-based
    let positions = sa[1..].iter().map(|&p| p as u32 + 1).collect();
    Ok(SuffixArray { positions })
}

/// O(n^2 log n) reference builder: sort suffix start indices by slice order.
pub fn naive_suffix_array(text: &[u8]) -> Result<SuffixArray, Error> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    let mut idx: Vec<u32> = (1..=text.len() as u32).collect();
    idx.sort_by(|&a, &b| text[a as usize - 1..].cmp(&text[b as usize - 1..]));
    Ok(SuffixArray { positions: idx })
}

const EMPTY: usize = usize::MAX;

// s ends with a unique smallest sentinel; values in 0..k
fn sais(s: &[u32], k: usize) -> Vec<usize> {
    let n = s.len();
    if n == 1 {
        return vec![0];
    }
    if n == 2 {
        return vec![1, 0]; // sentinel suffix first
    }

    // S/L classification: last (sentinel) is S-type
    let mut is_s = vec![false; n];
    is_s[n - 1] = true;
    for i in (0..n - 1).rev() {
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && is_s[i] && !is_s[i - 1];

    let mut bucket = vec![0usize; k];
    for &c in s {
        bucket[c as usize] += 1;
    }
    let bucket_tails = || {
        let mut tails = vec![0usize; k];
        let mut sum = 0;
        for c in 0..k {
            sum += bucket[c];
            tails[c] = sum;
        }
        tails
    };
    let bucket_heads = || {
        let mut heads = vec![0usize; k];
        let mut sum = 0;
        for c in 0..k {
            heads[c] = sum;
            sum += bucket[c];
        }
        heads
    };

    let induce = |sa: &mut [usize]| {
        // L-type left to right from bucket heads
        let mut heads = bucket_heads();
        for i in 0..n {
            let j = sa[i];
            if j != EMPTY && j > 0 && !is_s[j - 1] {
                let c = s[j - 1] as usize;
                sa[heads[c]] = j - 1;
                heads[c] += 1;
            }
        }
        // S-type right to left from bucket tails
        let mut tails = bucket_tails();
        for i in (0..n).rev() {
            let j = sa[i];
            if j != EMPTY && j > 0 && is_s[j - 1] {
                let c = s[j - 1] as usize;
                tails[c] -= 1;
                sa[tails[c]] = j - 1;
            }
        }
    };

    let lms_positions: Vec<usize> = (1..n).filter(|&i| is_lms(i)).collect();

    // First pass: rough-place LMS suffixes, induce to sort LMS substrings.
    let mut sa = vec![EMPTY; n];
    {
        let mut tails = bucket_tails();
        for &p in &lms_positions {
            let c = s[p] as usize;
            tails[c] -= 1;
            sa[tails[c]] = p;
        }
    }
    induce(&mut sa);

    // Name LMS substrings in their now-sorted order.
    let mut name_of = vec![EMPTY; n];
    let mut name = 0usize;
    let mut prev = EMPTY;
    for &p in sa.iter().filter(|&&p| p != EMPTY && is_lms(p)) {
        if prev != EMPTY && !lms_substr_equal(s, &is_s, prev, p) {
            name += 1;
        }
        name_of[p] = name;
        prev = p;
    }
    let num_names = name + 1;

    // Sorted LMS suffix order, recursing when substrings repeat.
    let lms_sorted: Vec<usize> = if num_names == lms_positions.len() {
        let mut order = vec![0usize; lms_positions.len()];
        for &p in &lms_positions {
            order[name_of[p]] = p;
        }
        order
    } else {
        let reduced: Vec<u32> = lms_positions.iter().map(|&p| name_of[p] as u32).collect();
        // reduced ends with the sentinel's unique minimal name, so it is a
        // valid input for the recursion
        let sub = sais(&reduced, num_names);
        sub.iter().map(|&ri| lms_positions[ri]).collect()
    };

    // Final pass: place sorted LMS suffixes deepest-first, induce the rest.
    let mut sa = vec![EMPTY; n];
    {
        let mut tails = bucket_tails();
        for &p in lms_sorted.iter().rev() {
            let c = s[p] as usize;
            tails[c] -= 1;
            sa[tails[c]] = p;
        }
    }
    induce(&mut sa);
    sa
}

fn lms_substr_equal(s: &[u32], is_s: &[bool], a: usize, b: usize) -> bool {
    let n = s.len();
    let is_lms = |i: usize| i > 0 && is_s[i] && !is_s[i - 1];
    let mut i = 0;
    loop {
        if s[a + i] != s[b + i] || is_s[a + i] != is_s[b + i] {
            return false;
        }
        if i > 0 {
            let la = is_lms(a + i);
            let lb = is_lms(b + i);
            if la && lb {
                return true;
            }
            if la != lb {
                return false;
            }
        }
        i += 1;
        if a + i >= n || b + i >= n {
            // only the sentinel suffix can run off the end, and it is unique
            return false;
        }
    }
}
