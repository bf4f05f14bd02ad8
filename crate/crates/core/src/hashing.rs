//! Rolling-hash fingerprints: prime selection, power/inverse-power tables,
//! prefix hashes, O(1) substring hashes, and lexicographic comparison by
//! binary search over the longest common prefix.
//!
//! The hash of a string u over a K-symbol alphabet is
//! `sum_i index(u_i) * K^(i-1) mod p` for a random prime p. Two prime modes
//! exist. Faithful mode samples uniformly from the first r primes, where r is
//! sized from the instance dimensions and the target error probability; it is
//! what the error-rate tests exercise, and it is limited to pools whose sieve
//! fits in memory. Fast mode (the default for engines) draws one random
//! ~61-bit probable prime, which gives strictly better collision bounds at a
//! fraction of the setup cost.

use crate::{Error, QueryLedger};
use rand::Rng;
use std::cmp::Ordering;
use std::sync::Mutex;

// ---------------------------------------------------------------------------
// primes
// ---------------------------------------------------------------------------

/// Sieving past this bound is refused; callers get an error telling them to
/// use fast mode instead.
const SIEVE_BOUND_CAP: u64 = 1_100_000_000;

/// Sizes the faithful prime pool: how many primes to sample from, and how
/// many hash comparisons that budget is meant to cover.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimeBudget {
    pub n: usize,
    pub m: usize,
    pub epsilon: f64,
}

/// ceil(log2 n), floored at 1 so budgets stay positive for n = 1.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 2 {
        1
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

impl PrimeBudget {
    pub fn new(n: usize, m: usize, epsilon: f64) -> Result<Self, Error> {
        if !(epsilon > 0.0 && epsilon <= 1.0) || !epsilon.is_finite() {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        Ok(PrimeBudget {
            n: n.max(1),
            m: m.max(1),
            epsilon,
        })
    }

    /// Comparison budget delta = m * 4 * ceil(log2 n)^2.
    pub fn comparison_budget(&self) -> u64 {
        let lg = ceil_log2(self.n) as u64;
        self.m as u64 * 4 * lg * lg
    }

    /// Pool size r = ceil(n * m * 4 * ceil(log2 n)^2 / epsilon).
    pub fn pool_size(&self) -> u64 {
        let raw = self.n as f64 * self.comparison_budget() as f64 / self.epsilon;
        raw.ceil() as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeMode {
    /// Sample uniformly from the first r primes of the budget.
    Faithful,
    /// Sample one uniform ~61-bit probable prime.
    Fast,
}

static PRIME_POOL: Mutex<Vec<u32>> = Mutex::new(Vec::new());

/// Rosser-style upper bound on the r-th prime, plus slack for tiny r.
fn sieve_bound(r: u64) -> Result<u64, Error> {
    if r < 6 {
        return Ok(15);
    }
    let rf = r as f64;
    let bound = rf * (rf.ln() + rf.ln().ln());
    if !bound.is_finite() || bound >= SIEVE_BOUND_CAP as f64 {
        return Err(Error::FaithfulPoolTooLarge {
            requested: r,
            bound: bound.min(u64::MAX as f64) as u64,
        });
    }
    Ok(bound.ceil() as u64 + 1)
}

// Odd-only bit-packed sieve of Eratosthenes.
fn sieve_primes(bound: usize) -> Vec<u32> {
    let half = bound.div_ceil(2); // odd number 2i+1 lives at index i
    let words = half / 64 + 1;
    let mut composite = vec![0u64; words];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= bound {
        if composite[i >> 6] & (1 << (i & 63)) == 0 {
            let p = 2 * i + 1;
            let mut j = (p * p - 1) / 2;
            while j < half {
                composite[j >> 6] |= 1 << (j & 63);
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = vec![2u32];
    for i in 1..half {
        if composite[i >> 6] & (1 << (i & 63)) == 0 {
            primes.push((2 * i + 1) as u32);
        }
    }
    primes
}

/// Makes sure the shared faithful pool holds at least `r` primes. Solves that
/// run many faithful instances should pre-warm with the largest r they need,
/// so the sieve runs once.
pub fn ensure_faithful_pool(r: u64) -> Result<(), Error> {
    let bound = sieve_bound(r)?;
    let mut pool = PRIME_POOL.lock().unwrap();
    if (pool.len() as u64) < r {
        *pool = sieve_primes(bound as usize);
        assert!(
            pool.len() as u64 >= r,
            "sieve bound {bound} produced only {} primes, need {r}",
            pool.len()
        );
    }
    Ok(())
}

/// The first `r` primes, for tests and diagnostics.
pub fn first_primes(r: u64) -> Result<Vec<u64>, Error> {
    ensure_faithful_pool(r)?;
    let pool = PRIME_POOL.lock().unwrap();
    Ok(pool[..r as usize].iter().map(|&p| p as u64).collect())
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

// Returns (base^exp mod p, multiplications performed).
fn modpow_counted(mut base: u64, mut exp: u64, p: u64) -> (u64, u64) {
    let mut acc = 1 % p;
    let mut steps = 0;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
            steps += 1;
        }
        base = mulmod(base, base, p);
        steps += 1;
        exp >>= 1;
    }
    (acc, steps)
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let (mut x, _) = modpow_counted(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniform probable prime in [2^60, 2^61): below 2^62 so every product of two
/// residues fits a 128-bit intermediate.
fn random_fast_prime(rng: &mut impl Rng) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 60..1u64 << 61) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// Draws the hashing prime. Faithful mode samples from the first r primes of
/// the budget (sieved once into a shared pool); fast mode ignores the budget
/// size and returns a random 61-bit prime.
pub fn choose_prime(
    budget: &PrimeBudget,
    mode: PrimeMode,
    rng: &mut impl Rng,
) -> Result<u64, Error> {
    match mode {
        PrimeMode::Fast => Ok(random_fast_prime(rng)),
        PrimeMode::Faithful => {
            let r = budget.pool_size();
            ensure_faithful_pool(r)?;
            let pool = PRIME_POOL.lock().unwrap();
            Ok(pool[rng.gen_range(0..r as usize)] as u64)
        }
    }
}

// ---------------------------------------------------------------------------
// hash context
// ---------------------------------------------------------------------------

/// Handle to a string registered in a [`HashContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StringId(usize);

/// A substring window over a registered string; `start` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrView {
    id: StringId,
    start: usize,
    len: usize,
}

impl StrView {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

struct Registered {
    symbols: Vec<u8>,
    // prefix[i] = hash of the first i symbols; prefix[0] = 0
    prefix: Vec<u64>,
}

/// Prime, power tables and per-string prefix hashes.
pub struct HashContext {
    p: u64,
    k: u64,
    // pow[i] = K^i mod p, inv[i] = K^-i mod p, for i = 0..=beta
    pow: Vec<u64>,
    inv: Vec<u64>,
    strings: Vec<Registered>,
    build_cost: u64,
}

impl HashContext {
    /// Computes power and inverse-power tables up to exponent `beta`.
    /// The base inverse comes from K^(p-2) mod p by square-and-multiply, so
    /// p must not divide K.
    pub fn new(k: usize, p: u64, beta: usize) -> Result<Self, Error> {
        let kp = k as u64 % p;
        if kp == 0 {
            return Err(Error::BaseNotInvertible {
                base: k as u64,
                prime: p,
            });
        }
        let beta = beta.max(1);
        let mut cost = 0u64;
        let mut pow = Vec::with_capacity(beta + 1);
        pow.push(1);
        for i in 1..=beta {
            pow.push(mulmod(pow[i - 1], kp, p));
        }
        cost += beta as u64;
        let (inv_k, steps) = modpow_counted(kp, p - 2, p);
        cost += steps;
        let mut inv = Vec::with_capacity(beta + 1);
        inv.push(1);
        for i in 1..=beta {
            inv.push(mulmod(inv[i - 1], inv_k, p));
        }
        cost += beta as u64;
        debug_assert!(mulmod(inv_k, kp, p) == 1 % p);
        Ok(HashContext {
            p,
            k: k as u64,
            pow,
            inv,
            strings: Vec::new(),
            build_cost: cost,
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Multiplications spent building the tables; engines add this to the
    /// ledger once.
    pub fn build_cost(&self) -> u64 {
        self.build_cost
    }

    /// K^(i-1) mod p for i = 1..=beta (the paper's power table layout).
    pub fn power(&self, i: usize) -> u64 {
        self.pow[i - 1]
    }

    /// K^-i mod p for i = 0..=beta.
    pub fn inverse_power(&self, i: usize) -> u64 {
        self.inv[i]
    }

    pub fn max_registered_len(&self) -> usize {
        self.pow.len() - 1
    }

    /// Stores prefix hashes (and the symbols, for final-character probes) of
    /// a string of alphabet indices. O(|u|).
    pub fn register(&mut self, symbols: &[u8]) -> Result<StringId, Error> {
        if symbols.len() > self.max_registered_len() {
            return Err(Error::PowerTableTooShort {
                covered: self.max_registered_len(),
                needed: symbols.len(),
            });
        }
        let mut prefix = Vec::with_capacity(symbols.len() + 1);
        prefix.push(0u64);
        for (i, &sym) in symbols.iter().enumerate() {
            if sym as u64 >= self.k {
                return Err(Error::SymbolOutsideAlphabet {
                    byte: sym,
                    offset: i,
                });
            }
            let term = mulmod(self.pow[i], sym as u64, self.p);
            prefix.push((prefix[i] + term) % self.p);
        }
        self.strings.push(Registered {
            symbols: symbols.to_vec(),
            prefix,
        });
        Ok(StringId(self.strings.len() - 1))
    }

    /// Hash of the prefix u[1..=i]; i = 0 gives 0.
    pub fn prefix_hash(&self, id: StringId, i: usize) -> u64 {
        self.strings[id.0].prefix[i]
    }

    /// Hash of u[i..=j] (1-based inclusive) in O(1). Equals the hash the
    /// standalone string u[i..=j] would get at registration time.
    pub fn substring_hash(&self, id: StringId, i: usize, j: usize) -> Result<u64, Error> {
        let len = self.strings[id.0].symbols.len();
        if i < 1 || j < i || j > len {
            return Err(Error::SubstringBounds { lo: i, hi: j, len });
        }
        let prefix = &self.strings[id.0].prefix;
        let diff = (prefix[j] + self.p - prefix[i - 1]) % self.p;
        Ok(mulmod(diff, self.inv[i - 1], self.p))
    }

    /// View over the whole registered string.
    pub fn whole(&self, id: StringId) -> StrView {
        StrView {
            id,
            start: 1,
            len: self.strings[id.0].symbols.len(),
        }
    }

    /// Validated substring view, 1-based inclusive start.
    pub fn view(&self, id: StringId, start: usize, len: usize) -> Result<StrView, Error> {
        let total = self.strings[id.0].symbols.len();
        if start < 1 || len < 1 || start + len - 1 > total {
            return Err(Error::SubstringBounds {
                lo: start,
                hi: start + len - 1,
                len: total,
            });
        }
        Ok(StrView { id, start, len })
    }

    fn view_prefix_hash(&self, v: StrView, x: usize) -> u64 {
        debug_assert!(x >= 1 && x <= v.len);
        self.substring_hash(v.id, v.start, v.start + x - 1).unwrap()
    }

    fn view_symbol(&self, v: StrView, pos: usize) -> u8 {
        self.strings[v.id.0].symbols[v.start + pos - 2]
    }

    /// Lexicographic comparison of two views via binary search for the
    /// longest common prefix over prefix hashes, then one direct symbol
    /// probe. O(log min(|u|, |v|)) hash evaluations, all charged to the
    /// ledger. A hash collision can produce a wrong answer; the prime budget
    /// bounds how often.
    pub fn compare(&self, a: StrView, b: StrView, ledger: &mut QueryLedger) -> Ordering {
        self.compare_with_lcp(a, b, ledger).0
    }

    /// Like [`Self::compare`] but also reports the common-prefix length the
    /// binary search settled on.
    pub fn compare_with_lcp(
        &self,
        a: StrView,
        b: StrView,
        ledger: &mut QueryLedger,
    ) -> (Ordering, usize) {
        ledger.compare_calls += 1;
        let min = a.len.min(b.len);
        // the empty prefix always agrees; search the last agreeing length
        let (mut lo, mut hi) = (0usize, min);
        while lo < hi {
            let x = (lo + hi).div_ceil(2);
            ledger.hash_evals += 2;
            if self.view_prefix_hash(a, x) == self.view_prefix_hash(b, x) {
                lo = x;
            } else {
                hi = x - 1;
            }
        }
        let lcp = lo;
        if lcp == min {
            return (a.len.cmp(&b.len), lcp);
        }
        ledger.character_queries += 2;
        let ca = self.view_symbol(a, lcp + 1);
        let cb = self.view_symbol(b, lcp + 1);
        // equal symbols here mean the search was misled by a collision;
        // Equal is then a modeled error, bounded by the prime budget
        (ca.cmp(&cb), lcp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    /// Trial-division oracle, independent of the sieve.
    fn nth_prime_naive(n: usize) -> u64 {
        let mut found = 0;
        let mut candidate = 1u64;
        while found < n {
            candidate += 1;
            if (2..=candidate.isqrt()).all(|d| !candidate.is_multiple_of(d)) {
                found += 1;
            }
        }
        candidate
    }

    #[test]
    fn budget_examples() {
        let b = PrimeBudget::new(4, 1, 0.5).unwrap();
        assert_eq!(b.pool_size(), 128);
        let b = PrimeBudget::new(1, 1, 1.0).unwrap();
        assert_eq!(b.pool_size(), 4);
        assert!(PrimeBudget::new(4, 1, 0.0).is_err());
        assert!(PrimeBudget::new(4, 1, 1.5).is_err());
    }

    #[test]
    fn faithful_prime_lies_in_pool() {
        let budget = PrimeBudget::new(4, 1, 0.5).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        // the 128th prime is 719 by trial division
        assert_eq!(nth_prime_naive(128), 719);
        for _ in 0..50 {
            let p = choose_prime(&budget, PrimeMode::Faithful, &mut rng).unwrap();
            assert!(p <= 719 && is_prime(p));
        }
        let tiny = PrimeBudget::new(1, 1, 1.0).unwrap();
        for _ in 0..20 {
            let p = choose_prime(&tiny, PrimeMode::Faithful, &mut rng).unwrap();
            assert!([2, 3, 5, 7].contains(&p));
        }
    }

    #[test]
    fn first_primes_match_trial_division() {
        let primes = first_primes(40).unwrap();
        for (i, &p) in primes.iter().enumerate() {
            assert_eq!(p, nth_prime_naive(i + 1));
        }
    }

    #[test]
    fn seeded_choice_is_deterministic() {
        let budget = PrimeBudget::new(64, 4, 0.25).unwrap();
        for mode in [PrimeMode::Faithful, PrimeMode::Fast] {
            let mut a = ChaCha12Rng::seed_from_u64(99);
            let mut b = ChaCha12Rng::seed_from_u64(99);
            assert_eq!(
                choose_prime(&budget, mode, &mut a).unwrap(),
                choose_prime(&budget, mode, &mut b).unwrap()
            );
        }
    }

    #[test]
    fn oversized_faithful_pool_is_refused() {
        let budget = PrimeBudget::new(1 << 20, 1 << 20, 0.000_001).unwrap();
        let err = choose_prime(
            &budget,
            PrimeMode::Faithful,
            &mut ChaCha12Rng::seed_from_u64(0),
        )
        .unwrap_err();
        assert!(matches!(err, Error::FaithfulPoolTooLarge { .. }));
    }

    #[test]
    fn fast_primes_are_61_bit_primes() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        let budget = PrimeBudget::new(1, 1, 1.0).unwrap();
        for _ in 0..5 {
            let p = choose_prime(&budget, PrimeMode::Fast, &mut rng).unwrap();
            assert!(((1 << 60)..(1 << 61)).contains(&p));
            assert!(is_prime(p));
        }
    }

    #[test]
    fn power_tables_match_hand_computation() {
        let ctx = HashContext::new(2, 7, 4).unwrap();
        assert_eq!(
            (1..=4).map(|i| ctx.power(i)).collect::<Vec<_>>(),
            vec![1, 2, 4, 1]
        );
        assert_eq!(
            (0..=3).map(|i| ctx.inverse_power(i)).collect::<Vec<_>>(),
            vec![1, 4, 2, 1]
        );

        let ctx = HashContext::new(2, 5, 1).unwrap();
        assert_eq!(ctx.power(1), 1);
        assert_eq!(ctx.inverse_power(0), 1);
        assert_eq!(ctx.inverse_power(1), 3); // 2 * 3 = 6 = 1 mod 5
    }

    #[test]
    fn inverse_table_invariant() {
        for (k, p, beta) in [(2usize, 7u64, 16usize), (4, 13, 9), (26, 1_000_000_007, 40)] {
            let ctx = HashContext::new(k, p, beta).unwrap();
            for i in 0..beta {
                assert_eq!(mulmod(ctx.inverse_power(i), ctx.power(i + 1), p), 1);
            }
        }
    }

    #[test]
    fn base_divisible_by_prime_is_rejected() {
        assert!(matches!(
            HashContext::new(2, 2, 4),
            Err(Error::BaseNotInvertible { .. })
        ));
        assert!(matches!(
            HashContext::new(4, 2, 4),
            Err(Error::BaseNotInvertible { .. })
        ));
        // p <= K but coprime is fine
        assert!(HashContext::new(4, 3, 4).is_ok());
    }

    #[test]
    fn prefix_hashes_match_definition() {
        let mut ctx = HashContext::new(2, 7, 8).unwrap();
        let id = ctx.register(&[1, 1]).unwrap();
        assert_eq!(
            (0..=2).map(|i| ctx.prefix_hash(id, i)).collect::<Vec<_>>(),
            vec![0, 1, 3]
        );

        let zeros = ctx.register(&[0, 0, 0, 0]).unwrap();
        assert!((0..=4).all(|i| ctx.prefix_hash(zeros, i) == 0));

        let one = ctx.register(&[1]).unwrap();
        assert_eq!(ctx.prefix_hash(one, 1), 1);
    }

    #[test]
    fn register_checks_symbols_and_table_length() {
        let mut ctx = HashContext::new(2, 7, 4).unwrap();
        assert!(matches!(
            ctx.register(&[0, 2, 1]),
            Err(Error::SymbolOutsideAlphabet { byte: 2, offset: 1 })
        ));
        assert!(matches!(
            ctx.register(&[0; 5]),
            Err(Error::PowerTableTooShort { .. })
        ));
    }

    #[test]
    fn substring_hash_examples() {
        let mut ctx = HashContext::new(2, 7, 8).unwrap();
        let u = ctx.register(&[1, 1]).unwrap();
        let single = ctx.register(&[1]).unwrap();
        // (3 - 1) * inv(1) = 2 * 4 mod 7 = 1 = hash("1")
        assert_eq!(ctx.substring_hash(u, 2, 2).unwrap(), 1);
        assert_eq!(
            ctx.substring_hash(u, 2, 2).unwrap(),
            ctx.prefix_hash(single, 1)
        );
        // whole-string case
        assert_eq!(ctx.substring_hash(u, 1, 2).unwrap(), ctx.prefix_hash(u, 2));

        let v = ctx.register(&[1, 0]).unwrap();
        let zero = ctx.register(&[0]).unwrap();
        assert_eq!(ctx.substring_hash(v, 2, 2).unwrap(), 0);
        assert_eq!(
            ctx.substring_hash(v, 2, 2).unwrap(),
            ctx.prefix_hash(zero, 1)
        );

        assert!(ctx.substring_hash(u, 0, 1).is_err());
        assert!(ctx.substring_hash(u, 2, 1).is_err());
        assert!(ctx.substring_hash(u, 1, 3).is_err());
    }

    #[test]
    fn compare_examples() {
        let mut ctx = HashContext::new(4, 1_000_000_007, 16).unwrap();
        let mut ledger = QueryLedger::new();
        let ab = ctx.register(&[0, 1]).unwrap();
        let ab2 = ctx.register(&[0, 1]).unwrap();
        let aba = ctx.register(&[0, 1, 0]).unwrap();
        let zero_one = ctx.register(&[0, 1]).unwrap();
        let one_zero = ctx.register(&[1, 0]).unwrap();

        assert_eq!(
            ctx.compare(ctx.whole(zero_one), ctx.whole(one_zero), &mut ledger),
            Ordering::Less
        );
        assert_eq!(
            ctx.compare(ctx.whole(ab), ctx.whole(ab2), &mut ledger),
            Ordering::Equal
        );
        assert_eq!(
            ctx.compare(ctx.whole(aba), ctx.whole(ab), &mut ledger),
            Ordering::Greater
        );
        assert_eq!(ledger.compare_calls, 3);
        assert!(ledger.hash_evals > 0);
    }

    #[test]
    fn compare_works_on_substring_views() {
        let mut ctx = HashContext::new(2, (1 << 61) - 1, 64).unwrap();
        let text = ctx.register(&[0, 1, 1, 0, 1, 1, 0]).unwrap();
        let pat = ctx.register(&[1, 1, 0]).unwrap();
        let mut ledger = QueryLedger::new();
        let view = ctx.view(text, 2, 3).unwrap(); // "110"
        assert_eq!(
            ctx.compare(view, ctx.whole(pat), &mut ledger),
            Ordering::Equal
        );
        let view = ctx.view(text, 3, 3).unwrap(); // "101"
        assert_eq!(
            ctx.compare(view, ctx.whole(pat), &mut ledger),
            Ordering::Less
        );
    }

    #[test]
    fn compare_agrees_with_direct_comparison_under_fast_prime() {
        let mut rng = ChaCha12Rng::seed_from_u64(123);
        let p = random_fast_prime(&mut rng);
        let mut ctx = HashContext::new(2, p, 512).unwrap();
        let mut ledger = QueryLedger::new();
        for _ in 0..2000 {
            let la = rng.gen_range(1..=512);
            let lb = rng.gen_range(1..=512);
            // b starts as a prefix copy of a so long shared prefixes are common
            let a: Vec<u8> = (0..la).map(|_| rng.gen_range(0..2)).collect();
            let mut b: Vec<u8> = a.iter().take(lb).copied().collect();
            while b.len() < lb {
                b.push(rng.gen_range(0..2));
            }
            if rng.gen_bool(0.5) {
                let flip = rng.gen_range(0..lb);
                b[flip] ^= 1;
            }
            let ia = ctx.register(&a).unwrap();
            let ib = ctx.register(&b).unwrap();
            let (ord, lcp) = ctx.compare_with_lcp(ctx.whole(ia), ctx.whole(ib), &mut ledger);
            assert_eq!(ord, a.cmp(&b), "{a:?} vs {b:?}");
            let true_lcp = a.iter().zip(&b).take_while(|(x, y)| x == y).count();
            assert_eq!(lcp, true_lcp, "collision-free lcp must be exact");
        }
    }

    proptest! {
        /// Substring hashes equal the registration-time hash of the
        /// standalone substring, for every window.
        #[test]
        fn prefix_decomposition(sym in proptest::collection::vec(0u8..2, 1..256), seed in any::<u64>()) {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let p = random_fast_prime(&mut rng);
            let mut ctx = HashContext::new(2, p, 256).unwrap();
            let id = ctx.register(&sym).unwrap();
            let i = rng.gen_range(1..=sym.len());
            let j = rng.gen_range(i..=sym.len());
            let standalone = ctx.register(&sym[i - 1..j]).unwrap();
            prop_assert_eq!(
                ctx.substring_hash(id, i, j).unwrap(),
                ctx.prefix_hash(standalone, j - i + 1)
            );
        }
    }
}
