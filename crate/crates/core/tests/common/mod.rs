//! Shared instance sampling for the integration suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use textcover::harness::{gen_planted, gen_random};
use textcover::instance::{Alphabet, Instance};

/// One suite instance: planted (guaranteed feasible) or fully random, with
/// n and m drawn up to the given caps.
pub fn sample_instance(seed: u64, max_n: usize, max_m: usize, planted: bool) -> Instance {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    if planted {
        let len_max = n.div_ceil(m).max(rng.gen_range(1..=8));
        gen_planted(n, m, 1, len_max, &Alphabet::binary(), rng.gen()).unwrap()
    } else {
        let len_max = rng.gen_range(1..=(n / 2 + 2).min(10));
        gen_random(n, m, 1, len_max, &Alphabet::binary(), rng.gen()).unwrap()
    }
}

/// The half-planted/half-random agreement suite.
pub fn agreement_suite(count: usize, max_n: usize, max_m: usize, base_seed: u64) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            sample_instance(
                textcover::harness::exec::cell_seed(base_seed, i as u64),
                max_n,
                max_m,
                i % 2 == 0,
            )
        })
        .collect()
}
