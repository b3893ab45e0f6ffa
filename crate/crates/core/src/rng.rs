//! Seeded random streams.
//!
//! Every randomized operation takes an explicit `u64` seed. Work item `i` of a
//! run draws from ChaCha stream `i` under that seed, so results do not depend
//! on how trials are scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// The generator for work item `stream` of a run seeded with `seed`.
pub fn stream(seed: u64, stream: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Maps trials `0..trials` through `f` with one stream per trial, in parallel,
/// returning results in trial order.
pub fn par_trials<T, F>(seed: u64, trials: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut StreamRng) -> T + Sync,
{
    use rayon::prelude::*;
    (0..trials)
        .into_par_iter()
        .map(|i| f(i, &mut stream(seed, i as u64)))
        .collect()
}
