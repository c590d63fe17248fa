//! Seeded random streams.
//!
//! Every experiment derives its generators from a master seed. Trial `i`
//! uses stream `i` of the ChaCha8 generator keyed by the master seed, so
//! trials are independent of each other and of scheduling order.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> StreamRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn trial_rng(master_seed: u64, trial: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(trial);
    rng
}

/// A 64-bit seed for sub-purpose `stream` of a run seeded with `seed`, so a
/// graph, its function, and the algorithm's own sampling never share a stream.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    trial_rng(seed, stream).next_u64()
}
