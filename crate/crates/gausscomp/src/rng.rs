//! Splittable counter-based random streams.
//!
//! Every sampling routine takes an explicit [`RngStream`]. A stream is a pair
//! (seed, stream id); child streams derived with [`RngStream::substream`] are
//! statistically independent of each other and of the parent, and the mapping
//! depends only on (seed, path of indices). Monte-Carlo drivers assign
//! substream `i` to trial `i`, so results never depend on how trials are
//! scheduled across workers.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    stream: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream { seed, stream: 0 }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Derive the child stream with the given index. Distinct indices give
    /// independent streams; the derivation is deterministic.
    pub fn substream(&self, index: u64) -> Self {
        let mixed = splitmix64(self.stream ^ splitmix64(index.wrapping_add(0x51_7c_c1_b7_27_22_0a_95)));
        RngStream {
            seed: self.seed,
            stream: mixed,
        }
    }

    /// Instantiate the generator for this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}
