//! Seeding and stream derivation.
//!
//! All randomness flows through ChaCha8, a counter-based generator with
//! 2^64 independent streams per key. A [`Seed`] is the pair
//! `(master, stream)`: the master seeds the key, the stream selects the
//! ChaCha stream, and the pair fully determines every draw. Child streams
//! are derived by mixing a salt into the stream id with a SplitMix64-style
//! finalizer; this is not cryptographic, it only has to keep distinct
//! derivation paths from colliding in practice.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Fully deterministic source of a random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Seed {
    pub master: u64,
    pub stream: u64,
}

impl Seed {
    /// Root seed: stream 0 of the given master.
    pub fn new(master: u64) -> Self {
        Seed { master, stream: 0 }
    }

    pub fn with_stream(master: u64, stream: u64) -> Self {
        Seed { master, stream }
    }

    /// Derive a child stream. Children with distinct salts (and the parent
    /// itself) are independent streams of the same master key.
    #[must_use]
    pub fn child(self, salt: u64) -> Self {
        Seed {
            master: self.master,
            stream: mix64(self.stream, salt),
        }
    }

    /// Instantiate the generator for this seed.
    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.stream);
        rng
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn mix64(stream: u64, salt: u64) -> u64 {
    splitmix64(stream ^ splitmix64(salt ^ 0xa076_1d64_78bd_642f))
}
