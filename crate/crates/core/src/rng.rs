//! Counter-based random streams.
//!
//! All randomness derives from one 64-bit seed. A `(stream, counter)` pair
//! selects an independent ChaCha stream, so sample `i` of a sweep draws the
//! same values whether it runs first, last, or on another thread.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream ids, one per randomized command.
pub mod streams {
    pub const GEN_HOM: u32 = 1;
    pub const SWEEP: u32 = 2;
    pub const TEST_FIXTURE: u32 = 15;
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Rng for `counter` within `stream` under `seed`.
pub fn derive(seed: u64, stream: u32, counter: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    let mut state = seed;
    for chunk in key.chunks_mut(8) {
        state = splitmix64(state);
        chunk.copy_from_slice(&state.to_le_bytes());
    }
    let mut rng = ChaCha8Rng::from_seed(key);
    // 24 bits of stream id, 40 bits of counter.
    rng.set_stream(((stream as u64) << 40) | (counter & ((1 << 40) - 1)));
    rng
}
