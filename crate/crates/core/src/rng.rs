//! Purpose-tagged, position-addressable random streams.
//!
//! Stream format, version 1: a ChaCha8 keystream whose 256-bit key is
//! `seed (LE u64) ‖ purpose tag (LE u64) ‖ "cayley01"` followed by 8 zero
//! bytes, and whose 64-bit stream id is the trial index. The uniform value
//! for element `g` is built from the 64-bit word at position `g`:
//! `u_g = (word >> 11) · 2⁻⁵³`. Because every draw is addressed by
//! `(seed, purpose, trial, element)` it does not depend on evaluation order
//! or thread count.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub const STREAM_VERSION: u32 = 1;

const KEY_SALT: &[u8; 8] = b"cayley01";

/// What a stream is used for; distinct purposes never share draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Purpose {
    /// One-off generating sets from `sample_generators`.
    Sample,
    /// Monte Carlo trials; the stream id is the trial index.
    Trial,
    /// Uncoupled sweeps, where every grid point gets fresh draws.
    Uncoupled,
    /// Random instances in tests and tools.
    Instance,
}

impl Purpose {
    pub fn tag(self) -> u64 {
        match self {
            Purpose::Sample => 0x5341_4d50,
            Purpose::Trial => 0x5452_4941,
            Purpose::Uncoupled => 0x554e_4350,
            Purpose::Instance => 0x494e_5354,
        }
    }
}

/// A ChaCha8 stream positioned at the start of `(seed, purpose, stream)`.
pub fn stream(seed: u64, purpose: Purpose, stream: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&purpose.tag().to_le_bytes());
    key[16..24].copy_from_slice(KEY_SALT);
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(stream);
    rng
}

/// Converts a 64-bit word to a uniform in `[0, 1)` with 53 bits of precision.
#[inline]
pub fn unit_f64(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Fills `out` with the uniforms for elements `0..out.len()`.
pub fn fill_uniforms(seed: u64, purpose: Purpose, stream_id: u64, out: &mut [f64]) {
    let mut rng = stream(seed, purpose, stream_id);
    for u in out.iter_mut() {
        *u = unit_f64(rng.next_u64());
    }
}

/// The uniform for a single element, computed by seeking.
pub fn uniform_at(seed: u64, purpose: Purpose, stream_id: u64, index: u64) -> f64 {
    let mut rng = stream(seed, purpose, stream_id);
    // one u64 = two 32-bit words
    rng.set_word_pos(index as u128 * 2);
    unit_f64(rng.next_u64())
}
