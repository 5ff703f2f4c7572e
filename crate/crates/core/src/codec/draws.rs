//! Frozen per-element randomness.
//!
//! Element `i` owns words `4i..4i+4` of a ChaCha20 stream keyed by a hash of
//! `(key, master_seed)`: the first 64-bit word gives `r_i`, the low bit of
//! the second gives the mode-II side coin. Draws are therefore addressable
//! by index and identical however the caller chunks or parallelizes them.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

use super::{Key, Side};

const WORDS_PER_ELEMENT: u128 = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct ElementDraws {
    pub r: Vec<f64>,
    pub side: Vec<Side>,
}

impl ElementDraws {
    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }
}

fn stream(key: &Key, master_seed: u64) -> ChaCha20Rng {
    let seed: [u8; 32] = Sha256::new()
        .chain_update(b"pab2g:element-draws")
        .chain_update(key.as_bytes())
        .chain_update(master_seed.to_le_bytes())
        .finalize()
        .into();
    ChaCha20Rng::from_seed(seed)
}

/// Maps 64 random bits to the open interval (0, 1) on a 2^-52 grid offset by half a step.
#[inline]
pub fn open_unit(bits: u64) -> f64 {
    ((bits >> 12) as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
}

fn next_draw(rng: &mut ChaCha20Rng) -> (f64, Side) {
    let r = open_unit(rng.next_u64());
    let side = if rng.next_u64() & 1 == 0 { Side::Left } else { Side::Right };
    (r, side)
}

/// Draws for elements `0..k`.
pub fn element_draws(key: &Key, master_seed: u64, k: usize) -> ElementDraws {
    let mut rng = stream(key, master_seed);
    let (r, side) = (0..k).map(|_| next_draw(&mut rng)).unzip();
    ElementDraws { r, side }
}

/// Draw for a single element, by random access.
pub fn element_draw(key: &Key, master_seed: u64, index: usize) -> (f64, Side) {
    let mut rng = stream(key, master_seed);
    rng.set_word_pos(index as u128 * WORDS_PER_ELEMENT);
    next_draw(&mut rng)
}
