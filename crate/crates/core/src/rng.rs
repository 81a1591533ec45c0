//! Pinned deterministic pseudorandom generator.
//!
//! Every sampled artifact in this crate (instances, vertex picks, restart
//! states, Monte Carlo trials) is driven by SplitMix64, the 64-bit
//! counter-based generator of Steele, Lea and Flood ("Fast splittable
//! pseudorandom number generators", OOPSLA 2014). The state transition is
//! fixed here and must never change: reproducibility of generated instances
//! across versions and platforms depends on it.
//!
//! State update: `state += 0x9E3779B97F4A7C15` per draw, output is the
//! finalizer `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
//! z *= 0x94D049BB133111EB; z ^= z >> 31` applied to the new state.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 stream seeded with a 64-bit value.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Next 64 uniform bits.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform double in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform index in `0..n` by reduction modulo `n`.
    ///
    /// The modulo bias is below 2^-50 for every `n` used in this crate; the
    /// scheme is part of the pinned sampling contract.
    pub fn next_below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform bit.
    pub fn next_bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

/// Seed of an independent substream, e.g. one per work group.
///
/// Defined as `seed XOR (index + 1) * GOLDEN_GAMMA` (wrapping); documented
/// so that concurrent and sequential executions agree.
pub fn substream_seed(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)
}
