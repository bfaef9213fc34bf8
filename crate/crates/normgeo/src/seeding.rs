//! Deterministic seeded RNG sub-streams.
//!
//! All randomness in the crate flows from a single `u64` seed. Independent
//! tasks derive their own sub-seed from a label so that adding a task never
//! perturbs the streams of existing ones.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derive a sub-seed for a named task from a base seed.
///
/// FNV-1a over the label bytes, mixed with the base seed. Inlined rather than
/// pulled from `std::hash` because `DefaultHasher` is not stable across
/// releases and reports must reproduce byte-for-byte.
pub fn substream_seed(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// A deterministic RNG for the given seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A deterministic RNG for a named sub-stream of the given seed.
pub fn substream(seed: u64, label: &str) -> ChaCha8Rng {
    rng_from_seed(substream_seed(seed, label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn substreams_are_stable_and_distinct() {
        // Frozen: a change here would silently break report reproducibility.
        assert_eq!(substream_seed(7, "suite.chain"), substream_seed(7, "suite.chain"));
        assert_ne!(substream_seed(7, "suite.chain"), substream_seed(8, "suite.chain"));
        assert_ne!(substream_seed(7, "suite.chain"), substream_seed(7, "suite.sip"));
    }

    #[test]
    fn rng_is_reproducible() {
        let a: f64 = substream(42, "x").random();
        let b: f64 = substream(42, "x").random();
        assert_eq!(a, b);
    }
}
