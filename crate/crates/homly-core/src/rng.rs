//! Reproducible 64-bit pseudo-random source.
//!
//! This is the SplitMix64 mixer, written out in full so the streams are
//! reproducible from the algorithm alone, independent of any library:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15                  (wrapping)
//! z  = state
//! z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9       (wrapping)
//! z ^= z >> 27;  z *= 0x94D049BB133111EB       (wrapping)
//! output = z ^ (z >> 31)
//! ```
//!
//! Bounded draws use plain modulo (`next_u64() % bound`); the tiny modulo
//! bias is irrelevant for generator purposes and keeps the specification
//! one line long.

/// SplitMix64 generator state.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish index in `0..bound` (`bound` must be nonzero).
    pub fn next_index(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "next_index bound must be nonzero");
        (self.next_u64() % bound as u64) as usize
    }

    /// Pick an element of a nonempty slice.
    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.next_index(items.len())]
    }
}
