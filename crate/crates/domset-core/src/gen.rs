//! Deterministic random graph generation.
//!
//! The PRNG is SplitMix64 — a fixed 64-bit shift-multiply generator with
//! published constants — so identical `(n, seed)` inputs produce
//! bit-identical graphs on every platform, with no external dependencies.

use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::graph::Graph;

/// SplitMix64 pseudo-random generator.
///
/// State advances by the golden-ratio increment `0x9E3779B97F4A7C15`; each
/// output mixes the state with the published xor-shift-multiply constants
/// `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    #[must_use]
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Next 64 uniform bits.
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `[0, bound)` by reduction modulo `bound`.
    /// The slight modulo bias is irrelevant for test-instance generation and
    /// keeps the mapping platform-identical.
    #[inline]
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    /// In-place Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Errors for [`random_cubic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomCubicError {
    /// Cubic graphs need `3n` even, so `n` must be even.
    OddOrder,
    /// No cubic graph exists below order 4.
    OrderTooSmall,
    /// Order above the supported maximum.
    OrderTooLarge,
}

impl core::fmt::Display for RandomCubicError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RandomCubicError::OddOrder => write!(f, "cubic graphs require an even order"),
            RandomCubicError::OrderTooSmall => write!(f, "cubic graphs require order >= 4"),
            RandomCubicError::OrderTooLarge => {
                write!(f, "order exceeds supported maximum {}", crate::bits::MAX_ORDER)
            }
        }
    }
}

/// Random cubic graph by the pairing model: three stubs per vertex are
/// shuffled and paired; samples with loops or duplicate edges are rejected
/// and redrawn from the same stream. With `require_connected`,
/// disconnected samples are rejected too. Deterministic in `(n, seed)`.
pub fn random_cubic(
    n: usize,
    seed: u64,
    require_connected: bool,
) -> Result<Graph, RandomCubicError> {
    if n < 4 {
        return Err(RandomCubicError::OrderTooSmall);
    }
    if n % 2 != 0 {
        return Err(RandomCubicError::OddOrder);
    }
    if n > crate::bits::MAX_ORDER {
        return Err(RandomCubicError::OrderTooLarge);
    }
    let mut rng = SplitMix64::new(seed);
    let mut stubs: Vec<u16> = Vec::with_capacity(3 * n);
    loop {
        stubs.clear();
        for v in 0..n as u16 {
            stubs.extend_from_slice(&[v, v, v]);
        }
        rng.shuffle(&mut stubs);
        if let Some(adj) = pair_stubs(n, &stubs) {
            let g = Graph::from_rows_unchecked(adj);
            if !require_connected || g.is_connected() {
                return Ok(g);
            }
        }
    }
}

/// Pairs consecutive stubs into edges; `None` on a loop or duplicate edge.
fn pair_stubs(n: usize, stubs: &[u16]) -> Option<Vec<VertexSet>> {
    let mut adj = alloc::vec![VertexSet::empty(n); n];
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v || adj[u as usize].contains(v) {
            return None;
        }
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    }
    Some(adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::write_graph6;

    #[test]
    fn splitmix_reference_values() {
        // Published reference vector: seed 0 emits 0xe220a8397b1dcdaf
        // first. The seed-1234567 values were frozen from an independent
        // implementation of the same constants.
        let mut zero = SplitMix64::new(0);
        assert_eq!(zero.next_u64(), 0xe220_a839_7b1d_cdaf);
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 0x599e_d017_fb08_fc85);
        assert_eq!(rng.next_u64(), 0x2c73_f084_5854_0fa5);
        assert_eq!(rng.next_u64(), 0x883e_bce5_a3f2_7c77);
    }

    #[test]
    fn order_four_is_complete() {
        for seed in 0..8 {
            let g = random_cubic(4, seed, false).unwrap();
            assert_eq!(g.edge_count(), 6);
        }
    }

    #[test]
    fn parity_and_size_errors() {
        assert_eq!(random_cubic(7, 1, false), Err(RandomCubicError::OddOrder));
        assert_eq!(random_cubic(2, 1, false), Err(RandomCubicError::OrderTooSmall));
    }

    #[test]
    fn cubic_and_deterministic() {
        let a = random_cubic(8, 42, false).unwrap();
        let b = random_cubic(8, 42, false).unwrap();
        assert_eq!(write_graph6(&a), write_graph6(&b));
        assert_eq!(a.edge_count(), 12);
        let class = a.classify();
        assert!(class.is_cubic);
        for n in [10usize, 16, 30, 64, 66] {
            let g = random_cubic(n, 7, true).unwrap();
            let class = g.classify();
            assert!(class.is_cubic && class.is_connected, "n={n}");
        }
    }

    #[test]
    fn different_seeds_differ() {
        let a = random_cubic(20, 1, true).unwrap();
        let b = random_cubic(20, 2, true).unwrap();
        assert_ne!(write_graph6(&a), write_graph6(&b));
    }
}
