//! Deterministic pseudo-random numbers and random vertex partitions.
//!
//! The generator is SplitMix64 (Steele, Lea and Flood): a 64-bit Weyl
//! sequence with increment `0x9E3779B97F4A7C15` passed through a fixed
//! xor-shift-multiply finalizer. It has a single `u64` of state, so a seed
//! fully determines the stream on every platform.

/// SplitMix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for trial `index` of a run seeded with `seed`.
    pub fn for_trial(seed: u64, index: u64) -> Self {
        let mut mixer = SplitMix64::new(seed ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03));
        SplitMix64::new(mixer.next_u64())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Value in `0..bound` by reducing one 64-bit draw modulo `bound`.
    /// The bias is at most `bound / 2^64`, below `2^-60` for `bound <= 16`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        self.next_u64() % bound
    }

    /// True with probability exactly `numer / denom` up to `2^-64` granularity:
    /// the draw `x` succeeds iff `x * denom < numer * 2^64`.
    pub fn bernoulli(&mut self, numer: u64, denom: u64) -> bool {
        assert!(denom > 0 && numer <= denom);
        let x = u128::from(self.next_u64());
        x * u128::from(denom) < u128::from(numer) << 64
    }
}

/// Assignment of the vertices `1..=n` to parts `0..parts`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionAssignment {
    parts: u32,
    part_of: Vec<u32>,
}

impl PartitionAssignment {
    /// `part_of[v - 1]` is the part of vertex `v`.
    pub fn new(parts: u32, part_of: Vec<u32>) -> Self {
        assert!(parts >= 1, "a partition needs at least one part");
        assert!(
            part_of.iter().all(|&p| p < parts),
            "part index out of range"
        );
        PartitionAssignment { parts, part_of }
    }

    /// Each vertex lands in a uniformly random part, independently.
    pub fn random(n: u32, parts: u32, rng: &mut SplitMix64) -> Self {
        let part_of = (0..n).map(|_| rng.below(u64::from(parts)) as u32).collect();
        PartitionAssignment::new(parts, part_of)
    }

    /// Vertices dealt round-robin: vertex `v` goes to part `(v - 1) mod parts`.
    pub fn balanced(n: u32, parts: u32) -> Self {
        PartitionAssignment::new(parts, (0..n).map(|i| i % parts).collect())
    }

    pub fn parts(&self) -> u32 {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.part_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.part_of.is_empty()
    }

    pub fn part(&self, vertex: u32) -> u32 {
        self.part_of[vertex as usize - 1]
    }

    /// `counts[i] = |set ∩ A_i|`.
    pub fn counts(&self, set: &[u32]) -> Vec<u32> {
        let mut counts = vec![0; self.parts as usize];
        for &v in set {
            counts[self.part(v) as usize] += 1;
        }
        counts
    }

    /// Number of parts that `set` misses.
    pub fn missed_parts(&self, set: &[u32]) -> u32 {
        self.counts(set).iter().filter(|&&c| c == 0).count() as u32
    }

    /// `Σ_i i·|set ∩ A_i|`.
    pub fn weight(&self, set: &[u32]) -> u64 {
        set.iter().map(|&v| u64::from(self.part(v))).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0 of the reference SplitMix64
        let mut g = SplitMix64::new(0);
        assert_eq!(g.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(g.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(g.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<u64> = {
            let mut g = SplitMix64::new(42);
            (0..8).map(|_| g.next_u64()).collect()
        };
        let mut g = SplitMix64::new(42);
        let b: Vec<u64> = (0..8).map(|_| g.next_u64()).collect();
        assert_eq!(a, b);
        assert_ne!(
            SplitMix64::for_trial(42, 0).next_u64(),
            SplitMix64::for_trial(42, 1).next_u64()
        );
    }

    #[test]
    fn bernoulli_extremes() {
        let mut g = SplitMix64::new(9);
        assert!((0..100).all(|_| g.bernoulli(1, 1)));
        assert!((0..100).all(|_| !g.bernoulli(0, 1)));
    }

    #[test]
    fn partition_statistics() {
        let p = PartitionAssignment::new(3, vec![0, 2, 2, 1]);
        assert_eq!(p.counts(&[1, 2, 3]), vec![1, 0, 2]);
        assert_eq!(p.missed_parts(&[2, 3]), 2);
        assert_eq!(p.weight(&[1, 2, 4]), 3);
        assert_eq!(PartitionAssignment::balanced(5, 2).part(5), 0);
    }
}
