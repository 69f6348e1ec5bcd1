//! Seeded sampling of small-height rationals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::scalar::ratio;
use crate::Rational;

/// Largest numerator and denominator magnitude drawn.
pub const HEIGHT: i64 = 13;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream derived from a seed and a label, so checks do not
    /// depend on the order in which they are scheduled.
    pub fn derived(seed: u64, label: &str, n: usize) -> Self {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes().chain(n.to_le_bytes()) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Self::new(seed ^ h)
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.random_range(-HEIGHT..=HEIGHT);
        let q = self.rng.random_range(1..=HEIGHT);
        ratio(p, q)
    }

    pub fn nonzero(&mut self) -> Rational {
        loop {
            let v = self.rational();
            if v != ratio(0, 1) {
                return v;
            }
        }
    }

    pub fn positive(&mut self) -> Rational {
        let p = self.rng.random_range(1..=HEIGHT);
        let q = self.rng.random_range(1..=HEIGHT);
        ratio(p, q)
    }

    /// `k` pairwise distinct nonzero rationals.
    pub fn distinct(&mut self, k: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        while out.len() < k {
            let v = self.nonzero();
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut self.rng);
        p
    }
}
