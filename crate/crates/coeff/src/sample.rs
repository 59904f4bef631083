//! Random rational evaluation points for the probabilistic equality mode.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;

pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A random rational `p/r` avoiding 0 and ±1, with |p| <= 997 and 1 <= r <= 97.
    pub fn value(&mut self) -> Rational {
        loop {
            let p: i64 = self.rng.random_range(-997..=997);
            let r: i64 = self.rng.random_range(1..=97);
            let v = Rational::new(p, r).expect("nonzero denominator");
            if !v.is_zero() && v.abs() != Rational::one() {
                return v;
            }
        }
    }

    pub fn point(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.value()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = PointSampler::new(7).point(5);
        let b = PointSampler::new(7).point(5);
        assert_eq!(a, b);
        assert!(a.iter().all(|v| !v.is_zero()));
    }
}
