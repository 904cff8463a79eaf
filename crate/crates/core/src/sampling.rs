//! Seeded random on-shell momenta.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tensor::Momentum;

pub const MOMENTUM_RANGE: f64 = 5.0;
pub const MASS_RANGE: (f64, f64) = (0.1, 10.0);

/// Momenta componentwise uniform in `[-5, 5]`, masses log-uniform in `[0.1, 10]`.
#[derive(Clone, Debug)]
pub struct MomentumSampler {
    rng: ChaCha8Rng,
}

impl MomentumSampler {
    pub fn new(seed: u64) -> Self {
        MomentumSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn three_momentum(&mut self) -> [f64; 3] {
        std::array::from_fn(|_| self.rng.random_range(-MOMENTUM_RANGE..=MOMENTUM_RANGE))
    }

    pub fn mass(&mut self) -> f64 {
        let (lo, hi) = MASS_RANGE;
        let t: f64 = self.rng.random_range(lo.ln()..=hi.ln());
        t.exp()
    }

    pub fn momentum(&mut self) -> Momentum {
        let p = self.three_momentum();
        let m = self.mass();
        Momentum::massive(p, m).expect("sampled values are finite and positive")
    }

    pub fn momenta(&mut self, n: usize) -> Vec<Momentum> {
        (0..n).map(|_| self.momentum()).collect()
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..=hi)
    }
}
