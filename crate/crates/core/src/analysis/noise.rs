//! Seeded Gaussian perturbation of samples.
//!
//! The generator is ChaCha8 seeded from a `u64`, and normal variates come
//! from the ziggurat sampler in `rand_distr`. Both are pure integer and
//! `f64` arithmetic, so a given `(seed, n)` produces the same perturbations
//! on every platform. One draw is taken per node, in node order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::nodes::Samples;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub sigma: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub const fn new(sigma: f64, seed: u64) -> Self {
        Self { sigma, seed }
    }

    /// `count` independent draws from `N(0, sigma^2)`.
    pub fn draws(&self, count: usize) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..count)
            .map(|_| {
                let g: f64 = StandardNormal.sample(&mut rng);
                self.sigma * g
            })
            .collect()
    }

    pub fn perturb(&self, ys: &[f64]) -> Vec<f64> {
        if self.sigma == 0.0 {
            return ys.to_vec();
        }
        ys.iter().zip(self.draws(ys.len())).map(|(y, g)| y + g).collect()
    }
}

/// `y_i + g_i` with `g_i ~ N(0, σ²)` i.i.d.
pub fn add_noise(samples: &Samples, spec: NoiseSpec) -> Samples {
    Samples::new(spec.perturb(samples.ys())).expect("finite samples plus finite noise")
}
