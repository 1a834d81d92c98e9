use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::ComplexCoeff;

/// Generator used for every simulated realization.
pub type SimRng = ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Independent stream for realization `index` of a run seeded with `seed`.
///
/// The stream depends only on `(seed, index)`, so a realization is unchanged
/// when the total number of realizations or the evaluation order changes.
pub fn realization_rng(seed: u64, index: u64) -> SimRng {
    let mut state = splitmix64(seed) ^ splitmix64(!index).rotate_left(17);
    let mut key = [0u8; 32];
    for word in key.chunks_exact_mut(8) {
        state = splitmix64(state);
        word.copy_from_slice(&state.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// Circularly-symmetric `CN(0, variance)` sample via Box–Muller; real and
/// imaginary parts are each `N(0, variance / 2)`.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R, variance: f64) -> ComplexCoeff {
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    let radius = (-variance * u1.ln()).sqrt();
    ComplexCoeff::from_polar(radius, TAU * u2)
}
