//! Seeded random sampling of cochains for identity suites.
//!
//! Samples are rational combinations of at most 4 basis tensors with
//! coefficients in {-2..2}\{0}; identities under test are linear, so basis
//! coverage plus random combinations is sound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::Tensor;
use crate::scalar::rat;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sample_combination(basis: &[Tensor], rng: &mut ChaCha8Rng) -> Tensor {
    if basis.is_empty() {
        return Tensor::zero(0);
    }
    let deg = basis[0].degree();
    let mut out = Tensor::zero(deg);
    let picks = rng.gen_range(1..=4usize.min(basis.len()));
    for _ in 0..picks {
        let idx = rng.gen_range(0..basis.len());
        let mut c = rng.gen_range(-2i64..=2);
        if c == 0 {
            c = 1;
        }
        out = out.add(&basis[idx].scale(&rat(c)));
    }
    out
}
