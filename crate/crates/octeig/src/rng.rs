//! Seeded random instance generation.
//!
//! Everything random in this crate flows from [`SplitMix64`] so that fixtures
//! reproduce bit-for-bit from a 64-bit seed, in any implementation of the
//! same generator.

use crate::hermitian::{Herm2, Herm3};
use crate::octonion::{associator, Octonion};

/// SplitMix64 (Steele, Lea & Flood), the 64-bit mixing generator.
///
/// State update `s += 0x9E3779B97F4A7C15` followed by two xor-multiply mixing
/// rounds; doubles are formed from the top 53 bits.
#[derive(Clone, Debug)]
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

    /// Uniform double in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// Which octonion slots a generated instance populates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixClass {
    /// Only the `1` and `i` slots: ordinary complex entries.
    Complex,
    /// The `1, i, j, k` slots: quaternionic entries, vanishing associator.
    Quaternionic,
    /// All 8 slots.
    Octonionic,
}

impl MatrixClass {
    fn slots(self) -> usize {
        match self {
            MatrixClass::Complex => 2,
            MatrixClass::Quaternionic => 4,
            MatrixClass::Octonionic => 8,
        }
    }
}

/// A random octonion with the class's slots uniform in `[-scale, scale]`.
pub fn random_octonion(rng: &mut SplitMix64, class: MatrixClass, scale: f64) -> Octonion {
    let mut c = [0.0; 8];
    for slot in c.iter_mut().take(class.slots()) {
        *slot = rng.uniform(-scale, scale);
    }
    Octonion::new(c)
}

/// A random 2x2 Hermitian matrix of the given class.
pub fn random_herm2(rng: &mut SplitMix64, class: MatrixClass, scale: f64) -> Herm2 {
    let p = rng.uniform(-scale, scale);
    let m = rng.uniform(-scale, scale);
    Herm2::new(p, m, random_octonion(rng, class, scale))
}

/// A random 3x3 Hermitian matrix of the given class.
///
/// For [`MatrixClass::Octonionic`] the off-diagonal triple is re-drawn until
/// its associator is comfortably nonzero, so the instance genuinely has two
/// distinct eigenvalue families.
pub fn random_herm3(rng: &mut SplitMix64, class: MatrixClass, scale: f64) -> Herm3 {
    let p = rng.uniform(-scale, scale);
    let m = rng.uniform(-scale, scale);
    let n = rng.uniform(-scale, scale);
    loop {
        let a = random_octonion(rng, class, scale);
        let b = random_octonion(rng, class, scale);
        let c = random_octonion(rng, class, scale);
        if class == MatrixClass::Octonionic
            && associator(a, b, c).norm_sq() <= 1e-9 * scale.powi(6)
        {
            continue;
        }
        return Herm3::new(p, m, n, a, b, c);
    }
}
