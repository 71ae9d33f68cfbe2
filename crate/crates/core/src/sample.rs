//! Seeded random inputs for the verification suites and tests. Components
//! are drawn independently and uniformly from the square `[-1, 1]^2` in the
//! complex plane; integer variants stay exact in double precision.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Complex64, Sedeon};
use crate::transforms::{Boost, EventVector, Rotor};

/// Deterministic generator for a given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_sedeon(rng: &mut impl Rng) -> Sedeon {
    let mut components = [Complex64::new(0.0, 0.0); 16];
    for c in &mut components {
        *c = random_complex(rng);
    }
    Sedeon::from_components(components)
}

/// Sedeon with small integer components; sums and products of a few of
/// these stay exactly representable, so identities that hold in exact
/// arithmetic can be asserted bitwise.
pub fn random_integer_sedeon(rng: &mut impl Rng) -> Sedeon {
    let mut components = [Complex64::new(0.0, 0.0); 16];
    for c in &mut components {
        *c = Complex64::new(
            rng.random_range(-8..=8) as f64,
            rng.random_range(-8..=8) as f64,
        );
    }
    Sedeon::from_components(components)
}

pub fn random_integer_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(
        rng.random_range(-8..=8) as f64,
        rng.random_range(-8..=8) as f64,
    )
}

/// Absolute vector: components only in the plain `a_1..a_3` slots.
pub fn random_absolute_vector(rng: &mut impl Rng) -> Sedeon {
    let mut s = Sedeon::zero();
    for k in 1..4 {
        *s.at_mut(0, k) = random_complex(rng);
    }
    s
}

/// Pure sedeon-vector with content in every space-time block.
pub fn random_pure_vector(rng: &mut impl Rng) -> Sedeon {
    let mut s = Sedeon::zero();
    for n in 0..4 {
        for k in 1..4 {
            *s.at_mut(n, k) = random_complex(rng);
        }
    }
    s
}

pub fn random_unit_axis(rng: &mut impl Rng) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let s = (1.0 - z * z).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

pub fn random_rotor(rng: &mut impl Rng) -> Rotor {
    let theta = rng.random_range(-std::f64::consts::TAU..std::f64::consts::TAU);
    Rotor::new(theta, random_unit_axis(rng)).expect("sampled axis is unit")
}

pub fn random_boost(rng: &mut impl Rng) -> Boost {
    let rapidity = rng.random_range(-1.2..1.2);
    Boost::from_rapidity(rapidity, random_unit_axis(rng)).expect("sampled direction is unit")
}

pub fn random_event(rng: &mut impl Rng) -> EventVector {
    EventVector::natural(
        rng.random_range(-2.0..2.0),
        [
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        ],
    )
    .expect("sampled event is finite")
}
