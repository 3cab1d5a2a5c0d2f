//! Seeded random inputs for randomized checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gfc::MuPoint;
use crate::{CycloElem, Rat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p / q` with `|p| <= bound`, `1 <= q <= bound`.
pub fn rat<R: Rng>(rng: &mut R, bound: i64) -> Rat {
    Rat::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound).into())
}

pub fn nonzero_rat<R: Rng>(rng: &mut R, bound: i64) -> Rat {
    loop {
        let r = rat(rng, bound);
        if r != Rat::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn cyclo<R: Rng>(rng: &mut R, bound: i64) -> CycloElem {
    CycloElem::from_coeffs(std::array::from_fn(|_| rat(rng, bound)))
}

pub fn nonzero_cyclo<R: Rng>(rng: &mut R, bound: i64) -> CycloElem {
    loop {
        let c = cyclo(rng, bound);
        if c.coeffs().iter().any(|x| *x != Rat::from_integer(0.into())) {
            return c;
        }
    }
}

/// A rational point of `Omega`.
pub fn mu_rat<R: Rng>(rng: &mut R) -> MuPoint<Rat> {
    loop {
        if let Ok(mu) = MuPoint::new(std::array::from_fn(|_| rat(rng, 9))) {
            return mu;
        }
    }
}

/// A rational point of `Omega`, embedded in `Q(zeta_7)`.
pub fn mu_cyclo<R: Rng>(rng: &mut R) -> MuPoint<CycloElem> {
    mu_rat(rng).map(|x| CycloElem::from_scalar(x.clone()))
}

/// A word in `A`, `B` of length `len`.
pub fn word<R: Rng>(rng: &mut R, len: usize) -> String {
    (0..len).map(|_| if rng.gen_bool(0.5) { 'A' } else { 'B' }).collect()
}
