//! Exact-arithmetic toolkit for the genus-49 generalized Fermat curves with
//! deck group `Z2^6` branched over seven points, their genus-7 quotients
//! by free `Z2^3` subgroups and the Fricke-Macbeath specialization.
//!
//! Core routines are generic over a [`field::Field`]; the aliases below fix
//! the scalar to exact elements of `Q(zeta_7)`.

pub mod checks;
pub mod elliptic;
pub mod error;
pub mod field;
pub mod gfc;
pub mod group_h;
pub mod json;
pub mod linalg;
pub mod moduli;
pub mod moebius;
pub mod orbifold;
pub mod sample;

pub use error::{Error, Result};

/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
/// Exact element of `Q(zeta_7)`.
pub type CycloElem = field::Cyclo<Rat>;
pub type P1Point = moebius::ProjPoint<CycloElem>;
pub type MoebiusMap = moebius::Moebius<CycloElem>;
pub type BranchSet = moebius::BranchPoints<CycloElem>;
pub type ModuliPoint = gfc::MuPoint<CycloElem>;
pub type QuadricSystem = gfc::Quadrics<CycloElem>;
pub type EllipticModel = elliptic::DoubleCover<CycloElem>;
pub type LinearAutWitness = gfc::aut::LinearAut<CycloElem>;
