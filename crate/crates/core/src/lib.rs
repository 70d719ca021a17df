//! Computational commutative algebra over prime fields: Groebner bases,
//! ideal operations, Hilbert series and minimal graded free resolutions,
//! plus the three-cubic construction of projective dimension five.

pub mod construct;
pub mod error;
pub mod field;
pub mod format;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod ideal_ops;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod rng;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::GroebnerBasis;
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::Polynomial;
pub use ring::{PolyRing, RingRef};
pub use rng::SeededRng;
