//! Corelations and relations over props with a factorization system.
//!
//! Each engine ([`FinSet`], [`PartialFinSet`], [`LinearEngine`],
//! [`PidEngine`]) supplies composition, (co)limits and an `(E, M)`
//! factorization. The generic layer in [`diagram`] builds cospans, spans,
//! corelations and relations on top, and the verification harness checks the expected laws
//! exhaustively or on seeded samples.

pub mod codec;
pub mod diagram;
pub mod error;
pub mod finset;
pub mod interface;
pub mod linear;
pub mod matrix;
pub mod pid;
pub mod scalar;
pub mod verify;

pub use diagram::{Corelation, Cospan, Diagrams, Engine, Relation, Span};
pub use error::{Error, Result};
pub use finset::{FinFn, FinSet, FinSubcat, PartialFinSet, Partition};
pub use linear::LinearEngine;
pub use matrix::Matrix;
pub use pid::PidEngine;
pub use scalar::Fp;

pub type Q = num_rational::BigRational;
pub type Z = num_bigint::BigInt;
pub type Gf2 = Fp<2>;
pub type QMatrix = Matrix<Q>;
pub type ZMatrix = Matrix<Z>;
pub type LinQ = LinearEngine<Q>;
pub type LinGf2 = LinearEngine<Gf2>;
pub type ZEngine = PidEngine<Z>;
