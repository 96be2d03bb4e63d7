//! Constructions and exhaustive verification of unitals in `PG(2,q^2)`.
//!
//! The crate builds the classical (Hermitian) unital, the Buekenhout–Metz
//! family `U_{a,b}` and the even-characteristic Buekenhout–Tits unital, and
//! verifies them as two-character sets both in the standard Desarguesian
//! plane and in non-standard plane models whose lines are vertical lines
//! together with translates of a fixed nonlinear graph.
//!
//! Everything operates at desk scale: fields are materialized with lookup
//! tables, planes are enumerated, and the interesting claims are checked by
//! exhaustion rather than proved. All operations are deterministic and the
//! data structures are immutable after construction, so the verification
//! loops parallelize freely.

pub mod cone;
pub mod curves;
pub mod error;
pub mod gf;
pub mod group;
pub mod model;
pub mod pg;
pub mod unitals;
pub mod verify;

pub use error::{Error, Result};
pub use gf::{Fe, FieldSpec, Parity, SquareScope};



