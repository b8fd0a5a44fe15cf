//! Binary self-orthogonal codes.
//!
//! Two constructions are provided: concatenation of an outer code over
//! GF(2^(2t)) with a binary self-orthogonal inner code ([`concat`]), and
//! expansion of a self-orthogonal code over GF(2^(2t)) into a binary one
//! through a self-dual basis ([`expansion`]). Supporting modules cover field
//! arithmetic, GF(2) linear algebra with exhaustive distance enumeration, the
//! code families used as building blocks, the counting arguments for
//! self-orthogonal codes, and the asymptotic bound lines.

pub mod bounds;
pub mod codefile;
pub mod codes;
pub mod concat;
pub mod counting;
pub mod error;
pub mod expansion;
pub mod galois;
pub mod gf2la;

pub use bounds::{BoundLine, BoundPoint};
pub use codes::LinearCode;
pub use error::{Error, Result};
pub use galois::{Basis, FieldElement, FieldSpec};
pub use gf2la::{BitMatrix, FqMatrix};
