//! Exact combinatorics of level-k restricted rigged partitions.
//!
//! The crate enumerates the sets `R^{(M,N)}_{m,n}[l1,l2,l3]` of pairs of
//! rigged partitions, computes their graded characters as exact Laurent
//! polynomials in `(z1, z2, q)`, implements the admissible-pair machinery
//! that relates the sets at cutoffs `(M,N)` and `(M,N-1)`, and provides
//! verifiers that check the resulting recursion and decomposition
//! identities by exhaustion.
//!
//! Module map:
//!
//! * [`params`], [`kvector`], [`partition`], [`vacancy`]: foundational types.
//! * [`riggedsets`]: brute-force enumeration, the oracle everything else is
//!   checked against.
//! * [`admissible`]: index sets, `κ`/`ε` vectors, admissibility, the
//!   `(I,J) ↔ (Ĩ,J̃)` bijection and the bound vectors.
//! * [`bijection`]: lower and upper subsets, the map between them, and
//!   the structured verifiers in [`bijection::verify`].
//! * [`laurent`], [`characters`]: polynomial arithmetic and every
//!   character formula.
//! * [`json`]: the serialized document schema shared with the CLI.

pub mod admissible;
pub mod bijection;
pub mod characters;
pub mod json;
pub mod kvector;
pub mod laurent;
pub mod params;
pub mod partition;
pub mod report;
pub mod riggedsets;
pub mod vacancy;

mod error;

pub use admissible::IndexSet;
pub use error::{Error, Result};
pub use kvector::KVector;
pub use laurent::LaurentPoly;
pub use params::Params;
pub use partition::{Bottom, Partition, RiggedPair, Rigging};
pub use riggedsets::RiggedSet;
