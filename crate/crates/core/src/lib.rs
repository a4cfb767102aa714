//! Combinatorics of the type-A Weyl group `S_{r+1}`.
//!
//! The crate is organised around three faces of a Weyl element (one-line
//! [`Permutation`], [`Word`] in the simple reflections, and the
//! [`DescendingCode`] `(k_1, ..., k_r)` that writes it as a product of
//! descending cycles), the column-grouped [`CosetCode`] that parameterises
//! minimal representatives of `W(P)\W(G)`, and the orbit data built on top
//! of them: the torus `h_O`, the root sets `U_l(O)`, `Δ_λ`, and the
//! semi-Whittaker support of a pair `(μ, λ)`.
//!
//! Everything is exact integer combinatorics. The [`verify`] module turns
//! each structural statement into an exhaustive sweep with a replayable
//! report.

pub mod cosets;
mod error;
pub mod exec;
pub mod orbits;
pub mod partitions;
mod text;
pub mod verify;
pub mod weyl;

pub use cosets::{CosetCode, CosetSpace, Lemma25Check, Lemma25Form, RlDecomposition};
pub use error::{Error, Result};
pub use exec::Execution;
pub use orbits::{OrbitCertificate, OrbitTorus, SupportReport, Verdict};
pub use partitions::{Composition, Dominance, DominanceVerdict, Lemma32Bound, SortedPartition};
pub use text::parse_int_list;
pub use weyl::{DescendingCode, Permutation, Root, RootSet, Word};
