//! Zero-sum invariants of finite abelian groups.
//!
//! The crate computes Davenport constants, universal invariants `d_Ω(G)` for
//! explicit sets of sequences, minimal sets and the sets `Q_t(G)`, weighted
//! invariants `D_Ψ(G)` and `d_{Ω;Ψ}(G)`, and bounds for coset covers. Every
//! quantity comes from a pruned exhaustive search over canonical multisets,
//! so all results are exact for the (small) groups they are run on.

// Groups hold a lazily built addition table that plays no part in ordering.
#![allow(clippy::mutable_key_type)]

pub mod bitset;
pub mod covers;
pub mod error;
pub mod group;
pub mod invariants;
pub mod quotient;
pub mod sequences;
pub mod sweeps;
pub mod weighted;

mod search;

pub use error::{Error, Result};
pub use group::{enumerate_homs, Coset, FiniteAbelianGroup, GroupElement, Homomorphism, Subgroup};
pub use invariants::{d_omega, davenport, InvariantResult, InvariantValue, OmegaSet, Provenance};
pub use search::SearchConfig;
pub use sequences::{enumerate_minimal_zero_sum, GSequence, IntSequence};
