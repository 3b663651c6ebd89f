//! Combinatorics of the left weak order on the symmetric group.
//!
//! The crate computes, exactly and at desk scale:
//!
//! * permutations in one-line notation with their inversion and
//!   non-inversion sets ([`perm`]);
//! * Lehmer codes and the extended code matrix refining them ([`code`]);
//! * left/right weak order and strong Bruhat order intervals with their
//!   rank-generating functions ([`order`]);
//! * the lattice of Lehmer codes of an interval under the product order
//!   ([`codelattice`]);
//! * the base poset of join-irreducibles of that lattice, its chain
//!   decomposition, and the order-ideal (Birkhoff) correspondence
//!   ([`baseposet`]);
//! * rank-symmetry scans and the doubled-permutation lower bound
//!   ([`symmetry`]);
//! * a minimal model of the Coxeter group D4 as even-signed permutations,
//!   used for a rank-generating function that no distributive lattice
//!   realizes ([`d4`]);
//! * enumeration of small posets up to isomorphism ([`enumerate`]).
//!
//! Everything is a pure function over immutable values, so concurrent use
//! needs no synchronization. The crate is `no_std` (with `alloc`); IO, CLI
//! and serialization live in the companion `weakcode-cli` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod baseposet;
pub mod code;
pub mod codelattice;
pub mod d4;
pub mod enumerate;
pub mod order;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod symmetry;

pub use baseposet::BasePoset;
pub use code::{ExtendedCode, LehmerCode};
pub use codelattice::CodeLattice;
pub use order::IntervalPoset;
pub use perm::Permutation;
pub use poly::RankPolynomial;
pub use poset::FinitePoset;
