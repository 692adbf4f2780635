//! Invariant, hyperinvariant and characteristic subspaces of a nilpotent
//! linear operator on a finite-dimensional GF(2) vector space.
//!
//! The operator is given by its Segre characteristic `t = (t_1 <= ... <= t_m)`:
//! the space decomposes into cyclic blocks `<u_j>` with `f^{t_j} u_j = 0`, and
//! the basis vectors `f^i u_j` are ordered block-major. On top of the exact
//! GF(2) linear algebra in [`gf2`], the crate builds:
//!
//! * [`modspace`]: the block space, exponents, heights, kernels and images of
//!   powers of `f`, and the `u<j>` / `f^<i>*u<j>` vector expression grammar;
//! * [`commutant`]: enumeration of `End(V,f)` and `Aut(V,f)`, orbits,
//!   characteristic and hyperinvariant hulls, and subspace classification;
//! * [`hyperlattice`]: admissible tuples, the lattice of hyperinvariant
//!   subspaces `W(r)`, frames of characteristic subspaces, and duality;
//! * [`charframe`]: intervals of characteristic subspaces, echelon
//!   classification, extensions of partial tuples, and the construction of
//!   characteristic subspaces that are not hyperinvariant;
//! * [`oracle`]: independent brute-force cross-checks over small spaces.

pub mod charframe;
pub mod commutant;
pub mod error;
pub mod gf2;
pub mod hyperlattice;
pub mod modspace;
pub mod oracle;

pub use error::{Error, Hypothesis, Result};

/// Resource caps for the enumeration-based operations.
///
/// `max_endo_bits` bounds the commutant dimension d: streams over `End(V,f)`
/// walk `2^d` elements. `max_enum_dim` bounds the ambient dimension of
/// subspace enumeration. `max_rep_dim` bounds the ambient dimension for the
/// canonical representation search. Exceeding a cap is a typed error, never
/// a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_endo_bits: usize,
    pub max_enum_dim: usize,
    pub max_rep_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_endo_bits: 24,
            max_enum_dim: 12,
            max_rep_dim: 12,
        }
    }
}
