//! Workbench for finite semi-Heyting algebras.
//!
//! A semi-Heyting algebra is a bounded lattice with a binary arrow satisfying
//! `x ^ (x -> y) = x ^ y`, `x ^ (y -> z) = x ^ ((x ^ y) -> (x ^ z))`, and
//! `x -> x = 1`. The crate models these algebras as explicit operation tables,
//! enumerates all of them over a given finite lattice, classifies them against
//! a catalog of equationally defined subclasses (connexive, commutative,
//! anti-Boolean, ...), analyzes their congruence structure, translates between
//! the connexive and Heyting presentations of the 3-element chain varieties,
//! and checks Hilbert-style derivations in the matching logics.

pub mod algebra;
pub mod config;
pub mod enumeration;
pub mod equivalence;
pub mod lattice;
pub mod proof;
pub mod report;
pub mod structure;
pub mod terms;
pub mod varieties;
