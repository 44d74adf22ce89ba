//! Crystals for the queer Lie superalgebras `q_n` and `q⁺_n`.
//!
//! Models: the standard crystal and its tensor powers (primed words),
//! increasing factorizations of primed involution words, and semistandard
//! shifted tableaux. Orthogonal Edelman-Greene insertion connects the last
//! two, and characters expand in the Schur Q basis.

pub mod alphabet;
pub mod characters;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod factorization;
pub mod insertion;
pub mod involutions;
pub mod tableau;
pub mod verify;
pub mod words;
