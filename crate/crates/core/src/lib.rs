//! Twisted torus knots `T(p, q; r, s)` as braid words: the residue data of
//! their parallelizations, Alexander polynomials of braid closures, the
//! parameter families with essential tangle decompositions, and the
//! combinatorics of the tangles cut from torus knots.

pub mod alexander;
pub mod braid;
pub mod cli;
pub mod error;
pub mod families;
pub mod laurent;
pub mod modarith;
pub mod suite;
pub mod tangles;

pub use alexander::{alexander_from_braid, torus_alexander};
pub use braid::{BraidWord, FramedBraid, MultiplicitySeq, Permutation};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use modarith::{CoeffQuadruple, SlotPartition};
