//! Synchronizing automata that contain Cayley graphs.
//!
//! This crate builds explicit finite groups (cyclic, dihedral, elementary
//! abelian, affine, symmetric, alternating, special linear), turns their
//! Cayley graphs into deterministic automata, and studies synchronization:
//!
//! - exact shortest reset words and shortest expanding words by subset BFS;
//! - the standard representation over the rationals, the chain of subspaces
//!   obtained by alternating closure under the Cayley letters with a single
//!   application of the remaining letters, and the gap bound it yields;
//! - closed-form synchronization bounds (Černý, Rystsov, and the
//!   representation-theoretic main bound) together with certified lower
//!   bounds on the maximal degree of a rational irreducible representation;
//! - exact rational linear algebra and cyclotomic matrix modules used to
//!   verify the character identities behind the dihedral and affine cases.
//!
//! All linear algebra is exact (arbitrary-precision rationals); all searches
//! are deterministic, and randomized harness runs are reproducible from a
//! master seed.

pub mod automaton;
pub mod bounds;
pub mod cayley;
pub mod cyclotomic;
pub mod group;
pub mod qlinalg;
pub mod repr;
pub mod verify;

pub use automaton::{Automaton, StateSet, Word};
pub use cayley::CayleyGraph;
pub use group::{FiniteGroup, GeneratorSet};
pub use qlinalg::{QMatrix, QSubspace, QVector, Rational};
