//! A workbench for Mal'tsev algebras.
//!
//! * [`term`]: signatures, terms, parsing and enumeration.
//! * [`rewrite`]: the convergent rewrite system deciding equality in the free
//!   Mal'tsev algebra, with a critical-pair certificate.
//! * [`free_group`]: reduced words, the free heap and its derived groups.
//! * [`homomorphism`]: evaluation homomorphisms out of the free algebra.
//! * [`algebra`]: finite algebras as operation tables and derived Mal'tsev
//!   operations.
//! * [`congruence`]: congruences, lattices, permutability, quotients, kernels.
//! * [`search`]: Mal'tsev term search for the variety of a finite algebra.
//! * [`cli`]: the command-line front end.

pub mod algebra;
pub mod bundled;
pub mod cli;
pub mod congruence;
pub mod free_group;
pub mod homomorphism;
pub mod random;
pub mod rewrite;
pub mod search;
pub mod term;

pub use algebra::{FiniteAlgebra, Identity, OperationTable};
pub use congruence::{Congruence, Partition};
pub use free_group::{HeapWord, Letter, ReducedWord};
pub use rewrite::NormalForm;
pub use term::{Signature, Term};
