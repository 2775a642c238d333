//! Exact commutative-algebra kernels for multiparameter persistence:
//! polynomial rings, polynomial matrices and minors, tableaux and
//! straightening, determinantal and Fitting ideals, free complexes with
//! Buchsbaum–Eisenbud multipliers, standard monomials for varieties of
//! complexes, and bifiltration rank invariants.

pub mod error;
pub mod field;
pub mod polyring;
pub mod polymatrix;
pub mod subsets;
pub mod intmat;
pub mod tableaux;
pub mod determinantal;
pub mod complexes;
pub mod varieties;
pub mod persistence;
pub mod fixtures;
pub mod golden;
pub mod selftest;

pub use error::{Error, Result};
pub use polyring::{CoeffDomain, Monomial, MonomialOrder, Polynomial, Ring, RingCtx, RingExt};
pub use polymatrix::{generic_matrix, PolyMatrix};
pub use subsets::SubsetIndex;
