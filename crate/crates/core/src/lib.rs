//! Cluster-cyclic and cluster-acyclic quivers with three vertices.
//!
//! A cyclic quiver on three vertices is described by its arrow counts
//! `(x, y, z)`. Whether some sequence of mutations makes it acyclic is
//! decided by the Markov constant `C = x^2 + y^2 + z^2 - xyz`, by the band
//! test `m-(x, y) <= z <= m+(x, y)`, or by mutation descent into the
//! fundamental domain `F = { x >= y >= z >= 2, yz >= 2x }`.
//!
//! Modules:
//!
//! * [`triple`]: triples, group words, mutations and the M1/M2/M3 cases;
//! * [`classify`]: the decision procedures and the real geometry of `V(C)`;
//! * [`orbits`]: bounded orbit walks and orbit representatives per constant;
//! * [`spectral`]: Cartan/Coxeter matrices and the Coxeter spectrum;
//! * [`hochschild`]: `dim H^1` of rank-three hereditary algebras;
//! * [`verify`]: the exhaustive check harness.

pub mod classify;
pub mod error;
pub mod hochschild;
pub mod orbits;
pub mod spectral;
pub mod triple;
pub mod verify;

pub use classify::{
    acyclic_by_constant, cyclic_by_band, descend, fundamental_representative,
    in_fundamental_domain, in_open_domain, Classification, Verdict,
};
pub use error::{Error, Result};
pub use triple::{GroupWord, Letter, MCase, Permutation, Triple, Vertex};
