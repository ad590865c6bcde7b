//! Pauli observable configurations, the dessins d'enfants that draw them, and
//! the group-theoretic and numerical checks connecting the two.
//!
//! * [`pauli`]: symplectic Pauli algebra with a dense-matrix oracle.
//! * [`contextuality`]: Bell quadruples, Mermin squares and pentagrams,
//!   Fano heptads, GQ(2,2), Kochen–Specker checks.
//! * [`dessins`]: hypermaps as permutation pairs, genus and passports.
//! * [`cartography`]: low-index subgroups of the cartographic group,
//!   permutation groups, target recognition and line stabilization.
//! * [`belyi`]: numerical Belyi-map verification and ramification passports.
//! * [`capacity`]: independence, clique and chromatic numbers, strong
//!   products, Lovász theta, Shannon capacity bounds.

pub mod belyi;
pub mod capacity;
pub mod cartography;
pub mod contextuality;
pub mod dessins;
pub mod pauli;
pub mod perm;
#[cfg(test)]
mod properties;

pub use perm::Perm;
