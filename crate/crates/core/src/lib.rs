//! Executable law checks for differential exponential maps.
//!
//! Two models are provided. [`smooth`] realizes smooth maps between Euclidean
//! spaces with exact nested forward-mode derivatives, and [`rel`] realizes
//! sets and relations with the finite-multiset exponential, checked by exact
//! bounded enumeration. On top sit exponential maps, the rigs they induce,
//! dynamical systems they solve, and a registry that runs every law and
//! reports the outcome.

pub mod cli;
pub mod dynamics;
pub mod exponential;
pub mod law;
pub mod rel;
pub mod rig;
pub mod smooth;
