pub mod cartan;
pub mod coeffs;
pub mod config;
pub mod error;
pub mod hecke;
pub mod involution;
pub mod lemmas;
pub mod report;
pub mod weyl;
