//! Exact computer algebra for finite-rank spherical Cherednik algebras, the
//! rank-symbolic T-basis calculus, presentations of the polynomial Poisson
//! algebra and its even part, and the associated parameter identities, with
//! machine-checkable verification reports.

pub mod arith;
pub mod report;

pub mod cherednik;
pub mod deligne;
pub mod freealg;
pub mod galois;
pub mod liealg;
pub mod sl2rep;
