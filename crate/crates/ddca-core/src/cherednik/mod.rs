//! Finite-rank rational Cherednik algebra (type A) and the rank-n
//! symplectic reflection algebra of the sign-flip group (type B), with PBW
//! normal forms, the spherical subalgebra and its symmetrized power-sum
//! elements, and the finite-rank verification of the deformation families.

pub mod element;
pub mod spherical;
pub mod tbasis;
pub mod verify;
pub mod group;

pub use element::{CherAlgebra, CherElement, CherGen};
pub use spherical::{SphElement, SphericalAlgebra};
pub use tbasis::{TBasisError, TIndex};
pub use verify::{beta_images_a, beta_images_b, params_a_at_rank, params_b_at_rank, verify_beta_finite, SphericalModel};
pub use group::{CherType, GroupElem};
