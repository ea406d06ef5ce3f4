//! Concrete computable algebras: the polynomial Poisson algebra and its
//! even part, the Weyl algebra of differential operators, universal
//! enveloping algebras via PBW straightening, the fixed-Casimir quotient of
//! U(sl2), and homomorphic evaluation of noncommutative expressions.

pub mod model;
pub mod po;
pub mod po_symbolic;
pub mod uenv;
pub mod weyl;

pub use model::{evaluate_nc, AlgebraModel, EvalError, GlLambdaModel, ScalarModel, UPoModel, WeylModel};
pub use po::{po_bracket, PoElement};
pub use po_symbolic::{po_bracket_symbolic, AffineExp, SymbolicPo};
pub use uenv::{Carrier, GlLambda, PoBasis, PoCarrier, Sl2Basis, Sl2Carrier, UEnv, UPo, USl2};
pub use weyl::{weyl_bracket, weyl_leading_symbol, weyl_product, WeylElement, WeylN};
