//! Homomorphic evaluation of noncommutative polynomials in a computable
//! algebra model.

use crate::arith::ParamPoly;
use crate::freealg::ncpoly::{GenId, NcPoly};
use std::collections::BTreeMap;

/// A computable associative algebra with polynomial scalars.
pub trait AlgebraModel {
    type Elt: Clone + PartialEq;

    fn zero(&self) -> Self::Elt;
    fn one(&self) -> Self::Elt;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn scale(&self, a: &Self::Elt, c: &ParamPoly) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn is_zero(&self, a: &Self::Elt) -> bool;
    /// Short description of a nonzero element, used in failure residuals.
    fn describe(&self, a: &Self::Elt) -> String;
}

/// Evaluation error.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("no image assigned for generator #{0}")]
    MissingGenerator(u8),
}

/// Evaluates `expr` under a generator assignment; words evaluate as ordered
/// products, so commutator nodes (already expanded) evaluate as ab - ba.
pub fn evaluate_nc<M: AlgebraModel>(
    expr: &NcPoly,
    assignment: &BTreeMap<GenId, M::Elt>,
    model: &M,
) -> Result<M::Elt, EvalError> {
    let mut acc = model.zero();
    for (word, coeff) in &expr.terms {
        let mut prod = model.one();
        for g in word {
            let img = assignment
                .get(g)
                .ok_or(EvalError::MissingGenerator(g.0))?;
            prod = model.mul(&prod, img);
        }
        acc = model.add(&acc, &model.scale(&prod, coeff));
    }
    Ok(acc)
}

// --- model instances ------------------------------------------------------

/// One-variable Weyl algebra model.
pub struct WeylModel;

impl AlgebraModel for WeylModel {
    type Elt = super::weyl::WeylElement;

    fn zero(&self) -> Self::Elt {
        super::weyl::WeylElement::zero()
    }

    fn one(&self) -> Self::Elt {
        super::weyl::WeylElement::one()
    }

    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        a.add(b)
    }

    fn scale(&self, a: &Self::Elt, c: &ParamPoly) -> Self::Elt {
        super::weyl::WeylElement {
            terms: a.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        super::weyl::weyl_product(a, b)
    }

    fn is_zero(&self, a: &Self::Elt) -> bool {
        a.is_zero()
    }

    fn describe(&self, a: &Self::Elt) -> String {
        format!("{:?}", a)
    }
}

/// U(po) model.
pub struct UPoModel;

impl AlgebraModel for UPoModel {
    type Elt = super::uenv::UPo;

    fn zero(&self) -> Self::Elt {
        super::uenv::UPo::zero()
    }

    fn one(&self) -> Self::Elt {
        super::uenv::UPo::one()
    }

    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        a.add(b)
    }

    fn scale(&self, a: &Self::Elt, c: &ParamPoly) -> Self::Elt {
        a.scale(c)
    }

    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        a.mul(b)
    }

    fn is_zero(&self, a: &Self::Elt) -> bool {
        a.is_zero()
    }

    fn describe(&self, a: &Self::Elt) -> String {
        let parts: Vec<String> = a
            .terms
            .iter()
            .map(|(m, c)| {
                let word = m
                    .iter()
                    .map(|b| format!("q^{}p^{}", b.0, b.1))
                    .collect::<Vec<_>>()
                    .join(".");
                format!("({})[{}]", c, word)
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// U(sl2) at fixed Casimir value model.
pub struct GlLambdaModel;

impl AlgebraModel for GlLambdaModel {
    type Elt = super::uenv::GlLambda;

    fn zero(&self) -> Self::Elt {
        super::uenv::GlLambda::zero()
    }

    fn one(&self) -> Self::Elt {
        super::uenv::GlLambda::one()
    }

    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        a.add(b)
    }

    fn scale(&self, a: &Self::Elt, c: &ParamPoly) -> Self::Elt {
        a.scale(c)
    }

    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        a.mul(b)
    }

    fn is_zero(&self, a: &Self::Elt) -> bool {
        a.is_zero()
    }

    fn describe(&self, a: &Self::Elt) -> String {
        format!("{:?}", a)
    }
}

/// Scalar model: every element is a polynomial; used by the one-dimensional
/// representation checks.
pub struct ScalarModel;

impl AlgebraModel for ScalarModel {
    type Elt = ParamPoly;

    fn zero(&self) -> Self::Elt {
        ParamPoly::zero()
    }

    fn one(&self) -> Self::Elt {
        ParamPoly::one()
    }

    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        a + b
    }

    fn scale(&self, a: &Self::Elt, c: &ParamPoly) -> Self::Elt {
        a * c
    }

    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        a * b
    }

    fn is_zero(&self, a: &Self::Elt) -> bool {
        a.is_zero()
    }

    fn describe(&self, a: &Self::Elt) -> String {
        format!("{}", a)
    }
}

#[cfg(test)]
mod tests {
    use super::super::weyl::WeylElement;
    use super::*;
    use crate::arith::Rat;
    use crate::freealg::ncpoly::NcPoly;

    #[test]
    fn weyl_evaluation_of_p_f_commutator() {
        // [p, f] with p -> D, f -> D^2/2 evaluates to 0.
        let p = NcPoly::gen(GenId(0));
        let f = NcPoly::gen(GenId(1));
        let expr = p.comm(&f);
        let mut assignment = BTreeMap::new();
        assignment.insert(GenId(0), WeylElement::monomial_rat(0, 1, Rat::ONE));
        assignment.insert(GenId(1), WeylElement::monomial_rat(0, 2, Rat::new(1, 2)));
        let v = evaluate_nc(&expr, &assignment, &WeylModel).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn ad_f_cubed_r_is_d_cubed() {
        // ad_f^3(r) with f -> D^2/2, r -> x^3/6 evaluates to D^3.
        let f = NcPoly::gen(GenId(0));
        let r = NcPoly::gen(GenId(1));
        let expr = f.ad_pow(3, &r);
        let mut assignment = BTreeMap::new();
        assignment.insert(GenId(0), WeylElement::monomial_rat(0, 2, Rat::new(1, 2)));
        assignment.insert(GenId(1), WeylElement::monomial_rat(3, 0, Rat::new(1, 6)));
        let v = evaluate_nc(&expr, &assignment, &WeylModel).unwrap();
        assert_eq!(v, WeylElement::monomial_rat(0, 3, Rat::ONE));
    }

    #[test]
    fn ad_p_cubed_r_is_one() {
        // ad_p^3(r) with p -> D, r -> x^3/6 evaluates to 1.
        let p = NcPoly::gen(GenId(0));
        let r = NcPoly::gen(GenId(1));
        let expr = p.ad_pow(3, &r);
        let mut assignment = BTreeMap::new();
        assignment.insert(GenId(0), WeylElement::monomial_rat(0, 1, Rat::ONE));
        assignment.insert(GenId(1), WeylElement::monomial_rat(3, 0, Rat::new(1, 6)));
        let v = evaluate_nc(&expr, &assignment, &WeylModel).unwrap();
        assert_eq!(v, WeylElement::one());
    }

    #[test]
    fn missing_generator_error() {
        let expr = NcPoly::gen(GenId(5));
        let assignment: BTreeMap<GenId, WeylElement> = BTreeMap::new();
        assert_eq!(
            evaluate_nc(&expr, &assignment, &WeylModel).unwrap_err(),
            EvalError::MissingGenerator(5)
        );
    }
}
