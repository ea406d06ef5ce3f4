//! Exact univariate polynomial interpolation with consistency checking.
//!
//! Given samples with distinct abscissae and a degree bound, produces the
//! unique interpolating polynomial through the first `bound + 1` samples and
//! requires every extra sample to lie on it; an off-curve sample is reported
//! as an error, which is how non-polynomial data is detected.

use super::poly::{ParamPoly, Sym};
use super::rat::Rat;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FitError {
    #[error("need at least {0} samples, got {1}")]
    TooFewSamples(usize, usize),
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(Rat),
    #[error("sample ({0}, {1}) does not lie on the degree-{2} interpolant")]
    InconsistentSamples(Rat, Rat, usize),
}

/// Interpolates a univariate polynomial in `var` of degree at most
/// `degree_bound` through the samples. Extra samples are consistency checks.
pub fn fit_polynomial(
    samples: &[(Rat, Rat)],
    degree_bound: usize,
    var: Sym,
) -> Result<ParamPoly, FitError> {
    let need = degree_bound + 1;
    if samples.len() < need {
        return Err(FitError::TooFewSamples(need, samples.len()));
    }
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            if samples[i].0 == samples[j].0 {
                return Err(FitError::DuplicateAbscissa(samples[i].0.clone()));
            }
        }
    }
    // Lagrange interpolation on the first `need` samples.
    let base = &samples[..need];
    let x = ParamPoly::var(var);
    let mut p = ParamPoly::zero();
    for (i, (xi, yi)) in base.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = ParamPoly::one();
        let mut den = Rat::ONE;
        for (j, (xj, _)) in base.iter().enumerate() {
            if i == j {
                continue;
            }
            num = &num * &(&x - &ParamPoly::constant(xj.clone()));
            den = &den * &(xi - xj);
        }
        p = &p + &num.scale(&(yi / &den));
    }
    // Verify every sample (including the base, as a self-check).
    for (xi, yi) in samples {
        let mut a = std::collections::BTreeMap::new();
        a.insert(var, xi.clone());
        let v = p.eval(&a).expect("univariate eval");
        if &v != yi {
            return Err(FitError::InconsistentSamples(
                xi.clone(),
                yi.clone(),
                degree_bound,
            ));
        }
    }
    Ok(p)
}
