//! The Lie algebra of polynomials on the symplectic plane.
//!
//! Basis monomials q^a p^b with bracket
//! `[q^k p^l, q^m p^n] = (lm - nk) q^(k+m-1) p^(l+n-1)` and grading
//! `deg(q^a p^b) = a + b - 2`. The unit monomial is the central element K.

use crate::arith::{ParamPoly, Rat};
use std::collections::BTreeMap;
use std::fmt;

/// Element of the polynomial Poisson algebra: sparse map (a, b) -> coeff
/// for monomials q^a p^b.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PoElement {
    pub terms: BTreeMap<(u32, u32), ParamPoly>,
}

impl PoElement {
    pub fn zero() -> PoElement {
        PoElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// c * q^a p^b
    pub fn monomial(a: u32, b: u32, c: ParamPoly) -> PoElement {
        let mut out = PoElement::zero();
        out.add_term(a, b, c);
        out
    }

    pub fn monomial_rat(a: u32, b: u32, c: Rat) -> PoElement {
        PoElement::monomial(a, b, ParamPoly::constant(c))
    }

    /// The central element K = 1.
    pub fn central_k() -> PoElement {
        PoElement::monomial(0, 0, ParamPoly::one())
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = &*e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &PoElement) -> PoElement {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PoElement) -> PoElement {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, -c);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> PoElement {
        if c.is_zero() {
            return PoElement::zero();
        }
        PoElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.scale(c)))
                .collect(),
        }
    }

    /// Grading degrees present, as deg(q^a p^b) = a + b - 2.
    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self
            .terms
            .keys()
            .map(|&(a, b)| a as i64 + b as i64 - 2)
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// True when only even-degree monomials occur (membership in the even
    /// part).
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|&(a, b)| (a + b) % 2 == 0)
    }
}

/// Poisson bracket via the monomial formula.
pub fn po_bracket(x: &PoElement, y: &PoElement) -> PoElement {
    let mut out = PoElement::zero();
    for (&(k, l), cx) in &x.terms {
        for (&(m, n), cy) in &y.terms {
            let scalar = (l as i64) * (m as i64) - (n as i64) * (k as i64);
            if scalar == 0 {
                continue;
            }
            // Exponents k+m-1 and l+n-1 are nonnegative whenever the scalar
            // is nonzero.
            let a = k + m - 1;
            let b = l + n - 1;
            out.add_term(a, b, (cx * cy).scale(&Rat::int(scalar)));
        }
    }
    out
}

/// Independent oracle: the Poisson bracket computed by differentiation,
/// {f, g} = df/dp dg/dq - df/dq dg/dp (the normalization with {p, q} = 1).
pub fn po_bracket_derivative_oracle(x: &PoElement, y: &PoElement) -> PoElement {
    fn d_dq(x: &PoElement) -> PoElement {
        let mut out = PoElement::zero();
        for (&(a, b), c) in &x.terms {
            if a > 0 {
                out.add_term(a - 1, b, c.scale(&Rat::int(a as i64)));
            }
        }
        out
    }
    fn d_dp(x: &PoElement) -> PoElement {
        let mut out = PoElement::zero();
        for (&(a, b), c) in &x.terms {
            if b > 0 {
                out.add_term(a, b - 1, c.scale(&Rat::int(b as i64)));
            }
        }
        out
    }
    fn mul(x: &PoElement, y: &PoElement) -> PoElement {
        let mut out = PoElement::zero();
        for (&(a1, b1), c1) in &x.terms {
            for (&(a2, b2), c2) in &y.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
    mul(&d_dp(x), &d_dq(y)).sub(&mul(&d_dq(x), &d_dp(y)))
}

/// The fixed sl2-triple: e = -q^2/2, h = qp, f = p^2/2.
pub fn sl2_e() -> PoElement {
    PoElement::monomial_rat(2, 0, Rat::new(-1, 2))
}

pub fn sl2_f() -> PoElement {
    PoElement::monomial_rat(0, 2, Rat::new(1, 2))
}

pub fn sl2_h() -> PoElement {
    PoElement::monomial_rat(1, 1, Rat::ONE)
}

impl fmt::Debug for PoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| format!("({})q^{}p^{}", c, a, b))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
