//! Poisson-bracket calculus with exponents affine in the symbol l.
//!
//! Monomials are coeff(l) * q^(a0 + a1*l) p^(b0 + b1*l); the bracket formula
//! applies verbatim with coefficients in Q[l]. Used by the direct
//! verification of the induction identities, where basis vectors of the
//! degree-(l-2) component are q-power monomials with l symbolic.

use super::po::PoElement;
#[cfg(test)]
use super::po::po_bracket;
use crate::arith::{ParamPoly, Rat, Sym};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent affine in l: `c0 + c1 * l`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineExp {
    pub c0: i64,
    pub c1: i64,
}

impl AffineExp {
    pub fn constant(c: i64) -> AffineExp {
        AffineExp { c0: c, c1: 0 }
    }

    pub fn linear(c0: i64) -> AffineExp {
        AffineExp { c0, c1: 1 }
    }

    pub fn add(self, other: AffineExp) -> AffineExp {
        AffineExp {
            c0: self.c0 + other.c0,
            c1: self.c1 + other.c1,
        }
    }

    pub fn sub_const(self, c: i64) -> AffineExp {
        AffineExp {
            c0: self.c0 - c,
            c1: self.c1,
        }
    }

    /// As a polynomial in l.
    pub fn to_poly(self) -> ParamPoly {
        &ParamPoly::int(self.c0) + &ParamPoly::monomial(Rat::int(self.c1), Sym::L, 1)
    }

    pub fn eval(self, l: i64) -> i64 {
        self.c0 + self.c1 * l
    }
}

/// Symbolic-in-l element of the polynomial Poisson algebra.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymbolicPo {
    pub terms: BTreeMap<(AffineExp, AffineExp), ParamPoly>,
}

impl SymbolicPo {
    pub fn zero() -> SymbolicPo {
        SymbolicPo::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial(a: AffineExp, b: AffineExp, c: ParamPoly) -> SymbolicPo {
        let mut out = SymbolicPo::zero();
        out.add_term(a, b, c);
        out
    }

    pub fn add_term(&mut self, a: AffineExp, b: AffineExp, c: ParamPoly) {
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

    pub fn add(&self, other: &SymbolicPo) -> SymbolicPo {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> SymbolicPo {
        if c.is_zero() {
            return SymbolicPo::zero();
        }
        SymbolicPo {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// From a concrete element (constant exponents).
    pub fn from_concrete(x: &PoElement) -> SymbolicPo {
        let mut out = SymbolicPo::zero();
        for (&(a, b), c) in &x.terms {
            out.add_term(
                AffineExp::constant(a as i64),
                AffineExp::constant(b as i64),
                c.clone(),
            );
        }
        out
    }

    /// Specializes l to an integer; exponents must land in the nonnegative
    /// range. Coefficients that still mention l are evaluated as well.
    pub fn specialize(&self, l: i64) -> PoElement {
        let mut out = PoElement::zero();
        let mut assignment = BTreeMap::new();
        assignment.insert(Sym::L, Rat::int(l));
        for (&(a, b), c) in &self.terms {
            let av = a.eval(l);
            let bv = b.eval(l);
            assert!(av >= 0 && bv >= 0, "specialization out of range");
            let cv = c.eval_partial(&assignment);
            out.add_term(av as u32, bv as u32, cv);
        }
        out
    }

    /// True when proportional to `other` by a single ratio in Q(l); returns
    /// the ratio as (num, den) when it exists and self is nonzero.
    pub fn proportional_to(&self, other: &SymbolicPo) -> Option<(ParamPoly, ParamPoly)> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let mut ratio: Option<(ParamPoly, ParamPoly)> = None;
        for ((ka, ca), (kb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            if ka != kb {
                return None;
            }
            match &ratio {
                None => ratio = Some((ca.clone(), cb.clone())),
                Some((rn, rd)) => {
                    // ca/cb == rn/rd <=> ca*rd == rn*cb
                    if &(ca * rd) != &(rn * cb) {
                        return None;
                    }
                }
            }
        }
        ratio
    }
}

/// The bracket with exponents affine in l; coefficient (lm - nk) becomes a
/// polynomial of degree <= 2 in l.
pub fn po_bracket_symbolic(x: &SymbolicPo, y: &SymbolicPo) -> SymbolicPo {
    let mut out = SymbolicPo::zero();
    for (&(ka, la), cx) in &x.terms {
        for (&(ma, na), cy) in &y.terms {
            // scalar = l_exp * m_exp - n_exp * k_exp as polynomials in l
            let scalar =
                &(&la.to_poly() * &ma.to_poly()) - &(&na.to_poly() * &ka.to_poly());
            if scalar.is_zero() {
                continue;
            }
            let a = ka.add(ma).sub_const(1);
            let b = la.add(na).sub_const(1);
            out.add_term(a, b, &(cx * cy) * &scalar);
        }
    }
    out
}

impl fmt::Debug for SymbolicPo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let part = |e: AffineExp| -> String {
            match (e.c0, e.c1) {
                (c0, 0) => format!("{}", c0),
                (0, 1) => "l".to_string(),
                (c0, 1) => format!("l{:+}", c0),
                (c0, c1) => format!("{}l{:+}", c1, c0),
            }
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| format!("({})q^({})p^({})", c, part(a), part(b)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// v_i^l = f^(i-1) q^l computed symbolically (i >= 1, small).
pub fn v_basis(i: u32, shift: i64) -> SymbolicPo {
    // q^(l + shift), then bracket with f = p^2/2 repeatedly.
    let f = SymbolicPo::from_concrete(&super::po::sl2_f());
    let mut v = SymbolicPo::monomial(
        AffineExp { c0: shift, c1: 1 },
        AffineExp::constant(0),
        ParamPoly::one(),
    );
    for _ in 1..i {
        v = po_bracket_symbolic(&f, &v);
    }
    v
}
