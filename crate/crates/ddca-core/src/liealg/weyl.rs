//! The one-variable Weyl algebra of polynomial differential operators, and
//! its n-variable version used as a degeneration oracle.
//!
//! Elements are normal-ordered: all x to the left of all derivatives. The
//! product rewrites with `d x = x d + 1`, in closed form
//! `d^b x^c = sum_j C(b,j) (c)_j x^(c-j) d^(b-j)`.

use super::po::PoElement;
use crate::arith::{ParamPoly, Rat};
use std::collections::BTreeMap;
use std::fmt;

/// Normal-ordered element of the one-variable Weyl algebra.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylElement {
    pub terms: BTreeMap<(u32, u32), ParamPoly>,
}

fn binom(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::ZERO;
    }
    let mut acc = Rat::ONE;
    for i in 0..k {
        acc = &acc * &Rat::new((n - i) as i64, (i + 1) as i64);
    }
    acc
}

fn falling(c: u64, j: u64) -> Rat {
    let mut acc = Rat::ONE;
    for i in 0..j {
        if c < i + 1 {
            return Rat::ZERO;
        }
        acc = &acc * &Rat::int((c - i) as i64);
    }
    acc
}

impl WeylElement {
    pub fn zero() -> WeylElement {
        WeylElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// c * x^a d^b
    pub fn monomial(a: u32, b: u32, c: ParamPoly) -> WeylElement {
        let mut out = WeylElement::zero();
        out.add_term(a, b, c);
        out
    }

    pub fn monomial_rat(a: u32, b: u32, c: Rat) -> WeylElement {
        WeylElement::monomial(a, b, ParamPoly::constant(c))
    }

    pub fn one() -> WeylElement {
        WeylElement::monomial(0, 0, ParamPoly::one())
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

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, -c);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> WeylElement {
        if c.is_zero() {
            return WeylElement::zero();
        }
        WeylElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.scale(c)))
                .collect(),
        }
    }
}

/// Normal-ordered product.
pub fn weyl_product(x: &WeylElement, y: &WeylElement) -> WeylElement {
    let mut out = WeylElement::zero();
    for (&(a, b), cx) in &x.terms {
        for (&(c, d), cy) in &y.terms {
            // x^a d^b x^c d^d: d^b x^c = sum_j C(b,j) (c)_j x^(c-j) d^(b-j)
            let coeff = cx * cy;
            let top = b.min(c);
            for j in 0..=top {
                let s = &binom(b as u64, j as u64) * &falling(c as u64, j as u64);
                if s.is_zero() {
                    continue;
                }
                out.add_term(a + c - j, b + d - j, coeff.scale(&s));
            }
        }
    }
    out
}

/// Commutator.
pub fn weyl_bracket(x: &WeylElement, y: &WeylElement) -> WeylElement {
    weyl_product(x, y).sub(&weyl_product(y, x))
}

/// Zero-input error for the leading symbol.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("leading symbol of the zero element")]
pub struct ZeroLeadingSymbol;

/// Top graded part under deg(x^a d^b) = a + b - 2, with x -> q and d -> p.
pub fn weyl_leading_symbol(x: &WeylElement) -> Result<PoElement, ZeroLeadingSymbol> {
    if x.is_zero() {
        return Err(ZeroLeadingSymbol);
    }
    let top = x
        .terms
        .keys()
        .map(|&(a, b)| a as i64 + b as i64)
        .max()
        .unwrap();
    let mut out = PoElement::zero();
    for (&(a, b), c) in &x.terms {
        if a as i64 + b as i64 == top {
            out.add_term(a, b, c.clone());
        }
    }
    Ok(out)
}

// --- n-variable version (degeneration oracle) ----------------------------

/// Normal-ordered element of the n-variable Weyl algebra; keys are
/// (x-exponents, d-exponents).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylN {
    pub terms: BTreeMap<(Vec<u16>, Vec<u16>), ParamPoly>,
}

impl WeylN {
    pub fn zero() -> WeylN {
        WeylN::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, xs: Vec<u16>, ds: Vec<u16>, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((xs, ds)) {
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

    pub fn add(&self, other: &WeylN) -> WeylN {
        let mut out = self.clone();
        for ((xs, ds), c) in &other.terms {
            out.add_term(xs.clone(), ds.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylN) -> WeylN {
        let mut out = self.clone();
        for ((xs, ds), c) in &other.terms {
            out.add_term(xs.clone(), ds.clone(), -c);
        }
        out
    }
}

/// Product in the n-variable Weyl algebra: per-variable rewriting, the
/// variables commute with each other.
pub fn weyln_product(x: &WeylN, y: &WeylN) -> WeylN {
    let mut out = WeylN::zero();
    for ((xa, da), cx) in &x.terms {
        for ((xb, db), cy) in &y.terms {
            let n = xa.len();
            debug_assert_eq!(n, xb.len());
            // Expand product over variables: for each variable i,
            // d^da_i x^xb_i contributes a sum over j_i.
            let coeff = cx * cy;
            let mut partial: Vec<(Vec<u16>, Vec<u16>, Rat)> =
                vec![(Vec::with_capacity(n), Vec::with_capacity(n), Rat::ONE)];
            for i in 0..n {
                let b = da[i];
                let c = xb[i];
                let top = b.min(c);
                let mut next = Vec::with_capacity(partial.len() * (top as usize + 1));
                for j in 0..=top {
                    let s = &binom(b as u64, j as u64) * &falling(c as u64, j as u64);
                    if s.is_zero() {
                        continue;
                    }
                    for (xs, ds, r) in &partial {
                        let mut xs = xs.clone();
                        let mut ds = ds.clone();
                        xs.push(xa[i] + c - j);
                        ds.push(b + db[i] - j);
                        next.push((xs, ds, r * &s));
                    }
                }
                partial = next;
            }
            for (xs, ds, r) in partial {
                out.add_term(xs, ds, coeff.scale(&r));
            }
        }
    }
    out
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| format!("({})x^{}D^{}", c, a, b))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for WeylN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((xs, ds), c)| format!("({})x^{:?}D^{:?}", c, xs, ds))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::super::po::po_bracket;
    use super::*;
    use rand::{Rng, SeedableRng};

    fn m(a: u32, b: u32, num: i64, den: i64) -> WeylElement {
        WeylElement::monomial_rat(a, b, Rat::new(num, den))
    }

    #[test]
    fn defining_relation() {
        // d * x = x d + 1
        let d = m(0, 1, 1, 1);
        let x = m(1, 0, 1, 1);
        let p = weyl_product(&d, &x);
        let expect = m(1, 1, 1, 1).add(&m(0, 0, 1, 1));
        assert_eq!(p, expect);
    }

    #[test]
    fn ad_f_of_r() {
        // [d^2/2, x^3/6] = (x^2 d + x)/2
        let f = m(0, 2, 1, 2);
        let r = m(3, 0, 1, 6);
        let b = weyl_bracket(&f, &r);
        let expect = m(2, 1, 1, 2).add(&m(1, 0, 1, 2));
        assert_eq!(b, expect);
    }

    #[test]
    fn degree_two_relation_value() {
        // [x^3/6, d^3] - [(x^2 d + x)/2, x d^2 + d] = -1/2
        let r = m(3, 0, 1, 6);
        let d3 = m(0, 3, 1, 1);
        let adf_r = m(2, 1, 1, 2).add(&m(1, 0, 1, 2));
        let adf2_r = m(1, 2, 1, 1).add(&m(0, 1, 1, 1));
        let lhs = weyl_bracket(&r, &d3).sub(&weyl_bracket(&adf_r, &adf2_r));
        assert_eq!(lhs, m(0, 0, -1, 2));
    }

    #[test]
    fn associativity_seeded() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xa550c);
        for _ in 0..500 {
            let mut mk = || {
                m(
                    rng.gen_range(0..=5),
                    rng.gen_range(0..=5),
                    rng.gen_range(-4..=4),
                    rng.gen_range(1..=3),
                )
            };
            let (x, y, z) = (mk(), mk(), mk());
            assert_eq!(
                weyl_product(&weyl_product(&x, &y), &z),
                weyl_product(&x, &weyl_product(&y, &z))
            );
        }
    }

    #[test]
    fn leading_symbol_examples() {
        let v = m(1, 1, 1, 1).add(&m(0, 0, 1, 1));
        assert_eq!(
            weyl_leading_symbol(&v).unwrap(),
            PoElement::monomial_rat(1, 1, Rat::ONE)
        );
        assert_eq!(
            weyl_leading_symbol(&m(0, 3, 1, 1)).unwrap(),
            PoElement::monomial_rat(0, 3, Rat::ONE)
        );
        assert_eq!(
            weyl_leading_symbol(&WeylElement::zero()),
            Err(ZeroLeadingSymbol)
        );
    }

    #[test]
    fn gr_compatibility_seeded() {
        // leading([X, Y]) = {leading X, leading Y} whenever the right side
        // is nonzero.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x93c0);
        let mut checked = 0;
        for _ in 0..200 {
            let x = m(rng.gen_range(0..=5), rng.gen_range(0..=5), rng.gen_range(-3..=3).max(1), 1);
            let y = m(rng.gen_range(0..=5), rng.gen_range(0..=5), rng.gen_range(-3..=3).max(1), 1);
            let rhs = po_bracket(
                &weyl_leading_symbol(&x).unwrap(),
                &weyl_leading_symbol(&y).unwrap(),
            );
            if rhs.is_zero() {
                continue;
            }
            let lhs = weyl_leading_symbol(&weyl_bracket(&x, &y)).unwrap();
            assert_eq!(lhs, rhs);
            checked += 1;
        }
        assert!(checked > 100);
    }

    #[test]
    fn n_variable_matches_single_on_diagonal() {
        // In one variable, WeylN(1) must agree with WeylElement.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x77e1);
        for _ in 0..100 {
            let (a1, b1, a2, b2) = (
                rng.gen_range(0..=4u32),
                rng.gen_range(0..=4u32),
                rng.gen_range(0..=4u32),
                rng.gen_range(0..=4u32),
            );
            let x1 = m(a1, b1, 1, 1);
            let y1 = m(a2, b2, 1, 1);
            let p1 = weyl_product(&x1, &y1);
            let mut xn = WeylN::zero();
            xn.add_term(vec![a1 as u16], vec![b1 as u16], ParamPoly::one());
            let mut yn = WeylN::zero();
            yn.add_term(vec![a2 as u16], vec![b2 as u16], ParamPoly::one());
            let pn = weyln_product(&xn, &yn);
            let mut expect = WeylN::zero();
            for (&(a, b), c) in &p1.terms {
                expect.add_term(vec![a as u16], vec![b as u16], c.clone());
            }
            assert_eq!(pn, expect);
        }
    }
}
