//! Rational functions in the parameter symbols, kept in reduced canonical
//! form: gcd(num, den) is a unit and the denominator has leading
//! coefficient 1, so equality is structural.

use super::poly::{ParamPoly, Sym, NSYM};
use super::rat::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Error for a zero denominator.
#[derive(Debug, thiserror::Error)]
#[error("division by zero rational function")]
pub struct DivisionByZero;

/// Reduced rational function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    pub num: ParamPoly,
    pub den: ParamPoly,
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: ParamPoly::one(),
            den: ParamPoly::one(),
        }
    }

    pub fn from_poly(p: ParamPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn var(s: Sym) -> RatFunc {
        RatFunc::from_poly(ParamPoly::var(s))
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc::from_poly(ParamPoly::constant(c))
    }

    /// Canonical reduced form of `num/den`.
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<RatFunc, DivisionByZero> {
        if den.is_zero() {
            return Err(DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        // Normalize the denominator's leading coefficient to 1.
        let lc = den.leading().unwrap().1.clone();
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
        Ok(RatFunc { num, den })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<RatFunc, DivisionByZero> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, map: &BTreeMap<Sym, RatFunc>) -> RatFunc {
        let n = substitute_poly(&self.num, map);
        let d = substitute_poly(&self.den, map);
        // d cannot vanish identically when self.den does not.
        RatFunc::new(
            &n.num * &d.den,
            &n.den * &d.num,
        )
        .expect("substitution produced zero denominator")
    }
}

/// Substitutes rational functions into a polynomial.
pub fn substitute_poly(p: &ParamPoly, map: &BTreeMap<Sym, RatFunc>) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (m, c) in &p.terms {
        let mut term = RatFunc::constant(c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let s = Sym::ALL[i];
            let base = map.get(&s).cloned().unwrap_or_else(|| RatFunc::var(s));
            for _ in 0..e {
                term = &term * &base;
            }
        }
        acc = &acc + &term;
    }
    acc
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).unwrap()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// --- multivariate gcd ---------------------------------------------------

/// View of a polynomial as univariate in `s` with `ParamPoly` coefficients.
fn as_univariate(p: &ParamPoly, s: Sym) -> BTreeMap<u16, ParamPoly> {
    let mut out: BTreeMap<u16, ParamPoly> = BTreeMap::new();
    for (m, c) in &p.terms {
        let e = m.0[s as usize];
        let mut rest = *m;
        rest.0[s as usize] = 0;
        out.entry(e).or_default().add_term(rest, c.clone());
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn from_univariate(coeffs: &BTreeMap<u16, ParamPoly>, s: Sym) -> ParamPoly {
    let mut out = ParamPoly::zero();
    for (e, c) in coeffs {
        for (m, v) in &c.terms {
            let mut m2 = *m;
            m2.0[s as usize] += e;
            out.add_term(m2, v.clone());
        }
    }
    out
}

fn univ_degree(coeffs: &BTreeMap<u16, ParamPoly>) -> u16 {
    coeffs.keys().next_back().copied().unwrap_or(0)
}

/// Content of `p` viewed as univariate in `s`: the gcd of its coefficients.
fn univ_content(coeffs: &BTreeMap<u16, ParamPoly>) -> ParamPoly {
    let mut g = ParamPoly::zero();
    for c in coeffs.values() {
        g = poly_gcd(&g, c);
        if g.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            break;
        }
    }
    g
}

/// Pseudo-remainder of a by b in the distinguished variable.
fn pseudo_rem(
    a: &BTreeMap<u16, ParamPoly>,
    b: &BTreeMap<u16, ParamPoly>,
) -> BTreeMap<u16, ParamPoly> {
    let db = univ_degree(b);
    let lb = b[&db].clone();
    let mut r = a.clone();
    while !r.is_empty() && univ_degree(&r) >= db {
        let dr = univ_degree(&r);
        let lr = r[&dr].clone();
        // r <- lb*r - lr * x^(dr-db) * b
        let mut next: BTreeMap<u16, ParamPoly> = BTreeMap::new();
        for (e, c) in &r {
            let prev = next.entry(*e).or_default();
            *prev = &*prev + &(&lb * c);
        }
        for (e, c) in b {
            let prev = next.entry(e + dr - db).or_default();
            *prev = &*prev - &(&lr * c);
        }
        next.retain(|_, v| !v.is_zero());
        r = next;
    }
    r
}

/// Multivariate polynomial gcd (primitive Euclidean algorithm). Returns a
/// primitive polynomial with positive leading coefficient; `gcd(0, b) = b`.
pub fn poly_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        if b.is_zero() {
            return ParamPoly::zero();
        }
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    // Pick the first variable occurring in either.
    let mut var = None;
    for i in 0..NSYM {
        let s = Sym::ALL[i];
        if a.degree_in(s) > 0 || b.degree_in(s) > 0 {
            var = Some(s);
            break;
        }
    }
    let s = match var {
        None => return ParamPoly::one(), // both constants
        Some(s) => s,
    };
    let ua = as_univariate(a, s);
    let ub = as_univariate(b, s);
    let ca = univ_content(&ua);
    let cb = univ_content(&ub);
    let cont_gcd = poly_gcd(&ca, &cb);
    let mut pa: BTreeMap<u16, ParamPoly> =
        ua.iter().map(|(e, c)| (*e, c.div_exact(&ca))).collect();
    let mut pb: BTreeMap<u16, ParamPoly> =
        ub.iter().map(|(e, c)| (*e, c.div_exact(&cb))).collect();
    if univ_degree(&pa) < univ_degree(&pb) {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_empty() {
        let r = pseudo_rem(&pa, &pb);
        pa = pb;
        pb = if r.is_empty() {
            BTreeMap::new()
        } else {
            // Take primitive part to control coefficient growth.
            let rp = from_univariate(&r, s).primitive_part();
            let c = univ_content(&as_univariate(&rp, s));
            as_univariate(&rp.div_exact(&c), s)
        };
    }
    let g = from_univariate(&pa, s).primitive_part();
    (&g * &cont_gcd).primitive_part()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> ParamPoly {
        ParamPoly::var(Sym::K)
    }

    fn one() -> ParamPoly {
        ParamPoly::one()
    }

    #[test]
    fn reduces_common_factor() {
        // (k^2 - 1)/(k - 1) -> k + 1
        let num = &(&k() * &k()) - &one();
        let den = &k() - &one();
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f.num, &k() + &one());
        assert!(f.den.is_one());
    }

    #[test]
    fn zero_numerator() {
        let f = RatFunc::new(ParamPoly::zero(), k()).unwrap();
        assert!(f.is_zero());
        assert!(f.den.is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(one(), ParamPoly::zero()).is_err());
    }

    #[test]
    fn gcd_multivariate() {
        // gcd((1+k+k^2)^3 * nu^6, k^2 (k+1)^2 nu^6) = nu^6
        let nu = ParamPoly::var(Sym::Nu);
        let q = &(&(&k() * &k()) + &k()) + &one();
        let a = &q.pow(3) * &nu.pow(6);
        let b = &(&k().pow(2) * &(&k() + &one()).pow(2)) * &nu.pow(6);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, nu.pow(6));
    }

    #[test]
    fn structural_equality_after_arith() {
        // k/(k+1) + 1/(k+1) = 1
        let f = RatFunc::new(k(), &k() + &one()).unwrap();
        let g = RatFunc::new(one(), &k() + &one()).unwrap();
        let s = &f + &g;
        assert_eq!(s, RatFunc::one());
    }

    #[test]
    fn substitution_inverts() {
        // g1: k -> 1/k; applying twice is the identity on k/(k+1).
        let f = RatFunc::new(k(), &k() + &one()).unwrap();
        let mut m = BTreeMap::new();
        m.insert(
            Sym::K,
            RatFunc::new(one(), k()).unwrap(),
        );
        let f1 = f.substitute(&m);
        let f2 = f1.substitute(&m);
        assert_eq!(f, f2);
    }
}
