//! Sparse multivariate polynomials over the fixed parameter alphabet.
//!
//! The coefficient ring is exact rationals. The variable set is the fixed,
//! globally ordered list of parameter symbols
//! `n < t < k < c < lambda < K < l < s1 < s2 < s3 < nu`;
//! every polynomial carries a full exponent vector over this alphabet, so
//! equality is structural and no variable alignment is ever needed.

use super::rat::Rat;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of parameter symbols.
pub const NSYM: usize = 11;

/// A parameter symbol with the fixed global order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum Sym {
    N = 0,
    T = 1,
    K = 2,
    C = 3,
    Lambda = 4,
    BigK = 5,
    L = 6,
    S1 = 7,
    S2 = 8,
    S3 = 9,
    Nu = 10,
}

impl Sym {
    pub const ALL: [Sym; NSYM] = [
        Sym::N,
        Sym::T,
        Sym::K,
        Sym::C,
        Sym::Lambda,
        Sym::BigK,
        Sym::L,
        Sym::S1,
        Sym::S2,
        Sym::S3,
        Sym::Nu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sym::N => "n",
            Sym::T => "t",
            Sym::K => "k",
            Sym::C => "c",
            Sym::Lambda => "lambda",
            Sym::BigK => "K",
            Sym::L => "l",
            Sym::S1 => "s1",
            Sym::S2 => "s2",
            Sym::S3 => "s3",
            Sym::Nu => "nu",
        }
    }

    pub fn from_name(s: &str) -> Option<Sym> {
        Sym::ALL.iter().copied().find(|y| y.name() == s)
    }
}

/// Exponent vector over the full symbol alphabet, ordered by total degree
/// then lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub [u16; NSYM]);

impl Mono {
    pub const UNIT: Mono = Mono([0; NSYM]);

    pub fn var(s: Sym) -> Mono {
        let mut e = [0u16; NSYM];
        e[s as usize] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for i in 0..NSYM {
            e[i] += other.0[i];
        }
        Mono(e)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial with rational coefficients; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    pub terms: BTreeMap<Mono, Rat>,
}

/// Error for evaluation with an incomplete assignment.
#[derive(Debug, thiserror::Error)]
#[error("assignment missing variable {0}")]
pub struct MissingVariable(pub &'static str);

impl ParamPoly {
    pub fn zero() -> ParamPoly {
        ParamPoly::default()
    }

    pub fn one() -> ParamPoly {
        ParamPoly::constant(Rat::ONE)
    }

    pub fn constant(c: Rat) -> ParamPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::UNIT, c);
        }
        ParamPoly { terms }
    }

    pub fn int(n: i64) -> ParamPoly {
        ParamPoly::constant(Rat::int(n))
    }

    pub fn var(s: Sym) -> ParamPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(s), Rat::ONE);
        ParamPoly { terms }
    }

    /// c * s^e
    pub fn monomial(c: Rat, s: Sym, e: u16) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        let mut m = [0u16; NSYM];
        m[s as usize] = e;
        let mut terms = BTreeMap::new();
        terms.insert(Mono(m), c);
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::UNIT)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::ZERO);
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::UNIT) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Variables that actually occur.
    pub fn variables(&self) -> Vec<Sym> {
        let mut present = [false; NSYM];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    present[i] = true;
                }
            }
        }
        Sym::ALL
            .iter()
            .copied()
            .filter(|s| present[*s as usize])
            .collect()
    }

    pub fn degree_in(&self, s: Sym) -> u16 {
        self.terms
            .keys()
            .map(|m| m.0[s as usize])
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &Rat) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v * c))
                .collect(),
        }
    }

    /// Leading term under the fixed graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact evaluation. The assignment must cover every occurring variable.
    pub fn eval(&self, assignment: &BTreeMap<Sym, Rat>) -> Result<Rat, MissingVariable> {
        for v in self.variables() {
            if !assignment.contains_key(&v) {
                return Err(MissingVariable(v.name()));
            }
        }
        let mut acc = Rat::ZERO;
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let v = &assignment[&Sym::ALL[i]];
                    term = &term * &v.pow(e as u32);
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for a subset of the variables.
    pub fn substitute(&self, map: &BTreeMap<Sym, ParamPoly>) -> ParamPoly {
        let mut acc = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut term = ParamPoly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let s = Sym::ALL[i];
                match map.get(&s) {
                    Some(p) => {
                        for _ in 0..e {
                            term = &term * p;
                        }
                    }
                    None => {
                        term = &term * &ParamPoly::monomial(Rat::ONE, s, e);
                    }
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Partial evaluation of a subset of variables at rational points.
    pub fn eval_partial(&self, assignment: &BTreeMap<Sym, Rat>) -> ParamPoly {
        let map: BTreeMap<Sym, ParamPoly> = assignment
            .iter()
            .map(|(s, v)| (*s, ParamPoly::constant(v.clone())))
            .collect();
        self.substitute(&map)
    }

    /// Content: gcd of coefficients (as a positive rational making the
    /// coefficients coprime integers), with the sign of the leading term.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::ZERO;
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut num_gcd = BigInt::from(0);
        let mut den_lcm = BigInt::from(1);
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer());
            den_lcm = den_lcm.lcm(&c.denom());
        }
        let mut content: Rat = format!("{}/{}", num_gcd, den_lcm).parse().unwrap();
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Divides out the content, yielding integer coefficients with positive
    /// leading coefficient.
    pub fn primitive_part(&self) -> ParamPoly {
        if self.is_zero() {
            return ParamPoly::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Exact division; panics if the division is not exact. Divisor must be
    /// nonzero.
    pub fn div_exact(&self, divisor: &ParamPoly) -> ParamPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (*m, c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (*m, c.clone())
            };
            let mut q = [0u16; NSYM];
            for i in 0..NSYM {
                let (a, b) = (rm.0[i], dm.0[i]);
                assert!(a >= b, "inexact polynomial division");
                q[i] = a - b;
            }
            let qm = Mono(q);
            let qc = &rc / &dc;
            let mut t = ParamPoly::zero();
            t.add_term(qm, qc.clone());
            quot = &quot + &t;
            rem = &rem - &(&t * divisor);
        }
        quot
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (am, ac) in &self.terms {
            for (bm, bc) in &rhs.terms {
                out.add_term(am.mul(bm), ac * bc);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: ParamPoly) -> ParamPoly {
        &self + &rhs
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        &self - &rhs
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(Sym::ALL[i].name());
                if e > 1 {
                    vars.push_str(&format!("^{}", e));
                }
            }
            if vars.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", vars)?;
            } else {
                write!(f, "{}*{}", mag, vars)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_nt() -> ParamPoly {
        ParamPoly::var(Sym::N) * ParamPoly::var(Sym::T)
    }

    #[test]
    fn eval_monomial() {
        // n*t at n=3, t=1 -> 3
        let mut a = BTreeMap::new();
        a.insert(Sym::N, Rat::int(3));
        a.insert(Sym::T, Rat::int(1));
        assert_eq!(p_nt().eval(&a).unwrap(), Rat::int(3));
    }

    #[test]
    fn eval_missing_var() {
        let a = BTreeMap::new();
        assert!(p_nt().eval(&a).is_err());
    }

    #[test]
    fn eval_zero() {
        let a = BTreeMap::new();
        assert_eq!(ParamPoly::zero().eval(&a).unwrap(), Rat::ZERO);
    }

    #[test]
    fn eval_eq4_point() {
        // (k^2+k+1)*nu^2 - k*(k+1)*nu^3 at k=2, nu=1 -> 7 - 6 = 1
        let k = ParamPoly::var(Sym::K);
        let nu = ParamPoly::var(Sym::Nu);
        let p = &(&(&(&(&k * &k) + &k) + &ParamPoly::one()) * &(&nu * &nu))
            - &(&(&k * &(&k + &ParamPoly::one())) * &(&(&nu * &nu) * &nu));
        let mut a = BTreeMap::new();
        a.insert(Sym::K, Rat::int(2));
        a.insert(Sym::Nu, Rat::int(1));
        assert_eq!(p.eval(&a).unwrap(), Rat::int(1));
    }

    #[test]
    fn ring_homomorphism_on_eval() {
        let p = &ParamPoly::var(Sym::K) + &ParamPoly::int(2);
        let q = &ParamPoly::var(Sym::N) - &ParamPoly::var(Sym::K);
        let mut a = BTreeMap::new();
        a.insert(Sym::K, Rat::new(1, 2));
        a.insert(Sym::N, Rat::int(5));
        let lhs = (&p * &q).eval(&a).unwrap();
        let rhs = &p.eval(&a).unwrap() * &q.eval(&a).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn div_exact_roundtrip() {
        let k = ParamPoly::var(Sym::K);
        let a = &(&k * &k) - &ParamPoly::one(); // k^2 - 1
        let b = &k - &ParamPoly::one(); // k - 1
        let q = a.div_exact(&b);
        assert_eq!(q, &k + &ParamPoly::one());
    }

    #[test]
    fn content_and_primitive() {
        let k = ParamPoly::var(Sym::K);
        let p = (&k * &k).scale(&Rat::new(-2, 3)) + k.scale(&Rat::new(-4, 3));
        assert_eq!(p.content(), Rat::new(-2, 3));
        let pp = p.primitive_part();
        let k = ParamPoly::var(Sym::K);
        assert_eq!(pp, &(&k * &k) + &k.scale(&Rat::int(2)));
    }

    #[test]
    fn substitute_poly() {
        // s1 -> 1 + k(k+1)(1-K), then K -> 2: s1 = 1 - k(k+1)
        let s1 = ParamPoly::var(Sym::S1);
        let k = ParamPoly::var(Sym::K);
        let bigk = ParamPoly::var(Sym::BigK);
        let kk1 = &k * &(&k + &ParamPoly::one());
        let val = &ParamPoly::one() + &(&kk1 * &(&ParamPoly::one() - &bigk));
        let mut m = BTreeMap::new();
        m.insert(Sym::S1, val);
        let sub = s1.substitute(&m);
        let mut a = BTreeMap::new();
        a.insert(Sym::BigK, Rat::int(2));
        let at2 = sub.eval_partial(&a);
        let expect = &ParamPoly::one() - &kk1;
        assert_eq!(at2, expect);
    }
}
