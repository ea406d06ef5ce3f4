//! Universal enveloping algebras via PBW straightening, and the quotient of
//! U(sl2) by a central character value.

use super::po::{po_bracket, PoElement};
use crate::arith::{ParamPoly, Rat, Sym};
use std::collections::BTreeMap;
use std::fmt::Debug;

/// A Lie algebra with an ordered basis and computable bracket; PBW
/// monomials are stored non-increasing, so straightening moves higher-order
/// factors left.
pub trait Carrier {
    type B: Clone + Ord + Debug;
    /// Bracket of two basis elements as a finite combination.
    fn bracket(a: &Self::B, b: &Self::B) -> Vec<(ParamPoly, Self::B)>;
}

/// Monomial basis q^a p^b of the polynomial Poisson algebra, ordered by
/// (a+b, a).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PoBasis(pub u32, pub u32);

impl PartialOrd for PoBasis {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PoBasis {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0 + self.1, self.0, self.1).cmp(&(other.0 + other.1, other.0, other.1))
    }
}

/// U(po) carrier.
pub struct PoCarrier;

impl Carrier for PoCarrier {
    type B = PoBasis;

    fn bracket(a: &PoBasis, b: &PoBasis) -> Vec<(ParamPoly, PoBasis)> {
        let x = PoElement::monomial(a.0, a.1, ParamPoly::one());
        let y = PoElement::monomial(b.0, b.1, ParamPoly::one());
        po_bracket(&x, &y)
            .terms
            .into_iter()
            .map(|((qa, pb), c)| (c, PoBasis(qa, pb)))
            .collect()
    }
}

/// Element of a universal enveloping algebra in PBW normal form.
pub struct UEnv<C: Carrier> {
    pub terms: BTreeMap<Vec<C::B>, ParamPoly>,
}

impl<C: Carrier> Clone for UEnv<C> {
    fn clone(&self) -> Self {
        UEnv {
            terms: self.terms.clone(),
        }
    }
}

impl<C: Carrier> PartialEq for UEnv<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Carrier> Eq for UEnv<C> {}

impl<C: Carrier> Debug for UEnv<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({}){:?}", c, m))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Carrier> Default for UEnv<C> {
    fn default() -> Self {
        UEnv {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Carrier> UEnv<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), ParamPoly::one());
        UEnv { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A single Lie generator.
    pub fn generator(b: C::B) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![b], ParamPoly::one());
        UEnv { terms }
    }

    /// A Lie element as a degree-1 combination.
    pub fn from_lie(parts: Vec<(ParamPoly, C::B)>) -> Self {
        let mut out = Self::zero();
        for (c, b) in parts {
            out.add_term(vec![b], c);
        }
        out
    }

    pub fn add_term(&mut self, mono: Vec<C::B>, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UEnv {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Straightens one raw word into PBW normal form.
    fn straighten(word: &[C::B], coeff: &ParamPoly, out: &mut Self) {
        // Find the first adjacent inversion (left factor strictly smaller
        // than its right neighbor violates the non-increasing order).
        for i in 0..word.len().saturating_sub(1) {
            if word[i] < word[i + 1] {
                // w = u a b v -> u b a v + u [a,b] v
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                Self::straighten(&swapped, coeff, out);
                for (c, br) in C::bracket(&word[i], &word[i + 1]) {
                    let mut shorter = Vec::with_capacity(word.len() - 1);
                    shorter.extend_from_slice(&word[..i]);
                    shorter.push(br);
                    shorter.extend_from_slice(&word[i + 2..]);
                    Self::straighten(&shorter, &(coeff * &c), out);
                }
                return;
            }
        }
        out.add_term(word.to_vec(), coeff.clone());
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut word = Vec::with_capacity(m1.len() + m2.len());
                word.extend_from_slice(m1);
                word.extend_from_slice(m2);
                Self::straighten(&word, &(c1 * c2), &mut out);
            }
        }
        out
    }

    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

/// sl2 basis ordered f > h > e so PBW monomials read f^a h^b e^c.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sl2Basis {
    E,
    H,
    F,
}

impl PartialOrd for Sl2Basis {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sl2Basis {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        fn rank(b: &Sl2Basis) -> u8 {
            match b {
                Sl2Basis::E => 0,
                Sl2Basis::H => 1,
                Sl2Basis::F => 2,
            }
        }
        rank(self).cmp(&rank(other))
    }
}

/// U(sl2) carrier.
pub struct Sl2Carrier;

impl Carrier for Sl2Carrier {
    type B = Sl2Basis;

    fn bracket(a: &Sl2Basis, b: &Sl2Basis) -> Vec<(ParamPoly, Sl2Basis)> {
        use Sl2Basis::*;
        let sign = |v: Vec<(i64, Sl2Basis)>| {
            v.into_iter()
                .map(|(c, b)| (ParamPoly::int(c), b))
                .collect::<Vec<_>>()
        };
        match (a, b) {
            (E, F) => sign(vec![(1, H)]),
            (F, E) => sign(vec![(-1, H)]),
            (H, E) => sign(vec![(2, E)]),
            (E, H) => sign(vec![(-2, E)]),
            (H, F) => sign(vec![(-2, F)]),
            (F, H) => sign(vec![(2, F)]),
            _ => Vec::new(),
        }
    }
}

pub type UPo = UEnv<PoCarrier>;
pub type USl2 = UEnv<Sl2Carrier>;

// --- U(sl2) at a fixed central character ---------------------------------

/// U(sl2) with the Casimir C = ef + fe + h^2/2 specialized to
/// (lambda^2 - 1)/2. Normal form: monomials f^a h^b e^c with a*c = 0 and
/// coefficients in Q[lambda].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GlLambda {
    pub terms: BTreeMap<(u32, u32, u32), ParamPoly>,
}

impl GlLambda {
    pub fn zero() -> GlLambda {
        GlLambda::default()
    }

    pub fn one() -> GlLambda {
        GlLambda::monomial(0, 0, 0, ParamPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn e() -> GlLambda {
        GlLambda::monomial(0, 0, 1, ParamPoly::one())
    }

    pub fn f() -> GlLambda {
        GlLambda::monomial(1, 0, 0, ParamPoly::one())
    }

    pub fn h() -> GlLambda {
        GlLambda::monomial(0, 1, 0, ParamPoly::one())
    }

    pub fn monomial(a: u32, b: u32, c: u32, coeff: ParamPoly) -> GlLambda {
        let mut out = GlLambda::zero();
        out.add_term((a, b, c), coeff);
        out
    }

    fn add_term(&mut self, key: (u32, u32, u32), c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add(&self, other: &GlLambda) -> GlLambda {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GlLambda) -> GlLambda {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, -c);
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> GlLambda {
        if c.is_zero() {
            return GlLambda::zero();
        }
        GlLambda {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// fe = (lambda^2 - 1)/4 - h/2 - h^2/4 as an element.
    fn fe_value() -> GlLambda {
        let lambda2 = ParamPoly::monomial(Rat::ONE, Sym::Lambda, 2);
        let quarter = Rat::new(1, 4);
        let mut out = GlLambda::zero();
        out.add_term(
            (0, 0, 0),
            (&lambda2 - &ParamPoly::one()).scale(&quarter),
        );
        out.add_term((0, 1, 0), ParamPoly::constant(Rat::new(-1, 2)));
        out.add_term((0, 2, 0), ParamPoly::constant(-&quarter));
        out
    }

    /// Expands (h + shift)^b as pure h-monomials.
    fn h_shift_pow(shift: i64, b: u32) -> Vec<(u32, Rat)> {
        // binomial expansion
        let mut out = Vec::new();
        for j in 0..=b {
            let mut coeff = Rat::ONE;
            for t in 0..(b - j) {
                coeff = &coeff * &Rat::int(shift);
                let _ = t;
            }
            // C(b, j)
            let mut binom = Rat::ONE;
            for t in 0..j {
                binom = &binom * &Rat::new((b - t) as i64, (t + 1) as i64);
            }
            out.push((j, &coeff * &binom));
        }
        out
    }

    /// Reduces monomials containing both f and e via the Casimir value.
    fn casimir_reduce(&self) -> GlLambda {
        let mut out = GlLambda::zero();
        let mut pending: Vec<((u32, u32, u32), ParamPoly)> = self
            .terms
            .iter()
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        while let Some(((a, b, c), coeff)) = pending.pop() {
            if a == 0 || c == 0 {
                out.add_term((a, b, c), coeff);
                continue;
            }
            // f^a h^b e^c = f^(a-1) (h+2)^b (fe) e^(c-1)
            let fe = Self::fe_value();
            for (hb, s) in Self::h_shift_pow(2, b) {
                for (&(fa, fb, fc), fcoeff) in &fe.terms {
                    debug_assert_eq!((fa, fc), (0, 0));
                    pending.push((
                        (a - 1, hb + fb, c - 1),
                        (&coeff * fcoeff).scale(&s),
                    ));
                }
            }
        }
        out
    }

    /// Product of basis monomials, then Casimir reduction.
    fn mul_mono(m1: (u32, u32, u32), m2: (u32, u32, u32)) -> GlLambda {
        let (a1, b1, c1) = m1;
        let (a2, b2, c2) = m2;
        if c1 == 0 {
            // f^a1 h^b1 f^a2 h^b2 e^c2 = f^(a1+a2) (h - 2 a2)^b1 h^b2 e^c2
            let mut out = GlLambda::zero();
            for (hb, s) in Self::h_shift_pow(-2 * a2 as i64, b1) {
                out.add_term((a1 + a2, hb + b2, c2), ParamPoly::constant(s));
            }
            return out;
        }
        if a2 == 0 {
            // f^a1 h^b1 e^c1 h^b2 e^c2 = f^a1 h^b1 (h - 2 c1)^b2 e^(c1+c2)
            let mut out = GlLambda::zero();
            for (hb, s) in Self::h_shift_pow(-2 * c1 as i64, b2) {
                out.add_term((a1, b1 + hb, c1 + c2), ParamPoly::constant(s));
            }
            return out;
        }
        // Peel one e past f^a2: e f^a2 = f^a2 e + a2 f^(a2-1)(h - a2 + 1)
        let left = GlLambda::monomial(a1, b1, c1 - 1, ParamPoly::one());
        // right = f^a2 (h-2)^b2 e^(c2+1) + a2 f^(a2-1)(h - a2 + 1) h^b2 e^c2
        let mut right = GlLambda::zero();
        for (hb, s) in Self::h_shift_pow(-2, b2) {
            right.add_term((a2, hb, c2 + 1), ParamPoly::constant(s));
        }
        let a2s = Rat::int(a2 as i64);
        // (h - a2 + 1) h^b2 = h^(b2+1) + (1 - a2) h^b2
        right.add_term((a2 - 1, b2 + 1, c2), ParamPoly::constant(a2s.clone()));
        right.add_term(
            (a2 - 1, b2, c2),
            ParamPoly::constant(&a2s * &Rat::int(1 - a2 as i64)),
        );
        left.mul(&right)
    }

    pub fn mul(&self, other: &GlLambda) -> GlLambda {
        let mut out = GlLambda::zero();
        for (&m1, c1) in &self.terms {
            for (&m2, c2) in &other.terms {
                let p = Self::mul_mono(m1, m2);
                for (&k, c) in &p.terms {
                    out.add_term(k, &(c1 * c2) * c);
                }
            }
        }
        out.casimir_reduce()
    }

    pub fn bracket(&self, other: &GlLambda) -> GlLambda {
        self.mul(other).sub(&other.mul(self))
    }

    /// The Casimir ef + fe + h^2/2 evaluated in the quotient; must be the
    /// scalar (lambda^2 - 1)/2.
    pub fn casimir() -> GlLambda {
        let e = Self::e();
        let f = Self::f();
        let h = Self::h();
        let h2 = h.mul(&h).scale(&ParamPoly::constant(Rat::new(1, 2)));
        e.mul(&f).add(&f.mul(&e)).add(&h2)
    }
}

impl Debug for GlLambda {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(fm, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b, c), v)| format!("({})f^{}h^{}e^{}", v, a, b, c))
            .collect();
        write!(fm, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usl2_straightening() {
        // f * e = ef - h in PBW order f^a h^b e^c (f before e means the
        // monomial [F, E] is already normal; E*F needs straightening).
        let e = USl2::generator(Sl2Basis::E);
        let f = USl2::generator(Sl2Basis::F);
        let fe = f.mul(&e); // normal: f e
        let ef = e.mul(&f); // straightens to f e + h
        let h = USl2::generator(Sl2Basis::H);
        assert_eq!(ef, fe.add(&h));
        // [e, f] = h
        assert_eq!(e.bracket(&f), h);
    }

    #[test]
    fn upo_central_k() {
        // (qp) * K = K * (qp)
        let qp = UPo::generator(PoBasis(1, 1));
        let k = UPo::generator(PoBasis(0, 0));
        assert_eq!(qp.mul(&k), k.mul(&qp));
    }

    #[test]
    fn upo_bracket_matches_lie() {
        // [f, q^3/6] in U(po) equals the Lie bracket value q^2 p / 2.
        let f = UPo::generator(PoBasis(0, 2)).scale(&ParamPoly::constant(Rat::new(1, 2)));
        let r = UPo::generator(PoBasis(3, 0)).scale(&ParamPoly::constant(Rat::new(1, 6)));
        let br = f.bracket(&r);
        let expect =
            UPo::generator(PoBasis(2, 1)).scale(&ParamPoly::constant(Rat::new(1, 2)));
        assert_eq!(br, expect);
    }

    #[test]
    fn upo_associativity_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0e0f);
        for _ in 0..60 {
            let mut mk = || {
                UPo::generator(PoBasis(rng.gen_range(0..=3), rng.gen_range(0..=3)))
            };
            let (x, y, z) = (mk(), mk(), mk());
            assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }
    }

    #[test]
    fn gl_lambda_casimir_is_scalar() {
        let c = GlLambda::casimir();
        let lambda2 = ParamPoly::monomial(Rat::ONE, Sym::Lambda, 2);
        let expect = GlLambda::monomial(
            0,
            0,
            0,
            (&lambda2 - &ParamPoly::one()).scale(&Rat::new(1, 2)),
        );
        assert_eq!(c, expect);
    }

    #[test]
    fn gl_lambda_sl2_relations() {
        let e = GlLambda::e();
        let f = GlLambda::f();
        let h = GlLambda::h();
        assert_eq!(e.bracket(&f), h);
        assert_eq!(h.bracket(&e), e.scale(&ParamPoly::int(2)));
        assert_eq!(h.bracket(&f), f.scale(&ParamPoly::int(-2)));
    }

    #[test]
    fn gl_lambda_ef_normal_form() {
        // ef = fe + h with fe = (lambda^2-1)/4 - h/2 - h^2/4:
        // ef = (lambda^2-1)/4 + h/2 - h^2/4.
        let e = GlLambda::e();
        let f = GlLambda::f();
        let ef = e.mul(&f);
        let lambda2 = ParamPoly::monomial(Rat::ONE, Sym::Lambda, 2);
        let mut expect = GlLambda::zero();
        expect.add_term((0, 0, 0), (&lambda2 - &ParamPoly::one()).scale(&Rat::new(1, 4)));
        expect.add_term((0, 1, 0), ParamPoly::constant(Rat::new(1, 2)));
        expect.add_term((0, 2, 0), ParamPoly::constant(Rat::new(-1, 4)));
        assert_eq!(ef, expect);
    }

    #[test]
    fn gl_lambda_associativity_seeded() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x91a);
        for _ in 0..80 {
            let mut mk = || {
                let a = rng.gen_range(0..=2u32);
                let c = if a > 0 { 0 } else { rng.gen_range(0..=2u32) };
                GlLambda::monomial(a, rng.gen_range(0..=2), c, ParamPoly::one())
            };
            let (x, y, z) = (mk(), mk(), mk());
            assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }
    }
}
