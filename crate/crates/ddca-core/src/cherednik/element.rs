//! The finite-rank algebras: full elements with group parts in PBW normal
//! form (x-block, y-block, group element), products by rewriting, and the
//! defining commutators derived mechanically from the symplectic-reflection
//! relation.

use super::group::{CherType, GroupElem};
use crate::arith::{ParamPoly, Rat, Sym};
use std::collections::BTreeMap;

/// Context: algebra type and rank; carries the commutator table
/// [y_i, x_j] and the enumerated group.
pub struct CherAlgebra {
    pub ty: CherType,
    pub n: usize,
    /// [y_i, x_j] as a normal-form element (scalar and group terms only).
    commutators: Vec<Vec<CherElement>>,
    pub group: Vec<GroupElem>,
}

/// Element in PBW normal form: sparse map
/// (x-exponents, y-exponents, group element) -> coefficient.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct CherElement {
    pub terms: BTreeMap<(Vec<u16>, Vec<u16>, GroupElem), ParamPoly>,
}

impl CherElement {
    pub fn zero() -> CherElement {
        CherElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (Vec<u16>, Vec<u16>, GroupElem), c: ParamPoly) {
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

    pub fn add(&self, other: &CherElement) -> CherElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CherElement) -> CherElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> CherElement {
        if c.is_zero() {
            return CherElement::zero();
        }
        CherElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }
}

/// A generator letter for raw products.
#[derive(Clone, Debug)]
pub enum CherGen {
    X(usize),
    Y(usize),
    Group(GroupElem),
    Scalar(ParamPoly),
}

impl CherAlgebra {
    pub fn new(ty: CherType, n: usize) -> CherAlgebra {
        Self::with_params(ty, n, &BTreeMap::new())
    }

    /// Constructs the algebra with parameter substitutions (for example
    /// t = 1 or c = lambda - 1/2) folded into the defining commutators.
    pub fn with_params(
        ty: CherType,
        n: usize,
        subst: &BTreeMap<crate::arith::Sym, ParamPoly>,
    ) -> CherAlgebra {
        let group = GroupElem::enumerate(ty, n);
        let mut commutators = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut c = Self::derive_commutator(ty, n, i, j);
                if !subst.is_empty() {
                    c = CherElement {
                        terms: c
                            .terms
                            .iter()
                            .map(|(k, v)| (k.clone(), v.substitute(subst)))
                            .collect(),
                    };
                }
                row.push(c);
            }
            commutators.push(row);
        }
        CherAlgebra {
            ty,
            n,
            commutators,
            group,
        }
    }

    /// [y_i, x_j] from the defining relation
    /// [y, x] = t w(y, x) - k sum_{s in Sigma} w(y, (1-s)x) s
    ///          - (c/(1 - T_C)) sum_{s in Sigma_C} w((1-s)y, (1-s)x) s,
    /// with w(y_a, x_b) = delta_ab, evaluated through the linear action of
    /// each reflection on the basis.
    fn derive_commutator(ty: CherType, n: usize, i: usize, j: usize) -> CherElement {
        let e0 = || vec![0u16; n];
        let mut out = CherElement::zero();
        // t-part
        if i == j {
            out.add_term(
                (e0(), e0(), GroupElem::identity(n)),
                ParamPoly::var(Sym::T),
            );
        }
        // omega(y_i, v) where v is a signed combination of x-basis vectors:
        // returns the coefficient of x_i.
        let omega_y_x = |coeffs: &BTreeMap<usize, i64>| -> i64 {
            coeffs.get(&i).copied().unwrap_or(0)
        };
        // (1 - s) x_j as {index -> coeff}
        let one_minus_s_x = |s: &GroupElem, idx: usize| -> BTreeMap<usize, i64> {
            let mut m = BTreeMap::new();
            m.insert(idx, 1i64);
            // s(x_idx) = sign * x_(perm(idx))
            let target = s.perm[idx] as usize;
            let sign = s.sign[idx] as i64;
            *m.entry(target).or_insert(0) -= sign;
            m.retain(|_, v| *v != 0);
            m
        };
        // Sigma: conjugates of transpositions.
        let mut sigma: Vec<GroupElem> = Vec::new();
        for l in 0..n {
            for m in l + 1..n {
                sigma.push(GroupElem::transposition(n, l, m));
                if ty == CherType::B {
                    let s = GroupElem::transposition(n, l, m)
                        .compose(&GroupElem::gamma(n, l))
                        .compose(&GroupElem::gamma(n, m));
                    sigma.push(s);
                }
            }
        }
        let k = ParamPoly::var(Sym::K);
        for s in &sigma {
            let v = one_minus_s_x(s, j);
            let w = omega_y_x(&v);
            if w != 0 {
                out.add_term(
                    (e0(), e0(), s.clone()),
                    (-&k).scale(&Rat::int(w)),
                );
            }
        }
        // Sigma_C: the sign flips (type B only); T_C = -1 so the prefactor
        // is c/2.
        if ty == CherType::B {
            let c = ParamPoly::var(Sym::C);
            for m in 0..n {
                let g = GroupElem::gamma(n, m);
                // (1 - gamma_m) y_i and (1 - gamma_m) x_j
                let y = if m == i { 2i64 } else { 0 };
                let x = if m == j { 2i64 } else { 0 };
                // omega(2 y_i, 2 x_j) = 4 delta_ij when both survive
                let w = if i == j { y * x } else { 0 };
                if w != 0 {
                    out.add_term(
                        (e0(), e0(), g),
                        (-&c).scale(&Rat::new(w, 2)),
                    );
                }
            }
        }
        out
    }

    pub fn group_order(&self) -> usize {
        self.group.len()
    }

    /// The defining commutator [y_i, x_j].
    pub fn commutator_yx(&self, i: usize, j: usize) -> &CherElement {
        &self.commutators[i][j]
    }

    fn exp_zero(&self) -> Vec<u16> {
        vec![0u16; self.n]
    }

    pub fn one(&self) -> CherElement {
        let mut out = CherElement::zero();
        out.add_term(
            (self.exp_zero(), self.exp_zero(), GroupElem::identity(self.n)),
            ParamPoly::one(),
        );
        out
    }

    pub fn x(&self, i: usize) -> CherElement {
        let mut e = self.exp_zero();
        e[i] = 1;
        let mut out = CherElement::zero();
        out.add_term(
            (e, self.exp_zero(), GroupElem::identity(self.n)),
            ParamPoly::one(),
        );
        out
    }

    pub fn y(&self, i: usize) -> CherElement {
        let mut e = self.exp_zero();
        e[i] = 1;
        let mut out = CherElement::zero();
        out.add_term(
            (self.exp_zero(), e, GroupElem::identity(self.n)),
            ParamPoly::one(),
        );
        out
    }

    pub fn group_elt(&self, g: GroupElem) -> CherElement {
        let mut out = CherElement::zero();
        out.add_term((self.exp_zero(), self.exp_zero(), g), ParamPoly::one());
        out
    }

    /// The averaging idempotent of the group algebra.
    pub fn symmetrizer(&self) -> CherElement {
        let order = Rat::int(self.group.len() as i64);
        let mut out = CherElement::zero();
        for g in &self.group {
            out.add_term(
                (self.exp_zero(), self.exp_zero(), g.clone()),
                ParamPoly::constant(order.recip()),
            );
        }
        out
    }

    /// Normal form of a raw product of generators (the PBW rewriting).
    pub fn normal_form(&self, word: &[CherGen]) -> CherElement {
        let mut acc = self.one();
        for gen in word {
            let rhs = match gen {
                CherGen::X(i) => self.x(*i),
                CherGen::Y(i) => self.y(*i),
                CherGen::Group(g) => self.group_elt(g.clone()),
                CherGen::Scalar(c) => {
                    acc = acc.scale(c);
                    continue;
                }
            };
            acc = self.mul(&acc, &rhs);
        }
        acc
    }

    /// Product in normal form.
    pub fn mul(&self, a: &CherElement, b: &CherElement) -> CherElement {
        let mut out = CherElement::zero();
        for ((ax, ay, ag), ac) in &a.terms {
            for ((bx, by, bg), bc) in &b.terms {
                // Conjugate b's letters through ag:
                // ag x^bx = x^(ag bx) ag with a sign in type B.
                let (cx, sx) = ag.act_on_exponents(bx);
                let (cy, sy) = ag.act_on_exponents(by);
                let g = ag.compose(bg);
                let mut coeff = ac * bc;
                if sx * sy < 0 {
                    coeff = -&coeff;
                }
                // Now reduce x^ax y^ay x^cx y^cy g.
                self.straighten(ax, ay, &cx, &cy, &g, &coeff, &mut out);
            }
        }
        out
    }

    /// Reduces x^a y^b x^c y^d g into normal form, accumulating into out.
    fn straighten(
        &self,
        a: &[u16],
        b: &[u16],
        c: &[u16],
        d: &[u16],
        g: &GroupElem,
        coeff: &ParamPoly,
        out: &mut CherElement,
    ) {
        if coeff.is_zero() {
            return;
        }
        let b_total: u32 = b.iter().map(|&e| e as u32).sum();
        let c_total: u32 = c.iter().map(|&e| e as u32).sum();
        if b_total == 0 || c_total == 0 {
            let xs: Vec<u16> = a.iter().zip(c).map(|(p, q)| p + q).collect();
            let ys: Vec<u16> = b.iter().zip(d).map(|(p, q)| p + q).collect();
            out.add_term((xs, ys, g.clone()), coeff.clone());
            return;
        }
        // Boundary pair: last y-index i in b, first x-index j in c.
        let i = (0..self.n).rev().find(|&i| b[i] > 0).unwrap();
        let j = (0..self.n).find(|&j| c[j] > 0).unwrap();
        let mut b1 = b.to_vec();
        b1[i] -= 1;
        let mut c1 = c.to_vec();
        c1[j] -= 1;
        // Swap part: y^b1 x_j (y_i x^c1 y^d g) -- reduce the inner part
        // first, then feed x_j back into the x-block.
        let mut inner = CherElement::zero();
        let mut ei = vec![0u16; self.n];
        ei[i] = 1;
        self.straighten(&vec![0u16; self.n], &ei, &c1, d, g, coeff, &mut inner);
        for ((ix, iy, ig), ic) in &inner.terms {
            let mut cx = ix.clone();
            cx[j] += 1;
            self.straighten(a, &b1, &cx, iy, ig, ic, out);
        }
        // Commutator part: y^b1 [y_i, x_j] x^c1 y^d g.
        for ((_, _, s), sc) in &self.commutator_yx(i, j).terms {
            // Push s through x^c1 y^d and into g.
            let (sx, sgn_x) = s.act_on_exponents(&c1);
            let (sy, sgn_y) = s.act_on_exponents(d);
            let sg = s.compose(g);
            let mut cc = coeff * sc;
            if sgn_x * sgn_y < 0 {
                cc = -&cc;
            }
            self.straighten(a, &b1, &sx, &sy, &sg, &cc, out);
        }
    }

    /// x,y-degree filtration level of an element.
    pub fn degree(a: &CherElement) -> u32 {
        a.terms
            .keys()
            .map(|(x, y, _)| {
                x.iter().map(|&e| e as u32).sum::<u32>() + y.iter().map(|&e| e as u32).sum::<u32>()
            })
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tkpoly(t: i64, k: i64) -> ParamPoly {
        &ParamPoly::var(Sym::T).scale(&Rat::int(t)) + &ParamPoly::var(Sym::K).scale(&Rat::int(k))
    }

    #[test]
    fn type_a_commutators_match_hand_form() {
        // [y_0, x_0] = t - k s_01 in rank 2; [y_0, x_1] = k s_01.
        let alg = CherAlgebra::new(CherType::A, 2);
        let c = alg.commutator_yx(0, 0);
        let id = GroupElem::identity(2);
        let s01 = GroupElem::transposition(2, 0, 1);
        assert_eq!(c.terms.len(), 2);
        assert_eq!(
            c.terms[&(vec![0, 0], vec![0, 0], id)],
            ParamPoly::var(Sym::T)
        );
        assert_eq!(
            c.terms[&(vec![0, 0], vec![0, 0], s01.clone())],
            -&ParamPoly::var(Sym::K)
        );
        let c = alg.commutator_yx(0, 1);
        assert_eq!(c.terms.len(), 1);
        assert_eq!(
            c.terms[&(vec![0, 0], vec![0, 0], s01)],
            ParamPoly::var(Sym::K)
        );
        let _ = tkpoly;
    }

    #[test]
    fn type_b_commutators_match_hand_form() {
        // [y_0, x_0] = t - k(s_01 + s_01 g0 g1) - 2c g0 in rank 2;
        // [y_0, x_1] = k s_01 - k s_01 g0 g1.
        let alg = CherAlgebra::new(CherType::B, 2);
        let c = alg.commutator_yx(0, 0);
        let id = GroupElem::identity(2);
        let s01 = GroupElem::transposition(2, 0, 1);
        let s01gg = s01
            .compose(&GroupElem::gamma(2, 0))
            .compose(&GroupElem::gamma(2, 1));
        let g0 = GroupElem::gamma(2, 0);
        assert_eq!(c.terms.len(), 4);
        assert_eq!(c.terms[&(vec![0, 0], vec![0, 0], id)], ParamPoly::var(Sym::T));
        assert_eq!(
            c.terms[&(vec![0, 0], vec![0, 0], s01.clone())],
            -&ParamPoly::var(Sym::K)
        );
        assert_eq!(
            c.terms[&(vec![0, 0], vec![0, 0], s01gg.clone())],
            -&ParamPoly::var(Sym::K)
        );
        assert_eq!(
            c.terms[&(vec![0, 0], vec![0, 0], g0)],
            ParamPoly::var(Sym::C).scale(&Rat::int(-2))
        );
        let c = alg.commutator_yx(0, 1);
        assert_eq!(c.terms.len(), 2);
        assert_eq!(
            c.terms[&(vec![0, 0], vec![0, 0], s01)],
            ParamPoly::var(Sym::K)
        );
        assert_eq!(
            c.terms[&(vec![0, 0], vec![0, 0], s01gg)],
            -&ParamPoly::var(Sym::K)
        );
    }

    #[test]
    fn normal_form_examples() {
        // y_0 x_0 in rank 2 type A -> x_0 y_0 + t - k s_01
        let alg = CherAlgebra::new(CherType::A, 2);
        let nf = alg.normal_form(&[CherGen::Y(0), CherGen::X(0)]);
        let id = GroupElem::identity(2);
        let s01 = GroupElem::transposition(2, 0, 1);
        assert_eq!(nf.terms.len(), 3);
        assert_eq!(nf.terms[&(vec![1, 0], vec![1, 0], id.clone())], ParamPoly::one());
        assert_eq!(nf.terms[&(vec![0, 0], vec![0, 0], id)], ParamPoly::var(Sym::T));
        assert_eq!(
            nf.terms[&(vec![0, 0], vec![0, 0], s01)],
            -&ParamPoly::var(Sym::K)
        );
        // y_0 x_1 -> x_1 y_0 + k s_01
        let nf = alg.normal_form(&[CherGen::Y(0), CherGen::X(1)]);
        assert_eq!(nf.terms.len(), 2);
        // s_01 x_0 -> x_1 s_01
        let nf = alg.normal_form(&[
            CherGen::Group(GroupElem::transposition(2, 0, 1)),
            CherGen::X(0),
        ]);
        assert_eq!(nf.terms.len(), 1);
        let ((xs, ys, g), c) = nf.terms.iter().next().unwrap();
        assert_eq!(xs, &vec![0, 1]);
        assert_eq!(ys, &vec![0, 0]);
        assert_eq!(g, &GroupElem::transposition(2, 0, 1));
        assert_eq!(c, &ParamPoly::one());
    }

    #[test]
    fn symmetrizer_is_idempotent() {
        for (ty, n) in [(CherType::A, 2), (CherType::A, 3), (CherType::B, 1), (CherType::B, 2)] {
            let alg = CherAlgebra::new(ty, n);
            let e = alg.symmetrizer();
            assert_eq!(alg.mul(&e, &e), e);
        }
    }

    #[test]
    fn associativity_seeded() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xc4e2);
        for (ty, n) in [(CherType::A, 2), (CherType::A, 3), (CherType::B, 2)] {
            let alg = CherAlgebra::new(ty, n);
            for _ in 0..67 {
                let mut random_elt = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let mut word = Vec::new();
                    for _ in 0..rng.gen_range(1..=3) {
                        match rng.gen_range(0..3) {
                            0 => word.push(CherGen::X(rng.gen_range(0..n))),
                            1 => word.push(CherGen::Y(rng.gen_range(0..n))),
                            _ => {
                                let g = alg.group[rng.gen_range(0..alg.group.len())].clone();
                                word.push(CherGen::Group(g));
                            }
                        }
                    }
                    alg.normal_form(&word)
                };
                let a = random_elt(&mut rng);
                let b = random_elt(&mut rng);
                let c = random_elt(&mut rng);
                assert_eq!(
                    alg.mul(&alg.mul(&a, &b), &c),
                    alg.mul(&a, &alg.mul(&b, &c))
                );
            }
        }
    }

    #[test]
    fn pbw_dimension_count() {
        // Build every word g * (generator letters) of x,y-degree <= d by
        // multiplying through the rewriting engine, collect the distinct
        // normal-form keys of degree <= d that arise, and compare against
        // dim S(h + h*)_(<= d) x |group|. A non-confluent rewriting would
        // merge or miss keys.
        fn count_monomials(vars: usize, max_deg: u32) -> u64 {
            // C(vars + max_deg, vars)
            let mut acc = 1u64;
            for i in 1..=vars as u64 {
                acc = acc * (max_deg as u64 + i) / i;
            }
            acc
        }
        for (ty, n, d) in [
            (CherType::A, 2, 4),
            (CherType::A, 3, 3),
            (CherType::B, 2, 3),
        ] {
            let alg = CherAlgebra::new(ty, n);
            let expected = count_monomials(2 * n, d) * alg.group_order() as u64;
            use std::collections::BTreeSet;
            let mut keys: BTreeSet<(Vec<u16>, Vec<u16>, GroupElem)> = BTreeSet::new();
            // Seed: group elements; then extend by all single letters,
            // keeping elements of degree <= d. Walk breadth-first over
            // products, recording every key that appears.
            let mut frontier: Vec<CherElement> =
                alg.group.iter().map(|g| alg.group_elt(g.clone())).collect();
            for elt in &frontier {
                for k in elt.terms.keys() {
                    keys.insert(k.clone());
                }
            }
            for _ in 0..d {
                let mut next = Vec::new();
                for elt in &frontier {
                    for letter in 0..2 * n {
                        let gen = if letter < n {
                            alg.x(letter)
                        } else {
                            alg.y(letter - n)
                        };
                        // Right-multiplying by a letter exercises the y-x
                        // rewriting.
                        let prod = alg.mul(elt, &gen);
                        for k in prod.terms.keys() {
                            let deg: u32 = k.0.iter().map(|&e| e as u32).sum::<u32>()
                                + k.1.iter().map(|&e| e as u32).sum::<u32>();
                            if deg <= d {
                                keys.insert(k.clone());
                            }
                        }
                        next.push(prod);
                    }
                }
                frontier = next;
            }
            assert_eq!(keys.len() as u64, expected, "{:?} n={} d={}", ty, n, d);
        }
    }
}
