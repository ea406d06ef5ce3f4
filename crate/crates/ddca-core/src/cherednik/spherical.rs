//! The spherical subalgebra: elements v.e with a group-free, G-invariant
//! prefix, multiplied without materializing group-algebra components.
//!
//! Products use e v e = sym(v) e and push every reflection generated by the
//! rewriting rightward into the idempotent, so only exponent pairs are ever
//! stored.

use super::element::{CherAlgebra, CherElement};
use super::group::{CherType, GroupElem};
use crate::arith::{ParamPoly, Rat};
use std::collections::BTreeMap;

/// Spherical element: sparse map (x-exponents, y-exponents) -> coefficient,
/// denoting sum c . x^a y^b . e, with the whole sum G-invariant.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SphElement {
    pub terms: BTreeMap<(Vec<u16>, Vec<u16>), ParamPoly>,
}

impl SphElement {
    pub fn zero() -> SphElement {
        SphElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (Vec<u16>, Vec<u16>), c: ParamPoly) {
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

    pub fn add(&self, other: &SphElement) -> SphElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SphElement) -> SphElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> SphElement {
        if c.is_zero() {
            return SphElement::zero();
        }
        SphElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Filtration degree: max |a| + |b|.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|(a, b)| {
                a.iter().map(|&e| e as u32).sum::<u32>() + b.iter().map(|&e| e as u32).sum::<u32>()
            })
            .max()
            .unwrap_or(0)
    }

    /// The top-degree part.
    pub fn leading_part(&self) -> SphElement {
        let top = self.degree();
        SphElement {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| {
                    a.iter().map(|&e| e as u32).sum::<u32>()
                        + b.iter().map(|&e| e as u32).sum::<u32>()
                        == top
                })
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

/// The spherical algebra engine; wraps the full algebra for its commutator
/// table and group enumeration.
pub struct SphericalAlgebra {
    pub alg: CherAlgebra,
}

impl SphericalAlgebra {
    pub fn new(ty: CherType, n: usize) -> SphericalAlgebra {
        SphericalAlgebra {
            alg: CherAlgebra::new(ty, n),
        }
    }

    /// Engine with parameter substitutions folded into the commutators.
    pub fn with_params(
        ty: CherType,
        n: usize,
        subst: &std::collections::BTreeMap<crate::arith::Sym, ParamPoly>,
    ) -> SphericalAlgebra {
        SphericalAlgebra {
            alg: CherAlgebra::with_params(ty, n, subst),
        }
    }

    pub fn n(&self) -> usize {
        self.alg.n
    }

    /// The unit: 1.e = e.
    pub fn one(&self) -> SphElement {
        let mut out = SphElement::zero();
        out.add_term(
            (vec![0; self.n()], vec![0; self.n()]),
            ParamPoly::one(),
        );
        out
    }

    /// Normal form of a group-free word of letters (is_y, index) times e.
    pub fn word_nf(&self, word: &[(bool, usize)], coeff: &ParamPoly) -> SphElement {
        let mut out = SphElement::zero();
        self.word_nf_rec(word.to_vec(), coeff.clone(), &mut out);
        out
    }

    fn word_nf_rec(&self, word: Vec<(bool, usize)>, coeff: ParamPoly, out: &mut SphElement) {
        if coeff.is_zero() {
            return;
        }
        // Find the first adjacent (y, x) pair.
        let pos = word
            .windows(2)
            .position(|w| w[0].0 && !w[1].0);
        let p = match pos {
            None => {
                // Pure x-block then y-block in index-arbitrary order.
                let mut xs = vec![0u16; self.n()];
                let mut ys = vec![0u16; self.n()];
                for (is_y, i) in word {
                    if is_y {
                        ys[i] += 1;
                    } else {
                        xs[i] += 1;
                    }
                }
                out.add_term((xs, ys), coeff);
                return;
            }
            Some(p) => p,
        };
        let (_, yi) = word[p];
        let (_, xj) = word[p + 1];
        // Swapped word.
        let mut swapped = word.clone();
        swapped.swap(p, p + 1);
        self.word_nf_rec(swapped, coeff.clone(), out);
        // Commutator corrections: group parts act on the suffix and are
        // absorbed by e.
        let suffix: Vec<(bool, usize)> = word[p + 2..].to_vec();
        let prefix: Vec<(bool, usize)> = word[..p].to_vec();
        for ((_, _, s), sc) in &self.alg.commutator_yx(yi, xj).terms {
            let mut new_word = prefix.clone();
            let mut sign = 1i64;
            for &(is_y, idx) in &suffix {
                let target = s.perm[idx] as usize;
                if s.sign[idx] < 0 {
                    sign = -sign;
                }
                new_word.push((is_y, target));
            }
            let mut c = &coeff * sc;
            if sign < 0 {
                c = -&c;
            }
            self.word_nf_rec(new_word, c, out);
        }
    }

    /// Symmetrization (1/|G|) sum_g g . v (index relabeling with signs).
    pub fn symmetrize(&self, v: &SphElement) -> SphElement {
        let order = Rat::int(self.alg.group.len() as i64);
        let inv = ParamPoly::constant(order.recip());
        let mut out = SphElement::zero();
        for ((a, b), c) in &v.terms {
            for g in &self.alg.group {
                let (ga, sa) = g.act_on_exponents(a);
                let (gb, sb) = g.act_on_exponents(b);
                let mut cc = c * &inv;
                if sa * sb < 0 {
                    cc = -&cc;
                }
                out.add_term((ga, gb), cc);
            }
        }
        out
    }

    /// True when g.v = v for every group element.
    pub fn is_invariant(&self, v: &SphElement) -> bool {
        &self.symmetrize(v) == v
    }

    /// Product of spherical elements: v1 e v2 e = v1 sym(v2) e.
    pub fn mul(&self, z1: &SphElement, z2: &SphElement) -> SphElement {
        let symmetrized = self.symmetrize(z2);
        let mut out = SphElement::zero();
        for ((a1, b1), c1) in &z1.terms {
            for ((a2, b2), c2) in &symmetrized.terms {
                self.straighten(a1, b1, a2, b2, &(c1 * c2), &mut out);
            }
        }
        out
    }

    pub fn bracket(&self, z1: &SphElement, z2: &SphElement) -> SphElement {
        self.mul(z1, z2).sub(&self.mul(z2, z1))
    }

    /// Reduces x^a y^b x^c y^d e into normal form.
    fn straighten(
        &self,
        a: &[u16],
        b: &[u16],
        c: &[u16],
        d: &[u16],
        coeff: &ParamPoly,
        out: &mut SphElement,
    ) {
        if coeff.is_zero() {
            return;
        }
        let b_total: u32 = b.iter().map(|&e| e as u32).sum();
        let c_total: u32 = c.iter().map(|&e| e as u32).sum();
        if b_total == 0 || c_total == 0 {
            let xs: Vec<u16> = a.iter().zip(c).map(|(p, q)| p + q).collect();
            let ys: Vec<u16> = b.iter().zip(d).map(|(p, q)| p + q).collect();
            out.add_term((xs, ys), coeff.clone());
            return;
        }
        let i = (0..self.n()).rev().find(|&i| b[i] > 0).unwrap();
        let j = (0..self.n()).find(|&j| c[j] > 0).unwrap();
        let mut b1 = b.to_vec();
        b1[i] -= 1;
        let mut c1 = c.to_vec();
        c1[j] -= 1;
        // Swap part: y^b1 x_j (y_i x^c1 y^d) e.
        let mut inner = SphElement::zero();
        let mut ei = vec![0u16; self.n()];
        ei[i] = 1;
        self.straighten(&vec![0u16; self.n()], &ei, &c1, d, coeff, &mut inner);
        for ((ix, iy), ic) in &inner.terms {
            let mut cx = ix.clone();
            cx[j] += 1;
            self.straighten(a, &b1, &cx, iy, ic, out);
        }
        // Commutator corrections; group elements relabel the suffix
        // exponents, then vanish into e.
        for ((_, _, s), sc) in &self.alg.commutator_yx(i, j).terms {
            let (sx, sgn_x) = s.act_on_exponents(&c1);
            let (sy, sgn_y) = s.act_on_exponents(d);
            let mut cc = coeff * sc;
            if sgn_x * sgn_y < 0 {
                cc = -&cc;
            }
            self.straighten(a, &b1, &sx, &sy, &cc, out);
        }
    }

    /// Embeds a spherical element into the full algebra as v . e.
    pub fn to_full(&self, z: &SphElement) -> CherElement {
        let mut v = CherElement::zero();
        let e = self.alg.symmetrizer();
        for ((a, b), c) in &z.terms {
            v.add_term((a.clone(), b.clone(), GroupElem::identity(self.n())), c.clone());
        }
        self.alg.mul(&v, &e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Sym;

    #[test]
    fn word_nf_matches_full_algebra() {
        // sum_i y_i x_i e at n = 2: via words against the full engine.
        let sph = SphericalAlgebra::new(CherType::A, 2);
        let mut z = SphElement::zero();
        for i in 0..2 {
            z = z.add(&sph.word_nf(&[(true, i), (false, i)], &ParamPoly::one()));
        }
        // Full-engine computation of (y_0 x_0 + y_1 x_1) e.
        use super::super::element::CherGen;
        let mut full = CherElement::zero();
        for i in 0..2 {
            full = full.add(&sph.alg.normal_form(&[
                CherGen::Y(i),
                CherGen::X(i),
            ]));
        }
        let e = sph.alg.symmetrizer();
        let full = sph.alg.mul(&full, &e);
        assert_eq!(sph.to_full(&z), full);
    }

    #[test]
    fn spherical_product_matches_full_engine() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5fe1);
        for (ty, n) in [(CherType::A, 2), (CherType::A, 3), (CherType::B, 2)] {
            let sph = SphericalAlgebra::new(ty, n);
            for _ in 0..25 {
                let mut mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let len = rng.gen_range(1..=3);
                    let word: Vec<(bool, usize)> = (0..len)
                        .map(|_| (rng.gen_bool(0.5), rng.gen_range(0..n)))
                        .collect();
                    sph.symmetrize(&sph.word_nf(&word, &ParamPoly::one()))
                };
                let z1 = mk(&mut rng);
                let z2 = mk(&mut rng);
                let lhs = sph.to_full(&sph.mul(&z1, &z2));
                let rhs = sph.alg.mul(&sph.to_full(&z1), &sph.to_full(&z2));
                assert_eq!(lhs, rhs, "{:?} n={}", ty, n);
            }
        }
    }

    #[test]
    fn spherical_product_associative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xa110c);
        for (ty, n) in [(CherType::A, 2), (CherType::B, 2)] {
            let sph = SphericalAlgebra::new(ty, n);
            for _ in 0..20 {
                let mut mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let len = rng.gen_range(1..=3);
                    let word: Vec<(bool, usize)> = (0..len)
                        .map(|_| (rng.gen_bool(0.5), rng.gen_range(0..n)))
                        .collect();
                    sph.symmetrize(&sph.word_nf(&word, &ParamPoly::one()))
                };
                let (a, b, c) = (mk(&mut rng), mk(&mut rng), mk(&mut rng));
                assert_eq!(
                    sph.mul(&sph.mul(&a, &b), &c),
                    sph.mul(&a, &sph.mul(&b, &c))
                );
            }
        }
    }

    #[test]
    fn k_zero_degenerates_to_invariant_weyl() {
        // At k = 0 (and c = 0), spherical products agree with the invariant
        // n-variable Weyl algebra of symmetrized differential operators.
        use crate::liealg::weyl::{weyln_product, WeylN};
        use rand::{Rng, SeedableRng};
        use std::collections::BTreeMap as Map;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0de9);
        for (ty, n) in [(CherType::A, 2), (CherType::A, 3), (CherType::B, 2)] {
            let sph = SphericalAlgebra::new(ty, n);
            let mut zero_params = Map::new();
            zero_params.insert(Sym::K, crate::arith::Rat::ZERO);
            zero_params.insert(Sym::C, crate::arith::Rat::ZERO);
            zero_params.insert(Sym::T, crate::arith::Rat::ONE);
            let specialize = |z: &SphElement| -> WeylN {
                let mut w = WeylN::zero();
                for ((a, b), c) in &z.terms {
                    w.add_term(a.clone(), b.clone(), c.eval_partial(&zero_params));
                }
                w
            };
            for _ in 0..15 {
                let mut mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let len = rng.gen_range(1..=4);
                    let word: Vec<(bool, usize)> = (0..len)
                        .map(|_| (rng.gen_bool(0.5), rng.gen_range(0..n)))
                        .collect();
                    sph.symmetrize(&sph.word_nf(&word, &ParamPoly::one()))
                };
                let z1 = mk(&mut rng);
                let z2 = mk(&mut rng);
                let product = sph.mul(&z1, &z2);
                let lhs = specialize(&product);
                // Weyl side: multiply the specializations, then symmetrize
                // only through the e-average of the right factor (matching
                // v1 e v2 e = v1 sym(v2) e with no k-corrections).
                let w2 = specialize(&sph.symmetrize(&z2));
                let rhs = weyln_product(&specialize(&z1), &w2);
                assert_eq!(lhs, rhs, "{:?} n={}", ty, n);
            }
        }
    }
}
