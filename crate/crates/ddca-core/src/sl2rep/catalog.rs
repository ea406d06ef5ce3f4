//! The named relation modules of the presentations, fixed by the
//! highest-weight vectors from the source text, paired with their
//! deformation right-hand sides.

use super::vector::{Sl2Vector, WordKind};
use super::{Family, WSym};
use crate::arith::{ParamPoly, Rat, Sym};

/// Which relation family to produce.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CatalogKind {
    /// Undeformed positive-part relations of the polynomial Poisson algebra.
    PoA,
    /// Two-parameter deformation A_{s1,s2}.
    AS1S2,
    /// Undeformed even-part relations.
    PoB,
    /// Three-parameter deformation A_{s1,s2,s3}.
    AS1S2S3,
}

/// A relation module: an sl2-irreducible inside a word space, fixed by its
/// highest-weight vector, equated to a (possibly zero) right-hand side.
#[derive(Clone, Debug)]
pub struct RelationModule {
    pub name: &'static str,
    /// Description of the ambient word space.
    pub ambient: &'static str,
    /// Fixed highest-weight vector.
    pub hw: Sl2Vector,
    /// sl2-type m: the module is V_m.
    pub sl2_type: u16,
    /// Deformation right-hand side for the highest-weight identity, zero in
    /// the undeformed catalogs. The relation imposed is hw = rhs, and orbit
    /// members pair f^i(hw) with f^i(rhs).
    pub rhs: Sl2Vector,
}

impl RelationModule {
    /// Full member list: the f-orbit of the highest-weight vector.
    pub fn members(&self) -> Vec<Sl2Vector> {
        self.hw
            .f_orbit()
            .expect("catalog vector must be a highest-weight vector")
    }

    /// Paired orbit of (lhs, rhs) identities.
    pub fn paired_members(&self) -> Vec<(Sl2Vector, Sl2Vector)> {
        let lhs = self.members();
        let mut rhs = Vec::with_capacity(lhs.len());
        let mut cur = self.rhs.clone();
        for i in 0..lhs.len() {
            if i > 0 {
                cur = cur.act(super::vector::Gen::F);
            }
            rhs.push(cur.clone());
        }
        lhs.into_iter().zip(rhs).collect()
    }
}

fn c(i: u16) -> WSym {
    WSym::new(Family::C, i)
}

fn da(i: u16) -> WSym {
    WSym::new(Family::DA, i)
}

fn a(i: u16) -> WSym {
    WSym::new(Family::A, i)
}

fn b(i: u16) -> WSym {
    WSym::new(Family::B, i)
}

fn db(i: u16) -> WSym {
    WSym::new(Family::DB, i)
}

fn g(i: u16) -> WSym {
    WSym::new(Family::G, i)
}

fn wedge(x: WSym, y: WSym, coeff: i64) -> Sl2Vector {
    let mut v = Sl2Vector::zero();
    v.add_word(WordKind::Wedge, vec![x, y], ParamPoly::int(coeff));
    v
}

fn tensor(x: WSym, y: WSym, coeff: i64) -> Sl2Vector {
    let mut v = Sl2Vector::zero();
    v.add_word(WordKind::Tensor, vec![x, y], ParamPoly::int(coeff));
    v
}

/// phi_1: V0 in Lambda^2 n_1, hw c1 ^ c4 - c2 ^ c3.
pub fn phi1_hw() -> Sl2Vector {
    wedge(c(1), c(4), 1).add(&wedge(c(2), c(3), -1))
}

/// psi_4: V7 in phi_2 (x) n_1, hw d1 (x) c1.
pub fn psi4_hw() -> Sl2Vector {
    tensor(da(1), c(1), 1)
}

/// psi_1: V1 in phi_2 (x) n_1.
pub fn psi1_hw() -> Sl2Vector {
    tensor(da(1), c(4), -4)
        .add(&tensor(da(2), c(3), 3))
        .add(&tensor(da(3), c(2), -2))
        .add(&tensor(da(4), c(1), 1))
}

/// chi_1: V2 in Lambda^2 phi_2, hw 3 d3 ^ d2 - 2 d4 ^ d1.
pub fn chi1_hw() -> Sl2Vector {
    wedge(da(3), da(2), 3).add(&wedge(da(4), da(1), -2))
}

/// phi'_1: V2 in Lambda^2 n_2, hw 3 d2 ^ d3 - 2 d1 ^ d4.
pub fn phi1p_hw() -> Sl2Vector {
    wedge(db(2), db(3), 3).add(&wedge(db(1), db(4), -2))
}

/// psi'_5: V10 in phi'_2 (x) n_2, hw g1 (x) d1.
pub fn psi5p_hw() -> Sl2Vector {
    tensor(g(1), db(1), 1)
}

/// psi'_2: V4 in phi'_2 (x) n_2.
pub fn psi2p_hw() -> Sl2Vector {
    tensor(g(4), db(1), 1)
        .add(&tensor(g(3), db(2), -3))
        .add(&tensor(g(2), db(3), 5))
        .add(&tensor(g(1), db(4), -5))
}

/// alpha_1: V2 in n_1 (x) b_{-1}. The displayed coefficient -2 on
/// c1 (x) a2 is not e-annihilated; the kernel of e forces -3, which is what
/// we fix here.
pub fn alpha1_hw() -> Sl2Vector {
    tensor(c(2), a(1), 1).add(&tensor(c(1), a(2), -3))
}

/// alpha_2: V4 in n_1 (x) b_{-1}, hw c1 (x) a1.
pub fn alpha2_hw() -> Sl2Vector {
    tensor(c(1), a(1), 1)
}

/// beta_1: V2 in S^2 b_{-1}, hw a1^2.
pub fn beta1_hw() -> Sl2Vector {
    let mut v = Sl2Vector::zero();
    v.add_word(WordKind::Symmetric, vec![a(1), a(1)], ParamPoly::one());
    v
}

/// alpha': V4 in S^2 b_0, hw e^2.
pub fn alphap_hw() -> Sl2Vector {
    let mut v = Sl2Vector::zero();
    v.add_word(WordKind::Symmetric, vec![b(1), b(1)], ParamPoly::one());
    v
}

fn s(sym: Sym) -> ParamPoly {
    ParamPoly::var(sym)
}

fn single(w: WSym, coeff: ParamPoly) -> Sl2Vector {
    let mut v = Sl2Vector::zero();
    v.add_word(WordKind::Tensor, vec![w], coeff);
    v
}

/// The relation catalog for the requested presentation. Deformed right-hand
/// sides keep s1, s2, s3 and K symbolic.
pub fn relation_catalog(kind: CatalogKind) -> Vec<RelationModule> {
    match kind {
        CatalogKind::PoA | CatalogKind::AS1S2 => {
            let deformed = kind == CatalogKind::AS1S2;
            let rhs_phi1 = if deformed {
                // phi_1 = -s1 K / 2
                single(
                    WSym::new(Family::K, 1),
                    s(Sym::S1).scale(&Rat::new(-1, 2)),
                )
            } else {
                Sl2Vector::zero()
            };
            let rhs_psi1 = if deformed {
                // psi_1 = 15 s1 b_{-1}
                single(a(1), s(Sym::S1).scale(&Rat::int(15)))
            } else {
                Sl2Vector::zero()
            };
            let rhs_chi1 = if deformed {
                // chi_1 = 3((30 s1 + 14 s2 K) b_0 + 7 s2 beta_1)
                let coeff_b = (&s(Sym::S1).scale(&Rat::int(30))
                    + &(&s(Sym::S2) * &s(Sym::BigK)).scale(&Rat::int(14)))
                    .scale(&Rat::int(3));
                let coeff_beta = s(Sym::S2).scale(&Rat::int(21));
                single(b(1), coeff_b).add(&beta1_hw().scale(&coeff_beta))
            } else {
                Sl2Vector::zero()
            };
            vec![
                RelationModule {
                    name: "phi1",
                    ambient: "Lambda^2 n1",
                    hw: phi1_hw(),
                    sl2_type: 0,
                    rhs: rhs_phi1,
                },
                RelationModule {
                    name: "psi4",
                    ambient: "phi2 (x) n1",
                    hw: psi4_hw(),
                    sl2_type: 7,
                    rhs: Sl2Vector::zero(),
                },
                RelationModule {
                    name: "psi1",
                    ambient: "phi2 (x) n1",
                    hw: psi1_hw(),
                    sl2_type: 1,
                    rhs: rhs_psi1,
                },
                RelationModule {
                    name: "chi1",
                    ambient: "Lambda^2 phi2",
                    hw: chi1_hw(),
                    sl2_type: 2,
                    rhs: rhs_chi1,
                },
            ]
        }
        CatalogKind::PoB | CatalogKind::AS1S2S3 => {
            let deformed = kind == CatalogKind::AS1S2S3;
            let rhs_phi1p = if deformed {
                // phi'_1 = 6 s1 b_0
                single(b(1), s(Sym::S1).scale(&Rat::int(6)))
            } else {
                Sl2Vector::zero()
            };
            let rhs_psi2p = if deformed {
                // psi'_2 = 24 (s3 alpha' + 12 s2 n_2)
                alphap_hw()
                    .scale(&s(Sym::S3).scale(&Rat::int(24)))
                    .add(&single(db(1), s(Sym::S2).scale(&Rat::int(288))))
            } else {
                Sl2Vector::zero()
            };
            vec![
                RelationModule {
                    name: "phi1'",
                    ambient: "Lambda^2 n2",
                    hw: phi1p_hw(),
                    sl2_type: 2,
                    rhs: rhs_phi1p,
                },
                RelationModule {
                    name: "psi5'",
                    ambient: "phi2' (x) n2",
                    hw: psi5p_hw(),
                    sl2_type: 10,
                    rhs: Sl2Vector::zero(),
                },
                RelationModule {
                    name: "psi2'",
                    ambient: "phi2' (x) n2",
                    hw: psi2p_hw(),
                    sl2_type: 4,
                    rhs: rhs_psi2p,
                },
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::vector::{highest_weight_vectors, tensor_words, wedge_square_words, Gen};
    use super::*;

    #[test]
    fn catalog_vectors_are_highest_weight_with_right_type() {
        for kind in [
            CatalogKind::PoA,
            CatalogKind::AS1S2,
            CatalogKind::PoB,
            CatalogKind::AS1S2S3,
        ] {
            for module in relation_catalog(kind) {
                assert!(
                    module.hw.act(Gen::E).is_zero(),
                    "{} not e-annihilated",
                    module.name
                );
                assert_eq!(
                    module.hw.weight().unwrap(),
                    module.sl2_type as i64,
                    "{} weight mismatch",
                    module.name
                );
                let orbit = module.members();
                assert_eq!(orbit.len(), module.sl2_type as usize + 1);
            }
        }
    }

    #[test]
    fn type_a_deformed_rhs_shapes() {
        let cat = relation_catalog(CatalogKind::AS1S2);
        let psi1 = cat.iter().find(|m| m.name == "psi1").unwrap();
        // 15 s1 a1
        let (w, coeff) = psi1.rhs.terms.iter().next().unwrap();
        assert_eq!(w.syms[0], WSym::new(Family::A, 1));
        assert_eq!(coeff, &ParamPoly::var(Sym::S1).scale(&Rat::int(15)));
        let chi1 = cat.iter().find(|m| m.name == "chi1").unwrap();
        assert_eq!(chi1.rhs.terms.len(), 2);
    }

    #[test]
    fn type_b_deformed_rhs_shapes() {
        let cat = relation_catalog(CatalogKind::AS1S2S3);
        let phi = cat.iter().find(|m| m.name == "phi1'").unwrap();
        let (w, coeff) = phi.rhs.terms.iter().next().unwrap();
        assert_eq!(w.syms[0], WSym::new(Family::B, 1));
        assert_eq!(coeff, &ParamPoly::var(Sym::S1).scale(&Rat::int(6)));
    }

    #[test]
    fn module_decompositions_by_hw_count() {
        // Lambda^2 V3 = V4 + V0 (6 = 5 + 1)
        let words = wedge_square_words(Family::C);
        assert_eq!(words.len(), 6);
        assert_eq!(highest_weight_vectors(&words, 4).len(), 1);
        assert_eq!(highest_weight_vectors(&words, 0).len(), 1);
        assert_eq!(highest_weight_vectors(&words, 2).len(), 0);

        // phi2 (x) n1 = V7 + V5 + V3 + V1 (20 = 8 + 6 + 4 + 2)
        let words = tensor_words(Family::DA, Family::C);
        assert_eq!(words.len(), 20);
        for (wt, count) in [(7, 1), (5, 1), (3, 1), (1, 1), (6, 0), (0, 0)] {
            assert_eq!(
                highest_weight_vectors(&words, wt).len(),
                count,
                "weight {wt}"
            );
        }

        // Lambda^2 V4 = V6 + V2 (10 = 7 + 3)
        let words = wedge_square_words(Family::DA);
        assert_eq!(words.len(), 10);
        assert_eq!(highest_weight_vectors(&words, 6).len(), 1);
        assert_eq!(highest_weight_vectors(&words, 2).len(), 1);
        assert_eq!(highest_weight_vectors(&words, 4).len(), 0);

        // phi2' (x) n2 = V10 + V8 + V6 + V4 + V2 (35 = 11 + 9 + 7 + 5 + 3)
        let words = tensor_words(Family::G, Family::DB);
        assert_eq!(words.len(), 35);
        for wt in [10i64, 8, 6, 4, 2] {
            assert_eq!(highest_weight_vectors(&words, wt).len(), 1, "weight {wt}");
        }
        assert_eq!(highest_weight_vectors(&words, 0).len(), 0);
    }

    #[test]
    fn alpha1_kernel_forces_minus_three() {
        // The kernel of e at weight 2 in n1 (x) b_{-1} is one-dimensional
        // and proportional to c2 (x) a1 - 3 c1 (x) a2.
        let words = tensor_words(Family::C, Family::A);
        let hws = highest_weight_vectors(&words, 2);
        assert_eq!(hws.len(), 1);
        let v = alpha1_hw();
        assert!(v.act(Gen::E).is_zero());
        let (w0, c0) = hws[0].terms.iter().next().unwrap();
        let c1 = v.terms.get(w0).cloned().unwrap();
        assert_eq!(hws[0].scale(&c1), v.scale(c0));
        // The displayed -2 variant is not in the kernel.
        let displayed = tensor(c(2), a(1), 1).add(&tensor(c(1), a(2), -2));
        assert!(!displayed.act(Gen::E).is_zero());
    }

    #[test]
    fn commutation_identities_on_word_space() {
        // [e, f] = h and [h, e] = 2e on the full basis of phi2 (x) n1.
        for w in tensor_words(Family::DA, Family::C) {
            let v = Sl2Vector::word(w.kind, w.syms.clone());
            let ef = v.act(Gen::F).act(Gen::E);
            let fe = v.act(Gen::E).act(Gen::F);
            let h = v.act(Gen::H);
            assert_eq!(ef.sub(&fe), h);
            let he = v.act(Gen::E).act(Gen::H);
            let eh = v.act(Gen::H).act(Gen::E);
            let e2 = v.act(Gen::E).scale(&ParamPoly::int(2));
            assert_eq!(he.sub(&eh), e2);
        }
    }
}
