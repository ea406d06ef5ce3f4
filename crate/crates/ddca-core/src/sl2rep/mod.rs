//! Finite-dimensional sl2-module machinery over polynomial scalars.
//!
//! Words are built from weighted generator symbols; the e/f/h actions are
//! Leibniz on tensor, wedge and symmetric words. Highest-weight vectors are
//! kernels of e at fixed weight, and the named relation modules of the
//! presentations are fixed by their highest-weight vectors.

mod catalog;
mod vector;

pub use catalog::{
    alpha1_hw, alpha2_hw, alphap_hw, beta1_hw, chi1_hw, phi1_hw, phi1p_hw, psi1_hw, psi2p_hw,
    psi4_hw, psi5p_hw, relation_catalog, CatalogKind, RelationModule,
};
pub use vector::{
    highest_weight_vectors, symmetric_square_words, tensor_words, wedge_square_words, Gen,
    Sl2Error, Sl2Vector, Word, WordKind,
};

use crate::arith::Rat;

/// A symbol family spanning one irreducible V_m: members are
/// `v_1 = hw, v_{i+1} = f v_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    /// c_i in V3, the degree-1 generators of the positive part (type A).
    C,
    /// d_i in V4 inside Lambda^2 V3 (type A), d_1 = c_2 ^ c_1.
    DA,
    /// a_i in V1, the degree -1 part (type A), a_1 = q.
    A,
    /// Adjoint V2, hw b_1 = e.
    B,
    /// Central V0, the element K.
    K,
    /// d_i in V4, the degree-2 generators of the even part (type B).
    DB,
    /// g_i in V6 inside Lambda^2 V4 (type B), g_1 = d_2 ^ d_1.
    G,
    /// Abstract V_m carrier used by generic word spaces (dimension m+1).
    Abstract(u16),
}

impl Family {
    /// sl2-type m: the family spans V_m.
    pub fn sl2_type(self) -> u16 {
        match self {
            Family::C => 3,
            Family::DA => 4,
            Family::A => 1,
            Family::B => 2,
            Family::K => 0,
            Family::DB => 4,
            Family::G => 6,
            Family::Abstract(m) => m,
        }
    }

    /// Grading degree of the family members in the ambient algebra.
    pub fn grading(self) -> i32 {
        match self {
            Family::C => 1,
            Family::DA => 2,
            Family::A => -1,
            Family::B => 0,
            Family::K => -2,
            Family::DB => 1,
            Family::G => 2,
            Family::Abstract(_) => 0,
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Family::C => "c",
            Family::DA => "d",
            Family::A => "a",
            Family::B => "b",
            Family::K => "K",
            Family::DB => "d",
            Family::G => "g",
            Family::Abstract(_) => "v",
        }
    }
}

/// One weighted symbol: the `idx`-th member (1-based) of its family orbit.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WSym {
    pub family: Family,
    pub idx: u16,
}

impl WSym {
    pub fn new(family: Family, idx: u16) -> WSym {
        debug_assert!(idx >= 1 && idx <= family.sl2_type() + 1);
        WSym { family, idx }
    }

    /// h-weight: m - 2(idx - 1).
    pub fn weight(self) -> i64 {
        self.family.sl2_type() as i64 - 2 * (self.idx as i64 - 1)
    }

    /// Image under f: the next orbit member, or None past the bottom.
    pub fn f_image(self) -> Option<WSym> {
        if self.idx <= self.family.sl2_type() {
            Some(WSym::new(self.family, self.idx + 1))
        } else {
            None
        }
    }

    /// Image under e with its scalar: e v_i = (i-1)(m-i+2) v_{i-1}.
    pub fn e_image(self) -> Option<(Rat, WSym)> {
        if self.idx >= 2 {
            let i = self.idx as i64;
            let m = self.family.sl2_type() as i64;
            Some((
                Rat::int((i - 1) * (m - i + 2)),
                WSym::new(self.family, self.idx - 1),
            ))
        } else {
            None
        }
    }

    pub fn name(self) -> String {
        if self.family == Family::K {
            "K".to_string()
        } else {
            format!("{}{}", self.family.prefix(), self.idx)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_images() {
        let c1 = WSym::new(Family::C, 1);
        assert_eq!(c1.weight(), 3);
        assert_eq!(c1.e_image(), None);
        let c2 = c1.f_image().unwrap();
        assert_eq!(c2.weight(), 1);
        // e c_2 = 1*(3-2+2) c_1 = 3 c_1
        let (s, back) = c2.e_image().unwrap();
        assert_eq!(s, Rat::int(3));
        assert_eq!(back, c1);
        // V3 has four members; f kills the last.
        let c4 = WSym::new(Family::C, 4);
        assert_eq!(c4.f_image(), None);
    }
}
