//! The symmetrized power-sum elements T_(r,q,n) of the spherical
//! subalgebra, their symmetrized products T_n(m), and decomposition in the
//! T-basis by triangular peeling on leading symbols.

use super::spherical::{SphElement, SphericalAlgebra};
use crate::arith::{solve_rat, ParamPoly, Rat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A T-basis index: multiset of (r, q) pairs with multiplicities.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct TIndex {
    pub mults: BTreeMap<(u32, u32), u32>,
}

impl TIndex {
    pub fn unit() -> TIndex {
        TIndex::default()
    }

    pub fn single(r: u32, q: u32) -> TIndex {
        let mut mults = BTreeMap::new();
        mults.insert((r, q), 1);
        TIndex { mults }
    }

    pub fn from_pairs(pairs: &[((u32, u32), u32)]) -> TIndex {
        let mut mults = BTreeMap::new();
        for &(rq, m) in pairs {
            if m > 0 {
                assert!(rq.0 + rq.1 > 0, "pairs need r + q > 0");
                *mults.entry(rq).or_insert(0) += m;
            }
        }
        TIndex { mults }
    }

    /// w(m) = sum (r+q) * mult.
    pub fn weight(&self) -> u32 {
        self.mults
            .iter()
            .map(|(&(r, q), &m)| (r + q) * m)
            .sum()
    }

    /// |m| = number of factors.
    pub fn size(&self) -> u32 {
        self.mults.values().sum()
    }

    /// All indices of exact weight w.
    pub fn enumerate_weight(w: u32) -> Vec<TIndex> {
        // Multisets of pairs (r, q), r+q > 0, with total weight w. Recurse
        // over pairs in a fixed order.
        let mut pairs = Vec::new();
        for total in 1..=w {
            for r in (0..=total).rev() {
                pairs.push((r, total - r));
            }
        }
        let mut out = Vec::new();
        fn rec(
            pairs: &[(u32, u32)],
            idx: usize,
            remaining: u32,
            cur: &mut Vec<((u32, u32), u32)>,
            out: &mut Vec<TIndex>,
        ) {
            if remaining == 0 {
                out.push(TIndex::from_pairs(cur));
                return;
            }
            if idx >= pairs.len() {
                return;
            }
            let (r, q) = pairs[idx];
            let unit = r + q;
            let max_mult = remaining / unit;
            for m in (0..=max_mult).rev() {
                if m > 0 {
                    cur.push(((r, q), m));
                }
                rec(pairs, idx + 1, remaining - m * unit, cur, out);
                if m > 0 {
                    cur.pop();
                }
            }
        }
        rec(&pairs, 0, w, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// All indices with weight <= w (including the unit).
    pub fn enumerate_up_to(w: u32) -> Vec<TIndex> {
        let mut out = vec![TIndex::unit()];
        for i in 1..=w {
            out.extend(Self::enumerate_weight(i));
        }
        out
    }
}

impl fmt::Display for TIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .mults
            .iter()
            .map(|(&(r, q), &m)| {
                if m == 1 {
                    format!("({},{})", r, q)
                } else {
                    format!("({},{})^{}", r, q, m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TBasisError {
    #[error("filtration degree {degree} exceeds rank {rank}; the basis theorem needs degree <= rank")]
    DegreeExceedsRank { degree: u32, rank: usize },
    #[error("leading part is not in the span of T-leading symbols")]
    NotInLeadingSpan,
    #[error("top-degree cancellation failed at weight {0}")]
    NonCancellation(u32),
}

impl SphericalAlgebra {
    /// T_(r,q,n): all shuffles of r copies of x_i and q copies of y_i,
    /// weighted by r! q! / (r+q)!.
    pub fn build_t(&self, r: u32, q: u32) -> SphElement {
        assert!(r + q >= 1);
        let coeff = &(&Rat::factorial(r as u64) * &Rat::factorial(q as u64))
            / &Rat::factorial((r + q) as u64);
        let coeff = ParamPoly::constant(coeff);
        let mut out = SphElement::zero();
        // Distinct shuffles: subsets of positions for the x's.
        let total = (r + q) as usize;
        let mut shuffles = Vec::new();
        let mut cur = vec![false; total];
        fn rec(pos: usize, left_x: u32, left_y: u32, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
            if pos == cur.len() {
                out.push(cur.clone());
                return;
            }
            if left_x > 0 {
                cur[pos] = false;
                rec(pos + 1, left_x - 1, left_y, cur, out);
            }
            if left_y > 0 {
                cur[pos] = true;
                rec(pos + 1, left_x, left_y - 1, cur, out);
            }
        }
        rec(0, r, q, &mut cur, &mut shuffles);
        for shuffle in &shuffles {
            for i in 0..self.n() {
                let word: Vec<(bool, usize)> = shuffle.iter().map(|&is_y| (is_y, i)).collect();
                out = out.add(&self.word_nf(&word, &coeff));
            }
        }
        out
    }

    /// T_n(m): (1/|m|!) sum over ordered sequences with content m of the
    /// product of the T factors. Singletons are T_(r,q,n) themselves.
    pub fn build_tm(&self, m: &TIndex) -> SphElement {
        if m.mults.is_empty() {
            return self.one();
        }
        let size = m.size();
        if size == 1 {
            let (&(r, q), _) = m.mults.iter().next().unwrap();
            return self.build_t(r, q);
        }
        // Peel the first factor: the ordered sequences of content m split
        // by their first pair, so
        // T(m) = (1/|m|) sum over distinct pairs (r,q) present of
        //        T_(r,q) * T(m - (r,q)),
        // which equals the flat (1/|m|!) sum over ordered sequences.
        let mut acc = SphElement::zero();
        for (&(r, q), &mult) in &m.mults {
            let mut rest = m.clone();
            if mult == 1 {
                rest.mults.remove(&(r, q));
            } else {
                rest.mults.insert((r, q), mult - 1);
            }
            let tail = self.build_tm(&rest);
            let head = self.build_t(r, q);
            acc = acc.add(&self.mul(&head, &tail));
        }
        acc.scale(&ParamPoly::constant(Rat::new(1, size as i64)))
    }

    /// Decomposes a spherical element in the T-basis by peeling leading
    /// symbols (valid while the filtration degree stays within the rank).
    pub fn decompose_t_basis(
        &self,
        z: &SphElement,
        tm_cache: &mut BTreeMap<TIndex, SphElement>,
    ) -> Result<BTreeMap<TIndex, ParamPoly>, TBasisError> {
        let mut out: BTreeMap<TIndex, ParamPoly> = BTreeMap::new();
        let mut rem = z.clone();
        while !rem.is_zero() {
            let degree = rem.degree();
            if degree as usize > self.n() {
                return Err(TBasisError::DegreeExceedsRank {
                    degree,
                    rank: self.n(),
                });
            }
            if degree == 0 {
                // Multiple of the unit e.
                let c = rem.terms.values().next().unwrap().clone();
                out.insert(TIndex::unit(), c);
                break;
            }
            // Solve for the top coordinates against the leading symbols of
            // T(m), w(m) = degree.
            let candidates = TIndex::enumerate_weight(degree);
            let tops: Vec<SphElement> = candidates
                .iter()
                .map(|m| {
                    tm_cache
                        .entry(m.clone())
                        .or_insert_with(|| self.build_tm(m))
                        .leading_part()
                })
                .collect();
            // Monomial index over top-degree words.
            let mut index: BTreeMap<(Vec<u16>, Vec<u16>), usize> = BTreeMap::new();
            let target = rem.leading_part();
            for key in target.terms.keys() {
                let next = index.len();
                index.entry(key.clone()).or_insert(next);
            }
            for t in &tops {
                for key in t.terms.keys() {
                    let next = index.len();
                    index.entry(key.clone()).or_insert(next);
                }
            }
            // Columns = candidates, rows = monomials; rational entries.
            let rows = index.len();
            let mut matrix = vec![vec![Rat::ZERO; candidates.len()]; rows];
            for (col, t) in tops.iter().enumerate() {
                for (key, c) in &t.terms {
                    matrix[index[key]][col] = c
                        .as_constant()
                        .expect("T leading symbols have rational coefficients");
                }
            }
            // Polynomial right-hand side: solve column-by-column using the
            // rational RREF and substitute. Simplest exact route: treat the
            // polynomial rhs coefficients by solving for each monomial of
            // the parameter polynomials. Collect parameter monomials.
            let mut param_monos: Vec<crate::arith::Mono> = Vec::new();
            for c in target.terms.values() {
                for m in c.terms.keys() {
                    if !param_monos.contains(m) {
                        param_monos.push(*m);
                    }
                }
            }
            let mut coeffs: Vec<ParamPoly> = vec![ParamPoly::zero(); candidates.len()];
            for pm in &param_monos {
                let mut b = vec![Rat::ZERO; rows];
                for (key, c) in &target.terms {
                    if let Some(v) = c.terms.get(pm) {
                        b[index[key]] = v.clone();
                    }
                }
                let solved = solve_rat(&matrix, Some(&b))
                    .map_err(|_| TBasisError::NotInLeadingSpan)?;
                let x = solved.particular.ok_or(TBasisError::NotInLeadingSpan)?;
                for (col, v) in x.into_iter().enumerate() {
                    if !v.is_zero() {
                        let mut p = ParamPoly::zero();
                        p.add_term(*pm, v);
                        coeffs[col] = &coeffs[col] + &p;
                    }
                }
            }
            // Subtract and verify the top degree drops.
            for (m, c) in candidates.iter().zip(&coeffs) {
                if c.is_zero() {
                    continue;
                }
                let tm = tm_cache
                    .entry(m.clone())
                    .or_insert_with(|| self.build_tm(m))
                    .clone();
                rem = rem.sub(&tm.scale(c));
                let e = out.entry(m.clone()).or_default();
                *e = &*e + c;
                if e.is_zero() {
                    out.remove(m);
                }
            }
            if !rem.is_zero() && rem.degree() >= degree {
                return Err(TBasisError::NonCancellation(degree));
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}
