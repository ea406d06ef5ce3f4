//! Noncommutative polynomials in named graded generators.
//!
//! Words are sequences of generator ids; commutators are expanded eagerly,
//! so every element is a canonical linear combination of words with
//! polynomial coefficients.

use crate::arith::{ParamPoly, Rat};
use std::collections::BTreeMap;
use std::fmt;

/// A named generator with a grading degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenId(pub u8);

/// Generator table: names and degrees, fixed per presentation.
#[derive(Clone, Debug, Default)]
pub struct GenTable {
    pub names: Vec<String>,
    pub degrees: Vec<i32>,
}

impl GenTable {
    pub fn new(gens: &[(&str, i32)]) -> GenTable {
        GenTable {
            names: gens.iter().map(|(n, _)| n.to_string()).collect(),
            degrees: gens.iter().map(|(_, d)| *d).collect(),
        }
    }

    pub fn id(&self, name: &str) -> Option<GenId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| GenId(i as u8))
    }

    pub fn name(&self, g: GenId) -> &str {
        &self.names[g.0 as usize]
    }

    pub fn degree(&self, g: GenId) -> i32 {
        self.degrees[g.0 as usize]
    }
}

/// A word in the free monoid on the generators.
pub type NcWord = Vec<GenId>;

/// Sparse noncommutative polynomial.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    pub terms: BTreeMap<NcWord, ParamPoly>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly::default()
    }

    pub fn one() -> NcPoly {
        NcPoly::constant(ParamPoly::one())
    }

    pub fn constant(c: ParamPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        out.add_term(Vec::new(), c);
        out
    }

    pub fn gen(g: GenId) -> NcPoly {
        let mut out = NcPoly::zero();
        out.add_term(vec![g], ParamPoly::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: NcWord, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v * c))
                .collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> NcPoly {
        self.scale(&ParamPoly::constant(c.clone()))
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = Vec::with_capacity(w1.len() + w2.len());
                w.extend_from_slice(w1);
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Commutator xy - yx, expanded.
    pub fn comm(&self, other: &NcPoly) -> NcPoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// ad_self^k (other).
    pub fn ad_pow(&self, k: u32, other: &NcPoly) -> NcPoly {
        let mut acc = other.clone();
        for _ in 0..k {
            acc = self.comm(&acc);
        }
        acc
    }

    /// Maximal word length.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn display(&self, table: &GenTable) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter()
                        .map(|g| table.name(*g).to_string())
                        .collect::<Vec<_>>()
                        .join("*")
                };
                format!("({})*{}", c, word)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({}){:?}", c, w))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_expansion() {
        let x = NcPoly::gen(GenId(0));
        let y = NcPoly::gen(GenId(1));
        let c = x.comm(&y);
        assert_eq!(c.terms.len(), 2);
        assert_eq!(c.terms[&vec![GenId(0), GenId(1)]], ParamPoly::one());
        assert_eq!(c.terms[&vec![GenId(1), GenId(0)]], -&ParamPoly::one());
        // [x, x] = 0
        assert!(x.comm(&x).is_zero());
    }

    #[test]
    fn ad_power() {
        let x = NcPoly::gen(GenId(0));
        let y = NcPoly::gen(GenId(1));
        let a2 = x.ad_pow(2, &y);
        // xxy - 2xyx + yxx
        assert_eq!(a2.terms[&vec![GenId(0), GenId(0), GenId(1)]], ParamPoly::one());
        assert_eq!(
            a2.terms[&vec![GenId(0), GenId(1), GenId(0)]],
            ParamPoly::int(-2)
        );
        assert_eq!(a2.terms[&vec![GenId(1), GenId(0), GenId(0)]], ParamPoly::one());
    }
}
