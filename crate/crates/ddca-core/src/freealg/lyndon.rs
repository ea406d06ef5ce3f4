//! Lyndon-word basis of the free Lie algebra and expansion into the tensor
//! algebra.
//!
//! Degree-d components are spanned by standard bracketings of Lyndon words;
//! the expansion of the bracketing of a Lyndon word w in the tensor algebra
//! is w plus lexicographically larger words, which makes conversion from
//! tensor coordinates to Lyndon coordinates a triangular peel.

use crate::arith::Rat;
use std::collections::BTreeMap;

/// Letters are generator indices 0..g.
pub type Letter = u8;

/// A word in the tensor algebra with rational coefficient map.
pub type TensorVec = BTreeMap<Vec<Letter>, Rat>;

pub fn tensor_add(acc: &mut TensorVec, w: Vec<Letter>, c: Rat) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
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

/// All Lyndon words of the given length over `alphabet` letters (Duval).
pub fn lyndon_words(alphabet: u8, length: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut w = vec![0u8];
    loop {
        if w.len() == length {
            out.push(w.clone());
        }
        // extend periodically to the target length
        let base = w.clone();
        while w.len() < length {
            w.push(base[(w.len() - base.len()) % base.len()]);
        }
        // increment
        while let Some(&last) = w.last() {
            if last == alphabet - 1 {
                w.pop();
            } else {
                *w.last_mut().unwrap() += 1;
                break;
            }
        }
        if w.is_empty() {
            break;
        }
    }
    out.sort();
    out
}

/// Witt necklace count: dimension of the degree-d component of the free Lie
/// algebra on g generators.
pub fn witt_dimension(g: u64, d: u64) -> u64 {
    fn mobius(mut n: u64) -> i64 {
        let mut mu = 1i64;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if n > 1 {
            mu = -mu;
        }
        mu
    }
    let mut total = 0i64;
    for div in 1..=d {
        if d % div == 0 {
            total += mobius(d / div) * (g.pow(div as u32) as i64);
        }
    }
    (total / d as i64) as u64
}

/// Standard factorization of a Lyndon word w = uv with v the longest proper
/// Lyndon suffix; both factors are Lyndon.
fn standard_factorization(w: &[Letter]) -> (Vec<Letter>, Vec<Letter>) {
    debug_assert!(w.len() >= 2);
    // v = the smallest (equivalently longest Lyndon) proper suffix.
    let mut best = 1;
    for i in 2..w.len() {
        if w[i..] < w[best..] {
            best = i;
        }
    }
    (w[..best].to_vec(), w[best..].to_vec())
}

/// Expands the standard bracketing of a Lyndon word into the tensor algebra.
pub fn lyndon_bracket_expansion(w: &[Letter]) -> TensorVec {
    let mut out = TensorVec::new();
    if w.len() == 1 {
        tensor_add(&mut out, w.to_vec(), Rat::ONE);
        return out;
    }
    let (u, v) = standard_factorization(w);
    let eu = lyndon_bracket_expansion(&u);
    let ev = lyndon_bracket_expansion(&v);
    // [eu, ev]
    for (wu, cu) in &eu {
        for (wv, cv) in &ev {
            let mut uv = wu.clone();
            uv.extend_from_slice(wv);
            tensor_add(&mut out, uv, cu * cv);
            let mut vu = wv.clone();
            vu.extend_from_slice(wu);
            tensor_add(&mut out, vu, -&(cu * cv));
        }
    }
    out
}

/// Converts a Lie element given in tensor coordinates into Lyndon
/// coordinates by triangular peeling; panics if the input is not a Lie
/// element of homogeneous degree (the peel would leave a non-Lyndon
/// leading word).
pub struct LyndonBasis {
    pub alphabet: u8,
    pub degree: usize,
    pub words: Vec<Vec<Letter>>,
    expansions: BTreeMap<Vec<Letter>, TensorVec>,
}

impl LyndonBasis {
    pub fn new(alphabet: u8, degree: usize) -> LyndonBasis {
        let words = lyndon_words(alphabet, degree);
        let expansions = words
            .iter()
            .map(|w| (w.clone(), lyndon_bracket_expansion(w)))
            .collect();
        LyndonBasis {
            alphabet,
            degree,
            words,
            expansions,
        }
    }

    pub fn dimension(&self) -> usize {
        self.words.len()
    }

    /// Lyndon coordinates of a homogeneous Lie element.
    pub fn coordinates(&self, v: &TensorVec) -> Vec<(usize, Rat)> {
        let mut rem = v.clone();
        let mut out = Vec::new();
        while let Some((w, c)) = rem.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            // The lexicographically smallest word of a Lie element is
            // Lyndon with coefficient equal to its Lyndon coordinate.
            let idx = self
                .words
                .binary_search(&w)
                .unwrap_or_else(|_| panic!("leading word {:?} is not Lyndon", w));
            let expansion = &self.expansions[&w];
            for (ew, ec) in expansion {
                tensor_add(&mut rem, ew.clone(), -&(&c * ec));
            }
            out.push((idx, c));
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_counts_match_witt() {
        for g in 2..=5u8 {
            for d in 1..=6usize {
                assert_eq!(
                    lyndon_words(g, d).len() as u64,
                    witt_dimension(g as u64, d as u64),
                    "g={} d={}",
                    g,
                    d
                );
            }
        }
        // dimension examples: 4 generators
        assert_eq!(witt_dimension(4, 1), 4);
        assert_eq!(witt_dimension(4, 2), 6);
        assert_eq!(witt_dimension(5, 2), 10);
        assert_eq!(witt_dimension(4, 8), 8160);
    }

    #[test]
    fn bracket_expansion_leading_term() {
        // The expansion of a Lyndon word's bracketing starts with the word
        // itself, coefficient 1.
        for w in lyndon_words(3, 4) {
            let e = lyndon_bracket_expansion(&w);
            let (first, c) = e.iter().next().unwrap();
            assert_eq!(first, &w);
            assert_eq!(c, &Rat::ONE);
        }
    }

    #[test]
    fn coordinates_roundtrip() {
        let basis = LyndonBasis::new(3, 4);
        // Build a combination of two basis elements and recover it.
        let mut v = TensorVec::new();
        let e0 = lyndon_bracket_expansion(&basis.words[0]);
        let e3 = lyndon_bracket_expansion(&basis.words[3]);
        for (w, c) in &e0 {
            tensor_add(&mut v, w.clone(), c * &Rat::int(5));
        }
        for (w, c) in &e3 {
            tensor_add(&mut v, w.clone(), c * &Rat::new(-7, 2));
        }
        let coords = basis.coordinates(&v);
        assert_eq!(
            coords,
            vec![(0, Rat::int(5)), (3, Rat::new(-7, 2))]
        );
    }
}
