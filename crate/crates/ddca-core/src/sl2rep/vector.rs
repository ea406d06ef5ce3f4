//! Vectors in tensor/wedge/symmetric word spaces and the sl2 action.

use super::WSym;
use crate::arith::{nullspace_poly, ParamPoly, Rat};
use std::collections::BTreeMap;
use std::fmt;

/// sl2 generator selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    E,
    F,
    H,
}

/// Word flavor: plain tensor words keep their factor order; wedge words are
/// sorted with a sign; symmetric words are sorted multisets denoting the sum
/// over distinct arrangements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum WordKind {
    Tensor,
    Wedge,
    Symmetric,
}

/// A canonical word of weighted symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    pub kind: WordKind,
    pub syms: Vec<WSym>,
}

impl Word {
    pub fn weight(&self) -> i64 {
        self.syms.iter().map(|s| s.weight()).sum()
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("vector is not h-homogeneous")]
    NotHomogeneous,
    #[error("not a highest weight vector: e does not annihilate it")]
    NotHighestWeight,
    #[error("f-orbit member {0} vanished early")]
    OrbitCollapsed(usize),
    #[error("f^(m+1) did not annihilate the orbit of a declared V_{0} vector")]
    OrbitTooLong(u16),
}

/// Finite linear combination of canonical words with polynomial scalars.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Sl2Vector {
    pub terms: BTreeMap<Word, ParamPoly>,
}

/// Sorts a wedge word, returning the permutation sign; `None` when two
/// factors coincide (the word vanishes).
fn wedge_sort(mut syms: Vec<WSym>) -> Option<(i64, Vec<WSym>)> {
    // Sort key: (grading degree, family, index) per the fixed convention.
    let mut sign = 1i64;
    let n = syms.len();
    for i in 0..n {
        for j in 0..n - 1 - i {
            let key = |s: &WSym| (s.family.grading(), s.family, s.idx);
            match key(&syms[j]).cmp(&key(&syms[j + 1])) {
                std::cmp::Ordering::Greater => {
                    syms.swap(j, j + 1);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => {
                    if syms[j] == syms[j + 1] {
                        return None;
                    }
                }
                std::cmp::Ordering::Less => {}
            }
        }
    }
    // Adjacent equal entries may remain undetected by bubble passes above;
    // check once more.
    for w in syms.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((sign, syms))
}

impl Sl2Vector {
    pub fn zero() -> Sl2Vector {
        Sl2Vector::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single word with coefficient 1, canonicalized.
    pub fn word(kind: WordKind, syms: Vec<WSym>) -> Sl2Vector {
        let mut v = Sl2Vector::zero();
        v.add_word(kind, syms, ParamPoly::one());
        v
    }

    /// Adds `coeff * word`, canonicalizing wedge/symmetric words.
    pub fn add_word(&mut self, kind: WordKind, syms: Vec<WSym>, coeff: ParamPoly) {
        if coeff.is_zero() {
            return;
        }
        let (c, syms) = match kind {
            WordKind::Tensor => (coeff, syms),
            WordKind::Symmetric => {
                let mut s = syms;
                s.sort_by_key(|s: &WSym| (s.family.grading(), s.family, s.idx));
                (coeff, s)
            }
            WordKind::Wedge => match wedge_sort(syms) {
                None => return,
                Some((sign, s)) => {
                    let c = if sign < 0 { -&coeff } else { coeff };
                    (c, s)
                }
            },
        };
        let w = Word { kind, syms };
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

    pub fn scale(&self, c: &ParamPoly) -> Sl2Vector {
        if c.is_zero() {
            return Sl2Vector::zero();
        }
        Sl2Vector {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Sl2Vector) -> Sl2Vector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.kind, w.syms.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Sl2Vector) -> Sl2Vector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.kind, w.syms.clone(), -c);
        }
        out
    }

    /// The common h-weight of all words, if homogeneous.
    pub fn weight(&self) -> Result<i64, Sl2Error> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Ok(0),
            Some(w) => w.weight(),
        };
        if it.all(|w| w.weight() == first) {
            Ok(first)
        } else {
            Err(Sl2Error::NotHomogeneous)
        }
    }

    /// Leibniz action of an sl2 generator.
    pub fn act(&self, g: Gen) -> Sl2Vector {
        let mut out = Sl2Vector::zero();
        for (w, c) in &self.terms {
            match g {
                Gen::H => {
                    out.add_word(
                        w.kind,
                        w.syms.clone(),
                        c.scale(&Rat::int(w.weight())),
                    );
                }
                Gen::F => {
                    for (i, s) in w.syms.iter().enumerate() {
                        if let Some(img) = s.f_image() {
                            let mut syms = w.syms.clone();
                            syms[i] = img;
                            out.add_word(w.kind, syms, c.clone());
                        }
                    }
                }
                Gen::E => {
                    for (i, s) in w.syms.iter().enumerate() {
                        if let Some((scalar, img)) = s.e_image() {
                            let mut syms = w.syms.clone();
                            syms[i] = img;
                            out.add_word(w.kind, syms, c.scale(&scalar));
                        }
                    }
                }
            }
        }
        out
    }

    /// `[v, f v, ..., f^m v]` for a highest-weight vector of V_m; verifies
    /// e-annihilation, orbit length and f^(m+1) = 0.
    pub fn f_orbit(&self) -> Result<Vec<Sl2Vector>, Sl2Error> {
        if !self.act(Gen::E).is_zero() {
            return Err(Sl2Error::NotHighestWeight);
        }
        let m = self.weight()?;
        assert!(m >= 0, "highest weight must be nonnegative");
        let m = m as u16;
        let mut orbit = vec![self.clone()];
        for i in 1..=m {
            let next = orbit.last().unwrap().act(Gen::F);
            if next.is_zero() {
                return Err(Sl2Error::OrbitCollapsed(i as usize));
            }
            orbit.push(next);
        }
        if !orbit.last().unwrap().act(Gen::F).is_zero() {
            return Err(Sl2Error::OrbitTooLong(m));
        }
        Ok(orbit)
    }
}

impl fmt::Debug for Sl2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let sep = match w.kind {
                WordKind::Tensor => "(x)",
                WordKind::Wedge => "^",
                WordKind::Symmetric => ".",
            };
            let body = w
                .syms
                .iter()
                .map(|s| s.name())
                .collect::<Vec<_>>()
                .join(sep);
            write!(f, "({})*{}", c, body)?;
        }
        Ok(())
    }
}

/// Basis of ker(e) at the given weight inside the span of `words`.
pub fn highest_weight_vectors(words: &[Word], weight: i64) -> Vec<Sl2Vector> {
    let basis: Vec<&Word> = words.iter().filter(|w| w.weight() == weight).collect();
    if basis.is_empty() {
        return Vec::new();
    }
    // Column space: image words of e (weight + 2).
    let mut image_index: BTreeMap<Word, usize> = BTreeMap::new();
    let mut columns: Vec<Sl2Vector> = Vec::new();
    for w in &basis {
        let v = Sl2Vector::word(w.kind, w.syms.clone());
        let ev = v.act(Gen::E);
        for iw in ev.terms.keys() {
            let next = image_index.len();
            image_index.entry(iw.clone()).or_insert(next);
        }
        columns.push(ev);
    }
    let rows = image_index.len();
    // Matrix: rows = image words, cols = basis words.
    let mut m = vec![vec![ParamPoly::zero(); basis.len()]; rows.max(1)];
    for (j, ev) in columns.iter().enumerate() {
        for (iw, c) in &ev.terms {
            m[image_index[iw]][j] = c.clone();
        }
    }
    let null = nullspace_poly(&m).expect("well-shaped kernel computation");
    null.into_iter()
        .map(|coords| {
            let mut v = Sl2Vector::zero();
            for (j, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    v.add_word(basis[j].kind, basis[j].syms.clone(), c);
                }
            }
            v
        })
        .collect()
}

/// All wedge pairs of one family's orbit.
pub fn wedge_square_words(fam: super::Family) -> Vec<Word> {
    let m = fam.sl2_type();
    let mut out = Vec::new();
    for i in 1..=m + 1 {
        for j in i + 1..=m + 1 {
            out.push(Word {
                kind: WordKind::Wedge,
                syms: vec![WSym::new(fam, i), WSym::new(fam, j)],
            });
        }
    }
    out
}

/// All tensor pairs fam1 (x) fam2.
pub fn tensor_words(fam1: super::Family, fam2: super::Family) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 1..=fam1.sl2_type() + 1 {
        for j in 1..=fam2.sl2_type() + 1 {
            out.push(Word {
                kind: WordKind::Tensor,
                syms: vec![WSym::new(fam1, i), WSym::new(fam2, j)],
            });
        }
    }
    out
}

/// All symmetric pairs of one family's orbit.
pub fn symmetric_square_words(fam: super::Family) -> Vec<Word> {
    let m = fam.sl2_type();
    let mut out = Vec::new();
    for i in 1..=m + 1 {
        for j in i..=m + 1 {
            out.push(Word {
                kind: WordKind::Symmetric,
                syms: vec![WSym::new(fam, i), WSym::new(fam, j)],
            });
        }
    }
    out
}
