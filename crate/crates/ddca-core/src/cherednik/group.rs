//! Signed permutations: the symmetric group (type A) and the hyperoctahedral
//! group (type B) acting on the basis indices.

use std::fmt;

/// Algebra flavor: plain symmetric group, or with sign flips.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CherType {
    A,
    B,
}

/// A signed permutation g: e_i -> sign[i] * e_(perm[i]); type A keeps all
/// signs positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElem {
    pub perm: Vec<u8>,
    pub sign: Vec<i8>,
}

impl GroupElem {
    pub fn identity(n: usize) -> GroupElem {
        GroupElem {
            perm: (0..n as u8).collect(),
            sign: vec![1; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Transposition (i j).
    pub fn transposition(n: usize, i: usize, j: usize) -> GroupElem {
        let mut g = GroupElem::identity(n);
        g.perm.swap(i, j);
        g
    }

    /// Sign flip gamma_i.
    pub fn gamma(n: usize, i: usize) -> GroupElem {
        let mut g = GroupElem::identity(n);
        g.sign[i] = -1;
        g
    }

    /// Composition: (self o other)(e_i) = self(other(e_i)).
    pub fn compose(&self, other: &GroupElem) -> GroupElem {
        let n = self.rank();
        debug_assert_eq!(n, other.rank());
        let mut perm = vec![0u8; n];
        let mut sign = vec![1i8; n];
        for i in 0..n {
            let mid = other.perm[i] as usize;
            perm[i] = self.perm[mid];
            sign[i] = other.sign[i] * self.sign[mid];
        }
        GroupElem { perm, sign }
    }

    pub fn inverse(&self) -> GroupElem {
        let n = self.rank();
        let mut perm = vec![0u8; n];
        let mut sign = vec![1i8; n];
        for i in 0..n {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            sign[j] = self.sign[i];
        }
        GroupElem { perm, sign }
    }

    pub fn is_identity(&self) -> bool {
        self.sign.iter().all(|&s| s == 1)
            && self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// Applies the linear action to an exponent vector: x^e -> product of
    /// sign^e * x_(perm)^e. Returns the permuted exponents and the sign.
    pub fn act_on_exponents(&self, exps: &[u16]) -> (Vec<u16>, i8) {
        let n = self.rank();
        let mut out = vec![0u16; n];
        let mut sign = 1i8;
        for (i, &e) in exps.iter().enumerate() {
            out[self.perm[i] as usize] = e;
            if self.sign[i] < 0 && e % 2 == 1 {
                sign = -sign;
            }
        }
        (out, sign)
    }

    /// Enumerates the full group of the given type and rank.
    pub fn enumerate(ty: CherType, n: usize) -> Vec<GroupElem> {
        let mut perms = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        permute(&mut cur, 0, &mut perms);
        let mut out = Vec::new();
        for p in &perms {
            match ty {
                CherType::A => out.push(GroupElem {
                    perm: p.clone(),
                    sign: vec![1; n],
                }),
                CherType::B => {
                    for mask in 0..(1u32 << n) {
                        let sign: Vec<i8> = (0..n)
                            .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
                            .collect();
                        out.push(GroupElem {
                            perm: p.clone(),
                            sign,
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn one_line_notation(&self) -> String {
        let parts: Vec<String> = self
            .perm
            .iter()
            .zip(&self.sign)
            .map(|(&p, &s)| format!("{}{}", if s < 0 { "-" } else { "" }, p + 1))
            .collect();
        format!("[{}]", parts.join(","))
    }
}

fn permute(arr: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == arr.len() {
        out.push(arr.clone());
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute(arr, k + 1, out);
        arr.swap(k, i);
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line_notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_law_associative() {
        let all = GroupElem::enumerate(CherType::B, 2);
        assert_eq!(all.len(), 8);
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(
                        a.compose(b).compose(c),
                        a.compose(&b.compose(c))
                    );
                }
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        for g in GroupElem::enumerate(CherType::B, 3) {
            assert!(g.compose(&g.inverse()).is_identity());
            assert!(g.inverse().compose(&g).is_identity());
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(GroupElem::enumerate(CherType::A, 3).len(), 6);
        assert_eq!(GroupElem::enumerate(CherType::A, 4).len(), 24);
        assert_eq!(GroupElem::enumerate(CherType::B, 3).len(), 48);
    }

    #[test]
    fn gamma_conjugates_transposition() {
        // gamma_0 s_01 gamma_0^(-1) = s_01 gamma_0 gamma_1
        let n = 2;
        let g0 = GroupElem::gamma(n, 0);
        let s = GroupElem::transposition(n, 0, 1);
        let conj = g0.compose(&s).compose(&g0.inverse());
        let expect = s
            .compose(&g0)
            .compose(&GroupElem::gamma(n, 1));
        assert_eq!(conj, expect);
    }

    #[test]
    fn action_on_exponents() {
        let s = GroupElem::transposition(3, 0, 2);
        let (e, sign) = s.act_on_exponents(&[2, 0, 1]);
        assert_eq!(e, vec![1, 0, 2]);
        assert_eq!(sign, 1);
        let g = GroupElem::gamma(2, 0);
        let (e, sign) = g.act_on_exponents(&[3, 1]);
        assert_eq!(e, vec![3, 1]);
        assert_eq!(sign, -1);
        let (_, sign) = g.act_on_exponents(&[2, 1]);
        assert_eq!(sign, 1);
    }
}
