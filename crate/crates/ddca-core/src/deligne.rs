//! Young-diagram content and padding, the partition algebra, and the
//! interpolated eigenvalue of the sum-of-transpositions element.

use crate::arith::{fit_polynomial, FitError, ParamPoly, Rat, Sym};
use std::collections::BTreeMap;
use std::fmt;

/// A Young diagram as weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("row lengths must be weakly decreasing and positive")]
    NotADiagram,
    #[error("padding rank {rank} below the validity bound {bound}")]
    InvalidPadRank { rank: u32, bound: u32 },
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>) -> Result<YoungDiagram, DiagramError> {
        if rows.iter().any(|&r| r == 0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::NotADiagram);
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> YoungDiagram {
        YoungDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Number of rows.
    pub fn length(&self) -> usize {
        self.rows.len()
    }

    /// Content: sum of (column - row) over boxes, zero-indexed.
    pub fn content(&self) -> i64 {
        let mut total = 0i64;
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 0..len {
                total += j as i64 - i as i64;
            }
        }
        total
    }

    /// Padded diagram (n - |lambda|, lambda_1, ...); requires
    /// n >= lambda_1 + |lambda|.
    pub fn pad(&self, n: u32) -> Result<YoungDiagram, DiagramError> {
        let bound = self.rows.first().copied().unwrap_or(0) + self.size();
        if n < bound {
            return Err(DiagramError::InvalidPadRank { rank: n, bound });
        }
        let first = n - self.size();
        let mut rows = Vec::with_capacity(self.rows.len() + 1);
        if first > 0 {
            rows.push(first);
        }
        rows.extend_from_slice(&self.rows);
        YoungDiagram::new(rows)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// The closed-form eigenvalue of the central transposition sum on the
/// interpolated object: ct(lambda) - |lambda| + (nu-|lambda|)(nu-|lambda|-1)/2,
/// symbolic in nu.
pub fn omega_interpolated(lambda: &YoungDiagram, nu: &ParamPoly) -> ParamPoly {
    let size = ParamPoly::int(lambda.size() as i64);
    let shifted = nu - &size;
    let quadratic =
        (&shifted * &(&shifted - &ParamPoly::one())).scale(&Rat::new(1, 2));
    &(&ParamPoly::int(lambda.content()) - &size) + &quadratic
}

/// Checks that the quadratic fit through (n, content(pad(lambda, n))) at the
/// sample ranks equals the closed form. The fit itself rejects off-curve
/// samples, so extra samples are consistency checks.
pub fn interpolation_consistency(
    lambda: &YoungDiagram,
    samples: &[u32],
) -> Result<(), InterpolationError> {
    if samples.len() < 3 {
        return Err(InterpolationError::TooFewSamples(samples.len()));
    }
    let mut points = Vec::with_capacity(samples.len());
    for &n in samples {
        let padded = lambda.pad(n).map_err(InterpolationError::Diagram)?;
        points.push((Rat::int(n as i64), Rat::int(padded.content())));
    }
    let fitted =
        fit_polynomial(&points, 2, Sym::Nu).map_err(InterpolationError::Fit)?;
    let closed = omega_interpolated(lambda, &ParamPoly::var(Sym::Nu));
    if fitted == closed {
        Ok(())
    } else {
        Err(InterpolationError::Mismatch {
            fitted: format!("{}", fitted),
            closed: format!("{}", closed),
        })
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InterpolationError {
    #[error("need at least 3 sample ranks, got {0}")]
    TooFewSamples(usize),
    #[error(transparent)]
    Diagram(DiagramError),
    #[error(transparent)]
    Fit(FitError),
    #[error("fitted {fitted} differs from closed form {closed}")]
    Mismatch { fitted: String, closed: String },
}

// --- partition diagrams ---------------------------------------------------

/// A two-row partition diagram: a set partition of n top points and m
/// bottom points. Points are coded 0..n (top) and n..n+m (bottom); blocks
/// are sorted lists of sorted blocks, so equality is structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionDiagram {
    pub n: usize,
    pub m: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("blocks must partition the point set exactly")]
    NotAPartition,
    #[error("inner sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

impl PartitionDiagram {
    pub fn new(
        n: usize,
        m: usize,
        blocks: Vec<Vec<usize>>,
    ) -> Result<PartitionDiagram, PartitionError> {
        let mut seen = vec![false; n + m];
        for b in &blocks {
            if b.is_empty() {
                return Err(PartitionError::NotAPartition);
            }
            for &p in b {
                if p >= n + m || seen[p] {
                    return Err(PartitionError::NotAPartition);
                }
                seen[p] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(PartitionError::NotAPartition);
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        Ok(PartitionDiagram { n, m, blocks })
    }

    /// Identity diagram of size (n, n): {i, i'} blocks.
    pub fn identity(n: usize) -> PartitionDiagram {
        let blocks = (0..n).map(|i| vec![i, n + i]).collect();
        PartitionDiagram::new(n, n, blocks).unwrap()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Enumerates all diagrams of shape (n, m): set partitions of n+m points.
    pub fn enumerate(n: usize, m: usize) -> Vec<PartitionDiagram> {
        let total = n + m;
        let mut out = Vec::new();
        // Restricted growth strings.
        let mut rgs = vec![0usize; total];
        loop {
            let nblocks = rgs.iter().copied().max().map(|x| x + 1).unwrap_or(0);
            let mut blocks = vec![Vec::new(); nblocks];
            for (p, &b) in rgs.iter().enumerate() {
                blocks[b].push(p);
            }
            out.push(PartitionDiagram::new(n, m, blocks).unwrap());
            // next RGS
            let mut i = total;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                let max_prefix = rgs[..i].iter().copied().max().map(|x| x + 1).unwrap_or(0);
                if rgs[i] < max_prefix {
                    rgs[i] += 1;
                    for v in rgs[i + 1..].iter_mut() {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    }
}

/// A formal combination of diagrams over Q[nu].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DiagramSum {
    pub terms: BTreeMap<PartitionDiagram, ParamPoly>,
}

impl DiagramSum {
    pub fn single(d: PartitionDiagram) -> DiagramSum {
        let mut terms = BTreeMap::new();
        terms.insert(d, ParamPoly::one());
        DiagramSum { terms }
    }

    pub fn add_term(&mut self, d: PartitionDiagram, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
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
}

/// Composition of basis diagrams: stacks `upper` (shape (m, k)) on `lower`
/// (shape (n, m)), counts purely-middle components as powers of nu, deletes
/// the middle row.
pub fn compose_diagrams(
    upper: &PartitionDiagram,
    lower: &PartitionDiagram,
) -> Result<(u32, PartitionDiagram), PartitionError> {
    if lower.m != upper.n {
        return Err(PartitionError::SizeMismatch(lower.m, upper.n));
    }
    let n = lower.n;
    let mid = lower.m;
    let k = upper.m;
    // Union-find over n + mid + k points: lower occupies 0..n (bottom row of
    // the result) and n..n+mid; upper occupies n..n+mid and n+mid..n+mid+k.
    let total = n + mid + k;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let ra = find(parent, a);
        let rb = find(parent, b);
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for b in lower.blocks() {
        for w in b.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
    }
    for b in upper.blocks() {
        // upper's top points i (0..mid) sit at n+i; bottom points j at
        // n+mid+(j-mid).
        let mapped: Vec<usize> = b.iter().map(|&p| n + p).collect();
        for w in mapped.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
    }
    // Count purely-middle components.
    let mut comp_points: BTreeMap<usize, (bool, Vec<usize>)> = BTreeMap::new();
    for p in 0..total {
        let root = find(&mut parent, p);
        let entry = comp_points.entry(root).or_insert((true, Vec::new()));
        let is_middle = (n..n + mid).contains(&p);
        if !is_middle {
            entry.0 = false;
            entry.1.push(p);
        }
    }
    let mut middle_only = 0u32;
    let mut blocks = Vec::new();
    for (_, (pure_middle, outer)) in comp_points {
        if pure_middle {
            middle_only += 1;
        } else {
            // Re-code: bottom row 0..n stays; top row n+mid.. maps to n..n+k.
            let re: Vec<usize> = outer
                .into_iter()
                .map(|p| if p < n { p } else { p - mid })
                .collect();
            blocks.push(re);
        }
    }
    let result = PartitionDiagram::new(n, k, blocks)?;
    Ok((middle_only, result))
}

/// Composition extended bilinearly with the nu-power scaling.
pub fn compose_sums(
    upper: &DiagramSum,
    lower: &DiagramSum,
    nu: &ParamPoly,
) -> Result<DiagramSum, PartitionError> {
    let mut out = DiagramSum::default();
    for (du, cu) in &upper.terms {
        for (dl, cl) in &lower.terms {
            let (loops, d) = compose_diagrams(du, dl)?;
            let mut c = cu * cl;
            for _ in 0..loops {
                c = &c * nu;
            }
            out.add_term(d, c);
        }
    }
    Ok(out)
}

/// Bell numbers by the triangle recurrence (independent of enumeration).
pub fn bell_number(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_examples() {
        // one row (n): 0 + 1 + ... + (n-1)
        for n in 1..=20u32 {
            let d = YoungDiagram::new(vec![n]).unwrap();
            assert_eq!(d.content(), (n as i64 * (n as i64 - 1)) / 2);
        }
        assert_eq!(YoungDiagram::empty().content(), 0);
        let d = YoungDiagram::new(vec![2, 1]).unwrap();
        assert_eq!(d.content(), 0);
        let col = YoungDiagram::new(vec![1, 1]).unwrap();
        assert_eq!(col.content(), -1);
    }

    #[test]
    fn pad_examples() {
        let d = YoungDiagram::new(vec![1]).unwrap();
        assert_eq!(d.pad(3).unwrap().rows(), &[2, 1]);
        let e = YoungDiagram::empty();
        assert_eq!(e.pad(4).unwrap().rows(), &[4]);
        let bad = YoungDiagram::new(vec![2, 1]).unwrap();
        assert_eq!(
            bad.pad(4).unwrap_err(),
            DiagramError::InvalidPadRank { rank: 4, bound: 5 }
        );
    }

    #[test]
    fn omega_closed_form_examples() {
        let nu = ParamPoly::var(Sym::Nu);
        // empty: nu(nu-1)/2
        let v = omega_interpolated(&YoungDiagram::empty(), &nu);
        let expect = (&nu * &(&nu - &ParamPoly::one())).scale(&Rat::new(1, 2));
        assert_eq!(v, expect);
        // (1): -1 + (nu-1)(nu-2)/2
        let v = omega_interpolated(&YoungDiagram::new(vec![1]).unwrap(), &nu);
        let s = &nu - &ParamPoly::one();
        let expect = &(&s * &(&s - &ParamPoly::one())).scale(&Rat::new(1, 2))
            - &ParamPoly::one();
        assert_eq!(v, expect);
    }

    #[test]
    fn omega_specializes_to_padded_content() {
        // lambda = (1), n = 5: closed form at nu=5 is ct((4,1)) = 5.
        let lam = YoungDiagram::new(vec![1]).unwrap();
        let closed = omega_interpolated(&lam, &ParamPoly::var(Sym::Nu));
        let mut a = BTreeMap::new();
        a.insert(Sym::Nu, Rat::int(5));
        assert_eq!(closed.eval(&a).unwrap(), Rat::int(5));
        assert_eq!(lam.pad(5).unwrap().content(), 5);
    }

    #[test]
    fn padded_content_identity_exhaustive() {
        // ct(pad(lambda, n)) = ct(lambda) - |lambda| + (n-|lambda|)(n-|lambda|-1)/2
        // for all |lambda| <= 6 and valid n <= 20.
        fn diagrams_of_size(s: u32) -> Vec<YoungDiagram> {
            fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
                if remaining == 0 {
                    out.push(YoungDiagram::new(cur.clone()).unwrap());
                    return;
                }
                for r in (1..=remaining.min(max)).rev() {
                    cur.push(r);
                    rec(remaining - r, r, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            if s == 0 {
                out.push(YoungDiagram::empty());
            } else {
                rec(s, s, &mut Vec::new(), &mut out);
            }
            out
        }
        for size in 0..=6u32 {
            for lam in diagrams_of_size(size) {
                let bound = lam.rows().first().copied().unwrap_or(0) + lam.size();
                for n in bound..=20 {
                    let lhs = lam.pad(n).unwrap().content();
                    let m = lam.size() as i64;
                    let rhs = lam.content() - m
                        + (n as i64 - m) * (n as i64 - m - 1) / 2;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn interpolation_consistency_examples() {
        let lam = YoungDiagram::new(vec![1]).unwrap();
        interpolation_consistency(&lam, &[3, 4, 5]).unwrap();
        let lam = YoungDiagram::new(vec![2, 2]).unwrap();
        interpolation_consistency(&lam, &[6, 7, 8, 9]).unwrap();
        interpolation_consistency(&YoungDiagram::empty(), &[1, 2, 3]).unwrap();
    }

    #[test]
    fn identity_composition() {
        for d in PartitionDiagram::enumerate(2, 2) {
            let (loops, r) = compose_diagrams(&d, &PartitionDiagram::identity(2)).unwrap();
            assert_eq!(loops, 0);
            assert_eq!(r, d);
            let (loops, r) = compose_diagrams(&PartitionDiagram::identity(2), &d).unwrap();
            assert_eq!(loops, 0);
            assert_eq!(r, d);
        }
    }

    #[test]
    fn singleton_composition_gains_nu() {
        // d = {{1},{1'}}: d . d = nu * d
        let d = PartitionDiagram::new(1, 1, vec![vec![0], vec![1]]).unwrap();
        let (loops, r) = compose_diagrams(&d, &d).unwrap();
        assert_eq!(loops, 1);
        assert_eq!(r, d);
        // all-singleton (2,2) diagram squares to nu^2 times itself
        let d = PartitionDiagram::new(2, 2, vec![vec![0], vec![1], vec![2], vec![3]]).unwrap();
        let (loops, r) = compose_diagrams(&d, &d).unwrap();
        assert_eq!(loops, 2);
        assert_eq!(r, d);
    }

    #[test]
    fn enumeration_matches_bell_numbers() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)] {
            let count = PartitionDiagram::enumerate(n, m).len() as u64;
            assert_eq!(count, bell_number(n + m));
        }
        assert_eq!(bell_number(4), 15);
        assert_eq!(bell_number(6), 203);
    }

    #[test]
    fn size_mismatch_rejected() {
        let a = PartitionDiagram::identity(2);
        let b = PartitionDiagram::identity(3);
        assert_eq!(
            compose_diagrams(&a, &b).unwrap_err(),
            PartitionError::SizeMismatch(3, 2)
        );
    }
}
