//! Exact linear algebra over rationals and over parameter polynomials.
//!
//! Rational matrices use ordinary Gauss-Jordan elimination. Polynomial
//! matrices use fraction-free Bareiss elimination with content removal, so
//! ranks are generic ranks over the fraction field.

use super::poly::ParamPoly;
use super::rat::Rat;

/// Shape or solvability error.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("matrix shape mismatch: rows have inconsistent lengths")]
    ShapeMismatch,
    #[error("right-hand side length {0} does not match row count {1}")]
    RhsMismatch(usize, usize),
    #[error("system is inconsistent")]
    Inconsistent,
}

/// Result of exact elimination over the rationals.
#[derive(Debug, Clone)]
pub struct RatSolveResult {
    pub rank: usize,
    /// One particular solution, when a right-hand side was supplied and the
    /// system is consistent.
    pub particular: Option<Vec<Rat>>,
    /// Basis of the nullspace (solution space of Ax = 0).
    pub nullspace: Vec<Vec<Rat>>,
}

fn check_shape<T>(a: &[Vec<T>]) -> Result<usize, LinAlgError> {
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    if a.iter().any(|r| r.len() != cols) {
        return Err(LinAlgError::ShapeMismatch);
    }
    Ok(cols)
}

/// Reduced row echelon form in place; returns pivot column list.
pub fn rref(a: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let pivot_row = (r..rows).find(|&i| !a[i][c].is_zero());
        let pr = match pivot_row {
            Some(pr) => pr,
            None => continue,
        };
        a.swap(r, pr);
        let inv = a[r][c].recip();
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in c..cols {
                    let sub = &a[r][j] * &factor;
                    a[i][j] = &a[i][j] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact solve / rank certificate over the rationals.
pub fn solve_rat(
    a: &[Vec<Rat>],
    b: Option<&[Rat]>,
) -> Result<RatSolveResult, LinAlgError> {
    let cols = check_shape(a)?;
    if let Some(b) = b {
        if b.len() != a.len() {
            return Err(LinAlgError::RhsMismatch(b.len(), a.len()));
        }
    }
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            if let Some(b) = b {
                r.push(b[i].clone());
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    let has_rhs = b.is_some();
    let rank = pivots.iter().filter(|&&c| c < cols).count();
    if has_rhs && pivots.iter().any(|&c| c == cols) {
        return Err(LinAlgError::Inconsistent);
    }
    let particular = if has_rhs {
        let mut x = vec![Rat::ZERO; cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[r][cols].clone();
        }
        Some(x)
    } else {
        None
    };
    // Nullspace basis from free columns.
    let pivot_set: Vec<usize> = pivots.clone();
    let mut nullspace = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::ZERO; cols];
        v[free] = Rat::ONE;
        for (r, &pc) in pivot_set.iter().enumerate() {
            v[pc] = -&aug[r][free];
        }
        nullspace.push(v);
    }
    Ok(RatSolveResult {
        rank,
        particular,
        nullspace,
    })
}

/// Rank of a rational matrix.
pub fn rank_rat(a: &[Vec<Rat>]) -> Result<usize, LinAlgError> {
    Ok(solve_rat(a, None)?.rank)
}

/// Fraction-free Bareiss elimination over `ParamPoly`, with content removal
/// per row; returns the generic rank over the fraction field.
pub fn rank_poly(a: &[Vec<ParamPoly>]) -> Result<usize, LinAlgError> {
    let cols = check_shape(a)?;
    let mut m: Vec<Vec<ParamPoly>> = a
        .iter()
        .map(|r| r.iter().map(|p| p.primitive_part()).collect())
        .collect();
    let rows = m.len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let pivot = (row..rows).find(|&i| !m[i][col].is_zero());
        let pr = match pivot {
            Some(pr) => pr,
            None => continue,
        };
        m.swap(row, pr);
        let pv = m[row][col].clone();
        for i in row + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in col..cols {
                let t = &(&m[i][j] * &pv) - &(&m[row][j] * &f);
                m[i][j] = t;
            }
            // Strip content to keep entries small.
            let mut content_row = ParamPoly::zero();
            for j in col..cols {
                content_row = super::ratfunc::poly_gcd(&content_row, &m[i][j]);
            }
            if !content_row.is_zero()
                && !content_row.as_constant().map(|c| c.is_one()).unwrap_or(false)
            {
                for j in col..cols {
                    if !m[i][j].is_zero() {
                        m[i][j] = m[i][j].div_exact(&content_row);
                    }
                }
            }
        }
        rank += 1;
        row += 1;
    }
    Ok(rank)
}

/// Nullspace basis of a `ParamPoly` matrix over the fraction field; each
/// basis vector is cleared to polynomial entries (primitive, so the vectors
/// are canonical up to sign).
pub fn nullspace_poly(a: &[Vec<ParamPoly>]) -> Result<Vec<Vec<ParamPoly>>, LinAlgError> {
    let cols = check_shape(a)?;
    // Gauss-Jordan over the fraction field, tracking entries as pairs
    // (num, den) via RatFunc.
    use super::ratfunc::RatFunc;
    let mut m: Vec<Vec<RatFunc>> = a
        .iter()
        .map(|r| r.iter().map(|p| RatFunc::from_poly(p.clone())).collect())
        .collect();
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let pivot_row = (r..rows).find(|&i| !m[i][c].is_zero());
        let pr = match pivot_row {
            Some(pr) => pr,
            None => continue,
        };
        m.swap(r, pr);
        let inv = m[r][c].recip().unwrap();
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let sub = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![RatFunc::zero(); cols];
        v[free] = RatFunc::one();
        for (rr, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[rr][free];
        }
        // Clear denominators.
        let mut den = ParamPoly::one();
        for e in &v {
            if !e.is_zero() {
                let g = super::ratfunc::poly_gcd(&den, &e.den);
                den = (&den * &e.den).div_exact(&g);
            }
        }
        let cleared: Vec<ParamPoly> = v
            .iter()
            .map(|e| &e.num * &den.div_exact(&e.den))
            .collect();
        // Normalize to primitive integer coefficients.
        let mut content = ParamPoly::zero();
        for e in &cleared {
            content = super::ratfunc::poly_gcd(&content, e);
        }
        let normalized: Vec<ParamPoly> = if content.is_zero() {
            cleared
        } else {
            cleared.iter().map(|e| {
                if e.is_zero() {
                    ParamPoly::zero()
                } else {
                    e.div_exact(&content)
                }
            }).collect()
        };
        basis.push(normalized);
    }
    Ok(basis)
}

/// Rank via expansion of minors; independent oracle for small matrices.
pub fn rank_by_minors(a: &[Vec<Rat>]) -> Result<usize, LinAlgError> {
    let cols = check_shape(a)?;
    let rows = a.len();
    let max = rows.min(cols);
    for size in (1..=max).rev() {
        for rsel in combinations(rows, size) {
            for csel in combinations(cols, size) {
                if !det_submatrix(a, &rsel, &csel).is_zero() {
                    return Ok(size);
                }
            }
        }
    }
    Ok(0)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn det_submatrix(a: &[Vec<Rat>], rsel: &[usize], csel: &[usize]) -> Rat {
    let n = rsel.len();
    if n == 1 {
        return a[rsel[0]][csel[0]].clone();
    }
    let mut det = Rat::ZERO;
    let sub_rows = &rsel[1..];
    for (j, &c) in csel.iter().enumerate() {
        if a[rsel[0]][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = csel
            .iter()
            .enumerate()
            .filter(|(jj, _)| *jj != j)
            .map(|(_, &cc)| cc)
            .collect();
        let minor = det_submatrix(a, sub_rows, &rest);
        let term = &a[rsel[0]][c] * &minor;
        if j % 2 == 0 {
            det += &term;
        } else {
            det -= &term;
        }
    }
    det
}

/// Determinant of a square `ParamPoly` matrix by cofactor expansion (small
/// matrices only).
pub fn det_poly(a: &[Vec<ParamPoly>]) -> ParamPoly {
    let n = a.len();
    if n == 0 {
        return ParamPoly::one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut det = ParamPoly::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<ParamPoly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&jj| jj != j)
                    .map(|jj| a[i][jj].clone())
                    .collect()
            })
            .collect();
        let term = &a[0][j] * &det_poly(&sub);
        if j % 2 == 0 {
            det = &det + &term;
        } else {
            det = &det - &term;
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Sym;
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_solve() {
        let a: Vec<Vec<Rat>> = (0..3)
            .map(|i| (0..3).map(|j| Rat::int((i == j) as i64)).collect())
            .collect();
        let b = vec![Rat::int(1), Rat::int(2), Rat::int(3)];
        let r = solve_rat(&a, Some(&b)).unwrap();
        assert_eq!(r.rank, 3);
        assert_eq!(r.particular.unwrap(), b);
        assert!(r.nullspace.is_empty());
    }

    #[test]
    fn shape_mismatch() {
        let a = vec![vec![Rat::ONE, Rat::ZERO], vec![Rat::ONE]];
        assert_eq!(rank_rat(&a), Err(LinAlgError::ShapeMismatch));
    }

    #[test]
    fn inconsistent_detected() {
        let a = vec![vec![Rat::ONE, Rat::ONE], vec![Rat::ONE, Rat::ONE]];
        let b = vec![Rat::int(1), Rat::int(2)];
        assert_eq!(
            solve_rat(&a, Some(&b)).unwrap_err(),
            LinAlgError::Inconsistent
        );
    }

    #[test]
    fn rank_matches_minor_oracle_on_seeded_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xdd5a);
        for _ in 0..300 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let a: Vec<Vec<Rat>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| Rat::int(rng.gen_range(-3..=3)))
                        .collect()
                })
                .collect();
            assert_eq!(rank_rat(&a).unwrap(), rank_by_minors(&a).unwrap());
        }
    }

    #[test]
    fn poly_rank_generic() {
        // [[k, 1], [k^2, k]] has generic rank 1.
        let k = ParamPoly::var(Sym::K);
        let a = vec![
            vec![k.clone(), ParamPoly::one()],
            vec![&k * &k, k.clone()],
        ];
        assert_eq!(rank_poly(&a).unwrap(), 1);
    }

    #[test]
    fn poly_nullspace() {
        // kernel of [k, -1] is spanned by (1, k).
        let k = ParamPoly::var(Sym::K);
        let a = vec![vec![k.clone(), -&ParamPoly::one()]];
        let ns = nullspace_poly(&a).unwrap();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0], ParamPoly::one());
        assert_eq!(ns[0][1], k);
    }
}
