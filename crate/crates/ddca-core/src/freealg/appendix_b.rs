//! Symbolic-in-l verification of the induction step behind the positive
//! part presentation: the highest-weight vectors of the degree-(l-2)
//! component tensored with the generators, the derived bracket identities,
//! and the common integer roots of the coordinate-matrix minors.

use crate::arith::{det_poly, nullspace_poly, poly_gcd, solve_rat, ParamPoly, Rat, RatFunc, Sym};
use crate::liealg::po::PoElement;
use crate::liealg::po_symbolic::{po_bracket_symbolic, v_basis, SymbolicPo};
use crate::report::{run_check, VerificationReport};
use std::collections::BTreeMap;

/// Formal element of (V_l) (x) (V_3): coefficients in Q(l) on words
/// v_i (x) c_j, indices small while l stays symbolic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorLc {
    pub terms: BTreeMap<(u16, u16), RatFunc>,
}

fn l() -> ParamPoly {
    ParamPoly::var(Sym::L)
}

fn lp(c: i64) -> ParamPoly {
    &l() + &ParamPoly::int(c)
}

impl TensorLc {
    pub fn zero() -> TensorLc {
        TensorLc::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: u16, j: u16, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
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

    pub fn from_poly_coeffs(parts: &[(u16, u16, ParamPoly)]) -> TensorLc {
        let mut out = TensorLc::zero();
        for (i, j, c) in parts {
            out.add_term(*i, *j, RatFunc::from_poly(c.clone()));
        }
        out
    }

    /// e-action: e(v_i (x) c_j) = (i-1)(l-i+2) v_(i-1) (x) c_j
    ///                          + (j-1)(5-j) v_i (x) c_(j-1).
    pub fn act_e(&self) -> TensorLc {
        let mut out = TensorLc::zero();
        for (&(i, j), c) in &self.terms {
            if i >= 2 {
                let scalar = lp(2 - i as i64).scale(&Rat::int(i as i64 - 1));
                out.add_term(i - 1, j, &RatFunc::from_poly(scalar) * c);
            }
            if j >= 2 {
                let scalar = Rat::int((j as i64 - 1) * (5 - j as i64));
                out.add_term(i, j - 1, &RatFunc::constant(scalar) * c);
            }
        }
        out
    }

    /// f-action: f(v_i (x) c_j) = v_(i+1) (x) c_j + v_i (x) c_(j+1),
    /// dropping past c_4; v-indices are unconstrained while l is symbolic.
    pub fn act_f(&self) -> TensorLc {
        let mut out = TensorLc::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i + 1, j, c.clone());
            if j <= 3 {
                out.add_term(i, j + 1, c.clone());
            }
        }
        out
    }

    /// Proportionality over Q(l): self = ratio * other for a single ratio.
    pub fn proportional_to(&self, other: &TensorLc) -> Option<RatFunc> {
        if self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let mut ratio: Option<RatFunc> = None;
        for ((ka, ca), (kb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            if ka != kb {
                return None;
            }
            let r = ca / cb;
            match &ratio {
                None => ratio = Some(r),
                Some(prev) => {
                    if prev != &r {
                        return None;
                    }
                }
            }
        }
        ratio
    }
}

/// The four displayed highest-weight vectors of V_l (x) V_3 at the top
/// levels, in the order V_(l+3), V_(l+1), V_(l-1), V_(l-3).
pub fn displayed_hw_vectors() -> Vec<TensorLc> {
    let one = ParamPoly::one();
    vec![
        // v_1 (x) c_1
        TensorLc::from_poly_coeffs(&[(1, 1, one.clone())]),
        // 3 v_2 (x) c_1 - l v_1 (x) c_2
        TensorLc::from_poly_coeffs(&[(2, 1, ParamPoly::int(3)), (1, 2, -&l())]),
        // 6 v_3 (x) c_1 - 4(l-1) v_2 (x) c_2 + l(l-1) v_1 (x) c_3
        TensorLc::from_poly_coeffs(&[
            (3, 1, ParamPoly::int(6)),
            (2, 2, lp(-1).scale(&Rat::int(-4))),
            (1, 3, &l() * &lp(-1)),
        ]),
        // 6 v_4 (x) c_1 - 6(l-2) v_3 (x) c_2 + 3(l-2)(l-1) v_2 (x) c_3
        //   - l(l-1)(l-2) v_1 (x) c_4
        TensorLc::from_poly_coeffs(&[
            (4, 1, ParamPoly::int(6)),
            (3, 2, lp(-2).scale(&Rat::int(-6))),
            (2, 3, (&lp(-2) * &lp(-1)).scale(&Rat::int(3))),
            (1, 4, -&(&(&l() * &lp(-1)) * &lp(-2))),
        ]),
    ]
}

/// The kernel of e on level s = i + j (weight l + 7 - 2s), symbolic in l.
pub fn hw_kernel_at_level(s: u16) -> Vec<TensorLc> {
    let words: Vec<(u16, u16)> = (1..=4u16)
        .filter_map(|j| {
            let i = s as i64 - j as i64;
            if i >= 1 {
                Some((i as u16, j))
            } else {
                None
            }
        })
        .collect();
    // Matrix of e: rows = image words at level s-1, cols = words.
    let mut image_index: BTreeMap<(u16, u16), usize> = BTreeMap::new();
    let mut cols = Vec::new();
    for &(i, j) in &words {
        let mut v = TensorLc::zero();
        v.add_term(i, j, RatFunc::one());
        let ev = v.act_e();
        for key in ev.terms.keys() {
            let next = image_index.len();
            image_index.entry(*key).or_insert(next);
        }
        cols.push(ev);
    }
    let mut m = vec![vec![ParamPoly::zero(); words.len()]; image_index.len().max(1)];
    for (jcol, ev) in cols.iter().enumerate() {
        for (key, c) in &ev.terms {
            assert!(c.den.is_one());
            m[image_index[key]][jcol] = c.num.clone();
        }
    }
    nullspace_poly(&m)
        .expect("kernel computation")
        .into_iter()
        .map(|coords| {
            let mut v = TensorLc::zero();
            for (idx, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    let (i, j) = words[idx];
                    v.add_term(i, j, RatFunc::from_poly(c));
                }
            }
            v
        })
        .collect()
}

/// Expresses a symbolic element of the degree component with top monomial
/// q^(l+shift) as a multiple of v_i^(l+shift): the p-exponent determines i,
/// the ratio lives in Q(l). Errors if the element is not a scalar multiple.
fn express_in_v(x: &SymbolicPo, shift: i64) -> Result<(u16, RatFunc), String> {
    if x.is_zero() {
        return Err("zero element".into());
    }
    // All terms must share one p-exponent (constant): single weight
    // component of an irreducible.
    let mut p_exp = None;
    for (&(_, b), _) in &x.terms {
        if b.c1 != 0 {
            return Err("p-exponent depends on l".into());
        }
        match p_exp {
            None => p_exp = Some(b.c0),
            Some(e) if e == b.c0 => {}
            _ => return Err("mixed p-exponents".into()),
        }
    }
    let i = p_exp.unwrap() as u16 + 1;
    let v = v_basis(i as u32, shift);
    let (num, den) = x
        .proportional_to(&v)
        .ok_or_else(|| "not proportional to a v-basis vector".to_string())?;
    Ok((i, RatFunc::new(num, den).map_err(|e| e.to_string())?))
}

fn c_element(j: u16) -> PoElement {
    // c_1 = q^3/6 and c_(j+1) = [f, c_j].
    let mut c = PoElement::monomial_rat(3, 0, Rat::new(1, 6));
    let f = crate::liealg::po::sl2_f();
    for _ in 1..j {
        c = crate::liealg::po::po_bracket(&f, &c);
    }
    c
}

fn d_element(i: u16) -> PoElement {
    // d_1 = [c_2, c_1] = q^4/4 and d_(i+1) = [f, d_i].
    let mut d = crate::liealg::po::po_bracket(&c_element(2), &c_element(1));
    let f = crate::liealg::po::sl2_f();
    for _ in 1..i {
        d = crate::liealg::po::po_bracket(&f, &d);
    }
    d
}

/// d_i as combinations of brackets [c_s, c_u]; f-orbit of d_1 = [c_2, c_1].
fn d_as_c_brackets(i: u16) -> Vec<(Rat, u16, u16)> {
    // Start with [(1, 2, 1)] and apply f by the Leibniz rule with
    // c_(j+1) = f c_j, f c_4 = 0, dropping [c, c] repeats.
    let mut cur: Vec<(Rat, u16, u16)> = vec![(Rat::ONE, 2, 1)];
    for _ in 1..i {
        let mut next: BTreeMap<(u16, u16), Rat> = BTreeMap::new();
        let mut push = |s: u16, u: u16, c: Rat| {
            if s == u {
                return;
            }
            // canonical order: larger index first, sign flip otherwise
            let (s, u, c) = if s > u { (s, u, c) } else { (u, s, -c) };
            let e = next.entry((s, u)).or_insert(Rat::ZERO);
            *e = &*e + &c;
        };
        for (c, s, u) in &cur {
            if *s <= 3 {
                push(s + 1, *u, c.clone());
            }
            if *u <= 3 {
                push(*s, u + 1, c.clone());
            }
        }
        cur = next
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((s, u), c)| (c, s, u))
            .collect();
    }
    cur
}

/// [x, d_i] expanded through d_i = sum [c_s, c_u] with inner brackets
/// computed in the Poisson algebra; the result is a formal combination of
/// v_a^l (x) c_u words (`shift_out` names the target component l).
fn bracket_with_d(
    x: &SymbolicPo,
    i: u16,
    x_shift: i64,
) -> Result<TensorLc, String> {
    let _ = x_shift;
    let mut out = TensorLc::zero();
    for (coeff, s, u) in d_as_c_brackets(i) {
        // [x, [c_s, c_u]] = [[x, c_s], c_u] - [[x, c_u], c_s]
        let xs = po_bracket_symbolic(x, &SymbolicPo::from_concrete(&c_element(s)));
        let xu = po_bracket_symbolic(x, &SymbolicPo::from_concrete(&c_element(u)));
        let mut handle = |inner: &SymbolicPo, outer: u16, sign: Rat| -> Result<(), String> {
            if inner.is_zero() {
                return Ok(());
            }
            let (a, r) = express_component(inner)?;
            out.add_term(
                a,
                outer,
                &RatFunc::constant(&coeff * &sign) * &r,
            );
            Ok(())
        };
        handle(&xs, u, Rat::ONE)?;
        handle(&xu, s, Rat::int(-1))?;
    }
    Ok(out)
}

/// Expresses an element as a multiple of v_a^l (the full component with
/// symbolic top q^l): the p-exponent fixes a, and the q-exponent must then
/// be l - (a - 1).
fn express_component(x: &SymbolicPo) -> Result<(u16, RatFunc), String> {
    if x.is_zero() {
        return Err("zero".into());
    }
    let (&(qa, pb), _) = x.terms.iter().next().unwrap();
    if pb.c1 != 0 || qa.c1 != 1 {
        return Err("unexpected exponent shape".into());
    }
    let a = pb.c0 as u16 + 1;
    // v_a^l has q-exponent l - (a-1); the element must sit in the same
    // component.
    if qa.c0 != -(pb.c0) {
        return Err(format!(
            "element lies in component q^(l{:+}) not q^l",
            qa.c0 + pb.c0
        ));
    }
    express_in_v(x, 0).map(|(i, r)| {
        debug_assert_eq!(i, a);
        (i, r)
    })
}

/// Result of the appendix verification over an l-range.
pub struct AppendixBOutcome {
    pub report: VerificationReport,
    pub minor_common_roots: Vec<i64>,
}

/// Integer roots of a univariate polynomial in l.
pub fn integer_roots(p: &ParamPoly) -> Vec<i64> {
    if p.is_zero() {
        panic!("zero polynomial has every root");
    }
    let mut roots = Vec::new();
    // l = 0 is a root iff the constant term vanishes.
    let mut assignment = BTreeMap::new();
    assignment.insert(Sym::L, Rat::ZERO);
    let at0 = p.eval(&assignment).unwrap();
    if at0.is_zero() {
        roots.push(0);
    }
    // Strip powers of l, then test divisors of the constant term.
    let mut q = p.clone();
    let lvar = ParamPoly::var(Sym::L);
    loop {
        let mut a = BTreeMap::new();
        a.insert(Sym::L, Rat::ZERO);
        if q.eval(&a).unwrap().is_zero() {
            q = q.div_exact(&lvar);
        } else {
            break;
        }
    }
    let _konst = {
        let mut a = BTreeMap::new();
        a.insert(Sym::L, Rat::ZERO);
        q.eval(&a).unwrap()
    };
    // q has integer coefficients after primitive scaling.
    let q = q.primitive_part();
    let konst = {
        let mut a = BTreeMap::new();
        a.insert(Sym::L, Rat::ZERO);
        q.eval(&a).unwrap()
    };
    let c = konst.to_integer().expect("primitive integer constant term").abs();
    let _ = konst;
    for cand in 1..=c {
        if c % cand == 0 {
            for sign in [1i64, -1] {
                let x = sign * cand;
                let mut a = BTreeMap::new();
                a.insert(Sym::L, Rat::int(x));
                if q.eval(&a).unwrap().is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// Runs the full appendix verification; `l_range` provides the spot-check
/// specializations (validity needs l >= 6).
pub fn appendix_b_verify(l_range: std::ops::RangeInclusive<i64>) -> AppendixBOutcome {
    let mut report = VerificationReport::new("appendix-b");
    report.param("l-range", format!("{}..={}", l_range.start(), l_range.end()));
    assert!(*l_range.start() >= 6, "induction step needs l >= 6");

    // (i) the four hw vectors, symbolically.
    let displayed = displayed_hw_vectors();
    for (idx, (level, name)) in [(2u16, "V(l+3)"), (3, "V(l+1)"), (4, "V(l-1)"), (5, "V(l-3)")]
        .into_iter()
        .enumerate()
    {
        let d = displayed[idx].clone();
        run_check(
            &mut report,
            &format!("appendix-b.hw.{}", name),
            "the highest weight vector of V_(l-1) ... 6v3 (x) c1 - 4(l-1)v2 (x) c2 + l(l-1)v1 (x) c3",
            || {
                if !d.act_e().is_zero() {
                    return Err(format!("e does not annihilate the displayed {} vector", name));
                }
                let kernel = hw_kernel_at_level(level);
                if kernel.len() != 1 {
                    return Err(format!("kernel at level {} has dimension {}", level, kernel.len()));
                }
                if d.proportional_to(&kernel[0]).is_none() {
                    return Err("displayed vector is not on the kernel line".into());
                }
                Ok("e-annihilated, spans the kernel line".into())
            },
        );
    }

    // Spot checks of e-annihilation at specialized l for the V(l-1) vector.
    run_check(
        &mut report,
        "appendix-b.hw.spot-checks",
        "e-annihilation at specialized l",
        || {
            for lv in [6i64, 7] {
                let d = &displayed_hw_vectors()[2];
                // substitute l = lv in every coefficient
                let mut assignment = BTreeMap::new();
                assignment.insert(Sym::L, Rat::int(lv));
                for (_, c) in &d.act_e().terms {
                    let num = c.num.eval(&assignment).map_err(|e| e.to_string())?;
                    if !num.is_zero() {
                        return Err(format!("residual at l = {}", lv));
                    }
                }
            }
            Ok("l = 6, 7 pass".into())
        },
    );

    // (ii) derived identity for V_(l+3): coefficient (l-2)(l+3).
    run_check(
        &mut report,
        "appendix-b.identity.v-l-plus-3",
        "0 = (l-2)(l+3)[v1^l, c1]",
        || {
            let v2 = v_basis(2, -2);
            let d1 = SymbolicPo::from_concrete(&d_element(1));
            let c1 = SymbolicPo::from_concrete(&c_element(1));
            // alpha: [v2^(l-2), d1] = alpha v1^l
            let (a_idx, alpha) =
                express_component(&po_bracket_symbolic(&v2, &d1)).map_err(|e| e)?;
            if a_idx != 1 {
                return Err("unexpected index for [v2^(l-2), d1]".into());
            }
            // beta: [v2^(l-2), c1] = beta v1^(l-1)
            let b = po_bracket_symbolic(&v2, &c1);
            let (b_idx, beta) = express_in_v(&b, -1).map_err(|e| e)?;
            if b_idx != 1 {
                return Err("unexpected index for [v2^(l-2), c1]".into());
            }
            // gamma: [v1^(l-1), d1] = gamma [v1^l, c1]-side:
            // expand d1 = [c2, c1]: [[v1^(l-1), c2], c1] - [[v1^(l-1), c1], c2]
            let v1l1 = v_basis(1, -1);
            let vc2 = po_bracket_symbolic(&v1l1, &SymbolicPo::from_concrete(&c_element(2)));
            let vc1 = po_bracket_symbolic(&v1l1, &c1);
            if !vc1.is_zero() {
                return Err("[v1^(l-1), c1] should vanish".into());
            }
            let (g_idx, gamma) = express_component(&vc2).map_err(|e| e)?;
            if g_idx != 1 {
                return Err("unexpected index for [v1^(l-1), c2]".into());
            }
            // total coefficient on [v1^l, c1]: alpha - beta*gamma
            let total = &alpha - &(&beta * &gamma);
            if total.is_zero() {
                return Err("identity degenerates to 0 = 0".into());
            }
            if !total.den.as_constant().map(|c| !c.is_zero()).unwrap_or(false)
                && !total.den.is_one()
            {
                return Err(format!("coefficient has denominator {}", total.den));
            }
            let prim = total.num.primitive_part();
            let expect = (&lp(-2) * &lp(3)).primitive_part();
            if prim == expect {
                Ok(format!("coefficient proportional to (l-2)(l+3); raw = {}", total))
            } else {
                Err(format!("coefficient {} not proportional to (l-2)(l+3)", prim))
            }
        },
    );

    // (ii) derived identity for V_(l-1).
    run_check(
        &mut report,
        "appendix-b.identity.v-l-minus-1",
        "0 = 6[v3^l, c1] - 4(l-1)[v2^l, c2] + (l-1)l[v1^l, c3]",
        || {
            let v1l1 = v_basis(1, -1);
            // [v1^(l-1), [c1,c4] - [c2,c3]] expands into formal v (x) c terms.
            let mut formal = TensorLc::zero();
            for (sign, s, u) in [(Rat::ONE, 1u16, 4u16), (Rat::int(-1), 2, 3)] {
                // [x,[cs,cu]] = [[x,cs],cu] - [[x,cu],cs]
                let xs = po_bracket_symbolic(&v1l1, &SymbolicPo::from_concrete(&c_element(s)));
                let xu = po_bracket_symbolic(&v1l1, &SymbolicPo::from_concrete(&c_element(u)));
                if !xs.is_zero() {
                    let (a, r) = express_component(&xs)?;
                    formal.add_term(a, u, &RatFunc::constant(sign.clone()) * &r);
                }
                if !xu.is_zero() {
                    let (a, r) = express_component(&xu)?;
                    formal.add_term(a, s, &RatFunc::constant(-&sign) * &r);
                }
            }
            let expect = &displayed_hw_vectors()[2];
            match formal.proportional_to(expect) {
                Some(ratio) => Ok(format!("matches the displayed vector, ratio {}", ratio)),
                None => Err(format!("derived {:?} differs from displayed", formal)),
            }
        },
    );

    // (iii) Eq. 6: the derived alpha_1 matches the displayed coordinates.
    let alpha1_displayed = TensorLc::from_poly_coeffs(&[
        (4, 1, (&ParamPoly::int(44) - &l().scale(&Rat::int(16))).scale(&Rat::int(12))),
        (
            3,
            2,
            (&lp(-2) * &(&l().scale(&Rat::int(11)) - &ParamPoly::int(35))).scale(&Rat::int(12)),
        ),
        (
            2,
            3,
            (&(&lp(-2) * &lp(-1)) * &(&ParamPoly::int(13) - &l().scale(&Rat::int(3))))
                .scale(&Rat::int(12)),
        ),
        (
            1,
            4,
            &(&(&l() * &lp(-1)) * &lp(-2)) * &(&l().scale(&Rat::int(2)) - &ParamPoly::int(34)),
        ),
    ]);
    run_check(
        &mut report,
        "appendix-b.identity.eq6",
        "12(44 - 16l)v4^l (x) c1 + ...",
        || {
            // (a) the displayed coordinates define a kernel element of the
            // bracketing map, symbolically in l: the content of Eq. 6.
            let xi_of = |v: &TensorLc| -> SymbolicPo {
                let mut acc = SymbolicPo::zero();
                for (&(a, j), coeff) in &v.terms {
                    assert!(coeff.den.is_one());
                    let br = po_bracket_symbolic(
                        &v_basis(a as u32, 0),
                        &SymbolicPo::from_concrete(&c_element(j)),
                    );
                    acc = acc.add(&br.scale(&coeff.num));
                }
                acc
            };
            if !xi_of(&alpha1_displayed).is_zero() {
                return Err("the displayed Eq. 6 element is not a bracketing-map kernel element".into());
            }
            // (b) the faithful expansion of [v2^(l-2), psi_1] lands in the
            // same kernel. Coefficients of psi_1: -4 d1 c4 + 3 d2 c3
            // - 2 d3 c2 + d4 c1.
            let v2 = v_basis(2, -2);
            let psi: [(i64, u16, u16); 4] = [(-4, 1, 4), (3, 2, 3), (-2, 3, 2), (1, 4, 1)];
            let mut formal = TensorLc::zero();
            for (lam, i, j) in psi {
                // [v2, [d_i, c_j]] = [[v2, d_i], c_j] - [[v2, c_j], d_i]
                let vd = po_bracket_symbolic(
                    &v2,
                    &SymbolicPo::from_concrete(&d_element(i)),
                );
                if !vd.is_zero() {
                    let (a, r) = express_component(&vd)?;
                    formal.add_term(a, j, &RatFunc::constant(Rat::int(lam)) * &r);
                }
                let vc = po_bracket_symbolic(&v2, &SymbolicPo::from_concrete(&c_element(j)));
                if !vc.is_zero() {
                    // [v2, c_j] = beta v_b^(l-1); subtract beta [v_b^(l-1), d_i]
                    let (b, beta) = express_in_v(&vc, -1)?;
                    let vb = v_basis(b as u32, -1);
                    let inner = bracket_with_d(&vb, i, -1)?;
                    for (&(a, u), c) in &inner.terms {
                        formal.add_term(
                            a,
                            u,
                            &(&RatFunc::constant(Rat::int(-lam)) * &beta) * c,
                        );
                    }
                }
            }
            if formal.is_zero() {
                return Err("expansion degenerated to the zero vector".into());
            }
            // Clear denominators for the xi check.
            let mut cleared = SymbolicPo::zero();
            let mut den = ParamPoly::one();
            for c in formal.terms.values() {
                let g = poly_gcd(&den, &c.den);
                den = (&den * &c.den).div_exact(&g);
            }
            for (&(a, j), coeff) in &formal.terms {
                let poly = &coeff.num * &den.div_exact(&coeff.den);
                let br = po_bracket_symbolic(
                    &v_basis(a as u32, 0),
                    &SymbolicPo::from_concrete(&c_element(j)),
                );
                cleared = cleared.add(&br.scale(&poly));
            }
            if !cleared.is_zero() {
                return Err("faithful expansion is not a kernel element".into());
            }
            // (c) displayed = x * derived + y * alpha_2 + z * alpha_3 over
            // Q(l): the two results agree modulo the already-killed chains
            // of V(l+3) and V(l-1).
            let a2 = displayed_hw_vectors()[0].act_f().act_f().act_f();
            let a3 = displayed_hw_vectors()[2].act_f();
            let keys: Vec<(u16, u16)> = alpha1_displayed.terms.keys().copied().collect();
            let get = |v: &TensorLc, key: &(u16, u16)| -> RatFunc {
                v.terms.get(key).cloned().unwrap_or_else(RatFunc::zero)
            };
            // Solve the 4x3 system by elimination over the function field:
            // build the matrix with columns (derived, a2, a3 | displayed).
            let mut rows: Vec<Vec<RatFunc>> = keys
                .iter()
                .map(|k| {
                    vec![
                        get(&formal, k),
                        get(&a2, k),
                        get(&a3, k),
                        get(&alpha1_displayed, k),
                    ]
                })
                .collect();
            // Gaussian elimination.
            let mut rank = 0usize;
            for col in 0..3 {
                let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
                let pr = match pivot {
                    None => continue,
                    Some(pr) => pr,
                };
                rows.swap(rank, pr);
                let inv = rows[rank][col].recip().unwrap();
                for j in col..4 {
                    rows[rank][j] = &rows[rank][j] * &inv;
                }
                for r in 0..rows.len() {
                    if r != rank && !rows[r][col].is_zero() {
                        let f = rows[r][col].clone();
                        for j in col..4 {
                            let sub = &rows[rank][j] * &f;
                            rows[r][j] = &rows[r][j] - &sub;
                        }
                    }
                }
                rank += 1;
            }
            let consistent = rows[rank..].iter().all(|r| r[3].is_zero());
            if consistent {
                Ok(
                    "displayed element is a kernel element; the faithful expansion agrees with \
                     it modulo the previously-killed V(l+3) and V(l-1) chains"
                        .into(),
                )
            } else {
                Err("displayed element is not in the span of the derivation outputs".into())
            }
        },
    );

    // alpha_2 = f^3 (hw V_(l+3)), alpha_3 = f (hw V_(l-1)); displayed forms.
    let alpha2_displayed = TensorLc::from_poly_coeffs(&[
        (4, 1, ParamPoly::one()),
        (3, 2, ParamPoly::int(3)),
        (2, 3, ParamPoly::int(3)),
        (1, 4, ParamPoly::one()),
    ]);
    let alpha3_displayed = TensorLc::from_poly_coeffs(&[
        (4, 1, ParamPoly::int(6)),
        (3, 2, &ParamPoly::int(10) - &l().scale(&Rat::int(4))),
        (2, 3, &lp(-1) * &lp(-4)),
        (1, 4, &l() * &lp(-1)),
    ]);
    run_check(
        &mut report,
        "appendix-b.alpha2-alpha3",
        "alpha_2 = v4^l (x) c1 + 3v3^l (x) c2 + 3v2^l (x) c3 + v1^l (x) c4",
        || {
            let a2 = displayed_hw_vectors()[0].act_f().act_f().act_f();
            if a2 != alpha2_displayed {
                return Err("f^3 of the V(l+3) vector differs from alpha_2".into());
            }
            let a3 = displayed_hw_vectors()[2].act_f();
            if a3 != alpha3_displayed {
                return Err("f of the V(l-1) vector differs from alpha_3".into());
            }
            Ok("alpha_2 and alpha_3 reproduced (the source's \"action of e\" \
                phrasing corresponds to lowering with f)"
                .into())
        },
    );

    // Minors of the 3x4 coordinate matrix.
    let columns: [(u16, u16); 4] = [(4, 1), (3, 2), (2, 3), (1, 4)];
    let to_row = |v: &TensorLc| -> Vec<ParamPoly> {
        columns
            .iter()
            .map(|key| {
                v.terms
                    .get(key)
                    .map(|c| {
                        assert!(c.den.is_one());
                        c.num.clone()
                    })
                    .unwrap_or_else(ParamPoly::zero)
            })
            .collect()
    };
    let matrix = vec![
        to_row(&alpha1_displayed),
        to_row(&alpha2_displayed),
        to_row(&alpha3_displayed),
    ];
    let mut minors = Vec::new();
    for drop_col in 0..4usize {
        let sub: Vec<Vec<ParamPoly>> = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != drop_col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        minors.push(det_poly(&sub));
    }
    let mut common_roots: Option<Vec<i64>> = None;
    run_check(
        &mut report,
        "appendix-b.minor-roots",
        "the common roots are only l = -1, -2, 5",
        || {
            for (i, m) in minors.iter().enumerate() {
                if m.is_zero() {
                    return Err(format!("minor {} is identically zero", i));
                }
            }
            let mut sets: Vec<Vec<i64>> = minors.iter().map(integer_roots).collect();
            let mut common = sets.remove(0);
            for s in sets {
                common.retain(|r| s.contains(r));
            }
            common.sort_unstable();
            let ok = common == vec![-2, -1, 5];
            common_roots = Some(common.clone());
            if ok {
                Ok("common integer roots {-1, -2, 5}".into())
            } else {
                Err(format!("common roots = {:?}", common))
            }
        },
    );

    // Rank spot checks at l = 5 (degenerate) and l = 6 (full), plus the
    // requested range.
    run_check(
        &mut report,
        "appendix-b.rank-at-samples",
        "rank drops exactly at the common roots",
        || {
            let eval_matrix = |lv: i64| -> Vec<Vec<Rat>> {
                let mut a = BTreeMap::new();
                a.insert(Sym::L, Rat::int(lv));
                matrix
                    .iter()
                    .map(|row| row.iter().map(|p| p.eval(&a).unwrap()).collect())
                    .collect()
            };
            let rank5 = solve_rat(&eval_matrix(5), None).map_err(|e| e.to_string())?.rank;
            if rank5 != 2 {
                return Err(format!("rank at l = 5 is {}", rank5));
            }
            for lv in l_range.clone() {
                let rank = solve_rat(&eval_matrix(lv), None)
                    .map_err(|e| e.to_string())?
                    .rank;
                if rank != 3 {
                    return Err(format!("rank at l = {} is {}", lv, rank));
                }
            }
            Ok(format!(
                "rank 2 at l = 5; rank 3 on {}..={}",
                l_range.start(),
                l_range.end()
            ))
        },
    );

    report.finalize();
    AppendixBOutcome {
        report,
        minor_common_roots: common_roots.unwrap_or_default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_bracket_expansions() {
        // d_1 = [c2,c1], d_2 = [c3,c1], d_3 = [c4,c1]+[c3,c2], d_4 = 2[c4,c2]
        assert_eq!(d_as_c_brackets(1), vec![(Rat::ONE, 2, 1)]);
        assert_eq!(d_as_c_brackets(2), vec![(Rat::ONE, 3, 1)]);
        assert_eq!(
            d_as_c_brackets(3),
            vec![(Rat::ONE, 3, 2), (Rat::ONE, 4, 1)]
        );
        assert_eq!(d_as_c_brackets(4), vec![(Rat::int(2), 4, 2)]);
        // sanity: expansion evaluates to the concrete d_i
        for i in 1..=5u16 {
            let mut acc = PoElement::zero();
            for (c, s, u) in d_as_c_brackets(i) {
                let br = crate::liealg::po::po_bracket(&c_element(s), &c_element(u));
                acc = acc.add(&br.scale(&c));
            }
            assert_eq!(acc, d_element(i), "d_{}", i);
        }
    }

    #[test]
    fn concrete_generators() {
        // c = (q^3/6, q^2 p/2, q p^2, p^3); d_1 = q^4/4
        assert_eq!(c_element(1), PoElement::monomial_rat(3, 0, Rat::new(1, 6)));
        assert_eq!(c_element(2), PoElement::monomial_rat(2, 1, Rat::new(1, 2)));
        assert_eq!(c_element(3), PoElement::monomial_rat(1, 2, Rat::ONE));
        assert_eq!(c_element(4), PoElement::monomial_rat(0, 3, Rat::ONE));
        assert_eq!(d_element(1), PoElement::monomial_rat(4, 0, Rat::new(1, 4)));
    }

    #[test]
    fn integer_roots_examples() {
        // (l-2)(l+3)
        let p = &lp(-2) * &lp(3);
        assert_eq!(integer_roots(&p), vec![-3, 2]);
        // l^2 (l - 5)
        let p = &(&l() * &l()) * &lp(-5);
        assert_eq!(integer_roots(&p), vec![0, 5]);
    }

    #[test]
    fn full_appendix_suite() {
        let outcome = appendix_b_verify(6..=12);
        assert!(outcome.report.passed(), "{}", outcome.report.to_text());
        assert_eq!(outcome.minor_common_roots, vec![-2, -1, 5]);
    }
}
