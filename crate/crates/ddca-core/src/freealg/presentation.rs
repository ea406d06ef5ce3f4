//! Graded quotient dimensions of free Lie algebra presentations with
//! degree-1 generators.
//!
//! The ideal generated by homogeneous relations S is computed degree by
//! degree via I_d = [L_1, I_(d-1)] + S_d, which is the full ideal because
//! the algebra is generated in degree 1. Ranks are taken in Lyndon
//! coordinates with exact rational elimination.

use super::lyndon::{tensor_add, Letter, LyndonBasis, TensorVec};
use crate::arith::Rat;
use crate::sl2rep::{Family, Sl2Vector, WSym, WordKind};
use std::collections::BTreeMap;

/// A presentation of a graded Lie algebra with degree-1 generators: the
/// generator count and the homogeneous relation vectors in tensor
/// coordinates, keyed by degree.
#[derive(Clone)]
pub struct Presentation {
    pub generator_count: u8,
    pub relations: Vec<(usize, TensorVec)>,
    pub label: String,
}

/// Per-degree dimensions of the quotient, with expectations and verdicts.
#[derive(Clone, Debug)]
pub struct DimReport {
    pub label: String,
    pub dims: Vec<(usize, usize)>,
}

impl DimReport {
    pub fn dims_only(&self) -> Vec<usize> {
        self.dims.iter().map(|&(_, d)| d).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dimension\n");
        for (d, dim) in &self.dims {
            out.push_str(&format!("{},{}\n", d, dim));
        }
        out
    }
}

/// Converts an sl2rep word vector over a single generator family into
/// tensor coordinates: each family symbol maps to a letter (idx - 1),
/// two-symbol wedge/tensor words map to bracket expansions, and nested
/// module symbols (the d's and g's) are expanded recursively.
pub struct LieWordContext {
    /// Expansion of each symbol into the tensor algebra over the letters.
    pub symbol_expansion: BTreeMap<WSym, TensorVec>,
}

impl LieWordContext {
    /// Context for the type-A positive part: letters are c_1..c_4 and the
    /// d_i expand through d_1 = [c_2, c_1].
    pub fn type_a() -> LieWordContext {
        let mut ctx = LieWordContext {
            symbol_expansion: BTreeMap::new(),
        };
        for i in 1..=4u16 {
            let mut v = TensorVec::new();
            tensor_add(&mut v, vec![(i - 1) as Letter], Rat::ONE);
            ctx.symbol_expansion.insert(WSym::new(Family::C, i), v);
        }
        // d_1 = [c_2, c_1]; d_{i+1} = f d_i with f acting by the Leibniz
        // rule through the c-letters.
        let c = |i: u16| WSym::new(Family::C, i);
        let d1 = bracket_of(&ctx.expand_sym(c(2)), &ctx.expand_sym(c(1)));
        ctx.symbol_expansion.insert(WSym::new(Family::DA, 1), d1);
        for i in 1..=4u16 {
            let prev = ctx.symbol_expansion[&WSym::new(Family::DA, i)].clone();
            let next = ctx.f_letterwise(&prev, Family::C);
            ctx.symbol_expansion.insert(WSym::new(Family::DA, i + 1), next);
        }
        ctx
    }

    /// Context for the even part: letters are d_1..d_5 and the g_i expand
    /// through g_1 = [d_2, d_1].
    pub fn type_b() -> LieWordContext {
        let mut ctx = LieWordContext {
            symbol_expansion: BTreeMap::new(),
        };
        for i in 1..=5u16 {
            let mut v = TensorVec::new();
            tensor_add(&mut v, vec![(i - 1) as Letter], Rat::ONE);
            ctx.symbol_expansion.insert(WSym::new(Family::DB, i), v);
        }
        let d = |i: u16| WSym::new(Family::DB, i);
        let g1 = bracket_of(&ctx.expand_sym(d(2)), &ctx.expand_sym(d(1)));
        ctx.symbol_expansion.insert(WSym::new(Family::G, 1), g1);
        for i in 1..=6u16 {
            let prev = ctx.symbol_expansion[&WSym::new(Family::G, i)].clone();
            let next = ctx.f_letterwise(&prev, Family::DB);
            ctx.symbol_expansion.insert(WSym::new(Family::G, i + 1), next);
        }
        ctx
    }

    fn expand_sym(&self, s: WSym) -> TensorVec {
        self.symbol_expansion
            .get(&s)
            .unwrap_or_else(|| panic!("no expansion for {:?}", s))
            .clone()
    }

    /// Applies f to a tensor vector over the letter family: the letter
    /// l = idx-1 maps to idx+1's letter when it exists, else drops.
    fn f_letterwise(&self, v: &TensorVec, letters: Family) -> TensorVec {
        let top = letters.sl2_type(); // letters run 1..=top+1
        let mut out = TensorVec::new();
        for (w, c) in v {
            for (pos, &l) in w.iter().enumerate() {
                let idx = l as u16 + 1;
                if idx <= top {
                    let mut nw = w.clone();
                    nw[pos] = (idx) as Letter; // idx+1 - 1
                    tensor_add(&mut out, nw, c.clone());
                }
            }
        }
        out
    }

    /// Expands an Sl2Vector whose words are pairs (wedge or tensor) of
    /// symbols into Lie elements of the tensor algebra.
    pub fn expand_vector(&self, v: &Sl2Vector) -> TensorVec {
        let mut out = TensorVec::new();
        for (word, coeff) in &v.terms {
            let c = coeff
                .as_constant()
                .expect("presentation relations have constant coefficients");
            let expanded = match word.kind {
                WordKind::Wedge | WordKind::Tensor => {
                    assert_eq!(word.syms.len(), 2, "relation words are pairs");
                    bracket_of(
                        &self.expand_sym(word.syms[0]),
                        &self.expand_sym(word.syms[1]),
                    )
                }
                WordKind::Symmetric => panic!("symmetric words are not Lie elements"),
            };
            for (w, ec) in &expanded {
                tensor_add(&mut out, w.clone(), &c * ec);
            }
        }
        out
    }
}

/// Bracket in the tensor algebra: [a, b] = ab - ba.
pub fn bracket_of(a: &TensorVec, b: &TensorVec) -> TensorVec {
    let mut out = TensorVec::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut ab = wa.clone();
            ab.extend_from_slice(wb);
            tensor_add(&mut out, ab, ca * cb);
            let mut ba = wb.clone();
            ba.extend_from_slice(wa);
            tensor_add(&mut out, ba, -&(ca * cb));
        }
    }
    out
}

/// Sparse row-echelon accumulator over Lyndon coordinates.
struct RankAccumulator {
    /// pivot column -> reduced row (sparse, leading coefficient 1).
    rows: BTreeMap<usize, Vec<(usize, Rat)>>,
}

impl RankAccumulator {
    fn new() -> RankAccumulator {
        RankAccumulator {
            rows: BTreeMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the accumulator; inserts if independent.
    /// Returns true if the row was new.
    fn insert(&mut self, mut row: Vec<(usize, Rat)>) -> bool {
        loop {
            row.retain(|(_, c)| !c.is_zero());
            if row.is_empty() {
                return false;
            }
            let (lead, lc) = row[0].clone();
            match self.rows.get(&lead) {
                None => {
                    let inv = lc.recip();
                    for (_, c) in row.iter_mut() {
                        *c = &*c * &inv;
                    }
                    self.rows.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    // row -= lc * pivot
                    let mut merged: BTreeMap<usize, Rat> = row.into_iter().collect();
                    for (j, pc) in pivot {
                        let sub = &lc * pc;
                        let e = merged.entry(*j).or_insert(Rat::ZERO);
                        *e = &*e - &sub;
                    }
                    row = merged
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect();
                }
            }
        }
    }

    /// Full reduction of a row without insertion (membership residual).
    fn reduce(&self, row: Vec<(usize, Rat)>) -> Vec<(usize, Rat)> {
        let mut row: BTreeMap<usize, Rat> = row.into_iter().collect();
        loop {
            row.retain(|_, c| !c.is_zero());
            let lead = match row.keys().next() {
                None => return Vec::new(),
                Some(&l) => l,
            };
            match self.rows.get(&lead) {
                None => return row.into_iter().collect(),
                Some(pivot) => {
                    let lc = row[&lead].clone();
                    for (j, pc) in pivot {
                        let sub = &lc * pc;
                        let e = row.entry(*j).or_insert(Rat::ZERO);
                        *e = &*e - &sub;
                    }
                }
            }
        }
    }
}

/// Computes quotient dimensions per degree 1..=max_degree, together with
/// the ideal bases used (the ideal component dimensions are
/// witt(d) - quotient(d)).
pub fn presentation_dims(pres: &Presentation, max_degree: usize) -> DimReport {
    let g = pres.generator_count;
    let mut dims = Vec::new();
    // I_d in Lyndon coordinates; carried as tensor vectors for bracketing.
    let mut ideal_tensor: Vec<TensorVec> = Vec::new();
    let mut prev_ideal: Vec<TensorVec> = Vec::new();
    for d in 1..=max_degree {
        let basis = LyndonBasis::new(g, d);
        let mut acc = RankAccumulator::new();
        let mut next_ideal: Vec<TensorVec> = Vec::new();
        // [L_1, I_(d-1)]
        for v in &prev_ideal {
            for letter in 0..g {
                let mut lv = TensorVec::new();
                tensor_add(&mut lv, vec![letter], Rat::ONE);
                let br = bracket_of(&lv, v);
                if br.is_empty() {
                    continue;
                }
                if acc.insert(basis.coordinates(&br)) {
                    next_ideal.push(br);
                }
            }
        }
        // S_d
        for (deg, rel) in &pres.relations {
            if *deg == d && !rel.is_empty() {
                if acc.insert(basis.coordinates(rel)) {
                    next_ideal.push(rel.clone());
                }
            }
        }
        let quotient = basis.dimension() - acc.rank();
        dims.push((d, quotient));
        prev_ideal = next_ideal.clone();
        ideal_tensor.extend(next_ideal);
    }
    DimReport {
        label: pres.label.clone(),
        dims,
    }
}

/// Dimension of the span of relation vectors inside the degree-d component
/// (the ideal component from given relation families).
pub fn lie_ideal_component_dim(
    generator_count: u8,
    relations: &[(usize, TensorVec)],
    d: usize,
) -> usize {
    let pres = Presentation {
        generator_count,
        relations: relations.to_vec(),
        label: String::new(),
    };
    let report = presentation_dims(&pres, d);
    let witt = super::lyndon::witt_dimension(generator_count as u64, d as u64) as usize;
    witt - report.dims[d - 1].1
}

/// The type-A positive-part presentation: relation families on 4 degree-1
/// generators, full f-orbits of the named modules.
pub fn positive_part_presentation_a(drop: Option<&str>) -> Presentation {
    let ctx = LieWordContext::type_a();
    let catalog = crate::sl2rep::relation_catalog(crate::sl2rep::CatalogKind::PoA);
    let mut relations = Vec::new();
    for module in catalog {
        if Some(module.name) == drop {
            continue;
        }
        let degree = match module.name {
            "phi1" => 2,
            "psi4" | "psi1" => 3,
            "chi1" => 4,
            _ => unreachable!(),
        };
        for member in module.members() {
            let v = ctx.expand_vector(&member);
            if !v.is_empty() {
                relations.push((degree, v));
            }
        }
    }
    Presentation {
        generator_count: 4,
        relations,
        label: format!(
            "n-presentation(4 gens{})",
            drop.map(|d| format!(", drop {}", d)).unwrap_or_default()
        ),
    }
}

/// The even-part presentation: relation families on 5 degree-1 generators
/// (Lie degree d corresponds to ambient degree 2d).
pub fn positive_part_presentation_b(drop: Option<&str>) -> Presentation {
    let ctx = LieWordContext::type_b();
    let catalog = crate::sl2rep::relation_catalog(crate::sl2rep::CatalogKind::PoB);
    let mut relations = Vec::new();
    for module in catalog {
        if Some(module.name) == drop {
            continue;
        }
        let degree = match module.name {
            "phi1'" => 2,
            "psi5'" | "psi2'" => 3,
            _ => unreachable!(),
        };
        for member in module.members() {
            let v = ctx.expand_vector(&member);
            if !v.is_empty() {
                relations.push((degree, v));
            }
        }
    }
    Presentation {
        generator_count: 5,
        relations,
        label: format!(
            "n+-presentation(5 gens{})",
            drop.map(|d| format!(", drop {}", d)).unwrap_or_default()
        ),
    }
}

/// Independent free-Lie dimension oracle: the rank of the span of all
/// left-normed brackets built recursively in the tensor algebra.
pub fn free_lie_dim_by_rank(g: u8, d: usize) -> usize {
    // L_1 = letters; L_j = span of [L_(j-1), L_1].
    let mut prev: Vec<TensorVec> = (0..g)
        .map(|l| {
            let mut v = TensorVec::new();
            tensor_add(&mut v, vec![l], Rat::ONE);
            v
        })
        .collect();
    if d == 1 {
        return g as usize;
    }
    for _ in 2..=d {
        let mut next = Vec::new();
        for v in &prev {
            for l in 0..g {
                let mut lv = TensorVec::new();
                tensor_add(&mut lv, vec![l], Rat::ONE);
                next.push(bracket_of(v, &lv));
            }
        }
        prev = next;
    }
    // Rank over words.
    let mut index: BTreeMap<Vec<Letter>, usize> = BTreeMap::new();
    let mut rows = Vec::new();
    for v in &prev {
        let mut row = Vec::new();
        for (w, c) in v {
            let next_idx = index.len();
            let idx = *index.entry(w.clone()).or_insert(next_idx);
            row.push((idx, c.clone()));
        }
        row.sort_by_key(|(i, _)| *i);
        rows.push(row);
    }
    let mut acc = RankAccumulator::new();
    for row in rows {
        acc.insert(row);
    }
    acc.rank()
}

/// Residual of a tensor vector against the span of the ideal's degree-d
/// component; empty when the vector lies in the ideal.
pub fn ideal_membership_residual(
    pres: &Presentation,
    d: usize,
    v: &TensorVec,
) -> Vec<(usize, Rat)> {
    let basis = LyndonBasis::new(pres.generator_count, d);
    let mut acc = RankAccumulator::new();
    let mut prev_ideal: Vec<TensorVec> = Vec::new();
    for deg in 1..=d {
        let degree_basis = LyndonBasis::new(pres.generator_count, deg);
        let mut next = Vec::new();
        for w in &prev_ideal {
            for l in 0..pres.generator_count {
                let mut lv = TensorVec::new();
                tensor_add(&mut lv, vec![l], Rat::ONE);
                let br = bracket_of(&lv, w);
                if br.is_empty() {
                    continue;
                }
                if deg == d {
                    acc.insert(basis.coordinates(&br));
                }
                next.push(br);
            }
        }
        for (rd, rel) in &pres.relations {
            if *rd == deg && !rel.is_empty() {
                if deg == d {
                    acc.insert(basis.coordinates(rel));
                }
                next.push(rel.clone());
            }
        }
        let _ = degree_basis;
        prev_ideal = next;
    }
    acc.reduce(basis.coordinates(v))
}
