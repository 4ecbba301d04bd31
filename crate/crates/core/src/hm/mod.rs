//! Logical characterization of bisimulations.
//!
//! * [`enumerate_fkz`] lists diamond-only formulas (constants, propositions,
//!   `∧`, constant implications and `⟨ϱ⟩` over atomic actions) up to a depth.
//! * [`logical_distance`] computes, for every pair of states, the infimum of
//!   `φ(x) ⟺ φ(x')` over those formulas. The greatest bisimulation always
//!   lies below it, and over finite models with a continuous t-norm the two
//!   coincide once enough formulas are considered.
//! * [`hm_check`] compares the two.
//! * [`invariance_check`] and [`program_zigzag_check`] test that a
//!   bisimulation bounds the agreement of arbitrary formulas and programs.

mod invariance;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::bisim::{greatest_bisimulation, BisimError, SolverConfig, SolverOutcome};
use crate::lattice::{Lattice, LatticeError, LatticeValue};
use crate::model::{align_signatures, KripkeModel, ModelError};
use crate::relation::{Domain, FuzzyRelation, RelationError};
use crate::syntax::{Formula, Program};

pub use invariance::{
    gating_conditions, invariance_check, program_zigzag_check, Gating, GatingCondition, InvarianceError,
    InvarianceReport, InvarianceViolation, TraceStep, ZigzagReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HmError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Bisim(#[from] BisimError),
    #[error(
        "`{0}` has a t-norm that does not distribute over meets, so formula \
         agreement need not characterize the greatest bisimulation"
    )]
    NotContinuous(String),
}

/// How far and with which constants formulas are enumerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_depth: usize,
    pub constant_pool: Vec<LatticeValue>,
    /// Stop adding formulas once this many semantically distinct ones have
    /// been found. The distance stays an upper bound on the exact one.
    pub max_formulas: Option<usize>,
}

impl EnumerationBudget {
    /// The default pool for a pair of models (see [`default_pool`]).
    pub fn for_models(m: &KripkeModel, n: &KripkeModel, max_depth: usize) -> Self {
        EnumerationBudget { max_depth, constant_pool: default_pool(m, n, 2), max_formulas: Some(500_000) }
    }
}

/// Constants for the formula enumeration: the whole carrier for finite
/// lattices; otherwise `{0, 1}` and every value occurring in either model,
/// closed `rounds` times under `→`, `⟺`, `∧` and `∨`.
pub fn default_pool(m: &KripkeModel, n: &KripkeModel, rounds: usize) -> Vec<LatticeValue> {
    let l = m.lattice();
    if let Some(all) = l.elements() {
        return all;
    }
    let mut pool = vec![l.zero(), l.one()];
    pool.extend(m.values());
    pool.extend(n.values());
    close_pool(l, pool, rounds)
}

/// `values` closed `rounds` times under `→`, `⟺`, `∧`, `∨`, deduplicated
/// and sorted ascending (unit interval) or in carrier order (finite).
pub fn close_pool(l: &Lattice, values: Vec<LatticeValue>, rounds: usize) -> Vec<LatticeValue> {
    let mut set: HashSet<LatticeValue> = values.into_iter().collect();
    for _ in 0..rounds {
        let cur: Vec<LatticeValue> = set.iter().cloned().collect();
        for a in &cur {
            for b in &cur {
                for v in [l.residuum(a, b), l.biresiduum(a, b), l.meet(a, b), l.join(a, b)].into_iter().flatten() {
                    set.insert(v);
                }
            }
        }
    }
    let mut out: Vec<LatticeValue> = set.into_iter().collect();
    sort_values(&mut out);
    out
}

fn sort_values(values: &mut [LatticeValue]) {
    values.sort_by(|a, b| match (a, b) {
        (LatticeValue::Unit(x), LatticeValue::Unit(y)) => x.cmp(y),
        (LatticeValue::Element { index: i, .. }, LatticeValue::Element { index: j, .. }) => i.cmp(j),
        _ => std::cmp::Ordering::Equal,
    });
}

/// Every diamond-only formula over the signature, depth by depth; within a
/// depth: conjunctions, then `a → φ`, then `φ → a`, then `⟨ϱ⟩φ`. Each
/// formula appears exactly once. Levels are materialized one at a time.
pub fn enumerate_fkz(
    budget: &EnumerationBudget,
    props: &[String],
    actions: &[String],
) -> impl Iterator<Item = Formula> {
    FkzStream {
        pool: budget.constant_pool.clone(),
        props: props.to_vec(),
        actions: actions.to_vec(),
        max_depth: budget.max_depth,
        all: Vec::new(),
        level_start: 0,
        next_depth: 0,
        cursor: 0,
    }
}

struct FkzStream {
    pool: Vec<LatticeValue>,
    props: Vec<String>,
    actions: Vec<String>,
    max_depth: usize,
    /// Every formula produced so far; the last level starts at `level_start`.
    all: Vec<Formula>,
    level_start: usize,
    next_depth: usize,
    cursor: usize,
}

impl FkzStream {
    fn grow(&mut self) -> bool {
        if self.next_depth > self.max_depth {
            return false;
        }
        let mut level = Vec::new();
        if self.next_depth == 0 {
            level.extend(self.pool.iter().cloned().map(Formula::Const));
            level.extend(self.props.iter().cloned().map(Formula::Prop));
        } else {
            let prev = &self.all;
            let start = self.level_start;
            for (i, a) in prev.iter().enumerate() {
                for (j, b) in prev.iter().enumerate() {
                    if i >= start || j >= start {
                        level.push(Formula::and(a.clone(), b.clone()));
                    }
                }
            }
            let frontier = &prev[start..];
            for c in &self.pool {
                for f in frontier {
                    level.push(Formula::from_const(c.clone(), f.clone()));
                }
            }
            for f in frontier {
                for c in &self.pool {
                    level.push(Formula::to_const(f.clone(), c.clone()));
                }
            }
            for a in &self.actions {
                for f in frontier {
                    level.push(Formula::diamond(Program::atomic(a.clone()), f.clone()));
                }
            }
        }
        self.level_start = self.all.len();
        self.all.extend(level);
        self.next_depth += 1;
        true
    }
}

impl Iterator for FkzStream {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        while self.cursor >= self.all.len() {
            if !self.grow() {
                return None;
            }
        }
        self.cursor += 1;
        Some(self.all[self.cursor - 1].clone())
    }
}

/// Interned lattice values with memoized operations.
struct Interner {
    lattice: Lattice,
    values: Vec<LatticeValue>,
    ids: HashMap<LatticeValue, u32>,
    cache: HashMap<(u8, u32, u32), u32>,
}

const OP_MEET: u8 = 0;
const OP_JOIN: u8 = 1;
const OP_TNORM: u8 = 2;
const OP_RESIDUUM: u8 = 3;
const OP_BIRESIDUUM: u8 = 4;

impl Interner {
    fn new(lattice: &Lattice) -> Self {
        Interner { lattice: lattice.clone(), values: Vec::new(), ids: HashMap::new(), cache: HashMap::new() }
    }

    fn id(&mut self, v: &LatticeValue) -> u32 {
        if let Some(&i) = self.ids.get(v) {
            return i;
        }
        let i = self.values.len() as u32;
        self.values.push(v.clone());
        self.ids.insert(v.clone(), i);
        i
    }

    fn op(&mut self, op: u8, a: u32, b: u32) -> Result<u32, LatticeError> {
        if let Some(&r) = self.cache.get(&(op, a, b)) {
            return Ok(r);
        }
        let (x, y) = (&self.values[a as usize], &self.values[b as usize]);
        let l = &self.lattice;
        let v = match op {
            OP_MEET => l.meet(x, y)?,
            OP_JOIN => l.join(x, y)?,
            OP_TNORM => l.tnorm(x, y)?,
            OP_RESIDUUM => l.residuum(x, y)?,
            _ => l.biresiduum(x, y)?,
        };
        let r = self.id(&v);
        self.cache.insert((op, a, b), r);
        Ok(r)
    }
}

/// How a distinct value vector was first obtained.
#[derive(Debug, Clone)]
enum Recipe {
    Const(LatticeValue),
    Prop(String),
    And(usize, usize),
    FromConst(LatticeValue, usize),
    ToConst(usize, LatticeValue),
    Diamond(String, usize),
}

/// Distances obtained with the formulas up to one depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceLevel {
    pub depth: usize,
    pub distance: FuzzyRelation,
    /// Per pair, row-major: a formula attaining the current value, or
    /// `None` while the value is still 1 from the empty infimum.
    pub witnesses: Vec<Option<Formula>>,
    /// Semantically distinct formulas considered so far.
    pub distinct_formulas: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    pub levels: Vec<DistanceLevel>,
    /// The formula budget ran out before the last depth was complete.
    pub truncated: bool,
}

impl DistanceMatrix {
    /// The distance at the deepest level computed.
    pub fn last(&self) -> &DistanceLevel {
        self.levels.last().expect("depth 0 is always computed")
    }
}

/// A successor as (joint state index, interned degree).
type JointEdge = (usize, u32);

/// Pointwise infimum of `φ(x) ⟺ φ(x')` over the enumerated formulas, for
/// every depth up to the budget.
///
/// Formulas are identified by their value vector over both models, since
/// any formula built from parts with equal values has equal values itself;
/// this leaves the infimum unchanged while keeping the search finite in
/// practice. Conjunctions at the last depth are skipped: by
/// `(x ⟺ x') ∧ (y ⟺ y') ≤ (x ∧ y) ⟺ (x' ∧ y')` they cannot lower the
/// infimum below what their parts already give.
pub fn logical_distance(
    m: &KripkeModel,
    n: &KripkeModel,
    budget: &EnumerationBudget,
) -> Result<DistanceMatrix, HmError> {
    let (m, n) = align_signatures(m, n)?;
    let l = m.lattice().clone();
    if !l.is_continuous() {
        return Err(HmError::NotContinuous(l.name()));
    }
    for c in &budget.constant_pool {
        l.check(c)?;
    }
    let (nl, nr) = (m.len(), n.len());
    let width = nl + nr;
    let mut interner = Interner::new(&l);
    let zero = interner.id(&l.zero());
    let one = interner.id(&l.one());

    // Joint successor lists: left states first, right states offset by nl.
    let mut actions: Vec<(String, Vec<Vec<JointEdge>>)> = Vec::new();
    for (a, rm) in m.actions() {
        let rn = &n.actions()[a];
        let mut succ = vec![Vec::new(); width];
        for (x, y, v) in rm.nonzero() {
            succ[x].push((y, interner.id(v)));
        }
        for (x, y, v) in rn.nonzero() {
            succ[nl + x].push((nl + y, interner.id(v)));
        }
        actions.push((a.clone(), succ));
    }

    let mut vectors: Vec<Vec<u32>> = Vec::new();
    let mut recipes: Vec<Recipe> = Vec::new();
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut dist = vec![one; nl * nr];
    let mut witness: Vec<Option<usize>> = vec![None; nl * nr];
    let mut levels = Vec::new();
    let mut truncated = false;
    let limit = budget.max_formulas.unwrap_or(usize::MAX);

    let pool: Vec<(LatticeValue, u32)> = budget.constant_pool.iter().map(|c| (c.clone(), interner.id(c))).collect();

    // Adds a vector if new and folds it into the distance.
    let mut add = |vec: Vec<u32>,
                   recipe: Recipe,
                   interner: &mut Interner,
                   vectors: &mut Vec<Vec<u32>>,
                   recipes: &mut Vec<Recipe>,
                   dist: &mut Vec<u32>,
                   witness: &mut Vec<Option<usize>>|
     -> Result<bool, LatticeError> {
        if seen.contains_key(&vec) {
            return Ok(true);
        }
        if vectors.len() >= limit {
            return Ok(false);
        }
        let idx = vectors.len();
        for x in 0..nl {
            for xp in 0..nr {
                let b = interner.op(OP_BIRESIDUUM, vec[x], vec[nl + xp])?;
                let cell = &mut dist[x * nr + xp];
                let lowered = interner.op(OP_MEET, *cell, b)?;
                if lowered != *cell {
                    *cell = lowered;
                    witness[x * nr + xp] = Some(idx);
                }
            }
        }
        seen.insert(vec.clone(), idx);
        vectors.push(vec);
        recipes.push(recipe);
        Ok(true)
    };

    // Depth 0.
    for (c, id) in &pool {
        if !add(
            vec![*id; width],
            Recipe::Const(c.clone()),
            &mut interner,
            &mut vectors,
            &mut recipes,
            &mut dist,
            &mut witness,
        )? {
            truncated = true;
        }
    }
    for (p, pm) in m.props() {
        let pn = &n.props()[p];
        let vec: Vec<u32> = pm.values().iter().chain(pn.values()).map(|v| interner.id(v)).collect();
        if !add(vec, Recipe::Prop(p.clone()), &mut interner, &mut vectors, &mut recipes, &mut dist, &mut witness)? {
            truncated = true;
        }
    }
    let snapshot = |depth: usize,
                    dist: &[u32],
                    witness: &[Option<usize>],
                    interner: &Interner,
                    recipes: &[Recipe],
                    count: usize|
     -> Result<DistanceLevel, HmError> {
        let rel = FuzzyRelation::from_fn(&l, m.domain(), n.domain(), |x, xp| {
            Ok(interner.values[dist[x * nr + xp] as usize].clone())
        })?;
        Ok(DistanceLevel {
            depth,
            distance: rel,
            witnesses: witness.iter().map(|w| w.map(|i| rebuild(recipes, i))).collect(),
            distinct_formulas: count,
        })
    };
    levels.push(snapshot(0, &dist, &witness, &interner, &recipes, vectors.len())?);

    let mut frontier_start = 0;
    for depth in 1..=budget.max_depth {
        if truncated {
            break;
        }
        let end = vectors.len();
        let last = depth == budget.max_depth;
        let mut full = false;
        'gen: {
            if !last {
                for j in frontier_start..end {
                    for i in 0..=j {
                        let vec = (0..width)
                            .map(|k| interner.op(OP_MEET, vectors[i][k], vectors[j][k]))
                            .collect::<Result<Vec<_>, _>>()?;
                        if !add(
                            vec,
                            Recipe::And(i, j),
                            &mut interner,
                            &mut vectors,
                            &mut recipes,
                            &mut dist,
                            &mut witness,
                        )? {
                            full = true;
                            break 'gen;
                        }
                    }
                }
            }
            for (c, cid) in &pool {
                for j in frontier_start..end {
                    let vec = (0..width)
                        .map(|k| interner.op(OP_RESIDUUM, *cid, vectors[j][k]))
                        .collect::<Result<Vec<_>, _>>()?;
                    if !add(
                        vec,
                        Recipe::FromConst(c.clone(), j),
                        &mut interner,
                        &mut vectors,
                        &mut recipes,
                        &mut dist,
                        &mut witness,
                    )? {
                        full = true;
                        break 'gen;
                    }
                }
            }
            for j in frontier_start..end {
                for (c, cid) in &pool {
                    let vec = (0..width)
                        .map(|k| interner.op(OP_RESIDUUM, vectors[j][k], *cid))
                        .collect::<Result<Vec<_>, _>>()?;
                    if !add(
                        vec,
                        Recipe::ToConst(j, c.clone()),
                        &mut interner,
                        &mut vectors,
                        &mut recipes,
                        &mut dist,
                        &mut witness,
                    )? {
                        full = true;
                        break 'gen;
                    }
                }
            }
            for (a, succ) in &actions {
                for j in frontier_start..end {
                    let mut vec = Vec::with_capacity(width);
                    for out in succ.iter() {
                        let mut acc = zero;
                        for &(y, w) in out {
                            let t = interner.op(OP_TNORM, w, vectors[j][y])?;
                            acc = interner.op(OP_JOIN, acc, t)?;
                        }
                        vec.push(acc);
                    }
                    if !add(
                        vec,
                        Recipe::Diamond(a.clone(), j),
                        &mut interner,
                        &mut vectors,
                        &mut recipes,
                        &mut dist,
                        &mut witness,
                    )? {
                        full = true;
                        break 'gen;
                    }
                }
            }
        }
        truncated = full;
        frontier_start = end;
        levels.push(snapshot(depth, &dist, &witness, &interner, &recipes, vectors.len())?);
    }
    Ok(DistanceMatrix { levels, truncated })
}

fn rebuild(recipes: &[Recipe], i: usize) -> Formula {
    match &recipes[i] {
        Recipe::Const(c) => Formula::Const(c.clone()),
        Recipe::Prop(p) => Formula::Prop(p.clone()),
        Recipe::And(a, b) => Formula::and(rebuild(recipes, *a), rebuild(recipes, *b)),
        Recipe::FromConst(c, a) => Formula::from_const(c.clone(), rebuild(recipes, *a)),
        Recipe::ToConst(a, c) => Formula::to_const(rebuild(recipes, *a), c.clone()),
        Recipe::Diamond(r, a) => Formula::diamond(Program::atomic(r.clone()), rebuild(recipes, *a)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub left: String,
    pub right: String,
    pub distance: LatticeValue,
    pub witness: Option<Formula>,
    pub solver: LatticeValue,
    /// Numeric distance between the two values (discrete on finite carriers).
    pub gap: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HmReport {
    pub solver: SolverOutcome,
    pub distance: DistanceMatrix,
    /// Depths at which some pair has the solver's value above the distance.
    pub unsound_depths: Vec<usize>,
    pub pairs: Vec<PairReport>,
    /// The distance at the last depth equals the solver's relation (within
    /// the solver's error bound when it is not exact).
    pub closed: bool,
}

impl HmReport {
    pub fn sound(&self) -> bool {
        self.unsound_depths.is_empty()
    }
}

/// Compares the greatest bisimulation with the logical distance at every
/// depth of the budget.
pub fn hm_check(
    m: &KripkeModel,
    n: &KripkeModel,
    budget: &EnumerationBudget,
    cfg: &SolverConfig,
) -> Result<HmReport, HmError> {
    let solver = greatest_bisimulation(m, n, cfg)?;
    let distance = logical_distance(m, n, budget)?;
    let l = m.lattice();
    let z = &solver.relation;
    let mut unsound_depths = Vec::new();
    for level in &distance.levels {
        if !z.leq(&level.distance)? {
            unsound_depths.push(level.depth);
        }
    }
    let last = distance.last();
    let (rows, cols): (Arc<Domain>, Arc<Domain>) = (z.rows().clone(), z.cols().clone());
    let mut pairs = Vec::new();
    let allowance = if solver.exact { BigRational::zero() } else { solver.error_bound.clone() };
    let mut closed = true;
    for x in 0..rows.len() {
        for xp in 0..cols.len() {
            let d = last.distance.get(x, xp);
            let s = z.get(x, xp);
            let gap = l.distance(d, s)?;
            if gap > allowance {
                closed = false;
            }
            pairs.push(PairReport {
                left: rows.name(x).to_string(),
                right: cols.name(xp).to_string(),
                distance: d.clone(),
                witness: last.witnesses[x * cols.len() + xp].clone(),
                solver: s.clone(),
                gap,
            });
        }
    }
    Ok(HmReport { solver, distance, unsound_depths, pairs, closed })
}

/// Propositions and actions of both models, sorted.
pub fn joint_signature(m: &KripkeModel, n: &KripkeModel) -> (Vec<String>, Vec<String>) {
    let (mp, ma) = m.signature();
    let (np, na) = n.signature();
    let props: BTreeSet<String> = mp.union(&np).cloned().collect();
    let actions: BTreeSet<String> = ma.union(&na).cloned().collect();
    (props.into_iter().collect(), actions.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    const M: &str = r#"{"states":["u","v","w"],"props":{"p":{"v":"1/2","w":"4/5"}},
        "actions":{"r":[["u","v","3/5"],["u","w","1"]]}}"#;
    const MP: &str = r#"{"states":["u'","v'","w'"],"props":{"p":{"v'":"1/2","w'":"4/5"}},
        "actions":{"r":[["u'","v'","1"],["u'","w'","4/5"]]}}"#;

    fn models(l: &Lattice) -> (KripkeModel, KripkeModel) {
        (KripkeModel::from_json(M, Some(l), None).unwrap(), KripkeModel::from_json(MP, Some(l), None).unwrap())
    }

    #[test]
    fn depth_zero_and_one() {
        let l = Lattice::godel();
        let budget = EnumerationBudget { max_depth: 0, constant_pool: vec![l.zero(), l.one()], max_formulas: None };
        let props = vec!["p".to_string()];
        let actions = vec!["r".to_string()];
        let d0: Vec<String> = enumerate_fkz(&budget, &props, &actions).map(|f| f.to_text(&l)).collect();
        assert_eq!(d0, ["0", "1", "p"]);
        let budget = EnumerationBudget { max_depth: 1, ..budget };
        let d1: Vec<String> = enumerate_fkz(&budget, &props, &actions).map(|f| f.to_text(&l)).collect();
        for expected in ["<r>p", "p /\\ p", "1 -> p", "p -> 0"] {
            assert!(d1.iter().any(|f| f == expected), "{expected}");
        }
        // 3 at depth 0; 9 conjunctions, 6 + 6 constant implications, 3 diamonds.
        assert_eq!(d1.len(), 3 + 9 + 6 + 6 + 3);
    }

    #[test]
    fn example_distance_with_witness() {
        let l = Lattice::godel();
        let (m, n) = models(&l);
        let budget = EnumerationBudget::for_models(&m, &n, 2);
        let d = logical_distance(&m, &n, &budget).unwrap();
        let last = d.last();
        assert_eq!(l.format_value(last.distance.get_named("u", "u'").unwrap()), "3/5");
        assert!(l.is_zero(d.levels[0].distance.get_named("v", "u'").unwrap()));
        let w = last.witnesses[0].clone().unwrap();
        let vm = m.eval_formula_at(&w, "u").unwrap();
        let vn = n.eval_formula_at(&w, "u'").unwrap();
        assert_eq!(l.format_value(&l.biresiduum(&vm, &vn).unwrap()), "3/5");
        // The witness from the documented analysis gives the same value.
        let phi = parse_formula("<r>(p -> 0.5)", &l).unwrap();
        let vm = m.eval_formula_at(&phi, "u").unwrap();
        let vn = n.eval_formula_at(&phi, "u'").unwrap();
        assert_eq!(l.format_value(&l.biresiduum(&vm, &vn).unwrap()), "3/5");
    }

    #[test]
    fn hm_closes_on_example() {
        for l in [Lattice::godel(), Lattice::lukasiewicz(), Lattice::product()] {
            let (m, n) = models(&l);
            let mut budget = EnumerationBudget::for_models(&m, &n, 2);
            budget.constant_pool = default_pool(&m, &n, 1);
            let report = hm_check(&m, &n, &budget, &SolverConfig::default()).unwrap();
            assert!(report.sound(), "{l}");
            assert!(report.closed, "{l}: {:?}", report.pairs);
        }
    }

    #[test]
    fn self_distance_is_one() {
        let l = Lattice::lukasiewicz();
        let (m, _) = models(&l);
        let budget = EnumerationBudget::for_models(&m, &m, 2);
        let d = logical_distance(&m, &m, &budget).unwrap();
        for i in 0..m.len() {
            assert!(l.is_one(d.last().distance.get(i, i)));
        }
    }

    #[test]
    fn distance_over_non_linear_lattice() {
        let doc = r#"{"elements":["0","a","b","1"],"leq":[["0","a"],["0","b"],["a","1"],["b","1"]],
            "tnorm":[["0","0","0","0"],["0","a","0","a"],["0","0","b","b"],["0","a","b","1"]]}"#;
        let l = Lattice::from_json(doc).unwrap();
        let m = KripkeModel::from_json(r#"{"states":["x"],"props":{"p":{"x":"a"}}}"#, Some(&l), None).unwrap();
        let n = KripkeModel::from_json(r#"{"states":["y"],"props":{"p":{"y":"b"}}}"#, Some(&l), None).unwrap();
        let budget = EnumerationBudget::for_models(&m, &n, 1);
        assert_eq!(budget.constant_pool.len(), 4);
        let d = logical_distance(&m, &n, &budget).unwrap();
        // a ⟺ b = (a → b) ∧ (b → a) = b ∧ a = 0.
        assert!(l.is_zero(d.levels[0].distance.get(0, 0)));
    }
}
