//! Fuzzy bisimulations between Kripke models: checking, the relational
//! characterization, and the greatest bisimulation by fixpoint iteration.
//!
//! Condition identifiers used in reports:
//!
//! * `FB1`: `Z(x, x') ≤ p(x) ⟺ p'(x')` for every proposition `p`.
//! * `FB2`: for every `ϱ`, `x`, `x'`, `y` there is `y'` with
//!   `Z(x, x') ⊗ ϱ(x, y) ≤ ϱ'(x', y') ⊗ Z(y, y')`.
//! * `FB3`: the mirror of `FB2`, choosing `y` for a given `y'`.
//! * `E1`: `Z ≤ inf_p (p ⟺ p')` pointwise.
//! * `E2`: `Z⁻ ∘ ϱ ≤ ϱ' ∘ Z⁻`.
//! * `E3`: `Z ∘ ϱ' ≤ ϱ ∘ Z`.
//!
//! Over linear lattices the two groups are equivalent; in general the
//! first implies the second.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::lattice::{Lattice, LatticeError, LatticeValue, TNormKind};
use crate::model::{align_signatures, KripkeModel, ModelError};
use crate::relation::{FuzzyRelation, RelationError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BisimError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(
        "the greatest bisimulation is only computed over linear lattices; \
         `{0}` has incomparable elements, so the relational conditions do not \
         characterize bisimulations there"
    )]
    NonLinear(String),
    #[error(
        "exact mode is not available for `{0}`: fixpoint iteration may descend forever; \
         use approximate mode with a tolerance"
    )]
    ExactUnsupported(String),
    #[error("the relation does not match the models: {0}")]
    Shape(String),
}

/// One failed instance of a condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: &'static str,
    /// The proposition or action involved, empty when the condition ranges
    /// over all of them.
    pub label: String,
    /// The states instantiating the condition, in the order the condition
    /// quantifies them.
    pub states: Vec<String>,
    pub lhs: LatticeValue,
    /// The best right-hand side available (for existential conditions, the
    /// supremum over all choices).
    pub rhs: LatticeValue,
}

impl Violation {
    pub fn describe(&self, l: &Lattice) -> String {
        let label = if self.label.is_empty() { String::new() } else { format!(" [{}]", self.label) };
        format!(
            "{}{} at ({}): {} ≰ {}",
            self.condition,
            label,
            self.states.join(", "),
            l.format_value(&self.lhs),
            l.format_value(&self.rhs)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BisimReport {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

impl BisimReport {
    pub(crate) fn from_violations(violations: Vec<Violation>) -> Self {
        BisimReport { holds: violations.is_empty(), violations }
    }

    /// Violations of the named condition.
    pub fn of(&self, condition: &str) -> impl Iterator<Item = &Violation> + '_ {
        let condition = condition.to_string();
        self.violations.iter().filter(move |v| v.condition == condition)
    }
}

fn aligned(m: &KripkeModel, n: &KripkeModel, z: &FuzzyRelation) -> Result<(KripkeModel, KripkeModel), BisimError> {
    let (m, n) = align_signatures(m, n)?;
    if z.lattice() != m.lattice() {
        return Err(BisimError::Shape(format!(
            "relation over {} but models over {}",
            z.lattice().name(),
            m.lattice().name()
        )));
    }
    if **z.rows() != **m.domain() || **z.cols() != **n.domain() {
        return Err(BisimError::Shape(
            "rows must be the left model's states and columns the right model's, in order".into(),
        ));
    }
    Ok((m, n))
}

/// Checks the defining conditions `FB1`–`FB3` exhaustively.
pub fn check_bisimulation(m: &KripkeModel, n: &KripkeModel, z: &FuzzyRelation) -> Result<BisimReport, BisimError> {
    let (m, n) = aligned(m, n, z)?;
    let l = m.lattice();
    let (dm, dn) = (m.domain(), n.domain());
    let mut out = Vec::new();
    for (p, pm) in m.props() {
        let pn = n.prop(p)?;
        for x in 0..dm.len() {
            for xp in 0..dn.len() {
                let rhs = l.biresiduum(pm.get(x), pn.get(xp))?;
                if !l.leq(z.get(x, xp), &rhs)? {
                    out.push(Violation {
                        condition: "FB1",
                        label: p.clone(),
                        states: vec![dm.name(x).into(), dn.name(xp).into()],
                        lhs: z.get(x, xp).clone(),
                        rhs,
                    });
                }
            }
        }
    }
    for (a, rm) in m.actions() {
        let rn = n.action(a)?;
        for x in 0..dm.len() {
            for xp in 0..dn.len() {
                let zx = z.get(x, xp);
                if l.is_zero(zx) {
                    continue;
                }
                for y in 0..dm.len() {
                    let lhs = l.tnorm(zx, rm.get(x, y))?;
                    if l.is_zero(&lhs) {
                        continue;
                    }
                    let mut best = l.zero();
                    let mut found = false;
                    for yp in 0..dn.len() {
                        let cand = l.tnorm(rn.get(xp, yp), z.get(y, yp))?;
                        if l.leq(&lhs, &cand)? {
                            found = true;
                            break;
                        }
                        best = l.join(&best, &cand)?;
                    }
                    if !found {
                        out.push(Violation {
                            condition: "FB2",
                            label: a.clone(),
                            states: vec![dm.name(x).into(), dn.name(xp).into(), dm.name(y).into()],
                            lhs,
                            rhs: best,
                        });
                    }
                }
                for yp in 0..dn.len() {
                    let lhs = l.tnorm(zx, rn.get(xp, yp))?;
                    if l.is_zero(&lhs) {
                        continue;
                    }
                    let mut best = l.zero();
                    let mut found = false;
                    for y in 0..dm.len() {
                        let cand = l.tnorm(rm.get(x, y), z.get(y, yp))?;
                        if l.leq(&lhs, &cand)? {
                            found = true;
                            break;
                        }
                        best = l.join(&best, &cand)?;
                    }
                    if !found {
                        out.push(Violation {
                            condition: "FB3",
                            label: a.clone(),
                            states: vec![dm.name(x).into(), dn.name(xp).into(), dn.name(yp).into()],
                            lhs,
                            rhs: best,
                        });
                    }
                }
            }
        }
    }
    Ok(BisimReport::from_violations(out))
}

/// `inf_p (p(x) ⟺ p'(x'))` for every pair; all 1 without propositions.
pub fn harmony_bound(m: &KripkeModel, n: &KripkeModel) -> Result<FuzzyRelation, BisimError> {
    let (m, n) = align_signatures(m, n)?;
    let l = m.lattice();
    Ok(FuzzyRelation::from_fn(l, m.domain(), n.domain(), |x, xp| {
        let mut acc = l.one();
        for (p, pm) in m.props() {
            acc = l.meet(&acc, &l.biresiduum(pm.get(x), n.props()[p].get(xp))?)?;
        }
        Ok(acc)
    })?)
}

/// Checks the relational conditions `E1`–`E3` pointwise.
pub fn check_relational(m: &KripkeModel, n: &KripkeModel, z: &FuzzyRelation) -> Result<BisimReport, BisimError> {
    let (m, n) = aligned(m, n, z)?;
    let l = m.lattice();
    let (dm, dn) = (m.domain(), n.domain());
    let mut out = Vec::new();
    let bound = harmony_bound(&m, &n)?;
    for x in 0..dm.len() {
        for xp in 0..dn.len() {
            if !l.leq(z.get(x, xp), bound.get(x, xp))? {
                out.push(Violation {
                    condition: "E1",
                    label: String::new(),
                    states: vec![dm.name(x).into(), dn.name(xp).into()],
                    lhs: z.get(x, xp).clone(),
                    rhs: bound.get(x, xp).clone(),
                });
            }
        }
    }
    let zc = z.converse();
    for (a, rm) in m.actions() {
        let rn = n.action(a)?;
        // (Z⁻ ∘ ϱ)(x', y) ≤ (ϱ' ∘ Z⁻)(x', y)
        let lhs = zc.compose(rm)?;
        let rhs = rn.compose(&zc)?;
        for xp in 0..dn.len() {
            for y in 0..dm.len() {
                if !l.leq(lhs.get(xp, y), rhs.get(xp, y))? {
                    out.push(Violation {
                        condition: "E2",
                        label: a.clone(),
                        states: vec![dn.name(xp).into(), dm.name(y).into()],
                        lhs: lhs.get(xp, y).clone(),
                        rhs: rhs.get(xp, y).clone(),
                    });
                }
            }
        }
        // (Z ∘ ϱ')(x, y') ≤ (ϱ ∘ Z)(x, y')
        let lhs = z.compose(rn)?;
        let rhs = rm.compose(z)?;
        for x in 0..dm.len() {
            for yp in 0..dn.len() {
                if !l.leq(lhs.get(x, yp), rhs.get(x, yp))? {
                    out.push(Violation {
                        condition: "E3",
                        label: a.clone(),
                        states: vec![dm.name(x).into(), dn.name(yp).into()],
                        lhs: lhs.get(x, yp).clone(),
                        rhs: rhs.get(x, yp).clone(),
                    });
                }
            }
        }
    }
    Ok(BisimReport::from_violations(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverMode {
    /// Iterate until the relation stops changing.
    Exact,
    /// Iterate until the sup-norm change is within the tolerance.
    Approximate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub tolerance: BigRational,
    pub max_iterations: usize,
    /// `None` picks exact mode where iteration provably stops and
    /// approximate mode otherwise.
    pub mode: Option<SolverMode>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tolerance: BigRational::new(BigInt::one(), BigInt::from(1_000_000_000)),
            max_iterations: 10_000,
            mode: None,
        }
    }
}

/// True when every descending chain of iterates is finite: finite
/// carriers, and the Gödel and Łukasiewicz t-norms, whose iterates stay in
/// a finite set determined by the input values.
pub fn iteration_terminates(l: &Lattice) -> bool {
    l.is_finite() || matches!(l.tnorm_kind(), TNormKind::Godel | TNormKind::Lukasiewicz)
}

impl SolverConfig {
    pub fn resolved_mode(&self, l: &Lattice) -> Result<SolverMode, BisimError> {
        match self.mode {
            Some(SolverMode::Exact) if !iteration_terminates(l) => Err(BisimError::ExactUnsupported(l.name())),
            Some(mode) => Ok(mode),
            None if iteration_terminates(l) => Ok(SolverMode::Exact),
            None => Ok(SolverMode::Approximate),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOutcome {
    pub relation: FuzzyRelation,
    pub iterations: usize,
    /// The stopping criterion was met within the iteration budget.
    pub converged: bool,
    /// The returned relation is a fixpoint of the refinement step, hence the
    /// greatest bisimulation.
    pub exact: bool,
    /// The returned relation satisfies the relational conditions exactly, so
    /// it is a bisimulation below the greatest one.
    pub certified: bool,
    /// Distance between the returned relation and the greatest
    /// bisimulation: zero when `exact`, a proven bound when `certified`, and
    /// otherwise the tolerance as an estimate (1 without convergence).
    pub error_bound: BigRational,
    /// `(iteration, sup-norm change)` per refinement step.
    pub trace: Vec<(usize, BigRational)>,
}

/// Sparse view of an action: for each state the successors with non-zero value.
fn successors(rel: &FuzzyRelation) -> Vec<Vec<(usize, LatticeValue)>> {
    let l = rel.lattice();
    (0..rel.rows().len())
        .map(|i| rel.row(i).iter().enumerate().filter(|(_, v)| !l.is_zero(v)).map(|(j, v)| (j, v.clone())).collect())
        .collect()
}

/// For each state, its successors with their degrees.
type Successors = Vec<Vec<(usize, LatticeValue)>>;

pub(crate) struct Refiner {
    lattice: Lattice,
    /// Per action: successors in the left and in the right system.
    actions: Vec<(Successors, Successors)>,
}

impl Refiner {
    pub(crate) fn new(lattice: &Lattice, pairs: &[(&FuzzyRelation, &FuzzyRelation)]) -> Self {
        Refiner {
            lattice: lattice.clone(),
            actions: pairs.iter().map(|(a, b)| (successors(a), successors(b))).collect(),
        }
    }

    /// One refinement step:
    /// `Z(x, x') ∧ ⋀ (ϱ(x, y) → sup_{y'} ϱ'(x', y') ⊗ Z(y, y')) ∧ ⋀ (mirror)`.
    pub(crate) fn step(&self, z: &FuzzyRelation) -> Result<FuzzyRelation, BisimError> {
        let l = &self.lattice;
        Ok(FuzzyRelation::from_fn(l, z.rows(), z.cols(), |x, xp| {
            let mut v = z.get(x, xp).clone();
            for (left, right) in &self.actions {
                if l.is_zero(&v) {
                    break;
                }
                for (y, a) in &left[x] {
                    let mut s = l.zero();
                    for (yp, b) in &right[xp] {
                        s = l.join(&s, &l.tnorm(b, z.get(*y, *yp))?)?;
                    }
                    v = l.meet(&v, &l.residuum(a, &s)?)?;
                }
                for (yp, b) in &right[xp] {
                    let mut s = l.zero();
                    for (y, a) in &left[x] {
                        s = l.join(&s, &l.tnorm(a, z.get(*y, *yp))?)?;
                    }
                    v = l.meet(&v, &l.residuum(b, &s)?)?;
                }
            }
            Ok(v)
        })?)
    }

    /// Iterates `step` from `start` under `cfg`.
    ///
    /// In approximate mode, once the change per step is within the
    /// tolerance, each further iterate is offered for certification (see
    /// [`Refiner::certify`]); iteration continues for at most as many steps
    /// again before the uncertified iterate is returned.
    pub(crate) fn solve(&self, start: FuzzyRelation, cfg: &SolverConfig) -> Result<SolverOutcome, BisimError> {
        let l = &self.lattice;
        let mode = cfg.resolved_mode(l)?;
        let mut z = start;
        let mut trace = Vec::new();
        let mut deadline = None;
        for k in 1..=cfg.max_iterations {
            let next = self.step(&z)?;
            let delta = next.sup_distance(&z)?;
            trace.push((k, delta.clone()));
            if next == z {
                return Ok(SolverOutcome {
                    relation: z,
                    iterations: k,
                    converged: true,
                    exact: true,
                    certified: true,
                    error_bound: BigRational::zero(),
                    trace,
                });
            }
            z = next;
            if mode == SolverMode::Approximate && delta <= cfg.tolerance {
                if let Some((relation, bound)) = self.certify(&z, &cfg.tolerance)? {
                    return Ok(SolverOutcome {
                        relation,
                        iterations: k,
                        converged: true,
                        exact: bound.is_zero(),
                        certified: true,
                        error_bound: bound,
                        trace,
                    });
                }
                let stop = *deadline.get_or_insert(2 * k);
                if k >= stop {
                    return Ok(SolverOutcome {
                        relation: z,
                        iterations: k,
                        converged: true,
                        exact: false,
                        certified: false,
                        error_bound: cfg.tolerance.clone(),
                        trace,
                    });
                }
            }
        }
        Ok(SolverOutcome {
            relation: z,
            iterations: cfg.max_iterations,
            converged: false,
            exact: false,
            certified: false,
            error_bound: BigRational::one(),
            trace,
        })
    }

    /// The iterate lies above the greatest bisimulation. Entries within the
    /// tolerance of 0 are usually tending to 0; if dropping them yields a
    /// relation that the step leaves unchanged, that relation is a
    /// bisimulation, and the greatest one lies between it and the iterate.
    /// Returns the relation and its distance to the iterate.
    fn certify(
        &self,
        z: &FuzzyRelation,
        tol: &BigRational,
    ) -> Result<Option<(FuzzyRelation, BigRational)>, BisimError> {
        let l = &self.lattice;
        let snapped = FuzzyRelation::from_fn(l, z.rows(), z.cols(), |i, j| {
            let v = z.get(i, j);
            Ok(match v.as_rational() {
                Some(r) if r <= tol => l.zero(),
                _ => v.clone(),
            })
        })?;
        if self.step(&snapped)? == snapped {
            let bound = z.sup_distance(&snapped)?;
            return Ok(Some((snapped, bound)));
        }
        Ok(None)
    }
}

/// One refinement step for a pair of Kripke models, exposed for testing the
/// iteration's monotonicity.
pub fn refine_step(m: &KripkeModel, n: &KripkeModel, z: &FuzzyRelation) -> Result<FuzzyRelation, BisimError> {
    let (m, n) = aligned(m, n, z)?;
    let pairs: Vec<_> = m.actions().iter().map(|(a, r)| (r, &n.actions()[a])).collect();
    Refiner::new(m.lattice(), &pairs).step(z)
}

/// The greatest fuzzy bisimulation between two models over a linear lattice.
pub fn greatest_bisimulation(
    m: &KripkeModel,
    n: &KripkeModel,
    cfg: &SolverConfig,
) -> Result<SolverOutcome, BisimError> {
    let (m, n) = align_signatures(m, n)?;
    let l = m.lattice();
    if !l.is_linear() {
        return Err(BisimError::NonLinear(l.name()));
    }
    let start = harmony_bound(&m, &n)?;
    let pairs: Vec<_> = m.actions().iter().map(|(a, r)| (r, &n.actions()[a])).collect();
    Refiner::new(l, &pairs).solve(start, cfg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    /// `Z₁⁻` as a bisimulation from the middle model back to the first.
    pub converse: BisimReport,
    /// `Z₁ ∘ Z₂` as a bisimulation from the first model to the last.
    pub composition: BisimReport,
    /// The supremum of `Z₁` and the extra relations, between the first two
    /// models; only checked over linear lattices.
    pub supremum: Option<BisimReport>,
}

impl ClosureReport {
    pub fn holds(&self) -> bool {
        self.converse.holds && self.composition.holds && self.supremum.as_ref().is_none_or(|r| r.holds)
    }
}

/// Checks that bisimulations are closed under converse, composition and,
/// over linear lattices, finite suprema.
pub fn closure_check(
    m: &KripkeModel,
    m1: &KripkeModel,
    m2: &KripkeModel,
    z1: &FuzzyRelation,
    z2: &FuzzyRelation,
    others: &[FuzzyRelation],
) -> Result<ClosureReport, BisimError> {
    let converse = check_bisimulation(m1, m, &z1.converse())?;
    let composition = check_bisimulation(m, m2, &z1.compose(z2)?)?;
    let supremum = if m.lattice().is_linear() {
        let sup = FuzzyRelation::sup_relations(std::iter::once(z1).chain(others))?;
        Some(check_bisimulation(m, m1, &sup)?)
    } else {
        None
    };
    Ok(ClosureReport { converse, composition, supremum })
}

#[cfg(test)]
mod tests {
    use super::*;

    const M: &str = r#"{"states":["u","v","w"],"props":{"p":{"v":"1/2","w":"4/5"}},
        "actions":{"r":[["u","v","3/5"],["u","w","1"]]}}"#;
    const MP: &str = r#"{"states":["u'","v'","w'"],"props":{"p":{"v'":"1/2","w'":"4/5"}},
        "actions":{"r":[["u'","v'","1"],["u'","w'","4/5"]]}}"#;

    fn models(l: &Lattice) -> (KripkeModel, KripkeModel) {
        (KripkeModel::from_json(M, Some(l), None).unwrap(), KripkeModel::from_json(MP, Some(l), None).unwrap())
    }

    fn cells(l: &Lattice, z: &FuzzyRelation) -> Vec<(String, String, String)> {
        z.nonzero()
            .map(|(i, j, v)| (z.rows().name(i).to_string(), z.cols().name(j).to_string(), l.format_value(v)))
            .collect()
    }

    #[test]
    fn greatest_bisimulation_per_tnorm() {
        for (l, uu, off) in [
            (Lattice::godel(), "3/5", "1/2"),
            (Lattice::lukasiewicz(), "7/10", "7/10"),
            (Lattice::product(), "5/8", "5/8"),
        ] {
            let (m, n) = models(&l);
            let out = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap();
            assert!(out.exact && out.converged, "{l}");
            let z = &out.relation;
            assert_eq!(l.format_value(z.get_named("u", "u'").unwrap()), uu);
            assert_eq!(l.format_value(z.get_named("v", "w'").unwrap()), off);
            assert_eq!(l.format_value(z.get_named("w", "v'").unwrap()), off);
            assert!(l.is_one(z.get_named("v", "v'").unwrap()));
            assert!(l.is_one(z.get_named("w", "w'").unwrap()));
            assert_eq!(cells(&l, z).len(), 5);
            assert!(check_bisimulation(&m, &n, z).unwrap().holds);
            assert!(check_relational(&m, &n, z).unwrap().holds);
        }
    }

    #[test]
    fn raised_entry_breaks_back_condition() {
        let l = Lattice::godel();
        let (m, n) = models(&l);
        let mut z = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap().relation;
        z.set_named("u", "u'", l.one()).unwrap();
        let report = check_bisimulation(&m, &n, &z).unwrap();
        assert!(!report.holds);
        assert!(report.of("FB3").any(|v| v.states == ["u", "u'", "v'"]));
    }

    #[test]
    fn relational_value_matches_hand_computation() {
        let l = Lattice::godel();
        let (m, n) = models(&l);
        let z = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap().relation;
        let rz = n.action("r").unwrap().compose(&z.converse()).unwrap();
        assert_eq!(l.format_value(rz.get_named("u'", "w").unwrap()), "4/5");
    }

    #[test]
    fn trivial_relations() {
        let l = Lattice::lukasiewicz();
        let (m, n) = models(&l);
        let id = FuzzyRelation::identity(&l, m.domain());
        assert!(check_bisimulation(&m, &m, &id).unwrap().holds);
        let zero = FuzzyRelation::zeros(&l, m.domain(), n.domain());
        assert!(check_bisimulation(&m, &n, &zero).unwrap().holds);
        assert!(check_relational(&m, &n, &zero).unwrap().holds);
        assert!(matches!(check_bisimulation(&m, &n, &id), Err(BisimError::Shape(_))));
    }

    #[test]
    fn solver_modes() {
        let p = Lattice::product();
        let (m, n) = models(&p);
        let exact = SolverConfig { mode: Some(SolverMode::Exact), ..SolverConfig::default() };
        assert!(matches!(greatest_bisimulation(&m, &n, &exact), Err(BisimError::ExactUnsupported(_))));
        let doc = r#"{"elements":["0","a","b","1"],"leq":[["0","a"],["0","b"],["a","1"],["b","1"]],
            "tnorm":[["0","0","0","0"],["0","a","0","a"],["0","0","b","b"],["0","a","b","1"]]}"#;
        let diamond = Lattice::from_json(doc).unwrap();
        let m = KripkeModel::from_json(r#"{"states":["x"]}"#, Some(&diamond), None).unwrap();
        assert!(matches!(greatest_bisimulation(&m, &m, &SolverConfig::default()), Err(BisimError::NonLinear(_))));
    }

    #[test]
    fn product_loop_tends_to_zero() {
        // A self-loop of weight 1 against one of weight 1/2: the bound on
        // Z(x, x') halves at every step, so only the zero relation is a
        // bisimulation and the solver needs to certify the limit.
        let l = Lattice::product();
        let m = KripkeModel::from_json(r#"{"states":["x"],"actions":{"r":[["x","x","1"]]}}"#, Some(&l), None).unwrap();
        let n =
            KripkeModel::from_json(r#"{"states":["y"],"actions":{"r":[["y","y","1/2"]]}}"#, Some(&l), None).unwrap();
        let out = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap();
        assert!(out.converged && out.certified);
        assert!(l.is_zero(out.relation.get(0, 0)));
        assert!(out.error_bound <= SolverConfig::default().tolerance);
        let capped = SolverConfig { max_iterations: 5, ..SolverConfig::default() };
        let out = greatest_bisimulation(&m, &n, &capped).unwrap();
        assert!(!out.converged);
        assert_eq!(out.trace.len(), 5);
    }

    #[test]
    fn auto_bisimulation_is_equivalence() {
        let l = Lattice::godel();
        let (m, _) = models(&l);
        let z = greatest_bisimulation(&m, &m, &SolverConfig::default()).unwrap().relation;
        assert!(z.classify().unwrap().equivalence);
    }

    #[test]
    fn closure_on_example() {
        let l = Lattice::godel();
        let (m, n) = models(&l);
        let z = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap().relation;
        let id = FuzzyRelation::identity(&l, n.domain());
        let zero = FuzzyRelation::zeros(&l, m.domain(), n.domain());
        let report = closure_check(&m, &n, &n, &z, &id, &[zero]).unwrap();
        assert!(report.holds());
        assert_eq!(z.compose(&id).unwrap(), z);
    }
}
