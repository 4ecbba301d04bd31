//! Invariance of formulas and programs under a given bisimulation.
//!
//! A bisimulation `Z` bounds formula agreement, `Z(x, x') ≤ φ(x) ⟺ φ(x')`,
//! provided the lattice suits the constructors `φ` uses: `∪` needs a linear
//! lattice, and full implications or tests need `⊗ = ∧`. The checks here
//! enforce those conditions by default and can be told to bypass them to
//! exhibit counterexamples.

use std::collections::HashSet;

use serde::Serialize;

use crate::bisim::{check_bisimulation, BisimError, Violation};
use crate::lattice::laws::{check_laws, exhaustive_samples, heyting_laws, Law, Sample};
use crate::lattice::{Lattice, LatticeError, LatticeValue};
use crate::model::{align_signatures, Evaluator, KripkeModel, ModelError};
use crate::relation::{FuzzyRelation, RelationError};
use crate::syntax::{ConstructorUsage, Formula, FragmentSpec, Program};

/// How lattice preconditions are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gating {
    /// Full implications and tests require `⊗ = ∧`; `∪` requires linearity.
    Enforce,
    /// As `Enforce`, but full implications and tests are also accepted when
    /// the two laws they rely on are verified on the lattice instead.
    Laws,
    /// Report the conditions but run the check regardless.
    Override,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GatingCondition {
    pub name: &'static str,
    pub requirement: &'static str,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvarianceError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Bisim(#[from] BisimError),
    #[error("the formula or program is not in the fragment excluding {0}")]
    NotInFragment(FragmentSpec),
    #[error("refused: {}", failed_conditions(.0))]
    Gating(Vec<GatingCondition>),
    #[error("the given relation is not a bisimulation: {0}")]
    NotBisimulation(String),
}

fn failed_conditions(conds: &[GatingCondition]) -> String {
    conds
        .iter()
        .filter(|c| !c.satisfied)
        .map(|c| format!("condition `{}` fails ({})", c.name, c.requirement))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Values of the two laws that implications and tests rely on, verified
/// exhaustively on finite carriers and on the grid `{0, 1/10, …, 1}` of the
/// unit interval.
fn heyting_laws_verified(l: &Lattice) -> Result<bool, LatticeError> {
    let laws: Vec<&'static Law> = heyting_laws().iter().collect();
    let report = match exhaustive_samples(l) {
        Some(all) => check_laws(l, &laws, all, true)?,
        None => {
            let grid: Vec<LatticeValue> = (0..=10).map(|i| l.ratio(i, 10)).collect::<Result<_, _>>()?;
            let g = grid.len();
            let samples = (0..g.pow(5)).map(|mut k| {
                let mut pick = || {
                    let v = grid[k % g].clone();
                    k /= g;
                    v
                };
                Sample { x: pick(), x2: pick(), y: pick(), y2: pick(), z: pick() }
            });
            check_laws(l, &laws, samples, false)?
        }
    };
    Ok(report.all_hold())
}

/// The lattice conditions relevant to a formula or program using the given
/// constructors.
pub fn gating_conditions(
    l: &Lattice,
    usage: ConstructorUsage,
    gating: Gating,
) -> Result<Vec<GatingCondition>, LatticeError> {
    let mut out = Vec::new();
    if usage.union {
        out.push(GatingCondition {
            name: "linear-lattice-for-union",
            requirement: "formulas with ∪ need a linear lattice",
            satisfied: l.is_linear(),
        });
    }
    if usage.implication || usage.test {
        let via_laws = gating == Gating::Laws && !l.is_heyting() && heyting_laws_verified(l)?;
        if usage.implication {
            out.push(GatingCondition {
                name: "heyting-lattice-for-implication",
                requirement: "formulas with → between non-constant formulas need ⊗ = ∧",
                satisfied: l.is_heyting() || via_laws,
            });
        }
        if usage.test {
            out.push(GatingCondition {
                name: "heyting-lattice-for-test",
                requirement: "formulas with ? need ⊗ = ∧",
                satisfied: l.is_heyting() || via_laws,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub formula: Formula,
    pub left: LatticeValue,
    pub right: LatticeValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceViolation {
    pub left: String,
    pub right: String,
    pub relation: LatticeValue,
    pub left_value: LatticeValue,
    pub right_value: LatticeValue,
    pub agreement: LatticeValue,
    /// Every subformula, innermost first, with its values at the two states.
    pub trace: Vec<TraceStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub holds: bool,
    pub conditions: Vec<GatingCondition>,
    /// Some condition failed and the check ran anyway.
    pub overridden: bool,
    pub violations: Vec<InvarianceViolation>,
}

fn admit(
    l: &Lattice,
    usage: ConstructorUsage,
    gating: Gating,
) -> Result<(Vec<GatingCondition>, bool), InvarianceError> {
    let conditions = gating_conditions(l, usage, gating)?;
    let failed = conditions.iter().any(|c| !c.satisfied);
    if failed && gating != Gating::Override {
        return Err(InvarianceError::Gating(conditions));
    }
    Ok((conditions, failed))
}

fn require_bisimulation(m: &KripkeModel, n: &KripkeModel, z: &FuzzyRelation) -> Result<(), InvarianceError> {
    let report = check_bisimulation(m, n, z)?;
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(InvarianceError::NotBisimulation(v.describe(m.lattice()))),
    }
}

fn subformulas<'a>(phi: &'a Formula, seen: &mut HashSet<&'a Formula>, out: &mut Vec<&'a Formula>) {
    for c in phi.children() {
        subformulas(c, seen, out);
    }
    if seen.insert(phi) {
        out.push(phi);
    }
}

/// Checks `Z(x, x') ≤ φ(x) ⟺ φ(x')` for every pair of states.
pub fn invariance_check(
    m: &KripkeModel,
    n: &KripkeModel,
    z: &FuzzyRelation,
    phi: &Formula,
    fragment: &FragmentSpec,
    gating: Gating,
) -> Result<InvarianceReport, InvarianceError> {
    if !phi.in_fragment(fragment) {
        return Err(InvarianceError::NotInFragment(*fragment));
    }
    let l = m.lattice();
    let (conditions, overridden) = admit(l, phi.usage(), gating)?;
    require_bisimulation(m, n, z)?;
    let (m, n) = align_signatures(m, n)?;
    let mut em = Evaluator::new(&m);
    let mut en = Evaluator::new(&n);
    let vm = em.formula(phi)?;
    let vn = en.formula(phi)?;
    let mut violations = Vec::new();
    for x in 0..m.len() {
        for xp in 0..n.len() {
            let agreement = l.biresiduum(&vm[x], &vn[xp])?;
            if l.leq(z.get(x, xp), &agreement)? {
                continue;
            }
            let mut subs = Vec::new();
            subformulas(phi, &mut HashSet::new(), &mut subs);
            let trace = subs
                .into_iter()
                .map(|f| {
                    Ok(TraceStep {
                        formula: f.clone(),
                        left: em.formula(f)?[x].clone(),
                        right: en.formula(f)?[xp].clone(),
                    })
                })
                .collect::<Result<Vec<_>, ModelError>>()?;
            violations.push(InvarianceViolation {
                left: m.domain().name(x).to_string(),
                right: n.domain().name(xp).to_string(),
                relation: z.get(x, xp).clone(),
                left_value: vm[x].clone(),
                right_value: vn[xp].clone(),
                agreement,
                trace,
            });
        }
    }
    Ok(InvarianceReport { holds: violations.is_empty(), conditions, overridden, violations })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagReport {
    pub holds: bool,
    pub conditions: Vec<GatingCondition>,
    pub overridden: bool,
    /// Conditions `forth` (a matching `y'` for every `y`) and `back`.
    pub violations: Vec<Violation>,
}

/// Checks the back-and-forth conditions for the relation a program denotes:
/// for all `x, x', y` some `y'` has
/// `Z(x, x') ⊗ α(x, y) ≤ α'(x', y') ⊗ Z(y, y')`, and symmetrically.
pub fn program_zigzag_check(
    m: &KripkeModel,
    n: &KripkeModel,
    z: &FuzzyRelation,
    alpha: &Program,
    fragment: &FragmentSpec,
    gating: Gating,
) -> Result<ZigzagReport, InvarianceError> {
    if !alpha.in_fragment(fragment) {
        return Err(InvarianceError::NotInFragment(*fragment));
    }
    let l = m.lattice();
    let (conditions, overridden) = admit(l, alpha.usage(), gating)?;
    require_bisimulation(m, n, z)?;
    let (m, n) = align_signatures(m, n)?;
    let label = alpha.display(l).to_string();
    let mut bare_m = KripkeModel::new(l, m.domain().clone())?;
    bare_m.insert_action(label.clone(), m.eval_program(alpha)?)?;
    let mut bare_n = KripkeModel::new(l, n.domain().clone())?;
    bare_n.insert_action(label.clone(), n.eval_program(alpha)?)?;
    let report = check_bisimulation(&bare_m, &bare_n, z)?;
    let violations: Vec<Violation> = report
        .violations
        .into_iter()
        .map(|mut v| {
            v.condition = if v.condition == "FB2" { "forth" } else { "back" };
            v
        })
        .collect();
    Ok(ZigzagReport { holds: violations.is_empty(), conditions, overridden, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisim::{greatest_bisimulation, SolverConfig};
    use crate::syntax::{parse_formula, parse_program};

    fn remark_models(l: &Lattice) -> (KripkeModel, KripkeModel) {
        (
            KripkeModel::from_json(r#"{"states":["v"],"props":{"p":{"v":"0.2"},"q":{"v":"0.2"}}}"#, Some(l), None)
                .unwrap(),
            KripkeModel::from_json(r#"{"states":["v'"],"props":{"p":{"v'":"0.3"},"q":{"v'":"0.1"}}}"#, Some(l), None)
                .unwrap(),
        )
    }

    #[test]
    fn implication_counterexample_needs_override() {
        for (l, text, z, agreement) in
            [(Lattice::lukasiewicz(), "p -> q", "9/10", "4/5"), (Lattice::product(), "[p?]q", "1/2", "1/3")]
        {
            let (m, n) = remark_models(&l);
            let zr = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap().relation;
            assert_eq!(l.format_value(zr.get(0, 0)), z);
            let phi = parse_formula(text, &l).unwrap();
            let refused = invariance_check(&m, &n, &zr, &phi, &FragmentSpec::FULL, Gating::Enforce).unwrap_err();
            assert!(refused.to_string().contains("heyting-lattice-for"), "{refused}");
            let report = invariance_check(&m, &n, &zr, &phi, &FragmentSpec::FULL, Gating::Override).unwrap();
            assert!(!report.holds && report.overridden);
            let v = &report.violations[0];
            assert_eq!(l.format_value(&v.agreement), agreement);
            assert_eq!(v.trace.last().unwrap().formula, phi);
        }
    }

    #[test]
    fn godel_passes_enforced_gating() {
        let l = Lattice::godel();
        let (m, n) = remark_models(&l);
        let z = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap().relation;
        for text in ["p -> q", "[p?]q", "~p \\/ q"] {
            let phi = parse_formula(text, &l).unwrap();
            assert!(invariance_check(&m, &n, &z, &phi, &FragmentSpec::FULL, Gating::Enforce).unwrap().holds);
        }
    }

    #[test]
    fn laws_mode_rejects_non_heyting_unit_lattices() {
        for l in [Lattice::lukasiewicz(), Lattice::product()] {
            let conds =
                gating_conditions(&l, ConstructorUsage { implication: true, ..Default::default() }, Gating::Laws)
                    .unwrap();
            assert!(!conds[0].satisfied);
        }
    }

    #[test]
    fn fragment_and_bisimulation_preconditions() {
        let l = Lattice::godel();
        let (m, n) = remark_models(&l);
        let one = FuzzyRelation::ones(&l, m.domain(), n.domain());
        let phi = parse_formula("p", &l).unwrap();
        assert!(matches!(
            invariance_check(&m, &n, &one, &phi, &FragmentSpec::FULL, Gating::Enforce),
            Err(InvarianceError::NotBisimulation(_))
        ));
        let imp = parse_formula("p -> q", &l).unwrap();
        assert!(matches!(
            invariance_check(&m, &n, &one, &imp, &FragmentSpec::MINIMAL, Gating::Enforce),
            Err(InvarianceError::NotInFragment(_))
        ));
    }

    #[test]
    fn zigzag_for_star_and_test() {
        let l = Lattice::godel();
        let m = KripkeModel::from_json(
            r#"{"states":["u","v","w"],"props":{"p":{"v":"1/2","w":"4/5"}},"actions":{"r":[["u","v","3/5"],["u","w","1"]]}}"#,
            Some(&l),
            None,
        )
        .unwrap();
        let n = KripkeModel::from_json(
            r#"{"states":["u'","v'","w'"],"props":{"p":{"v'":"1/2","w'":"4/5"}},"actions":{"r":[["u'","v'","1"],["u'","w'","4/5"]]}}"#,
            Some(&l),
            None,
        )
        .unwrap();
        let z = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap().relation;
        for text in ["r", "r*", "p?", "r ; p? | r*"] {
            let alpha = parse_program(text, &l).unwrap();
            let report = program_zigzag_check(&m, &n, &z, &alpha, &FragmentSpec::FULL, Gating::Enforce).unwrap();
            assert!(report.holds, "{text}");
        }
    }
}
