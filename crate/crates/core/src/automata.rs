//! Fuzzy automata, forward bisimulations between them, and their
//! translation into Kripke models.
//!
//! Condition identifiers used in reports, for automata `A`, `B` and a
//! relation `Z` from the states of `A` to those of `B`:
//!
//! * `initial-forth`: `σᴬ ≤ σᴮ ∘ Z⁻`.
//! * `initial-back`: `σᴮ ≤ σᴬ ∘ Z`.
//! * `transition-forth`: `Z⁻ ∘ δᴬ_ϱ ≤ δᴮ_ϱ ∘ Z⁻` for every letter.
//! * `transition-back`: `Z ∘ δᴮ_ϱ ≤ δᴬ_ϱ ∘ Z` for every letter.
//! * `terminal-forth`: `Z⁻ ∘ τᴬ ≤ τᴮ`.
//! * `terminal-back`: `Z ∘ τᴮ ≤ τᴬ`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bisim::{check_bisimulation, BisimError, BisimReport, Refiner, SolverConfig, SolverOutcome, Violation};
use crate::lattice::{Lattice, LatticeError, LatticeValue};
use crate::model::{choose_lattice, KripkeModel, LatticeSpec, ModelError};
use crate::relation::{Domain, FuzzyRelation, FuzzySet, RelationError, ValueLiteral};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Bisim(#[from] BisimError),
    #[error("malformed automaton document: {0}")]
    Document(String),
    #[error("an automaton needs at least one state")]
    EmptyStates,
    #[error("letter `{0}` is not in the alphabet")]
    UnknownLetter(String),
    #[error("letter `{0}` appears twice in the alphabet")]
    DuplicateLetter(String),
    #[error("the automata have different alphabets ({0:?} and {1:?})")]
    AlphabetMismatch(Vec<String>, Vec<String>),
    #[error("the automata use different lattices ({0} and {1})")]
    LatticeMismatch(String, String),
    #[error("the relation does not match the automata: {0}")]
    Shape(String),
}

/// Document form of an automaton. Unlisted entries are 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSpec>,
    pub states: Vec<String>,
    #[serde(default)]
    pub alphabet: Vec<String>,
    #[serde(default)]
    pub initial: BTreeMap<String, ValueLiteral>,
    #[serde(default)]
    pub terminal: BTreeMap<String, ValueLiteral>,
    #[serde(default)]
    pub transitions: BTreeMap<String, Vec<(String, String, ValueLiteral)>>,
}

/// A finite fuzzy automaton `⟨A, δ, σ, τ⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyAutomaton {
    lattice: Lattice,
    states: Arc<Domain>,
    alphabet: Vec<String>,
    transitions: BTreeMap<String, FuzzyRelation>,
    initial: FuzzySet,
    terminal: FuzzySet,
}

impl FuzzyAutomaton {
    /// An automaton with every transition, initial and terminal degree 0.
    pub fn new<I, S>(lattice: &Lattice, states: Arc<Domain>, alphabet: I) -> Result<Self, AutomatonError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if states.is_empty() {
            return Err(AutomatonError::EmptyStates);
        }
        let mut letters = Vec::new();
        let mut seen = BTreeSet::new();
        for a in alphabet {
            let a = a.into();
            if !seen.insert(a.clone()) {
                return Err(AutomatonError::DuplicateLetter(a));
            }
            letters.push(a);
        }
        let transitions =
            letters.iter().map(|a| (a.clone(), FuzzyRelation::zeros(lattice, &states, &states))).collect();
        Ok(FuzzyAutomaton {
            lattice: lattice.clone(),
            initial: FuzzySet::zeros(lattice, &states),
            terminal: FuzzySet::zeros(lattice, &states),
            states,
            alphabet: letters,
            transitions,
        })
    }

    pub fn from_json(
        text: &str,
        explicit: Option<&Lattice>,
        fallback: Option<&Lattice>,
    ) -> Result<Self, AutomatonError> {
        let doc: AutomatonDoc = serde_json::from_str(text).map_err(|e| AutomatonError::Document(e.to_string()))?;
        FuzzyAutomaton::from_doc(&doc, explicit, fallback)
    }

    pub fn from_doc(
        doc: &AutomatonDoc,
        explicit: Option<&Lattice>,
        fallback: Option<&Lattice>,
    ) -> Result<Self, AutomatonError> {
        let lattice = choose_lattice(explicit, doc.lattice.as_ref(), fallback)?;
        let states = Domain::new(doc.states.iter().cloned())?;
        let mut a = FuzzyAutomaton::new(&lattice, states, doc.alphabet.iter().cloned())?;
        for (s, v) in &doc.initial {
            let i = a.states.index_of(s)?;
            a.initial.set(i, v.parse(&lattice)?)?;
        }
        for (s, v) in &doc.terminal {
            let i = a.states.index_of(s)?;
            a.terminal.set(i, v.parse(&lattice)?)?;
        }
        for (letter, edges) in &doc.transitions {
            let rel = a.transitions.get_mut(letter).ok_or_else(|| AutomatonError::UnknownLetter(letter.clone()))?;
            for (x, y, v) in edges {
                rel.set_named(x, y, v.parse(&lattice)?)?;
            }
        }
        Ok(a)
    }

    pub fn to_doc(&self) -> AutomatonDoc {
        let l = &self.lattice;
        let fmt = |v: &LatticeValue| ValueLiteral::Text(l.format_value(v));
        let set_doc = |set: &FuzzySet| {
            (0..self.states.len())
                .filter(|&i| !l.is_zero(set.get(i)))
                .map(|i| (self.states.name(i).to_string(), fmt(set.get(i))))
                .collect()
        };
        AutomatonDoc {
            lattice: Some(LatticeSpec::of(l)),
            states: self.states.names().to_vec(),
            alphabet: self.alphabet.clone(),
            initial: set_doc(&self.initial),
            terminal: set_doc(&self.terminal),
            transitions: self
                .transitions
                .iter()
                .filter(|(_, r)| r.nonzero_count() > 0)
                .map(|(a, r)| {
                    let edges = r
                        .nonzero()
                        .map(|(i, j, v)| (self.states.name(i).to_string(), self.states.name(j).to_string(), fmt(v)))
                        .collect();
                    (a.clone(), edges)
                })
                .collect(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn states(&self) -> &Arc<Domain> {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initial(&self) -> &FuzzySet {
        &self.initial
    }

    pub fn terminal(&self) -> &FuzzySet {
        &self.terminal
    }

    /// `δ_ϱ` for a letter.
    pub fn transition(&self, letter: &str) -> Result<&FuzzyRelation, AutomatonError> {
        self.transitions.get(letter).ok_or_else(|| AutomatonError::UnknownLetter(letter.to_string()))
    }

    pub fn set_initial(&mut self, state: &str, v: LatticeValue) -> Result<(), AutomatonError> {
        let i = self.states.index_of(state)?;
        Ok(self.initial.set(i, v)?)
    }

    pub fn set_terminal(&mut self, state: &str, v: LatticeValue) -> Result<(), AutomatonError> {
        let i = self.states.index_of(state)?;
        Ok(self.terminal.set(i, v)?)
    }

    pub fn set_transition(
        &mut self,
        from: &str,
        letter: &str,
        to: &str,
        v: LatticeValue,
    ) -> Result<(), AutomatonError> {
        let rel = self.transitions.get_mut(letter).ok_or_else(|| AutomatonError::UnknownLetter(letter.to_string()))?;
        Ok(rel.set_named(from, to, v)?)
    }

    /// Non-zero transition degrees summed over letters.
    pub fn transition_count(&self) -> usize {
        self.transitions.values().map(FuzzyRelation::nonzero_count).sum()
    }

    /// Finite automata are image-finite.
    pub fn is_image_finite(&self) -> bool {
        true
    }
}

fn compatible(a: &FuzzyAutomaton, b: &FuzzyAutomaton) -> Result<(), AutomatonError> {
    if a.lattice != b.lattice {
        return Err(AutomatonError::LatticeMismatch(a.lattice.name(), b.lattice.name()));
    }
    let sa: BTreeSet<_> = a.alphabet.iter().collect();
    let sb: BTreeSet<_> = b.alphabet.iter().collect();
    if sa != sb {
        return Err(AutomatonError::AlphabetMismatch(a.alphabet.clone(), b.alphabet.clone()));
    }
    Ok(())
}

fn check_shape(a: &FuzzyAutomaton, b: &FuzzyAutomaton, z: &FuzzyRelation) -> Result<(), AutomatonError> {
    if z.lattice() != &a.lattice {
        return Err(AutomatonError::Shape(format!(
            "relation over {} but automata over {}",
            z.lattice().name(),
            a.lattice.name()
        )));
    }
    if **z.rows() != *a.states || **z.cols() != *b.states {
        return Err(AutomatonError::Shape(
            "rows must be the left automaton's states and columns the right automaton's, in order".into(),
        ));
    }
    Ok(())
}

/// `(R ∘ Z)(y) = sup_x R(x) ⊗ Z(x, y)`.
fn set_then_relation(r: &FuzzySet, z: &FuzzyRelation) -> Result<Vec<LatticeValue>, LatticeError> {
    let l = z.lattice();
    (0..z.cols().len())
        .map(|y| {
            let mut acc = l.zero();
            for x in 0..z.rows().len() {
                acc = l.join(&acc, &l.tnorm(r.get(x), z.get(x, y))?)?;
            }
            Ok(acc)
        })
        .collect()
}

/// `(Z ∘ S)(x) = sup_y Z(x, y) ⊗ S(y)`.
fn relation_then_set(z: &FuzzyRelation, s: &FuzzySet) -> Result<Vec<LatticeValue>, LatticeError> {
    let l = z.lattice();
    (0..z.rows().len())
        .map(|x| {
            let mut acc = l.zero();
            for y in 0..z.cols().len() {
                acc = l.join(&acc, &l.tnorm(z.get(x, y), s.get(y))?)?;
            }
            Ok(acc)
        })
        .collect()
}

fn compare_sets(
    condition: &'static str,
    domain: &Domain,
    lhs: &[LatticeValue],
    rhs: &[LatticeValue],
    l: &Lattice,
    out: &mut Vec<Violation>,
) -> Result<(), LatticeError> {
    for (i, (a, b)) in lhs.iter().zip(rhs).enumerate() {
        if !l.leq(a, b)? {
            out.push(Violation {
                condition,
                label: String::new(),
                states: vec![domain.name(i).to_string()],
                lhs: a.clone(),
                rhs: b.clone(),
            });
        }
    }
    Ok(())
}

fn compare_relations(
    condition: &'static str,
    label: &str,
    lhs: &FuzzyRelation,
    rhs: &FuzzyRelation,
    out: &mut Vec<Violation>,
) -> Result<(), LatticeError> {
    let l = lhs.lattice();
    for i in 0..lhs.rows().len() {
        for j in 0..lhs.cols().len() {
            if !l.leq(lhs.get(i, j), rhs.get(i, j))? {
                out.push(Violation {
                    condition,
                    label: label.to_string(),
                    states: vec![lhs.rows().name(i).to_string(), lhs.cols().name(j).to_string()],
                    lhs: lhs.get(i, j).clone(),
                    rhs: rhs.get(i, j).clone(),
                });
            }
        }
    }
    Ok(())
}

fn initial_violations(
    a: &FuzzyAutomaton,
    b: &FuzzyAutomaton,
    z: &FuzzyRelation,
) -> Result<Vec<Violation>, AutomatonError> {
    let l = &a.lattice;
    let zc = z.converse();
    let mut out = Vec::new();
    compare_sets("initial-forth", &a.states, a.initial.values(), &set_then_relation(&b.initial, &zc)?, l, &mut out)?;
    compare_sets("initial-back", &b.states, b.initial.values(), &set_then_relation(&a.initial, z)?, l, &mut out)?;
    Ok(out)
}

/// Checks all six forward-bisimulation conditions pointwise.
pub fn check_forward_bisimulation(
    a: &FuzzyAutomaton,
    b: &FuzzyAutomaton,
    z: &FuzzyRelation,
) -> Result<BisimReport, AutomatonError> {
    compatible(a, b)?;
    check_shape(a, b, z)?;
    let l = &a.lattice;
    let zc = z.converse();
    let mut out = initial_violations(a, b, z)?;
    for letter in &a.alphabet {
        let (da, db) = (&a.transitions[letter], &b.transitions[letter]);
        compare_relations("transition-forth", letter, &zc.compose(da)?, &db.compose(&zc)?, &mut out)?;
        compare_relations("transition-back", letter, &z.compose(db)?, &da.compose(z)?, &mut out)?;
    }
    compare_sets("terminal-forth", &b.states, &relation_then_set(&zc, &a.terminal)?, b.terminal.values(), l, &mut out)?;
    compare_sets("terminal-back", &a.states, &relation_then_set(z, &b.terminal)?, a.terminal.values(), l, &mut out)?;
    Ok(BisimReport::from_violations(out))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardOutcome {
    /// The greatest relation satisfying the transition and terminal
    /// conditions, with the solver's convergence data.
    pub solver: SolverOutcome,
    /// Violations of the initial conditions by that relation. These
    /// conditions only get easier as `Z` grows, so if the greatest candidate
    /// fails them, no forward bisimulation exists.
    pub initial: BisimReport,
}

impl ForwardOutcome {
    pub fn exists(&self) -> bool {
        self.initial.holds
    }

    pub fn relation(&self) -> &FuzzyRelation {
        &self.solver.relation
    }
}

/// The greatest forward bisimulation, if any. The transition and terminal
/// conditions are solved by fixpoint iteration from
/// `Z₀(x, x') = τᴬ(x) ⟺ τᴮ(x')`; the initial conditions are then checked.
pub fn greatest_forward_bisimulation(
    a: &FuzzyAutomaton,
    b: &FuzzyAutomaton,
    cfg: &SolverConfig,
) -> Result<ForwardOutcome, AutomatonError> {
    compatible(a, b)?;
    let l = &a.lattice;
    let start = FuzzyRelation::from_fn(l, &a.states, &b.states, |x, xp| {
        Ok(l.biresiduum(a.terminal.get(x), b.terminal.get(xp))?)
    })?;
    let pairs: Vec<_> = a.alphabet.iter().map(|s| (&a.transitions[s], &b.transitions[s])).collect();
    let solver = Refiner::new(l, &pairs).solve(start, cfg)?;
    let initial = BisimReport::from_violations(initial_violations(a, b, &solver.relation)?);
    Ok(ForwardOutcome { solver, initial })
}

/// The Kripke model corresponding to an automaton, with the names chosen
/// for the added initial and final states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondingModel {
    pub model: KripkeModel,
    pub initial_state: String,
    pub final_state: String,
}

fn fresh_name(base: &str, taken: &Domain) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    (1..).map(|k| format!("{base}{k}")).find(|n| !taken.contains(n)).expect("unbounded suffixes")
}

/// Builds the model over actions `Σ` and propositions `i`, `f` with states
/// `A ∪ {s_i, s_f}`: `ϱ(x, y) = δ(x, ϱ, y)`, `ϱ(s_i, x) = σ(x)`,
/// `ϱ(x, s_f) = τ(x)`, everything else 0. The added states are named
/// `__init__` and `__final__`, suffixed with a number on collision.
pub fn to_kripke(a: &FuzzyAutomaton) -> Result<CorrespondingModel, AutomatonError> {
    let l = &a.lattice;
    let init = fresh_name("__init__", &a.states);
    let fin = fresh_name("__final__", &a.states);
    let n = a.states.len();
    let names = a.states.names().iter().cloned().chain([init.clone(), fin.clone()]);
    let mut m = KripkeModel::with_states(l, names)?;
    let domain = m.domain().clone();
    let (si, sf) = (n, n + 1);
    let mut i = FuzzySet::zeros(l, &domain);
    i.set(si, l.one())?;
    let mut f = FuzzySet::zeros(l, &domain);
    f.set(sf, l.one())?;
    m.insert_prop("i", i)?;
    m.insert_prop("f", f)?;
    for letter in &a.alphabet {
        let delta = &a.transitions[letter];
        let rel = FuzzyRelation::from_fn(l, &domain, &domain, |x, y| {
            Ok(if x < n && y < n {
                delta.get(x, y).clone()
            } else if x == si && y < n {
                a.initial.get(y).clone()
            } else if x < n && y == sf {
                a.terminal.get(x).clone()
            } else {
                l.zero()
            })
        })?;
        m.insert_action(letter.clone(), rel)?;
    }
    Ok(CorrespondingModel { model: m, initial_state: init, final_state: fin })
}

/// `Z₂ = Z ∪ {(s_i, s'_i): 1, (s_f, s'_f): 1}` on the corresponding models.
pub fn extend_relation(
    z: &FuzzyRelation,
    left: &CorrespondingModel,
    right: &CorrespondingModel,
) -> Result<FuzzyRelation, AutomatonError> {
    let l = z.lattice();
    let (n, np) = (z.rows().len(), z.cols().len());
    let mut z2 = FuzzyRelation::from_fn(l, left.model.domain(), right.model.domain(), |x, xp| {
        Ok(if x < n && xp < np { z.get(x, xp).clone() } else { l.zero() })
    })?;
    z2.set(n, np, l.one())?;
    z2.set(n + 1, np + 1, l.one())?;
    Ok(z2)
}

/// Outcome of one direction of the correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Premise and conclusion both hold.
    Confirmed,
    /// The premise fails, so nothing is asserted.
    Vacuous,
    /// The premise holds and the conclusion fails.
    Violated,
    /// The lattice is not linear; the implication is not claimed there.
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub left: CorrespondingModel,
    pub right: CorrespondingModel,
    pub extended: FuzzyRelation,
    /// `Z₂` checked as a Kripke bisimulation.
    pub kripke: BisimReport,
    /// `Z` checked as a forward bisimulation.
    pub automata: BisimReport,
    /// `Z₂` a Kripke bisimulation implies `Z` a forward bisimulation.
    pub kripke_to_automata: Direction,
    /// On linear lattices: `Z` a forward bisimulation implies `Z₂` a Kripke
    /// bisimulation.
    pub automata_to_kripke: Direction,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.kripke_to_automata != Direction::Violated && self.automata_to_kripke != Direction::Violated
    }
}

fn implication(premise: bool, conclusion: bool) -> Direction {
    match (premise, conclusion) {
        (false, _) => Direction::Vacuous,
        (true, true) => Direction::Confirmed,
        (true, false) => Direction::Violated,
    }
}

/// Checks both directions of the correspondence between forward
/// bisimulations of automata and Kripke bisimulations of the corresponding
/// models.
pub fn correspondence_check(
    a: &FuzzyAutomaton,
    b: &FuzzyAutomaton,
    z: &FuzzyRelation,
) -> Result<CorrespondenceReport, AutomatonError> {
    let automata = check_forward_bisimulation(a, b, z)?;
    let left = to_kripke(a)?;
    let right = to_kripke(b)?;
    let extended = extend_relation(z, &left, &right)?;
    let kripke = check_bisimulation(&left.model, &right.model, &extended)?;
    let kripke_to_automata = implication(kripke.holds, automata.holds);
    let automata_to_kripke = if a.lattice.is_linear() && a.is_image_finite() && b.is_image_finite() {
        implication(automata.holds, kripke.holds)
    } else {
        Direction::NotCovered
    };
    Ok(CorrespondenceReport { left, right, extended, kripke, automata, kripke_to_automata, automata_to_kripke })
}
