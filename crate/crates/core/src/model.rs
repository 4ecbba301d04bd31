//! Finite fuzzy Kripke models and the evaluator for formulas and programs.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::lattice::{FiniteTable, Lattice, LatticeError, LatticeValue};
use crate::relation::{Domain, FuzzyRelation, FuzzySet, RelationError, ValueLiteral};
use crate::syntax::{Formula, Program};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error("malformed model document: {0}")]
    Document(String),
    #[error("no lattice given: set \"lattice\" in the document, pass one explicitly, or set a default")]
    NoLattice,
    #[error("a model needs at least one state")]
    EmptyDomain,
    #[error("unknown proposition `{0}`")]
    UnknownProp(String),
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("the models use different lattices ({0} and {1})")]
    LatticeMismatch(String, String),
}

/// How a document names its lattice: a built-in name or an inline table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeSpec {
    Name(String),
    Table(FiniteTable),
}

impl LatticeSpec {
    pub fn resolve(&self) -> Result<Lattice, LatticeError> {
        match self {
            LatticeSpec::Name(n) => n.parse(),
            LatticeSpec::Table(t) => Lattice::from_table(t),
        }
    }

    pub fn of(lattice: &Lattice) -> LatticeSpec {
        match lattice.finite() {
            Some(f) if !lattice.name().starts_with("chain:") => LatticeSpec::Table(f.to_table()),
            _ => LatticeSpec::Name(lattice.name()),
        }
    }
}

/// Picks the lattice for a document: an explicit choice wins, then the
/// document's own field, then the fallback.
pub fn choose_lattice(
    explicit: Option<&Lattice>,
    declared: Option<&LatticeSpec>,
    fallback: Option<&Lattice>,
) -> Result<Lattice, ModelError> {
    if let Some(l) = explicit {
        return Ok(l.clone());
    }
    if let Some(spec) = declared {
        return Ok(spec.resolve()?);
    }
    fallback.cloned().ok_or(ModelError::NoLattice)
}

/// Document form of a model. Unlisted entries are 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSpec>,
    pub states: Vec<String>,
    #[serde(default)]
    pub props: BTreeMap<String, BTreeMap<String, ValueLiteral>>,
    #[serde(default)]
    pub actions: BTreeMap<String, Vec<(String, String, ValueLiteral)>>,
}

/// A finite fuzzy Kripke model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeModel {
    lattice: Lattice,
    domain: Arc<Domain>,
    props: BTreeMap<String, FuzzySet>,
    actions: BTreeMap<String, FuzzyRelation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelStats {
    pub states: usize,
    pub props: usize,
    pub actions: usize,
    /// Non-zero action entries, summed over actions.
    pub edges: usize,
    /// Finite models are image-finite.
    pub image_finite: bool,
    /// Finite models attain every supremum and infimum of the semantics.
    pub witnessed: bool,
}

impl KripkeModel {
    pub fn new(lattice: &Lattice, domain: Arc<Domain>) -> Result<Self, ModelError> {
        if domain.is_empty() {
            return Err(ModelError::EmptyDomain);
        }
        Ok(KripkeModel { lattice: lattice.clone(), domain, props: BTreeMap::new(), actions: BTreeMap::new() })
    }

    pub fn with_states<I, S>(lattice: &Lattice, states: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        KripkeModel::new(lattice, Domain::new(states)?)
    }

    pub fn from_json(text: &str, explicit: Option<&Lattice>, fallback: Option<&Lattice>) -> Result<Self, ModelError> {
        let doc: ModelDoc = serde_json::from_str(text).map_err(|e| ModelError::Document(e.to_string()))?;
        KripkeModel::from_doc(&doc, explicit, fallback)
    }

    pub fn from_doc(
        doc: &ModelDoc,
        explicit: Option<&Lattice>,
        fallback: Option<&Lattice>,
    ) -> Result<Self, ModelError> {
        let lattice = choose_lattice(explicit, doc.lattice.as_ref(), fallback)?;
        let mut m = KripkeModel::with_states(&lattice, doc.states.iter().cloned())?;
        for (p, values) in &doc.props {
            let mut set = FuzzySet::zeros(&lattice, &m.domain);
            for (state, v) in values {
                set.set(m.domain.index_of(state)?, v.parse(&lattice)?)?;
            }
            m.props.insert(p.clone(), set);
        }
        for (a, edges) in &doc.actions {
            let mut rel = FuzzyRelation::zeros(&lattice, &m.domain, &m.domain);
            for (x, y, v) in edges {
                rel.set_named(x, y, v.parse(&lattice)?)?;
            }
            m.actions.insert(a.clone(), rel);
        }
        Ok(m)
    }

    pub fn to_doc(&self) -> ModelDoc {
        let fmt = |v: &LatticeValue| ValueLiteral::Text(self.lattice.format_value(v));
        ModelDoc {
            lattice: Some(LatticeSpec::of(&self.lattice)),
            states: self.domain.names().to_vec(),
            props: self
                .props
                .iter()
                .map(|(p, set)| {
                    let entries = (0..self.domain.len())
                        .filter(|&i| !self.lattice.is_zero(set.get(i)))
                        .map(|i| (self.domain.name(i).to_string(), fmt(set.get(i))))
                        .collect();
                    (p.clone(), entries)
                })
                .collect(),
            actions: self
                .actions
                .iter()
                .map(|(a, rel)| {
                    let edges = rel
                        .nonzero()
                        .map(|(i, j, v)| (self.domain.name(i).to_string(), self.domain.name(j).to_string(), fmt(v)))
                        .collect();
                    (a.clone(), edges)
                })
                .collect(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn props(&self) -> &BTreeMap<String, FuzzySet> {
        &self.props
    }

    pub fn actions(&self) -> &BTreeMap<String, FuzzyRelation> {
        &self.actions
    }

    pub fn prop(&self, name: &str) -> Result<&FuzzySet, ModelError> {
        self.props.get(name).ok_or_else(|| ModelError::UnknownProp(name.to_string()))
    }

    pub fn action(&self, name: &str) -> Result<&FuzzyRelation, ModelError> {
        self.actions.get(name).ok_or_else(|| ModelError::UnknownAction(name.to_string()))
    }

    /// Adds or replaces a proposition.
    pub fn insert_prop(&mut self, name: impl Into<String>, set: FuzzySet) -> Result<(), ModelError> {
        if set.lattice() != &self.lattice {
            return Err(ModelError::LatticeMismatch(self.lattice.name(), set.lattice().name()));
        }
        if **set.domain() != *self.domain {
            return Err(RelationError::DomainMismatch("proposition over a different domain".into()).into());
        }
        self.props.insert(name.into(), set);
        Ok(())
    }

    /// Adds or replaces an action.
    pub fn insert_action(&mut self, name: impl Into<String>, rel: FuzzyRelation) -> Result<(), ModelError> {
        if rel.lattice() != &self.lattice {
            return Err(ModelError::LatticeMismatch(self.lattice.name(), rel.lattice().name()));
        }
        if **rel.rows() != *self.domain || **rel.cols() != *self.domain {
            return Err(RelationError::DomainMismatch("action over a different domain".into()).into());
        }
        self.actions.insert(name.into(), rel);
        Ok(())
    }

    /// The same model with every listed proposition and action present,
    /// missing ones added as constantly 0.
    pub fn extend_signature(&self, props: &BTreeSet<String>, actions: &BTreeSet<String>) -> KripkeModel {
        let mut m = self.clone();
        for p in props {
            m.props.entry(p.clone()).or_insert_with(|| FuzzySet::zeros(&self.lattice, &self.domain));
        }
        for a in actions {
            m.actions
                .entry(a.clone())
                .or_insert_with(|| FuzzyRelation::zeros(&self.lattice, &self.domain, &self.domain));
        }
        m
    }

    pub fn signature(&self) -> (BTreeSet<String>, BTreeSet<String>) {
        (self.props.keys().cloned().collect(), self.actions.keys().cloned().collect())
    }

    pub fn stats(&self) -> ModelStats {
        ModelStats {
            states: self.domain.len(),
            props: self.props.len(),
            actions: self.actions.len(),
            edges: self.actions.values().map(FuzzyRelation::nonzero_count).sum(),
            image_finite: true,
            witnessed: true,
        }
    }

    /// Every value occurring in a proposition or action, in first-occurrence
    /// order.
    pub fn values(&self) -> Vec<LatticeValue> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let all = self
            .props
            .values()
            .flat_map(|s| s.values().iter())
            .chain(self.actions.values().flat_map(|r| (0..self.len()).flat_map(move |i| r.row(i).iter())));
        for v in all {
            if seen.insert(v.clone()) {
                out.push(v.clone());
            }
        }
        out
    }

    pub fn evaluator(&self) -> Evaluator<'_> {
        Evaluator::new(self)
    }

    /// `φ` at every state, in domain order.
    pub fn eval_formula(&self, phi: &Formula) -> Result<Vec<LatticeValue>, ModelError> {
        Ok(self.evaluator().formula(phi)?.as_ref().clone())
    }

    /// `φ` at the named state.
    pub fn eval_formula_at(&self, phi: &Formula, state: &str) -> Result<LatticeValue, ModelError> {
        let i = self.domain.index_of(state)?;
        Ok(self.evaluator().formula(phi)?[i].clone())
    }

    pub fn eval_program(&self, alpha: &Program) -> Result<FuzzyRelation, ModelError> {
        Ok(self.evaluator().program(alpha)?.as_ref().clone())
    }
}

/// Brings two models to a common signature: each gains, as constantly 0,
/// the propositions and actions only the other one has.
pub fn align_signatures(m: &KripkeModel, n: &KripkeModel) -> Result<(KripkeModel, KripkeModel), ModelError> {
    if m.lattice() != n.lattice() {
        return Err(ModelError::LatticeMismatch(m.lattice().name(), n.lattice().name()));
    }
    let (mp, ma) = m.signature();
    let (np, na) = n.signature();
    let props: BTreeSet<String> = mp.union(&np).cloned().collect();
    let actions: BTreeSet<String> = ma.union(&na).cloned().collect();
    Ok((m.extend_signature(&props, &actions), n.extend_signature(&props, &actions)))
}

/// Memoizing evaluator over one model. Subformula values and subprogram
/// relations are computed once per evaluator.
pub struct Evaluator<'m> {
    model: &'m KripkeModel,
    formulas: HashMap<Formula, Arc<Vec<LatticeValue>>>,
    programs: HashMap<Program, Arc<FuzzyRelation>>,
}

impl<'m> Evaluator<'m> {
    pub fn new(model: &'m KripkeModel) -> Self {
        Evaluator { model, formulas: HashMap::new(), programs: HashMap::new() }
    }

    pub fn model(&self) -> &'m KripkeModel {
        self.model
    }

    /// Values of `φ` at every state.
    pub fn formula(&mut self, phi: &Formula) -> Result<Arc<Vec<LatticeValue>>, ModelError> {
        if let Some(v) = self.formulas.get(phi) {
            return Ok(v.clone());
        }
        let v = Arc::new(self.compute_formula(phi)?);
        self.formulas.insert(phi.clone(), v.clone());
        Ok(v)
    }

    fn pointwise<F>(&mut self, a: &Formula, b: &Formula, f: F) -> Result<Vec<LatticeValue>, ModelError>
    where
        F: Fn(&Lattice, &LatticeValue, &LatticeValue) -> Result<LatticeValue, LatticeError>,
    {
        let l = self.model.lattice();
        let va = self.formula(a)?;
        let vb = self.formula(b)?;
        Ok(va.iter().zip(vb.iter()).map(|(x, y)| f(l, x, y)).collect::<Result<_, _>>()?)
    }

    fn map<F>(&mut self, a: &Formula, f: F) -> Result<Vec<LatticeValue>, ModelError>
    where
        F: Fn(&Lattice, &LatticeValue) -> Result<LatticeValue, LatticeError>,
    {
        let l = self.model.lattice();
        let va = self.formula(a)?;
        Ok(va.iter().map(|x| f(l, x)).collect::<Result<_, _>>()?)
    }

    fn compute_formula(&mut self, phi: &Formula) -> Result<Vec<LatticeValue>, ModelError> {
        let l = self.model.lattice();
        let n = self.model.len();
        match phi {
            Formula::Const(a) => {
                l.check(a)?;
                Ok(vec![a.clone(); n])
            }
            Formula::Prop(p) => Ok(self.model.prop(p)?.values().to_vec()),
            Formula::And(a, b) => self.pointwise(a, b, Lattice::meet),
            Formula::Or(a, b) => self.pointwise(a, b, Lattice::join),
            Formula::Implies(a, b) => self.pointwise(a, b, Lattice::residuum),
            Formula::ImpliesFromConst(c, f) => {
                l.check(c)?;
                self.map(f, |l, x| l.residuum(c, x))
            }
            Formula::ImpliesToConst(f, c) => {
                l.check(c)?;
                self.map(f, |l, x| l.residuum(x, c))
            }
            Formula::Not(f) => self.map(f, |l, x| l.residuum(x, &l.zero())),
            Formula::Box(alpha, f) => {
                let rel = self.program(alpha)?;
                let vals = self.formula(f)?;
                (0..n)
                    .map(|x| {
                        let mut acc = l.one();
                        for (y, a) in rel.row(x).iter().enumerate() {
                            if !l.is_zero(a) {
                                acc = l.meet(&acc, &l.residuum(a, &vals[y])?)?;
                            }
                        }
                        Ok(acc)
                    })
                    .collect()
            }
            Formula::Diamond(alpha, f) => {
                let rel = self.program(alpha)?;
                let vals = self.formula(f)?;
                (0..n)
                    .map(|x| {
                        let mut acc = l.zero();
                        for (y, a) in rel.row(x).iter().enumerate() {
                            if !l.is_zero(a) {
                                acc = l.join(&acc, &l.tnorm(a, &vals[y])?)?;
                            }
                        }
                        Ok(acc)
                    })
                    .collect()
            }
        }
    }

    /// The relation denoted by `α`.
    pub fn program(&mut self, alpha: &Program) -> Result<Arc<FuzzyRelation>, ModelError> {
        if let Some(r) = self.programs.get(alpha) {
            return Ok(r.clone());
        }
        let r = Arc::new(self.compute_program(alpha)?);
        self.programs.insert(alpha.clone(), r.clone());
        Ok(r)
    }

    fn compute_program(&mut self, alpha: &Program) -> Result<FuzzyRelation, ModelError> {
        let m = self.model;
        match alpha {
            Program::Atomic(a) => Ok(m.action(a)?.clone()),
            Program::Test(phi) => {
                let vals = self.formula(phi)?;
                let set = FuzzySet::from_values(m.lattice(), m.domain(), vals.as_ref().clone())?;
                Ok(FuzzyRelation::diagonal(&set))
            }
            Program::Union(a, b) => Ok(self.program(a)?.join(&*self.program(b)?)?),
            Program::Compose(a, b) => Ok(self.program(a)?.compose(&*self.program(b)?)?),
            Program::Star(a) => {
                let step = self.program(a)?;
                Ok(star(&step)?)
            }
        }
    }
}

/// Reflexive-transitive closure under `⊗`: the supremum over all paths of
/// the `⊗`-product of their edge values, with the empty path valued 1.
///
/// Since `x ⊗ y ≤ x ∧ y`, a path that repeats a state is dominated by the
/// path with the cycle removed, so paths of length below `|Δ|` suffice and
/// the iteration `R ← I ∨ R ∘ A` is stable after at most `|Δ|` rounds.
pub fn star(step: &FuzzyRelation) -> Result<FuzzyRelation, RelationError> {
    let identity = FuzzyRelation::identity(step.lattice(), step.rows());
    let mut acc = identity.clone();
    for _ in 0..step.rows().len() {
        let next = identity.join(&acc.compose(step)?)?;
        if next == acc {
            break;
        }
        acc = next;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    const EXAMPLE: &str = r#"{
        "states": ["u", "v", "w"],
        "props": { "p": {"u": "9/10", "v": "1/2", "w": "4/5"} },
        "actions": { "r": [["u", "v", "3/5"], ["u", "w", "7/10"]] }
    }"#;

    fn eval(lattice: Lattice, text: &str) -> String {
        let m = KripkeModel::from_json(EXAMPLE, Some(&lattice), None).unwrap();
        let phi = parse_formula(text, &lattice).unwrap();
        lattice.format_value(&m.eval_formula_at(&phi, "u").unwrap())
    }

    #[test]
    fn diamond_and_box_values() {
        assert_eq!(eval(Lattice::godel(), "<r>p"), "7/10");
        assert_eq!(eval(Lattice::lukasiewicz(), "<r>p"), "1/2");
        assert_eq!(eval(Lattice::product(), "<r>p"), "14/25");
        assert_eq!(eval(Lattice::godel(), "[r]p"), "1/2");
        assert_eq!(eval(Lattice::lukasiewicz(), "[r]p"), "9/10");
        assert_eq!(eval(Lattice::product(), "[r]p"), "5/6");
    }

    #[test]
    fn star_relation_on_acyclic_model() {
        let l = Lattice::godel();
        let m = KripkeModel::from_json(EXAMPLE, Some(&l), None).unwrap();
        let s = m.eval_program(&Program::star(Program::atomic("r"))).unwrap();
        let expect = [("u", "u", "1"), ("v", "v", "1"), ("w", "w", "1"), ("u", "v", "3/5"), ("u", "w", "7/10")];
        assert_eq!(s.nonzero_count(), expect.len());
        for (a, b, v) in expect {
            assert_eq!(l.format_value(s.get_named(a, b).unwrap()), v);
        }
    }

    #[test]
    fn test_program_is_diagonal() {
        let l = Lattice::godel();
        let m = KripkeModel::from_json(EXAMPLE, Some(&l), None).unwrap();
        let t = m.eval_program(&Program::test(Formula::prop("p"))).unwrap();
        assert_eq!(t.nonzero_count(), 3);
        assert_eq!(l.format_value(t.get_named("v", "v").unwrap()), "1/2");
    }

    #[test]
    fn lattice_precedence() {
        let doc = r#"{"lattice": "product", "states": ["x"]}"#;
        let g = Lattice::godel();
        assert_eq!(KripkeModel::from_json(doc, Some(&g), None).unwrap().lattice(), &g);
        assert_eq!(KripkeModel::from_json(doc, None, Some(&g)).unwrap().lattice(), &Lattice::product());
        let bare = r#"{"states": ["x"]}"#;
        assert_eq!(KripkeModel::from_json(bare, None, Some(&g)).unwrap().lattice(), &g);
        assert_eq!(KripkeModel::from_json(bare, None, None), Err(ModelError::NoLattice));
    }

    #[test]
    fn validation_errors() {
        let g = Lattice::godel();
        let dangling = r#"{"states": ["x"], "actions": {"r": [["x", "y", "1"]]}}"#;
        assert!(matches!(
            KripkeModel::from_json(dangling, Some(&g), None),
            Err(ModelError::Relation(RelationError::UnknownState(s))) if s == "y"
        ));
        let out = r#"{"states": ["x"], "props": {"p": {"x": "3/2"}}}"#;
        assert!(matches!(KripkeModel::from_json(out, Some(&g), None), Err(ModelError::Lattice(_))));
        let unknown = r#"{"lattice": "boolean", "states": ["x"]}"#;
        assert!(matches!(
            KripkeModel::from_json(unknown, None, None),
            Err(ModelError::Lattice(LatticeError::UnknownLattice(_)))
        ));
        assert_eq!(KripkeModel::from_json(r#"{"states": []}"#, Some(&g), None), Err(ModelError::EmptyDomain));
        let m = KripkeModel::from_json(r#"{"states": ["x"]}"#, Some(&g), None).unwrap();
        assert_eq!(m.eval_formula(&Formula::prop("q")), Err(ModelError::UnknownProp("q".into())));
    }

    #[test]
    fn stats() {
        let g = Lattice::godel();
        let m = KripkeModel::from_json(EXAMPLE, Some(&g), None).unwrap();
        assert_eq!(m.stats().states, 3);
        assert_eq!(m.stats().edges, 2);
        let k2 = r#"{"states": ["a", "b"], "actions": {"r": [["a","a",1],["a","b",1],["b","a",1],["b","b",1]]}}"#;
        let m = KripkeModel::from_json(k2, Some(&g), None).unwrap();
        assert_eq!(m.stats().edges, 4);
        assert!(m.stats().image_finite);
    }

    #[test]
    fn document_round_trip() {
        let l = Lattice::lukasiewicz();
        let m = KripkeModel::from_json(EXAMPLE, Some(&l), None).unwrap();
        let text = serde_json::to_string(&m.to_doc()).unwrap();
        assert_eq!(KripkeModel::from_json(&text, None, None).unwrap(), m);
    }
}
