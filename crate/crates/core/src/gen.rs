//! Seeded random models, formulas, programs and automata for property
//! tests and the batch suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automata::FuzzyAutomaton;
use crate::lattice::{Lattice, LatticeValue};
use crate::model::KripkeModel;
use crate::relation::{Domain, FuzzyRelation, FuzzySet};
use crate::syntax::{Formula, FragmentSpec, Program};

/// Values drawn by the generators: the whole carrier of a finite lattice,
/// tenths on the unit interval.
pub fn value_pool(l: &Lattice) -> Vec<LatticeValue> {
    match l.elements() {
        Some(all) => all,
        None => (0..=10).map(|k| l.ratio(k, 10).expect("tenths lie in [0, 1]")).collect(),
    }
}

/// Shape of generated models.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelShape {
    pub min_states: usize,
    pub max_states: usize,
    pub props: Vec<String>,
    pub actions: Vec<String>,
    /// Probability that a given action entry is non-zero.
    pub density: f64,
}

impl ModelShape {
    pub fn small(max_states: usize) -> Self {
        ModelShape {
            min_states: 1,
            max_states,
            props: vec!["p".into(), "q".into()],
            actions: vec!["r".into()],
            density: 0.4,
        }
    }
}

fn pick(pool: &[LatticeValue], rng: &mut impl Rng) -> LatticeValue {
    pool.choose(rng).expect("value pool is never empty").clone()
}

fn sparse(pool: &[LatticeValue], density: f64, l: &Lattice, rng: &mut impl Rng) -> LatticeValue {
    if rng.gen_bool(density) {
        pick(pool, rng)
    } else {
        l.zero()
    }
}

/// A random model with states named `{prefix}0`, `{prefix}1`, ….
pub fn random_model(l: &Lattice, shape: &ModelShape, prefix: &str, rng: &mut impl Rng) -> KripkeModel {
    let n = rng.gen_range(shape.min_states..=shape.max_states);
    let pool = value_pool(l);
    let mut m = KripkeModel::with_states(l, (0..n).map(|i| format!("{prefix}{i}"))).expect("at least one state");
    let domain = m.domain().clone();
    for p in &shape.props {
        let values = (0..n).map(|_| pick(&pool, rng)).collect();
        m.insert_prop(p.clone(), FuzzySet::from_values(l, &domain, values).expect("sized to the domain"))
            .expect("fresh proposition");
    }
    for a in &shape.actions {
        let rel = FuzzyRelation::from_fn(l, &domain, &domain, |_, _| Ok(sparse(&pool, shape.density, l, rng)))
            .expect("values come from the carrier");
        m.insert_action(a.clone(), rel).expect("fresh action");
    }
    m
}

/// A copy of `m` with states renamed `{prefix}i` and `changes` random entries
/// overwritten, giving pairs that are close but usually not equal.
pub fn perturbed(m: &KripkeModel, prefix: &str, changes: usize, rng: &mut impl Rng) -> KripkeModel {
    let l = m.lattice();
    let pool = value_pool(l);
    let n = m.len();
    let domain = Domain::new((0..n).map(|i| format!("{prefix}{i}"))).expect("distinct names");
    let mut out = KripkeModel::new(l, domain.clone()).expect("non-empty");
    let mut props: Vec<(String, Vec<LatticeValue>)> =
        m.props().iter().map(|(p, s)| (p.clone(), s.values().to_vec())).collect();
    let mut actions: Vec<(String, Vec<Vec<LatticeValue>>)> =
        m.actions().iter().map(|(a, r)| (a.clone(), (0..n).map(|i| r.row(i).to_vec()).collect())).collect();
    for _ in 0..changes {
        let to_prop = actions.is_empty() || (!props.is_empty() && rng.gen_bool(0.5));
        if to_prop && !props.is_empty() {
            let k = rng.gen_range(0..props.len());
            props[k].1[rng.gen_range(0..n)] = pick(&pool, rng);
        } else if !actions.is_empty() {
            let k = rng.gen_range(0..actions.len());
            actions[k].1[rng.gen_range(0..n)][rng.gen_range(0..n)] = pick(&pool, rng);
        }
    }
    for (p, values) in props {
        out.insert_prop(p, FuzzySet::from_values(l, &domain, values).expect("sized")).expect("fresh");
    }
    for (a, rows) in actions {
        let rel = FuzzyRelation::from_fn(l, &domain, &domain, |i, j| Ok(rows[i][j].clone())).expect("carrier values");
        out.insert_action(a, rel).expect("fresh");
    }
    out
}

/// Vocabulary for generated formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaShape {
    pub props: Vec<String>,
    pub actions: Vec<String>,
    pub max_depth: usize,
    pub fragment: FragmentSpec,
}

/// A random formula of depth at most `shape.max_depth` using only the
/// constructors `shape.fragment` allows.
pub fn random_formula(l: &Lattice, shape: &FormulaShape, rng: &mut impl Rng) -> Formula {
    let pool = value_pool(l);
    formula_at(l, shape, &pool, shape.max_depth, rng)
}

fn leaf(shape: &FormulaShape, pool: &[LatticeValue], rng: &mut impl Rng) -> Formula {
    if shape.props.is_empty() || rng.gen_bool(0.2) {
        Formula::constant(pick(pool, rng))
    } else {
        Formula::prop(shape.props.choose(rng).expect("non-empty").clone())
    }
}

fn formula_at(l: &Lattice, shape: &FormulaShape, pool: &[LatticeValue], depth: usize, rng: &mut impl Rng) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return leaf(shape, pool, rng);
    }
    let d = depth - 1;
    let frag = &shape.fragment;
    loop {
        let f = match rng.gen_range(0..9) {
            0 => Formula::and(formula_at(l, shape, pool, d, rng), formula_at(l, shape, pool, d, rng)),
            1 => Formula::or(formula_at(l, shape, pool, d, rng), formula_at(l, shape, pool, d, rng)),
            2 if !frag.no_implication => {
                let a = formula_at(l, shape, pool, d, rng);
                let b = formula_at(l, shape, pool, d, rng);
                if matches!(a, Formula::Const(_)) || matches!(b, Formula::Const(_)) {
                    continue;
                }
                Formula::implies(a, b)
            }
            3 => Formula::from_const(pick(pool, rng), formula_at(l, shape, pool, d, rng)),
            4 => Formula::to_const(formula_at(l, shape, pool, d, rng), pick(pool, rng)),
            5 => Formula::not(formula_at(l, shape, pool, d, rng)),
            6 | 7 if d > 0 || !shape.actions.is_empty() => {
                let Some(p) = program_at(l, shape, pool, d, rng) else { continue };
                let body = formula_at(l, shape, pool, d, rng);
                if rng.gen_bool(0.5) {
                    Formula::boxed(p, body)
                } else {
                    Formula::diamond(p, body)
                }
            }
            8 => leaf(shape, pool, rng),
            _ => continue,
        };
        return f;
    }
}

fn program_at(
    l: &Lattice,
    shape: &FormulaShape,
    pool: &[LatticeValue],
    depth: usize,
    rng: &mut impl Rng,
) -> Option<Program> {
    let atomic = |rng: &mut _| shape.actions.choose(rng).map(|a| Program::atomic(a.clone()));
    let test_ok = !shape.fragment.no_test;
    if depth == 0 {
        return if shape.actions.is_empty() {
            test_ok.then(|| Program::test(leaf(shape, pool, rng)))
        } else {
            atomic(rng)
        };
    }
    let d = depth - 1;
    for _ in 0..16 {
        let p = match rng.gen_range(0..6) {
            0 | 1 => atomic(rng),
            2 if !shape.fragment.no_union => {
                Program::union(program_at(l, shape, pool, d, rng)?, program_at(l, shape, pool, d, rng)?).into()
            }
            3 => Program::compose(program_at(l, shape, pool, d, rng)?, program_at(l, shape, pool, d, rng)?).into(),
            4 => Program::star(program_at(l, shape, pool, d, rng)?).into(),
            5 if test_ok => Program::test(formula_at(l, shape, pool, d, rng)).into(),
            _ => None,
        };
        if p.is_some() {
            return p;
        }
    }
    atomic(rng)
}

/// A random program of depth at most `shape.max_depth` in the fragment.
pub fn random_program(l: &Lattice, shape: &FormulaShape, rng: &mut impl Rng) -> Option<Program> {
    let pool = value_pool(l);
    program_at(l, shape, &pool, shape.max_depth, rng)
}

/// A random automaton with `1..=max_states` states named `{prefix}i`.
pub fn random_automaton(
    l: &Lattice,
    max_states: usize,
    alphabet: &[String],
    density: f64,
    prefix: &str,
    rng: &mut impl Rng,
) -> FuzzyAutomaton {
    let n = rng.gen_range(1..=max_states);
    let pool = value_pool(l);
    let states = Domain::new((0..n).map(|i| format!("{prefix}{i}"))).expect("distinct names");
    let mut a = FuzzyAutomaton::new(l, states.clone(), alphabet.iter().cloned()).expect("valid alphabet");
    for i in 0..n {
        let name = states.name(i);
        a.set_initial(name, sparse(&pool, 0.6, l, rng)).expect("own state");
        a.set_terminal(name, sparse(&pool, 0.6, l, rng)).expect("own state");
        for letter in alphabet {
            for j in 0..n {
                a.set_transition(name, letter, states.name(j), sparse(&pool, density, l, rng)).expect("own states");
            }
        }
    }
    a
}

/// A random relation between two domains with values from the pool.
pub fn random_relation(
    l: &Lattice,
    rows: &std::sync::Arc<Domain>,
    cols: &std::sync::Arc<Domain>,
    density: f64,
    rng: &mut impl Rng,
) -> FuzzyRelation {
    let pool = value_pool(l);
    FuzzyRelation::from_fn(l, rows, cols, |_, _| Ok(sparse(&pool, density, l, rng))).expect("carrier values")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn formulas_respect_fragment_and_depth() {
        let mut rng = StdRng::seed_from_u64(7);
        for l in [Lattice::godel(), Lattice::chain(3).unwrap()] {
            for fragment in [FragmentSpec::FULL, FragmentSpec::MINIMAL, FragmentSpec::parse("{→,?}").unwrap()] {
                let shape = FormulaShape {
                    props: vec!["p".into(), "q".into()],
                    actions: vec!["r".into()],
                    max_depth: 3,
                    fragment,
                };
                for _ in 0..200 {
                    let f = random_formula(&l, &shape, &mut rng);
                    assert!(f.depth() <= 3);
                    assert!(f.in_fragment(&fragment), "{}", f.to_text(&l));
                }
            }
        }
    }

    #[test]
    fn models_and_perturbations() {
        let mut rng = StdRng::seed_from_u64(1);
        let l = Lattice::product();
        let m = random_model(&l, &ModelShape::small(4), "s", &mut rng);
        assert!((1..=4).contains(&m.len()));
        let n = perturbed(&m, "t", 0, &mut rng);
        assert_eq!(n.signature(), m.signature());
        assert_eq!(n.props()["p"].values(), m.props()["p"].values());
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let l = Lattice::godel();
        let a = random_automaton(&l, 3, &["x".into()], 0.5, "a", &mut StdRng::seed_from_u64(3));
        let b = random_automaton(&l, 3, &["x".into()], 0.5, "a", &mut StdRng::seed_from_u64(3));
        assert_eq!(a, b);
    }
}
