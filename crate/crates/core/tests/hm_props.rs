use fuzzbis::bisim::{greatest_bisimulation, SolverConfig};
use fuzzbis::gen::{perturbed, random_formula, random_model, FormulaShape, ModelShape};
use fuzzbis::hm::{default_pool, hm_check, invariance_check, logical_distance, EnumerationBudget, Gating};
use fuzzbis::lattice::Lattice;
use fuzzbis::model::KripkeModel;
use fuzzbis::syntax::FragmentSpec;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn pair(l: &Lattice, max_states: usize, rng: &mut StdRng) -> (KripkeModel, KripkeModel) {
    let m = random_model(l, &ModelShape::small(max_states), "x", rng);
    let n = if rng.gen_bool(0.5) {
        let changes = rng.gen_range(0..3);
        perturbed(&m, "y", changes, rng)
    } else {
        random_model(l, &ModelShape::small(max_states), "y", rng)
    };
    (m, n)
}

/// The lattices with the constructors each may use under enforced gating.
fn legal() -> Vec<(Lattice, FragmentSpec)> {
    vec![
        (Lattice::godel(), FragmentSpec::FULL),
        (Lattice::lukasiewicz(), FragmentSpec::parse("->, ?").unwrap()),
        (Lattice::product(), FragmentSpec::parse("->, ?").unwrap()),
        (Lattice::chain(3).unwrap(), FragmentSpec::FULL),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn distance_is_antitone_and_bounds_the_solver(seed in any::<u64>(), li in 0usize..4) {
        let (l, _) = &legal()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let (m, n) = pair(l, 3, &mut rng);
        let budget = EnumerationBudget { max_depth: 2, constant_pool: default_pool(&m, &n, 0), max_formulas: Some(100_000) };
        let report = hm_check(&m, &n, &budget, &SolverConfig::default()).unwrap();
        prop_assert!(report.sound());
        for w in report.distance.levels.windows(2) {
            prop_assert!(w[1].distance.leq(&w[0].distance).unwrap());
        }
    }

    #[test]
    fn bisimulation_invariance_under_legal_gating(seed in any::<u64>(), li in 0usize..4) {
        let (l, fragment) = &legal()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let (m, n) = pair(l, 4, &mut rng);
        let z = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap().relation;
        let shape = FormulaShape {
            props: vec!["p".into(), "q".into()],
            actions: vec!["r".into()],
            max_depth: 3,
            fragment: *fragment,
        };
        for _ in 0..10 {
            let f = random_formula(l, &shape, &mut rng);
            let report = invariance_check(&m, &n, &z, &f, fragment, Gating::Enforce).unwrap();
            prop_assert!(report.holds, "{}", f.to_text(l));
        }
    }
}

#[test]
fn godel_distance_closes_at_depth_three() {
    let l = Lattice::godel();
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..20 {
        let (m, n) = pair(&l, 3, &mut rng);
        let report = hm_check(&m, &n, &EnumerationBudget::for_models(&m, &n, 3), &SolverConfig::default()).unwrap();
        assert!(report.sound() && report.closed);
    }
}

#[test]
fn self_distance_dominates_the_auto_bisimulation() {
    let l = Lattice::chain(4).unwrap();
    let mut rng = StdRng::seed_from_u64(2);
    let m = random_model(&l, &ModelShape::small(3), "x", &mut rng);
    let d = logical_distance(&m, &m, &EnumerationBudget::for_models(&m, &m, 2)).unwrap();
    let z = greatest_bisimulation(&m, &m, &SolverConfig::default()).unwrap().relation;
    assert!(z.leq(&d.last().distance).unwrap());
    for i in 0..m.len() {
        assert!(l.is_one(d.last().distance.get(i, i)));
    }
}
