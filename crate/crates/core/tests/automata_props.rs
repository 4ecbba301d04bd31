use fuzzbis::automata::{
    check_forward_bisimulation, correspondence_check, greatest_forward_bisimulation, to_kripke, Direction,
    FuzzyAutomaton,
};
use fuzzbis::bisim::SolverConfig;
use fuzzbis::gen::{random_automaton, random_relation};
use fuzzbis::lattice::{Lattice, LatticeValue};
use fuzzbis::relation::FuzzyRelation;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn alphabet(rng: &mut StdRng) -> Vec<String> {
    let k = rng.gen_range(1..=2);
    ["x", "y"][..k].iter().map(|s| s.to_string()).collect()
}

fn automata(l: &Lattice, rng: &mut StdRng) -> (FuzzyAutomaton, FuzzyAutomaton) {
    let sigma = alphabet(rng);
    (random_automaton(l, 3, &sigma, 0.4, "a", rng), random_automaton(l, 3, &sigma, 0.4, "b", rng))
}

/// Candidate relations: the greatest solution of the transition and
/// terminal conditions, parts of it, and random relations.
fn candidates(a: &FuzzyAutomaton, b: &FuzzyAutomaton, rng: &mut StdRng) -> Vec<FuzzyRelation> {
    let l = a.lattice();
    let best = greatest_forward_bisimulation(a, b, &SolverConfig::default()).unwrap().solver.relation;
    let mut out = vec![best.clone(), FuzzyRelation::zeros(l, a.states(), b.states())];
    for _ in 0..3 {
        let r = random_relation(l, a.states(), b.states(), 0.6, rng);
        out.push(best.meet(&r).unwrap());
        out.push(r);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn correspondence_in_both_directions(seed in any::<u64>(), chain in any::<bool>()) {
        let l = if chain { Lattice::chain(3).unwrap() } else { Lattice::godel() };
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, b) = automata(&l, &mut rng);
        for z in candidates(&a, &b, &mut rng) {
            let r = correspondence_check(&a, &b, &z).unwrap();
            prop_assert!(r.kripke_to_automata != Direction::Violated);
            prop_assert!(r.automata_to_kripke != Direction::Violated);
            prop_assert!(r.automata_to_kripke != Direction::NotCovered);
        }
    }

    #[test]
    fn solver_output_meets_transition_and_terminal_conditions(seed in any::<u64>(), li in 0usize..4) {
        let l = [Lattice::godel(), Lattice::lukasiewicz(), Lattice::product(), Lattice::chain(4).unwrap()][li].clone();
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, b) = automata(&l, &mut rng);
        let out = greatest_forward_bisimulation(&a, &b, &SolverConfig::default()).unwrap();
        prop_assert!(out.solver.certified);
        let report = check_forward_bisimulation(&a, &b, out.relation()).unwrap();
        prop_assert!(report.violations.iter().all(|v| v.condition.starts_with("initial")));
        prop_assert_eq!(report.holds, out.exists());
    }

    #[test]
    fn corresponding_model_counts(seed in any::<u64>()) {
        let l = Lattice::lukasiewicz();
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, _) = automata(&l, &mut rng);
        let m = to_kripke(&a).unwrap().model;
        let per_letter = a.initial().support_size() + a.terminal().support_size();
        prop_assert_eq!(m.len(), a.states().len() + 2);
        prop_assert_eq!(m.stats().edges, a.transition_count() + a.alphabet().len() * per_letter);
    }
}

/// Levels 0, 1/2, 1 of the 3-chain as 0, 1, 2.
fn level(l: &Lattice, v: &LatticeValue) -> u8 {
    l.elements().unwrap().iter().position(|e| e == v).unwrap() as u8
}

fn table(l: &Lattice, r: &FuzzyRelation) -> Vec<Vec<u8>> {
    (0..r.rows().len()).map(|i| r.row(i).iter().map(|v| level(l, v)).collect()).collect()
}

/// The six forward conditions evaluated directly with Gödel operations.
fn forward_holds(a: &FuzzyAutomaton, b: &FuzzyAutomaton, z: &[Vec<u8>]) -> bool {
    let l = a.lattice();
    let lv = |s: &fuzzbis::relation::FuzzySet| -> Vec<u8> { s.values().iter().map(|v| level(l, v)).collect() };
    let (sa, sb, ta, tb) = (lv(a.initial()), lv(b.initial()), lv(a.terminal()), lv(b.terminal()));
    let (n, np) = (sa.len(), sb.len());
    for x in 0..n {
        if sa[x] > (0..np).map(|y| sb[y].min(z[x][y])).max().unwrap() {
            return false;
        }
    }
    for y in 0..np {
        if sb[y] > (0..n).map(|x| sa[x].min(z[x][y])).max().unwrap() {
            return false;
        }
        if (0..n).map(|x| z[x][y].min(ta[x])).max().unwrap() > tb[y] {
            return false;
        }
    }
    for x in 0..n {
        if (0..np).map(|y| z[x][y].min(tb[y])).max().unwrap() > ta[x] {
            return false;
        }
    }
    for letter in a.alphabet() {
        let da = table(l, a.transition(letter).unwrap());
        let db = table(l, b.transition(letter).unwrap());
        for xp in 0..np {
            for y in 0..n {
                let lhs = (0..n).map(|x| z[x][xp].min(da[x][y])).max().unwrap();
                let rhs = (0..np).map(|yp| db[xp][yp].min(z[y][yp])).max().unwrap();
                if lhs > rhs {
                    return false;
                }
            }
        }
        for x in 0..n {
            for yp in 0..np {
                let lhs = (0..np).map(|xp| z[x][xp].min(db[xp][yp])).max().unwrap();
                let rhs = (0..n).map(|y| da[x][y].min(z[y][yp])).max().unwrap();
                if lhs > rhs {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn brute_force_oracle_for_forward_bisimulation() {
    let l = Lattice::chain(3).unwrap();
    let mut rng = StdRng::seed_from_u64(17);
    let mut found = 0;
    for _ in 0..80 {
        let sigma = alphabet(&mut rng);
        let a = random_automaton(&l, 2, &sigma, 0.5, "a", &mut rng);
        let b = random_automaton(&l, 2, &sigma, 0.5, "b", &mut rng);
        let (n, np) = (a.states().len(), b.states().len());
        let mut best: Option<Vec<Vec<u8>>> = None;
        for code in 0..3usize.pow((n * np) as u32) {
            let mut k = code;
            let z: Vec<Vec<u8>> = (0..n)
                .map(|_| {
                    (0..np)
                        .map(|_| {
                            let v = (k % 3) as u8;
                            k /= 3;
                            v
                        })
                        .collect()
                })
                .collect();
            if forward_holds(&a, &b, &z) {
                let acc = best.get_or_insert_with(|| vec![vec![0; np]; n]);
                for i in 0..n {
                    for j in 0..np {
                        acc[i][j] = acc[i][j].max(z[i][j]);
                    }
                }
            }
        }
        let out = greatest_forward_bisimulation(&a, &b, &SolverConfig::default()).unwrap();
        assert_eq!(out.exists(), best.is_some());
        if let Some(best) = best {
            found += 1;
            assert_eq!(table(&l, out.relation()), best);
        }
    }
    assert!(found > 10);
}
