use fuzzbis::bisim::{
    check_bisimulation, check_relational, closure_check, greatest_bisimulation, harmony_bound, refine_step,
    SolverConfig,
};
use fuzzbis::gen::{perturbed, random_model, random_relation, ModelShape};
use fuzzbis::lattice::{Lattice, LatticeValue};
use fuzzbis::model::KripkeModel;
use fuzzbis::relation::FuzzyRelation;
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

/// Levels of the 3-chain: 0, 1/2, 1 as 0, 1, 2; Gödel operations.
fn level(l: &Lattice, v: &LatticeValue) -> u8 {
    l.elements().unwrap().iter().position(|e| e == v).unwrap() as u8
}

fn imp(a: u8, b: u8) -> u8 {
    if a <= b {
        2
    } else {
        b
    }
}

fn equiv(a: u8, b: u8) -> u8 {
    imp(a, b).min(imp(b, a))
}

/// Direct check of the three defining conditions on level tables.
type Table = Vec<Vec<u8>>;

fn is_bisimulation(props: &[(Vec<u8>, Vec<u8>)], actions: &[(Table, Table)], z: &[Vec<u8>]) -> bool {
    let (n, np) = (z.len(), z[0].len());
    for x in 0..n {
        for xp in 0..np {
            if props.iter().any(|(p, q)| z[x][xp] > equiv(p[x], q[xp])) {
                return false;
            }
            for (r, rp) in actions {
                for y in 0..n {
                    let need = z[x][xp].min(r[x][y]);
                    if !(0..np).any(|yp| need <= rp[xp][yp].min(z[y][yp])) {
                        return false;
                    }
                }
                for yp in 0..np {
                    let need = z[x][xp].min(rp[xp][yp]);
                    if !(0..n).any(|y| need <= r[x][y].min(z[y][yp])) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Pointwise supremum of every relation passing the direct check.
fn brute_force_greatest(m: &KripkeModel, n: &KripkeModel) -> Vec<Vec<u8>> {
    let l = m.lattice();
    let props: Vec<_> = m
        .props()
        .iter()
        .map(|(p, s)| {
            let t = &n.props()[p];
            (s.values().iter().map(|v| level(l, v)).collect(), t.values().iter().map(|v| level(l, v)).collect())
        })
        .collect();
    let table = |r: &FuzzyRelation| -> Vec<Vec<u8>> {
        (0..r.rows().len()).map(|i| r.row(i).iter().map(|v| level(l, v)).collect()).collect()
    };
    let actions: Vec<_> = m.actions().iter().map(|(a, r)| (table(r), table(&n.actions()[a]))).collect();
    let (rows, cols) = (m.len(), n.len());
    let cells = rows * cols;
    let mut best = vec![vec![0u8; cols]; rows];
    for code in 0..3usize.pow(cells as u32) {
        let mut k = code;
        let z: Vec<Vec<u8>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        let v = (k % 3) as u8;
                        k /= 3;
                        v
                    })
                    .collect()
            })
            .collect();
        if is_bisimulation(&props, &actions, &z) {
            for i in 0..rows {
                for j in 0..cols {
                    best[i][j] = best[i][j].max(z[i][j]);
                }
            }
        }
    }
    best
}

#[test]
fn brute_force_oracle_on_three_chain() {
    let l = Lattice::chain(3).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..60 {
        let (m, n) = pair(&l, 2, &mut rng);
        let solved = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap();
        assert!(solved.exact);
        let expected = brute_force_greatest(&m, &n);
        for (i, row) in expected.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(level(&l, solved.relation.get(i, j)), v);
            }
        }
    }
}

fn lattices() -> Vec<Lattice> {
    vec![Lattice::godel(), Lattice::lukasiewicz(), Lattice::product(), Lattice::chain(4).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solver_output_is_a_bisimulation(seed in any::<u64>(), li in 0usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let (m, n) = pair(l, 4, &mut rng);
        let out = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap();
        prop_assert!(out.certified);
        prop_assert!(check_bisimulation(&m, &n, &out.relation).unwrap().holds);
        prop_assert!(check_relational(&m, &n, &out.relation).unwrap().holds);
    }

    #[test]
    fn iteration_is_antitone(seed in any::<u64>(), li in 0usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let (m, n) = pair(l, 4, &mut rng);
        let mut z = harmony_bound(&m, &n).unwrap();
        for _ in 0..12 {
            let next = refine_step(&m, &n, &z).unwrap();
            prop_assert!(next.leq(&z).unwrap());
            if next == z {
                break;
            }
            z = next;
        }
    }

    #[test]
    fn solver_dominates_other_bisimulations(seed in any::<u64>(), li in 0usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let (m, n) = pair(l, 3, &mut rng);
        let best = greatest_bisimulation(&m, &n, &SolverConfig::default()).unwrap().relation;
        // Random relations below the harmony bound, refined until they pass.
        for _ in 0..8 {
            let z = random_relation(l, m.domain(), n.domain(), 0.7, &mut rng);
            if check_bisimulation(&m, &n, &z).unwrap().holds {
                prop_assert!(z.leq(&best).unwrap());
            }
            let shrunk = best.meet(&z).unwrap();
            if check_bisimulation(&m, &n, &shrunk).unwrap().holds {
                prop_assert!(shrunk.leq(&best).unwrap());
            }
        }
    }

    #[test]
    fn auto_bisimulation_is_fuzzy_equivalence(seed in any::<u64>(), li in 0usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_model(l, &ModelShape::small(4), "x", &mut rng);
        let z = greatest_bisimulation(&m, &m, &SolverConfig::default()).unwrap().relation;
        prop_assert!(z.classify().unwrap().equivalence);
    }

    #[test]
    fn closure_under_converse_composition_and_sup(seed in any::<u64>(), li in 0usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let (m, m1) = pair(l, 3, &mut rng);
        let m2 = perturbed(&m1, "w", rng.gen_range(0..2), &mut rng);
        let cfg = SolverConfig::default();
        let z1 = greatest_bisimulation(&m, &m1, &cfg).unwrap().relation;
        let z2 = greatest_bisimulation(&m1, &m2, &cfg).unwrap().relation;
        // Further bisimulations between m and m1: found at random, and
        // composites with auto-bisimulations of m.
        let auto = greatest_bisimulation(&m, &m, &cfg).unwrap().relation;
        let mut others = vec![FuzzyRelation::zeros(l, m.domain(), m1.domain()), auto.compose(&z1).unwrap()];
        for _ in 0..8 {
            let z = z1.meet(&random_relation(l, m.domain(), m1.domain(), 0.7, &mut rng)).unwrap();
            if check_bisimulation(&m, &m1, &z).unwrap().holds {
                others.push(z);
            }
        }
        let report = closure_check(&m, &m1, &m2, &z1, &z2, &others).unwrap();
        prop_assert!(report.holds());
    }
}
