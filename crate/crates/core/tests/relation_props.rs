use std::sync::Arc;

use fuzzbis::gen::random_relation;
use fuzzbis::lattice::Lattice;
use fuzzbis::relation::{Domain, FuzzyRelation};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn lattices() -> Vec<Lattice> {
    vec![Lattice::godel(), Lattice::lukasiewicz(), Lattice::product(), Lattice::chain(3).unwrap()]
}

fn dom(prefix: &str, n: usize) -> Arc<Domain> {
    Domain::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

/// Raises each entry of `r` to a random value at least as large.
fn raise(r: &FuzzyRelation, rng: &mut StdRng) -> FuzzyRelation {
    let other = random_relation(r.lattice(), r.rows(), r.cols(), 0.5, rng);
    r.join(&other).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn composition_is_associative(seed in any::<u64>(), li in 0usize..4, a in 1usize..4, b in 1usize..4, c in 1usize..4, d in 1usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let (da, db, dc, dd) = (dom("a", a), dom("b", b), dom("c", c), dom("d", d));
        let r = random_relation(l, &da, &db, 0.6, &mut rng);
        let s = random_relation(l, &db, &dc, 0.6, &mut rng);
        let t = random_relation(l, &dc, &dd, 0.6, &mut rng);
        let left = r.compose(&s).unwrap().compose(&t).unwrap();
        let right = r.compose(&s.compose(&t).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn converse_reverses_composition(seed in any::<u64>(), li in 0usize..4, a in 1usize..4, b in 1usize..4, c in 1usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let r = random_relation(l, &dom("a", a), &dom("b", b), 0.6, &mut rng);
        let s = random_relation(l, &dom("b", b), &dom("c", c), 0.6, &mut rng);
        prop_assert_eq!(r.compose(&s).unwrap().converse(), s.converse().compose(&r.converse()).unwrap());
    }

    #[test]
    fn composition_is_monotone(seed in any::<u64>(), li in 0usize..4, a in 1usize..4, b in 1usize..4, c in 1usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let r = random_relation(l, &dom("a", a), &dom("b", b), 0.6, &mut rng);
        let r2 = raise(&r, &mut rng);
        let s = random_relation(l, &dom("b", b), &dom("c", c), 0.6, &mut rng);
        prop_assert!(r.leq(&r2).unwrap());
        prop_assert!(r.compose(&s).unwrap().leq(&r2.compose(&s).unwrap()).unwrap());
        prop_assert!(s.converse().compose(&r.converse()).unwrap().leq(&s.converse().compose(&r2.converse()).unwrap()).unwrap());
    }

    #[test]
    fn identity_is_neutral_and_join_meet_commute(seed in any::<u64>(), li in 0usize..4, a in 1usize..4, b in 1usize..4) {
        let l = &lattices()[li];
        let mut rng = StdRng::seed_from_u64(seed);
        let (da, db) = (dom("a", a), dom("b", b));
        let r = random_relation(l, &da, &db, 0.6, &mut rng);
        let s = random_relation(l, &da, &db, 0.6, &mut rng);
        prop_assert_eq!(FuzzyRelation::identity(l, &da).compose(&r).unwrap(), r.clone());
        prop_assert_eq!(r.compose(&FuzzyRelation::identity(l, &db)).unwrap(), r.clone());
        prop_assert_eq!(r.join(&s).unwrap(), s.join(&r).unwrap());
        prop_assert_eq!(r.meet(&s).unwrap(), s.meet(&r).unwrap());
        prop_assert!(r.meet(&s).unwrap().leq(&r.join(&s).unwrap()).unwrap());
    }
}
