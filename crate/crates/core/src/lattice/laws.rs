//! Algebraic laws of residuated lattices, checked on samples.
//!
//! Finite carriers are checked exhaustively over all 5-tuples; the unit
//! interval is checked on seeded random rational tuples.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::{Lattice, LatticeError, LatticeValue};

/// One sample point `(x, x', y, y', z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub x: LatticeValue,
    pub x2: LatticeValue,
    pub y: LatticeValue,
    pub y2: LatticeValue,
    pub z: LatticeValue,
}

type Check = fn(&Lattice, &Sample) -> Result<bool, LatticeError>;

/// Which lattices a law is expected to hold in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// Every residuated lattice.
    General,
    /// Lattices where `⊗` is `∧`.
    Heyting,
    /// Lattices whose t-norm distributes over binary meets.
    Continuous,
}

pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
    check: Check,
}

impl Law {
    pub fn holds(&self, l: &Lattice, s: &Sample) -> Result<bool, LatticeError> {
        (self.check)(l, s)
    }
}

macro_rules! law {
    ($id:literal, $stmt:literal, $scope:ident, |$l:ident, $s:ident| $body:expr) => {
        Law {
            id: $id,
            statement: $stmt,
            scope: Scope::$scope,
            check: {
                fn f($l: &Lattice, $s: &Sample) -> Result<bool, LatticeError> {
                    $body
                }
                f
            },
        }
    };
}

// Short helpers so the law bodies read like their statements.
fn t(l: &Lattice, a: &LatticeValue, b: &LatticeValue) -> Result<LatticeValue, LatticeError> {
    l.tnorm(a, b)
}
fn r(l: &Lattice, a: &LatticeValue, b: &LatticeValue) -> Result<LatticeValue, LatticeError> {
    l.residuum(a, b)
}
fn e(l: &Lattice, a: &LatticeValue, b: &LatticeValue) -> Result<LatticeValue, LatticeError> {
    l.biresiduum(a, b)
}
fn implies(p: bool, q: Result<bool, LatticeError>) -> Result<bool, LatticeError> {
    if p {
        q
    } else {
        Ok(true)
    }
}

static STRUCTURAL: &[Law] = &[
    law!("tnorm-commutative", "x ⊗ y = y ⊗ x", General, |l, s| Ok(t(l, &s.x, &s.y)? == t(l, &s.y, &s.x)?)),
    law!("tnorm-associative", "(x ⊗ y) ⊗ z = x ⊗ (y ⊗ z)", General, |l, s| {
        Ok(t(l, &t(l, &s.x, &s.y)?, &s.z)? == t(l, &s.x, &t(l, &s.y, &s.z)?)?)
    }),
    law!("tnorm-unit", "x ⊗ 1 = x", General, |l, s| Ok(t(l, &s.x, &l.one())? == s.x)),
    law!("adjunction", "x ⊗ y ≤ z iff x ≤ y → z", General, |l, s| {
        Ok(l.leq(&t(l, &s.x, &s.y)?, &s.z)? == l.leq(&s.x, &r(l, &s.y, &s.z)?)?)
    }),
    law!("tnorm-distributes-over-meet", "x ⊗ (y ∧ z) = (x ⊗ y) ∧ (x ⊗ z)", Continuous, |l, s| {
        let lhs = t(l, &s.x, &l.meet(&s.y, &s.z)?)?;
        let rhs = l.meet(&t(l, &s.x, &s.y)?, &t(l, &s.x, &s.z)?)?;
        Ok(lhs == rhs)
    }),
];

static GENERAL: &[Law] = &[
    law!("tnorm-monotone", "x ≤ x', y ≤ y' ⇒ x ⊗ y ≤ x' ⊗ y'", General, |l, s| {
        implies(l.leq(&s.x, &s.x2)? && l.leq(&s.y, &s.y2)?, l.leq(&t(l, &s.x, &s.y)?, &t(l, &s.x2, &s.y2)?))
    }),
    law!("residuum-antitone-monotone", "x' ≤ x, y ≤ y' ⇒ x → y ≤ x' → y'", General, |l, s| {
        implies(l.leq(&s.x2, &s.x)? && l.leq(&s.y, &s.y2)?, l.leq(&r(l, &s.x, &s.y)?, &r(l, &s.x2, &s.y2)?))
    }),
    law!("order-via-residuum", "x ≤ y iff x → y = 1", General, |l, s| {
        Ok(l.leq(&s.x, &s.y)? == l.is_one(&r(l, &s.x, &s.y)?))
    }),
    law!("tnorm-zero", "x ⊗ 0 = 0", General, |l, s| Ok(l.is_zero(&t(l, &s.x, &l.zero())?))),
    law!("tnorm-distributes-over-join", "x ⊗ (y ∨ z) = (x ⊗ y) ∨ (x ⊗ z)", General, |l, s| {
        let lhs = t(l, &s.x, &l.join(&s.y, &s.z)?)?;
        let rhs = l.join(&t(l, &s.x, &s.y)?, &t(l, &s.x, &s.z)?)?;
        Ok(lhs == rhs)
    }),
    law!("modus-ponens", "x ⊗ (x → y) ≤ y", General, |l, s| l.leq(&t(l, &s.x, &r(l, &s.x, &s.y)?)?, &s.y)),
    law!("tnorm-into-residuum", "x ⊗ (y → z) ≤ (x → y) → z", General, |l, s| {
        l.leq(&t(l, &s.x, &r(l, &s.y, &s.z)?)?, &r(l, &r(l, &s.x, &s.y)?, &s.z)?)
    }),
    law!("tnorm-into-biresiduum", "x ⊗ (y ⟺ z) ≤ (x → y) → z", General, |l, s| {
        l.leq(&t(l, &s.x, &e(l, &s.y, &s.z)?)?, &r(l, &r(l, &s.x, &s.y)?, &s.z)?)
    }),
    law!("biresiduum-absorbs-tnorm", "x ⊗ (y ⟺ z) ≤ y ⟺ (x ⊗ z)", General, |l, s| {
        l.leq(&t(l, &s.x, &e(l, &s.y, &s.z)?)?, &e(l, &s.y, &t(l, &s.x, &s.z)?)?)
    }),
    law!("residuum-exchange", "x → (y → z) = y → (x → z)", General, |l, s| {
        Ok(r(l, &s.x, &r(l, &s.y, &s.z)?)? == r(l, &s.y, &r(l, &s.x, &s.z)?)?)
    }),
    law!("residuum-currying", "x → (y → z) ≤ (x ⊗ y) → z", General, |l, s| {
        l.leq(&r(l, &s.x, &r(l, &s.y, &s.z)?)?, &r(l, &t(l, &s.x, &s.y)?, &s.z)?)
    }),
    law!("biresiduum-currying", "x → (y ⟺ z) ≤ (x ⊗ y) → z", General, |l, s| {
        l.leq(&r(l, &s.x, &e(l, &s.y, &s.z)?)?, &r(l, &t(l, &s.x, &s.y)?, &s.z)?)
    }),
    law!("residuum-transitive", "(x → y) ⊗ (y → z) ≤ x → z", General, |l, s| {
        l.leq(&t(l, &r(l, &s.x, &s.y)?, &r(l, &s.y, &s.z)?)?, &r(l, &s.x, &s.z)?)
    }),
    law!("biresiduum-transitive", "(x ⟺ y) ⊗ (y ⟺ z) ≤ x ⟺ z", General, |l, s| {
        l.leq(&t(l, &e(l, &s.x, &s.y)?, &e(l, &s.y, &s.z)?)?, &e(l, &s.x, &s.z)?)
    }),
    law!("biresiduum-meet-congruence", "(x ⟺ x') ∧ (y ⟺ y') ≤ (x ∧ y) ⟺ (x' ∧ y')", General, |l, s| {
        let lhs = l.meet(&e(l, &s.x, &s.x2)?, &e(l, &s.y, &s.y2)?)?;
        l.leq(&lhs, &e(l, &l.meet(&s.x, &s.y)?, &l.meet(&s.x2, &s.y2)?)?)
    }),
    law!("biresiduum-join-congruence", "(x ⟺ x') ∧ (y ⟺ y') ≤ (x ∨ y) ⟺ (x' ∨ y')", General, |l, s| {
        let lhs = l.meet(&e(l, &s.x, &s.x2)?, &e(l, &s.y, &s.y2)?)?;
        l.leq(&lhs, &e(l, &l.join(&s.x, &s.y)?, &l.join(&s.x2, &s.y2)?)?)
    }),
    law!("biresiduum-consequent-congruence", "x ⟺ y ≤ (z → x) ⟺ (z → y)", General, |l, s| {
        l.leq(&e(l, &s.x, &s.y)?, &e(l, &r(l, &s.z, &s.x)?, &r(l, &s.z, &s.y)?)?)
    }),
    law!("biresiduum-antecedent-congruence", "x ⟺ y ≤ (x → z) ⟺ (y → z)", General, |l, s| {
        l.leq(&e(l, &s.x, &s.y)?, &e(l, &r(l, &s.x, &s.z)?, &r(l, &s.y, &s.z)?)?)
    }),
];

static HEYTING: &[Law] = &[
    law!(
        "biresiduum-implication-congruence",
        "(x ⟺ x') ∧ (y ⟺ y') ≤ (x → y) ⟺ (x' → y')",
        Heyting,
        |l, s| {
            let lhs = l.meet(&e(l, &s.x, &s.x2)?, &e(l, &s.y, &s.y2)?)?;
            l.leq(&lhs, &e(l, &r(l, &s.x, &s.y)?, &r(l, &s.x2, &s.y2)?)?)
        }
    ),
    law!("biresiduum-substitution", "x ≤ y ⟺ z ⇒ x ⊗ y = x ⊗ z", Heyting, |l, s| {
        implies(l.leq(&s.x, &e(l, &s.y, &s.z)?)?, Ok(t(l, &s.x, &s.y)? == t(l, &s.x, &s.z)?))
    }),
];

/// Axioms of a commutative residuated lattice plus distributivity over meets.
pub fn structural_laws() -> &'static [Law] {
    STRUCTURAL
}

/// Laws valid in every residuated lattice.
pub fn general_laws() -> &'static [Law] {
    GENERAL
}

/// Laws valid when `⊗ = ∧`; they may fail otherwise.
pub fn heyting_laws() -> &'static [Law] {
    HEYTING
}

/// Every law the given lattice is expected to satisfy, by its flags.
pub fn applicable_laws(l: &Lattice) -> Vec<&'static Law> {
    STRUCTURAL
        .iter()
        .chain(GENERAL)
        .chain(HEYTING)
        .filter(|law| match law.scope {
            Scope::General => true,
            Scope::Heyting => l.is_heyting(),
            Scope::Continuous => l.is_continuous(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct LawOutcome {
    pub law: &'static str,
    pub statement: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// The first failing sample, rendered `x, x', y, y', z`.
    pub counterexample: Option<[String; 5]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub lattice: String,
    pub exhaustive: bool,
    pub samples: usize,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.laws.iter().all(|l| l.failures == 0)
    }
}

/// Checks `laws` on every sample.
pub fn check_laws<I>(
    l: &Lattice,
    laws: &[&'static Law],
    samples: I,
    exhaustive: bool,
) -> Result<LawReport, LatticeError>
where
    I: IntoIterator<Item = Sample>,
{
    let mut outcomes: Vec<LawOutcome> = laws
        .iter()
        .map(|law| LawOutcome { law: law.id, statement: law.statement, checked: 0, failures: 0, counterexample: None })
        .collect();
    let mut count = 0;
    for s in samples {
        count += 1;
        for (law, out) in laws.iter().zip(outcomes.iter_mut()) {
            out.checked += 1;
            if !law.holds(l, &s)? {
                out.failures += 1;
                if out.counterexample.is_none() {
                    out.counterexample = Some([&s.x, &s.x2, &s.y, &s.y2, &s.z].map(|v| l.format_value(v)));
                }
            }
        }
    }
    Ok(LawReport { lattice: l.name(), exhaustive, samples: count, laws: outcomes })
}

/// All 5-tuples over a finite carrier.
pub fn exhaustive_samples(l: &Lattice) -> Option<impl Iterator<Item = Sample>> {
    let elems = l.elements()?;
    let n = elems.len();
    let total = n.pow(5);
    Some((0..total).map(move |mut k| {
        let mut pick = || {
            let v = elems[k % n].clone();
            k /= n;
            v
        };
        Sample { x: pick(), x2: pick(), y: pick(), y2: pick(), z: pick() }
    }))
}

/// A random value of the unit interval or finite carrier. Rationals have
/// denominators up to 64, and the endpoints are drawn with raised
/// probability since many laws are tight there.
pub fn random_value(l: &Lattice, rng: &mut impl Rng) -> LatticeValue {
    if let Some(elems) = l.elements() {
        return elems[rng.gen_range(0..elems.len())].clone();
    }
    match rng.gen_range(0..10) {
        0 => l.zero(),
        1 => l.one(),
        _ => {
            let q: i64 = rng.gen_range(1..=64);
            let p: i64 = rng.gen_range(0..=q);
            l.from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
                .expect("sampled rational lies in [0, 1]")
        }
    }
}

/// `n` seeded random 5-tuples. Each tuple repeats a coordinate with some
/// probability so that equalities and order hypotheses are exercised.
pub fn random_samples(l: &Lattice, n: usize, seed: u64) -> Vec<Sample> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut vals: Vec<LatticeValue> = (0..5).map(|_| random_value(l, &mut rng)).collect();
            if rng.gen_bool(0.25) {
                let (i, j) = (rng.gen_range(0..5), rng.gen_range(0..5));
                vals[j] = vals[i].clone();
            }
            let mut it = vals.into_iter();
            let mut next = || it.next().expect("five values");
            Sample { x: next(), x2: next(), y: next(), y2: next(), z: next() }
        })
        .collect()
}

/// Runs every applicable law: exhaustively on finite carriers, on
/// `samples` seeded random tuples otherwise.
pub fn run_law_suite(l: &Lattice, samples: usize, seed: u64) -> Result<LawReport, LatticeError> {
    let laws = applicable_laws(l);
    match exhaustive_samples(l) {
        Some(all) => check_laws(l, &laws, all, true),
        None => check_laws(l, &laws, random_samples(l, samples, seed), false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn law_counts() {
        assert_eq!(general_laws().len(), 18);
        assert_eq!(heyting_laws().len(), 2);
        let mut ids: Vec<_> = STRUCTURAL.iter().chain(GENERAL).chain(HEYTING).map(|l| l.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 25);
    }

    #[test]
    fn chain_passes_exhaustively() {
        let c = Lattice::chain(3).unwrap();
        let report = run_law_suite(&c, 0, 0).unwrap();
        assert!(report.exhaustive);
        assert_eq!(report.samples, 243);
        assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn unit_interval_lattices_pass() {
        for l in [Lattice::godel(), Lattice::lukasiewicz(), Lattice::product()] {
            let report = run_law_suite(&l, 500, 7).unwrap();
            assert!(report.all_hold(), "{}: {:?}", l, report);
        }
    }

    #[test]
    fn heyting_laws_fail_for_lukasiewicz() {
        let l = Lattice::lukasiewicz();
        let laws: Vec<&Law> = heyting_laws().iter().collect();
        let report = check_laws(&l, &laws, random_samples(&l, 2000, 3), false).unwrap();
        assert!(report.laws.iter().all(|o| o.failures > 0));
    }
}
