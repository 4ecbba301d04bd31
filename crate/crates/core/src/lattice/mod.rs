//! Residuated lattices over exact carriers.
//!
//! Two carrier families are supported. The unit interval carries exact
//! rationals in `[0, 1]` and comes with the Gödel, Łukasiewicz and product
//! t-norms. Finite carriers are given by an order table and a t-norm table;
//! the residuum is derived and the whole structure is validated when it is
//! built, so every [`Lattice`] in circulation satisfies the adjunction
//! `x ⊗ y ≤ z  iff  x ≤ (y → z)`.
//!
//! Values never mix carriers: every binary operation checks that both
//! operands belong to the receiving lattice and reports
//! [`LatticeError::CarrierMismatch`] otherwise.

mod finite;
pub mod laws;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use finite::{FiniteLattice, FiniteTable, OrderSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("carrier mismatch: expected a value of {expected}, found a value of {found}")]
    CarrierMismatch { expected: String, found: String },
    #[error("value {0} lies outside the carrier")]
    OutOfCarrier(String),
    #[error("cannot read `{0}` as a lattice value")]
    BadValue(String),
    #[error("unknown lattice `{0}` (expected godel, lukasiewicz, product or chain:<n>)")]
    UnknownLattice(String),
    #[error("invalid lattice table: {0}")]
    InvalidTable(String),
}

/// Identity of a finite carrier. Two finite lattices built from the same
/// table share a tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CarrierTag(pub(crate) u64);

/// An element of some lattice carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LatticeValue {
    /// A rational in `[0, 1]`, always in lowest terms.
    Unit(BigRational),
    /// An element of a finite carrier, by index into its table.
    Element { carrier: CarrierTag, index: u32 },
}

impl LatticeValue {
    fn carrier_name(&self) -> String {
        match self {
            LatticeValue::Unit(_) => "the unit interval".to_string(),
            LatticeValue::Element { carrier, .. } => format!("finite carrier {:016x}", carrier.0),
        }
    }

    /// The rational payload, for unit-interval values.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            LatticeValue::Unit(r) => Some(r),
            LatticeValue::Element { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TNormKind {
    Godel,
    Lukasiewicz,
    Product,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum UnitTNorm {
    Godel,
    Lukasiewicz,
    Product,
}

#[derive(Debug, Clone)]
enum Repr {
    Unit(UnitTNorm),
    Finite(Arc<FiniteLattice>),
}

/// A complete residuated lattice with exact operations.
///
/// Cloning is cheap: finite tables are shared.
#[derive(Debug, Clone)]
pub struct Lattice {
    repr: Repr,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        match (&self.repr, &other.repr) {
            (Repr::Unit(a), Repr::Unit(b)) => a == b,
            (Repr::Finite(a), Repr::Finite(b)) => a.tag() == b.tag(),
            _ => false,
        }
    }
}

impl Eq for Lattice {}

impl FromStr for Lattice {
    type Err = LatticeError;

    /// Built-in lattices by name: `godel`, `lukasiewicz`, `product`, `chain:<n>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let name = s.trim().to_ascii_lowercase();
        match name.as_str() {
            "godel" | "goedel" | "gödel" => Ok(Lattice::godel()),
            "lukasiewicz" | "łukasiewicz" => Ok(Lattice::lukasiewicz()),
            "product" | "goguen" => Ok(Lattice::product()),
            _ => match name.strip_prefix("chain:") {
                Some(n) => {
                    let n: usize = n.parse().map_err(|_| LatticeError::UnknownLattice(s.to_string()))?;
                    Lattice::chain(n)
                }
                None => Err(LatticeError::UnknownLattice(s.to_string())),
            },
        }
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Lattice {
    pub fn godel() -> Self {
        Lattice { repr: Repr::Unit(UnitTNorm::Godel) }
    }

    pub fn lukasiewicz() -> Self {
        Lattice { repr: Repr::Unit(UnitTNorm::Lukasiewicz) }
    }

    pub fn product() -> Self {
        Lattice { repr: Repr::Unit(UnitTNorm::Product) }
    }

    /// The `n`-element chain `0 < 1/(n-1) < … < 1` with the Gödel t-norm.
    pub fn chain(n: usize) -> Result<Self, LatticeError> {
        if n < 2 {
            return Err(LatticeError::InvalidTable(format!("a chain needs at least two elements, got {n}")));
        }
        let top = (n - 1) as i64;
        let elements: Vec<String> =
            (0..n).map(|i| BigRational::new(BigInt::from(i as i64), BigInt::from(top)).to_string()).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        let tnorm = (0..n).map(|i| (0..n).map(|j| elements[i.min(j)].clone()).collect()).collect();
        let table = FiniteTable { elements, leq: OrderSpec::Matrix(leq), tnorm };
        let mut lattice = FiniteLattice::build(&table)?;
        lattice.set_name(format!("chain:{n}"));
        Ok(Lattice { repr: Repr::Finite(Arc::new(lattice)) })
    }

    /// Builds and validates a finite lattice from its order and t-norm tables.
    pub fn from_table(table: &FiniteTable) -> Result<Self, LatticeError> {
        Ok(Lattice { repr: Repr::Finite(Arc::new(FiniteLattice::build(table)?)) })
    }

    /// Parses a finite lattice document:
    /// `{ "elements": [...], "leq": [[...]], "tnorm": [[...]] }`.
    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        let table: FiniteTable = serde_json::from_str(text).map_err(|e| LatticeError::InvalidTable(e.to_string()))?;
        Lattice::from_table(&table)
    }

    pub fn name(&self) -> String {
        match &self.repr {
            Repr::Unit(UnitTNorm::Godel) => "godel".into(),
            Repr::Unit(UnitTNorm::Lukasiewicz) => "lukasiewicz".into(),
            Repr::Unit(UnitTNorm::Product) => "product".into(),
            Repr::Finite(f) => f.name().to_string(),
        }
    }

    pub fn tnorm_kind(&self) -> TNormKind {
        match &self.repr {
            Repr::Unit(UnitTNorm::Godel) => TNormKind::Godel,
            Repr::Unit(UnitTNorm::Lukasiewicz) => TNormKind::Lukasiewicz,
            Repr::Unit(UnitTNorm::Product) => TNormKind::Product,
            Repr::Finite(_) => TNormKind::Table,
        }
    }

    /// The finite table behind this lattice, if it has one.
    pub fn finite(&self) -> Option<&FiniteLattice> {
        match &self.repr {
            Repr::Finite(f) => Some(f),
            Repr::Unit(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.repr, Repr::Finite(_))
    }

    /// Unit-interval carriers are linear by construction; finite ones are
    /// checked when built.
    pub fn is_linear(&self) -> bool {
        match &self.repr {
            Repr::Unit(_) => true,
            Repr::Finite(f) => f.is_linear(),
        }
    }

    /// True iff `⊗` coincides with `∧`.
    pub fn is_heyting(&self) -> bool {
        match &self.repr {
            Repr::Unit(t) => *t == UnitTNorm::Godel,
            Repr::Finite(f) => f.is_heyting(),
        }
    }

    /// True iff `x ⊗ inf Y = inf { x ⊗ y | y ∈ Y }` for every finite `Y`.
    /// Always true on the unit interval; checked exhaustively on finite tables.
    pub fn is_continuous(&self) -> bool {
        match &self.repr {
            Repr::Unit(_) => true,
            Repr::Finite(f) => f.is_continuous(),
        }
    }

    pub fn zero(&self) -> LatticeValue {
        match &self.repr {
            Repr::Unit(_) => LatticeValue::Unit(BigRational::zero()),
            Repr::Finite(f) => f.value(f.bottom()),
        }
    }

    pub fn one(&self) -> LatticeValue {
        match &self.repr {
            Repr::Unit(_) => LatticeValue::Unit(BigRational::one()),
            Repr::Finite(f) => f.value(f.top()),
        }
    }

    /// Every carrier element, for finite carriers.
    pub fn elements(&self) -> Option<Vec<LatticeValue>> {
        match &self.repr {
            Repr::Unit(_) => None,
            Repr::Finite(f) => Some((0..f.len()).map(|i| f.value(i)).collect()),
        }
    }

    /// The value `numer/denom`. On finite carriers this is the element whose
    /// name reads as that rational.
    pub fn ratio(&self, numer: i64, denom: i64) -> Result<LatticeValue, LatticeError> {
        if denom == 0 {
            return Err(LatticeError::BadValue(format!("{numer}/{denom}")));
        }
        let r = BigRational::new(BigInt::from(numer), BigInt::from(denom));
        self.from_rational(r)
    }

    pub fn from_rational(&self, r: BigRational) -> Result<LatticeValue, LatticeError> {
        match &self.repr {
            Repr::Unit(_) => {
                if r.is_negative() || r > BigRational::one() {
                    return Err(LatticeError::OutOfCarrier(r.to_string()));
                }
                Ok(LatticeValue::Unit(r))
            }
            Repr::Finite(f) => {
                f.find_rational(&r).map(|i| f.value(i)).ok_or_else(|| LatticeError::OutOfCarrier(r.to_string()))
            }
        }
    }

    /// Verifies that `v` belongs to this lattice's carrier.
    pub fn check(&self, v: &LatticeValue) -> Result<(), LatticeError> {
        match (&self.repr, v) {
            (Repr::Unit(_), LatticeValue::Unit(r)) => {
                if r.is_negative() || *r > BigRational::one() {
                    Err(LatticeError::OutOfCarrier(r.to_string()))
                } else {
                    Ok(())
                }
            }
            (Repr::Finite(f), LatticeValue::Element { carrier, index }) => {
                if *carrier != f.tag() {
                    Err(self.mismatch(v))
                } else if (*index as usize) >= f.len() {
                    Err(LatticeError::OutOfCarrier(format!("#{index}")))
                } else {
                    Ok(())
                }
            }
            _ => Err(self.mismatch(v)),
        }
    }

    fn mismatch(&self, v: &LatticeValue) -> LatticeError {
        let expected = match &self.repr {
            Repr::Unit(_) => "the unit interval".to_string(),
            Repr::Finite(f) => format!("finite carrier {:016x}", f.tag().0),
        };
        LatticeError::CarrierMismatch { expected, found: v.carrier_name() }
    }

    fn units<'a>(
        &self,
        a: &'a LatticeValue,
        b: &'a LatticeValue,
    ) -> Result<(&'a BigRational, &'a BigRational), LatticeError> {
        match (a, b) {
            (LatticeValue::Unit(x), LatticeValue::Unit(y)) => Ok((x, y)),
            (LatticeValue::Unit(_), other) | (other, _) => Err(self.mismatch(other)),
        }
    }

    fn indices(&self, f: &FiniteLattice, a: &LatticeValue, b: &LatticeValue) -> Result<(usize, usize), LatticeError> {
        Ok((self.index(f, a)?, self.index(f, b)?))
    }

    fn index(&self, f: &FiniteLattice, a: &LatticeValue) -> Result<usize, LatticeError> {
        match a {
            LatticeValue::Element { carrier, index } if *carrier == f.tag() => {
                if (*index as usize) < f.len() {
                    Ok(*index as usize)
                } else {
                    Err(LatticeError::OutOfCarrier(format!("#{index}")))
                }
            }
            other => Err(self.mismatch(other)),
        }
    }

    pub fn leq(&self, a: &LatticeValue, b: &LatticeValue) -> Result<bool, LatticeError> {
        match &self.repr {
            Repr::Unit(_) => {
                let (x, y) = self.units(a, b)?;
                Ok(x <= y)
            }
            Repr::Finite(f) => {
                let (i, j) = self.indices(f, a, b)?;
                Ok(f.leq(i, j))
            }
        }
    }

    pub fn meet(&self, a: &LatticeValue, b: &LatticeValue) -> Result<LatticeValue, LatticeError> {
        match &self.repr {
            Repr::Unit(_) => {
                let (x, y) = self.units(a, b)?;
                Ok(LatticeValue::Unit(x.min(y).clone()))
            }
            Repr::Finite(f) => {
                let (i, j) = self.indices(f, a, b)?;
                Ok(f.value(f.meet(i, j)))
            }
        }
    }

    pub fn join(&self, a: &LatticeValue, b: &LatticeValue) -> Result<LatticeValue, LatticeError> {
        match &self.repr {
            Repr::Unit(_) => {
                let (x, y) = self.units(a, b)?;
                Ok(LatticeValue::Unit(x.max(y).clone()))
            }
            Repr::Finite(f) => {
                let (i, j) = self.indices(f, a, b)?;
                Ok(f.value(f.join(i, j)))
            }
        }
    }

    /// `x ⊗ y`.
    pub fn tnorm(&self, a: &LatticeValue, b: &LatticeValue) -> Result<LatticeValue, LatticeError> {
        match &self.repr {
            Repr::Unit(t) => {
                let (x, y) = self.units(a, b)?;
                let r = match t {
                    UnitTNorm::Godel => x.min(y).clone(),
                    UnitTNorm::Lukasiewicz => {
                        let s = x + y - BigRational::one();
                        if s.is_negative() {
                            BigRational::zero()
                        } else {
                            s
                        }
                    }
                    UnitTNorm::Product => x * y,
                };
                Ok(LatticeValue::Unit(r))
            }
            Repr::Finite(f) => {
                let (i, j) = self.indices(f, a, b)?;
                Ok(f.value(f.tnorm(i, j)))
            }
        }
    }

    /// `x → y`, the largest `z` with `z ⊗ x ≤ y`.
    pub fn residuum(&self, a: &LatticeValue, b: &LatticeValue) -> Result<LatticeValue, LatticeError> {
        match &self.repr {
            Repr::Unit(t) => {
                let (x, y) = self.units(a, b)?;
                if x <= y {
                    return Ok(LatticeValue::Unit(BigRational::one()));
                }
                let r = match t {
                    UnitTNorm::Godel => y.clone(),
                    UnitTNorm::Lukasiewicz => BigRational::one() - x + y,
                    UnitTNorm::Product => y / x,
                };
                Ok(LatticeValue::Unit(r))
            }
            Repr::Finite(f) => {
                let (i, j) = self.indices(f, a, b)?;
                Ok(f.value(f.residuum(i, j)))
            }
        }
    }

    /// `x ⟺ y = (x → y) ∧ (y → x)`.
    pub fn biresiduum(&self, a: &LatticeValue, b: &LatticeValue) -> Result<LatticeValue, LatticeError> {
        let ab = self.residuum(a, b)?;
        let ba = self.residuum(b, a)?;
        self.meet(&ab, &ba)
    }

    /// Greatest lower bound of a finite set; `inf ∅ = 1`.
    pub fn inf_set<'a, I>(&self, values: I) -> Result<LatticeValue, LatticeError>
    where
        I: IntoIterator<Item = &'a LatticeValue>,
    {
        let mut acc = self.one();
        for v in values {
            acc = self.meet(&acc, v)?;
        }
        Ok(acc)
    }

    /// Least upper bound of a finite set; `sup ∅ = 0`.
    pub fn sup_set<'a, I>(&self, values: I) -> Result<LatticeValue, LatticeError>
    where
        I: IntoIterator<Item = &'a LatticeValue>,
    {
        let mut acc = self.zero();
        for v in values {
            acc = self.join(&acc, v)?;
        }
        Ok(acc)
    }

    /// `v₁ ⊗ … ⊗ vₙ ⊗ 1`.
    pub fn big_otimes<'a, I>(&self, values: I) -> Result<LatticeValue, LatticeError>
    where
        I: IntoIterator<Item = &'a LatticeValue>,
    {
        let mut acc = self.one();
        for v in values {
            acc = self.tnorm(&acc, v)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self, v: &LatticeValue) -> bool {
        *v == self.zero()
    }

    pub fn is_one(&self, v: &LatticeValue) -> bool {
        *v == self.one()
    }

    /// Reads a value: `p/q`, a decimal such as `0.625`, or (finite carriers)
    /// an element name.
    pub fn parse_value(&self, text: &str) -> Result<LatticeValue, LatticeError> {
        let text = text.trim();
        match &self.repr {
            Repr::Unit(_) => {
                let r = parse_rational(text).ok_or_else(|| LatticeError::BadValue(text.into()))?;
                self.from_rational(r)
            }
            Repr::Finite(f) => {
                if let Some(i) = f.find_name(text) {
                    return Ok(f.value(i));
                }
                match parse_rational(text) {
                    Some(r) => {
                        f.find_rational(&r).map(|i| f.value(i)).ok_or_else(|| LatticeError::OutOfCarrier(text.into()))
                    }
                    None => Err(LatticeError::BadValue(text.into())),
                }
            }
        }
    }

    /// Canonical text of a value: `p/q` (or `0`, `1`) on the unit interval,
    /// the element name on finite carriers.
    pub fn format_value(&self, v: &LatticeValue) -> String {
        match (v, &self.repr) {
            (LatticeValue::Unit(r), _) => r.to_string(),
            (LatticeValue::Element { index, .. }, Repr::Finite(f)) if (*index as usize) < f.len() => {
                f.element_name(*index as usize).to_string()
            }
            (LatticeValue::Element { index, .. }, _) => format!("#{index}"),
        }
    }

    /// Fixed-point decimal rendering, rounded half up. Finite elements whose
    /// names are not rationals print by name.
    pub fn format_decimal(&self, v: &LatticeValue, digits: usize) -> String {
        let r = match v {
            LatticeValue::Unit(r) => r.clone(),
            LatticeValue::Element { .. } => match parse_rational(&self.format_value(v)) {
                Some(r) => r,
                None => return self.format_value(v),
            },
        };
        format_rational_decimal(&r, digits)
    }

    /// Numeric distance `|a − b|` on the unit interval; the discrete metric
    /// (0 or 1) on finite carriers.
    pub fn distance(&self, a: &LatticeValue, b: &LatticeValue) -> Result<BigRational, LatticeError> {
        match &self.repr {
            Repr::Unit(_) => {
                let (x, y) = self.units(a, b)?;
                Ok((x - y).abs())
            }
            Repr::Finite(f) => {
                let (i, j) = self.indices(f, a, b)?;
                Ok(if i == j { BigRational::zero() } else { BigRational::one() })
            }
        }
    }
}

/// Parses `p/q`, `n`, or a plain decimal `d.ddd` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((p, q)) = text.split_once('/') {
        let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(p) || !all_digits(q) {
            return None;
        }
        let q: BigInt = q.parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p.parse().ok()?, q));
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    Some(BigRational::new(numer, denom))
}

pub(crate) fn format_rational_decimal(r: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = (scaled + half).floor().to_integer();
    let (int, frac) = rounded.div_rem(&scale);
    if digits == 0 {
        int.to_string()
    } else {
        format!("{int}.{:0>width$}", frac.to_string(), width = digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(l: &Lattice, s: &str) -> LatticeValue {
        l.parse_value(s).unwrap()
    }

    #[test]
    fn tnorm_examples() {
        let g = Lattice::godel();
        assert_eq!(g.tnorm(&v(&g, "0.6"), &v(&g, "0.8")).unwrap(), v(&g, "0.6"));
        let l = Lattice::lukasiewicz();
        assert_eq!(l.tnorm(&v(&l, "0.6"), &v(&l, "0.8")).unwrap(), v(&l, "2/5"));
        for lat in [Lattice::godel(), Lattice::lukasiewicz(), Lattice::product()] {
            let x = v(&lat, "3/7");
            assert_eq!(lat.tnorm(&x, &lat.one()).unwrap(), x);
        }
    }

    #[test]
    fn residuum_examples() {
        let g = Lattice::godel();
        assert_eq!(g.residuum(&v(&g, "0.8"), &v(&g, "0.5")).unwrap(), v(&g, "0.5"));
        let p = Lattice::product();
        assert_eq!(p.residuum(&v(&p, "0.8"), &v(&p, "0.5")).unwrap(), v(&p, "5/8"));
        for lat in [Lattice::godel(), Lattice::lukasiewicz(), Lattice::product()] {
            assert!(lat.is_one(&lat.residuum(&v(&lat, "0.3"), &v(&lat, "0.4")).unwrap()));
        }
    }

    #[test]
    fn biresiduum_examples() {
        let l = Lattice::lukasiewicz();
        assert_eq!(l.biresiduum(&v(&l, "0.8"), &v(&l, "0.5")).unwrap(), v(&l, "7/10"));
        let g = Lattice::godel();
        assert_eq!(g.biresiduum(&v(&g, "0.8"), &v(&g, "0.5")).unwrap(), v(&g, "1/2"));
        let x = v(&g, "0.37");
        assert!(g.is_one(&g.biresiduum(&x, &x).unwrap()));
    }

    #[test]
    fn inf_sup_conventions() {
        let g = Lattice::godel();
        let set = [v(&g, "0.5"), v(&g, "0.8"), v(&g, "0.9")];
        assert_eq!(g.inf_set(&set).unwrap(), v(&g, "1/2"));
        assert_eq!(g.sup_set(&set).unwrap(), v(&g, "9/10"));
        assert_eq!(g.inf_set(&set[1..2]).unwrap(), set[1]);
        assert_eq!(g.sup_set(&[]).unwrap(), g.zero());
        assert_eq!(g.inf_set(&[]).unwrap(), g.one());
    }

    #[test]
    fn carrier_mismatch_is_reported() {
        let g = Lattice::godel();
        let c = Lattice::chain(3).unwrap();
        let half = c.parse_value("1/2").unwrap();
        assert!(matches!(g.tnorm(&g.one(), &half), Err(LatticeError::CarrierMismatch { .. })));
        assert!(matches!(c.meet(&half, &g.one()), Err(LatticeError::CarrierMismatch { .. })));
    }

    #[test]
    fn values_parse_exactly() {
        let g = Lattice::godel();
        assert_eq!(g.format_value(&v(&g, "0.625")), "5/8");
        assert_eq!(g.format_value(&v(&g, "10/20")), "1/2");
        assert_eq!(g.format_value(&v(&g, "1")), "1");
        assert!(g.parse_value("1.5").is_err());
        assert!(g.parse_value("abc").is_err());
        assert!(g.parse_value("1/0").is_err());
        assert_eq!(g.format_decimal(&v(&g, "5/6"), 3), "0.833");
        assert_eq!(g.format_decimal(&v(&g, "1"), 2), "1.00");
    }

    #[test]
    fn names_round_trip() {
        for name in ["godel", "lukasiewicz", "product", "chain:3", "chain:5"] {
            let l: Lattice = name.parse().unwrap();
            assert_eq!(l.name(), name);
        }
        assert!("chain:1".parse::<Lattice>().is_err());
        assert!("boolean".parse::<Lattice>().is_err());
    }

    #[test]
    fn flags() {
        assert!(Lattice::godel().is_heyting());
        assert!(!Lattice::product().is_heyting());
        assert!(Lattice::lukasiewicz().is_linear());
        let c = Lattice::chain(3).unwrap();
        assert!(c.is_finite() && c.is_linear() && c.is_heyting() && c.is_continuous());
    }
}
