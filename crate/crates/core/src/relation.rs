//! Fuzzy sets and fuzzy relations over finite, ordered domains.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::lattice::{Lattice, LatticeError, LatticeValue};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelationError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("the operands live in different lattices ({0} and {1})")]
    LatticeMismatch(String, String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("relation is not square ({0}×{1})")]
    NotSquare(usize, usize),
    #[error("the supremum of an empty family of relations has no domain")]
    EmptyFamily,
}

/// An ordered finite set of named states. Order is insertion order and
/// fixes every iteration and output order.
#[derive(Debug, Clone)]
pub struct Domain {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Domain {}

impl Domain {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, RelationError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(RelationError::DuplicateState(n.clone()));
            }
        }
        Ok(Arc::new(Domain { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, RelationError> {
        self.index.get(name).copied().ok_or_else(|| RelationError::UnknownState(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }
}

fn same_domain(a: &Arc<Domain>, b: &Arc<Domain>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_lattice(a: &Lattice, b: &Lattice) -> Result<(), RelationError> {
    if a == b {
        Ok(())
    } else {
        Err(RelationError::LatticeMismatch(a.name(), b.name()))
    }
}

/// A lattice value as it appears in documents: a string such as `"3/5"` or
/// `"0.6"`, or a bare JSON number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueLiteral {
    Text(String),
    Number(serde_json::Number),
}

impl ValueLiteral {
    pub fn parse(&self, lattice: &Lattice) -> Result<LatticeValue, LatticeError> {
        match self {
            ValueLiteral::Text(s) => lattice.parse_value(s),
            ValueLiteral::Number(n) => lattice.parse_value(&n.to_string()),
        }
    }
}

impl fmt::Display for ValueLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueLiteral::Text(s) => f.write_str(s),
            ValueLiteral::Number(n) => write!(f, "{n}"),
        }
    }
}

/// A fuzzy subset of a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzySet {
    lattice: Lattice,
    domain: Arc<Domain>,
    values: Vec<LatticeValue>,
}

impl FuzzySet {
    pub fn zeros(lattice: &Lattice, domain: &Arc<Domain>) -> Self {
        FuzzySet { lattice: lattice.clone(), domain: domain.clone(), values: vec![lattice.zero(); domain.len()] }
    }

    pub fn from_values(
        lattice: &Lattice,
        domain: &Arc<Domain>,
        values: Vec<LatticeValue>,
    ) -> Result<Self, RelationError> {
        if values.len() != domain.len() {
            return Err(RelationError::DomainMismatch(format!("{} values for {} states", values.len(), domain.len())));
        }
        for v in &values {
            lattice.check(v)?;
        }
        Ok(FuzzySet { lattice: lattice.clone(), domain: domain.clone(), values })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn get(&self, i: usize) -> &LatticeValue {
        &self.values[i]
    }

    pub fn values(&self) -> &[LatticeValue] {
        &self.values
    }

    pub fn set(&mut self, i: usize, v: LatticeValue) -> Result<(), RelationError> {
        self.lattice.check(&v)?;
        self.values[i] = v;
        Ok(())
    }

    pub fn leq(&self, other: &FuzzySet) -> Result<bool, RelationError> {
        check_lattice(&self.lattice, &other.lattice)?;
        if !same_domain(&self.domain, &other.domain) {
            return Err(RelationError::DomainMismatch("fuzzy sets over different domains".into()));
        }
        for (a, b) in self.values.iter().zip(&other.values) {
            if !self.lattice.leq(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of states with a non-zero value.
    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|v| !self.lattice.is_zero(v)).count()
    }
}

/// A fuzzy relation between two finite domains, stored densely row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyRelation {
    lattice: Lattice,
    rows: Arc<Domain>,
    cols: Arc<Domain>,
    values: Vec<LatticeValue>,
}

/// The three defining properties of a fuzzy equivalence relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub equivalence: bool,
}

/// Document form: `{ "rows": [...], "cols": [...], "entries": [[row, col, value], ...] }`.
/// Omitted entries are 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    #[serde(default)]
    pub entries: Vec<(String, String, ValueLiteral)>,
}

impl FuzzyRelation {
    pub fn zeros(lattice: &Lattice, rows: &Arc<Domain>, cols: &Arc<Domain>) -> Self {
        Self::filled(lattice, rows, cols, lattice.zero())
    }

    pub fn ones(lattice: &Lattice, rows: &Arc<Domain>, cols: &Arc<Domain>) -> Self {
        Self::filled(lattice, rows, cols, lattice.one())
    }

    fn filled(lattice: &Lattice, rows: &Arc<Domain>, cols: &Arc<Domain>, v: LatticeValue) -> Self {
        FuzzyRelation {
            lattice: lattice.clone(),
            rows: rows.clone(),
            cols: cols.clone(),
            values: vec![v; rows.len() * cols.len()],
        }
    }

    /// The crisp identity on a domain.
    pub fn identity(lattice: &Lattice, domain: &Arc<Domain>) -> Self {
        let mut r = Self::zeros(lattice, domain, domain);
        for i in 0..domain.len() {
            r.values[i * domain.len() + i] = lattice.one();
        }
        r
    }

    /// Builds a relation from a per-cell function.
    pub fn from_fn<F>(
        lattice: &Lattice,
        rows: &Arc<Domain>,
        cols: &Arc<Domain>,
        mut f: F,
    ) -> Result<Self, RelationError>
    where
        F: FnMut(usize, usize) -> Result<LatticeValue, RelationError>,
    {
        let mut values = Vec::with_capacity(rows.len() * cols.len());
        for i in 0..rows.len() {
            for j in 0..cols.len() {
                let v = f(i, j)?;
                lattice.check(&v)?;
                values.push(v);
            }
        }
        Ok(FuzzyRelation { lattice: lattice.clone(), rows: rows.clone(), cols: cols.clone(), values })
    }

    /// The diagonal relation `{(x, x): s(x)}`.
    pub fn diagonal(set: &FuzzySet) -> Self {
        let n = set.domain.len();
        let mut r = Self::zeros(&set.lattice, &set.domain, &set.domain);
        for i in 0..n {
            r.values[i * n + i] = set.values[i].clone();
        }
        r
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rows(&self) -> &Arc<Domain> {
        &self.rows
    }

    pub fn cols(&self) -> &Arc<Domain> {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LatticeValue {
        &self.values[i * self.cols.len() + j]
    }

    pub fn get_named(&self, row: &str, col: &str) -> Result<&LatticeValue, RelationError> {
        Ok(self.get(self.rows.index_of(row)?, self.cols.index_of(col)?))
    }

    pub fn set(&mut self, i: usize, j: usize, v: LatticeValue) -> Result<(), RelationError> {
        self.lattice.check(&v)?;
        let n = self.cols.len();
        self.values[i * n + j] = v;
        Ok(())
    }

    pub fn set_named(&mut self, row: &str, col: &str, v: LatticeValue) -> Result<(), RelationError> {
        let (i, j) = (self.rows.index_of(row)?, self.cols.index_of(col)?);
        self.set(i, j, v)
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[LatticeValue] {
        let n = self.cols.len();
        &self.values[i * n..(i + 1) * n]
    }

    /// Non-zero cells in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &LatticeValue)> + '_ {
        let n = self.cols.len().max(1);
        self.values.iter().enumerate().filter(|(_, v)| !self.lattice.is_zero(v)).map(move |(k, v)| (k / n, k % n, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.nonzero().count()
    }

    /// `Z⁻(y, x) = Z(x, y)`.
    pub fn converse(&self) -> FuzzyRelation {
        let (r, c) = (self.rows.len(), self.cols.len());
        let mut values = Vec::with_capacity(r * c);
        for j in 0..c {
            for i in 0..r {
                values.push(self.values[i * c + j].clone());
            }
        }
        FuzzyRelation { lattice: self.lattice.clone(), rows: self.cols.clone(), cols: self.rows.clone(), values }
    }

    /// `(R ∘ S)(x, z) = sup_y R(x, y) ⊗ S(y, z)`.
    pub fn compose(&self, other: &FuzzyRelation) -> Result<FuzzyRelation, RelationError> {
        check_lattice(&self.lattice, &other.lattice)?;
        if !same_domain(&self.cols, &other.rows) {
            return Err(RelationError::DomainMismatch(
                "the left relation's targets differ from the right relation's sources".into(),
            ));
        }
        let l = &self.lattice;
        let (n, m, k) = (self.rows.len(), self.cols.len(), other.cols.len());
        let mut values = vec![l.zero(); n * k];
        for x in 0..n {
            for y in 0..m {
                let a = &self.values[x * m + y];
                if l.is_zero(a) {
                    continue;
                }
                for z in 0..k {
                    let b = &other.values[y * k + z];
                    if l.is_zero(b) {
                        continue;
                    }
                    let t = l.tnorm(a, b)?;
                    let cell = &mut values[x * k + z];
                    *cell = l.join(cell, &t)?;
                }
            }
        }
        Ok(FuzzyRelation { lattice: l.clone(), rows: self.rows.clone(), cols: other.cols.clone(), values })
    }

    fn zip_with<F>(&self, other: &FuzzyRelation, mut f: F) -> Result<FuzzyRelation, RelationError>
    where
        F: FnMut(&LatticeValue, &LatticeValue) -> Result<LatticeValue, LatticeError>,
    {
        self.check_same_shape(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect::<Result<_, _>>()?;
        Ok(FuzzyRelation { lattice: self.lattice.clone(), rows: self.rows.clone(), cols: self.cols.clone(), values })
    }

    fn check_same_shape(&self, other: &FuzzyRelation) -> Result<(), RelationError> {
        check_lattice(&self.lattice, &other.lattice)?;
        if !same_domain(&self.rows, &other.rows) || !same_domain(&self.cols, &other.cols) {
            return Err(RelationError::DomainMismatch("relations over different domains".into()));
        }
        Ok(())
    }

    /// Pointwise `∨`.
    pub fn join(&self, other: &FuzzyRelation) -> Result<FuzzyRelation, RelationError> {
        let l = self.lattice.clone();
        self.zip_with(other, |a, b| l.join(a, b))
    }

    /// Pointwise `∧`.
    pub fn meet(&self, other: &FuzzyRelation) -> Result<FuzzyRelation, RelationError> {
        let l = self.lattice.clone();
        self.zip_with(other, |a, b| l.meet(a, b))
    }

    /// Pointwise supremum of a non-empty family.
    pub fn sup_relations<'a, I>(family: I) -> Result<FuzzyRelation, RelationError>
    where
        I: IntoIterator<Item = &'a FuzzyRelation>,
    {
        let mut it = family.into_iter();
        let mut acc = it.next().ok_or(RelationError::EmptyFamily)?.clone();
        for r in it {
            acc = acc.join(r)?;
        }
        Ok(acc)
    }

    /// Pointwise order `R ≤ S`.
    pub fn leq(&self, other: &FuzzyRelation) -> Result<bool, RelationError> {
        self.check_same_shape(other)?;
        for (a, b) in self.values.iter().zip(&other.values) {
            if !self.lattice.leq(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest cellwise distance (see [`Lattice::distance`]).
    pub fn sup_distance(&self, other: &FuzzyRelation) -> Result<BigRational, RelationError> {
        self.check_same_shape(other)?;
        let mut best = BigRational::zero();
        for (a, b) in self.values.iter().zip(&other.values) {
            let d = self.lattice.distance(a, b)?;
            if d > best {
                best = d;
            }
        }
        Ok(best)
    }

    /// Reflexivity, symmetry and `⊗`-transitivity of a relation on one domain.
    pub fn classify(&self) -> Result<Classification, RelationError> {
        if !same_domain(&self.rows, &self.cols) {
            return Err(RelationError::NotSquare(self.rows.len(), self.cols.len()));
        }
        let l = &self.lattice;
        let n = self.rows.len();
        let reflexive = (0..n).all(|i| l.is_one(self.get(i, i)));
        let symmetric = (0..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(j, i)));
        let mut transitive = true;
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = l.tnorm(self.get(x, y), self.get(y, z))?;
                    if !l.leq(&t, self.get(x, z))? {
                        transitive = false;
                        break 'outer;
                    }
                }
            }
        }
        Ok(Classification { reflexive, symmetric, transitive, equivalence: reflexive && symmetric && transitive })
    }

    /// Reads a relation document. Row and column names must belong to the
    /// given domains, in the same order.
    pub fn from_doc(
        lattice: &Lattice,
        doc: &RelationDoc,
        rows: &Arc<Domain>,
        cols: &Arc<Domain>,
    ) -> Result<FuzzyRelation, RelationError> {
        if doc.rows != rows.names() {
            return Err(RelationError::DomainMismatch(format!(
                "relation rows {:?} do not match states {:?}",
                doc.rows,
                rows.names()
            )));
        }
        if doc.cols != cols.names() {
            return Err(RelationError::DomainMismatch(format!(
                "relation columns {:?} do not match states {:?}",
                doc.cols,
                cols.names()
            )));
        }
        let mut r = FuzzyRelation::zeros(lattice, rows, cols);
        for (a, b, v) in &doc.entries {
            let v = v.parse(lattice)?;
            r.set_named(a, b, v)?;
        }
        Ok(r)
    }

    /// Reads a relation document on its own, taking domains from the document.
    pub fn from_standalone_doc(lattice: &Lattice, doc: &RelationDoc) -> Result<FuzzyRelation, RelationError> {
        let rows = Domain::new(doc.rows.iter().cloned())?;
        let cols = Domain::new(doc.cols.iter().cloned())?;
        FuzzyRelation::from_doc(lattice, doc, &rows, &cols)
    }

    /// Document form listing the non-zero cells, values rendered by `fmt`.
    pub fn to_doc_with(&self, fmt: impl Fn(&LatticeValue) -> String) -> RelationDoc {
        RelationDoc {
            rows: self.rows.names().to_vec(),
            cols: self.cols.names().to_vec(),
            entries: self
                .nonzero()
                .map(|(i, j, v)| {
                    (self.rows.name(i).to_string(), self.cols.name(j).to_string(), ValueLiteral::Text(fmt(v)))
                })
                .collect(),
        }
    }

    pub fn to_doc(&self) -> RelationDoc {
        self.to_doc_with(|v| self.lattice.format_value(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(names: &[&str]) -> Arc<Domain> {
        Domain::new(names.iter().copied()).unwrap()
    }

    fn rel(l: &Lattice, rows: &Arc<Domain>, cols: &Arc<Domain>, cells: &[(&str, &str, &str)]) -> FuzzyRelation {
        let mut r = FuzzyRelation::zeros(l, rows, cols);
        for (a, b, v) in cells {
            r.set_named(a, b, l.parse_value(v).unwrap()).unwrap();
        }
        r
    }

    #[test]
    fn converse_transposes() {
        let l = Lattice::godel();
        let d = dom(&["a", "b"]);
        let r = rel(&l, &d, &d, &[("a", "b", "0.6")]);
        let c = r.converse();
        assert_eq!(c.get_named("b", "a").unwrap(), &l.parse_value("0.6").unwrap());
        assert!(l.is_zero(c.get_named("a", "b").unwrap()));
        assert_eq!(c.converse(), r);
        let id = FuzzyRelation::identity(&l, &d);
        assert_eq!(id.converse(), id);
    }

    #[test]
    fn compose_single_path() {
        let d = dom(&["a", "b", "c"]);
        for (l, expected) in [(Lattice::godel(), "3/5"), (Lattice::lukasiewicz(), "2/5")] {
            let r = rel(&l, &d, &d, &[("a", "b", "0.6")]);
            let s = rel(&l, &d, &d, &[("b", "c", "0.8")]);
            let rs = r.compose(&s).unwrap();
            assert_eq!(l.format_value(rs.get_named("a", "c").unwrap()), expected);
            assert_eq!(rs.nonzero_count(), 1);
            assert_eq!(FuzzyRelation::identity(&l, &d).compose(&r).unwrap(), r);
        }
    }

    #[test]
    fn sup_and_order() {
        let l = Lattice::godel();
        let d = dom(&["a", "b"]);
        let r = rel(&l, &d, &d, &[("a", "b", "0.6")]);
        let s = rel(&l, &d, &d, &[("a", "b", "0.8")]);
        let z = FuzzyRelation::zeros(&l, &d, &d);
        assert_eq!(FuzzyRelation::sup_relations([&r]).unwrap(), r);
        assert_eq!(FuzzyRelation::sup_relations([&r, &z]).unwrap(), r);
        assert_eq!(FuzzyRelation::sup_relations([&r, &s]).unwrap(), s);
        assert!(r.leq(&r).unwrap());
        assert!(z.leq(&r).unwrap());
        assert!(!s.leq(&r).unwrap());
        assert!(FuzzyRelation::sup_relations(std::iter::empty()).is_err());
    }

    #[test]
    fn classification() {
        let l = Lattice::godel();
        let d = dom(&["a", "b"]);
        let id = FuzzyRelation::identity(&l, &d);
        assert!(id.classify().unwrap().equivalence);
        let asym = rel(&l, &d, &d, &[("a", "b", "0.6"), ("b", "a", "0.3"), ("a", "a", "1"), ("b", "b", "1")]);
        assert!(!asym.classify().unwrap().symmetric);
        let eq = rel(&l, &d, &d, &[("a", "b", "0.5"), ("b", "a", "0.5"), ("a", "a", "1"), ("b", "b", "1")]);
        assert!(eq.classify().unwrap().equivalence);
        let e = dom(&["c"]);
        assert!(matches!(FuzzyRelation::zeros(&l, &d, &e).classify(), Err(RelationError::NotSquare(2, 1))));
    }

    #[test]
    fn document_round_trip() {
        let l = Lattice::product();
        let text = r#"{"rows":["a","b"],"cols":["c"],"entries":[["a","c","5/8"],["b","c",0.25]]}"#;
        let doc: RelationDoc = serde_json::from_str(text).unwrap();
        let r = FuzzyRelation::from_standalone_doc(&l, &doc).unwrap();
        assert_eq!(l.format_value(r.get_named("b", "c").unwrap()), "1/4");
        let back = FuzzyRelation::from_standalone_doc(&l, &r.to_doc()).unwrap();
        assert_eq!(back, r);
        let bad: RelationDoc =
            serde_json::from_str(r#"{"rows":["a"],"cols":["c"],"entries":[["z","c","1"]]}"#).unwrap();
        assert!(matches!(FuzzyRelation::from_standalone_doc(&l, &bad), Err(RelationError::UnknownState(_))));
    }
}
