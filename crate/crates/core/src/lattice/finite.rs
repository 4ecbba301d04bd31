//! Finite residuated lattices given by tables.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize};

use super::{parse_rational, CarrierTag, LatticeError, LatticeValue};

/// The document form of a finite lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteTable {
    pub elements: Vec<String>,
    pub leq: OrderSpec,
    /// `tnorm[i][j]` names the element `elements[i] ⊗ elements[j]`.
    pub tnorm: Vec<Vec<String>>,
}

/// The partial order, either as a full boolean matrix (`leq[i][j]` iff
/// `elements[i] ≤ elements[j]`) or as a list of `[lower, upper]` pairs whose
/// reflexive-transitive closure is taken.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderSpec {
    Matrix(#[serde(deserialize_with = "flag_matrix")] Vec<Vec<bool>>),
    Pairs(Vec<(String, String)>),
}

fn flag_matrix<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<bool>>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Flag {
        Bool(bool),
        Int(u8),
    }
    let rows: Vec<Vec<Flag>> = Vec::deserialize(d)?;
    rows.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|f| match f {
                    Flag::Bool(b) => Ok(b),
                    Flag::Int(0) => Ok(false),
                    Flag::Int(1) => Ok(true),
                    Flag::Int(n) => Err(serde::de::Error::custom(format!("order flag must be 0 or 1, got {n}"))),
                })
                .collect()
        })
        .collect()
}

/// A validated finite residuated lattice with precomputed operation tables.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    name: String,
    names: Vec<String>,
    rationals: Vec<Option<BigRational>>,
    n: usize,
    order: Vec<bool>,
    meet: Vec<u32>,
    join: Vec<u32>,
    tnorm: Vec<u32>,
    residuum: Vec<u32>,
    bottom: usize,
    top: usize,
    tag: CarrierTag,
    linear: bool,
    heyting: bool,
    continuous: bool,
}

fn invalid(msg: impl Into<String>) -> LatticeError {
    LatticeError::InvalidTable(msg.into())
}

impl FiniteLattice {
    pub(crate) fn build(table: &FiniteTable) -> Result<Self, LatticeError> {
        let names = &table.elements;
        let n = names.len();
        if n == 0 {
            return Err(invalid("the carrier is empty"));
        }
        if n > u32::MAX as usize {
            return Err(invalid("the carrier is too large"));
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.trim().is_empty() {
                return Err(invalid(format!("element {i} has an empty name")));
            }
            if index.insert(name.as_str(), i).is_some() {
                return Err(invalid(format!("duplicate element `{name}`")));
            }
        }
        let lookup = |name: &str| index.get(name).copied().ok_or_else(|| invalid(format!("unknown element `{name}`")));

        let mut order = vec![false; n * n];
        match &table.leq {
            OrderSpec::Matrix(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(invalid(format!("the order matrix must be {n}×{n}")));
                }
                for (i, row) in rows.iter().enumerate() {
                    for (j, &b) in row.iter().enumerate() {
                        order[i * n + j] = b;
                    }
                }
            }
            OrderSpec::Pairs(pairs) => {
                for i in 0..n {
                    order[i * n + i] = true;
                }
                for (a, b) in pairs {
                    order[lookup(a)? * n + lookup(b)?] = true;
                }
                for k in 0..n {
                    for i in 0..n {
                        if order[i * n + k] {
                            for j in 0..n {
                                if order[k * n + j] {
                                    order[i * n + j] = true;
                                }
                            }
                        }
                    }
                }
            }
        }
        let le = |i: usize, j: usize| order[i * n + j];
        for i in 0..n {
            if !le(i, i) {
                return Err(invalid(format!("order is not reflexive at `{}`", names[i])));
            }
            for j in 0..n {
                if i != j && le(i, j) && le(j, i) {
                    return Err(invalid(format!("order is not antisymmetric: `{}` and `{}`", names[i], names[j])));
                }
                for k in 0..n {
                    if le(i, j) && le(j, k) && !le(i, k) {
                        return Err(invalid(format!(
                            "order is not transitive: `{}` ≤ `{}` ≤ `{}`",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }

        // Meets and joins: the unique greatest lower / least upper bound.
        let bound = |i: usize, j: usize, lower: bool| -> Option<usize> {
            let is_bound = |k: usize| if lower { le(k, i) && le(k, j) } else { le(i, k) && le(j, k) };
            let candidates: Vec<usize> = (0..n).filter(|&k| is_bound(k)).collect();
            candidates.iter().copied().find(|&c| candidates.iter().all(|&d| if lower { le(d, c) } else { le(c, d) }))
        };
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = bound(i, j, true)
                    .ok_or_else(|| invalid(format!("`{}` and `{}` have no meet", names[i], names[j])))?
                    as u32;
                join[i * n + j] = bound(i, j, false)
                    .ok_or_else(|| invalid(format!("`{}` and `{}` have no join", names[i], names[j])))?
                    as u32;
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|k| le(b, k))).ok_or_else(|| invalid("there is no least element"))?;
        let top = (0..n).find(|&t| (0..n).all(|k| le(k, t))).ok_or_else(|| invalid("there is no greatest element"))?;

        if table.tnorm.len() != n || table.tnorm.iter().any(|r| r.len() != n) {
            return Err(invalid(format!("the t-norm table must be {n}×{n}")));
        }
        let mut tnorm = vec![0u32; n * n];
        for (i, row) in table.tnorm.iter().enumerate() {
            for (j, name) in row.iter().enumerate() {
                tnorm[i * n + j] = lookup(name)? as u32;
            }
        }
        let t = |i: usize, j: usize| tnorm[i * n + j] as usize;
        for i in 0..n {
            if t(i, top) != i || t(top, i) != i {
                return Err(invalid(format!("the top element is not a unit at `{}`", names[i])));
            }
            for j in 0..n {
                if t(i, j) != t(j, i) {
                    return Err(invalid(format!("the t-norm is not commutative at `{}`, `{}`", names[i], names[j])));
                }
                for k in 0..n {
                    if t(t(i, j), k) != t(i, t(j, k)) {
                        return Err(invalid(format!(
                            "the t-norm is not associative at `{}`, `{}`, `{}`",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }

        // x → y is the join of every z with z ⊗ x ≤ y; it exists as a join of
        // a finite set, but only satisfies the adjunction if ⊗ distributes.
        let mut residuum = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let mut r = bottom;
                for z in 0..n {
                    if le(t(z, x), y) {
                        r = join[r * n + z] as usize;
                    }
                }
                residuum[x * n + y] = r as u32;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = le(t(x, y), z);
                    let rhs = le(x, residuum[y * n + z] as usize);
                    if lhs != rhs {
                        return Err(invalid(format!(
                            "the t-norm has no residuum: adjunction fails at `{}`, `{}`, `{}`",
                            names[x], names[y], names[z]
                        )));
                    }
                }
            }
        }

        let linear = (0..n).all(|i| (0..n).all(|j| le(i, j) || le(j, i)));
        let heyting = tnorm == meet;
        let continuous = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| t(x, meet[y * n + z] as usize) == meet[t(x, y) * n + t(x, z)] as usize))
        });

        let mut hasher = DefaultHasher::new();
        names.hash(&mut hasher);
        order.hash(&mut hasher);
        tnorm.hash(&mut hasher);
        let tag = CarrierTag(hasher.finish());

        Ok(FiniteLattice {
            name: format!("finite:{}", names.join(",")),
            rationals: names.iter().map(|s| parse_rational(s)).collect(),
            names: names.clone(),
            n,
            order,
            meet,
            join,
            tnorm,
            residuum,
            bottom,
            top,
            tag,
            linear,
            heyting,
            continuous,
        })
    }

    pub(crate) fn set_name(&mut self, name: String) {
        self.name = name;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tag(&self) -> CarrierTag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn value(&self, i: usize) -> LatticeValue {
        LatticeValue::Element { carrier: self.tag, index: i as u32 }
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i * self.n + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.n + j] as usize
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.n + j] as usize
    }

    pub fn tnorm(&self, i: usize, j: usize) -> usize {
        self.tnorm[i * self.n + j] as usize
    }

    pub fn residuum(&self, i: usize, j: usize) -> usize {
        self.residuum[i * self.n + j] as usize
    }

    pub fn is_linear(&self) -> bool {
        self.linear
    }

    pub fn is_heyting(&self) -> bool {
        self.heyting
    }

    pub fn is_continuous(&self) -> bool {
        self.continuous
    }

    /// The document form of this lattice, with the order as a full matrix.
    pub fn to_table(&self) -> FiniteTable {
        let n = self.n;
        FiniteTable {
            elements: self.names.clone(),
            leq: OrderSpec::Matrix((0..n).map(|i| (0..n).map(|j| self.leq(i, j)).collect()).collect()),
            tnorm: (0..n).map(|i| (0..n).map(|j| self.names[self.tnorm(i, j)].clone()).collect()).collect(),
        }
    }

    pub(crate) fn find_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn find_rational(&self, r: &BigRational) -> Option<usize> {
        self.rationals.iter().position(|q| q.as_ref() == Some(r))
    }
}
