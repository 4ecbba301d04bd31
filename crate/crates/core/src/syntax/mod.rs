//! Programs and formulas of fuzzy propositional dynamic logic.
//!
//! Concrete grammar, loosest binding first:
//!
//! ```text
//! formula  := or ( "->" formula )?                      right-associative
//! or       := and ( "\/" and )*
//! and      := unary ( "/\" unary )*
//! unary    := "~" unary | "<" program ">" unary | "[" program "]" unary | atom
//! atom     := number | "'" name "'" | ident | "(" formula ")"
//! program  := seq ( "|" seq )*
//! seq      := postfix ( ";" postfix )*
//! postfix  := patom "*"*
//! patom    := unary "?" | ident | "(" program ")"
//! ```
//!
//! Numbers are `p/q` or decimals. Quoted names denote elements of finite
//! lattices. An implication with a constant on either side is read as a
//! constant implication (`a -> φ` or `φ -> a`).

mod parser;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::lattice::{parse_rational, Lattice, LatticeValue};

pub use parser::{parse_formula, parse_program, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Program {
    Atomic(String),
    Test(Box<Formula>),
    Union(Box<Program>, Box<Program>),
    Compose(Box<Program>, Box<Program>),
    Star(Box<Program>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(LatticeValue),
    Prop(String),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ImpliesFromConst(LatticeValue, Box<Formula>),
    ImpliesToConst(Box<Formula>, LatticeValue),
    Not(Box<Formula>),
    Box(Program, Box<Formula>),
    Diamond(Program, Box<Formula>),
}

/// The constructors excluded from a fragment: a subset of `{∪, →, ?}`.
///
/// `→` excludes only implications between two non-constant formulas;
/// `a → φ`, `φ → a` and `¬φ` stay available.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct FragmentSpec {
    pub no_union: bool,
    pub no_implication: bool,
    pub no_test: bool,
}

impl FragmentSpec {
    /// The full language.
    pub const FULL: FragmentSpec = FragmentSpec { no_union: false, no_implication: false, no_test: false };
    /// Everything excluded.
    pub const MINIMAL: FragmentSpec = FragmentSpec { no_union: true, no_implication: true, no_test: true };

    /// Reads a comma- or space-separated list of excluded constructors:
    /// `union`/`∪`/`|`, `implication`/`→`/`->`, `test`/`?`. Braces are
    /// ignored, so `{->,?}` works; the empty string is the full language.
    pub fn parse(text: &str) -> Result<FragmentSpec, String> {
        let mut spec = FragmentSpec::FULL;
        let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
        for item in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            match item.trim() {
                "" => {}
                "union" | "∪" | "|" | "u" => spec.no_union = true,
                "implication" | "implies" | "→" | "->" => spec.no_implication = true,
                "test" | "?" => spec.no_test = true,
                other => return Err(format!("unknown fragment marker `{other}`")),
            }
        }
        Ok(spec)
    }

    /// True iff every constructor excluded here is also excluded by `other`.
    pub fn is_subset_of(&self, other: &FragmentSpec) -> bool {
        (!self.no_union || other.no_union)
            && (!self.no_implication || other.no_implication)
            && (!self.no_test || other.no_test)
    }
}

impl fmt::Display for FragmentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.no_union {
            parts.push("∪");
        }
        if self.no_implication {
            parts.push("→");
        }
        if self.no_test {
            parts.push("?");
        }
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Which constructors a formula actually uses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ConstructorUsage {
    pub union: bool,
    /// Implications between two non-constant formulas.
    pub implication: bool,
    pub test: bool,
}

impl Program {
    pub fn atomic(name: impl Into<String>) -> Program {
        Program::Atomic(name.into())
    }

    pub fn test(f: Formula) -> Program {
        Program::Test(Box::new(f))
    }

    pub fn union(a: Program, b: Program) -> Program {
        Program::Union(Box::new(a), Box::new(b))
    }

    pub fn compose(a: Program, b: Program) -> Program {
        Program::Compose(Box::new(a), Box::new(b))
    }

    pub fn star(a: Program) -> Program {
        Program::Star(Box::new(a))
    }

    pub fn in_fragment(&self, spec: &FragmentSpec) -> bool {
        let u = self.usage();
        !(spec.no_union && u.union || spec.no_implication && u.implication || spec.no_test && u.test)
    }

    pub fn usage(&self) -> ConstructorUsage {
        let mut u = ConstructorUsage::default();
        self.collect_usage(&mut u);
        u
    }

    fn collect_usage(&self, u: &mut ConstructorUsage) {
        match self {
            Program::Atomic(_) => {}
            Program::Test(f) => {
                u.test = true;
                f.collect_usage(u);
            }
            Program::Union(a, b) => {
                u.union = true;
                a.collect_usage(u);
                b.collect_usage(u);
            }
            Program::Compose(a, b) => {
                a.collect_usage(u);
                b.collect_usage(u);
            }
            Program::Star(a) => a.collect_usage(u),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Program::Atomic(_) => 0,
            Program::Test(f) => f.depth(),
            Program::Union(a, b) | Program::Compose(a, b) => a.depth().max(b.depth()),
            Program::Star(a) => a.depth(),
        }
    }

    pub fn actions(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        self.collect_symbols(&mut BTreeSet::new(), &mut acc);
        acc
    }

    pub fn props(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        self.collect_symbols(&mut acc, &mut BTreeSet::new());
        acc
    }

    fn collect_symbols(&self, props: &mut BTreeSet<String>, actions: &mut BTreeSet<String>) {
        match self {
            Program::Atomic(a) => {
                actions.insert(a.clone());
            }
            Program::Test(f) => f.collect_symbols(props, actions),
            Program::Union(a, b) | Program::Compose(a, b) => {
                a.collect_symbols(props, actions);
                b.collect_symbols(props, actions);
            }
            Program::Star(a) => a.collect_symbols(props, actions),
        }
    }

    /// Normalizes every formula inside the program; see [`Formula::canonical`].
    pub fn canonical(&self) -> Program {
        match self {
            Program::Atomic(a) => Program::Atomic(a.clone()),
            Program::Test(f) => Program::test(f.canonical()),
            Program::Union(a, b) => Program::union(a.canonical(), b.canonical()),
            Program::Compose(a, b) => Program::compose(a.canonical(), b.canonical()),
            Program::Star(a) => Program::star(a.canonical()),
        }
    }

    /// A printable view; constants need the lattice to be rendered.
    pub fn display<'a>(&'a self, lattice: &'a Lattice) -> ProgramDisplay<'a> {
        ProgramDisplay { program: self, lattice }
    }
}

impl Formula {
    pub fn constant(v: LatticeValue) -> Formula {
        Formula::Const(v)
    }

    pub fn prop(name: impl Into<String>) -> Formula {
        Formula::Prop(name.into())
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn from_const(a: LatticeValue, f: Formula) -> Formula {
        Formula::ImpliesFromConst(a, Box::new(f))
    }

    pub fn to_const(f: Formula, a: LatticeValue) -> Formula {
        Formula::ImpliesToConst(Box::new(f), a)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn boxed(p: Program, f: Formula) -> Formula {
        Formula::Box(p, Box::new(f))
    }

    pub fn diamond(p: Program, f: Formula) -> Formula {
        Formula::Diamond(p, Box::new(f))
    }

    /// `φ₁ ∧ (φ₂ ∧ (… ∧ 1))`; the empty conjunction is `1`.
    pub fn big_wedge<I>(lattice: &Lattice, formulas: I) -> Formula
    where
        I: IntoIterator<Item = Formula>,
        I::IntoIter: DoubleEndedIterator,
    {
        formulas.into_iter().rev().fold(Formula::Const(lattice.one()), |acc, f| Formula::and(f, acc))
    }

    /// Membership in the fragment that excludes the constructors in `spec`.
    pub fn in_fragment(&self, spec: &FragmentSpec) -> bool {
        let u = self.usage();
        !(spec.no_union && u.union || spec.no_implication && u.implication || spec.no_test && u.test)
    }

    /// The constructors this formula uses. An `Implies` node with a constant
    /// side counts as a constant implication, not a full one.
    pub fn usage(&self) -> ConstructorUsage {
        let mut u = ConstructorUsage::default();
        self.collect_usage(&mut u);
        u
    }

    fn collect_usage(&self, u: &mut ConstructorUsage) {
        match self {
            Formula::Const(_) | Formula::Prop(_) => {}
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_usage(u);
                b.collect_usage(u);
            }
            Formula::Implies(a, b) => {
                let constant_side = matches!(**a, Formula::Const(_)) || matches!(**b, Formula::Const(_));
                if !constant_side {
                    u.implication = true;
                }
                a.collect_usage(u);
                b.collect_usage(u);
            }
            Formula::ImpliesFromConst(_, f) | Formula::ImpliesToConst(f, _) | Formula::Not(f) => f.collect_usage(u),
            Formula::Box(p, f) | Formula::Diamond(p, f) => {
                p.collect_usage(u);
                f.collect_usage(u);
            }
        }
    }

    /// Membership in the language built from `a`, `p`, `φ ∧ ψ`, `a → φ`,
    /// `φ → a` and `⟨ϱ⟩φ` with atomic `ϱ`.
    pub fn is_fkz(&self) -> bool {
        match self {
            Formula::Const(_) | Formula::Prop(_) => true,
            Formula::And(a, b) => a.is_fkz() && b.is_fkz(),
            Formula::ImpliesFromConst(_, f) | Formula::ImpliesToConst(f, _) => f.is_fkz(),
            Formula::Diamond(Program::Atomic(_), f) => f.is_fkz(),
            _ => false,
        }
    }

    /// Nesting depth: constants and propositions have depth 0, every
    /// connective and modality adds one.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Prop(_) => 0,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.depth().max(b.depth()),
            Formula::ImpliesFromConst(_, f) | Formula::ImpliesToConst(f, _) | Formula::Not(f) => 1 + f.depth(),
            Formula::Box(p, f) | Formula::Diamond(p, f) => 1 + p.depth().max(f.depth()),
        }
    }

    /// Number of nodes, programs included.
    pub fn size(&self) -> usize {
        fn psize(p: &Program) -> usize {
            match p {
                Program::Atomic(_) => 1,
                Program::Test(f) => 1 + f.size(),
                Program::Union(a, b) | Program::Compose(a, b) => 1 + psize(a) + psize(b),
                Program::Star(a) => 1 + psize(a),
            }
        }
        match self {
            Formula::Const(_) | Formula::Prop(_) => 1,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.size() + b.size(),
            Formula::ImpliesFromConst(_, f) | Formula::ImpliesToConst(f, _) | Formula::Not(f) => 1 + f.size(),
            Formula::Box(p, f) | Formula::Diamond(p, f) => 1 + psize(p) + f.size(),
        }
    }

    pub fn props(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        self.collect_symbols(&mut acc, &mut BTreeSet::new());
        acc
    }

    pub fn actions(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        self.collect_symbols(&mut BTreeSet::new(), &mut acc);
        acc
    }

    fn collect_symbols(&self, props: &mut BTreeSet<String>, actions: &mut BTreeSet<String>) {
        match self {
            Formula::Const(_) => {}
            Formula::Prop(p) => {
                props.insert(p.clone());
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_symbols(props, actions);
                b.collect_symbols(props, actions);
            }
            Formula::ImpliesFromConst(_, f) | Formula::ImpliesToConst(f, _) | Formula::Not(f) => {
                f.collect_symbols(props, actions)
            }
            Formula::Box(p, f) | Formula::Diamond(p, f) => {
                p.collect_symbols(props, actions);
                f.collect_symbols(props, actions);
            }
        }
    }

    /// Direct subformulas, programs' tests included, in left-to-right order.
    pub fn children(&self) -> Vec<&Formula> {
        fn tests<'a>(p: &'a Program, out: &mut Vec<&'a Formula>) {
            match p {
                Program::Atomic(_) => {}
                Program::Test(f) => out.push(f),
                Program::Union(a, b) | Program::Compose(a, b) => {
                    tests(a, out);
                    tests(b, out);
                }
                Program::Star(a) => tests(a, out),
            }
        }
        let mut out = Vec::new();
        match self {
            Formula::Const(_) | Formula::Prop(_) => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                out.push(&**a);
                out.push(&**b);
            }
            Formula::ImpliesFromConst(_, f) | Formula::ImpliesToConst(f, _) | Formula::Not(f) => out.push(f),
            Formula::Box(p, f) | Formula::Diamond(p, f) => {
                tests(p, &mut out);
                out.push(f);
            }
        }
        out
    }

    /// The form the parser produces for this formula's printed text:
    /// implications with a constant side become constant implications.
    pub fn canonical(&self) -> Formula {
        match self {
            Formula::Const(_) | Formula::Prop(_) => self.clone(),
            Formula::And(a, b) => Formula::and(a.canonical(), b.canonical()),
            Formula::Or(a, b) => Formula::or(a.canonical(), b.canonical()),
            Formula::Implies(a, b) => match (&**a, &**b) {
                (Formula::Const(c), _) => Formula::from_const(c.clone(), b.canonical()),
                (_, Formula::Const(c)) => Formula::to_const(a.canonical(), c.clone()),
                _ => Formula::implies(a.canonical(), b.canonical()),
            },
            Formula::ImpliesFromConst(c, f) => Formula::from_const(c.clone(), f.canonical()),
            Formula::ImpliesToConst(f, c) => match &**f {
                Formula::Const(a) => Formula::from_const(a.clone(), Formula::Const(c.clone())),
                _ => Formula::to_const(f.canonical(), c.clone()),
            },
            Formula::Not(f) => Formula::not(f.canonical()),
            Formula::Box(p, f) => Formula::boxed(p.canonical(), f.canonical()),
            Formula::Diamond(p, f) => Formula::diamond(p.canonical(), f.canonical()),
        }
    }

    /// A printable view; constants need the lattice to be rendered.
    pub fn display<'a>(&'a self, lattice: &'a Lattice) -> FormulaDisplay<'a> {
        FormulaDisplay { formula: self, lattice }
    }

    /// The printed text, as accepted by [`parse_formula`].
    pub fn to_text(&self, lattice: &Lattice) -> String {
        self.display(lattice).to_string()
    }
}

pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    lattice: &'a Lattice,
}

pub struct ProgramDisplay<'a> {
    program: &'a Program,
    lattice: &'a Lattice,
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self.lattice, self.formula, 0)
    }
}

impl fmt::Display for ProgramDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_program(f, self.lattice, self.program, 0)
    }
}

const P_IMPLIES: u8 = 1;
const P_OR: u8 = 2;
const P_AND: u8 = 3;
const P_UNARY: u8 = 4;
const P_ATOM: u8 = 5;

fn formula_prec(f: &Formula) -> u8 {
    match f {
        Formula::Const(_) | Formula::Prop(_) => P_ATOM,
        Formula::Not(_) | Formula::Box(..) | Formula::Diamond(..) => P_UNARY,
        Formula::And(..) => P_AND,
        Formula::Or(..) => P_OR,
        Formula::Implies(..) | Formula::ImpliesFromConst(..) | Formula::ImpliesToConst(..) => P_IMPLIES,
    }
}

fn write_const(f: &mut fmt::Formatter<'_>, l: &Lattice, v: &LatticeValue) -> fmt::Result {
    let text = l.format_value(v);
    if parse_rational(&text).is_some() {
        f.write_str(&text)
    } else {
        write!(f, "'{text}'")
    }
}

fn write_formula(f: &mut fmt::Formatter<'_>, l: &Lattice, phi: &Formula, min: u8) -> fmt::Result {
    let prec = formula_prec(phi);
    if prec < min {
        f.write_str("(")?;
        write_formula(f, l, phi, 0)?;
        return f.write_str(")");
    }
    match phi {
        Formula::Const(v) => write_const(f, l, v),
        Formula::Prop(p) => f.write_str(p),
        Formula::And(a, b) => {
            write_formula(f, l, a, P_AND)?;
            f.write_str(" /\\ ")?;
            write_formula(f, l, b, P_UNARY)
        }
        Formula::Or(a, b) => {
            write_formula(f, l, a, P_OR)?;
            f.write_str(" \\/ ")?;
            write_formula(f, l, b, P_AND)
        }
        Formula::Implies(a, b) => {
            write_formula(f, l, a, P_OR)?;
            f.write_str(" -> ")?;
            write_formula(f, l, b, P_IMPLIES)
        }
        Formula::ImpliesFromConst(c, b) => {
            write_const(f, l, c)?;
            f.write_str(" -> ")?;
            write_formula(f, l, b, P_IMPLIES)
        }
        Formula::ImpliesToConst(a, c) => {
            write_formula(f, l, a, P_OR)?;
            f.write_str(" -> ")?;
            write_const(f, l, c)
        }
        Formula::Not(a) => {
            f.write_str("~")?;
            write_formula(f, l, a, P_UNARY)
        }
        Formula::Box(p, a) => {
            f.write_str("[")?;
            write_program(f, l, p, 0)?;
            f.write_str("]")?;
            write_formula(f, l, a, P_UNARY)
        }
        Formula::Diamond(p, a) => {
            f.write_str("<")?;
            write_program(f, l, p, 0)?;
            f.write_str(">")?;
            write_formula(f, l, a, P_UNARY)
        }
    }
}

const Q_UNION: u8 = 1;
const Q_SEQ: u8 = 2;
const Q_STAR: u8 = 3;
const Q_ATOM: u8 = 4;

fn write_program(f: &mut fmt::Formatter<'_>, l: &Lattice, p: &Program, min: u8) -> fmt::Result {
    let prec = match p {
        Program::Atomic(_) | Program::Test(_) => Q_ATOM,
        Program::Star(_) => Q_STAR,
        Program::Compose(..) => Q_SEQ,
        Program::Union(..) => Q_UNION,
    };
    if prec < min {
        f.write_str("(")?;
        write_program(f, l, p, 0)?;
        return f.write_str(")");
    }
    match p {
        Program::Atomic(a) => f.write_str(a),
        Program::Test(phi) => {
            if formula_prec(phi) >= P_UNARY {
                write_formula(f, l, phi, P_UNARY)?;
            } else {
                f.write_str("(")?;
                write_formula(f, l, phi, 0)?;
                f.write_str(")")?;
            }
            f.write_str("?")
        }
        Program::Union(a, b) => {
            write_program(f, l, a, Q_UNION)?;
            f.write_str(" | ")?;
            write_program(f, l, b, Q_SEQ)
        }
        Program::Compose(a, b) => {
            write_program(f, l, a, Q_SEQ)?;
            f.write_str(" ; ")?;
            write_program(f, l, b, Q_STAR)
        }
        Program::Star(a) => {
            write_program(f, l, a, Q_STAR)?;
            f.write_str("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> Lattice {
        Lattice::godel()
    }

    fn parse(s: &str) -> Formula {
        parse_formula(s, &g()).unwrap()
    }

    #[test]
    fn fragment_membership() {
        let phi = parse("p -> q");
        assert!(!phi.in_fragment(&FragmentSpec::parse("->").unwrap()));
        assert!(phi.in_fragment(&FragmentSpec::FULL));
        let not = parse("~p");
        assert!(not.in_fragment(&FragmentSpec::MINIMAL));
        let union = parse("<r | s>p");
        assert!(union.in_fragment(&FragmentSpec::FULL));
        assert!(!union.in_fragment(&FragmentSpec::parse("union").unwrap()));
        let test = parse("[p?]q");
        assert!(!test.in_fragment(&FragmentSpec::parse("{?}").unwrap()));
        // An implication node with a constant side is a constant implication.
        let manual = Formula::implies(Formula::prop("p"), Formula::Const(g().zero()));
        assert!(manual.in_fragment(&FragmentSpec::MINIMAL));
    }

    #[test]
    fn fkz_membership() {
        assert!(parse("<r>(p /\\ 0.5)").is_fkz());
        assert!(parse("0.3 -> <r>(p -> 0.5)").is_fkz());
        assert!(!parse("[r]p").is_fkz());
        assert!(!parse("<r*>p").is_fkz());
        assert!(!parse("<r;s>p").is_fkz());
        assert!(!parse("p \\/ q").is_fkz());
        assert!(!parse("~p").is_fkz());
    }

    #[test]
    fn big_wedge_shape() {
        let l = g();
        assert_eq!(Formula::big_wedge(&l, vec![]), Formula::Const(l.one()));
        let p = Formula::prop("p");
        let q = Formula::prop("q");
        assert_eq!(Formula::big_wedge(&l, vec![p.clone()]), Formula::and(p.clone(), Formula::Const(l.one())));
        assert_eq!(
            Formula::big_wedge(&l, vec![p.clone(), q.clone()]),
            Formula::and(p, Formula::and(q, Formula::Const(l.one())))
        );
    }

    #[test]
    fn printing_uses_minimal_parentheses() {
        let l = g();
        for text in [
            "<r*>p",
            "p -> 1/2",
            "[p? ; r](q \\/ 3/10)",
            "p /\\ (q /\\ 1)",
            "(p -> q) -> r",
            "p -> q -> r",
            "~<r | s ; t*>p",
            "[(p /\\ q)? | (r ; s)*]0",
            "<(r | s) ; t>p",
            "(p \\/ q) /\\ r",
        ] {
            let phi = parse(text);
            assert_eq!(phi.to_text(&l), text);
        }
    }

    #[test]
    fn depth_and_symbols() {
        let phi = parse("<r>(p -> 0.5) /\\ [s*]q");
        assert_eq!(phi.depth(), 3);
        assert_eq!(phi.props().into_iter().collect::<Vec<_>>(), ["p", "q"]);
        assert_eq!(phi.actions().into_iter().collect::<Vec<_>>(), ["r", "s"]);
        assert_eq!(parse("p").depth(), 0);
    }

    #[test]
    fn fragment_spec_parsing() {
        assert_eq!(FragmentSpec::parse("").unwrap(), FragmentSpec::FULL);
        assert_eq!(FragmentSpec::parse("{∪,→,?}").unwrap(), FragmentSpec::MINIMAL);
        assert!(FragmentSpec::parse("star").is_err());
        assert_eq!(FragmentSpec::parse("->,?").unwrap().to_string(), "{→,?}");
    }
}
