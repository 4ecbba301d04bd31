//! Tokenizer and recursive-descent parser for formulas and programs.

use crate::lattice::{Lattice, LatticeError, LatticeValue};

use super::{Formula, Program};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("at offset {position}: constant `{text}`: {source}")]
    Constant {
        position: usize,
        text: String,
        #[source]
        source: LatticeError,
    },
}

impl SyntaxError {
    pub fn position(&self) -> usize {
        match self {
            SyntaxError::Parse { position, .. } | SyntaxError::Constant { position, .. } => *position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Lt,
    Gt,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Semi,
    Bar,
    Star,
    Question,
    And,
    Or,
    Arrow,
    Tilde,
    Ident(String),
    Number(String),
    Quoted(String),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Lt => "`<`".into(),
            Tok::Gt => "`>`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Star => "`*`".into(),
            Tok::Question => "`?`".into(),
            Tok::And => "`/\\`".into(),
            Tok::Or => "`\\/`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::Quoted(s) => format!("constant `'{s}'`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn err(position: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError::Parse { position, message: message.into() }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let next = chars.get(i + 1).map(|&(_, c)| c);
        let single = match c {
            '<' => Some(Tok::Lt),
            '>' => Some(Tok::Gt),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ';' => Some(Tok::Semi),
            '|' => Some(Tok::Bar),
            '*' => Some(Tok::Star),
            '?' => Some(Tok::Question),
            '~' => Some(Tok::Tilde),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match (c, next) {
            ('/', Some('\\')) => {
                out.push((Tok::And, pos));
                i += 2;
            }
            ('\\', Some('/')) => {
                out.push((Tok::Or, pos));
                i += 2;
            }
            ('-', Some('>')) => {
                out.push((Tok::Arrow, pos));
                i += 2;
            }
            ('\'', _) => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].1 != '\'' {
                    j += 1;
                }
                if j == chars.len() {
                    return Err(err(pos, "unterminated quoted constant"));
                }
                let name: String = chars[start..j].iter().map(|&(_, c)| c).collect();
                out.push((Tok::Quoted(name), pos));
                i = j + 1;
            }
            (c, _) if c.is_ascii_digit() || (c == '.' && next.is_some_and(|n| n.is_ascii_digit())) => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                    i += 1;
                }
                // A slash continues the number only when a digit follows;
                // `1/\p` is `1 /\ p`.
                if i + 1 < chars.len() && chars[i].1 == '/' && chars[i + 1].1.is_ascii_digit() {
                    i += 1;
                    while i < chars.len() && chars[i].1.is_ascii_digit() {
                        i += 1;
                    }
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((Tok::Number(s), pos));
            }
            (c, _) if is_ident_start(c) => {
                let start = i;
                while i < chars.len() && is_ident_continue(chars[i].1) {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((Tok::Ident(s), pos));
            }
            _ => return Err(err(pos, format!("unexpected character `{c}`"))),
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    lattice: &'a Lattice,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), SyntaxError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(err(self.offset(), format!("expected {}, found {}", want.describe(), self.peek().describe())))
        }
    }

    fn constant(&self, text: &str, position: usize) -> Result<LatticeValue, SyntaxError> {
        self.lattice.parse_value(text).map_err(|source| SyntaxError::Constant {
            position,
            text: text.to_string(),
            source,
        })
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.or()?;
        if *self.peek() != Tok::Arrow {
            return Ok(lhs);
        }
        self.bump();
        let rhs = self.formula()?;
        Ok(match (lhs, rhs) {
            (Formula::Const(a), rhs) => Formula::from_const(a, rhs),
            (lhs, Formula::Const(a)) => Formula::to_const(lhs, a),
            (lhs, rhs) => Formula::implies(lhs, rhs),
        })
    }

    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Lt => {
                self.bump();
                let p = self.program()?;
                self.expect(Tok::Gt)?;
                Ok(Formula::diamond(p, self.unary()?))
            }
            Tok::LBrack => {
                self.bump();
                let p = self.program()?;
                self.expect(Tok::RBrack)?;
                Ok(Formula::boxed(p, self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, SyntaxError> {
        let at = self.offset();
        match self.bump() {
            Tok::Number(s) | Tok::Quoted(s) => Ok(Formula::Const(self.constant(&s, at)?)),
            Tok::Ident(s) => Ok(Formula::Prop(s)),
            Tok::LParen => {
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            other => Err(err(at, format!("expected a formula, found {}", other.describe()))),
        }
    }

    fn program(&mut self) -> Result<Program, SyntaxError> {
        let mut acc = self.seq()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            let rhs = self.seq()?;
            acc = Program::union(acc, rhs);
        }
        Ok(acc)
    }

    fn seq(&mut self) -> Result<Program, SyntaxError> {
        let mut acc = self.postfix()?;
        while *self.peek() == Tok::Semi {
            self.bump();
            let rhs = self.postfix()?;
            acc = Program::compose(acc, rhs);
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Program, SyntaxError> {
        let mut acc = self.program_atom()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Program::star(acc);
        }
        Ok(acc)
    }

    fn program_atom(&mut self) -> Result<Program, SyntaxError> {
        // A test is a unary formula followed by `?`; try that first and fall
        // back to an action name or a parenthesized program.
        let start = self.pos;
        if let Ok(f) = self.unary() {
            if *self.peek() == Tok::Question {
                self.bump();
                return Ok(Program::test(f));
            }
        }
        self.pos = start;
        let at = self.offset();
        match self.bump() {
            Tok::Ident(s) => Ok(Program::Atomic(s)),
            Tok::LParen => {
                let p = self.program()?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            other => Err(err(at, format!("expected a program, found {}", other.describe()))),
        }
    }

    fn finish(&mut self) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(err(self.offset(), format!("unexpected {}", self.peek().describe())))
        }
    }
}

/// Parses a formula; constants are read in `lattice`.
pub fn parse_formula(text: &str, lattice: &Lattice) -> Result<Formula, SyntaxError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, lattice };
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a program; test constants are read in `lattice`.
pub fn parse_program(text: &str, lattice: &Lattice) -> Result<Program, SyntaxError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, lattice };
    let a = p.program()?;
    p.finish()?;
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> Lattice {
        Lattice::godel()
    }

    fn half() -> LatticeValue {
        g().parse_value("1/2").unwrap()
    }

    #[test]
    fn grammar_mapping() {
        let l = g();
        assert_eq!(
            parse_formula("<r*>p", &l).unwrap(),
            Formula::diamond(Program::star(Program::atomic("r")), Formula::prop("p"))
        );
        assert_eq!(parse_formula("p -> 0.5", &l).unwrap(), Formula::to_const(Formula::prop("p"), half()));
        assert_eq!(
            parse_formula("[p? ; r](q \\/ 0.3)", &l).unwrap(),
            Formula::boxed(
                Program::compose(Program::test(Formula::prop("p")), Program::atomic("r")),
                Formula::or(Formula::prop("q"), Formula::Const(l.parse_value("3/10").unwrap()))
            )
        );
        assert_eq!(parse_formula("1/2 -> p", &l).unwrap(), Formula::from_const(half(), Formula::prop("p")));
    }

    #[test]
    fn precedence() {
        let l = g();
        let p = || Formula::prop("p");
        let q = || Formula::prop("q");
        let r = || Formula::prop("r");
        assert_eq!(parse_formula("p /\\ q \\/ r", &l).unwrap(), Formula::or(Formula::and(p(), q()), r()));
        assert_eq!(parse_formula("p -> q -> r", &l).unwrap(), Formula::implies(p(), Formula::implies(q(), r())));
        assert_eq!(parse_formula("~p /\\ q", &l).unwrap(), Formula::and(Formula::not(p()), q()));
        let a = || Program::atomic("a");
        let b = || Program::atomic("b");
        let c = || Program::atomic("c");
        assert_eq!(
            parse_program("a | b ; c*", &l).unwrap(),
            Program::union(a(), Program::compose(b(), Program::star(c())))
        );
        assert_eq!(parse_program("(a | b)*", &l).unwrap(), Program::star(Program::union(a(), b())));
        assert_eq!(parse_program("(p /\\ q)?", &l).unwrap(), Program::test(Formula::and(p(), q())));
        assert_eq!(parse_program("(a?)", &l).unwrap(), Program::test(Formula::prop("a")));
    }

    #[test]
    fn slash_disambiguation() {
        let l = g();
        assert_eq!(parse_formula("1/\\p", &l).unwrap(), Formula::and(Formula::Const(l.one()), Formula::prop("p")));
        assert_eq!(parse_formula("3/4", &l).unwrap(), Formula::Const(l.parse_value("0.75").unwrap()));
    }

    #[test]
    fn errors_carry_positions() {
        let l = g();
        let e = parse_formula("p /\\ ", &l).unwrap_err();
        assert_eq!(e.position(), 5);
        let e = parse_formula("<r p", &l).unwrap_err();
        assert_eq!(e.position(), 3);
        assert!(matches!(parse_formula("p -> 1.5", &l), Err(SyntaxError::Constant { position: 5, .. })));
        assert!(parse_formula("p $ q", &l).is_err());
        assert!(parse_formula("(p", &l).is_err());
        assert!(parse_formula("p q", &l).is_err());
    }

    #[test]
    fn quoted_constants_name_finite_elements() {
        let doc = r#"{"elements":["0","a","b","1"],"leq":[["0","a"],["0","b"],["a","1"],["b","1"]],
            "tnorm":[["0","0","0","0"],["0","a","0","a"],["0","0","b","b"],["0","a","b","1"]]}"#;
        let l = Lattice::from_json(doc).unwrap();
        let f = parse_formula("p -> 'a'", &l).unwrap();
        assert_eq!(f, Formula::to_const(Formula::prop("p"), l.parse_value("a").unwrap()));
        assert_eq!(f.to_text(&l), "p -> 'a'");
        assert!(parse_formula("'c'", &l).is_err());
    }
}
