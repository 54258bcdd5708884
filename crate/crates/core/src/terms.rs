//! Term syntax for the equational language, with parser, printer, evaluator,
//! and brute-force identity / quasi-identity checking.
//!
//! Concrete syntax: variables are identifiers; `0` and `1` are the bounds;
//! postfix `*` (tightest) is `_ -> 0`; `^` is meet, `v` is join (so `v` is a
//! reserved word, not a variable); `->` is the arrow, right-associative and
//! loosest; parentheses group; whitespace is insignificant. Proof formulas
//! additionally allow `~t` for `t -> 0` and the constants `T` / `F`.

use crate::algebra::SemiHeytingAlgebra;
use crate::lattice::Elem;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Abstract syntax of a term (also used for proof formulas).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Variable(String),
    ConstBottom,
    ConstTop,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Arrow(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Variable(name.into())
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::Meet(Box::new(l), Box::new(r))
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::Join(Box::new(l), Box::new(r))
    }

    pub fn arrow(l: Term, r: Term) -> Term {
        Term::Arrow(Box::new(l), Box::new(r))
    }

    /// `t* = t -> 0`; in formula contexts the same tree is negation.
    pub fn star(t: Term) -> Term {
        Term::arrow(t, Term::ConstBottom)
    }

    /// The distinct variable names, sorted.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Variable(n) => {
                out.insert(n.clone());
            }
            Term::ConstBottom | Term::ConstTop => {}
            Term::Meet(l, r) | Term::Join(l, r) | Term::Arrow(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }
}

/// An equation `lhs = rhs` between two terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = self.lhs.vars();
        out.extend(self.rhs.vars());
        out
    }
}

/// Premises entailing at least one of several alternative conclusions.
///
/// The disjunctive conclusion list is what lets the subdirect-irreducibility
/// condition "`x v y = 1` implies `x = 1` or `y = 1`" live in the same shape;
/// an ordinary quasi-identity uses a single conclusion, and an identity is
/// the degenerate case with no premises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiIdentity {
    pub premises: Vec<Identity>,
    pub conclusions: Vec<Identity>,
}

impl QuasiIdentity {
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for id in self.premises.iter().chain(&self.conclusions) {
            out.extend(id.vars());
        }
        out
    }
}

/// Variable bindings; BTreeMap so display and JSON order is alphabetical.
pub type Assignment = BTreeMap<String, Elem>;

/// Renders bindings as `x=1, y=0`.
pub fn fmt_assignment(asg: &Assignment) -> String {
    asg.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

// ---------------------------------------------------------------------------
// Printing

// Binding strength, loosest to tightest: arrow 1, join 2, meet 3, atoms and
// postfix star 4. The printer inserts parentheses exactly where reparsing
// would otherwise change the tree.
fn level(t: &Term) -> u8 {
    match t {
        Term::Arrow(_, r) if **r == Term::ConstBottom => 4,
        Term::Variable(_) | Term::ConstBottom | Term::ConstTop => 4,
        Term::Meet(..) => 3,
        Term::Join(..) => 2,
        Term::Arrow(..) => 1,
    }
}

fn fmt_prec(t: &Term, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(t) < min {
        write!(f, "(")?;
        fmt_prec(t, 1, f)?;
        return write!(f, ")");
    }
    match t {
        Term::Variable(n) => write!(f, "{n}"),
        Term::ConstBottom => write!(f, "0"),
        Term::ConstTop => write!(f, "1"),
        Term::Arrow(l, r) if **r == Term::ConstBottom => {
            fmt_prec(l, 4, f)?;
            write!(f, "*")
        }
        Term::Meet(l, r) => {
            fmt_prec(l, 3, f)?;
            write!(f, " ^ ")?;
            fmt_prec(r, 4, f)
        }
        Term::Join(l, r) => {
            fmt_prec(l, 2, f)?;
            write!(f, " v ")?;
            fmt_prec(r, 3, f)
        }
        Term::Arrow(l, r) => {
            fmt_prec(l, 2, f)?;
            write!(f, " -> ")?;
            fmt_prec(r, 1, f)
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 1, f)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl fmt::Display for QuasiIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ids: &[Identity], sep: &str| {
            ids.iter()
                .map(Identity::to_string)
                .collect::<Vec<_>>()
                .join(sep)
        };
        if !self.premises.is_empty() {
            write!(f, "{} => ", list(&self.premises, " & "))?;
        }
        write!(f, "{}", list(&self.conclusions, " | "))
    }
}

// ---------------------------------------------------------------------------
// Lexing and parsing

/// What went wrong while reading concrete syntax; offsets are 0-based chars.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {ch:?} at offset {at}")]
    UnexpectedChar { ch: char, at: usize },
    #[error("numeral {lit:?} at offset {at} is not a constant (only 0 and 1 exist)")]
    UnknownNumeral { lit: String, at: usize },
    #[error("negation '~' at offset {at} is only available in proof formulas")]
    NegationOutsideFormula { at: usize },
    #[error("unexpected {found} at offset {at}; expected {expected}")]
    UnexpectedToken {
        found: String,
        at: usize,
        expected: &'static str,
    },
    #[error("unexpected end of input; expected {expected}")]
    UnexpectedEnd { expected: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Caret,
    Vee,
    Arrow,
    Star,
    Tilde,
    LParen,
    RParen,
    Eq,
    Leq,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Zero => "'0'".into(),
            Tok::One => "'1'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Vee => "'v'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Star => "'*'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eq => "'='".into(),
            Tok::Leq => "'<='".into(),
        }
    }
}

struct Lexed {
    tok: Tok,
    at: usize,
}

fn lex(input: &str) -> Result<Vec<Lexed>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let at = i;
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '^' => Tok::Caret,
            '*' => Tok::Star,
            '~' => Tok::Tilde,
            '=' => Tok::Eq,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Arrow
            }
            '<' if chars.get(i + 1) == Some(&'=') => {
                i += 1;
                Tok::Leq
            }
            '0'..='9' => {
                let mut lit = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    lit.push(chars[i]);
                    i += 1;
                }
                out.push(Lexed {
                    tok: match lit.as_str() {
                        "0" => Tok::Zero,
                        "1" => Tok::One,
                        _ => return Err(ParseError::UnknownNumeral { lit, at }),
                    },
                    at,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    name.push(chars[i]);
                    i += 1;
                }
                out.push(Lexed {
                    tok: if name == "v" { Tok::Vee } else { Tok::Ident(name) },
                    at,
                });
                continue;
            }
            ch => return Err(ParseError::UnexpectedChar { ch, at }),
        };
        i += 1;
        out.push(Lexed { tok, at });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
    formula: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Lexed> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Lexed> {
        let l = self.toks.get(self.pos);
        if l.is_some() {
            self.pos += 1;
        }
        l
    }

    fn eat(&mut self, want: &Tok, expected: &'static str) -> Result<(), ParseError> {
        match self.peek() {
            Some(l) if &l.tok == want => {
                self.pos += 1;
                Ok(())
            }
            Some(l) => Err(ParseError::UnexpectedToken {
                found: l.tok.describe(),
                at: l.at,
                expected,
            }),
            None => Err(ParseError::UnexpectedEnd { expected }),
        }
    }

    fn at_end_or_err(&self, expected: &'static str) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(l) => Err(ParseError::UnexpectedToken {
                found: l.tok.describe(),
                at: l.at,
                expected,
            }),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let lhs = self.join_term()?;
        if matches!(self.peek(), Some(l) if l.tok == Tok::Arrow) {
            self.pos += 1;
            let rhs = self.term()?; // right-associative
            return Ok(Term::arrow(lhs, rhs));
        }
        Ok(lhs)
    }

    fn join_term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.meet_term()?;
        while matches!(self.peek(), Some(l) if l.tok == Tok::Vee) {
            self.pos += 1;
            t = Term::join(t, self.meet_term()?);
        }
        Ok(t)
    }

    fn meet_term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.unary_term()?;
        while matches!(self.peek(), Some(l) if l.tok == Tok::Caret) {
            self.pos += 1;
            t = Term::meet(t, self.unary_term()?);
        }
        Ok(t)
    }

    fn unary_term(&mut self) -> Result<Term, ParseError> {
        if let Some(l) = self.peek() {
            if l.tok == Tok::Tilde {
                let at = l.at;
                if !self.formula {
                    return Err(ParseError::NegationOutsideFormula { at });
                }
                self.pos += 1;
                return Ok(Term::star(self.unary_term()?));
            }
        }
        self.postfix_term()
    }

    fn postfix_term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while matches!(self.peek(), Some(l) if l.tok == Tok::Star) {
            self.pos += 1;
            t = Term::star(t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let formula = self.formula;
        match self.bump() {
            Some(l) => match &l.tok {
                Tok::Zero => Ok(Term::ConstBottom),
                Tok::One => Ok(Term::ConstTop),
                Tok::Ident(name) if formula && name == "T" => Ok(Term::ConstTop),
                Tok::Ident(name) if formula && name == "F" => Ok(Term::ConstBottom),
                Tok::Ident(name) => Ok(Term::Variable(name.clone())),
                Tok::LParen => {
                    let t = self.term()?;
                    self.eat(&Tok::RParen, "')'")?;
                    Ok(t)
                }
                tok => Err(ParseError::UnexpectedToken {
                    found: tok.describe(),
                    at: l.at,
                    expected: "a term",
                }),
            },
            None => Err(ParseError::UnexpectedEnd { expected: "a term" }),
        }
    }
}

fn parser_for(input: &str, formula: bool) -> Result<Parser, ParseError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(Parser {
        toks,
        pos: 0,
        formula,
    })
}

/// Parses a term in the equational syntax.
pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let mut p = parser_for(input, false)?;
    let t = p.term()?;
    p.at_end_or_err("end of input")?;
    Ok(t)
}

/// Parses a proof formula: the term syntax plus `~t` and the constants `T`/`F`.
pub fn parse_formula(input: &str) -> Result<Term, ParseError> {
    let mut p = parser_for(input, true)?;
    let t = p.term()?;
    p.at_end_or_err("end of input")?;
    Ok(t)
}

/// Parses `s = t`, or the inequality sugar `s <= t` which becomes
/// `s ^ t = s`.
pub fn parse_identity(input: &str) -> Result<Identity, ParseError> {
    let mut p = parser_for(input, false)?;
    let lhs = p.term()?;
    let id = match p.bump() {
        Some(l) if l.tok == Tok::Eq => {
            let rhs = p.term()?;
            Identity { lhs, rhs }
        }
        Some(l) if l.tok == Tok::Leq => {
            let rhs = p.term()?;
            Identity {
                lhs: Term::meet(lhs.clone(), rhs),
                rhs: lhs,
            }
        }
        Some(l) => {
            return Err(ParseError::UnexpectedToken {
                found: l.tok.describe(),
                at: l.at,
                expected: "'=' or '<='",
            })
        }
        None => return Err(ParseError::UnexpectedEnd {
            expected: "'=' or '<='",
        }),
    };
    p.at_end_or_err("end of input")?;
    Ok(id)
}

/// Error from an identities file, tagged with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {source}")]
pub struct IdentitiesFileError {
    pub line: usize,
    #[source]
    pub source: ParseError,
}

/// Parses an identities file: one identity per line, `#` starts a comment,
/// blank lines ignored.
pub fn parse_identities(src: &str) -> Result<Vec<Identity>, IdentitiesFileError> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let id = parse_identity(line).map_err(|source| IdentitiesFileError {
            line: i + 1,
            source,
        })?;
        out.push(id);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Evaluation and exhaustive checking

/// Evaluation failure: the assignment does not cover the term.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("variable {name:?} has no binding")]
    UnboundVariable { name: String },
    #[error("variable {name:?} is bound to {value}, which is outside the algebra")]
    BindingOutOfRange { name: String, value: Elem },
}

/// Evaluates a term over an algebra's tables.
pub fn eval(t: &Term, a: &SemiHeytingAlgebra, asg: &Assignment) -> Result<Elem, EvalError> {
    Ok(match t {
        Term::Variable(name) => {
            let &value = asg
                .get(name)
                .ok_or_else(|| EvalError::UnboundVariable { name: name.clone() })?;
            if value >= a.size() {
                return Err(EvalError::BindingOutOfRange {
                    name: name.clone(),
                    value,
                });
            }
            value
        }
        Term::ConstBottom => a.bottom(),
        Term::ConstTop => a.top(),
        Term::Meet(l, r) => a.meet(eval(l, a, asg)?, eval(r, a, asg)?),
        Term::Join(l, r) => a.join(eval(l, a, asg)?, eval(r, a, asg)?),
        Term::Arrow(l, r) => a.arrow(eval(l, a, asg)?, eval(r, a, asg)?),
    })
}

/// Runs `check` on every assignment of `vars` into the algebra, in
/// lexicographic order (first variable most significant, values ascending),
/// returning the first assignment where `check` is false.
fn first_failing(
    a: &SemiHeytingAlgebra,
    vars: &[String],
    mut check: impl FnMut(&Assignment) -> bool,
) -> Option<Assignment> {
    let n = a.size() as u64;
    let k = vars.len() as u32;
    let mut asg = Assignment::new();
    for idx in 0..n.pow(k) {
        for (i, var) in vars.iter().enumerate() {
            let place = n.pow(k - 1 - i as u32);
            asg.insert(var.clone(), ((idx / place) % n) as usize);
        }
        if !check(&asg) {
            return Some(asg);
        }
    }
    None
}

fn eval_total(t: &Term, a: &SemiHeytingAlgebra, asg: &Assignment) -> Elem {
    eval(t, a, asg).expect("exhaustive scan binds every variable")
}

fn identity_holds_at(a: &SemiHeytingAlgebra, id: &Identity, asg: &Assignment) -> bool {
    eval_total(&id.lhs, a, asg) == eval_total(&id.rhs, a, asg)
}

/// Checks an identity over all assignments; `None` means it holds, otherwise
/// the lexicographically first failing assignment is returned.
pub fn holds_identity(a: &SemiHeytingAlgebra, id: &Identity) -> Option<Assignment> {
    let vars: Vec<String> = id.vars().into_iter().collect();
    first_failing(a, &vars, |asg| identity_holds_at(a, id, asg))
}

/// Checks a quasi-identity: wherever all premises hold, some conclusion must
/// hold. `None` means it is satisfied; otherwise the first counterassignment.
pub fn holds_quasi(a: &SemiHeytingAlgebra, q: &QuasiIdentity) -> Option<Assignment> {
    let vars: Vec<String> = q.vars().into_iter().collect();
    first_failing(a, &vars, |asg| {
        if q.premises.iter().all(|p| identity_holds_at(a, p, asg)) {
            q.conclusions.iter().any(|c| identity_holds_at(a, c, asg))
        } else {
            true
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{corpus, corpus_algebra, SemiHeytingAlgebra};
    use crate::lattice::make_diamond;

    fn asg(pairs: &[(&str, Elem)]) -> Assignment {
        pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    #[test]
    fn parse_trees_match_declared_precedence() {
        let x = Term::var("x");
        let y = Term::var("y");
        let z = Term::var("z");
        assert_eq!(
            parse_term("(x* -> x)*").unwrap(),
            Term::star(Term::arrow(Term::star(x.clone()), x.clone()))
        );
        assert_eq!(
            parse_term("x ^ (x -> y)").unwrap(),
            Term::meet(x.clone(), Term::arrow(x.clone(), y.clone()))
        );
        assert_eq!(
            parse_term("x -> y -> z").unwrap(),
            Term::arrow(x.clone(), Term::arrow(y.clone(), z.clone()))
        );
        // join binds tighter than arrow, meet tighter than join, star tightest
        assert_eq!(
            parse_term("x ^ y v z -> 0").unwrap(),
            Term::arrow(Term::join(Term::meet(x.clone(), y.clone()), z.clone()), Term::ConstBottom)
        );
        assert_eq!(parse_term("x**").unwrap(), Term::star(Term::star(x.clone())));
    }

    #[test]
    fn parse_identity_and_leq_sugar() {
        let id = parse_identity("x -> x = 1").unwrap();
        assert_eq!(
            id,
            Identity {
                lhs: Term::arrow(Term::var("x"), Term::var("x")),
                rhs: Term::ConstTop,
            }
        );
        let le = parse_identity("x <= x -> 1").unwrap();
        assert_eq!(
            le,
            Identity {
                lhs: Term::meet(
                    Term::var("x"),
                    Term::arrow(Term::var("x"), Term::ConstTop)
                ),
                rhs: Term::var("x"),
            }
        );
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!(parse_term(""), Err(ParseError::Empty));
        assert_eq!(parse_term("  "), Err(ParseError::Empty));
        assert!(matches!(
            parse_identity("x = y = z"),
            Err(ParseError::UnexpectedToken { at: 6, .. })
        ));
        assert!(matches!(
            parse_identity("x -> x"),
            Err(ParseError::UnexpectedEnd { .. })
        ));
        assert!(matches!(
            parse_term("(x -> y"),
            Err(ParseError::UnexpectedEnd { expected: "')'" })
        ));
        assert!(matches!(
            parse_term("x -> = y"),
            Err(ParseError::UnexpectedToken { at: 5, .. })
        ));
        assert!(matches!(
            parse_term("2"),
            Err(ParseError::UnknownNumeral { .. })
        ));
        assert!(matches!(
            parse_term("x + y"),
            Err(ParseError::UnexpectedChar { ch: '+', at: 2 })
        ));
        assert!(matches!(
            parse_term("v ^ x"),
            Err(ParseError::UnexpectedToken { at: 0, .. })
        ));
    }

    #[test]
    fn formula_syntax_extensions() {
        assert_eq!(
            parse_formula("~p").unwrap(),
            Term::star(Term::var("p"))
        );
        assert_eq!(
            parse_formula("~~p").unwrap(),
            Term::star(Term::star(Term::var("p")))
        );
        assert_eq!(parse_formula("T").unwrap(), Term::ConstTop);
        assert_eq!(parse_formula("F").unwrap(), Term::ConstBottom);
        // ~ binds tighter than ^ but looser than postfix *
        assert_eq!(
            parse_formula("~p ^ q").unwrap(),
            Term::meet(Term::star(Term::var("p")), Term::var("q"))
        );
        assert_eq!(
            parse_formula("~p*").unwrap(),
            Term::star(Term::star(Term::var("p")))
        );
        // in plain term syntax, ~ is rejected and T is an ordinary variable
        assert_eq!(
            parse_term("~x"),
            Err(ParseError::NegationOutsideFormula { at: 0 })
        );
        assert_eq!(parse_term("T").unwrap(), Term::var("T"));
    }

    #[test]
    fn printer_round_trips_and_avoids_needless_parens() {
        let cases = [
            "(x* -> x)*",
            "x ^ (x -> y)",
            "x -> y -> z",
            "(x -> y) -> z",
            "x ^ y v z",
            "x v (y ^ z)*",
            "(x ^ y) -> x",
            "x**",
            "((x v y) ^ z)*",
            "0 -> 1",
        ];
        for s in cases {
            let t = parse_term(s).unwrap();
            let printed = t.to_string();
            assert_eq!(parse_term(&printed).unwrap(), t, "{s} printed as {printed}");
        }
        assert_eq!(parse_term("(x* -> x)*").unwrap().to_string(), "(x* -> x)*");
        assert_eq!(parse_term("x -> y -> z").unwrap().to_string(), "x -> y -> z");
        assert_eq!(parse_term("((x))").unwrap().to_string(), "x");
        // x -> 0 and x* are the same tree and print in star form
        assert_eq!(parse_term("x -> 0").unwrap().to_string(), "x*");
        assert_eq!(
            parse_identity("x <= y").unwrap().to_string(),
            "x ^ y = x"
        );
    }

    #[test]
    fn eval_matches_tables() {
        let twobar = corpus_algebra("2bar").unwrap();
        let t = parse_term("0 -> 1").unwrap();
        assert_eq!(eval(&t, &twobar, &Assignment::new()), Ok(0));

        let csh3 = corpus_algebra("CSH3").unwrap();
        let t = parse_term("(x* -> x)*").unwrap();
        assert_eq!(eval(&t, &csh3, &asg(&[("x", 1)])), Ok(csh3.top()));

        for a in corpus() {
            let t = parse_term("x -> x").unwrap();
            for e in 0..a.size() {
                assert_eq!(eval(&t, &a, &asg(&[("x", e)])), Ok(a.top()));
            }
        }
    }

    #[test]
    fn eval_reports_missing_and_out_of_range_bindings() {
        let two = corpus_algebra("2").unwrap();
        let t = parse_term("x ^ y").unwrap();
        assert_eq!(
            eval(&t, &two, &asg(&[("x", 1)])),
            Err(EvalError::UnboundVariable {
                name: "y".to_string()
            })
        );
        assert_eq!(
            eval(&t, &two, &asg(&[("x", 1), ("y", 5)])),
            Err(EvalError::BindingOutOfRange {
                name: "y".to_string(),
                value: 5
            })
        );
    }

    #[test]
    fn identity_witnesses_are_lexicographically_first() {
        let w4 = corpus_algebra("W4").unwrap();
        let bt1 = parse_identity("(x -> y) -> (x -> y*)* = 1").unwrap();
        assert_eq!(holds_identity(&w4, &bt1), Some(asg(&[("x", 1), ("y", 2)])));

        let l10 = corpus_algebra("L10").unwrap();
        let bt2 = parse_identity("(x -> y*) -> (x -> y)* = 1").unwrap();
        assert_eq!(holds_identity(&l10, &bt2), Some(asg(&[("x", 1), ("y", 0)])));

        let sh4 = parse_identity("x -> x = 1").unwrap();
        for a in corpus() {
            assert_eq!(holds_identity(&a, &sh4), None, "{:?}", a.name());
        }
    }

    fn boolean_diamond() -> SemiHeytingAlgebra {
        // classical arrow on the 4-element Boolean lattice: x -> y = x' v y
        let arrow = vec![
            vec![3, 3, 3, 3],
            vec![2, 3, 2, 3],
            vec![1, 1, 3, 3],
            vec![0, 1, 2, 3],
        ];
        SemiHeytingAlgebra::new(make_diamond(), arrow).unwrap()
    }

    fn si_condition() -> QuasiIdentity {
        QuasiIdentity {
            premises: vec![parse_identity("x v y = 1").unwrap()],
            conclusions: vec![
                parse_identity("x = 1").unwrap(),
                parse_identity("y = 1").unwrap(),
            ],
        }
    }

    #[test]
    fn quasi_identities_with_disjunctive_conclusions() {
        let csh3 = corpus_algebra("CSH3").unwrap();
        assert_eq!(holds_quasi(&csh3, &si_condition()), None);

        // on the Boolean diamond the two atoms join to the top
        assert_eq!(
            holds_quasi(&boolean_diamond(), &si_condition()),
            Some(asg(&[("x", 1), ("y", 2)]))
        );

        let empty_premises = QuasiIdentity {
            premises: vec![],
            conclusions: vec![parse_identity("x -> x = 1").unwrap()],
        };
        for a in corpus() {
            assert_eq!(holds_quasi(&a, &empty_premises), None);
        }
    }

    #[test]
    fn identities_files_allow_comments() {
        let src = "# connexive laws\n(x* -> x)* = 1\n\n(x -> x*)* = 1  # second thesis\n";
        let ids = parse_identities(src).unwrap();
        assert_eq!(ids.len(), 2);
        assert_eq!(ids[0], parse_identity("(x* -> x)* = 1").unwrap());

        let err = parse_identities("(x* -> x)* = 1\nx = = y\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn assignment_formatting() {
        assert_eq!(fmt_assignment(&asg(&[("y", 0), ("x", 1)])), "x=1, y=0");
        assert_eq!(fmt_assignment(&Assignment::new()), "");
    }
}
