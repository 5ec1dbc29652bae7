//! Text formats: structure files, term expressions and support lists.
//!
//! Structure files are line oriented; `#` starts a comment.
//!
//! ```text
//! kind poset
//! name fig3
//! elements 0 a b c d a' b' c' d' 1
//! cover 0 < a
//! complement a -> a'
//! ```
//!
//! ```text
//! kind ring
//! name Z2
//! elements 0 1
//! zero 0
//! one 1
//! add 0 : 0 1
//! add 1 : 1 0
//! mul 0 : 0 0
//! mul 1 : 0 1
//! ```
//!
//! Element names are made of ASCII letters, digits, `_` and `'`; a `'` is
//! stored as the suffix `prime`. The name `x` is reserved for the term
//! variable.

use std::fmt::Write as _;

use thiserror::Error;

use crate::canonical_name;
use crate::interp::{InterpError, SupportFunction};
use crate::poset::{FinitePoset, PosetError};
use crate::ring::{RingError, UnitaryRing};
use crate::structure::Structure;
use crate::term::{Node, Setting, Term, TermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("`{op}` takes {expected} argument(s), got {got}")]
    Arity {
        op: String,
        expected: &'static str,
        got: usize,
    },
    #[error("term syntax: {0}")]
    TermSyntax(String),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Interp(#[from] InterpError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Poset,
    Ring,
}

/// Parses a structure file. Posets get their complementation checked when
/// supplied, and discovered when absent and unique.
pub fn parse_structure(text: &str) -> Result<Structure, FormatError> {
    let mut kind = None;
    let mut name: Option<String> = None;
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut covers: Vec<(usize, String, String)> = Vec::new();
    let mut complements: Vec<(usize, String, String)> = Vec::new();
    let mut zero = None;
    let mut one = None;
    let mut add_rows: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut mul_rows: Vec<(usize, String, Vec<String>)> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (keyword, rest) = (tokens[0], &tokens[1..]);
        let check_names = |names: &[&str]| -> Result<(), FormatError> {
            match names.iter().find(|n| !valid_name(n)) {
                Some(bad) => Err(syntax(line, format!("invalid element name `{bad}`"))),
                None => Ok(()),
            }
        };
        match keyword {
            "kind" => {
                if kind.is_some() {
                    return Err(syntax(line, "duplicate `kind` line"));
                }
                kind = Some(match rest {
                    ["poset"] => Kind::Poset,
                    ["ring"] => Kind::Ring,
                    _ => return Err(syntax(line, "expected `kind poset` or `kind ring`")),
                });
            }
            "name" => {
                if rest.is_empty() {
                    return Err(syntax(line, "expected `name <string>`"));
                }
                name = Some(rest.join(" "));
            }
            "elements" => {
                if elements.is_some() {
                    return Err(syntax(line, "duplicate `elements` line"));
                }
                if rest.is_empty() {
                    return Err(syntax(line, "`elements` needs at least one name"));
                }
                check_names(rest)?;
                let names: Vec<String> = rest.iter().map(|s| canonical_name(s)).collect();
                if names.iter().any(|n| n == "x") {
                    return Err(syntax(line, "`x` is reserved for the term variable"));
                }
                elements = Some((line, names));
            }
            "cover" => match rest {
                [a, "<", b] => {
                    check_names(&[a, b])?;
                    covers.push((line, a.to_string(), b.to_string()));
                }
                _ => return Err(syntax(line, "expected `cover <a> < <b>`")),
            },
            "complement" => match rest {
                [a, "->", b] => {
                    check_names(&[a, b])?;
                    complements.push((line, a.to_string(), b.to_string()));
                }
                _ => return Err(syntax(line, "expected `complement <x> -> <y>`")),
            },
            "zero" | "one" => match rest {
                [v] => {
                    let slot = if keyword == "zero" { &mut zero } else { &mut one };
                    *slot = Some((line, v.to_string()));
                }
                _ => return Err(syntax(line, format!("expected `{keyword} <name>`"))),
            },
            "add" | "mul" => match rest {
                [row, ":", entries @ ..] => {
                    let entry = (line, row.to_string(), entries.iter().map(|s| s.to_string()).collect());
                    if keyword == "add" {
                        add_rows.push(entry);
                    } else {
                        mul_rows.push(entry);
                    }
                }
                _ => return Err(syntax(line, format!("expected `{keyword} <row> : <names>`"))),
            },
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }

    let kind = kind.ok_or(FormatError::Missing("kind"))?;
    let name = name.ok_or(FormatError::Missing("name"))?;
    let (elements_line, names) = elements.ok_or(FormatError::Missing("elements"))?;
    let lookup = |line: usize, s: &str| {
        let s = canonical_name(s);
        names
            .iter()
            .position(|n| *n == s)
            .ok_or_else(|| syntax(line, format!("unknown element `{s}`")))
    };

    match kind {
        Kind::Poset => {
            if let Some((line, ..)) = add_rows.first().or(mul_rows.first()) {
                return Err(syntax(*line, "table lines are only valid in ring files"));
            }
            if let Some((line, _)) = zero.or(one) {
                return Err(syntax(line, "`zero`/`one` lines are only valid in ring files"));
            }
            let mut idx = Vec::with_capacity(covers.len());
            for (line, a, b) in &covers {
                idx.push((lookup(*line, a)?, lookup(*line, b)?));
            }
            let poset = FinitePoset::from_indices(name, names.clone(), &idx)?;
            if complements.is_empty() {
                return Ok(Structure::Poset(poset.resolve_complement()));
            }
            let mut map = vec![None; names.len()];
            for (line, a, b) in &complements {
                let (a, b) = (lookup(*line, a)?, lookup(*line, b)?);
                if map[a].replace(b).is_some() {
                    return Err(syntax(*line, format!("duplicate complement of `{}`", names[a])));
                }
            }
            let map: Vec<usize> = match map.iter().position(Option::is_none) {
                Some(missing) => {
                    return Err(PosetError::IncompleteComplement(names[missing].clone()).into())
                }
                None => map.into_iter().flatten().collect(),
            };
            Ok(Structure::Poset(poset.with_complement(map)?))
        }
        Kind::Ring => {
            if let Some((line, ..)) = covers.first().or(complements.first()) {
                return Err(syntax(*line, "order lines are only valid in poset files"));
            }
            let n = names.len();
            let table = |rows: &[(usize, String, Vec<String>)], label: &str| -> Result<Vec<usize>, FormatError> {
                let mut out: Vec<Option<Vec<usize>>> = vec![None; n];
                for (line, row, entries) in rows {
                    let r = lookup(*line, row)?;
                    if entries.len() != n {
                        return Err(syntax(*line, format!("`{label}` row needs {n} entries")));
                    }
                    let vals = entries
                        .iter()
                        .map(|e| lookup(*line, e))
                        .collect::<Result<Vec<_>, _>>()?;
                    if out[r].replace(vals).is_some() {
                        return Err(syntax(*line, format!("duplicate `{label}` row `{row}`")));
                    }
                }
                match out.iter().position(Option::is_none) {
                    Some(missing) => Err(syntax(
                        elements_line,
                        format!("`{label}` table lacks row `{}`", names[missing]),
                    )),
                    None => Ok(out.into_iter().flatten().flatten().collect()),
                }
            };
            let add = table(&add_rows, "add")?;
            let mul = table(&mul_rows, "mul")?;
            let (zl, z) = zero.ok_or(FormatError::Missing("zero"))?;
            let (ol, o) = one.ok_or(FormatError::Missing("one"))?;
            let zero = lookup(zl, &z)?;
            let one = lookup(ol, &o)?;
            Ok(Structure::Ring(UnitaryRing::from_tables(name, names, add, mul, zero, one)?))
        }
    }
}

/// Canonical text of a structure: elements in carrier order, covers as the
/// transitive reduction sorted by carrier index, and complements for every
/// element when a complementation is attached. Boolean algebras are written
/// as poset files.
pub fn emit_structure(structure: &Structure) -> String {
    let mut out = String::new();
    match structure {
        Structure::Ring(r) => {
            let names = r.names();
            let _ = writeln!(out, "kind ring");
            let _ = writeln!(out, "name {}", r.name());
            let _ = writeln!(out, "elements {}", names.join(" "));
            let _ = writeln!(out, "zero {}", names[r.zero()]);
            let _ = writeln!(out, "one {}", names[r.one()]);
            for (label, row) in [("add", UnitaryRing::add_row as fn(&UnitaryRing, usize) -> &[usize]), ("mul", UnitaryRing::mul_row)] {
                for x in 0..r.len() {
                    let entries: Vec<&str> = row(r, x).iter().map(|&v| names[v].as_str()).collect();
                    let _ = writeln!(out, "{label} {} : {}", names[x], entries.join(" "));
                }
            }
        }
        Structure::Algebra(a) => return emit_structure(&Structure::Poset(a.poset().clone())),
        Structure::Poset(p) => {
            let names = p.names();
            let _ = writeln!(out, "kind poset");
            let _ = writeln!(out, "name {}", p.name());
            let _ = writeln!(out, "elements {}", names.join(" "));
            for (a, b) in p.covers() {
                let _ = writeln!(out, "cover {} < {}", names[a], names[b]);
            }
            if let Some(c) = p.complement() {
                for (x, &y) in c.iter().enumerate() {
                    let _ = writeln!(out, "complement {} -> {}", names[x], names[y]);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Open,
    Close,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<Token>, FormatError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            ',' => {
                chars.next();
                out.push(Token::Comma);
            }
            c if c.is_ascii_alphanumeric() || c == '_' || c == '\'' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' || d == '\'' {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(text[i..end].to_string()));
            }
            other => return Err(FormatError::TermSyntax(format!("unexpected character `{other}` at {i}"))),
        }
    }
    Ok(out)
}

struct TermParser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [String],
}

impl TermParser<'_> {
    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn term(&mut self) -> Result<Node, FormatError> {
        let ident = match self.next() {
            Some(Token::Ident(s)) => s,
            Some(other) => return Err(FormatError::TermSyntax(format!("unexpected {other:?}"))),
            None => return Err(FormatError::TermSyntax("unexpected end of input".into())),
        };
        if self.peek() != Some(&Token::Open) {
            if ident == "x" {
                return Ok(Node::Var);
            }
            let name = canonical_name(&ident);
            return self
                .names
                .iter()
                .position(|n| *n == name)
                .map(Node::Const)
                .ok_or(FormatError::UnknownName(name));
        }
        self.next();
        let mut args = Vec::new();
        if self.peek() != Some(&Token::Close) {
            loop {
                args.push(self.term()?);
                match self.next() {
                    Some(Token::Comma) => continue,
                    Some(Token::Close) => break,
                    _ => return Err(FormatError::TermSyntax(format!("expected `,` or `)` in `{ident}(..)`"))),
                }
            }
        } else {
            self.next();
        }
        build_call(&ident, args)
    }
}

fn build_call(op: &str, mut args: Vec<Node>) -> Result<Node, FormatError> {
    let arity = |expected: &'static str, ok: bool, got: usize| {
        if ok {
            Ok(())
        } else {
            Err(FormatError::Arity {
                op: op.to_string(),
                expected,
                got,
            })
        }
    };
    let n = args.len();
    let unary = |f: fn(Box<Node>) -> Node, mut args: Vec<Node>| {
        arity("1", n == 1, n)?;
        Ok(f(Box::new(args.remove(0))))
    };
    let binary = |f: fn(Box<Node>, Box<Node>) -> Node, mut args: Vec<Node>| {
        arity("2", n == 2, n)?;
        let b = args.pop().expect("two args");
        let a = args.pop().expect("two args");
        Ok(f(Box::new(a), Box::new(b)))
    };
    match op {
        "neg" => unary(Node::Neg, args),
        "comp" => unary(Node::Comp, args),
        "delta" => unary(Node::Delta, args),
        "add" => binary(Node::Add, args),
        "sub" => binary(Node::Sub, args),
        "mul" => binary(Node::Mul, args),
        "join" => binary(Node::Join, args),
        "meet" => binary(Node::Meet, args),
        "sdiff" => binary(Node::SDiff, args),
        "max_l" | "min_u" | "union" => {
            arity("at least 1", n >= 1, n)?;
            let list = std::mem::take(&mut args);
            Ok(match op {
                "max_l" => Node::MaxL(list),
                "min_u" => Node::MinU(list),
                _ => Node::Union(list),
            })
        }
        other => Err(FormatError::UnknownFunction(other.to_string())),
    }
}

/// Parses a term over a structure with the given carrier names.
pub fn parse_term(text: &str, setting: Setting, names: &[String]) -> Result<Term, FormatError> {
    let mut parser = TermParser {
        tokens: tokenize(text)?,
        pos: 0,
        names,
    };
    let root = parser.term()?;
    if let Some(t) = parser.peek() {
        return Err(FormatError::TermSyntax(format!("trailing input at {t:?}")));
    }
    Ok(Term::new(setting, root)?)
}

/// Parses `a:v,b:w,..` into a support, keeping the given order.
pub fn parse_points(text: &str, names: &[String]) -> Result<SupportFunction, FormatError> {
    let lookup = |s: &str| {
        let s = canonical_name(s.trim());
        names
            .iter()
            .position(|n| *n == s)
            .ok_or(FormatError::UnknownName(s))
    };
    let mut points = Vec::new();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (a, v) = item
            .split_once(':')
            .ok_or_else(|| FormatError::TermSyntax(format!("expected `point:value`, got `{item}`")))?;
        points.push((lookup(a)?, lookup(v)?));
    }
    Ok(SupportFunction::new(points, names)?)
}
