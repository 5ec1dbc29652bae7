//! Bottom-up term evaluation in every setting.

use std::fmt;

use super::ops::{baaz_delta_elem, baaz_delta_subset, sdiff_poset};
use super::EvalError;
use crate::boolean::BooleanAlgebra;
use crate::poset::FinitePoset;
use crate::ring::UnitaryRing;
use crate::subset::Subset;
use crate::term::{Node, Setting, Term};

/// A borrowed structure a term can be evaluated over.
#[derive(Debug, Clone, Copy)]
pub enum Model<'a> {
    Ring(&'a UnitaryRing),
    Algebra(&'a BooleanAlgebra),
    Poset(&'a FinitePoset),
}

impl<'a> From<&'a UnitaryRing> for Model<'a> {
    fn from(r: &'a UnitaryRing) -> Self {
        Model::Ring(r)
    }
}

impl<'a> From<&'a BooleanAlgebra> for Model<'a> {
    fn from(a: &'a BooleanAlgebra) -> Self {
        Model::Algebra(a)
    }
}

impl<'a> From<&'a FinitePoset> for Model<'a> {
    fn from(p: &'a FinitePoset) -> Self {
        Model::Poset(p)
    }
}

impl<'a> Model<'a> {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Ring(_) => "ring",
            Model::Algebra(_) => "boolean algebra",
            Model::Poset(_) => "poset",
        }
    }

    pub fn len(&self) -> usize {
        self.names().len()
    }

    pub fn is_empty(&self) -> bool {
        self.names().is_empty()
    }

    pub fn names(&self) -> &'a [String] {
        match *self {
            Model::Ring(r) => r.names(),
            Model::Algebra(a) => a.names(),
            Model::Poset(p) => p.names(),
        }
    }
}

/// An element, or a subset of the carrier in the poset setting.
///
/// Equality identifies a singleton `{x}` with the element `x`.
#[derive(Debug, Clone, Copy, Eq)]
pub enum Value {
    Element(usize),
    Subset(Subset),
}

impl Value {
    pub fn as_element(self) -> Option<usize> {
        match self {
            Value::Element(x) => Some(x),
            Value::Subset(s) => s.as_singleton(),
        }
    }

    pub fn as_subset(self) -> Subset {
        match self {
            Value::Element(x) => Subset::singleton(x),
            Value::Subset(s) => s,
        }
    }

    pub fn display<'a>(self, names: &'a [String]) -> ValueDisplay<'a> {
        ValueDisplay { value: self, names }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Element(a), Value::Element(b)) => a == b,
            _ => self.as_subset() == other.as_subset(),
        }
    }
}

pub struct ValueDisplay<'a> {
    value: Value,
    names: &'a [String],
}

impl fmt::Display for ValueDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Value::Element(x) => f.write_str(&self.names[x]),
            Value::Subset(s) => write!(f, "{}", s.display(self.names)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalResult {
    pub setting: Setting,
    pub value: Value,
}

impl EvalResult {
    pub fn as_element(&self) -> Option<usize> {
        self.value.as_element()
    }

    pub fn is_element(&self, x: usize) -> bool {
        self.value == Value::Element(x)
    }
}

pub fn eval_term<'a>(model: impl Into<Model<'a>>, term: &Term, x: usize) -> Result<EvalResult, EvalError> {
    let model = model.into();
    if x >= model.len() {
        return Err(EvalError::PointOutOfRange(x));
    }
    if let Some(c) = term.root().max_const() {
        if c >= model.len() {
            return Err(EvalError::ConstOutOfRange(c));
        }
    }
    let setting = term.setting();
    let value = match (setting, model) {
        (Setting::Field, Model::Ring(r)) if !r.is_field() => return Err(EvalError::NotAField),
        (Setting::Field | Setting::Ring, Model::Ring(r)) => Value::Element(eval_ring(r, term.root(), x)),
        (Setting::BooleanAlgebra, Model::Algebra(a)) => Value::Element(eval_algebra(a, term.root(), x)),
        (Setting::BooleanPoset, Model::Poset(p)) => Value::Subset(eval_poset(p, term.root(), x)?),
        (Setting::BooleanPoset, Model::Algebra(a)) => Value::Subset(eval_poset(a.poset(), term.root(), x)?),
        (setting, model) => {
            return Err(EvalError::SettingMismatch {
                setting,
                model: model.kind(),
            })
        }
    };
    Ok(EvalResult { setting, value })
}

/// Values of `term` at every carrier element, in carrier order.
pub fn eval_table<'a>(model: impl Into<Model<'a>>, term: &Term) -> Result<Vec<EvalResult>, EvalError> {
    let model = model.into();
    (0..model.len()).map(|x| eval_term(model, term, x)).collect()
}

fn eval_ring(r: &UnitaryRing, node: &Node, x: usize) -> usize {
    match node {
        Node::Const(c) => *c,
        Node::Var => x,
        Node::Neg(a) => r.neg(eval_ring(r, a, x)),
        Node::Add(a, b) => r.add(eval_ring(r, a, x), eval_ring(r, b, x)),
        Node::Sub(a, b) => r.sub(eval_ring(r, a, x), eval_ring(r, b, x)),
        Node::Mul(a, b) => r.mul(eval_ring(r, a, x), eval_ring(r, b, x)),
        Node::Delta(a) => baaz_delta_elem(r, eval_ring(r, a, x)),
        other => unreachable!("`{}` rejected by Term::new for rings", other.keyword()),
    }
}

fn eval_algebra(b: &BooleanAlgebra, node: &Node, x: usize) -> usize {
    match node {
        Node::Const(c) => *c,
        Node::Var => x,
        Node::Join(l, r) => b.join(eval_algebra(b, l, x), eval_algebra(b, r, x)),
        Node::Meet(l, r) => b.meet(eval_algebra(b, l, x), eval_algebra(b, r, x)),
        Node::Comp(a) => b.complement(eval_algebra(b, a, x)),
        Node::SDiff(l, r) => b.symmetric_difference(eval_algebra(b, l, x), eval_algebra(b, r, x)),
        Node::Delta(a) => {
            if eval_algebra(b, a, x) == b.zero() {
                b.zero()
            } else {
                b.one()
            }
        }
        other => unreachable!("`{}` rejected by Term::new for algebras", other.keyword()),
    }
}

fn singleton(s: Subset, op: &'static str) -> Result<usize, EvalError> {
    s.as_singleton().ok_or(EvalError::NotSingleton { op, len: s.len() })
}

fn union_of(p: &FinitePoset, args: &[Node], x: usize) -> Result<Subset, EvalError> {
    args.iter()
        .try_fold(Subset::EMPTY, |acc, t| Ok(acc.union(eval_poset(p, t, x)?)))
}

fn eval_poset(p: &FinitePoset, node: &Node, x: usize) -> Result<Subset, EvalError> {
    Ok(match node {
        Node::Const(c) => Subset::singleton(*c),
        Node::Var => Subset::singleton(x),
        Node::Comp(a) => {
            let v = singleton(eval_poset(p, a, x)?, "comp")?;
            let c = p.complement_of(v).ok_or(EvalError::ComplementUnresolved)?;
            Subset::singleton(c)
        }
        Node::Delta(a) => Subset::singleton(baaz_delta_subset(p, eval_poset(p, a, x)?)?),
        Node::SDiff(l, r) => {
            let u = singleton(eval_poset(p, l, x)?, "sdiff")?;
            let v = singleton(eval_poset(p, r, x)?, "sdiff")?;
            sdiff_poset(p, u, v)?
        }
        Node::MaxL(args) => p.max_l(union_of(p, args, x)?),
        Node::MinU(args) => p.min_u(union_of(p, args, x)?),
        Node::Union(args) => union_of(p, args, x)?,
        other => unreachable!("`{}` rejected by Term::new for posets", other.keyword()),
    })
}
