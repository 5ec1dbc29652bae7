//! Terms in one variable over rings, Boolean algebras and Boolean posets.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Which signature a term is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Setting {
    Field,
    Ring,
    BooleanAlgebra,
    BooleanPoset,
}

impl Setting {
    pub const ALL: [Setting; 4] = [
        Setting::Field,
        Setting::Ring,
        Setting::BooleanAlgebra,
        Setting::BooleanPoset,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Setting::Field => "field",
            Setting::Ring => "ring",
            Setting::BooleanAlgebra => "boolean_algebra",
            Setting::BooleanPoset => "boolean_poset",
        }
    }

    /// Poset-setting terms evaluate to subsets, all others to elements.
    pub fn is_set_valued(self) -> bool {
        self == Setting::BooleanPoset
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown setting `{0}` (expected field, ring, boolean_algebra or boolean_poset)")]
pub struct UnknownSetting(pub String);

impl FromStr for Setting {
    type Err = UnknownSetting;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "field" => Ok(Setting::Field),
            "ring" => Ok(Setting::Ring),
            "boolean_algebra" | "algebra" => Ok(Setting::BooleanAlgebra),
            "boolean_poset" | "poset" => Ok(Setting::BooleanPoset),
            other => Err(UnknownSetting(other.to_string())),
        }
    }
}

/// A term node. Constants refer to carrier indices of the target structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Const(usize),
    Var,
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Join(Box<Node>, Box<Node>),
    Meet(Box<Node>, Box<Node>),
    Comp(Box<Node>),
    Delta(Box<Node>),
    /// Symmetric difference: an element in Boolean algebras, the set-valued
    /// `Min U(L(x′,y), L(x,y′))` in posets.
    SDiff(Box<Node>, Box<Node>),
    MaxL(Vec<Node>),
    MinU(Vec<Node>),
    Union(Vec<Node>),
}

impl Node {
    pub fn keyword(&self) -> &'static str {
        match self {
            Node::Const(_) => "const",
            Node::Var => "x",
            Node::Neg(_) => "neg",
            Node::Add(..) => "add",
            Node::Sub(..) => "sub",
            Node::Mul(..) => "mul",
            Node::Join(..) => "join",
            Node::Meet(..) => "meet",
            Node::Comp(_) => "comp",
            Node::Delta(_) => "delta",
            Node::SDiff(..) => "sdiff",
            Node::MaxL(_) => "max_l",
            Node::MinU(_) => "min_u",
            Node::Union(_) => "union",
        }
    }

    pub fn allowed_in(&self, setting: Setting) -> bool {
        use Setting::*;
        match self {
            Node::Const(_) | Node::Var | Node::Delta(_) => true,
            Node::Neg(_) | Node::Add(..) | Node::Sub(..) | Node::Mul(..) => {
                matches!(setting, Field | Ring)
            }
            Node::Join(..) | Node::Meet(..) => setting == BooleanAlgebra,
            Node::Comp(_) | Node::SDiff(..) => matches!(setting, BooleanAlgebra | BooleanPoset),
            Node::MaxL(_) | Node::MinU(_) | Node::Union(_) => setting == BooleanPoset,
        }
    }

    pub fn children(&self) -> Vec<&Node> {
        match self {
            Node::Const(_) | Node::Var => vec![],
            Node::Neg(a) | Node::Comp(a) | Node::Delta(a) => vec![a],
            Node::Add(a, b)
            | Node::Sub(a, b)
            | Node::Mul(a, b)
            | Node::Join(a, b)
            | Node::Meet(a, b)
            | Node::SDiff(a, b) => vec![a, b],
            Node::MaxL(ts) | Node::MinU(ts) | Node::Union(ts) => ts.iter().collect(),
        }
    }

    /// First node (pre-order) not permitted in `setting`.
    pub fn first_disallowed(&self, setting: Setting) -> Option<&Node> {
        if !self.allowed_in(setting) {
            return Some(self);
        }
        self.children()
            .into_iter()
            .find_map(|c| c.first_disallowed(setting))
    }

    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Node::size).sum::<usize>()
    }

    pub fn max_const(&self) -> Option<usize> {
        let own = match self {
            Node::Const(c) => Some(*c),
            _ => None,
        };
        self.children()
            .into_iter()
            .filter_map(Node::max_const)
            .chain(own)
            .max()
    }
}

// Small constructors used by the interpolation builders and tests.
pub fn cnst(c: usize) -> Node {
    Node::Const(c)
}
pub fn var() -> Node {
    Node::Var
}
pub fn add(a: Node, b: Node) -> Node {
    Node::Add(Box::new(a), Box::new(b))
}
pub fn sub(a: Node, b: Node) -> Node {
    Node::Sub(Box::new(a), Box::new(b))
}
pub fn mul(a: Node, b: Node) -> Node {
    Node::Mul(Box::new(a), Box::new(b))
}
pub fn join(a: Node, b: Node) -> Node {
    Node::Join(Box::new(a), Box::new(b))
}
pub fn meet(a: Node, b: Node) -> Node {
    Node::Meet(Box::new(a), Box::new(b))
}
pub fn comp(a: Node) -> Node {
    Node::Comp(Box::new(a))
}
pub fn delta(a: Node) -> Node {
    Node::Delta(Box::new(a))
}
pub fn sdiff(a: Node, b: Node) -> Node {
    Node::SDiff(Box::new(a), Box::new(b))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("`{construct}` is not available in the {setting} setting; it requires the {requires} setting")]
    InvalidForSetting {
        construct: &'static str,
        setting: Setting,
        requires: String,
    },
}

/// A term tagged with its setting. The root only contains constructs that
/// the setting allows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    setting: Setting,
    root: Node,
}

impl Term {
    pub fn new(setting: Setting, root: Node) -> Result<Self, TermError> {
        if let Some(bad) = root.first_disallowed(setting) {
            let requires: Vec<&str> = Setting::ALL
                .into_iter()
                .filter(|&s| bad.allowed_in(s))
                .map(Setting::label)
                .collect();
            return Err(TermError::InvalidForSetting {
                construct: bad.keyword(),
                setting,
                requires: requires.join(" or "),
            });
        }
        Ok(Term { setting, root })
    }

    pub fn setting(&self) -> Setting {
        self.setting
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Prints in the textual term grammar using the carrier's names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> TermDisplay<'a> {
        TermDisplay {
            node: &self.root,
            names,
        }
    }
}

pub struct TermDisplay<'a> {
    node: &'a Node,
    names: &'a [String],
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(f, self.node, self.names)
    }
}

fn write_node(f: &mut fmt::Formatter<'_>, node: &Node, names: &[String]) -> fmt::Result {
    match node {
        Node::Const(c) => match names.get(*c) {
            Some(n) => f.write_str(n),
            None => write!(f, "#{c}"),
        },
        Node::Var => f.write_str("x"),
        other => {
            write!(f, "{}(", other.keyword())?;
            for (i, c) in other.children().into_iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write_node(f, c, names)?;
            }
            f.write_str(")")
        }
    }
}
