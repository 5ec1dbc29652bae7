use crate::boolean::BooleanAlgebra;
use crate::interp::Model;
use crate::poset::FinitePoset;
use crate::ring::UnitaryRing;

/// Any structure the workbench handles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Ring(UnitaryRing),
    Algebra(BooleanAlgebra),
    Poset(FinitePoset),
}

impl Structure {
    pub fn name(&self) -> &str {
        match self {
            Structure::Ring(r) => r.name(),
            Structure::Algebra(a) => a.name(),
            Structure::Poset(p) => p.name(),
        }
    }

    pub fn names(&self) -> &[String] {
        self.model().names()
    }

    pub fn len(&self) -> usize {
        self.names().len()
    }

    pub fn is_empty(&self) -> bool {
        self.names().is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        let name = crate::canonical_name(name);
        self.names().iter().position(|n| *n == name)
    }

    pub fn model(&self) -> Model<'_> {
        match self {
            Structure::Ring(r) => Model::Ring(r),
            Structure::Algebra(a) => Model::Algebra(a),
            Structure::Poset(p) => Model::Poset(p),
        }
    }

    /// The order underlying a poset or Boolean algebra.
    pub fn poset(&self) -> Option<&FinitePoset> {
        match self {
            Structure::Ring(_) => None,
            Structure::Algebra(a) => Some(a.poset()),
            Structure::Poset(p) => Some(p),
        }
    }

    /// Upgrades a poset that happens to be a Boolean algebra.
    pub fn promote(self) -> Self {
        match self {
            Structure::Poset(p) if p.classify().is_boolean_algebra => {
                Structure::Algebra(BooleanAlgebra::from_poset(p).expect("classified as Boolean algebra"))
            }
            other => other,
        }
    }
}

impl From<UnitaryRing> for Structure {
    fn from(r: UnitaryRing) -> Self {
        Structure::Ring(r)
    }
}

impl From<BooleanAlgebra> for Structure {
    fn from(a: BooleanAlgebra) -> Self {
        Structure::Algebra(a)
    }
}

impl From<FinitePoset> for Structure {
    fn from(p: FinitePoset) -> Self {
        Structure::Poset(p)
    }
}
