//! Boolean algebras as lattices over a [`FinitePoset`], and their Boolean rings.

use thiserror::Error;

use crate::poset::{FinitePoset, PosetError, Property};
use crate::ring::UnitaryRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("`{structure}` is not a Boolean algebra: not {}", .property.label())]
    NotBooleanAlgebra {
        structure: String,
        property: Property,
        witness: Vec<String>,
    },
    #[error("powerset of {0} atoms is out of range (0..=6)")]
    SizeOutOfRange(usize),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A finite Boolean algebra `(B, ∨, ∧, ′, 0, 1)`.
///
/// Join and meet are total tables read off the underlying poset, which keeps
/// its (unique) complementation attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanAlgebra {
    poset: FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl BooleanAlgebra {
    pub fn from_poset(poset: FinitePoset) -> Result<Self, AlgebraError> {
        let cls = poset.classify();
        if !cls.is_boolean_algebra {
            let property = [
                Property::Bounded,
                Property::Complemented,
                Property::Distributive,
                Property::Lattice,
            ]
            .into_iter()
            .find(|&p| !cls.flag(p))
            .unwrap_or(Property::BooleanAlgebra);
            let witness = cls
                .witness(property)
                .unwrap_or_default()
                .iter()
                .map(|&i| poset.names()[i].clone())
                .collect();
            return Err(AlgebraError::NotBooleanAlgebra {
                structure: poset.name().to_string(),
                property,
                witness,
            });
        }
        let poset = match poset.complement() {
            Some(_) => poset,
            None => {
                let map = poset
                    .find_complements()?
                    .unique_map()
                    .expect("Boolean lattices are uniquely complemented");
                poset.with_complement(map)?
            }
        };
        let n = poset.len();
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let p = FinitePoset::pair(x, y);
                join.push(poset.min_u(p).as_singleton().expect("lattice join"));
                meet.push(poset.max_l(p).as_singleton().expect("lattice meet"));
            }
        }
        let algebra = BooleanAlgebra { poset, join, meet };
        debug_assert!(algebra.law_violation().is_none());
        Ok(algebra)
    }

    /// The algebra of subsets of an `n`-set. Atoms are named `a, b, c, ..`,
    /// other elements by concatenating their atoms (`ab`, `acd`), with `0`
    /// and `1` for the empty and full set. Carrier order is by size, then
    /// name.
    pub fn powerset(n: usize) -> Result<Self, AlgebraError> {
        if n > 6 {
            return Err(AlgebraError::SizeOutOfRange(n));
        }
        let full_mask = (1usize << n) - 1;
        let label = |mask: usize| -> String {
            if mask == 0 {
                "0".to_string()
            } else if mask == full_mask {
                "1".to_string()
            } else {
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| (b'a' + i as u8) as char)
                    .collect()
            }
        };
        let mut masks: Vec<usize> = (0..=full_mask).collect();
        masks.sort_by_key(|&m| (m.count_ones(), label(m)));
        let mut position = vec![0; full_mask + 1];
        for (i, &m) in masks.iter().enumerate() {
            position[m] = i;
        }
        let names: Vec<String> = masks.iter().map(|&m| label(m)).collect();
        let mut covers = Vec::new();
        for &m in &masks {
            for i in 0..n {
                if m & (1 << i) == 0 {
                    covers.push((position[m], position[m | (1 << i)]));
                }
            }
        }
        let complement = masks.iter().map(|&m| position[full_mask ^ m]).collect();
        let poset = FinitePoset::from_indices(format!("powerset{n}"), names, &covers)?
            .with_complement(complement)?;
        Self::from_poset(poset)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn into_poset(self) -> FinitePoset {
        self.poset
    }

    pub fn name(&self) -> &str {
        self.poset.name()
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.poset.index_of(name)
    }

    pub fn zero(&self) -> usize {
        self.poset.bottom().expect("bounded")
    }

    pub fn one(&self) -> usize {
        self.poset.top().expect("bounded")
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn complement(&self, x: usize) -> usize {
        self.poset.complement_of(x).expect("complemented")
    }

    /// `(x′ ∧ y) ∨ (x ∧ y′)`
    pub fn symmetric_difference(&self, x: usize, y: usize) -> usize {
        self.join(
            self.meet(self.complement(x), y),
            self.meet(x, self.complement(y)),
        )
    }

    /// The Boolean ring `(B, +, ∧, 0, 1)` with `+` the symmetric difference.
    pub fn boolean_ring(&self) -> UnitaryRing {
        let n = self.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                add.push(self.symmetric_difference(x, y));
                mul.push(self.meet(x, y));
            }
        }
        UnitaryRing::from_tables(
            self.name(),
            self.names().to_vec(),
            add,
            mul,
            self.zero(),
            self.one(),
        )
        .expect("Boolean ring of a Boolean algebra satisfies the ring axioms")
    }

    /// First tuple breaking a complement or De Morgan law.
    pub fn law_violation(&self) -> Option<Vec<usize>> {
        let (zero, one) = (self.zero(), self.one());
        for x in 0..self.len() {
            let c = self.complement(x);
            if self.join(x, c) != one || self.meet(x, c) != zero {
                return Some(vec![x]);
            }
            for y in 0..self.len() {
                let dm_meet = self.complement(self.meet(x, y))
                    == self.join(self.complement(x), self.complement(y));
                let dm_join = self.complement(self.join(x, y))
                    == self.meet(self.complement(x), self.complement(y));
                if !dm_meet || !dm_join {
                    return Some(vec![x, y]);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn powerset_two_xor() {
        let b = BooleanAlgebra::powerset(2).unwrap();
        assert_eq!(b.names(), ["0", "a", "b", "1"]);
        let (a, bb) = (b.index_of("a").unwrap(), b.index_of("b").unwrap());
        assert_eq!(b.names()[b.symmetric_difference(a, bb)], "1");
        for x in 0..b.len() {
            assert_eq!(b.symmetric_difference(x, x), b.zero());
            assert_eq!(b.symmetric_difference(x, b.zero()), x);
        }
    }

    #[test]
    fn powerset_sizes() {
        for n in 0..=6 {
            let b = BooleanAlgebra::powerset(n).unwrap();
            assert_eq!(b.len(), 1 << n);
        }
        assert_eq!(BooleanAlgebra::powerset(7).unwrap_err(), AlgebraError::SizeOutOfRange(7));
    }

    #[test]
    fn fig1_joins_match_diagram() {
        let b = BooleanAlgebra::from_poset(corpus::fig1()).unwrap();
        let j = |x: &str, y: &str| {
            let r = b.join(b.index_of(x).unwrap(), b.index_of(y).unwrap());
            b.names()[r].clone()
        };
        assert_eq!(j("a", "b"), "e");
        assert_eq!(j("a", "c"), "g");
        assert_eq!(j("a", "d"), "h");
        assert_eq!(j("b", "c"), "hprime");
        assert_eq!(j("b", "d"), "gprime");
        assert_eq!(j("c", "d"), "eprime");
    }

    #[test]
    fn fig3_is_not_an_algebra() {
        let err = BooleanAlgebra::from_poset(corpus::fig3()).unwrap_err();
        match err {
            AlgebraError::NotBooleanAlgebra { property, witness, .. } => {
                assert_eq!(property, Property::Lattice);
                assert_eq!(witness, ["a", "b"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn two_chain_is_an_algebra() {
        let p = FinitePoset::build("c2", &["0", "1"], &[("0", "1")]).unwrap();
        let b = BooleanAlgebra::from_poset(p).unwrap();
        assert_eq!(b.complement(0), 1);
    }

    #[test]
    fn boolean_rings_of_small_powersets() {
        let r1 = BooleanAlgebra::powerset(1).unwrap().boolean_ring();
        assert!(r1.is_field() && r1.len() == 2);
        let b2 = BooleanAlgebra::powerset(2).unwrap();
        let r2 = b2.boolean_ring();
        assert!(r2.is_boolean_ring());
        assert_eq!(r2.add(r2.one(), r2.one()), r2.zero());
        for n in 0..=4 {
            let r = BooleanAlgebra::powerset(n).unwrap().boolean_ring();
            assert!(r.is_boolean_ring());
            for x in 0..r.len() {
                assert_eq!(r.mul(x, x), x);
                assert_eq!(r.add(x, x), r.zero());
                for y in 0..r.len() {
                    assert_eq!(r.sub(x, y), r.add(x, y));
                }
            }
        }
    }
}
