//! Finite posets and the cone machinery built on them.
//!
//! A [`FinitePoset`] stores, for every element, its principal down-set and
//! up-set as [`Subset`]s. Lower and upper cones of arbitrary subsets are then
//! intersections of those rows, and `Max`/`Min` are read off directly. The
//! bounds `0` and `1` are detected from the order; a complementation can be
//! attached afterwards, either supplied (and checked) or discovered.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canonical_name;
use crate::subset::{Subset, MAX_CARRIER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("carrier has {0} elements; at most {MAX_CARRIER} are supported")]
    TooLarge(usize),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownName(String),
    #[error("reflexive cover `{0} < {0}`")]
    ReflexiveCover(String),
    #[error("cycle detected: `{0}` and `{1}` lie below each other")]
    Cycle(String, String),
    #[error("poset is not bounded")]
    NotBounded,
    #[error("`{0}` has no complement")]
    NoComplement(String),
    #[error("complement table contradicts the order: `{0}` is not a complement of `{1}`")]
    ComplementContradicts(String, String),
    #[error("complement table must list every element exactly once (missing `{0}`)")]
    IncompleteComplement(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeDirection {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Max,
    Min,
}

/// A finite partially ordered set, optionally equipped with a complementation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    name: String,
    names: Vec<String>,
    /// `down[x] = { y | y <= x }`
    down: Vec<Subset>,
    /// `up[x] = { y | x <= y }`
    up: Vec<Subset>,
    bottom: Option<usize>,
    top: Option<usize>,
    complement: Option<Vec<usize>>,
}

impl FinitePoset {
    /// Builds a poset from its element names and a cover relation given as
    /// `(lower, upper)` name pairs. The order is the reflexive-transitive
    /// closure of the covers; redundant covers are harmless.
    pub fn build<S: AsRef<str>>(
        name: impl Into<String>,
        names: &[S],
        covers: &[(S, S)],
    ) -> Result<Self, PosetError> {
        let names: Vec<String> = names.iter().map(|n| canonical_name(n.as_ref())).collect();
        let lookup = |n: &str| {
            let n = canonical_name(n);
            names
                .iter()
                .position(|m| *m == n)
                .ok_or(PosetError::UnknownName(n))
        };
        let mut idx = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            idx.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_indices(name, names, &idx)
    }

    /// Same as [`build`](Self::build) with covers given as carrier indices.
    pub fn from_indices(
        name: impl Into<String>,
        names: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let n = names.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > MAX_CARRIER {
            return Err(PosetError::TooLarge(n));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(PosetError::DuplicateName(a.clone()));
            }
        }
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(a, b) in covers {
            if a >= n {
                return Err(PosetError::UnknownName(a.to_string()));
            }
            if b >= n {
                return Err(PosetError::UnknownName(b.to_string()));
            }
            if a == b {
                return Err(PosetError::ReflexiveCover(names[a].clone()));
            }
            up[a].insert(b);
        }
        // Warshall closure over bit rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    let (lo, hi) = (a.min(b), a.max(b));
                    return Err(PosetError::Cycle(names[lo].clone(), names[hi].clone()));
                }
            }
        }
        let mut down = vec![Subset::EMPTY; n];
        for (a, row) in up.iter().enumerate() {
            for b in row.iter() {
                down[b].insert(a);
            }
        }
        let full = Subset::full(n);
        let bottom = (0..n).find(|&x| up[x] == full);
        let top = (0..n).find(|&x| down[x] == full);
        Ok(FinitePoset {
            name: name.into(),
            names,
            down,
            up,
            bottom,
            top,
            complement: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        let name = canonical_name(name);
        self.names.iter().position(|n| *n == name)
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn down_set(&self, x: usize) -> Subset {
        self.down[x]
    }

    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn bounds(&self) -> Option<(usize, usize)> {
        Some((self.bottom?, self.top?))
    }

    pub fn is_bounded(&self) -> bool {
        self.bounds().is_some()
    }

    pub fn complement(&self) -> Option<&[usize]> {
        self.complement.as_deref()
    }

    pub fn complement_of(&self, x: usize) -> Option<usize> {
        self.complement.as_ref().map(|c| c[x])
    }

    /// `L(A)`: every element below all members of `A`. `L(∅)` is the carrier.
    pub fn lower_cone(&self, a: Subset) -> Subset {
        a.iter()
            .fold(self.carrier(), |acc, x| acc.intersection(self.down[x]))
    }

    /// `U(A)`: every element above all members of `A`. `U(∅)` is the carrier.
    pub fn upper_cone(&self, a: Subset) -> Subset {
        a.iter()
            .fold(self.carrier(), |acc, x| acc.intersection(self.up[x]))
    }

    pub fn cone(&self, a: Subset, direction: ConeDirection) -> Subset {
        match direction {
            ConeDirection::Lower => self.lower_cone(a),
            ConeDirection::Upper => self.upper_cone(a),
        }
    }

    /// Maximal elements of `A`. Empty input gives an empty result.
    pub fn maximal(&self, a: Subset) -> Subset {
        a.iter()
            .filter(|&x| self.up[x].intersection(a) == Subset::singleton(x))
            .collect()
    }

    pub fn minimal(&self, a: Subset) -> Subset {
        a.iter()
            .filter(|&x| self.down[x].intersection(a) == Subset::singleton(x))
            .collect()
    }

    pub fn extremal(&self, a: Subset, which: Extremum) -> Subset {
        match which {
            Extremum::Max => self.maximal(a),
            Extremum::Min => self.minimal(a),
        }
    }

    /// `Max L(A)`, the surrogate meet.
    pub fn max_l(&self, a: Subset) -> Subset {
        self.maximal(self.lower_cone(a))
    }

    /// `Min U(A)`, the surrogate join.
    pub fn min_u(&self, a: Subset) -> Subset {
        self.minimal(self.upper_cone(a))
    }

    pub fn pair(x: usize, y: usize) -> Subset {
        Subset::singleton(x).with(y)
    }

    /// The transitive reduction, sorted by `(lower, upper)` carrier index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            let strictly_above = self.up[a].difference(Subset::singleton(a));
            for b in strictly_above.iter() {
                let between = strictly_above
                    .intersection(self.down[b])
                    .difference(Subset::singleton(b));
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn is_complement_pair(&self, x: usize, y: usize, bottom: usize, top: usize) -> bool {
        let p = Self::pair(x, y);
        self.lower_cone(p) == Subset::singleton(bottom) && self.upper_cone(p) == Subset::singleton(top)
    }

    /// All complements of every element. Fails if the poset is unbounded or
    /// some element has no complement.
    pub fn find_complements(&self) -> Result<Complements, PosetError> {
        let (bottom, top) = self.bounds().ok_or(PosetError::NotBounded)?;
        let n = self.len();
        let mut candidates = Vec::with_capacity(n);
        for x in 0..n {
            let c: Subset = (0..n)
                .filter(|&y| self.is_complement_pair(x, y, bottom, top))
                .collect();
            if c.is_empty() {
                return Err(PosetError::NoComplement(self.names[x].clone()));
            }
            candidates.push(c);
        }
        Ok(Complements { candidates })
    }

    /// Attaches a complementation given as a total map, checking
    /// `L(x, x') = 0` and `U(x, x') = 1` for every `x`.
    pub fn with_complement(mut self, map: Vec<usize>) -> Result<Self, PosetError> {
        let (bottom, top) = self.bounds().ok_or(PosetError::NotBounded)?;
        if map.len() != self.len() {
            let missing = self.names.get(map.len()).cloned().unwrap_or_default();
            return Err(PosetError::IncompleteComplement(missing));
        }
        for (x, &y) in map.iter().enumerate() {
            if y >= self.len() || !self.is_complement_pair(x, y, bottom, top) {
                let claimed = self.names.get(y).cloned().unwrap_or_else(|| y.to_string());
                return Err(PosetError::ComplementContradicts(claimed, self.names[x].clone()));
            }
        }
        self.complement = Some(map);
        Ok(self)
    }

    /// Discovers the complementation when none is attached and it is unique.
    /// Otherwise returns the poset unchanged.
    pub fn resolve_complement(self) -> Self {
        if self.complement.is_some() {
            return self;
        }
        match self.find_complements().ok().and_then(|c| c.unique_map()) {
            Some(map) => {
                let mut p = self;
                p.complement = Some(map);
                p
            }
            None => self,
        }
    }

    /// Evaluates the four cone forms of distributivity on all triples.
    pub fn distributivity(&self) -> Distributivity {
        let n = self.len();
        let l = |s| self.lower_cone(s);
        let u = |s| self.upper_cone(s);
        let mut report = Distributivity {
            per_identity: [true; 4],
            witnesses: [None; 4],
        };
        for x in 0..n {
            for y in 0..n {
                let xy = Self::pair(x, y);
                let u_xy = u(xy);
                let l_xy = l(xy);
                for z in 0..n {
                    let sz = Subset::singleton(z);
                    let (xz, yz) = (Self::pair(x, z), Self::pair(y, z));
                    let lower = l(xz).union(l(yz));
                    let upper = u(xz).union(u(yz));
                    let holds = [
                        l(u_xy.union(sz)) == l(u(lower)),
                        u(l(u_xy.union(sz))) == u(lower),
                        u(l_xy.union(sz)) == u(l(upper)),
                        l(u(l_xy.union(sz))) == l(upper),
                    ];
                    for (k, ok) in holds.into_iter().enumerate() {
                        if !ok && report.per_identity[k] {
                            report.per_identity[k] = false;
                            report.witnesses[k] = Some([x, y, z]);
                        }
                    }
                }
            }
        }
        report
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity().verdict()
    }

    /// First pair lacking a unique join or meet.
    pub fn lattice_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in x..n {
                let p = Self::pair(x, y);
                if self.min_u(p).as_singleton().is_none() || self.max_l(p).as_singleton().is_none() {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_violation().is_none()
    }

    pub fn classify(&self) -> StructureClassification {
        let mut witnesses = BTreeMap::new();
        let n = self.len();
        let is_bounded = self.is_bounded();
        if !is_bounded {
            let mins = self.minimal(self.carrier());
            let maxs = self.maximal(self.carrier());
            let w = if mins.len() > 1 { mins } else { maxs };
            witnesses.insert(Property::Bounded, w.iter().take(2).collect());
        }

        let (is_complemented, complement_unique) = match self.find_complements() {
            Ok(c) => {
                if let Some(x) = (0..n).find(|&x| c.of(x).len() > 1) {
                    let mut w = vec![x];
                    w.extend(c.of(x).iter().take(2));
                    witnesses.insert(Property::ComplementUnique, w);
                }
                (true, c.is_unique())
            }
            Err(PosetError::NoComplement(name)) => {
                let x = self.index_of(&name).expect("name from this poset");
                witnesses.insert(Property::Complemented, vec![x]);
                witnesses.insert(Property::ComplementUnique, vec![x]);
                (false, false)
            }
            Err(_) => (false, false),
        };

        let dist = self.distributivity();
        let is_distributive = dist.verdict();
        if let Some(w) = dist.witness() {
            witnesses.insert(Property::Distributive, w.to_vec());
        }

        let lattice = self.lattice_violation();
        let is_lattice = lattice.is_none();
        if let Some((x, y)) = lattice {
            witnesses.insert(Property::Lattice, vec![x, y]);
        }

        let is_boolean_poset = is_bounded && is_complemented && is_distributive;
        if !is_boolean_poset {
            let w = [Property::Bounded, Property::Complemented, Property::Distributive]
                .iter()
                .find_map(|p| witnesses.get(p).cloned())
                .unwrap_or_default();
            witnesses.insert(Property::BooleanPoset, w);
        }
        let is_boolean_algebra = is_boolean_poset && is_lattice;
        if !is_boolean_algebra {
            let w = witnesses
                .get(&Property::BooleanPoset)
                .or_else(|| witnesses.get(&Property::Lattice))
                .cloned()
                .unwrap_or_default();
            witnesses.insert(Property::BooleanAlgebra, w);
        }

        StructureClassification {
            is_poset: true,
            is_bounded,
            is_complemented,
            complement_unique,
            is_distributive,
            is_lattice,
            is_boolean_poset,
            is_boolean_algebra,
            witnesses,
        }
    }

    /// First `x` with `(x')' != x`.
    pub fn involution_violation(&self, map: &[usize]) -> Option<usize> {
        (0..self.len()).find(|&x| map[map[x]] != x)
    }

    /// First pair `x <= y` with `y' </= x'`.
    pub fn antitone_violation(&self, map: &[usize]) -> Option<(usize, usize)> {
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if !self.leq(map[y], map[x]) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// Per-element complement candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complements {
    candidates: Vec<Subset>,
}

impl Complements {
    pub fn of(&self, x: usize) -> Subset {
        self.candidates[x]
    }

    pub fn is_unique(&self) -> bool {
        self.candidates.iter().all(|c| c.len() == 1)
    }

    /// The complementation as a map, if every element has exactly one.
    pub fn unique_map(&self) -> Option<Vec<usize>> {
        self.candidates.iter().map(|c| c.as_singleton()).collect()
    }

    pub fn admits(&self, map: &[usize]) -> bool {
        map.len() == self.candidates.len()
            && map.iter().enumerate().all(|(x, &y)| self.candidates[x].contains(y))
    }
}

/// Outcome of the four-identity distributivity scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distributivity {
    pub per_identity: [bool; 4],
    /// First violating `(x, y, z)` for each identity.
    pub witnesses: [Option<[usize; 3]>; 4],
}

impl Distributivity {
    pub fn verdict(&self) -> bool {
        self.per_identity.iter().all(|&b| b)
    }

    pub fn identities_agree(&self) -> bool {
        self.per_identity.iter().all(|&b| b == self.per_identity[0])
    }

    /// Witness for the first identity, falling back to the first failing one.
    pub fn witness(&self) -> Option<[usize; 3]> {
        self.witnesses.iter().find_map(|w| *w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Bounded,
    Complemented,
    ComplementUnique,
    Distributive,
    Lattice,
    BooleanPoset,
    BooleanAlgebra,
}

impl Property {
    pub fn label(self) -> &'static str {
        match self {
            Property::Bounded => "bounded",
            Property::Complemented => "complemented",
            Property::ComplementUnique => "complement_unique",
            Property::Distributive => "distributive",
            Property::Lattice => "lattice",
            Property::BooleanPoset => "boolean_poset",
            Property::BooleanAlgebra => "boolean_algebra",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureClassification {
    pub is_poset: bool,
    pub is_bounded: bool,
    pub is_complemented: bool,
    pub complement_unique: bool,
    pub is_distributive: bool,
    pub is_lattice: bool,
    pub is_boolean_poset: bool,
    pub is_boolean_algebra: bool,
    /// Counterexample tuples (carrier indices) for each failed flag.
    pub witnesses: BTreeMap<Property, Vec<usize>>,
}

impl StructureClassification {
    pub fn flag(&self, p: Property) -> bool {
        match p {
            Property::Bounded => self.is_bounded,
            Property::Complemented => self.is_complemented,
            Property::ComplementUnique => self.complement_unique,
            Property::Distributive => self.is_distributive,
            Property::Lattice => self.is_lattice,
            Property::BooleanPoset => self.is_boolean_poset,
            Property::BooleanAlgebra => self.is_boolean_algebra,
        }
    }

    pub fn witness(&self, p: Property) -> Option<&[usize]> {
        self.witnesses.get(&p).map(Vec::as_slice)
    }

    pub fn flags(&self) -> impl Iterator<Item = (Property, bool)> + '_ {
        [
            Property::Bounded,
            Property::Complemented,
            Property::ComplementUnique,
            Property::Distributive,
            Property::Lattice,
            Property::BooleanPoset,
            Property::BooleanAlgebra,
        ]
        .into_iter()
        .map(|p| (p, self.flag(p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus as fixtures;

    fn set(p: &FinitePoset, names: &[&str]) -> Subset {
        names.iter().map(|n| p.index_of(n).unwrap()).collect()
    }

    #[test]
    fn redundant_cover_absorbed() {
        let p = FinitePoset::build("c3", &["0", "a", "1"], &[("0", "a"), ("a", "1"), ("0", "1")]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.bounds(), Some((0, 2)));
        assert!(p.leq(0, 2));
    }

    #[test]
    fn cycle_rejected() {
        let err = FinitePoset::build("bad", &["x", "y"], &[("x", "y"), ("y", "x")]).unwrap_err();
        assert_eq!(err, PosetError::Cycle("x".into(), "y".into()));
    }

    #[test]
    fn builder_errors() {
        assert_eq!(
            FinitePoset::build("d", &["a", "a"], &[]).unwrap_err(),
            PosetError::DuplicateName("a".into())
        );
        assert_eq!(
            FinitePoset::build("u", &["a"], &[("a", "b")]).unwrap_err(),
            PosetError::UnknownName("b".into())
        );
        assert_eq!(
            FinitePoset::build("r", &["a"], &[("a", "a")]).unwrap_err(),
            PosetError::ReflexiveCover("a".into())
        );
        let empty: [&str; 0] = [];
        assert_eq!(FinitePoset::build("e", &empty, &[]).unwrap_err(), PosetError::Empty);
    }

    #[test]
    fn fig3_cones_and_extremes() {
        let p = fixtures::fig3();
        assert_eq!(p.len(), 10);
        assert!(p.is_bounded());
        let l = p.lower_cone(set(&p, &["b'", "c'"]));
        assert_eq!(l, set(&p, &["0", "a", "d"]));
        assert_eq!(p.maximal(l), set(&p, &["a", "d"]));
        assert_eq!(p.min_u(set(&p, &["a", "d"])), set(&p, &["b'", "c'"]));
        let top = p.top().unwrap();
        assert_eq!(p.lower_cone(Subset::singleton(top)), p.carrier());
    }

    #[test]
    fn fig2_lower_cone_is_bottom() {
        let p = fixtures::fig2();
        assert_eq!(p.lower_cone(set(&p, &["b'", "c"])), set(&p, &["0"]));
        assert_eq!(p.lower_cone(set(&p, &["b", "c'"])), set(&p, &["0"]));
    }

    #[test]
    fn extremal_of_empty_and_singletons() {
        let p = fixtures::fig3();
        assert_eq!(p.maximal(Subset::EMPTY), Subset::EMPTY);
        assert_eq!(p.minimal(Subset::EMPTY), Subset::EMPTY);
        for x in 0..p.len() {
            assert_eq!(p.extremal(Subset::singleton(x), Extremum::Max), Subset::singleton(x));
        }
    }

    #[test]
    fn distributivity_verdicts() {
        let fig2 = fixtures::fig2();
        let d = fig2.distributivity();
        assert!(!d.verdict());
        assert!(d.identities_agree());
        let w = d.witnesses[0].unwrap();
        assert_eq!(w, [1, 2, 3]);
        assert_eq!(
            w.map(|i| fig2.names()[i].as_str()),
            ["a", "b", "c"]
        );
        assert!(fixtures::fig3().is_distributive());
        let two = FinitePoset::build("c2", &["0", "1"], &[("0", "1")]).unwrap();
        assert!(two.is_distributive());
    }

    #[test]
    fn complements_of_figures() {
        let fig3 = fixtures::fig3();
        let c = fig3.find_complements().unwrap();
        assert!(c.is_unique());
        let map = c.unique_map().unwrap();
        for (x, y) in [("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'"), ("0", "1")] {
            assert_eq!(map[fig3.index_of(x).unwrap()], fig3.index_of(y).unwrap());
        }

        let fig2 = fixtures::fig2();
        let c = fig2.find_complements().unwrap();
        assert!(!c.is_unique());
        assert!(c.admits(fig2.complement().unwrap()));

        let chain = FinitePoset::build("c3", &["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap();
        assert_eq!(chain.find_complements().unwrap_err(), PosetError::NoComplement("m".into()));
    }

    #[test]
    fn supplied_complement_checked() {
        let p = fixtures::fig3();
        let mut bad: Vec<usize> = p.find_complements().unwrap().unique_map().unwrap();
        bad.swap(1, 2);
        assert!(matches!(
            p.clone().with_complement(bad),
            Err(PosetError::ComplementContradicts(_, _))
        ));
    }

    #[test]
    fn classifications() {
        let fig3 = fixtures::fig3().classify();
        assert!(fig3.is_boolean_poset);
        assert!(!fig3.is_lattice);
        assert!(!fig3.is_boolean_algebra);

        let fig2 = fixtures::fig2().classify();
        assert!(fig2.is_bounded && fig2.is_complemented);
        assert!(!fig2.is_distributive);
        assert!(!fig2.complement_unique);
        assert_eq!(fig2.witness(Property::Distributive), Some(&[1, 2, 3][..]));

        let fig1 = fixtures::fig1().classify();
        assert!(fig1.is_boolean_algebra && fig1.is_lattice && fig1.is_distributive);
        assert!(fig1.witnesses.is_empty());
    }

    #[test]
    fn fig3_lattice_failure_is_join_of_two_atoms() {
        let p = fixtures::fig3();
        let (a, b) = (p.index_of("a").unwrap(), p.index_of("b").unwrap());
        assert_eq!(p.min_u(FinitePoset::pair(a, b)), set(&p, &["c'", "d'"]));
    }

    #[test]
    fn boolean_complement_is_antitone_involution() {
        for p in [fixtures::fig1(), fixtures::fig3()] {
            let map = p.complement().unwrap().to_vec();
            assert_eq!(p.involution_violation(&map), None);
            assert_eq!(p.antitone_violation(&map), None);
        }
    }

    #[test]
    fn unbounded_poset() {
        let v = FinitePoset::build("v", &["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
        let cls = v.classify();
        assert!(!cls.is_bounded && !cls.is_boolean_poset);
        assert_eq!(cls.witness(Property::Bounded), Some(&[0, 1][..]));
        assert_eq!(v.find_complements().unwrap_err(), PosetError::NotBounded);
    }
}
