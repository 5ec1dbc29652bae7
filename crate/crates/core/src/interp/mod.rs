//! Interpolation terms built from the Baaz delta.
//!
//! Every constructor follows the same pattern. For support points
//! `a_1..a_n` it builds basis terms `p_i` that evaluate to `1` at `a_i` and
//! to `0` at every other `a_k`, then combines them with the prescribed
//! values `f(a_i)`:
//!
//! | setting         | `p_i(x)`                          | `p(x)`                          |
//! |-----------------|-----------------------------------|---------------------------------|
//! | field           | `Π (x - a_j)(a_i - a_j)^-1`       | `Σ f(a_i) p_i(x)`               |
//! | ring            | `Π Δ(x - a_j)`                    | `Σ f(a_i) p_i(x)`               |
//! | Boolean algebra | `⋀ Δ(x + a_j)`                    | `⋁ (f(a_i) ∧ p_i(x))`           |
//! | Boolean poset   | `Max L(Δ(x + a_j), ..)`           | `Min U(Max L(f(a_i), p_i(x)), ..)` |
//!
//! with `j` ranging over `j != i`. An empty product or meet is the constant
//! `1`, so a single support point is allowed.

mod eval;
mod ops;

use thiserror::Error;

pub use eval::{eval_table, eval_term, EvalResult, Model, Value, ValueDisplay};
pub use ops::{baaz_delta_elem, baaz_delta_subset, sdiff_poset};

use crate::boolean::BooleanAlgebra;
use crate::poset::{FinitePoset, Property};
use crate::ring::UnitaryRing;
use crate::term::{self, cnst, delta, sdiff, var, Node, Setting, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("a {setting} term cannot be evaluated over a {model}")]
    SettingMismatch { setting: Setting, model: &'static str },
    #[error("structure is not a field")]
    NotAField,
    #[error("point index {0} is outside the carrier")]
    PointOutOfRange(usize),
    #[error("constant index {0} is outside the carrier")]
    ConstOutOfRange(usize),
    #[error("`{op}` applied to a subset of {len} elements; only singletons are allowed")]
    NotSingleton { op: &'static str, len: usize },
    #[error("empty cone")]
    EmptyCone,
    #[error("poset is not bounded")]
    NotBounded,
    #[error("no complementation attached to the poset")]
    ComplementUnresolved,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InterpError {
    #[error("support must contain at least one point")]
    EmptySupport,
    #[error("duplicate support point `{0}`")]
    DuplicatePoint(String),
    #[error("support element index {0} is outside the carrier")]
    OutOfRange(usize),
    #[error("structure is not a field")]
    NotAField,
    #[error("interpolation over the trivial ring is refused")]
    TrivialRing,
    #[error("`{structure}` is not a Boolean poset: not {}", .property.label())]
    NotBooleanPoset { structure: String, property: Property },
    #[error("poset is not bounded")]
    NotBounded,
    #[error("no complementation attached to the poset")]
    ComplementUnresolved,
}

/// The points `a_1..a_n` with their prescribed values `f(a_i)`, as carrier
/// indices. Points are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportFunction {
    points: Vec<(usize, usize)>,
}

impl SupportFunction {
    pub fn new(points: Vec<(usize, usize)>, names: &[String]) -> Result<Self, InterpError> {
        if points.is_empty() {
            return Err(InterpError::EmptySupport);
        }
        for (k, &(a, v)) in points.iter().enumerate() {
            for i in [a, v] {
                if i >= names.len() {
                    return Err(InterpError::OutOfRange(i));
                }
            }
            if points[..k].iter().any(|&(b, _)| b == a) {
                return Err(InterpError::DuplicatePoint(names[a].clone()));
            }
        }
        Ok(SupportFunction { points })
    }

    pub fn points(&self) -> &[(usize, usize)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn arg(&self, i: usize) -> usize {
        self.points[i].0
    }

    pub fn value(&self, i: usize) -> usize {
        self.points[i].1
    }

    pub fn display(&self, names: &[String]) -> String {
        self.points
            .iter()
            .map(|&(a, v)| format!("{}:{}", names[a], names[v]))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// A constructed interpolation: the basis terms `p_i` and the combined `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpolant {
    pub support: SupportFunction,
    pub basis: Vec<Term>,
    pub poly: Term,
}

impl Interpolant {
    pub fn setting(&self) -> Setting {
        self.poly.setting()
    }

    pub fn eval<'a>(&self, model: impl Into<Model<'a>>, x: usize) -> Result<EvalResult, EvalError> {
        eval_term(model, &self.poly, x)
    }
}

fn finish(setting: Setting, support: &SupportFunction, basis: Vec<Node>, poly: Node) -> Interpolant {
    let wrap = |n| Term::new(setting, n).expect("builders only emit constructs of their setting");
    Interpolant {
        support: support.clone(),
        basis: basis.into_iter().map(wrap).collect(),
        poly: wrap(poly),
    }
}

fn check_range(support: &SupportFunction, len: usize) -> Result<(), InterpError> {
    match support.points().iter().flat_map(|&(a, v)| [a, v]).find(|&i| i >= len) {
        Some(i) => Err(InterpError::OutOfRange(i)),
        None => Ok(()),
    }
}

/// Folds with a binary constructor, or returns `empty` for no factors.
fn fold(factors: Vec<Node>, empty: Node, op: fn(Node, Node) -> Node) -> Node {
    factors.into_iter().reduce(op).unwrap_or(empty)
}

fn others(support: &SupportFunction, i: usize) -> impl Iterator<Item = usize> + '_ {
    support
        .points()
        .iter()
        .enumerate()
        .filter(move |&(j, _)| j != i)
        .map(|(_, &(a, _))| a)
}

/// Classical Lagrange interpolation over a finite field.
pub fn lagrange_field(field: &UnitaryRing, support: &SupportFunction) -> Result<Interpolant, InterpError> {
    if !field.is_field() {
        return Err(InterpError::NotAField);
    }
    check_range(support, field.len())?;
    let basis: Vec<Node> = (0..support.len())
        .map(|i| {
            let ai = support.arg(i);
            let factors = others(support, i)
                .map(|aj| {
                    let inv = field
                        .inverse(field.sub(ai, aj))
                        .expect("distinct points have invertible differences in a field");
                    term::mul(term::sub(var(), cnst(aj)), cnst(inv))
                })
                .collect();
            fold(factors, cnst(field.one()), term::mul)
        })
        .collect();
    let poly = weighted_sum(support, &basis);
    Ok(finish(Setting::Field, support, basis, poly))
}

fn weighted_sum(support: &SupportFunction, basis: &[Node]) -> Node {
    let terms = basis
        .iter()
        .enumerate()
        .map(|(i, p)| term::mul(cnst(support.value(i)), p.clone()))
        .collect();
    fold(terms, cnst(0), term::add)
}

/// Interpolation in a unitary ring enriched with `Δ`. Commutativity is not
/// needed; `f(a_i)` multiplies from the left.
pub fn interpolate_ring(ring: &UnitaryRing, support: &SupportFunction) -> Result<Interpolant, InterpError> {
    if ring.is_trivial() {
        return Err(InterpError::TrivialRing);
    }
    check_range(support, ring.len())?;
    let basis: Vec<Node> = (0..support.len())
        .map(|i| {
            let factors = others(support, i)
                .map(|aj| delta(term::sub(var(), cnst(aj))))
                .collect();
            fold(factors, cnst(ring.one()), term::mul)
        })
        .collect();
    let poly = weighted_sum(support, &basis);
    Ok(finish(Setting::Ring, support, basis, poly))
}

fn algebra_basis(algebra: &BooleanAlgebra, support: &SupportFunction) -> Vec<Node> {
    (0..support.len())
        .map(|i| {
            let factors = others(support, i).map(|aj| delta(sdiff(var(), cnst(aj)))).collect();
            fold(factors, cnst(algebra.one()), term::meet)
        })
        .collect()
}

fn algebra_interpolant(
    algebra: &BooleanAlgebra,
    support: &SupportFunction,
    combine: fn(Node, Node) -> Node,
) -> Result<Interpolant, InterpError> {
    check_range(support, algebra.len())?;
    let basis = algebra_basis(algebra, support);
    let terms = basis
        .iter()
        .enumerate()
        .map(|(i, p)| term::meet(cnst(support.value(i)), p.clone()))
        .collect();
    let poly = fold(terms, cnst(algebra.zero()), combine);
    Ok(finish(Setting::BooleanAlgebra, support, basis, poly))
}

/// Interpolation in a Boolean algebra enriched with `Δ`, combining with joins.
pub fn interpolate_boolean_algebra(
    algebra: &BooleanAlgebra,
    support: &SupportFunction,
) -> Result<Interpolant, InterpError> {
    algebra_interpolant(algebra, support, term::join)
}

/// The same basis combined with the symmetric difference instead of joins.
/// Agrees with [`interpolate_boolean_algebra`] on the support points.
pub fn interpolate_boolean_algebra_sum(
    algebra: &BooleanAlgebra,
    support: &SupportFunction,
) -> Result<Interpolant, InterpError> {
    algebra_interpolant(algebra, support, term::sdiff)
}

/// Operator-term interpolation over a Boolean poset. The poset must carry
/// its complementation (see [`FinitePoset::resolve_complement`]).
pub fn interpolate_boolean_poset(
    poset: &FinitePoset,
    support: &SupportFunction,
) -> Result<Interpolant, InterpError> {
    let cls = poset.classify();
    if !cls.is_boolean_poset {
        let property = [Property::Bounded, Property::Complemented, Property::Distributive]
            .into_iter()
            .find(|&p| !cls.flag(p))
            .unwrap_or(Property::BooleanPoset);
        return Err(InterpError::NotBooleanPoset {
            structure: poset.name().to_string(),
            property,
        });
    }
    interpolate_complemented_poset(poset, support)
}

/// Builds the operator term on any bounded poset with an attached
/// complementation, without checking distributivity. Off Boolean posets the
/// result need not interpolate.
pub fn interpolate_complemented_poset(
    poset: &FinitePoset,
    support: &SupportFunction,
) -> Result<Interpolant, InterpError> {
    let (_, top) = poset.bounds().ok_or(InterpError::NotBounded)?;
    if poset.complement().is_none() {
        return Err(InterpError::ComplementUnresolved);
    }
    check_range(support, poset.len())?;
    let basis: Vec<Node> = (0..support.len())
        .map(|i| {
            let factors: Vec<Node> = others(support, i).map(|aj| delta(sdiff(var(), cnst(aj)))).collect();
            if factors.is_empty() {
                cnst(top)
            } else {
                Node::MaxL(factors)
            }
        })
        .collect();
    let poly = Node::MinU(
        basis
            .iter()
            .enumerate()
            .map(|(i, p)| Node::MaxL(vec![cnst(support.value(i)), p.clone()]))
            .collect(),
    );
    Ok(finish(Setting::BooleanPoset, support, basis, poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn names(n: &[String]) -> Vec<String> {
        n.to_vec()
    }

    fn support_by_name(ns: &[String], pairs: &[(&str, &str)]) -> SupportFunction {
        let idx = |s: &str| ns.iter().position(|m| *m == crate::canonical_name(s)).unwrap();
        SupportFunction::new(pairs.iter().map(|&(a, v)| (idx(a), idx(v))).collect(), ns).unwrap()
    }

    #[test]
    fn support_validation() {
        let ns = names(UnitaryRing::zmod(5).unwrap().names());
        assert_eq!(SupportFunction::new(vec![], &ns), Err(InterpError::EmptySupport));
        assert_eq!(
            SupportFunction::new(vec![(1, 2), (1, 3)], &ns),
            Err(InterpError::DuplicatePoint("1".into()))
        );
        assert_eq!(SupportFunction::new(vec![(7, 0)], &ns), Err(InterpError::OutOfRange(7)));
    }

    #[test]
    fn lagrange_z5_is_two_x() {
        let f = UnitaryRing::zmod(5).unwrap();
        let s = support_by_name(f.names(), &[("1", "2"), ("2", "4")]);
        let p = lagrange_field(&f, &s).unwrap();
        for x in 0..5 {
            assert!(p.eval(&f, x).unwrap().is_element((2 * x) % 5));
        }
    }

    #[test]
    fn lagrange_rejects_non_fields() {
        let z6 = UnitaryRing::zmod(6).unwrap();
        let s = support_by_name(z6.names(), &[("1", "2")]);
        assert_eq!(lagrange_field(&z6, &s), Err(InterpError::NotAField));
    }

    #[test]
    fn single_point_is_constant() {
        let f = UnitaryRing::zmod(7).unwrap();
        let s = support_by_name(f.names(), &[("3", "5")]);
        for p in [lagrange_field(&f, &s).unwrap(), interpolate_ring(&f, &s).unwrap()] {
            for x in 0..7 {
                assert!(p.eval(&f, x).unwrap().is_element(5));
            }
        }
    }

    #[test]
    fn ring_basis_shape() {
        let z6 = UnitaryRing::zmod(6).unwrap();
        let s = support_by_name(z6.names(), &[("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")]);
        let p = interpolate_ring(&z6, &s).unwrap();
        assert_eq!(
            p.basis[0].display(z6.names()).to_string(),
            "mul(mul(delta(sub(x, 1)), delta(sub(x, 2))), delta(sub(x, 3)))"
        );
        assert_eq!(
            p.basis[3].display(z6.names()).to_string(),
            "mul(mul(delta(sub(x, 0)), delta(sub(x, 1))), delta(sub(x, 2)))"
        );
    }

    #[test]
    fn ring_z6_off_support() {
        let z6 = UnitaryRing::zmod(6).unwrap();
        let s = support_by_name(z6.names(), &[("2", "3"), ("5", "1")]);
        let p = interpolate_ring(&z6, &s).unwrap();
        let vals: Vec<usize> = eval_table(&z6, &p.poly)
            .unwrap()
            .iter()
            .map(|r| r.as_element().unwrap())
            .collect();
        assert_eq!(vals[2], 3);
        assert_eq!(vals[5], 1);
        assert_eq!(vals[0], 4);
    }

    #[test]
    fn trivial_ring_refused() {
        let z1 = UnitaryRing::zmod(1).unwrap();
        let s = SupportFunction::new(vec![(0, 0)], z1.names()).unwrap();
        assert_eq!(interpolate_ring(&z1, &s), Err(InterpError::TrivialRing));
    }

    #[test]
    fn two_element_algebra_negation() {
        let b = BooleanAlgebra::powerset(1).unwrap();
        let s = support_by_name(b.names(), &[("0", "1"), ("1", "0")]);
        let p = interpolate_boolean_algebra(&b, &s).unwrap();
        assert!(p.eval(&b, 0).unwrap().is_element(1));
        assert!(p.eval(&b, 1).unwrap().is_element(0));
    }

    #[test]
    fn fig1_golden() {
        let b = BooleanAlgebra::from_poset(corpus::fig1()).unwrap();
        let s = support_by_name(b.names(), &[("a", "c'"), ("g", "a'"), ("b'", "h"), ("1", "e'")]);
        for p in [
            interpolate_boolean_algebra(&b, &s).unwrap(),
            interpolate_boolean_algebra_sum(&b, &s).unwrap(),
        ] {
            for &(a, v) in s.points() {
                assert!(p.eval(&b, a).unwrap().is_element(v));
            }
        }
    }

    #[test]
    fn fig3_golden() {
        let p = corpus::fig3();
        let s = support_by_name(p.names(), &[("0", "a"), ("a", "c"), ("b", "d'"), ("c'", "1")]);
        let ip = interpolate_boolean_poset(&p, &s).unwrap();
        for &(a, v) in s.points() {
            assert!(ip.eval(&p, a).unwrap().is_element(v));
        }
        let s2 = support_by_name(p.names(), &[("0", "a"), ("1", "b")]);
        let ip2 = interpolate_boolean_poset(&p, &s2).unwrap();
        assert!(ip2.eval(&p, 0).unwrap().is_element(p.index_of("a").unwrap()));
        assert!(ip2.eval(&p, p.top().unwrap()).unwrap().is_element(p.index_of("b").unwrap()));
    }

    #[test]
    fn fig2_refused_as_boolean_poset_but_buildable() {
        let p = corpus::fig2();
        let s = support_by_name(p.names(), &[("b", "a"), ("c", "d")]);
        assert!(matches!(
            interpolate_boolean_poset(&p, &s),
            Err(InterpError::NotBooleanPoset { property: Property::Distributive, .. })
        ));
        let ip = interpolate_complemented_poset(&p, &s).unwrap();
        assert!(ip.eval(&p, p.index_of("b").unwrap()).unwrap().is_element(0));
    }
}
