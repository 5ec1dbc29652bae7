//! A workbench for finite posets, unitary rings and Boolean algebras, built
//! around interpolation terms that use the Baaz delta `Δ` (`Δ(0) = 0`,
//! `Δ(x) = 1` otherwise).
//!
//! A function with finite support can be interpolated
//!
//! * over a finite field by the classical Lagrange polynomial,
//! * over any unitary ring once `Δ` is added to the signature,
//! * over a Boolean algebra using `Δ` and the symmetric difference,
//! * over a Boolean poset (distributive, bounded, complemented, but not
//!   necessarily a lattice) by an operator term built from `Max L`, `Min U`,
//!   `′` and `Δ`, whose values are subsets of the carrier.
//!
//! The [`poset`] module holds the order-theoretic machinery, [`ring`] and
//! [`boolean`] the algebraic structures, [`interp`] the constructors and the
//! evaluator, [`format`] the text formats and [`verify`] the exhaustive and
//! randomized checkers.

pub mod boolean;
pub mod corpus;
pub mod format;
pub mod interp;
pub mod poset;
pub mod ring;
pub mod structure;
pub mod subset;
pub mod term;
pub mod verify;

pub use boolean::{AlgebraError, BooleanAlgebra};
pub use format::{emit_structure, parse_points, parse_structure, parse_term, FormatError};
pub use interp::{
    baaz_delta_elem, baaz_delta_subset, eval_table, eval_term, interpolate_boolean_algebra,
    interpolate_boolean_algebra_sum, interpolate_boolean_poset, interpolate_complemented_poset,
    interpolate_ring, lagrange_field, sdiff_poset, EvalError, EvalResult, InterpError, Interpolant,
    Model, SupportFunction, Value,
};
pub use poset::{
    Complements, ConeDirection, Distributivity, Extremum, FinitePoset, PosetError, Property,
    StructureClassification,
};
pub use ring::{RingError, UnitaryRing};
pub use structure::Structure;
pub use subset::Subset;
pub use term::{Node, Setting, Term, TermError};
pub use verify::{
    check_complement_laws, check_distributivity, check_distributivity_agreement, check_interpolation,
    check_kronecker, check_prop1, random_support, run_suite, sweep, CaseResult, CheckReport, CorpusEntry,
    Expect, SuiteConfig, SuiteOutcome, VerifyError,
};

/// Normalizes an element name: every `'` becomes the suffix `prime`, so
/// `a'` and `aprime` name the same element.
pub fn canonical_name(name: &str) -> String {
    name.replace('\'', "prime")
}

#[cfg(test)]
mod tests {
    #[test]
    fn prime_normalization() {
        assert_eq!(super::canonical_name("a'"), "aprime");
        assert_eq!(super::canonical_name("aprime"), "aprime");
        assert_eq!(super::canonical_name("h''"), "hprimeprime");
    }
}
