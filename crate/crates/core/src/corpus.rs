//! Structure files shipped with the crate.

use crate::format::parse_structure;
use crate::poset::FinitePoset;
use crate::structure::Structure;

/// `(file name, contents)` of every bundled poset file.
pub const FILES: &[(&str, &str)] = &[
    ("fig1.struct", include_str!("../corpus/fig1.struct")),
    ("fig2.struct", include_str!("../corpus/fig2.struct")),
    ("fig3.struct", include_str!("../corpus/fig3.struct")),
    ("chain3.struct", include_str!("../corpus/chain3.struct")),
    ("pentagon.struct", include_str!("../corpus/pentagon.struct")),
    ("diamond.struct", include_str!("../corpus/diamond.struct")),
    ("crown.struct", include_str!("../corpus/crown.struct")),
];

pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

fn poset(file_name: &str) -> FinitePoset {
    match parse_structure(file(file_name).expect("bundled file")) {
        Ok(Structure::Poset(p)) => p,
        other => panic!("{file_name}: expected a poset, got {other:?}"),
    }
}

/// The 16-element Boolean algebra with atoms `a, b, c, d`.
pub fn fig1() -> FinitePoset {
    poset("fig1.struct")
}

/// The 10-element complemented poset that is not distributive.
pub fn fig2() -> FinitePoset {
    poset("fig2.struct")
}

/// The 10-element Boolean poset that is not a lattice.
pub fn fig3() -> FinitePoset {
    poset("fig3.struct")
}

pub fn load(file_name: &str) -> Option<Structure> {
    file(file_name).map(|text| parse_structure(text).expect("bundled files parse"))
}
