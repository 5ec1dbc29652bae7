//! Fixtures shared by the benchmarks.

use deltapol::{corpus, parse_points, BooleanAlgebra, FinitePoset, SupportFunction, UnitaryRing};

pub fn fig3() -> (FinitePoset, SupportFunction) {
    let p = corpus::fig3();
    let s = parse_points("0:a,a:c,b:dprime,cprime:1", p.names()).expect("valid support");
    (p, s)
}

pub fn powerset4() -> (BooleanAlgebra, SupportFunction) {
    let a = BooleanAlgebra::powerset(4).expect("small powerset");
    let s = parse_points("a:bc,ab:1,abc:0,d:d,1:a", a.names()).expect("valid support");
    (a, s)
}

pub fn z12() -> (UnitaryRing, SupportFunction) {
    let r = UnitaryRing::zmod(12).expect("small ring");
    let s = parse_points("1:5,3:7,4:0,8:11,11:2", r.names()).expect("valid support");
    (r, s)
}
