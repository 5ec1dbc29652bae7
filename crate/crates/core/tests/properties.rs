use deltapol::term::{add, cnst, comp, delta, join, meet, mul, sdiff, sub, var};
use deltapol::{
    parse_term, random_support, BooleanAlgebra, Extremum, FinitePoset, Node, Setting, Structure, Subset,
    Term, UnitaryRing,
};
use proptest::prelude::*;

/// Random posets on up to 7 elements: orient each chosen pair from the
/// lower to the higher index, which can never close a cycle.
fn poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..=7)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, edges)| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(edges)
                .filter_map(|(p, keep)| keep.then_some(p))
                .collect();
            let names = (0..n).map(|i| format!("e{i}")).collect();
            FinitePoset::from_indices("random", names, &pairs).unwrap()
        })
}

fn poset_and_subset() -> impl Strategy<Value = (FinitePoset, Subset)> {
    poset().prop_flat_map(|p| {
        let mask = (1u64 << p.len()) - 1;
        (Just(p), any::<u64>().prop_map(move |b| Subset::from_bits(b & mask)))
    })
}

/// Cone and extremum reference computed from `leq`.
fn lower(p: &FinitePoset, a: &[usize]) -> Vec<usize> {
    (0..p.len()).filter(|&z| a.iter().all(|&x| p.leq(z, x))).collect()
}

fn upper(p: &FinitePoset, a: &[usize]) -> Vec<usize> {
    (0..p.len()).filter(|&z| a.iter().all(|&x| p.leq(x, z))).collect()
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

fn oracle_left_identity(p: &FinitePoset) -> bool {
    let n = p.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let lhs = lower(p, &union(&upper(p, &[x, y]), &[z]));
                let rhs = lower(p, &upper(p, &union(&lower(p, &[x, z]), &lower(p, &[y, z]))));
                lhs == rhs
            })
        })
    })
}

proptest! {
    #[test]
    fn closure_is_idempotent((p, a) in poset_and_subset()) {
        let ul = |s| p.lower_cone(p.upper_cone(s));
        let lu = |s| p.upper_cone(p.lower_cone(s));
        prop_assert_eq!(ul(ul(a)), ul(a));
        prop_assert_eq!(lu(lu(a)), lu(a));
        prop_assert!(a.is_subset(ul(a)));
    }

    #[test]
    fn cones_match_reference((p, a) in poset_and_subset()) {
        let elems: Vec<usize> = a.iter().collect();
        prop_assert_eq!(p.lower_cone(a).iter().collect::<Vec<_>>(), lower(&p, &elems));
        prop_assert_eq!(p.upper_cone(a).iter().collect::<Vec<_>>(), upper(&p, &elems));
    }

    #[test]
    fn extremal_elements_are_idempotent_and_contained((p, a) in poset_and_subset()) {
        for which in [Extremum::Max, Extremum::Min] {
            let e = p.extremal(a, which);
            prop_assert!(e.is_subset(a));
            prop_assert_eq!(p.extremal(e, which), e);
            prop_assert_eq!(e.is_empty(), a.is_empty());
        }
    }

    #[test]
    fn distributivity_identities_agree(p in poset()) {
        let d = p.distributivity();
        prop_assert!(d.identities_agree(), "{:?}", d.per_identity);
        prop_assert_eq!(d.per_identity[0], oracle_left_identity(&p));
    }

    #[test]
    fn symmetric_difference_is_an_abelian_group(n in 1usize..=4, x in 0usize..16, y in 0usize..16, z in 0usize..16) {
        let a = BooleanAlgebra::powerset(n).unwrap();
        let (x, y, z) = (x % a.len(), y % a.len(), z % a.len());
        let s = |u, v| a.symmetric_difference(u, v);
        prop_assert_eq!(s(x, y), s(y, x));
        prop_assert_eq!(s(s(x, y), z), s(x, s(y, z)));
        prop_assert_eq!(s(x, x), a.zero());
        prop_assert_eq!(s(x, a.zero()), x);
    }

    #[test]
    fn random_support_is_reproducible(n in 2usize..=12, size in 1usize..=12, seed in any::<u64>()) {
        let s = Structure::Ring(UnitaryRing::zmod(n).unwrap());
        let size = 1 + (size - 1) % n;
        let a = random_support(&s, size, seed).unwrap();
        prop_assert_eq!(&a, &random_support(&s, size, seed).unwrap());
        let mut args: Vec<usize> = a.points().iter().map(|&(x, _)| x).collect();
        args.sort_unstable();
        args.dedup();
        prop_assert_eq!(args.len(), size);
    }
}

fn ring_node() -> impl Strategy<Value = Node> {
    let leaf = prop_oneof![Just(var()), (0usize..5).prop_map(cnst)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| sub(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| mul(a, b)),
            inner.clone().prop_map(|a| Node::Neg(Box::new(a))),
            inner.prop_map(delta),
        ]
    })
}

fn algebra_node() -> impl Strategy<Value = Node> {
    let leaf = prop_oneof![Just(var()), (0usize..8).prop_map(cnst)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| join(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| meet(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| sdiff(a, b)),
            inner.clone().prop_map(comp),
            inner.prop_map(delta),
        ]
    })
}

fn poset_node() -> impl Strategy<Value = Node> {
    let leaf = prop_oneof![Just(var()), (0usize..10).prop_map(cnst)];
    leaf.prop_recursive(4, 24, 3, |inner| {
        let args = proptest::collection::vec(inner.clone(), 1..=3);
        prop_oneof![
            args.clone().prop_map(Node::MaxL),
            args.clone().prop_map(Node::MinU),
            args.prop_map(Node::Union),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| sdiff(a, b)),
            inner.clone().prop_map(comp),
            inner.prop_map(delta),
        ]
    })
}

fn round_trip(setting: Setting, names: &[String], node: Node) -> Result<(), TestCaseError> {
    let term = Term::new(setting, node).unwrap();
    let text = term.display(names).to_string();
    let back = parse_term(&text, setting, names).unwrap();
    prop_assert_eq!(&back, &term);
    let spaced = text.replace(", ", " ,  ").replace('(', " ( ");
    prop_assert_eq!(parse_term(&spaced, setting, names).unwrap(), term);
    Ok(())
}

proptest! {
    #[test]
    fn ring_terms_round_trip(node in ring_node()) {
        let z5 = UnitaryRing::zmod(5).unwrap();
        round_trip(Setting::Ring, z5.names(), node)?;
    }

    #[test]
    fn algebra_terms_round_trip(node in algebra_node()) {
        let b3 = BooleanAlgebra::powerset(3).unwrap();
        round_trip(Setting::BooleanAlgebra, b3.names(), node)?;
    }

    #[test]
    fn poset_terms_round_trip(node in poset_node()) {
        let fig3 = deltapol::corpus::fig3();
        round_trip(Setting::BooleanPoset, fig3.names(), node)?;
    }
}
