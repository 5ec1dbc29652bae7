//! Brute-force reference implementations over `leq` alone, independent of
//! the bitset machinery in the library.

#![allow(dead_code)]

use deltapol::FinitePoset;

pub fn lower(p: &FinitePoset, a: &[usize]) -> Vec<usize> {
    (0..p.len()).filter(|&z| a.iter().all(|&x| p.leq(z, x))).collect()
}

pub fn upper(p: &FinitePoset, a: &[usize]) -> Vec<usize> {
    (0..p.len()).filter(|&z| a.iter().all(|&x| p.leq(x, z))).collect()
}

pub fn minimal(p: &FinitePoset, a: &[usize]) -> Vec<usize> {
    a.iter()
        .copied()
        .filter(|&z| !a.iter().any(|&w| w != z && p.leq(w, z)))
        .collect()
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

/// `Min U(L(x', y) ∪ L(x, y'))`, sorted by carrier index.
pub fn sdiff(p: &FinitePoset, x: usize, y: usize) -> Vec<usize> {
    let c = |e| p.complement_of(e).expect("complemented");
    let lo = union(&lower(p, &[c(x), y]), &lower(p, &[x, c(y)]));
    minimal(p, &upper(p, &lo))
}

fn same(a: &[usize], b: &[usize]) -> bool {
    union(a, &[]) == union(b, &[])
}

/// Verdicts of the four distributivity identities, checked on all triples.
pub fn distributivity(p: &FinitePoset) -> [bool; 4] {
    let mut ok = [true; 4];
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let uxy = upper(p, &[x, y]);
                let lxy = lower(p, &[x, y]);
                let l_xz = lower(p, &[x, z]);
                let l_yz = lower(p, &[y, z]);
                let u_xz = upper(p, &[x, z]);
                let u_yz = upper(p, &[y, z]);
                let lhs1 = lower(p, &union(&uxy, &[z]));
                let rhs1 = lower(p, &upper(p, &union(&l_xz, &l_yz)));
                let lhs2 = upper(p, &lhs1);
                let rhs2 = upper(p, &union(&l_xz, &l_yz));
                let lhs3 = upper(p, &union(&lxy, &[z]));
                let rhs3 = upper(p, &lower(p, &union(&u_xz, &u_yz)));
                let lhs4 = lower(p, &lhs3);
                let rhs4 = lower(p, &union(&u_xz, &u_yz));
                ok[0] &= same(&lhs1, &rhs1);
                ok[1] &= same(&lhs2, &rhs2);
                ok[2] &= same(&lhs3, &rhs3);
                ok[3] &= same(&lhs4, &rhs4);
            }
        }
    }
    ok
}
