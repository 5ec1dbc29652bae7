//! Baaz delta and the poset symmetric difference.

use super::EvalError;
use crate::poset::FinitePoset;
use crate::ring::UnitaryRing;
use crate::subset::Subset;

/// `Δ(0) = 0`, `Δ(x) = 1` otherwise.
pub fn baaz_delta_elem(ring: &UnitaryRing, x: usize) -> usize {
    if x == ring.zero() {
        ring.zero()
    } else {
        ring.one()
    }
}

/// The operator form over a bounded poset: `{0}` maps to `0`, every other
/// nonempty subset to `1`.
pub fn baaz_delta_subset(poset: &FinitePoset, a: Subset) -> Result<usize, EvalError> {
    let (bottom, top) = poset.bounds().ok_or(EvalError::NotBounded)?;
    if a.is_empty() {
        return Err(EvalError::EmptyCone);
    }
    Ok(if a == Subset::singleton(bottom) {
        bottom
    } else {
        top
    })
}

/// `x + y = Min U(L(x′, y), L(x, y′))`. Needs an attached complementation.
pub fn sdiff_poset(poset: &FinitePoset, x: usize, y: usize) -> Result<Subset, EvalError> {
    let c = poset.complement().ok_or(EvalError::ComplementUnresolved)?;
    let left = poset.lower_cone(FinitePoset::pair(c[x], y));
    let right = poset.lower_cone(FinitePoset::pair(x, c[y]));
    Ok(poset.min_u(left.union(right)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn ring_delta() {
        let z6 = UnitaryRing::zmod(6).unwrap();
        assert_eq!(baaz_delta_elem(&z6, 0), 0);
        assert_eq!(baaz_delta_elem(&z6, 1), 1);
        assert_eq!(baaz_delta_elem(&z6, 4), 1);
    }

    #[test]
    fn subset_delta() {
        let p = corpus::fig3();
        assert_eq!(baaz_delta_subset(&p, Subset::singleton(0)).unwrap(), 0);
        let bc: Subset = [p.index_of("b'").unwrap(), p.index_of("c'").unwrap()].into_iter().collect();
        assert_eq!(baaz_delta_subset(&p, bc).unwrap(), p.top().unwrap());
        assert_eq!(baaz_delta_subset(&p, Subset::EMPTY), Err(EvalError::EmptyCone));
    }

    #[test]
    fn poset_sdiff_examples() {
        let p = corpus::fig3();
        let i = |n: &str| p.index_of(n).unwrap();
        let got = sdiff_poset(&p, i("b"), i("c'")).unwrap();
        assert_eq!(got, Subset::singleton(i("b'")).with(i("c'")));
        for x in 0..p.len() {
            assert_eq!(sdiff_poset(&p, x, x).unwrap(), Subset::singleton(0));
        }

        let fig2 = corpus::fig2();
        let j = |n: &str| fig2.index_of(n).unwrap();
        assert_eq!(sdiff_poset(&fig2, j("b"), j("c")).unwrap(), Subset::singleton(0));
    }

    #[test]
    fn sdiff_needs_complement() {
        let chain = FinitePoset::build("c3", &["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap();
        assert_eq!(sdiff_poset(&chain, 0, 1), Err(EvalError::ComplementUnresolved));
    }
}
