use super::{Element, FiniteGroup};
use crate::engine::{MixingStep, Probability};

/// Rewrites a product of independent choices `a_i` (prob. `1-p_i`) or `b_i`
/// (prob. `p_i`) as a random subproduct times a constant.
///
/// Step `i` is `c_i = P_{i-1} b_i a_i^-1 P_{i-1}^-1` with `P_i = a_1 ... a_i`,
/// and the constant is `P_n`.
pub fn pairs_to_subproduct(
    group: &FiniteGroup,
    pairs: &[(Element, Element, Probability)],
) -> (Vec<MixingStep>, Element) {
    let mut prefix = group.identity();
    let mut steps = Vec::with_capacity(pairs.len());
    for (a, b, p) in pairs {
        let c = group.mul(b, &group.inverse(a));
        steps.push(MixingStep::new(group.conjugate(&prefix, &c), p.clone()));
        prefix = group.mul(&prefix, a);
    }
    (steps, prefix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm;
    use std::collections::HashMap;

    fn t(a: usize, b: usize) -> Element {
        Element::Perm(perm::transposition(3, a, b))
    }

    #[test]
    fn trivial_cases() {
        let g = FiniteGroup::symmetric(3);
        let (steps, c) = pairs_to_subproduct(&g, &[(g.identity(), t(0, 1), Probability::half())]);
        assert_eq!(steps[0].g, t(0, 1));
        assert_eq!(c, g.identity());

        let (steps, c) = pairs_to_subproduct(
            &g,
            &[(t(0, 1), t(0, 1), Probability::half()), (t(1, 2), t(1, 2), Probability::half())],
        );
        assert!(steps.iter().all(|s| g.is_identity(&s.g)));
        assert_eq!(c, g.mul(&t(0, 1), &t(1, 2)));
    }

    #[test]
    fn laws_agree_on_s3() {
        let g = FiniteGroup::symmetric(3);
        let p1 = Probability::ratio(1, 3).unwrap();
        let p2 = Probability::ratio(3, 4).unwrap();
        let pairs = vec![(t(0, 1), t(1, 2), p1.clone()), (t(0, 2), g.identity(), p2.clone())];
        let (steps, c) = pairs_to_subproduct(&g, &pairs);
        let w = |p: &Probability, e: bool| {
            let r = p.as_rational().unwrap().clone();
            if e {
                r
            } else {
                num_rational::BigRational::from_integer(1.into()) - r
            }
        };
        let mut direct: HashMap<Element, num_rational::BigRational> = HashMap::new();
        let mut via: HashMap<Element, num_rational::BigRational> = HashMap::new();
        for e1 in [false, true] {
            for e2 in [false, true] {
                let x1 = if e1 { &pairs[0].1 } else { &pairs[0].0 };
                let x2 = if e2 { &pairs[1].1 } else { &pairs[1].0 };
                *direct.entry(g.mul(x1, x2)).or_default() += w(&p1, e1) * w(&p2, e2);
                let mut y = g.identity();
                if e1 {
                    y = g.mul(&y, &steps[0].g);
                }
                if e2 {
                    y = g.mul(&y, &steps[1].g);
                }
                *via.entry(g.mul(&y, &c)).or_default() += w(&p1, e1) * w(&p2, e2);
            }
        }
        direct.retain(|_, v| *v != num_rational::BigRational::from_integer(0.into()));
        via.retain(|_, v| *v != num_rational::BigRational::from_integer(0.into()));
        assert_eq!(direct, via);
    }
}
