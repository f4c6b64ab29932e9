use num_rational::BigRational;
use serde_json::Value;

use super::{fold_certificate, fold_on, require, Certificate, ConstructOptions, ConstructionReport};
use crate::engine::verify::resolve_mode;
use crate::engine::{action_law, ActionKind, ActionSpace, Claim, MixingSequence, MixingStep, Probability};
use crate::error::{MixError, Result};
use crate::group::{Element, FiniteGroup, IndexedGroup};

fn complement_of_inverse(n: usize) -> Probability {
    Probability::Exact(BigRational::new((n - 1).into(), n.into()))
}

/// `sigma_T ++ sigma_H`, after checking that `sigma_T` mixes the left cosets
/// `G/H` from the coset `H` and that `sigma_H` mixes `H`.
pub fn compose_extension(
    group: &FiniteGroup,
    subgroup: &[Element],
    coset_steps: &[MixingStep],
    sub_steps: &[MixingStep],
    opts: &ConstructOptions,
) -> Result<ConstructionReport> {
    let coset_seq = MixingSequence::new(group.clone(), coset_steps.to_vec()).with_claim(Claim::cosets(
        subgroup.to_vec(),
        group.identity(),
        group,
    ));
    let coset = require(fold_certificate(&coset_seq, "cosets G/H", &opts.verify)?, "the coset mixer")?;
    let carrier = IndexedGroup::on_subgroup(group.clone(), subgroup.to_vec())?;
    let sub = require(fold_on(&carrier, sub_steps, "subgroup H", &opts.verify)?, "the subgroup mixer")?;
    let mut steps = coset_steps.to_vec();
    steps.extend_from_slice(sub_steps);
    let seq = MixingSequence::new(group.clone(), steps);
    let cert = if super::group_order_fits(group, opts) {
        fold_certificate(&seq, "group", &opts.verify)?
    } else {
        Certificate::Extension { coset: Box::new(coset), subgroup: Box::new(sub) }
    };
    let bound = seq.len() as f64;
    ConstructionReport::new("extension", seq, bound, "len(coset) + len(subgroup)", cert, group.order())
}

/// Concatenation of factor mixers embedded in the direct product.
pub fn compose_direct_product(factors: &[MixingSequence], opts: &ConstructOptions) -> Result<ConstructionReport> {
    if factors.is_empty() {
        return Err(MixError::InvalidParameter("a direct product needs at least one factor".into()));
    }
    let groups: Vec<FiniteGroup> = factors.iter().map(|s| s.group.clone()).collect();
    let product = FiniteGroup::product(groups.clone());
    let ids: Vec<Element> = groups.iter().map(FiniteGroup::identity).collect();
    let mut certs = Vec::new();
    let mut steps = Vec::new();
    for (i, seq) in factors.iter().enumerate() {
        if seq.claim != Claim::Group {
            return Err(MixError::InvalidParameter("direct product factors must be group mixers".into()));
        }
        let cert = if super::group_order_fits(&seq.group, opts) {
            fold_certificate(seq, &seq.group.name(), &opts.verify)?
        } else {
            return Err(MixError::EnumerationBound { order: seq.group.order(), bound: opts.fold_limit });
        };
        certs.push(require(cert, &format!("factor {}", i + 1))?);
        for s in &seq.steps {
            let mut t = ids.clone();
            t[i] = s.g.clone();
            steps.push(MixingStep::new(Element::Product(t), s.p.clone()));
        }
    }
    let seq = MixingSequence::new(product.clone(), steps);
    let cert = if super::group_order_fits(&product, opts) {
        fold_certificate(&seq, "group", &opts.verify)?
    } else {
        Certificate::Product { factors: certs }
    };
    let bound = seq.len() as f64;
    ConstructionReport::new("direct-product", seq, bound, "sum of factor lengths", cert, product.order())
}

/// Orbit of an ordered pair under the group, by breadth-first search over
/// generators.
fn pair_orbit_size(space: &ActionSpace, x: u32, y: u32) -> usize {
    let m = space.size();
    let gens: Vec<Vec<u32>> = space.group().generators().iter().map(|g| space.permutation(g)).collect();
    let mut seen = vec![false; m * m];
    seen[x as usize * m + y as usize] = true;
    let mut queue = vec![(x, y)];
    let mut head = 0;
    while head < queue.len() {
        let (a, b) = queue[head];
        head += 1;
        for g in &gens {
            let (c, d) = (g[a as usize], g[b as usize]);
            let k = c as usize * m + d as usize;
            if !seen[k] {
                seen[k] = true;
                queue.push((c, d));
            }
        }
    }
    queue.len()
}

/// Stabilizer mixer plus one step: `sigma_H ++ [(a, 1 - 1/|X|)]`.
///
/// `sigma_H` must consist of elements fixing the base point `x` and mix
/// `X \ {x}` from `h_base`; when `h_base` differs from `a x` the steps are
/// conjugated by an `h` fixing `x` with `h h_base = a x`.
#[allow(clippy::too_many_arguments)]
pub fn lift_2transitive(
    group: &FiniteGroup,
    kind: ActionKind,
    subgroup: Option<&[Element]>,
    base: &Value,
    h_steps: &[MixingStep],
    h_base: &Value,
    a: &Element,
    opts: &ConstructOptions,
) -> Result<ConstructionReport> {
    let bound = opts.verify.enum_bound;
    let space = ActionSpace::new(group, kind, subgroup, bound)?;
    let x = space.parse_point(base)?;
    let m = space.size();
    if m < 2 {
        return Err(MixError::InvalidAction("a one-point action has no element outside the stabilizer".into()));
    }
    if (m as u128) * (m as u128) > bound {
        return Err(MixError::EnumerationBound { order: (m * m) as u128, bound });
    }
    let y = if x == 0 { 1 } else { 0 };
    if pair_orbit_size(&space, x, y) != m * (m - 1) {
        return Err(MixError::InvalidAction("the action is not 2-transitive".into()));
    }
    group.validate(a)?;
    let target = space.act(a, x);
    if target == x {
        return Err(MixError::InvalidParameter("a lies in the stabilizer of the base point".into()));
    }
    for s in h_steps {
        group.validate(&s.g)?;
        if space.act(&s.g, x) != x {
            return Err(MixError::InvalidParameter("stabilizer mixer moves the base point".into()));
        }
    }
    let hb = space.parse_point(h_base)?;
    if hb == x {
        return Err(MixError::InvalidParameter("stabilizer base must differ from the base point".into()));
    }
    let mut h_steps = h_steps.to_vec();
    if hb != target {
        let h = group
            .enumerate(bound)?
            .into_iter()
            .find(|g| space.act(g, x) == x && space.act(g, hb) == target)
            .expect("2-transitivity gives a conjugating element");
        h_steps = MixingSequence::new(group.clone(), h_steps).conjugated(&h).steps;
    }
    // sigma_H must be uniform on X \ {x} from a x
    let mode = resolve_mode(&h_steps, opts.verify.mode)?;
    let law = action_law(&space, &h_steps, target, mode)?;
    let rest = law.pushforward(m - 1, |z| if z > x as usize { z - 1 } else { z });
    let u = rest.uniformity(&opts.verify.tol);
    if !law.is_zero_at(x as usize) || !u.uniform {
        return Err(MixError::VerificationFailed(format!(
            "the stabilizer mixer does not mix the remaining points (max deviation {})",
            u.max_dev
        )));
    }
    let mut steps = h_steps;
    steps.push(MixingStep::new(a.clone(), complement_of_inverse(m)));
    let claim = Claim::Action { kind, base: base.clone(), subgroup: subgroup.map(<[Element]>::to_vec) };
    let seq = MixingSequence::new(group.clone(), steps).with_claim(claim);
    let cert = fold_certificate(&seq, "action", &opts.verify)?;
    let len = seq.len() as f64;
    ConstructionReport::new("2-transitive-lift", seq, len, "len(stabilizer mixer) + 1", cert, m as u128)
}

/// Mixer of `G = N x| Q` when `Q` has exactly two orbits on `N` by
/// conjugation: `q_mixer ++ [(a, 1 - 1/|N|)] ++ q_mixer` for the least
/// nonidentity `a` in `N`.
pub fn semidirect_two_orbit_lift(
    group: &FiniteGroup,
    normal: &[Element],
    complement: &[Element],
    q_steps: &[MixingStep],
    opts: &ConstructOptions,
) -> Result<ConstructionReport> {
    let ig = IndexedGroup::new(group.clone(), opts.verify.enum_bound)?;
    let index = |xs: &[Element]| -> Result<Vec<u32>> {
        let mut v = xs
            .iter()
            .map(|x| ig.index_of(x).ok_or_else(|| MixError::InvalidElement(format!("{x:?} is not in the group"))))
            .collect::<Result<Vec<_>>>()?;
        v.sort_unstable();
        v.dedup();
        Ok(v)
    };
    let n = index(normal)?;
    let q = index(complement)?;
    if !ig.is_subgroup_idx(&n) || !ig.is_subgroup_idx(&q) {
        return Err(MixError::NotSubgroup("N and Q must be subgroups".into()));
    }
    if !ig.is_normal_idx(&n) {
        return Err(MixError::NotNormal);
    }
    let meet = n.iter().filter(|x| q.binary_search(x).is_ok()).count();
    if meet != 1 || n.len() * q.len() != ig.len() {
        return Err(MixError::InvalidParameter("G is not the semidirect product of N and Q".into()));
    }
    let mut orbit_of = vec![usize::MAX; ig.len()];
    let mut orbits = 0;
    for &x in &n {
        if orbit_of[x as usize] == usize::MAX {
            for &h in &q {
                orbit_of[ig.conj_idx(h, x) as usize] = orbits;
            }
            orbits += 1;
        }
    }
    if orbits != 2 {
        return Err(MixError::InvalidParameter(format!("Q has {orbits} orbits on N, not 2")));
    }
    let a = ig.element(*n.iter().find(|&&x| x != ig.identity_idx()).expect("N is nontrivial")).clone();
    let base = group.element_to_json(&group.identity());
    let lift = lift_2transitive(
        group,
        ActionKind::Cosets,
        Some(complement),
        &base,
        q_steps,
        &group.element_to_json(&a),
        &a,
        opts,
    )?;
    let mut report = compose_extension(group, complement, &lift.sequence.steps, q_steps, opts)?;
    report.family = "two-orbit-semidirect".into();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_alt_full, construct_cyclic_2group, sym_action_steps, sym_fast_steps};
    use crate::group::{catalog, perm};
    use serde_json::json;

    fn t(n: usize, a: usize, b: usize) -> Element {
        Element::Perm(perm::transposition(n, a, b))
    }

    #[test]
    fn extension_of_z4() {
        let g = FiniteGroup::cyclic(4);
        let r = compose_extension(
            &g,
            &[Element::Cyclic(0), Element::Cyclic(2)],
            &[MixingStep::half(Element::Cyclic(1))],
            &[MixingStep::half(Element::Cyclic(2))],
            &ConstructOptions::default(),
        )
        .unwrap();
        assert_eq!(r.length, 2);
    }

    #[test]
    fn extension_s4_over_point_stabilizer() {
        let g = FiniteGroup::symmetric(4);
        let h: Vec<Element> = g.enumerate(100).unwrap().into_iter().filter(|x| x.as_perm().unwrap()[0] == 0).collect();
        let sub = crate::construct::shift_steps(&sym_fast_steps(3), 1, 4);
        let r = compose_extension(&g, &h, &sym_action_steps(4), &sub, &ConstructOptions::default()).unwrap();
        assert!(r.certificate.holds());
    }

    #[test]
    fn extension_rejects_a3() {
        let g = FiniteGroup::symmetric(3);
        let a3: Vec<Element> =
            g.enumerate(10).unwrap().into_iter().filter(|x| perm::is_even(x.as_perm().unwrap())).collect();
        let c = Element::Perm(perm::from_cycles(3, &[&[0, 1, 2]]));
        let sub = vec![
            MixingStep::half(c.clone()),
            MixingStep::half(c.clone()),
            MixingStep::new(c, Probability::ratio(1, 3).unwrap()),
        ];
        let err = compose_extension(&g, &a3, &[MixingStep::half(t(3, 0, 1))], &sub, &ConstructOptions::default());
        assert!(matches!(err, Err(MixError::VerificationFailed(_))));
    }

    #[test]
    fn products() {
        let opts = ConstructOptions::default();
        let z2 = construct_cyclic_2group(1, &opts).unwrap().sequence;
        let r = compose_direct_product(&[z2.clone(), z2.clone()], &opts).unwrap();
        assert_eq!(r.length, 2);
        let a5 = construct_alt_full(5, &opts).unwrap().sequence;
        let r = compose_direct_product(&[a5, z2], &opts).unwrap();
        assert_eq!(r.sequence.group.order(), 120);
        assert!(r.certificate.holds());
    }

    #[test]
    fn two_transitive_s3() {
        let g = FiniteGroup::symmetric(3);
        let r = lift_2transitive(
            &g,
            ActionKind::Natural,
            None,
            &json!(1),
            &[MixingStep::half(t(3, 1, 2))],
            &json!(2),
            &t(3, 0, 1),
            &ConstructOptions::default(),
        )
        .unwrap();
        assert_eq!(r.sequence.steps[1].p, Probability::ratio(2, 3).unwrap());
        // a different stabilizer base is conjugated into place
        let r = lift_2transitive(
            &g,
            ActionKind::Natural,
            None,
            &json!(1),
            &[MixingStep::half(t(3, 1, 2))],
            &json!(3),
            &t(3, 0, 1),
            &ConstructOptions::default(),
        )
        .unwrap();
        assert!(r.certificate.holds());
    }

    #[test]
    fn two_transitive_rejections() {
        let opts = ConstructOptions::default();
        let g = FiniteGroup::symmetric(3);
        let in_h = lift_2transitive(&g, ActionKind::Natural, None, &json!(1), &[], &json!(2), &t(3, 1, 2), &opts);
        assert!(in_h.is_err());
        let c4 = FiniteGroup::cyclic(4);
        let not2 =
            lift_2transitive(&c4, ActionKind::Natural, None, &json!(0), &[], &json!(1), &Element::Cyclic(1), &opts);
        assert!(matches!(not2, Err(MixError::InvalidAction(_))));
        let one = FiniteGroup::symmetric(1);
        let r = lift_2transitive(&one, ActionKind::Natural, None, &json!(1), &[], &json!(1), &one.identity(), &opts);
        assert!(r.is_err());
    }

    #[test]
    fn semidirect_examples() {
        let opts = ConstructOptions::default();
        let g = catalog::affine_f5();
        let (n, q) = catalog::metacyclic_parts(5, 4);
        let n: Vec<Element> = n.into_iter().map(Element::Cayley).collect();
        let q: Vec<Element> = q.into_iter().map(Element::Cayley).collect();
        let qm = vec![MixingStep::half(Element::Cayley(1)), MixingStep::half(Element::Cayley(2))];
        let r = semidirect_two_orbit_lift(&g, &n, &q, &qm, &opts).unwrap();
        assert!(r.certificate.holds());
        assert_eq!(r.length, 5);

        let z6 = catalog::metacyclic(3, 2, 1, 0);
        let (n, q) = catalog::metacyclic_parts(3, 2);
        let n: Vec<Element> = n.into_iter().map(Element::Cayley).collect();
        let q: Vec<Element> = q.into_iter().map(Element::Cayley).collect();
        let err = semidirect_two_orbit_lift(&z6, &n, &q, &[MixingStep::half(Element::Cayley(1))], &opts);
        assert!(err.is_err());
    }
}
