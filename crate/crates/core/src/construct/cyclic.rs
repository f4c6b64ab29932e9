use super::{fold_certificate, fold_on, Certificate, ConstructOptions, ConstructionReport};
use crate::engine::{MixingSequence, MixingStep};
use crate::error::{MixError, Result};
use crate::group::{Element, FiniteGroup, IndexedGroup};

/// `(2^j, 1/2)` for `j < d` on `Z/2^d`.
pub fn construct_cyclic_2group(d: u32, opts: &ConstructOptions) -> Result<ConstructionReport> {
    if d > 63 {
        return Err(MixError::InvalidParameter(format!("2^{d} does not fit a cyclic group")));
    }
    let n = 1u64 << d;
    let group = FiniteGroup::cyclic(n);
    let steps: Vec<MixingStep> = (0..d).map(|j| MixingStep::half(Element::Cyclic(1 << j))).collect();
    let seq = MixingSequence::new(group, steps);
    let cert = cyclic_certificate(d, opts)?;
    ConstructionReport::new("cyclic-2group", seq, d as f64, "d", cert, n as u128)
}

fn cyclic_certificate(d: u32, opts: &ConstructOptions) -> Result<Certificate> {
    let n = 1u64 << d;
    if (n as u128) <= opts.fold_limit {
        let steps = (0..d).map(|j| MixingStep::half(Element::Cyclic(1 << j))).collect();
        return fold_certificate(&MixingSequence::new(FiniteGroup::cyclic(n), steps), "group", &opts.verify);
    }
    // Z/2^d over <2> = Z/2^(d-1): the first step reduces to a coin on Z/2
    let z2 = IndexedGroup::new(FiniteGroup::cyclic(2), 2)?;
    let coset = fold_on(&z2, &[MixingStep::half(Element::Cyclic(1))], "G/<2>", &opts.verify)?;
    Ok(Certificate::Extension { coset: Box::new(coset), subgroup: Box::new(cyclic_certificate(d - 1, opts)?) })
}

/// A descending chain of index-2 subgroups through Frattini quotients.
///
/// At each level `M`, `K` is generated by squares and commutators, the
/// greedy basis `x_1..x_r` of `M/K` is chosen, `M' = <K, x_1..x_{r-1}>` has
/// index 2 and `x_r` represents the other coset.
pub fn construct_2group_chain(group: &FiniteGroup, opts: &ConstructOptions) -> Result<ConstructionReport> {
    let order = group.order();
    if !order.is_power_of_two() {
        return Err(MixError::InvalidParameter(format!("order {order} is not a power of 2")));
    }
    let ig = IndexedGroup::new(group.clone(), opts.verify.enum_bound)?;
    let mut level: Vec<u32> = (0..ig.len() as u32).collect();
    let mut steps = Vec::new();
    while level.len() > 1 {
        let mut gens: Vec<u32> = level.iter().map(|&x| ig.mul_idx(x, x)).collect();
        let basis = ig_generators(&ig, &level);
        for &a in &basis {
            for &b in &basis {
                let c = ig.mul_idx(ig.mul_idx(a, b), ig.mul_idx(ig.inv_idx(a), ig.inv_idx(b)));
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let frattini = ig.closure_idx(&gens);
        let mut chosen: Vec<u32> = Vec::new();
        let mut span = frattini.clone();
        for &x in &level {
            if span.binary_search(&x).is_err() {
                chosen.push(x);
                let mut g = frattini.clone();
                g.extend(&chosen);
                span = ig.closure_idx(&g);
            }
        }
        let top = chosen.pop().expect("a nontrivial 2-group has a nontrivial Frattini quotient");
        let mut g = frattini;
        g.extend(&chosen);
        let next = ig.closure_idx(&g);
        debug_assert_eq!(next.len() * 2, level.len());
        steps.push(MixingStep::half(ig.element(top).clone()));
        level = next;
    }
    let t = order.trailing_zeros();
    let seq = MixingSequence::new(group.clone(), steps);
    let cert = fold_on(&ig, &seq.steps, "group", &opts.verify)?;
    ConstructionReport::new("2group-chain", seq, t as f64, "log2 |G|", cert, order)
}

/// Greedy generating set of a subgroup given by sorted indices.
fn ig_generators(ig: &IndexedGroup, sub: &[u32]) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut span = vec![ig.identity_idx()];
    for &x in sub {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = ig.closure_idx(&gens);
        }
    }
    gens
}
