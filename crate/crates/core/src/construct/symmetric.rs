use num_rational::BigRational;
use serde_json::json;

use super::{
    fast_bound, floor_log2, fold_certificate, require, shift_steps, wt, Certificate, ConstructOptions,
    ConstructionReport,
};
use crate::engine::{ActionKind, Claim, MixingSequence, MixingStep, Probability};
use crate::error::{MixError, Result};
use crate::group::{perm, Element, FiniteGroup};

fn transposition(n: usize, a: usize, b: usize) -> Element {
    Element::Perm(perm::transposition(n, a, b))
}

fn ratio(a: usize, b: usize) -> Probability {
    Probability::Exact(BigRational::new(a.into(), b.into()))
}

fn need(n: usize, least: usize, what: &str) -> Result<()> {
    if n < least {
        Err(MixError::InvalidParameter(format!("{what} needs n >= {least}, got {n}")))
    } else {
        Ok(())
    }
}

/// Binary blocks of `0..n`, smallest first, as `(start, size)`.
fn blocks(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for b in 0..usize::BITS {
        let size = 1usize << b;
        if n & size != 0 {
            out.push((start, size));
            start += size;
        }
    }
    out
}

/// Swaps `i` with `i ^ 2^(j-1)` inside every block of size at least `2^j`.
fn block_involution(n: usize, blocks: &[(usize, usize)], j: u32) -> Vec<u32> {
    let mut f = perm::identity(n);
    let half = 1usize << (j - 1);
    for &(start, size) in blocks.iter().filter(|(_, s)| *s >= 2 * half) {
        for i in 0..size {
            f[start + i] = (start + (i ^ half)) as u32;
        }
    }
    f
}

/// Stage I telescoping probabilities: `p_k = |B_k| / (n - sum_{2<=j<k} |B_j|)`.
fn stage_one(n: usize, blocks: &[(usize, usize)]) -> Vec<(usize, Probability)> {
    let mut out = Vec::new();
    let mut removed = 0;
    for &(start, size) in &blocks[1..] {
        out.push((start, ratio(size, n - removed)));
        removed += size;
    }
    out.reverse();
    out
}

/// The natural-action mixer from base point 1: in-block involutions at
/// `1/2` (largest stride first), then the block-selecting transpositions
/// `(1, n_k + 1)`, which act first.
pub fn sym_action_steps(n: usize) -> Vec<MixingStep> {
    let bl = blocks(n);
    let top = bl.last().map_or(0, |&(_, s)| s.trailing_zeros());
    let mut steps: Vec<MixingStep> =
        (1..=top).rev().map(|j| MixingStep::half(Element::Perm(block_involution(n, &bl, j)))).collect();
    for (target, p) in stage_one(n, &bl) {
        steps.push(MixingStep::new(transposition(n, 0, target), p));
    }
    steps
}

/// `sym_action(n)` followed by `sym_fast(n-1)` on the stabilizer of 1.
pub fn sym_fast_steps(n: usize) -> Vec<MixingStep> {
    let mut steps = Vec::new();
    for k in (1..=n).rev() {
        steps.extend(shift_steps(&sym_action_steps(k), n - k, n));
    }
    steps
}

fn sym_adjacent_tail(n: usize) -> Vec<MixingStep> {
    (2..=n).rev().map(|i| MixingStep::new(transposition(n, i - 2, i - 1), ratio(i - 1, i))).collect()
}

fn sym_adjacent_steps(n: usize) -> Vec<MixingStep> {
    let mut steps = Vec::new();
    for k in 2..=n {
        steps.extend(shift_steps(&sym_adjacent_tail(k), 0, n));
    }
    steps
}

/// Even-permutation version of [`sym_action_steps`], defined for `n >= 4`.
pub fn alt_action_steps(n: usize) -> Vec<MixingStep> {
    assert!(n >= 4);
    let bl = blocks(n);
    let top = bl.last().map_or(0, |&(_, s)| s.trailing_zeros());
    let tail = perm::transposition(n, n - 2, n - 1);
    let pair = bl.iter().find(|(_, s)| *s == 2).map(|&(a, _)| a);
    let mut steps = Vec::new();
    if let Some(a) = pair {
        let fix = perm::compose(&perm::transposition(n, a, a + 1), &tail);
        steps.push(MixingStep::half(Element::Perm(fix)));
    }
    for j in (1..=top).rev() {
        let mut f = block_involution(n, &bl, j);
        if j == 1 {
            if let Some(a) = pair {
                f[a] = a as u32;
                f[a + 1] = (a + 1) as u32;
            }
        }
        steps.push(MixingStep::half(Element::Perm(f)));
    }
    for (target, p) in stage_one(n, &bl) {
        let g = perm::compose(&perm::transposition(n, 0, target), &tail);
        steps.push(MixingStep::new(Element::Perm(g), p));
    }
    steps
}

/// Ordered-pair mixer of `A_n` from base `(1, 2)`.
fn alt_pairs_steps(n: usize) -> Vec<MixingStep> {
    let mut steps = alt_action_steps(n);
    steps.extend(shift_steps(&alt_action_steps(n - 1), 1, n));
    steps
}

/// `S_{n-2}` inside `A_n` as the setwise stabilizer of `{1, 2}`:
/// `pi -> shift2(pi) (1 2)^sgn(pi)`.
fn embed_stabilizer(n: usize, steps: &[MixingStep]) -> Vec<MixingStep> {
    steps
        .iter()
        .map(|s| {
            let f = s.g.as_perm().expect("permutation");
            let mut g = perm::shift(f, 2, n);
            if !perm::is_even(f) {
                g = perm::compose(&g, &perm::transposition(n, 0, 1));
            }
            MixingStep::new(Element::Perm(g), s.p.clone())
        })
        .collect()
}

fn alt_full_steps(n: usize) -> Vec<MixingStep> {
    let mut steps = alt_pairs_steps(n);
    steps.extend(embed_stabilizer(n, &sym_fast_steps(n - 2)));
    steps
}

fn natural(group: FiniteGroup, steps: Vec<MixingStep>) -> MixingSequence {
    MixingSequence::new(group, steps).with_claim(Claim::action(ActionKind::Natural, json!(1)))
}

/// Adjacent transpositions: `seq(n) = seq(n-1) ++ [((n-1 n), (n-1)/n), ..., ((1 2), 1/2)]`.
pub fn construct_sym_adjacent(n: usize, opts: &ConstructOptions) -> Result<ConstructionReport> {
    need(n, 1, "sym_adjacent")?;
    let group = FiniteGroup::symmetric(n);
    let seq = MixingSequence::new(group.clone(), sym_adjacent_steps(n));
    let cert = adjacent_certificate(n, opts)?;
    ConstructionReport::new("sym-adjacent", seq, (n * (n - 1) / 2) as f64, "n(n-1)/2", cert, group.order())
}

fn adjacent_certificate(n: usize, opts: &ConstructOptions) -> Result<Certificate> {
    let group = FiniteGroup::symmetric(n);
    if super::group_order_fits(&group, opts) {
        return fold_certificate(&MixingSequence::new(group, sym_adjacent_steps(n)), "group", &opts.verify);
    }
    // the subgroup part comes first here, so the tail must mix right cosets
    // of S_{n-1}: its inverse moves n uniformly
    let tail = MixingSequence::new(group.clone(), sym_adjacent_tail(n))
        .inverted()
        .with_claim(Claim::action(ActionKind::Natural, json!(n)));
    let coset = fold_certificate(&tail, "right cosets of S_{n-1}", &opts.verify)?;
    Ok(Certificate::Extension { coset: Box::new(coset), subgroup: Box::new(adjacent_certificate(n - 1, opts)?) })
}

/// Natural-action mixer of `S_n` from base 1 of length `floor(log2 n) + wt(n) - 1`.
pub fn construct_sym_action(n: usize, opts: &ConstructOptions) -> Result<ConstructionReport> {
    need(n, 1, "sym_action")?;
    let seq = natural(FiniteGroup::symmetric(n), sym_action_steps(n));
    let cert = fold_certificate(&seq, "natural action", &opts.verify)?;
    let bound = (floor_log2(n) + wt(n) - 1) as f64;
    ConstructionReport::new("sym-action", seq, bound, "floor(log2 n) + wt(n) - 1", cert, n as u128)
}

/// Group mixer of `S_n` by stacking natural-action mixers of the point
/// stabilizer chain.
pub fn construct_sym_fast(n: usize, opts: &ConstructOptions) -> Result<ConstructionReport> {
    need(n, 1, "sym_fast")?;
    let group = FiniteGroup::symmetric(n);
    let seq = MixingSequence::new(group.clone(), sym_fast_steps(n));
    let cert = fast_certificate(n, opts)?;
    ConstructionReport::new("sym-fast", seq, fast_bound(n), "(3/2) floor(log2 n!) + n/2", cert, group.order())
}

pub(crate) fn fast_certificate(n: usize, opts: &ConstructOptions) -> Result<Certificate> {
    let group = FiniteGroup::symmetric(n);
    if super::group_order_fits(&group, opts) {
        return fold_certificate(&MixingSequence::new(group, sym_fast_steps(n)), "group", &opts.verify);
    }
    let coset = fold_certificate(&natural(group, sym_action_steps(n)), "natural action", &opts.verify)?;
    Ok(Certificate::Extension { coset: Box::new(coset), subgroup: Box::new(fast_certificate(n - 1, opts)?) })
}

/// Natural-action mixer of `A_n` from base 1, `n >= 5`.
pub fn construct_alt_action(n: usize, opts: &ConstructOptions) -> Result<ConstructionReport> {
    need(n, 5, "alt_action")?;
    let seq = natural(FiniteGroup::alternating(n), alt_action_steps(n));
    let cert = fold_certificate(&seq, "natural action", &opts.verify)?;
    let bound = (floor_log2(n) + wt(n)) as f64;
    ConstructionReport::new("alt-action", seq, bound, "floor(log2 n) + wt(n)", cert, n as u128)
}

/// Group mixer of `A_n`, `n >= 5`: ordered pairs from `(1, 2)`, then the
/// setwise stabilizer of `{1, 2}`.
pub fn construct_alt_full(n: usize, opts: &ConstructOptions) -> Result<ConstructionReport> {
    need(n, 5, "alt_full")?;
    let group = FiniteGroup::alternating(n);
    let seq = MixingSequence::new(group.clone(), alt_full_steps(n));
    let cert = if super::group_order_fits(&group, opts) {
        fold_certificate(&seq, "group", &opts.verify)?
    } else {
        let pairs = MixingSequence::new(group.clone(), alt_pairs_steps(n))
            .with_claim(Claim::action(ActionKind::Pairs, json!([1, 2])));
        let coset = require(fold_certificate(&pairs, "ordered pairs", &opts.verify)?, "pairs part")?;
        Certificate::Extension { coset: Box::new(coset), subgroup: Box::new(fast_certificate(n - 2, opts)?) }
    };
    ConstructionReport::new("alt-full", seq, fast_bound(n), "(3/2) floor(log2 n!) + n/2", cert, group.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycles(n: usize, c: &[&[usize]]) -> Element {
        Element::Perm(perm::from_cycles(n, c))
    }

    #[test]
    fn block_layout() {
        assert_eq!(blocks(6), vec![(0, 2), (2, 4)]);
        assert_eq!(blocks(7), vec![(0, 1), (1, 2), (3, 4)]);
        assert_eq!(blocks(1), vec![(0, 1)]);
    }

    #[test]
    fn six_point_action_listing() {
        let steps = sym_action_steps(6);
        assert_eq!(steps.len(), 3);
        assert_eq!(steps[0].g, cycles(6, &[&[2, 4], &[3, 5]]));
        assert_eq!(steps[1].g, cycles(6, &[&[0, 1], &[2, 3], &[4, 5]]));
        assert_eq!(steps[2].g, cycles(6, &[&[0, 2]]));
        assert_eq!(steps[2].p, ratio(2, 3));
        assert!(steps[..2].iter().all(|s| s.p.is_half()));
    }

    #[test]
    fn action_lengths_and_uniformity() {
        let opts = ConstructOptions::default();
        for n in 1..=40 {
            let r = construct_sym_action(n, &opts).unwrap();
            assert_eq!(r.length as u32, floor_log2(n) + wt(n) - 1, "n = {n}");
            assert!(r.certificate.holds());
        }
    }

    #[test]
    fn adjacent_three() {
        let r = construct_sym_adjacent(3, &ConstructOptions::default()).unwrap();
        let s = &r.sequence.steps;
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].g, transposition(3, 0, 1));
        assert_eq!(s[1].g, transposition(3, 1, 2));
        assert_eq!(s[1].p, ratio(2, 3));
        assert_eq!(s[2].g, transposition(3, 0, 1));
        assert!(construct_sym_adjacent(1, &ConstructOptions::default()).unwrap().sequence.is_empty());
    }

    #[test]
    fn adjacent_extension_certificate() {
        let opts = ConstructOptions { fold_limit: 30, ..Default::default() };
        let r = construct_sym_adjacent(5, &opts).unwrap();
        assert!(matches!(r.certificate, Certificate::Extension { .. }));
        assert_eq!(r.length, 10);
    }

    #[test]
    fn fast_small() {
        let opts = ConstructOptions::default();
        let r = construct_sym_fast(2, &opts).unwrap();
        assert_eq!(r.sequence.steps, vec![MixingStep::half(transposition(2, 0, 1))]);
        for n in 1..=6 {
            let r = construct_sym_fast(n, &opts).unwrap();
            assert!(r.bound_satisfied && r.certificate.holds(), "n = {n}");
        }
    }

    #[test]
    fn alternating_steps_are_even() {
        for n in 4..=20 {
            for s in alt_action_steps(n) {
                assert!(perm::is_even(s.g.as_perm().unwrap()), "n = {n}");
            }
        }
        for s in alt_full_steps(7) {
            assert!(perm::is_even(s.g.as_perm().unwrap()));
        }
    }

    #[test]
    fn alternating_constructions() {
        let opts = ConstructOptions::default();
        for n in [5, 6, 8, 11] {
            let r = construct_alt_action(n, &opts).unwrap();
            assert!(r.bound_satisfied && r.certificate.holds(), "n = {n}");
        }
        let r = construct_alt_full(5, &opts).unwrap();
        assert_eq!(r.length, 8);
        assert!(r.certificate.holds());
        assert!(construct_alt_full(4, &opts).is_err());
        assert!(construct_alt_action(4, &opts).is_err());
    }

    #[test]
    fn alt_full_extension_certificate() {
        let opts = ConstructOptions { fold_limit: 100, ..Default::default() };
        let r = construct_alt_full(6, &opts).unwrap();
        assert!(matches!(r.certificate, Certificate::Extension { .. }));
    }
}
