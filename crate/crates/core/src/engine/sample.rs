use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use super::action::ActionSpace;
use super::sequence::{Claim, MixingSequence};
use crate::error::{MixError, Result};
use crate::group::IndexedGroup;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x006d_6978_6162_6c65;

#[derive(Clone, Debug, Serialize)]
pub struct PointCount {
    pub point: Value,
    pub count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub trials: u64,
    pub seed: u64,
    pub carrier_size: usize,
    /// Pearson statistic against the uniform law, `carrier_size - 1` degrees of freedom
    pub chi_square: f64,
    /// nonzero counts in carrier order
    pub counts: Vec<PointCount>,
}

/// Draws `trials` independent realizations of the random subproduct.
pub fn sample(seq: &MixingSequence, trials: u64, seed: u64, bound: u128) -> Result<SampleReport> {
    if trials == 0 {
        return Err(MixError::InvalidParameter("trials must be at least 1".into()));
    }
    seq.validate()?;
    let probs: Vec<f64> = seq.steps.iter().map(|s| s.p.to_f64()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (counts, json): (Vec<u64>, Box<dyn Fn(u32) -> Value>) = match &seq.claim {
        Claim::Group => {
            let ig = IndexedGroup::new(seq.group.clone(), bound)?;
            let idx: Vec<u32> = seq.steps.iter().map(|s| ig.index_of(&s.g).unwrap()).collect();
            let mut counts = vec![0u64; ig.len()];
            for _ in 0..trials {
                let mut acc = ig.identity_idx();
                for (g, &p) in idx.iter().zip(&probs) {
                    if rng.gen::<f64>() < p {
                        acc = ig.mul_idx(acc, *g);
                    }
                }
                counts[acc as usize] += 1;
            }
            (counts, Box::new(move |x| ig.group().element_to_json(ig.element(x))))
        }
        Claim::Action { kind, base, subgroup } => {
            let space = ActionSpace::new(&seq.group, *kind, subgroup.as_deref(), bound)?;
            let x0 = space.parse_point(base)?;
            let perms: Vec<Vec<u32>> = seq.steps.iter().map(|s| space.permutation(&s.g)).collect();
            let mut counts = vec![0u64; space.size()];
            for _ in 0..trials {
                let mut x = x0;
                for (perm, &p) in perms.iter().zip(&probs).rev() {
                    if rng.gen::<f64>() < p {
                        x = perm[x as usize];
                    }
                }
                counts[x as usize] += 1;
            }
            (counts, Box::new(move |x| space.point_json(x)))
        }
    };
    let n = counts.len();
    let expected = trials as f64 / n as f64;
    let chi_square = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let listed = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| PointCount { point: json(i as u32), count: c })
        .collect();
    Ok(SampleReport { trials, seed, carrier_size: n, chi_square, counts: listed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::sequence::MixingStep;
    use crate::group::{Element, FiniteGroup};

    #[test]
    fn reproducible_and_complete() {
        let seq = MixingSequence::new(
            FiniteGroup::cyclic(8),
            (0..3).map(|j| MixingStep::half(Element::Cyclic(1 << j))).collect(),
        );
        let a = sample(&seq, 100_000, 7, 1000).unwrap();
        let b = sample(&seq, 100_000, 7, 1000).unwrap();
        assert_eq!(a.chi_square, b.chi_square);
        assert_eq!(a.counts.iter().map(|c| c.count).sum::<u64>(), 100_000);
        // 5 sigma around 12500
        let sigma = (100_000.0f64 * (1.0 / 8.0) * (7.0 / 8.0)).sqrt();
        for c in &a.counts {
            assert!((c.count as f64 - 12_500.0).abs() < 5.0 * sigma);
        }
    }

    #[test]
    fn empty_sequence_stays_at_identity() {
        let seq = MixingSequence::new(FiniteGroup::symmetric(3), vec![]);
        let r = sample(&seq, 50, 1, 100).unwrap();
        assert_eq!(r.counts.len(), 1);
        assert_eq!(r.counts[0].count, 50);
    }

    #[test]
    fn zero_trials_rejected() {
        let seq = MixingSequence::new(FiniteGroup::cyclic(2), vec![]);
        assert!(sample(&seq, 0, 1, 10).is_err());
    }
}
