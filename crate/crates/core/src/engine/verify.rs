use serde::Serialize;

use super::action::ActionSpace;
use super::distribution::Distribution;
use super::probability::Mode;
use super::sequence::{Claim, MixingSequence, MixingStep};
use crate::error::{MixError, Result};
use crate::group::IndexedGroup;
use crate::real::Real;
use crate::DEFAULT_ENUM_BOUND;

/// Default tolerance of numeric verification.
pub const DEFAULT_TOLERANCE: &str = "1e-9";

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// `None` picks exact when every probability is rational
    pub mode: Option<Mode>,
    pub tol: Real,
    pub enum_bound: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { mode: None, tol: Real::parse(DEFAULT_TOLERANCE).unwrap(), enum_bound: DEFAULT_ENUM_BOUND }
    }
}

impl VerifyOptions {
    pub fn numeric() -> Self {
        VerifyOptions { mode: Some(Mode::Numeric), ..Default::default() }
    }
}

/// Verification summary.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub uniform: bool,
    pub max_dev: String,
    pub support: usize,
    pub length: usize,
    pub entropy_lb: u32,
    pub mode: Mode,
}

/// `ceil(log2 order)`.
pub fn entropy_bound(order: u128) -> u32 {
    if order <= 1 {
        0
    } else {
        128 - (order - 1).leading_zeros()
    }
}

/// Whether `len >= log2 order`, with the bound `ceil(log2 order)`.
pub fn entropy_bound_ok(len: usize, order: u128) -> (bool, u32) {
    let b = entropy_bound(order);
    (len as u32 >= b, b)
}

/// Resolves the arithmetic mode for a list of steps.
pub fn resolve_mode(steps: &[MixingStep], requested: Option<Mode>) -> Result<Mode> {
    let natural = if steps.iter().all(|s| s.p.is_exact()) { Mode::Exact } else { Mode::Numeric };
    match requested {
        Some(Mode::Exact) if natural == Mode::Numeric => {
            Err(MixError::ModeMismatch("decimal probabilities cannot be verified in exact mode".into()))
        }
        Some(m) => Ok(m),
        None => Ok(natural),
    }
}

/// Law of `g_1^eps_1 ... g_k^eps_k` on the indexed carrier, folding left
/// to right from the point mass at the identity.
pub fn group_law(carrier: &IndexedGroup, steps: &[MixingStep], mode: Mode) -> Result<Distribution> {
    let mut mu = Distribution::point(carrier.len(), carrier.identity_idx() as usize, mode);
    for s in steps {
        mu = convolve_step(carrier, &mu, s)?;
    }
    Ok(mu)
}

/// `mu'(x) = (1-p) mu(x) + p mu(x g^-1)`.
pub fn convolve_step(carrier: &IndexedGroup, mu: &Distribution, step: &MixingStep) -> Result<Distribution> {
    let gi = carrier
        .index_of(&step.g)
        .ok_or_else(|| MixError::InvalidElement(format!("step element {:?} is outside the carrier", step.g)))?;
    let ginv = carrier.inv_idx(gi);
    mu.step(&step.p, |x| carrier.mul_idx(x as u32, ginv) as usize)
}

/// Law of `g_1^eps_1 ... g_k^eps_k x_0`: the rightmost factor acts first.
pub fn action_law(space: &ActionSpace, steps: &[MixingStep], base: u32, mode: Mode) -> Result<Distribution> {
    if base as usize >= space.size() {
        return Err(MixError::InvalidAction(format!("base point {base} outside the action")));
    }
    let mut nu = Distribution::point(space.size(), base as usize, mode);
    for s in steps.iter().rev() {
        space.group().validate(&s.g)?;
        let back = space.permutation(&space.group().inverse(&s.g));
        nu = nu.step(&s.p, |y| back[y] as usize)?;
    }
    Ok(nu)
}

/// The law named by the sequence's claim, with its arithmetic mode.
pub fn sequence_law(seq: &MixingSequence, opts: &VerifyOptions) -> Result<(Distribution, Mode)> {
    seq.validate()?;
    let mode = resolve_mode(&seq.steps, opts.mode)?;
    let law = match &seq.claim {
        Claim::Group => {
            let carrier = IndexedGroup::new(seq.group.clone(), opts.enum_bound)?;
            group_law(&carrier, &seq.steps, mode)?
        }
        Claim::Action { kind, base, subgroup } => {
            let space = ActionSpace::new(&seq.group, *kind, subgroup.as_deref(), opts.enum_bound)?;
            let x0 = space.parse_point(base)?;
            action_law(&space, &seq.steps, x0, mode)?
        }
    };
    Ok((law, mode))
}

pub fn report_for(law: &Distribution, mode: Mode, length: usize, order: u128, tol: &Real) -> Report {
    let u = law.uniformity(tol);
    Report {
        uniform: u.uniform,
        max_dev: u.max_dev.to_string(),
        support: law.support(),
        length,
        entropy_lb: entropy_bound(order),
        mode,
    }
}

/// Checks a sequence against its claim.
pub fn verify(seq: &MixingSequence, opts: &VerifyOptions) -> Result<Report> {
    let (law, mode) = sequence_law(seq, opts)?;
    let carrier = law.len() as u128;
    Ok(report_for(&law, mode, seq.len(), carrier, &opts.tol))
}

/// Checks steps (elements of the carrier) for uniformity on the carrier.
pub fn verify_on(carrier: &IndexedGroup, steps: &[MixingStep], opts: &VerifyOptions) -> Result<Report> {
    let mode = resolve_mode(steps, opts.mode)?;
    let law = group_law(carrier, steps, mode)?;
    Ok(report_for(&law, mode, steps.len(), carrier.len() as u128, &opts.tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::action::ActionKind;
    use crate::engine::probability::Probability;
    use crate::group::{perm, Element, FiniteGroup};
    use serde_json::json;

    fn t(n: usize, a: usize, b: usize) -> Element {
        Element::Perm(perm::transposition(n, a, b))
    }

    #[test]
    fn entropy_bounds() {
        assert_eq!(entropy_bound_ok(3, 8), (true, 3));
        assert_eq!(entropy_bound_ok(2, 6), (false, 3));
        assert_eq!(entropy_bound_ok(0, 1), (true, 0));
        assert_eq!(entropy_bound(1 << 40), 40);
        assert_eq!(entropy_bound((1 << 40) + 1), 41);
    }

    #[test]
    fn cyclic_power_of_two() {
        let seq = MixingSequence::new(
            FiniteGroup::cyclic(8),
            (0..3).map(|j| MixingStep::half(Element::Cyclic(1 << j))).collect(),
        );
        let r = verify(&seq, &VerifyOptions::default()).unwrap();
        assert!(r.uniform);
        assert_eq!(r.support, 8);
        assert_eq!(r.max_dev, "0");

        let mut short = seq.clone();
        short.steps.pop();
        let r = verify(&short, &VerifyOptions::default()).unwrap();
        assert!(!r.uniform);
        assert_eq!(r.max_dev, "1/8");
    }

    #[test]
    fn s3_adjacent() {
        let seq = MixingSequence::new(
            FiniteGroup::symmetric(3),
            vec![
                MixingStep::half(t(3, 0, 1)),
                MixingStep::new(t(3, 1, 2), Probability::ratio(2, 3).unwrap()),
                MixingStep::half(t(3, 0, 1)),
            ],
        );
        assert!(verify(&seq, &VerifyOptions::default()).unwrap().uniform);
    }

    #[test]
    fn bit_by_bit_on_four_points() {
        let g = FiniteGroup::symmetric(4);
        let a = Element::Perm(perm::from_cycles(4, &[&[0, 1], &[2, 3]]));
        let b = Element::Perm(perm::from_cycles(4, &[&[0, 2], &[1, 3]]));
        let seq = MixingSequence::new(g, vec![MixingStep::half(a), MixingStep::half(b)])
            .with_claim(Claim::action(ActionKind::Natural, json!(1)));
        let r = verify(&seq, &VerifyOptions::default()).unwrap();
        assert!(r.uniform);
        assert_eq!(r.support, 4);
    }

    #[test]
    fn empty_sequences() {
        let seq = MixingSequence::new(FiniteGroup::cyclic(4), vec![]);
        let (law, _) = sequence_law(&seq, &VerifyOptions::default()).unwrap();
        assert_eq!(law.support(), 1);
        assert!(!law.is_zero_at(0));
        let seq = seq.with_claim(Claim::action(ActionKind::Natural, json!(2)));
        let (law, _) = sequence_law(&seq, &VerifyOptions::default()).unwrap();
        assert!(!law.is_zero_at(2));
    }

    #[test]
    fn exact_mode_rejects_decimals() {
        let seq = MixingSequence::new(
            FiniteGroup::cyclic(2),
            vec![MixingStep::new(Element::Cyclic(1), Probability::parse("0.5").unwrap())],
        );
        let opts = VerifyOptions { mode: Some(Mode::Exact), ..Default::default() };
        assert!(matches!(verify(&seq, &opts), Err(MixError::ModeMismatch(_))));
        assert!(verify(&seq, &VerifyOptions::default()).unwrap().uniform);
    }

    #[test]
    fn base_point_outside_action() {
        let seq = MixingSequence::new(FiniteGroup::symmetric(3), vec![])
            .with_claim(Claim::action(ActionKind::Natural, json!(4)));
        assert!(verify(&seq, &VerifyOptions::default()).is_err());
    }
}
