use serde_json::Value;

use super::action::ActionKind;
use super::probability::{Mode, Probability};
use crate::error::Result;
use crate::group::{Element, FiniteGroup};

/// One factor `g^eps` with `eps ~ Ber(p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MixingStep {
    pub g: Element,
    pub p: Probability,
}

impl MixingStep {
    pub fn new(g: Element, p: Probability) -> Self {
        MixingStep { g, p }
    }

    pub fn half(g: Element) -> Self {
        MixingStep { g, p: Probability::half() }
    }
}

/// What a sequence is claimed to mix.
#[derive(Clone, Debug, PartialEq)]
pub enum Claim {
    Group,
    Action {
        kind: ActionKind,
        /// point encoding of the action (see [`super::action::ActionSpace`])
        base: Value,
        /// the subgroup `H` for coset actions
        subgroup: Option<Vec<Element>>,
    },
}

impl Claim {
    pub fn action(kind: ActionKind, base: Value) -> Self {
        Claim::Action { kind, base, subgroup: None }
    }

    pub fn cosets(subgroup: Vec<Element>, base: Element, group: &FiniteGroup) -> Self {
        Claim::Action { kind: ActionKind::Cosets, base: group.element_to_json(&base), subgroup: Some(subgroup) }
    }
}

/// Steps listed left to right: index 0 is the leftmost factor of
/// `g_1^eps_1 ... g_k^eps_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct MixingSequence {
    pub group: FiniteGroup,
    pub claim: Claim,
    pub steps: Vec<MixingStep>,
}

impl MixingSequence {
    pub fn new(group: FiniteGroup, steps: Vec<MixingStep>) -> Self {
        MixingSequence { group, claim: Claim::Group, steps }
    }

    pub fn with_claim(mut self, claim: Claim) -> Self {
        self.claim = claim;
        self
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Exact when every probability is rational.
    pub fn mode(&self) -> Mode {
        if self.steps.iter().all(|s| s.p.is_exact()) {
            Mode::Exact
        } else {
            Mode::Numeric
        }
    }

    pub fn validate(&self) -> Result<()> {
        for s in &self.steps {
            self.group.validate(&s.g)?;
        }
        Ok(())
    }

    /// `(g_k^-1, p_k) ... (g_1^-1, p_1)`: the law of the inverse product.
    pub fn inverted(&self) -> Self {
        let steps = self.steps.iter().rev().map(|s| MixingStep::new(self.group.inverse(&s.g), s.p.clone())).collect();
        MixingSequence { group: self.group.clone(), claim: Claim::Group, steps }
    }

    /// Every element replaced by `h g h^-1`.
    pub fn conjugated(&self, h: &Element) -> Self {
        let steps = self.steps.iter().map(|s| MixingStep::new(self.group.conjugate(h, &s.g), s.p.clone())).collect();
        MixingSequence { group: self.group.clone(), claim: Claim::Group, steps }
    }

    /// Steps pushed through a homomorphism into `target`.
    pub fn mapped(&self, target: &FiniteGroup, f: impl Fn(&Element) -> Element) -> Self {
        let steps = self.steps.iter().map(|s| MixingStep::new(f(&s.g), s.p.clone())).collect();
        MixingSequence { group: target.clone(), claim: Claim::Group, steps }
    }

    /// `self` followed by `other`, as a group claim.
    pub fn concat(&self, other: &MixingSequence) -> Self {
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        MixingSequence { group: self.group.clone(), claim: Claim::Group, steps }
    }

    /// Product of the chosen factors for a given coin outcome.
    pub fn evaluate(&self, coins: &[bool]) -> Element {
        let mut acc = self.group.identity();
        for (s, &c) in self.steps.iter().zip(coins) {
            if c {
                acc = self.group.mul(&acc, &s.g);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_reverses_and_inverts() {
        let g = FiniteGroup::cyclic(8);
        let seq = MixingSequence::new(
            g,
            vec![
                MixingStep::half(Element::Cyclic(1)),
                MixingStep::new(Element::Cyclic(2), Probability::ratio(1, 3).unwrap()),
            ],
        );
        let inv = seq.inverted();
        assert_eq!(inv.steps[0].g, Element::Cyclic(6));
        assert_eq!(inv.steps[1].g, Element::Cyclic(7));
        assert_eq!(inv.steps[0].p, Probability::ratio(1, 3).unwrap());
        assert_eq!(seq.evaluate(&[true, true]), Element::Cyclic(3));
        assert_eq!(seq.mode(), Mode::Exact);
    }
}
