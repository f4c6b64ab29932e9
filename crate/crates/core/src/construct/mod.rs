//! Certified constructors and composers.
//!
//! Every constructor runs the verifier on its output before returning.
//! Groups small enough are folded directly; larger ones are certified by an
//! [`Certificate::Extension`]: a fold of the coset (or quotient) part and a
//! recursive certificate for the subgroup part.

mod compose;
mod cyclic;
mod dihedral;
mod psl2;
mod symmetric;

use serde::Serialize;

use crate::engine::verify::{report_for, resolve_mode, sequence_law, Report, VerifyOptions};
use crate::engine::{group_law, MixingSequence, MixingStep, Mode};
use crate::error::{MixError, Result};
use crate::group::{Element, FiniteGroup, IndexedGroup};

pub use compose::{compose_direct_product, compose_extension, lift_2transitive, semidirect_two_orbit_lift};
pub use cyclic::{construct_2group_chain, construct_cyclic_2group};
pub use dihedral::{construct_dihedral, construct_signed_perm, dihedral_steps};
pub use psl2::construct_psl2_char2;
pub use symmetric::{
    alt_action_steps, construct_alt_action, construct_alt_full, construct_sym_action, construct_sym_adjacent,
    construct_sym_fast, sym_action_steps, sym_fast_steps,
};

/// Groups up to this order are certified by a direct fold.
pub const DEFAULT_FOLD_LIMIT: u128 = 100_000;

#[derive(Clone, Debug)]
pub struct ConstructOptions {
    pub verify: VerifyOptions,
    pub fold_limit: u128,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { verify: VerifyOptions::default(), fold_limit: DEFAULT_FOLD_LIMIT }
    }
}

/// Evidence that a sequence mixes what it claims.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A direct fold of a law.
    Fold { carrier: String, report: Report },
    /// Coset part mixes `G/H`, subgroup part mixes `H`.
    Extension { coset: Box<Certificate>, subgroup: Box<Certificate> },
    /// One certificate per direct factor.
    Product { factors: Vec<Certificate> },
}

impl Certificate {
    pub fn holds(&self) -> bool {
        match self {
            Certificate::Fold { report, .. } => report.uniform,
            Certificate::Extension { coset, subgroup } => coset.holds() && subgroup.holds(),
            Certificate::Product { factors } => factors.iter().all(Certificate::holds),
        }
    }

    /// Largest reported deviation, as a float.
    pub fn max_dev(&self) -> f64 {
        match self {
            Certificate::Fold { report, .. } => parse_dev(&report.max_dev),
            Certificate::Extension { coset, subgroup } => coset.max_dev().max(subgroup.max_dev()),
            Certificate::Product { factors } => factors.iter().map(Certificate::max_dev).fold(0.0, f64::max),
        }
    }
}

fn parse_dev(s: &str) -> f64 {
    match s.split_once('/') {
        Some((a, b)) => a.parse::<f64>().unwrap_or(f64::NAN) / b.parse::<f64>().unwrap_or(f64::NAN),
        None => s.parse().unwrap_or(f64::NAN),
    }
}

/// A certified sequence with its length bound.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub family: String,
    #[serde(skip)]
    pub sequence: MixingSequence,
    pub length: usize,
    /// closed-form length bound
    pub bound: f64,
    pub bound_expr: String,
    pub bound_satisfied: bool,
    /// `ceil(log2 |carrier|)`
    pub entropy_lb: u32,
    pub mode: Mode,
    pub certificate: Certificate,
}

impl ConstructionReport {
    pub fn new(
        family: impl Into<String>,
        sequence: MixingSequence,
        bound: f64,
        bound_expr: impl Into<String>,
        certificate: Certificate,
        carrier: u128,
    ) -> Result<Self> {
        if !certificate.holds() {
            return Err(MixError::VerificationFailed(format!(
                "constructed sequence for {} is not uniform (max deviation {})",
                sequence.group.name(),
                certificate.max_dev()
            )));
        }
        let length = sequence.len();
        let entropy_lb = crate::engine::entropy_bound(carrier);
        if (length as u32) < entropy_lb {
            return Err(MixError::VerificationFailed(format!(
                "length {length} is below the entropy bound {entropy_lb}"
            )));
        }
        Ok(ConstructionReport {
            family: family.into(),
            mode: sequence.mode(),
            length,
            bound_satisfied: length as f64 <= bound,
            bound,
            bound_expr: bound_expr.into(),
            entropy_lb,
            certificate,
            sequence,
        })
    }

    pub fn into_sequence(self) -> MixingSequence {
        self.sequence
    }
}

/// Fold of a sequence against its own claim.
pub fn fold_certificate(seq: &MixingSequence, carrier: &str, opts: &VerifyOptions) -> Result<Certificate> {
    let (law, mode) = sequence_law(seq, opts)?;
    let report = report_for(&law, mode, seq.len(), law.len() as u128, &opts.tol);
    Ok(Certificate::Fold { carrier: carrier.to_string(), report })
}

/// Fold of steps on an explicit carrier (a subgroup or a quotient).
pub fn fold_on(carrier: &IndexedGroup, steps: &[MixingStep], name: &str, opts: &VerifyOptions) -> Result<Certificate> {
    let mode = resolve_mode(steps, opts.mode)?;
    let law = group_law(carrier, steps, mode)?;
    let report = report_for(&law, mode, steps.len(), carrier.len() as u128, &opts.tol);
    Ok(Certificate::Fold { carrier: name.to_string(), report })
}

/// Fails unless the certificate holds.
pub(crate) fn require(cert: Certificate, what: &str) -> Result<Certificate> {
    if cert.holds() {
        Ok(cert)
    } else {
        Err(MixError::VerificationFailed(format!("{what} does not mix (max deviation {})", cert.max_dev())))
    }
}

/// `pi` on `1..m` moved to `1+offset..m+offset` inside `S_n`.
pub(crate) fn shift_element(g: &Element, offset: usize, n: usize) -> Element {
    match g {
        Element::Perm(f) => Element::Perm(crate::group::perm::shift(f, offset, n)),
        _ => panic!("shift applies to permutations"),
    }
}

pub(crate) fn shift_steps(steps: &[MixingStep], offset: usize, n: usize) -> Vec<MixingStep> {
    steps.iter().map(|s| MixingStep::new(shift_element(&s.g, offset, n), s.p.clone())).collect()
}

/// `floor(log2 n!)`.
pub fn floor_log2_factorial(n: usize) -> u64 {
    let f = (1..=n as u64).fold(num_bigint::BigUint::from(1u32), |a, k| a * k);
    f.bits().saturating_sub(1)
}

/// Hamming weight.
pub fn wt(n: usize) -> u32 {
    n.count_ones()
}

pub fn floor_log2(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        usize::BITS - 1 - n.leading_zeros()
    }
}

/// `(3/2) floor(log2 n!) + n/2`.
pub fn fast_bound(n: usize) -> f64 {
    1.5 * floor_log2_factorial(n) as f64 + n as f64 / 2.0
}

pub(crate) fn group_order_fits(group: &FiniteGroup, opts: &ConstructOptions) -> bool {
    group.order() <= opts.fold_limit && group.order() <= opts.verify.enum_bound
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(floor_log2_factorial(6), 9);
        assert_eq!(floor_log2_factorial(8), 15);
        assert_eq!(floor_log2_factorial(1), 0);
        assert_eq!(fast_bound(6), 16.5);
        assert_eq!(wt(6), 2);
        assert_eq!(floor_log2(1024), 10);
        assert_eq!(floor_log2(1023), 9);
    }

    #[test]
    fn deviations_parse() {
        assert_eq!(parse_dev("1/8"), 0.125);
        assert_eq!(parse_dev("0"), 0.0);
        assert!(parse_dev("1.5e-30") < 1e-29);
    }
}
