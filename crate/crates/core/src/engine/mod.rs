//! Exact verification of random subproducts.

pub mod action;
pub mod distribution;
pub mod probability;
pub mod sample;
pub mod sequence;
pub mod verify;

pub use action::{ActionKind, ActionSpace};
pub use distribution::{Distribution, Uniformity};
pub use probability::{Mode, Probability};
pub use sample::{sample, SampleReport};
pub use sequence::{Claim, MixingSequence, MixingStep};
pub use verify::{
    action_law, convolve_step, entropy_bound, entropy_bound_ok, group_law, sequence_law, verify, verify_on, Report,
    VerifyOptions,
};
