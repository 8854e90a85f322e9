//! Verification and simulation toolkit for relativistic quantum information tasks.
//!
//! The crate decides feasibility of summoning tasks in Minkowski space-time,
//! audits black-box devices against no-signalling principles, certifies
//! optimal quantum-cloning fidelity bounds by convex optimization, and
//! simulates the flying-qudit relativistic bit-commitment protocol under
//! honest and adversarial strategies.
//!
//! # Modules
//!
//! - [`spacetime`] — Minkowski causal order: points, the future/past/spacelike
//!   relations, and causal diamonds.
//! - [`summoning`] — summoning-task model and the single-call and
//!   any-number-of-calls feasibility deciders, with a brute-force oracle.
//! - [`qstate`] — finite-dimensional quantum kernel: pure and mixed states,
//!   Haar sampling, fidelity, channels in Choi form, universal cloners.
//! - [`clonebound`] — convex-optimization certification of the cloning
//!   fidelity-sum bound `1 + 2/(d+1)`.
//! - [`nosig`] — black-box device tables and auditors for the relativistic and
//!   generalized no-signalling principles, plus PR-box and cloner-device
//!   generators.
//! - [`protocol`] — the flying-qudit bit-commitment simulation: honest flow,
//!   cheating strategies, Monte-Carlo estimation of unveiling probabilities,
//!   and the two-agent variant.
//! - [`cli`] — command-line front end over the above (task files, device
//!   audits, bound computations, protocol sweeps).
//!
//! # Quick start
//!
//! Every major capability has a runnable example; start with
//!
//! ```bash
//! cargo run --example no_go_two_diamonds
//! cargo run --example cloning_bound
//! cargo run --example bit_commitment_sweep
//! ```

pub mod cli;
pub mod clonebound;
mod linalg;
pub mod nosig;
pub mod protocol;
pub mod qstate;
pub mod spacetime;
pub mod summoning;

pub use spacetime::{CausalDiamond, CausalRelation, SpacetimePoint};
pub use summoning::{CallMode, FeasibilityVerdict, SummonTask};
