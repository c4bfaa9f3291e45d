//! Finite groups as explicit multiplication tables, at desk scale.
//!
//! The crate computes with groups given by their full Cayley table:
//! subgroup lattices, Sylow subgroups, automorphism groups found by
//! backtracking on generator images, operator actions in the sense of
//! groups-with-operators, the descending and ascending operator-commutator
//! series, and the equivalent characterizations of autonilpotency that those
//! series support. Everything is exhaustive and deterministic; explicit size
//! caps turn would-be hangs into clean errors.
//!
//! The crate is `no_std` (with `alloc`): it performs no IO and needs no
//! clock. File formats, the builtin catalog, and the CLI live in the
//! companion `autonil` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod aut;
mod error;
mod group;
mod iso;
mod search;
mod series;
mod subgroup;

pub mod criteria;

pub use aut::{
    automorphism_group, automorphism_group_with, inner_automorphisms, inner_normalizes_image,
    inner_subaction_of_aut, is_p_group, p_prime_elements, restrict_action,
    stabilizer_action_on_subgroup, subgroup_conjugation_action, AutLimits, Automorphism,
    OperatorAction, StabilizerAction,
};
pub use error::{Error, InvariantViolation};
pub use group::{
    is_power_of, max_order, prime_divisors, set_max_order, GroupId, GroupTable, DEFAULT_MAX_ORDER,
};
pub use iso::{are_isomorphic, isomorphism};
pub use search::{greedy_generators, visit_automorphisms};
pub use series::{
    absolute_hypercenter, absolute_hypercenter_with, build_stabilized_chain, hypercenter,
    is_r_nilpotent, iterated_commutator, k_series, l_series, operator_commutator,
    verify_chain_stabilized, ChainCheck, ChainFailure, SeriesKind, SeriesResult, StabilizedChain,
};
pub use subgroup::{
    center, centralizer, enumerate_subgroups, fitting_subgroup, frattini_subgroup,
    generated_subgroup, is_nilpotent, is_normal, maximal_subgroups, normalizer, p_subgroups,
    quotient, subgroup_group, sylow_subgroup, Quotient, Subgroup,
};
