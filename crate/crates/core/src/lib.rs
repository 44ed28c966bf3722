//! Closure operators on triadic contexts.
//!
//! A triadic context relates objects, attributes and conditions. This crate
//! enumerates its triconcepts, computes the concept-forming operator `h` and
//! its axis-permuted variants `σ_ijk`, and searches for the ways these fail to
//! be closure operators: non-monotone pairs, switching generators and
//! non-commuting orderings. The multi-relational side covers complete
//! connected subsets of k-partite graphs, the `g` operator and the hyperedges
//! that appear when a context is flattened to a tripartite graph.
//!
//! All searches are exhaustive and bounded by a [`SizeCap`].

#![no_std]

extern crate alloc;

pub mod bits;
pub mod closure;
pub mod concepts;
pub mod context;
mod error;
pub mod fixtures;
pub mod listing;
pub mod mrd;
pub mod setsys;
pub mod switching;

pub use bits::{AxisSet, BitSet, EntitySet};
pub use closure::{
    check_non_commutativity, find_monotonicity_witness, h_close, no_global_closure_condition,
    same_extent_antiordinal_pairs, sigma_close, AxisOrdering, MonotonicityWitness, Operator,
    TrisetDomain,
};
pub use concepts::{
    all_trisets, brute_force_triconcepts, diagonal_context, fixpoint_triconcepts, power_context,
    PowerVariant, SizeCap,
};
pub use context::{
    is_ferrers_of_concepts, triset_leq, Axis, DyadicContext, EntityRef, FlatSet, Parts,
    TriContext, Triconcept, Triset,
};
pub use error::{Error, Result};
pub use listing::{list_closed_sets, IdentityClosure, PartialClosure, SetSystem};
pub use mrd::{encode_tripartite, mccs_to_triset, phantom_edges, Mrd, PhantomEdge, RepairOutcome};
pub use setsys::{ConfluenceReading, EmptySetPolicy, ExplicitFamily};
pub use switching::{
    count_switching_generators, switching_generators, CountConvention, SwitchingGenerator,
    WeededSystem, WeedingRule,
};
