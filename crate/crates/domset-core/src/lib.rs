//! Exact domination-theory toolkit for small graphs: graph representation
//! and graph6 codec, a catalog of named cubic graphs, deterministic random
//! generation, small-graph isomorphism, exact solvers for domination /
//! partial domination / packing, private-neighborhood normalization, and
//! the constructive partial-domination machinery for graphs of minimum
//! degree at least 3.
//!
//! The crate is `no_std` (with `alloc`): all solvers work on bit-set
//! adjacency rows with deterministic tie-breaking, so certificates are
//! reproducible across platforms. IO, parallelism, and the command-line
//! front end live in the companion `domset-tools` crate.

#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

mod bits;
mod catalog;
mod construct;
mod gen;
mod graph;
mod graph6;
mod iso;
mod private;
mod solve;

pub use bits::{VertexSet, MAX_ORDER};
pub use catalog::{
    generalized_petersen, generalized_petersen_relaxed, named_graph, GpError, NamedGraphId,
};
pub use construct::{
    build_partition, greedy_partial, lemma_extend, one_third_construct,
    one_third_construct_with, Construction, ConstructError, ConstructRegime, NotSupercubic,
    Part, PartialRun, Partition, PartitionError,
};
pub use gen::{random_cubic, RandomCubicError, SplitMix64};
pub use graph::{CoverageView, Graph, GraphClass, GraphError};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use iso::{canonical_code, is_isomorphic, OrderAboveIsoSupport, MAX_ISO_ORDER};
pub use private::{bc_normalize, private_neighborhoods, BcError, PrivateView};
pub use solve::{
    gamma_exact, gamma_exact_with, pd_exact, pd_exact_with, rho_exact, rho_exact_with,
    AlphaError, AlphaThreshold, Certificate, CertificateKind, Interrupt, Never, SolveAborted,
};
