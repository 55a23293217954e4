//! Exact solvers for two dual distance problems on directed graphs:
//! minimum-cost dominating broadcasts (place transmitters with integer
//! radii so that every vertex is reached) and maximum multipackings (vertex
//! sets with at most d members in any out-ball of radius d).
//!
//! The crate provides the digraph model with cached all-pairs distances,
//! structure recognition (DAG / layered / single-sourced / strongly
//! connected), brute-force oracles for both problems, the specialized exact
//! solvers they validate, generators for the hardness-reduction gadgets
//! relating the two problems to classical covering problems, and plain-text
//! formats for all of it.
//!
//! The enumeration-heavy paths (all-pairs BFS, the oracles) are
//! data-parallel via rayon behind the default `parallel` feature;
//! `Parallelism::Sequential` or building without the feature gives the
//! sequential fallback with identical outputs.

pub mod broadcast;
pub mod classify;
pub mod cover;
pub mod digraph;
pub mod dist;
mod exec;
pub mod generate;
pub mod io;
pub mod multipacking;
pub mod outcome;
pub mod reductions;

mod error;

pub use error::{Error, Result};
pub use exec::Parallelism;

pub use broadcast::{
    brute_force_bd, brute_force_bd_with, normalize_self_cover, solve_bd_auto,
    solve_bd_auto_with_limit, solve_bd_diameter, solve_bd_fpt_dag, solve_bd_layered,
    solve_bd_outdeg, solve_bd_vertex_cover, verify_broadcast, verify_broadcast_layered,
    BroadcastCheck, BroadcastFunction,
};
pub use classify::{classify, LayerPartition, StructureReport};
pub use cover::{min_vertex_cover, neighborhood_classes, NeighborhoodClasses};
pub use digraph::Digraph;
pub use dist::{DistanceOracle, INFINITE};
pub use generate::{generate, GraphKind};
pub use multipacking::{
    brute_force_mp, brute_force_mp_with, min_absorbing_set, min_hitting_set, mp_from_long_path,
    normalize_one_per_layer, normalize_sources_into_mp, solve_mp_auto, solve_mp_auto_with_limit,
    solve_mp_diameter, solve_mp_layered, solve_mp_outdeg, solve_mp_outdeg_with_limit,
    solve_mp_vertex_cover, verify_multipacking, verify_multipacking_layered, HittingSetInstance,
    Multipacking, MultipackingCheck,
};
pub use outcome::{Algorithm, SolveOutcome};
pub use reductions::{
    reduce_hs_to_bd, reduce_is_to_mp, reduce_is_to_mp_single_source, reduce_mds_to_bd_v1,
    reduce_mds_to_bd_v2, reduce_mis_to_mp, reduce_x3c_to_bd, ColoredGraph, ReductionOutput,
    SourceInstance, UndirectedGraph, X3CInstance,
};
