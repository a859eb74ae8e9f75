//! Balanced flows in equality networks via a single parametric min-cut
//! sweep.
//!
//! An equality network connects a source to buyers (arc capacity = budget),
//! buyers to goods (unbounded), and goods to the sink (arc capacity =
//! price). Among its maximum flows, the *balanced flow* is the one
//! minimizing the two-norm of the buyer surplus vector; that surplus vector
//! is unique. This crate computes it by sweeping a single parameter over
//! the source capacities `max(0, e_i - lambda)` and reading each buyer's
//! surplus off the value of `lambda` at which the buyer changes sides in
//! the canonical minimum cut, then solving one more max-flow in a reduced
//! network.
//!
//! Everything runs on exact rational arithmetic; there is no floating
//! point on any correctness path.
//!
//! The `examples/` directory has one runnable program per capability:
//!
//! ```text
//! cargo run --example balanced_flow       # end-to-end balanced flow
//! cargo run --example breakpoint_sweep    # parametric cuts and move values
//! cargo run --example min_cut_extraction  # max flow + canonical min cut
//! cargo run --example verify_flow         # balancedness certificates
//! cargo run --example generate_instances  # seeded generators + eqnet files
//! cargo run --example call_count_bench    # sweep vs bisection call counts
//! ```
//!
//! The same functionality is scriptable through the `eqflow` binary; see
//! the README.

pub mod balanced;
pub mod bench;
pub mod gen;
pub mod maxflow;
pub mod net;
pub mod parametric;
pub mod rational;
pub mod report;

mod flow;

pub use balanced::{
    balanced_flow, blocks_from_surpluses, reduced_network, squared_norm_oracle, verify_balanced,
    BalancedFlowResult, BalancednessCertificate, Blocks,
};
pub use flow::{Arc, Capacity, Cut, Flow, FlowNetwork, Vertex};
pub use gen::{gen_blocks, gen_random, BlockSpecEntry};
pub use maxflow::{check_flow, enumerate_min_cuts, max_flow, min_source_side_cut, FlowResult};
pub use net::{
    parse_eqnet, parse_flow_file, serialize_eqnet, squared_surplus_norm, surpluses,
    EqualityNetwork,
};
pub use parametric::{
    breakpoints_oracle, cut_capacity_function, intersect, make_parametric,
    vertex_move_breakpoints, BreakpointProfile, ParametricNetwork,
};
pub use rational::{format_rational, parse_rational, Rational};
