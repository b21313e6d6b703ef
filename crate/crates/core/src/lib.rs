//! Higher-order `(k, tau)`-truss decomposition.
//!
//! An edge `(u, v)` has `tau`-support equal to the number of vertices within
//! `tau` hops of both `u` and `v`. The `(k, tau)`-truss is the largest
//! subgraph where every edge has `tau`-support at least `k - 2`, and the
//! truss number `phi_tau(e)` is the largest such `k` containing `e`.
//!
//! * [`hot_decompose`]: plain bottom-up peeling.
//! * [`hot_decompose_plus`]: peeling with lower-bound gating, vertex pruning
//!   and unchanged-distance skips. Same output, fewer support computations.
//! * [`hot_top_r`]: only the `r` highest levels, using upper bounds to shrink
//!   the graph first.
//! * [`oracle`]: slow, independent reference implementations for testing.

pub mod baseline;
pub mod bounds;
#[cfg(feature = "cli")]
pub mod cli;
pub mod generate;
pub mod graph;
pub mod optimized;
pub mod oracle;
pub mod result;
pub mod support;
pub mod topr;

pub use baseline::{hot_decompose, hot_decompose_budgeted, BudgetExceeded};
pub use bounds::{compute_ub, lower_bound, lower_bounds, upper_bounds, BoundsTable};
pub use generate::{generate, GenerateError, GeneratorKind};
pub use graph::{load_edge_list, parse_edge_list, DistanceMap, EdgeId, Graph, GraphError, LoadReport, VertexId};
pub use optimized::{distances_changed, hot_decompose_plus, hot_decompose_plus_with, PeelOptions, PeelState};
pub use result::{RunStats, TrussResult};
pub use support::{common_neighbors_tau, compute_all_supports, support_tau, SupportState, SupportStatus};
pub use topr::{hot_top_r, TopRResult};
