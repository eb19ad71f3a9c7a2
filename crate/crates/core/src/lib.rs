//! Construction and verification of fault-tolerant virtual backbones in
//! wireless networks: m-connected k-dominating sets built in five phases
//! over unit disk graphs.
//!
//! ```
//! use plutus_core::{run_plutus, verify, Graph, PlutusConfig};
//!
//! let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
//! let result = run_plutus(&g, &PlutusConfig::new(1, 2)).unwrap();
//! assert_eq!(result.dominating_set.len(), 4);
//! assert!(verify::is_m_connected_k_dominating(&g, &result.dominating_set, 1, 2).overall);
//! ```

pub mod bench;
pub mod blocks;
pub mod connectivity;
pub mod dot;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod udg;
pub mod verify;

pub use blocks::{block_cut_tree, BlockCutTree};
pub use connectivity::is_m_connected;
pub use error::{FormatError, GraphError, OracleError, PlutusError};
pub use graph::{Graph, VertexSet};
pub use oracle::{brute_force_min_mcds, OracleResult};
pub use pipeline::{
    run_plutus, run_plutus_timed, Phase, PlutusConfig, PlutusResult, Role, SynergyMode,
};
pub use udg::{random_geometric, UdgInstance};
pub use verify::VerificationReport;
