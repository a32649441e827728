//! Clique complexes of undirected graphs and centrality analysis on their
//! simplex levels.
//!
//! A graph becomes a simplicial complex whose k-simplices are its
//! (k+1)-cliques. Each level k gets a combined adjacency relation (lower
//! adjacent but not upper adjacent; plain graph adjacency at k = 0), from
//! which the crate derives connectivity, walk distances, and five centrality
//! measures with cross-level comparisons.
//!
//! ```
//! use sx_core::{clique_complex, level_adjacency, degree_centrality, Graph};
//!
//! let g = Graph::from_labeled_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
//! let x = clique_complex(&g, None).unwrap();
//! assert_eq!(x.level_counts(), vec![3, 3, 1]);
//! // the three edges of a filled triangle are all upper adjacent, so none is adjacent
//! let adj = level_adjacency(&x, 1).unwrap();
//! assert!(degree_centrality(&adj).values.iter().all(|&d| d == 0.0));
//! ```

pub mod adjacency;
pub mod centrality;
pub mod cliques;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod pipeline;
pub mod plot;
pub mod report;
pub mod simplex;
pub mod walks;

pub use adjacency::{
    components_at_level, connectivity, level_adjacency, lower_adjacency, simplicial_degree, upper_adjacency,
    LevelAdjacency, LevelConnectivity,
};
pub use centrality::{
    betweenness_centrality, closeness_centrality, degree_centrality, eigenvector_centrality, rank_simplices,
    subgraph_centrality, subgraph_centrality_series, CentralityScores, Flag, Measure, Ranking,
};
pub use cliques::maximal_cliques;
pub use complex::{clique_complex, SimplicialComplex};
pub use error::{Result, SxError};
pub use graph::{normalize_graph, Graph, RawMatrix, VertexId};
pub use io::{parse_matrix_bytes, parse_matrix_csv, ParsedMatrix};
pub use matrix::{is_irreducible, BooleanMatrix};
pub use pipeline::{run_analysis, AnalysisOptions, AnalysisRun};
pub use simplex::Simplex;
pub use walks::{all_pairs_distances, shortest_distances, witness_walk, DistanceTable, WalkSequence};
