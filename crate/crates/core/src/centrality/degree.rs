use super::{isolation_flags, CentralityScores, Measure};
use crate::adjacency::{simplicial_degree, LevelAdjacency};

/// Number of adjacent simplices at the same level (row sums of the combined matrix).
pub fn degree_centrality(adj: &LevelAdjacency) -> CentralityScores {
    let values = simplicial_degree(adj).into_iter().map(|d| d as f64).collect();
    CentralityScores::new(adj.k, Measure::Degree, values, isolation_flags(adj))
}
