//! Simplicial centrality measures computed on one level's combined adjacency.

mod betweenness;
mod closeness;
mod cross_level;
mod degree;
mod eigenvector;
mod ranking;
mod subgraph;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::SxError;

pub use betweenness::{betweenness_centrality, betweenness_exact};
pub use closeness::closeness_centrality;
pub use cross_level::{
    cross_level_from_levels, cross_level_report, CrossLevelReport, LabeledRank, LevelAgreement, LevelRanks, Lift,
    VertexRank,
};
pub use degree::degree_centrality;
pub use eigenvector::{
    eigenvector_centrality, eigenvector_centrality_detailed, ComponentEigenpair, EigenvectorOutcome,
    DEFAULT_EIGEN_MAX_ITER, DEFAULT_TOL,
};
pub use ranking::{rank_simplices, RankEntry, Ranking, RANK_TIE_TOLERANCE};
pub use subgraph::{subgraph_centrality, subgraph_centrality_series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Degree,
    Closeness,
    Betweenness,
    Eigenvector,
    Subgraph,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Measure::Degree,
        Measure::Closeness,
        Measure::Betweenness,
        Measure::Eigenvector,
        Measure::Subgraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Closeness => "closeness",
            Measure::Betweenness => "betweenness",
            Measure::Eigenvector => "eigenvector",
            Measure::Subgraph => "subgraph",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = SxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| SxError::InvalidParameter(format!("unknown measure {s:?}")))
    }
}

/// Per-simplex markers attached to a score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flag {
    /// No other simplex of the level is adjacent.
    #[serde(rename = "ISOLATED")]
    Isolated,
    /// Closeness summed over a proper subset of the level (disconnected level).
    #[serde(rename = "UNREACHABLE-RESTRICTED")]
    UnreachableRestricted,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::Isolated => "ISOLATED",
            Flag::UnreachableRestricted => "UNREACHABLE-RESTRICTED",
        })
    }
}

/// One measure evaluated on every simplex of a level, in index order.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityScores {
    pub k: usize,
    pub measure: Measure,
    pub values: Vec<f64>,
    pub flags: Vec<Vec<Flag>>,
}

impl CentralityScores {
    pub(crate) fn new(k: usize, measure: Measure, values: Vec<f64>, flags: Vec<Vec<Flag>>) -> Self {
        debug_assert_eq!(values.len(), flags.len());
        Self {
            k,
            measure,
            values,
            flags,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.iter().copied().reduce(f64::max)
    }
}

/// `ISOLATED` on every zero row.
pub(crate) fn isolation_flags(adj: &crate::adjacency::LevelAdjacency) -> Vec<Vec<Flag>> {
    (0..adj.size())
        .map(|i| {
            if adj.combined.row_sum(i) == 0 {
                vec![Flag::Isolated]
            } else {
                Vec::new()
            }
        })
        .collect()
}
