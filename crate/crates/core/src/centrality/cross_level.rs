//! Comparing one measure's rankings across simplex levels.
//!
//! Two views: a *lift table* listing, for every top-N k-simplex (k ≥ 1), the
//! level-0 ranks of its vertices; and a pairwise *concordance* between levels,
//! where each vertex is represented at level k by the best rank of any
//! k-simplex containing it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Measure, Ranking};
use crate::complex::SimplicialComplex;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledRank {
    pub vertices: Vec<String>,
    pub score: f64,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelRanks {
    pub k: usize,
    pub items: Vec<LabeledRank>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRank {
    pub vertex: String,
    /// `None` when level 0 was not ranked.
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lift {
    pub k: usize,
    pub simplex: Vec<String>,
    pub rank: usize,
    pub score: f64,
    pub vertex_ranks: Vec<VertexRank>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelAgreement {
    pub a: usize,
    pub b: usize,
    pub shared_vertices: usize,
    /// Fraction of vertex pairs ordered the same way at both levels; `None`
    /// with fewer than two shared vertices.
    pub concordance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossLevelReport {
    pub measure: Measure,
    pub top_n: usize,
    pub lifts: Vec<Lift>,
    pub agreement: Vec<LevelAgreement>,
}

/// Cross-level report for rankings computed on `complex`.
pub fn cross_level_report(complex: &SimplicialComplex, rankings: &[Ranking], top_n: usize) -> Option<CrossLevelReport> {
    let measure = rankings.first()?.measure;
    let levels: Vec<LevelRanks> = rankings
        .iter()
        .map(|r| LevelRanks {
            k: r.k,
            items: r
                .entries
                .iter()
                .map(|e| LabeledRank {
                    vertices: complex.label_list(&e.simplex),
                    score: e.score,
                    rank: e.rank,
                })
                .collect(),
        })
        .collect();
    Some(cross_level_from_levels(measure, &levels, top_n))
}

pub fn cross_level_from_levels(measure: Measure, levels: &[LevelRanks], top_n: usize) -> CrossLevelReport {
    let vertex_level: Option<BTreeMap<&str, usize>> = levels
        .iter()
        .find(|l| l.k == 0)
        .map(|l| l.items.iter().map(|it| (it.vertices[0].as_str(), it.rank)).collect());

    let mut lifts = Vec::new();
    for level in levels.iter().filter(|l| l.k >= 1) {
        for item in level.items.iter().filter(|it| it.rank <= top_n) {
            lifts.push(Lift {
                k: level.k,
                simplex: item.vertices.clone(),
                rank: item.rank,
                score: item.score,
                vertex_ranks: item
                    .vertices
                    .iter()
                    .map(|v| VertexRank {
                        vertex: v.clone(),
                        rank: vertex_level.as_ref().and_then(|m| m.get(v.as_str()).copied()),
                    })
                    .collect(),
            });
        }
    }

    let best: Vec<BTreeMap<&str, usize>> = levels.iter().map(best_vertex_ranks).collect();
    let mut agreement = Vec::new();
    for a in 0..levels.len() {
        for b in (a + 1)..levels.len() {
            let shared: Vec<(usize, usize)> = best[a]
                .iter()
                .filter_map(|(v, &ra)| best[b].get(v).map(|&rb| (ra, rb)))
                .collect();
            agreement.push(LevelAgreement {
                a: levels[a].k,
                b: levels[b].k,
                shared_vertices: shared.len(),
                concordance: concordance(&shared),
            });
        }
    }

    CrossLevelReport {
        measure,
        top_n,
        lifts,
        agreement,
    }
}

fn best_vertex_ranks(level: &LevelRanks) -> BTreeMap<&str, usize> {
    let mut best = BTreeMap::new();
    for item in &level.items {
        for v in &item.vertices {
            best.entry(v.as_str())
                .and_modify(|r: &mut usize| *r = (*r).min(item.rank))
                .or_insert(item.rank);
        }
    }
    best
}

fn concordance(pairs: &[(usize, usize)]) -> Option<f64> {
    if pairs.len() < 2 {
        return None;
    }
    let (mut agree, mut total) = (0usize, 0usize);
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            total += 1;
            if pairs[i].0.cmp(&pairs[j].0) == pairs[i].1.cmp(&pairs[j].1) {
                agree += 1;
            }
        }
    }
    Some(agree as f64 / total as f64)
}
