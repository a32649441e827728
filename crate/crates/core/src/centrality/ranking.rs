use super::{CentralityScores, Flag, Measure};
use crate::simplex::Simplex;

/// Relative gap below which two scores share a rank.
///
/// Exact measures (degree, closeness, betweenness) produce identical floats
/// for tied simplices; the spectral ones can differ in the last few bits.
pub const RANK_TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct RankEntry {
    /// Position of the simplex in its level.
    pub index: usize,
    pub simplex: Simplex,
    pub score: f64,
    /// Dense rank, starting at 1.
    pub rank: usize,
    pub flags: Vec<Flag>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    pub k: usize,
    pub measure: Measure,
    pub entries: Vec<RankEntry>,
}

impl Ranking {
    pub fn top(&self, n: usize) -> impl Iterator<Item = &RankEntry> {
        self.entries.iter().filter(move |e| e.rank <= n)
    }

    /// Rank of the simplex at level position `index`.
    pub fn rank_of(&self, index: usize) -> Option<usize> {
        self.entries.iter().find(|e| e.index == index).map(|e| e.rank)
    }
}

fn tied(a: f64, b: f64) -> bool {
    (a - b).abs() <= RANK_TIE_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

/// Dense ranking by non-increasing score; tied simplices are listed in
/// lexicographic order.
pub fn rank_simplices(scores: &CentralityScores, simplices: &[Simplex]) -> Ranking {
    assert_eq!(
        scores.len(),
        simplices.len(),
        "scores and simplex basis differ in length"
    );
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores.values[b]
            .total_cmp(&scores.values[a])
            .then_with(|| simplices[a].cmp(&simplices[b]))
    });

    // group near-equal neighbours, anchored on the first score of each group
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(g) if tied(scores.values[g[0]], scores.values[i]) => g.push(i),
            _ => groups.push(vec![i]),
        }
    }

    let mut entries = Vec::with_capacity(scores.len());
    for (r, mut group) in groups.into_iter().enumerate() {
        group.sort_by(|&a, &b| simplices[a].cmp(&simplices[b]));
        for i in group {
            entries.push(RankEntry {
                index: i,
                simplex: simplices[i].clone(),
                score: scores.values[i],
                rank: r + 1,
                flags: scores.flags[i].clone(),
            });
        }
    }
    Ranking {
        k: scores.k,
        measure: scores.measure,
        entries,
    }
}
