//! Simplicial walks and shortest-path distances within one level.
//!
//! Distances count hops along the combined adjacency, i.e. the number of
//! connecting (k−1)-faces in a walk, so `d(σ, σ) = 0`.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::adjacency::LevelAdjacency;
use crate::complex::SimplicialComplex;
use crate::error::{Result, SxError};
use crate::simplex::Simplex;

/// Hop distance, `None` when unreachable.
pub type Distance = Option<usize>;

/// BFS hop distances from `source` over the combined matrix.
pub fn shortest_distances(adj: &LevelAdjacency, source: usize) -> Vec<Distance> {
    let n = adj.size();
    assert!(source < n, "source {source} out of range for level of size {n}");
    let mut dist = vec![None; n];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued vertices have a distance") + 1;
        for &w in adj.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub k: usize,
    pub dist: Vec<Vec<Distance>>,
}

impl DistanceTable {
    pub fn get(&self, i: usize, j: usize) -> Distance {
        self.dist[i][j]
    }

    pub fn size(&self) -> usize {
        self.dist.len()
    }
}

pub fn all_pairs_distances(adj: &LevelAdjacency) -> DistanceTable {
    let dist = (0..adj.size())
        .into_par_iter()
        .map(|s| shortest_distances(adj, s))
        .collect();
    DistanceTable { k: adj.k, dist }
}

/// An alternating sequence `σ₁, α₁, σ₂, …, α_{n−1}, σ_n`.
///
/// For k ≥ 1 each connector `α_l` is the common (k−1)-face of `σ_l` and
/// `σ_{l+1}`. At level 0 the walk is an ordinary graph walk and the
/// connectors are the traversed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSequence {
    pub k: usize,
    pub simplices: Vec<Simplex>,
    pub connectors: Vec<Simplex>,
}

impl WalkSequence {
    /// Number of hops.
    pub fn len(&self) -> usize {
        self.connectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.connectors.is_empty()
    }

    /// Diagnostic one-line form, e.g. `{a,b} via {b} {b,c}`.
    pub fn render(&self, complex: &SimplicialComplex) -> String {
        let mut parts = vec![complex.display(&self.simplices[0])];
        for (alpha, sigma) in self.connectors.iter().zip(&self.simplices[1..]) {
            parts.push(format!("via {}", complex.display(alpha)));
            parts.push(complex.display(sigma));
        }
        parts.join(" ")
    }
}

/// A shortest walk from `from` to `to`, `None` when unreachable.
///
/// Among shortest walks the one whose simplex positions are
/// lexicographically least is returned.
pub fn witness_walk(
    complex: &SimplicialComplex,
    adj: &LevelAdjacency,
    from: &Simplex,
    to: &Simplex,
) -> Result<Option<WalkSequence>> {
    if from.dimension() != to.dimension() {
        return Err(SxError::LevelMismatch(from.dimension(), to.dimension()));
    }
    if from.dimension() != adj.k {
        return Err(SxError::LevelMismatch(from.dimension(), adj.k));
    }
    let locate = |s: &Simplex| {
        adj.position(s)
            .filter(|_| complex.contains(s))
            .ok_or_else(|| SxError::SimplexNotFound(s.to_string()))
    };
    let (start, goal) = (locate(from)?, locate(to)?);

    let to_goal = shortest_distances(adj, goal);
    let Some(mut remaining) = to_goal[start] else {
        return Ok(None);
    };

    let mut path = vec![start];
    let mut current = start;
    while remaining > 0 {
        current = *adj
            .neighbors(current)
            .iter()
            .find(|&&w| to_goal[w] == Some(remaining - 1))
            .expect("BFS layers guarantee a predecessor");
        path.push(current);
        remaining -= 1;
    }

    let simplices: Vec<Simplex> = path.iter().map(|&i| adj.simplices[i].clone()).collect();
    let connectors = simplices
        .windows(2)
        .map(|w| {
            if adj.k == 0 {
                w[0].union(&w[1])
            } else {
                w[0].intersection(&w[1]).expect("adjacent simplices share a face")
            }
        })
        .collect();
    Ok(Some(WalkSequence {
        k: adj.k,
        simplices,
        connectors,
    }))
}
