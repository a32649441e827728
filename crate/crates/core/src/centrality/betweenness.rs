//! Shortest-path betweenness over the combined adjacency.
//!
//! Brandes' dependency accumulation, carried out in exact rational
//! arithmetic: path counts are big integers and pair dependencies are
//! reduced fractions. Scores are therefore independent of summation order,
//! which keeps them bit-identical under any relabeling of the simplices.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{isolation_flags, CentralityScores, Measure};
use crate::adjacency::LevelAdjacency;

/// Exact betweenness: sum over unordered pairs `{s, t}` (both distinct from
/// `v` and mutually reachable) of `σ_st(v) / σ_st`, unnormalized.
pub fn betweenness_exact(adj: &LevelAdjacency) -> Vec<BigRational> {
    let n = adj.size();
    let per_source: Vec<Vec<BigRational>> = (0..n).into_par_iter().map(|s| dependencies(adj, s)).collect();

    let mut total = vec![BigRational::zero(); n];
    for deltas in per_source {
        for (acc, d) in total.iter_mut().zip(deltas) {
            *acc += d;
        }
    }
    // every unordered pair was counted once from each endpoint
    let two = BigRational::from_integer(BigInt::from(2));
    total.into_iter().map(|b| b / &two).collect()
}

/// Single-source dependencies `δ_s(v)`; zero at the source itself.
fn dependencies(adj: &LevelAdjacency, source: usize) -> Vec<BigRational> {
    let n = adj.size();
    let mut order = Vec::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![BigInt::zero(); n];
    let mut dist: Vec<Option<usize>> = vec![None; n];
    sigma[source] = BigInt::one();
    dist[source] = Some(0);

    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let dv = dist[v].expect("queued");
        for &w in adj.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(dv + 1);
                queue.push_back(w);
            }
            if dist[w] == Some(dv + 1) {
                let add = sigma[v].clone();
                sigma[w] += add;
                preds[w].push(v);
            }
        }
    }

    let mut delta = vec![BigRational::zero(); n];
    for &w in order.iter().rev() {
        if preds[w].is_empty() {
            continue;
        }
        let coeff = (BigRational::one() + &delta[w]) / BigRational::from_integer(sigma[w].clone());
        for &v in &preds[w] {
            let contribution = &coeff * BigRational::from_integer(sigma[v].clone());
            delta[v] += contribution;
        }
    }
    delta[source] = BigRational::zero();
    delta
}

pub fn betweenness_centrality(adj: &LevelAdjacency) -> CentralityScores {
    let values = betweenness_exact(adj)
        .iter()
        .map(|b| b.to_f64().expect("finite rational"))
        .collect();
    CentralityScores::new(adj.k, Measure::Betweenness, values, isolation_flags(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency::level_adjacency;
    use crate::complex::clique_complex;
    use crate::fixtures::{k_n, path_graph, river1_triangles};

    #[test]
    fn path_middle_edge_carries_the_pair() {
        let x = clique_complex(&path_graph(4), None).unwrap();
        let b = betweenness_centrality(&level_adjacency(&x, 1).unwrap());
        assert_eq!(b.values, vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn complete_graph_has_no_brokers() {
        let x = clique_complex(&k_n(3), None).unwrap();
        assert_eq!(
            betweenness_centrality(&level_adjacency(&x, 0).unwrap()).values,
            vec![0.0; 3]
        );
    }

    #[test]
    fn four_cycle_splits_paths() {
        let g = crate::graph::Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let x = clique_complex(&g, None).unwrap();
        let b = betweenness_centrality(&level_adjacency(&x, 0).unwrap());
        assert_eq!(b.values, vec![0.5; 4]);
    }

    #[test]
    fn river_triangles_centre_is_five() {
        let x = clique_complex(&river1_triangles(), None).unwrap();
        let adj = level_adjacency(&x, 2).unwrap();
        let b = betweenness_centrality(&adj);
        let t4 = adj.position(&x.simplex_by_labels(&["1", "11", "13"]).unwrap()).unwrap();
        assert_eq!(b.values[t4], 5.0);
    }
}
