use super::{CentralityScores, Flag, Measure};
use crate::adjacency::LevelAdjacency;
use crate::walks::DistanceTable;

/// Reciprocal of the summed hop distance to every reachable peer.
///
/// A simplex with no reachable peer scores 0 and is flagged `ISOLATED`; when
/// some peers are unreachable the sum runs over the reachable ones and the
/// score is flagged `UNREACHABLE-RESTRICTED`.
pub fn closeness_centrality(adj: &LevelAdjacency, dist: &DistanceTable) -> CentralityScores {
    assert_eq!(adj.k, dist.k, "distance table belongs to another level");
    assert_eq!(adj.size(), dist.size(), "distance table size mismatch");
    let n = adj.size();
    let mut values = Vec::with_capacity(n);
    let mut flags = Vec::with_capacity(n);
    for i in 0..n {
        let mut farness = 0usize;
        let mut reached = 0usize;
        for j in (0..n).filter(|&j| j != i) {
            if let Some(d) = dist.get(i, j) {
                farness += d;
                reached += 1;
            }
        }
        if reached == 0 {
            values.push(0.0);
            flags.push(vec![Flag::Isolated]);
        } else {
            values.push(1.0 / farness as f64);
            flags.push(if reached < n - 1 {
                vec![Flag::UnreachableRestricted]
            } else {
                Vec::new()
            });
        }
    }
    CentralityScores::new(adj.k, Measure::Closeness, values, flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency::level_adjacency;
    use crate::complex::clique_complex;
    use crate::fixtures::{corollary_graph, path_graph};
    use crate::walks::all_pairs_distances;

    #[test]
    fn path_of_three() {
        let x = clique_complex(&path_graph(3), None).unwrap();
        let adj = level_adjacency(&x, 0).unwrap();
        let c = closeness_centrality(&adj, &all_pairs_distances(&adj));
        assert_eq!(c.values[1], 0.5);
        assert_eq!(c.values[0], 1.0 / 3.0);
        assert!(c.flags.iter().all(Vec::is_empty));
    }

    #[test]
    fn disconnected_level_flags() {
        let x = clique_complex(&corollary_graph(), None).unwrap();
        let adj = level_adjacency(&x, 1).unwrap();
        let c = closeness_centrality(&adj, &all_pairs_distances(&adj));
        let ac = adj.position(&x.simplex_by_labels(&["a", "c"]).unwrap()).unwrap();
        let ab = adj.position(&x.simplex_by_labels(&["a", "b"]).unwrap()).unwrap();
        assert_eq!(c.values[ac], 0.0);
        assert_eq!(c.flags[ac], vec![Flag::Isolated]);
        assert_eq!(c.flags[ab], vec![Flag::UnreachableRestricted]);
        // ab reaches ad(1), de(2), df(2), cd(3), bc(4)
        assert_eq!(c.values[ab], 1.0 / 12.0);
    }
}
