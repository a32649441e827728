//! Eigenvector centrality by power iteration, one connected component at a time.
//!
//! Each component with at least two simplices is iterated on `A + I`, which
//! has the same eigenvectors as `A` but a strictly dominant Perron root even
//! on bipartite components. The converged component vectors are scaled to
//! unit Euclidean norm, then the whole level is divided by its maximum so
//! the top score is exactly 1. Isolated simplices score 0.

use super::{isolation_flags, CentralityScores, Measure};
use crate::adjacency::LevelAdjacency;
use crate::error::{Result, SxError};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_EIGEN_MAX_ITER: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentEigenpair {
    pub members: Vec<usize>,
    pub eigenvalue: f64,
    /// `‖Ax − λx‖∞` on the max-normalized component vector.
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenvectorOutcome {
    pub scores: CentralityScores,
    pub components: Vec<ComponentEigenpair>,
}

pub fn eigenvector_centrality(adj: &LevelAdjacency, tol: f64, max_iter: usize) -> Result<CentralityScores> {
    eigenvector_centrality_detailed(adj, tol, max_iter).map(|o| o.scores)
}

pub fn eigenvector_centrality_detailed(adj: &LevelAdjacency, tol: f64, max_iter: usize) -> Result<EigenvectorOutcome> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(SxError::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = adj.size();
    let mut values = vec![0.0; n];
    let mut components = Vec::new();

    for members in adj.combined.components() {
        if members.len() < 2 {
            continue;
        }
        let (x, pair) = power_iteration(adj, members, tol, max_iter)?;
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (&i, v) in pair.members.iter().zip(&x) {
            values[i] = v / norm;
        }
        components.push(pair);
    }

    let max = values.iter().copied().fold(0.0, f64::max);
    if max > 0.0 {
        for v in &mut values {
            *v /= max;
        }
    }

    Ok(EigenvectorOutcome {
        scores: CentralityScores::new(adj.k, Measure::Eigenvector, values, isolation_flags(adj)),
        components,
    })
}

/// Returns the max-normalized principal eigenvector on `members`.
fn power_iteration(
    adj: &LevelAdjacency,
    members: Vec<usize>,
    tol: f64,
    max_iter: usize,
) -> Result<(Vec<f64>, ComponentEigenpair)> {
    let m = members.len();
    let mut local = vec![usize::MAX; adj.size()];
    for (li, &gi) in members.iter().enumerate() {
        local[gi] = li;
    }
    let rows: Vec<Vec<usize>> = members
        .iter()
        .map(|&gi| adj.neighbors(gi).iter().map(|&gj| local[gj]).collect())
        .collect();
    let multiply = |x: &[f64], out: &mut [f64]| {
        for (o, row) in out.iter_mut().zip(&rows) {
            *o = row.iter().map(|&j| x[j]).sum();
        }
    };

    let mut x = vec![1.0; m];
    let mut ax = vec![0.0; m];
    let mut residual = f64::INFINITY;
    let mut eigenvalue = 0.0;
    for iteration in 1..=max_iter {
        multiply(&x, &mut ax);
        eigenvalue = dot(&x, &ax) / dot(&x, &x);
        residual = ax
            .iter()
            .zip(&x)
            .map(|(a, v)| (a - eigenvalue * v).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok((
                x,
                ComponentEigenpair {
                    members,
                    eigenvalue,
                    residual,
                    iterations: iteration,
                },
            ));
        }
        // shifted step: x ← (A + I) x, rescaled to max 1
        let scale = ax.iter().zip(&x).map(|(a, v)| a + v).fold(0.0, f64::max);
        for (v, a) in x.iter_mut().zip(&ax) {
            *v = (a + *v) / scale;
        }
    }
    log::debug!("power iteration stalled at λ≈{eigenvalue} with residual {residual:e}");
    Err(SxError::NoConvergence {
        iterations: max_iter,
        residual,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency::level_adjacency;
    use crate::complex::clique_complex;
    use crate::fixtures::{k_n, path_graph, river1_triangles};

    #[test]
    fn regular_graph_is_flat() {
        let x = clique_complex(&k_n(3), None).unwrap();
        let e = eigenvector_centrality(&level_adjacency(&x, 0).unwrap(), 1e-10, 1000).unwrap();
        assert_eq!(e.values, vec![1.0; 3]);
    }

    #[test]
    fn zero_matrix_is_zero_and_flagged() {
        let x = clique_complex(&k_n(3), None).unwrap();
        let e = eigenvector_centrality(&level_adjacency(&x, 1).unwrap(), 1e-10, 1000).unwrap();
        assert_eq!(e.values, vec![0.0; 3]);
        assert!(e.flags.iter().all(|f| f == &[super::super::Flag::Isolated]));
    }

    #[test]
    fn bipartite_path_converges() {
        let x = clique_complex(&path_graph(4), None).unwrap();
        let out = eigenvector_centrality_detailed(&level_adjacency(&x, 0).unwrap(), 1e-12, 10_000).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((out.components[0].eigenvalue - golden).abs() < 1e-10);
        assert!((out.scores.values[0] - 1.0 / golden).abs() < 1e-10);
        assert_eq!(out.scores.values[1], 1.0);
    }

    #[test]
    fn river_triangles_level2() {
        let x = clique_complex(&river1_triangles(), None).unwrap();
        let adj = level_adjacency(&x, 2).unwrap();
        let e = eigenvector_centrality(&adj, 1e-12, 10_000).unwrap();
        let t4 = adj.position(&x.simplex_by_labels(&["1", "11", "13"]).unwrap()).unwrap();
        assert_eq!(e.values[t4], 1.0);
        // reference value from a dense symmetric eigensolver
        let leaf = adj.position(&x.simplex_by_labels(&["7", "11", "13"]).unwrap()).unwrap();
        assert!((e.values[leaf] - 0.541_196_100_146_197).abs() < 1e-9);
    }

    #[test]
    fn errors() {
        let x = clique_complex(&path_graph(6), None).unwrap();
        let adj = level_adjacency(&x, 0).unwrap();
        assert!(matches!(
            eigenvector_centrality(&adj, 0.0, 10),
            Err(SxError::InvalidParameter(_))
        ));
        assert!(matches!(
            eigenvector_centrality(&adj, 1e-14, 2),
            Err(SxError::NoConvergence { iterations: 2, .. })
        ));
    }
}
