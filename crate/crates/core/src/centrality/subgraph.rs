//! Subgraph centrality: the diagonal of `exp(A)` for the combined matrix `A`,
//! i.e. closed walks of every length weighted by `1/m!`.

use nalgebra::{DMatrix, SymmetricEigen};

use super::{isolation_flags, CentralityScores, Measure};
use crate::adjacency::LevelAdjacency;
use crate::error::{Result, SxError};

/// Spectral route: per connected component, `SC_i = Σ_j q_ij² e^{λ_j}`
/// from a symmetric eigendecomposition. Isolated simplices score 1.
pub fn subgraph_centrality(adj: &LevelAdjacency, tol: f64) -> Result<CentralityScores> {
    check_tol(tol)?;
    let mut values = vec![1.0; adj.size()];
    for members in adj.combined.components() {
        if members.len() < 2 {
            continue;
        }
        let m = members.len();
        let mut local = vec![usize::MAX; adj.size()];
        for (li, &gi) in members.iter().enumerate() {
            local[gi] = li;
        }
        let mut a = DMatrix::<f64>::zeros(m, m);
        for (li, &gi) in members.iter().enumerate() {
            for &gj in adj.neighbors(gi) {
                a[(li, local[gj])] = 1.0;
            }
        }
        let eig = SymmetricEigen::new(a);
        let weights: Vec<f64> = eig.eigenvalues.iter().map(|l| l.exp()).collect();
        for (li, &gi) in members.iter().enumerate() {
            values[gi] = (0..m)
                .map(|j| {
                    let q = eig.eigenvectors[(li, j)];
                    q * q * weights[j]
                })
                .sum();
        }
    }
    Ok(CentralityScores::new(
        adj.k,
        Measure::Subgraph,
        values,
        isolation_flags(adj),
    ))
}

/// Series route: `Σ_m diag(A^m)/m!`, accumulated on the whole matrix until
/// the tail bound drops below `tol` times the smallest diagonal so far.
///
/// With `a = ‖A‖₁` the tail after term `m` is at most
/// `a^{m+1}/(m+1)! · 1/(1 − a/(m+2))`; once `m + 2 ≥ 2a` that factor is ≤ 2.
pub fn subgraph_centrality_series(adj: &LevelAdjacency, tol: f64) -> Result<CentralityScores> {
    check_tol(tol)?;
    let n = adj.size();
    let norm1 = (0..n).map(|i| adj.combined.row_sum(i)).max().unwrap_or(0) as f64;

    let mut term = DMatrix::<f64>::identity(n, n);
    let mut diag: Vec<f64> = vec![1.0; n];
    let mut bound = 1.0;
    let mut m = 0usize;
    loop {
        let next_bound = bound * norm1 / (m + 1) as f64;
        let min_diag = diag.iter().copied().fold(f64::INFINITY, f64::min);
        if (m + 2) as f64 >= 2.0 * norm1 && 2.0 * next_bound < tol * min_diag {
            break;
        }
        // term ← term · A / (m+1)
        let mut next = DMatrix::<f64>::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                next[(r, c)] = adj.neighbors(c).iter().map(|&j| term[(r, j)]).sum::<f64>() / (m + 1) as f64;
            }
        }
        term = next;
        for (i, d) in diag.iter_mut().enumerate() {
            *d += term[(i, i)];
        }
        bound = next_bound;
        m += 1;
    }
    Ok(CentralityScores::new(
        adj.k,
        Measure::Subgraph,
        diag,
        isolation_flags(adj),
    ))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 {
        Ok(())
    } else {
        Err(SxError::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency::level_adjacency;
    use crate::complex::clique_complex;
    use crate::fixtures::{k_n, river1_triangles};

    #[test]
    fn single_edge_is_cosh_one() {
        let x = clique_complex(&k_n(2), None).unwrap();
        let adj = level_adjacency(&x, 0).unwrap();
        for sc in [
            subgraph_centrality(&adj, 1e-12).unwrap(),
            subgraph_centrality_series(&adj, 1e-14).unwrap(),
        ] {
            for v in sc.values {
                assert!((v - 1f64.cosh()).abs() < 1e-12, "{v}");
            }
        }
    }

    #[test]
    fn isolated_simplices_score_one() {
        let x = clique_complex(&k_n(3), None).unwrap();
        let adj = level_adjacency(&x, 1).unwrap();
        assert_eq!(subgraph_centrality(&adj, 1e-10).unwrap().values, vec![1.0; 3]);
        assert_eq!(subgraph_centrality_series(&adj, 1e-10).unwrap().values, vec![1.0; 3]);
    }

    #[test]
    fn river_triangles_centre() {
        let x = clique_complex(&river1_triangles(), None).unwrap();
        let adj = level_adjacency(&x, 2).unwrap();
        let sc = subgraph_centrality(&adj, 1e-12).unwrap();
        let t4 = adj.position(&x.simplex_by_labels(&["1", "11", "13"]).unwrap()).unwrap();
        // reference from a dense Padé matrix exponential
        assert!((sc.values[t4] - 2.966_877_88).abs() < 1e-8, "{}", sc.values[t4]);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let x = clique_complex(&k_n(2), None).unwrap();
        let adj = level_adjacency(&x, 0).unwrap();
        assert!(subgraph_centrality(&adj, 0.0).is_err());
        assert!(subgraph_centrality_series(&adj, -1.0).is_err());
    }
}
