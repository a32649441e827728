//! Lower, upper and combined adjacency between simplices of one level.
//!
//! Two distinct k-simplices are
//! - *lower adjacent* when they share a (k−1)-face, i.e. `|σ ∩ τ| = k`;
//! - *upper adjacent* when both are faces of one stored (k+1)-simplex;
//! - *adjacent at level k* when lower adjacent and not upper adjacent
//!   (k ≥ 1), or upper adjacent for k = 0, which is plain graph adjacency.

use crate::complex::SimplicialComplex;
use crate::error::{Result, SxError};
use crate::matrix::{is_irreducible, BooleanMatrix};
use crate::simplex::Simplex;

/// The three adjacency relations of level `k`, indexed by the level's
/// simplex order.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelAdjacency {
    pub k: usize,
    pub simplices: Vec<Simplex>,
    /// `None` at level 0, where lower adjacency is undefined.
    pub lower: Option<BooleanMatrix>,
    pub upper: BooleanMatrix,
    pub combined: BooleanMatrix,
}

impl LevelAdjacency {
    pub fn size(&self) -> usize {
        self.simplices.len()
    }

    /// Neighbors of simplex `i` under the combined relation.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        self.combined.row(i)
    }

    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.simplices.binary_search(s).ok()
    }
}

fn nonempty_level(complex: &SimplicialComplex, k: usize) -> Result<&[Simplex]> {
    let level = complex.level(k);
    if level.is_empty() {
        return Err(SxError::NoSimplices(k));
    }
    Ok(level)
}

pub fn lower_adjacency(complex: &SimplicialComplex, k: usize) -> Result<BooleanMatrix> {
    if k == 0 {
        return Err(SxError::LowerAdjacencyAtVertexLevel);
    }
    let level = nonempty_level(complex, k)?;
    let n = level.len();
    let mut rows = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if level[i].intersection_len(&level[j]) == k {
                rows[i].push(j);
                rows[j].push(i);
            }
        }
    }
    for r in &mut rows {
        r.sort_unstable();
    }
    Ok(BooleanMatrix::from_rows(rows))
}

pub fn upper_adjacency(complex: &SimplicialComplex, k: usize) -> Result<BooleanMatrix> {
    let level = nonempty_level(complex, k)?;
    let mut pairs = Vec::new();
    for coface in complex.level(k + 1) {
        let idx: Vec<usize> = coface
            .facets()
            .iter()
            .filter_map(|f| level.binary_search(f).ok())
            .collect();
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                pairs.push((i, j));
            }
        }
    }
    BooleanMatrix::from_pairs(level.len(), pairs)
}

pub fn level_adjacency(complex: &SimplicialComplex, k: usize) -> Result<LevelAdjacency> {
    let level = nonempty_level(complex, k)?;
    let upper = upper_adjacency(complex, k)?;
    let (lower, combined) = if k == 0 {
        (None, upper.clone())
    } else {
        let lower = lower_adjacency(complex, k)?;
        let rows = (0..lower.size())
            .map(|i| lower.row(i).iter().copied().filter(|&j| !upper.get(i, j)).collect())
            .collect();
        (Some(lower), BooleanMatrix::from_rows(rows))
    };
    Ok(LevelAdjacency {
        k,
        simplices: level.to_vec(),
        lower,
        upper,
        combined,
    })
}

/// Row sums of the combined matrix.
pub fn simplicial_degree(adj: &LevelAdjacency) -> Vec<usize> {
    (0..adj.size()).map(|i| adj.combined.row_sum(i)).collect()
}

/// Connected components of level `k`, as sorted lists of simplex positions.
pub fn components_at_level(complex: &SimplicialComplex, k: usize) -> Result<Vec<Vec<usize>>> {
    Ok(level_adjacency(complex, k)?.combined.components())
}

/// Connectivity summary of one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelConnectivity {
    pub k: usize,
    pub components: Vec<Vec<usize>>,
    /// Positions whose combined row is zero.
    pub isolated: Vec<usize>,
    pub connected: bool,
    /// The level holds a single simplex; reported connected by convention.
    pub singleton: bool,
}

pub fn connectivity(adj: &LevelAdjacency) -> LevelConnectivity {
    let components = adj.combined.components();
    let isolated = (0..adj.size()).filter(|&i| adj.combined.row_sum(i) == 0).collect();
    LevelConnectivity {
        k: adj.k,
        connected: is_irreducible(&adj.combined),
        singleton: adj.size() == 1,
        components,
        isolated,
    }
}
