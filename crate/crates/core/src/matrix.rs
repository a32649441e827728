//! Sparse symmetric 0/1 matrices.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Result, SxError};

/// A symmetric boolean matrix with zero diagonal, stored as sorted rows of
/// column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanMatrix {
    rows: Vec<Vec<usize>>,
}

impl BooleanMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            rows: vec![Vec::new(); n],
        }
    }

    /// Builds the matrix from unordered index pairs; both `(i,j)` and `(j,i)`
    /// are set. Diagonal pairs and out-of-range indices are rejected.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rows = vec![Vec::new(); n];
        for (i, j) in pairs {
            if i >= n || j >= n {
                return Err(SxError::InvalidParameter(format!(
                    "entry ({i},{j}) outside {n}x{n} matrix"
                )));
            }
            if i == j {
                return Err(SxError::InvalidParameter(format!("diagonal entry ({i},{i})")));
            }
            rows[i].push(j);
            rows[j].push(i);
        }
        for r in &mut rows {
            r.sort_unstable();
            r.dedup();
        }
        Ok(Self { rows })
    }

    /// Rows must already be symmetric; used internally where that holds by construction.
    pub(crate) fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        let m = Self { rows };
        debug_assert!(m.is_symmetric());
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&j).is_ok()
    }

    /// Column indices of the ones in row `i`, ascending.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.rows[i].len()
    }

    /// Number of unordered off-diagonal pairs set.
    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().all(|&j| j != i && j < self.rows.len() && self.get(j, i)))
    }

    /// Unordered pairs `(i, j)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().copied().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let n = self.size();
        let mut out = vec![vec![0u8; n]; n];
        for (i, r) in self.rows.iter().enumerate() {
            for &j in r {
                out[i][j] = 1;
            }
        }
        out
    }

    /// Connected components of the matrix's graph, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.rows[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// CSV of 0/1 entries, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.to_dense() {
            let line: Vec<&str> = row.iter().map(|&x| if x == 1 { "1" } else { "0" }).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }
}

/// True iff no split of the indices into two nonempty sets leaves the
/// off-diagonal block zero. For a symmetric matrix that is connectivity of
/// its graph; a 1×1 matrix counts as irreducible, an empty one does not.
pub fn is_irreducible(m: &BooleanMatrix) -> bool {
    match m.size() {
        0 => false,
        _ => m.components().len() == 1,
    }
}
