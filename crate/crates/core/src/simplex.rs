use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SxError};
use crate::graph::VertexId;

/// A nonempty, strictly increasing set of vertex ids.
///
/// Ordering is lexicographic on the vertex list, which is the per-level
/// order used everywhere in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Sorts the given vertices; duplicates and empty input are rejected.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(SxError::InvalidSimplex("a simplex needs at least one vertex".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(SxError::InvalidSimplex(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Self(vertices))
    }

    /// Caller guarantees `vertices` is nonempty and strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn vertex(v: VertexId) -> Self {
        Self(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `|self ∩ other|`, by a merge over the two sorted lists.
    pub fn intersection_len(&self, other: &Simplex) -> usize {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    /// Common vertices as a simplex, `None` when disjoint.
    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let common: Vec<VertexId> = self.0.iter().copied().filter(|v| other.contains(*v)).collect();
        (!common.is_empty()).then_some(Simplex(common))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut all: Vec<VertexId> = self.0.iter().chain(other.0.iter()).copied().collect();
        all.sort_unstable();
        all.dedup();
        Simplex(all)
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// All nonempty proper subsets, sorted. A k-simplex has `2^(k+1) - 2` of them.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < usize::BITS as usize, "simplex too large for face enumeration");
        let full = (1usize << n) - 1;
        let mut out: Vec<Simplex> = (1..full)
            .map(|mask| Simplex((0..n).filter(|b| mask >> b & 1 == 1).map(|b| self.0[b]).collect()))
            .collect();
        out.sort();
        out
    }

    /// The codimension-one faces, sorted. Empty for a 0-simplex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        let mut out: Vec<Simplex> = (0..self.0.len())
            .map(|skip| {
                Simplex(
                    self.0
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, v)| *v)
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out
    }

    /// Applies a vertex map and re-sorts.
    pub fn map_vertices(&self, f: impl Fn(VertexId) -> VertexId) -> Simplex {
        let mut vs: Vec<VertexId> = self.0.iter().map(|v| f(*v)).collect();
        vs.sort_unstable();
        Simplex(vs)
    }
}

impl TryFrom<Vec<VertexId>> for Simplex {
    type Error = SxError;

    fn try_from(value: Vec<VertexId>) -> Result<Self> {
        Simplex::new(value)
    }
}

impl From<Simplex> for Vec<VertexId> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
