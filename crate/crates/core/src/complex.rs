//! Abstract simplicial complexes and clique-complex construction.

use std::collections::{BTreeSet, HashMap};

use crate::cliques::maximal_cliques;
use crate::error::{Result, SxError};
use crate::graph::{Graph, VertexId};
use crate::simplex::Simplex;

/// A family of simplices grouped by dimension.
///
/// Every level is sorted lexicographically, so the position of a simplex in
/// its level is a stable matrix index. Complexes built through
/// [`clique_complex`] or [`SimplicialComplex::closure`] are downward closed;
/// [`SimplicialComplex::from_simplices`] stores exactly what it is given, and
/// [`validate_closure`] tells whether that family is a complex.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    levels: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, (usize, usize)>,
}

impl SimplicialComplex {
    /// Stores the given simplices verbatim (deduplicated); no closure is taken.
    pub fn from_simplices(labels: Vec<String>, simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let mut by_level: Vec<BTreeSet<Simplex>> = Vec::new();
        for s in simplices {
            if let Some(&v) = s.vertices().iter().find(|&&v| v >= labels.len()) {
                return Err(SxError::InvalidSimplex(format!("{s} uses undeclared vertex {v}")));
            }
            let k = s.dimension();
            if by_level.len() <= k {
                by_level.resize_with(k + 1, BTreeSet::new);
            }
            by_level[k].insert(s);
        }
        Ok(Self::from_levels(labels, by_level))
    }

    /// The smallest complex containing the given simplices.
    pub fn closure(labels: Vec<String>, simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let mut all = BTreeSet::new();
        for s in simplices {
            if !all.contains(&s) {
                all.extend(s.faces());
                all.insert(s);
            }
        }
        Self::from_simplices(labels, all)
    }

    fn from_levels(labels: Vec<String>, mut by_level: Vec<BTreeSet<Simplex>>) -> Self {
        while by_level.last().is_some_and(BTreeSet::is_empty) {
            by_level.pop();
        }
        let levels: Vec<Vec<Simplex>> = by_level.into_iter().map(|l| l.into_iter().collect()).collect();
        let mut index = HashMap::with_capacity(levels.iter().map(Vec::len).sum());
        for (k, level) in levels.iter().enumerate() {
            for (pos, s) in level.iter().enumerate() {
                index.insert(s.clone(), (k, pos));
            }
        }
        Self { labels, levels, index }
    }

    /// Largest `k` with a stored k-simplex, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    /// Size of the largest clique (`dim + 1`), 0 when empty.
    pub fn clique_number(&self) -> usize {
        self.levels.len()
    }

    /// The k-simplices in index order; empty above `dim`.
    pub fn level(&self, k: usize) -> &[Simplex] {
        self.levels.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn levels(&self) -> &[Vec<Simplex>] {
        &self.levels
    }

    /// Number of simplices at each level `0..=dim`.
    pub fn level_counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// `(k, position)` of a stored simplex.
    pub fn index_of(&self, s: &Simplex) -> Option<(usize, usize)> {
        self.index.get(s).copied()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.levels.iter().flatten()
    }

    /// Renders a simplex with vertex labels, e.g. `{a,b,c}`.
    pub fn display(&self, s: &Simplex) -> String {
        format!("{{{}}}", self.label_list(s).join(","))
    }

    pub fn label_list(&self, s: &Simplex) -> Vec<String> {
        s.vertices()
            .iter()
            .map(|&v| self.labels.get(v).cloned().unwrap_or_else(|| v.to_string()))
            .collect()
    }

    /// Looks up a simplex by its vertex labels.
    pub fn simplex_by_labels(&self, labels: &[&str]) -> Result<Simplex> {
        let ids = labels
            .iter()
            .map(|l| {
                self.labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| SxError::InvalidParameter(format!("unknown vertex label {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Simplex::new(ids)
    }

    /// A copy of this family without `s` (faces and cofaces untouched).
    pub fn without(&self, s: &Simplex) -> Self {
        let by_level = self
            .levels
            .iter()
            .map(|l| l.iter().filter(|x| *x != s).cloned().collect())
            .collect();
        Self::from_levels(self.labels.clone(), by_level)
    }
}

/// The clique complex of `g`: one (s−1)-simplex per s-clique.
///
/// With `max_dim = Some(p)` only simplices of dimension `≤ p` are kept. Built
/// by expanding every maximal clique into its faces.
pub fn clique_complex(g: &Graph, max_dim: Option<usize>) -> Result<SimplicialComplex> {
    if max_dim == Some(0) {
        return Err(SxError::InvalidParameter("max_dim must be at least 1".into()));
    }
    let cap = max_dim.map_or(usize::MAX, |p| p + 1);
    let mut by_level: Vec<BTreeSet<Simplex>> = Vec::new();
    for clique in maximal_cliques(g) {
        let top = clique.len().min(cap);
        if by_level.len() < top {
            by_level.resize_with(top, BTreeSet::new);
        }
        for size in 1..=top {
            let level = &mut by_level[size - 1];
            for_each_combination(&clique, size, |c| {
                level.insert(Simplex::from_sorted(c.to_vec()));
            });
        }
    }
    Ok(SimplicialComplex::from_levels(g.labels().to_vec(), by_level))
}

fn for_each_combination(items: &[VertexId], size: usize, mut f: impl FnMut(&[VertexId])) {
    fn rec(items: &[VertexId], size: usize, start: usize, buf: &mut Vec<VertexId>, f: &mut impl FnMut(&[VertexId])) {
        if buf.len() == size {
            f(buf);
            return;
        }
        let need = size - buf.len();
        for i in start..=(items.len() - need) {
            buf.push(items[i]);
            rec(items, size, i + 1, buf, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(size);
    rec(items, size, 0, &mut buf, &mut f);
}

/// True iff every nonempty proper subset of every stored simplex is stored.
///
/// Checking the facets of each simplex suffices: if all facets are present at
/// every level, induction covers the smaller faces.
pub fn validate_closure(complex: &SimplicialComplex) -> bool {
    complex.iter().all(|s| s.facets().iter().all(|f| complex.contains(f)))
}

/// All nonempty proper faces of `s`.
pub fn faces(s: &Simplex) -> Vec<Simplex> {
    s.faces()
}

/// The (dim−1)-faces of a stored simplex.
pub fn boundary_facets(complex: &SimplicialComplex, s: &Simplex) -> Result<Vec<Simplex>> {
    if !complex.contains(s) {
        return Err(SxError::SimplexNotFound(s.to_string()));
    }
    Ok(s.facets())
}

/// Simplices of dimension at most `p`.
pub fn p_skeleton(complex: &SimplicialComplex, p: usize) -> SimplicialComplex {
    let by_level = complex
        .levels
        .iter()
        .take(p + 1)
        .map(|l| l.iter().cloned().collect())
        .collect();
    SimplicialComplex::from_levels(complex.labels.clone(), by_level)
}

/// Image of the complex under the vertex map `v ↦ perm[v]`.
///
/// `perm` must be a permutation of `0..vertex_count`. Labels travel with
/// their vertices, so the result is isomorphic to the input.
pub fn relabel(complex: &SimplicialComplex, perm: &[VertexId]) -> Result<SimplicialComplex> {
    let n = complex.vertex_count();
    if perm.len() != n {
        return Err(SxError::NotABijection(format!(
            "map has {} entries for {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(SxError::NotABijection(format!("image {p} out of range or repeated")));
        }
    }
    let mut labels = vec![String::new(); n];
    for (old, &new) in perm.iter().enumerate() {
        labels[new] = complex.labels[old].clone();
    }
    let by_level = complex
        .levels
        .iter()
        .map(|l| l.iter().map(|s| s.map_vertices(|v| perm[v])).collect())
        .collect();
    Ok(SimplicialComplex::from_levels(labels, by_level))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{corollary_graph, k_n};

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn corollary_complex_counts() {
        let g = corollary_graph();
        let x = clique_complex(&g, None).unwrap();
        assert_eq!(x.level_counts(), vec![6, 8, 3]);
        assert_eq!(x.dim(), Some(2));
        let tri: Vec<String> = x.level(2).iter().map(|t| x.display(t)).collect();
        assert_eq!(tri, vec!["{a,b,c}", "{a,c,d}", "{d,e,f}"]);
        assert!(validate_closure(&x));
    }

    #[test]
    fn triangle_complex() {
        let x = clique_complex(&k_n(3), None).unwrap();
        assert_eq!(x.level_counts(), vec![3, 3, 1]);
        assert_eq!(x.clique_number(), 3);
    }

    #[test]
    fn max_dim_caps_construction() {
        let x = clique_complex(&k_n(5), Some(2)).unwrap();
        assert_eq!(x.level_counts(), vec![5, 10, 10]);
        assert!(validate_closure(&x));
        assert!(clique_complex(&k_n(3), Some(0)).is_err());
    }

    #[test]
    fn closure_violations_detected() {
        let missing_edge = SimplicialComplex::from_simplices(
            vec!["a".into(), "b".into(), "c".into()],
            [s(&[0]), s(&[1]), s(&[2]), s(&[0, 2]), s(&[1, 2]), s(&[0, 1, 2])],
        )
        .unwrap();
        assert!(!validate_closure(&missing_edge));

        let x = clique_complex(&corollary_graph(), None).unwrap();
        let ac = x.simplex_by_labels(&["a", "c"]).unwrap();
        assert!(!validate_closure(&x.without(&ac)));
    }

    #[test]
    fn boundary() {
        let x = clique_complex(&k_n(3), None).unwrap();
        assert_eq!(
            boundary_facets(&x, &s(&[0, 1, 2])).unwrap(),
            vec![s(&[0, 1]), s(&[0, 2]), s(&[1, 2])]
        );
        assert_eq!(boundary_facets(&x, &s(&[0, 1])).unwrap(), vec![s(&[0]), s(&[1])]);
        assert!(boundary_facets(&x, &s(&[0])).unwrap().is_empty());
        assert!(matches!(
            boundary_facets(&x, &s(&[0, 7])),
            Err(SxError::SimplexNotFound(_))
        ));
    }

    #[test]
    fn skeletons() {
        let x = clique_complex(&corollary_graph(), None).unwrap();
        let one = p_skeleton(&x, 1);
        assert_eq!(one.level_counts(), vec![6, 8]);
        assert_eq!(p_skeleton(&x, 2), x);
        let k3 = clique_complex(&k_n(3), None).unwrap();
        assert_eq!(p_skeleton(&k3, 0).level_counts(), vec![3]);
    }

    #[test]
    fn relabel_cases() {
        let k3 = clique_complex(&k_n(3), None).unwrap();
        assert_eq!(relabel(&k3, &[0, 1, 2]).unwrap(), k3);
        let cycled = relabel(&k3, &[1, 2, 0]).unwrap();
        assert_eq!(cycled.levels(), k3.levels());

        let x = clique_complex(&corollary_graph(), None).unwrap();
        // swap a and f
        let swapped = relabel(&x, &[5, 1, 2, 3, 4, 0]).unwrap();
        assert_eq!(swapped.level_counts(), vec![6, 8, 3]);
        assert!(validate_closure(&swapped));
        assert!(swapped.contains(&swapped.simplex_by_labels(&["a", "b", "c"]).unwrap()));

        assert!(relabel(&k3, &[0, 0, 1]).is_err());
        assert!(relabel(&k3, &[0, 1]).is_err());
        assert!(relabel(&k3, &[0, 1, 3]).is_err());
    }
}
