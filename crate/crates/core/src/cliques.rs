//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting).

use crate::graph::{Graph, VertexId};

/// All maximal cliques of `g`, each sorted, listed in lexicographic order.
///
/// Isolated vertices come out as singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let candidates: Vec<VertexId> = (0..g.vertex_count()).collect();
    let mut current = Vec::new();
    expand(g, &mut current, candidates, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    g: &Graph,
    current: &mut Vec<VertexId>,
    mut candidates: Vec<VertexId>,
    mut excluded: Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() && !current.is_empty() {
            out.push(current.clone());
        }
        return;
    }

    // pivot maximizing |N(u) ∩ candidates| over candidates ∪ excluded
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&u| (count_common(g.neighbors(u), &candidates), std::cmp::Reverse(u)))
        .expect("nonempty candidate set");
    let pivot_neighbors = g.neighbors(pivot);

    let branch: Vec<VertexId> = candidates
        .iter()
        .copied()
        .filter(|v| pivot_neighbors.binary_search(v).is_err())
        .collect();

    for v in branch {
        let nv = g.neighbors(v);
        let next_candidates = intersect(&candidates, nv);
        let next_excluded = intersect(&excluded, nv);
        current.push(v);
        expand(g, current, next_candidates, next_excluded, out);
        current.pop();
        candidates.retain(|&c| c != v);
        let pos = excluded.binary_search(&v).unwrap_or_else(|p| p);
        excluded.insert(pos, v);
    }
}

/// Both inputs sorted; result sorted.
fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn count_common(a: &[VertexId], b: &[VertexId]) -> usize {
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
