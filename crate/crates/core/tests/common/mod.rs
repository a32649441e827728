//! Reference implementations used as oracles by the integration tests.
//!
//! Nothing here calls into the library's clique, adjacency, walk or
//! centrality code: every relation is recomputed from vertex sets.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use sx_core::Graph;

pub type Face = Vec<usize>;

/// Cliques of a small graph by subset enumeration, grouped by dimension.
pub struct Oracle {
    pub levels: Vec<Vec<Face>>,
    stored: BTreeSet<Face>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        assert!(n <= 16, "subset enumeration is limited to 16 vertices");
        let mut levels: Vec<Vec<Face>> = Vec::new();
        for mask in 1u32..(1u32 << n) {
            let vs: Face = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let clique = vs
                .iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&w| g.has_edge(u, w)));
            if clique {
                let k = vs.len() - 1;
                if levels.len() <= k {
                    levels.resize(k + 1, Vec::new());
                }
                levels[k].push(vs);
            }
        }
        for l in &mut levels {
            l.sort();
        }
        let stored = levels.iter().flatten().cloned().collect();
        Self { levels, stored }
    }

    pub fn level(&self, k: usize) -> &[Face] {
        self.levels.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.stored.contains(f)
    }

    /// Faces that can stand between `a` and `b` in a walk: shared stored
    /// (k-1)-faces when the two are not both facets of a stored
    /// (k+1)-simplex, or the joining edge at k = 0.
    pub fn connectors(&self, a: &Face, b: &Face) -> Vec<Face> {
        let k = a.len() - 1;
        if a == b {
            return Vec::new();
        }
        if k == 0 {
            let e = vec![a[0].min(b[0]), a[0].max(b[0])];
            return if self.contains(&e) { vec![e] } else { Vec::new() };
        }
        let union: BTreeSet<usize> = a.iter().chain(b).copied().collect();
        if union.len() == k + 2 && self.contains(&union.into_iter().collect()) {
            return Vec::new();
        }
        let common: Face = a.iter().filter(|v| b.contains(v)).copied().collect();
        subsets_of_size(&common, k)
            .into_iter()
            .filter(|f| self.contains(f))
            .collect()
    }

    pub fn adjacent(&self, a: &Face, b: &Face) -> bool {
        !self.connectors(a, b).is_empty()
    }

    /// Adjacency lists of level `k`, by position in `level(k)`.
    pub fn adjacency_lists(&self, k: usize) -> Vec<Vec<usize>> {
        let level = self.level(k);
        level
            .iter()
            .map(|a| (0..level.len()).filter(|&j| self.adjacent(a, &level[j])).collect())
            .collect()
    }

    pub fn dense(&self, k: usize) -> Vec<Vec<bool>> {
        let level = self.level(k);
        level
            .iter()
            .map(|a| level.iter().map(|b| self.adjacent(a, b)).collect())
            .collect()
    }
}

pub fn subsets_of_size(items: &[usize], size: usize) -> Vec<Face> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Face>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut cur, &mut out);
    out
}

/// Shortest-walk census from one source, by exhaustive enumeration of
/// repetition-free walks. Shortest walks never revisit a simplex, so the
/// minimum over this set is the walk distance.
pub struct Census {
    pub dist: Vec<Option<usize>>,
    /// Number of shortest walks to each target.
    pub walks: Vec<BigInt>,
    /// `through[t][v]`: shortest walks to `t` with `v` strictly inside.
    pub through: Vec<Vec<BigInt>>,
}

pub fn census(adj: &[Vec<usize>], source: usize) -> Census {
    let n = adj.len();
    let mut c = Census {
        dist: vec![None; n],
        walks: vec![BigInt::zero(); n],
        through: vec![vec![BigInt::zero(); n]; n],
    };
    let mut path = vec![source];
    let mut on = vec![false; n];
    on[source] = true;
    explore(adj, &mut path, &mut on, &mut c);
    c
}

fn explore(adj: &[Vec<usize>], path: &mut Vec<usize>, on: &mut [bool], c: &mut Census) {
    let cur = *path.last().unwrap();
    let len = path.len() - 1;
    let record = match c.dist[cur] {
        None => true,
        Some(d) if len < d => true,
        Some(d) => len == d,
    };
    if record {
        if c.dist[cur] != Some(len) {
            c.dist[cur] = Some(len);
            c.walks[cur] = BigInt::zero();
            c.through[cur].iter_mut().for_each(|x| *x = BigInt::zero());
        }
        c.walks[cur] += 1;
        for &v in &path[1..len.max(1)] {
            c.through[cur][v] += 1;
        }
    }
    for &nb in &adj[cur] {
        if !on[nb] {
            on[nb] = true;
            path.push(nb);
            explore(adj, path, on, c);
            path.pop();
            on[nb] = false;
        }
    }
}

/// Betweenness summed over unordered source/target pairs by counting
/// shortest walks explicitly.
pub fn brute_force_betweenness(adj: &[Vec<usize>]) -> Vec<BigRational> {
    let n = adj.len();
    let mut b = vec![BigRational::zero(); n];
    for s in 0..n {
        let c = census(adj, s);
        for t in (s + 1)..n {
            if c.dist[t].is_none() {
                continue;
            }
            for v in 0..n {
                if !c.through[t][v].is_zero() {
                    b[v] += BigRational::new(c.through[t][v].clone(), c.walks[t].clone());
                }
            }
        }
    }
    b
}

/// True when no split of the index set into two nonempty parts leaves
/// every cross entry zero.
pub fn irreducible_by_bipartition(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    assert!(n <= 20, "bipartition search is exponential");
    match n {
        0 => return false,
        1 => return true,
        _ => {}
    }
    // the part not containing index n-1 ranges over nonempty subsets of 0..n-1
    for mask in 1u32..(1u32 << (n - 1)) {
        let inside = |i: usize| i < n - 1 && mask >> i & 1 == 1;
        let split = (0..n).all(|i| (0..n).all(|j| inside(i) == inside(j) || !m[i][j]));
        if split {
            return false;
        }
    }
    true
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// `count` graphs with 1..=max_n vertices and edge probability in [0.1, 0.95].
pub fn random_corpus(rng: &mut impl Rng, count: usize, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let p = rng.random_range(0.1..0.95);
            random_graph(rng, n, p)
        })
        .collect()
}

/// Graph with exactly `m` distinct random edges.
pub fn random_graph_with_edges(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edges(n, pairs).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative of every isomorphism class of connected graphs on
/// 1..=max_n vertices.
pub fn connected_graphs_up_to_isomorphism(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(e, &p)| (p, e)).collect();
        let maps: Vec<Vec<usize>> = permutations(n)
            .into_iter()
            .map(|perm| {
                pairs
                    .iter()
                    .map(|&(i, j)| index[&(perm[i].min(perm[j]), perm[i].max(perm[j]))])
                    .collect()
            })
            .collect();
        let mut seen = BTreeSet::new();
        for mask in 0u32..(1u32 << pairs.len()) {
            if !mask_connected(n, &pairs, mask) {
                continue;
            }
            let canon = maps
                .iter()
                .map(|m| {
                    (0..pairs.len())
                        .filter(|&e| mask >> e & 1 == 1)
                        .fold(0u32, |acc, e| acc | 1 << m[e])
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                let edges = (0..pairs.len()).filter(|&e| canon >> e & 1 == 1).map(|e| pairs[e]);
                out.push(Graph::from_edges(n, edges).unwrap());
            }
        }
    }
    out
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for (e, &(i, j)) in pairs.iter().enumerate() {
            if mask >> e & 1 == 1 && reached[i] != reached[j] {
                reached[i] = true;
                reached[j] = true;
                changed = true;
            }
        }
    }
    reached.into_iter().all(|r| r)
}
