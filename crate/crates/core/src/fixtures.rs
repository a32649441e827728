//! Small named graphs used by tests, examples and the acceptance suite.

use crate::graph::Graph;

/// The connected graph whose clique complex is disconnected at level 1:
/// `V = {a..f}`, `E = {ab, ac, ad, bc, cd, df, fe, de}`.
pub fn corollary_graph() -> Graph {
    Graph::from_labeled_edges(
        &["a", "b", "c", "d", "e", "f"],
        &[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("c", "d"),
            ("d", "f"),
            ("f", "e"),
            ("d", "e"),
        ],
    )
    .expect("static fixture")
}

/// Complete graph on `n` vertices labeled `0..n`.
pub fn k_n(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))).expect("static fixture")
}

/// Path `0 – 1 – … – (n−1)`.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("static fixture")
}

/// The union of the five triangles listed for the River-1 web,
/// `{7,11,13}, {3,11,16}, {1,11,16}, {1,11,13}, {1,10,13}`, vertices labeled
/// by their original numbers.
pub fn river1_triangles() -> Graph {
    let triangles: [[&str; 3]; 5] = [
        ["7", "11", "13"],
        ["3", "11", "16"],
        ["1", "11", "16"],
        ["1", "11", "13"],
        ["1", "10", "13"],
    ];
    let labels = ["1", "3", "7", "10", "11", "13", "16"];
    let mut edges = Vec::new();
    for t in &triangles {
        edges.push((t[0], t[1]));
        edges.push((t[0], t[2]));
        edges.push((t[1], t[2]));
    }
    Graph::from_labeled_edges(&labels, &edges).expect("static fixture")
}
