//! Expected-count sidecars for `sx cliques --expect`.
//!
//! ```json
//! {
//!   "vertices": 18, "edges": 33,
//!   "cliques": {"2": 33, "3": 5},
//!   "clique_number": 3,
//!   "simplices": {"2": [["1", "11", "13"]]},
//!   "connectivity": {"0": true, "1": false}
//! }
//! ```
//!
//! Every field is optional. `cliques` is keyed by clique size, `simplices`
//! and `connectivity` by level.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use sx_core::pipeline::{connectivity_report, ComplexSummary};
use sx_core::SimplicialComplex;

use crate::Failure;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct Expectations {
    vertices: Option<usize>,
    edges: Option<usize>,
    #[serde(default)]
    cliques: BTreeMap<usize, usize>,
    clique_number: Option<usize>,
    #[serde(default)]
    simplices: BTreeMap<usize, Vec<Vec<String>>>,
    #[serde(default)]
    connectivity: BTreeMap<usize, bool>,
}

pub(crate) fn load(path: &Path) -> Result<Expectations, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn verdict(connected: Option<bool>) -> &'static str {
    match connected {
        Some(true) => "connected",
        Some(false) => "disconnected",
        None => "no simplices",
    }
}

/// Human-readable list of every unmet expectation.
pub(crate) fn check(
    expected: &Expectations,
    summary: &ComplexSummary,
    complex: &SimplicialComplex,
) -> Result<Vec<String>, Failure> {
    let mut out = Vec::new();
    let mut compare = |what: String, want: usize, got: usize| {
        if want != got {
            out.push(format!("{what}: expected {want}, found {got}"));
        }
    };
    if let Some(v) = expected.vertices {
        compare("vertices".into(), v, summary.vertices);
    }
    if let Some(e) = expected.edges {
        compare("edges".into(), e, summary.edges);
    }
    for (&size, &count) in &expected.cliques {
        compare(format!("{size}-cliques"), count, summary.cliques_of_size(size));
    }
    if let Some(w) = expected.clique_number {
        compare("clique number".into(), w, summary.clique_number);
    }

    for (&k, list) in &expected.simplices {
        for labels in list {
            let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let present = complex
                .simplex_by_labels(&refs)
                .is_ok_and(|s| s.dimension() == k && complex.contains(&s));
            if !present {
                out.push(format!("{k}-simplex {{{}}} not found", labels.join(",")));
            }
        }
    }

    for (&k, &want) in &expected.connectivity {
        let got = connectivity_report(complex, k)?.connected;
        if got != Some(want) {
            out.push(format!(
                "level {k}: expected {}, found {}",
                verdict(Some(want)),
                verdict(got)
            ));
        }
    }
    Ok(out)
}
