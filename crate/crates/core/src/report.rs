//! Machine-readable reports: one JSON document per run, or one CSV file per
//! (level, measure). Output is byte-stable for identical runs.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Result, SxError};
use crate::pipeline::AnalysisRun;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

pub fn to_json(run: &AnalysisRun) -> Result<String> {
    let mut s = serde_json::to_string_pretty(run)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(text: &str) -> Result<AnalysisRun> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_report(path: impl AsRef<Path>) -> Result<AnalysisRun> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| SxError::io(path, e))?;
    from_json(&text)
}

/// `simplex;score;rank;flags` rows for one ranked level/measure.
pub fn ranking_csv(entries: &[crate::pipeline::ScoreEntry]) -> String {
    let mut out = String::from("simplex;score;rank;flags\n");
    for e in entries {
        let flags: Vec<String> = e.flags.iter().map(ToString::to_string).collect();
        out.push_str(&format!(
            "{{{}}};{};{};{}\n",
            e.simplex.join(","),
            e.score,
            e.rank,
            flags.join("|")
        ));
    }
    out
}

/// Writes the report and returns the files created.
///
/// JSON goes to `path` itself; CSV treats `path` as a directory and writes
/// `k{level}_{measure}.csv` inside it.
pub fn write_report(run: &AnalysisRun, format: ReportFormat, path: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let path = path.as_ref();
    match format {
        ReportFormat::Json => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent).map_err(|e| SxError::io(parent, e))?;
            }
            fs::write(path, to_json(run)?).map_err(|e| SxError::io(path, e))?;
            Ok(vec![path.to_path_buf()])
        }
        ReportFormat::Csv => {
            fs::create_dir_all(path).map_err(|e| SxError::io(path, e))?;
            let mut written = Vec::new();
            for level in &run.levels {
                let Some(measures) = &level.measures else { continue };
                for (measure, entries) in measures {
                    let file = path.join(format!("k{}_{}.csv", level.k, measure));
                    fs::write(&file, ranking_csv(entries)).map_err(|e| SxError::io(&file, e))?;
                    written.push(file);
                }
            }
            Ok(written)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::clique_complex;
    use crate::fixtures::{corollary_graph, path_graph};
    use crate::pipeline::{analyze_graph, AnalysisOptions};

    fn run(graph: crate::graph::Graph) -> AnalysisRun {
        let x = clique_complex(&graph, None).unwrap();
        analyze_graph("net", &graph, &x, &AnalysisOptions::default()).unwrap()
    }

    #[test]
    fn json_round_trip_is_exact() {
        let r = run(corollary_graph());
        let text = to_json(&r).unwrap();
        let back = from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(to_json(&back).unwrap(), text);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["summary"]["clique_number"], 3);
        assert_eq!(
            v["levels"][1]["measures"]["degree"][0]["simplex"],
            serde_json::json!(["a", "d"])
        );
    }

    #[test]
    fn missing_level_has_no_measure_arrays() {
        let text = to_json(&run(path_graph(3))).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let l2 = &v["levels"][2];
        assert_eq!(l2["k"], 2);
        assert_eq!(l2["simplex_count"], 0);
        assert_eq!(l2["status"], "NO-SIMPLICES");
        assert!(l2.get("measures").is_none());
    }

    #[test]
    fn csv_files_per_level_and_measure() {
        let dir = tempfile::tempdir().unwrap();
        let files = write_report(&run(corollary_graph()), ReportFormat::Csv, dir.path()).unwrap();
        assert_eq!(files.len(), 15);
        let degree1 = fs::read_to_string(dir.path().join("k1_degree.csv")).unwrap();
        let mut lines = degree1.lines();
        assert_eq!(lines.next(), Some("simplex;score;rank;flags"));
        assert_eq!(lines.next(), Some("{a,d};3;1;"));
        assert!(degree1.contains("{a,c};0;"));
        assert!(degree1.contains("ISOLATED"));
    }

    #[test]
    fn unwritable_path_is_io_error() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, "x").unwrap();
        let err = write_report(&run(path_graph(3)), ReportFormat::Json, blocker.join("r.json")).unwrap_err();
        assert!(matches!(err, SxError::Io { .. }));
    }
}
