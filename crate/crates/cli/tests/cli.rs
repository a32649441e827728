use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const GC: &str = ",a,b,c,d,e,f
a,0,1,1,1,0,0
b,1,0,1,0,0,0
c,1,1,0,1,0,0
d,1,0,1,0,1,1
e,0,0,0,1,0,1
f,0,0,0,1,1,0
";

fn sx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sx"))
        .args(args)
        .env_remove("SX_THREADS")
        .output()
        .expect("failed to launch sx")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_gc(dir: &Path) -> String {
    let p = dir.join("gc.csv");
    fs::write(&p, GC).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn cliques_prints_summary_row() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_gc(dir.path());
    let o = sx(&["cliques", &m, "--list", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("network\tvertices\tedges\t2-cliques\t3-cliques\tclique_number")
    );
    assert_eq!(lines.next(), Some("gc\t6\t8\t8\t3\t3"));
    assert!(out.contains("{a,b,c}\n{a,c,d}\n{d,e,f}\n"));
}

#[test]
fn expectation_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_gc(dir.path());
    let good = dir.path().join("good.json");
    fs::write(
        &good,
        r#"{"vertices": 6, "edges": 8, "cliques": {"3": 3}, "clique_number": 3,
            "simplices": {"2": [["d", "e", "f"]]}, "connectivity": {"0": true, "1": false, "2": false}}"#,
    )
    .unwrap();
    assert!(sx(&["cliques", &m, "--expect", good.to_str().unwrap()])
        .status
        .success());

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"edges": 9, "simplices": {"2": [["a", "b", "d"]]}}"#).unwrap();
    let o = sx(&["cliques", &m, "--expect", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("edges: expected 9, found 8"), "{err}");
    assert!(err.contains("{a,b,d} not found"), "{err}");
}

#[test]
fn connectivity_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_gc(dir.path());
    let out = stdout(&sx(&["connectivity", &m]));
    let verdicts: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit('\t').next().unwrap()).collect();
    assert_eq!(verdicts, vec!["connected", "disconnected", "disconnected"]);

    let k4 = dir.path().join("k4.csv");
    fs::write(&k4, "w,x,y,z\nw,0,1,1,1\nx,1,0,1,1\ny,1,1,0,1\nz,1,1,1,0\n").unwrap();
    let out = stdout(&sx(&["connectivity", k4.to_str().unwrap(), "--all-levels"]));
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().nth(4).unwrap().starts_with("3\t1\t1\t1\tconnected"));
}

#[test]
fn analyze_is_deterministic_and_feeds_compare_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_gc(dir.path());
    let r1 = dir.path().join("r1.json");
    let r2 = dir.path().join("r2.json");
    for r in [&r1, &r2] {
        let o = sx(&["analyze", &m, "--out", r.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(fs::read(&r1).unwrap(), fs::read(&r2).unwrap());

    let o = sx(&["compare", r1.to_str().unwrap(), "--measure", "degree", "--top", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("1\t4\t{d}"));
    assert!(out.contains("1\t1\t{a,d}\ta:2 d:1"));

    let plots = dir.path().join("plots");
    assert!(sx(&["plot", r1.to_str().unwrap(), "--out", plots.to_str().unwrap()])
        .status
        .success());
    for k in 0..3 {
        assert!(plots.join(format!("k{k}_degree.svg")).exists());
    }
    assert!(plots.join("compare_degree.svg").exists());
    assert!(plots.join("compare_degree.csv").exists());
}

#[test]
fn csv_reports_and_thread_cap() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_gc(dir.path());
    let out = dir.path().join("csv");
    let o = Command::new(env!("CARGO_BIN_EXE_sx"))
        .args([
            "analyze",
            &m,
            "--levels",
            "1",
            "--measures",
            "degree,closeness",
            "--format",
            "csv",
            "--out",
        ])
        .arg(&out)
        .env("SX_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    let mut files: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    files.sort();
    assert_eq!(files, vec!["k1_closeness.csv", "k1_degree.csv"]);
    let closeness = fs::read_to_string(out.join("k1_closeness.csv")).unwrap();
    assert!(closeness.starts_with("simplex;score;rank;flags\n"));
    assert!(closeness.contains("UNREACHABLE-RESTRICTED"));

    let o = Command::new(env!("CARGO_BIN_EXE_sx"))
        .args(["cliques", &m])
        .env("SX_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_gc(dir.path());

    let malformed = dir.path().join("bad.csv");
    fs::write(&malformed, "a,b,c\na,0,1,0,1\nb,1,0,1\nc,0,1,0\n").unwrap();
    let o = sx(&["cliques", malformed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("data row 1"));

    assert_eq!(sx(&["cliques", "/nonexistent/m.csv"]).status.code(), Some(3));
    assert_eq!(
        sx(&["analyze", &m, "--measures", "pagerank", "--out", "x.json"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(sx(&["bogus"]).status.code(), Some(1));

    // one power-iteration step is not enough to converge on G_c
    let out = dir.path().join("r.json");
    let o = sx(&[
        "analyze",
        &m,
        "--measures",
        "eigenvector",
        "--max-iter",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));

    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let target = blocker.join("r.json");
    let o = sx(&["analyze", &m, "--measures", "degree", "--out", target.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));

    let not_json = dir.path().join("nj.json");
    fs::write(&not_json, "{").unwrap();
    assert_eq!(
        sx(&["plot", not_json.to_str().unwrap(), "--out", "p"]).status.code(),
        Some(1)
    );
}

#[test]
fn nonbinary_entries_warn_but_succeed() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("w.csv");
    fs::write(&p, "a,b\na,0,2\nb,2,0\n").unwrap();
    let o = sx(&["cliques", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("treated as 1"));
    assert!(stdout(&o).contains("w\t2\t1\t1\t0\t2"));
}
