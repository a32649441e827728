use std::path::Path;

use sx_core::centrality::{cross_level_from_levels, LabeledRank, LevelRanks};
use sx_core::pipeline::{build_complex, connectivity_report, summarize, AnalysisOptions, LevelReport};
use sx_core::report::{read_report, write_report, ReportFormat};
use sx_core::{parse_matrix_csv, run_analysis, Measure, ParsedMatrix};

use crate::{expect, Command, Failure, Format, InputArgs};

pub(crate) fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Cliques {
            matrix,
            expect,
            list,
            input,
        } => cliques(&matrix, expect.as_deref(), list, &input),
        Command::Connectivity {
            matrix,
            all_levels,
            input,
        } => connectivity(&matrix, all_levels, &input),
        Command::Analyze {
            matrix,
            levels,
            all_levels,
            measures,
            tol,
            max_iter,
            top,
            name,
            format,
            out,
            input,
        } => {
            let options = AnalysisOptions {
                keep_isolated: input.keep_isolated,
                max_dim: input.max_dim,
                levels,
                all_levels,
                measures,
                tol,
                max_iter,
                top_n: top,
            };
            analyze(&matrix, name, &options, format, &out)
        }
        Command::Compare { report, measure, top } => compare(&report, measure, top),
        Command::Plot { report, out } => plot(&report, &out),
    }
}

fn network_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "network".to_owned(), |s| s.to_string_lossy().into_owned())
}

fn load(path: &Path) -> Result<ParsedMatrix, Failure> {
    let parsed = parse_matrix_csv(path)?;
    for w in &parsed.warnings {
        eprintln!("warning: {}:{}:{}: {}", path.display(), w.line, w.column, w.message);
    }
    Ok(parsed)
}

fn cliques(path: &Path, expect_file: Option<&Path>, list: Option<usize>, input: &InputArgs) -> Result<(), Failure> {
    let parsed = load(path)?;
    let (graph, complex) = build_complex(&parsed, input.keep_isolated, input.max_dim)?;
    let summary = summarize(&graph, &complex);

    let sizes = summary.clique_counts.len().max(3);
    let mut header = vec!["network".to_owned(), "vertices".into(), "edges".into()];
    let mut row = vec![
        network_name(path),
        summary.vertices.to_string(),
        summary.edges.to_string(),
    ];
    for size in 2..=sizes {
        header.push(format!("{size}-cliques"));
        row.push(summary.cliques_of_size(size).to_string());
    }
    header.push("clique_number".into());
    row.push(summary.clique_number.to_string());
    println!("{}", header.join("\t"));
    println!("{}", row.join("\t"));

    if let Some(k) = list {
        println!();
        println!("{}-simplices ({}):", k, complex.level(k).len());
        for s in complex.level(k) {
            println!("{}", complex.display(s));
        }
    }

    if let Some(file) = expect_file {
        let expected = expect::load(file)?;
        let mismatches = expect::check(&expected, &summary, &complex)?;
        if !mismatches.is_empty() {
            for m in &mismatches {
                eprintln!("mismatch: {m}");
            }
            return Err(Failure::Input(format!(
                "{} expectation(s) in {} not met",
                mismatches.len(),
                file.display()
            )));
        }
        eprintln!("all expectations in {} met", file.display());
    }
    Ok(())
}

fn print_connectivity(levels: &[LevelReport]) {
    println!("level\tsimplices\tcomponents\tisolated\tverdict");
    for l in levels {
        match l.connected {
            Some(connected) => println!(
                "{}\t{}\t{}\t{}\t{}",
                l.k,
                l.simplex_count,
                l.components.len(),
                l.isolated.len(),
                if connected { "connected" } else { "disconnected" }
            ),
            None => println!("{}\t0\t-\t-\tNO-SIMPLICES", l.k),
        }
    }
}

fn connectivity(path: &Path, all_levels: bool, input: &InputArgs) -> Result<(), Failure> {
    let parsed = load(path)?;
    let (_, complex) = build_complex(&parsed, input.keep_isolated, input.max_dim)?;
    let top = if all_levels { complex.clique_number() } else { 3 };
    let levels = (0..top)
        .map(|k| connectivity_report(&complex, k))
        .collect::<Result<Vec<_>, _>>()?;
    print_connectivity(&levels);
    Ok(())
}

fn analyze(
    path: &Path,
    name: Option<String>,
    options: &AnalysisOptions,
    format: Format,
    out: &Path,
) -> Result<(), Failure> {
    if !(options.tol.is_finite() && options.tol > 0.0) {
        return Err(Failure::Input(format!("--tol must be positive, got {}", options.tol)));
    }
    let parsed = load(path)?;
    let name = name.unwrap_or_else(|| network_name(path));
    let run = run_analysis(&name, &parsed, options)?;
    for w in run.warnings.iter().skip(parsed.warnings.len()) {
        eprintln!("warning: {w}");
    }
    let format = match format {
        Format::Json => ReportFormat::Json,
        Format::Csv => ReportFormat::Csv,
    };
    let files = write_report(&run, format, out)?;
    print_connectivity(&run.levels);
    eprintln!("wrote {} file(s) to {}", files.len(), out.display());
    Ok(())
}

fn compare(report: &Path, measure: Measure, top: usize) -> Result<(), Failure> {
    let run = read_report(report)?;
    let levels: Vec<LevelRanks> = run
        .levels
        .iter()
        .filter_map(|l| {
            l.ranking(measure).map(|entries| LevelRanks {
                k: l.k,
                items: entries
                    .iter()
                    .map(|e| LabeledRank {
                        vertices: e.simplex.clone(),
                        score: e.score,
                        rank: e.rank,
                    })
                    .collect(),
            })
        })
        .collect();
    if levels.is_empty() {
        return Err(Failure::Input(format!(
            "report {} has no {measure} scores",
            report.display()
        )));
    }

    println!("{}: {measure} centrality, ranks 1-{top}", run.network);
    for level in &levels {
        println!();
        println!("level {}", level.k);
        println!("rank\tscore\tsimplex");
        for item in level.items.iter().filter(|it| it.rank <= top) {
            println!("{}\t{}\t{{{}}}", item.rank, item.score, item.vertices.join(","));
        }
    }

    let cross = cross_level_from_levels(measure, &levels, top);
    if !cross.lifts.is_empty() {
        println!();
        println!("level-0 ranks of top simplices");
        println!("k\trank\tsimplex\tvertex ranks");
        for lift in &cross.lifts {
            let ranks: Vec<String> = lift
                .vertex_ranks
                .iter()
                .map(|v| format!("{}:{}", v.vertex, v.rank.map_or("-".to_owned(), |r| r.to_string())))
                .collect();
            println!(
                "{}\t{}\t{{{}}}\t{}",
                lift.k,
                lift.rank,
                lift.simplex.join(","),
                ranks.join(" ")
            );
        }
    }
    if !cross.agreement.is_empty() {
        println!();
        println!("levels\tshared vertices\tconcordance");
        for a in &cross.agreement {
            let c = a.concordance.map_or("-".to_owned(), |c| format!("{c:.4}"));
            println!("{}-{}\t{}\t{}", a.a, a.b, a.shared_vertices, c);
        }
    }
    Ok(())
}

fn plot(report: &Path, out: &Path) -> Result<(), Failure> {
    let run = read_report(report)?;
    let output = sx_core::plot::emit_plots(&run, out)?;
    for w in &output.warnings {
        eprintln!("warning: {w}");
    }
    eprintln!("wrote {} file(s) to {}", output.files.len(), out.display());
    Ok(())
}
