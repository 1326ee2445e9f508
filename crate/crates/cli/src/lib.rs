//! The `regcross` command line.
//!
//! Exit status: 0 on success, 2 for bad arguments, unreadable or malformed
//! input and resource limits, 3 when a drawing is degenerate or a
//! construction does not exist.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use regcross::analysis::{coverage_of, noncrossing_accounting, type_profile, CoverageVerdict};
use regcross::constructions::{generalized_star, star_like_construction};
use regcross::formulas::{best_known, min_noncrossing_pairs};
use regcross::geometry::{count_crossings_geometric, GeometricDrawing};
use regcross::io::{parse_drawing, write_drawing, ConstructionTag};
use regcross::search::{
    convex_max_with, perturbation_probe, reproduce_table, CellStatus, SearchConfig, SearchResult,
    TableEntry, DEFAULT_SEARCH_CAP,
};
use regcross::svg::{render_svg, RenderStyle};
use regcross::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "regcross",
    version,
    about = "Crossing-maximal straight-line drawings of regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an extremal convex drawing and write it as `drawing v1`.
    Construct {
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Output file; stdout when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Count the crossings of a drawing.
    Count { file: PathBuf },
    /// Endvertex-type statistics and crossing accounting of a drawing.
    Analyze {
        file: PathBuf,
        /// Also check that every vertex sees each of its types at least twice.
        #[arg(long)]
        check_lemma: bool,
    },
    /// Closed-form bounds for the maximum crossing number.
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Search for crossing-maximal drawings.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Mode::Convex)]
        mode: Mode,
        /// Random drawings tried in probe mode.
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for the convex search; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Allow the convex search up to n = 10.
        #[arg(long)]
        long_run: bool,
        /// Write per-shard checkpoints here and resume from them.
        #[arg(long)]
        checkpoint_dir: Option<PathBuf>,
    },
    /// Best known values for every feasible (n, d) with 4 <= n <= max-n.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Cross-check cells with n up to this bound by convex search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        search_cap: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Render a drawing as SVG.
    Render {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Place a convex-position drawing on a regular polygon.
        #[arg(long)]
        circle_layout: bool,
        /// Dash the edges a star-like construction removed (needs the construction comment).
        #[arg(long)]
        show_removed: bool,
        #[arg(long, default_value_t = 40.0)]
        scale: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Star,
    Starlike,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Convex,
    Probe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Degeneracy(_) | Error::Construction(_) => EXIT_DEGENERATE,
        _ => EXIT_USAGE,
    }
}

/// Runs the tool on `argv` (program name first). Normal output goes to
/// `out`, diagnostics and timings to `err`.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

fn read_drawing(path: &Path) -> regcross::Result<(GeometricDrawing, String)> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    Ok((parse_drawing(&text)?, text))
}

fn emit(out: &mut dyn Write, text: &str) -> regcross::Result<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> regcross::Result<()> {
    match cmd {
        Command::Construct { kind, n, d, output } => {
            let text = match kind {
                Kind::Star => write_drawing(
                    &generalized_star(n, d)?,
                    Some(ConstructionTag::Star { n, d }),
                ),
                Kind::Starlike => {
                    let s = star_like_construction(n, d)?;
                    write_drawing(
                        &s.drawing,
                        Some(ConstructionTag::StarLike { n, d, case: s.case }),
                    )
                }
            };
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| io_err(&path, e)),
                None => emit(out, &text),
            }
        }
        Command::Count { file } => {
            let (drawing, _) = read_drawing(&file)?;
            let r = count_crossings_geometric(&drawing)?;
            emit(out, &format!("crossings {}\n", r.total))
        }
        Command::Analyze { file, check_lemma } => {
            let (drawing, _) = read_drawing(&file)?;
            emit(out, &analyze(&drawing, check_lemma)?)
        }
        Command::Formula { n, d } => emit(out, &formula(n, d)?),
        Command::Search {
            n,
            d,
            mode,
            trials,
            seed,
            workers,
            long_run,
            checkpoint_dir,
        } => {
            let r = match mode {
                Mode::Convex => {
                    let cfg = SearchConfig {
                        workers,
                        long_run,
                        checkpoint_dir,
                        ..SearchConfig::default()
                    };
                    convex_max_with(n, d, &cfg)?
                }
                Mode::Probe => perturbation_probe(n, d, trials, seed)?,
            };
            let _ = writeln!(
                err,
                "examined {} graphs in {:.3?}",
                r.graphs_examined, r.elapsed
            );
            emit(out, &search_report(&r))
        }
        Command::Table {
            max_n,
            format,
            search_cap,
            workers,
        } => {
            let rows = reproduce_table(max_n, search_cap, workers)?;
            let text = match format {
                Format::Text => table_text(&rows),
                Format::Csv => table_csv(&rows),
            };
            emit(out, &text)
        }
        Command::Render {
            file,
            output,
            circle_layout,
            show_removed,
            scale,
        } => {
            let (drawing, text) = read_drawing(&file)?;
            let mut style = RenderStyle::new(scale, 4.0, 1.5)?.with_circle_layout(circle_layout);
            if show_removed {
                style = style.with_highlight(removed_edges(&drawing, &text)?);
            }
            let svg = render_svg(&drawing, &style)?;
            fs::write(&output, svg).map_err(|e| io_err(&output, e))
        }
    }
}

/// Rebuilds the star-like construction named in the file's comment and
/// returns its removed edges; the drawing must match the rebuilt one.
fn removed_edges(drawing: &GeometricDrawing, text: &str) -> regcross::Result<Vec<(usize, usize)>> {
    let tag = text
        .lines()
        .filter_map(|l| l.trim().strip_prefix("# construction "))
        .next_back()
        .ok_or_else(|| Error::Argument("no construction comment in drawing file".into()))?;
    let parts: Vec<&str> = tag.split_whitespace().collect();
    match parts.as_slice() {
        ["star", ..] => Ok(Vec::new()),
        ["starlike", n, d, ..] => {
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Argument(format!("bad construction comment {tag:?}")))
            };
            let s = star_like_construction(parse(n)?, parse(d)?)?;
            if &s.drawing != drawing {
                return Err(Error::Argument(
                    "drawing differs from the construction it names".into(),
                ));
            }
            Ok(s.removed)
        }
        _ => Err(Error::Argument(format!(
            "unknown construction comment {tag:?}"
        ))),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn analyze(drawing: &GeometricDrawing, check_lemma: bool) -> regcross::Result<String> {
    let p = type_profile(drawing)?;
    let a = noncrossing_accounting(drawing)?;
    let mut s = String::new();
    let _ = writeln!(s, "n {}", p.n);
    let _ = writeln!(s, "d {}", p.d);
    let _ = writeln!(s, "crossings {}", a.crossings);
    let _ = writeln!(s, "noncrossing {}", a.non_crossing);
    let _ = writeln!(s, "pairs {}", a.pairs);
    let _ = writeln!(s, "max-type {}", p.max_type);
    let _ = writeln!(s, "endvertex-types {}", join(&p.y));
    for i in 0..=p.max_type {
        for j in i..=p.max_type {
            if p.x[i][j] > 0 {
                let _ = writeln!(s, "edge-type {i} {j} {}", p.x[i][j]);
            }
        }
    }
    let _ = writeln!(s, "accounting {}", a.m);
    let _ = writeln!(s, "accounting-min {}", min_noncrossing_pairs(p.n, p.d)?);
    let _ = writeln!(
        s,
        "identities {}",
        ok(p.edge_identity_holds() && p.vertex_identities_hold())
    );
    let _ = writeln!(s, "half-accounting {}", ok(a.half_accounting_holds()));
    if check_lemma {
        match coverage_of(&p) {
            CoverageVerdict::Ok => s.push_str("lemma ok\n"),
            CoverageVerdict::Counterexample {
                vertex,
                types,
                short_type,
            } => {
                let _ = writeln!(
                    s,
                    "lemma counterexample vertex {vertex} types {} short-type {short_type}",
                    join(&types)
                );
            }
        }
    }
    Ok(s)
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "violated"
    }
}

fn formula(n: usize, d: usize) -> regcross::Result<String> {
    let b = best_known(n, d)?;
    let status = if b.exact { "exact" } else { "conjectured" };
    Ok(format!(
        "n {n}\nd {d}\nlower {}\nupper {}\nstatus {status}\nprovenance {}\n",
        b.lower,
        b.upper,
        join(&b.provenance)
    ))
}

fn search_report(r: &SearchResult) -> String {
    let mut s = format!(
        "mode {}\nn {}\nd {}\nmax {}\n",
        r.mode, r.n, r.d, r.max_crossings
    );
    let _ = writeln!(
        s,
        "witness {}",
        join(r.witness.edges().iter().map(|(u, v)| format!("{u}-{v}")))
    );
    if let Some(w) = &r.witness_drawing {
        let _ = writeln!(s, "points {}", join(w.positions()));
    }
    s
}

fn cell(e: &TableEntry) -> String {
    let mark = match e.status {
        CellStatus::Proven => "",
        CellStatus::Conjectured => "*",
        CellStatus::Discrepancy => "!",
    };
    format!("{}{mark}", e.value)
}

fn table_text(rows: &[TableEntry]) -> String {
    let max_n = rows.iter().map(|e| e.n).max().unwrap_or(4);
    let mut s = String::from("d\\n");
    for n in 4..=max_n {
        let _ = write!(s, "{n:>7}");
    }
    s.push('\n');
    for d in 2..max_n {
        let _ = write!(s, "{d:<3}");
        for n in 4..=max_n {
            let text = rows
                .iter()
                .find(|e| e.n == n && e.d == d)
                .map_or_else(|| "-".to_string(), cell);
            let _ = write!(s, "{text:>7}");
        }
        s.push('\n');
    }
    s.push_str("* conjectured, ! discrepancy\n");
    for e in rows {
        if let Some(c) = e.convex {
            if c != e.value {
                let _ = writeln!(
                    s,
                    "({}, {}) convex search {c} differs from {}",
                    e.n, e.d, e.value
                );
            }
        }
        if let Some(p) = e.printed.filter(|&p| p != e.value) {
            let _ = writeln!(
                s,
                "({}, {}) discrepancy: formula {} vs printed {p}",
                e.n, e.d, e.value
            );
        }
    }
    let checked = rows.iter().filter(|e| e.convex.is_some()).count();
    if checked > 0 {
        let _ = writeln!(s, "convex search checked {checked} cells");
    }
    s
}

fn table_csv(rows: &[TableEntry]) -> String {
    let mut s = String::from("n,d,value,status\n");
    for e in rows {
        let _ = writeln!(s, "{},{},{},{}", e.n, e.d, e.value, e.status);
    }
    s
}
