//! Command-line front end: compute index tables, evaluate the bound
//! registry, run extremal tree searches, and drive verification suites.
//!
//! Output contract: tables print floats to 7 decimal places; JSON and CSV
//! print full precision (shortest round-trip). Identical invocations with
//! identical seeds produce byte-identical output. Exit status is 0 iff
//! every input parsed and every check passed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use banso::{
    all_indices, bso, check_all_bounds, chemical_bso_upper_bound, enumerate_chemical_trees,
    enumerate_trees, extremal_search, parse_edge_list, parse_graph6, verification_corpus, BoundId,
    BoundOutcome, CorpusOptions, EqualityCondition, Graph, IndexKind, TreeFamily, DEFAULT_TOL,
    MAX_TREE_ORDER,
};

#[derive(Parser)]
#[command(
    name = "banso",
    version,
    about = "Degree-based topological indices, bound verification, and extremal tree search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all ten vertex-degree-based indices for each input graph.
    Indices(IndicesArgs),
    /// Evaluate the 27-entry bound registry on each input graph.
    Bounds(BoundsArgs),
    /// Exhaustive minimum/maximum of an index over trees of order n.
    Extremal(ExtremalArgs),
    /// Run a verification suite and print a pass/fail summary.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// graph6: one graph per line.
    G6,
    /// Edge list: one `u v` pair per line, whole file is one graph.
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Bound sweep over the full corpus plus tree checks.
    Default,
    /// Tree enumeration, extremal, and chemical-bound checks only.
    Trees,
    /// Bound sweep over structured families plus seeded random graphs.
    Random,
}

#[derive(Args)]
struct IndicesArgs {
    /// Input files (.g6 or .edges; see --input-format).
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Override the per-file format inferred from the extension.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Restrict output to one index kind (tag, e.g. BSO or SDD).
    #[arg(long)]
    index: Option<String>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Input files (.g6 or .edges; see --input-format).
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Override the per-file format inferred from the extension.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Relative tolerance for holds/equality decisions.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Restrict output to one bound (e.g. "T3.4" or "C3.3-lower").
    #[arg(long)]
    id: Option<String>,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Tree order.
    #[arg(long)]
    n: usize,
    /// Restrict the search to chemical trees (max degree 4).
    #[arg(long)]
    chemical: bool,
    /// Index to optimize (tag, e.g. BSO).
    #[arg(long, default_value = "BSO")]
    index: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::Default)]
    suite: Suite,
    /// Seed for the random part of the corpus.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of random connected graphs in the corpus.
    #[arg(long, default_value_t = 1000)]
    count: usize,
    /// Largest tree order exercised by the tree checks.
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Relative tolerance for bound and equality decisions.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns `Ok(true)` when every input parsed and every check passed.
fn run() -> Result<bool> {
    match Cli::parse().command {
        Command::Indices(args) => run_indices(args),
        Command::Bounds(args) => run_bounds(args),
        Command::Extremal(args) => run_extremal(args),
        Command::Verify(args) => run_verify(args),
    }
}

// ---------------------------------------------------------------------
// Input loading
// ---------------------------------------------------------------------

struct LoadedGraph {
    label: String,
    graph: Graph,
}

/// Reads every input file, collecting graphs and per-line error messages.
fn load_inputs(
    paths: &[PathBuf],
    forced: Option<InputFormat>,
    errors: &mut Vec<String>,
) -> Vec<LoadedGraph> {
    let mut graphs = Vec::new();
    for path in paths {
        let format = match forced.or_else(|| infer_format(path)) {
            Some(f) => f,
            None => {
                errors.push(format!(
                    "{}: cannot infer input format from extension (expected .g6 or .edges); \
                     pass --input-format",
                    path.display()
                ));
                continue;
            }
        };
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                errors.push(format!("{}: {e}", path.display()));
                continue;
            }
        };
        match format {
            InputFormat::G6 => {
                for (idx, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    let label = format!("{}:{}", path.display(), idx + 1);
                    match parse_graph6(line) {
                        Ok(graph) => graphs.push(LoadedGraph { label, graph }),
                        Err(e) => errors.push(format!("{label}: {e}")),
                    }
                }
            }
            InputFormat::Edges => match parse_edge_list(&text) {
                Ok(graph) => graphs.push(LoadedGraph {
                    label: path.display().to_string(),
                    graph,
                }),
                Err(e) => errors.push(format!("{}: {e}", path.display())),
            },
        }
    }
    graphs
}

fn infer_format(path: &Path) -> Option<InputFormat> {
    match path.extension()?.to_str()? {
        "g6" => Some(InputFormat::G6),
        "edges" => Some(InputFormat::Edges),
        _ => None,
    }
}

// ---------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------

/// Left-aligned table with a header row, columns separated by two spaces.
fn print_table(headers: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let render = |cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i + 1 == cells.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
        }
        line
    };
    let header: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    println!("{}", render(&header));
    for row in rows {
        println!("{}", render(row));
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_csv(headers: &[&str], rows: &[Vec<String>]) {
    println!("{}", headers.join(","));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
        println!("{}", cells.join(","));
    }
}

/// Full-precision float rendering for CSV cells (shortest round-trip).
fn float_cell(v: Option<f64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn bool_cell(v: Option<bool>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// 7-decimal float rendering for table cells, `-` when absent.
fn table_float(v: Option<f64>) -> String {
    v.map(|v| format!("{v:.7}")).unwrap_or_else(|| "-".into())
}

fn table_bool(v: Option<bool>) -> String {
    v.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

fn report_errors(errors: &[String]) {
    for e in errors {
        eprintln!("error: {e}");
    }
}

// ---------------------------------------------------------------------
// indices
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct IndexRow {
    graph: String,
    index: IndexKind,
    value: f64,
}

fn run_indices(args: IndicesArgs) -> Result<bool> {
    let filter = args
        .index
        .as_deref()
        .map(IndexKind::from_str)
        .transpose()
        .map_err(|e| anyhow!(e))?;

    let mut errors = Vec::new();
    let graphs = load_inputs(&args.inputs, args.input_format, &mut errors);

    let mut rows = Vec::new();
    for lg in &graphs {
        match all_indices(&lg.graph) {
            Ok(values) => {
                for v in values {
                    if filter.map_or(true, |k| k == v.kind) {
                        rows.push(IndexRow {
                            graph: lg.label.clone(),
                            index: v.kind,
                            value: v.value,
                        });
                    }
                }
            }
            Err(e) => errors.push(format!("{}: {e}", lg.label)),
        }
    }

    match args.format {
        OutputFormat::Json => println!("{}", serde_json::to_string(&rows)?),
        OutputFormat::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.graph.clone(), r.index.to_string(), r.value.to_string()])
                .collect();
            print_csv(&["graph", "index", "value"], &cells);
        }
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.graph.clone(),
                        r.index.to_string(),
                        format!("{:.7}", r.value),
                    ]
                })
                .collect();
            print_table(&["graph", "index", "value"], &cells);
        }
    }
    report_errors(&errors);
    Ok(errors.is_empty())
}

// ---------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------

/// One output row: a graph label plus the flat bound record.
#[derive(Serialize)]
struct BoundRow {
    graph: String,
    id: String,
    lhs: Option<f64>,
    rhs: Option<f64>,
    slack: Option<f64>,
    holds: Option<bool>,
    equality_detected: Option<bool>,
    equality_predicted: Option<bool>,
    consistent: Option<bool>,
    skipped: bool,
    skip_reason: Option<String>,
}

const BOUND_HEADERS: [&str; 11] = [
    "graph",
    "id",
    "lhs",
    "rhs",
    "slack",
    "holds",
    "equality_detected",
    "equality_predicted",
    "consistent",
    "skipped",
    "skip_reason",
];

fn run_bounds(args: BoundsArgs) -> Result<bool> {
    if args.tol.is_nan() || args.tol <= 0.0 {
        bail!("--tol must be positive, got {}", args.tol);
    }
    let filter = args
        .id
        .as_deref()
        .map(BoundId::from_str)
        .transpose()
        .map_err(|e| anyhow!(e))?;

    let mut errors = Vec::new();
    let graphs = load_inputs(&args.inputs, args.input_format, &mut errors);

    let mut rows = Vec::new();
    let mut violations = 0usize;
    for lg in &graphs {
        for outcome in check_all_bounds(&lg.graph, args.tol) {
            if filter.is_some_and(|id| id != outcome.id()) {
                continue;
            }
            let r = outcome.record();
            if r.holds == Some(false) || r.consistent == Some(false) {
                violations += 1;
            }
            rows.push(BoundRow {
                graph: lg.label.clone(),
                id: r.id,
                lhs: r.lhs,
                rhs: r.rhs,
                slack: r.slack,
                holds: r.holds,
                equality_detected: r.equality_detected,
                equality_predicted: r.equality_predicted,
                consistent: r.consistent,
                skipped: r.skipped,
                skip_reason: r.skip_reason,
            });
        }
    }

    match args.format {
        OutputFormat::Json => println!("{}", serde_json::to_string(&rows)?),
        OutputFormat::Csv => {
            let cells: Vec<Vec<String>> = rows.iter().map(bound_cells_csv).collect();
            print_csv(&BOUND_HEADERS, &cells);
        }
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> = rows.iter().map(bound_cells_table).collect();
            print_table(&BOUND_HEADERS, &cells);
        }
    }
    report_errors(&errors);
    Ok(errors.is_empty() && violations == 0)
}

fn bound_cells_table(r: &BoundRow) -> Vec<String> {
    vec![
        r.graph.clone(),
        r.id.clone(),
        table_float(r.lhs),
        table_float(r.rhs),
        table_float(r.slack),
        table_bool(r.holds),
        table_bool(r.equality_detected),
        table_bool(r.equality_predicted),
        table_bool(r.consistent),
        r.skipped.to_string(),
        r.skip_reason.clone().unwrap_or_else(|| "-".into()),
    ]
}

fn bound_cells_csv(r: &BoundRow) -> Vec<String> {
    vec![
        r.graph.clone(),
        r.id.clone(),
        float_cell(r.lhs),
        float_cell(r.rhs),
        float_cell(r.slack),
        bool_cell(r.holds),
        bool_cell(r.equality_detected),
        bool_cell(r.equality_predicted),
        bool_cell(r.consistent),
        r.skipped.to_string(),
        r.skip_reason.clone().unwrap_or_default(),
    ]
}

// ---------------------------------------------------------------------
// extremal
// ---------------------------------------------------------------------

/// The extremal record plus closed-form agreement flags.
#[derive(Serialize)]
struct ExtremalRow {
    n: usize,
    chemical: bool,
    index: IndexKind,
    min_value: f64,
    max_value: f64,
    closed_form_min: Option<f64>,
    closed_form_max: Option<f64>,
    min_trees: Vec<String>,
    max_trees: Vec<String>,
    tree_count: u64,
    min_matches_closed_form: Option<bool>,
    max_matches_closed_form: Option<bool>,
}

fn matches_closed_form(value: f64, closed_form: Option<f64>) -> Option<bool> {
    closed_form.map(|cf| (value - cf).abs() <= 1e-9 * cf.abs().max(1.0))
}

fn run_extremal(args: ExtremalArgs) -> Result<bool> {
    if args.n < 3 {
        bail!(
            "extremal search over trees starts at n = 3 (got n = {}); supported range 3..={}",
            args.n,
            MAX_TREE_ORDER
        );
    }
    let index = IndexKind::from_str(&args.index).map_err(|e| anyhow!(e))?;
    let result = extremal_search(
        TreeFamily {
            n: args.n,
            chemical: args.chemical,
        },
        index,
    )
    .with_context(|| format!("extremal search failed for n = {}", args.n))?;
    let record = result.record();
    let row = ExtremalRow {
        min_matches_closed_form: matches_closed_form(record.min_value, record.closed_form_min),
        max_matches_closed_form: matches_closed_form(record.max_value, record.closed_form_max),
        n: record.n,
        chemical: record.chemical,
        index: record.index,
        min_value: record.min_value,
        max_value: record.max_value,
        closed_form_min: record.closed_form_min,
        closed_form_max: record.closed_form_max,
        min_trees: record.min_trees,
        max_trees: record.max_trees,
        tree_count: record.tree_count,
    };

    let fields: Vec<(&str, String, String)> = vec![
        // (name, table rendering, csv rendering)
        ("n", row.n.to_string(), row.n.to_string()),
        (
            "chemical",
            row.chemical.to_string(),
            row.chemical.to_string(),
        ),
        ("index", row.index.to_string(), row.index.to_string()),
        (
            "min_value",
            format!("{:.7}", row.min_value),
            row.min_value.to_string(),
        ),
        (
            "max_value",
            format!("{:.7}", row.max_value),
            row.max_value.to_string(),
        ),
        (
            "closed_form_min",
            table_float(row.closed_form_min),
            float_cell(row.closed_form_min),
        ),
        (
            "closed_form_max",
            table_float(row.closed_form_max),
            float_cell(row.closed_form_max),
        ),
        (
            "min_trees",
            row.min_trees.join(" "),
            row.min_trees.join(" "),
        ),
        (
            "max_trees",
            row.max_trees.join(" "),
            row.max_trees.join(" "),
        ),
        (
            "tree_count",
            row.tree_count.to_string(),
            row.tree_count.to_string(),
        ),
        (
            "min_matches_closed_form",
            table_bool(row.min_matches_closed_form),
            bool_cell(row.min_matches_closed_form),
        ),
        (
            "max_matches_closed_form",
            table_bool(row.max_matches_closed_form),
            bool_cell(row.max_matches_closed_form),
        ),
    ];
    match args.format {
        OutputFormat::Json => println!("{}", serde_json::to_string(&row)?),
        OutputFormat::Csv => {
            let headers: Vec<&str> = fields.iter().map(|(h, _, _)| *h).collect();
            let cells = vec![fields.iter().map(|(_, _, c)| c.clone()).collect::<Vec<_>>()];
            print_csv(&headers, &cells);
        }
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> = fields
                .iter()
                .map(|(h, t, _)| vec![h.to_string(), t.clone()])
                .collect();
            print_table(&["field", "value"], &cells);
        }
    }
    // Disagreement with a known closed form is a failed check.
    Ok(row.min_matches_closed_form != Some(false) && row.max_matches_closed_form != Some(false))
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct CheckRow {
    check: String,
    pass: bool,
    detail: String,
}

/// Classical counts of unlabeled trees (OEIS A000055) and of those with
/// maximum degree at most 4 (OEIS A000602), for n = 1..10.
const FREE_TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
const CHEMICAL_TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 5, 9, 18, 35, 75];

/// Bounds whose printed equality conditions are open questions; equality
/// mismatches there are reported but do not fail the suite.
const OPEN_QUESTION_BOUNDS: [BoundId; 6] = [
    BoundId::T3_8,
    BoundId::T3_10,
    BoundId::C3_3Lower,
    BoundId::C3_3Upper,
    BoundId::C3_4Lower,
    BoundId::C3_4Upper,
];

fn run_verify(args: VerifyArgs) -> Result<bool> {
    if args.tol.is_nan() || args.tol <= 0.0 {
        bail!("--tol must be positive, got {}", args.tol);
    }
    if args.max_n > MAX_TREE_ORDER {
        bail!("--max-n at most {MAX_TREE_ORDER}, got {}", args.max_n);
    }

    let mut rows: Vec<CheckRow> = Vec::new();
    if args.suite != Suite::Trees {
        bound_sweep_checks(&args, &mut rows);
    }
    if args.suite != Suite::Random {
        tree_checks(&args, &mut rows);
    }

    let all_pass = rows.iter().all(|r| r.pass);
    match args.format {
        OutputFormat::Json => println!("{}", serde_json::to_string(&rows)?),
        OutputFormat::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.check.clone(), r.pass.to_string(), r.detail.clone()])
                .collect();
            print_csv(&["check", "pass", "detail"], &cells);
        }
        OutputFormat::Table => {
            for r in &rows {
                let status = if r.pass { "PASS" } else { "FAIL" };
                println!("{status}  {}  ({})", r.check, r.detail);
            }
            let verdict = if all_pass {
                "all checks passed"
            } else {
                "checks FAILED"
            };
            println!("summary: {} checks, {verdict}", rows.len());
        }
    }
    Ok(all_pass)
}

/// Sweeps the bound registry over the corpus; one summary row per bound.
fn bound_sweep_checks(args: &VerifyArgs, rows: &mut Vec<CheckRow>) {
    let opts = CorpusOptions {
        random_count: args.count,
        seed: args.seed,
        ..CorpusOptions::default()
    };
    let corpus = verification_corpus(&opts);

    #[derive(Default, Clone, Copy)]
    struct Tally {
        evaluated: usize,
        skipped: usize,
        holds_violations: usize,
        equality_mismatches: usize,
        open_question_mismatches: usize,
    }
    let mut tallies = vec![Tally::default(); BoundId::ALL.len()];

    for (_, g) in &corpus {
        for outcome in check_all_bounds(g, args.tol) {
            let slot = BoundId::ALL
                .iter()
                .position(|id| *id == outcome.id())
                .unwrap();
            let t = &mut tallies[slot];
            match outcome {
                BoundOutcome::Skipped { .. } => t.skipped += 1,
                BoundOutcome::Evaluated(r) => {
                    t.evaluated += 1;
                    if !r.holds {
                        t.holds_violations += 1;
                    }
                    if !r.consistent
                        && r.id.equality_condition() != EqualityCondition::NotApplicable
                    {
                        if OPEN_QUESTION_BOUNDS.contains(&r.id) {
                            t.open_question_mismatches += 1;
                        } else {
                            t.equality_mismatches += 1;
                        }
                    }
                }
            }
        }
    }

    for (id, t) in BoundId::ALL.iter().zip(&tallies) {
        let mut detail = format!(
            "graphs {}, evaluated {}, skipped {}, violations {}, equality mismatches {}",
            corpus.len(),
            t.evaluated,
            t.skipped,
            t.holds_violations,
            t.equality_mismatches
        );
        if t.open_question_mismatches > 0 {
            detail.push_str(&format!(
                ", open-question equality mismatches {} (reported, not failing)",
                t.open_question_mismatches
            ));
        }
        rows.push(CheckRow {
            check: format!("bound {id}"),
            pass: t.holds_violations == 0 && t.equality_mismatches == 0,
            detail,
        });
    }
}

/// Tree enumeration counts, free-tree extremal shape, and the chemical
/// upper bound, up to `--max-n`.
fn tree_checks(args: &VerifyArgs, rows: &mut Vec<CheckRow>) {
    // Counts against the classical tables.
    let top = args.max_n.min(FREE_TREE_COUNTS.len());
    let mut counts_ok = true;
    let mut failures = Vec::new();
    for n in 1..=top {
        let free = enumerate_trees(n).expect("order within range").count();
        let chem = enumerate_chemical_trees(n)
            .expect("order within range")
            .count();
        if free != FREE_TREE_COUNTS[n - 1] || chem != CHEMICAL_TREE_COUNTS[n - 1] {
            counts_ok = false;
            failures.push(format!("n={n}: free {free}, chemical {chem}"));
        }
    }
    rows.push(CheckRow {
        check: format!("tree counts n = 1..{top}"),
        pass: counts_ok,
        detail: if counts_ok {
            "free and chemical counts match the classical tables".into()
        } else {
            failures.join("; ")
        },
    });

    // Free-tree extremal shape per order.
    for n in 4..=args.max_n {
        let row = free_extremal_check(n, args.tol);
        rows.push(row);
    }

    // Chemical upper bound for the supported orders.
    for n in (5..=args.max_n).filter(|n| n % 3 == 2) {
        rows.push(chemical_bound_check(n, args.tol));
    }
}

fn free_extremal_check(n: usize, tol: f64) -> CheckRow {
    let check = format!("extremal trees n = {n}");
    let result = match extremal_search(TreeFamily { n, chemical: false }, IndexKind::Bso) {
        Ok(r) => r,
        Err(e) => {
            return CheckRow {
                check,
                pass: false,
                detail: e.to_string(),
            }
        }
    };
    let mut problems = Vec::new();
    match (result.closed_form_min, result.closed_form_max) {
        (Some(cf_min), Some(cf_max)) => {
            if (result.min_value - cf_min).abs() > tol * cf_min.abs().max(1.0) {
                problems.push(format!("min {} != closed form {cf_min}", result.min_value));
            }
            if (result.max_value - cf_max).abs() > tol * cf_max.abs().max(1.0) {
                problems.push(format!("max {} != closed form {cf_max}", result.max_value));
            }
        }
        _ => problems.push("missing closed forms".into()),
    }
    if result.min_trees.len() != 1
        || result.min_trees[0]
            .degrees()
            .iter()
            .filter(|&&d| d == 1)
            .count()
            != 2
    {
        problems.push("minimum not attained uniquely by the path".into());
    }
    if result.max_trees.len() != 1
        || result.max_trees[0].max_degree() != result.max_trees[0].n() as u32 - 1
    {
        problems.push("maximum not attained uniquely by the star".into());
    }
    if problems.is_empty() {
        CheckRow {
            check,
            pass: true,
            detail: format!(
                "{} trees, min/max match closed forms, unique path/star attainers",
                result.tree_count
            ),
        }
    } else {
        CheckRow {
            check,
            pass: false,
            detail: problems.join("; "),
        }
    }
}

fn chemical_bound_check(n: usize, tol: f64) -> CheckRow {
    let check = format!("chemical bound n = {n}");
    let ub = match chemical_bso_upper_bound(n) {
        Ok(v) => v,
        Err(e) => {
            return CheckRow {
                check,
                pass: false,
                detail: e.to_string(),
            }
        }
    };
    let stream = match enumerate_chemical_trees(n) {
        Ok(s) => s,
        Err(e) => {
            return CheckRow {
                check,
                pass: false,
                detail: e.to_string(),
            }
        }
    };
    let mut trees = 0usize;
    let mut attaining = 0usize;
    for t in stream {
        trees += 1;
        let v = match bso(&t) {
            Ok(v) => v,
            Err(e) => {
                return CheckRow {
                    check,
                    pass: false,
                    detail: e.to_string(),
                }
            }
        };
        if v > ub + tol {
            return CheckRow {
                check,
                pass: false,
                detail: format!("tree with bso {v} exceeds bound {ub}"),
            };
        }
        let detected = (v - ub).abs() <= tol * ub.abs().max(1.0);
        let n2 = t.degrees().iter().filter(|&&d| d == 2).count();
        let n3 = t.degrees().iter().filter(|&&d| d == 3).count();
        if detected != (n2 == 0 && n3 == 0) {
            return CheckRow {
                check,
                pass: false,
                detail: format!("equality mismatch: detected {detected}, n2 {n2}, n3 {n3}"),
            };
        }
        attaining += usize::from(detected);
    }
    CheckRow {
        check,
        pass: true,
        detail: format!(
            "{trees} chemical trees under bound {ub:.7}, {attaining} attaining, \
             equality set = {{n2 = n3 = 0}}"
        ),
    }
}
