//! `circperf`: verify, construct, enumerate, induce, check and draw perfect
//! colorings of circulant graphs.
//!
//! Exit status: 0 on success, 1 when a run completes with a negative verdict
//! (not perfect, counterexample), 2 on usage, input or resource errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use circperf::circulant::{AnyColoring, Coloring, ColoringDoc};
use circperf::constructors::{
    construct_4n, construct_4n_minus_2, construct_4n_plus_2, ColorSplit, MatchingSplit,
};
use circperf::dot::export_dot;
use circperf::enumeration::{
    canonical_form, enumerate_perfect_finite, enumerate_periodic_perfect, Budget, Symmetry,
};
use circperf::perfection::check_perfect;
use circperf::verification::{
    check_conjecture, check_theorem_k2, induce, lemma_regression_suite, CheckReport,
};
use circperf::{Color, DistanceSet, FiniteColoring, ParameterMatrix, PeriodicColoring};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "circperf",
    version,
    about = "Perfect colorings of circulant graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Limit on automaton window states per matrix.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_states: Option<u64>,
    /// Limit on k^t candidate words for finite searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_words: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a coloring from a JSON split specification.
    Construct {
        /// JSON file, `-` for stdin.
        #[arg(long)]
        input: PathBuf,
    },
    /// Check whether a coloring is perfect.
    Verify(VerifyArgs),
    /// List all perfect colorings.
    Enumerate(EnumerateArgs),
    /// Lift a perfect coloring of Ci_t(D) to Ci_inf(D).
    Induce(ColoringArgs),
    /// Compare the complete enumeration with the induced colorings.
    Check(CheckArgs),
    /// Draw a colored finite circulant as Graphviz DOT.
    ExportDot(ColoringArgs),
}

#[derive(Args, Debug)]
struct ColoringArgs {
    /// Distance set, e.g. `1,3`.
    #[arg(long, value_delimiter = ',', conflicts_with = "n")]
    distances: Option<Vec<u32>>,
    /// Use D_n = {1, 3, ..., 2n-1}.
    #[arg(long)]
    n: Option<usize>,
    /// Colors, e.g. `1,2,1,1`.
    #[arg(long, value_delimiter = ',', conflicts_with = "input")]
    coloring: Option<Vec<Color>>,
    /// Coloring JSON file, `-` for stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    coloring: ColoringArgs,
    /// Order of the finite circulant; must equal the coloring length.
    #[arg(long, conflicts_with = "infinite")]
    t: Option<usize>,
    /// Treat the colors as one period of a coloring of Ci_inf(D).
    #[arg(long)]
    infinite: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(
        long,
        required_unless_present = "infinite",
        conflicts_with = "infinite"
    )]
    t: Option<usize>,
    #[arg(long)]
    infinite: bool,
    #[arg(long, required_unless_present = "distances")]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', conflicts_with = "n")]
    distances: Option<Vec<u32>>,
    #[arg(long)]
    k: usize,
    /// Symmetries to quotient by: `rotation`, `reflection`, `colors`, `none`.
    #[arg(long, default_value = "rotation,colors")]
    symmetry: String,
    /// Limit for this search: words for `--t`, states for `--infinite`.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
#[group(id = "mode", required = true, multiple = false)]
struct CheckModes {
    /// Set equality for 2-colorings.
    #[arg(long, group = "mode")]
    theorem_k2: bool,
    /// Set comparison at k colors.
    #[arg(long, group = "mode", requires = "k")]
    conjecture: bool,
    /// Structural statements over all perfect 2-colorings.
    #[arg(long, group = "mode")]
    lemmas: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    mode: CheckModes,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
}

/// Input for `construct`.
#[derive(Deserialize, Debug)]
#[serde(tag = "family")]
enum ConstructSpec {
    #[serde(rename = "4n")]
    FourN {
        n: usize,
        k: usize,
        even: Vec<Color>,
        odd: Vec<Color>,
    },
    #[serde(rename = "4n+2")]
    FourNPlus2 {
        n: usize,
        split: ColorSplit,
        matching: MatchingSplit,
    },
    #[serde(rename = "4n-2")]
    FourNMinus2 {
        n: usize,
        split: ColorSplit,
        matching: MatchingSplit,
    },
}

/// A coloring in the shared schema plus its parameter matrix.
#[derive(Serialize)]
struct ColoringLine<'a> {
    #[serde(flatten)]
    doc: &'a ColoringDoc,
    matrix: Option<Vec<Vec<u32>>>,
}

enum Failure {
    /// Completed with a negative verdict.
    Negative(String),
    Usage(String),
}

impl From<circperf::Error> for Failure {
    fn from(e: circperf::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o: {e}"))
    }
}

type Run<T = ()> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(Failure::Usage(msg.into()))
}

struct Output {
    text: String,
    /// Set when the run completed but the answer is negative.
    negative: Option<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Self {
            text,
            negative: None,
        }
    }
}

fn read_input(path: &Path) -> Run<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::Read::read_to_string(&mut io::stdin(), &mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
    }
}

fn distances(list: &Option<Vec<u32>>, n: Option<usize>) -> Run<Option<DistanceSet>> {
    match (list, n) {
        (Some(d), _) => Ok(Some(DistanceSet::new(d.clone())?)),
        (None, Some(n)) => Ok(Some(DistanceSet::odd(n)?)),
        (None, None) => Ok(None),
    }
}

/// The coloring words plus distance set given on the command line or in a
/// JSON file; flags override the file's distances.
fn load(args: &ColoringArgs) -> Run<(Vec<Color>, Option<AnyColoring>, DistanceSet)> {
    let flag_dset = distances(&args.distances, args.n)?;
    if let Some(path) = &args.input {
        let doc = ColoringDoc::from_json(&read_input(path)?)
            .map_err(|e| Failure::Usage(format!("malformed JSON input: {e}")))?;
        let (coloring, dset) = doc.into_parts()?;
        return Ok((
            coloring.word().to_vec(),
            Some(coloring),
            flag_dset.unwrap_or(dset),
        ));
    }
    let Some(word) = &args.coloring else {
        return usage("give --coloring or --input");
    };
    let Some(dset) = flag_dset else {
        return usage("give --distances or --n");
    };
    Ok((word.clone(), None, dset))
}

fn matrix_table(m: &ParameterMatrix) -> String {
    let mut s = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        writeln!(s, "  {}", cells.join("")).unwrap();
    }
    s
}

fn coloring_json<C: Coloring>(
    c: &C,
    dset: &DistanceSet,
    matrix: Option<&ParameterMatrix>,
) -> String {
    let doc = ColoringDoc::new(c, dset);
    serde_json::to_string(&ColoringLine {
        doc: &doc,
        matrix: matrix.map(|m| m.to_rows()),
    })
    .expect("coloring serializes")
}

fn verify(args: &VerifyArgs, format: Format) -> Run<Output> {
    let (word, parsed, dset) = load(&args.coloring)?;
    let periodic = args.infinite || matches!(parsed, Some(AnyColoring::Periodic(_)));
    if let Some(t) = args.t {
        if t != word.len() {
            return usage(format!(
                "--t {t} but the coloring has {} colors",
                word.len()
            ));
        }
    }
    let verdict = if periodic {
        check_perfect(&PeriodicColoring::from_word(word.clone())?, &dset)
    } else {
        check_perfect(&FiniteColoring::from_word(word.clone())?, &dset)
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&verdict).expect("verdict serializes") + "\n",
        Format::Table | Format::Dot => {
            let graph = if periodic {
                format!("Ci_inf({dset})")
            } else {
                format!("Ci_{}({dset})", word.len())
            };
            match (verdict.matrix(), verdict.witness()) {
                (Some(m), _) => format!("perfect on {graph}\n{}", matrix_table(m)),
                (None, Some((u, v))) => format!(
                    "not perfect on {graph}: vertices {u} and {v} share color {} but not neighbor counts\n",
                    word[u]
                ),
                (None, None) => format!("not perfect on {graph}\n"),
            }
        }
    };
    Ok(Output {
        text,
        negative: (!verdict.is_perfect()).then(|| "coloring is not perfect".to_string()),
    })
}

fn enumerate(args: &EnumerateArgs, format: Format, mut budget: Budget) -> Run<Output> {
    let sym: Symmetry = args.symmetry.parse()?;
    let dset = distances(&args.distances, args.n)?.expect("clap requires one");
    let mut lines = String::new();
    let mut emit = |line: String| {
        lines.push_str(&line);
        lines.push('\n');
    };
    if args.infinite {
        let Some(n) = dset.odd_continuous_n() else {
            return usage(format!(
                "--infinite needs D_n = {{1,3,...,2n-1}}, got {dset}"
            ));
        };
        if let Some(b) = args.budget {
            budget.states = b;
        }
        let result = enumerate_periodic_perfect(n, args.k, None, &budget)?;
        // periodic results are already canonical under rotation
        let mut seen = BTreeSet::new();
        for f in &result.colorings {
            let word = canonical_form(f.coloring.word(), sym);
            if !seen.insert(word.clone()) {
                continue;
            }
            let c = PeriodicColoring::new(word, args.k)?;
            let m = check_perfect(&c, &dset).into_matrix();
            emit(match format {
                Format::Table => format!("{c}  {}", m.map(|m| m.to_string()).unwrap_or_default()),
                _ => coloring_json(&c, &dset, m.as_ref()),
            });
        }
        eprintln!(
            "{} colorings; {} matrices, {} states, {} cycles",
            seen.len(),
            result.stats.matrices_tried,
            result.stats.states_explored,
            result.stats.cycles_found
        );
    } else {
        let t = args.t.expect("clap requires --t");
        if let Some(b) = args.budget {
            budget.words = b;
        }
        let result = enumerate_perfect_finite(t, &dset, args.k, sym, &budget)?;
        for f in &result.colorings {
            emit(match format {
                Format::Table => format!("{}  {}", f.coloring, f.matrix),
                _ => coloring_json(&f.coloring, &dset, Some(&f.matrix)),
            });
        }
        eprintln!(
            "{} colorings; {} search nodes",
            result.len(),
            result.stats.states_explored
        );
    }
    Ok(Output::ok(lines))
}

fn induce_cmd(args: &ColoringArgs, format: Format) -> Run<Output> {
    let (word, parsed, dset) = load(args)?;
    if matches!(parsed, Some(AnyColoring::Periodic(_))) {
        return usage("induce takes a finite coloring");
    }
    let c = FiniteColoring::from_word(word)?;
    let verdict = check_perfect(&c, &dset);
    if !verdict.is_perfect() {
        return Err(Failure::Negative(format!(
            "{c} is not perfect on Ci_{}({dset})",
            c.order()
        )));
    }
    let p = induce(&c, &dset)?;
    let m = verdict.matrix();
    let text = match format {
        Format::Table => format!("{p}\n{}", m.map(matrix_table).unwrap_or_default()),
        _ => coloring_json(&p, &dset, m) + "\n",
    };
    Ok(Output::ok(text))
}

fn report_table(r: &CheckReport) -> String {
    let mut s = String::new();
    let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
    writeln!(
        s,
        "n = {}, k = {}: {}",
        r.n,
        r.k,
        verdict.as_str().unwrap_or_default()
    )
    .unwrap();
    writeln!(
        s,
        "  enumerated  {:>6}  ({} up to colors)",
        r.enumerated_count, r.enumerated_classes
    )
    .unwrap();
    writeln!(
        s,
        "  induced     {:>6}  ({} up to colors)",
        r.induced_count, r.induced_classes
    )
    .unwrap();
    writeln!(s, "  missing     {:>6}", r.missing.len()).unwrap();
    writeln!(s, "  not found   {:>6}", r.extra_sources.len()).unwrap();
    writeln!(s, "  path only   {:>6}", r.path_only.len()).unwrap();
    for e in &r.missing {
        let w: Vec<String> = e.word.iter().map(|c| c.to_string()).collect();
        writeln!(s, "  missing: [{}]", w.join(",")).unwrap();
    }
    s
}

fn check(args: &CheckArgs, format: Format, budget: Budget) -> Run<Output> {
    if args.mode.lemmas {
        let r = lemma_regression_suite(args.n, &budget)?;
        let text = match format {
            Format::Table => {
                let mut s = format!(
                    "n = {}: {} colorings, sums {:?}\n",
                    r.n, r.colorings, r.sums_realized
                );
                for l in &r.lemmas {
                    let state = if l.passed { "pass" } else { "FAIL" };
                    writeln!(s, "  {:<20} {state}  ({} checked)", l.name, l.checked).unwrap();
                }
                s
            }
            _ => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
        };
        return Ok(Output {
            text,
            negative: (!r.all_passed()).then(|| "a lemma check failed".to_string()),
        });
    }
    let report = if args.mode.theorem_k2 {
        if args.k.is_some_and(|k| k != 2) {
            return usage("--theorem-k2 is for k = 2");
        }
        check_theorem_k2(args.n, &budget)?
    } else {
        check_conjecture(args.n, args.k.expect("clap requires --k"), &budget)?
    };
    eprintln!(
        "enumeration {:.3?}, induction {:.3?}",
        report.timings.enumerate, report.timings.induce
    );
    let text = match format {
        Format::Table => report_table(&report),
        _ => {
            eprint!("{}", report_table(&report));
            report.to_json() + "\n"
        }
    };
    Ok(Output {
        text,
        negative: (!report.is_confirmed()).then(|| "comparison did not confirm".to_string()),
    })
}

fn construct(input: &Path, format: Format) -> Run<Output> {
    let spec: ConstructSpec = serde_json::from_str(&read_input(input)?)
        .map_err(|e| Failure::Usage(format!("malformed JSON input: {e}")))?;
    let (n, c) = match &spec {
        ConstructSpec::FourN { n, k, even, odd } => (*n, construct_4n(*n, *k, even, odd)?),
        ConstructSpec::FourNPlus2 { n, split, matching } => {
            (*n, construct_4n_plus_2(*n, split, matching)?)
        }
        ConstructSpec::FourNMinus2 { n, split, matching } => {
            (*n, construct_4n_minus_2(*n, split, matching)?)
        }
    };
    let dset = DistanceSet::odd(n)?;
    let verdict = check_perfect(&c, &dset);
    let text = match format {
        Format::Table => format!(
            "{c}\n{}",
            verdict.matrix().map(matrix_table).unwrap_or_default()
        ),
        Format::Dot => export_dot(&c, &dset)?,
        Format::Json => ColoringDoc::new(&c, &dset).to_json() + "\n",
    };
    Ok(Output {
        text,
        negative: (!verdict.is_perfect())
            .then(|| "constructed coloring is not perfect".to_string()),
    })
}

fn export(args: &ColoringArgs) -> Run<Output> {
    let (word, parsed, dset) = load(args)?;
    if matches!(parsed, Some(AnyColoring::Periodic(_))) {
        return usage("export-dot takes a finite coloring");
    }
    Ok(Output::ok(export_dot(
        &FiniteColoring::from_word(word)?,
        &dset,
    )?))
}

fn run(cli: &Cli) -> Run {
    let mut budget = Budget::default();
    if let Some(s) = cli.budget_states {
        budget.states = s;
    }
    if let Some(w) = cli.budget_words {
        budget.words = w;
    }
    let out = match &cli.command {
        Command::Construct { input } => construct(input, cli.format)?,
        Command::Verify(a) => verify(a, cli.format)?,
        Command::Enumerate(a) => enumerate(a, cli.format, budget)?,
        Command::Induce(a) => induce_cmd(a, cli.format)?,
        Command::Check(a) => check(a, cli.format, budget)?,
        Command::ExportDot(a) => export(a)?,
    };
    match &cli.out {
        Some(path) => fs::write(path, &out.text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => io::stdout().lock().write_all(out.text.as_bytes())?,
    }
    match out.negative {
        Some(msg) => Err(Failure::Negative(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
