//! The `platonic` command.
//!
//! Reports go to stdout as pretty JSON (or CSV where asked). Failures go to
//! stderr as `{"schema": "error/v1", "error": {"kind", "message"}}`.
//! Exit codes: 0 valid, 1 domain violation, 2 usage or malformed input.
//!
//! Generated files without an explicit path land in `--out-dir`, which
//! defaults to `$PLATONIC_OUT_DIR` and then the working directory.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use platonic_core::elements::enumerate_decompositions;
use platonic_core::exactnum::parse_rational;
use platonic_core::proportion::{
    check_two_means, construct_mean, construct_two_means, default_tolerance, default_width, Magnitude, MeanChain,
};
use platonic_core::simulate::{conservation_report, run};
use platonic_core::tiling::{
    cornford_scale, economical_equilateral, economical_square, revisited_face, symmetry_order, timaeus_equilateral,
    timaeus_square, validate, BasicKind, Dissection, Violation, DEFAULT_GRID,
};
use platonic_core::{FieldValue, Rational};
use serde::Serialize;

use crate::reactions::{default_rules, parse_reaction, parse_rules, parse_state, state_doc, ReactionReport, TermDoc};
use crate::trace::{budgets_csv, decompositions_csv, to_json_lines, BudgetDoc};
use crate::values::{parse_field, ExactValue, IntervalValue, RationalValue};
use crate::{svg, FormatError, SCHEMA_VERSION};

/// Name of the environment variable holding the default output directory.
pub const OUT_DIR_ENV: &str = "PLATONIC_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "platonic", version, about = "Exact means, face dissections and element transformations")]
pub struct Cli {
    /// Directory for generated files that have no explicit path.
    #[arg(long, global = true, env = OUT_DIR_ENV, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct one geometric mean or two means between two magnitudes.
    Means(MeansArgs),
    /// Build a face construction and report pieces, symmetry and ratios.
    Tilings(TilingsArgs),
    /// Check a reaction against the conservation clauses.
    React(ReactArgs),
    /// List fire/air/water decompositions of a face total.
    Enumerate(EnumerateArgs),
    /// Run seeded transformation dynamics and write a trace.
    Simulate(SimulateArgs),
    /// Write the SVG drawing of a face construction.
    Render(RenderArgs),
}

#[derive(Args, Debug)]
pub struct MeansArgs {
    /// First extreme, a field value such as `1`, `3/2` or `1 + r2`.
    #[arg(allow_negative_numbers = true)]
    pub a: String,
    /// Second extreme.
    #[arg(allow_negative_numbers = true)]
    pub b: String,
    /// One mean (the default).
    #[arg(long, conflicts_with = "double")]
    pub single: bool,
    /// Two means, as in doubling the cube.
    #[arg(long)]
    pub double: bool,
    /// Enclosure width for irrational means.
    #[arg(long, value_name = "W")]
    pub width: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Face {
    Square,
    Equilateral,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Economical,
    Timaeus,
    Cornford,
    Revisited,
}

#[derive(Args, Debug)]
pub struct TilingsArgs {
    pub target: Face,
    pub construction: Construction,
    /// Also write the SVG drawing, to FILE or a default name in the output directory.
    #[arg(long, value_name = "FILE", num_args = 0..=1)]
    pub svg: Option<Option<PathBuf>>,
    /// Pixels per unit length in the SVG.
    #[arg(long, default_value_t = 100.0)]
    pub scale: f64,
    /// Probe grid resolution for covering checks.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: u32,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    pub target: Face,
    pub construction: Construction,
    /// Output file; `-` writes the SVG to stdout.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Pixels per unit length.
    #[arg(long, default_value_t = 100.0)]
    pub scale: f64,
}

#[derive(Args, Debug)]
pub struct ReactArgs {
    /// Reaction as JSON or compact text (`1 water -> 1 fire + 2 air`),
    /// `@FILE`, or `-` for stdin.
    pub reaction: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Equilateral face total.
    pub faces: String,
    /// Whole particles only.
    #[arg(long)]
    pub integral: bool,
    /// Quantities are multiples of 1/DEN when not integral.
    #[arg(long, value_name = "DEN", default_value_t = 2)]
    pub den: u32,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    /// Initial state as JSON (`{"water": 1}`), `@FILE`, or `-` for stdin.
    #[arg(long, default_value = r#"{"water": 1}"#)]
    pub state: String,
    /// Rule set as a JSON array, `@FILE`, or `-`. Defaults to the three
    /// non-earth transformations.
    #[arg(long)]
    pub rules: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Trace file (JSON lines); defaults to `trace-seed<SEED>.jsonl`.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Also write a CSV budget summary, to FILE or `budgets-seed<SEED>.csv`.
    #[arg(long, value_name = "FILE", num_args = 0..=1)]
    pub csv: Option<Option<PathBuf>>,
}

/// A failed invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: "usage", message: message.into() }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        CliError { kind: "io", message: format!("{}: {e}", path.display()) }
    }

    pub fn exit_code(&self) -> u8 {
        2
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "schema": format!("error/v{SCHEMA_VERSION}"),
            "error": { "kind": self.kind, "message": self.message },
        })
        .to_string()
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::usage(e.0)
    }
}

impl From<platonic_core::Error> for CliError {
    fn from(e: platonic_core::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

/// What a successful invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

impl Outcome {
    fn report<T: Serialize>(valid: bool, report: &T) -> Self {
        let mut stdout = serde_json::to_string_pretty(report).expect("reports serialize");
        stdout.push('\n');
        Outcome { code: if valid { 0 } else { 1 }, stdout }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let out = OutputDir(cli.out_dir.clone());
    match &cli.command {
        Command::Means(a) => means(a),
        Command::Tilings(a) => tilings(a, &out),
        Command::React(a) => react(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Simulate(a) => simulate(a, &out),
        Command::Render(a) => render(a, &out),
    }
}

struct OutputDir(Option<PathBuf>);

impl OutputDir {
    fn resolve(&self, explicit: Option<&Path>, default_name: &str) -> PathBuf {
        match explicit {
            Some(p) => p.to_path_buf(),
            None => self.0.clone().unwrap_or_default().join(default_name),
        }
    }

    fn write(&self, explicit: Option<&Path>, default_name: &str, contents: &str) -> Result<PathBuf, CliError> {
        let path = self.resolve(explicit, default_name);
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
        }
        fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
        Ok(path)
    }
}

/// Inline text, `@FILE`, or `-` for stdin.
fn read_input(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::io(Path::new("<stdin>"), e))?;
        return Ok(s);
    }
    if let Some(path) = arg.strip_prefix('@') {
        return fs::read_to_string(path).map_err(|e| CliError::io(Path::new(path), e));
    }
    Ok(arg.to_string())
}

#[derive(Serialize)]
struct ChainTerm {
    term: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<ExactValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    enclosure: Option<IntervalValue>,
}

impl ChainTerm {
    fn new(term: &'static str, m: &Magnitude) -> Self {
        match m {
            Magnitude::Exact(x) => ChainTerm { term, value: Some(ExactValue::new(x)), enclosure: None },
            Magnitude::Approx(e) => ChainTerm { term, value: None, enclosure: Some(IntervalValue::from_enclosure(e)) },
        }
    }
}

#[derive(Serialize)]
struct MeansReport {
    schema: String,
    kind: &'static str,
    chain: Vec<ChainTerm>,
    valid: bool,
    in_field: bool,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    enclosure: BTreeMap<&'static str, IntervalValue>,
    /// Tolerance used when any term is an enclosure.
    tolerance: RationalValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual_bound: Option<RationalValue>,
}

fn means(args: &MeansArgs) -> Result<Outcome, CliError> {
    let a = parse_field(&args.a)?;
    let b = parse_field(&args.b)?;
    let width = match &args.width {
        Some(w) => parse_rational(w)?,
        None => default_width(),
    };
    if width <= Rational::from_integer(0.into()) {
        return Err(CliError::usage("--width must be positive"));
    }
    let tol = default_tolerance();
    let (kind, terms, valid, residual) = if args.double {
        let (c, d) = construct_two_means(&a, &b, &width)?;
        let (ma, mb) = (Magnitude::Exact(a.clone()), Magnitude::Exact(b.clone()));
        let valid = check_two_means(&ma, &c, &d, &mb, &tol)?;
        // certified bound on |c³ − a²b|
        let target = (&a.square() * &b).enclose(128);
        let residual = (&c.interval().pow(3) - &target).magnitude();
        ("double", vec![("a", ma), ("c", c), ("d", d), ("b", mb)], valid, Some(residual))
    } else {
        let mean = construct_mean(&a, &b, &width)?;
        let terms = vec![Magnitude::Exact(a.clone()), mean.magnitude(), Magnitude::Exact(b.clone())];
        let valid = MeanChain::new(terms.clone())?.check(&tol)?;
        let [ta, tc, tb]: [Magnitude; 3] = terms.try_into().expect("three terms");
        ("single", vec![("a", ta), ("c", tc), ("b", tb)], valid, None)
    };
    let in_field = terms.iter().all(|(_, m)| m.as_exact().is_some());
    let enclosure = terms
        .iter()
        .filter_map(|(name, m)| match m {
            Magnitude::Approx(e) => Some((*name, IntervalValue::from_enclosure(e))),
            Magnitude::Exact(_) => None,
        })
        .collect();
    let report = MeansReport {
        schema: format!("means-report/v{SCHEMA_VERSION}"),
        kind,
        chain: terms.iter().map(|(name, m)| ChainTerm::new(name, m)).collect(),
        valid,
        in_field,
        enclosure,
        tolerance: RationalValue::new(&tol),
        residual_bound: residual.as_ref().map(RationalValue::new),
    };
    Ok(Outcome::report(valid, &report))
}

/// A construction ready for reporting.
pub struct Built {
    pub dissection: Dissection,
    pub side_ratio: Option<FieldValue>,
    pub area_ratio: FieldValue,
}

/// The construction for a face shape. Face dissections use a square of
/// side 1 and an equilateral triangle of side 2; `cornford` is the
/// composed larger basic triangle and `revisited` the whole face covered
/// by three-copy compositions.
pub fn build(face: Face, construction: Construction) -> Result<Built, CliError> {
    let kind = match face {
        Face::Square => BasicKind::IsoscelesRight,
        Face::Equilateral => BasicKind::HalfEquilateral,
    };
    let dissected = |d: Dissection| -> Result<Built, CliError> {
        let piece_area = d.pieces[0].area();
        let area_ratio = d.target.area().checked_div(&piece_area)?;
        Ok(Built { dissection: d, side_ratio: None, area_ratio })
    };
    match (face, construction) {
        (Face::Square, Construction::Economical) => dissected(economical_square(FieldValue::one())?),
        (Face::Square, Construction::Timaeus) => dissected(timaeus_square(FieldValue::one())?),
        (Face::Equilateral, Construction::Economical) => dissected(economical_equilateral(FieldValue::integer(2))?),
        (Face::Equilateral, Construction::Timaeus) => dissected(timaeus_equilateral(FieldValue::integer(2))?),
        (_, Construction::Cornford) => {
            let copies = match kind {
                BasicKind::IsoscelesRight => 2,
                BasicKind::HalfEquilateral => 3,
            };
            let c = cornford_scale(kind, copies)?;
            Ok(Built { dissection: c.dissection, side_ratio: Some(c.side_ratio), area_ratio: c.area_ratio })
        }
        (_, Construction::Revisited) => {
            let f = revisited_face(kind)?;
            Ok(Built { dissection: f.dissection, side_ratio: Some(f.side_ratio), area_ratio: f.area_ratio })
        }
    }
}

fn face_name(f: Face) -> &'static str {
    match f {
        Face::Square => "square",
        Face::Equilateral => "equilateral",
    }
}

fn construction_name(c: Construction) -> &'static str {
    match c {
        Construction::Economical => "economical",
        Construction::Timaeus => "timaeus",
        Construction::Cornford => "cornford",
        Construction::Revisited => "revisited",
    }
}

#[derive(Serialize)]
struct PieceDoc {
    index: usize,
    kind: Option<&'static str>,
    scale: Option<ExactValue>,
    area: ExactValue,
    vertices: Vec<[ExactValue; 2]>,
}

#[derive(Serialize)]
struct TargetDoc {
    face: &'static str,
    region: &'static str,
    area: ExactValue,
    vertices: Vec<[ExactValue; 2]>,
}

#[derive(Serialize)]
struct RatiosDoc {
    side: Option<ExactValue>,
    area: ExactValue,
}

#[derive(Serialize)]
struct ValidationDoc {
    passed: bool,
    probes: usize,
    pieces_area: ExactValue,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct TilingReport {
    schema: String,
    construction: &'static str,
    target: TargetDoc,
    mode: &'static str,
    piece_count: usize,
    pieces: Vec<PieceDoc>,
    symmetry_order: Option<usize>,
    ratios: RatiosDoc,
    validation: ValidationDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    svg: Option<String>,
}

fn vertex_docs(points: &[platonic_core::tiling::Point]) -> Vec<[ExactValue; 2]> {
    points.iter().map(|p| [ExactValue::new(&p.x), ExactValue::new(&p.y)]).collect()
}

fn describe(v: &Violation) -> String {
    let pt = |p: &platonic_core::tiling::Point| format!("({:?}, {:?})", p.x, p.y);
    match v {
        Violation::Overlap { first, second } => format!("pieces {first} and {second} overlap"),
        Violation::OutsideTarget { piece, vertex } => {
            format!("piece {piece} has vertex {} outside the target", pt(vertex))
        }
        Violation::AreaMismatch { target, pieces } => {
            format!("piece areas sum to {pieces:?}, target area is {target:?}")
        }
        Violation::Uncovered { point } => format!("point {} is not covered", pt(point)),
    }
}

fn default_svg_name(face: Face, c: Construction) -> String {
    format!("{}-{}.svg", face_name(face), construction_name(c))
}

fn svg_title(face: Face, c: Construction) -> String {
    format!("{} face, {} construction", face_name(face), construction_name(c))
}

fn tilings(args: &TilingsArgs, out: &OutputDir) -> Result<Outcome, CliError> {
    if !(args.scale.is_finite() && args.scale > 0.0) {
        return Err(CliError::usage("--scale must be a positive number"));
    }
    let built = build(args.target, args.construction)?;
    let d = &built.dissection;
    let check = validate(d, args.grid);
    let svg_path = match &args.svg {
        Some(explicit) => {
            let text = svg::render(d, args.scale, &svg_title(args.target, args.construction));
            let name = default_svg_name(args.target, args.construction);
            Some(out.write(explicit.as_deref(), &name, &text)?.display().to_string())
        }
        None => None,
    };
    let report = TilingReport {
        schema: format!("tiling-report/v{SCHEMA_VERSION}"),
        construction: construction_name(args.construction),
        target: TargetDoc {
            face: face_name(args.target),
            region: d.target.name(),
            area: ExactValue::new(&d.target.area()),
            vertices: vertex_docs(&d.target.vertices()),
        },
        mode: d.mode.name(),
        piece_count: d.pieces.len(),
        pieces: d
            .pieces
            .iter()
            .enumerate()
            .map(|(index, p)| PieceDoc {
                index,
                kind: p.basic().map(|b| b.kind.name()),
                scale: p.basic().map(|b| ExactValue::new(&b.scale)),
                area: ExactValue::new(&p.area()),
                vertices: vertex_docs(p.vertices()),
            })
            .collect(),
        symmetry_order: symmetry_order(d).ok(),
        ratios: RatiosDoc {
            side: built.side_ratio.as_ref().map(ExactValue::new),
            area: ExactValue::new(&built.area_ratio),
        },
        validation: ValidationDoc {
            passed: check.passed(),
            probes: check.probes,
            pieces_area: ExactValue::new(&check.pieces_area),
            violations: check.violations.iter().map(describe).collect(),
        },
        svg: svg_path,
    };
    Ok(Outcome::report(check.passed(), &report))
}

fn render(args: &RenderArgs, out: &OutputDir) -> Result<Outcome, CliError> {
    if !(args.scale.is_finite() && args.scale > 0.0) {
        return Err(CliError::usage("--scale must be a positive number"));
    }
    let built = build(args.target, args.construction)?;
    let text = svg::render(&built.dissection, args.scale, &svg_title(args.target, args.construction));
    if args.out.as_deref() == Some(Path::new("-")) {
        return Ok(Outcome { code: 0, stdout: text });
    }
    let path = out.write(args.out.as_deref(), &default_svg_name(args.target, args.construction), &text)?;
    let report = serde_json::json!({
        "schema": format!("render/v{SCHEMA_VERSION}"),
        "file": path.display().to_string(),
        "pieces": built.dissection.pieces.len(),
    });
    Ok(Outcome::report(true, &report))
}

fn react(args: &ReactArgs) -> Result<Outcome, CliError> {
    let text = read_input(&args.reaction)?;
    let r = parse_reaction(&text)?;
    let report = ReactionReport::new(&r);
    Ok(Outcome::report(report.valid, &report))
}

#[derive(Serialize)]
struct Decomposition {
    fire: String,
    air: String,
    water: String,
}

#[derive(Serialize)]
struct EnumerationReport {
    schema: String,
    faces: RationalValue,
    integral: bool,
    denominator_bound: u32,
    count: usize,
    decompositions: Vec<Decomposition>,
}

fn enumerate(args: &EnumerateArgs) -> Result<Outcome, CliError> {
    let faces = parse_rational(&args.faces)?;
    let den = if args.integral { 1 } else { args.den };
    let rows = enumerate_decompositions(&faces, args.integral, args.den)?;
    match args.format {
        TableFormat::Csv => Ok(Outcome { code: 0, stdout: decompositions_csv(&faces, &rows) }),
        TableFormat::Json => {
            let report = EnumerationReport {
                schema: format!("enumeration-report/v{SCHEMA_VERSION}"),
                faces: RationalValue::new(&faces),
                integral: args.integral,
                denominator_bound: den,
                count: rows.len(),
                decompositions: rows
                    .iter()
                    .map(|[a, b, c]| Decomposition { fire: a.to_string(), air: b.to_string(), water: c.to_string() })
                    .collect(),
            };
            Ok(Outcome::report(true, &report))
        }
    }
}

#[derive(Serialize)]
struct SimulationReport {
    schema: String,
    seed: u64,
    requested_steps: usize,
    steps_taken: usize,
    stopped_early: bool,
    conserved: bool,
    first_drift: Option<usize>,
    budgets: BudgetDoc,
    initial: Vec<TermDoc>,
    #[serde(rename = "final")]
    final_state: Vec<TermDoc>,
    trace_file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    csv_file: Option<String>,
}

fn simulate(args: &SimulateArgs, out: &OutputDir) -> Result<Outcome, CliError> {
    let state = parse_state(&read_input(&args.state)?)?;
    let rules = match &args.rules {
        Some(r) => parse_rules(&read_input(r)?)?,
        None => default_rules(),
    };
    let trace = run(&state, &rules, args.steps, args.seed);
    let report = conservation_report(&trace);
    let trace_file =
        out.write(args.out.as_deref(), &format!("trace-seed{}.jsonl", args.seed), &to_json_lines(&trace, &rules))?;
    let csv_file = match &args.csv {
        Some(explicit) => Some(
            out.write(explicit.as_deref(), &format!("budgets-seed{}.csv", args.seed), &budgets_csv(&trace))?
                .display()
                .to_string(),
        ),
        None => None,
    };
    let summary = SimulationReport {
        schema: format!("simulation-report/v{SCHEMA_VERSION}"),
        seed: trace.seed,
        requested_steps: trace.requested_steps,
        steps_taken: trace.steps.len(),
        stopped_early: trace.stopped_early,
        conserved: report.conserved(),
        first_drift: report.first_drift,
        budgets: BudgetDoc::new(&report.baseline),
        initial: state_doc(&trace.initial),
        final_state: state_doc(&trace.final_state),
        trace_file: trace_file.display().to_string(),
        csv_file,
    };
    Ok(Outcome::report(report.conserved(), &summary))
}
