//! The `coxkit` command line: argument parsing, caps, and text/JSON rendering.
//!
//! [`run`] never touches the process; the binary prints its streams and exits
//! with its status, which keeps the whole front end testable in-process.

use std::fmt::Write as _;
use std::io::Read as _;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::coxeter::{max_order, CoxeterSystem, Element, Family};
use crate::descent;
use crate::error::{Error, Result};
use crate::hecke::{self, GKind, Grothendieck, HModule};
use crate::linalg;
use crate::series::{self, BasisKind, Construction, Level, NCSeries, QsymKind};
use crate::shuffle::{Coproduct, Product};
use crate::subset::{Composition, SubsetMask};
use crate::verify::{self, Suite};

/// Default rank caps: `|W|` stays within 5040, 3840 and 1920.
pub fn default_max_rank(family: Family) -> usize {
    match family {
        Family::A => 6,
        Family::B | Family::D => 5,
    }
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::RankCap(_) => 3,
        Error::NotInSpan(_) | Error::Overflow => 1,
        _ => 2,
    }
}

/// What a run produced: the status and both streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(
    name = "coxkit",
    version,
    about = "Coxeter groups of types A, B and D: maps, shuffles, series and 0-Hecke modules"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, visible_alias = "out")]
    format: Format,
    /// Override the default rank cap of the chosen family.
    #[arg(long, global = true)]
    max_rank: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Length, descents, inverse, reduced word or product of one element.
    Element(ElementArgs),
    /// A shuffle or convolution product of two elements.
    Product(ProductArgs),
    /// A coproduct of one element, or one of its splits.
    Coproduct(CoproductArgs),
    /// A truncated basis series.
    Series(SeriesArgs),
    /// Coordinates of a series in the F or s basis.
    Expand(ExpandArgs),
    /// The c matrix and the <h, m> matrix of a system.
    Table(TableArgs),
    /// 0-Hecke modules: composition factors, projective covers, matrices.
    Hecke(HeckeArgs),
    /// Run named verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SystemArgs {
    #[arg(long = "type", value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ElementOp {
    Length,
    Descents,
    LeftDescents,
    Inverse,
    ReducedWord,
    Product,
}

#[derive(Args)]
struct ElementArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[arg(long, value_enum)]
    op: ElementOp,
    /// Right factor for `--op product`.
    #[arg(long, allow_hyphen_values = true)]
    right: Option<String>,
    /// Window such as "2,-1,3".
    #[arg(allow_hyphen_values = true)]
    window: String,
}

#[derive(Args)]
struct ProductArgs {
    #[arg(long, value_parser = parse_product)]
    family: Product,
    #[arg(long, allow_hyphen_values = true)]
    left: String,
    #[arg(long, allow_hyphen_values = true)]
    right: String,
}

#[derive(Args)]
struct CoproductArgs {
    #[arg(long, value_parser = parse_coproduct)]
    family: Coproduct,
    #[arg(long, allow_hyphen_values = true)]
    arg: String,
    #[arg(long)]
    split: Option<usize>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["kind", "commutative", "element"])))]
struct SourceArgs {
    /// Noncommutative basis: sA, hA, sB, hB, sD, hD.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<BasisKind>,
    /// Commutative basis: M, F, MB, FB, MD, FD, h, m, hB, mB, sA, sB, sD.
    #[arg(long, value_parser = parse_qsym)]
    commutative: Option<QsymKind>,
    /// The series F_w or s_w of this element; needs --type.
    #[arg(long, allow_hyphen_values = true)]
    element: Option<String>,
    #[arg(long)]
    key: Option<String>,
    #[arg(long = "type", value_parser = parse_family)]
    family: Option<Family>,
    #[arg(long, value_parser = parse_level, default_value = "F")]
    level: Level,
    /// Alphabet window; defaults to degree + 1.
    #[arg(long)]
    window: Option<i32>,
    #[arg(long, value_parser = parse_construction, default_value = "class")]
    construction: Construction,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    source: SourceArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input_or_source").required(true).args(["input", "kind", "element"])))]
struct ExpandArgs {
    /// Series JSON file, or "-" for standard input.
    #[arg(long, conflicts_with_all = ["kind", "element"])]
    input: Option<String>,
    /// Target basis.
    #[arg(long, value_parser = parse_level, default_value = "F")]
    basis: Level,
    #[command(flatten)]
    source: OptionalSource,
}

/// The series sources of `expand`, none required.
#[derive(Args)]
struct OptionalSource {
    #[arg(long, value_parser = parse_kind)]
    kind: Option<BasisKind>,
    #[arg(long, allow_hyphen_values = true)]
    element: Option<String>,
    #[arg(long)]
    key: Option<String>,
    #[arg(long = "type", value_parser = parse_family)]
    family: Option<Family>,
    #[arg(long, value_parser = parse_level, default_value = "F")]
    level: Level,
    #[arg(long)]
    window: Option<i32>,
    #[arg(long, value_parser = parse_construction, default_value = "class")]
    construction: Construction,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    C,
    Hm,
    All,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[arg(long, value_enum, default_value_t = Which::All)]
    which: Which,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HeckeOp {
    Module,
    Induce,
    Restrict,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Factors,
    Projective,
    Matrices,
    Dim,
}

#[derive(Args)]
struct HeckeArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[arg(long, value_enum, default_value_t = HeckeOp::Module)]
    op: HeckeOp,
    /// Parabolic subset for induce and restrict, such as "1,2".
    #[arg(long)]
    subset: Option<String>,
    /// "C:K" (simple), "P:K" (projective indecomposable) or "regular".
    #[arg(long, default_value = "regular")]
    module: String,
    #[arg(long, value_enum, default_value_t = Report::Factors)]
    report: Report,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated suites: diagrams, duality, shuffles, series, hecke, worked-examples, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[command(flatten)]
    system: SystemArgs,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_product(s: &str) -> std::result::Result<Product, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_coproduct(s: &str) -> std::result::Result<Coproduct, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> std::result::Result<BasisKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_qsym(s: &str) -> std::result::Result<QsymKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_level(s: &str) -> std::result::Result<Level, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_construction(s: &str) -> std::result::Result<Construction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Accepts U+2212 MINUS SIGN for '-', so copied windows such as "−2,1" work.
fn normalize(arg: &str) -> String {
    arg.replace('\u{2212}', "-")
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(|a| normalize(&a.into())).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(&cli) {
        Ok((code, mut stdout)) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Runs with the process arguments, prints, and returns the exit status.
pub fn main() -> i32 {
    let out = run(std::env::args());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

struct Ctx {
    json: bool,
    max_rank: Option<usize>,
}

impl Ctx {
    fn cap(&self, family: Family) -> usize {
        self.max_rank.unwrap_or_else(|| default_max_rank(family))
    }

    fn check_rank(&self, sys: &CoxeterSystem) -> Result<()> {
        let cap = self.cap(sys.family());
        if sys.rank() > cap {
            return Err(Error::RankCap(format!("{sys} has rank {} > {cap}; raise it with --max-rank", sys.rank())));
        }
        Ok(())
    }

    fn system(&self, a: &SystemArgs) -> Result<CoxeterSystem> {
        let sys = CoxeterSystem::new(a.family, a.rank)?;
        self.check_rank(&sys)?;
        Ok(sys)
    }

    /// The system on `n` letters, checked against the caps.
    fn on_letters(&self, family: Family, n: usize) -> Result<CoxeterSystem> {
        let sys = CoxeterSystem::on_letters(family, n)?;
        self.check_rank(&sys)?;
        Ok(sys)
    }

    fn emit(&self, text: String, value: Value) -> Result<(i32, String)> {
        if self.json {
            Ok((0, serde_json::to_string(&value).expect("valid JSON value")))
        } else {
            Ok((0, text))
        }
    }
}

/// Enumerating commands refuse groups beyond this order unless `COXKIT_MAX_ORDER` is set.
fn heavy_cap() -> u128 {
    match std::env::var("COXKIT_MAX_ORDER") {
        Ok(_) => max_order(),
        Err(_) => verify::VERIFY_MAX_ORDER,
    }
}

fn check_heavy(sys: &CoxeterSystem) -> Result<()> {
    let cap = heavy_cap();
    if sys.order() > cap {
        return Err(Error::CapExceeded { order: sys.order(), cap });
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let ctx = Ctx { json: cli.format == Format::Json, max_rank: cli.max_rank };
    match &cli.command {
        Command::Element(a) => element(&ctx, a),
        Command::Product(a) => product(&ctx, a),
        Command::Coproduct(a) => coproduct(&ctx, a),
        Command::Series(a) => series_cmd(&ctx, a),
        Command::Expand(a) => expand(&ctx, a),
        Command::Table(a) => table(&ctx, a),
        Command::Hecke(a) => hecke_cmd(&ctx, a),
        Command::Verify(a) => verify_cmd(&ctx, a),
    }
}

fn system_json(sys: &CoxeterSystem) -> Value {
    json!({ "family": sys.family().to_string(), "rank": sys.rank() })
}

fn family_of_product(p: Product) -> Family {
    match p {
        Product::ShuffleA | Product::CupA => Family::A,
        Product::ShuffleD | Product::CupD => Family::D,
        _ => Family::B,
    }
}

fn family_of_coproduct(c: Coproduct) -> Family {
    match c {
        Coproduct::UnshuffleA | Coproduct::CapA => Family::A,
        Coproduct::UnshuffleD | Coproduct::CapD => Family::D,
        _ => Family::B,
    }
}

fn element(ctx: &Ctx, a: &ElementArgs) -> Result<(i32, String)> {
    let sys = ctx.system(&a.system)?;
    let w = sys.parse_element(&a.window)?;
    let (op, text, result) = match a.op {
        ElementOp::Length => {
            let l = sys.length(&w);
            ("length", l.to_string(), json!(l))
        }
        ElementOp::Descents => {
            let d = sys.descent_set(&w);
            ("descents", d.to_string(), json!(d.indices()))
        }
        ElementOp::LeftDescents => {
            let d = sys.left_descent_set(&w);
            ("left-descents", d.to_string(), json!(d.indices()))
        }
        ElementOp::Inverse => {
            let v = w.inverse();
            ("inverse", v.to_string(), json!(v.window()))
        }
        ElementOp::ReducedWord => {
            let word = sys.reduced_word(&w);
            let text = word.iter().map(|s| format!("s{s}")).collect::<Vec<_>>().join(" ");
            ("reduced-word", text, json!(word))
        }
        ElementOp::Product => {
            let right = a.right.as_deref().ok_or_else(|| Error::Invalid("--op product needs --right".into()))?;
            let v = sys.parse_element(right)?;
            let p = &w * &v;
            ("product", p.to_string(), json!(p.window()))
        }
    };
    ctx.emit(text, json!({ "system": system_json(&sys), "op": op, "element": w.window(), "result": result }))
}

fn group_terms_text(terms: &[(Element, i64)]) -> String {
    let mut out = String::new();
    for (w, c) in terms {
        writeln!(out, "{c:>4}  {w}").expect("write to string");
    }
    out
}

fn product(ctx: &Ctx, a: &ProductArgs) -> Result<(i32, String)> {
    let u = Element::parse(&a.left)?;
    let v = Element::parse(&a.right)?;
    ctx.on_letters(family_of_product(a.family), u.n() + v.n())?;
    let x = a.family.apply(&u, &v)?;
    let terms: Vec<(Element, i64)> = x.iter().map(|(w, c)| (w.clone(), c)).collect();
    let value = json!({
        "product": a.family.name(),
        "left": u.window(),
        "right": v.window(),
        "terms": terms.iter().map(|(w, c)| json!({ "key": w.window(), "coeff": c })).collect::<Vec<_>>(),
    });
    ctx.emit(group_terms_text(&terms), value)
}

fn coproduct(ctx: &Ctx, a: &CoproductArgs) -> Result<(i32, String)> {
    let u = Element::parse(&a.arg)?;
    let family = family_of_coproduct(a.family);
    if family == Family::D {
        ctx.on_letters(family, u.n().max(2))?;
    } else {
        ctx.on_letters(family, u.n())?;
    }
    let splits: Vec<(usize, (Element, Element))> = match a.split {
        Some(i) => vec![(i, a.family.split(&u, i)?)],
        None => a.family.splits(&u)?,
    };
    let mut text = String::new();
    for (i, (x, y)) in &splits {
        writeln!(text, "{i:>3}  {x} (x) {y}").expect("write to string");
    }
    let value = json!({
        "coproduct": a.family.name(),
        "arg": u.window(),
        "terms": splits
            .iter()
            .map(|(i, (x, y))| json!({ "split": i, "left": x.window(), "right": y.window(), "coeff": 1 }))
            .collect::<Vec<_>>(),
    });
    ctx.emit(text, value)
}

/// A built series, commutative or not.
enum Built {
    Nc(NCSeries),
    Comm(series::CPoly),
}

fn window_for(degree: usize, window: Option<i32>) -> Result<i32> {
    let m = window.unwrap_or(degree as i32 + 1);
    if m < degree as i32 + 1 {
        return Err(Error::Window(format!("window {m} is below degree {degree} + 1")));
    }
    Ok(m)
}

#[allow(clippy::too_many_arguments)]
fn build_series(
    ctx: &Ctx,
    kind: Option<BasisKind>,
    commutative: Option<QsymKind>,
    element: Option<&str>,
    key: Option<&str>,
    family: Option<Family>,
    level: Level,
    window: Option<i32>,
    how: Construction,
) -> Result<(Family, Built)> {
    if let Some(w) = element {
        let family = family.ok_or_else(|| Error::Invalid("--element needs --type".into()))?;
        let w = Element::parse(w)?;
        let sys = ctx.on_letters(family, w.n())?;
        if !sys.contains(&w) {
            return Err(Error::InvalidElement(format!("{w} is not in {sys}")));
        }
        let m = window_for(w.n(), window)?;
        return Ok((family, Built::Nc(series::level_series(&sys, level, &w, m))));
    }
    let key = Composition::parse(key.ok_or_else(|| Error::Invalid("--key is required".into()))?)?;
    let m = window_for(key.size(), window)?;
    if let Some(kind) = kind {
        ctx.on_letters(kind.family(), key.size().max(usize::from(kind.family() == Family::D) * 2))?;
        return Ok((kind.family(), Built::Nc(series::basis_element(kind, &key, m, how)?)));
    }
    let kind = commutative.ok_or_else(|| Error::Invalid("a series source is required".into()))?;
    let family = match kind {
        QsymKind::MB | QsymKind::FB | QsymKind::HB | QsymKind::MonoB | QsymKind::SB => Family::B,
        QsymKind::MD | QsymKind::FD | QsymKind::SD => Family::D,
        _ => Family::A,
    };
    ctx.on_letters(family, key.size().max(usize::from(family == Family::D) * 2))?;
    Ok((family, Built::Comm(series::qsym_basis(kind, &key, m)?)))
}

fn series_cmd(ctx: &Ctx, a: &SeriesArgs) -> Result<(i32, String)> {
    let s = &a.source;
    let (_, built) = build_series(
        ctx,
        s.kind,
        s.commutative,
        s.element.as_deref(),
        s.key.as_deref(),
        s.family,
        s.level,
        s.window,
        s.construction,
    )?;
    let (text, json_text) = match &built {
        Built::Nc(x) => (x.to_string(), x.to_json()),
        Built::Comm(p) => (p.to_string(), p.to_json()),
    };
    if ctx.json {
        Ok((0, json_text))
    } else {
        Ok((0, text))
    }
}

fn expand(ctx: &Ctx, a: &ExpandArgs) -> Result<(i32, String)> {
    let s = &a.source;
    let (family, x) = match &a.input {
        Some(path) => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse(e.to_string()))?;
                buf
            } else {
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
            };
            let family = s.family.ok_or_else(|| Error::Invalid("--input needs --type".into()))?;
            (family, NCSeries::from_json(&text)?)
        }
        None => {
            let (family, built) = build_series(
                ctx,
                s.kind,
                None,
                s.element.as_deref(),
                s.key.as_deref(),
                s.family,
                s.level,
                s.window,
                s.construction,
            )?;
            match built {
                Built::Nc(x) => (family, x),
                Built::Comm(_) => return Err(Error::Invalid("expand takes noncommutative series".into())),
            }
        }
    };
    let sys = ctx.on_letters(family, x.degree())?;
    let coords = series::expand_in_basis(&sys, a.basis, &x)?;
    let terms: Vec<(Element, i64)> = coords.iter().map(|(w, c)| (w.clone(), c)).collect();
    let level = match a.basis {
        Level::F => "F",
        Level::S => "s",
    };
    let value = json!({
        "system": system_json(&sys),
        "basis": level,
        "terms": terms.iter().map(|(w, c)| json!({ "key": w.window(), "coeff": c })).collect::<Vec<_>>(),
    });
    ctx.emit(group_terms_text(&terms), value)
}

fn aligned(row_labels: &[String], col_labels: &[String], cells: &[Vec<String>]) -> String {
    let lw = row_labels.iter().map(String::len).max().unwrap_or(0);
    let cw = col_labels.iter().chain(cells.iter().flatten()).map(String::len).max().unwrap_or(0);
    let mut out = format!("{:lw$}", "");
    for c in col_labels {
        write!(out, "  {c:>cw$}").expect("write to string");
    }
    out.push('\n');
    for (label, row) in row_labels.iter().zip(cells) {
        write!(out, "{label:<lw$}").expect("write to string");
        for x in row {
            write!(out, "  {x:>cw$}").expect("write to string");
        }
        out.push('\n');
    }
    out
}

fn table(ctx: &Ctx, a: &TableArgs) -> Result<(i32, String)> {
    let sys = ctx.system(&a.system)?;
    check_heavy(&sys)?;
    let mut text = String::new();
    let mut value = json!({ "system": system_json(&sys) });
    if matches!(a.which, Which::C | Which::All) {
        let (keys, c) = descent::c_matrix(&sys)?;
        let det = descent::c_determinant(&sys)?;
        let labels: Vec<String> = keys.iter().map(|k| k.to_string()).collect();
        let cells: Vec<Vec<String>> = c.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        writeln!(text, "c matrix of {sys}, determinant {}", linalg::fmt_q(&det)).expect("write to string");
        text.push_str(&aligned(&labels, &labels, &cells));
        value["subsets"] = json!(keys.iter().map(|k| k.indices()).collect::<Vec<_>>());
        value["c"] = json!(c);
        value["determinant"] = json!(linalg::fmt_q(&det));
    }
    if matches!(a.which, Which::Hm | Which::All) {
        let bases = descent::sym_bases(&sys)?;
        let hm = bases.hm_matrix(&sys)?;
        let labels: Vec<String> =
            bases.classes.iter().map(|cl| cl.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("~")).collect();
        let cells: Vec<Vec<String>> = hm.iter().map(|r| r.iter().map(linalg::fmt_q).collect()).collect();
        if !text.is_empty() {
            text.push('\n');
        }
        writeln!(text, "<h, m> over {} parabolic classes", labels.len()).expect("write to string");
        text.push_str(&aligned(&labels, &labels, &cells));
        value["classes"] = json!(bases
            .classes
            .iter()
            .map(|cl| cl.iter().map(|k| k.indices()).collect::<Vec<_>>())
            .collect::<Vec<_>>());
        value["hm"] = json!(cells);
    }
    ctx.emit(text, value)
}

/// A module description from `--module`.
enum ModuleSpec {
    Simple(SubsetMask),
    Projective(SubsetMask),
    Regular,
}

impl ModuleSpec {
    fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("regular") {
            return Ok(ModuleSpec::Regular);
        }
        match t.split_once(':') {
            Some((tag, k)) if tag.eq_ignore_ascii_case("C") => Ok(ModuleSpec::Simple(SubsetMask::parse(k)?)),
            Some((tag, k)) if tag.eq_ignore_ascii_case("P") => Ok(ModuleSpec::Projective(SubsetMask::parse(k)?)),
            _ => Err(Error::Parse(format!("module {s:?}: expected C:K, P:K or regular"))),
        }
    }

    /// The module over `W_I` (`I` the whole set for plain modules); `K` is cut down to `I`.
    fn build(&self, sys: &CoxeterSystem, i: SubsetMask) -> Result<HModule> {
        match *self {
            ModuleSpec::Simple(k) => hecke::simple_module(sys, i, k.intersection(i)),
            ModuleSpec::Projective(k) if i == sys.full_set() => hecke::indecomposable_projective(sys, k),
            ModuleSpec::Projective(k) => hecke::projective_module_within(sys, i, k.intersection(i), i),
            ModuleSpec::Regular if i == sys.full_set() => hecke::regular_module(sys),
            ModuleSpec::Regular => hecke::regular_module_within(sys, i),
        }
    }

    fn subset(&self) -> Option<SubsetMask> {
        match *self {
            ModuleSpec::Simple(k) | ModuleSpec::Projective(k) => Some(k),
            ModuleSpec::Regular => None,
        }
    }
}

#[derive(Serialize)]
struct GTerm {
    key: Vec<usize>,
    coeff: i64,
}

fn grothendieck_json(g: &Grothendieck) -> Value {
    let kind = match g.kind {
        GKind::G0 => "G0",
        GKind::K0 => "K0",
    };
    let terms: Vec<GTerm> = g.terms.iter().map(|(k, c)| GTerm { key: k.indices(), coeff: c }).collect();
    json!({ "kind": kind, "terms": terms })
}

fn hecke_cmd(ctx: &Ctx, a: &HeckeArgs) -> Result<(i32, String)> {
    let sys = ctx.system(&a.system)?;
    check_heavy(&sys)?;
    let full = sys.full_set();
    let spec = ModuleSpec::parse(&a.module)?;
    if let Some(k) = spec.subset() {
        if !k.is_subset(full) {
            return Err(Error::Invalid(format!("{k} is not a set of generators of {sys}")));
        }
    }
    let subset = match &a.subset {
        Some(s) => {
            let i = SubsetMask::parse(s)?;
            if !i.is_subset(full) {
                return Err(Error::Invalid(format!("{i} is not a set of generators of {sys}")));
            }
            Some(i)
        }
        None => None,
    };
    let need_subset = || subset.ok_or_else(|| Error::Invalid("--op induce and restrict need --subset".into()));
    let module = match a.op {
        HeckeOp::Module => spec.build(&sys, full)?,
        HeckeOp::Induce => hecke::induce(&spec.build(&sys, need_subset()?)?)?,
        HeckeOp::Restrict => hecke::restrict(&spec.build(&sys, full)?, need_subset()?)?,
    };
    let op = match a.op {
        HeckeOp::Module => "module",
        HeckeOp::Induce => "induce",
        HeckeOp::Restrict => "restrict",
    };
    let mut value = json!({
        "system": system_json(&sys),
        "op": op,
        "module": a.module.trim(),
        "subset": subset.map(|i| i.indices()),
        "acting": module.acting().indices(),
        "dim": module.dim(),
    });
    let text = match a.report {
        Report::Dim => module.dim().to_string(),
        Report::Factors => {
            let g = hecke::composition_factors(&module);
            value["factors"] = grothendieck_json(&g);
            g.to_string()
        }
        Report::Projective => {
            let g = hecke::projective_multiplicities(&module)?;
            value["projective"] = grothendieck_json(&g);
            g.to_string()
        }
        Report::Matrices => {
            let m: Value = serde_json::from_str(&module.to_json()).expect("module JSON");
            value["matrices"] = m["matrices"].clone();
            value["labels"] = m["labels"].clone();
            let mut text = String::new();
            for s in module.acting().iter() {
                let mat = module.matrix(s).expect("acting generator");
                writeln!(text, "pi_{s}:").expect("write to string");
                let cells: Vec<Vec<String>> = mat.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                text.push_str(&aligned(module.labels(), module.labels(), &cells));
            }
            text
        }
    };
    ctx.emit(text, value)
}

fn verify_cmd(ctx: &Ctx, a: &VerifyArgs) -> Result<(i32, String)> {
    let sys = ctx.system(&a.system)?;
    let suites = Suite::parse_list(&a.suite)?;
    if suites.iter().any(|s| !matches!(s, Suite::Shuffles | Suite::WorkedExamples)) {
        check_heavy(&sys)?;
    }
    let report = verify::run_with_cap(&sys, &suites, heavy_cap())?;
    let code = if report.all_passed() { 0 } else { 1 };
    let out = if ctx.json { report.to_json() } else { report.to_text() };
    Ok((code, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("coxkit").chain(args.iter().copied()))
    }

    #[test]
    fn unicode_minus_is_accepted() {
        let out = run_args(&["element", "--type", "B", "--rank", "2", "--op", "length", "\u{2212}2,1"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "2\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["element", "--type", "Q", "--rank", "2", "--op", "length", "1,2"]).code, 2);
        assert_eq!(run_args(&["element", "--type", "A", "--rank", "9", "--op", "length", "1"]).code, 3);
        assert_eq!(run_args(&["element", "--type", "B", "--rank", "2", "--op", "length", "1,1"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }
}
