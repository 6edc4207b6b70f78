//! The `radiolb` command line.
//!
//! Every subcommand reads JSON (or the tree from standard input) and writes
//! one line of compact JSON, except `export-dot`. Exit codes: 0 on success,
//! 1 on a domain error with `{"error": <name>, "message": <text>}` on
//! standard error, 2 on a usage error.

use std::fmt::Display;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use radiolb::compose::{compose_dk, compose_sk, compose_wk, CompositeSpecJson};
use radiolb::families::{self, FamilySpec};
use radiolb::labeling::{
    check_order, find_lb_order, labels_from_order, order_composite, LabelingJson, OrderJson,
};
use radiolb::oracle::{self, Pruning, SolveOptions};
use radiolb::tree::TreeJson;
use radiolb::{CompositeKind, CompositeSpec, ErrorName, LinearOrder, RadioLabeling, Tree};

pub mod dot;

#[derive(Debug, Parser)]
#[command(
    name = "radiolb",
    version,
    about = "Radio labelings of trees at the lower bound"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a member of a named tree family.
    Gen(GenArgs),
    /// Build a composite tree from component tree files.
    Compose(ComposeArgs),
    /// Lower bound and the quantities behind it.
    Lb(TreeArg),
    /// Produce a vertex order for the label recurrence.
    Order(OrderArgs),
    /// Labels from an order.
    Label(LabelArgs),
    /// Check a labeling and certify its span.
    Verify(VerifyArgs),
    /// Exact radio number by branch and bound.
    ExactRn(ExactArgs),
    /// Graphviz DOT, optionally annotated with labels.
    ExportDot(DotArgs),
}

#[derive(Debug, Args)]
struct TreeArg {
    /// Tree JSON file; standard input when omitted.
    #[arg(long)]
    tree: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Family name, or `random` for a uniform random tree on `n` vertices.
    #[arg(long)]
    family: String,
    /// Comma-separated `key=value` pairs, e.g. `m=3,k=4` or `degrees=3:4`.
    #[arg(long, default_value = "")]
    params: String,
    /// Seed for `random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Wk,
    Sk,
    Dk,
}

#[derive(Debug, Args)]
struct ComposeArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Star or double-star size for `sk`/`dk`; component count for `wk`.
    #[arg(long)]
    k: Option<usize>,
    /// Where to write the composite spec JSON.
    #[arg(long)]
    spec_out: Option<PathBuf>,
    /// Component tree files (one base file for `sk`/`dk`).
    #[arg(required = true)]
    components: Vec<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    /// Composite ordering; needs `--spec`.
    Alg,
    /// Backtracking search for an order meeting the bound.
    Search,
    /// Read `--order` and check it.
    File,
}

#[derive(Debug, Args)]
struct OrderArgs {
    #[command(flatten)]
    input: TreeArg,
    #[arg(long, value_enum)]
    method: Method,
    /// Composite spec JSON (`alg`).
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Orders for the components, or the single base order (`alg`).
    /// Searched for when omitted.
    #[arg(long, value_delimiter = ',')]
    component_orders: Vec<PathBuf>,
    /// Order JSON file (`file`).
    #[arg(long)]
    order: Option<PathBuf>,
    /// Search node budget.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    /// Treat running out of budget as an error rather than "not found".
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Debug, Args)]
struct LabelArgs {
    #[command(flatten)]
    input: TreeArg,
    /// Order JSON file.
    #[arg(long)]
    order: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: TreeArg,
    /// Labeling JSON file.
    #[arg(long)]
    labeling: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PruningArg {
    Basic,
    Level,
}

#[derive(Debug, Args)]
struct ExactArgs {
    #[command(flatten)]
    input: TreeArg,
    /// Search node budget; unlimited when omitted.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads over the choice of the label-0 vertex.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    #[arg(long, value_enum, default_value = "basic")]
    pruning: PruningArg,
    /// Keep searching after a labeling at the lower bound turns up.
    #[arg(long)]
    no_early_stop: bool,
}

#[derive(Debug, Args)]
struct DotArgs {
    #[command(flatten)]
    input: TreeArg,
    /// Labeling JSON file to annotate vertices with.
    #[arg(long)]
    labeling: Option<PathBuf>,
}

/// A failure to report on standard error.
#[derive(Debug)]
enum Failure {
    Domain { name: &'static str, message: String },
    Usage(String),
}

impl Failure {
    fn domain(name: &'static str, message: impl Display) -> Failure {
        Failure::Domain {
            name,
            message: message.to_string(),
        }
    }
}

impl<E: ErrorName + Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::domain(e.name(), e)
    }
}

type Outcome<T> = Result<T, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn tree(&mut self, arg: &TreeArg) -> Outcome<Tree> {
        let text = match &arg.tree {
            Some(path) => read_file(path)?,
            None => {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::domain("Io", format!("standard input: {e}")))?;
                text
            }
        };
        let raw: TreeJson = parse(&text, "tree")?;
        Ok(Tree::new(
            raw.n,
            raw.edges.into_iter().map(|[u, v]| (u, v)),
        )?)
    }

    fn emit(&mut self, value: &impl Serialize) -> Outcome<()> {
        let text = serde_json::to_string(value).expect("plain data serializes");
        self.text(&text)
    }

    fn text(&mut self, text: &str) -> Outcome<()> {
        writeln!(self.stdout, "{text}").map_err(|e| Failure::domain("Io", e))
    }
}

fn read_file(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::domain("Io", format!("{}: {e}", path.display())))
}

fn parse<T: DeserializeOwned>(text: &str, what: &str) -> Outcome<T> {
    serde_json::from_str(text).map_err(|e| Failure::domain("InvalidJson", format!("{what}: {e}")))
}

fn read_tree_file(path: &Path) -> Outcome<Tree> {
    let raw: TreeJson = parse(&read_file(path)?, "tree")?;
    Ok(Tree::new(
        raw.n,
        raw.edges.into_iter().map(|[u, v]| (u, v)),
    )?)
}

fn read_order(path: &Path) -> Outcome<LinearOrder> {
    let raw: OrderJson = parse(&read_file(path)?, "order")?;
    Ok(LinearOrder::new(raw.order)?)
}

fn read_labeling(path: &Path) -> Outcome<RadioLabeling> {
    let raw: LabelingJson = parse(&read_file(path)?, "labeling")?;
    RadioLabeling::try_from(raw).map_err(|e| Failure::domain("InvalidLabeling", e))
}

fn gen(io: &mut Io, args: &GenArgs) -> Outcome<()> {
    let pairs = args
        .params
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Failure::Usage(format!("parameter `{p}` is not key=value")))
        })
        .collect::<Outcome<Vec<_>>>()?;
    let tree = if args.family == "random" {
        let n = match pairs.as_slice() {
            [("n", n)] => n.parse::<usize>().ok().filter(|&n| n >= 1),
            _ => None,
        }
        .ok_or_else(|| Failure::domain("BadParams", "random needs exactly n=<positive int>"))?;
        families::random_tree(n, &mut StdRng::seed_from_u64(args.seed))
    } else {
        let spec = FamilySpec::from_params(&args.family, pairs)?;
        families::generate(&spec)?
    };
    io.emit(&tree)
}

fn compose(io: &mut Io, args: &ComposeArgs) -> Outcome<()> {
    let trees = args
        .components
        .iter()
        .map(|p| read_tree_file(p))
        .collect::<Outcome<Vec<_>>>()?;
    let (tree, spec) = match args.kind {
        KindArg::Wk => {
            if let Some(k) = args.k.filter(|&k| k != trees.len()) {
                return Err(Failure::Usage(format!(
                    "--k {k} does not match {} component files",
                    trees.len()
                )));
            }
            compose_wk(&trees)?
        }
        KindArg::Sk | KindArg::Dk => {
            let [base] = trees.as_slice() else {
                return Err(Failure::Usage(
                    "sk and dk take exactly one base file".into(),
                ));
            };
            let k = args
                .k
                .ok_or_else(|| Failure::Usage("sk and dk need --k".into()))?;
            if matches!(args.kind, KindArg::Sk) {
                compose_sk(base, k)?
            } else {
                compose_dk(base, k)?
            }
        }
    };
    if let Some(path) = &args.spec_out {
        let text = serde_json::to_string(&spec.to_json()).expect("plain data serializes");
        fs::write(path, text + "\n")
            .map_err(|e| Failure::domain("Io", format!("{}: {e}", path.display())))?;
    }
    io.emit(&tree)
}

fn lb(io: &mut Io, args: &TreeArg) -> Outcome<()> {
    let tree = io.tree(args)?;
    let bound = tree.lower_bound()?;
    let view = tree.root_view();
    let mut out = json!({
        "n": tree.n(),
        "diam": tree.diam(),
        "epsilon": view.epsilon(),
        "centers": view.centers(),
        "total_level": view.total_level(),
        "lb": bound,
    });
    if tree.diam() == 1 {
        out["note"] = json!("diameter 1: the bound is applied below its usual range d >= 2");
    }
    io.emit(&out)
}

fn search(tree: &Tree, exhaustive: bool, budget: u64, what: &str) -> Outcome<LinearOrder> {
    find_lb_order(tree, &tree.root_view(), exhaustive, budget)?.ok_or_else(|| {
        let why = if exhaustive {
            "so its radio number exceeds the lower bound"
        } else {
            "within the budget"
        };
        Failure::domain(
            "NoOrderFound",
            format!("no order meeting the bound for {what} {why}"),
        )
    })
}

fn order(io: &mut Io, args: &OrderArgs) -> Outcome<()> {
    let tree = io.tree(&args.input)?;
    let order = match args.method {
        Method::Alg => {
            let path = args
                .spec
                .as_ref()
                .ok_or_else(|| Failure::Usage("--method alg needs --spec".into()))?;
            let json: CompositeSpecJson = parse(&read_file(path)?, "spec")?;
            let spec = CompositeSpec::from_json(&json, &tree)?;
            let parts = match spec.kind() {
                CompositeKind::Wk => spec.components().len(),
                CompositeKind::Sk | CompositeKind::Dk => 1,
            };
            let orders = if args.component_orders.is_empty() {
                (0..parts)
                    .map(|i| {
                        let what = format!("component {i}");
                        search(&spec.components()[i], args.exhaustive, args.budget, &what)
                    })
                    .collect::<Outcome<Vec<_>>>()?
            } else {
                args.component_orders
                    .iter()
                    .map(|p| read_order(p))
                    .collect::<Outcome<Vec<_>>>()?
            };
            order_composite(&spec, &orders)?
        }
        Method::Search => search(&tree, args.exhaustive, args.budget, "the tree")?,
        Method::File => {
            let path = args
                .order
                .as_ref()
                .ok_or_else(|| Failure::Usage("--method file needs --order".into()))?;
            let order = read_order(path)?;
            let report = check_order(&tree, &tree.root_view(), &order)?;
            if !report.endpoints_ok {
                return Err(Failure::domain(
                    "OrderRejected",
                    "first and last vertices break the endpoint rule",
                ));
            }
            if let Some(v) = report.violation {
                return Err(Failure::domain(
                    "OrderRejected",
                    format!(
                        "positions {} and {}: distance {} below the required {}",
                        v.i, v.j, v.distance, v.bound
                    ),
                ));
            }
            order
        }
    };
    io.emit(&order)
}

fn label(io: &mut Io, args: &LabelArgs) -> Outcome<()> {
    let tree = io.tree(&args.input)?;
    let order = read_order(&args.order)?;
    let labeling = labels_from_order(&tree, &tree.root_view(), &order)?;
    io.emit(&labeling)
}

fn verify(io: &mut Io, args: &VerifyArgs) -> Outcome<()> {
    let tree = io.tree(&args.input)?;
    let labeling = read_labeling(&args.labeling)?;
    let conflict = oracle::first_conflict(&tree, &labeling)?;
    let certificate = oracle::certify(&tree, &labeling)?;
    io.emit(&json!({
        "certificate": certificate,
        "span": labeling.span(),
        "lb": tree.lower_bound().ok(),
        "conflict": conflict,
    }))
}

fn exact_rn(io: &mut Io, args: &ExactArgs) -> Outcome<()> {
    let tree = io.tree(&args.input)?;
    let options = SolveOptions {
        budget: args.budget.unwrap_or(u64::MAX),
        pruning: match args.pruning {
            PruningArg::Basic => Pruning::Basic,
            PruningArg::Level => Pruning::Level,
        },
        workers: args.workers as usize,
        stop_at_lower_bound: !args.no_early_stop,
    };
    io.emit(&oracle::exact_rn_with(&tree, &options))
}

fn export_dot(io: &mut Io, args: &DotArgs) -> Outcome<()> {
    let tree = io.tree(&args.input)?;
    let labeling = match &args.labeling {
        Some(path) => {
            let labeling = read_labeling(path)?;
            if labeling.labels().len() != tree.n() {
                return Err(oracle::OracleError::LengthMismatch {
                    expected: tree.n(),
                    got: labeling.labels().len(),
                }
                .into());
            }
            Some(labeling)
        }
        None => None,
    };
    io.text(dot::render(&tree, labeling.as_ref()).trim_end())
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let mut io = Io { stdin, stdout };
    let outcome = match &cli.command {
        Command::Gen(a) => gen(&mut io, a),
        Command::Compose(a) => compose(&mut io, a),
        Command::Lb(a) => lb(&mut io, a),
        Command::Order(a) => order(&mut io, a),
        Command::Label(a) => label(&mut io, a),
        Command::Verify(a) => verify(&mut io, a),
        Command::ExactRn(a) => exact_rn(&mut io, a),
        Command::ExportDot(a) => export_dot(&mut io, a),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Domain { name, message }) => {
            let _ = writeln!(stderr, "{}", json!({ "error": name, "message": message }));
            1
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            2
        }
    }
}
