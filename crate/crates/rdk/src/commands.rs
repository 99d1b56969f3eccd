//! Argument surface and dispatch for the `rdk` binary.

use std::io::Read as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rdk_core::orders::{build_poset, OrderKind};
use rdk_core::paren::{alpha_i, alpha_star, alpha_star_inverse, beta, gamma, gamma_ii, paren_from_tuple, DyckTuple};
use rdk_core::paths::{
    enumerate_paths, height_seq_to_word, step_seq_to_word, word_to_height_seq, word_to_step_seq,
    DyckWord, HeightSeq, StepSeq,
};
use rdk_core::stirling::{zeta, zeta_inverse, StirlingPerm};
use rdk_core::strips::{delta, theta};
use rdk_core::trees::xi;
use rdk_core::Budget;

use crate::checks::{self, Cell, CheckReport};
use crate::text::{
    parse_entries, parse_paren, parse_slope, parse_stirling, parse_tuple, parse_word,
    show_entries, show_tuple, word_json,
};
use crate::{dot, object_error, CliError};

#[derive(Parser)]
#[command(
    name = "rdk",
    version,
    about = "Tools for rational (a,b)-Dyck paths: enumeration, conversions, \
             decompositions, Graphviz export, and a verification harness"
)]
pub struct Cli {
    /// Cap on enumerated objects (overrides the RDK_BUDGET variable).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Word,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    Word,
    Step,
    Height,
    Stirling,
    Paren,
    Tuple,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecompKind {
    /// Horizontal strips: b ordinary Dyck words climbing the box order.
    Delta,
    /// Vertical strips: a ordinary Dyck words.
    Theta,
    /// Canonical admissible m-tuple of a step sequence.
    Gamma,
    /// Global-label splitting of a step sequence into b words.
    GammaIi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DotKind {
    /// Cover relation of a whole family under the chosen order.
    Poset,
    /// Labeled (b+1)-ary tree of a Stirling permutation.
    Arytree,
    /// Binary tree of one path, or of a comparable pair.
    Bintree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Young,
    Rotation,
    RotationHor,
}

#[derive(Subcommand)]
pub enum Command {
    /// List every path of the family, in step-sequence order.
    Enumerate {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "word")]
        format: Format,
    },
    /// Translate one object between its representations.
    Convert {
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
        /// Slope numerator; defaults to 1.
        #[arg(long)]
        a: Option<u64>,
        /// Slope denominator; defaults to 1 or to what the object implies.
        #[arg(long)]
        b: Option<u64>,
        #[arg(long, value_enum, default_value = "word")]
        format: Format,
        /// The object; read from stdin when absent or "-".
        input: Option<String>,
    },
    /// Split a path or step sequence into a tuple of ordinary Dyck words.
    Decompose {
        #[arg(long, value_enum)]
        kind: DecompKind,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        /// Number of components for gamma.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, value_enum, default_value = "word")]
        format: Format,
        /// The object; read from stdin when absent or "-".
        input: Option<String>,
    },
    /// Render an order diagram or a tree in Graphviz DOT.
    Dot {
        #[arg(long, value_enum)]
        kind: DotKind,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        /// Which order to draw for a poset; defaults to young.
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        /// Write the DOT text here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Objects; read from stdin when absent.
        input: Vec<String>,
    },
    /// Run one named check, or the whole registry, over a parameter grid.
    Verify {
        /// A check name, or "all".
        #[arg(long)]
        check: Option<String>,
        /// Print the registry and exit.
        #[arg(long)]
        list: bool,
        /// Bound every grid by (a+b)n <= SIZE.
        #[arg(long, value_name = "SIZE")]
        max_size: Option<u64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        /// Pin one instance; needs --a and --b.
        #[arg(long)]
        n: Option<u64>,
        /// Sweep n = 1..=N-MAX at one slope; needs --a and --b.
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, value_enum, default_value = "word")]
        format: Format,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let mut budget = resolve_budget(cli.budget)?;
    match cli.command {
        Command::Enumerate { a, b, n, format } => cmd_enumerate(a, b, n, format, &mut budget),
        Command::Convert { from, to, a, b, format, input } => {
            cmd_convert(from, to, a, b, format, input)
        }
        Command::Decompose { kind, a, b, m, format, input } => {
            cmd_decompose(kind, a, b, m, format, input)
        }
        Command::Dot { kind, a, b, n, order, out, input } => {
            cmd_dot(kind, a, b, n, order, out, input, &mut budget)
        }
        Command::Verify { check, list, max_size, a, b, n, n_max, format } => {
            cmd_verify(check, list, max_size, a, b, n, n_max, format, &mut budget)
        }
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<Budget, CliError> {
    if let Some(cap) = flag {
        return Ok(Budget::new(cap));
    }
    match std::env::var("RDK_BUDGET") {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Budget::new)
            .map_err(|_| CliError::Usage(format!("RDK_BUDGET must be an integer, got {raw:?}"))),
        Err(_) => Ok(Budget::default()),
    }
}

fn no_dot(format: Format) -> Result<(), CliError> {
    if format == Format::Dot {
        Err(CliError::Usage(String::from("dot output comes from the dot command")))
    } else {
        Ok(())
    }
}

fn read_input(arg: Option<String>) -> Result<String, CliError> {
    match arg {
        Some(text) if text != "-" => Ok(text),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn cmd_enumerate(a: u64, b: u64, n: u64, format: Format, budget: &mut Budget) -> Result<(), CliError> {
    no_dot(format)?;
    let slope = parse_slope(a, b)?;
    let mut items = Vec::new();
    for p in enumerate_paths(slope, n) {
        budget.charge(1).map_err(object_error)?;
        match format {
            Format::Word => println!("{}", p.to_ascii()),
            Format::Json => items.push(word_json(&p)),
            Format::Dot => unreachable!(),
        }
    }
    if format == Format::Json {
        print_json(&serde_json::Value::Array(items));
    }
    Ok(())
}

enum Loaded {
    Path(DyckWord),
    Perm(StirlingPerm),
    Tuple(DyckTuple),
}

fn load(from: Repr, a: Option<u64>, b: Option<u64>, input: &str) -> Result<Loaded, CliError> {
    match from {
        Repr::Word => {
            let slope = parse_slope(a.unwrap_or(1), b.unwrap_or(1))?;
            Ok(Loaded::Path(parse_word(slope, input)?))
        }
        Repr::Step => {
            let slope = parse_slope(a.unwrap_or(1), b.unwrap_or(1))?;
            let entries = parse_entries(input)?;
            let u = StepSeq::new(slope, entries).map_err(object_error)?;
            Ok(Loaded::Path(step_seq_to_word(&u)))
        }
        Repr::Height => {
            let slope = parse_slope(a.unwrap_or(1), b.unwrap_or(1))?;
            let entries = parse_entries(input)?;
            let h = HeightSeq::new(slope, entries).map_err(object_error)?;
            Ok(Loaded::Path(height_seq_to_word(&h)))
        }
        Repr::Stirling => Ok(Loaded::Perm(parse_stirling(b, input)?)),
        Repr::Paren => {
            let pp = parse_paren(input)?;
            if let Some(b) = b {
                if b != pp.b() {
                    return Err(CliError::Usage(format!(
                        "--b {b} disagrees with the presentation, which has b = {}",
                        pp.b()
                    )));
                }
            }
            Ok(Loaded::Perm(alpha_star_inverse(&pp)))
        }
        Repr::Tuple => Ok(Loaded::Tuple(parse_tuple(input)?)),
    }
}

fn loaded_to_path(loaded: &Loaded, a: Option<u64>, b: Option<u64>) -> Result<DyckWord, CliError> {
    match loaded {
        Loaded::Path(p) => Ok(p.clone()),
        Loaded::Perm(pi) => {
            let b = b.unwrap_or_else(|| pi.b());
            if b != pi.b() {
                return Err(CliError::Usage(format!(
                    "--b {b} disagrees with the permutation, which has b = {}",
                    pi.b()
                )));
            }
            let slope = parse_slope(a.unwrap_or(1), b)?;
            let u = StepSeq::new(slope, zeta_inverse(pi)).map_err(object_error)?;
            Ok(step_seq_to_word(&u))
        }
        Loaded::Tuple(t) => {
            let slope = parse_slope(a.unwrap_or(1), b.unwrap_or_else(|| t.m()))?;
            let entries = beta(t).entries().to_vec();
            let u = StepSeq::new(slope, entries).map_err(object_error)?;
            Ok(step_seq_to_word(&u))
        }
    }
}

fn loaded_to_perm(loaded: &Loaded) -> Result<StirlingPerm, CliError> {
    match loaded {
        Loaded::Path(p) => {
            let u = word_to_step_seq(p);
            zeta(u.entries(), p.slope().b()).map_err(object_error)
        }
        Loaded::Perm(pi) => Ok(pi.clone()),
        Loaded::Tuple(t) => zeta(beta(t).entries(), t.m()).map_err(object_error),
    }
}

fn cmd_convert(
    from: Repr,
    to: Repr,
    a: Option<u64>,
    b: Option<u64>,
    format: Format,
    input: Option<String>,
) -> Result<(), CliError> {
    no_dot(format)?;
    let text = read_input(input)?;
    let loaded = load(from, a, b, text.trim())?;
    let json = format == Format::Json;
    match to {
        Repr::Word => {
            let p = loaded_to_path(&loaded, a, b)?;
            if json {
                print_json(&word_json(&p));
            } else {
                println!("{}", p.to_ascii());
            }
        }
        Repr::Step => {
            let p = loaded_to_path(&loaded, a, b)?;
            let u = word_to_step_seq(&p);
            if json {
                print_json(&serde_json::json!({
                    "a": p.slope().a(),
                    "b": p.slope().b(),
                    "n": p.n(),
                    "entries": u.entries(),
                }));
            } else {
                println!("{}", show_entries(u.entries()));
            }
        }
        Repr::Height => {
            let p = loaded_to_path(&loaded, a, b)?;
            let h = word_to_height_seq(&p);
            if json {
                print_json(&serde_json::json!({
                    "a": p.slope().a(),
                    "b": p.slope().b(),
                    "n": p.n(),
                    "entries": h.entries(),
                }));
            } else {
                println!("{}", show_entries(h.entries()));
            }
        }
        Repr::Stirling => {
            let pi = loaded_to_perm(&loaded)?;
            if json {
                print_json(&serde_json::json!({
                    "b": pi.b(),
                    "n": pi.n(),
                    "entries": pi.entries(),
                }));
            } else {
                println!("{pi}");
            }
        }
        Repr::Paren => {
            let pp = match &loaded {
                Loaded::Tuple(t) => paren_from_tuple(t).map_err(object_error)?,
                _ => alpha_star(&loaded_to_perm(&loaded)?),
            };
            if json {
                print_json(&serde_json::json!({
                    "b": pp.b(),
                    "n": pp.n(),
                    "paren": pp.to_string(),
                }));
            } else {
                println!("{pp}");
            }
        }
        Repr::Tuple => {
            let t = match &loaded {
                Loaded::Tuple(t) => t.clone(),
                _ => alpha_i(&loaded_to_perm(&loaded)?),
            };
            if json {
                let words: Vec<String> =
                    t.components().iter().map(DyckWord::to_ascii).collect();
                print_json(&serde_json::json!({
                    "m": t.m(),
                    "size": t.size(),
                    "components": words,
                }));
            } else {
                println!("{}", show_tuple(&t));
            }
        }
    }
    Ok(())
}

fn cmd_decompose(
    kind: DecompKind,
    a: Option<u64>,
    b: Option<u64>,
    m: Option<u64>,
    format: Format,
    input: Option<String>,
) -> Result<(), CliError> {
    no_dot(format)?;
    let text = read_input(input)?;
    let text = text.trim();
    let (name, tuple) = match kind {
        DecompKind::Delta | DecompKind::Theta => {
            let (a, b) = match (a, b) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(CliError::Usage(String::from(
                        "pass --a and --b for a strip decomposition",
                    )))
                }
            };
            let p = parse_word(parse_slope(a, b)?, text)?;
            match kind {
                DecompKind::Delta => ("delta", delta(&p)),
                _ => ("theta", theta(&p)),
            }
        }
        DecompKind::Gamma => {
            let m = m.ok_or_else(|| {
                CliError::Usage(String::from("pass --m, the number of components"))
            })?;
            let entries = parse_entries(text)?;
            ("gamma", gamma(&entries, m).map_err(object_error)?)
        }
        DecompKind::GammaIi => {
            let b = b.ok_or_else(|| {
                CliError::Usage(String::from("pass --b, the number of components"))
            })?;
            let entries = parse_entries(text)?;
            ("gamma-ii", gamma_ii(&entries, b).map_err(object_error)?)
        }
    };
    match format {
        Format::Word => {
            for c in tuple.components() {
                println!("{}", c.to_ascii());
            }
        }
        Format::Json => {
            let words: Vec<String> =
                tuple.components().iter().map(DyckWord::to_ascii).collect();
            print_json(&serde_json::json!({ "kind": name, "components": words }));
        }
        Format::Dot => unreachable!(),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_dot(
    kind: DotKind,
    a: Option<u64>,
    b: Option<u64>,
    n: Option<u64>,
    order: Option<OrderArg>,
    out: Option<PathBuf>,
    input: Vec<String>,
    budget: &mut Budget,
) -> Result<(), CliError> {
    let rendered = match kind {
        DotKind::Poset => {
            let (a, b, n) = match (a, b, n) {
                (Some(a), Some(b), Some(n)) => (a, b, n),
                _ => {
                    return Err(CliError::Usage(String::from(
                        "pass --a, --b, and --n for a poset",
                    )))
                }
            };
            let slope = parse_slope(a, b)?;
            let kind = match order.unwrap_or(OrderArg::Young) {
                OrderArg::Young => OrderKind::Young,
                OrderArg::Rotation => OrderKind::Rotation,
                OrderArg::RotationHor => OrderKind::RotationHor,
            };
            let poset = build_poset(slope, n, kind, budget).map_err(object_error)?;
            dot::poset_dot(&poset)
        }
        DotKind::Arytree => {
            let text = read_one(input)?;
            let pi = parse_stirling(b, &text)?;
            dot::arytree_dot(&xi(&pi))
        }
        DotKind::Bintree => {
            let words = read_words(input)?;
            let slope = parse_slope(a.unwrap_or(1), b.unwrap_or(1))?;
            let tree = match words.len() {
                1 => rdk_core::bintree::tr(&parse_word(slope, &words[0])?),
                2 => {
                    let upper = parse_word(slope, &words[0])?;
                    let lower = parse_word(slope, &words[1])?;
                    rdk_core::bintree::build_bqp(&upper, &lower).map_err(object_error)?
                }
                k => {
                    return Err(CliError::Usage(format!(
                        "pass one word, or an upper and a lower word, got {k}"
                    )))
                }
            };
            dot::bintree_dot(&tree)
        }
    };
    match out {
        Some(path) => std::fs::write(&path, rendered)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn read_one(input: Vec<String>) -> Result<String, CliError> {
    let mut words = read_words(input)?;
    if words.len() == 1 {
        Ok(words.remove(0))
    } else {
        Err(CliError::Usage(format!("expected one object, got {}", words.len())))
    }
}

fn read_words(input: Vec<String>) -> Result<Vec<String>, CliError> {
    if input.is_empty() {
        let text = read_input(None)?;
        Ok(text.split_whitespace().map(str::to_string).collect())
    } else {
        Ok(input)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    check: Option<String>,
    list: bool,
    max_size: Option<u64>,
    a: Option<u64>,
    b: Option<u64>,
    n: Option<u64>,
    n_max: Option<u64>,
    format: Format,
    budget: &mut Budget,
) -> Result<(), CliError> {
    no_dot(format)?;
    if list {
        for c in checks::registry() {
            println!("{:<24}{}", c.name, c.claim);
        }
        return Ok(());
    }
    let name = check
        .ok_or_else(|| CliError::Usage(String::from("pass --check NAME, or --list")))?;
    let selected = if name == "all" {
        checks::registry()
    } else {
        match checks::find(&name) {
            Some(c) => vec![c],
            None => {
                return Err(CliError::Usage(format!(
                    "no check named {name:?}; --list shows the registry"
                )))
            }
        }
    };
    let pinned: Option<(Vec<Cell>, String)> = match (a, b, n, n_max) {
        (None, None, None, None) => None,
        (Some(a), Some(b), Some(n), None) => {
            parse_slope(a, b)?;
            let cell = Cell { a, b, n };
            Some((vec![cell], format!("the single instance {}", cell.describe())))
        }
        (Some(a), Some(b), None, Some(n_max)) => {
            parse_slope(a, b)?;
            let cells = (1..=n_max).map(|n| Cell { a, b, n }).collect();
            Some((cells, format!("slope ({a},{b}) with n <= {n_max}")))
        }
        _ => {
            return Err(CliError::Usage(String::from(
                "pass --a and --b together with --n or --n-max",
            )))
        }
    };
    let mut reports = Vec::new();
    for check in &selected {
        let (cells, grid) = match &pinned {
            Some((cells, grid)) => {
                for &cell in cells {
                    check.grid.admits(cell).map_err(CliError::Usage)?;
                }
                (cells.clone(), grid.clone())
            }
            None => (check.grid.cells(max_size), check.grid.describe(max_size)),
        };
        let start = Instant::now();
        let report = check.execute(&cells, grid, budget).map_err(object_error)?;
        eprintln!("# {} {}ms", check.name, start.elapsed().as_millis());
        reports.push(report);
    }
    match format {
        Format::Word => print_reports(&reports),
        Format::Json => print_json(&reports_json(&reports)),
        Format::Dot => unreachable!(),
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        Err(CliError::Failure(format!(
            "{failed} of {} checks failed",
            reports.len()
        )))
    } else {
        Ok(())
    }
}

const FAILURES_SHOWN: usize = 20;

fn print_reports(reports: &[CheckReport]) {
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            println!();
        }
        println!("check: {}", r.name);
        println!("claim: {}", r.claim);
        println!("grid: {}", r.grid);
        println!("instances: {}", r.instances);
        for f in r.failures.iter().take(FAILURES_SHOWN) {
            println!("failure: {} {}: {}", f.cell.describe(), f.object, f.detail);
        }
        if r.failures.len() > FAILURES_SHOWN {
            println!("and {} further failures", r.failures.len() - FAILURES_SHOWN);
        }
        println!("status: {}", if r.passed() { "pass" } else { "fail" });
    }
    if reports.len() > 1 {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        println!();
        println!("summary: {} passed, {} failed", reports.len() - failed, failed);
    }
}

fn reports_json(reports: &[CheckReport]) -> serde_json::Value {
    let items: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            let failures: Vec<serde_json::Value> = r
                .failures
                .iter()
                .map(|f| {
                    serde_json::json!({
                        "a": f.cell.a,
                        "b": f.cell.b,
                        "n": f.cell.n,
                        "object": f.object,
                        "detail": f.detail,
                    })
                })
                .collect();
            serde_json::json!({
                "check": r.name,
                "claim": r.claim,
                "grid": r.grid,
                "instances": r.instances,
                "failures": failures,
                "status": if r.passed() { "pass" } else { "fail" },
            })
        })
        .collect();
    serde_json::Value::Array(items)
}

fn print_json(value: &serde_json::Value) {
    let text = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    println!("{text}");
}
