use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use scminor_core::antimorphism::{check_sachs, find_antimorphism};
use scminor_core::construction::prove;
use scminor_core::generators::{complete_graph, enumerate_sc, random_sc, sharp_4n, sharp_4n_plus_1};
use scminor_core::oracle::{hadwiger, DEFAULT_BUDGET};
use scminor_core::topology::{report, Certificate};
use scminor_core::{parse_graph6, verify_minor_model, write_graph6, Error, Graph, MinorModel};

/// Self-complementary graphs and their clique minors.
#[derive(Parser, Debug)]
#[command(name = "scminor", version)]
struct Cli {
    /// Emit one JSON document per result instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Expansion budget for exact minor searches.
    #[arg(long, global = true, env = "SCMINOR_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// graph6 file with one graph per line; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide self-complementarity and report an antimorphism.
    Check(Input),
    /// Construct the clique minor of a self-complementary graph.
    Minor(Input),
    /// Compute the Hadwiger number with a witness.
    Hadwiger(Input),
    /// Generate graphs as graph6.
    Gen {
        #[arg(long, value_enum, conflicts_with = "random", required_unless_present = "random")]
        family: Option<Family>,
        /// Random self-complementary graphs on `n` vertices.
        #[arg(long)]
        random: bool,
        #[arg(long)]
        n: usize,
        /// Number of random graphs.
        #[arg(long, default_value_t = 1, requires = "random")]
        count: u64,
    },
    /// List every self-complementary graph on `n` vertices up to isomorphism.
    Enum {
        #[arg(long)]
        n: usize,
        /// Allow the long runs at n = 12 and 13.
        #[arg(long)]
        large: bool,
    },
    /// Outerplanarity, planarity, clique certificates and apex sets.
    Topo {
        #[command(flatten)]
        input: Input,
        /// Largest apex size to test.
        #[arg(long, default_value_t = 2)]
        apex_max: usize,
    },
    /// Check the constructive clique minor on every class (or a random sample).
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        /// Allow the long enumerations at n = 12 and 13.
        #[arg(long)]
        large: bool,
        /// Use this many random graphs instead of the full enumeration.
        #[arg(long)]
        samples: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    /// Complete graph on `2n` vertices plus an independent set of `2n`, joined by two blocks.
    Sharp4n,
    /// `sharp4n` with an apex adjacent to the clique.
    Sharp4n1,
}

/// Severity-ordered outcome of one result; the exit code is the worst one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Ok = 0,
    Negative = 1,
    Usage = 2,
    Budget = 3,
}

struct Failure {
    status: Status,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { status: Status::Usage, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BudgetExceeded { .. } => Status::Budget,
            Error::TheoremViolation(_) | Error::InternalConsistency(_) => Status::Negative,
            _ => Status::Usage,
        };
        Failure { status, message: e.to_string() }
    }
}

struct Output {
    status: Status,
    text: String,
    json: Value,
}

impl Output {
    fn render(&self, as_json: bool) -> String {
        if as_json {
            self.json.to_string()
        } else {
            self.text.clone()
        }
    }
}

fn read_graphs(input: &Input) -> Result<Vec<Graph>, Failure> {
    let text = match &input.input {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| Failure::usage(format!("line {}: {e}", i + 1))))
        .collect()
}

fn sets_text(m: &MinorModel) -> String {
    let sets: Vec<String> = m.branch_sets.iter().map(|s| format!("{:?}", s.to_vec())).collect();
    format!("[{}]", sets.join(", "))
}

fn check(g: &Graph) -> Output {
    match find_antimorphism(g) {
        None => Output {
            status: Status::Negative,
            text: "self-complementary: no".into(),
            json: json!({ "self_complementary": false, "rho": null, "sachs": null }),
        },
        Some(rho) => {
            let sachs = match check_sachs(&rho.cycle_decomposition(), g.order()) {
                Ok(()) => "ok".to_string(),
                Err(v) => v.to_string(),
            };
            let status = if sachs == "ok" { Status::Ok } else { Status::Negative };
            Output {
                status,
                text: format!("self-complementary: yes, rho={rho}, sachs={sachs}"),
                json: json!({ "self_complementary": true, "rho": rho.to_string(), "sachs": sachs }),
            }
        }
    }
}

fn minor(g: &Graph) -> Result<Output, Failure> {
    Ok(match prove(g)? {
        None => Output {
            status: Status::Negative,
            text: "self-complementary: no".into(),
            json: json!({ "self_complementary": false }),
        },
        Some(w) => {
            let mut json = serde_json::to_value(&w).expect("witness serializes");
            json["self_complementary"] = Value::Bool(true);
            Output {
                status: Status::Ok,
                text: format!("{}\nbranch sets: {}", w.trace(), sets_text(&w.model)),
                json,
            }
        }
    })
}

fn hadwiger_number(g: &Graph, budget: u64) -> Output {
    let h = hadwiger(g, budget);
    let text = if h.exact {
        format!("hadwiger: {}, witness: {}", h.value, sets_text(&h.witness))
    } else {
        format!(
            "hadwiger: at least {} and at most {} (budget exhausted), witness: {}",
            h.value,
            h.upper,
            sets_text(&h.witness)
        )
    };
    Output {
        status: if h.exact { Status::Ok } else { Status::Budget },
        text,
        json: serde_json::from_str(&h.to_json()).expect("valid JSON"),
    }
}

fn certificate_text(c: &Certificate) -> String {
    match c {
        Certificate::Present(m) => format!("present {}", sets_text(m)),
        Certificate::NotFound => "not found".into(),
        Certificate::Indeterminate => "indeterminate (budget exhausted)".into(),
    }
}

fn topo(g: &Graph, apex_max: usize, budget: u64) -> Result<Output, Failure> {
    let r = report(g, 0..=apex_max, budget)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let apex: Vec<String> = r
        .apex
        .iter()
        .map(|(j, s)| match s {
            Some(s) => format!("{j}-apex: yes {s:?}"),
            None => format!("{j}-apex: no"),
        })
        .collect();
    let text = format!(
        "outerplanar: {}, planar: {}\nK6 certificate: {}\nK7 certificate: {}\n{}",
        yes_no(r.outerplanar),
        yes_no(r.planar),
        certificate_text(&r.il_certificate),
        certificate_text(&r.ik_certificate),
        apex.join(", ")
    );
    Ok(Output {
        status: if r.indeterminate() { Status::Budget } else { Status::Ok },
        text,
        json: serde_json::from_str(&r.to_json()).expect("valid JSON"),
    })
}

fn per_graph<F>(cli: &Cli, input: &Input, f: F) -> Result<(Status, Vec<String>), Failure>
where
    F: Fn(&Graph) -> Result<Output, Failure> + Sync + Send,
{
    let graphs = read_graphs(input)?;
    let results: Vec<Result<Output, Failure>> = graphs.par_iter().map(f).collect();
    let mut status = Status::Ok;
    let mut lines = Vec::with_capacity(results.len());
    for r in results {
        let out = r?;
        status = status.max(out.status);
        lines.push(out.render(cli.json));
    }
    Ok((status, lines))
}

fn gen(cli: &Cli, family: Option<Family>, n: usize, count: u64) -> Result<(Status, Vec<String>), Failure> {
    let graphs: Vec<Graph> = match family {
        Some(Family::Sharp4n) => vec![sharp_4n(n)?],
        Some(Family::Sharp4n1) => vec![sharp_4n_plus_1(n)?],
        None => (0..count)
            .map(|i| random_sc(n, cli.seed.wrapping_add(i)))
            .collect::<Result<_, _>>()?,
    };
    let lines = graphs
        .iter()
        .map(|g| {
            let g6 = write_graph6(g)?;
            Ok(if cli.json { json!({ "graph6": g6 }).to_string() } else { g6 })
        })
        .collect::<Result<_, Error>>()?;
    Ok((Status::Ok, lines))
}

fn enumerate(cli: &Cli, n: usize, large: bool) -> Result<(Status, Vec<String>), Failure> {
    let graphs = enumerate_sc(n, large)?;
    let codes: Vec<String> = graphs.iter().map(write_graph6).collect::<Result<_, _>>()?;
    if cli.json {
        Ok((Status::Ok, vec![json!({ "n": n, "count": codes.len(), "graphs": codes }).to_string()]))
    } else {
        Ok((Status::Ok, codes))
    }
}

fn verify_theorem(cli: &Cli, n: usize, large: bool, samples: Option<u64>) -> Result<(Status, Vec<String>), Failure> {
    let graphs: Vec<Graph> = match samples {
        Some(s) => (0..s)
            .map(|i| random_sc(n, cli.seed.wrapping_add(i)))
            .collect::<Result<_, _>>()?,
        None => enumerate_sc(n, large)?,
    };
    let k = n.div_ceil(2);
    let target = complete_graph(k);
    let results: Vec<Result<bool, Error>> = graphs
        .par_iter()
        .map(|g| {
            Ok(prove(g)?.is_some_and(|w| {
                w.model.len() == k && verify_minor_model(g, &w.model, &target).is_ok()
            }))
        })
        .collect();
    let mut verified = 0;
    let mut failures = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(true) => verified += 1,
            Ok(false) => failures.push(i),
            Err(e) => {
                eprintln!("graph {i}: {e}");
                failures.push(i);
            }
        }
    }
    let total = graphs.len();
    let status = if verified == total { Status::Ok } else { Status::Negative };
    let source = if samples.is_some() { "random" } else { "all classes" };
    let lines = if cli.json {
        vec![json!({
            "n": n,
            "k": k,
            "source": source,
            "graphs": total,
            "verified": verified,
            "failed": failures,
        })
        .to_string()]
    } else {
        vec![
            format!("{:>4} {:>8} {:>4} {:>9}  source", "n", "graphs", "k", "verified"),
            format!("{n:>4} {total:>8} {k:>4} {verified:>9}  {source}"),
            format!("{total} graphs, {verified}/{total} K{k}-minor certificates verified"),
        ]
    };
    Ok((status, lines))
}

fn run(cli: &Cli) -> Result<(Status, Vec<String>), Failure> {
    if cli.budget == 0 {
        return Err(Failure::usage("budget must be positive"));
    }
    let budget = cli.budget;
    match &cli.command {
        Command::Check(input) => per_graph(cli, input, |g| Ok(check(g))),
        Command::Minor(input) => per_graph(cli, input, minor),
        Command::Hadwiger(input) => per_graph(cli, input, |g| Ok(hadwiger_number(g, budget))),
        Command::Topo { input, apex_max } => per_graph(cli, input, |g| topo(g, *apex_max, budget)),
        Command::Gen { family, n, count, .. } => gen(cli, *family, *n, *count),
        Command::Enum { n, large } => enumerate(cli, *n, *large),
        Command::VerifyTheorem { n, large, samples } => verify_theorem(cli, *n, *large, *samples),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Status::Usage as u8 } else { 0 });
        }
    };
    let (status, lines) = match run(&cli) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("scminor: {}", f.message);
            return ExitCode::from(f.status as u8);
        }
    };
    let mut stdout = io::stdout().lock();
    for line in lines {
        if writeln!(stdout, "{line}").is_err() {
            break;
        }
    }
    ExitCode::from(status as u8)
}
