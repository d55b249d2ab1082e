use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use rgrkit::configurations::{
    assign_hosts, complete_to_affine, develop_ggr, develop_multi, develop_rmgr, from_mols,
    render_pdp, verify_configuration, verify_resolution, Configuration, ConfigurationFile,
    Resolution,
};
use rgrkit::constructions::{
    costas_rgr, cubic_rgr, ruzsa_best, ruzsa_rgr, welch_costas, RuzsaParams,
};
use rgrkit::existence::{
    classify, existence_table, materialize, open_cases, render_existence_table,
    render_threshold_table, threshold_table, Status,
};
use rgrkit::groups::FiniteGroup;
use rgrkit::rulers::{ModularRuler, Ruler};
use rgrkit::search::{find_ggr, find_rmgr, optimal_golomb, optimal_rgr, SearchStatus};
use rgrkit::Error;

mod parse;
mod reproduce;

#[derive(Parser)]
#[command(
    name = "rgrkit",
    version,
    about = "Resolvable Golomb rulers and progressive dinner parties"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the searches.
    #[arg(long, global = true, env = "RGRKIT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    /// Dinner-party schedule (configuration commands only).
    Pdp,
}

#[derive(Subcommand)]
enum Command {
    /// Check a ruler, group ruler or configuration.
    #[command(subcommand)]
    Verify(Verify),
    /// Run one of the explicit constructions.
    #[command(subcommand)]
    Construct(Construct),
    /// Exhaustive searches.
    #[command(subcommand)]
    Search(Search),
    /// Develop base blocks into a resolvable configuration.
    #[command(subcommand)]
    Develop(Develop),
    /// Resolvable (kw, k)-configuration from a transversal design over GF(w).
    FromMols {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        w: u64,
    },
    /// Add the missing parallel class to a resolvable (k^2, k)-configuration.
    CompleteAffine(InputArgs),
    /// Choose a host for every block of a resolvable symmetric configuration.
    AssignHosts(InputArgs),
    /// Existence of a resolvable symmetric (kw, k)-configuration.
    Exists {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        w: u64,
        /// Build and verify the configuration.
        #[arg(long)]
        witness: bool,
    },
    /// Threshold and existence tables for block sizes up to k-max.
    Table {
        #[arg(long, default_value_t = 13)]
        k_max: usize,
    },
    /// Recompute a published table or the worked examples and compare.
    Reproduce {
        #[arg(value_enum)]
        artifact: reproduce::Artifact,
        /// Include the slow rows.
        #[arg(long)]
        full: bool,
        /// Node budget per search branch.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Configuration JSON file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Args)]
struct GroupArgs {
    /// `Z(n)`, `Z(a)xZ(b)x...` or `A4`.
    #[arg(long)]
    group: String,
    /// Subgroup generators separated by `;`.
    #[arg(long)]
    subgroup: String,
}

#[derive(Subcommand)]
enum Verify {
    /// Resolvable Golomb ruler.
    Rgr {
        #[arg(long, allow_hyphen_values = true)]
        marks: String,
    },
    /// Golomb ruler.
    Gr {
        #[arg(long, allow_hyphen_values = true)]
        marks: String,
    },
    /// Modular Golomb ruler in Z_v.
    Mgr {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        marks: String,
    },
    /// Resolvable modular Golomb ruler in Z_v.
    Rmgr {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        marks: String,
    },
    /// Group Golomb ruler; marks separated by `;`.
    Ggr {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        marks: String,
    },
    /// Configuration file, with its resolution if present.
    Config(InputArgs),
}

#[derive(Subcommand)]
enum Construct {
    /// Primitive-root construction in Z_{p(p-1)}.
    Ruzsa {
        #[arg(long)]
        p: u64,
        #[arg(long, conflicts_with = "best")]
        g: Option<u64>,
        /// Shortest ruler over all primitive roots (the default without --g).
        #[arg(long)]
        best: bool,
    },
    /// Welch Costas permutation read as a ruler with spacing 2n.
    Costas {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        g: u64,
    },
    /// The cubic family of order k.
    Cubic {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum Search {
    /// Least length of a resolvable Golomb ruler.
    OptimalRgr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Least length of a Golomb ruler.
    OptimalGr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// A (v, k)-RMGR, or a proof that none exists.
    Rmgr {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// A GGR for a subgroup, or a proof that none exists.
    Ggr {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum Develop {
    /// Develop an RMGR through Z_v.
    Rmgr {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        marks: String,
    },
    /// Develop a GGR through its group.
    Ggr {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        marks: String,
    },
    /// Develop several base blocks through Z_v (blocks separated by `;`).
    Multi {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        base: String,
    },
}

/// A failed command: message and exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::DuplicateMark(_)
            | Error::NotRgr
            | Error::NotCostas
            | Error::NotRmgr
            | Error::NotGgr
            | Error::NotTransversal { .. }
            | Error::PairCovered(..)
            | Error::Nonextendable
            | Error::MatchingIncomplete { .. }
            | Error::NotSymmetric { .. }
            | Error::InvalidConfiguration(_)
            | Error::VerificationFailed(_)
            | Error::NoWitness(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a successful command prints.
struct Output {
    text: String,
    json: Value,
    pdp: Option<String>,
    code: u8,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Output {
        Output {
            text: text.into(),
            json,
            pdp: None,
            code: 0,
        }
    }

    fn failed_if(mut self, failed: bool) -> Output {
        if failed {
            self.code = EXIT_FAILED;
        }
        self
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

fn comma(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn verify_ruler(marks: &str, resolvable: bool) -> Result<Output, Failure> {
    let raw = parse::int_list(marks)?;
    let r = Ruler::new(raw)?;
    let (golomb, res) = (r.is_golomb(), r.is_resolvable());
    let ok = golomb && (!resolvable || res);
    let mut text = r.label();
    if !golomb {
        text.push_str(": repeated difference");
    } else if resolvable && !res {
        text.push_str(": marks miss a residue class");
    }
    let json = json!({
        "marks": r.marks(),
        "order": r.order(),
        "length": r.length(),
        "golomb": golomb,
        "resolvable": res,
        "valid": ok,
    });
    Ok(Output::new(text, json).failed_if(!ok))
}

fn verify_modular(v: u64, marks: &str, resolvable: bool) -> Result<Output, Failure> {
    let m = ModularRuler::new(parse::residue_list(marks)?, v)?;
    let mgr = m.is_mgr();
    let rmgr = if resolvable { m.is_rmgr()? } else { mgr };
    let ok = if resolvable { rmgr } else { mgr };
    let kind = if resolvable { "RMGR" } else { "MGR" };
    let text = format!(
        "({v},{})-{kind}: {}",
        m.order(),
        if ok { "yes" } else { "no" }
    );
    let json = json!({
        "marks": m.marks(),
        "modulus": v,
        "mgr": mgr,
        "rmgr": resolvable.then_some(rmgr),
        "valid": ok,
    });
    Ok(Output::new(text, json).failed_if(!ok))
}

fn verify_ggr(group: &GroupArgs, marks: &str) -> Result<Output, Failure> {
    let x = parse::group_ruler(&group.group, &group.subgroup, marks)?;
    let g = x.group();
    let distinct = x.has_distinct_differences();
    let transversal = x.is_left_transversal();
    let ok = distinct && transversal;
    let diffs: Vec<String> = x
        .differences()
        .iter()
        .map(|&d| g.format_element(d))
        .collect();
    let text = format!(
        "GGR in {g} over a subgroup of order {}: {}\ndistinct differences: {distinct}\nleft-coset transversal: {transversal}",
        x.subgroup().order(),
        if ok { "yes" } else { "no" }
    );
    let json = json!({
        "group": g.to_string(),
        "subgroup_order": x.subgroup().order(),
        "marks": x.marks().iter().map(|&m| g.format_element(m)).collect::<Vec<_>>(),
        "differences": diffs,
        "distinct_differences": distinct,
        "left_transversal": transversal,
        "valid": ok,
    });
    Ok(Output::new(text, json).failed_if(!ok))
}

fn verify_config(path: &str) -> Result<Output, Failure> {
    let (c, r) = parse::configuration(path)?;
    let mut violations = verify_configuration(&c).violations;
    if let Some(r) = &r {
        violations.extend(verify_resolution(&c, r).violations);
    }
    let ok = violations.is_empty();
    let mut text = format!(
        "({},{})-configuration with {} blocks{}: {}",
        c.v(),
        c.k(),
        c.b(),
        if r.is_some() { " and a resolution" } else { "" },
        if ok { "valid" } else { "invalid" }
    );
    for v in &violations {
        write!(text, "\n  {v}").unwrap();
    }
    let json = json!({ "valid": ok, "violations": violations });
    Ok(Output::new(text, json).failed_if(!ok))
}

fn render_configuration(c: &Configuration, r: &Resolution) -> String {
    let mut out = format!(
        "({},{})-configuration: {} blocks in {} parallel classes\n",
        c.v(),
        c.k(),
        c.b(),
        r.len()
    );
    for (i, class) in r.classes().iter().enumerate() {
        let blocks: Vec<String> = class
            .iter()
            .map(|&b| {
                let pts: Vec<String> = c.block(b).iter().map(|&p| c.label(p)).collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        writeln!(out, "class {}: {}", i + 1, blocks.join(" ")).unwrap();
    }
    out.pop();
    out
}

/// Configuration output in all three formats. The schedule is only
/// available for symmetric configurations.
fn configuration_output(
    c: &Configuration,
    r: &Resolution,
    format: Format,
) -> Result<Output, Failure> {
    let mut out = Output::new(
        render_configuration(c, r),
        to_json(&ConfigurationFile::from_parts(c, Some(r))),
    );
    if format == Format::Pdp {
        let h = assign_hosts(c, r)?;
        out.pdp = Some(render_pdp(c, r, &h));
    }
    Ok(out)
}

fn construct(cmd: &Construct) -> Result<Output, Failure> {
    match cmd {
        Construct::Ruzsa { p, g, .. } => {
            let (g, r) = match g {
                Some(g) => (*g, ruzsa_rgr(RuzsaParams::new(*p, *g)?)),
                None => ruzsa_best(*p)?,
            };
            let text = format!("{} from p = {p}, g = {g}: {}", r.label(), comma(r.marks()));
            let json = json!({ "p": p, "g": g, "marks": r.marks(), "length": r.length(), "rgr": r.is_rgr() });
            Ok(Output::new(text, json).failed_if(!r.is_rgr()))
        }
        Construct::Costas { p, g } => {
            let c = welch_costas(*p, *g)?;
            let r = costas_rgr(&c);
            let text = format!(
                "Costas permutation {}\n{}: {}",
                comma(c.image()),
                r.label(),
                comma(r.marks())
            );
            let json = json!({ "permutation": c.image(), "marks": r.marks(), "length": r.length(), "rgr": r.is_rgr() });
            Ok(Output::new(text, json).failed_if(!r.is_rgr()))
        }
        Construct::Cubic { k } => {
            let r = cubic_rgr(*k)?;
            let text = format!("{}: {}", r.label(), comma(r.marks()));
            let json =
                json!({ "k": k, "marks": r.marks(), "length": r.length(), "rgr": r.is_rgr() });
            Ok(Output::new(text, json))
        }
    }
}

fn budget_failure(e: Error) -> Result<Output, Failure> {
    match &e {
        Error::BudgetExceeded {
            proven_lower,
            best_known,
            nodes,
        } => {
            let mut text = format!("budget exceeded after {nodes} nodes; length >= {proven_lower}");
            if let Some(r) = best_known {
                write!(text, "\nbest known: {} {}", r.label(), comma(r.marks())).unwrap();
            }
            let json = json!({
                "status": "budget-exceeded",
                "proven_lower": proven_lower,
                "best_known": best_known,
                "nodes_explored": nodes,
            });
            let mut out = Output::new(text, json);
            out.code = EXIT_BUDGET;
            Ok(out)
        }
        _ => Err(e.into()),
    }
}

fn search_status_code(status: SearchStatus) -> u8 {
    match status {
        SearchStatus::Found => 0,
        SearchStatus::ExhaustedNonexistent => EXIT_FAILED,
        SearchStatus::BudgetExceeded => EXIT_BUDGET,
    }
}

fn status_text(status: SearchStatus) -> &'static str {
    match status {
        SearchStatus::Found => "found",
        SearchStatus::ExhaustedNonexistent => "none exists",
        SearchStatus::BudgetExceeded => "budget exceeded",
    }
}

fn search(cmd: &Search) -> Result<Output, Failure> {
    match cmd {
        Search::OptimalRgr { k, budget } | Search::OptimalGr { k, budget } => {
            let found = match cmd {
                Search::OptimalRgr { .. } => optimal_rgr(*k, *budget),
                _ => optimal_golomb(*k, *budget),
            };
            match found {
                Ok(o) => {
                    let text = format!(
                        "{} {} ({} nodes)",
                        o.witness.label(),
                        comma(o.witness.marks()),
                        o.nodes_explored
                    );
                    Ok(Output::new(text, to_json(&o)))
                }
                Err(e) => budget_failure(e),
            }
        }
        Search::Rmgr { v, k, budget } => {
            let o = find_rmgr(*v, *k, *budget)?;
            let mut text = format!(
                "({v},{k})-RMGR: {} ({} nodes)",
                status_text(o.status),
                o.nodes_explored
            );
            if let Some(m) = &o.witness {
                write!(text, "\n{}", comma(m.marks())).unwrap();
            }
            let mut out = Output::new(text, to_json(&o));
            out.code = search_status_code(o.status);
            Ok(out)
        }
        Search::Ggr { group, budget } => {
            let g = FiniteGroup::parse(&group.group)?;
            let h = parse::subgroup(&g, &group.subgroup)?;
            let o = find_ggr(&h, *budget)?;
            let marks = o.witness.as_ref().map(|x| {
                x.marks()
                    .iter()
                    .map(|&m| g.format_element(m))
                    .collect::<Vec<_>>()
            });
            let mut text = format!(
                "GGR in {g} over a subgroup of order {}: {} ({} nodes)",
                h.order(),
                status_text(o.status),
                o.nodes_explored
            );
            if let Some(m) = &marks {
                write!(text, "\n{}", m.join(" ")).unwrap();
            }
            let json = json!({
                "status": o.status,
                "witness": marks,
                "nodes_explored": o.nodes_explored,
                "node_budget": o.node_budget,
            });
            let mut out = Output::new(text, json);
            out.code = search_status_code(o.status);
            Ok(out)
        }
    }
}

fn develop(cmd: &Develop, format: Format) -> Result<Output, Failure> {
    let (c, r) = match cmd {
        Develop::Rmgr { v, marks } => {
            develop_rmgr(&ModularRuler::new(parse::residue_list(marks)?, *v)?)?
        }
        Develop::Ggr { group, marks } => {
            develop_ggr(&parse::group_ruler(&group.group, &group.subgroup, marks)?)?
        }
        Develop::Multi { v, k, base } => develop_multi(&parse::block_list(base)?, *v, *k)?,
    };
    configuration_output(&c, &r, format)
}

fn exists(k: usize, w: u64, witness: bool, format: Format) -> Result<Output, Failure> {
    let rec = classify(k, w)?;
    let status = match rec.status {
        Status::Exists => "exists",
        Status::Nonexistent => "does not exist",
        Status::Open => "is open",
    };
    let mut text = format!(
        "resolvable ({},{k})-configuration {status} [{}]",
        k as u64 * w,
        rec.authority.name()
    );
    if rec.status == Status::Exists {
        write!(text, "{}", if rec.cyclic { " cyclic" } else { "" }).unwrap();
    }
    let mut json = json!({ "record": rec });
    let mut pdp = None;
    if witness && rec.status == Status::Exists {
        let (c, r) = materialize(&rec)?;
        let out = configuration_output(&c, &r, format)?;
        write!(text, "\n{}", out.text).unwrap();
        json["configuration"] = out.json;
        pdp = out.pdp;
    }
    let mut out = Output::new(text, json).failed_if(rec.status == Status::Nonexistent);
    out.pdp = pdp;
    Ok(out)
}

fn table(k_max: usize) -> Output {
    let thresholds = threshold_table(k_max);
    let rows = existence_table(k_max);
    let open = open_cases(k_max);
    let open_text: Vec<String> = open.iter().map(|(k, w)| format!("({k},{w})")).collect();
    let text = format!(
        "{}\n{}\nopen: {}",
        render_threshold_table(&thresholds),
        render_existence_table(&rows),
        open_text.join(", ")
    );
    let json = json!({ "thresholds": thresholds, "existence": rows, "open_cases": open });
    Output::new(text, json)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Verify(v) => match v {
            Verify::Rgr { marks } => verify_ruler(marks, true),
            Verify::Gr { marks } => verify_ruler(marks, false),
            Verify::Mgr { v, marks } => verify_modular(*v, marks, false),
            Verify::Rmgr { v, marks } => verify_modular(*v, marks, true),
            Verify::Ggr { group, marks } => verify_ggr(group, marks),
            Verify::Config(input) => verify_config(&input.input),
        },
        Command::Construct(c) => construct(c),
        Command::Search(s) => search(s),
        Command::Develop(d) => develop(d, cli.format),
        Command::FromMols { k, w } => {
            let (c, r) = from_mols(*k, *w)?;
            configuration_output(&c, &r, cli.format)
        }
        Command::CompleteAffine(input) => {
            let (c, r) = parse::resolved_configuration(&input.input)?;
            let (c, r) = complete_to_affine(&c, &r)?;
            Ok(Output::new(
                render_configuration(&c, &r),
                to_json(&ConfigurationFile::from_parts(&c, Some(&r))),
            ))
        }
        Command::AssignHosts(input) => {
            let (c, r) = parse::resolved_configuration(&input.input)?;
            let h = assign_hosts(&c, &r)?;
            let hosts: Vec<String> = h.host.iter().map(|&p| c.label(p)).collect();
            let mut out = Output::new(format!("hosts by block: {}", hosts.join(" ")), to_json(&h));
            out.pdp = Some(render_pdp(&c, &r, &h));
            Ok(out)
        }
        Command::Exists { k, w, witness } => exists(*k, *w, *witness, cli.format),
        Command::Table { k_max } => Ok(table(*k_max)),
        Command::Reproduce {
            artifact,
            full,
            budget,
        } => {
            let checks = reproduce::run(*artifact, *full, *budget);
            let failed = checks.iter().any(|c| !c.pass);
            let text = checks
                .iter()
                .map(|c| c.line())
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::new(text, to_json(&checks)).failed_if(failed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).unwrap()),
                Format::Pdp => match &out.pdp {
                    Some(p) => p.clone(),
                    None => {
                        eprintln!("error: --format pdp only applies to configurations");
                        return ExitCode::from(EXIT_USAGE);
                    }
                },
                Format::Text => format!("{}\n", out.text),
            };
            // a reader that closed the pipe early is not an error
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
