use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dirings::axioms::{self, AxiomProfile, StructureClass};
use dirings::binop::{verify_bg_nearring, BgMode, BgReport};
use dirings::diring::{self, Direction, DiringParts};
use dirings::io::{self, OpsBundle};
use dirings::omega::Congruence;
use dirings::search::{self, Constraint, SearchResult, SearchSpec, DEFAULT_BUDGET};
use dirings::verify::{self, GroupReport, VerifyConfig};
use dirings::{BinOp, ElementSet, Error, FiniteGroup, NamedOp, OmegaGroup};

/// Finite near-rings, skew rings, weak rings and dirings.
///
/// Groups are JSON files or fixture names (z4, klein4, sym3, ...). An
/// operation is a JSON file or one of null, pi1, pi2, plus, plus_op, conj.
#[derive(Parser)]
#[command(name = "dirings", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Structure flags and the axiom profile of one operation.
    Classify { group: String, op: String },
    /// Axiom profile with counterexamples.
    Profile { group: String, op: String },
    /// Skew ring to weak ring or back.
    Convert {
        #[arg(long)]
        direction: Direction,
        group: String,
        op: String,
    },
    /// Zero-symmetric and constant parts of the diring built from `op`.
    Decompose {
        group: String,
        op: String,
        /// Read `op` as the dot of the diring instead of its circ.
        #[arg(long)]
        dot: bool,
    },
    /// Ideals and congruences of the group with the given operations.
    Ideals { group: String, ops: Option<String> },
    /// Enumerate operation tables under constraints.
    Enumerate {
        #[arg(long)]
        group: String,
        /// Comma separated: assoc, ldist, lskew, wassoc, group0, zsym.
        #[arg(long, value_delimiter = ',')]
        require: Vec<Constraint>,
        /// Enumerate diring pairs; the constraints apply to the dot.
        #[arg(long)]
        pairs: bool,
        #[arg(long)]
        upto_aut: bool,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run the whole check suite on each group.
    VerifyPaper {
        #[arg(required = true)]
        groups: Vec<String>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Seed of the sampled check on groups of order 3.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// The six named operations on a group.
    Catalog { group: String },
    /// Near-ring axioms of all operations on a group.
    Bg {
        group: String,
        /// Check this many random triples instead of all of them.
        #[arg(long, requires = "seed")]
        sample: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// A finished command: what to print and whether everything checked held.
struct Outcome {
    json: String,
    table: String,
    passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(value: &T, table: String, passed: bool) -> Self {
        Outcome {
            json: io::to_json_string(value),
            table,
            passed,
        }
    }
}

fn budget(arg: Option<u64>) -> Result<u64, Error> {
    if let Some(b) = arg {
        return Ok(b);
    }
    match std::env::var("DIRINGS_BUDGET") {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("DIRINGS_BUDGET is not a number: {v}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn resolve_op(g: &FiniteGroup, arg: &str) -> Result<BinOp, Error> {
    let op = match NamedOp::from_name(arg) {
        Some(named) => BinOp::named(g, named),
        None => io::load_binop(arg.as_ref())?,
    };
    axioms::check_compatible(g, &op)?;
    Ok(op)
}

fn render_op(op: &BinOp) -> String {
    let width = op.n().saturating_sub(1).to_string().len();
    op.rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            format!("  {}\n", cells.join(" "))
        })
        .collect()
}

fn render_set(s: &ElementSet) -> String {
    let items: Vec<String> = s.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn render_flags(pairs: &[(&str, bool)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("  {k:<width$}  {v}\n"))
        .collect()
}

fn profile_table(p: &AxiomProfile) -> String {
    render_flags(&[
        ("associative", p.associative),
        ("commutative", p.commutative),
        ("left_distributive", p.left_distributive),
        ("right_distributive", p.right_distributive),
        ("left_skew_distributive", p.left_skew_distributive),
        ("weakly_associative", p.weakly_associative),
    ])
}

fn class_table(c: &StructureClass) -> String {
    render_flags(&[
        ("left_near_ring", c.left_near_ring),
        ("left_skew_ring", c.left_skew_ring),
        ("left_weak_ring", c.left_weak_ring),
        ("digroup", c.digroup),
        ("left_skew_brace", c.left_skew_brace),
        ("zero_symmetric", c.zero_symmetric),
        ("group_with_shifted_identity", c.group_with_shifted_identity),
    ])
}

#[derive(Serialize)]
struct ClassifyReport {
    class: StructureClass,
    profile: AxiomProfile,
}

#[derive(Serialize)]
struct DecomposeReport {
    circ: BinOp,
    dot: BinOp,
    parts: DiringParts,
}

#[derive(Serialize)]
struct IdealsReport {
    ideals: Vec<ElementSet>,
    congruences: Vec<Congruence>,
    /// Ideals by the specialized near-ring or skew-ring definition, when
    /// there is a single operation of that kind.
    specialized: Option<Vec<ElementSet>>,
    bijection: bool,
}

#[derive(Serialize)]
struct EnumerateReport<T> {
    constraints: Vec<String>,
    pairs: bool,
    up_to_aut: bool,
    labeled_count: usize,
    count: usize,
    nodes_explored: u64,
    complete: bool,
    tables: Vec<T>,
}

fn enumerate_report<T: Serialize + search::Relabel + Ord + Clone>(
    g: &FiniteGroup,
    require: &[Constraint],
    pairs: bool,
    upto_aut: bool,
    result: SearchResult<T>,
    render: impl Fn(&T) -> String,
) -> Outcome {
    let labeled_count = result.count();
    let result = if upto_aut {
        search::dedup_up_to_aut(g, result)
    } else {
        result
    };
    let report = EnumerateReport {
        constraints: require.iter().map(constraint_name).collect(),
        pairs,
        up_to_aut: upto_aut,
        labeled_count,
        count: result.count(),
        nodes_explored: result.nodes_explored,
        complete: result.complete,
        tables: result.tables,
    };
    let mut table = format!(
        "count {} (labeled {}), nodes {}, complete {}\n",
        report.count, report.labeled_count, report.nodes_explored, report.complete
    );
    for (i, t) in report.tables.iter().enumerate() {
        table.push_str(&format!("#{i}\n{}", render(t)));
    }
    Outcome::new(&report, table, report.complete)
}

fn constraint_name(c: &Constraint) -> String {
    match c {
        Constraint::Associative => "assoc",
        Constraint::LeftDistributive => "ldist",
        Constraint::LeftSkewDistributive => "lskew",
        Constraint::WeaklyAssociative => "wassoc",
        Constraint::GroupWithZeroIdentity => "group0",
        Constraint::ZeroSymmetric => "zsym",
        Constraint::DiringPartner { .. } => "partner",
    }
    .to_string()
}

fn ideals(g: FiniteGroup, ops: Vec<BinOp>) -> Result<Outcome, Error> {
    let specialized = match ops.as_slice() {
        [op] => {
            let class = axioms::classify(&g, op);
            if class.left_near_ring {
                Some(
                    g.subgroups()?
                        .into_iter()
                        .filter(|s| axioms::nearring_ideal_check(&g, op, s))
                        .collect(),
                )
            } else if class.left_skew_ring {
                Some(
                    g.subgroups()?
                        .into_iter()
                        .filter(|s| axioms::skewring_ideal_check(&g, op, s))
                        .collect(),
                )
            } else {
                None
            }
        }
        _ => None,
    };
    let a = OmegaGroup::from_binops(g, &ops)?;
    let ideals = a.ideals()?;
    let (congruences, bijection) = match a.congruence_ideal_bijection() {
        Ok(pairs) => (pairs.into_iter().map(|(c, _)| c).collect(), true),
        Err(Error::BijectionFailure(_)) => (a.all_congruences()?, false),
        Err(e) => return Err(e),
    };
    let passed = bijection && specialized.as_ref().is_none_or(|s| *s == ideals);
    let mut table = String::from("ideals\n");
    for i in &ideals {
        table.push_str(&format!("  {}\n", render_set(i)));
    }
    table.push_str(&format!("congruences {}\n", congruences.len()));
    for c in &congruences {
        table.push_str(&format!("  {:?}\n", c.classes()));
    }
    let report = IdealsReport {
        ideals,
        congruences,
        specialized,
        bijection,
    };
    Ok(Outcome::new(&report, table, passed))
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Classify { group, op } => {
            let g = io::resolve_group(group)?;
            let f = resolve_op(&g, op)?;
            let report = ClassifyReport {
                class: axioms::classify(&g, &f),
                profile: axioms::profile(&g, &f),
            };
            let table = format!(
                "{}{}",
                class_table(&report.class),
                profile_table(&report.profile)
            );
            Ok(Outcome::new(&report, table, true))
        }
        Command::Profile { group, op } => {
            let g = io::resolve_group(group)?;
            let f = resolve_op(&g, op)?;
            let p = axioms::profile(&g, &f);
            Ok(Outcome::new(&p, profile_table(&p), true))
        }
        Command::Convert {
            direction,
            group,
            op,
        } => {
            let g = io::resolve_group(group)?;
            let f = resolve_op(&g, op)?;
            let out = diring::convert(&g, &f, *direction)?;
            Ok(Outcome::new(&out, render_op(&out), true))
        }
        Command::Decompose { group, op, dot } => {
            let g = io::resolve_group(group)?;
            let f = resolve_op(&g, op)?;
            let d = if *dot {
                dirings::Diring::from_dot(g, f)?
            } else {
                dirings::Diring::from_circ(g, f)?
            };
            let parts = d.parts()?;
            let table = format!(
                "G0 = {}\nGc = {}\nsemidirect {}\nsubdirings {}\n",
                render_set(&parts.zero_symmetric),
                render_set(&parts.constant),
                parts.semidirect,
                parts.subdirings
            );
            let passed = parts.all_hold();
            let report = DecomposeReport {
                circ: d.circ().clone(),
                dot: d.dot().clone(),
                parts,
            };
            Ok(Outcome::new(&report, table, passed))
        }
        Command::Ideals { group, ops } => {
            let g = io::resolve_group(group)?;
            let ops = match ops {
                None => Vec::new(),
                Some(arg) => match NamedOp::from_name(arg) {
                    Some(named) => vec![BinOp::named(&g, named)],
                    None => io::load_ops(arg.as_ref())?
                        .into_iter()
                        .map(|(_, op)| op)
                        .collect(),
                },
            };
            ideals(g, ops)
        }
        Command::Enumerate {
            group,
            require,
            pairs,
            upto_aut,
            budget: b,
            workers,
        } => {
            let g = io::resolve_group(group)?;
            let b = budget(*b)?;
            if *pairs {
                let result = search::enumerate_dirings(&g, require, b, *workers)?;
                Ok(enumerate_report(
                    &g,
                    require,
                    true,
                    *upto_aut,
                    result,
                    |p| format!("circ\n{}dot\n{}", render_op(&p.circ), render_op(&p.dot)),
                ))
            } else {
                let spec = SearchSpec::new(g.clone(), require.clone())
                    .budget(b)
                    .workers(*workers);
                let result = search::enumerate_binops(&spec)?;
                Ok(enumerate_report(
                    &g, require, false, *upto_aut, result, render_op,
                ))
            }
        }
        Command::VerifyPaper {
            groups,
            budget: b,
            workers,
            seed,
        } => {
            let cfg = VerifyConfig {
                budget: budget(*b)?,
                workers: *workers,
                bg_seed: *seed,
                ..VerifyConfig::default()
            };
            let loaded: Vec<(String, FiniteGroup)> = groups
                .iter()
                .map(|arg| Ok((arg.clone(), io::resolve_group(arg)?)))
                .collect::<Result<_, Error>>()?;
            let reports: Vec<GroupReport> = loaded
                .iter()
                .map(|(label, g)| verify::verify_group(label, g, &cfg))
                .collect();
            let table: String = reports.iter().map(verify::render_table).collect();
            let passed = reports.iter().all(GroupReport::passed);
            Ok(Outcome::new(&reports, table, passed))
        }
        Command::Catalog { group } => {
            let g = io::resolve_group(group)?;
            let bundle = OpsBundle::catalog(&g);
            let table = bundle
                .ops
                .iter()
                .map(|(name, op)| format!("{name}\n{}", render_op(op)))
                .collect();
            Ok(Outcome::new(&bundle, table, true))
        }
        Command::Bg {
            group,
            sample,
            seed,
        } => {
            let g = io::resolve_group(group)?;
            let mode = match (sample, seed) {
                (Some(triples), Some(seed)) => BgMode::Sample {
                    triples: *triples,
                    seed: *seed,
                },
                _ => BgMode::Full,
            };
            let report: BgReport = verify_bg_nearring(&g, mode)?;
            let mut table = format!("triples {}\n", report.triples_checked);
            for l in &report.laws {
                let status = if l.counterexample.is_none() {
                    "PASS"
                } else {
                    "FAIL"
                };
                table.push_str(&format!("  {:?}  {status}\n", l.law));
            }
            table.push_str(&format!(
                "literal formula fails: {:?}\n",
                report.literal_formula_failures
            ));
            let passed = report.passed();
            Ok(Outcome::new(&report, table, passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut text = match cli.format {
        Format::Json => outcome.json,
        Format::Table => outcome.table,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
