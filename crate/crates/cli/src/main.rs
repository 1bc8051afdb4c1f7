use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use loopwork::axioms::Side;
use loopwork::catalog;
use loopwork::error::Error;
use loopwork::products::{block_product, decompose, direct_product, parse_mphi, to_mphi};
use loopwork::quotient::{
    are_isomorphic, ascending_central_series, coset, coset_partition, factor, is_normal, nuclei,
    NormalityFailure,
};
use loopwork::report::{analyze, render_text, TableSource};
use loopwork::search::{enumerate, Constraints, SearchMode, SearchSpec, Strategy};
use loopwork::set::{parse_subset, ElementSet};
use loopwork::substructure::subsystems;
use loopwork::table::CayleyTable;

#[derive(Parser)]
#[command(
    name = "loopwork",
    version,
    about = "Analyze finite loops and quasigroups given by Cayley tables"
)]
struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress normal output; the exit code still reports errors.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SubsetArgs {
    /// Table source: a path, `catalog:<id>`, or `-` for stdin.
    src: String,
    /// Comma-separated 1-based elements, e.g. 1,2,3,4.
    #[arg(long)]
    subset: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    RowMajor,
    MostConstrained,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural report.
    Analyze {
        src: String,
    },
    /// Every subsystem and the Lagrangian class.
    Subsystems {
        src: String,
    },
    /// Coset partition of a subsystem, or a single coset with --rep.
    Cosets {
        #[command(flatten)]
        s: SubsetArgs,
        #[arg(long)]
        rep: Option<usize>,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Normality test with a witness on failure.
    Normal {
        #[command(flatten)]
        s: SubsetArgs,
    },
    /// Factor system over a normal subsystem.
    Factor {
        #[command(flatten)]
        s: SubsetArgs,
    },
    /// Loop center.
    Center {
        src: String,
    },
    /// Left, middle and right nuclei and the center.
    Nuclei {
        src: String,
    },
    /// Ascending central series.
    Series {
        src: String,
    },
    /// Isomorphism test between two tables.
    Iso {
        a: String,
        b: String,
    },
    /// Direct product of two tables or block product of a .mphi file.
    #[command(group(ArgGroup::new("kind").required(true).args(["direct", "block"])))]
    Product {
        #[arg(long, num_args = 2, value_names = ["E", "C"])]
        direct: Option<Vec<String>>,
        #[arg(long, value_name = "MPHI")]
        block: Option<PathBuf>,
    },
    /// Decompose over a normal subsystem into a multi-phi system (.mphi).
    Decompose {
        #[command(flatten)]
        s: SubsetArgs,
    },
    /// Enumerate loops of small order up to isomorphism.
    #[command(group(ArgGroup::new("mode").args(["count", "emit"])))]
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        invertible: bool,
        #[arg(long)]
        nafil: bool,
        #[arg(long)]
        abelian: bool,
        #[arg(long)]
        plain: bool,
        #[arg(long)]
        composite: bool,
        /// Count only (the default).
        #[arg(long)]
        count: bool,
        /// Write representatives and a manifest into this directory.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "row-major")]
        strategy: StrategyArg,
        /// Count every reduced table instead of isomorphism classes.
        #[arg(long)]
        labeled: bool,
    },
    /// Built-in tables.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Every built-in table.
    List,
    /// One table with its re-checked claims.
    Show { id: String },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(e) if e.kind() != std::io::ErrorKind::NotFound => {
                Failure::Internal(e.to_string())
            }
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Output {
    json: bool,
    quiet: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, text: impl FnOnce() -> String, value: &T) -> Outcome {
        if self.quiet {
            return Ok(());
        }
        let s = if self.json {
            serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?
                + "\n"
        } else {
            text()
        };
        let mut out = std::io::stdout().lock();
        match out.write_all(s.as_bytes()).and_then(|_| out.flush()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                Err(Failure::Internal(e.to_string()))
            }
            _ => Ok(()),
        }
    }
}

fn load(src: &str) -> Result<CayleyTable, Failure> {
    Ok(TableSource::parse(src).load()?)
}

fn load_subset(s: &SubsetArgs) -> Result<(CayleyTable, ElementSet), Failure> {
    let t = load(&s.src)?;
    let h = parse_subset(&s.subset).map_err(Failure::Input)?;
    Ok((t, h))
}

fn join_sets(sets: &[ElementSet]) -> String {
    sets.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Outcome {
    let out = Output {
        json: cli.json,
        quiet: cli.quiet,
    };
    match cli.command {
        Command::Analyze { src } => {
            let r = analyze(&load(&src)?)?;
            out.emit(|| render_text(&r), &r)
        }
        Command::Subsystems { src } => {
            let r = subsystems(&load(&src)?)?;
            out.emit(
                || {
                    let mut s = format!(
                        "{} nontrivial subsystems; {}\n",
                        r.nontrivial().count(),
                        r.lagrangian_class.describe()
                    );
                    for x in &r.subsystems {
                        s += &format!(
                            "{} order {} {}: {}\n",
                            x.elements,
                            x.order,
                            if x.is_divisor {
                                "divisor"
                            } else {
                                "non-divisor"
                            },
                            x.label
                        );
                    }
                    s
                },
                &r,
            )
        }
        Command::Cosets { s, rep, side } => {
            let (t, h) = load_subset(&s)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            if let Some(a) = rep {
                let c = coset(&t, h, a, side)?;
                #[derive(Serialize)]
                struct One {
                    subsystem: ElementSet,
                    representative: usize,
                    side: Side,
                    coset: ElementSet,
                }
                let v = One {
                    subsystem: h,
                    representative: a,
                    side,
                    coset: c,
                };
                return out.emit(|| format!("{c}\n"), &v);
            }
            let r = coset_partition(&t, h)?;
            out.emit(
                || {
                    let mut s = format!("cells: {}\n", join_sets(&r.cells));
                    s += &format!("partition: {}\n", if r.partitions { "yes" } else { "no" });
                    s += &format!(
                        "left cosets equal right cosets: {}\n",
                        if r.left_equals_right { "yes" } else { "no" }
                    );
                    if let Some(w) = r.witness {
                        s += &format!("witness element: {} ({:?})\n", w.element, w.defect);
                    }
                    s
                },
                &r,
            )
        }
        Command::Normal { s } => {
            let (t, h) = load_subset(&s)?;
            let r = is_normal(&t, h)?;
            out.emit(
                || {
                    if r.normal {
                        let k = r.factor.as_ref().map_or(0, |f| f.table.order());
                        return format!("normal; factor of order {k}; cells {}\n", join_sets(&r.partition.cells));
                    }
                    match (r.failure, r.cell_witness) {
                        (Some(NormalityFailure::NotWellDefined), Some(w)) => {
                            let (a, b, x) = w.first;
                            let (c, d, y) = w.second;
                            format!(
                                "not normal; witness ℓ{a}⋄ℓ{b}=ℓ{x} vs ℓ{c}⋄ℓ{d}=ℓ{y}\n\
                                 cells B{}⋄B{} give products in B{} and B{}; cosets {}\n",
                                w.cells.0,
                                w.cells.1,
                                w.product_cells.0,
                                w.product_cells.1,
                                join_sets(&r.partition.cells)
                            )
                        }
                        (Some(NormalityFailure::NotAPartition), _) => {
                            let e = r.partition.witness.map_or(0, |w| w.element);
                            format!("not normal; left cosets do not partition (coset of {e} overlaps)\n")
                        }
                        _ => "not normal; cell multiplication is not a loop\n".to_string(),
                    }
                },
                &r,
            )
        }
        Command::Factor { s } => {
            let (t, h) = load_subset(&s)?;
            let f = factor(&t, h)?;
            out.emit(
                || {
                    let mut s = String::new();
                    for (i, c) in f.cells.iter().enumerate() {
                        s += &format!("# B{} = {c}\n", i + 1);
                    }
                    s + &f.table.to_tbl()
                },
                &f,
            )
        }
        Command::Center { src } => {
            let c = nuclei(&load(&src)?)?.center;
            out.emit(|| format!("{c}\n"), &c)
        }
        Command::Nuclei { src } => {
            let r = nuclei(&load(&src)?)?;
            out.emit(
                || {
                    format!(
                        "left: {}\nmiddle: {}\nright: {}\nnucleus: {}\ncenter: {}\n",
                        r.left, r.middle, r.right, r.nucleus, r.center
                    )
                },
                &r,
            )
        }
        Command::Series { src } => {
            let s = ascending_central_series(&load(&src)?)?;
            out.emit(|| format!("{}\n", join_sets(&s)), &s)
        }
        Command::Iso { a, b } => {
            let ta = load(&a)?;
            let tb = load(&b)?;
            let map = are_isomorphic(&ta, &tb);
            #[derive(Serialize)]
            struct Iso {
                isomorphic: bool,
                map: Option<Vec<usize>>,
            }
            let v = Iso {
                isomorphic: map.is_some(),
                map,
            };
            out.emit(
                || match &v.map {
                    Some(m) => {
                        let pairs: Vec<String> = m
                            .iter()
                            .enumerate()
                            .map(|(i, y)| format!("{}->{y}", i + 1))
                            .collect();
                        format!("isomorphic\nmap: {}\n", pairs.join(" "))
                    }
                    None => "not isomorphic\n".to_string(),
                },
                &v,
            )
        }
        Command::Product { direct, block } => {
            let t = match (direct, block) {
                (Some(pair), _) => {
                    let e = load(&pair[0])?;
                    let c = load(&pair[1])?;
                    direct_product(&e, &c)?
                }
                (None, Some(path)) => {
                    let text = TableSource::Path(path).read_text()?;
                    block_product(&parse_mphi(&text)?)?
                }
                (None, None) => unreachable!("clap requires one of --direct/--block"),
            };
            out.emit(|| t.to_tbl(), &t)
        }
        Command::Decompose { s } => {
            let (t, h) = load_subset(&s)?;
            let d = decompose(&t, h)?;
            out.emit(|| to_mphi(&d.multiphi), &d)
        }
        Command::Search {
            order,
            invertible,
            nafil,
            abelian,
            plain,
            composite,
            count: _,
            emit,
            jobs,
            strategy,
            labeled,
        } => {
            let constraints = Constraints {
                invertible,
                nafil,
                abelian,
                plain,
                composite,
            };
            let mode = match emit {
                Some(dir) => SearchMode::Emit(dir),
                None => SearchMode::Count,
            };
            let strategy = match strategy {
                StrategyArg::RowMajor => Strategy::RowMajor,
                StrategyArg::MostConstrained => Strategy::MostConstrained,
            };
            let mut spec = SearchSpec::new(order, constraints)
                .with_mode(mode)
                .with_jobs(jobs)
                .with_strategy(strategy);
            if labeled {
                spec = spec.labeled();
            }
            let r = enumerate(&spec)?;
            out.emit(
                || {
                    format!(
                        "order {} ({}): {} {} in {:.3} s\n",
                        r.order,
                        r.constraints.describe(),
                        r.count,
                        if r.isomorph_rejection {
                            "isomorphism classes"
                        } else {
                            "reduced tables"
                        },
                        r.wall_time.as_secs_f64()
                    )
                },
                &r,
            )
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let entries = catalog::all();
                #[derive(Serialize)]
                struct Row {
                    id: &'static str,
                    order: usize,
                    description: &'static str,
                }
                let rows: Vec<Row> = entries
                    .iter()
                    .map(|e| Row {
                        id: e.id,
                        order: e.table.order(),
                        description: e.description,
                    })
                    .collect();
                out.emit(
                    || {
                        rows.iter()
                            .map(|r| format!("{:<13} {:>2}  {}\n", r.id, r.order, r.description))
                            .collect()
                    },
                    &rows,
                )
            }
            CatalogAction::Show { id } => {
                let entry = catalog::get(&id)?;
                let checks = catalog::check_claims(&entry)?;
                #[derive(Serialize)]
                struct Show<'a> {
                    entry: &'a catalog::CatalogEntry,
                    checks: &'a [catalog::ClaimCheck],
                }
                out.emit(
                    || {
                        let mut s = format!("{}: {}\n", entry.id, entry.description);
                        if !entry.aliases.is_empty() {
                            s += &format!("aliases: {}\n", entry.aliases.join(", "));
                        }
                        s += &entry.table.to_tbl();
                        for c in &checks {
                            s += &format!(
                                "claim {} {}: observed {}\n",
                                serde_json::to_string(&c.claim).unwrap_or_default(),
                                if c.holds { "holds" } else { "FAILS" },
                                c.observed
                            );
                        }
                        s
                    },
                    &Show {
                        entry: &entry,
                        checks: &checks,
                    },
                )
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::Input(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
        Err(_) => ExitCode::from(1),
    }
}
