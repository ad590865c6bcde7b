//! Command-line reproductions: each subcommand checks computed values
//! against their targets and reports a table or JSON.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use qudessin_core::cartography::{low_index_subgroups, CosetTable, FinitelyPresentedGroup, TargetGroup};

pub mod claims;
pub mod report;

pub use claims::Outcome;
pub use report::{all_match, render_table, ReproductionReport};

/// Published schema for `--json` output.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Debug, Parser)]
#[command(name = "qudessin", version, about = "Reproduce Pauli-configuration and dessin computations")]
pub struct Cli {
    /// Write the JSON report here (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Worker threads for parallel searches.
    #[arg(long, global = true, env = "QUDESSIN_WORKERS")]
    pub workers: Option<usize>,
    /// Maximum number of detail rows listed per search.
    #[arg(long, global = true, default_value_t = 20)]
    pub limit: usize,
    /// Directory for DOT figures.
    #[arg(long, global = true, value_name = "DIR")]
    pub dot_dir: Option<PathBuf>,
    /// Print only the summary table.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count Bell-CHSH quadruples of n-qubit observables.
    BellCensus {
        #[arg(long, default_value_t = 2)]
        qubits: usize,
    },
    /// Enumerate three-qubit magic pentagrams.
    PentagramCensus {
        /// Write every pentagram as JSON lines.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Check the generalized quadrangle of two-qubit observables.
    Gq22,
    /// Search for a noncontextual value assignment.
    KsCheck {
        /// `mermin-square`, `pentagram`, or a geometry JSON file.
        #[arg(long, default_value = "mermin-square")]
        config: String,
    },
    /// Conjugacy classes of subgroups of the cartographic group.
    Lowindex {
        #[arg(long)]
        index: usize,
        /// Write the coset tables as JSON lines.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Filter low-index classes by coset group and measure line stabilization.
    DessinSearch {
        /// `psl27`, `square72` or `s5`.
        #[arg(long)]
        target: TargetGroup,
        /// Defaults to 7, 9 or 10 by target.
        #[arg(long)]
        index: Option<usize>,
        /// `fano`, `grid` or `pentagram`; defaults by target.
        #[arg(long)]
        geometry: Option<String>,
    },
    /// Verify a Belyi map and compare its passport to a dessin.
    BelyiCheck {
        /// `fano`, `fano-mirror`, `klein`, or an expression in `z`.
        #[arg(long, default_value = "fano")]
        map: String,
        /// `fig1`, `fig2`, `fig3` or `none`.
        #[arg(long, default_value = "fig1")]
        dessin: String,
        /// Also check the map divided by its stray critical value.
        #[arg(long)]
        normalize: bool,
    },
    /// Independence, theta and Shannon-capacity bounds.
    Capacity {
        /// `c5`, `petersen`, `pentagram`, or a graph JSON file.
        #[arg(long, default_value = "pentagram")]
        graph: String,
        /// Largest strong power for the lower bound.
        #[arg(long, default_value_t = 2)]
        power: usize,
    },
    /// Every reproduction in a fixed order.
    ReproduceAll {
        /// Item names to leave out.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<String>,
    },
}

/// Names accepted by `reproduce-all --skip`, in run order.
pub const ITEMS: [&str; 12] = [
    "bell-census",
    "chsh",
    "pentagram-census",
    "ks-check",
    "gq22",
    "lowindex",
    "targets",
    "dessin-search",
    "dessins",
    "belyi-check",
    "capacity",
    "properties",
];

pub fn reproduce_all(skip: &[String], limit: usize) -> Result<Outcome> {
    for s in skip {
        if !ITEMS.contains(&s.as_str()) {
            bail!("unknown item {s:?}; expected one of {}", ITEMS.join(", "));
        }
    }
    let mut out = Outcome::default();
    let mut tables = BTreeMap::new();
    for name in ITEMS.iter().filter(|&&n| !skip.iter().any(|s| s == n)) {
        match item(name, &mut tables, limit) {
            Ok(o) => out.extend(o),
            Err(e) => out.reports.push(ReproductionReport {
                claim: name.to_string(),
                target: serde_json::Value::Null,
                computed: serde_json::Value::String(format!("error: {e:#}")),
                tolerance: None,
                seconds: 0.0,
                matched: Some(false),
                note: None,
            }),
        }
    }
    out.dots.extend(claims::figure_dots());
    Ok(out)
}

fn item(name: &str, tables: &mut BTreeMap<usize, Vec<CosetTable>>, limit: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    match name {
        "bell-census" => {
            o.extend(claims::bell(2)?);
            o.extend(claims::bell(3)?);
        }
        "chsh" => o = claims::chsh()?,
        "pentagram-census" => o = claims::pentagrams(0)?,
        "ks-check" => o = claims::ks_check("mermin-square")?,
        "gq22" => o = claims::generalized_quadrangle()?,
        "lowindex" => {
            for n in [7, 9, 10] {
                let (r, t) = claims::lowindex(n, 0)?;
                o.extend(r);
                tables.insert(n, t);
            }
        }
        "targets" => {
            fill_tables(tables)?;
            o = claims::target_filtering(tables)?;
        }
        "dessin-search" => {
            for t in [TargetGroup::Psl27, TargetGroup::Square72, TargetGroup::S5] {
                let (index, geometry) = claims::search_defaults(&t).expect("named target");
                o.extend(claims::search(&t, index, geometry, limit)?);
            }
        }
        "dessins" => o = claims::dessin_arithmetic()?,
        "belyi-check" => {
            o.extend(claims::belyi_check("fano", "fig1", true)?);
            o.extend(claims::belyi_check("klein", "fig2", false)?);
        }
        "capacity" => {
            for g in ["c5", "petersen", "pentagram"] {
                o.extend(claims::capacity_claims(g, 2)?);
            }
        }
        "properties" => {
            fill_tables(tables)?;
            o = claims::properties(tables)?;
        }
        other => bail!("unknown item {other:?}"),
    }
    Ok(o)
}

fn fill_tables(tables: &mut BTreeMap<usize, Vec<CosetTable>>) -> Result<()> {
    let g = FinitelyPresentedGroup::cartographic();
    for n in [7, 9, 10] {
        if let Entry::Vacant(e) = tables.entry(n) {
            e.insert(low_index_subgroups(&g, n)?);
        }
    }
    Ok(())
}

fn write_lines(path: &PathBuf, rows: impl Iterator<Item = serde_json::Value>) -> Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?);
    for r in rows {
        writeln!(f, "{r}")?;
    }
    Ok(())
}

/// Runs one subcommand without printing.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    Ok(match &cli.command {
        Command::BellCensus { qubits } => claims::bell(*qubits)?,
        Command::PentagramCensus { out } => {
            if let Some(path) = out {
                let census = qudessin_core::contextuality::pentagram_census();
                let mut f = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
                census.write_json_lines(&mut f)?;
            }
            claims::pentagrams(cli.limit)?
        }
        Command::Gq22 => claims::generalized_quadrangle()?,
        Command::KsCheck { config } => claims::ks_check(config)?,
        Command::Lowindex { index, out } => {
            let (o, tables) = claims::lowindex(*index, cli.limit)?;
            if let Some(path) = out {
                write_lines(path, tables.iter().map(|t| t.to_json()))?;
            }
            o
        }
        Command::DessinSearch { target, index, geometry } => {
            let defaults = claims::search_defaults(target);
            let index = index.or(defaults.map(|d| d.0)).context("--index is required for this target")?;
            let geometry = geometry.as_deref().or(defaults.map(|d| d.1)).context("--geometry is required for this target")?;
            claims::search(target, index, geometry, cli.limit)?
        }
        Command::BelyiCheck { map, dessin, normalize } => claims::belyi_check(map, dessin, *normalize)?,
        Command::Capacity { graph, power } => claims::capacity_claims(graph, *power)?,
        Command::ReproduceAll { skip } => reproduce_all(skip, cli.limit)?,
    })
}

/// Runs, prints, writes JSON and DOT files. Returns whether every targeted
/// claim matched.
pub fn run(cli: &Cli) -> Result<bool> {
    if let Some(w) = cli.workers {
        if w == 0 {
            bail!("--workers must be positive");
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    let out = execute(cli)?;
    let json_to_stdout = cli.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    if !json_to_stdout {
        let mut stdout = std::io::stdout().lock();
        if !cli.quiet {
            for d in out.details.iter() {
                writeln!(stdout, "{d}")?;
            }
        }
        write!(stdout, "{}", render_table(&out.reports))?;
    }
    if let Some(path) = &cli.json {
        let text = serde_json::to_string_pretty(&report::to_json(&out.reports))?;
        if json_to_stdout {
            println!("{text}");
        } else {
            std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
        }
    }
    if let Some(dir) = &cli.dot_dir {
        std::fs::create_dir_all(dir)?;
        let mut seen = std::collections::HashSet::new();
        for (stem, dot) in &out.dots {
            if seen.insert(stem.clone()) {
                std::fs::write(dir.join(format!("{stem}.dot")), dot)?;
            }
        }
    }
    Ok(all_match(&out.reports))
}
