//! Batch verification harness for the identity registries: listing,
//! single-cell verification and configuration-driven sweeps with
//! machine-readable reports.

mod config;
mod report;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use config::{
    default_precision, load_config_file, parse_grid_flag, parse_tolerance, GridOverride,
    OutputFormat, RunConfig,
};
use floorsum_core::catalog::{self, EntryMeta};
use floorsum_core::registry::{params_string, ParamValue, Params, Verdict};
use rayon::prelude::*;
use report::Report;
use std::collections::BTreeSet;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "floorsum",
    version,
    about = "Exact verification of floor-function series and binomial-sum identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the registry (S01-S41, B01-B30, G01-G14)
    List {
        /// Case-insensitive substring filter over id and statement
        #[arg(long)]
        filter: Option<String>,
    },
    /// Verify a single (id, params) cell
    Verify {
        #[arg(long)]
        id: String,
        /// Parameter assignment, repeatable: --param k=2 --param m=-1
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Run a sweep over registry default grids (with optional overrides)
    Sweep {
        /// JSON config file; CLI flags override its values
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated ids or "all"
        #[arg(long)]
        ids: Option<String>,
        /// Grid override applied to all selected ids, repeatable:
        /// --grid k=1..8 or --grid b=1/2,-1
        #[arg(long = "grid", value_name = "KEY=SPEC")]
        grids: Vec<String>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// json-lines, csv or human
        #[arg(long)]
        format: Option<String>,
        #[command(flatten)]
        policy: PolicyArgs,
    },
}

#[derive(Args)]
struct PolicyArgs {
    /// Working precision in bits (default 256, or FLOORSUM_PRECISION)
    #[arg(long)]
    precision: Option<u32>,
    /// Comparison tolerance, e.g. 1e-30
    #[arg(long)]
    tolerance: Option<String>,
    /// Summation budget per cell
    #[arg(long = "max-terms")]
    max_terms: Option<u64>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(64);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::List { filter } => {
            let rows = list_identities(filter.as_deref());
            println!("{:<5} {:<8} {:<44} statement", "id", "mode", "parameters");
            for meta in &rows {
                println!(
                    "{:<5} {:<8} {:<44} {}",
                    meta.id,
                    meta.mode.as_str(),
                    meta.param_schema,
                    meta.statement
                );
            }
            println!("{} entries", rows.len());
            Ok(0)
        }
        Command::Verify { id, params, policy } => {
            let mut cfg = RunConfig::default();
            apply_policy_args(&mut cfg, &policy)?;
            let cell = parse_params(&params)?;
            catalog::validate(&id, &cell).map_err(anyhow::Error::from)?;
            let verdict = catalog::verify_cell(&id, &cell, &cfg.policy()?)?;
            let report = Report::new(&cfg, vec![verdict]);
            print!("{}", report.emit(&OutputFormat::Human)?);
            Ok(report.exit_code())
        }
        Command::Sweep {
            config,
            ids,
            grids,
            workers,
            output,
            format,
            policy,
        } => {
            let mut cfg = match config {
                Some(path) => load_config_file(&path)?,
                None => RunConfig::default(),
            };
            if let Some(ids) = ids {
                cfg.ids = ids.split(',').map(|s| s.trim().to_string()).collect();
            }
            for flag in &grids {
                let (key, vals) = parse_grid_flag(flag)?;
                cfg.global_grid.insert(key, vals);
            }
            if let Some(w) = workers {
                cfg.workers = w;
            }
            if let Some(path) = output {
                cfg.output = Some(path);
            }
            if let Some(f) = format {
                cfg.format = OutputFormat::parse(&f)?;
            }
            apply_policy_args(&mut cfg, &policy)?;
            let report = run_sweep(&cfg)?;
            let text = report.emit(&cfg.format)?;
            match &cfg.output {
                Some(path) => std::fs::write(path, &text)
                    .with_context(|| format!("cannot write report to {}", path.display()))?,
                None => print!("{text}"),
            }
            let s = report.summary();
            eprintln!(
                "{} cells: {} confirmed, {} refuted, {} inconclusive",
                report.rows.len(),
                s.confirmed,
                s.refuted,
                s.inconclusive
            );
            Ok(report.exit_code())
        }
    }
}

fn apply_policy_args(cfg: &mut RunConfig, args: &PolicyArgs) -> Result<()> {
    cfg.precision = args.precision.unwrap_or_else(default_precision);
    if let Some(t) = &args.tolerance {
        cfg.tolerance = parse_tolerance(t)?;
        cfg.tolerance_repr = t.clone();
    }
    if let Some(m) = args.max_terms {
        cfg.max_terms = m;
    }
    Ok(())
}

fn list_identities(filter: Option<&str>) -> Vec<EntryMeta> {
    let needle = filter.map(str::to_lowercase);
    catalog::all_meta()
        .into_iter()
        .filter(|m| match &needle {
            None => true,
            Some(n) => {
                m.id.to_lowercase().contains(n) || m.statement.to_lowercase().contains(n)
            }
        })
        .collect()
}

fn parse_params(args: &[String]) -> Result<Params> {
    let mut out = Params::new();
    for a in args {
        let (k, v) = a
            .split_once('=')
            .with_context(|| format!("parameter {a:?} must look like key=value"))?;
        out.insert(
            k.trim().to_string(),
            ParamValue::parse(v).map_err(anyhow::Error::from)?,
        );
    }
    Ok(out)
}

/// Expand the selected ids into (id, params) cells, applying grid overrides.
fn build_cells(cfg: &RunConfig) -> Result<Vec<(String, Params)>> {
    let all: Vec<String> = catalog::all_meta().iter().map(|m| m.id.to_string()).collect();
    let selected: Vec<String> = if cfg.ids.iter().any(|s| s == "all") {
        all.clone()
    } else {
        for id in &cfg.ids {
            if !all.contains(id) {
                bail!("unknown registry id {id:?}");
            }
        }
        cfg.ids.clone()
    };
    let mut cells = Vec::new();
    for id in &selected {
        // config-file grids first, command-line overrides win
        let mut over: GridOverride = cfg.grids.get(id).cloned().unwrap_or_default();
        for (k, v) in &cfg.global_grid {
            over.insert(k.clone(), v.clone());
        }
        let base = catalog::default_grid(id)?;
        if over.is_empty() {
            cells.extend(base.into_iter().map(|p| (id.clone(), p)));
            continue;
        }
        // strip overridden keys, dedupe the remainder, then take the product
        // with the override values; every synthesized cell must satisfy the
        // entry schema
        let mut seen = BTreeSet::new();
        let mut stripped: Vec<Params> = Vec::new();
        for mut p in base {
            for key in over.keys() {
                p.remove(key);
            }
            if seen.insert(params_string(&p)) {
                stripped.push(p);
            }
        }
        let mut expanded = stripped;
        for (key, vals) in &over {
            let mut next = Vec::with_capacity(expanded.len() * vals.len());
            for p in &expanded {
                for v in vals {
                    let mut q = p.clone();
                    q.insert(key.clone(), v.clone());
                    next.push(q);
                }
            }
            expanded = next;
        }
        for p in expanded {
            catalog::validate(id, &p).map_err(|e| anyhow::anyhow!("schema-invalid grid: {e}"))?;
            cells.push((id.clone(), p));
        }
    }
    Ok(cells)
}

fn run_sweep(cfg: &RunConfig) -> Result<Report> {
    let cells = build_cells(cfg)?;
    let policy = cfg.policy()?;
    let workers = cfg.workers.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .context("cannot build worker pool")?;
    let results: Vec<Result<Verdict, String>> = pool.install(|| {
        cells
            .par_iter()
            .map(|(id, params)| {
                catalog::verify_cell(id, params, &policy)
                    .map_err(|e| format!("{id} {}: {e}", params_string(params)))
            })
            .collect()
    });
    let mut rows = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Ok(v) => rows.push(v),
            Err(e) => bail!("verification error: {e}"),
        }
    }
    Ok(Report::new(cfg, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_is_complete_and_filterable() {
        assert_eq!(list_identities(None).len(), 85);
        let zeta: Vec<String> = list_identities(Some("zeta"))
            .iter()
            .map(|m| m.id.to_string())
            .collect();
        assert_eq!(zeta, vec!["S28".to_string(), "S30".to_string()]);
        assert!(list_identities(Some("nomatch-xyzzy")).is_empty());
    }

    #[test]
    fn grid_override_expands_ranges() {
        let mut cfg = RunConfig::default();
        cfg.ids = vec!["B02".into()];
        cfg.global_grid
            .insert("n".into(), (2..=64).map(ParamValue::Int).collect());
        let cells = build_cells(&cfg).unwrap();
        assert_eq!(cells.len(), 63);
    }

    #[test]
    fn tolerance_parsing() {
        use floorsum_core::rat::{pow10_neg, rat};
        assert_eq!(parse_tolerance("1e-30").unwrap(), pow10_neg(30));
        assert_eq!(parse_tolerance("2.5e-1").unwrap(), rat(1, 4));
        assert!(parse_tolerance("zero").is_err());
    }
}
