use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use shufflesym::cycle_index::{cycle_index, unimodal_gf};
use shufflesym::harness::{emit_table, format_float, run_verify, Format, RunConfig, SpecArgs, Suite, TableKind};
use shufflesym::shuffles::{exact_distribution, sample, ShuffleSpec};
use shufflesym::{Error, Result};

#[derive(Parser)]
#[command(name = "shufflesym", version, about = "Exact cycle-index and RSK-shape laws of card shuffles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Closed form versus enumeration: fixed-points, cycle-type, shape, separation, unimodal.
    Table {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        common: Common,
    },
    /// Exact distribution as JSON, or empirical frequencies with --samples.
    Dist {
        #[command(flatten)]
        common: Common,
    },
    /// Cycle index (or the unimodal series with --model unimodal) as JSON.
    Series {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// biased-riffle, typeC, abg, mu, top-to-random (series also takes unimodal)
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    y: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    reversed: bool,
    #[arg(long, default_value = "json")]
    format: String,
    /// Output file; defaults to stdout, or a file in $SHUFFLESYM_OUT_DIR.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn config(&self) -> Result<RunConfig> {
        let unimodal = self.model.as_deref() == Some("unimodal");
        let spec = if unimodal {
            None
        } else {
            SpecArgs {
                model: self.model.clone(),
                q: self.q.clone(),
                y: self.y.clone(),
                alpha: self.alpha.clone(),
                beta: self.beta.clone(),
                gamma: self.gamma.clone(),
                mu: self.mu.clone(),
                k: self.k,
                reversed: self.reversed,
            }
            .build()?
        };
        let defaults = RunConfig::default();
        Ok(RunConfig {
            spec,
            n: self.n,
            k: self.k.unwrap_or(defaults.k),
            order: self.order,
            seed: self.seed,
            samples: self.samples.unwrap_or(defaults.samples),
            format: self.format.parse()?,
        })
    }

    fn write(&self, default_name: &str, text: &str) -> Result<()> {
        let path = self.out.clone().or_else(|| std::env::var_os("SHUFFLESYM_OUT_DIR").map(|d| PathBuf::from(d).join(default_name)));
        match path {
            Some(p) => std::fs::write(p, format!("{text}\n"))?,
            None => println!("{text}"),
        }
        Ok(())
    }
}

fn extension(format: Format) -> &'static str {
    match format {
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

fn require_spec(cfg: &RunConfig) -> Result<ShuffleSpec> {
    cfg.spec.clone().ok_or_else(|| Error::Parse("--model is required".into()))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { suite, common } => {
            let suite: Suite = suite.parse()?;
            let report = run_verify(suite, &common.config()?);
            common.write("verify.txt", &report.to_string())?;
            Ok(report.passed())
        }
        Command::Table { kind, common } => {
            let kind: TableKind = kind.parse()?;
            let cfg = common.config()?;
            let table = emit_table(kind, &cfg)?;
            let name = format!("table.{}", extension(cfg.format));
            common.write(&name, table.render(cfg.format)?.trim_end())?;
            Ok(true)
        }
        Command::Dist { common } => {
            let cfg = common.config()?;
            let spec = require_spec(&cfg)?;
            let text = match common.samples {
                None => serde_json::to_string_pretty(&exact_distribution(&spec, cfg.n)?.to_json(Some(&spec)))?,
                Some(count) => {
                    let mut freq = std::collections::BTreeMap::new();
                    for w in sample(&spec, cfg.n, cfg.seed, count)? {
                        *freq.entry(w.to_string()).or_insert(0usize) += 1;
                    }
                    let freq: std::collections::BTreeMap<String, String> =
                        freq.into_iter().map(|(w, c)| (w, format_float(c as f64 / count as f64))).collect();
                    serde_json::to_string_pretty(&serde_json::json!({ "n": cfg.n, "samples": count, "seed": cfg.seed, "frequencies": freq }))?
                }
            };
            common.write("dist.json", &text)?;
            Ok(true)
        }
        Command::Series { common } => {
            let cfg = common.config()?;
            let series = if common.model.as_deref() == Some("unimodal") {
                unimodal_gf(cfg.order)?
            } else {
                cycle_index(&require_spec(&cfg)?, cfg.order)?
            };
            common.write("series.json", &serde_json::to_string_pretty(&series.to_json())?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
