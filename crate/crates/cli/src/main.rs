use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use cube_census::census::{parse_external, Census};
use cube_census::cycle_index::{hypercube_cycle_index, CycleIndex};
use cube_census::group::{DEFAULT_MAX_DIM, MAX_DIM};
use cube_census::hyperplane::{
    canonicalize, cycle_index_burnside, cycle_index_symbolic, describe_stabilizer, representatives,
    stabilizer_elements, AtlasRecord, GeneralHyperplane,
};
use cube_census::verify::{self, Suite};
use serde_json::json;

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Exact census of 0/1-polytopes of the n-cube.
#[derive(Parser)]
#[command(name = "cube-census", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Symbolic,
    Burnside,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle index of the cube symmetries on the vertices, or of a
    /// hyperplane stabilizer on the hyperplane's vertices.
    CycleIndex {
        n: usize,
        /// A hyperplane such as "x1 + x2 = 1" or "1,1=1".
        #[arg(long)]
        hyperplane: Option<String>,
        #[arg(long, value_enum, default_value = "symbolic")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        expensive: bool,
    },
    /// Spanned hyperplane classes, one atlas record per line.
    Hyperplanes {
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_vertices: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        expensive: bool,
    },
    /// A_n(k), H_n(k) and F_n(k) with the regime behind each row.
    Table {
        n: usize,
        /// Inclusive range `a..b`, or a single `k`.
        #[arg(long)]
        k: Option<String>,
        /// F_n(k) values for rows outside the computed regimes.
        #[arg(long)]
        external: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        expensive: bool,
    },
    /// Stabilizer of a hyperplane in the cube symmetries.
    Stabilizer {
        n: usize,
        hyperplane: String,
        /// List every element.
        #[arg(long)]
        elements: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification checks; exits with status 3 on any failure.
    Verify {
        #[arg(default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Usage(String);

enum Failure {
    Usage(String),
    Verify(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<Usage>() {
            Ok(Usage(msg)) => Failure::Usage(msg),
            Err(e) => Failure::Other(e),
        }
    }
}

impl std::fmt::Debug for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn check_n(n: usize, expensive: bool) -> Result<()> {
    let max = if expensive { MAX_DIM } else { DEFAULT_MAX_DIM };
    if !(1..=max).contains(&n) {
        let hint = if expensive || n > MAX_DIM {
            ""
        } else {
            " (use --expensive for n = 7)"
        };
        return Err(usage(format!("n must be in 1..={max}{hint}, got {n}")));
    }
    Ok(())
}

fn parse_hyperplane(n: usize, text: &str) -> Result<GeneralHyperplane> {
    GeneralHyperplane::parse(n, text).map_err(|e| usage(format!("bad hyperplane {text:?}: {e}")))
}

fn parse_k_range(text: &str, max: usize) -> Result<(usize, usize)> {
    let bad = || usage(format!("bad k range {text:?}; expected a..b or k"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            )
        }
        None => {
            let k = text.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo > hi || hi > max {
        return Err(usage(format!("k range {lo}..{hi} is outside 0..{max}")));
    }
    Ok((lo, hi))
}

fn cycle_index_json(z: &CycleIndex) -> serde_json::Value {
    let (den, terms) = z.scaled();
    json!({
        "mass": z.mass(),
        "denominator": den.to_string(),
        "terms": terms
            .iter()
            .map(|(c, m)| json!({ "coefficient": c.to_string(), "monomial": m.to_string() }))
            .collect::<Vec<_>>(),
        "scaled": z.to_scaled_string(),
    })
}

fn run(cli: Cli) -> std::result::Result<String, Failure> {
    Ok(match cli.command {
        Command::CycleIndex {
            n,
            hyperplane,
            method,
            format,
            expensive,
        } => {
            check_n(n, expensive)?;
            let (label, z) = match hyperplane {
                None => (format!("Z_{n}"), hypercube_cycle_index(n)),
                Some(text) => {
                    let h = canonicalize(&parse_hyperplane(n, &text)?)
                        .map_err(|e| usage(e.to_string()))?;
                    let z = match method {
                        Method::Symbolic => cycle_index_symbolic(&h),
                        Method::Burnside => cycle_index_burnside(&h),
                    }
                    .map_err(anyhow::Error::from)?;
                    (h.to_string(), z)
                }
            };
            match format {
                Format::Text => z.to_string(),
                Format::Csv => {
                    let (den, terms) = z.scaled();
                    let mut out = String::from("coefficient,denominator,monomial\n");
                    for (c, m) in terms {
                        out.push_str(&format!("{c},{den},{m}\n"));
                    }
                    out
                }
                Format::Json => {
                    let mut v = cycle_index_json(&z);
                    v["n"] = n.into();
                    v["of"] = label.into();
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
                }
            }
        }
        Command::Hyperplanes {
            n,
            min_vertices,
            format,
            expensive,
        } => {
            check_n(n, expensive)?;
            if n == 6 && !expensive && min_vertices < 13 {
                return Err(Failure::Usage(
                    "n = 6 ships classes with at least 13 vertices; pass --min-vertices 13 or --expensive".into(),
                ));
            }
            let reps = representatives(n, min_vertices, expensive).map_err(anyhow::Error::from)?;
            let records: Vec<AtlasRecord> = reps.iter().map(AtlasRecord::of).collect();
            match format {
                Format::Text => records.iter().map(|r| format!("{r}\n")).collect(),
                Format::Csv => {
                    let mut out =
                        String::from("n,t,coeffs,rhs,alpha,delta,vertices,stabilizer,equation\n");
                    for (r, h) in records.iter().zip(&reps) {
                        out.push_str(&format!(
                            "{},{},\"{}\",{},\"{}\",{},{},{},{}\n",
                            n,
                            h.support(),
                            h.coefficient_list(),
                            h.rhs(),
                            r.alpha,
                            r.delta,
                            r.vertices,
                            r.stabilizer_order,
                            h
                        ));
                    }
                    out
                }
                Format::Json => {
                    let rows: Vec<_> = records
                        .iter()
                        .zip(&reps)
                        .map(|(r, h)| {
                            json!({
                                "equation": h.to_string(),
                                "coeffs": h.coeffs(),
                                "rhs": h.rhs(),
                                "alpha": r.alpha.to_string(),
                                "delta": r.delta,
                                "vertices": r.vertices,
                                "stabilizer": r.stabilizer_order,
                            })
                        })
                        .collect();
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({ "n": n, "hyperplanes": rows }))
                            .expect("json")
                    )
                }
            }
        }
        Command::Table {
            n,
            k,
            external,
            format,
            expensive,
        } => {
            check_n(n, expensive)?;
            let (lo, hi) = match k {
                Some(text) => parse_k_range(&text, 1 << n)?,
                None => (0, 1 << n),
            };
            let external = match external {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    Some(
                        parse_external(&text)
                            .map_err(|e| usage(format!("{}: {e}", path.display())))?,
                    )
                }
                None => None,
            };
            let census = Census::new(n, expensive).map_err(anyhow::Error::from)?;
            let table = census
                .assemble_range(lo, hi, external.as_ref())
                .map_err(anyhow::Error::from)?;
            match format {
                Format::Text => table.to_text(),
                Format::Csv => table.to_csv(),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&table.to_json()).expect("json")
                ),
            }
        }
        Command::Stabilizer {
            n,
            hyperplane,
            elements,
            format,
        } => {
            check_n(n, false)?;
            let h = canonicalize(&parse_hyperplane(n, &hyperplane)?)
                .map_err(|e| usage(e.to_string()))?;
            let d = describe_stabilizer(&h);
            let list = stabilizer_elements(&h);
            match format {
                Format::Json => {
                    let mut v = json!({
                        "n": n,
                        "hyperplane": h.to_string(),
                        "t": d.t,
                        "alpha": d.alpha.to_string(),
                        "delta": d.delta,
                        "order": d.order(),
                    });
                    if elements {
                        v["elements"] = list
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .into();
                    }
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
                }
                Format::Text | Format::Csv => {
                    let mut out = format!(
                        "hyperplane {h}\nt = {}\nalpha = {}\ndelta = {}\norder = {}\n",
                        d.t,
                        d.alpha,
                        d.delta,
                        d.order()
                    );
                    if elements {
                        for g in &list {
                            out.push_str(&format!("{g}\n"));
                        }
                    }
                    out
                }
            }
        }
        Command::Verify {
            suite,
            n_max,
            seed,
            samples,
            format,
        } => {
            if !(1..=DEFAULT_MAX_DIM).contains(&n_max) {
                return Err(Failure::Usage(format!(
                    "--n-max must be in 1..={DEFAULT_MAX_DIM}, got {n_max}"
                )));
            }
            let suite = Suite::parse(&suite).expect("clap restricts the suite names");
            let report = verify::run(suite, n_max, seed, samples).map_err(anyhow::Error::from)?;
            let out = match format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&report).expect("json"))
                }
                Format::Text | Format::Csv => format!("{report}\n"),
            };
            if !report.passed() {
                print!("{out}");
                return Err(Failure::Verify(format!(
                    "{} checks failed",
                    report.failures()
                )));
            }
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
