use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use coinv::davenport::{davenport_exact, davenport_witness, olson_formula, FiniteAbelianGroup, DEFAULT_ORDER_CAP};
use coinv::harness::{parse_suite, run_law_suite, SuiteConfig, CAP_ENV};
use coinv::invring::{default_degree_cap, default_generator_bound, hilbert_ideal, minimal_generators};
use coinv::polarize::{check_polarization_lemma, polarize};
use coinv::repaction::{build_rep, FieldJson, MatrixGroup, RepSpec};
use coinv::Error;

/// Coinvariant algebras of finite matrix groups.
#[derive(Parser)]
#[command(name = "coinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert ideal and coinvariant summary of a representation.
    Compute {
        /// Shorthand (e.g. symmetric:3, jordan:2:2, cyclic:3:1,1), inline JSON, or a JSON file.
        repspec: String,
        /// Field characteristic (0 for the rationals).
        #[arg(long)]
        field: Option<u64>,
        /// Number of vector copies of the representation.
        #[arg(long)]
        copies: Option<usize>,
        /// Degree cap for the Hilbert-ideal search.
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Davenport constant of Z_{d1} x Z_{d2} x ... given as "d1,d2,...".
    Davenport {
        factors: String,
        #[arg(long, conflicts_with = "formula")]
        exact: bool,
        #[arg(long)]
        formula: bool,
        #[arg(long)]
        witness: bool,
        /// Largest group order searched exactly.
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: u64,
    },
    /// Polarize the Hilbert-ideal generators into m copies.
    Polarize {
        repspec: String,
        #[arg(long)]
        field: Option<u64>,
        #[arg(long, default_value_t = 2)]
        copies: usize,
        /// Check every coefficient lies in the Hilbert ideal of the copies.
        #[arg(long)]
        check_lemma: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the law suite.
    Verify {
        /// `all` or a comma list such as L1,L5.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
        /// Skip the informational copies exploration.
        #[arg(long)]
        no_explore: bool,
    },
    /// Minimal generator degrees and Noether number of the invariant ring.
    Noether {
        repspec: String,
        #[arg(long)]
        field: Option<u64>,
        /// Degree bound for the generator search.
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_spec(s: &str, field: Option<u64>) -> Result<RepSpec, Error> {
    let text = if s.trim_start().starts_with('{') {
        Some(s.to_string())
    } else if std::path::Path::new(s).is_file() {
        Some(std::fs::read_to_string(s)?)
    } else {
        None
    };
    match text {
        Some(t) => {
            let mut spec = RepSpec::from_json(&t)?;
            if let Some(c) = field {
                spec.field = Some(FieldJson { characteristic: c });
            }
            Ok(spec)
        }
        None => RepSpec::parse_shorthand(s, field),
    }
}

fn env_cap() -> Result<Option<u32>, Error> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidSpec(format!("{CAP_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Sorted degrees with repeats folded, e.g. `1,2,3` or `2,7(x924)`.
fn degree_list(degrees: &[u32]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < degrees.len() {
        let run = degrees[i..].iter().take_while(|&&d| d == degrees[i]).count();
        out.push(if run > 3 {
            format!("{}(x{run})", degrees[i])
        } else {
            vec![degrees[i].to_string(); run].join(",")
        });
        i += run;
    }
    out.join(",")
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Compute {
            repspec,
            field,
            copies,
            cap,
            json,
        } => {
            let mut spec = load_spec(&repspec, field)?;
            if let Some(m) = copies {
                spec = RepSpec::vector_copies(spec, m);
            }
            let g = build_rep(&spec)?;
            let cap = cap.or(env_cap()?).unwrap_or_else(|| default_degree_cap(&g));
            let h = match hilbert_ideal(&g, cap) {
                Ok(h) => h,
                Err(Error::DegreeCapExceeded { cap, partial }) => {
                    eprintln!(
                        "degree cap {cap} reached; partial ideal gives {} (upper bounds)",
                        partial.summary().line()
                    );
                    return Ok(ExitCode::from(2));
                }
                Err(e) => return Err(e),
            };
            let summary = h.summary();
            if json {
                let out = json!({
                    "order": g.order(),
                    "nvars": g.dim(),
                    "modular": g.is_modular(),
                    "summary": summary,
                    "generatorDegrees": h.generator_degrees,
                    "groebner": h.groebner.basis().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("{}", summary.line());
                println!("generator degrees={}", degree_list(&h.generator_degrees));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Davenport {
            factors,
            exact: _,
            formula,
            witness,
            cap,
        } => {
            let g = FiniteAbelianGroup::parse(&factors)?;
            if formula {
                match olson_formula(&g) {
                    Some(s) => println!("S={s}"),
                    None => {
                        eprintln!("no closed form applies to {g}");
                        return Ok(ExitCode::from(2));
                    }
                }
            } else {
                println!("S={}", davenport_exact(&g, cap)?);
            }
            if witness {
                let w = davenport_witness(&g, cap)?;
                let elems: Vec<String> = w.elements.iter().map(|e| format!("({})", join(e))).collect();
                println!("witness={}", elems.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Polarize {
            repspec,
            field,
            copies,
            check_lemma,
            json,
        } => polarize_cmd(&load_spec(&repspec, field)?, copies, check_lemma, json),
        Command::Verify {
            suite,
            json,
            no_explore,
        } => {
            let config = SuiteConfig {
                laws: parse_suite(&suite)?,
                degree_cap: None,
                explore: !no_explore,
            }
            .with_env_cap()?;
            let report = run_law_suite(&config);
            if json {
                println!("{}", report.to_json());
            } else {
                print_report(&report);
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Noether {
            repspec,
            field,
            bound,
            json,
        } => {
            let g = build_rep(&load_spec(&repspec, field)?)?;
            let (default, _) = default_generator_bound(&g);
            let mg = minimal_generators(&g, bound.unwrap_or(default))?;
            let beta = mg.degrees.iter().max().copied().unwrap_or(0);
            if json {
                let mut v = serde_json::to_value(&mg)?;
                v["beta"] = json!(beta);
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("beta={beta} degrees={} bound={}", degree_list(&mg.degrees), mg.bound);
                if mg.certified_polynomial {
                    println!("polynomial invariant ring (certified)");
                } else if mg.bound_relative {
                    println!("note: modular case, result is relative to the bound");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn polarize_cmd(spec: &RepSpec, m: usize, check: bool, json: bool) -> Result<ExitCode, Error> {
    let g: MatrixGroup = build_rep(spec)?;
    let i_a = hilbert_ideal(&g, env_cap()?.unwrap_or_else(|| default_degree_cap(&g)))?;
    let i_b = if check {
        let gm = g.vector_copies(m)?;
        Some(hilbert_ideal(&gm, env_cap()?.unwrap_or_else(|| default_degree_cap(&gm)))?)
    } else {
        None
    };
    let mut rows = Vec::new();
    let mut all_hold = true;
    for f in &i_a.generators {
        let pol = polarize(f, m)?;
        let lemma = match &i_b {
            Some(b) => {
                let c = check_polarization_lemma(&i_a.groebner, &b.groebner, f, m)?;
                all_hold &= c.holds;
                Some(c)
            }
            None => None,
        };
        rows.push((f, pol, lemma));
    }
    if json {
        let out: Vec<_> = rows
            .iter()
            .map(|(f, pol, lemma)| {
                json!({
                    "f": f.to_string(),
                    "coefficients": pol.coefficients.iter()
                        .map(|(k, p)| json!({ "index": k, "poly": p.to_string() }))
                        .collect::<Vec<_>>(),
                    "lemma": lemma,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        for (f, pol, lemma) in &rows {
            println!("f = {f}");
            for (k, p) in &pol.coefficients {
                println!("  [{}] {p}", join(k));
            }
            if let Some(c) = lemma {
                println!("  in I_B: {}/{}", c.members, c.coefficients);
            }
        }
        if check {
            println!("lemma {}", if all_hold { "holds" } else { "FAILS" });
        }
    }
    Ok(if all_hold { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_report(report: &coinv::harness::RunReport) {
    for (case, t) in report.cases.iter().zip(&report.timings) {
        let status = if case.pass { "PASS" } else { "FAIL" };
        println!("{status} {:<4} {:>7.3}s  {}  {}", case.law_id, t, case.expected, case.observed);
        if !case.pass {
            println!("     instance: {}", case.instance);
        }
    }
    if !report.exploration.is_empty() {
        println!();
        println!("copies exploration (informational, not asserted):");
        for row in &report.exploration {
            let show = |x: Option<u32>| x.map_or("?".to_string(), |v| v.to_string());
            println!(
                "  m={} topdeg(V)={} topdeg(V^m)={} equal={}  {}",
                row.copies,
                show(row.topdeg_single),
                show(row.topdeg_copies),
                row.equal.map_or("?".to_string(), |b| b.to_string()),
                row.instance["rep"]
            );
        }
    }
    let failed = report.failures().count();
    println!();
    println!(
        "{} cases, {} failed, verdict={}",
        report.cases.len(),
        failed,
        report.verdict
    );
}
