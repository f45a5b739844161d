use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hsstable::checks::{run_suite, CheckOptions, Status, Suite};
use hsstable::constructions::*;
use hsstable::{InvolutionSemigroup, ProblemOutcome, Subset};

mod parse;

use parse::{parse_set, parse_sets, Usage};

/// Involution semigroups and their HS-stable subsemigroups.
#[derive(Debug, Parser)]
#[command(name = "hsstable", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the involution semigroup axioms of a JSON file.
    Validate { path: PathBuf },
    /// Structural classification and the distinguished subsets.
    Info { path: PathBuf },
    /// The HS-stable involution subsemigroup generated by a subset.
    Genhs {
        path: PathBuf,
        /// Comma-separated 0-based element indices (may be empty).
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        set: String,
    },
    /// Every HS-stable involution subsemigroup.
    EnumerateHs {
        path: PathBuf,
        /// Refuse inputs with more than this many subsets.
        #[arg(long, default_value_t = 1 << 20)]
        cap: u64,
    },
    /// Run property suites and print a pass/fail table.
    Check {
        path: PathBuf,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Subsets are swept exhaustively up to this order, sampled above.
        #[arg(long, default_value_t = CheckOptions::default().exhaustive_order)]
        exhaustive: usize,
        #[arg(long, default_value_t = CheckOptions::default().samples)]
        samples: usize,
        #[arg(long, default_value_t = CheckOptions::default().seed)]
        seed: u64,
    },
    /// Write a built-in involution semigroup as JSON.
    Make {
        family: Family,
        /// Size parameter for families that take one.
        param: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the HS-stable set generated by S1...Sn with S'.
    Problem {
        path: PathBuf,
        /// Sets separated by semicolons, elements by commas.
        #[arg(long)]
        sets: String,
        /// Defaults to the whole semigroup.
        #[arg(long)]
        sprime: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    /// Symmetric group S_n, star = inverse.
    Sym,
    /// Cyclic group Z_n, star = inverse.
    Cyclic,
    /// Rectangular band on m x m, (i,j)* = (j,i).
    Rect,
    /// Chain semilattice with n elements.
    Chain,
    /// Four-element diamond semilattice.
    Diamond,
    /// Three-element non-chain semilattice with the two atoms swapped.
    YSwap,
    /// Free semilattice on k generators.
    FreeSemilattice,
    /// Null semigroup of order n, trivial star.
    Zero,
    /// Symmetric inverse monoid on n points.
    InverseMonoid,
    /// The order-54 Rees matrix involution semigroup over S_3.
    ReesExample,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn load(path: &Path) -> anyhow::Result<InvolutionSemigroup> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    InvolutionSemigroup::from_json_str(&text)
        .with_context(|| format!("{} is not a valid involution semigroup", path.display()))
}

fn labels(s: &InvolutionSemigroup, t: &Subset) -> Vec<String> {
    t.iter().map(|x| s.label(x)).collect()
}

fn print_set(s: &InvolutionSemigroup, name: &str, t: &Subset) {
    if s.names().is_some() {
        println!("{name}: {t} = {{{}}}", labels(s, t).join(", "));
    } else {
        println!("{name}: {t}");
    }
}

fn needs(family: Family, param: Option<usize>) -> anyhow::Result<usize> {
    match param {
        Some(n) if n > 0 => Ok(n),
        _ => Err(Usage(format!("{family:?} needs a positive size parameter")).into()),
    }
}

fn build(family: Family, param: Option<usize>) -> anyhow::Result<InvolutionSemigroup> {
    Ok(match family {
        Family::Sym => {
            let n = needs(family, param)?;
            if n > 5 {
                return Err(Usage("sym supports n <= 5".into()).into());
            }
            symmetric_group(n).semigroup
        }
        Family::Cyclic => cyclic_group(needs(family, param)?),
        Family::Rect => rectangular_band(needs(family, param)?),
        Family::Chain => chain_semilattice(needs(family, param)?),
        Family::Diamond => diamond_semilattice(),
        Family::YSwap => nonchain_y_with_swap(),
        Family::FreeSemilattice => free_semilattice(needs(family, param)?),
        Family::Zero => {
            let n = needs(family, param)?;
            zero_semigroup(n, &(0..n).collect::<Vec<_>>())?
        }
        Family::InverseMonoid => symmetric_inverse_monoid(needs(family, param)?),
        Family::ReesExample => rees_example().rees.semigroup,
    })
}

/// Ok(true) is success, Ok(false) a property failure (exit 1).
fn run(cli: Cli) -> anyhow::Result<bool> {
    let json = cli.json;
    match cli.command {
        Command::Validate { path } => {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            match InvolutionSemigroup::from_json_str(&text) {
                Ok(s) => {
                    let canonical = s.to_json_string().trim_end() == text.trim_end();
                    if json {
                        println!(
                            "{}",
                            json!({"valid": true, "order": s.order(), "name": s.name(), "canonical": canonical})
                        );
                    } else {
                        println!(
                            "valid: order {}{}",
                            s.order(),
                            s.name().map(|n| format!(" ({n})")).unwrap_or_default()
                        );
                    }
                    Ok(true)
                }
                Err(e) => {
                    if json {
                        println!("{}", json!({"valid": false, "error": e.to_string()}));
                    } else {
                        println!("invalid: {e}");
                    }
                    Ok(false)
                }
            }
        }
        Command::Info { path } => {
            let s = load(&path)?;
            let class = s.classify();
            let f = s.f_set();
            if json {
                println!(
                    "{}",
                    json!({
                        "class": class,
                        "hermitian_squares": s.hermitian_squares(),
                        "idempotents": s.idempotents(),
                        "squares": s.square_set(),
                        "f_set": f,
                        "hs_simple": s.is_hs_simple(),
                    })
                );
            } else {
                println!("order: {}", class.order);
                for (flag, on) in [
                    ("regular *-semigroup", class.regular_star),
                    ("orthodox *-semigroup", class.orthodox_star),
                    ("inverse", class.inverse),
                    ("group", class.group),
                    ("commutative", class.commutative),
                    ("trivial involution", class.trivial_involution),
                    ("semilattice", class.semilattice),
                    ("band", class.band),
                    ("monoid", class.monoid),
                    ("zero", class.has_zero),
                    ("S = S^2", class.square_is_whole),
                ] {
                    println!("{flag}: {}", if on { "yes" } else { "no" });
                }
                print_set(&s, "H_S", s.hermitian_squares());
                print_set(&s, "E_S", s.idempotents());
                print_set(&s, "S^2", s.square_set());
                print_set(&s, "F_S", &f);
                println!("HS-simple: {}", if s.is_hs_simple() { "yes" } else { "no" });
            }
            Ok(true)
        }
        Command::Genhs { path, set } => {
            let s = load(&path)?;
            let a = parse_set(&set, s.order())?;
            let formula = s.gen_hs_formula(&a);
            let oracle = s.gen_hs_oracle(&a);
            if formula != oracle {
                bail!("generated HS-stable set mismatch for A = {a}: formula {formula}, saturation {oracle}");
            }
            if json {
                println!(
                    "{}",
                    json!({"input": a, "generated": formula, "labels": labels(&s, &formula)})
                );
            } else {
                print_set(&s, "generated", &formula);
            }
            Ok(true)
        }
        Command::EnumerateHs { path, cap } => {
            let s = load(&path)?;
            let all = s.enumerate_hs_stable(cap)?;
            if json {
                println!("{}", json!({"count": all.len(), "sets": all}));
            } else {
                for t in &all {
                    println!("{t}");
                }
                println!("{} HS-stable involution subsemigroups", all.len());
            }
            Ok(true)
        }
        Command::Check {
            path,
            suite,
            exhaustive,
            samples,
            seed,
        } => {
            let s = load(&path)?;
            let opts = CheckOptions {
                exhaustive_order: exhaustive.min(20),
                samples,
                seed,
            };
            let results = run_suite(&s, suite, opts);
            let failed = results.iter().filter(|c| c.status == Status::Fail).count();
            if json {
                println!("{}", json!({"passed": failed == 0, "results": results}));
            } else {
                for r in &results {
                    println!("{r}");
                }
                let passed = results.iter().filter(|c| c.status == Status::Pass).count();
                println!(
                    "{passed} passed, {failed} failed, {} skipped",
                    results.len() - passed - failed
                );
            }
            Ok(failed == 0)
        }
        Command::Make {
            family,
            param,
            output,
        } => {
            let s = build(family, param)?;
            match output {
                Some(p) => s
                    .write_json(&p)
                    .with_context(|| format!("writing {}", p.display()))?,
                None => println!("{}", s.to_json_string()),
            }
            Ok(true)
        }
        Command::Problem { path, sets, sprime } => {
            let s = load(&path)?;
            let sets = parse_sets(&sets, s.order())?;
            let sprime = match sprime {
                Some(text) => parse_set(&text, s.order())?,
                None => s.full_set(),
            };
            let outcome = s.check_problem(&sets, &sprime)?;
            if json {
                println!("{}", serde_json::to_string(&outcome)?);
            } else {
                match &outcome {
                    ProblemOutcome::Equal { generated } => println!("equal: {generated}"),
                    ProblemOutcome::NotContained { generated } => {
                        println!(
                            "not contained: {generated} has {} outside S'",
                            generated.difference(&sprime)
                        )
                    }
                    ProblemOutcome::Proper { generated, witness } => {
                        println!("proper: {generated}");
                        println!("T = {}", witness.t);
                        for (i, a) in witness.anchors.iter().enumerate() {
                            println!("a{} = {a}", i + 1);
                        }
                    }
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
