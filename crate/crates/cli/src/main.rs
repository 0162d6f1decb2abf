use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use regmeasure::approximations::{gap_report, majority_escape_witness, ApproxFamily, GapReport};
use regmeasure::automata::{builtin, Dfa};
use regmeasure::census::{
    census_by_enumeration, Language, LengthCensus, DEFAULT_ENUMERATION_BUDGET,
};
use regmeasure::density::{natural_density, DensityReport};
use regmeasure::languages::LanguageOracle;
use regmeasure::monoid::{
    nonprimitive_witness, transition_monoid_with_budget, GreenClasses, DEFAULT_MONOID_BUDGET,
};
use regmeasure::numbers::render;
use regmeasure::suite::{run_suite, SuiteConfig};
use regmeasure::{Alphabet, Error, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "regmeasure",
    version,
    about = "Exact densities of regular languages and regular approximations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Alphabet symbols in order, e.g. `ab`.
    #[arg(long, global = true, default_value = "ab")]
    alphabet: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Density, natural density and accumulation points of a DFA.
    Density {
        /// Path to a DFA JSON document, or a builtin such as `evens`, `starts:a`, `modk:3`.
        #[arg(long)]
        dfa: String,
    },
    /// Per-length counts, ratios and Cesàro means of a language.
    Census {
        #[arg(long, conflicts_with = "dfa", required_unless_present = "dfa")]
        oracle: Option<String>,
        #[arg(long)]
        dfa: Option<String>,
        #[arg(long)]
        max: usize,
        /// Parameter of `--oracle majority`.
        #[arg(long)]
        m: Option<usize>,
        /// Largest number of words enumerated when no counter exists.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
    },
    /// Inner/outer approximation densities per parameter.
    Gap {
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        /// Containment is verified for all words up to this length.
        #[arg(long)]
        max: usize,
    },
    /// Transition monoid, Green's classes and non-primitive witness.
    Monoid {
        #[arg(long)]
        dfa: String,
        /// Also report a word of the language escaping `M_m`.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
    },
    /// Runs the check suite.
    Check {
        /// Run only the criteria with this tag.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, hide = true)]
        mutate: bool,
    },
}

/// Process outcome: text to emit and whether every check held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Internal(_) | Error::SingularSystem => 1,
        _ => 2,
    }
}

fn fraction(r: &Rational) -> Value {
    let part = |x: &num_bigint::BigInt| match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    };
    json!({ "num": part(r.numer()), "den": part(r.denom()) })
}

fn load_dfa(source: &str, alphabet: &Alphabet) -> regmeasure::Result<Dfa> {
    match fs::read_to_string(source) {
        Ok(text) => Dfa::from_json(&text),
        Err(_) if !source.contains(['/', '.']) => builtin(source, alphabet),
        Err(e) => Err(Error::Document(format!("{source}: {e}"))),
    }
}

fn density_cmd(dfa: &Dfa, format: Format) -> regmeasure::Result<Outcome> {
    let DensityReport {
        density,
        natural_density,
        modulus,
        accumulation_points,
    } = natural_density(dfa)?;
    let text = match format {
        Format::Json => {
            let points: Vec<Value> = accumulation_points
                .iter()
                .map(|(r, v)| json!({ "residue": r, "value": fraction(v) }))
                .collect();
            pretty(&json!({
                "density": fraction(&density),
                "natural_density": natural_density.as_ref().map(fraction),
                "modulus": modulus,
                "accumulation_points": points,
            }))
        }
        Format::Csv => match natural_density {
            Some(nd) => format!("density={} natural={}\n", render(&density), render(&nd)),
            None => {
                let points: Vec<String> = accumulation_points
                    .iter()
                    .map(|(r, v)| format!("{r}:{}", render(v)))
                    .collect();
                format!(
                    "density={} natural=BOT c={modulus} acc=[{}]\n",
                    render(&density),
                    points.join(",")
                )
            }
        },
    };
    Ok(Outcome::ok(text))
}

fn census_text(census: &LengthCensus, format: Format) -> String {
    let (ratios, cesaro) = census.ratio_and_cesaro();
    match format {
        Format::Csv => {
            let mut out = String::from("n,count,ratio,cesaro\n");
            for (n, count) in census.counts().iter().enumerate() {
                let c = cesaro[n].as_ref().map(render).unwrap_or_default();
                out.push_str(&format!("{n},{count},{},{c}\n", render(&ratios[n])));
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = census
                .counts()
                .iter()
                .enumerate()
                .map(|(n, count)| {
                    json!({
                        "n": n,
                        "count": count.to_string(),
                        "ratio": fraction(&ratios[n]),
                        "cesaro": cesaro[n].as_ref().map(fraction),
                    })
                })
                .collect();
            pretty(&json!({ "rows": rows }))
        }
    }
}

fn census_cmd(
    alphabet: &Alphabet,
    oracle: Option<&str>,
    dfa: Option<&str>,
    max: usize,
    m: Option<usize>,
    budget: Option<u64>,
    format: Format,
) -> regmeasure::Result<Outcome> {
    let census = match (oracle, dfa) {
        (_, Some(source)) => load_dfa(source, alphabet)?.count_words(max),
        (Some(name), None) => {
            let name = match (name, m) {
                ("majority", Some(m)) => format!("majority:{m}"),
                (name, _) => name.to_string(),
            };
            let lang = LanguageOracle::parse(&name, alphabet)?;
            if lang.has_counter() {
                let counts = (0..=max)
                    .map(|n| lang.closed_count(n))
                    .collect::<regmeasure::Result<Vec<_>>>()?;
                LengthCensus::new(lang.alphabet().len(), counts)?
            } else {
                census_by_enumeration(&lang, max, budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET))?
            }
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    Ok(Outcome::ok(census_text(&census, format)))
}

fn gap_text(report: &GapReport, format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(),
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "inner": fraction(&r.inner),
                        "outer": fraction(&r.outer),
                        "gap": fraction(&r.gap),
                        "inner_claimed": r.inner_claimed.as_ref().map(fraction),
                        "outer_claimed": r.outer_claimed.as_ref().map(fraction),
                        "containment": r.containment.render(&report.alphabet),
                    })
                })
                .collect();
            pretty(&json!({
                "family": report.family,
                "alphabet": report.alphabet.symbols().iter().collect::<String>(),
                "max_len": report.max_len,
                "rows": rows,
            }))
        }
    }
}

fn gap_cmd(
    alphabet: &Alphabet,
    family: &str,
    ks: &[usize],
    max: usize,
    format: Format,
) -> regmeasure::Result<Outcome> {
    let fam = ApproxFamily::parse(family, alphabet)?;
    let report = gap_report(&fam, ks, max)?;
    let ok = report.rows.iter().all(|r| r.containment.is_verified());
    Ok(Outcome {
        text: gap_text(&report, format),
        ok,
    })
}

fn monoid_cmd(
    dfa: &Dfa,
    m: Option<usize>,
    budget: Option<u64>,
    format: Format,
) -> regmeasure::Result<Outcome> {
    let budget = budget.map_or(DEFAULT_MONOID_BUDGET, |b| b as usize);
    let (monoid, accept) = transition_monoid_with_budget(dfa, budget)?;
    let green = GreenClasses::new(&monoid);
    let alphabet = monoid.dfa().alphabet().clone();
    let name = |e: usize| {
        let w = alphabet.render(monoid.witness(e).letters());
        if w.is_empty() {
            "ε".to_string()
        } else {
            w
        }
    };
    let witness = match nonprimitive_witness(dfa) {
        Ok((w, n)) => Some((alphabet.render(w.letters()), n)),
        Err(Error::NullLanguage) => None,
        Err(e) => return Err(e),
    };
    let escape = match m {
        Some(m) => match majority_escape_witness(dfa, m) {
            Ok(v) => Some(alphabet.render(v.letters())),
            Err(Error::NullLanguage) => None,
            Err(e) => return Err(e),
        },
        None => None,
    };
    let kernel: Vec<String> = accept
        .elements()
        .filter(|&e| green.is_j_minimal(e))
        .map(name)
        .collect();

    let text = match format {
        Format::Json => {
            let classes: Vec<Value> = green
                .j_classes
                .iter()
                .map(|class| {
                    let first = class[0];
                    json!({
                        "elements": class.iter().map(|&e| name(e)).collect::<Vec<_>>(),
                        "minimal": green.is_j_minimal(first),
                        "r_classes": distinct(class, |e| green.r_class_of(e)),
                        "l_classes": distinct(class, |e| green.l_class_of(e)),
                        "h_classes": distinct(class, |e| green.h_class_of(e)),
                    })
                })
                .collect();
            let status = if witness.is_some() {
                "OK"
            } else {
                "NULL-LANGUAGE"
            };
            pretty(&json!({
                "size": monoid.len(),
                "status": status,
                "witness": witness.as_ref().map(|(w, n)| json!({ "word": w, "n": n })),
                "escape": escape,
                "j_classes": classes,
                "j_minimal_accepted": kernel,
            }))
        }
        Format::Csv => {
            let mut out = match &witness {
                Some((w, n)) => format!("|M|={}, witness=({w},{n})\n", monoid.len()),
                None => format!("|M|={}, status=NULL-LANGUAGE\n", monoid.len()),
            };
            if let (Some(m), Some(v)) = (m, &escape) {
                out.push_str(&format!("escape(M_{m})={v}\n"));
            }
            out.push_str("class,minimal,r,l,h,elements\n");
            for (i, class) in green.j_classes.iter().enumerate() {
                let elements: Vec<String> = class.iter().map(|&e| name(e)).collect();
                out.push_str(&format!(
                    "J{i},{},{},{},{},{}\n",
                    green.is_j_minimal(class[0]),
                    distinct(class, |e| green.r_class_of(e)),
                    distinct(class, |e| green.l_class_of(e)),
                    distinct(class, |e| green.h_class_of(e)),
                    elements.join(" ")
                ));
            }
            out.push_str(&format!("j-minimal accepted: {}\n", kernel.join(" ")));
            out
        }
    };
    Ok(Outcome::ok(text))
}

/// Number of distinct class ids among `class`.
fn distinct(class: &[usize], id: impl Fn(usize) -> usize) -> usize {
    let mut ids: Vec<usize> = class.iter().map(|&e| id(e)).collect();
    ids.sort_unstable();
    ids.dedup();
    ids.len()
}

fn check_cmd(only: Option<String>, mutate: bool, format: Format) -> regmeasure::Result<Outcome> {
    let config = if mutate {
        SuiteConfig::mutated()
    } else {
        SuiteConfig::default()
    };
    let report = run_suite(&config.with_only(only))?;
    let text = match format {
        Format::Csv => report.render_table(),
        Format::Json => report.to_json() + "\n",
    };
    Ok(Outcome {
        text,
        ok: report.passed,
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn run(cli: Cli) -> regmeasure::Result<Outcome> {
    let alphabet = Alphabet::parse(&cli.alphabet)?;
    match cli.command {
        Command::Density { dfa } => density_cmd(&load_dfa(&dfa, &alphabet)?, cli.format),
        Command::Census {
            oracle,
            dfa,
            max,
            m,
            budget,
        } => census_cmd(
            &alphabet,
            oracle.as_deref(),
            dfa.as_deref(),
            max,
            m,
            budget,
            cli.format,
        ),
        Command::Gap { family, k, max } => gap_cmd(&alphabet, &family, &k, max, cli.format),
        Command::Monoid { dfa, m, budget } => {
            monoid_cmd(&load_dfa(&dfa, &alphabet)?, m, budget, cli.format)
        }
        Command::Check { only, mutate } => check_cmd(only, mutate, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli) {
        Ok(outcome) => {
            let written = match &out {
                Some(path) => fs::write(path, &outcome.text),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
