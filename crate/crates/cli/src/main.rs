//! Command-line surface for the alphadic library: beta-expansions,
//! alpha-adic expansions, rational psi-iteration, and the normalization
//! transducer, with text and JSON output.

use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use alphadic::algebra::{check_finiteness_conditions, FieldElement, PisotSpec};
use alphadic::alpha_adic::{alpha_expand, enumerate_expansions, expansions_of_minus_one};
use alphadic::beta::{beta_expand_with_budget, renyi_d, renyi_d_star, DEFAULT_BUDGET};
use alphadic::rational_psi::{
    rational_alpha_expand, rational_alpha_represent_trace,
};
use alphadic::transducer::{
    build_normalization_transducer, consecutive_a_bound, export, run_left_word,
    ExportFormat as CoreExportFormat,
};
use alphadic::words::{pi_alpha_left, pi_beta_left, write_digit_string, LeftWord};

#[derive(Parser)]
#[command(
    name = "alphadic",
    about = "Beta-expansions and alpha-adic expansions in Pisot bases",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SpecArgs {
    /// Minimal polynomial coefficients a_0,...,a_{d-1} (constant first),
    /// for x^d = a_{d-1} x^{d-1} + ... + a_0.
    #[arg(long, value_delimiter = ',', conflicts_with = "spec", allow_hyphen_values = true)]
    coeffs: Option<Vec<i64>>,
    /// Path to a JSON file {"coeffs":[a_0,...,a_{d-1}]}.
    #[arg(long)]
    spec: Option<String>,
}

impl SpecArgs {
    fn build(&self) -> Result<Arc<PisotSpec>, CliError> {
        let coeffs: Vec<i64> = if let Some(c) = &self.coeffs {
            c.clone()
        } else if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Domain(format!("cannot read {path}: {e}")))?;
            let v: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Domain(format!("bad spec JSON: {e}")))?;
            v.get("coeffs")
                .and_then(|c| c.as_array())
                .map(|arr| arr.iter().filter_map(|x| x.as_i64()).collect())
                .ok_or_else(|| CliError::Domain("spec JSON needs {\"coeffs\":[...]}".into()))?
        } else {
            return Err(CliError::Usage(
                "a base is required: pass --coeffs or --spec".into(),
            ));
        };
        Ok(PisotSpec::new(&coeffs)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Certify the base: Pisot check and Property (F) classification.
    SpecCheck(SpecArgs),
    /// Print the Renyi expansion d_beta(1) and its quasi-greedy form.
    Renyi(SpecArgs),
    /// Greedy beta-expansion of a nonnegative value.
    BetaExpand {
        #[command(flatten)]
        spec: SpecArgs,
        /// Value as `p/q`, an integer, or coordinates `c0,c1,...` in the
        /// power basis of beta.
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Alpha-adic expansion of a value of Q(beta).
    AlphaExpand {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
    },
    /// Enumerate all alpha-adic expansions within head/fraction bounds
    /// (quadratic Pisot units).
    AlphaEnumerate {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value_t = 6)]
        head_bound: usize,
        #[arg(long, default_value_t = 6)]
        fraction_bound: usize,
    },
    /// Psi-iteration for a rational in a quadratic unit base x^2 = a x + 1.
    RationalAdic {
        #[arg(long)]
        a: i64,
        /// Rational target `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Normalize the representation into the admissible expansion.
        #[arg(long)]
        normalize: bool,
        /// Print the step table of the iteration.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Normalize a word via the right-sequential transducer.
    Normalize {
        #[arg(long)]
        a: i64,
        /// Denominator bound used to size the machine (sets C).
        #[arg(long, conflicts_with = "c")]
        den: Option<u64>,
        /// Chain bound C (overrides --den).
        #[arg(long = "C")]
        c: Option<usize>,
        /// Word in `~(P)H.F` notation.
        #[arg(long)]
        word: String,
    },
    /// Build or run the normalization transducer.
    Transducer {
        #[command(subcommand)]
        action: TransducerAction,
    },
    /// Reproduce the golden examples and print a pass/fail table.
    VerifyPaper,
}

#[derive(Subcommand)]
enum TransducerAction {
    Build {
        #[arg(long)]
        a: i64,
        #[arg(long, conflicts_with = "c")]
        den: Option<u64>,
        #[arg(long = "C")]
        c: Option<usize>,
        #[arg(long, value_enum, default_value_t = ExportArg::Dot)]
        export: ExportArg,
    },
    Run {
        #[arg(long)]
        a: i64,
        #[arg(long = "C")]
        c: usize,
        #[arg(long)]
        word: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportArg {
    Dot,
    Json,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<alphadic::Error> for CliError {
    fn from(e: alphadic::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn parse_value(s: &str, spec: &Arc<PisotSpec>) -> Result<FieldElement, CliError> {
    if s.contains(',') {
        let coords: Result<Vec<BigRational>, _> =
            s.split(',').map(|p| BigRational::from_str(p.trim())).collect();
        let coords = coords
            .map_err(|e| CliError::Usage(format!("bad coordinate vector `{s}`: {e}")))?;
        Ok(spec.element(coords)?)
    } else {
        let q = BigRational::from_str(s.trim())
            .map_err(|e| CliError::Usage(format!("bad rational `{s}`: {e}")))?;
        Ok(spec.from_rational(q))
    }
}

fn show_value(x: &FieldElement) -> String {
    match x.as_rational() {
        Some(q) => q.to_string(),
        None => x
            .coords()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(","),
    }
}

fn unit_spec(a: i64) -> Result<Arc<PisotSpec>, CliError> {
    if a < 1 {
        return Err(CliError::Usage("--a must be a positive integer".into()));
    }
    Ok(PisotSpec::new(&[1, a])?)
}

fn chain_bound(a: i64, den: Option<u64>, c: Option<usize>) -> Result<usize, CliError> {
    match (c, den) {
        (Some(c), _) => Ok(c),
        (None, Some(den)) => Ok(consecutive_a_bound(a, den)),
        (None, None) => Err(CliError::Usage("pass --den or --C".into())),
    }
}

fn word_json(w: &LeftWord) -> serde_json::Value {
    serde_json::json!({
        "period": w.period,
        "head": w.head,
        "fraction": w.fraction,
        "side": "left",
        "notation": w.to_string(),
    })
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::SpecCheck(spec_args) => {
            let spec = spec_args.build()?;
            let cond = check_finiteness_conditions(&spec);
            let iv = spec.beta_interval();
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "degree": spec.degree(),
                        "pisot": true,
                        "floor_beta": spec.floor_beta(),
                        "beta_interval": [iv.lo.to_string(), iv.hi.to_string()],
                        "finiteness": cond.to_string(),
                        "quadratic_unit": spec.is_quadratic_unit(),
                    })
                );
            } else {
                println!("Pisot: yes (degree {})", spec.degree());
                println!("beta in [{}, {}]", iv.lo, iv.hi);
                println!("floor(beta) = {}", spec.floor_beta());
                println!("Property (F) condition: {cond}");
            }
        }
        Command::Renyi(spec_args) => {
            let spec = spec_args.build()?;
            let d = renyi_d(&spec)?;
            let star = renyi_d_star(&spec);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "d": d.to_string(),
                        "d_star_head": write_digit_string(&star.head),
                        "d_star_period": write_digit_string(&star.period),
                    })
                );
            } else {
                println!("{d}");
                if !json {
                    let head = write_digit_string(&star.head);
                    let per = write_digit_string(&star.period);
                    if per.is_empty() {
                        println!("d* = {head}");
                    } else {
                        println!("d* = {head}({per})~");
                    }
                }
            }
        }
        Command::BetaExpand { spec, value, budget } => {
            let spec = spec.build()?;
            let x = parse_value(value, &spec)?;
            let w = beta_expand_with_budget(&x, *budget)?;
            if json {
                println!("{}", serde_json::to_string(&w.to_json()).unwrap());
            } else {
                println!("{w}");
            }
        }
        Command::AlphaExpand { spec, value } => {
            let spec = spec.build()?;
            let x = parse_value(value, &spec)?;
            let w = alpha_expand(&x)?;
            if json {
                println!("{}", word_json(&w));
            } else {
                println!("{w}");
            }
        }
        Command::AlphaEnumerate { spec, value, head_bound, fraction_bound } => {
            let spec = spec.build()?;
            let x = parse_value(value, &spec)?;
            let set = enumerate_expansions(&x, *head_bound, *fraction_bound)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "target": show_value(&set.target),
                        "bounds": [set.search_bound.0, set.search_bound.1],
                        "expansions": set.expansions.iter().map(word_json).collect::<Vec<_>>(),
                    })
                );
            } else {
                for w in &set.expansions {
                    println!("{w}");
                }
            }
        }
        Command::RationalAdic { a, q, normalize, trace, budget } => {
            let spec = unit_spec(*a)?;
            let q = BigRational::from_str(q.trim())
                .map_err(|e| CliError::Usage(format!("bad rational `{q}`: {e}")))?;
            let one = BigRational::from(BigInt::from(1));
            let in_unit_range = q.abs() < one;
            if *trace {
                if !in_unit_range {
                    return Err(CliError::Domain(
                        "--trace requires |q| < 1 (the iteration's domain)".into(),
                    ));
                }
                let (word, tr) = rational_alpha_represent_trace(&q, &spec, *budget)?;
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "word": word_json(&word),
                            "digits": tr.emitted,
                            "period_start": tr.period_start,
                            "period_len": tr.period_len,
                            "states": tr.states.iter().map(|s| {
                                serde_json::json!([s.carry_hi.to_string(), s.carry_lo.to_string()])
                            }).collect::<Vec<_>>(),
                        })
                    );
                } else {
                    println!("{:>4}  {:>6}  state (s_i+2, s_i+1)", "i", "x_i");
                    for (i, d) in tr.emitted.iter().enumerate() {
                        let state = tr
                            .states
                            .get(i)
                            .map(|s| format!("({}, {})", s.carry_hi, s.carry_lo))
                            .unwrap_or_else(|| "(repeat)".into());
                        let mark = if i == tr.period_start { " <- period start" } else { "" };
                        println!("{i:>4}  {d:>6}  {state}{mark}");
                    }
                    println!("word: {word}");
                }
                return Ok(());
            }
            let word = if *normalize || !in_unit_range {
                rational_alpha_expand(&q, &spec, *budget)?
            } else {
                alphadic::rational_psi::rational_alpha_represent(&q, &spec, *budget)?
            };
            if json {
                println!("{}", word_json(&word));
            } else {
                println!("{word}");
            }
        }
        Command::Normalize { a, den, c, word } => {
            let c = chain_bound(*a, *den, *c)?;
            let w = LeftWord::parse(word)?;
            let t = build_normalization_transducer(*a, c);
            let out = run_left_word(&t, &w)?;
            if json {
                println!("{}", word_json(&out));
            } else {
                println!("{out}");
            }
        }
        Command::Transducer { action } => match action {
            TransducerAction::Build { a, den, c, export: fmt } => {
                let c = chain_bound(*a, *den, *c)?;
                let t = build_normalization_transducer(*a, c);
                let fmt = match fmt {
                    ExportArg::Dot => CoreExportFormat::Dot,
                    ExportArg::Json => CoreExportFormat::Json,
                };
                println!("{}", export(&t, fmt));
            }
            TransducerAction::Run { a, c, word } => {
                let t = build_normalization_transducer(*a, *c);
                let w = LeftWord::parse(word)?;
                let out = run_left_word(&t, &w)?;
                if json {
                    println!("{}", word_json(&out));
                } else {
                    println!("{out}");
                }
            }
        },
        Command::VerifyPaper => {
            let failures = verify_paper(json)?;
            if failures > 0 {
                return Err(CliError::Domain(format!("{failures} golden check(s) failed")));
            }
        }
    }
    Ok(())
}

fn verify_paper(json: bool) -> Result<usize, CliError> {
    let golden = PisotSpec::new(&[1, 1])?;
    let cubic = PisotSpec::new(&[1, 0, 1])?;
    let a3 = PisotSpec::new(&[1, 3])?;

    let mut rows: Vec<(String, bool)> = Vec::new();
    let mut check = |name: &str, ok: bool| rows.push((name.to_string(), ok));

    check("golden d_beta(1) = 11", renyi_d(&golden)?.to_string() == "11");
    check(
        "golden beta-expansion of 4 = 101.01",
        beta_expand_with_budget(&golden.from_int(4), DEFAULT_BUDGET)?.to_string() == "101.01",
    );
    let w_minus2 = LeftWord::parse("~(10)010.1")?;
    check(
        "golden pi_alpha(~(10)010.1) = -2",
        pi_alpha_left(&w_minus2, &golden) == golden.from_int(-2),
    );
    let minus_one = expansions_of_minus_one(&golden)?;
    let got: Vec<String> = minus_one.expansions.iter().map(|w| w.to_string()).collect();
    check(
        "golden expansions of -1 = { ~(10), ~(10)0.1 }",
        got == ["~(10)", "~(10)0.1"],
    );
    check(
        "golden alpha-expansion of -4 = ~(10)0100.001",
        alpha_expand(&golden.from_int(-4))?.to_string() == "~(10)0100.001",
    );
    check("cubic d_beta(1) = 101", renyi_d(&cubic)?.to_string() == "101");
    let cubic_minus_one = expansions_of_minus_one(&cubic)?;
    let got: Vec<String> = cubic_minus_one.expansions.iter().map(|w| w.to_string()).collect();
    check(
        "cubic expansions of -1 = three words",
        got == ["~(100)", "~(100)0.01", "~(100)01.00001"],
    );
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let three_halves = BigRational::new(BigInt::from(3), BigInt::from(2));
    check(
        "a=3 expansion of 1/2 = ~(012)1",
        rational_alpha_expand(&half, &a3, None)?.to_string() == "~(012)1",
    );
    check(
        "a=3 expansion of 3/2 = ~(012)2",
        rational_alpha_expand(&three_halves, &a3, None)?.to_string() == "~(012)2",
    );
    let wa = LeftWord::parse("~(10)010.1")?;
    check(
        "left-periodic word diverges at beta",
        pi_beta_left(&wa, &golden).is_err(),
    );

    let failures = rows.iter().filter(|(_, ok)| !ok).count();
    if json {
        println!(
            "{}",
            serde_json::json!({
                "checks": rows.iter().map(|(n, ok)| {
                    serde_json::json!({"name": n, "pass": ok})
                }).collect::<Vec<_>>(),
                "failures": failures,
            })
        );
    } else {
        for (name, ok) in &rows {
            println!("{}  {name}", if *ok { "PASS" } else { "FAIL" });
        }
        println!("{} checks, {failures} failure(s)", rows.len());
    }
    Ok(failures)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
