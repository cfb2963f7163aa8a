//! `cflats`: command-line front end to the cyclic-flats toolkit.
//!
//! Matroids, diagrams, set systems and lattices are read as JSON from
//! `--in <file>` or standard input. Results go to standard output. Exit
//! codes: 0 on success, 1 on a domain error (reported as
//! `{"error": .., "witness": ..}` on standard output), 2 on a usage error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclic_flats::constructions::{
    diffconfig_pair, free_m_cone, free_m_cone_by_extensions, lattice_to_transversal, lpm_witness,
    parallel_blowup, tipless_counterexample, transversal_pair, twofilters,
};
use cyclic_flats::enumeration::{census, word_to_diagram, Word};
use cyclic_flats::invariants::{configuration, find_isomorphism, g_invariant, tutte, GMethod};
use cyclic_flats::lattice::LatticeJson;
use cyclic_flats::lpm::{lpm_matroid, rook_matroid, rook_presentation, Diagram, DiagramJson};
use cyclic_flats::matroid::MatroidJson;
use cyclic_flats::transversal::{mason_ingleton, matroid_of, SetSystem, SetSystemJson};
use cyclic_flats::verify;
use cyclic_flats::{validate_z_axioms, CyclicFlatMatroid, Error, FiniteLattice, Subset, ValidationReport};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cflats", version, about = "Matroids via cyclic flats")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input file; standard input when absent.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Output format. Each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Shorthand for `--format tsv`.
    #[arg(long, global = true, conflicts_with = "format")]
    tsv: bool,

    /// Seed for the random parts of `verify-all`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest number of ground-set subsets a command may enumerate.
    #[arg(long, global = true, default_value_t = 1 << 22)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    /// One human-readable line per item (`verify-all` only).
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the cyclic-flat axioms on a matroid file.
    Validate,
    /// Rank of a set, or of the matroid.
    Rank {
        /// Comma-separated elements.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Tutte polynomial.
    Tutte,
    /// The 𝒢-invariant.
    Ginv {
        #[arg(long, value_enum, default_value_t = Method::Flags)]
        method: Method,
    },
    /// Configuration, as lowercase hex.
    Config,
    /// An isomorphism between two matroids, or null.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// The dual matroid.
    Dual,
    /// Swap `x` into the cyclic flats that contain `y` but not `x`.
    Twofilters {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// Lattice path matroid of a diagram.
    Lpm(DiagramArgs),
    /// Rook matroid of a diagram.
    Rook {
        #[command(flatten)]
        diagram: DiagramArgs,
        /// Print the presentation instead of the matroid.
        #[arg(long)]
        presentation: bool,
    },
    /// Same configuration as the diagram's matroid, not isomorphic to it.
    Witness(DiagramArgs),
    /// Free m-cone over a loopless matroid.
    Cone {
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Delete the tip.
        #[arg(long)]
        tipless: bool,
        /// Build by repeated principal extensions instead.
        #[arg(long)]
        by_extensions: bool,
    },
    /// Add k parallel copies of every element.
    Blowup {
        #[arg(long)]
        k: usize,
    },
    /// Two matroids with the same 𝒢-invariant and different configurations.
    Diffconfig {
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// The tipless 2-cone of U(3,4) and a non-isomorphic matroid with its configuration.
    Tipless,
    /// Transversal matroid whose lattice of cyclic flats is the input lattice.
    Lattice {
        /// Leave out the loop from the bottom block.
        #[arg(long)]
        drop_loop: bool,
    },
    /// Non-isomorphic transversal matroids with the same configuration and the input lattice.
    #[command(visible_alias = "transversal-pair")]
    Pair71,
    /// Diagram counts, brute force against closed forms.
    Census {
        #[arg(long, default_value_t = 8)]
        max: usize,
        #[arg(long)]
        by_rank: bool,
    },
    /// Run the acceptance suite.
    VerifyAll {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<usize>,
    },
    /// Mason-Ingleton test of a matroid, or the matroid of a set system.
    Transversal {
        /// Read a set system and print its transversal matroid.
        #[arg(long)]
        sets: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Flags,
    Permutations,
}

/// A diagram given inline; read from the input when no option is set.
#[derive(Args)]
struct DiagramArgs {
    /// Upper path as an N/E string.
    #[arg(long, requires = "lower")]
    upper: Option<String>,
    /// Lower path as an N/E string.
    #[arg(long, requires = "upper")]
    lower: Option<String>,
    /// A word over C, R, S, T.
    #[arg(long, conflicts_with_all = ["upper", "lower"])]
    word: Option<String>,
}

/// Failures, split by exit code.
enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<Output, Failure>;

enum Output {
    Json(Value),
    Text(String),
    /// Printed output followed by a non-zero exit.
    Failed(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Json(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("values serialize"));
            ExitCode::SUCCESS
        }
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Output::Failed(t)) => {
            print!("{t}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            let report = json!({ "error": e.to_string(), "witness": witness(&e) });
            println!("{}", serde_json::to_string_pretty(&report).expect("values serialize"));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn witness(e: &Error) -> Value {
    let sets = |v: &[Subset]| json!(v.iter().map(|s| s.to_vec()).collect::<Vec<_>>());
    match e {
        Error::HypothesisFailure { witness, .. } => sets(witness),
        Error::AxiomViolation { first, second, .. } => sets(&[*first, *second]),
        Error::OutOfRange { set, .. } | Error::DuplicateFlat(set) => sets(&[*set]),
        Error::Loop(e) => json!(e),
        Error::CensusMismatch { m, r, class, brute, closed } => json!({
            "m": m, "r": r, "class": class, "brute": brute.to_string(), "closed": closed.to_string()
        }),
        _ => Value::Null,
    }
}

fn format(cli: &Cli, default: Format) -> Format {
    if cli.tsv {
        Format::Tsv
    } else {
        cli.format.unwrap_or(default)
    }
}

/// Refuses formats other than JSON for commands without a tabular form.
fn json_only(cli: &Cli, value: Value) -> Outcome {
    match format(cli, Format::Json) {
        Format::Json => Ok(Output::Json(value)),
        _ => Err(Failure::Usage("this command only writes JSON".into())),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", p.display())))?;
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Malformed(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Domain(Error::Malformed(e.to_string())))
}

fn read<T: DeserializeOwned>(path: Option<&Path>) -> Result<T, Failure> {
    parse(&read_input(path)?)
}

fn matroid(cli: &Cli) -> Result<CyclicFlatMatroid, Failure> {
    Ok(CyclicFlatMatroid::from_json(read::<MatroidJson>(cli.input.as_deref())?)?)
}

fn matroid_at(path: &Path) -> Result<CyclicFlatMatroid, Failure> {
    Ok(CyclicFlatMatroid::from_json(read::<MatroidJson>(Some(path))?)?)
}

fn diagram(cli: &Cli, args: &DiagramArgs) -> Result<Diagram, Failure> {
    if let (Some(u), Some(l)) = (&args.upper, &args.lower) {
        return Ok(Diagram::parse(u, l)?);
    }
    if let Some(w) = &args.word {
        return Ok(word_to_diagram(&w.parse::<Word>()?));
    }
    Ok(Diagram::from_json(&read::<DiagramJson>(cli.input.as_deref())?)?)
}

fn lattice(cli: &Cli) -> Result<FiniteLattice, Failure> {
    Ok(FiniteLattice::from_json(&read::<LatticeJson>(cli.input.as_deref())?)?)
}

/// Fails when a command would enumerate more than `--budget` subsets.
fn within_budget(cli: &Cli, n: usize) -> Result<(), Failure> {
    if n >= 64 || 1u64 << n > cli.budget {
        return Err(Error::Budget(format!("2^{n} subsets exceed the budget of {}", cli.budget)).into());
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn pair(a: &CyclicFlatMatroid, b: &CyclicFlatMatroid) -> Value {
    json!({ "m": a, "m_prime": b })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate => {
            let m: MatroidJson = read(cli.input.as_deref())?;
            match validate_z_axioms(m.n, &m.cyclic_flats)? {
                ValidationReport::Valid => json_only(cli, json!({ "valid": true })),
                ValidationReport::Violation { axiom, first, second } => {
                    Err(Error::AxiomViolation { axiom, first, second }.into())
                }
            }
        }
        Command::Rank { set } => {
            let m = matroid(cli)?;
            let x = match set {
                Some(v) => {
                    let x = Subset::from_elems(v.iter().copied());
                    if v.contains(&0) || !x.within(m.n()) {
                        return Err(Error::OutOfRange { set: x, n: m.n() }.into());
                    }
                    x
                }
                None => m.ground(),
            };
            let r = m.rank(x);
            match format(cli, Format::Json) {
                Format::Json => Ok(Output::Json(json!({ "set": x, "rank": r }))),
                Format::Tsv => Ok(Output::Text(format!("set\trank\n{x}\t{r}\n"))),
                Format::Text => Err(Failure::Usage("rank writes JSON or TSV".into())),
            }
        }
        Command::Tutte => {
            let t = tutte(&matroid(cli)?)?;
            match format(cli, Format::Json) {
                Format::Json => Ok(Output::Json(to_value(&t.to_json()))),
                Format::Tsv => {
                    let mut out = String::from("i\tj\tcoeff\n");
                    for (i, j, c) in t.terms() {
                        out.push_str(&format!("{i}\t{j}\t{c}\n"));
                    }
                    Ok(Output::Text(out))
                }
                Format::Text => Ok(Output::Text(format!("{t}\n"))),
            }
        }
        Command::Ginv { method } => {
            let m = matroid(cli)?;
            let method = match method {
                Method::Flags => GMethod::FlagCount,
                Method::Permutations => GMethod::PermutationScan,
            };
            let g = g_invariant(&m, method)?;
            match format(cli, Format::Json) {
                Format::Json => Ok(Output::Json(to_value(&g.to_json()))),
                Format::Tsv => {
                    let mut out = String::from("composition\tcount\n");
                    for (k, c) in &g.counts {
                        let k: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                        out.push_str(&format!("{}\t{c}\n", k.join(",")));
                    }
                    Ok(Output::Text(out))
                }
                Format::Text => Err(Failure::Usage("ginv writes JSON or TSV".into())),
            }
        }
        Command::Config => {
            let c = configuration(&matroid(cli)?);
            match format(cli, Format::Json) {
                Format::Json => Ok(Output::Json(json!({ "configuration": c.to_hex() }))),
                _ => Ok(Output::Text(format!("{}\n", c.to_hex()))),
            }
        }
        Command::Iso { a, b } => {
            let (a, b) = (matroid_at(a)?, matroid_at(b)?);
            json_only(cli, json!({ "isomorphism": find_isomorphism(&a, &b) }))
        }
        Command::Dual => json_only(cli, to_value(&matroid(cli)?.dual())),
        Command::Twofilters { x, y } => json_only(cli, to_value(&twofilters(&matroid(cli)?, *x, *y)?)),
        Command::Lpm(args) => {
            let d = diagram(cli, args)?;
            within_budget(cli, d.n())?;
            json_only(cli, to_value(&lpm_matroid(&d)?))
        }
        Command::Rook { diagram: args, presentation } => {
            let d = diagram(cli, args)?;
            if *presentation {
                return json_only(cli, to_value(&rook_presentation(&d).to_json()));
            }
            within_budget(cli, d.n())?;
            json_only(cli, to_value(&rook_matroid(&d)?))
        }
        Command::Witness(args) => {
            let d = diagram(cli, args)?;
            within_budget(cli, d.n())?;
            json_only(cli, to_value(&lpm_witness(&d)?))
        }
        Command::Cone { m, tipless, by_extensions } => {
            let base = matroid(cli)?;
            let cone = if *by_extensions {
                within_budget(cli, base.n() * (m + 1) + 1)?;
                free_m_cone_by_extensions(&base, *m)?
            } else {
                free_m_cone(&base, *m)?
            };
            if *tipless {
                within_budget(cli, cone.matroid.n())?;
                json_only(cli, to_value(&cone.tipless()?))
            } else {
                json_only(cli, to_value(&cone))
            }
        }
        Command::Blowup { k } => json_only(cli, to_value(&parallel_blowup(&matroid(cli)?, *k)?)),
        Command::Diffconfig { b, k } => {
            let (m, other) = diffconfig_pair(*b, *k)?;
            json_only(cli, pair(&m, &other))
        }
        Command::Tipless => {
            let (m, other) = tipless_counterexample()?;
            json_only(cli, pair(&m, &other))
        }
        Command::Lattice { drop_loop } => {
            let l = lattice(cli)?;
            let r = lattice_to_transversal(&l, *drop_loop)?;
            let per = |v: &[Subset]| -> Value {
                l.ids().iter().zip(v).map(|(id, s)| (id.clone(), json!(s))).collect::<serde_json::Map<_, _>>().into()
            };
            json_only(
                cli,
                json!({
                    "presentation": r.presentation.to_json(),
                    "matroid": r.matroid,
                    "blocks": per(&r.blocks),
                    "flats": per(&r.flats),
                }),
            )
        }
        Command::Pair71 => {
            let (m, other) = transversal_pair(&lattice(cli)?)?;
            json_only(cli, pair(&m, &other))
        }
        Command::Census { max, by_rank } => {
            let table = census(*max, *by_rank)?;
            match format(cli, Format::Tsv) {
                Format::Json => Ok(Output::Json(to_value(&table))),
                _ => Ok(Output::Text(table.to_tsv())),
            }
        }
        Command::VerifyAll { only } => {
            let outcomes = match only {
                Some(id) if (1..=verify::CRITERIA.len()).contains(id) => vec![verify::run_one(*id, cli.seed)],
                Some(id) => return Err(Failure::Usage(format!("no criterion {id}"))),
                None => verify::run_all(cli.seed),
            };
            let text = match format(cli, Format::Text) {
                Format::Json => serde_json::to_string_pretty(&outcomes).expect("values serialize") + "\n",
                Format::Tsv => {
                    let mut out = String::from("id\tname\tpassed\tseconds\tdetail\n");
                    for o in &outcomes {
                        out.push_str(&format!(
                            "{}\t{}\t{}\t{:.3}\t{}\n",
                            o.id,
                            o.name,
                            o.passed,
                            o.elapsed.as_secs_f64(),
                            o.detail
                        ));
                    }
                    out
                }
                Format::Text => outcomes.iter().map(|o| o.line() + "\n").collect(),
            };
            if outcomes.iter().all(|o| o.passed) {
                Ok(Output::Text(text))
            } else {
                Ok(Output::Failed(text))
            }
        }
        Command::Transversal { sets } => {
            if *sets {
                let a = SetSystem::from_json(read::<SetSystemJson>(cli.input.as_deref())?)?;
                within_budget(cli, a.n())?;
                json_only(cli, to_value(&matroid_of(&a)?))
            } else {
                let mi = mason_ingleton(&matroid(cli)?)?;
                let violation = mi.violation.map(|v| v.iter().map(|s| s.to_vec()).collect::<Vec<_>>());
                json_only(cli, json!({ "transversal": mi.transversal, "violation": violation }))
            }
        }
    }
}
