use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use snr_core::feasibility::variable_label;
use snr_core::formal::Question;
use snr_core::{
    check_w_basis, chi, classify, compatible, conjecture_scan, enumerate_family, fundamental_core,
    is_complemented_pointwise, is_generative, span, Generativity, MapFamily, PartialMap, Polarity,
    Rational, ScanVerdict, Sign, SnrLattice, SnrParams,
};

mod dot;
mod error;
mod formats;

use error::CliError;

#[derive(Parser)]
#[command(
    name = "snr",
    version,
    about = "Boolean maps and subset-sum systems on S(n,r)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Wplus,
    Wminus,
}

impl Basis {
    fn polarity(self) -> Polarity {
        match self {
            Basis::Wplus => Polarity::Plus,
            Basis::Wminus => Polarity::Minus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Wplus,
    Wminus,
    WplusNr,
    WminusNr,
}

impl Family {
    fn map_family(self) -> MapFamily {
        match self {
            Family::Wplus => MapFamily::WPlus,
            Family::Wminus => MapFamily::WMinus,
            Family::WplusNr => MapFamily::WPlusNr,
            Family::WminusNr => MapFamily::WMinusNr,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Q2,
    Q3,
}

#[derive(Subcommand)]
enum Command {
    /// Element count and extremes of S(n,r).
    Lattice {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Also list every string.
        #[arg(long)]
        list: bool,
        /// Write the Hasse diagram here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Fundamental core of a weighted total map.
    Core {
        #[arg(long)]
        map: PathBuf,
    },
    /// Total map spanned by a basis.
    Span {
        #[arg(long)]
        basis: PathBuf,
        #[arg(long, value_enum)]
        family: Basis,
    },
    /// Checks the basis axioms; exit 2 when one fails.
    BasisCheck {
        #[arg(long)]
        basis: PathBuf,
        #[arg(long, value_enum)]
        family: Basis,
    },
    /// The system of a map or core.
    System {
        #[arg(long)]
        map: PathBuf,
    },
    /// The map of a system.
    Chi {
        #[arg(long)]
        system: PathBuf,
    },
    /// Decides a system; exit 0 feasible, 2 infeasible.
    Feasible {
        #[arg(long)]
        system: PathBuf,
        /// Include a solution.
        #[arg(long)]
        witness: bool,
        /// Write the solution as a weight file.
        #[arg(long)]
        weights_out: Option<PathBuf>,
    },
    /// Whether a system determines a total system.
    Generative {
        #[arg(long)]
        system: PathBuf,
        /// Write the generated total system here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Family memberships of a map.
    Classify {
        #[arg(long)]
        map: PathBuf,
    },
    /// Lists the members of a family.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = snr_core::core_engine::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Compares formally compatible maps with compatible ones.
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = snr_core::core_engine::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Hasse diagram coloured by a map.
    Dot {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Statistics of a weight function.
    Weights {
        #[arg(long)]
        file: PathBuf,
        /// Print the induced map instead.
        #[arg(long)]
        map: bool,
    },
}

struct Output {
    stdout: String,
    code: u8,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { stdout, code: 0 }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn params(n: usize, r: usize) -> Result<SnrParams, CliError> {
    Ok(SnrParams::new(n, r)?)
}

fn load_map(path: &Path) -> Result<(SnrLattice, PartialMap), CliError> {
    let (params, map) = formats::parse_map(&read(path)?)?;
    Ok((SnrLattice::build(params)?, map))
}

fn json_line(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json");
    s.push('\n');
    s
}

fn rational(v: &Rational) -> Value {
    Value::String(v.to_string())
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Lattice { n, r, list, dot } => {
            let l = SnrLattice::build(params(n, r)?)?;
            let p = l.params();
            let mut out = format!(
                "elements {}\nmin {}\nmax {}\n",
                l.len(),
                snr_core::snr::minimum(p),
                snr_core::snr::maximum(p)
            );
            if list {
                for w in snr_core::snr::sorted_by_text(l.strings().collect()) {
                    out.push_str(&w.format());
                    out.push('\n');
                }
            }
            if let Some(path) = dot {
                write(&path, &dot::hasse(&l, None))?;
            }
            Ok(Output::ok(out))
        }
        Command::Core { map } => {
            let (l, a) = load_map(&map)?;
            let polarity = match a.get(l.full_index()) {
                Some(Sign::P) => Polarity::Plus,
                Some(Sign::N) => Polarity::Minus,
                None => return Err(CliError::Invalid("the full string is unassigned".into())),
            };
            let family = match polarity {
                Polarity::Plus => MapFamily::WPlus,
                Polarity::Minus => MapFamily::WMinus,
            };
            if !classify(&l, &a, family) {
                return Err(CliError::Invalid(format!("map is not in {family:?}")));
            }
            let report = fundamental_core(l.sip(), &a, polarity)?;
            Ok(Output::ok(formats::write_map(l.params(), &report.core)))
        }
        Command::Span { basis, family } => {
            let (l, b) = load_map(&basis)?;
            let a = span(
                l.sip(),
                &snr_core::CorePair::from_map(&b),
                family.polarity(),
            )?;
            Ok(Output::ok(formats::write_map(l.params(), &a)))
        }
        Command::BasisCheck { basis, family } => {
            let (l, b) = load_map(&basis)?;
            Ok(
                match check_w_basis(
                    l.sip(),
                    &snr_core::CorePair::from_map(&b),
                    family.polarity(),
                ) {
                    Ok(()) => Output::ok("pass\n".into()),
                    Err(v) => Output {
                        stdout: format!("fail {v}\n"),
                        code: 2,
                    },
                },
            )
        }
        Command::System { map } => {
            let (l, a) = load_map(&map)?;
            // τ on B(n,r); cores may leave some xi/eta out
            let s = snr_core::NrSystem::from_partial_map(l.params(), &a)?;
            Ok(Output::ok(formats::write_system(&s)))
        }
        Command::Chi { system } => {
            let s = formats::parse_system(&read(&system)?)?;
            Ok(Output::ok(formats::write_map(s.params(), &chi(&s))))
        }
        Command::Feasible {
            system,
            witness,
            weights_out,
        } => {
            let s = formats::parse_system(&read(&system)?)?;
            let found = compatible(&s);
            if let (Some(path), Some(f)) = (&weights_out, &found.witness) {
                write(path, &formats::write_weights(f))?;
            }
            let result = found.feasibility;
            let mut body = Map::new();
            let verdict = if result.is_feasible() {
                "feasible"
            } else {
                "infeasible"
            };
            body.insert("verdict".into(), verdict.into());
            body.insert("trace_len".into(), result.trace.steps.len().into());
            if witness {
                let w = result.witness.as_ref().map(|values| {
                    let labelled: Map<String, Value> = values
                        .iter()
                        .enumerate()
                        .map(|(k, v)| (variable_label(s.params(), k), rational(v)))
                        .collect();
                    Value::Object(labelled)
                });
                body.insert("witness".into(), w.unwrap_or(Value::Null));
            }
            Ok(Output {
                stdout: json_line(Value::Object(body)),
                code: if result.is_feasible() { 0 } else { 2 },
            })
        }
        Command::Generative { system, out } => {
            let s = formats::parse_system(&read(&system)?)?;
            let value = match is_generative(&s)? {
                Generativity::Generative(total) => {
                    if let Some(path) = &out {
                        write(path, &formats::write_system(&total))?;
                    }
                    json!({
                        "verdict": "generative",
                        "rows": total.len(),
                        "total_system": out.as_ref().map(|p| p.display().to_string()),
                    })
                }
                Generativity::NotGenerative(w) => json!({
                    "verdict": "not_generative",
                    "witness": w.format(),
                }),
            };
            Ok(Output::ok(json_line(value)))
        }
        Command::Classify { map } => {
            let (l, a) = load_map(&map)?;
            let is = |f| classify(&l, &a, f);
            let value = json!({
                "total": a.is_total(),
                "order_preserving": is(MapFamily::Op),
                "w_plus": is(MapFamily::WPlus),
                "w_minus": is(MapFamily::WMinus),
                "w_plus_nr": is(MapFamily::WPlusNr),
                "w_minus_nr": is(MapFamily::WMinusNr),
                "fc_plus": is(MapFamily::FcPlus),
                "fc_minus": is(MapFamily::FcMinus),
                "b_nr": is(MapFamily::Bnr),
                "pointwise": is_complemented_pointwise(l.params(), &a).is_ok(),
            });
            Ok(Output::ok(json_line(value)))
        }
        Command::Enumerate {
            n,
            r,
            family,
            count_only,
            cap,
        } => {
            let l = SnrLattice::build(params(n, r)?)?;
            let members = enumerate_family(&l, family.map_family(), cap)?;
            if count_only {
                return Ok(Output::ok(format!("{}\n", members.count())));
            }
            let blocks: Vec<String> = members
                .map(|a| formats::write_map(l.params(), &a))
                .collect();
            Ok(Output::ok(blocks.join("\n")))
        }
        Command::Conjecture { n, r, which, cap } => {
            let l = SnrLattice::build(params(n, r)?)?;
            let which = match which {
                Which::Q2 => Question::Q2,
                Which::Q3 => Question::Q3,
            };
            let report = conjecture_scan(&l, which, cap)?;
            let (verdict, witness) = match &report.verdict {
                ScanVerdict::Equal => ("equal", Value::Null),
                ScanVerdict::StrictWithWitness(a) => {
                    ("strict", formats::write_map(l.params(), a).into())
                }
            };
            let value = json!({
                "n": n,
                "r": r,
                "which": match which { Question::Q2 => "q2", Question::Q3 => "q3" },
                "family_count": report.family_count,
                "fc_count": report.fc_count,
                "compatible_count": report.compatible_count,
                "compatible_outside_fc": report.compatible_outside_fc,
                "verdict": verdict,
                "witness": witness,
            });
            Ok(Output::ok(json_line(value)))
        }
        Command::Dot { map, out } => {
            let (l, a) = load_map(&map)?;
            write(&out, &dot::hasse(&l, Some(&a)))?;
            Ok(Output::ok(String::new()))
        }
        Command::Weights { file, map } => {
            let f = formats::parse_weights(&read(&file)?)?;
            if map {
                return Ok(Output::ok(formats::write_map(
                    f.params(),
                    &f.induced_map()?,
                )));
            }
            let value = json!({
                "class": match f.class() {
                    snr_core::WeightClass::Positive => "positive",
                    snr_core::WeightClass::Negative => "negative",
                },
                "total": rational(&f.total()),
                "alpha_plus": f.alpha_plus()?,
                "alpha_minus": f.alpha_minus()?,
            });
            Ok(Output::ok(json_line(value)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
