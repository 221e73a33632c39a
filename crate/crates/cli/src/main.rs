use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zetadet::exact::Rational;
use zetadet::hurwitz::{digamma, hurwitz_zeta, hurwitz_zeta_dw, riemann_zeta_deriv};
use zetadet::multigamma::{log_barnes_gamma, log_milnor_gamma, log_milnor_gamma_direct};
use zetadet::oracle::{run_suite, Suite};
use zetadet::spectral::{log_det_laplacian, log_det_yamabe, log_higher_det, DetPath, DetResult, SphereProblem};
use zetadet::sphere::{family_table, Family};
use zetadet::{Arg, EMConfig, Error, Real};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_CONVERGENCE: u8 = 4;
const MAX_DIGITS: usize = 25;
const INTERNAL_DIGITS: u32 = 30;

#[derive(Parser)]
#[command(name = "zetadet", version, about = "Zeta-regularized determinants on spheres")]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Significant digits to print (at most 25).
    #[arg(long, global = true, default_value_t = 12)]
    digits: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of the Laplacian or the conformal Laplacian on S^n.
    Det {
        #[arg(value_enum)]
        kind: Kind,
        n: u32,
        #[arg(long, value_enum, default_value_t = PathChoice::Closed)]
        path: PathChoice,
    },
    /// Depth-r determinant of the shifted Laplacian; s as "p/q" or decimal.
    Hdet {
        n: u32,
        r: u32,
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
    /// Exact polynomial tables.
    Table {
        #[arg(value_enum, ignore_case = true)]
        family: TableFamily,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: Option<u32>,
        /// Restrict to one value of the last index (d, k or l).
        #[arg(long)]
        index: Option<i64>,
    },
    /// Hurwitz zeta, ζ'(-k) and digamma.
    Zeta {
        #[command(subcommand)]
        which: ZetaCmd,
    },
    /// Barnes and Milnor gammas (logarithms).
    Gamma {
        #[command(subcommand)]
        which: GammaCmd,
    },
    /// Run a verification suite; exit code 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
        suite: SuiteChoice,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Laplacian,
    Yamabe,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum PathChoice {
    Closed,
    Factorized,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    P,
    T,
    F,
    Alpha,
    Beta,
    Ckn,
    B,
    C,
    D,
    Y,
}

#[derive(Subcommand)]
enum ZetaCmd {
    Hurwitz {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        a: String,
        /// Derivative in w instead of the value.
        #[arg(long)]
        deriv: bool,
    },
    RiemannDeriv {
        #[arg(long)]
        k: u32,
    },
    Digamma {
        #[arg(long)]
        z: String,
    },
}

#[derive(Subcommand)]
enum GammaCmd {
    Barnes {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        z: String,
    },
    Milnor {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        z: String,
        /// Use ζ'(1-r, z) directly instead of the Barnes reduction.
        #[arg(long)]
        definition: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteChoice {
    Determinants,
    Phi,
    Combinatorics,
    Polynomials,
    Gammas,
    All,
}

/// One output record; field order is part of the format.
#[derive(Serialize)]
struct Record {
    key: String,
    value: String,
    err_bound: Option<String>,
    path: Option<String>,
}

type DetFn = fn(u32, DetPath, &EMConfig) -> zetadet::Result<DetResult>;

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn parse_arg(text: &str) -> Result<Arg, Failure> {
    let t = text.trim();
    if t.contains('/') {
        return t
            .parse::<Rational>()
            .map(Arg::from)
            .map_err(|_| Failure::Usage(format!("cannot parse rational '{text}'")));
    }
    if let Ok(i) = t.parse::<i64>() {
        return Ok(Arg::from(i));
    }
    match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(Arg::from(v)),
        _ => Err(Failure::Usage(format!("cannot parse number '{text}'"))),
    }
}

fn config(digits: usize) -> Result<EMConfig, Failure> {
    let internal = match std::env::var("ZETADET_PRECISION") {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .map_err(|_| Failure::Usage(format!("ZETADET_PRECISION must be a digit count, got '{v}'")))?,
        Err(_) => INTERNAL_DIGITS,
    };
    let cfg = EMConfig::with_digits(internal.max(digits as u32 + 5));
    cfg.validate()?;
    Ok(cfg)
}

fn err_string(x: f64) -> String {
    format!("{x:.2e}")
}

fn real_record(key: String, x: &Real, digits: usize, path: Option<String>) -> Record {
    Record {
        key,
        value: x.to_decimal(digits),
        err_bound: Some(err_string(x.err_bound)),
        path,
    }
}

fn det_records(key: &str, res: &DetResult, digits: usize) -> Vec<Record> {
    vec![real_record(key.to_string(), &res.det(), digits, Some(res.path.to_string()))]
}

fn run(cli: &Cli) -> Result<(Vec<Record>, bool), Failure> {
    if cli.digits == 0 || cli.digits > MAX_DIGITS {
        return Err(Failure::Usage(format!("--digits must be in 1..={MAX_DIGITS}")));
    }
    let digits = cli.digits;
    let cfg = config(digits)?;
    let mut ok = true;
    let records = match &cli.command {
        Command::Det { kind, n, path } => {
            if *n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let (name, f): (&str, DetFn) = match kind {
                Kind::Laplacian => ("det_laplacian", log_det_laplacian),
                Kind::Yamabe => ("det_yamabe", log_det_yamabe),
            };
            let key = format!("{name}[n={n}]");
            let mut out = Vec::new();
            let closed = if *path != PathChoice::Factorized {
                let r = f(*n, DetPath::ClosedFormR1, &cfg)?;
                out.extend(det_records(&key, &r, digits));
                Some(r)
            } else {
                None
            };
            if *path != PathChoice::Closed {
                let r = f(*n, DetPath::Factorization, &cfg)?;
                out.extend(det_records(&key, &r, digits));
                if let Some(c) = closed {
                    let diff = c.det().sub(&r.det());
                    out.push(Record {
                        key: format!("{key}.difference"),
                        value: format!("{:.3e}", diff.to_f64()),
                        err_bound: Some(err_string(diff.err_bound)),
                        path: None,
                    });
                }
            }
            out
        }
        Command::Hdet { n, r, s } => {
            let s_arg = parse_arg(s)?;
            let problem = SphereProblem::new(*n, *r, s_arg)?;
            let res = log_higher_det(&problem, &cfg)?;
            let key = format!("hdet[n={n},r={r},s={}]", s.trim());
            let path = Some(res.path.to_string());
            vec![
                real_record(format!("{key}.log"), &res.log_det, digits, path.clone()),
                real_record(key.clone(), &res.det(), digits, path),
                Record {
                    key: format!("{key}.prefactor_active"),
                    value: res.prefactor_active.to_string(),
                    err_bound: None,
                    path: None,
                },
            ]
        }
        Command::Table { family, n, r, index } => {
            let fam = match family {
                TableFamily::P => Family::P,
                TableFamily::T => Family::T,
                TableFamily::F => Family::F,
                TableFamily::Alpha => Family::Alpha,
                TableFamily::Beta => Family::Beta,
                TableFamily::Ckn => Family::Ckn,
                TableFamily::B => Family::BBarnes,
                TableFamily::C => Family::CMilnor,
                TableFamily::D => Family::DDet,
                TableFamily::Y => Family::YDet,
            };
            let entries = family_table(fam, *n, *r, *index).map_err(|e| Failure::Usage(e.to_string()))?;
            if let Format::Text = cli.format {
                let varying = !matches!(fam, Family::P | Family::F);
                let head = match entries.first() {
                    Some(first) if varying => {
                        let names = fam.index_names();
                        let fixed: Vec<String> = names[..names.len() - 1]
                            .iter()
                            .zip(&first.indices)
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect();
                        format!("{}[{}]", fam.tag(), fixed.join(","))
                    }
                    Some(first) => first.key(),
                    None => fam.tag().to_string(),
                };
                let row: Vec<String> = entries.iter().map(|e| e.value.display_in(fam.var()).to_string()).collect();
                vec![Record {
                    key: head,
                    value: row.join(" | "),
                    err_bound: None,
                    path: None,
                }]
            } else {
                entries
                    .iter()
                    .map(|e| Record {
                        key: e.key(),
                        value: e.exact_value(),
                        err_bound: None,
                        path: None,
                    })
                    .collect()
            }
        }
        Command::Zeta { which } => match which {
            ZetaCmd::Hurwitz { w, a, deriv } => {
                let key = format!("hurwitz{}[w={w},a={a}]", if *deriv { "_dw" } else { "" });
                let (w, a) = (parse_arg(w)?, parse_arg(a)?);
                let v = if *deriv {
                    hurwitz_zeta_dw(w, a, &cfg)?
                } else {
                    hurwitz_zeta(w, a, &cfg)?
                };
                vec![real_record(key, &v, digits, None)]
            }
            ZetaCmd::RiemannDeriv { k } => {
                let v = riemann_zeta_deriv(*k, &cfg)?;
                vec![real_record(format!("zeta_deriv[k=-{k}]"), &v, digits, None)]
            }
            ZetaCmd::Digamma { z } => {
                let v = digamma(parse_arg(z)?, &cfg)?;
                vec![real_record(format!("digamma[z={z}]"), &v, digits, None)]
            }
        },
        Command::Gamma { which } => match which {
            GammaCmd::Barnes { n, z } => {
                let v = log_barnes_gamma(*n, parse_arg(z)?, &cfg)?;
                let key = format!("log_barnes_gamma[n={n},z={z}]");
                vec![real_record(key, &v.log_value, digits, None)]
            }
            GammaCmd::Milnor { r, z, definition } => {
                let key = format!("log_milnor_gamma[r={r},z={z}]");
                let z = parse_arg(z)?;
                if *definition {
                    let v = log_milnor_gamma_direct(*r, z, &cfg)?;
                    vec![real_record(key, &v, digits, Some("definition".into()))]
                } else {
                    let v = log_milnor_gamma(*r, z, &cfg)?;
                    vec![real_record(key, &v.log_value, digits, Some("barnes_reduction".into()))]
                }
            }
        },
        Command::Verify { suite } => {
            let (suite, name) = match suite {
                SuiteChoice::Determinants => (Suite::Determinants, "determinants"),
                SuiteChoice::Phi => (Suite::Phi, "phi"),
                SuiteChoice::Combinatorics => (Suite::Combinatorics, "combinatorics"),
                SuiteChoice::Polynomials => (Suite::Polynomials, "polynomials"),
                SuiteChoice::Gammas => (Suite::Gammas, "gammas"),
                SuiteChoice::All => (Suite::All, "all"),
            };
            let reports = run_suite(suite, &cfg)?;
            ok = reports.iter().all(|r| r.passed);
            reports
                .iter()
                .map(|r| Record {
                    key: r.quantity.clone(),
                    value: if r.passed { "PASS" } else { "FAIL" }.into(),
                    err_bound: Some(err_string(r.abs_diff)),
                    path: Some(format!("{name} tol={:.1e}", r.tolerance)),
                })
                .collect()
        }
    };
    Ok((records, ok))
}

fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    for r in records {
        match format {
            Format::Records => {
                out.push_str(&serde_json::to_string(r).expect("records serialize"));
            }
            Format::Text => {
                out.push_str(&format!("{} = {}", r.key, r.value));
                if let Some(e) = &r.err_bound {
                    out.push_str(&format!("  (err {e})"));
                }
                if let Some(p) = &r.path {
                    out.push_str(&format!("  [{p}]"));
                }
            }
        }
        out.push('\n');
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((records, ok)) => {
            let text = render(&records, cli.format);
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Domain(_) | Error::Pole { .. } => EXIT_DOMAIN,
                Error::Convergence { .. } => EXIT_CONVERGENCE,
                Error::Config(_) => EXIT_USAGE,
            })
        }
    }
}
