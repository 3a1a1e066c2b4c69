//! `dquant`: command-line front end for the star product engine.
//!
//! Exit codes: 0 success (or the checked property holds), 1 validation
//! failure or property violated, 2 parse or usage error, 64 unknown command.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use dquant::cohomology::{fourth_order, pi4_source, solve_flip_antisym3_in};
use dquant::envelope::diamond_residual;
use dquant::poisson::{catalog, catalog_names, catalog_source, parse_bracket_file, PoissonStructure};
use dquant::poly::{parse_poly, Polynomial, Var};
use dquant::random::{random_triples, DEFAULT_SEED};
use dquant::star::{build_phi3_correction, build_pi1, build_pi2, build_pi3, moyal_constant, obstruction, StarProduct};
use dquant::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_UNKNOWN_COMMAND: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "dquant", version, about = "Exact star products of polynomial Poisson brackets")]
struct Cli {
    /// Worker threads for per-triple evaluations.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity on all index triples.
    CheckJacobi { file: PathBuf },
    /// Print one term of the third-order product.
    StarTerm {
        file: PathBuf,
        #[arg(long)]
        k: Term,
    },
    /// Print the coefficients of p ⋆ q.
    StarApply {
        file: PathBuf,
        p: String,
        q: String,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long)]
        corrected: bool,
    },
    /// Print (p⋆q)⋆r − p⋆(q⋆r); exits 1 unless it vanishes.
    Associator {
        file: PathBuf,
        p: String,
        q: String,
        r: String,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long)]
        corrected: bool,
    },
    /// Print the fourth-order obstruction; exits 1 unless it vanishes.
    Obstruction { file: PathBuf },
    /// Print the correction term added to π₃.
    Correction { file: PathBuf },
    /// Build π₄ after the correction and check associativity mod h⁵.
    Extend4 {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        triples: usize,
        /// Also print π₄.
        #[arg(long)]
        show: bool,
    },
    /// Evaluate the diamond relations of the product of the given order.
    Diamond {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Print the closed-form product of a constant bracket.
    Moyal {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// List or export the built-in brackets.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Export { name: String },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Term {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "phi3")]
    Phi3,
}

/// Failure of a command: exit code and message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::BracketFile { .. } | Error::InvalidArgument(_) => EXIT_PARSE,
            _ => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output text and whether the checked property holds.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn read_bracket(path: &Path) -> Result<PoissonStructure, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_bracket_file(&text).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

fn load(path: &Path) -> Result<PoissonStructure, Failure> {
    let p = read_bracket(path)?;
    p.validate()?;
    Ok(p)
}

fn poly(p: &PoissonStructure, src: &str) -> Result<Polynomial, Failure> {
    Ok(parse_poly(src, p.vars()).map_err(Error::from)?)
}

/// The product of the requested order: the closed formulas up to order 3,
/// extended by the symmetric π₄ at order 4.
fn product(p: &PoissonStructure, order: usize, corrected: bool) -> Result<StarProduct, Failure> {
    let base = if corrected {
        StarProduct::corrected_third_order(p)
    } else {
        StarProduct::third_order(p)
    };
    match order {
        0..=3 => Ok(base.truncate(order)),
        4 if corrected => Ok(fourth_order(p)?),
        4 => Ok(base.extend(solve_flip_antisym3_in(&pi4_source(p, false), p.dim())?)?),
        _ => Err(Error::InvalidArgument(format!("order {order} is above 4")).into()),
    }
}

/// `f` over `items` on `jobs` threads, results in input order.
fn par_map<T: Sync, R: Send>(jobs: usize, items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| {
                let f = &f;
                s.spawn(move || c.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}

fn triples(n: usize) -> Vec<(Var, Var, Var)> {
    let n = n as Var;
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let jobs = cli.jobs;
    match cli.command {
        Command::CheckJacobi { file } => {
            let p = read_bracket(&file)?;
            Ok(match p.jacobi_failure() {
                None => Outcome::ok("Jacobi: OK".into()),
                Some((a, b, c, r)) => Outcome {
                    text: format!(
                        "Jacobi: FAILED at ({},{},{}): {}",
                        a + 1,
                        b + 1,
                        c + 1,
                        r.display(p.vars())
                    ),
                    ok: false,
                },
            })
        }
        Command::StarTerm { file, k } => {
            let p = load(&file)?;
            let c = match k {
                Term::One => build_pi1(&p),
                Term::Two => build_pi2(&p),
                Term::Three => build_pi3(&p),
                Term::Phi3 => build_phi3_correction(&p),
            };
            Ok(Outcome::ok(c.display(p.vars()).to_string()))
        }
        Command::StarApply {
            file,
            p: a,
            q: b,
            order,
            corrected,
        } => {
            let p = load(&file)?;
            let (a, b) = (poly(&p, &a)?, poly(&p, &b)?);
            let s = product(&p, order, corrected)?;
            Ok(Outcome::ok(s.apply(&a, &b).display(p.vars()).to_string()))
        }
        Command::Associator {
            file,
            p: a,
            q: b,
            r: c,
            order,
            corrected,
        } => {
            let p = load(&file)?;
            let (a, b, c) = (poly(&p, &a)?, poly(&p, &b)?, poly(&p, &c)?);
            let s = product(&p, order, corrected)?;
            let res = s.associator_residual(&a, &b, &c);
            Ok(Outcome {
                text: res.display(p.vars()).to_string(),
                ok: res.is_zero(),
            })
        }
        Command::Obstruction { file } => {
            let p = load(&file)?;
            let o = obstruction(&p);
            Ok(Outcome {
                text: o.display(p.vars()).to_string(),
                ok: o.is_zero(),
            })
        }
        Command::Correction { file } => {
            let p = load(&file)?;
            Ok(Outcome::ok(build_phi3_correction(&p).display(p.vars()).to_string()))
        }
        Command::Extend4 {
            file,
            seed,
            triples: count,
            show,
        } => {
            let p = load(&file)?;
            let mut text = format!("# seed: {seed}\n");
            let s = fourth_order(&p)?;
            let pi4 = s.term(4);
            let _ = writeln!(text, "pi4: {} terms, order {}", pi4.len(), pi4.order());
            if show {
                let _ = writeln!(text, "{}", pi4.display(p.vars()));
            }
            let suite = random_triples(seed, p.dim(), count);
            let results = par_map(jobs, &suite, |[a, b, c]| s.associator_residual(a, b, c).is_zero());
            let ok = results.iter().all(|&r| r);
            match results.iter().position(|&r| !r) {
                None => {
                    let _ = write!(text, "associator mod h^5: OK on {count} triples");
                }
                Some(k) => {
                    let _ = write!(text, "associator mod h^5: FAILED on triple {}", k + 1);
                }
            }
            Ok(Outcome { text, ok })
        }
        Command::Diamond { file, order } => {
            let p = load(&file)?;
            if !(1..=3).contains(&order) {
                return Err(Error::InvalidArgument(format!("diamond order must be 1, 2 or 3, not {order}")).into());
            }
            let s = StarProduct::third_order(&p).truncate(order);
            let list = triples(p.dim());
            let residuals = par_map(jobs, &list, |&(a, b, c)| diamond_residual(&s, a, b, c));
            let mut text = String::new();
            let mut first_failure: Option<(usize, (Var, Var, Var))> = None;
            for (&(a, b, c), r) in list.iter().zip(&residuals) {
                if let Some(k) = r.valuation() {
                    let _ = writeln!(text, "({},{},{}):", a + 1, b + 1, c + 1);
                    for line in r.display(p.vars()).to_string().lines() {
                        let _ = writeln!(text, "  {line}");
                    }
                    if first_failure.is_none_or(|(k0, _)| k < k0) {
                        first_failure = Some((k, (a, b, c)));
                    }
                }
            }
            match first_failure {
                None => {
                    let _ = write!(text, "diamond relations: OK up to h^{order}");
                }
                Some((k, (a, b, c))) => {
                    let _ = write!(
                        text,
                        "diamond relations: FAILED at h^{k}, ({},{},{}); tau_{} is not injective",
                        a + 1,
                        b + 1,
                        c + 1,
                        k + 1
                    );
                }
            }
            Ok(Outcome {
                text,
                ok: first_failure.is_none(),
            })
        }
        Command::Moyal { file, order } => {
            let p = load(&file)?;
            let s = moyal_constant(&p, order)?;
            let mut text = String::new();
            for (k, t) in s.terms().iter().enumerate() {
                if k > 0 {
                    text.push('\n');
                }
                let _ = write!(text, "h^{k}:\n{}", t.display(p.vars()));
            }
            Ok(Outcome::ok(text))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => Ok(Outcome::ok(catalog_names().collect::<Vec<_>>().join("\n"))),
            CatalogAction::Export { name } => {
                catalog(&name)?;
                let src = catalog_source(&name).expect("entry exists");
                Ok(Outcome::ok(src.trim_end().to_string()))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand => EXIT_UNKNOWN_COMMAND,
                _ => EXIT_PARSE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            // a closed pipe downstream is not an error of the command
            let _ = writeln!(std::io::stdout().lock(), "{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
