use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pgalg::envelope::{default_reps, env_from_poly, env_mul, separation_rank, EnvAlgebra};
use pgalg::exactnum::Rational;
use pgalg::freealg::{apply_hom, parse_rational, Gen, NCPoly};
use pgalg::freelie::{e_alphabet, lambda_var, straighten};
use pgalg::matrep::{
    build_free_rep, build_qplane_rep, build_sl2_rep, free_upper_right, simplify_inverse, upper_right_qplane,
    FreeWord, TriMatrix, Variant,
};
use pgalg::pgrowth::{radical_report, GrowthCertificate};
use pgalg::presentations::{
    qplane_decompose, sl2_eliminate_d, AlgebraTag, AqElement, Presentation, PresentationConfig, StructureConstants,
    SL2_ALPHABET,
};
use pgalg::suites::{run_suite, SuiteParams};

/// Exact computations in presented algebras, their triangular
/// representations and truncated envelopes.
#[derive(Parser)]
#[command(name = "pgalg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression.
    Nf { expr: String, #[command(flatten)] opts: Opts },
    /// Normal form of a product.
    Mul { left: String, right: String, #[command(flatten)] opts: Opts },
    /// Basis coordinates (qplane rows, A_q exponents or straightened slots).
    Decompose { expr: String, #[command(flatten)] opts: Opts },
    /// Matrix image under a triangular representation.
    Rep { expr: String, #[command(flatten)] opts: Opts },
    /// Upper-right entry of the image, by closed form and by evaluation.
    Corner { expr: String, #[command(flatten)] opts: Opts },
    /// Growth degree of e^{isT} for a triangular matrix file.
    Growth { #[command(flatten)] opts: Opts },
    /// Randomized radical-structure checks in T_p.
    Radical { #[command(flatten)] opts: Opts },
    /// Product in a truncated envelope.
    EnvMul { left: String, right: String, #[command(flatten)] opts: Opts },
    /// Separation rank of the default representations.
    Separate { #[command(flatten)] opts: Opts },
    /// Run a named verification suite.
    Verify { #[command(flatten)] opts: Opts },
}

#[derive(Args)]
struct Opts {
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    variant: Option<String>,
    #[arg(long)]
    truncation: Option<usize>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long)]
    suite: Option<String>,
}

/// A usage or input error (exit 2) or a failed verification (exit 1).
enum Failure {
    Usage(String),
    Check(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Flags merged with the optional config file; flags win.
struct Settings {
    algebra: Option<AlgebraTag>,
    q: Option<Rational>,
    truncation: Option<usize>,
    structure_constants: Option<PathBuf>,
}

impl Settings {
    fn load(opts: &Opts) -> Result<Self, Failure> {
        let cfg = match &opts.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                let mut cfg = PresentationConfig::parse(&text)?;
                if let (Some(sc), Some(dir)) = (&cfg.structure_constants, path.parent()) {
                    if sc.is_relative() {
                        cfg.structure_constants = Some(dir.join(sc));
                    }
                }
                cfg
            }
            None => PresentationConfig::default(),
        };
        let algebra = match &opts.algebra {
            Some(a) => Some(a.parse()?),
            None => cfg.algebra,
        };
        let q = match &opts.q {
            Some(s) => Some(s.parse::<Rational>().map_err(|e| usage(format!("--q: {e}")))?),
            None => cfg.q,
        };
        if q.as_ref().is_some_and(Rational::is_zero) {
            return Err(usage("q must be nonzero"));
        }
        Ok(Settings { algebra, q, truncation: opts.truncation.or(cfg.truncation), structure_constants: cfg.structure_constants })
    }

    fn algebra(&self) -> Result<AlgebraTag, Failure> {
        self.algebra.ok_or_else(|| usage("--algebra is required (qplane, sl2, aq, uea or free2)"))
    }

    fn q(&self) -> Result<Rational, Failure> {
        self.q.clone().ok_or_else(|| usage("--q is required for this algebra"))
    }

    fn presentation(&self) -> Result<Presentation, Failure> {
        Ok(match self.algebra()? {
            AlgebraTag::QPlane => Presentation::qplane(self.q()?)?,
            AlgebraTag::Sl2 | AlgebraTag::Aq => Presentation::aq(self.q()?)?,
            AlgebraTag::Free2 => Presentation::free(2),
            AlgebraTag::Uea => {
                let path = self
                    .structure_constants
                    .as_ref()
                    .ok_or_else(|| usage("uea needs `structure_constants` in a --config file"))?;
                let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                Presentation::uea(&StructureConstants::parse(&text)?)?
            }
        })
    }

    /// Letters accepted in expressions: `sl2` also allows `d`.
    fn alphabet(&self, pres: &Presentation) -> Result<Vec<Gen>, Failure> {
        Ok(match self.algebra()? {
            AlgebraTag::Sl2 => pgalg::freealg::gens(&SL2_ALPHABET),
            _ => pres.gens().to_vec(),
        })
    }

    fn env_algebra(&self) -> Result<EnvAlgebra, Failure> {
        match self.algebra()? {
            AlgebraTag::QPlane => Ok(EnvAlgebra::QPlane(self.q()?)),
            AlgebraTag::Sl2 | AlgebraTag::Aq => Ok(EnvAlgebra::Sl2(self.q()?)),
            AlgebraTag::Free2 => Ok(EnvAlgebra::Free),
            AlgebraTag::Uea => Err(usage("envelopes are modelled for qplane, sl2 and free2 only")),
        }
    }
}

fn normal_form(settings: &Settings, pres: &Presentation, a: &NCPoly<Rational>) -> Result<NCPoly<Rational>, Failure> {
    Ok(match settings.algebra()? {
        AlgebraTag::Sl2 => sl2_eliminate_d(a, &settings.q()?)?,
        _ => pres.normal_form(a)?,
    })
}

fn parse_expr(text: &str, alphabet: &[Gen]) -> Result<NCPoly<Rational>, Failure> {
    parse_rational(text, alphabet).map_err(|e| usage(format!("cannot parse `{text}`: {e}")))
}

fn variant(opts: &Opts) -> Result<Variant, Failure> {
    Ok(match &opts.variant {
        Some(v) => v.parse().map_err(|e: String| usage(e))?,
        None => Variant::Plain,
    })
}

fn read_matrix(path: &Path) -> Result<TriMatrix<Rational>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut tokens = text.split_whitespace();
    let p: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| usage("matrix file must start with the size p"))?;
    let values: Vec<Rational> = tokens
        .map(|t| t.parse::<Rational>().map_err(|e| usage(format!("matrix entry `{t}`: {e}"))))
        .collect::<Result<_, _>>()?;
    if values.len() != p * p {
        return Err(usage(format!("expected {} entries for p = {p}, found {}", p * p, values.len())));
    }
    let rows = values.chunks(p.max(1)).map(<[Rational]>::to_vec).collect();
    Ok(TriMatrix::from_rows(rows)?)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Nf { expr, opts } => {
            let s = Settings::load(&opts)?;
            let pres = s.presentation()?;
            let a = parse_expr(&expr, &s.alphabet(&pres)?)?;
            println!("{}", normal_form(&s, &pres, &a)?.render(pres.gens()));
        }
        Command::Mul { left, right, opts } => {
            let s = Settings::load(&opts)?;
            let pres = s.presentation()?;
            let alphabet = s.alphabet(&pres)?;
            let product = parse_expr(&left, &alphabet)?.mul(&parse_expr(&right, &alphabet)?);
            println!("{}", normal_form(&s, &pres, &product)?.render(pres.gens()));
        }
        Command::Decompose { expr, opts } => {
            let s = Settings::load(&opts)?;
            let pres = s.presentation()?;
            let a = parse_expr(&expr, &s.alphabet(&pres)?)?;
            let nf = normal_form(&s, &pres, &a)?;
            match s.algebra()? {
                AlgebraTag::QPlane => print!("{}", qplane_decompose(&nf, &pres)?),
                AlgebraTag::Sl2 | AlgebraTag::Aq => print!("{}", AqElement::from_normal(&nf, &pres)?),
                AlgebraTag::Free2 => print!("{}", straighten(&a)?),
                AlgebraTag::Uea => return Err(usage("decompose supports qplane, sl2, aq and free2")),
            }
        }
        Command::Rep { expr, opts } => {
            let s = Settings::load(&opts)?;
            print!("{}", represent(&s, &opts, &expr)?);
        }
        Command::Corner { expr, opts } => {
            let s = Settings::load(&opts)?;
            let image = represent(&s, &opts, &expr)?;
            let predicted = match s.algebra()? {
                AlgebraTag::QPlane => {
                    let pres = s.presentation()?;
                    let p = opts.p.ok_or_else(|| usage("--p is required"))?;
                    let e = qplane_decompose(&pres.normal_form(&parse_expr(&expr, pres.gens())?)?, &pres)?;
                    Some(upper_right_qplane(&e, p, variant(&opts)?, &s.q()?))
                }
                AlgebraTag::Free2 => {
                    let d = straighten(&parse_expr(&expr, &e_alphabet(2))?)?;
                    let (l1, l2) = (lambda_var(1), lambda_var(2));
                    Some(free_upper_right(&d, (&l1, &l2), &FreeWord::symbolic(opts.m.unwrap_or(0))))
                }
                _ => None,
            };
            println!("{}", image.corner());
            if let Some(pred) = predicted {
                if &pred != image.corner() {
                    return Err(Failure::Check(format!("closed form gives {pred}")));
                }
            }
        }
        Command::Growth { opts } => {
            let path = opts.matrix.as_ref().ok_or_else(|| usage("--matrix is required"))?;
            let cert = GrowthCertificate::new(&read_matrix(path)?);
            println!("degree = {}", cert.degree);
        }
        Command::Radical { opts } => {
            let p = opts.p.ok_or_else(|| usage("--p is required"))?;
            if p == 0 {
                return Err(usage("--p must be at least 1"));
            }
            let rep = radical_report(p, opts.samples, opts.seed);
            println!("{rep}");
            if !rep.passed() {
                return Err(Failure::Check("radical structure check failed".into()));
            }
        }
        Command::EnvMul { left, right, opts } => {
            let s = Settings::load(&opts)?;
            let alg = s.env_algebra()?;
            let n = s.truncation.ok_or_else(|| usage("--truncation is required"))?;
            let alphabet = alg.alphabet();
            let x = env_from_poly(&parse_expr(&left, &alphabet)?, &alg, n)?;
            let y = env_from_poly(&parse_expr(&right, &alphabet)?, &alg, n)?;
            print!("{}", env_mul(&x, &y)?);
        }
        Command::Separate { opts } => {
            let s = Settings::load(&opts)?;
            let alg = s.env_algebra()?;
            let d = opts.degree.ok_or_else(|| usage("--degree is required"))?;
            let report = separation_rank(&alg, d, &default_reps(&alg, d))?;
            println!("{report}");
            if !report.injective {
                return Err(Failure::Check("evaluation map is not injective".into()));
            }
        }
        Command::Verify { opts } => {
            let name = opts.suite.as_deref().ok_or_else(|| usage("--suite is required"))?;
            let s = Settings::load(&opts)?;
            let params = SuiteParams {
                seed: opts.seed,
                samples: opts.samples,
                q: s.q.clone(),
                p: opts.p,
                m: opts.m,
                degree: opts.degree,
            };
            let outcome = run_suite(name, &params)?;
            println!("{outcome}");
            if !outcome.passed() {
                return Err(Failure::Check(format!("suite {name} failed")));
            }
        }
    }
    Ok(())
}

/// Image of `expr` under the representation selected by the flags.
fn represent(s: &Settings, opts: &Opts, expr: &str) -> Result<TriMatrix<pgalg::exactnum::MultiPoly>, Failure> {
    Ok(match s.algebra()? {
        AlgebraTag::QPlane => {
            let p = opts.p.ok_or_else(|| usage("--p is required"))?;
            let images = build_qplane_rep(p, variant(opts)?, &s.q()?)?;
            apply_hom(&parse_expr(expr, &pgalg::freealg::gens(&["x", "y"]))?, &images)?
        }
        AlgebraTag::Sl2 | AlgebraTag::Aq => {
            let p = opts.p.ok_or_else(|| usage("--p is required"))?;
            let images = build_sl2_rep(p, &s.q()?)?;
            simplify_inverse(&apply_hom(&parse_expr(expr, &pgalg::freealg::gens(&SL2_ALPHABET))?, &images)?)
        }
        AlgebraTag::Free2 => {
            let (l1, l2) = (lambda_var(1), lambda_var(2));
            let images = build_free_rep((&l1, &l2), &FreeWord::symbolic(opts.m.unwrap_or(0)));
            apply_hom(&parse_expr(expr, &e_alphabet(2))?, &images)?
        }
        AlgebraTag::Uea => return Err(usage("no default representation for uea")),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
