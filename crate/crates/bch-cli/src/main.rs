//! Command-line front end: classification, closed-form computation, and
//! verification as scriptable commands with deterministic JSON output.
//!
//! Exit codes: 0 success, 1 parse errors, 2 precondition or classification
//! errors, 3 verification failure above the residual threshold.

use bch_core::canon::to_canonical_string;
use bch_core::engine::VERIFY_TOL;
use bch_core::{
    algebra, bch_pair_lemma1, bch_triple, build_algebra, classify, closed_forms, jacobi,
    solve_jacobi, verify_product, Algebra, BCHResult, Error, LieElement,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

const EXIT_OK: i32 = 0;
const EXIT_PARSE: i32 = 1;
const EXIT_PRECONDITION: i32 = 2;
const EXIT_VERIFY: i32 = 3;

#[derive(Parser)]
#[command(
    name = "bch",
    about = "Closed-form BCH products for centrally extended commutator algebras and Cartan-Weyl generators, verified against matrix oracles",
    after_help = "Elements are comma-separated `coeff*Name` terms with complex coefficients \
written as `a`, `bi`, or `a+bi` (e.g. \"1*E+1, -0.5+2i*H1\"). Generator names follow \
`bch algebra show <name>`. The environment variable BCH_TOL overrides the default \
classification tolerance (1e-9)."
)]
struct Cli {
    /// Output mode: json (canonical, byte-deterministic) or pretty.
    #[arg(long, global = true, default_value = "json")]
    output: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraSource {
    /// Catalog algebra name (sl2, sl3, so5).
    #[arg(long)]
    algebra: Option<String>,
    /// Load the algebra from a catalog JSON file instead.
    #[arg(long)]
    algebra_file: Option<String>,
}

impl AlgebraSource {
    fn load(&self) -> Result<Algebra, CliError> {
        match (&self.algebra, &self.algebra_file) {
            (Some(name), None) => build_algebra(name).map_err(CliError::precondition),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::parse(format!("cannot read {path}: {e}")))?;
                Algebra::from_json(&text).map_err(CliError::precondition)
            }
            (Some(_), Some(_)) => Err(CliError::parse(
                "--algebra and --algebra-file are mutually exclusive".into(),
            )),
            (None, None) => Err(CliError::parse(
                "one of --algebra or --algebra-file is required".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify six commutator parameters (u,v,c,w,z,d) into the thirteen Jacobi cases.
    Classify {
        /// Six comma-separated complex scalars u,v,c,w,z,d.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// Zero/equality tolerance (default 1e-9; BCH_TOL overrides).
        #[arg(long)]
        tol: Option<f64>,
        /// Also solve the Jacobi system and report the affine family.
        #[arg(long)]
        family: bool,
    },
    /// Closed form W for exp(x)exp(y) = exp(W).
    Bch2 {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Skip oracle verification (on by default).
        #[arg(long)]
        no_verify: bool,
    },
    /// Closed form W for exp(x)exp(y)exp(z) = exp(W).
    Bch3 {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        no_verify: bool,
    },
    /// Witness-mediated candidate for exp(x)exp(z) = exp(W), always oracle-gated.
    Lemma1 {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Witness element; omit to scan the basis for one.
        #[arg(long, allow_hyphen_values = true)]
        witness: Option<String>,
    },
    /// Residual of prod_i exp(factor_i) against exp(w) in the representation.
    Verify {
        #[command(flatten)]
        source: AlgebraSource,
        /// Semicolon-separated factor elements.
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Inspect an algebra: `algebra show sl3` prints its commutator table.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
}

#[derive(Subcommand)]
enum AlgebraAction {
    Show {
        name: String,
        #[arg(long)]
        algebra_file: Option<String>,
    },
    List,
}

struct CliError {
    code: i32,
    payload: Value,
}

impl CliError {
    fn parse(message: String) -> Self {
        CliError {
            code: EXIT_PARSE,
            payload: json!({"error": {"kind": "parse", "message": message}}),
        }
    }

    fn precondition(err: Error) -> Self {
        let kind = match err {
            Error::BoundaryAmbiguity { .. } => "boundary",
            Error::UnsupportedType { .. } => "unsupported-type",
            Error::SpanFailure { .. } => "span-failure",
            Error::InconsistentSystem(_) => "inconsistent-system",
            Error::NoBranch(..) => "no-branch",
            Error::NoSplitSolution(_) => "no-split-solution",
            Error::CoincidentRoots(_) => "coincident-roots",
            Error::DegenerateKernelInput { .. } => "degenerate-kernel-input",
            Error::DegenerateCase { .. } => "degenerate-case",
            Error::JacobiViolation { .. } => "jacobi-violation",
            Error::UnsupportedRootString(_) => "unsupported-root-string",
            _ => "precondition",
        };
        CliError {
            code: EXIT_PRECONDITION,
            payload: json!({"error": {"kind": kind, "message": err.to_string()}}),
        }
    }
}

fn parse_scalar(text: &str) -> Result<bch_core::CScalar, CliError> {
    algebra::parse_complex(text).map_err(|e| CliError::parse(e.to_string()))
}

fn parse_element(alg: &Algebra, text: &str) -> Result<LieElement, CliError> {
    alg.parse_element(text).map_err(|e| CliError::parse(e.to_string()))
}

fn classification_tol(flag: Option<f64>) -> f64 {
    flag.or_else(|| {
        std::env::var("BCH_TOL")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|t| t.is_finite() && *t > 0.0)
    })
    .unwrap_or(jacobi::DEFAULT_TOL)
}


fn attach_residual(
    alg: &Algebra,
    factors: &[LieElement],
    mut res: BCHResult,
    verify: bool,
) -> Result<(Value, i32), CliError> {
    let mut code = EXIT_OK;
    if verify {
        let r = verify_product(factors, &res.w, alg).map_err(CliError::precondition)?;
        res.oracle_residual = Some(r);
        if r >= VERIFY_TOL {
            code = EXIT_VERIFY;
        }
    }
    let mut payload = res.to_json(alg);
    if verify {
        payload["verified"] = json!(code == EXIT_OK);
    }
    Ok((payload, code))
}

fn run(cli: &Cli) -> Result<(Value, i32), CliError> {
    match &cli.command {
        Command::Classify { params, tol, family } => {
            let parts: Vec<&str> = params.split(',').map(str::trim).collect();
            if parts.len() != 6 {
                return Err(CliError::parse(format!(
                    "--params needs exactly six comma-separated scalars, got {}",
                    parts.len()
                )));
            }
            let mut v = Vec::with_capacity(6);
            for p in parts {
                v.push(parse_scalar(p)?);
            }
            let tol = classification_tol(*tol);
            let tag =
                classify(v[0], v[1], v[2], v[3], v[4], v[5], tol).map_err(CliError::precondition)?;
            let mut payload = tag.to_json();
            if *family {
                let fam = solve_jacobi(v[0], v[1], v[2], v[3], v[4], v[5], tol)
                    .map_err(CliError::precondition)?;
                let vecjson = |xz: &[bch_core::CScalar; 4]| {
                    Value::Array(xz.iter().map(|z| json!([z.re, z.im])).collect())
                };
                payload["family"] = json!({
                    "base": vecjson(&fam.base),
                    "free": fam.free,
                    "directions": Value::Array(fam.dirs.iter().map(vecjson).collect()),
                });
            }
            Ok((payload, EXIT_OK))
        }
        Command::Bch2 { source, x, y, no_verify } => {
            let alg = source.load()?;
            let xe = parse_element(&alg, x)?;
            let ye = parse_element(&alg, y)?;
            let res = closed_forms::pair_product(&xe, &ye, &alg)
                .map_err(CliError::precondition)?;
            attach_residual(&alg, &[xe, ye], res, !no_verify)
        }
        Command::Bch3 { source, x, y, z, no_verify } => {
            let alg = source.load()?;
            let xe = parse_element(&alg, x)?;
            let ye = parse_element(&alg, y)?;
            let ze = parse_element(&alg, z)?;
            let res = bch_triple(&xe, &ye, &ze, &alg, !no_verify).map_err(CliError::precondition)?;
            attach_residual(&alg, &[xe, ye, ze], res, !no_verify)
        }
        Command::Lemma1 { source, x, z, witness } => {
            let alg = source.load()?;
            let xe = parse_element(&alg, x)?;
            let ze = parse_element(&alg, z)?;
            let witness_el = match witness {
                Some(w) => parse_element(&alg, w)?,
                None => {
                    let found =
                        bch_core::find_witness(&xe, &ze, &alg).map_err(CliError::precondition)?;
                    found.into_iter().next().ok_or_else(|| {
                        CliError::precondition(Error::RootError(
                            "no basis witness satisfies the span conditions".into(),
                        ))
                    })?
                }
            };
            let rep = bch_pair_lemma1(&xe, &ze, &witness_el, &alg).map_err(CliError::precondition)?;
            let code = if rep.verified { EXIT_OK } else { EXIT_VERIFY };
            Ok((rep.to_json(&alg), code))
        }
        Command::Verify { source, factors, w } => {
            let alg = source.load()?;
            let mut els = Vec::new();
            for part in factors.split(';') {
                els.push(parse_element(&alg, part)?);
            }
            let we = parse_element(&alg, w)?;
            let r = verify_product(&els, &we, &alg).map_err(CliError::precondition)?;
            let code = if r < VERIFY_TOL { EXIT_OK } else { EXIT_VERIFY };
            Ok((json!({"residual": r, "verified": code == EXIT_OK}), code))
        }
        Command::Algebra { action } => match action {
            AlgebraAction::Show { name, algebra_file } => {
                let alg = match algebra_file {
                    Some(path) => {
                        let text = std::fs::read_to_string(path)
                            .map_err(|e| CliError::parse(format!("cannot read {path}: {e}")))?;
                        Algebra::from_json(&text).map_err(CliError::precondition)?
                    }
                    None => build_algebra(name).map_err(CliError::precondition)?,
                };
                let mut table = serde_json::Map::new();
                for (key, terms) in alg.commutator_table() {
                    let mut entry = serde_json::Map::new();
                    for (gen, coeff) in terms {
                        entry.insert(gen, json!([coeff.re, coeff.im]));
                    }
                    table.insert(key, Value::Object(entry));
                }
                let generators: Vec<Value> = alg
                    .generators
                    .iter()
                    .map(|g| {
                        let (kind, root) = match &g.kind {
                            bch_core::GeneratorKind::Cartan(r) => ("cartan", json!(r.0)),
                            bch_core::GeneratorKind::Step(r) => ("step", json!(r.0)),
                            bch_core::GeneratorKind::General => ("general", Value::Null),
                            bch_core::GeneratorKind::Central => ("central", Value::Null),
                        };
                        json!({"name": g.name, "kind": kind, "root": root})
                    })
                    .collect();
                Ok((
                    json!({
                        "name": alg.name,
                        "rank": alg.rank,
                        "generators": generators,
                        "commutators": Value::Object(table),
                    }),
                    EXIT_OK,
                ))
            }
            AlgebraAction::List => Ok((json!({"catalog": ["sl2", "sl3", "so5"]}), EXIT_OK)),
        },
    }
}

fn main() {
    let cli = Cli::parse();
    let (payload, code) = match run(&cli) {
        Ok((payload, code)) => (payload, code),
        Err(e) => (e.payload, e.code),
    };
    if cli.output == "pretty" {
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        println!("{}", to_canonical_string(&payload));
    }
    std::process::exit(code);
}
