//! Command-line front end.
//!
//! ```text
//! hnk check <check> <file> [--json] [--complete-skew]
//! hnk construct <construction> <file> [params] -o <out>
//! hnk report <file> [--complete-skew]
//! ```
//!
//! Exit codes: `0` pass, `1` a check failed or a construction precondition
//! failed, `2` input error or inapplicable check. All output is
//! deterministic for identical input.

use crate::binary::{
    check_adjoint_identity, check_hom_associative, check_hom_leibniz, check_hom_leibniz_commutative_form,
    check_hom_lie, check_hom_poisson, check_multiplicative, HomLieSuperalgebra, HomPoissonSuperalgebra,
};
use crate::constructions::{
    check_phi_annihilates_induced, check_phi_conditions, check_phi_poisson, commutator_bracket, commutator_poisson,
    induced_nary_bracket, induced_nary_poisson, reduce_bracket, reduce_nambu_bracket, twist_by_rota_baxter,
    RotaBaxterOperator,
};
use crate::error::Error;
use crate::file::{
    load_algebra, parse_cochain, parse_map, read_json, CochainFile, FileError, LoadedAlgebra, MapFile, Presentation,
    Provenance,
};
use crate::nary::{
    check_n_hom_lie, check_nambu_identity, check_nambu_via_adjoints, check_nary_hom_leibniz,
    check_nary_hom_leibniz_commutative_form, check_nary_poisson, check_nary_skew, NaryHomNambuPoissonSuperalgebra,
    NaryHomNambuSuperalgebra,
};
use crate::report::{CheckReport, Verdict};
use crate::scalar::parse_scalar;
use clap::{Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Exact verification and construction toolkit for Hom-type superalgebras.
#[derive(Debug, Parser)]
#[command(name = "hnk", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one named check on an algebra file.
    Check {
        /// Check name (see `hnk report` for the checks applicable to a file).
        check: String,
        /// Algebra file.
        file: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Complete the bracket by super-skew-symmetry before validation.
        #[arg(long)]
        complete_skew: bool,
    },
    /// Build a new algebra file from an existing one.
    Construct {
        construction: Construction,
        /// Input algebra file.
        file: PathBuf,
        /// Output file.
        #[arg(short, long)]
        output: PathBuf,
        /// Rota–Baxter map file (`rb-twist`).
        #[arg(long = "R", value_name = "FILE")]
        r: Option<PathBuf>,
        /// Rota–Baxter weight as an exact rational (`rb-twist`, default 0).
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Cochain file (`induce-nary`).
        #[arg(long, value_name = "FILE")]
        phi: Option<PathBuf>,
        /// Target arity (`induce-nary`).
        #[arg(long)]
        n: Option<usize>,
        /// Labels of the pinned basis elements, comma-separated or repeated
        /// (`reduce`).
        #[arg(long, value_delimiter = ',')]
        a: Vec<String>,
        /// Keep the original product next to the commutator (`commutator`).
        #[arg(long)]
        with_product: bool,
        /// Complete the input bracket by super-skew-symmetry before validation.
        #[arg(long)]
        complete_skew: bool,
    },
    /// Run every check applicable to a file and emit a JSON report.
    Report {
        /// Algebra file.
        file: PathBuf,
        /// Complete the bracket by super-skew-symmetry before validation.
        #[arg(long)]
        complete_skew: bool,
    },
}

/// Available constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Super-commutator of a Hom-associative product.
    Commutator,
    /// Twist by a Rota–Baxter operator.
    RbTwist,
    /// n-ary bracket induced by an even cochain.
    InduceNary,
    /// Binary bracket obtained by pinning the last n − 2 slots.
    Reduce,
}

impl Construction {
    fn name(self) -> &'static str {
        match self {
            Construction::Commutator => "commutator",
            Construction::RbTwist => "rb-twist",
            Construction::InduceNary => "induce-nary",
            Construction::Reduce => "reduce",
        }
    }
}

/// Failures of a CLI invocation, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    File(#[from] FileError),

    #[error("check `{check}` is not applicable to kind {kind}; applicable checks: {available}")]
    Inapplicable {
        check: String,
        kind: &'static str,
        available: String,
    },

    #[error("{0}")]
    Usage(String),

    /// A construction precondition failed (exit code 1).
    #[error("{0}")]
    Precondition(Error),

    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 1,
            _ => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) => CliError::Precondition(e),
            other => CliError::File(FileError::Algebra(other)),
        }
    }
}

/// A check report tagged with the digest of the input file.
#[derive(Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct VerdictDocument<'a> {
    pub input_digest: &'a str,
    #[serde(flatten)]
    pub report: &'a CheckReport,
}

/// Output of `hnk report`.
#[derive(Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct FullReport {
    pub input_digest: String,
    pub kind: &'static str,
    pub verdict: Verdict,
    pub checks: Vec<CheckReport>,
}

/// Names of the checks applicable to a loaded file, in report order.
pub fn applicable_checks(loaded: &LoadedAlgebra) -> Vec<&'static str> {
    let has_phi = loaded.cochains.contains_key("phi");
    let mut out = match &loaded.presentation {
        Presentation::Associative(_) => vec!["hom-associative", "multiplicative"],
        Presentation::Lie(_) => vec![
            "hom-lie",
            "adjoint-identity",
            "multiplicative",
            "n-hom-lie",
            "nary-skew",
            "nambu",
            "nambu-adjoint-form",
        ],
        Presentation::Poisson(p) => {
            let mut v = vec!["hom-poisson", "hom-associative", "hom-lie", "hom-leibniz"];
            if p.is_commutative() {
                v.push("hom-leibniz-commutative-form");
            }
            v.extend(["adjoint-identity", "multiplicative", "nary-poisson", "nary-hom-leibniz"]);
            v
        }
        Presentation::Nambu(_) => vec!["n-hom-lie", "nary-skew", "nambu", "nambu-adjoint-form", "multiplicative"],
        Presentation::NambuPoisson(p) => {
            let mut v = vec![
                "nary-poisson",
                "n-hom-lie",
                "nary-skew",
                "nambu",
                "nambu-adjoint-form",
                "hom-associative",
                "nary-hom-leibniz",
            ];
            if p.is_commutative() {
                v.push("nary-hom-leibniz-commutative-form");
            }
            v.push("multiplicative");
            v
        }
    };
    if has_phi {
        match &loaded.presentation {
            Presentation::Lie(_) => out.extend(["phi-conditions", "phi-annihilates-induced"]),
            Presentation::Poisson(_) => out.extend(["phi-conditions", "phi-annihilates-induced", "phi-poisson"]),
            _ => {}
        }
    }
    out
}

fn lie_part(p: &Presentation) -> Option<HomLieSuperalgebra> {
    match p {
        Presentation::Lie(l) => Some(l.clone()),
        Presentation::Poisson(q) => Some(q.lie().clone()),
        _ => None,
    }
}

fn nambu_part(p: &Presentation) -> Option<NaryHomNambuSuperalgebra> {
    match p {
        Presentation::Lie(l) => Some(NaryHomNambuSuperalgebra::from(l)),
        Presentation::Poisson(q) => Some(NaryHomNambuSuperalgebra::from(q.lie())),
        Presentation::Nambu(n) => Some(n.clone()),
        Presentation::NambuPoisson(q) => Some(q.base().clone()),
        Presentation::Associative(_) => None,
    }
}

fn nary_poisson_part(p: &Presentation) -> Option<NaryHomNambuPoissonSuperalgebra> {
    match p {
        Presentation::Poisson(q) => Some(NaryHomNambuPoissonSuperalgebra::from(q)),
        Presentation::NambuPoisson(q) => Some(q.clone()),
        _ => None,
    }
}

fn poisson_part(p: &Presentation) -> Option<&HomPoissonSuperalgebra> {
    match p {
        Presentation::Poisson(q) => Some(q),
        _ => None,
    }
}

/// Runs one named check. Inapplicable names are an error.
pub fn run_check(name: &str, loaded: &LoadedAlgebra) -> Result<CheckReport, CliError> {
    let available = applicable_checks(loaded);
    let p = &loaded.presentation;
    let inapplicable = || CliError::Inapplicable {
        check: name.to_string(),
        kind: p.kind().as_str(),
        available: available.join(", "),
    };
    if !available.contains(&name) {
        return Err(inapplicable());
    }
    let phi = || loaded.cochains.get("phi").expect("listed only when present");
    let report = match name {
        "hom-associative" => match p {
            Presentation::Associative(a) => check_hom_associative(a),
            Presentation::Poisson(q) => check_hom_associative(q.assoc()),
            Presentation::NambuPoisson(q) => check_hom_associative(&q.assoc()?),
            _ => return Err(inapplicable()),
        },
        "hom-lie" => check_hom_lie(&lie_part(p).ok_or_else(inapplicable)?),
        "adjoint-identity" => check_adjoint_identity(&lie_part(p).ok_or_else(inapplicable)?),
        "hom-poisson" => check_hom_poisson(poisson_part(p).ok_or_else(inapplicable)?),
        "hom-leibniz" => check_hom_leibniz(poisson_part(p).ok_or_else(inapplicable)?),
        "hom-leibniz-commutative-form" => check_hom_leibniz_commutative_form(poisson_part(p).ok_or_else(inapplicable)?),
        "multiplicative" => match p {
            Presentation::Associative(a) => check_multiplicative(a),
            Presentation::Lie(l) => check_multiplicative(l),
            Presentation::Poisson(q) => check_multiplicative(q),
            Presentation::Nambu(n) => check_multiplicative(n),
            Presentation::NambuPoisson(q) => check_multiplicative(q),
        },
        "n-hom-lie" => check_n_hom_lie(&nambu_part(p).ok_or_else(inapplicable)?)?,
        "nary-skew" => check_nary_skew(&nambu_part(p).ok_or_else(inapplicable)?),
        "nambu" => check_nambu_identity(&nambu_part(p).ok_or_else(inapplicable)?)?,
        "nambu-adjoint-form" => check_nambu_via_adjoints(&nambu_part(p).ok_or_else(inapplicable)?)?,
        "nary-poisson" => check_nary_poisson(&nary_poisson_part(p).ok_or_else(inapplicable)?)?,
        "nary-hom-leibniz" => check_nary_hom_leibniz(&nary_poisson_part(p).ok_or_else(inapplicable)?)?,
        "nary-hom-leibniz-commutative-form" => {
            check_nary_hom_leibniz_commutative_form(&nary_poisson_part(p).ok_or_else(inapplicable)?)?
        }
        "phi-conditions" => check_phi_conditions(&lie_part(p).ok_or_else(inapplicable)?, phi())?,
        "phi-annihilates-induced" => check_phi_annihilates_induced(&lie_part(p).ok_or_else(inapplicable)?, phi())?,
        "phi-poisson" => check_phi_poisson(poisson_part(p).ok_or_else(inapplicable)?, phi())?,
        _ => return Err(inapplicable()),
    };
    Ok(report)
}

/// Runs every applicable check. A check that cannot be evaluated (for
/// instance an identity check on a presentation with distinct twisting
/// maps) is recorded as a failure with the reason as its note.
pub fn full_report(loaded: &LoadedAlgebra, digest: &str) -> FullReport {
    let checks: Vec<CheckReport> = applicable_checks(loaded)
        .into_iter()
        .map(|name| {
            run_check(name, loaded)
                .unwrap_or_else(|e| CheckReport::fail_unwitnessed(name, format!("not evaluable: {e}")))
        })
        .collect();
    let verdict = if checks.iter().all(CheckReport::passed) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    FullReport {
        input_digest: digest.to_string(),
        kind: loaded.presentation.kind().as_str(),
        verdict,
        checks,
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn describe_failure(report: &CheckReport) -> String {
    let leaf = report.first_failure().unwrap_or(report);
    match &leaf.witness {
        Some(w) => format!("{} at {}", leaf.check, w.describe()),
        None => leaf.check.clone(),
    }
}

struct ConstructParams<'a> {
    construction: Construction,
    r: Option<&'a Path>,
    weight: Option<&'a str>,
    phi: Option<&'a Path>,
    n: Option<usize>,
    a: &'a [String],
    with_product: bool,
}

fn param<T>(value: Option<T>, flag: &str, construction: Construction) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("`{}` requires --{flag}", construction.name())))
}

fn report_verdict(report: &CheckReport) -> String {
    if report.passed() {
        "pass".to_string()
    } else {
        format!("fail ({})", describe_failure(report))
    }
}

/// Performs a construction, returning the new presentation and the
/// parameters recorded in its provenance.
fn construct(
    loaded: &LoadedAlgebra,
    params: &ConstructParams<'_>,
) -> Result<(Presentation, IndexMap<String, String>), CliError> {
    let c = params.construction;
    let p = &loaded.presentation;
    let space = p.space();
    let mut recorded = IndexMap::new();
    let wrong_kind = || CliError::Usage(format!("`{}` does not apply to kind {}", c.name(), p.kind().as_str()));
    let out = match c {
        Construction::Commutator => {
            let Presentation::Associative(a) = p else {
                return Err(wrong_kind());
            };
            recorded.insert("with-product".into(), params.with_product.to_string());
            if params.with_product {
                Presentation::Poisson(commutator_poisson(a)?)
            } else {
                Presentation::Lie(commutator_bracket(a)?)
            }
        }
        Construction::RbTwist => {
            let path = param(params.r, "R", c)?;
            let file: MapFile = read_json(path)?;
            let map = parse_map(space, &file.images, "R")?;
            let weight_text = params.weight.unwrap_or("0");
            let weight = parse_scalar(weight_text).map_err(|source| FileError::MalformedRational {
                context: "--weight".into(),
                source,
            })?;
            recorded.insert("R".into(), crate::file::digest(&std::fs::read(path).unwrap_or_default()));
            recorded.insert("weight".into(), crate::scalar::format_scalar(&weight));
            match p {
                Presentation::Associative(a) => {
                    Presentation::Associative(twist_by_rota_baxter(a, &RotaBaxterOperator::associative(map, weight))?)
                }
                Presentation::Lie(l) => Presentation::Lie(twist_by_rota_baxter(l, &RotaBaxterOperator::lie(map, weight))?),
                Presentation::Poisson(q) => {
                    Presentation::Poisson(twist_by_rota_baxter(q, &RotaBaxterOperator::poisson(map, weight))?)
                }
                _ => return Err(wrong_kind()),
            }
        }
        Construction::InduceNary => {
            let path = param(params.phi, "phi", c)?;
            let n = param(params.n, "n", c)?;
            let file: CochainFile = read_json(path)?;
            if n < 2 || file.arity + 2 != n {
                return Err(CliError::Usage(format!(
                    "a cochain of arity {} induces a {}-ary bracket, not n = {n}",
                    file.arity,
                    file.arity + 2
                )));
            }
            let phi = parse_cochain(space, &file, "phi")?;
            let lie = lie_part(p).ok_or_else(wrong_kind)?;
            recorded.insert("n".into(), n.to_string());
            recorded.insert("phi".into(), crate::file::digest(&std::fs::read(path).unwrap_or_default()));
            let conditions = check_phi_conditions(&lie, &phi)?;
            recorded.insert("phi-conditions".into(), report_verdict(&conditions));
            match p {
                Presentation::Lie(l) => Presentation::Nambu(induced_nary_bracket(l, &phi)?),
                Presentation::Poisson(q) => {
                    recorded.insert("phi-poisson".into(), report_verdict(&check_phi_poisson(q, &phi)?));
                    Presentation::NambuPoisson(induced_nary_poisson(q, &phi)?)
                }
                _ => return Err(wrong_kind()),
            }
        }
        Construction::Reduce => {
            let pinned = params
                .a
                .iter()
                .map(|label| {
                    space.index_of(label).map(|i| space.basis(i)).ok_or_else(|| {
                        CliError::File(FileError::UnknownLabel {
                            label: label.clone(),
                            context: "--a".into(),
                        })
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            recorded.insert("a".into(), params.a.join(","));
            match p {
                Presentation::Nambu(nb) => {
                    let r = reduce_nambu_bracket(nb, &pinned)?;
                    recorded.insert("reduction-conditions".into(), report_verdict(&r.conditions));
                    Presentation::Lie(r.algebra)
                }
                Presentation::NambuPoisson(q) => {
                    let r = reduce_bracket(q, &pinned)?;
                    recorded.insert("reduction-conditions".into(), report_verdict(&r.conditions));
                    Presentation::Poisson(r.algebra)
                }
                _ => return Err(wrong_kind()),
            }
        }
    };
    Ok((out, recorded))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Output {
        path: path.display().to_string(),
        source,
    })
}

/// Executes a parsed command, writing normal output to `out`. Returns the
/// exit code; errors are returned for the caller to print.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Output {
        path: "<stdout>".into(),
        source: e,
    };
    match &cli.command {
        Command::Check {
            check,
            file,
            json,
            complete_skew,
        } => {
            let (loaded, digest) = load_algebra(file, *complete_skew)?;
            let report = run_check(check, &loaded)?;
            if *json {
                let doc = VerdictDocument {
                    input_digest: &digest,
                    report: &report,
                };
                out.write_all(to_json(&doc).as_bytes()).map_err(io)?;
            } else {
                write!(out, "{}", report.render()).map_err(io)?;
                writeln!(out, "input-digest: {digest}").map_err(io)?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Report { file, complete_skew } => {
            let (loaded, digest) = load_algebra(file, *complete_skew)?;
            let report = full_report(&loaded, &digest);
            out.write_all(to_json(&report).as_bytes()).map_err(io)?;
            Ok(if report.verdict == Verdict::Pass { 0 } else { 1 })
        }
        Command::Construct {
            construction,
            file,
            output,
            r,
            weight,
            phi,
            n,
            a,
            with_product,
            complete_skew,
        } => {
            let (loaded, digest) = load_algebra(file, *complete_skew)?;
            let params = ConstructParams {
                construction: *construction,
                r: r.as_deref(),
                weight: weight.as_deref(),
                phi: phi.as_deref(),
                n: *n,
                a,
                with_product: *with_product,
            };
            let (presentation, parameters) = construct(&loaded, &params)?;
            let mut result = LoadedAlgebra::new(presentation);
            result.provenance = Some(Provenance {
                construction: construction.name().to_string(),
                parameters,
                input_digest: digest,
            });
            write_file(output, &result.to_json())?;
            writeln!(
                out,
                "wrote {} ({})",
                output.display(),
                result.presentation.kind().as_str()
            )
            .map_err(io)?;
            Ok(0)
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
/// Diagnostics go to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hnk: {e}");
            e.exit_code()
        }
    }
}
