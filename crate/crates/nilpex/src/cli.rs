//! Batch command-line front end.
//!
//! Every subcommand reads its inputs from files (plus form literals on the
//! command line), runs the corresponding library operation, and renders a
//! deterministic report in either plain text or JSON. Identical inputs
//! produce byte-identical output, so the tool can sit inside regression
//! suites and shell pipelines.
//!
//! # Examples
//!
//! ```no_run
//! use clap::Parser;
//! use nilpex::cli::{run, RunConfig};
//!
//! let config = RunConfig::parse_from([
//!     "nilpex", "h2", "--algebra", "m3_01.alg", "--identities", "moufang.ids",
//! ]);
//! let report = run(&config).unwrap();
//! print!("{}", report.text);
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::arith::{MonomialOrder, Rational, Scalar};
use crate::automorphism::{
    automorphism_equations, automorphism_equations_labeled, buchberger_with_budget,
    sample_automorphisms, verify_parametric_family, Budget, ParametricMatrixFamily,
};
use crate::cohomology::{compute_b2, compute_h2, BilinearForm};
use crate::extension::{
    act_parametric, ann_of_form, central_extension, central_extension_unchecked,
    check_tm_membership, extension_table, intersection_conditions, CohomologySubspace,
};
use crate::identity::IdentitySet;
use crate::linalg::Subspace;
use crate::{Error, Result};

/// Top-level command-line configuration.
#[derive(Parser, Debug)]
#[command(
    name = "nilpex",
    version,
    about = "Exact-arithmetic toolkit for classifying nilpotent algebras by central extensions"
)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Gröbner pair budget (overrides NILPEX_BUDGET_PAIRS and the default).
    #[arg(long, global = true)]
    pub budget_pairs: Option<usize>,

    /// Gröbner degree budget.
    #[arg(long, global = true)]
    pub budget_degree: Option<u32>,

    /// The operation to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Output format selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-oriented fixed-layout text.
    Text,
    /// Pretty-printed JSON with sorted keys.
    Json,
}

/// All subcommands.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a set of identities on an algebra.
    Check {
        /// Algebra definition file.
        #[arg(long)]
        algebra: PathBuf,
        /// Identity file.
        #[arg(long)]
        identities: PathBuf,
    },
    /// Compute the cocycle space Z².
    Z2 {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        identities: PathBuf,
    },
    /// Compute the coboundary space B².
    B2 {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Compute Z², B², and H² representatives.
    H2 {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        identities: PathBuf,
    },
    /// Compute the annihilator of an algebra.
    Ann {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Print the polynomial equations cutting out the automorphism group.
    AutEqs {
        #[arg(long)]
        algebra: PathBuf,
        /// Also compute a reduced lexicographic Gröbner basis of the system.
        #[arg(long)]
        groebner: bool,
    },
    /// Verify a parametric matrix family against the automorphism equations.
    AutVerify {
        #[arg(long)]
        algebra: PathBuf,
        /// Family definition file.
        #[arg(long)]
        family: PathBuf,
    },
    /// Instantiate a family at concrete parameter values.
    AutSample {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        family: PathBuf,
        /// Parameter assignment `l11=2,l21=0,l31=1/3`; repeatable.
        #[arg(long = "assign", required = true)]
        assignments: Vec<String>,
    },
    /// Print the symbolic action of a family on cohomology representatives.
    Act {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        identities: PathBuf,
        #[arg(long)]
        family: PathBuf,
        /// Act on a single H² representative (0-based) instead of all.
        #[arg(long)]
        h2_index: Option<usize>,
    },
    /// Compute the annihilator of a bilinear form.
    AnnTheta {
        #[arg(long)]
        algebra: PathBuf,
        /// Form literal such as `d13+d22+d31`.
        #[arg(long)]
        theta: String,
        /// When given, first verify the form is a cocycle for these identities.
        #[arg(long)]
        identities: Option<PathBuf>,
    },
    /// Decide whether forms span a subspace with trivial joint annihilator.
    TmCheck {
        #[arg(long)]
        algebra: PathBuf,
        /// Form literal; repeatable, one per representative.
        #[arg(long, required = true)]
        theta: Vec<String>,
        /// When given, first verify every form is a cocycle.
        #[arg(long)]
        identities: Option<PathBuf>,
    },
    /// Build the central extension by one or more cocycles.
    Extend {
        #[arg(long)]
        algebra: PathBuf,
        /// Form literal; repeatable, one per new central coordinate.
        #[arg(long, required = true)]
        theta: Vec<String>,
        /// When given, validate the forms against these identities first.
        #[arg(long)]
        identities: Option<PathBuf>,
        /// Write the extension as an algebra definition file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full desk pipeline: identities, Z²/B²/H², automorphism
    /// equations, annihilator, and intersection conditions — plus the
    /// symbolic action table when a family is supplied.
    Pipeline {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        identities: PathBuf,
        /// Verified automorphism family for the action table.
        #[arg(long)]
        family: Option<PathBuf>,
    },
}

/// A rendered report: the same content in both formats.
#[derive(Debug)]
pub struct RenderedReport {
    /// Fixed-layout text, ending in a newline.
    pub text: String,
    /// JSON value (keys serialize sorted).
    pub json: Value,
}

/// Parses the process arguments, runs the command, prints the report, and
/// converts errors into a nonzero exit with a machine-readable record on
/// stderr.
#[must_use]
pub fn main_entry() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(report) => {
            let rendered = match config.format {
                OutputFormat::Text => report.text,
                OutputFormat::Json => {
                    let mut rendered = serde_json::to_string_pretty(&report.json)
                        .expect("crate-built JSON always serializes");
                    rendered.push('\n');
                    rendered
                }
            };
            // A closed pipe (e.g. `nilpex … | head`) is a normal way for a
            // consumer to stop reading, not a failure of this process.
            match io::stdout().write_all(rendered.as_bytes()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(err) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::FAILURE
                }
            }
        }
        Err(err) => {
            match config.format {
                OutputFormat::Text => eprintln!("error: {err}"),
                OutputFormat::Json => eprintln!("{}", json!({ "error": err.to_string() })),
            }
            ExitCode::FAILURE
        }
    }
}

/// Executes a parsed configuration and returns the rendered report.
pub fn run(config: &RunConfig) -> Result<RenderedReport> {
    match &config.command {
        Command::Check {
            algebra,
            identities,
        } => cmd_check(algebra, identities),
        Command::Z2 {
            algebra,
            identities,
        } => cmd_z2(algebra, identities),
        Command::B2 { algebra } => cmd_b2(algebra),
        Command::H2 {
            algebra,
            identities,
        } => cmd_h2(algebra, identities),
        Command::Ann { algebra } => cmd_ann(algebra),
        Command::AutEqs { algebra, groebner } => {
            cmd_aut_eqs(algebra, *groebner, resolve_budget(config)?)
        }
        Command::AutVerify { algebra, family } => cmd_aut_verify(algebra, family),
        Command::AutSample {
            algebra,
            family,
            assignments,
        } => cmd_aut_sample(algebra, family, assignments),
        Command::Act {
            algebra,
            identities,
            family,
            h2_index,
        } => cmd_act(algebra, identities, family, *h2_index),
        Command::AnnTheta {
            algebra,
            theta,
            identities,
        } => cmd_ann_theta(algebra, theta, identities.as_deref()),
        Command::TmCheck {
            algebra,
            theta,
            identities,
        } => cmd_tm_check(algebra, theta, identities.as_deref()),
        Command::Extend {
            algebra,
            theta,
            identities,
            out,
        } => cmd_extend(algebra, theta, identities.as_deref(), out.as_deref()),
        Command::Pipeline {
            algebra,
            identities,
            family,
        } => cmd_pipeline(algebra, identities, family.as_deref()),
    }
}

/// Budget resolution: flag beats `NILPEX_BUDGET_PAIRS`, which beats the
/// default.
fn resolve_budget(config: &RunConfig) -> Result<Budget> {
    let mut budget = Budget::default();
    if let Ok(raw) = std::env::var("NILPEX_BUDGET_PAIRS") {
        budget.max_pair_reductions = raw.trim().parse().map_err(|_| {
            Error::parse(format!(
                "NILPEX_BUDGET_PAIRS must be an integer, got `{raw}`"
            ))
        })?;
    }
    if let Some(pairs) = config.budget_pairs {
        budget.max_pair_reductions = pairs;
    }
    if let Some(degree) = config.budget_degree {
        budget.max_degree = degree;
    }
    Ok(budget)
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::parse(format!("file not found: `{}`", path.display()))
        } else {
            Error::Io(e)
        }
    })
}

fn load_algebra(path: &Path) -> Result<Algebra> {
    Algebra::parse(&read_file(path)?)
}

fn load_identities(path: &Path) -> Result<IdentitySet> {
    IdentitySet::parse(&read_file(path)?)
}

fn load_family(path: &Path) -> Result<ParametricMatrixFamily> {
    ParametricMatrixFamily::parse(&read_file(path)?)
}

fn parse_assignment(text: &str) -> Result<BTreeMap<String, Rational>> {
    let mut map = BTreeMap::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Error::parse(format!("bad assignment `{part}`: expected name=value")))?;
        let rational: Rational = value
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad rational literal `{}`", value.trim())))?;
        map.insert(name.trim().to_string(), rational);
    }
    if map.is_empty() {
        return Err(Error::parse("empty parameter assignment"));
    }
    Ok(map)
}

/// Checks that every form lies in the cocycle space of the identities.
fn validate_cocycles(a: &Algebra, ids: &IdentitySet, thetas: &[BilinearForm]) -> Result<()> {
    let (z2, _) = crate::cohomology::compute_z2(a, ids)?;
    for (t, theta) in thetas.iter().enumerate() {
        if !z2.contains(&theta.flatten()) {
            return Err(Error::VerificationFailed(format!(
                "form {} ({}) is not a cocycle for the given identities",
                t + 1,
                theta.to_literal()
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

fn header(a: &Algebra) -> String {
    format!("algebra: {} (dim {})\n", a.name, a.dim)
}

fn list_block(title: &str, items: &[String]) -> String {
    if items.is_empty() {
        return format!("{title}: none\n");
    }
    let mut out = format!("{title}:\n");
    for item in items {
        let _ = writeln!(out, "  {item}");
    }
    out
}

fn form_grid_json(theta: &BilinearForm) -> Value {
    let n = theta.n();
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| Value::String(theta.entry(i, j).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Renders a subspace of flattened bilinear forms both ways.
fn forms_of(sub: &Subspace, n: usize) -> Result<(Vec<String>, Value)> {
    let mut literals = Vec::new();
    let mut grids = Vec::new();
    for v in sub.basis() {
        let theta = BilinearForm::from_flat(n, v)?;
        literals.push(theta.to_literal());
        grids.push(form_grid_json(&theta));
    }
    Ok((literals, Value::Array(grids)))
}

fn reps_of(reps: &[BilinearForm]) -> (Vec<String>, Value) {
    let literals = reps.iter().map(BilinearForm::to_literal).collect();
    let grids = Value::Array(reps.iter().map(form_grid_json).collect());
    (literals, grids)
}

fn strings_json(items: &[String]) -> Value {
    Value::Array(items.iter().cloned().map(Value::String).collect())
}

fn coords_json(coords: &[Scalar]) -> Value {
    Value::Array(
        coords
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn form_table_rows(theta: &BilinearForm) -> Vec<String> {
    let n = theta.n();
    (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| theta.entry(i, j).to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect()
}

fn identity_names(ids: &IdentitySet) -> Vec<String> {
    ids.identities.iter().map(|id| id.name.clone()).collect()
}

// ---------------------------------------------------------------------------
// Command handlers
// ---------------------------------------------------------------------------

fn cmd_check(algebra: &Path, identities: &Path) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let ids = load_identities(identities)?;
    let report = a.check_identities(&ids)?;
    let failures: Vec<String> = report.failures.iter().map(ToString::to_string).collect();
    let mut text = header(&a);
    let _ = writeln!(text, "identities: {}", identity_names(&ids).join(", "));
    let _ = writeln!(text, "holds: {}", report.holds);
    if !failures.is_empty() {
        text.push_str(&list_block("failures", &failures));
    }
    let json = json!({
        "algebra": a.name,
        "dim": a.dim,
        "identities": identity_names(&ids),
        "holds": report.holds,
        "failures": failures,
    });
    Ok(RenderedReport { text, json })
}

fn cmd_z2(algebra: &Path, identities: &Path) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let ids = load_identities(identities)?;
    let (z2, splits) = crate::cohomology::compute_z2(&a, &ids)?;
    let (literals, grids) = forms_of(&z2, a.dim)?;
    let split_texts: Vec<String> = splits.iter().map(ToString::to_string).collect();
    let mut text = header(&a);
    let _ = writeln!(text, "z2 dimension: {}", z2.dim());
    text.push_str(&list_block("z2 basis", &literals));
    text.push_str(&list_block("case splits", &split_texts));
    let json = json!({ "z2": grids, "case_splits": split_texts });
    Ok(RenderedReport { text, json })
}

fn cmd_b2(algebra: &Path) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let b2 = compute_b2(&a);
    let (literals, grids) = forms_of(&b2, a.dim)?;
    let mut text = header(&a);
    let _ = writeln!(text, "b2 dimension: {}", b2.dim());
    text.push_str(&list_block("b2 basis", &literals));
    let json = json!({ "b2": grids });
    Ok(RenderedReport { text, json })
}

fn cmd_h2(algebra: &Path, identities: &Path) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let ids = load_identities(identities)?;
    let spaces = compute_h2(&a, &ids)?;
    let (z2_literals, z2_grids) = forms_of(&spaces.z2, a.dim)?;
    let (b2_literals, b2_grids) = forms_of(&spaces.b2, a.dim)?;
    let (h2_literals, h2_grids) = reps_of(&spaces.h2_reps);
    let split_texts: Vec<String> = spaces.case_splits.iter().map(ToString::to_string).collect();
    let mut text = header(&a);
    let _ = writeln!(text, "z2 dimension: {}", spaces.z2.dim());
    let _ = writeln!(text, "b2 dimension: {}", spaces.b2.dim());
    let _ = writeln!(text, "h2 dimension: {}", spaces.h2_reps.len());
    text.push_str(&list_block("z2 basis", &z2_literals));
    text.push_str(&list_block("b2 basis", &b2_literals));
    text.push_str(&list_block("h2 representatives", &h2_literals));
    text.push_str(&list_block("case splits", &split_texts));
    let json = json!({
        "z2": z2_grids,
        "b2": b2_grids,
        "h2": h2_grids,
        "case_splits": split_texts,
    });
    Ok(RenderedReport { text, json })
}

fn cmd_ann(algebra: &Path) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let (ann, splits) = a.compute_annihilator();
    let elements: Vec<String> = ann
        .basis()
        .iter()
        .map(|v| Element::from_coords(v.clone()).to_string())
        .collect();
    let split_texts: Vec<String> = splits.iter().map(ToString::to_string).collect();
    let mut text = header(&a);
    let _ = writeln!(text, "annihilator dimension: {}", ann.dim());
    text.push_str(&list_block("annihilator basis", &elements));
    text.push_str(&list_block("case splits", &split_texts));
    let json = json!({
        "dimension": ann.dim(),
        "basis": Value::Array(ann.basis().iter().map(|v| coords_json(v)).collect::<Vec<_>>()),
        "case_splits": split_texts,
    });
    Ok(RenderedReport { text, json })
}

fn cmd_aut_eqs(algebra: &Path, groebner: bool, budget: Budget) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let system = automorphism_equations(&a);
    let labeled = automorphism_equations_labeled(&a);
    let equation_texts: Vec<String> = labeled.iter().map(ToString::to_string).collect();
    let mut text = header(&a);
    let _ = writeln!(text, "unknowns: {}", system.unknowns.join(", "));
    text.push_str(&list_block(
        &format!("equations ({})", labeled.len()),
        &equation_texts,
    ));
    let mut json = json!({
        "unknowns": system.unknowns,
        "equations": Value::Array(
            labeled
                .iter()
                .map(|eq| {
                    json!({
                        "i": eq.i + 1,
                        "j": eq.j + 1,
                        "k": eq.k + 1,
                        "poly": eq.poly.to_string(),
                    })
                })
                .collect::<Vec<_>>(),
        ),
    });
    if groebner {
        let basis = buchberger_with_budget(&system.equations, MonomialOrder::Lex, budget)?;
        let generators: Vec<String> = basis.generators.iter().map(ToString::to_string).collect();
        text.push_str(&list_block(
            &format!("groebner basis (lex, {} generators)", generators.len()),
            &generators,
        ));
        json["groebner"] = strings_json(&generators);
    }
    Ok(RenderedReport { text, json })
}

fn cmd_aut_verify(algebra: &Path, family: &Path) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let fam = load_family(family)?;
    let report = verify_parametric_family(&a, &fam)?;
    let residual_texts: Vec<String> = report.residuals.iter().map(ToString::to_string).collect();
    let params: Vec<String> = fam.params().into_iter().collect();
    let mut text = header(&a);
    let _ = writeln!(text, "family parameters: {}", params.join(", "));
    let _ = writeln!(
        text,
        "is_automorphism_family: {}",
        report.is_automorphism_family
    );
    let _ = writeln!(text, "determinant: {}", report.det);
    let _ = writeln!(
        text,
        "invertibility_certified: {}",
        report.invertibility_certified
    );
    text.push_str(&list_block("residuals", &residual_texts));
    let json = json!({
        "parameters": params,
        "is_automorphism_family": report.is_automorphism_family,
        "det": report.det.to_string(),
        "invertibility_certified": report.invertibility_certified,
        "residuals": residual_texts,
    });
    Ok(RenderedReport { text, json })
}

fn cmd_aut_sample(algebra: &Path, family: &Path, assignments: &[String]) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let fam = load_family(family)?;
    let parsed: Vec<BTreeMap<String, Rational>> = assignments
        .iter()
        .map(|s| parse_assignment(s))
        .collect::<Result<_>>()?;
    let report = sample_automorphisms(&a, &fam, &parsed)?;
    let mut text = header(&a);
    let _ = writeln!(text, "samples: {}", report.matrices.len());
    let mut grids = Vec::new();
    for (idx, m) in report.matrices.iter().enumerate() {
        let _ = writeln!(text, "sample {}:", idx + 1);
        for r in 0..m.rows() {
            let cells: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "  [{}]", cells.join(", "));
        }
        grids.push(Value::Array(
            (0..m.rows()).map(|r| coords_json(m.row(r))).collect(),
        ));
    }
    text.push_str(&list_block("notices", &report.notices));
    let json = json!({
        "samples": Value::Array(grids),
        "notices": report.notices,
    });
    Ok(RenderedReport { text, json })
}

fn cmd_act(
    algebra: &Path,
    identities: &Path,
    family: &Path,
    h2_index: Option<usize>,
) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let ids = load_identities(identities)?;
    let fam = load_family(family)?;
    let spaces = compute_h2(&a, &ids)?;
    let reps = match h2_index {
        Some(idx) => {
            let dim = spaces.h2_reps.len();
            let rep = spaces.h2_reps.get(idx).cloned().ok_or_else(|| {
                Error::shape(format!("h2 index {idx} out of range (h2 dimension {dim})"))
            })?;
            vec![rep]
        }
        None => spaces.h2_reps.clone(),
    };
    let (rep_literals, _) = reps_of(&reps);
    let w = CohomologySubspace::new(spaces, reps)?;
    let table = act_parametric(&fam, &w)?;
    let rows = form_table_rows(&table);
    let mut text = header(&a);
    let _ = writeln!(
        text,
        "family parameters: {}",
        fam.params().into_iter().collect::<Vec<_>>().join(", ")
    );
    let _ = writeln!(text, "coefficients: {}", w.coeff_symbols().join(", "));
    text.push_str(&list_block("representatives", &rep_literals));
    text.push_str(&list_block("action table", &rows));
    let json = json!({
        "coefficients": w.coeff_symbols(),
        "representatives": rep_literals,
        "table": form_grid_json(&table),
    });
    Ok(RenderedReport { text, json })
}

fn cmd_ann_theta(algebra: &Path, theta: &str, identities: Option<&Path>) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let form = BilinearForm::parse(theta, a.dim)?;
    if let Some(path) = identities {
        let ids = load_identities(path)?;
        validate_cocycles(&a, &ids, std::slice::from_ref(&form))?;
    }
    let ann = ann_of_form(&form);
    let elements: Vec<String> = ann
        .basis()
        .iter()
        .map(|v| Element::from_coords(v.clone()).to_string())
        .collect();
    let mut text = header(&a);
    let _ = writeln!(text, "theta: {}", form.to_literal());
    let _ = writeln!(text, "ann(theta) dimension: {}", ann.dim());
    text.push_str(&list_block("ann(theta) basis", &elements));
    let json = json!({
        "theta": form.to_literal(),
        "dimension": ann.dim(),
        "basis": Value::Array(ann.basis().iter().map(|v| coords_json(v)).collect::<Vec<_>>()),
    });
    Ok(RenderedReport { text, json })
}

fn cmd_tm_check(
    algebra: &Path,
    thetas: &[String],
    identities: Option<&Path>,
) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let forms: Vec<BilinearForm> = thetas
        .iter()
        .map(|t| BilinearForm::parse(t, a.dim))
        .collect::<Result<_>>()?;
    if let Some(path) = identities {
        let ids = load_identities(path)?;
        validate_cocycles(&a, &ids, &forms)?;
    }
    let member = check_tm_membership(&a, &forms)?;
    let literals: Vec<String> = forms.iter().map(BilinearForm::to_literal).collect();
    let mut text = header(&a);
    text.push_str(&list_block(&format!("forms ({})", forms.len()), &literals));
    let _ = writeln!(text, "member_of_tm: {member}");
    let json = json!({
        "forms": literals,
        "member_of_tm": member,
    });
    Ok(RenderedReport { text, json })
}

fn cmd_extend(
    algebra: &Path,
    thetas: &[String],
    identities: Option<&Path>,
    out: Option<&Path>,
) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let forms: Vec<BilinearForm> = thetas
        .iter()
        .map(|t| BilinearForm::parse(t, a.dim))
        .collect::<Result<_>>()?;
    let result = match identities {
        Some(path) => {
            let ids = load_identities(path)?;
            central_extension(&a, &forms, &ids)?
        }
        None => central_extension_unchecked(&a, &forms)?,
    };
    let products: Vec<String> = extension_table(&result)
        .lines()
        .map(ToString::to_string)
        .collect();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "parent: {} (dim {})",
        result.parent.name, result.parent.dim
    );
    let _ = writeln!(
        text,
        "extension: {} (dim {})",
        result.algebra.name, result.algebra.dim
    );
    text.push_str(&list_block("products", &products));
    let mut json = json!({
        "parent": result.parent.name,
        "name": result.algebra.name,
        "dim": result.algebra.dim,
        "products": products,
    });
    if let Some(path) = out {
        fs::write(path, result.algebra.print())?;
        let _ = writeln!(text, "wrote: {}", path.display());
        json["wrote"] = Value::String(path.display().to_string());
    }
    Ok(RenderedReport { text, json })
}

fn cmd_pipeline(
    algebra: &Path,
    identities: &Path,
    family: Option<&Path>,
) -> Result<RenderedReport> {
    let a = load_algebra(algebra)?;
    let ids = load_identities(identities)?;
    let check = a.check_identities(&ids)?;
    let spaces = compute_h2(&a, &ids)?;
    let labeled = automorphism_equations_labeled(&a);
    let (ann, ann_splits) = a.compute_annihilator();
    let conditions = intersection_conditions(&a, &spaces)?;

    let (z2_literals, z2_grids) = forms_of(&spaces.z2, a.dim)?;
    let (b2_literals, b2_grids) = forms_of(&spaces.b2, a.dim)?;
    let (h2_literals, h2_grids) = reps_of(&spaces.h2_reps);
    let split_texts: Vec<String> = spaces.case_splits.iter().map(ToString::to_string).collect();
    let equation_texts: Vec<String> = labeled.iter().map(ToString::to_string).collect();
    let ann_elements: Vec<String> = ann
        .basis()
        .iter()
        .map(|v| Element::from_coords(v.clone()).to_string())
        .collect();
    let ann_split_texts: Vec<String> = ann_splits.iter().map(ToString::to_string).collect();
    let condition_texts: Vec<String> = conditions.iter().map(ToString::to_string).collect();

    let mut text = header(&a);
    let _ = writeln!(text, "identities: {}", identity_names(&ids).join(", "));
    let _ = writeln!(text, "holds: {}", check.holds);
    text.push('\n');
    let _ = writeln!(text, "z2 dimension: {}", spaces.z2.dim());
    let _ = writeln!(text, "b2 dimension: {}", spaces.b2.dim());
    let _ = writeln!(text, "h2 dimension: {}", spaces.h2_reps.len());
    text.push_str(&list_block("z2 basis", &z2_literals));
    text.push_str(&list_block("b2 basis", &b2_literals));
    text.push_str(&list_block("h2 representatives", &h2_literals));
    text.push_str(&list_block("case splits", &split_texts));
    text.push('\n');
    text.push_str(&list_block(
        &format!("automorphism equations ({})", labeled.len()),
        &equation_texts,
    ));
    text.push('\n');
    let _ = writeln!(text, "annihilator dimension: {}", ann.dim());
    text.push_str(&list_block("annihilator basis", &ann_elements));
    if !ann_split_texts.is_empty() {
        text.push_str(&list_block("annihilator case splits", &ann_split_texts));
    }
    text.push('\n');
    text.push_str(&list_block("intersection conditions", &condition_texts));

    let mut json = json!({
        "algebra": a.name,
        "dim": a.dim,
        "identities": identity_names(&ids),
        "holds": check.holds,
        "z2": z2_grids,
        "b2": b2_grids,
        "h2": h2_grids,
        "case_splits": split_texts,
        "aut_equations": equation_texts,
        "annihilator": Value::Array(
            ann.basis().iter().map(|v| coords_json(v)).collect::<Vec<_>>()
        ),
        "conditions": condition_texts,
    });

    if let Some(path) = family {
        let fam = load_family(path)?;
        let report = verify_parametric_family(&a, &fam)?;
        if !report.is_automorphism_family {
            let first = report
                .residuals
                .first()
                .map_or_else(|| "unknown residual".to_string(), ToString::to_string);
            return Err(Error::VerificationFailed(format!(
                "the supplied family is not an automorphism family: {first}"
            )));
        }
        let w = CohomologySubspace::new(spaces.clone(), spaces.h2_reps.clone())?;
        let table = act_parametric(&fam, &w)?;
        let rows = form_table_rows(&table);
        text.push('\n');
        let _ = writeln!(text, "family determinant: {}", report.det);
        let _ = writeln!(text, "coefficients: {}", w.coeff_symbols().join(", "));
        text.push_str(&list_block("action table", &rows));
        json["family_det"] = Value::String(report.det.to_string());
        json["coefficients"] = strings_json(w.coeff_symbols());
        json["action_table"] = form_grid_json(&table);
    }

    Ok(RenderedReport { text, json })
}
