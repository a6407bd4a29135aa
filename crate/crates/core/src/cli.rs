//! The `nalg` command line.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::constants::{constants_basis, free_generators, verify_hilbert_product};
use crate::error::Error;
use crate::expr::{monomial_to_json, parse_polynomial, polynomial_to_json, ParseError};
use crate::monomial::{Flavor, MultiDegree, Var};
use crate::ode::{
    homogeneous_general_solution, nonassoc_exponential, solve_linear_ode, LinearODE, RootData, TaylorSeries,
    TruncatedElement,
};
use crate::polynomial::Q;
use crate::rep::{constants_decomposition, Decomposition, Method};
use crate::taylor::{generalized_expand, taylor_expand, OperatorFamily, TaylorExpansion};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "nalg", version, about = "Exact algebra in free non-associative algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Algebra flavor: magma, commutative or associative.
    #[arg(long, global = true, default_value = "magma")]
    flavor: Flavor,
    /// Truncation order for series.
    #[arg(long = "N", global = true)]
    truncation: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse an expression and print it canonically.
    Parse {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Partial derivative with respect to one variable.
    Derive {
        #[arg(long)]
        var: Var,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Taylor expansion with constant coefficients.
    TaylorExpand {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// `taylor`, `jordan` or `linear:ALPHA,BETA` for (αλ + βρ)^k.
        #[arg(long, default_value = "taylor")]
        family: String,
    },
    /// Basis of the constants in one or more multidegrees.
    Constants {
        #[arg(long, default_value_t = 1)]
        vars: usize,
        /// A multidegree such as `1,1`, or a total degree.
        #[arg(long)]
        degree: String,
    },
    /// Free generators of the one-variable magma constants.
    Generators {
        #[arg(long)]
        degree: usize,
    },
    /// Check the Hilbert series product identity.
    Hilbert {
        #[arg(long, default_value_t = 1)]
        vars: usize,
        #[arg(long = "max-degree")]
        max_degree: usize,
    },
    /// Decompose the multilinear constants into irreducible S_k-modules.
    Decompose {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Linear ODEs with constant coefficients.
    #[command(subcommand)]
    Ode(OdeCommand),
    /// The non-associative exponential E(x).
    Exp,
    /// Run a bundled verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Kernel,
    Recursion,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Hilbert,
    Decompositions,
    Ode,
    Exp,
    All,
}

#[derive(Debug, Subcommand)]
enum OdeCommand {
    /// Solve y^(n) + a1 y^(n-1) + ... + an y = f by the coefficient recursion.
    Solve(SolveArgs),
    /// Homogeneous solution from rational characteristic roots.
    Homogeneous {
        /// `root:multiplicity` pairs, e.g. `1:2,0:1`.
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Constants c_ij separated by `;`, in root order; default all 1.
        #[arg(long, allow_hyphen_values = true)]
        constants: Option<String>,
    },
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    order: usize,
    /// a1,...,an
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    rhs: String,
    /// c0;...;c(n-1); missing entries are 0.
    #[arg(long, allow_hyphen_values = true)]
    init: Option<String>,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(Error),
    Parse(ParseError),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Parse(e)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render(format: Format, text: String, json: impl FnOnce() -> Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json()).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn parse_q(s: &str) -> Result<Q, Error> {
    s.trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("'{s}' is not a rational number")))
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let flavor = cli.flavor;
    let fmt = cli.format;
    match &cli.command {
        Command::Parse { expr } => {
            let p = parse_polynomial(expr, flavor)?;
            Ok(render(fmt, format!("{p}\n"), || polynomial_to_json(&p)))
        }
        Command::Derive { var, expr, times } => {
            if *var == 0 {
                return Err(Error::Invalid("variable indices start at 1".into()).into());
            }
            let p = parse_polynomial(expr, flavor)?.derivative_n(*var, *times);
            Ok(render(fmt, format!("{p}\n"), || polynomial_to_json(&p)))
        }
        Command::TaylorExpand { expr, family } => {
            let p = parse_polynomial(expr, flavor)?;
            let e = match family.as_str() {
                "taylor" => taylor_expand(&p),
                other => TaylorExpansion::new(
                    flavor,
                    (p.max_var() as usize).max(1),
                    generalized_expand(&p, &parse_family(other)?)?,
                )?,
            };
            Ok(render(fmt, e.to_string(), || taylor_json(&e)))
        }
        Command::Constants { vars, degree } => constants(fmt, flavor, *vars, degree),
        Command::Generators { degree } => {
            let set = free_generators(*degree);
            let mut text = format!("degree {degree}: {} generators\n", set.len());
            for g in &set.elements {
                let forms: Vec<String> = g.forms.iter().map(|f| f.to_string()).collect();
                let _ = writeln!(text, "{}  [{}]  phi = {}", g.word, forms.join("; "), g.element);
            }
            Ok(render(fmt, text, || {
                json!({
                    "degree": degree,
                    "count": set.len(),
                    "generators": set.elements.iter().map(|g| json!({
                        "word": monomial_to_json(&g.word, Flavor::Magma),
                        "forms": g.forms.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                        "element": polynomial_to_json(&g.element),
                    })).collect::<Vec<_>>(),
                })
            }))
        }
        Command::Hilbert { vars, max_degree } => {
            let report = verify_hilbert_product(flavor, *vars, *max_degree);
            let mut text = String::new();
            for r in &report.rows {
                let tag = if r.pass() { "PASS" } else { "FAIL" };
                let _ = writeln!(text, "{tag} {}: dim R = {}, sum dim R_0 = {}", r.multidegree, r.component_dim, r.constants_sum);
            }
            Ok(render(fmt, text, || {
                json!({
                    "flavor": flavor.name(),
                    "vars": vars,
                    "max_degree": max_degree,
                    "pass": report.pass(),
                    "rows": report.rows.iter().map(|r| json!({
                        "multidegree": r.multidegree.exponents(),
                        "component_dim": r.component_dim,
                        "constants_sum": r.constants_sum,
                        "pass": r.pass(),
                    })).collect::<Vec<_>>(),
                })
            }))
        }
        Command::Decompose { k, method } => decompose(fmt, flavor, *k, *method),
        Command::Ode(cmd) => ode(fmt, flavor, cli.truncation.unwrap_or(10), cmd),
        Command::Exp => {
            if flavor != Flavor::Magma {
                return Err(Error::FlavorMismatch(Flavor::Magma, flavor).into());
            }
            let e = nonassoc_exponential(cli.truncation.unwrap_or(8));
            Ok(render(fmt, e.to_string(), || truncated_json(&e)))
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Hilbert => Suite::Hilbert,
                SuiteArg::Decompositions => Suite::Decompositions,
                SuiteArg::Ode => Suite::Ode,
                SuiteArg::Exp => Suite::Exp,
                SuiteArg::All => Suite::All,
            };
            let items = run_suite(suite);
            let mut text = String::new();
            for item in &items {
                let _ = writeln!(text, "{item}");
            }
            let passed = items.iter().filter(|i| i.pass).count();
            let _ = writeln!(text, "{passed}/{} passed", items.len());
            Ok(render(fmt, text, || {
                json!({
                    "pass": passed == items.len(),
                    "items": items.iter().map(|i| i.to_json()).collect::<Vec<_>>(),
                })
            }))
        }
    }
}

fn parse_family(text: &str) -> Result<OperatorFamily, Error> {
    if text == "jordan" {
        return Ok(OperatorFamily::jordan());
    }
    if let Some(rest) = text.strip_prefix("linear:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if let [a, b] = parts.as_slice() {
            return OperatorFamily::linear_power(parse_q(a)?, parse_q(b)?);
        }
    }
    Err(Error::Invalid(format!(
        "unknown operator family '{text}' (expected taylor, jordan or linear:ALPHA,BETA)"
    )))
}

fn taylor_json(e: &TaylorExpansion) -> Value {
    let map: serde_json::Map<String, Value> = e
        .coefficients()
        .iter()
        .map(|(a, p)| {
            let key = a.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            (key, polynomial_to_json(p))
        })
        .collect();
    Value::Object(map)
}

fn constants(fmt: Format, flavor: Flavor, vars: usize, degree: &str) -> Result<String, Failure> {
    let parts: Vec<usize> = degree
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Invalid(format!("bad degree '{degree}'"))))
        .collect::<Result<_, _>>()?;
    let degrees = if parts.len() == 1 && vars > 1 {
        MultiDegree::all_of_total(vars, parts[0])
    } else {
        if parts.len() > vars.max(1) {
            return Err(Error::Invalid(format!("multidegree {degree} has more than {vars} entries")).into());
        }
        vec![MultiDegree::new(parts)]
    };
    let bases: Vec<_> = degrees.iter().map(|d| constants_basis(d, flavor)).collect();
    let mut text = String::new();
    for b in &bases {
        let _ = writeln!(
            text,
            "{} {}: dim {} (component {})",
            flavor,
            b.multidegree(),
            b.len(),
            b.component_dim()
        );
        for p in b.elements() {
            let _ = writeln!(text, "  {p}");
        }
    }
    Ok(render(fmt, text, || {
        Value::Array(
            bases
                .iter()
                .map(|b| {
                    json!({
                        "flavor": flavor.name(),
                        "multidegree": b.multidegree().exponents(),
                        "dimension": b.len(),
                        "component_dimension": b.component_dim(),
                        "basis": b.elements().iter().map(polynomial_to_json).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }))
}

fn decomposition_json(d: &Decomposition) -> Value {
    Value::Array(
        d.iter()
            .map(|(p, m)| json!({"partition": p.parts(), "multiplicity": m}))
            .collect(),
    )
}

fn decompose(fmt: Format, flavor: Flavor, k: usize, method: MethodArg) -> Result<String, Failure> {
    let methods: Vec<(&str, Method)> = match method {
        MethodArg::Kernel => vec![("kernel", Method::Kernel)],
        MethodArg::Recursion => vec![("recursion", Method::Recursion)],
        MethodArg::Both => vec![("kernel", Method::Kernel), ("recursion", Method::Recursion)],
    };
    let mut results = Vec::new();
    for (name, m) in methods {
        results.push((name, constants_decomposition(k, flavor, m)?));
    }
    let space_dim = crate::constants::constants_dimension(&MultiDegree::multilinear(k), flavor) as u64;
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let mut text = format!("{flavor} constants, multilinear degree {k}\n");
    for (name, d) in &results {
        let _ = writeln!(text, "{name}: {d}");
        for (p, m) in d.iter() {
            let _ = writeln!(text, "  {p}: {m}");
        }
        let _ = writeln!(text, "  dimension audit: {} = {}", d.dimension(), space_dim);
    }
    if results.len() > 1 {
        let _ = writeln!(text, "methods agree: {agree}");
    }
    Ok(render(fmt, text, || {
        let mut obj = serde_json::Map::new();
        obj.insert("flavor".into(), json!(flavor.name()));
        obj.insert("k".into(), json!(k));
        obj.insert("space_dimension".into(), json!(space_dim));
        for (name, d) in &results {
            obj.insert(
                (*name).into(),
                json!({"decomposition": decomposition_json(d), "dimension": d.dimension()}),
            );
        }
        obj.insert("agree".into(), json!(agree));
        Value::Object(obj)
    }))
}

fn truncated_json(e: &TruncatedElement) -> Value {
    json!({
        "flavor": e.flavor().name(),
        "order": e.order(),
        "components": e.components().iter().map(polynomial_to_json).collect::<Vec<_>>(),
    })
}

fn series_output(fmt: Format, s: &TaylorSeries) -> String {
    let y = s.materialize();
    let text = format!("{s}{y}");
    render(fmt, text, || {
        json!({
            "order": s.order(),
            "coefficients": s.coefficients().iter().map(|c| polynomial_to_json(&c.to_polynomial())).collect::<Vec<_>>(),
            "solution": truncated_json(&y),
        })
    })
}

fn split_list(s: &str, sep: char) -> Vec<&str> {
    s.split(sep).map(str::trim).filter(|t| !t.is_empty()).collect()
}

fn ode(fmt: Format, flavor: Flavor, order: usize, cmd: &OdeCommand) -> Result<String, Failure> {
    let constant = |s: &str| -> Result<TruncatedElement, Failure> {
        let p = parse_polynomial(s, flavor)?;
        Ok(TruncatedElement::from_polynomial(&p, order)?)
    };
    match cmd {
        OdeCommand::Solve(args) => {
            let coeffs: Vec<Q> = split_list(&args.coeffs, ',')
                .into_iter()
                .map(parse_q)
                .collect::<Result<_, _>>()?;
            if coeffs.len() != args.order {
                return Err(Error::Invalid(format!(
                    "--order {} needs {} coefficients, got {}",
                    args.order,
                    args.order,
                    coeffs.len()
                ))
                .into());
            }
            let rhs = constant(&args.rhs)?;
            let given = args.init.as_deref().map(|s| split_list(s, ';')).unwrap_or_default();
            if given.len() > args.order {
                return Err(Error::Invalid(format!("at most {} initial constants", args.order)).into());
            }
            let mut init = given.into_iter().map(constant).collect::<Result<Vec<_>, _>>()?;
            init.resize(args.order, TruncatedElement::zero(flavor, order));
            let ode = LinearODE::new(coeffs, rhs, init)?;
            Ok(series_output(fmt, &solve_linear_ode(&ode, order)?))
        }
        OdeCommand::Homogeneous { roots, constants } => {
            let pairs = split_list(roots, ',')
                .into_iter()
                .map(|r| {
                    let (l, k) = r
                        .split_once(':')
                        .ok_or_else(|| Error::Invalid(format!("root '{r}' must be root:multiplicity")))?;
                    let k: usize = k
                        .trim()
                        .parse()
                        .map_err(|_| Error::Invalid(format!("bad multiplicity in '{r}'")))?;
                    Ok((parse_q(l)?, k))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let rd = RootData::from_roots(pairs)?;
            let given: Vec<TruncatedElement> = match constants {
                Some(s) => split_list(s, ';').into_iter().map(constant).collect::<Result<_, _>>()?,
                None => vec![TruncatedElement::one(flavor, order); rd.order()],
            };
            if given.len() != rd.order() {
                return Err(Error::Invalid(format!("expected {} constants", rd.order())).into());
            }
            let mut it = given.into_iter();
            let grouped: Vec<Vec<TruncatedElement>> = rd
                .roots()
                .iter()
                .map(|(_, k)| it.by_ref().take(*k).collect())
                .collect();
            let s = homogeneous_general_solution(&rd, &grouped, order)?;
            let coeffs: Vec<String> = rd.coefficients().iter().map(Q::to_string).collect();
            let out = series_output(fmt, &s);
            Ok(match fmt {
                Format::Text => format!("coefficients: {}\n{out}", coeffs.join(",")),
                Format::Json => out,
            })
        }
    }
}
