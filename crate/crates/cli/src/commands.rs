//! Subcommands and their reports.

use clap::{Args, Parser, Subcommand, ValueEnum};
use polarweb_core::{
    certify_noninvariance, char_numbers_from_web_class, conormal_linear, degree_of_variety,
    hypersurface_degree_bound, invariance_inequalities, polar_degree_variety, polar_degree_web,
    smooth_hypersurface_char_numbers, twist_degree, variety_class, web_class, AmbientDim, BigInt,
    CalcError, CharNumbers, ImplicitWeb, InequalityEntry, LabError, Verdict, WebCharNumbers,
};
use serde_json::{Map, Value};

use crate::expr::{parse_poly, parse_ring, ParseError};
use crate::report::{int, ints, Record};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// Seed used by `web` in text mode when none is given.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Intersection calculus on P(T*P^n) and a lab for plane webs.
///
/// Ring expressions use `h` and `c`, where `c` stands for ȟ, the pullback of the
/// hyperplane class of the dual space. Multiplication needs an explicit `*`.
#[derive(Debug, Parser)]
#[command(name = "polarweb", version)]
pub struct Cli {
    /// Dimension of the projective space P^n.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    /// Seed for random lines and points (`web` only; required with --format json).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct VarietyArgs {
    /// Dimension q of the variety.
    #[arg(long)]
    pub q: Option<u32>,
    /// Characteristic numbers a_1,...,a_n.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Use a smooth hypersurface of this degree instead of --q/--a.
    #[arg(long, conflicts_with_all = ["q", "a"])]
    pub hypersurface: Option<String>,
}

#[derive(Debug, Args)]
pub struct WebArgs {
    /// Dimension p of the distribution (defaults to the length of --d minus one).
    #[arg(long)]
    pub p: Option<u32>,
    /// Characteristic numbers d_0,...,d_p.
    #[arg(long)]
    pub d: Option<String>,
    /// Number of planes through a generic point; must equal d_0.
    #[arg(long)]
    pub k: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a class to canonical form and integrate it.
    Ring {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Conormal class of a linear space P^j, of a variety, or of a smooth hypersurface.
    Conormal {
        /// Dimension of the linear space.
        #[arg(long, conflicts_with_all = ["q", "a", "hypersurface"])]
        j: Option<u32>,
        #[command(flatten)]
        variety: VarietyArgs,
    },
    /// Class of a distribution from its characteristic numbers, or the reverse.
    CharWeb {
        #[command(flatten)]
        web: WebArgs,
        /// Read d_0,...,d_p off this class (needs --p).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "d")]
        class: Option<String>,
    },
    /// Polar degrees of a variety and/or a distribution.
    Polar {
        #[command(flatten)]
        variety: VarietyArgs,
        #[command(flatten)]
        web: WebArgs,
    },
    /// Invariance inequalities of a variety against a distribution.
    Check {
        #[command(flatten)]
        variety: VarietyArgs,
        #[command(flatten)]
        web: WebArgs,
        /// Also report the j > 0 entries, which assume a containment of polar varieties.
        #[arg(long)]
        conditional: bool,
    },
    /// Degree bounds for smooth invariant hypersurfaces.
    Bound {
        #[command(flatten)]
        web: WebArgs,
    },
    /// Measure an implicit plane web F(x, y, p) = 0 with p = dy/dx.
    Web {
        /// The polynomial F in x, y, p.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// A curve C(x, y) = 0 to test for invariance.
        #[arg(long, allow_hyphen_values = true)]
        curve: Option<String>,
        /// The curve's projective closure is singular: skip the degree bound.
        #[arg(long, requires = "curve")]
        singular: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse {field}: {error}")]
    Parse {
        field: &'static str,
        source_text: String,
        error: ParseError,
    },
    #[error(transparent)]
    Calc(#[from] CalcError),
    #[error(transparent)]
    Lab(#[from] LabError),
}

impl CliError {
    /// Message for stderr; parse errors point at the offending column.
    pub fn describe(&self) -> String {
        match self {
            CliError::Parse {
                source_text, error, ..
            } => format!("error: {self}\n{}", error.snippet(source_text)),
            other => format!("error: {other}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub record: Record,
    pub exit: i32,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.record.render_json(),
            Format::Text => self.record.render_text(),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_int(field: &str, s: &str) -> Result<BigInt, CliError> {
    s.trim()
        .parse()
        .map_err(|_| usage(format!("--{field}: '{}' is not an integer", s.trim())))
}

fn parse_list(field: &str, s: &str) -> Result<Vec<BigInt>, CliError> {
    s.split(',').map(|item| parse_int(field, item)).collect()
}

fn dimension(n: Option<u32>) -> Result<AmbientDim, CliError> {
    let n = n.ok_or_else(|| usage("--n is required"))?;
    Ok(AmbientDim::new(n)?)
}

fn variety(
    n: AmbientDim,
    args: &VarietyArgs,
) -> Result<(CharNumbers, Map<String, Value>), CliError> {
    let mut inputs = Map::new();
    if let Some(d) = &args.hypersurface {
        let d = parse_int("hypersurface", d)?;
        inputs.insert("hypersurface".into(), int(&d));
        return Ok((smooth_hypersurface_char_numbers(d, n)?, inputs));
    }
    let (Some(q), Some(a)) = (args.q, &args.a) else {
        return Err(usage("a variety needs --q and --a, or --hypersurface"));
    };
    let a = parse_list("a", a)?;
    if a.len() != n.get() as usize {
        return Err(usage(format!(
            "--a needs {} values a_1,...,a_n, got {}",
            n.get(),
            a.len()
        )));
    }
    inputs.insert("q".into(), q.into());
    inputs.insert("a".into(), ints(&a));
    Ok((CharNumbers::new(n, q, a)?, inputs))
}

fn has_variety(args: &VarietyArgs) -> bool {
    args.hypersurface.is_some() || args.q.is_some() || args.a.is_some()
}

fn distribution_vector(args: &WebArgs) -> Result<(u32, Vec<BigInt>), CliError> {
    let d = args
        .d
        .as_ref()
        .ok_or_else(|| usage("a distribution needs --d d_0,...,d_p"))?;
    let d = parse_list("d", d)?;
    let p = d.len() as u32 - 1;
    if let Some(given) = args.p {
        if given != p {
            return Err(usage(format!(
                "--d needs p + 1 = {} values d_0,...,d_p, got {}",
                given + 1,
                d.len()
            )));
        }
    }
    if let Some(k) = &args.k {
        let k = parse_int("k", k)?;
        if k != d[0] {
            return Err(CalcError::KMismatch {
                expected: k,
                found: d[0].clone(),
            }
            .into());
        }
    }
    Ok((p, d))
}

fn distribution(n: AmbientDim, args: &WebArgs) -> Result<WebCharNumbers, CliError> {
    let (p, d) = distribution_vector(args)?;
    Ok(WebCharNumbers::new(n, p, d)?)
}

fn web_inputs(w: &WebCharNumbers) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("p".into(), w.p().into());
    m.insert("d".into(), ints(w.values()));
    m
}

fn entry_json(e: &InequalityEntry) -> Value {
    let mut m = Map::new();
    m.insert("m".into(), e.m.into());
    m.insert("j".into(), e.j.into());
    m.insert("lhs".into(), int(&e.lhs));
    m.insert("rhs".into(), int(&e.rhs));
    m.insert("holds".into(), e.holds.into());
    m.insert("conditional".into(), e.conditional.into());
    m.insert("vacuous".into(), e.vacuous.into());
    Value::Object(m)
}

fn warnings(c: &CharNumbers) -> Value {
    Value::Array(c.warnings().into_iter().map(Value::from).collect())
}

fn parse_field<T>(
    field: &'static str,
    source: &str,
    f: impl FnOnce(&str) -> Result<T, ParseError>,
) -> Result<T, CliError> {
    f(source).map_err(|error| CliError::Parse {
        field,
        source_text: source.to_owned(),
        error,
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Ring { expr } => ring(cli, expr),
        Command::Conormal { j, variety } => conormal(cli, *j, variety),
        Command::CharWeb { web, class } => char_web(cli, web, class.as_deref()),
        Command::Polar { variety, web } => polar(cli, variety, web),
        Command::Check {
            variety,
            web,
            conditional,
        } => check(cli, variety, web, *conditional),
        Command::Bound { web } => bound(cli, web),
        Command::Web { f, curve, singular } => lab(cli, f, curve.as_deref(), !singular),
    }
}

fn ok(record: Record) -> Result<Outcome, CliError> {
    Ok(Outcome {
        record,
        exit: EXIT_OK,
    })
}

fn ring(cli: &Cli, expr: &str) -> Result<Outcome, CliError> {
    let n = dimension(cli.n)?;
    let class = parse_field("expression", expr, |s| parse_ring(s, n))?;
    let mut r = Record::new("ring");
    r.input("n", n.get()).input("expr", expr);
    r.result("canonical", class.to_string())
        .result(
            "degree",
            class.homogeneous_degree().map_or(Value::Null, Value::from),
        )
        .result("integral", int(&class.integrate()));
    ok(r)
}

fn conormal(cli: &Cli, j: Option<u32>, args: &VarietyArgs) -> Result<Outcome, CliError> {
    let n = dimension(cli.n)?;
    let mut r = Record::new("conormal");
    r.input("n", n.get());
    if let Some(j) = j {
        r.input("j", j);
        r.result("class", conormal_linear(j, n)?.to_string());
        return ok(r);
    }
    if !has_variety(args) {
        return Err(usage("conormal needs --j, --q/--a or --hypersurface"));
    }
    let (c, inputs) = variety(n, args)?;
    r.inputs.extend(inputs);
    r.result("a", ints(c.values()))
        .result("class", variety_class(&c).to_string())
        .result("degree", int(&degree_of_variety(&c)))
        .result("warnings", warnings(&c));
    ok(r)
}

fn char_web(cli: &Cli, args: &WebArgs, class: Option<&str>) -> Result<Outcome, CliError> {
    let n = dimension(cli.n)?;
    let mut r = Record::new("char-web");
    r.input("n", n.get());
    let w = match class {
        Some(source) => {
            let p = args.p.ok_or_else(|| usage("--class needs --p"))?;
            let k = args.k.as_deref().map(|k| parse_int("k", k)).transpose()?;
            let s = parse_field("class", source, |s| parse_ring(s, n))?;
            r.input("p", p).input("class", source);
            if let Some(k) = &k {
                r.input("k", int(k));
            }
            char_numbers_from_web_class(&s, p, k.as_ref())?
        }
        None => {
            let w = distribution(n, args)?;
            r.inputs.extend(web_inputs(&w));
            w
        }
    };
    r.result("d", ints(w.values()))
        .result("class", web_class(&w).to_string())
        .result("k", int(w.k()))
        .result("degree", int(w.degree()))
        .result(
            "twist_degree",
            int(&twist_degree(w.k(), w.p(), n, w.degree())?),
        );
    ok(r)
}

fn polar(cli: &Cli, v: &VarietyArgs, wargs: &WebArgs) -> Result<Outcome, CliError> {
    let n = dimension(cli.n)?;
    let want_web = wargs.d.is_some();
    if !has_variety(v) && !want_web {
        return Err(usage(
            "polar needs a variety (--q/--a or --hypersurface) or --d",
        ));
    }
    let mut r = Record::new("polar");
    r.input("n", n.get());
    if has_variety(v) {
        let (c, inputs) = variety(n, v)?;
        r.inputs.extend(inputs);
        let degrees = (0..=c.q())
            .map(|j| {
                let mut m = Map::new();
                m.insert("j".into(), j.into());
                m.insert("degree".into(), int(&polar_degree_variety(&c, j)?));
                Ok(Value::Object(m))
            })
            .collect::<Result<Vec<_>, CalcError>>()?;
        r.result("variety", degrees);
        r.result("warnings", warnings(&c));
    }
    if want_web {
        let w = distribution(n, wargs)?;
        r.inputs.extend(web_inputs(&w));
        let degrees = (1..=w.p())
            .map(|s| {
                let mut m = Map::new();
                m.insert("s".into(), s.into());
                m.insert("degree".into(), int(&polar_degree_web(&w, s)?));
                Ok(Value::Object(m))
            })
            .collect::<Result<Vec<_>, CalcError>>()?;
        r.result("web", degrees);
    }
    ok(r)
}

fn check(
    cli: &Cli,
    v: &VarietyArgs,
    wargs: &WebArgs,
    conditional: bool,
) -> Result<Outcome, CliError> {
    let n = dimension(cli.n)?;
    let (c, inputs) = variety(n, v)?;
    let w = distribution(n, wargs)?;
    let report = invariance_inequalities(&c, &w, conditional)?;
    let verdict = certify_noninvariance(&c, &w)?;
    let mut r = Record::new("check");
    r.input("n", n.get());
    r.inputs.extend(inputs);
    r.inputs.extend(web_inputs(&w));
    r.input("conditional", conditional);
    r.result(
        "entries",
        report.entries.iter().map(entry_json).collect::<Vec<_>>(),
    );
    let (witness, label, exit) = match &verdict {
        Verdict::NotInvariant { witness } => (entry_json(witness), "NOT_INVARIANT", EXIT_FAILED),
        Verdict::Inconclusive => (Value::Null, "INCONCLUSIVE", EXIT_OK),
    };
    r.result("witness", witness);
    r.result("warnings", warnings(&c));
    r.verdict = Some(label);
    Ok(Outcome { record: r, exit })
}

fn bound(cli: &Cli, args: &WebArgs) -> Result<Outcome, CliError> {
    let (p, d) = distribution_vector(args)?;
    // the bound does not depend on the ambient dimension
    let n = match cli.n {
        Some(n) => AmbientDim::new(n)?,
        None => AmbientDim::new(p + 1)?,
    };
    let w = WebCharNumbers::new(n, p, d)?;
    let bounds = hypersurface_degree_bound(&w);
    let mut r = Record::new("bound");
    r.input("k", int(w.k()));
    r.inputs.extend(web_inputs(&w));
    let per_m = bounds
        .per_m
        .iter()
        .map(|b| {
            let mut m = Map::new();
            m.insert("m".into(), b.m.into());
            m.insert("polar_degree".into(), int(&b.polar_degree));
            m.insert("bound".into(), int(&b.bound));
            Value::Object(m)
        })
        .collect::<Vec<_>>();
    r.result("per_m", per_m)
        .result("overall", int(&bounds.overall));
    ok(r)
}

fn lab(cli: &Cli, f: &str, curve: Option<&str>, smooth: bool) -> Result<Outcome, CliError> {
    if let Some(n) = cli.n {
        if n != 2 {
            return Err(usage("web works on the plane; --n must be 2"));
        }
    }
    let seed = match (cli.seed, cli.format) {
        (Some(s), _) => s,
        (None, Format::Text) => DEFAULT_SEED,
        (None, Format::Json) => {
            return Err(usage("web needs an explicit --seed with --format json"))
        }
    };
    let web = ImplicitWeb::new(parse_field("--f", f, parse_poly)?)?;
    let curve_poly = curve
        .map(|c| parse_field("--curve", c, parse_poly))
        .transpose()?;
    let report = web.end_to_end_check(curve_poly.as_ref(), smooth, seed)?;

    let mut r = Record::new("web");
    r.input("f", web.equation().to_string());
    if let Some(c) = &curve_poly {
        r.input("curve", c.to_string()).input("smooth", smooth);
    }
    r.result("k", report.k)
        .result("degree", report.degree)
        .result("polar_degree", report.polar_degree)
        .result("polar_expected", report.polar_expected)
        .result("polar_ok", report.polar_ok())
        .result("discriminant", report.discriminant.to_string());
    let mut consistent = report.polar_ok();
    if let Some(cc) = &report.curve {
        let mut m = Map::new();
        m.insert("degree".into(), cc.degree.into());
        m.insert("invariant".into(), cc.invariant.into());
        let bound_check = match &cc.bound_check {
            Some(k) => {
                consistent &= k.holds;
                let mut b = Map::new();
                b.insert("curve_degree".into(), k.curve_degree.into());
                b.insert("bound".into(), k.bound.into());
                b.insert("holds".into(), k.holds.into());
                Value::Object(b)
            }
            None => Value::Null,
        };
        m.insert("bound_check".into(), bound_check);
        r.result("curve", Value::Object(m));
    }
    r.verdict = Some(if consistent {
        "CONSISTENT"
    } else {
        "INCONSISTENT"
    });
    r.seed = Some(seed);
    Ok(Outcome {
        record: r,
        exit: if consistent { EXIT_OK } else { EXIT_FAILED },
    })
}

/// Parses arguments, runs, and renders; returns `(stdout, stderr, exit status)`.
pub fn execute<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    (text, String::new(), EXIT_OK)
                }
                _ => (String::new(), text, EXIT_USAGE),
            };
        }
    };
    match run(&cli) {
        Ok(outcome) => (outcome.render(cli.format), String::new(), outcome.exit),
        Err(e) => (String::new(), format!("{}\n", e.describe()), EXIT_USAGE),
    }
}
