//! Command-line driver. Every command prints one JSON document; exit code 0
//! on success, 1 on a domain error (or a failed verification), 2 on a parse
//! or usage error.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use funksphere_core::funk::{
    dual_at_distance, dual_transform, funk_eigenvalue, funk_transform, invert_even_m, invert_general, SpherePolynomial,
};
use funksphere_core::harmonics::spherical_components;
use funksphere_core::oracle::{spectral_reference_inverter, Oracle};
use funksphere_core::pizzetti::{integrate, RegionSpec};
use funksphere_core::poly::Parity;
use funksphere_core::{Error, ExactScalar, Float, Polynomial, Precision, Rational, RationalPoint};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use crate::json;
use crate::parser::{parse_polynomial, parse_rational, parse_rational_list, ParseError, ParseErrorKind};
use crate::verify::{self, VerifyConfig};

/// Environment variable holding the default number of significant digits.
pub const PRECISION_ENV: &str = "FUNKSPHERE_PRECISION";

#[derive(Parser, Debug)]
#[command(name = "funksphere", version, about = "Exact integration on spheres and Funk transform inversion")]
pub struct Cli {
    /// Significant decimal digits for numeric renderings.
    #[arg(long, global = true, env = PRECISION_ENV)]
    pub precision: Option<u32>,
    /// Indentation width of the JSON output; 0 prints compactly.
    #[arg(long, global = true, default_value_t = 2)]
    pub json_indent: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integrate a polynomial over a region.
    Integrate(IntegrateArgs),
    /// Funk transform of a polynomial on S^(m-1).
    Funk(PolyArgs),
    /// Dual transform (average over great subspheres through a point).
    Dual(PolyArgs),
    /// Dual transform at distance: average over subspheres at offset p.
    DualAt(DualAtArgs),
    /// Recover f from its Funk transform.
    Invert(InvertArgs),
    /// Run verification suites against independent oracles.
    Verify(VerifyArgs),
    /// Parse and print a polynomial in canonical form.
    Parse(PolyArgs),
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[arg(long)]
    pub dim: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegionKind {
    Sphere,
    Ball,
    Subsphere,
    Subball,
    CapUpper,
    CapLower,
}

#[derive(Args, Debug)]
pub struct IntegrateArgs {
    #[arg(long, value_enum)]
    pub region: RegionKind,
    #[command(flatten)]
    pub poly: PolyArgs,
    /// Radius for `sphere` and `ball`.
    #[arg(long, default_value = "1")]
    pub radius: String,
    /// Hyperplane normal, comma-separated rationals; must be exactly unit.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Hyperplane offset, a rational in (-1, 1).
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Accept a decimal or non-unit normal and integrate numerically only.
    #[arg(long)]
    pub approx: bool,
}

#[derive(Args, Debug)]
pub struct DualAtArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    EvenM,
    General,
    Spectral,
}

#[derive(Args, Debug)]
pub struct InvertArgs {
    /// Rational part of the transformed function.
    #[command(flatten)]
    pub poly: PolyArgs,
    /// The transformed function is `poly * pi^(pi_half/2)`.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub pi_half: i64,
    /// Treat `--poly` as f and invert its transform (round trip).
    #[arg(long)]
    pub from_f: bool,
    #[arg(long, value_enum, default_value_t = Method::General)]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 5)]
    pub dim_max: usize,
    #[arg(long, default_value_t = 6)]
    pub deg_max: u32,
    #[arg(long, default_value_t = VerifyConfig::default().seed)]
    pub seed: u64,
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

enum Failure {
    Parse(ParseError, &'static str),
    Usage(String),
    Domain(Error),
    Verify(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn parse_err(field: &'static str) -> impl Fn(ParseError) -> Failure {
    move |e| Failure::Parse(e, field)
}

/// Parses the arguments and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Outcome {
    let precision = Precision::new(cli.precision.unwrap_or(Precision::DEFAULT.digits()));
    let result = match &cli.command {
        Command::Integrate(a) => cmd_integrate(a, precision),
        Command::Funk(a) => cmd_funk(a, precision),
        Command::Dual(a) => cmd_dual(a, precision),
        Command::DualAt(a) => cmd_dual_at(a, precision),
        Command::Invert(a) => cmd_invert(a, precision),
        Command::Verify(a) => cmd_verify(a, precision),
        Command::Parse(a) => cmd_parse(a),
    };
    let (doc, code, stderr) = match result {
        Ok(mut doc) => {
            doc.insert("precision".into(), json!(precision.digits()));
            (Value::Object(doc), 0, String::new())
        }
        Err(Failure::Verify(doc)) => (doc, 1, "verification failed\n".to_string()),
        Err(Failure::Domain(e)) => {
            (json!({"error": {"kind": "domain", "message": e.to_string()}}), 1, format!("error: {e}\n"))
        }
        Err(Failure::Usage(msg)) => (json!({"error": {"kind": "usage", "message": msg}}), 2, format!("error: {msg}\n")),
        Err(Failure::Parse(e, field)) => (
            json!({"error": {"kind": "parse", "field": field, "offset": e.offset, "message": e.to_string()}}),
            2,
            format!("error in --{field}: {e}\n"),
        ),
    };
    Outcome { stdout: json::to_string(&doc, cli.json_indent), stderr, code }
}

fn poly_input(a: &PolyArgs) -> Result<Polynomial, Failure> {
    if a.dim < 2 {
        return Err(Failure::Usage(format!("--dim must be at least 2, got {}", a.dim)));
    }
    parse_polynomial(&a.poly, a.dim).map_err(parse_err("poly"))
}

fn header(command: &str, inputs: Value) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("inputs".into(), inputs);
    m
}

fn cmd_parse(a: &PolyArgs) -> Result<Map<String, Value>, Failure> {
    let p = poly_input(a)?;
    let terms: Vec<Value> =
        p.terms().rev().map(|(mono, c)| json!({"exponents": mono.exponents(), "coeff": c.to_string()})).collect();
    let mut doc = header("parse", json!({"dim": a.dim, "poly": a.poly}));
    doc.insert("canonical".into(), json::polynomial(&p));
    doc.insert("degree".into(), json!(p.degree()));
    doc.insert("terms".into(), Value::Array(terms));
    Ok(doc)
}

/// Decimal (`0.6`, `-1.25`) or rational (`3/5`) number.
fn parse_number(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let Some((whole, frac)) = t.split_once('.') else { return parse_rational(t) };
    let neg = whole.starts_with('-');
    let digits = whole.trim_start_matches(['-', '+']);
    let ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !ok(digits) || !ok(frac) || (digits.is_empty() && frac.is_empty()) {
        return Err(ParseError {
            offset: 0,
            kind: ParseErrorKind::Syntax(format!("expected a decimal or rational, found {text:?}")),
        });
    }
    let n: BigInt = format!("{digits}{frac}").trim_start_matches('0').parse().unwrap_or_default();
    let r = Rational::new(n, BigInt::from(10).pow(frac.len() as u32));
    Ok(if neg { -r } else { r })
}

fn cmd_integrate(a: &IntegrateArgs, precision: Precision) -> Result<Map<String, Value>, Failure> {
    let p = poly_input(&a.poly)?;
    let m = a.poly.dim;
    let hyper = !matches!(a.region, RegionKind::Sphere | RegionKind::Ball);
    let mut inputs = json!({"dim": m, "poly": a.poly.poly, "approx": a.approx});
    if !hyper {
        let radius = parse_rational(&a.radius).map_err(parse_err("radius"))?;
        let region = match a.region {
            RegionKind::Sphere if radius.is_one() => RegionSpec::UnitSphere,
            RegionKind::Sphere => RegionSpec::RSphere(radius),
            _ => RegionSpec::Ball(radius),
        };
        inputs["region"] = json::region(&region);
        return integrate_exact(&p, &region, inputs, precision, a.approx);
    }
    let omega_text = a.omega.as_deref().ok_or_else(|| Failure::Usage("--omega is required for this region".into()))?;
    let p_text = a.p.as_deref().ok_or_else(|| Failure::Usage("--p is required for this region".into()))?;
    let off = parse_rational(p_text).map_err(parse_err("p"))?;
    if a.approx {
        let coords: Vec<Rational> =
            omega_text.split(',').map(parse_number).collect::<Result<_, _>>().map_err(parse_err("omega"))?;
        if coords.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: coords.len() }.into());
        }
        let mut oracle = Oracle::new(precision);
        let bits = oracle.precision().bits();
        let w: Vec<Float> = coords.iter().map(|c| Float::from_rational(c, bits)).collect();
        if w.iter().all(Float::is_zero) {
            return Err(Error::NotUnit.into());
        }
        if off.abs() >= Rational::one() {
            return Err(Error::OffsetOutOfRange(off.to_string()).into());
        }
        let rot = oracle.rotate(&p, &w);
        let value = match a.region {
            RegionKind::Subsphere => oracle.subsphere(&rot, &off),
            RegionKind::Subball => oracle.subball(&rot, &off),
            RegionKind::CapUpper => oracle.cap_upper(&rot, &off),
            _ => oracle.cap_lower(&rot, &off),
        };
        inputs["region"] = json!({
            "kind": region_name(a.region),
            "omega": omega_text.split(',').map(str::trim).collect::<Vec<_>>(),
            "p": off.to_string(),
        });
        let mut doc = header("integrate", inputs);
        doc.insert("exact".into(), Value::Null);
        doc.insert("is_exact".into(), json!(false));
        doc.insert("method".into(), json!("oracle"));
        doc.insert("numeric".into(), json!(value.to_decimal(precision.digits())));
        return Ok(doc);
    }
    let omega = RationalPoint::new(parse_rational_list(omega_text).map_err(parse_err("omega"))?);
    let region = match a.region {
        RegionKind::Subsphere => RegionSpec::Subsphere { omega, p: off },
        RegionKind::Subball => RegionSpec::Subball { omega, p: off },
        RegionKind::CapUpper => RegionSpec::CapUpper { omega, p: off },
        _ => RegionSpec::CapLower { omega, p: off },
    };
    inputs["region"] = json::region(&region);
    integrate_exact(&p, &region, inputs, precision, false)
}

fn region_name(k: RegionKind) -> &'static str {
    match k {
        RegionKind::Sphere => "sphere",
        RegionKind::Ball => "ball",
        RegionKind::Subsphere => "subsphere",
        RegionKind::Subball => "subball",
        RegionKind::CapUpper => "cap-upper",
        RegionKind::CapLower => "cap-lower",
    }
}

fn integrate_exact(
    p: &Polynomial,
    region: &RegionSpec,
    inputs: Value,
    precision: Precision,
    approx: bool,
) -> Result<Map<String, Value>, Failure> {
    let mut doc = header("integrate", inputs);
    if approx {
        let v = Oracle::new(precision).region_integral(p, region)?;
        doc.insert("exact".into(), Value::Null);
        doc.insert("is_exact".into(), json!(false));
        doc.insert("method".into(), json!("oracle"));
        doc.insert("numeric".into(), json!(v.value().to_decimal(precision.digits())));
        return Ok(doc);
    }
    let res = integrate(p, region)?;
    let Value::Object(body) = json::integral(&res, precision) else { unreachable!() };
    doc.extend(body);
    doc.insert("method".into(), json!("pizzetti"));
    Ok(doc)
}

fn eigen_table(f: &Polynomial, m: usize, precision: Precision) -> Result<Value, Failure> {
    let mut rows = Vec::new();
    for deg in spherical_components(f).keys().filter(|d| *d % 2 == 0) {
        let e = funk_eigenvalue(m, deg / 2)?;
        rows.push(json!({"degree": deg, "eigenvalue": json::exact_scalar(&e, precision)}));
    }
    Ok(Value::Array(rows))
}

fn cmd_funk(a: &PolyArgs, precision: Precision) -> Result<Map<String, Value>, Failure> {
    let p = poly_input(a)?;
    let m = a.dim;
    let f = SpherePolynomial::rational(&p);
    let out = funk_transform(&f, m)?;
    let mut doc = header("funk", json!({"dim": m, "poly": a.poly}));
    doc.insert("output".into(), json::sphere_polynomial(&out, precision));
    doc.insert("eigenvalues".into(), eigen_table(f.poly(), m, precision)?);
    let note = match f.parity() {
        Parity::Odd => Some("odd input: kernel"),
        Parity::Mixed => Some("odd part discarded: kernel"),
        Parity::Even => None,
    };
    doc.insert("note".into(), json!(note));
    Ok(doc)
}

fn cmd_dual(a: &PolyArgs, precision: Precision) -> Result<Map<String, Value>, Failure> {
    let p = poly_input(a)?;
    let out = dual_transform(&SpherePolynomial::rational(&p), a.dim)?;
    let mut doc = header("dual", json!({"dim": a.dim, "poly": a.poly}));
    doc.insert("output".into(), json::sphere_polynomial(&out, precision));
    Ok(doc)
}

fn cmd_dual_at(a: &DualAtArgs, precision: Precision) -> Result<Map<String, Value>, Failure> {
    let p = poly_input(&a.poly)?;
    let off = parse_rational(&a.p).map_err(parse_err("p"))?;
    let out = dual_at_distance(&SpherePolynomial::rational(&p), &off, a.poly.dim)?;
    let mut doc = header("dual-at", json!({"dim": a.poly.dim, "poly": a.poly.poly, "p": off.to_string()}));
    doc.insert("output".into(), json::sphere_polynomial(&out, precision));
    Ok(doc)
}

fn cmd_invert(a: &InvertArgs, precision: Precision) -> Result<Map<String, Value>, Failure> {
    let p = poly_input(&a.poly)?;
    let m = a.poly.dim;
    let fhat = if a.from_f {
        funk_transform(&SpherePolynomial::rational(&p), m)?
    } else {
        SpherePolynomial::new(&p, &ExactScalar::pi_pow_half(a.pi_half))
    };
    let mut doc = header(
        "invert",
        json!({"dim": m, "poly": a.poly.poly, "pi_half": a.pi_half, "from_f": a.from_f, "method": format!("{:?}", a.method)}),
    );
    doc.insert("fhat".into(), json::sphere_polynomial(&fhat, precision));
    match a.method {
        Method::EvenM => {
            if m % 2 == 1 {
                return Err(Error::OddDimension(m).into());
            }
            let inv = invert_even_m(&fhat, m)?;
            let comps: Vec<Value> = inv
                .components
                .iter()
                .map(|c| {
                    json!({
                        "degree": c.degree,
                        "lb_eigenvalue": c.lb_eigenvalue,
                        "c_km": c.c_km,
                        "c_km_gamma": json::exact_scalar(&c.c_km_gamma, precision),
                        "dual_funk_factor": json::exact_scalar(&c.dual_funk_factor, precision),
                    })
                })
                .collect();
            doc.insert("p_factors".into(), json!(inv.roots.iter().map(|c| format!("z - ({c})")).collect::<Vec<_>>()));
            doc.insert("constant".into(), json::exact_scalar(&inv.constant.value, precision));
            doc.insert("dual".into(), json::sphere_polynomial(&inv.dual, precision));
            doc.insert("components".into(), Value::Array(comps));
            doc.insert("f".into(), json::sphere_polynomial(&inv.f, precision));
        }
        Method::General => {
            let inv = invert_general(&fhat, m)?;
            let comps: Vec<Value> = inv
                .components
                .iter()
                .map(|c| {
                    json!({
                        "degree": c.degree,
                        "h_mk": json::exact_scalar(&c.h_mk, precision),
                        "factor": json::exact_scalar(&c.factor, precision),
                    })
                })
                .collect();
            doc.insert("constant".into(), json::exact_scalar(&inv.constant.value, precision));
            doc.insert("big_f".into(), json::sphere_polynomial(&inv.big_f, precision));
            doc.insert("components".into(), Value::Array(comps));
            doc.insert("f".into(), json::sphere_polynomial(&inv.f, precision));
        }
        Method::Spectral => {
            let f = spectral_reference_inverter(&fhat, m)?;
            doc.insert("f".into(), json::sphere_polynomial(&f, precision));
        }
    }
    doc.insert("exact".into(), json!(true));
    Ok(doc)
}

fn cmd_verify(a: &VerifyArgs, precision: Precision) -> Result<Map<String, Value>, Failure> {
    let cfg = VerifyConfig { dim_max: a.dim_max, deg_max: a.deg_max, precision, seed: a.seed };
    let reports = if a.suite == "all" {
        verify::run_all(&cfg)
    } else {
        match verify::run_suite(&a.suite, &cfg) {
            Some(r) => vec![r],
            None => {
                return Err(Failure::Usage(format!(
                    "unknown suite {:?}; expected one of: all, {}",
                    a.suite,
                    verify::SUITES.join(", ")
                )))
            }
        }
    };
    let rows: usize = reports.iter().map(|r| r.rows.len()).sum();
    let all_pass = reports.iter().all(|r| r.all_pass);
    let mut doc =
        header("verify", json!({"suite": a.suite, "dim_max": a.dim_max, "deg_max": a.deg_max, "seed": a.seed}));
    doc.insert("row_count".into(), json!(rows));
    doc.insert("all_pass".into(), json!(all_pass));
    doc.insert("reports".into(), serde_json::to_value(&reports).expect("serializable"));
    if all_pass {
        Ok(doc)
    } else {
        doc.insert("precision".into(), json!(precision.digits()));
        Err(Failure::Verify(Value::Object(doc)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Value, u8) {
        let mut full = vec!["funksphere", "--json-indent", "0"];
        full.extend_from_slice(args);
        let out = run_from(full);
        let v = if out.stdout.is_empty() { Value::Null } else { serde_json::from_str(&out.stdout).unwrap() };
        (v, out.code)
    }

    #[test]
    fn integrate_sphere() {
        let (v, code) = run_args(&["integrate", "--region", "sphere", "--dim", "3", "--poly", "x1^2"]);
        assert_eq!(code, 0);
        assert_eq!(v["exact"]["coeff"], "4/3");
        assert_eq!(v["exact"]["pi_half"], 2);
        assert_eq!(v["exact"]["sqrt_arg"], "1");
        assert!(v["numeric"].as_str().unwrap().starts_with("4.18879"));
    }

    #[test]
    fn integrate_cap_and_approx() {
        let (v, code) = run_args(&[
            "integrate",
            "--region",
            "cap-upper",
            "--dim",
            "3",
            "--poly",
            "x3",
            "--omega",
            "0,0,1",
            "--p",
            "0",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["exact"]["coeff"], "1");
        let (w, code) = run_args(&[
            "integrate",
            "--region",
            "cap-upper",
            "--dim",
            "3",
            "--poly",
            "x3",
            "--omega",
            "0,0,2.5",
            "--p",
            "0",
            "--approx",
        ]);
        assert_eq!(code, 0);
        assert!(w["numeric"].as_str().unwrap().starts_with("3.14159265358979"));
    }

    #[test]
    fn non_unit_omega_is_domain_error() {
        let (v, code) = run_args(&[
            "integrate",
            "--region",
            "subsphere",
            "--dim",
            "3",
            "--poly",
            "1",
            "--omega",
            "1,1,0",
            "--p",
            "0",
        ]);
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], "domain");
    }

    #[test]
    fn funk_odd_input() {
        let (v, code) = run_args(&["funk", "--dim", "3", "--poly", "x1*x2*x3"]);
        assert_eq!(code, 0);
        assert_eq!(v["output"]["poly"], "0");
        assert_eq!(v["note"], "odd input: kernel");
    }

    #[test]
    fn parse_errors_exit_2() {
        let (v, code) = run_args(&["parse", "--dim", "3", "--poly", "x0+1"]);
        assert_eq!(code, 2);
        assert_eq!(v["error"]["offset"], 0);
        let (_, code) = run_args(&["integrate", "--dim", "3"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn invert_methods_agree() {
        for method in ["even-m", "general", "spectral"] {
            let (v, code) = run_args(&["invert", "--dim", "4", "--poly", "x1*x2", "--from-f", "--method", method]);
            assert_eq!(code, 0, "{method}");
            assert_eq!(v["f"]["text"], "x1*x2");
        }
        let (v, code) = run_args(&["invert", "--dim", "3", "--poly", "2", "--pi-half", "2"]);
        assert_eq!(code, 0);
        assert_eq!(v["f"]["text"], "1");
    }

    #[test]
    fn decimal_numbers() {
        assert_eq!(parse_number("0.6").unwrap(), Rational::new(BigInt::from(3), BigInt::from(5)));
        assert_eq!(parse_number("-1.25").unwrap(), Rational::new(BigInt::from(-5), BigInt::from(4)));
        assert_eq!(parse_number("2/3").unwrap(), Rational::new(BigInt::from(2), BigInt::from(3)));
        assert!(parse_number("1.x").is_err());
    }
}
