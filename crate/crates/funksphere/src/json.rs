//! JSON renderings. Objects are `serde_json::Map`s, which keep keys sorted,
//! so identical values always serialize to identical bytes.

use funksphere_core::funk::SpherePolynomial;
use funksphere_core::pizzetti::{IntegralResult, RegionSpec};
use funksphere_core::{ExactScalar, Polynomial, Precision, Rational};
use serde::Serialize;
use serde_json::{json, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

/// `{"coeff","pi_half","sqrt_arg","numeric"}`.
pub fn exact_scalar(s: &ExactScalar, precision: Precision) -> Value {
    json!({
        "coeff": s.coeff().to_string(),
        "pi_half": s.pi_half(),
        "sqrt_arg": s.sqrt_arg().to_string(),
        "numeric": s.numeric(precision).to_decimal(),
    })
}

pub fn polynomial(p: &Polynomial) -> Value {
    Value::String(p.to_string())
}

/// A sphere polynomial as its rational part and its scalar factor.
pub fn sphere_polynomial(f: &SpherePolynomial, precision: Precision) -> Value {
    json!({
        "poly": f.poly().to_string(),
        "scale": exact_scalar(f.scale(), precision),
        "text": f.to_string(),
    })
}

pub fn region(r: &RegionSpec) -> Value {
    match r {
        RegionSpec::UnitSphere => json!({"kind": "sphere", "r": "1"}),
        RegionSpec::RSphere(rad) => json!({"kind": "sphere", "r": rad.to_string()}),
        RegionSpec::Ball(rad) => json!({"kind": "ball", "r": rad.to_string()}),
        _ => {
            let (omega, p) = r.hyperplane().expect("hyperplane region");
            json!({"kind": r.name(), "omega": rationals(omega.coords()), "p": p.to_string()})
        }
    }
}

pub fn integral(res: &IntegralResult, precision: Precision) -> Value {
    json!({
        "exact": res.exact().map(|s| exact_scalar(&s, precision)),
        "closed_form": res.form().to_string(),
        "is_exact": res.is_exact(),
        "numeric": res.numeric(precision).to_decimal(),
    })
}

/// Serializes with the given indent width (0 = compact) and a trailing LF.
pub fn to_string(value: &impl Serialize, indent: usize) -> String {
    let mut out = if indent == 0 {
        serde_json::to_vec(value).expect("serializable")
    } else {
        let pad = vec![b' '; indent];
        let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
        let mut buf = Vec::new();
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
        value.serialize(&mut ser).expect("serializable");
        buf
    };
    out.push(b'\n');
    String::from_utf8(out).expect("utf-8")
}
