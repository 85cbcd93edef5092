use std::process::Command;

use funksphere::parse_polynomial;
use funksphere_core::{Monomial, Polynomial, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::Value;

fn funksphere(args: &[&str], precision: Option<&str>) -> (Value, i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_funksphere"));
    cmd.args(args);
    match precision {
        Some(p) => cmd.env("FUNKSPHERE_PRECISION", p),
        None => cmd.env_remove("FUNKSPHERE_PRECISION"),
    };
    let out = cmd.output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (v, out.status.code().unwrap(), text)
}

#[test]
fn integrate_sphere_example() {
    let (v, code, text) = funksphere(&["integrate", "--region", "sphere", "--dim", "3", "--poly", "x1^2"], None);
    assert_eq!(code, 0);
    assert_eq!(v["exact"]["coeff"], "4/3");
    assert_eq!(v["exact"]["pi_half"], 2);
    assert_eq!(v["exact"]["sqrt_arg"], "1");
    assert!(v["numeric"].as_str().unwrap().starts_with("4.18879"));
    assert!(text.ends_with("}\n") && !text.contains('\r'));
}

#[test]
fn precision_from_environment() {
    let (v, _, _) = funksphere(&["integrate", "--region", "sphere", "--dim", "3", "--poly", "1"], Some("50"));
    assert_eq!(v["precision"], 50);
    // 4π = 12.566…5975004…, so the 50-digit rendering ends in trimmed zeros
    assert_eq!(v["numeric"], "12.5663706143591729538505735331180115367886775975");
    // the flag wins over the environment
    let (v, _, _) =
        funksphere(&["--precision", "20", "integrate", "--region", "sphere", "--dim", "3", "--poly", "1"], Some("50"));
    assert_eq!(v["numeric"], "12.566370614359172954");
}

#[test]
fn subsphere_with_offset() {
    let (v, code, _) = funksphere(
        &["integrate", "--region", "subsphere", "--dim", "3", "--poly", "1", "--omega", "0,0,1", "--p", "1/2"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(v["exact"]["coeff"], "1");
    assert_eq!(v["exact"]["sqrt_arg"], "3");
    assert_eq!(v["inputs"]["region"]["kind"], "subsphere");
    assert_eq!(v["inputs"]["region"]["p"], "1/2");
}

#[test]
fn dual_commands() {
    let (v, code, _) = funksphere(&["dual", "--dim", "3", "--poly", "1"], None);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["text"], "1");
    let (v, code, _) = funksphere(&["dual-at", "--dim", "3", "--poly", "1", "--p", "1/3"], None);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["text"], "1");
    let (_, code, _) = funksphere(&["dual-at", "--dim", "3", "--poly", "1", "--p", "1"], None);
    assert_eq!(code, 1);
}

#[test]
fn invert_even_m_reports_constants() {
    let (v, code, _) = funksphere(&["invert", "--dim", "4", "--poly", "x1*x2", "--from-f", "--method", "even-m"], None);
    assert_eq!(code, 0);
    assert_eq!(v["constant"]["coeff"], "-4");
    assert_eq!(v["components"][0]["c_km"], -9);
    assert_eq!(v["components"][0]["dual_funk_factor"]["coeff"], "4/9");
    let (_, code, _) = funksphere(&["invert", "--dim", "3", "--poly", "1", "--method", "even-m"], None);
    assert_eq!(code, 1);
}

#[test]
fn exit_codes() {
    let (v, code, _) = funksphere(&["parse", "--dim", "3", "--poly", "2x1"], None);
    assert_eq!(code, 2);
    assert!(v["error"]["message"].as_str().unwrap().contains("implicit multiplication"));
    let (_, code, _) = funksphere(&["verify", "--suite", "nope"], None);
    assert_eq!(code, 2);
    let (_, code, _) = funksphere(&["frobnicate"], None);
    assert_eq!(code, 2);
    let (_, code, _) = funksphere(&["funk", "--dim", "3", "--poly", "x1", "--precision", "oops"], None);
    assert_eq!(code, 2);
}

#[test]
fn verify_single_suite() {
    let (v, code, _) = funksphere(&["verify", "--suite", "ikj", "--json-indent", "0"], None);
    assert_eq!(code, 0);
    assert_eq!(v["all_pass"], true);
    let row = &v["reports"][0]["rows"][0];
    for key in ["formula", "inputs", "exact", "oracle", "abs_err", "rel_err", "pass"] {
        assert!(row.get(key).is_some(), "{key}");
    }
}

fn poly() -> impl Strategy<Value = Polynomial> {
    (2usize..=4).prop_flat_map(|m| {
        proptest::collection::vec((proptest::collection::vec(0u16..=3, m), -20i64..=20, 1i64..=6), 0..6).prop_map(
            move |terms| {
                Polynomial::from_terms(
                    m,
                    terms
                        .into_iter()
                        .map(|(e, n, d)| (Monomial::new(&e), Rational::new(BigInt::from(n), BigInt::from(d)))),
                )
            },
        )
    })
}

proptest! {
    #[test]
    fn parse_inverts_print(p in poly()) {
        let text = p.to_string();
        let back = parse_polynomial(&text, p.dim()).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn printing_canonicalizes(p in poly(), q in poly()) {
        prop_assume!(p.dim() == q.dim());
        let text = format!("({}) * ({}) - ({})", p, q, q);
        let once = parse_polynomial(&text, p.dim()).unwrap().to_string();
        let twice = parse_polynomial(&once, p.dim()).unwrap().to_string();
        prop_assert_eq!(once, twice);
    }
}
