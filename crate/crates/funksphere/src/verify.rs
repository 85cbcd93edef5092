//! Verification suites: every exact formula checked against an independent
//! computation (brute-force oracle, hand values, or a second closed form).

use std::cmp::Ordering;

use funksphere_core::funk::{
    funk_transform, ikj_term, ikj_term_by_integration, ikj_term_pochhammer, ikj_term_sum, invert_even_m,
    invert_general, p_polynomial, InversionConstant, SpherePolynomial,
};
use funksphere_core::harmonics::sh_basis;
use funksphere_core::oracle::{funk_hecke_eigenvalue, spectral_reference_inverter, Oracle, RotatedIntegrand};
use funksphere_core::pizzetti::{modified_sphere_integral, sphere_integral, CapSide, IntegralResult, OperatorChain};
use funksphere_core::scalar::{factorial, gamma_half};
use funksphere_core::{ExactScalar, Float, Monomial, Polynomial, Precision, Rational, RationalPoint};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::json;

/// Relative tolerance for numeric comparisons against the oracle.
pub const REL_TOL: f64 = 1e-10;
/// Absolute floor used when the exact value is zero.
pub const ZERO_TOL: f64 = 1e-25;

pub const SUITES: &[&str] = &[
    "funk-eigen",
    "even-inversion",
    "general-inversion",
    "oracle",
    "complementarity",
    "modified-sphere",
    "ikj",
    "kernel",
    "three-way",
];

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub dim_max: usize,
    pub deg_max: u32,
    pub precision: Precision,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { dim_max: 5, deg_max: 6, precision: Precision::DEFAULT, seed: 20240607 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyRow {
    pub formula: String,
    pub inputs: Value,
    pub exact: String,
    pub oracle: String,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub pass: bool,
}

impl VerifyRow {
    fn exact_match(formula: &str, inputs: Value, exact: String, oracle: String, pass: bool) -> VerifyRow {
        VerifyRow {
            formula: formula.to_string(),
            inputs,
            exact,
            oracle,
            abs_err: pass.then_some(0.0),
            rel_err: pass.then_some(0.0),
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub rows: Vec<VerifyRow>,
    pub all_pass: bool,
}

impl VerifyReport {
    fn new(suite: &str, rows: Vec<VerifyRow>) -> VerifyReport {
        let all_pass = !rows.is_empty() && rows.iter().all(|r| r.pass);
        VerifyReport { suite: suite.to_string(), rows, all_pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// Runs one named suite.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<VerifyReport> {
    let rows = match name {
        "funk-eigen" => funk_eigen(cfg),
        "even-inversion" => even_inversion(cfg),
        "general-inversion" => general_inversion(cfg),
        "oracle" => oracle_agreement(cfg),
        "complementarity" => complementarity(cfg),
        "modified-sphere" => modified_sphere(cfg),
        "ikj" => ikj(cfg),
        "kernel" => kernel(cfg),
        "three-way" => three_way(cfg),
        _ => return None,
    };
    Some(VerifyReport::new(name, rows))
}

/// Runs every suite in [`SUITES`] order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<VerifyReport> {
    SUITES.iter().map(|s| run_suite(s, cfg).expect("known suite")).collect()
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2 π^(m/2-1) (-1)^k Γ(k+1/2) / Γ((m-1)/2+k)`.
pub fn funk_eigenvalue_gamma(m: usize, k: u32) -> ExactScalar {
    let k = k as i64;
    ExactScalar::pi_pow_half(m as i64 - 2)
        .mul_rational(&int(if k % 2 == 0 { 2 } else { -2 }))
        .mul(&gamma_half(2 * k + 1).unwrap())
        .div(&gamma_half(m as i64 - 1 + 2 * k).unwrap())
}

/// `P_n(0)` for the Legendre polynomial, from its explicit coefficient sum.
pub fn legendre_at_zero(n: u32) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    // P_n(x) = 2^-n Σ_j (-1)^j C(n,j) C(2n-2j,n) x^(n-2j); only j = n/2 survives at 0
    let j = n / 2;
    let binom =
        |a: u64, b: u64| -> BigInt { (0..b).fold(BigInt::one(), |acc, i| acc * BigInt::from(a - i)) / factorial(b) };
    let c = binom(n as u64, j as u64) * binom(n as u64, n as u64);
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    Rational::new(c * sign, BigInt::one() << n as usize)
}

fn funk_eigen(cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for m in 2..=cfg.dim_max.min(6) {
        for k in 0..=(cfg.deg_max / 2).min(4) {
            let expect = funk_eigenvalue_gamma(m, k);
            let basis = sh_basis(m, 2 * k);
            let mut ok = !basis.is_empty();
            for h in &basis {
                let got = funk_transform(&SpherePolynomial::rational(h), m).unwrap();
                ok &= got == SpherePolynomial::new(h, &expect);
            }
            rows.push(VerifyRow::exact_match(
                "funk(H_2k) = 2 pi^(m/2-1) (-1)^k Gamma(k+1/2)/Gamma((m-1)/2+k) H_2k",
                json!({"m": m, "k": k, "basis_size": basis.len()}),
                expect.to_string(),
                format!("{} basis elements transformed", basis.len()),
                ok,
            ));
            if m == 3 {
                let legendre = ExactScalar::pi_pow_half(2).mul_rational(&(int(2) * legendre_at_zero(2 * k)));
                let hecke = funk_hecke_eigenvalue(m, k).unwrap();
                rows.push(VerifyRow::exact_match(
                    "funk eigenvalue = 2 pi P_2k(0) (Legendre), m = 3",
                    json!({"m": m, "k": k}),
                    expect.to_string(),
                    legendre.to_string(),
                    expect == legendre && hecke == legendre,
                ));
            }
        }
    }
    rows
}

fn even_inversion(cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for m in [2usize, 4, 6].into_iter().filter(|&m| m <= cfg.dim_max) {
        let constant = InversionConstant::even_m(m).unwrap().value;
        for k in 0..=(cfg.deg_max / 2).min(4) {
            let basis = sh_basis(m, 2 * k);
            let mut ok = !basis.is_empty();
            for h in &basis {
                let f = SpherePolynomial::rational(h);
                let inv = invert_even_m(&funk_transform(&f, m).unwrap(), m).unwrap();
                ok &= inv.f == f && inv.transformed == f.scaled(&constant);
            }
            rows.push(VerifyRow::exact_match(
                "P_(m-2)(LB) dual(funk(f)) = 2(-4pi)^((m-2)/2) Gamma((m-1)/2)/Gamma(1/2) f",
                json!({"m": m, "k": k, "basis_size": basis.len()}),
                constant.to_string(),
                format!("{} basis elements inverted", basis.len()),
                ok,
            ));
        }
    }
    if cfg.dim_max >= 4 {
        let m = 4;
        let roots = p_polynomial(m).unwrap();
        let p2: i64 = roots.iter().map(|c| -8 - c).product();
        let x1x2 = &Polynomial::var(m, 0) * &Polynomial::var(m, 1);
        let inv = invert_even_m(&funk_transform(&SpherePolynomial::rational(&x1x2), m).unwrap(), m).unwrap();
        let comp = &inv.components[0];
        let four_pi_ninths = ExactScalar::pi_pow_half(2).mul_rational(&r(4, 9));
        let minus_four_pi = ExactScalar::pi_pow_half(2).mul_rational(&int(-4));
        let ok = p2 == -9
            && comp.c_km == -9
            && comp.c_km_gamma == ExactScalar::from_int(-9)
            && comp.dual_funk_factor == four_pi_ninths
            && inv.constant.value == minus_four_pi
            && inv.f == SpherePolynomial::rational(&x1x2);
        rows.push(VerifyRow::exact_match(
            "m = 4 worked constants: P_2(-8) = -9, dual factor 4pi/9, constant -4pi",
            json!({"m": 4, "f": "x1*x2"}),
            format!("{}, {}, {}", comp.c_km, comp.dual_funk_factor, inv.constant.value),
            format!("-9, {four_pi_ninths}, {minus_four_pi}"),
            ok,
        ));
    }
    rows
}

fn general_inversion(cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for m in 3..=cfg.dim_max.min(6) {
        let constant = InversionConstant::general(m).unwrap().value;
        for k in 0..=(cfg.deg_max / 2).min(3) {
            let basis = sh_basis(m, 2 * k);
            let mut ok = !basis.is_empty();
            for h in &basis {
                let f = SpherePolynomial::rational(h);
                let inv = invert_general(&funk_transform(&f, m).unwrap(), m).unwrap();
                ok &= inv.f == f && inv.big_f == f.scaled(&constant);
            }
            rows.push(VerifyRow::exact_match(
                "invert_general(funk(f)) = f, F = sigma_(m-1) (m-3)!/2^(m-2) f",
                json!({"m": m, "k": k, "basis_size": basis.len()}),
                constant.to_string(),
                format!("{} basis elements inverted", basis.len()),
                ok,
            ));
        }
    }
    rows
}

/// Normals used by the oracle sweeps: `e1` and `(3/5, 4/5, 0, ...)`.
pub fn sweep_normals(m: usize) -> Vec<RationalPoint> {
    let mut w = vec![Rational::zero(); m];
    w[0] = r(3, 5);
    w[1] = r(4, 5);
    vec![RationalPoint::basis(m, 0), RationalPoint::new(w)]
}

pub fn sweep_offsets() -> Vec<Rational> {
    vec![Rational::zero(), r(1, 2), r(3, 5)]
}

fn all_monomials(m: usize, deg_max: u32) -> Vec<Monomial> {
    (0..=deg_max).flat_map(|d| Monomial::all_of_degree(m, d)).collect()
}

/// Worst case of a batch of numeric comparisons.
struct Worst {
    row: Option<(f64, String, String, Option<f64>, f64)>,
    pass: bool,
    count: usize,
}

impl Worst {
    fn new() -> Worst {
        Worst { row: None, pass: true, count: 0 }
    }

    fn record(&mut self, exact: &IntegralResult, oracle: &Float, precision: Precision) {
        let bits = oracle.precision();
        let e = exact.form().to_float(bits);
        let diff = (&e - oracle).abs();
        let abs_err = diff.to_f64();
        let mag = e.abs();
        let (rel, ok) = if e.is_zero() {
            (None, abs_err <= ZERO_TOL)
        } else {
            let rel = (diff / mag).to_f64();
            (Some(rel), rel <= REL_TOL)
        };
        self.count += 1;
        self.pass &= ok;
        let score = rel.unwrap_or(abs_err);
        if self.row.as_ref().is_none_or(|w| score.partial_cmp(&w.0) == Some(Ordering::Greater)) {
            let digits = precision.digits();
            self.row = Some((score, e.to_decimal(digits), oracle.to_decimal(digits), rel, abs_err));
        }
    }

    fn finish(self, formula: &str, inputs: Value) -> VerifyRow {
        let (_, exact, oracle, rel, abs) = self.row.unwrap_or((0.0, String::new(), String::new(), None, 0.0));
        VerifyRow {
            formula: formula.to_string(),
            inputs,
            exact,
            oracle,
            abs_err: Some(abs),
            rel_err: rel,
            pass: self.pass && self.count > 0,
        }
    }
}

fn oracle_agreement(cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let deg_max = cfg.deg_max.min(8);
    let mut oracle = Oracle::new(cfg.precision);
    let mut rows = Vec::new();
    for m in 2..=cfg.dim_max.min(6) {
        let monomials = all_monomials(m, deg_max);
        // whole sphere and ball
        for (name, radius) in [("sphere", int(1)), ("sphere", r(3, 2)), ("ball", int(1)), ("ball", r(3, 2))] {
            let mut worst = Worst::new();
            for mono in &monomials {
                let p = Polynomial::term(mono.clone(), Rational::one());
                let region = if name == "sphere" {
                    funksphere_core::pizzetti::RegionSpec::RSphere(radius.clone())
                } else {
                    funksphere_core::pizzetti::RegionSpec::Ball(radius.clone())
                };
                let exact = funksphere_core::pizzetti::integrate(&p, &region).unwrap();
                let o = oracle.region_integral(&p, &region).unwrap();
                worst.record(&exact, o.value(), cfg.precision);
            }
            rows.push(worst.finish(
                "Pizzetti whole-region integral = monomial moments",
                json!({"region": name, "r": radius.to_string(), "m": m, "deg_max": deg_max, "monomials": monomials.len()}),
            ));
        }
        for omega in sweep_normals(m) {
            let bits = oracle.precision().bits();
            let w: Vec<Float> = omega.coords().iter().map(|c| Float::from_rational(c, bits)).collect();
            let prepared: Vec<(OperatorChain, RotatedIntegrand)> = monomials
                .iter()
                .map(|mono| {
                    let p = Polynomial::term(mono.clone(), Rational::one());
                    (OperatorChain::new(&p, &omega).unwrap(), oracle.rotate(&p, &w))
                })
                .collect();
            for p in sweep_offsets() {
                let mut worst = [Worst::new(), Worst::new(), Worst::new(), Worst::new()];
                for (chain, rot) in &prepared {
                    worst[0].record(&chain.subsphere(&p).unwrap(), &oracle.subsphere(rot, &p), cfg.precision);
                    worst[1].record(&chain.subball(&p).unwrap(), &oracle.subball(rot, &p), cfg.precision);
                    let up = oracle.cap_upper(rot, &p);
                    worst[2].record(&chain.cap(&p, CapSide::Upper).unwrap(), &up, cfg.precision);
                    let low = oracle.cap_lower(rot, &p);
                    worst[3].record(&chain.cap(&p, CapSide::Lower).unwrap(), &low, cfg.precision);
                }
                for (w, region) in worst.into_iter().zip(["subsphere", "subball", "cap-upper", "cap-lower"]) {
                    rows.push(w.finish(
                        "Pizzetti operator series = rotated moments + Gauss-Legendre slices",
                        json!({
                            "region": region,
                            "m": m,
                            "omega": json::rationals(omega.coords()),
                            "p": p.to_string(),
                            "deg_max": deg_max,
                            "monomials": monomials.len(),
                        }),
                    ));
                }
            }
        }
    }
    rows
}

fn complementarity(cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let deg_max = cfg.deg_max.min(8);
    let mut rows = Vec::new();
    for m in 2..=cfg.dim_max.min(6) {
        let monomials = all_monomials(m, deg_max);
        let wholes: Vec<IntegralResult> = monomials
            .iter()
            .map(|mono| sphere_integral(&Polynomial::term(mono.clone(), Rational::one()), &Rational::one()).unwrap())
            .collect();
        for omega in sweep_normals(m) {
            let chains: Vec<OperatorChain> = monomials
                .iter()
                .map(|mono| OperatorChain::new(&Polynomial::term(mono.clone(), Rational::one()), &omega).unwrap())
                .collect();
            for p in sweep_offsets() {
                let mut ok = true;
                let mut first_bad = None;
                for ((chain, whole), mono) in chains.iter().zip(&wholes).zip(&monomials) {
                    let sum = chain.cap(&p, CapSide::Upper).unwrap().add(&chain.cap(&p, CapSide::Lower).unwrap());
                    if sum.form() != whole.form() {
                        ok = false;
                        first_bad
                            .get_or_insert_with(|| (mono.clone(), sum.form().to_string(), whole.form().to_string()));
                    }
                }
                let (exact, oracle) = match first_bad {
                    Some((_, s, w)) => (s, w),
                    None => ("upper + lower".to_string(), "sphere integral".to_string()),
                };
                rows.push(VerifyRow::exact_match(
                    "cap upper + cap lower = sphere integral (exact)",
                    json!({
                        "m": m,
                        "omega": json::rationals(omega.coords()),
                        "p": p.to_string(),
                        "deg_max": deg_max,
                        "monomials": monomials.len(),
                    }),
                    exact,
                    oracle,
                    ok,
                ));
            }
        }
    }
    rows
}

/// Distinct rational unit vectors from inverse stereographic projection.
pub fn random_unit_points(rng: &mut ChaCha8Rng, m: usize, count: usize) -> Vec<RationalPoint> {
    let mut out: Vec<RationalPoint> = Vec::new();
    while out.len() < count {
        let u: Vec<Rational> = (0..m - 1).map(|_| r(rng.random_range(-6..=6), rng.random_range(1..=4))).collect();
        let w = RationalPoint::stereographic(&u);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// Random homogeneous polynomial of degree `d` with a few small terms.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, m: usize, d: u32) -> Polynomial {
    let monos = Monomial::all_of_degree(m, d);
    let mut p = Polynomial::zero(m);
    while p.is_zero() {
        for _ in 0..rng.random_range(1..=4) {
            let mono = monos[rng.random_range(0..monos.len())].clone();
            p.add_term(mono, r(rng.random_range(-5..=5), rng.random_range(1..=3)));
        }
    }
    p
}

/// Random even polynomial of degree at most `deg_max`.
pub fn random_even(rng: &mut ChaCha8Rng, m: usize, deg_max: u32) -> Polynomial {
    let mut p = Polynomial::zero(m);
    while p.is_zero() {
        for _ in 0..rng.random_range(1..=4) {
            let d = 2 * rng.random_range(0..=deg_max / 2);
            p = p + random_homogeneous(rng, m, d);
        }
    }
    p
}

/// `(4^s s!/√π) Σ_k Γ(s-k+1/2)/(4^k k!) T_k(ω)`, which should equal `Δ^s R(0)`.
pub fn laplacian_at_origin_via_omega(rs: &Polynomial, omega: &RationalPoint) -> ExactScalar {
    let s = rs.degree().unwrap_or(0) / 2;
    let chain = OperatorChain::new(rs, omega).unwrap();
    let mut sum = ExactScalar::zero();
    for k in 0..=s {
        let Some(t) = chain.level(k as usize) else { break };
        let v = t.evaluate(omega).unwrap();
        let w = Rational::from_integer(BigInt::from(4).pow(k) * factorial(k as u64));
        let term = gamma_half(2 * (s - k) as i64 + 1).unwrap().mul_rational(&(v / w));
        sum = sum.checked_add(&term).expect("single class sqrt(pi)");
    }
    let lead = Rational::from_integer(BigInt::from(4).pow(s) * factorial(s as u64));
    sum.mul_rational(&lead).div(&gamma_half(1).unwrap())
}

fn modified_sphere(cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 6);
    let mut rows = Vec::new();
    // hand case: R = x1², m = 3, ω = (3/5, 4/5, 0) gives Δ R(0) = 2
    {
        let rs = Polynomial::var(3, 0).pow(2);
        let w = RationalPoint::new(vec![r(3, 5), r(4, 5), int(0)]);
        let got = laplacian_at_origin_via_omega(&rs, &w);
        rows.push(VerifyRow::exact_match(
            "Laplacian^s R(0) from (Laplacian - <w,d>^2)^k R at w",
            json!({"m": 3, "s": 1, "R": "x1^2", "omega": json::rationals(w.coords())}),
            got.to_string(),
            "2".to_string(),
            got == ExactScalar::from_int(2),
        ));
    }
    for m in 2..=cfg.dim_max.min(6) {
        for s in 0..=(cfg.deg_max / 2).min(4) {
            let rs = random_homogeneous(&mut rng, m, 2 * s);
            let direct = ExactScalar::rational(rs.laplacian_power(s).constant_term());
            let whole = sphere_integral(&rs, &Rational::one()).unwrap();
            let mut ok = true;
            for w in random_unit_points(&mut rng, m, 5) {
                ok &= laplacian_at_origin_via_omega(&rs, &w) == direct;
                ok &= modified_sphere_integral(&rs, &w).unwrap().form() == whole.form();
            }
            rows.push(VerifyRow::exact_match(
                "Laplacian^s R(0) from (Laplacian - <w,d>^2)^k R at w, 5 normals",
                json!({"m": m, "s": s, "R": rs.to_string()}),
                direct.to_string(),
                whole.form().to_string(),
                ok,
            ));
        }
    }
    rows
}

fn ikj(_cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for (m, expect) in [(4usize, r(1, 4)), (3, r(1, 2))] {
        let got = ikj_term(m, 0, 0).unwrap();
        rows.push(VerifyRow::exact_match(
            "ikj_term hand value",
            json!({"m": m, "k": 0, "j": 0}),
            got.to_string(),
            expect.to_string(),
            got == ExactScalar::rational(expect.clone()),
        ));
    }
    for m in 3..=8usize {
        for k in 0..=4u32 {
            for j in 0..=k {
                let gauss = ikj_term(m, k, j).unwrap();
                let poch = ikj_term_pochhammer(m, k, j).unwrap();
                let sum = ikj_term_sum(m, k, j).unwrap();
                let mut ok = gauss == poch && poch == sum;
                let mut oracle = sum.to_string();
                if m % 2 == 0 && m >= 4 {
                    let integ = ikj_term_by_integration(m, k, j).unwrap();
                    ok &= ExactScalar::rational(integ.clone()) == gauss;
                    oracle = format!("{oracle}; integrated {integ}");
                }
                rows.push(VerifyRow::exact_match(
                    "ikj_term: Gauss 2F1 = Pochhammer = finite derivative sum",
                    json!({"m": m, "k": k, "j": j}),
                    gauss.to_string(),
                    oracle,
                    ok,
                ));
            }
        }
    }
    rows
}

fn kernel(cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let deg = (cfg.deg_max + 1).min(7);
    let mut rows = Vec::new();
    for m in 2..=cfg.dim_max.min(5) {
        let odd: Vec<Monomial> = (1..=deg).step_by(2).flat_map(|d| Monomial::all_of_degree(m, d)).collect();
        let bad = odd
            .iter()
            .filter(|mono| {
                let f = SpherePolynomial::rational(&Polynomial::term((*mono).clone(), Rational::one()));
                !funk_transform(&f, m).unwrap().is_zero()
            })
            .count();
        rows.push(VerifyRow::exact_match(
            "funk(odd monomial) = 0",
            json!({"m": m, "deg_max": deg, "monomials": odd.len()}),
            format!("{bad} non-zero"),
            "0 non-zero".to_string(),
            bad == 0 && !odd.is_empty(),
        ));
    }
    rows
}

fn three_way(cfg: &VerifyConfig) -> Vec<VerifyRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 9);
    let deg = cfg.deg_max.min(6);
    let mut rows = Vec::new();
    for m in [4usize, 6].into_iter().filter(|&m| m <= cfg.dim_max) {
        let mut ok = true;
        for _ in 0..20 {
            let f = random_even(&mut rng, m, deg);
            let fhat = funk_transform(&SpherePolynomial::rational(&f), m).unwrap();
            let a = invert_even_m(&fhat, m).unwrap().f;
            let b = invert_general(&fhat, m).unwrap().f;
            let c = spectral_reference_inverter(&fhat, m).unwrap();
            ok &= a == b && b == c && c == SpherePolynomial::rational(&f);
        }
        rows.push(VerifyRow::exact_match(
            "invert_even_m = invert_general = spectral reference",
            json!({"m": m, "cases": 20, "deg_max": deg, "seed": cfg.seed}),
            "even-m / general".to_string(),
            "spectral".to_string(),
            ok,
        ));
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_values() {
        assert_eq!(legendre_at_zero(2), r(-1, 2));
        assert_eq!(legendre_at_zero(4), r(3, 8));
        assert_eq!(legendre_at_zero(6), r(-5, 16));
    }

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig { dim_max: 4, deg_max: 4, ..VerifyConfig::default() };
        for name in SUITES {
            let rep = run_suite(name, &cfg).unwrap();
            assert!(rep.all_pass, "{name}: {:?}", rep.failures().next());
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &VerifyConfig::default()).is_none());
    }
}
