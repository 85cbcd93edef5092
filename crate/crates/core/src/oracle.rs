//! Brute-force reference integrators: closed-form monomial moments on
//! spheres, a numerically orthonormalized frame, and Gauss–Legendre
//! quadrature for the one-dimensional slice integrals of caps.
//!
//! Nothing here applies a differential operator to the integrand, so
//! agreement with [`crate::pizzetti`] is independent evidence.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::float::Float;
use crate::funk::SpherePolynomial;
use crate::harmonics::spherical_components;
use crate::pizzetti::RegionSpec;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::{factorial, gamma_half, pochhammer, ExactScalar, NumericScalar, Precision};
use crate::Rational;

/// Extra decimal digits the oracle carries over the primary precision.
pub const EXTRA_DIGITS: u32 = 10;

/// `∫_(S^(n-1)) x^α dS = 2 Π Γ((α_i+1)/2) / Γ((|α|+n)/2)`, zero when some
/// exponent is odd.
pub fn sphere_monomial_moment(alpha: &[u16], n: usize) -> ExactScalar {
    assert_eq!(alpha.len(), n, "multi-index length must equal the dimension");
    if alpha.iter().any(|a| a % 2 == 1) {
        return ExactScalar::zero();
    }
    let total: i64 = alpha.iter().map(|&a| a as i64).sum();
    let mut acc = ExactScalar::from_int(2);
    for &a in alpha {
        acc = acc.mul(&gamma_half(a as i64 + 1).expect("positive"));
    }
    acc.div(&gamma_half(total + n as i64).expect("positive"))
}

/// Orthogonal matrix, in floating point, whose first row is a given unit
/// vector.
#[derive(Clone, Debug)]
pub struct Frame {
    rows: Vec<Vec<Float>>,
}

fn dot(a: &[Float], b: &[Float], bits: u32) -> Float {
    a.iter().zip(b).fold(Float::zero(bits), |acc, (x, y)| acc + x * y)
}

impl Frame {
    /// Pivots on the largest `|ω_i|` and orthonormalizes the remaining
    /// standard basis vectors against `ω` (Gram–Schmidt, two passes).
    pub fn new(omega: &[Float], bits: u32) -> Frame {
        let m = omega.len();
        let norm = dot(omega, omega, bits).sqrt();
        let first: Vec<Float> = omega.iter().map(|w| w / &norm).collect();
        let pivot = (0..m).max_by(|&i, &j| first[i].abs().cmp_value(&first[j].abs()).then(j.cmp(&i))).unwrap_or(0);
        let mut rows = vec![first];
        for i in (0..m).filter(|&i| i != pivot) {
            let mut v: Vec<Float> = (0..m).map(|j| Float::from_i64((i == j) as i64, bits)).collect();
            for _ in 0..2 {
                for r in &rows {
                    let c = dot(&v, r, bits);
                    if c.is_zero() {
                        continue;
                    }
                    for (vj, rj) in v.iter_mut().zip(r) {
                        *vj = &*vj - &(&c * rj);
                    }
                }
            }
            let n = dot(&v, &v, bits).sqrt();
            rows.push(v.iter().map(|x| x / &n).collect());
        }
        Frame { rows }
    }

    pub fn from_rational(omega: &[Rational], bits: u32) -> Frame {
        let w: Vec<Float> = omega.iter().map(|c| Float::from_rational(c, bits)).collect();
        Frame::new(&w, bits)
    }

    pub fn rows(&self) -> &[Vec<Float>] {
        &self.rows
    }

    /// `max |M Mᵀ - I|` over all entries.
    pub fn orthonormality_error(&self) -> f64 {
        let bits = self.rows[0][0].precision();
        let mut worst = 0.0f64;
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in self.rows.iter().enumerate() {
                let target = Float::from_i64((i == j) as i64, bits);
                let e = (dot(a, b, bits) - target).abs().to_f64();
                if e > worst {
                    worst = e;
                }
            }
        }
        worst
    }
}

type FloatPoly = BTreeMap<Monomial, Float>;

fn fpoly_mul(a: &FloatPoly, b: &FloatPoly, bits: u32) -> FloatPoly {
    let mut out: FloatPoly = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let t = ca * cb;
            let e = out.entry(ma.mul(mb)).or_insert_with(|| Float::zero(bits));
            *e = &*e + &t;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `P(Mᵀ y)` with numeric coefficients: `x_i = Σ_j M_ji y_j`.
fn rotate(p: &Polynomial, frame: &Frame, bits: u32) -> FloatPoly {
    let m = p.dim();
    let forms: Vec<FloatPoly> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| !frame.rows[j][i].is_zero())
                .map(|j| (Monomial::var(m, j), frame.rows[j][i].clone()))
                .collect()
        })
        .collect();
    let mut powers: Vec<Vec<FloatPoly>> =
        forms.iter().map(|_| vec![BTreeMap::from([(Monomial::one(m), Float::from_i64(1, bits))])]).collect();
    let mut out: FloatPoly = BTreeMap::new();
    for (mono, c) in p.terms() {
        let mut acc: FloatPoly = BTreeMap::from([(Monomial::one(m), Float::from_rational(c, bits))]);
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = fpoly_mul(powers[i].last().unwrap(), &forms[i], bits);
                powers[i].push(next);
            }
            acc = fpoly_mul(&acc, &powers[i][e as usize], bits);
        }
        for (mo, v) in acc {
            let e = out.entry(mo).or_insert_with(|| Float::zero(bits));
            *e = &*e + &v;
        }
    }
    out
}

/// Cosine in `f64` by Taylor series, for quadrature starting guesses only
/// (`|x| ≤ π`).
fn cos_approx(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..40 {
        term *= -x2 / ((2 * k - 1) as f64 * (2 * k) as f64);
        sum += term;
    }
    sum
}

/// Reference integrator. Holds cached Gauss–Legendre rules and slice
/// integrals; all arithmetic runs at the primary precision plus
/// [`EXTRA_DIGITS`].
#[derive(Debug)]
pub struct Oracle {
    precision: Precision,
    bits: u32,
    rules: BTreeMap<usize, Vec<(Float, Float)>>,
    slices: BTreeMap<(u32, i64, Rational), Float>,
    min_nodes: usize,
    max_nodes: usize,
}

/// Integrand rotated so that the hyperplane normal becomes `e1`.
#[derive(Clone, Debug)]
pub struct RotatedIntegrand {
    dim: usize,
    terms: FloatPoly,
}

impl Oracle {
    pub fn new(primary: Precision) -> Oracle {
        let precision = primary.extended(EXTRA_DIGITS);
        Oracle {
            precision,
            bits: precision.bits(),
            rules: BTreeMap::new(),
            slices: BTreeMap::new(),
            min_nodes: 64,
            max_nodes: 2048,
        }
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Agreement required between successive quadrature refinements.
    fn tolerance(&self) -> Float {
        Float::from_i64(1, self.bits) / Float::from_i64(10, self.bits).powi(self.precision.digits() as i64 - 6)
    }

    /// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
    /// the three-term recurrence.
    pub fn gauss_legendre(&mut self, n: usize) -> &[(Float, Float)] {
        let bits = self.bits + 32;
        let out_bits = self.bits;
        self.rules.entry(n).or_insert_with(|| {
            let one = Float::from_i64(1, bits);
            let eval = |x: &Float| -> (Float, Float) {
                // returns (P_n(x), P_n'(x))
                let mut p0 = one.clone();
                let mut p1 = x.clone();
                for k in 2..=n as i64 {
                    let p2 = (Float::from_i64(2 * k - 1, bits) * x * &p1 - Float::from_i64(k - 1, bits) * &p0)
                        / Float::from_i64(k, bits);
                    p0 = p1;
                    p1 = p2;
                }
                let dp = Float::from_i64(n as i64, bits) * (x * &p1 - &p0) / (x * x - &one);
                (p1, dp)
            };
            let mut rule = Vec::with_capacity(n);
            let half = n.div_ceil(2);
            let eps = Float::from_parts(BigInt::one(), -(bits as i64) + 8, bits);
            for i in 0..half {
                let guess = cos_approx(core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
                let mut x = Float::from_rational(&f64_to_rational(guess), bits);
                for _ in 0..100 {
                    let (p, dp) = eval(&x);
                    let dx = p / &dp;
                    x = &x - &dx;
                    if dx.abs().cmp_value(&eps) != core::cmp::Ordering::Greater {
                        break;
                    }
                }
                let (_, dp) = eval(&x);
                let w = Float::from_i64(2, bits) / ((&one - &x * &x) * &dp * &dp);
                rule.push((x.clone().with_precision(out_bits), w.clone().with_precision(out_bits)));
                if 2 * i + 1 != n {
                    rule.push(((-x).with_precision(out_bits), w.with_precision(out_bits)));
                }
            }
            rule
        })
    }

    /// `∫_p^1 t^a (1-t²)^(e/2) dt`, `e ≥ -1`, by Gauss–Legendre after the
    /// substitution `t = (1-u²)/(1+u²)`, which makes the integrand smooth on
    /// `u ∈ [0, √((1-p)/(1+p))]`. The node count doubles from 64 until two
    /// successive rules agree.
    pub fn slice_integral(&mut self, a: u32, e: i64, p: &Rational) -> Float {
        let key = (a, e, p.clone());
        if let Some(v) = self.slices.get(&key) {
            return v.clone();
        }
        let bits = self.bits;
        let one = Float::from_i64(1, bits);
        let two = Float::from_i64(2, bits);
        let pf = Float::from_rational(p, bits);
        let upper = ((&one - &pf) / (&one + &pf)).sqrt();
        let half = &upper / &two;
        let tol = self.tolerance();
        let mut n = self.min_nodes;
        let mut prev: Option<Float> = None;
        let value = loop {
            let rule = self.gauss_legendre(n).to_vec();
            let mut sum = Float::zero(bits);
            for (x, w) in &rule {
                let u = &half * (x + &one);
                let d = &one + &u * &u;
                let t = (&one - &u * &u) / &d;
                let s = (&two * &u) / &d;
                // t^a (1-t²)^(e/2) dt/du = t^a s^(e+1) · 2/(1+u²)
                let g = t.powi(a as i64) * s.powi(e + 1) * (&two / &d);
                sum = sum + w * &g;
            }
            let cur = sum * &half;
            if let Some(pv) = &prev {
                let diff = (&cur - pv).abs();
                let scale = if cur.abs() > one { cur.abs() } else { one.clone() };
                if diff <= &tol * &scale || n >= self.max_nodes {
                    break cur;
                }
            }
            prev = Some(cur);
            n *= 2;
        };
        self.slices.insert(key, value.clone());
        value
    }

    /// Rotates `P` by the frame of `ω` (any non-zero vector; it is
    /// normalized numerically).
    pub fn rotate(&self, p: &Polynomial, omega: &[Float]) -> RotatedIntegrand {
        let frame = Frame::new(omega, self.bits);
        RotatedIntegrand { dim: p.dim(), terms: rotate(p, &frame, self.bits) }
    }

    fn moment(&self, alpha: &[u16], n: usize) -> Float {
        sphere_monomial_moment(alpha, n).to_float(self.bits)
    }

    /// Integral over `{⟨x,ω⟩ = p}` of the sphere, with `y1 = p` substituted
    /// and moments on the `(m-2)`-sphere of radius `√(1-p²)`.
    pub fn subsphere(&self, rot: &RotatedIntegrand, p: &Rational) -> Float {
        let bits = self.bits;
        let pf = Float::from_rational(p, bits);
        let rho = Float::from_rational(&(Rational::one() - p * p), bits).sqrt();
        let mut sum = Float::zero(bits);
        for (mono, c) in &rot.terms {
            let ex = mono.exponents();
            let rest = &ex[1..];
            let deg: i64 = rest.iter().map(|&e| e as i64).sum();
            let mo = self.moment(rest, rot.dim - 1);
            if mo.is_zero() {
                continue;
            }
            sum = sum + c * pf.powi(ex[0] as i64) * rho.powi(deg + rot.dim as i64 - 2) * mo;
        }
        sum
    }

    /// Integral over the `(m-1)`-ball `{‖x‖ ≤ 1, ⟨x,ω⟩ = p}`.
    pub fn subball(&self, rot: &RotatedIntegrand, p: &Rational) -> Float {
        let bits = self.bits;
        let pf = Float::from_rational(p, bits);
        let rho = Float::from_rational(&(Rational::one() - p * p), bits).sqrt();
        let mut sum = Float::zero(bits);
        for (mono, c) in &rot.terms {
            let ex = mono.exponents();
            let rest = &ex[1..];
            let deg: i64 = rest.iter().map(|&e| e as i64).sum();
            let mo = self.moment(rest, rot.dim - 1);
            if mo.is_zero() {
                continue;
            }
            let radial = rho.powi(deg + rot.dim as i64 - 1) / Float::from_i64(deg + rot.dim as i64 - 1, bits);
            sum = sum + c * pf.powi(ex[0] as i64) * radial * mo;
        }
        sum
    }

    /// Upper cap `⟨x,ω⟩ > p`: slices `y1 = t` carry the measure
    /// `(1-t²)^((m-3)/2) dt` times the `(m-2)`-sphere of radius `√(1-t²)`.
    pub fn cap_upper(&mut self, rot: &RotatedIntegrand, p: &Rational) -> Float {
        self.cap_impl(rot, p, false)
    }

    /// Lower cap `⟨x,ω⟩ < p`, as the upper cap of `(-ω, -p)`.
    pub fn cap_lower(&mut self, rot: &RotatedIntegrand, p: &Rational) -> Float {
        self.cap_impl(rot, &-p.clone(), true)
    }

    fn cap_impl(&mut self, rot: &RotatedIntegrand, p: &Rational, flip: bool) -> Float {
        let mut sum = Float::zero(self.bits);
        for (mono, c) in &rot.terms {
            let ex = mono.exponents();
            let rest = &ex[1..];
            let deg: i64 = rest.iter().map(|&e| e as i64).sum();
            let mo = self.moment(rest, rot.dim - 1);
            if mo.is_zero() {
                continue;
            }
            // reversing ω turns y1 into -y1
            let sign = if flip && ex[0] % 2 == 1 { -1 } else { 1 };
            let s = self.slice_integral(ex[0] as u32, deg + rot.dim as i64 - 3, p);
            sum = sum + c * &s * mo * Float::from_i64(sign, self.bits);
        }
        sum
    }

    fn whole(&self, p: &Polynomial, r: &Rational, ball: bool) -> Float {
        let bits = self.bits;
        let m = p.dim() as i64;
        let rf = Float::from_rational(r, bits);
        let mut sum = Float::zero(bits);
        for (mono, c) in p.terms() {
            let mo = self.moment(mono.exponents(), p.dim());
            if mo.is_zero() {
                continue;
            }
            let d = mono.degree() as i64;
            let radial = if ball { rf.powi(d + m) / Float::from_i64(d + m, bits) } else { rf.powi(d + m - 1) };
            sum = sum + Float::from_rational(c, bits) * mo * radial;
        }
        sum
    }

    /// Integral of `P` over a region, at the oracle precision.
    pub fn region_integral(&mut self, p: &Polynomial, region: &RegionSpec) -> Result<NumericScalar> {
        region.validate(p.dim())?;
        let v = match region {
            RegionSpec::UnitSphere => self.whole(p, &Rational::one(), false),
            RegionSpec::RSphere(r) => self.whole(p, r, false),
            RegionSpec::Ball(r) => self.whole(p, r, true),
            _ => {
                let (omega, off) = region.hyperplane().unwrap();
                let w: Vec<Float> = omega.coords().iter().map(|c| Float::from_rational(c, self.bits)).collect();
                let rot = self.rotate(p, &w);
                match region {
                    RegionSpec::Subsphere { .. } => self.subsphere(&rot, off),
                    RegionSpec::Subball { .. } => self.subball(&rot, off),
                    RegionSpec::CapUpper { .. } => self.cap_upper(&rot, off),
                    _ => self.cap_lower(&rot, off),
                }
            }
        };
        Ok(NumericScalar::new(v, self.precision))
    }
}

/// Short-hand for a one-off [`Oracle::region_integral`].
pub fn oracle_region_integral(p: &Polynomial, region: &RegionSpec, primary: Precision) -> Result<NumericScalar> {
    Oracle::new(primary).region_integral(p, region)
}

fn f64_to_rational(x: f64) -> Rational {
    // exact binary value of a finite f64
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    if exp == 0 && frac == 0 {
        return Rational::zero();
    }
    let (mant, e) = if exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp - 1075) };
    let m = Rational::from_integer(BigInt::from(sign) * BigInt::from(mant));
    let two = Rational::from_integer(BigInt::from(2));
    m * two.pow(e as i32)
}

/// Funk eigenvalue from the Funk–Hecke formula: `σ_(m-1) P_(2k)(0)` with the
/// Gegenbauer polynomial normalized to `P(1) = 1`.
pub fn funk_hecke_eigenvalue(m: usize, k: u32) -> Result<ExactScalar> {
    if m < 2 {
        return Err(Error::UnsupportedDimension(m));
    }
    let sign = if k.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    if m == 2 {
        // S^0 has two points and P_n(t) = T_n(t)
        return Ok(ExactScalar::rational(sign * Rational::from_integer(BigInt::from(2))));
    }
    // λ = (m-2)/2: P_2k(0) = (-1)^k (λ)_k (2k)! / (k! (2λ)_2k)
    let lam_twice = m as i64 - 2;
    let value = sign * pochhammer(lam_twice, k as u64) * Rational::from_integer(factorial(2 * k as u64))
        / (Rational::from_integer(factorial(k as u64)) * pochhammer(2 * lam_twice, 2 * k as u64));
    let area = ExactScalar::pi_pow_half(m as i64 - 1)
        .mul_rational(&Rational::from_integer(BigInt::from(2)))
        .div(&gamma_half(m as i64 - 1)?);
    Ok(area.mul_rational(&value))
}

/// Reference inverse of the Funk transform: divides each harmonic component
/// of `f̂` by its Funk–Hecke eigenvalue.
pub fn spectral_reference_inverter(fhat: &SpherePolynomial, m: usize) -> Result<SpherePolynomial> {
    if fhat.dim() != m {
        return Err(Error::DimensionMismatch { expected: m, found: fhat.dim() });
    }
    if fhat.parity() != crate::poly::Parity::Even {
        return Err(Error::NotEven);
    }
    let mut parts: Vec<(Polynomial, ExactScalar)> = Vec::new();
    for (deg, comp) in spherical_components(fhat.poly()) {
        let d = funk_hecke_eigenvalue(m, deg / 2)?;
        if d.is_zero() {
            return Err(Error::ZeroEigenvalue);
        }
        parts.push((comp, fhat.scale().div(&d)));
    }
    let Some((_, first)) = parts.first() else { return Ok(SpherePolynomial::zero(m)) };
    // every component must land in one scalar class
    let class = first.class();
    let mut out = Polynomial::zero(m);
    for (comp, s) in &parts {
        let ratio = s.div(&class);
        let r = ratio.as_rational().ok_or(Error::ZeroEigenvalue)?;
        out.add_scaled(comp, r);
    }
    Ok(SpherePolynomial::new(&out, &class))
}
