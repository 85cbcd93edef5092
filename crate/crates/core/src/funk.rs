//! The Funk transform on even polynomials, its dual, the distance-`r` dual,
//! and the two inversion formulas, all as exact polynomial maps.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::harmonics::{laplace_beltrami, lb_eigenvalue, spherical_components};
use crate::pizzetti::{sigma, subsphere_weight};
use crate::poly::{Parity, Polynomial};
use crate::scalar::{binomial, factorial, gamma_half, gamma_nonpole, gauss_2f1_at_one, pochhammer, ExactScalar};
use crate::Rational;

/// `scale * poly` restricted to the unit sphere, with `poly` in reduced form
/// (a sum of harmonics) and `scale` a unit-coefficient `pi^(h/2) sqrt(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpherePolynomial {
    poly: Polynomial,
    scale: ExactScalar,
}

impl SpherePolynomial {
    pub fn new(poly: &Polynomial, scale: &ExactScalar) -> SpherePolynomial {
        Self::from_reduced(poly.reduce_on_sphere(), scale)
    }

    pub fn rational(poly: &Polynomial) -> SpherePolynomial {
        Self::new(poly, &ExactScalar::one())
    }

    fn from_reduced(poly: Polynomial, scale: &ExactScalar) -> SpherePolynomial {
        if poly.is_zero() || scale.is_zero() {
            return SpherePolynomial { poly: Polynomial::zero(poly.dim()), scale: ExactScalar::one() };
        }
        SpherePolynomial { poly: poly.scale(scale.coeff()), scale: scale.class() }
    }

    pub fn zero(dim: usize) -> SpherePolynomial {
        SpherePolynomial { poly: Polynomial::zero(dim), scale: ExactScalar::one() }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn scale(&self) -> &ExactScalar {
        &self.scale
    }

    pub fn dim(&self) -> usize {
        self.poly.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn parity(&self) -> Parity {
        self.poly.parity()
    }

    pub fn scaled(&self, s: &ExactScalar) -> SpherePolynomial {
        Self::from_reduced(self.poly.clone(), &self.scale.mul(s))
    }
}

impl fmt::Display for SpherePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale.is_zero() || self.scale == ExactScalar::one() || self.poly.is_zero() {
            write!(f, "{}", self.poly)
        } else {
            write!(f, "{} * ({})", self.scale, self.poly)
        }
    }
}

/// Exact inversion constant, tagged with the formula it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionConstant {
    pub value: ExactScalar,
}

impl InversionConstant {
    /// `2 (-4π)^((m-2)/2) Γ((m-1)/2) / Γ(1/2)` for even `m`.
    pub fn even_m(m: usize) -> Result<InversionConstant> {
        check_even_dim(m)?;
        let h = (m as i64 - 2) / 2;
        let value = ExactScalar::pi_pow_half(2 * h)
            .mul_rational(&(Rational::from_integer(BigInt::from(-4).pow(h as u32)) * int(2)))
            .mul(&gamma_half(m as i64 - 1)?)
            .div(&gamma_half(1)?);
        Ok(InversionConstant { value })
    }

    /// `σ_(m-1) (m-3)! / 2^(m-2)` for `m ≥ 3`.
    pub fn general(m: usize) -> Result<InversionConstant> {
        if m < 3 {
            return Err(Error::UnsupportedDimension(m));
        }
        let r = Rational::new(factorial(m as u64 - 3), BigInt::from(2).pow(m as u32 - 2));
        Ok(InversionConstant { value: sigma(m - 1).mul_rational(&r) })
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn check_dim(f: &SpherePolynomial, m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::UnsupportedDimension(m));
    }
    if f.dim() != m {
        return Err(Error::DimensionMismatch { expected: m, found: f.dim() });
    }
    Ok(())
}

fn check_even_dim(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::UnsupportedDimension(m));
    }
    if m % 2 == 1 {
        return Err(Error::OddDimension(m));
    }
    Ok(())
}

/// `(Δ - ⟨x,∂_ω⟩²)^k φ_d |_(ω = p x)` as a polynomial in `x`, for `φ_d`
/// homogeneous of degree `d ≥ 2k`, given the chain `Δ^i φ_d`:
/// `p^(d-2k) Σ_i C(k,i) (-1)^i (d-2k+2i)!/(d-2k)! Δ^(k-i) φ_d (x)`.
fn section_operator(laps: &[Polynomial], d: u32, k: u32, p: &Rational) -> Polynomial {
    let dim = laps[0].dim();
    let e = d - 2 * k;
    let lead = if e == 0 { Rational::one() } else { p.pow(e as i32) };
    if lead.is_zero() {
        return Polynomial::zero(dim);
    }
    let mut out = Polynomial::zero(dim);
    for i in 0..=k {
        let Some(lap) = laps.get((k - i) as usize) else { continue };
        let mut c = Rational::from_integer(binomial(k as u64, i as u64) * factorial((e + 2 * i) as u64))
            / Rational::from_integer(factorial(e as u64));
        if i % 2 == 1 {
            c = -c;
        }
        out.add_scaled(lap, &(&c * &lead));
    }
    out
}

fn laplacian_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut cur = p.clone();
    while !cur.is_zero() {
        let next = cur.laplacian();
        out.push(cur);
        cur = next;
    }
    out
}

/// Funk transform: `f̂(ω) = ∫_(S_(0,ω)) f`, computed from the sub-sphere
/// formula at offset zero, as a polynomial in `ω` reduced on the sphere.
pub fn funk_transform(f: &SpherePolynomial, m: usize) -> Result<SpherePolynomial> {
    check_dim(f, m)?;
    let class = subsphere_weight(m, 0).class();
    let zero = Rational::zero();
    let mut out = Polynomial::zero(m);
    for (d, part) in f.poly().homogeneous_parts() {
        if d % 2 == 1 {
            continue;
        }
        let k = d / 2;
        let laps = laplacian_chain(&part);
        let w = subsphere_weight(m, k).div(&class);
        let w = w.as_rational().expect("common scalar class");
        out.add_scaled(&section_operator(&laps, d, k, &zero), w);
    }
    Ok(SpherePolynomial::new(&out, &f.scale().mul(&class)))
}

/// `d_(m,k) = 2 π^(m/2-1) (-1)^k Γ(k+1/2) / Γ((m-1)/2 + k)`.
pub fn funk_eigenvalue(m: usize, k: u32) -> Result<ExactScalar> {
    if m < 2 {
        return Err(Error::UnsupportedDimension(m));
    }
    let sign = if k.is_multiple_of(2) { 2 } else { -2 };
    Ok(ExactScalar::pi_pow_half(m as i64 - 2)
        .mul_rational(&int(sign))
        .mul(&gamma_half(2 * k as i64 + 1)?)
        .div(&gamma_half(m as i64 - 1 + 2 * k as i64)?))
}

/// Dual transform `φ̌ = f̂ / σ_(m-1)` (normalized average over great
/// sub-spheres through each point).
pub fn dual_transform(phi: &SpherePolynomial, m: usize) -> Result<SpherePolynomial> {
    let t = funk_transform(phi, m)?;
    Ok(t.scaled(&sigma(m - 1).inv()))
}

/// Average of `φ` over the sub-sphere `{ω : ⟨ω, x⟩ = p}`, as a polynomial in
/// `x`; `p = sin r` for geodesic distance `r ∈ [0, π/2)`.
pub fn dual_at_distance(phi: &SpherePolynomial, p: &Rational, m: usize) -> Result<SpherePolynomial> {
    check_dim(phi, m)?;
    if *p < Rational::zero() || *p >= Rational::one() {
        return Err(Error::OffsetOutOfRange(alloc::string::ToString::to_string(p)));
    }
    let q2 = Rational::one() - p * p;
    let sig = sigma(m - 1);
    let mut out = Polynomial::zero(m);
    for (d, part) in phi.poly().homogeneous_parts() {
        let laps = laplacian_chain(&part);
        for k in 0..=d / 2 {
            // weight_k / σ_(m-1) times (1-p²)^(k + m/2 - 1) / (1-p²)^((m-2)/2)
            let w = subsphere_weight(m, k).div(&sig);
            let w = w.as_rational().expect("rational ratio") * q2.pow(k as i32);
            out.add_scaled(&section_operator(&laps, d, k, p), &w);
        }
    }
    Ok(SpherePolynomial::new(&out, phi.scale()))
}

/// Roots `(m-2j-1)(2j-1)`, `j = 1..(m-2)/2`, of the factors `z - root` of
/// the polynomial `P_(m-2)` applied to the Laplace–Beltrami operator.
pub fn p_polynomial(m: usize) -> Result<Vec<i64>> {
    check_even_dim(m)?;
    let m = m as i64;
    Ok((1..=(m - 2) / 2).map(|j| (m - 2 * j - 1) * (2 * j - 1)).collect())
}

/// Per-component constants of the even-dimension inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenComponent {
    /// Degree `2k` of the spherical harmonic.
    pub degree: u32,
    pub lb_eigenvalue: i64,
    /// `C_(k,m) = P_(m-2)(-2k(m-2+2k))`, by direct product.
    pub c_km: i64,
    /// The same constant from its Gamma-ratio form.
    pub c_km_gamma: ExactScalar,
    /// Eigenvalue of `φ ↦ (φ̂)ˇ`, i.e. `d_(m,k)^2 / σ_(m-1)`.
    pub dual_funk_factor: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenInversion {
    pub f: SpherePolynomial,
    /// `(f̂)ˇ`.
    pub dual: SpherePolynomial,
    /// `P_(m-2)(Δ_LB) (f̂)ˇ`, before division by the constant.
    pub transformed: SpherePolynomial,
    pub roots: Vec<i64>,
    pub constant: InversionConstant,
    pub components: Vec<EvenComponent>,
}

/// `C_(k,m)` in Gamma form:
/// `4^(m/2-1) Γ(1/2-k) Γ((m-1)/2+k) / (Γ((3-m)/2-k) Γ(1/2+k))`.
pub fn c_km_gamma(k: u32, m: usize) -> Result<ExactScalar> {
    check_even_dim(m)?;
    let k = k as i64;
    let m = m as i64;
    let num = gamma_nonpole(1 - 2 * k)?.mul(&gamma_nonpole(m - 1 + 2 * k)?);
    let den = gamma_nonpole(3 - m - 2 * k)?.mul(&gamma_nonpole(1 + 2 * k)?);
    Ok(num.div(&den).mul_rational(&Rational::from_integer(BigInt::from(4).pow((m / 2 - 1) as u32))))
}

/// Inversion for even `m`: `f = P_(m-2)(Δ_LB)(f̂)ˇ / (2(-4π)^((m-2)/2) Γ((m-1)/2)/Γ(1/2))`,
/// with `P_(m-2)(Δ_LB)` applied as a differential operator.
pub fn invert_even_m(fhat: &SpherePolynomial, m: usize) -> Result<EvenInversion> {
    check_even_dim(m)?;
    check_dim(fhat, m)?;
    if fhat.parity() != Parity::Even {
        return Err(Error::NotEven);
    }
    let roots = p_polynomial(m)?;
    let dual = dual_transform(fhat, m)?;
    let mut h = dual.poly().clone();
    for &c in &roots {
        let lb = laplace_beltrami(&h);
        h = &lb - &h.scale(&int(c));
    }
    let transformed = SpherePolynomial::new(&h, dual.scale());
    let constant = InversionConstant::even_m(m)?;
    let f = transformed.scaled(&constant.value.inv());

    let sig = sigma(m - 1);
    let mut components = Vec::new();
    for (deg, _) in spherical_components(dual.poly()) {
        let k = deg / 2;
        let ev = lb_eigenvalue(deg, m);
        let c_km = roots.iter().map(|c| ev - c).product();
        let d = funk_eigenvalue(m, k)?;
        components.push(EvenComponent {
            degree: deg,
            lb_eigenvalue: ev,
            c_km,
            c_km_gamma: c_km_gamma(k, m)?,
            dual_funk_factor: d.mul(&d).div(&sig),
        });
    }
    Ok(EvenInversion { f, dual, transformed, roots, constant, components })
}

fn check_ikj(m: usize, k: u32, j: u32) -> Result<()> {
    if m < 3 {
        return Err(Error::UnsupportedDimension(m));
    }
    if j > k {
        return Err(Error::IndexOrder { j, k });
    }
    Ok(())
}

/// `(d/dt²)^(m-2) I_(k,j)(t) |_(t=1)` where
/// `I_(k,j)(t) = ∫_0^t (1-q²)^(k-j) q^(2j+m-2) (t²-q²)^((m-4)/2) dq`,
/// closed by Gauss summation of the terminating `2F1(j-k, j+(m-1)/2; j+1/2; 1)`:
/// `Γ((m-2)/2)/2 · Γ(j+(m-1)/2)/Γ(k+1/2) · ((2-m)/2)_(k-j)`.
pub fn ikj_term(m: usize, k: u32, j: u32) -> Result<ExactScalar> {
    check_ikj(m, k, j)?;
    let (m, k, j) = (m as i64, k as i64, j as i64);
    let lead = gamma_half(m - 2)?
        .mul(&gamma_half(2 * j + m - 1)?)
        .div(&gamma_half(2 * j + 1)?)
        .mul_rational(&Rational::new(BigInt::one(), BigInt::from(2)));
    let hyp = gauss_2f1_at_one(2 * (j - k), 2 * j + m - 1, 2 * j + 1)?;
    Ok(lead.mul(&hyp))
}

/// The same quantity in the Pochhammer form, without the hypergeometric step.
pub fn ikj_term_pochhammer(m: usize, k: u32, j: u32) -> Result<ExactScalar> {
    check_ikj(m, k, j)?;
    let (m, k, j) = (m as i64, k as i64, j as i64);
    Ok(gamma_half(m - 2)?
        .mul(&gamma_half(2 * j + m - 1)?)
        .div(&gamma_half(2 * k + 1)?)
        .mul_rational(&(pochhammer(2 - m, (k - j) as u64) / int(2))))
}

/// The same quantity as the explicit finite sum
/// `Γ((m-2)/2)/2 Σ_l C(k-j,l) (-1)^l Γ(j+l+(m-1)/2)/Γ(j+l+1/2)`.
pub fn ikj_term_sum(m: usize, k: u32, j: u32) -> Result<ExactScalar> {
    check_ikj(m, k, j)?;
    let (mi, ji) = (m as i64, j as i64);
    let mut acc = ExactScalar::zero();
    for l in 0..=(k - j) as i64 {
        let mut c = Rational::from_integer(binomial((k - j) as u64, l as u64));
        if l % 2 == 1 {
            c = -c;
        }
        let t = gamma_half(2 * (ji + l) + mi - 1)?.div(&gamma_half(2 * (ji + l) + 1)?).mul_rational(&c);
        acc = acc.checked_add(&t).expect("rational terms");
    }
    Ok(acc.mul(&gamma_half(mi - 2)?).mul_rational(&Rational::new(BigInt::one(), BigInt::from(2))))
}

/// For even `m ≥ 4` the integrand of `I_(k,j)` is a polynomial; this expands
/// it, integrates exactly and applies `d/dt² : t^α ↦ (α/2) t^(α-2)`.
pub fn ikj_term_by_integration(m: usize, k: u32, j: u32) -> Result<Rational> {
    check_ikj(m, k, j)?;
    if m % 2 == 1 || m < 4 {
        return Err(Error::OddDimension(m));
    }
    // I(t) as a map exponent -> coefficient in t
    let mut it: BTreeMap<i64, Rational> = BTreeMap::new();
    let n1 = (k - j) as u64;
    let n2 = (m as u64 - 4) / 2;
    for a in 0..=n1 {
        for b in 0..=n2 {
            // (1-q²)^n1 (t²-q²)^n2 q^(2j+m-2)
            let mut c = Rational::from_integer(binomial(n1, a) * binomial(n2, b));
            if (a + b) % 2 == 1 {
                c = -c;
            }
            let qe = 2 * j as i64 + m as i64 - 2 + 2 * a as i64 + 2 * b as i64;
            let te = 2 * (n2 - b) as i64;
            // ∫_0^t q^qe dq = t^(qe+1)/(qe+1)
            *it.entry(te + qe + 1).or_insert_with(Rational::zero) += c / int(qe + 1);
        }
    }
    for _ in 0..m - 2 {
        let mut next: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in it {
            if e == 0 || c.is_zero() {
                continue;
            }
            *next.entry(e - 2).or_insert_with(Rational::zero) += c * Rational::new(BigInt::from(e), BigInt::from(2));
        }
        it = next;
    }
    Ok(it.values().fold(Rational::zero(), |acc, c| acc + c))
}

/// Per-component data of the general inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralComponent {
    pub degree: u32,
    /// `h_(m,k) = 2 π^((m-1)/2) (2k)! d_(m,k) / σ_(m-1)`.
    pub h_mk: ExactScalar,
    /// Factor mapping the component of `f̂` to the component of `F`.
    pub factor: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralInversion {
    pub f: SpherePolynomial,
    /// `F = (d/dt²)^(m-2) [∫_0^t (f̂)ˇ_(arccos q) q^(m-2) (t²-q²)^((m-4)/2) dq]_(t=1)`.
    pub big_f: SpherePolynomial,
    pub constant: InversionConstant,
    pub components: Vec<GeneralComponent>,
}

/// Inversion for any `m ≥ 3` through the distance-`r` dual:
/// `f = 2^(m-2) / ((m-3)! σ_(m-1)) · F`, with `F` assembled per harmonic
/// component from the terms `ikj_term`.
pub fn invert_general(fhat: &SpherePolynomial, m: usize) -> Result<GeneralInversion> {
    if m < 3 {
        return Err(Error::UnsupportedDimension(m));
    }
    check_dim(fhat, m)?;
    if fhat.parity() != Parity::Even {
        return Err(Error::NotEven);
    }
    let sig = sigma(m - 1);
    let mut big_f = Polynomial::zero(m);
    let mut components = Vec::new();
    for (deg, comp) in spherical_components(fhat.poly()) {
        let k = deg / 2;
        // (f̂)ˇ_(arccos q) on this component is
        //   Σ_j 2π^((m-1)/2)/(σ 4^j j! Γ((m-1)/2+j)) (-1)^j (2k)!/(2k-2j)! p^(2k-2j) q^(2j) Ĥ,
        // and the q-integral of p^(2k-2j) q^(2j) q^(m-2) (t²-q²)^((m-4)/2) is I_(k,j).
        let mut factor = ExactScalar::zero();
        for j in 0..=k {
            let mut c = Rational::new(factorial(2 * k as u64), factorial(2 * (k - j) as u64));
            if j % 2 == 1 {
                c = -c;
            }
            let t = subsphere_weight(m, j).div(&sig).mul(&ikj_term(m, k, j)?).mul_rational(&c);
            factor = factor.checked_add(&t).expect("rational terms");
        }
        big_f.add_scaled(&comp, factor.as_rational().expect("rational factor"));
        let h_mk = subsphere_weight(m, 0)
            .mul_rational(&Rational::from_integer(factorial(2 * k as u64)))
            .mul(&funk_eigenvalue(m, k)?)
            .div(&sig);
        components.push(GeneralComponent { degree: deg, h_mk, factor });
    }
    let big_f = SpherePolynomial::new(&big_f, fhat.scale());
    let constant = InversionConstant::general(m)?;
    let f = big_f.scaled(&constant.value.inv());
    Ok(GeneralInversion { f, big_f, constant, components })
}
