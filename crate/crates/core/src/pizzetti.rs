//! Pizzetti-type formulas: integrals of polynomials over spheres, balls,
//! hyperplane sections of the unit sphere and ball, and spherical caps, all
//! as finite sums of invariant differential operators evaluated at a point.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RationalPoint};
use crate::scalar::{factorial, gamma_half, ClosedForm, ExactScalar, NumericScalar, PartialBeta, Precision};
use crate::Rational;

/// Integration domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionSpec {
    UnitSphere,
    /// Sphere of radius `r` centred at the origin.
    RSphere(Rational),
    /// Ball of radius `r` centred at the origin.
    Ball(Rational),
    /// `{x ∈ S^(m-1) : ⟨x, ω⟩ = p}`.
    Subsphere {
        omega: RationalPoint,
        p: Rational,
    },
    /// `{x : ‖x‖ ≤ 1, ⟨x, ω⟩ = p}`.
    Subball {
        omega: RationalPoint,
        p: Rational,
    },
    /// `{x ∈ S^(m-1) : ⟨x, ω⟩ > p}`.
    CapUpper {
        omega: RationalPoint,
        p: Rational,
    },
    /// `{x ∈ S^(m-1) : ⟨x, ω⟩ < p}`.
    CapLower {
        omega: RationalPoint,
        p: Rational,
    },
}

impl RegionSpec {
    pub fn name(&self) -> &'static str {
        match self {
            RegionSpec::UnitSphere => "sphere",
            RegionSpec::RSphere(_) => "r-sphere",
            RegionSpec::Ball(_) => "ball",
            RegionSpec::Subsphere { .. } => "subsphere",
            RegionSpec::Subball { .. } => "subball",
            RegionSpec::CapUpper { .. } => "cap-upper",
            RegionSpec::CapLower { .. } => "cap-lower",
        }
    }

    /// Normal and offset of the hyperplane regions.
    pub fn hyperplane(&self) -> Option<(&RationalPoint, &Rational)> {
        match self {
            RegionSpec::Subsphere { omega, p }
            | RegionSpec::Subball { omega, p }
            | RegionSpec::CapUpper { omega, p }
            | RegionSpec::CapLower { omega, p } => Some((omega, p)),
            _ => None,
        }
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        if dim < 2 {
            return Err(Error::UnsupportedDimension(dim));
        }
        match self {
            RegionSpec::UnitSphere => Ok(()),
            RegionSpec::RSphere(r) | RegionSpec::Ball(r) => {
                if r.is_positive() {
                    Ok(())
                } else {
                    Err(Error::NonPositiveRadius)
                }
            }
            _ => {
                let (omega, p) = self.hyperplane().unwrap();
                check_hyperplane(dim, omega, p)
            }
        }
    }
}

/// Which of the two caps cut out by `⟨x, ω⟩ = p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapSide {
    Upper,
    Lower,
}

fn check_offset(p: &Rational) -> Result<()> {
    if p.abs() >= Rational::one() {
        return Err(Error::OffsetOutOfRange(p.to_string()));
    }
    Ok(())
}

fn check_hyperplane(dim: usize, omega: &RationalPoint, p: &Rational) -> Result<()> {
    if omega.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: omega.dim() });
    }
    if !omega.is_unit() {
        return Err(Error::NotUnit);
    }
    check_offset(p)
}

/// Exact value of an integral, possibly a combination of several scalar
/// classes and transcendental incomplete-Beta atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralResult {
    form: ClosedForm,
}

impl IntegralResult {
    pub fn from_form(form: ClosedForm) -> IntegralResult {
        IntegralResult { form }
    }

    pub fn form(&self) -> &ClosedForm {
        &self.form
    }

    /// The value as a single [`ExactScalar`], when it is one.
    pub fn exact(&self) -> Option<ExactScalar> {
        self.form.as_scalar()
    }

    pub fn is_exact(&self) -> bool {
        self.exact().is_some()
    }

    /// `true` when no incomplete-Beta atom remains.
    pub fn is_algebraic(&self) -> bool {
        self.form.terms().all(|(atom, _)| atom.tail.is_none())
    }

    pub fn numeric(&self, precision: Precision) -> NumericScalar {
        self.form.numeric(precision)
    }

    pub fn add(&self, other: &IntegralResult) -> IntegralResult {
        IntegralResult { form: self.form.add(&other.form) }
    }
}

fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn four_pow_fact(k: u32) -> Rational {
    Rational::from_integer(BigInt::from(4).pow(k) * factorial(k as u64))
}

/// Surface area `σ_n = 2 π^(n/2) / Γ(n/2)` of the unit sphere in `ℝ^n`.
pub fn sigma(n: usize) -> ExactScalar {
    ExactScalar::pi_pow_half(n as i64).mul_rational(&rint(2)).div(&gamma_half(n as i64).expect("n >= 1"))
}

/// `2 π^((m-1)/2) / (4^k k! Γ((m-1)/2 + k))`, the weight of the k-th term in
/// the sub-sphere formula.
pub fn subsphere_weight(m: usize, k: u32) -> ExactScalar {
    ExactScalar::pi_pow_half(m as i64 - 1)
        .mul_rational(&(rint(2) / four_pow_fact(k)))
        .div(&gamma_half(m as i64 - 1 + 2 * k as i64).expect("m >= 2"))
}

/// `q^(e_twice/2)` as an exact scalar, `q ≥ 0` rational.
fn half_power(q: &Rational, e_twice: i64) -> ExactScalar {
    let whole = ExactScalar::rational(q.pow(e_twice.div_euclid(2) as i32));
    if e_twice.rem_euclid(2) == 1 {
        whole.mul(&ExactScalar::sqrt_of(q.clone()))
    } else {
        whole
    }
}

fn radius_power(r: &Rational, e: i64) -> Rational {
    r.pow(e as i32)
}

/// `Σ_k 2π^(m/2)/(4^k k! Γ(m/2+k)) Δ^k P(0) r^(2k+m-1)`.
pub fn sphere_integral(p: &Polynomial, r: &Rational) -> Result<IntegralResult> {
    let m = p.dim();
    RegionSpec::RSphere(r.clone()).validate(m)?;
    let mut form = ClosedForm::zero();
    let mut lap = p.clone();
    let mut k = 0u32;
    while !lap.is_zero() {
        let c0 = lap.constant_term();
        if !c0.is_zero() {
            let w = ExactScalar::pi_pow_half(m as i64)
                .mul_rational(&(rint(2) / four_pow_fact(k) * c0 * radius_power(r, 2 * k as i64 + m as i64 - 1)))
                .div(&gamma_half(m as i64 + 2 * k as i64)?);
            form.add_scalar(&w);
        }
        lap = lap.laplacian();
        k += 1;
    }
    Ok(IntegralResult { form })
}

/// `Σ_k π^(m/2)/(4^k k! Γ(m/2+1+k)) Δ^k P(0) r^(2k+m)`.
pub fn ball_integral(p: &Polynomial, r: &Rational) -> Result<IntegralResult> {
    let m = p.dim();
    RegionSpec::Ball(r.clone()).validate(m)?;
    let mut form = ClosedForm::zero();
    let mut lap = p.clone();
    let mut k = 0u32;
    while !lap.is_zero() {
        let c0 = lap.constant_term();
        if !c0.is_zero() {
            let w = ExactScalar::pi_pow_half(m as i64)
                .mul_rational(&(c0 / four_pow_fact(k) * radius_power(r, 2 * k as i64 + m as i64)))
                .div(&gamma_half(m as i64 + 2 + 2 * k as i64)?);
            form.add_scalar(&w);
        }
        lap = lap.laplacian();
        k += 1;
    }
    Ok(IntegralResult { form })
}

/// The iterates `T_k = (Δ - ⟨ω,∂⟩²)^k P` for a fixed integrand and normal,
/// reusable across offsets and regions.
#[derive(Clone, Debug)]
pub struct OperatorChain {
    omega: RationalPoint,
    levels: Vec<Polynomial>,
}

impl OperatorChain {
    pub fn new(p: &Polynomial, omega: &RationalPoint) -> Result<OperatorChain> {
        if omega.dim() != p.dim() {
            return Err(Error::DimensionMismatch { expected: p.dim(), found: omega.dim() });
        }
        if !omega.is_unit() {
            return Err(Error::NotUnit);
        }
        let mut levels = Vec::new();
        let mut cur = p.clone();
        while !cur.is_zero() {
            let d = cur.dir_deriv(omega.coords());
            let next = &cur.laplacian() - &d.dir_deriv(omega.coords());
            levels.push(cur);
            cur = next;
        }
        Ok(OperatorChain { omega: omega.clone(), levels })
    }

    pub fn dim(&self) -> usize {
        self.omega.dim()
    }

    pub fn omega(&self) -> &RationalPoint {
        &self.omega
    }

    /// `T_k`, zero past the end of the chain.
    pub fn level(&self, k: usize) -> Option<&Polynomial> {
        self.levels.get(k)
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    fn at_offset(&self, k: usize, p: &Rational) -> Rational {
        let pt: Vec<Rational> = self.omega.coords().iter().map(|w| w * p).collect();
        self.levels[k].evaluate_slice(&pt)
    }

    /// Integral over `{x ∈ S^(m-1) : ⟨x, ω⟩ = p}`.
    pub fn subsphere(&self, p: &Rational) -> Result<IntegralResult> {
        check_offset(p)?;
        let m = self.dim() as i64;
        let q = Rational::one() - p * p;
        let mut form = ClosedForm::zero();
        for k in 0..self.levels.len() {
            let v = self.at_offset(k, p);
            if v.is_zero() {
                continue;
            }
            let term =
                subsphere_weight(self.dim(), k as u32).mul_rational(&v).mul(&half_power(&q, 2 * k as i64 + m - 2));
            form.add_scalar(&term);
        }
        Ok(IntegralResult { form })
    }

    /// Integral over `{x : ‖x‖ ≤ 1, ⟨x, ω⟩ = p}`.
    pub fn subball(&self, p: &Rational) -> Result<IntegralResult> {
        check_offset(p)?;
        let m = self.dim() as i64;
        let q = Rational::one() - p * p;
        let mut form = ClosedForm::zero();
        for k in 0..self.levels.len() {
            let v = self.at_offset(k, p);
            if v.is_zero() {
                continue;
            }
            let term = ExactScalar::pi_pow_half(m - 1)
                .mul_rational(&(v / four_pow_fact(k as u32)))
                .div(&gamma_half(m + 1 + 2 * k as i64)?)
                .mul(&half_power(&q, 2 * k as i64 + m - 1));
            form.add_scalar(&term);
        }
        Ok(IntegralResult { form })
    }

    /// Integral over the cap `⟨x, ω⟩ > p` (upper) or `< p` (lower), summing
    /// over the homogeneous parts of the integrand.
    pub fn cap(&self, p: &Rational, side: CapSide) -> Result<IntegralResult> {
        check_offset(p)?;
        let m = self.dim();
        let mut form = ClosedForm::zero();
        for (k, level) in self.levels.iter().enumerate() {
            let weight = subsphere_weight(m, k as u32);
            for (d, part) in level.homogeneous_parts() {
                let v = part.evaluate(&self.omega)?;
                if v.is_zero() {
                    continue;
                }
                let l = d + 2 * k as u32;
                let c = cap_coefficient_form(k as u32, l, p, m, side);
                form = form.add(&c.scale(&weight.mul_rational(&v)));
            }
        }
        Ok(IntegralResult { form })
    }
}

/// Integral of `P` over `{x ∈ S^(m-1) : ⟨x, ω⟩ = p}`, `|p| < 1`.
pub fn subsphere_integral(p: &Polynomial, omega: &RationalPoint, offset: &Rational) -> Result<IntegralResult> {
    check_hyperplane(p.dim(), omega, offset)?;
    OperatorChain::new(p, omega)?.subsphere(offset)
}

/// Integral of `P` over the `(m-1)`-ball `{‖x‖ ≤ 1, ⟨x, ω⟩ = p}`.
pub fn subball_integral(p: &Polynomial, omega: &RationalPoint, offset: &Rational) -> Result<IntegralResult> {
    check_hyperplane(p.dim(), omega, offset)?;
    OperatorChain::new(p, omega)?.subball(offset)
}

/// Integral of `P` over a spherical cap.
pub fn cap_integral(p: &Polynomial, omega: &RationalPoint, offset: &Rational, side: CapSide) -> Result<IntegralResult> {
    check_hyperplane(p.dim(), omega, offset)?;
    OperatorChain::new(p, omega)?.cap(offset, side)
}

fn cap_coefficient_form(k: u32, l: u32, p: &Rational, m: usize, side: CapSide) -> ClosedForm {
    let a = l - 2 * k;
    let b_twice = 2 * k as i64 + m as i64 - 3;
    // ∫_0^1 y^a (1-y²)^b dy = Γ((a+1)/2) Γ(b+1) / (2 Γ((l+m)/2))
    let full = gamma_half(a as i64 + 1)
        .and_then(|g| Ok(g.mul(&gamma_half(b_twice + 2)?)))
        .and_then(|g| Ok(g.div(&gamma_half(l as i64 + m as i64)?)))
        .expect("positive Gamma arguments")
        .mul_rational(&Rational::new(BigInt::one(), BigInt::from(2)));
    let tail = PartialBeta { a, b_twice, p: p.clone() };
    let mut form = ClosedForm::zero();
    match side {
        CapSide::Upper => {
            form.add_scalar(&full);
            form.add_tail(&ExactScalar::from_int(-1), tail);
        }
        CapSide::Lower => {
            form.add_scalar(&if a.is_multiple_of(2) { full } else { full.neg() });
            form.add_tail(&ExactScalar::one(), tail);
        }
    }
    form
}

/// `c_(k,l)(p) = ∫_p^1 y^(l-2k) (1-y²)^(k+(m-3)/2) dy` (upper) or the same
/// integrand over `[-1, p]` (lower).
pub fn cap_coefficient(k: u32, l: u32, p: &Rational, m: usize, side: CapSide) -> Result<IntegralResult> {
    if 2 * k > l {
        return Err(Error::CapOrder { k, l });
    }
    if m < 2 {
        return Err(Error::UnsupportedDimension(m));
    }
    check_offset(p)?;
    Ok(IntegralResult { form: cap_coefficient_form(k, l, p, m, side) })
}

/// Whole-sphere integral of a homogeneous `P` of even degree `2s`, expressed
/// through the operators `(Δ - ⟨ω,∂⟩²)^k` at `x = ω`; independent of `ω`.
pub fn modified_sphere_integral(p2s: &Polynomial, omega: &RationalPoint) -> Result<IntegralResult> {
    let m = p2s.dim();
    if omega.dim() != m {
        return Err(Error::DimensionMismatch { expected: m, found: omega.dim() });
    }
    if !omega.is_unit() {
        return Err(Error::NotUnit);
    }
    let Some(deg) = p2s.degree() else { return Ok(IntegralResult { form: ClosedForm::zero() }) };
    if !p2s.is_homogeneous() || deg % 2 == 1 {
        return Err(Error::NotEvenHomogeneous);
    }
    let s = deg / 2;
    let chain = OperatorChain::new(p2s, omega)?;
    let lead = ExactScalar::pi_pow_half(m as i64 - 1).mul_rational(&rint(2)).div(&gamma_half(2 * s as i64 + m as i64)?);
    let mut form = ClosedForm::zero();
    for k in 0..chain.len().min(s as usize + 1) {
        let v = chain.levels[k].evaluate(omega)?;
        if v.is_zero() {
            continue;
        }
        let term = gamma_half(2 * (s as i64 - k as i64) + 1)?.mul_rational(&(v / four_pow_fact(k as u32))).mul(&lead);
        form.add_scalar(&term);
    }
    Ok(IntegralResult { form })
}

/// Integral of `P` over any [`RegionSpec`].
pub fn integrate(p: &Polynomial, region: &RegionSpec) -> Result<IntegralResult> {
    region.validate(p.dim())?;
    match region {
        RegionSpec::UnitSphere => sphere_integral(p, &Rational::one()),
        RegionSpec::RSphere(r) => sphere_integral(p, r),
        RegionSpec::Ball(r) => ball_integral(p, r),
        RegionSpec::Subsphere { omega, p: off } => subsphere_integral(p, omega, off),
        RegionSpec::Subball { omega, p: off } => subball_integral(p, omega, off),
        RegionSpec::CapUpper { omega, p: off } => cap_integral(p, omega, off, CapSide::Upper),
        RegionSpec::CapLower { omega, p: off } => cap_integral(p, omega, off, CapSide::Lower),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn x(m: usize, i: usize) -> Polynomial {
        Polynomial::var(m, i)
    }

    fn pi_times(c: Rational) -> ExactScalar {
        ExactScalar::pi_pow_half(2).mul_rational(&c)
    }

    #[test]
    fn sphere_examples() {
        let one = Rational::one();
        assert_eq!(sphere_integral(&Polynomial::one(3), &one).unwrap().exact(), Some(pi_times(r(4, 1))));
        assert_eq!(sphere_integral(&x(3, 0).pow(2), &one).unwrap().exact(), Some(pi_times(r(4, 3))));
        assert_eq!(sphere_integral(&x(4, 2), &r(3, 2)).unwrap().exact(), Some(ExactScalar::zero()));
        assert!(sphere_integral(&x(3, 0), &r(0, 1)).is_err());
    }

    #[test]
    fn ball_examples() {
        let one = Rational::one();
        assert_eq!(ball_integral(&Polynomial::one(3), &one).unwrap().exact(), Some(pi_times(r(4, 3))));
        assert_eq!(ball_integral(&Polynomial::norm_sq(3), &one).unwrap().exact(), Some(pi_times(r(4, 5))));
        assert_eq!(ball_integral(&x(5, 1), &r(2, 1)).unwrap().exact(), Some(ExactScalar::zero()));
    }

    #[test]
    fn subsphere_examples() {
        let e3 = RationalPoint::basis(3, 2);
        let sqrt3 = ExactScalar::new(Rational::one(), 2, rint(3));
        let v = subsphere_integral(&Polynomial::one(3), &e3, &r(1, 2)).unwrap();
        assert_eq!(v.exact(), Some(sqrt3.clone()));
        let v = subsphere_integral(&x(3, 0).pow(2), &e3, &r(0, 1)).unwrap();
        assert_eq!(v.exact(), Some(pi_times(r(1, 1))));
        let v = subsphere_integral(&x(3, 2), &e3, &r(1, 2)).unwrap();
        assert_eq!(v.exact(), Some(sqrt3.mul_rational(&r(1, 2))));
    }

    #[test]
    fn subball_examples() {
        let e3 = RationalPoint::basis(3, 2);
        let v = subball_integral(&Polynomial::one(3), &e3, &r(0, 1)).unwrap();
        assert_eq!(v.exact(), Some(pi_times(r(1, 1))));
        let v = subball_integral(&Polynomial::one(3), &e3, &r(1, 2)).unwrap();
        assert_eq!(v.exact(), Some(pi_times(r(3, 4))));
        let p = &x(3, 0).pow(2) + &x(3, 1).pow(2);
        assert_eq!(subball_integral(&p, &e3, &r(0, 1)).unwrap().exact(), Some(pi_times(r(1, 2))));
    }

    #[test]
    fn cap_coefficient_examples() {
        for p in [r(0, 1), r(1, 3), r(-2, 5)] {
            let c = cap_coefficient(0, 0, &p, 3, CapSide::Upper).unwrap();
            assert_eq!(c.exact(), Some(ExactScalar::rational(Rational::one() - &p)));
        }
        let c = cap_coefficient(0, 1, &r(0, 1), 3, CapSide::Upper).unwrap();
        assert_eq!(c.exact(), Some(ExactScalar::rational(r(1, 2))));
        let c = cap_coefficient(0, 0, &r(0, 1), 4, CapSide::Upper).unwrap();
        assert_eq!(c.exact(), Some(pi_times(r(1, 4))));
        assert_eq!(cap_coefficient(2, 3, &r(0, 1), 3, CapSide::Upper), Err(Error::CapOrder { k: 2, l: 3 }));
    }

    #[test]
    fn cap_coefficient_reflection() {
        let prec = Precision::new(40);
        for m in 2..=6 {
            for l in 0..=6 {
                for k in 0..=l / 2 {
                    for p in [r(0, 1), r(1, 2), r(-3, 5)] {
                        let lower = cap_coefficient(k, l, &p, m, CapSide::Lower).unwrap();
                        let upper = cap_coefficient(k, l, &-p.clone(), m, CapSide::Upper).unwrap();
                        let upper = if l % 2 == 0 { upper.form().clone() } else { upper.form().neg() };
                        let diff = lower.form().sub(&upper);
                        assert!(diff.numeric(prec).to_f64().abs() < 1e-35, "m={m} l={l} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn cap_examples() {
        let e3 = RationalPoint::basis(3, 2);
        for p in [r(0, 1), r(1, 2), r(-3, 5)] {
            let v = cap_integral(&Polynomial::one(3), &e3, &p, CapSide::Upper).unwrap();
            assert_eq!(v.exact(), Some(pi_times(rint(2) * (Rational::one() - &p))));
        }
        let v = cap_integral(&x(3, 2), &e3, &r(0, 1), CapSide::Upper).unwrap();
        assert_eq!(v.exact(), Some(pi_times(r(1, 1))));
    }

    #[test]
    fn caps_are_complementary() {
        let w = RationalPoint::unit(alloc::vec![r(3, 5), r(4, 5), r(0, 1), r(0, 1)]).unwrap();
        let p = &(&x(4, 0).pow(3) * &x(4, 1)) + &(&x(4, 2).pow(2) - &x(4, 3).scale(&r(2, 7)));
        for off in [r(0, 1), r(1, 2), r(-3, 5)] {
            let up = cap_integral(&p, &w, &off, CapSide::Upper).unwrap();
            let lo = cap_integral(&p, &w, &off, CapSide::Lower).unwrap();
            assert_eq!(up.add(&lo), sphere_integral(&p, &Rational::one()).unwrap());
        }
    }

    #[test]
    fn modified_sphere_examples() {
        let e3 = RationalPoint::basis(3, 2);
        let w = RationalPoint::unit(alloc::vec![r(3, 5), r(4, 5), r(0, 1)]).unwrap();
        let x1sq = x(3, 0).pow(2);
        assert_eq!(modified_sphere_integral(&x1sq, &e3).unwrap().exact(), Some(pi_times(r(4, 3))));
        assert_eq!(modified_sphere_integral(&x1sq, &w).unwrap().exact(), Some(pi_times(r(4, 3))));
        for m in 2..=6 {
            let v = modified_sphere_integral(&Polynomial::norm_sq(m), &RationalPoint::basis(m, 0)).unwrap();
            assert_eq!(v.exact(), Some(sigma(m)));
        }
        assert_eq!(modified_sphere_integral(&x(3, 0), &e3), Err(Error::NotEvenHomogeneous));
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(2), pi_times(r(2, 1)));
        assert_eq!(sigma(3), pi_times(r(4, 1)));
        assert_eq!(sigma(4), ExactScalar::pi_pow_half(4).mul_rational(&r(2, 1)));
    }
}
