//! Exact scalars of the form `rational * pi^(h/2) * sqrt(q)`, the special
//! values (Gamma at half-integers, Pochhammer symbols, terminating and
//! Gauss-summed 2F1) that generate them, and the numeric fallback.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::float::{bits_for_digits, Float};
use crate::Rational;

/// Decimal digits carried by numeric renderings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const DEFAULT: Precision = Precision(30);
    pub const MIN_DIGITS: u32 = 15;

    /// Precision with at least [`Precision::MIN_DIGITS`] digits.
    pub fn new(digits: u32) -> Precision {
        Precision(digits.max(Self::MIN_DIGITS))
    }

    pub fn digits(self) -> u32 {
        self.0
    }

    pub fn bits(self) -> u32 {
        bits_for_digits(self.0)
    }

    pub fn extended(self, extra: u32) -> Precision {
        Precision(self.0 + extra)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DEFAULT
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Split `n >= 0` as `outside^2 * inside` with `inside` square-free.
///
/// Trial division runs up to a fixed bound; a cofactor left over after that is
/// only checked for being a perfect square.
fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut inside = BigInt::one();
    let mut d = BigInt::from(2u32);
    let bound = BigInt::from(100_000u32);
    while &d * &d <= rest && d <= bound {
        let mut count = 0u32;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            count += 1;
        }
        for _ in 0..count / 2 {
            outside *= &d;
        }
        if count % 2 == 1 {
            inside *= &d;
        }
        d += if d == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigInt::one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            outside *= r;
        } else {
            inside *= rest;
        }
    }
    (outside, inside)
}

/// Exact value `coeff * pi^(pi_half/2) * sqrt(sqrt_arg)`.
///
/// `sqrt_arg` is kept as a square-free non-negative integer; a zero value is
/// always stored as `0 * pi^0 * sqrt(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar {
    coeff: Rational,
    pi_half: i64,
    sqrt_arg: BigInt,
}

impl ExactScalar {
    pub fn new(coeff: Rational, pi_half: i64, sqrt_arg: Rational) -> ExactScalar {
        assert!(!sqrt_arg.is_negative(), "square root argument must be non-negative");
        if coeff.is_zero() || sqrt_arg.is_zero() {
            return ExactScalar::zero();
        }
        // sqrt(a/b) = sqrt(a*b)/b
        let den = sqrt_arg.denom().clone();
        let prod = sqrt_arg.numer() * &den;
        let (outside, inside) = square_free_split(&prod);
        ExactScalar { coeff: coeff * Rational::new(outside, den), pi_half, sqrt_arg: inside }
    }

    pub fn zero() -> ExactScalar {
        ExactScalar { coeff: Rational::zero(), pi_half: 0, sqrt_arg: BigInt::one() }
    }

    pub fn one() -> ExactScalar {
        ExactScalar::rational(Rational::one())
    }

    pub fn rational(r: Rational) -> ExactScalar {
        if r.is_zero() {
            return ExactScalar::zero();
        }
        ExactScalar { coeff: r, pi_half: 0, sqrt_arg: BigInt::one() }
    }

    pub fn from_int(n: i64) -> ExactScalar {
        ExactScalar::rational(rint(n))
    }

    /// `pi^(h/2)`.
    pub fn pi_pow_half(h: i64) -> ExactScalar {
        ExactScalar { coeff: Rational::one(), pi_half: h, sqrt_arg: BigInt::one() }
    }

    pub fn sqrt_of(q: Rational) -> ExactScalar {
        ExactScalar::new(Rational::one(), 0, q)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_half(&self) -> i64 {
        self.pi_half
    }

    pub fn sqrt_arg(&self) -> Rational {
        Rational::from_integer(self.sqrt_arg.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Rational value when there is no pi or root factor.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.pi_half == 0 && self.sqrt_arg.is_one()).then_some(&self.coeff)
    }

    pub fn same_class(&self, other: &ExactScalar) -> bool {
        self.pi_half == other.pi_half && self.sqrt_arg == other.sqrt_arg
    }

    /// The unit-coefficient scalar `pi^(h/2) * sqrt(q)` of this class.
    pub fn class(&self) -> ExactScalar {
        ExactScalar { coeff: Rational::one(), pi_half: self.pi_half, sqrt_arg: self.sqrt_arg.clone() }
    }

    pub fn mul(&self, other: &ExactScalar) -> ExactScalar {
        if self.is_zero() || other.is_zero() {
            return ExactScalar::zero();
        }
        let prod = &self.sqrt_arg * &other.sqrt_arg;
        let (outside, inside) = square_free_split(&prod);
        ExactScalar {
            coeff: &self.coeff * &other.coeff * Rational::from_integer(outside),
            pi_half: self.pi_half + other.pi_half,
            sqrt_arg: inside,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> ExactScalar {
        if r.is_zero() {
            return ExactScalar::zero();
        }
        ExactScalar { coeff: &self.coeff * r, pi_half: self.pi_half, sqrt_arg: self.sqrt_arg.clone() }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> ExactScalar {
        assert!(!self.is_zero(), "inverse of zero");
        // 1/(c pi^(h/2) sqrt(q)) = 1/(c q) pi^(-h/2) sqrt(q)
        let q = Rational::from_integer(self.sqrt_arg.clone());
        ExactScalar { coeff: (&self.coeff * q).recip(), pi_half: -self.pi_half, sqrt_arg: self.sqrt_arg.clone() }
    }

    pub fn div(&self, other: &ExactScalar) -> ExactScalar {
        self.mul(&other.inv())
    }

    pub fn neg(&self) -> ExactScalar {
        ExactScalar { coeff: -self.coeff.clone(), pi_half: self.pi_half, sqrt_arg: self.sqrt_arg.clone() }
    }

    pub fn powi(&self, n: i64) -> ExactScalar {
        if n < 0 {
            return self.inv().powi(-n);
        }
        let mut acc = ExactScalar::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sum when both operands share a class (or one is zero).
    pub fn checked_add(&self, other: &ExactScalar) -> Option<ExactScalar> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        if !self.same_class(other) {
            return None;
        }
        let c = &self.coeff + &other.coeff;
        if c.is_zero() {
            return Some(ExactScalar::zero());
        }
        Some(ExactScalar { coeff: c, pi_half: self.pi_half, sqrt_arg: self.sqrt_arg.clone() })
    }

    pub fn to_float(&self, bits: u32) -> Float {
        if self.is_zero() {
            return Float::zero(bits);
        }
        let work = bits + 16;
        let mut v = Float::from_rational(&self.coeff, work);
        if self.pi_half != 0 {
            let pi = Float::pi(work);
            v = v * pi.powi(self.pi_half.div_euclid(2));
            if self.pi_half.rem_euclid(2) == 1 {
                v = v * pi.sqrt();
            }
        }
        if !self.sqrt_arg.is_one() {
            v = v * Float::from_bigint(self.sqrt_arg.clone(), work).sqrt();
        }
        v.with_precision(bits)
    }

    pub fn numeric(&self, precision: Precision) -> NumericScalar {
        NumericScalar::new(self.to_float(precision.bits()), precision)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        match self.pi_half {
            0 => {}
            1 => write!(f, "*sqrt(pi)")?,
            2 => write!(f, "*pi")?,
            h if h % 2 == 0 => write!(f, "*pi^{}", h / 2)?,
            h => write!(f, "*pi^({}/2)", h)?,
        }
        if !self.sqrt_arg.is_one() {
            write!(f, "*sqrt({})", self.sqrt_arg)?;
        }
        Ok(())
    }
}

/// Floating value carried at a fixed number of decimal digits.
#[derive(Clone, Debug)]
pub struct NumericScalar {
    value: Float,
    precision: Precision,
}

impl NumericScalar {
    pub fn new(value: Float, precision: Precision) -> NumericScalar {
        NumericScalar { value: value.with_precision(precision.bits()), precision }
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn to_decimal(&self) -> String {
        self.value.to_decimal(self.precision.digits())
    }
}

impl fmt::Display for NumericScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

/// Result of adding two exact scalars: exact when they share a class,
/// otherwise a numeric value flagged as inexact.
#[derive(Clone, Debug)]
pub enum ScalarSum {
    Exact(ExactScalar),
    Numeric(NumericScalar),
}

impl ScalarSum {
    pub fn is_exact(&self) -> bool {
        matches!(self, ScalarSum::Exact(_))
    }
}

pub fn exact_add(a: &ExactScalar, b: &ExactScalar, precision: Precision) -> ScalarSum {
    match a.checked_add(b) {
        Some(s) => ScalarSum::Exact(s),
        None => {
            let bits = precision.bits() + 8;
            ScalarSum::Numeric(NumericScalar::new(a.to_float(bits) + b.to_float(bits), precision))
        }
    }
}

/// Γ(two_n / 2) for a positive integer or half-integer argument.
pub fn gamma_half(two_n: i64) -> Result<ExactScalar> {
    if two_n <= 0 {
        return Err(Error::NonPositiveGamma { two_n });
    }
    gamma_nonpole(two_n)
}

/// Γ(two_n / 2) for any argument that is not a pole (negative half-integers
/// are reached through the Pochhammer recurrence).
pub fn gamma_nonpole(two_n: i64) -> Result<ExactScalar> {
    if two_n <= 0 && two_n % 2 == 0 {
        return Err(Error::NonPositiveGamma { two_n });
    }
    if two_n > 0 && two_n % 2 == 0 {
        let n = (two_n / 2) as u64;
        return Ok(ExactScalar::rational(Rational::from_integer(factorial(n - 1))));
    }
    if two_n > 0 {
        // Γ(j + 1/2) = (2j)! / (4^j j!) sqrt(pi)
        let j = ((two_n - 1) / 2) as u64;
        let c = Rational::new(factorial(2 * j), BigInt::from(4u32).pow(j as u32) * factorial(j));
        return Ok(ExactScalar::pi_pow_half(1).mul_rational(&c));
    }
    // negative half-integer: Γ(x) = Γ(1/2) / (x)_N with x + N = 1/2
    let steps = ((1 - two_n) / 2) as u64;
    let poch = pochhammer(two_n, steps);
    Ok(ExactScalar::pi_pow_half(1).mul_rational(&poch.recip()))
}

/// Rising factorial (a)_n with a = a_twice / 2.
pub fn pochhammer(a_twice: i64, n: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n as i64 {
        acc *= rat(a_twice + 2 * i, 2);
    }
    acc
}

fn is_nonpositive_integer(x_twice: i64) -> bool {
    x_twice <= 0 && x_twice % 2 == 0
}

/// Terminating 2F1(-n, b; c; z) as an exact finite sum.
pub fn hyp2f1_terminating(n: u64, b_twice: i64, c_twice: i64, z: &Rational) -> Result<Rational> {
    if is_nonpositive_integer(c_twice) && ((-c_twice / 2) as u64) < n {
        return Err(Error::HypergeometricPole { c_twice });
    }
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for l in 0..n as i64 {
        // t_{l+1} = t_l (l - n)(b + l) z / ((c + l)(l + 1))
        term = term * rint(l - n as i64) * rat(b_twice + 2 * l, 2) * z / (rat(c_twice + 2 * l, 2) * rint(l + 1));
        sum += &term;
    }
    Ok(sum)
}

/// 2F1(a, b; c; 1) by Gauss summation. Terminating series (a or b a
/// non-positive integer) go through the Chu-Vandermonde Pochhammer ratio so
/// that no Gamma pole is ever evaluated; they need no convergence condition.
pub fn gauss_2f1_at_one(a_twice: i64, b_twice: i64, c_twice: i64) -> Result<ExactScalar> {
    for (t, other) in [(a_twice, b_twice), (b_twice, a_twice)] {
        if is_nonpositive_integer(t) {
            let n = (-t / 2) as u64;
            if is_nonpositive_integer(c_twice) && ((-c_twice / 2) as u64) < n {
                return Err(Error::HypergeometricPole { c_twice });
            }
            // (c - b)_n / (c)_n
            let num = pochhammer(c_twice - other, n);
            let den = pochhammer(c_twice, n);
            return Ok(ExactScalar::rational(num / den));
        }
    }
    if c_twice <= a_twice + b_twice {
        return Err(Error::Convergence);
    }
    if is_nonpositive_integer(c_twice) {
        return Err(Error::HypergeometricPole { c_twice });
    }
    if is_nonpositive_integer(c_twice - a_twice) || is_nonpositive_integer(c_twice - b_twice) {
        return Ok(ExactScalar::zero());
    }
    let num = gamma_nonpole(c_twice)?.mul(&gamma_nonpole(c_twice - a_twice - b_twice)?);
    let den = gamma_nonpole(c_twice - a_twice)?.mul(&gamma_nonpole(c_twice - b_twice)?);
    Ok(num.div(&den))
}

/// `∫_0^p y^a (1 - y^2)^b dy` with `b = b_twice / 2 > -1`, `|p| < 1`.
///
/// Equals `p^(a+1)/(a+1) * 2F1(-b, (a+1)/2; (a+3)/2; p^2)`. The value is
/// rational when `b` is a non-negative integer; otherwise it is kept as a
/// symbol and evaluated by the hypergeometric series.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBeta {
    pub a: u32,
    pub b_twice: i64,
    pub p: Rational,
}

impl PartialBeta {
    pub fn exact(&self) -> Option<Rational> {
        if self.b_twice < 0 || self.b_twice % 2 != 0 {
            return None;
        }
        // expand (1 - y^2)^b and integrate term by term
        let b = (self.b_twice / 2) as u64;
        let mut sum = Rational::zero();
        for i in 0..=b {
            let e = self.a as u64 + 2 * i + 1;
            let mut t = Rational::from_integer(binomial(b, i)) * self.p.pow(e as i32) / rint(e as i64);
            if i % 2 == 1 {
                t = -t;
            }
            sum += t;
        }
        Some(sum)
    }

    pub fn to_float(&self, bits: u32) -> Float {
        if let Some(r) = self.exact() {
            return Float::from_rational(&r, bits);
        }
        if self.p.is_zero() {
            return Float::zero(bits);
        }
        let work = bits + 32;
        let z = Float::from_rational(&(&self.p * &self.p), work);
        let mut term = Float::from_i64(1, work);
        let mut sum = term.clone();
        let a1_twice = self.a as i64 + 1;
        let scale = Float::from_parts(BigInt::one(), work as i64 + 8, work);
        let mut l: i64 = 0;
        loop {
            // ratio ((-b)+l)((a+1)/2+l) / (((a+3)/2+l)(l+1)) * z
            let factor =
                rat(-self.b_twice + 2 * l, 2) * rat(a1_twice + 2 * l, 2) / (rat(a1_twice + 2 + 2 * l, 2) * rint(l + 1));
            if factor.is_zero() {
                break;
            }
            term = term * Float::from_rational(&factor, work) * &z;
            sum = sum + &term;
            l += 1;
            // the term ratio tends to p² < 1; stop once |term| < 2^-eps |sum|
            if term.is_zero() || (term.abs() * &scale).cmp_value(&sum.abs()) == core::cmp::Ordering::Less {
                break;
            }
        }
        let lead = Float::from_rational(&(self.p.pow(self.a as i32 + 1) / rint(self.a as i64 + 1)), work);
        (lead * sum).with_precision(bits)
    }
}

/// Symbolic factor of a closed-form atom: `pi^(h/2) sqrt(q)` times an optional
/// [`PartialBeta`] value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub pi_half: i64,
    pub sqrt_arg: BigInt,
    pub tail: Option<PartialBeta>,
}

/// Exact rational linear combination of [`Atom`]s.
///
/// Integrals whose terms fall into more than one scalar class are still held
/// exactly here; [`ClosedForm::as_scalar`] collapses to an [`ExactScalar`]
/// when a single class remains.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosedForm {
    terms: BTreeMap<Atom, Rational>,
}

impl ClosedForm {
    pub fn zero() -> ClosedForm {
        ClosedForm::default()
    }

    pub fn from_scalar(s: &ExactScalar) -> ClosedForm {
        let mut out = ClosedForm::zero();
        out.add_scalar(s);
        out
    }

    fn add_atom(&mut self, atom: Atom, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(atom.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&atom);
        }
    }

    pub fn add_scalar(&mut self, s: &ExactScalar) {
        if s.is_zero() {
            return;
        }
        let atom = Atom { pi_half: s.pi_half, sqrt_arg: s.sqrt_arg.clone(), tail: None };
        self.add_atom(atom, s.coeff.clone());
    }

    /// Adds `weight * tail`, folding rational tails into the weight. Tails
    /// are stored with `p > 0`: the integrand has parity `a`, so
    /// `F(-p) = (-1)^(a+1) F(p)`.
    pub fn add_tail(&mut self, weight: &ExactScalar, mut tail: PartialBeta) {
        if weight.is_zero() {
            return;
        }
        let mut weight = weight.clone();
        if tail.p.is_negative() {
            tail.p = -tail.p;
            if tail.a.is_multiple_of(2) {
                weight = weight.neg();
            }
        }
        match tail.exact() {
            Some(r) => self.add_scalar(&weight.mul_rational(&r)),
            None => {
                if tail.p.is_zero() {
                    return;
                }
                let atom = Atom { pi_half: weight.pi_half, sqrt_arg: weight.sqrt_arg.clone(), tail: Some(tail) };
                self.add_atom(atom, weight.coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &ClosedForm) -> ClosedForm {
        let mut out = self.clone();
        for (atom, c) in &other.terms {
            out.add_atom(atom.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> ClosedForm {
        ClosedForm { terms: self.terms.iter().map(|(a, c)| (a.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &ClosedForm) -> ClosedForm {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &ExactScalar) -> ClosedForm {
        let mut out = ClosedForm::zero();
        for (atom, c) in &self.terms {
            let base = ExactScalar { coeff: c.clone(), pi_half: atom.pi_half, sqrt_arg: atom.sqrt_arg.clone() };
            let scaled = base.mul(s);
            if scaled.is_zero() {
                continue;
            }
            let new_atom = Atom { pi_half: scaled.pi_half, sqrt_arg: scaled.sqrt_arg.clone(), tail: atom.tail.clone() };
            out.add_atom(new_atom, scaled.coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Atom, &Rational)> {
        self.terms.iter()
    }

    pub fn as_scalar(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => {
                let (atom, c) = self.terms.iter().next()?;
                if atom.tail.is_some() {
                    return None;
                }
                Some(ExactScalar { coeff: c.clone(), pi_half: atom.pi_half, sqrt_arg: atom.sqrt_arg.clone() })
            }
            _ => None,
        }
    }

    pub fn to_float(&self, bits: u32) -> Float {
        let work = bits + 16;
        let mut acc = Float::zero(work);
        for (atom, c) in &self.terms {
            let base = ExactScalar { coeff: c.clone(), pi_half: atom.pi_half, sqrt_arg: atom.sqrt_arg.clone() };
            let mut v = base.to_float(work);
            if let Some(t) = &atom.tail {
                v = v * t.to_float(work);
            }
            acc = acc + v;
        }
        acc.with_precision(bits)
    }

    pub fn numeric(&self, precision: Precision) -> NumericScalar {
        NumericScalar::new(self.to_float(precision.bits()), precision)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (atom, c) in &self.terms {
            let base = ExactScalar { coeff: c.clone(), pi_half: atom.pi_half, sqrt_arg: atom.sqrt_arg.clone() };
            let mut s = alloc::format!("{}", base);
            if let Some(t) = &atom.tail {
                s.push_str(&alloc::format!("*B(a={},b={}/2,p={})", t.a, t.b_twice, t.p));
            }
            parts.push(s);
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Ratio of two integers as an exact scalar; convenience for tests and tables.
pub fn ratio(n: i64, d: i64) -> ExactScalar {
    ExactScalar::rational(rat(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_half_examples() {
        assert_eq!(gamma_half(1).unwrap(), ExactScalar::pi_pow_half(1));
        assert_eq!(gamma_half(5).unwrap(), ExactScalar::pi_pow_half(1).mul_rational(&rat(3, 4)));
        assert_eq!(gamma_half(8).unwrap(), ExactScalar::from_int(6));
        assert_eq!(gamma_half(0), Err(Error::NonPositiveGamma { two_n: 0 }));
        assert_eq!(gamma_half(-1), Err(Error::NonPositiveGamma { two_n: -1 }));
    }

    #[test]
    fn gamma_negative_half_integers() {
        // Γ(-1/2) = -2 sqrt(pi), Γ(-3/2) = 4/3 sqrt(pi)
        assert_eq!(gamma_nonpole(-1).unwrap(), ExactScalar::pi_pow_half(1).mul_rational(&rint(-2)));
        assert_eq!(gamma_nonpole(-3).unwrap(), ExactScalar::pi_pow_half(1).mul_rational(&rat(4, 3)));
        assert!(gamma_nonpole(-2).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(-2, 0), rint(1));
        assert_eq!(pochhammer(1, 3), rat(15, 8));
        assert_eq!(pochhammer(-1, 2), rat(-1, 4));
    }

    #[test]
    fn hyp2f1_terminating_examples() {
        let z = rat(2, 7);
        assert_eq!(hyp2f1_terminating(1, 2, 4, &z).unwrap(), rint(1) - &z / rint(2));
        assert_eq!(hyp2f1_terminating(0, 5, 3, &z).unwrap(), rint(1));
        assert_eq!(hyp2f1_terminating(1, 1, 3, &rint(1)).unwrap(), rat(2, 3));
        assert!(hyp2f1_terminating(3, 1, -2, &z).is_err());
    }

    #[test]
    fn gauss_summation_examples() {
        assert_eq!(gauss_2f1_at_one(-2, 1, 3).unwrap(), ratio(2, 3));
        assert_eq!(gauss_2f1_at_one(0, 0, 5).unwrap(), ExactScalar::one());
        // terminating-sum oracle: 1 - 6 + 5 = 0
        let oracle = hyp2f1_terminating(2, 3, 1, &rint(1)).unwrap();
        assert_eq!(oracle, rint(0));
        assert_eq!(gauss_2f1_at_one(-4, 3, 1).unwrap(), ExactScalar::rational(oracle));
        assert_eq!(gauss_2f1_at_one(1, 1, 2), Err(Error::Convergence));
    }

    #[test]
    fn gauss_summation_non_terminating() {
        // 2F1(1/2, 1/2; 2; 1) = Γ(2)Γ(1)/Γ(3/2)^2 = 4/pi
        let v = gauss_2f1_at_one(1, 1, 4).unwrap();
        assert_eq!(v, ExactScalar::pi_pow_half(-2).mul_rational(&rint(4)));
    }

    #[test]
    fn exact_add_examples() {
        let pi = ExactScalar::pi_pow_half(2);
        let p = Precision::DEFAULT;
        match exact_add(&pi.mul_rational(&rint(2)), &pi.mul_rational(&rint(3)), p) {
            ScalarSum::Exact(s) => assert_eq!(s, pi.mul_rational(&rint(5))),
            _ => panic!("expected exact"),
        }
        match exact_add(&pi, &ExactScalar::zero(), p) {
            ScalarSum::Exact(s) => assert_eq!(s, pi),
            _ => panic!("expected exact"),
        }
        match exact_add(&ExactScalar::pi_pow_half(1), &pi, p) {
            ScalarSum::Numeric(n) => assert_eq!(n.to_decimal(), "4.91404650449530926576081086662"),
            _ => panic!("expected numeric"),
        }
    }

    #[test]
    fn sqrt_canonicalization() {
        let s = ExactScalar::sqrt_of(rat(3, 4));
        assert_eq!(s.coeff(), &rat(1, 2));
        assert_eq!(s.sqrt_arg(), rint(3));
        let t = ExactScalar::sqrt_of(rat(8, 3));
        // sqrt(8/3) = 2 sqrt(6) / 3
        assert_eq!(t.coeff(), &rat(2, 3));
        assert_eq!(t.sqrt_arg(), rint(6));
        assert_eq!(s.mul(&s), ratio(3, 4));
        assert_eq!(t.inv().mul(&t), ExactScalar::one());
    }

    #[test]
    fn legendre_duplication() {
        for m in 3..=12i64 {
            let lhs = gamma_half(m - 2).unwrap().mul(&gamma_half(m - 1).unwrap());
            let rhs = ExactScalar::pi_pow_half(1)
                .mul_rational(&Rational::new(factorial((m - 3) as u64), BigInt::from(2).pow((m - 3) as u32)));
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn reflection_products() {
        // Γ(k + 1/2) Γ(1/2 - k) = (-1)^k pi
        for k in 0..=8i64 {
            let prod = gamma_half(2 * k + 1).unwrap().mul(&gamma_nonpole(1 - 2 * k).unwrap());
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(prod, ExactScalar::pi_pow_half(2).mul_rational(&rint(sign)));
        }
    }

    #[test]
    fn double_factorial_identity() {
        for k in 0..=10u64 {
            let lhs = Rational::new(factorial(2 * k), BigInt::from(2).pow(2 * k as u32) * factorial(k));
            let rhs = gamma_half(2 * k as i64 + 1).unwrap().div(&ExactScalar::pi_pow_half(1));
            assert_eq!(ExactScalar::rational(lhs), rhs);
        }
    }

    #[test]
    fn partial_beta_exact_and_series_agree() {
        let bits = Precision::new(40).bits();
        // b integer: exact; b half integer: compare series with known closed form
        let t = PartialBeta { a: 1, b_twice: 2, p: rat(1, 2) };
        // ∫_0^{1/2} y (1 - y^2) dy = 1/8 - 1/64 = 7/64
        assert_eq!(t.exact().unwrap(), rat(7, 64));
        // ∫_0^p y (1-y^2)^{1/2} dy = (1 - (1-p^2)^{3/2}) / 3, p = 3/5 -> (1 - 64/125)/3 = 61/375
        let h = PartialBeta { a: 1, b_twice: 1, p: rat(3, 5) };
        let v = h.to_float(bits);
        let expect = Float::from_rational(&rat(61, 375), bits);
        assert!((v - expect).abs().to_f64() < 1e-38);
        // odd sign for negative p with odd a+1
        let hn = PartialBeta { a: 0, b_twice: 1, p: rat(-3, 5) };
        let hp = PartialBeta { a: 0, b_twice: 1, p: rat(3, 5) };
        assert!((hn.to_float(bits) + hp.to_float(bits)).abs().to_f64() < 1e-38);
    }

    #[test]
    fn closed_form_collapses() {
        let mut c = ClosedForm::zero();
        c.add_scalar(&ExactScalar::pi_pow_half(2));
        c.add_scalar(&ExactScalar::pi_pow_half(2).mul_rational(&rint(2)));
        assert_eq!(c.as_scalar(), Some(ExactScalar::pi_pow_half(2).mul_rational(&rint(3))));
        c.add_scalar(&ExactScalar::one());
        assert_eq!(c.as_scalar(), None);
        let tail = PartialBeta { a: 0, b_twice: 1, p: rat(1, 2) };
        let mut d = ClosedForm::zero();
        d.add_tail(&ExactScalar::one(), tail.clone());
        d.add_tail(&ExactScalar::from_int(-1), tail);
        assert!(d.is_zero());
    }

    #[test]
    fn numeric_rendering() {
        let v = ExactScalar::pi_pow_half(2).mul_rational(&rat(4, 3));
        assert_eq!(v.numeric(Precision::DEFAULT).to_decimal(), "4.18879020478639098461685784437");
    }
}
