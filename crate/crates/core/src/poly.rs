//! Sparse multivariate polynomials over the rationals and the differential
//! operators built from Δ, ⟨ω,∂⟩, the Euler operator and ‖x‖².

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::Rational;

/// Exponent vector of a monomial, ordered graded-lexicographically
/// (total degree first, then exponents compared from `x1` onwards).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Monomial {
        Monomial { degree: exps.iter().map(|&e| e as u32).sum(), exps: SmallVec::from_slice(exps) }
    }

    pub fn one(dim: usize) -> Monomial {
        Monomial { degree: 0, exps: SmallVec::from_elem(0, dim) }
    }

    pub fn var(dim: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(dim);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    fn with_delta(&self, i: usize, delta: i32) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = (m.exps[i] as i32 + delta) as u16;
        m.degree = (m.degree as i32 + delta) as u32;
        m
    }

    /// All monomials of total degree `d` in `dim` variables, in descending
    /// graded-lex order.
    pub fn all_of_degree(dim: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; dim];
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(Monomial::new(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
        }
        if dim == 0 {
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parity of a polynomial under `x -> -x`. The zero polynomial counts as even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// Point of `Q^m`, flagged when it lies exactly on the unit sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    coords: Vec<Rational>,
    on_unit_sphere: bool,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> RationalPoint {
        let n2: Rational = coords.iter().map(|c| c * c).sum();
        RationalPoint { on_unit_sphere: n2.is_one(), coords }
    }

    /// Point that must lie on the unit sphere.
    pub fn unit(coords: Vec<Rational>) -> Result<RationalPoint> {
        let p = RationalPoint::new(coords);
        if p.on_unit_sphere {
            Ok(p)
        } else {
            Err(Error::NotUnit)
        }
    }

    pub fn from_ints(coords: &[i64]) -> RationalPoint {
        RationalPoint::new(coords.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    /// Standard basis vector `e_{i+1}`.
    pub fn basis(dim: usize, i: usize) -> RationalPoint {
        let mut c = vec![Rational::zero(); dim];
        c[i] = Rational::one();
        RationalPoint { coords: c, on_unit_sphere: true }
    }

    /// Inverse stereographic image of `u in Q^(m-1)`:
    /// `(2u, |u|^2 - 1) / (|u|^2 + 1)`, always an exact unit vector.
    pub fn stereographic(u: &[Rational]) -> RationalPoint {
        let s: Rational = u.iter().map(|c| c * c).sum();
        let den = &s + Rational::one();
        let mut coords: Vec<Rational> = u.iter().map(|c| Rational::from_integer(BigInt::from(2)) * c / &den).collect();
        coords.push((&s - Rational::one()) / &den);
        RationalPoint { coords, on_unit_sphere: true }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_unit(&self) -> bool {
        self.on_unit_sphere
    }

    pub fn neg(&self) -> RationalPoint {
        RationalPoint { coords: self.coords.iter().map(|c| -c.clone()).collect(), on_unit_sphere: self.on_unit_sphere }
    }

    pub fn scale(&self, s: &Rational) -> RationalPoint {
        RationalPoint::new(self.coords.iter().map(|c| c * s).collect())
    }

    pub fn dot(&self, other: &RationalPoint) -> Rational {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }
}

/// Exact rational square matrix, stored by rows.
pub type Matrix = Vec<Vec<Rational>>;

/// Householder reflection `I - 2 v v^T / (v^T v)`; rational and orthogonal.
pub fn householder(v: &[Rational]) -> Matrix {
    let n2: Rational = v.iter().map(|c| c * c).sum();
    let two = Rational::from_integer(BigInt::from(2));
    (0..v.len())
        .map(|i| {
            (0..v.len())
                .map(|j| {
                    let id = if i == j { Rational::one() } else { Rational::zero() };
                    id - &two * &v[i] * &v[j] / &n2
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

pub fn mat_vec(a: &Matrix, v: &RationalPoint) -> RationalPoint {
    RationalPoint::new(a.iter().map(|row| row.iter().zip(v.coords()).map(|(x, y)| x * y).sum()).collect())
}

pub fn is_orthogonal(m: &Matrix) -> bool {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let s: Rational = (0..n).map(|k| &m[k][i] * &m[k][j]).sum();
            if s != if i == j { Rational::one() } else { Rational::zero() } {
                return false;
            }
        }
    }
    true
}

/// `ℓ! / (ℓ - j)!`: the factor with which `⟨ω,∂⟩^j` acts on a degree-ℓ
/// homogeneous polynomial evaluated at `x = ω`.
pub fn falling_factorial(l: u32, j: u32) -> BigInt {
    if j > l {
        return BigInt::zero();
    }
    (l - j + 1..=l).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
}

/// Multivariate polynomial in a fixed number of variables `x1..xm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero(dim: usize) -> Polynomial {
        Polynomial { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: Rational) -> Polynomial {
        Polynomial::term(Monomial::one(dim), c)
    }

    pub fn one(dim: usize) -> Polynomial {
        Polynomial::constant(dim, Rational::one())
    }

    /// The coordinate `x_{i+1}` (zero-based index).
    pub fn var(dim: usize, i: usize) -> Polynomial {
        Polynomial::term(Monomial::var(dim, i), Rational::one())
    }

    pub fn term(mono: Monomial, c: Rational) -> Polynomial {
        let dim = mono.dim();
        let mut p = Polynomial::zero(dim);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(dim: usize, terms: I) -> Polynomial {
        let mut p = Polynomial::zero(dim);
        for (m, c) in terms {
            assert_eq!(m.dim(), dim, "monomial dimension mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// `‖x‖² = x1² + … + xm²`.
    pub fn norm_sq(dim: usize) -> Polynomial {
        Polynomial::from_terms(dim, (0..dim).map(|i| (Monomial::var(dim, i).with_delta(i, 1), Rational::one())))
    }

    /// Linear form `⟨a, x⟩`.
    pub fn linear(a: &[Rational]) -> Polynomial {
        let dim = a.len();
        Polynomial::from_terms(dim, a.iter().enumerate().map(|(i, c)| (Monomial::var(dim, i), c.clone())))
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.dim))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(first) => it.all(|m| m.degree == first.degree),
        }
    }

    pub fn parity(&self) -> Parity {
        let even = self.terms.keys().any(|m| m.degree % 2 == 0);
        let odd = self.terms.keys().any(|m| m.degree % 2 == 1);
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Keeps only the terms of even (or odd) total degree.
    pub fn parity_part(&self, odd: bool) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| (m.degree % 2 == 1) == odd)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial { dim: self.dim, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, s: &Rational) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, s: &Rational) -> Polynomial {
        Polynomial { dim: self.dim, terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c * s)).collect() }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.dim);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `∂P/∂x_{i+1}`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e > 0 {
                out.add_term(m.with_delta(i, -1), c * int(e as i64));
            }
        }
        out
    }

    pub fn laplacian(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            for i in 0..self.dim {
                let e = m.exps[i] as i64;
                if e >= 2 {
                    out.add_term(m.with_delta(i, -2), c * int(e * (e - 1)));
                }
            }
        }
        out
    }

    pub fn laplacian_power(&self, k: u32) -> Polynomial {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = p.laplacian();
        }
        p
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: n });
        }
        Ok(())
    }

    /// `⟨ω,∂⟩ P` for any rational vector `ω`.
    pub fn dir_deriv(&self, omega: &[Rational]) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            for (i, w) in omega.iter().enumerate() {
                let e = m.exps[i];
                if e > 0 && !w.is_zero() {
                    out.add_term(m.with_delta(i, -1), c * w * int(e as i64));
                }
            }
        }
        out
    }

    /// `⟨ω,∂⟩^j P`.
    pub fn dir_deriv_power(&self, omega: &RationalPoint, j: u32) -> Result<Polynomial> {
        self.check_dim(omega.dim())?;
        let mut p = self.clone();
        for _ in 0..j {
            if p.is_zero() {
                break;
            }
            p = p.dir_deriv(omega.coords());
        }
        Ok(p)
    }

    /// Homogeneous components `(degree, part)` in increasing degree.
    pub fn homogeneous_parts(&self) -> Vec<(u32, Polynomial)> {
        let mut out: Vec<(u32, Polynomial)> = Vec::new();
        for (m, c) in &self.terms {
            match out.last_mut() {
                Some((d, p)) if *d == m.degree => {
                    p.terms.insert(m.clone(), c.clone());
                }
                _ => {
                    let mut p = Polynomial::zero(self.dim);
                    p.terms.insert(m.clone(), c.clone());
                    out.push((m.degree, p));
                }
            }
        }
        out
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().filter(|(m, _)| m.degree == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// `‖x‖² P`.
    pub fn mul_norm_sq(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            for i in 0..self.dim {
                out.add_term(m.with_delta(i, 2), c.clone());
            }
        }
        out
    }

    /// `‖x‖^(2j) P`.
    pub fn mul_norm_sq_power(&self, j: u32) -> Polynomial {
        (0..j).fold(self.clone(), |p, _| p.mul_norm_sq())
    }

    /// Euler operator `𝔼 = Σ x_i ∂_i`.
    pub fn euler(&self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree > 0)
                .map(|(m, c)| (m.clone(), c * int(m.degree as i64)))
                .collect(),
        }
    }

    /// Substitutes `x_i -> forms[i]`.
    pub fn substitute(&self, forms: &[Polynomial]) -> Polynomial {
        assert_eq!(forms.len(), self.dim, "one form per variable");
        let out_dim = forms.first().map(|f| f.dim).unwrap_or(0);
        let mut powers: Vec<Vec<Polynomial>> = forms.iter().map(|f| vec![Polynomial::one(f.dim)]).collect();
        let mut out = Polynomial::zero(out_dim);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(out_dim, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().map(|p| p * &forms[i]).unwrap();
                    powers[i].push(next);
                }
                if e > 0 {
                    acc = &acc * &powers[i][e as usize];
                }
            }
            out.add_scaled(&acc, &Rational::one());
        }
        out
    }

    /// `P ∘ Mᵀ`, i.e. `x_i -> Σ_j M_ji y_j`, for a rational orthogonal `M`.
    pub fn substitute_orthogonal(&self, m: &Matrix) -> Result<Polynomial> {
        self.check_dim(m.len())?;
        if !is_orthogonal(m) {
            return Err(Error::NotOrthogonal);
        }
        let forms: Vec<Polynomial> = (0..self.dim)
            .map(|i| Polynomial::linear(&(0..self.dim).map(|j| m[j][i].clone()).collect::<Vec<_>>()))
            .collect();
        Ok(self.substitute(&forms))
    }

    pub fn evaluate(&self, pt: &RationalPoint) -> Result<Rational> {
        self.check_dim(pt.dim())?;
        Ok(self.evaluate_slice(pt.coords()))
    }

    pub fn evaluate_slice(&self, x: &[Rational]) -> Rational {
        let mut powers: Vec<Vec<Rational>> = x.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &x[i];
                    powers[i].push(next);
                }
                t *= &powers[i][e as usize];
            }
            sum += t;
        }
        sum
    }

    /// Canonical representative on the unit sphere: the sum of all Fischer
    /// components with the ‖x‖² factors dropped.
    pub fn reduce_on_sphere(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (_, part) in self.homogeneous_parts() {
            for (_, h) in crate::harmonics::fischer_components(&part) {
                out.add_scaled(&h, &Rational::one());
            }
        }
        out
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.degree == 0 {
                factors.push(alloc::format!("{}", a));
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(alloc::format!("x{}", i + 1)),
                    _ => factors.push(alloc::format!("x{}^{}", i + 1, e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = Polynomial::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn x(dim: usize, i: usize) -> Polynomial {
        Polynomial::var(dim, i)
    }

    #[test]
    fn laplacian_examples() {
        let p = &(&x(2, 0) * &x(2, 0)) + &(&x(2, 1) * &x(2, 1));
        assert_eq!(p.laplacian(), Polynomial::constant(2, int(4)));
        assert_eq!(x(3, 0).pow(3).laplacian(), x(3, 0).scale(&int(6)));
        assert!((&x(3, 0) * &x(3, 1)).laplacian().is_zero());
    }

    #[test]
    fn dir_deriv_examples() {
        let e1 = RationalPoint::basis(2, 0);
        let p = x(2, 0).pow(2);
        assert_eq!(p.dir_deriv_power(&e1, 2).unwrap(), Polynomial::constant(2, int(2)));
        let w = RationalPoint::unit(vec![r(3, 5), r(4, 5)]).unwrap();
        let d = p.dir_deriv_power(&w, 1).unwrap();
        assert_eq!(d.evaluate(&w).unwrap(), r(18, 25));
        let expected = Rational::from_integer(falling_factorial(2, 1)) * p.evaluate(&w).unwrap();
        assert_eq!(expected, r(18, 25));
        assert!(p.dir_deriv_power(&w, 3).unwrap().is_zero());
        assert!(p.dir_deriv_power(&RationalPoint::basis(3, 0), 1).is_err());
    }

    #[test]
    fn homogeneous_parts_examples() {
        let p = &x(2, 0).pow(2) + &x(2, 1);
        let parts = p.homogeneous_parts();
        assert_eq!(parts, vec![(1, x(2, 1)), (2, x(2, 0).pow(2))]);
        assert!(Polynomial::zero(3).homogeneous_parts().is_empty());
        let q = (&x(2, 0) + &Polynomial::one(2)).pow(2);
        let parts = q.homogeneous_parts();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[1].1, x(2, 0).scale(&int(2)));
    }

    #[test]
    fn mul_norm_sq_examples() {
        assert_eq!(Polynomial::one(2).mul_norm_sq(), Polynomial::norm_sq(2));
        let p = x(2, 0).mul_norm_sq();
        assert_eq!(p, &x(2, 0).pow(3) + &(&x(2, 0) * &x(2, 1).pow(2)));
        assert_eq!(Polynomial::one(1).mul_norm_sq_power(2), x(1, 0).pow(4));
    }

    #[test]
    fn substitution_examples() {
        let swap: Matrix = vec![vec![int(0), int(1)], vec![int(-1), int(0)]];
        assert_eq!(x(2, 0).pow(2).substitute_orthogonal(&swap).unwrap(), x(2, 1).pow(2));
        let m: Matrix = vec![vec![r(3, 5), r(4, 5)], vec![r(4, 5), r(-3, 5)]];
        assert_eq!(Polynomial::norm_sq(2).substitute_orthogonal(&m).unwrap(), Polynomial::norm_sq(2));
        assert_eq!(x(2, 0).substitute_orthogonal(&m).unwrap(), Polynomial::linear(&[r(3, 5), r(4, 5)]));
        let bad: Matrix = vec![vec![int(1), int(1)], vec![int(0), int(1)]];
        assert_eq!(x(2, 0).substitute_orthogonal(&bad), Err(Error::NotOrthogonal));
    }

    #[test]
    fn evaluate_examples() {
        let p = &x(2, 0).pow(2) * &x(2, 1);
        assert_eq!(p.evaluate(&RationalPoint::from_ints(&[2, 3])).unwrap(), int(12));
        let q = &p + &Polynomial::constant(2, r(7, 3));
        assert_eq!(q.evaluate(&RationalPoint::from_ints(&[0, 0])).unwrap(), r(7, 3));
        let w = RationalPoint::new(vec![r(3, 5), r(4, 5)]);
        assert!(w.is_unit());
        assert_eq!(Polynomial::norm_sq(2).evaluate(&w).unwrap(), int(1));
    }

    #[test]
    fn reduce_examples() {
        for m in 2..6 {
            assert_eq!(Polynomial::norm_sq(m).reduce_on_sphere(), Polynomial::one(m));
        }
        let x1sq = x(3, 0).pow(2);
        let vanish = &x1sq.mul_norm_sq() - &x1sq;
        assert!(vanish.reduce_on_sphere().is_zero());
        let expected = &(&x1sq - &Polynomial::norm_sq(3).scale(&r(1, 3))) + &Polynomial::constant(3, r(1, 3));
        assert_eq!(x1sq.reduce_on_sphere(), expected);
        assert_eq!(expected.reduce_on_sphere(), expected);
    }

    #[test]
    fn display_order() {
        let p = &(&x(3, 0).pow(2) * &x(3, 1)) - &x(3, 2).scale(&r(3, 2));
        assert_eq!(alloc::format!("{}", p), "x1^2*x2 - 3/2*x3");
        let q = &Polynomial::constant(2, int(-1)) - &x(2, 1);
        assert_eq!(alloc::format!("{}", q), "-x2 - 1");
        assert_eq!(alloc::format!("{}", Polynomial::zero(2)), "0");
    }

    #[test]
    fn monomial_enumeration() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].exponents(), &[2, 0, 0]);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn stereographic_points_are_unit() {
        let p = RationalPoint::stereographic(&[r(1, 2), r(-2, 3), r(5, 7)]);
        assert!(RationalPoint::new(p.coords().to_vec()).is_unit());
        let h = householder(&[r(1, 1), r(2, 3), r(-1, 5)]);
        assert!(is_orthogonal(&h));
    }
}
