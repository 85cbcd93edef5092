//! Fischer decomposition, harmonic projection, spherical-harmonic bases and
//! the Laplace–Beltrami operator.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::{Monomial, Polynomial};
use crate::scalar::binomial;
use crate::Rational;

/// Fischer components of one homogeneous part of degree `degree`:
/// `part = Σ_j ‖x‖^(2j) H_(degree-2j)` with every `H` harmonic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicDecomposition {
    pub degree: u32,
    pub components: Vec<(u32, Polynomial)>,
}

impl HarmonicDecomposition {
    pub fn reconstruct(&self, dim: usize) -> Polynomial {
        let mut out = Polynomial::zero(dim);
        for (j, h) in &self.components {
            out.add_scaled(&h.mul_norm_sq_power(*j), &Rational::one());
        }
        out
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Coefficients `a_j` of the projection `H = Σ_j a_j ‖x‖^(2j) Δ^j P` for a
/// homogeneous `P` of degree `k` in dimension `m`.
fn projection_coefficients(m: usize, k: u32) -> Vec<Rational> {
    let mut a = Vec::with_capacity(k as usize / 2 + 1);
    a.push(Rational::one());
    for j in 0..k as i64 / 2 {
        let den = 2 * (j + 1) * (m as i64 + 2 * k as i64 - 2 * j - 4);
        let next = -a[j as usize].clone() / int(den);
        a.push(next);
    }
    a
}

fn project_from_chain(m: usize, k: u32, chain: &[Polynomial]) -> Polynomial {
    let a = projection_coefficients(m, k);
    let mut out = Polynomial::zero(m);
    for (j, lap) in chain.iter().enumerate().take(a.len()) {
        if lap.is_zero() {
            break;
        }
        out.add_scaled(&lap.mul_norm_sq_power(j as u32), &a[j]);
    }
    out
}

/// Harmonic part `H_k` of a homogeneous polynomial of degree `k`.
pub fn harmonic_projection(p: &Polynomial) -> Polynomial {
    let Some(k) = p.degree() else { return p.clone() };
    debug_assert!(p.is_homogeneous());
    let mut chain = Vec::new();
    let mut cur = p.clone();
    while !cur.is_zero() {
        let next = cur.laplacian();
        chain.push(cur);
        cur = next;
    }
    project_from_chain(p.dim(), k, &chain)
}

/// Non-zero Fischer components `(j, H_(k-2j))` of a homogeneous polynomial.
pub fn fischer_components(part: &Polynomial) -> Vec<(u32, Polynomial)> {
    let Some(k) = part.degree() else { return Vec::new() };
    let m = part.dim() as i64;
    let mut chain = Vec::new();
    let mut cur = part.clone();
    while !cur.is_zero() {
        let next = cur.laplacian();
        chain.push(cur);
        cur = next;
    }
    let mut out = Vec::new();
    for j in 0..chain.len() {
        let q = k as i64 - 2 * j as i64;
        let proj = project_from_chain(part.dim(), q as u32, &chain[j..]);
        if proj.is_zero() {
            continue;
        }
        // Δ^j (‖x‖^(2j) H_q) = Π_t 2t(2t + m - 2 + 2q) H_q
        let beta: i64 = (1..=j as i64).map(|t| 2 * t * (2 * t + m - 2 + 2 * q)).product();
        out.push((j as u32, proj.scale(&int(beta).recip())));
    }
    out.sort_by_key(|(j, _)| *j);
    out
}

/// Fischer decomposition of every homogeneous part, in increasing degree.
pub fn fischer_decompose(p: &Polynomial) -> Vec<HarmonicDecomposition> {
    p.homogeneous_parts()
        .into_iter()
        .map(|(degree, part)| HarmonicDecomposition { degree, components: fischer_components(&part) })
        .collect()
}

/// Harmonic components of `P` restricted to the sphere, grouped by degree.
pub fn spherical_components(p: &Polynomial) -> BTreeMap<u32, Polynomial> {
    let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
    for dec in fischer_decompose(p) {
        for (j, h) in dec.components {
            let d = dec.degree - 2 * j;
            out.entry(d).or_insert_with(|| Polynomial::zero(p.dim())).add_scaled(&h, &Rational::one());
        }
    }
    out.retain(|_, h| !h.is_zero());
    out
}

/// `Δ_LB = ‖x‖² Δ - (m - 2 + 𝔼) 𝔼`, applied to the given representative.
pub fn laplace_beltrami(p: &Polynomial) -> Polynomial {
    let m = p.dim() as i64;
    let mut out = p.laplacian().mul_norm_sq();
    for (d, part) in p.homogeneous_parts() {
        let d = d as i64;
        out.add_scaled(&part, &int(-d * (m - 2 + d)));
    }
    out
}

/// Eigenvalue `-k(m - 2 + k)` of `Δ_LB` on spherical harmonics of degree `k`.
pub fn lb_eigenvalue(k: u32, m: usize) -> i64 {
    let k = k as i64;
    -k * (m as i64 - 2 + k)
}

/// `dim ℋ_k(ℝ^m) = C(k+m-1, m-1) - C(k+m-3, m-1)`.
pub fn harmonic_dimension(m: usize, k: u32) -> usize {
    let a = binomial(k as u64 + m as u64 - 1, m as u64 - 1);
    let b = if k >= 2 { binomial(k as u64 + m as u64 - 3, m as u64 - 1) } else { BigInt::zero() };
    (a - b).to_usize().unwrap_or(0)
}

/// Basis of harmonic homogeneous polynomials of degree `k` in `m` variables.
///
/// The projections of the degree-`k` monomials with exponent of `x1` at most
/// one are independent (no non-zero multiple of ‖x‖² has all its monomials in
/// that set) and their number equals `dim ℋ_k`, so they form a basis. They
/// are returned in descending graded-lex order of the source monomial.
pub fn sh_basis(m: usize, k: u32) -> Vec<Polynomial> {
    Monomial::all_of_degree(m, k)
        .into_iter()
        .filter(|mono| mono.exponents()[0] <= 1)
        .map(|mono| harmonic_projection(&Polynomial::term(mono, Rational::one())))
        .collect()
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn reduce_mod(r: &Rational) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let n = r.numer().mod_floor(&p).to_u64()?;
    let d = r.denom().mod_floor(&p).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, powmod(d, PRIME - 2)))
}

fn rank_mod_p(polys: &[Polynomial]) -> Option<usize> {
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let n = index.len();
            index.entry(m).or_insert(n);
        }
    }
    let cols = index.len();
    // pivot rows keyed by pivot column
    let mut pivots: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for p in polys {
        let mut row = alloc::vec![0u64; cols];
        for (m, c) in p.terms() {
            row[index[m]] = reduce_mod(c)?;
        }
        for (&col, prow) in &pivots {
            let f = row[col];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(prow) {
                    *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
                }
            }
        }
        if let Some(col) = row.iter().position(|&v| v != 0) {
            let inv = powmod(row[col], PRIME - 2);
            for v in row.iter_mut() {
                *v = mulmod(*v, inv);
            }
            // keep the pivot set fully reduced
            for prow in pivots.values_mut() {
                let f = prow[col];
                if f != 0 {
                    for (x, y) in prow.iter_mut().zip(&row) {
                        *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
                    }
                }
            }
            pivots.insert(col, row);
        }
    }
    Some(pivots.len())
}

fn rank_exact(polys: &[Polynomial]) -> usize {
    let mut basis: Vec<(Monomial, Polynomial)> = Vec::new();
    for p in polys {
        let mut cur = p.clone();
        for (lead, b) in &basis {
            let c = cur.coeff(lead);
            if !c.is_zero() {
                cur.add_scaled(b, &-c);
            }
        }
        let top = cur.terms().next_back().map(|(m, c)| (m.clone(), c.clone()));
        if let Some((lead, c)) = top {
            let normed = cur.scale(&c.recip());
            for (_, b) in basis.iter_mut() {
                let f = b.coeff(&lead);
                if !f.is_zero() {
                    b.add_scaled(&normed, &-f);
                }
            }
            basis.push((lead, normed));
        }
    }
    basis.len()
}

/// Rank of a family of polynomials over the rationals. A full rank modulo
/// `2^61 - 1` certifies full rational rank; otherwise exact elimination runs.
pub fn rank(polys: &[Polynomial]) -> usize {
    match rank_mod_p(polys) {
        Some(r) if r == polys.len() => r,
        _ => rank_exact(polys),
    }
}
