//! Arbitrary-precision binary floating point used for numeric renderings and
//! the quadrature oracle.
//!
//! A value is `mantissa * 2^exponent`, with the mantissa rounded to the
//! working precision in bits after every operation.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Number of bits needed to carry `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) < 3.3220
    (digits as u64 * 33220 / 10000) as u32 + 16
}

#[derive(Clone, Debug)]
pub struct Float {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn bit_len(x: &BigInt) -> i64 {
    x.bits() as i64
}

impl Float {
    pub fn zero(prec: u32) -> Self {
        Float { mant: BigInt::zero(), exp: 0, prec }
    }

    pub fn from_bigint(n: BigInt, prec: u32) -> Self {
        Float { mant: n, exp: 0, prec }.normalized()
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_bigint(BigInt::from(n), prec)
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        if r.is_zero() {
            return Self::zero(prec);
        }
        let num = r.numer();
        let den = r.denom();
        let shift = prec as i64 + 2 + bit_len(den) - bit_len(num);
        let shift = shift.max(0);
        let q = (num << (shift as usize)) / den;
        Float { mant: q, exp: -shift, prec }.normalized()
    }

    /// Construct from `mantissa * 2^exp` without loss beyond rounding.
    pub fn from_parts(mant: BigInt, exp: i64, prec: u32) -> Self {
        Float { mant, exp, prec }.normalized()
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(mut self, prec: u32) -> Self {
        self.prec = prec;
        self.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Float { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    /// Position of the most significant bit: the value lies in
    /// `[2^(top-1), 2^top)` in magnitude.
    fn top(&self) -> i64 {
        bit_len(&self.mant) + self.exp
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let excess = bit_len(&self.mant) - self.prec as i64;
        if excess > 0 {
            let neg = self.mant.is_negative();
            let mag = self.mant.magnitude().clone();
            let half = num_bigint::BigUint::one() << ((excess - 1) as usize);
            let rounded = (mag + half) >> (excess as usize);
            self.mant = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, rounded);
            self.exp += excess;
        }
        // strip trailing zero bits so equal values compare structurally
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz as usize;
            self.exp += tz as i64;
        }
        self
    }

    fn add_impl(&self, other: &Float, prec: u32) -> Float {
        if self.is_zero() {
            return other.clone().with_precision(prec);
        }
        if other.is_zero() {
            return self.clone().with_precision(prec);
        }
        let gap = prec as i64 + 4;
        if self.top() - other.top() > gap {
            return self.clone().with_precision(prec);
        }
        if other.top() - self.top() > gap {
            return other.clone().with_precision(prec);
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << ((self.exp - e) as usize);
        let b = &other.mant << ((other.exp - e) as usize);
        Float { mant: a + b, exp: e, prec }.normalized()
    }

    pub fn sqrt(&self) -> Float {
        assert!(!self.is_negative(), "square root of a negative value");
        if self.is_zero() {
            return self.clone();
        }
        // want mant * 2^shift with (exp - shift) even and ~2(prec+2) bits
        let target = 2 * (self.prec as i64 + 2);
        let mut shift = (target - bit_len(&self.mant)).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let scaled = &self.mant << (shift as usize);
        let root = scaled.sqrt();
        Float { mant: root, exp: (self.exp - shift) / 2, prec: self.prec }.normalized()
    }

    pub fn powi(&self, n: i64) -> Float {
        if n < 0 {
            return Float::from_i64(1, self.prec) / self.powi(-n);
        }
        let mut base = self.clone();
        let mut acc = Float::from_i64(1, self.prec);
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// π to the requested precision (Machin's formula in fixed point).
    pub fn pi(prec: u32) -> Float {
        let work = prec as usize + 32;
        let one = BigInt::one() << work;
        let atan_inv = |x: u64| -> BigInt {
            // arctan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
            let x2 = BigInt::from(x * x);
            let mut power = &one / BigInt::from(x);
            let mut sum = BigInt::zero();
            let mut k: u64 = 0;
            while !power.is_zero() {
                let term = &power / BigInt::from(2 * k + 1);
                if k.is_multiple_of(2) {
                    sum += term;
                } else {
                    sum -= term;
                }
                power /= &x2;
                k += 1;
            }
            sum
        };
        let pi_fixed = atan_inv(5) * 16 - atan_inv(239) * 4;
        Float { mant: pi_fixed, exp: -(work as i64), prec }.normalized()
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let excess = (bit_len(&self.mant) - 60).max(0);
        let m = (&self.mant >> (excess as usize)).to_f64().unwrap_or(0.0);
        let e = self.exp + excess;
        // split the scaling to avoid intermediate overflow
        let mut v = m;
        let mut e = e;
        while e > 1000 {
            v *= pow2(1000);
            e -= 1000;
        }
        while e < -1000 {
            v *= pow2(-1000);
            e += 1000;
        }
        v * pow2(e)
    }

    /// Exact rational value of this float.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << (self.exp as usize))
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << ((-self.exp) as usize))
        }
    }

    /// Decimal rendering with `digits` significant digits. Plain notation is
    /// used for moderate magnitudes, scientific notation otherwise.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let digits = digits.max(1) as i64;
        let neg = self.is_negative();
        let r = self.to_rational().abs();
        // estimate decimal exponent k with 10^k <= |x| < 10^(k+1)
        let log2 = self.top() as f64;
        let est = (log2 - 1.0) * core::f64::consts::LOG10_2;
        let mut k = est as i64 - (est < 0.0 && est != (est as i64) as f64) as i64;
        let scaled_int = |k: i64| -> BigInt {
            let shift = digits - 1 - k;
            let scaled = if shift >= 0 {
                &r * Rational::from_integer(BigInt::from(10).pow(shift as u32))
            } else {
                &r / Rational::from_integer(BigInt::from(10).pow((-shift) as u32))
            };
            // round half up
            let two = BigInt::from(2);
            let (q, rem) = scaled.numer().div_rem(scaled.denom());
            if rem * &two >= *scaled.denom() {
                q + 1
            } else {
                q
            }
        };
        let mut n = scaled_int(k);
        let limit = BigInt::from(10).pow(digits as u32);
        let lower = BigInt::from(10).pow((digits - 1) as u32);
        if n >= limit {
            k += 1;
            n = scaled_int(k);
        } else if n < lower {
            k -= 1;
            n = scaled_int(k);
        }
        let mut s: Vec<u8> = n.to_str_radix(10).into_bytes();
        // trim trailing zeros of the significand
        while s.len() > 1 && *s.last().unwrap() == b'0' {
            s.pop();
        }
        let s = String::from_utf8(s).unwrap();
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if (-6..=24).contains(&k) {
            if k >= 0 {
                let int_len = (k + 1) as usize;
                if s.len() <= int_len {
                    out.push_str(&s);
                    for _ in s.len()..int_len {
                        out.push('0');
                    }
                } else {
                    out.push_str(&s[..int_len]);
                    out.push('.');
                    out.push_str(&s[int_len..]);
                }
            } else {
                out.push_str("0.");
                for _ in 0..(-k - 1) {
                    out.push('0');
                }
                out.push_str(&s);
            }
        } else {
            out.push_str(&s[..1]);
            if s.len() > 1 {
                out.push('.');
                out.push_str(&s[1..]);
            }
            out.push('e');
            out.push_str(&alloc::format!("{}", k));
        }
        out
    }
}

impl PartialEq for Float {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl Float {
    pub fn cmp_value(&self, other: &Float) -> Ordering {
        let d = self.add_impl(&-other.clone(), self.prec.max(other.prec));
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Float {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Neg for Float {
    type Output = Float;
    fn neg(self) -> Float {
        Float { mant: -self.mant, exp: self.exp, prec: self.prec }
    }
}

impl Neg for &Float {
    type Output = Float;
    fn neg(self) -> Float {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Float> for &Float {
            type Output = Float;
            fn $method(self, rhs: &Float) -> Float {
                let f: fn(&Float, &Float) -> Float = $body;
                f(self, rhs)
            }
        }
        impl $tr<Float> for Float {
            type Output = Float;
            fn $method(self, rhs: Float) -> Float {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Float> for Float {
            type Output = Float;
            fn $method(self, rhs: &Float) -> Float {
                (&self).$method(rhs)
            }
        }
        impl $tr<Float> for &Float {
            type Output = Float;
            fn $method(self, rhs: Float) -> Float {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, a.prec.max(b.prec)));
forward_binop!(Sub, sub, |a, b| a.add_impl(&-b, a.prec.max(b.prec)));
forward_binop!(Mul, mul, |a, b| {
    Float { mant: &a.mant * &b.mant, exp: a.exp + b.exp, prec: a.prec.max(b.prec) }.normalized()
});
forward_binop!(Div, div, |a, b| {
    assert!(!b.is_zero(), "division by zero");
    let prec = a.prec.max(b.prec);
    if a.is_zero() {
        return Float::zero(prec);
    }
    let shift = (prec as i64 + 4 + bit_len(&b.mant) - bit_len(&a.mant)).max(0);
    let q = (&a.mant << (shift as usize)) / &b.mant;
    Float { mant: q, exp: a.exp - b.exp - shift, prec }.normalized()
});

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.prec as u64 * 3010 / 10000).max(1) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}

/// `2^e` for `|e| <= 1000`, built from the exponent bits.
fn pow2(e: i64) -> f64 {
    if e < -1022 {
        return pow2(e + 52) / pow2(52);
    }
    f64::from_bits(((e + 1023) as u64) << 52)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pi_digits() {
        let pi = Float::pi(bits_for_digits(40));
        assert_eq!(pi.to_decimal(40), "3.141592653589793238462643383279502884197");
    }

    #[test]
    fn sqrt_two() {
        let two = Float::from_i64(2, bits_for_digits(35));
        assert_eq!(two.sqrt().to_decimal(30), "1.41421356237309504880168872421");
    }

    #[test]
    fn rational_roundtrip_and_division() {
        let p = bits_for_digits(30);
        let x = Float::from_rational(&rat(1, 3), p);
        let y = Float::from_i64(1, p) / Float::from_i64(3, p);
        assert!((x.clone() - y).abs().to_f64() < 1e-35);
        assert_eq!(x.to_decimal(10), "0.3333333333");
        assert_eq!(Float::from_rational(&rat(-5, 2), p).to_decimal(10), "-2.5");
    }

    #[test]
    fn decimal_formats() {
        let p = bits_for_digits(30);
        assert_eq!(Float::from_i64(1200, p).to_decimal(10), "1200");
        assert_eq!(Float::from_rational(&rat(1, 1000), p).to_decimal(5), "0.001");
        let tiny = Float::from_rational(&rat(3, 1), p) / Float::from_i64(10, p).powi(30);
        assert_eq!(tiny.to_decimal(5), "3e-30");
        assert_eq!(Float::from_i64(0, p).to_decimal(5), "0");
    }

    #[test]
    fn ordering_and_cancellation() {
        let p = bits_for_digits(30);
        let a = Float::from_rational(&rat(1, 7), p);
        let b = Float::from_rational(&rat(1, 8), p);
        assert!(a > b);
        assert!((a.clone() - a).is_zero());
    }
}
