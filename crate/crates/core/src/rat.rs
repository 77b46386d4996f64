//! Exact arbitrary-precision rational numbers.
//!
//! `BigRat` keeps two invariants at all times: the denominator is positive,
//! and numerator and denominator are coprime. Equality, ordering and hashing
//! are therefore structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Rounding direction for decimal emission and dyadic approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    /// Toward negative infinity.
    Floor,
    /// Toward positive infinity.
    Ceil,
}

/// An exact rational number in canonical form: `den > 0`, `gcd(|num|, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BigRat {
    num: BigInt,
    den: BigInt,
}

/// gcd tuned for operands of very different bit lengths: strips powers of two,
/// balances magnitudes with Euclidean steps, then finishes with the library
/// binary gcd on comparable-size odd operands.
fn gcd_mixed(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let mut x = a.abs();
    let mut y = b.abs();
    let tx = x.trailing_zeros().unwrap_or(0);
    let ty = y.trailing_zeros().unwrap_or(0);
    let common = tx.min(ty);
    x >>= tx;
    y >>= ty;
    loop {
        if x.is_one() || y.is_one() {
            return BigInt::one() << common;
        }
        if x.bits() > y.bits() + 64 {
            x %= &y;
            if x.is_zero() {
                return y << common;
            }
            let t = x.trailing_zeros().unwrap_or(0);
            x >>= t;
        } else if y.bits() > x.bits() + 64 {
            y %= &x;
            if y.is_zero() {
                return x << common;
            }
            let t = y.trailing_zeros().unwrap_or(0);
            y >>= t;
        } else {
            return x.gcd(&y) << common;
        }
    }
}

impl BigRat {
    // ---- Constructors ----

    /// Canonical rational `num/den`. Panics if `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "BigRat: zero denominator");
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        if num.is_zero() {
            return BigRat { num, den: BigInt::one() };
        }
        let g = gcd_mixed(&num, &den);
        if g.is_one() {
            BigRat { num, den }
        } else {
            BigRat { num: num / &g, den: den / &g }
        }
    }

    /// Construct from parts already known to be canonical.
    fn raw(num: BigInt, den: BigInt) -> Self {
        debug_assert!(den.is_positive());
        debug_assert!(num.is_zero() && den.is_one() || gcd_mixed(&num, &den).is_one());
        BigRat { num, den }
    }

    pub fn zero() -> Self {
        BigRat { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        BigRat { num: BigInt::one(), den: BigInt::one() }
    }

    /// Convenience constructor for small ratios, e.g. `BigRat::ratio(1, 12)`.
    pub fn ratio(num: i64, den: i64) -> Self {
        BigRat::new(BigInt::from(num), BigInt::from(den))
    }

    // ---- Accessors ----

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn abs(&self) -> Self {
        BigRat::raw(self.num.abs(), self.den.clone())
    }

    // ---- Arithmetic helpers ----

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "BigRat: reciprocal of zero");
        if self.num.is_negative() {
            BigRat::raw(-self.den.clone(), -self.num.clone())
        } else {
            BigRat::raw(self.den.clone(), self.num.clone())
        }
    }

    /// Integer power. Canonical form is preserved without re-reduction.
    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return BigRat::one();
        }
        if self.is_zero() {
            return BigRat::zero();
        }
        BigRat::raw(Pow::pow(&self.num, exp), Pow::pow(&self.den, exp))
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = gcd_mixed(&self.den, &other.den);
        if g.is_one() {
            let num = &self.num * &other.den + &other.num * &self.den;
            if num.is_zero() {
                return BigRat::zero();
            }
            return BigRat::raw(num, &self.den * &other.den);
        }
        let bp = &self.den / &g;
        let dp = &other.den / &g;
        let t = &self.num * &dp + &other.num * &bp;
        if t.is_zero() {
            return BigRat::zero();
        }
        let g2 = gcd_mixed(&t, &g);
        BigRat::raw(t / &g2, bp * (&other.den / g2))
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BigRat::zero();
        }
        let g1 = gcd_mixed(&self.num, &other.den);
        let g2 = gcd_mixed(&other.num, &self.den);
        BigRat::raw(
            (&self.num / &g1) * (&other.num / &g2),
            (&self.den / &g2) * (&other.den / &g1),
        )
    }

    // ---- Dyadic approximation ----

    /// `floor(log2 |x|) + 1`, approximately; exact enough for precision control.
    pub fn magnitude_bits(&self) -> i64 {
        debug_assert!(!self.is_zero());
        self.num.bits() as i64 - self.den.bits() as i64
    }

    /// Directed dyadic approximation with roughly `bits` significant bits.
    /// `Floor` never increases the value, `Ceil` never decreases it.
    pub fn round_dyadic(&self, bits: u64, dir: Round) -> Self {
        if self.is_zero() {
            return BigRat::zero();
        }
        let shift = bits as i64 - self.magnitude_bits();
        Self::dyadic_ratio(&self.num, &self.den, shift, dir)
    }

    /// Directed rounding of `(num/den) * 2^shift` to an integer, returned as a
    /// dyadic rational over `2^shift`. Requires `den > 0`.
    pub fn dyadic_ratio(num: &BigInt, den: &BigInt, shift: i64, dir: Round) -> Self {
        debug_assert!(den.is_positive());
        let q = if shift >= 0 {
            let scaled = num << shift as u64;
            match dir {
                Round::Floor => scaled.div_floor(den),
                Round::Ceil => scaled.div_ceil(den),
            }
        } else {
            let scaled_den = den << (-shift) as u64;
            match dir {
                Round::Floor => num.div_floor(&scaled_den),
                Round::Ceil => num.div_ceil(&scaled_den),
            }
        };
        if q.is_zero() {
            return BigRat::zero();
        }
        if shift <= 0 {
            return BigRat::raw(q << (-shift) as u64, BigInt::one());
        }
        let tz = q.trailing_zeros().unwrap_or(0).min(shift as u64);
        BigRat::raw(q >> tz, BigInt::one() << (shift as u64 - tz))
    }

    // ---- Decimal emission ----

    /// Decimal string with exactly `digits` fractional digits, rounded in the
    /// given direction (`Floor` toward -inf, `Ceil` toward +inf).
    pub fn to_decimal(&self, digits: usize, dir: Round) -> String {
        let scale = Pow::pow(&BigInt::from(10), digits as u64);
        let scaled = &self.num * &scale;
        let q = match dir {
            Round::Floor => scaled.div_floor(&self.den),
            Round::Ceil => scaled.div_ceil(&self.den),
        };
        let neg = q.is_negative();
        let mut s = q.abs().to_string();
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits - s.len() + 1), s);
        }
        let point = s.len() - digits;
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{}{}", sign, s)
        } else {
            format!("{}{}.{}", sign, &s[..point], &s[point..])
        }
    }
}

// ---- Conversions ----

impl From<i64> for BigRat {
    fn from(v: i64) -> Self {
        BigRat::raw(BigInt::from(v), BigInt::one())
    }
}

impl From<i32> for BigRat {
    fn from(v: i32) -> Self {
        BigRat::raw(BigInt::from(v), BigInt::one())
    }
}

impl From<u64> for BigRat {
    fn from(v: u64) -> Self {
        BigRat::raw(BigInt::from(v), BigInt::one())
    }
}

impl From<BigInt> for BigRat {
    fn from(v: BigInt) -> Self {
        BigRat::raw(v, BigInt::one())
    }
}

/// Error for [`BigRat::from_str`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseBigRatError(String);

impl fmt::Display for ParseBigRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal: {}", self.0)
    }
}

impl std::error::Error for ParseBigRatError {}

impl FromStr for BigRat {
    type Err = ParseBigRatError;

    /// Accepts `p`, `p/q` and plain decimal literals like `-1.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseBigRatError(s.to_string());
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            return Ok(BigRat::new(num, den));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let neg = int_part.trim_start().starts_with('-');
            let int = BigInt::from_str(if int_part.is_empty() { "0" } else { int_part })
                .map_err(|_| bad())?;
            let frac = BigInt::from_str(frac_part).map_err(|_| bad())?;
            let scale = Pow::pow(&BigInt::from(10), frac_part.len() as u64);
            let num = int * &scale + if neg { -frac } else { frac };
            return Ok(BigRat::new(num, scale));
        }
        let num = BigInt::from_str(s).map_err(|_| bad())?;
        Ok(BigRat::from(num))
    }
}

// ---- Operators (on references; owned forms delegate) ----

impl Add for &BigRat {
    type Output = BigRat;
    fn add(self, rhs: &BigRat) -> BigRat {
        self.add_impl(rhs)
    }
}

impl Sub for &BigRat {
    type Output = BigRat;
    fn sub(self, rhs: &BigRat) -> BigRat {
        self.add_impl(&-rhs)
    }
}

impl Mul for &BigRat {
    type Output = BigRat;
    fn mul(self, rhs: &BigRat) -> BigRat {
        self.mul_impl(rhs)
    }
}

impl Div for &BigRat {
    type Output = BigRat;
    fn div(self, rhs: &BigRat) -> BigRat {
        self.mul_impl(&rhs.recip())
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat::raw(-self.num.clone(), self.den.clone())
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for BigRat {
            type Output = BigRat;
            fn $method(self, rhs: BigRat) -> BigRat {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&BigRat> for BigRat {
            type Output = BigRat;
            fn $method(self, rhs: &BigRat) -> BigRat {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<BigRat> for &BigRat {
            type Output = BigRat;
            fn $method(self, rhs: BigRat) -> BigRat {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add, add; Sub, sub; Mul, mul; Div, div);

impl Neg for BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        -&self
    }
}

impl PartialOrd for BigRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigRat {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross multiplication preserves order.
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::ratio(n, d)
    }

    #[test]
    fn test_canonical_form() {
        let x = r(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(r(0, 7), BigRat::zero());
        assert_eq!(r(0, 7).denom(), &BigInt::one());
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn test_zero_denominator_rejected() {
        BigRat::new(BigInt::one(), BigInt::zero());
    }

    #[test]
    fn test_arithmetic() {
        assert_eq!(&r(1, 12) + &r(1, 12), r(1, 6));
        assert_eq!(&r(1, 1) - &r(11, 8), r(-3, 8));
        assert_eq!(&r(2, 3) * &r(9, 4), r(3, 2));
        assert_eq!(&r(1, 3) / &r(2, 1), r(1, 6));
        assert_eq!(&r(5, 7) - &r(5, 7), BigRat::zero());
    }

    #[test]
    fn test_pow_and_recip() {
        assert_eq!(r(-2, 3).pow(3), r(-8, 27));
        assert_eq!(r(-2, 3).pow(0), BigRat::one());
        assert_eq!(r(-2, 3).recip(), r(-3, 2));
    }

    #[test]
    fn test_ordering() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(-1, 3));
        assert!(r(3, 10) < r(37, 112) && r(37, 112) < r(1, 1));
    }

    #[test]
    fn test_parse() {
        assert_eq!("3/9".parse::<BigRat>().unwrap(), r(1, 3));
        assert_eq!("-7".parse::<BigRat>().unwrap(), r(-7, 1));
        assert_eq!("-1.25".parse::<BigRat>().unwrap(), r(-5, 4));
        assert_eq!("0.3359".parse::<BigRat>().unwrap(), r(3359, 10000));
        assert!("1/0".parse::<BigRat>().is_err());
        assert!("a".parse::<BigRat>().is_err());
    }

    #[test]
    fn test_decimal_directed() {
        let x = r(1, 3);
        assert_eq!(x.to_decimal(4, Round::Floor), "0.3333");
        assert_eq!(x.to_decimal(4, Round::Ceil), "0.3334");
        let y = r(-1, 3);
        assert_eq!(y.to_decimal(4, Round::Floor), "-0.3334");
        assert_eq!(y.to_decimal(4, Round::Ceil), "-0.3333");
        assert_eq!(r(5, 4).to_decimal(0, Round::Floor), "1");
        assert_eq!(r(5, 4).to_decimal(0, Round::Ceil), "2");
        assert_eq!(r(1, 4).to_decimal(2, Round::Floor), "0.25");
        assert_eq!(r(1, 4).to_decimal(2, Round::Ceil), "0.25");
    }

    #[test]
    fn test_round_dyadic_directed() {
        let x = r(1, 3);
        let lo = x.round_dyadic(20, Round::Floor);
        let hi = x.round_dyadic(20, Round::Ceil);
        assert!(lo <= x && x <= hi);
        assert!(&hi - &lo <= r(1, 1 << 18));
        // Already-dyadic values round to themselves.
        let d = r(5, 8);
        assert_eq!(d.round_dyadic(30, Round::Floor), d);
        assert_eq!(d.round_dyadic(30, Round::Ceil), d);
        // Negative values keep the directed contract.
        let n = r(-1, 3);
        assert!(n.round_dyadic(16, Round::Floor) <= n);
        assert!(n.round_dyadic(16, Round::Ceil) >= n);
    }

    #[test]
    fn test_gcd_mixed_extremes() {
        let huge = BigInt::one() << 100_000;
        assert_eq!(gcd_mixed(&huge, &BigInt::from(12)), BigInt::from(4));
        let odd = (BigInt::one() << 50_000) + 1;
        assert_eq!(gcd_mixed(&odd, &huge), BigInt::one());
        assert_eq!(gcd_mixed(&BigInt::zero(), &BigInt::from(-6)), BigInt::from(6));
    }
}
