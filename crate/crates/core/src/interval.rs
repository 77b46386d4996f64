//! Closed intervals with exact rational endpoints.
//!
//! The arithmetic operations are exact: endpoints of a sum, difference,
//! product or quotient are computed in rational arithmetic with no rounding,
//! so results are reproducible bit for bit. Directed coarsening is available
//! separately ([`Interval::round_out`], [`Interval::pow_round`]) for callers
//! that want to trade endpoint size for a slightly wider enclosure.

use crate::rat::{BigRat, Round};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigRat,
    hi: BigRat,
}

impl Interval {
    // ---- Constructors ----

    /// Panics unless `lo <= hi`.
    pub fn new(lo: BigRat, hi: BigRat) -> Self {
        assert!(lo <= hi, "Interval: lo > hi");
        Interval { lo, hi }
    }

    pub fn singleton(v: BigRat) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    /// Outward dyadic bracket of the exact ratio `num/den` (`den > 0`) with
    /// roughly `bits` significant bits per endpoint.
    pub fn from_ratio_outward(num: &BigInt, den: &BigInt, bits: u64) -> Self {
        assert!(den.is_positive(), "from_ratio_outward: denominator must be positive");
        if num.is_zero() {
            return Interval::singleton(BigRat::zero());
        }
        let mag = num.bits() as i64 - den.bits() as i64;
        let shift = bits as i64 - mag;
        Interval {
            lo: BigRat::dyadic_ratio(num, den, shift, Round::Floor),
            hi: BigRat::dyadic_ratio(num, den, shift, Round::Ceil),
        }
    }

    // ---- Queries ----

    pub fn lo(&self) -> &BigRat {
        &self.lo
    }

    pub fn hi(&self) -> &BigRat {
        &self.hi
    }

    pub fn width(&self) -> BigRat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigRat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn midpoint(&self) -> BigRat {
        &(&self.lo + &self.hi) * &BigRat::ratio(1, 2)
    }

    // ---- Exact arithmetic ----

    pub fn add(&self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        // Fast path for the dominant case of positive operands.
        if self.lo.is_positive() && rhs.lo.is_positive() {
            return Interval { lo: &self.lo * &rhs.lo, hi: &self.hi * &rhs.hi };
        }
        let candidates = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Panics when the divisor interval contains zero.
    pub fn div(&self, rhs: &Interval) -> Interval {
        assert!(
            !rhs.contains_zero(),
            "Interval: division by an interval containing zero"
        );
        self.mul(&rhs.recip())
    }

    /// Panics when the interval contains zero.
    pub fn recip(&self) -> Interval {
        assert!(!self.contains_zero(), "Interval: reciprocal of an interval containing zero");
        Interval { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRat) -> Interval {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    /// Exact integer power via endpoint monotonicity.
    pub fn int_pow(&self, k: u32) -> Interval {
        if k == 0 {
            return Interval::singleton(BigRat::one());
        }
        let lp = self.lo.pow(k);
        let hp = self.hi.pow(k);
        if !self.lo.is_negative() {
            Interval { lo: lp, hi: hp }
        } else if !self.hi.is_positive() {
            if k % 2 == 0 {
                Interval { lo: hp, hi: lp }
            } else {
                Interval { lo: lp, hi: hp }
            }
        } else if k % 2 == 1 {
            Interval { lo: lp, hi: hp }
        } else {
            Interval { lo: BigRat::zero(), hi: lp.max(hp) }
        }
    }

    // ---- Directed coarsening ----

    /// Outward dyadic rounding: the result contains `self`, with endpoints of
    /// roughly `bits` significant bits.
    pub fn round_out(&self, bits: u64) -> Interval {
        Interval {
            lo: self.lo.round_dyadic(bits, Round::Floor),
            hi: self.hi.round_dyadic(bits, Round::Ceil),
        }
    }

    /// Integer power with outward rounding after every multiplication, for
    /// large exponents where exact powering would blow up endpoint sizes.
    /// Requires a nonnegative lower endpoint.
    pub fn pow_round(&self, exp: u64, bits: u64) -> Interval {
        assert!(
            !self.lo.is_negative(),
            "pow_round: requires a nonnegative interval"
        );
        if exp == 0 {
            return Interval::singleton(BigRat::one());
        }
        let mut result: Option<Interval> = None;
        let mut base = self.clone();
        let mut e = exp;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base).round_out(bits),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base).round_out(bits);
        }
        result.unwrap()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
