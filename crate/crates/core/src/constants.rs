//! Certified enclosures of the real constants the checks depend on.
//!
//! Every constructor returns a closed interval with exact rational endpoints
//! that provably contains the target value: lower endpoints are partial sums
//! of series with positive terms (or alternating brackets), upper endpoints
//! add an explicit tail bound. Nothing here consults a precomputed constant.

use crate::interval::Interval;
use crate::rat::BigRat;
use num_bigint::BigInt;
use num_traits::One;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// How much work a constructor is asked to do: either a fixed series
/// truncation order, or a target enclosure width reached by escalation.
#[derive(Clone, Debug)]
pub enum Precision {
    /// Truncate the underlying series after this many terms (>= 1).
    Terms(usize),
    /// Double the term count from [`ESCALATION_START`] until the enclosure
    /// width drops below this bound or [`TERM_CAP`] is reached.
    TargetWidth(BigRat),
}

impl Precision {
    /// Target width `10^-digits`.
    pub fn digits(digits: u32) -> Self {
        Precision::TargetWidth(BigRat::new(
            BigInt::one(),
            num_traits::Pow::pow(&BigInt::from(10), digits as u64),
        ))
    }
}

/// Hard cap on series term counts during escalation.
pub const TERM_CAP: usize = 1 << 16;
/// First term count tried when escalating toward a target width.
pub const ESCALATION_START: usize = 8;

/// Run `f` at doubling term counts until the width target is met or the cap
/// is reached; returns the final interval and the term count used.
pub fn escalate_to_width<F: Fn(usize) -> Interval>(f: F, target: &BigRat) -> (Interval, usize) {
    let mut terms = ESCALATION_START;
    loop {
        let iv = f(terms);
        if &iv.width() <= target || terms >= TERM_CAP {
            return (iv, terms);
        }
        terms *= 2;
    }
}

fn dispatch<F: Fn(usize) -> Interval + Copy>(p: &Precision, f: F) -> Interval {
    match p {
        Precision::Terms(t) => {
            assert!(*t >= 1, "Precision::Terms must be at least 1");
            f(*t)
        }
        Precision::TargetWidth(w) => {
            assert!(w.is_positive(), "Precision::TargetWidth must be positive");
            escalate_to_width(f, w).0
        }
    }
}

// ---- e ----

/// Encloses e: lower endpoint is the partial sum of 1/k! through k = terms,
/// upper endpoint adds the tail bound 2/(terms+1)!.
pub fn e_interval(p: &Precision) -> Interval {
    dispatch(p, e_at_terms)
}

static E_CACHE: Lazy<Mutex<HashMap<usize, Interval>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized fixed-order enclosure of e.
pub fn e_at_terms(terms: usize) -> Interval {
    assert!(terms >= 1);
    if let Some(iv) = E_CACHE.lock().unwrap().get(&terms) {
        return iv.clone();
    }
    // Partial sum over the common denominator terms!: sum_num / terms!.
    let mut fact = BigInt::one();
    let mut sum_num = BigInt::one(); // k = 0 contributes 1 * (terms!/0!) built up below
    for k in 1..=terms {
        sum_num *= k;
        sum_num += 1u32;
        fact *= k;
    }
    // Now sum_num / fact = sum_{k=0..terms} 1/k!.
    let lo = BigRat::new(sum_num, fact.clone());
    let tail = BigRat::new(BigInt::from(2), fact * (terms + 1));
    let iv = Interval::new(lo.clone(), &lo + &tail);
    E_CACHE.lock().unwrap().insert(terms, iv.clone());
    iv
}

// ---- pi ----

/// Encloses pi via the Machin identity pi = 16 atan(1/5) - 4 atan(1/239),
/// with each arctangent bracketed by consecutive alternating partial sums.
pub fn pi_interval(p: &Precision) -> Interval {
    dispatch(p, pi_at_terms)
}

static PI_CACHE: Lazy<Mutex<HashMap<usize, Interval>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized fixed-order enclosure of pi. `terms` is the index of the last
/// term of the shorter bracket (so terms = 0 already yields an enclosure).
pub fn pi_at_terms(terms: usize) -> Interval {
    if let Some(iv) = PI_CACHE.lock().unwrap().get(&terms) {
        return iv.clone();
    }
    let a = atan_recip_brackets(5, terms);
    let b = atan_recip_brackets(239, terms);
    let iv = a.scale(&BigRat::from(16)).sub(&b.scale(&BigRat::from(4)));
    PI_CACHE.lock().unwrap().insert(terms, iv.clone());
    iv
}

/// Bracket of atan(1/x) for integer x >= 2 between the partial sums S_terms
/// and S_{terms+1} of the alternating Gregory series.
fn atan_recip_brackets(x: u32, terms: usize) -> Interval {
    let xx = BigInt::from(x) * x;
    let mut power = BigInt::from(x); // x^(2j+1)
    let mut sum = BigRat::zero();
    let mut prev = BigRat::zero();
    for j in 0..=(terms + 1) {
        let term = BigRat::new(BigInt::one(), &power * (2 * j as u64 + 1));
        prev = sum.clone();
        sum = if j % 2 == 0 { &sum + &term } else { &sum - &term };
        power *= &xx;
    }
    if sum <= prev {
        Interval::new(sum, prev)
    } else {
        Interval::new(prev, sum)
    }
}

// ---- exp on [0, 1) ----

/// Encloses exp(q) for rational 0 <= q < 1: lower endpoint is the partial sum
/// of q^k/k! through k = terms, upper endpoint adds the geometric tail bound
/// (q^(terms+1)/(terms+1)!) / (1 - q).
pub fn exp_interval(q: &BigRat, p: &Precision) -> Interval {
    assert!(
        !q.is_negative() && q < &BigRat::one(),
        "exp_interval: argument must lie in [0, 1)"
    );
    dispatch(p, |terms| exp_at_terms(q, terms))
}

fn exp_at_terms(q: &BigRat, terms: usize) -> Interval {
    if q.is_zero() {
        return Interval::singleton(BigRat::one());
    }
    let mut sum = BigRat::one();
    let mut term = BigRat::one(); // q^k / k!
    for k in 1..=terms {
        term = &(&term * q) / &BigRat::from(k as u64);
        sum = &sum + &term;
    }
    let next = &(&term * q) / &BigRat::from(terms as u64 + 1); // q^(terms+1)/(terms+1)!
    let tail = &next / &(&BigRat::one() - q);
    Interval::new(sum.clone(), &sum + &tail)
}

// ---- log(1 + 1/n) ----

/// Encloses log(1 + 1/n) for n >= 1 via the series
/// 2 * sum_{j>=0} 1/((2j+1) (2n+1)^(2j+1)); the tail after index `terms` is
/// bounded by the geometric estimate
/// 2/((2 terms + 3)(2n+1)^(2 terms + 3)) * (2n+1)^2 / ((2n+1)^2 - 1).
pub fn log1p_recip_interval(n: u64, p: &Precision) -> Interval {
    assert!(n >= 1, "log1p_recip_interval: n must be at least 1");
    dispatch(p, |terms| log1p_at_terms(n, terms))
}

fn log1p_at_terms(n: u64, terms: usize) -> Interval {
    let m = BigInt::from(2 * n + 1);
    let mm = &m * &m;
    let mut power = m.clone(); // (2n+1)^(2j+1)
    let mut sum = BigRat::zero();
    for j in 0..=terms {
        sum = &sum + &BigRat::new(BigInt::from(2), &power * (2 * j as u64 + 1));
        power *= &mm;
    }
    // power is now (2n+1)^(2 terms + 3).
    let tail_first = BigRat::new(BigInt::from(2), &power * (2 * terms as u64 + 3));
    let geom = BigRat::new(mm.clone(), &mm - 1);
    let tail = &tail_first * &geom;
    Interval::new(sum.clone(), &sum + &tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn dec(s: &str) -> BigRat {
        BigRat::from_str(s).unwrap()
    }

    // 50-digit reference values computed independently by summing 60+ series
    // terms in exact rational arithmetic.
    const E_50: &str = "2.7182818284590452353602874713526624977572470937";
    const PI_50: &str = "3.1415926535897932384626433832795028841971693993751";
    const EXP_TWELFTH_50: &str = "1.086904049521228888638279697013111481199637292771";
    const LN2_50: &str = "0.69314718055994530941723212145817656807550013436026";

    #[test]
    fn test_e_first_bracket() {
        let iv = e_at_terms(1);
        assert_eq!(iv.lo(), &BigRat::from(2));
        assert_eq!(iv.hi(), &BigRat::from(3));
    }

    #[test]
    fn test_e_contains_reference() {
        let iv = e_at_terms(20);
        assert!(iv.contains(&dec(E_50)));
        assert!(iv.width() < dec("0.0000000000000001"));
    }

    #[test]
    fn test_e_width_monotone() {
        let mut prev = e_at_terms(1).width();
        for t in 2..12 {
            let w = e_at_terms(t).width();
            assert!(w < prev, "width must shrink at t={}", t);
            prev = w;
        }
    }

    #[test]
    fn test_pi_bracket_property() {
        let reference = dec(PI_50);
        for t in [0, 1, 2, 5, 10, 25] {
            assert!(pi_at_terms(t).contains(&reference), "pi not enclosed at t={}", t);
        }
    }

    #[test]
    fn test_pi_tight_at_25_terms() {
        let iv = pi_at_terms(25);
        assert!(iv.contains(&dec(PI_50)));
        assert!(iv.lo() > &dec("3.14159265358979") && iv.hi() < &dec("3.14159265358980"));
        let target = BigRat::new(BigInt::one(), num_traits::Pow::pow(&BigInt::from(10), 30u64));
        assert!(iv.width() < target);
    }

    #[test]
    fn test_pi_width_monotone() {
        let mut prev = pi_at_terms(0).width();
        for t in 1..12 {
            let w = pi_at_terms(t).width();
            assert!(w < prev);
            prev = w;
        }
    }

    #[test]
    fn test_exp_zero_is_exact() {
        let iv = exp_at_terms(&BigRat::zero(), 5);
        assert_eq!(iv.lo(), &BigRat::one());
        assert_eq!(iv.hi(), &BigRat::one());
    }

    #[test]
    fn test_exp_contains_reference() {
        let iv = exp_at_terms(&BigRat::ratio(1, 12), 10);
        assert!(iv.contains(&dec(EXP_TWELFTH_50)));
        assert!(iv.lo() < iv.hi());
    }

    #[test]
    fn test_exp_endpoints_monotone_in_q() {
        let qs = [BigRat::ratio(1, 12), BigRat::ratio(1, 6), BigRat::ratio(1, 2)];
        for w in qs.windows(2) {
            let a = exp_at_terms(&w[0], 8);
            let b = exp_at_terms(&w[1], 8);
            assert!(a.lo() <= b.lo() && a.hi() <= b.hi());
        }
    }

    #[test]
    #[should_panic(expected = "must lie in [0, 1)")]
    fn test_exp_rejects_one() {
        exp_interval(&BigRat::one(), &Precision::Terms(4));
    }

    #[test]
    #[should_panic(expected = "must lie in [0, 1)")]
    fn test_exp_rejects_negative() {
        exp_interval(&BigRat::ratio(-1, 2), &Precision::Terms(4));
    }

    #[test]
    fn test_log1p_contains_ln2() {
        let iv = log1p_at_terms(1, 40);
        assert!(iv.contains(&dec(LN2_50)));
    }

    #[test]
    fn test_log1p_standard_bounds_at_large_n() {
        let n = 1_000_000u64;
        let iv = log1p_at_terms(n, 0);
        assert!(iv.lo() >= &BigRat::new(BigInt::one(), BigInt::from(n + 1)));
        assert!(iv.hi() <= &BigRat::new(BigInt::one(), BigInt::from(n)));
    }

    #[test]
    fn test_log1p_width_monotone() {
        let mut prev = log1p_at_terms(3, 0).width();
        for t in 1..8 {
            let w = log1p_at_terms(3, t).width();
            assert!(w < prev);
            prev = w;
        }
    }

    #[test]
    #[should_panic(expected = "at least 1")]
    fn test_log1p_rejects_zero() {
        log1p_recip_interval(0, &Precision::Terms(4));
    }

    #[test]
    fn test_escalation_reaches_width() {
        let target = Precision::digits(25);
        let iv = e_interval(&target);
        let bound = BigRat::new(BigInt::one(), num_traits::Pow::pow(&BigInt::from(10), 25u64));
        assert!(iv.width() <= bound);
        assert!(iv.contains(&dec(E_50)));
    }

    #[test]
    fn test_enclosure_refinement_nests() {
        // A much higher-order run must land inside the lower-order interval.
        for t in [1usize, 4, 10] {
            assert!(e_at_terms(t).contains_interval(&e_at_terms(10 * t)));
            assert!(pi_at_terms(t).contains_interval(&pi_at_terms(10 * t)));
            let q = BigRat::ratio(1, 12);
            assert!(exp_at_terms(&q, t).contains_interval(&exp_at_terms(&q, 10 * t)));
            assert!(log1p_at_terms(7, t).contains_interval(&log1p_at_terms(7, 10 * t)));
        }
    }
}
