//! Certified enclosures of the factorial correction term and the range
//! checks built on them.
//!
//! The correction term is defined for n = 1, 2, ... by
//! `n! = sqrt(pi) (n/e)^n (8n^3 + 4n^2 + n + theta(n)/30)^(1/6)`.
//! Raising the defining equation to the sixth power removes every radical:
//! `theta(n) = 30 ((n!)^6 e^(6n) / (pi^3 n^(6n)) - 8n^3 - 4n^2 - n)`,
//! so an enclosure needs only exact integers, the e and pi enclosures raised
//! to integer powers, and exact interval arithmetic. No operation in this
//! module ever extracts a root.
//!
//! Between exact steps the pipeline coarsens endpoints outward to dyadic
//! rationals of bounded size; enclosures stay certified while endpoint
//! growth stays proportional to the requested precision instead of the
//! exponent.

use crate::constants::{self, Precision, ESCALATION_START, TERM_CAP};
use crate::interval::Interval;
use crate::rat::BigRat;
use num_bigint::BigInt;
use num_traits::{One, Pow};

/// A certified enclosure of theta(n).
#[derive(Clone, Debug)]
pub struct ThetaRecord {
    pub n: u64,
    pub enclosure: Interval,
    pub width: BigRat,
    pub terms_used: usize,
}

/// Outcome of a range check at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Holds,
    Fails,
    /// The comparison interval still straddles the threshold at the
    /// precision cap; carries the final width achieved.
    Undecided { width: BigRat },
}

impl Decision {
    pub fn holds(&self) -> bool {
        matches!(self, Decision::Holds)
    }
}

/// Outcome of a sign determination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignDecision {
    Positive,
    Negative,
    Undecided { width: BigRat },
}

impl SignDecision {
    pub fn decided(&self) -> bool {
        !matches!(self, SignDecision::Undecided { .. })
    }
}

/// Which range check to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// Strict two-sided bound L(n) < theta(n) < U(n) with
    /// L(n) = 1 - 11/(8n) + 79/(112 n^2) and U(n) = L(n) + 20/(33 n^3).
    Ineq,
    /// First forward difference positive.
    Monotone,
    /// Second forward difference negative.
    Concave,
    /// 3/10 < theta(n) < 1.
    Ramanujan,
    /// Sign of the k-th forward difference, reported rather than asserted.
    Alternating { k: u32 },
}

/// Which factorial sandwich to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingVariant {
    /// Exponent window [0, 1/(12n)].
    Prop3,
    /// Exponent window [E(n) - 1/(1680 n^7), E(n)] with
    /// E(n) = 1/(12n) - 1/(360 n^3) + 1/(1260 n^5).
    Prop5,
}

/// Result of one range-check point.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub n: u64,
    /// Difference order for alternating checks.
    pub k: Option<u32>,
    /// The interval the decision was made on (theta, a forward difference,
    /// or a squared-factorial bracket).
    pub enclosure: Interval,
    pub terms_used: usize,
    pub decision: Decision,
    /// Populated for alternating checks.
    pub sign: Option<SignDecision>,
}

/// Aggregate of a range check.
#[derive(Clone, Debug, Default)]
pub struct RangeSummary {
    pub records: Vec<CheckRecord>,
    pub any_fail: bool,
    pub any_undecided: bool,
}

impl RangeSummary {
    pub fn all_hold(&self) -> bool {
        !self.any_fail && !self.any_undecided
    }

    fn push(&mut self, rec: CheckRecord) {
        match rec.decision {
            Decision::Fails => self.any_fail = true,
            Decision::Undecided { .. } => self.any_undecided = true,
            Decision::Holds => {}
        }
        self.records.push(rec);
    }
}

// ---- Exact integer pieces ----

/// Exact n! by iterated product.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Exact binomial coefficient for the small orders used by the difference
/// probe.
fn binomial(k: u32, j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j.min(k - j) {
        acc = acc * (k - i) / (i + 1);
    }
    acc
}

// ---- The theta pipeline ----

/// Working precision: keep dyadic rounding noise far below the series tails
/// at `terms`, with headroom for the 6n-fold amplification.
fn working_bits(n: u64, terms: usize) -> u64 {
    let tail_bits: f64 = (2..=terms + 1).map(|k| (k as f64).log2()).sum();
    let amplify = (6.0 * n as f64 + 8.0).log2().ceil() as u64;
    96 + tail_bits.ceil() as u64 + 4 * amplify
}

/// Enclosure of theta(n) from series truncated at `terms`.
fn theta_at_terms(n: u64, terms: usize) -> Interval {
    let bits = working_bits(n, terms);
    let e = constants::e_at_terms(terms).round_out(bits);
    let pi = constants::pi_at_terms(terms).round_out(bits);

    let fact = factorial(n);
    let n_pow_n = Pow::pow(&BigInt::from(n), n);
    // (n!/n^n)^6 as a thin outward bracket, then exact sixth power.
    let ratio6 = Interval::from_ratio_outward(&fact, &n_pow_n, bits).int_pow(6);

    let e_6n = e.pow_round(6 * n, bits);
    let pi_3 = pi.int_pow(3);

    let x = ratio6
        .mul(&e_6n)
        .round_out(bits)
        .div(&pi_3)
        .round_out(bits);

    let m = BigRat::from(BigInt::from(n) * (BigInt::from(8) * n * n + BigInt::from(4) * n + 1u32));
    x.sub(&Interval::singleton(m)).scale(&BigRat::from(30))
}

/// Certified enclosure of theta(n). With a width target the series order is
/// escalated by doubling until the target is met or the cap is reached.
pub fn theta_enclosure(n: u64, p: &Precision) -> ThetaRecord {
    assert!(n >= 1, "theta is defined for n >= 1 only");
    let (enclosure, terms_used) = match p {
        Precision::Terms(t) => {
            assert!(*t >= 1);
            (theta_at_terms(n, *t), *t)
        }
        Precision::TargetWidth(w) => {
            constants::escalate_to_width(|t| theta_at_terms(n, t), w)
        }
    };
    debug_assert!(enclosure.lo().is_positive(), "theta enclosure must stay positive");
    ThetaRecord { n, width: enclosure.width(), enclosure, terms_used }
}

/// Exact rational bounds L(n), U(n) of the two-sided inequality.
pub fn ineq_bounds(n: u64) -> (BigRat, BigRat) {
    crate::identities::bound_values(n)
}

/// Escalation driver: recompute an interval at doubled series orders until
/// `decide` returns a verdict or the cap is reached.
fn refine<F, D>(start: usize, make: F, decide: D) -> (Interval, usize, Option<bool>)
where
    F: Fn(usize) -> Interval,
    D: Fn(&Interval) -> Option<bool>,
{
    let mut terms = start;
    loop {
        let iv = make(terms);
        if let Some(v) = decide(&iv) {
            return (iv, terms, Some(v));
        }
        if terms >= TERM_CAP {
            return (iv, terms, None);
        }
        terms *= 2;
    }
}

fn start_terms(p: &Precision) -> usize {
    match p {
        Precision::Terms(t) => (*t).max(1),
        Precision::TargetWidth(_) => ESCALATION_START,
    }
}

/// Decide the strict two-sided inequality at one point. The requested
/// precision is the starting point; refinement continues until the
/// comparison is decided either way or the cap is reached.
pub fn check_ineq(n: u64, p: &Precision) -> CheckRecord {
    assert!(n >= 1);
    let (lo_bound, hi_bound) = ineq_bounds(n);
    let width_target = width_goal(p);
    let (enclosure, terms_used, verdict) = refine(
        start_terms(p),
        |t| theta_at_terms(n, t),
        |iv| {
            if let Some(goal) = &width_target {
                if &iv.width() > goal {
                    return None;
                }
            }
            if iv.lo() > &lo_bound && iv.hi() < &hi_bound {
                Some(true)
            } else if iv.hi() <= &lo_bound || iv.lo() >= &hi_bound {
                Some(false)
            } else {
                None
            }
        },
    );
    CheckRecord {
        n,
        k: None,
        decision: verdict_to_decision(verdict, &enclosure),
        terms_used,
        enclosure,
        sign: None,
    }
}

fn width_goal(p: &Precision) -> Option<BigRat> {
    match p {
        Precision::Terms(_) => None,
        Precision::TargetWidth(w) => Some(w.clone()),
    }
}

fn verdict_to_decision(verdict: Option<bool>, iv: &Interval) -> Decision {
    match verdict {
        Some(true) => Decision::Holds,
        Some(false) => Decision::Fails,
        None => Decision::Undecided { width: iv.width() },
    }
}

/// Enclosure of the k-th forward difference
/// `sum_{j=0..k} (-1)^(k-j) C(k,j) theta(n+j)`, all stencil points at the
/// same series order.
pub fn forward_difference(k: u32, n: u64, p: &Precision) -> (Interval, usize) {
    assert!(k >= 1 && n >= 1);
    match p {
        Precision::Terms(t) => (forward_difference_at_terms(k, n, *t), *t),
        Precision::TargetWidth(w) => {
            let (iv, t) = constants::escalate_to_width(|t| forward_difference_at_terms(k, n, t), w);
            (iv, t)
        }
    }
}

fn forward_difference_at_terms(k: u32, n: u64, terms: usize) -> Interval {
    let mut acc = Interval::singleton(BigRat::zero());
    for j in 0..=k {
        let theta_j = theta_at_terms(n + j as u64, terms);
        let coeff = BigRat::from(binomial(k, j));
        let signed = if (k - j) % 2 == 0 { coeff } else { -&coeff };
        acc = acc.add(&theta_j.scale(&signed));
    }
    acc
}

/// Determine the sign of an interval-valued computation by escalation.
/// Returns the decision together with the final interval and series order.
pub fn decide_sign<F>(make: F, start: usize) -> (SignDecision, Interval, usize)
where
    F: Fn(usize) -> Interval,
{
    let (iv, terms, verdict) = refine(start, make, |iv| {
        if iv.is_strictly_positive() {
            Some(true)
        } else if iv.is_strictly_negative() {
            Some(false)
        } else {
            None
        }
    });
    let sign = match verdict {
        Some(true) => SignDecision::Positive,
        Some(false) => SignDecision::Negative,
        None => SignDecision::Undecided { width: iv.width() },
    };
    (sign, iv, terms)
}

/// Run one kind of check across `lo..=hi`.
pub fn check_range(kind: CheckKind, lo: u64, hi: u64, p: &Precision) -> RangeSummary {
    assert!(1 <= lo && lo <= hi, "range must satisfy 1 <= lo <= hi");
    if matches!(kind, CheckKind::Concave) {
        assert!(lo >= 2, "concavity check starts at n = 2");
    }
    let mut summary = RangeSummary::default();
    for n in lo..=hi {
        let rec = match kind {
            CheckKind::Ineq => check_ineq(n, p),
            CheckKind::Ramanujan => check_ramanujan(n, p),
            CheckKind::Monotone => sign_record(1, n, p, Some(true)),
            CheckKind::Concave => sign_record(2, n, p, Some(false)),
            CheckKind::Alternating { k } => sign_record(k, n, p, None),
        };
        summary.push(rec);
    }
    summary
}

/// 3/10 < theta(n) < 1 at one point.
pub fn check_ramanujan(n: u64, p: &Precision) -> CheckRecord {
    let lo_bound = BigRat::ratio(3, 10);
    let hi_bound = BigRat::one();
    let width_target = width_goal(p);
    let (enclosure, terms_used, verdict) = refine(
        start_terms(p),
        |t| theta_at_terms(n, t),
        |iv| {
            if let Some(goal) = &width_target {
                if &iv.width() > goal {
                    return None;
                }
            }
            if iv.lo() > &lo_bound && iv.hi() < &hi_bound {
                Some(true)
            } else if iv.hi() <= &lo_bound || iv.lo() >= &hi_bound {
                Some(false)
            } else {
                None
            }
        },
    );
    CheckRecord {
        n,
        k: None,
        decision: verdict_to_decision(verdict, &enclosure),
        terms_used,
        enclosure,
        sign: None,
    }
}

/// Sign of the k-th difference at n. When `expect` is given, the decision is
/// Holds/Fails against that sign; otherwise any decided sign counts as Holds
/// (the alternating probe reports, it does not assert).
fn sign_record(k: u32, n: u64, p: &Precision, expect: Option<bool>) -> CheckRecord {
    let (sign, enclosure, terms_used) =
        decide_sign(|t| forward_difference_at_terms(k, n, t), start_terms(p));
    let decision = match (&sign, expect) {
        (SignDecision::Undecided { .. }, _) => Decision::Undecided { width: enclosure.width() },
        (SignDecision::Positive, Some(true)) | (SignDecision::Negative, Some(false)) => {
            Decision::Holds
        }
        (_, None) => Decision::Holds,
        _ => Decision::Fails,
    };
    CheckRecord { n, k: Some(k), enclosure, terms_used, decision, sign: Some(sign) }
}

// ---- Factorial sandwiches, radical-free ----

/// Verify the squared factorial sandwich
/// `2 pi n (n/e)^(2n) exp(2 E_lo(n)) <= (n!)^2 <= 2 pi n (n/e)^(2n) exp(2 E_hi(n))`
/// for the chosen variant (strict on the left for the basic variant, whose
/// lower exponent is zero). Returns the record with the certified bracket
/// interval around (n!)^2.
pub fn stirling_sandwich_check(n: u64, variant: StirlingVariant, p: &Precision) -> CheckRecord {
    assert!(n >= 1);
    let fact_sq = BigRat::from(Pow::pow(&factorial(n), 2u32));
    let (exp_lo, exp_hi) = stirling_exponents(n, variant);

    let make = |terms: usize| -> (Interval, Interval) {
        let bits = working_bits(n, terms);
        let base = stirling_base(n, terms, bits);
        let lower = match &exp_lo {
            Some(q) => base
                .mul(&constants::exp_interval(q, &Precision::Terms(terms)))
                .round_out(bits),
            None => base.clone(),
        };
        let upper = base
            .mul(&constants::exp_interval(&exp_hi, &Precision::Terms(terms)))
            .round_out(bits);
        (lower, upper)
    };

    let mut terms = start_terms(p);
    loop {
        let (lower, upper) = make(terms);
        let lower_ok = lower.hi() < &fact_sq
            || (matches!(variant, StirlingVariant::Prop5) && lower.hi() <= &fact_sq);
        let upper_ok = &fact_sq <= upper.lo();
        let bracket = Interval::new(lower.lo().clone(), upper.hi().clone());
        if lower_ok && upper_ok {
            return CheckRecord {
                n,
                k: None,
                enclosure: bracket,
                terms_used: terms,
                decision: Decision::Holds,
                sign: None,
            };
        }
        // A certified violation: the whole bracket on the wrong side.
        if lower.lo() > &fact_sq || upper.hi() < &fact_sq {
            return CheckRecord {
                n,
                k: None,
                enclosure: bracket,
                terms_used: terms,
                decision: Decision::Fails,
                sign: None,
            };
        }
        if terms >= TERM_CAP {
            let width = bracket.width();
            return CheckRecord {
                n,
                k: None,
                enclosure: bracket,
                terms_used: terms,
                decision: Decision::Undecided { width },
                sign: None,
            };
        }
        terms *= 2;
    }
}

/// Doubled exponent windows of the two sandwich variants, as exact rationals.
fn stirling_exponents(n: u64, variant: StirlingVariant) -> (Option<BigRat>, BigRat) {
    let nn = BigRat::from(n);
    let inv = |c: i64, k: u32| -> BigRat { (&BigRat::ratio(1, c) / &nn.pow(k)).clone() };
    match variant {
        StirlingVariant::Prop3 => (None, &BigRat::from(2) * &inv(12, 1)),
        StirlingVariant::Prop5 => {
            let hi = &(&inv(12, 1) - &inv(360, 3)) + &inv(1260, 5);
            let lo = &hi - &inv(1680, 7);
            (
                Some(&BigRat::from(2) * &lo),
                &BigRat::from(2) * &hi,
            )
        }
    }
}

/// Enclosure of 2 pi n (n/e)^(2n) = 2 pi n^(2n+1) / e^(2n).
fn stirling_base(n: u64, terms: usize, bits: u64) -> Interval {
    let e = constants::e_at_terms(terms).round_out(bits);
    let pi = constants::pi_at_terms(terms).round_out(bits);
    let n_pow = BigRat::from(Pow::pow(&BigInt::from(n), 2 * n + 1) * 2u32);
    pi.scale(&n_pow)
        .div(&e.pow_round(2 * n, bits))
        .round_out(bits)
}

/// Enclosure of a_n^2 / (2 pi) where a_n = n! / (sqrt(n) (n/e)^n), computed
/// radical-free as (n!)^2 e^(2n) / (n^(2n+1) 2 pi). The sequence decreases
/// to 1.
pub fn wallis_probe(n: u64, p: &Precision) -> (Interval, usize) {
    assert!(n >= 1);
    let make = |terms: usize| -> Interval {
        let bits = working_bits(n, terms);
        let e = constants::e_at_terms(terms).round_out(bits);
        let pi = constants::pi_at_terms(terms).round_out(bits);
        let fact_sq = Pow::pow(&factorial(n), 2u32);
        let denom = Pow::pow(&BigInt::from(n), 2 * n + 1) * 2u32;
        let exact = Interval::from_ratio_outward(&fact_sq, &denom, bits);
        exact
            .mul(&e.pow_round(2 * n, bits))
            .round_out(bits)
            .div(&pi)
            .round_out(bits)
    };
    match p {
        Precision::Terms(t) => (make(*t), *t),
        Precision::TargetWidth(w) => constants::escalate_to_width(make, w),
    }
}
