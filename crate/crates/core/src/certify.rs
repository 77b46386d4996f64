//! Positivity certificates for polynomials on integer arguments.
//!
//! To show `p(k) > 0` for every integer `k >= a`, search for the smallest
//! integer shift `b >= max(a, 0)` such that synthetic division by `(x - b)`
//! leaves a quotient with all nonnegative coefficients (at least one
//! positive) and a nonnegative remainder. That representation
//! `p(x) = q(x)(x - b) + r` makes `p` positive for every real `x > b`, and
//! the finitely many integers in `[a, b)` are checked by direct evaluation.

use crate::poly::Poly;
use crate::rat::BigRat;

/// A shift certificate: `p(x) = quotient(x) * (x - shift) + remainder` with
/// nonnegative quotient coefficients and remainder, plus the integer points
/// below the shift that were verified by evaluation.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub shift: i64,
    pub quotient: Poly,
    pub remainder: BigRat,
    /// Every integer in `[a, shift)` with its (positive) value.
    pub checked_points: Vec<(i64, BigRat)>,
}

/// Result of a certificate search.
#[derive(Clone, Debug)]
pub enum PositivityOutcome {
    /// Positivity proved for all integers >= a.
    Certified(Certificate),
    /// A genuine counterexample: `p(point) <= 0` with `point >= a`.
    Counterexample { point: i64, value: BigRat },
    /// No certifying shift at or below the cap, and no counterexample found
    /// among the scanned integer points.
    CapReached { b_max: i64 },
}

impl PositivityOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, PositivityOutcome::Certified(_))
    }
}

/// Generous default search cap.
pub fn default_b_max(p: &Poly, from: i64) -> i64 {
    let deg = p.degree().unwrap_or(0) as i64;
    from.max(0) + 10 * (deg + 1)
}

/// Search for the smallest certifying shift in `[max(from, 0), b_max]`.
///
/// When a shift is found, every integer in `[from, shift)` is evaluated; a
/// nonpositive value there is reported as a counterexample rather than a
/// failed search. When no shift exists below the cap, the integers in
/// `[from, b_max]` are scanned so that a plainly visible counterexample is
/// still distinguished from running out of budget.
pub fn find_shift_certificate(p: &Poly, from: i64, b_max: i64) -> PositivityOutcome {
    assert!(!p.is_zero(), "find_shift_certificate: zero polynomial");
    assert!(from <= b_max, "find_shift_certificate: from > b_max");
    let start = from.max(0);
    for b in start..=b_max {
        let (quotient, remainder) = p.synthetic_divide(&BigRat::from(b));
        if quotient.coeffs_nonnegative()
            && !quotient.is_zero()
            && !remainder.is_negative()
        {
            let mut checked_points = Vec::new();
            for k in from..b {
                let value = p.eval_i64(k);
                if !value.is_positive() {
                    return PositivityOutcome::Counterexample { point: k, value };
                }
                checked_points.push((k, value));
            }
            return PositivityOutcome::Certified(Certificate {
                shift: b,
                quotient,
                remainder,
                checked_points,
            });
        }
    }
    for k in from..=b_max {
        let value = p.eval_i64(k);
        if !value.is_positive() {
            return PositivityOutcome::Counterexample { point: k, value };
        }
    }
    PositivityOutcome::CapReached { b_max }
}

/// Re-check a certificate from scratch: exact reconstruction, the coefficient
/// and sign conditions, and complete coverage of `[from, shift)` by positive
/// checked points.
pub fn verify_certificate(p: &Poly, cert: &Certificate, from: i64) -> bool {
    if cert.shift < from.max(0) {
        return false;
    }
    if !cert.quotient.coeffs_nonnegative() || cert.quotient.is_zero() {
        return false;
    }
    if cert.remainder.is_negative() {
        return false;
    }
    let shift_factor = Poly::from_coeffs(vec![BigRat::from(-cert.shift), BigRat::one()]);
    let rebuilt = &(&cert.quotient * &shift_factor) + &Poly::constant(cert.remainder.clone());
    if &rebuilt != p {
        return false;
    }
    let mut expected = from;
    for (k, value) in &cert.checked_points {
        if *k != expected || !value.is_positive() || value != &p.eval_i64(*k) {
            return false;
        }
        expected += 1;
    }
    expected == cert.shift
}

/// Decide positivity of `p` on the integers >= `from`, searching shifts up to
/// `b_max`.
pub fn positive_on_integers(p: &Poly, from: i64, b_max: i64) -> PositivityOutcome {
    find_shift_certificate(p, from, b_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{expected_concavity_numerator, expected_monotonicity_numerator};

    #[test]
    fn test_already_nonnegative_coefficients() {
        let p = Poly::from_i64(&[1, 0, 1]); // x^2 + 1
        match find_shift_certificate(&p, 0, default_b_max(&p, 0)) {
            PositivityOutcome::Certified(c) => {
                assert_eq!(c.shift, 0);
                assert_eq!(c.quotient, Poly::from_i64(&[0, 1]));
                assert_eq!(c.remainder, BigRat::from(1));
                assert!(c.checked_points.is_empty());
                assert!(verify_certificate(&p, &c, 0));
            }
            other => panic!("expected certificate, got {:?}", other),
        }
    }

    #[test]
    fn test_linear_with_shift() {
        let p = Poly::from_i64(&[-3, 1]); // x - 3
        match find_shift_certificate(&p, 4, default_b_max(&p, 4)) {
            PositivityOutcome::Certified(c) => {
                assert_eq!(c.shift, 4);
                assert_eq!(c.quotient, Poly::one());
                assert_eq!(c.remainder, BigRat::from(1));
                assert!(verify_certificate(&p, &c, 4));
            }
            other => panic!("expected certificate, got {:?}", other),
        }
    }

    #[test]
    fn test_counterexample() {
        let p = Poly::from_i64(&[1, -1]); // 1 - x
        match find_shift_certificate(&p, 2, default_b_max(&p, 2)) {
            PositivityOutcome::Counterexample { point, value } => {
                assert_eq!(point, 2);
                assert_eq!(value, BigRat::from(-1));
            }
            other => panic!("expected counterexample, got {:?}", other),
        }
    }

    #[test]
    fn test_growth_numerator_certificate() {
        // 5082x^3 - 2372x^2 - 7087x - 2240, positive from 2 on.
        let p = expected_monotonicity_numerator();
        match find_shift_certificate(&p, 2, default_b_max(&p, 2)) {
            PositivityOutcome::Certified(c) => {
                assert_eq!(c.shift, 2);
                assert_eq!(c.quotient, Poly::from_i64(&[8497, 7792, 5082]));
                assert_eq!(c.remainder, BigRat::from(14754));
                assert!(c.checked_points.is_empty());
                assert!(verify_certificate(&p, &c, 2));
            }
            other => panic!("expected certificate, got {:?}", other),
        }
        // From 1 the point check sees p(1) = -6617 < 0: a true counterexample.
        match find_shift_certificate(&p, 1, default_b_max(&p, 1)) {
            PositivityOutcome::Counterexample { point, value } => {
                assert_eq!(point, 1);
                assert_eq!(value, BigRat::from(-6617));
            }
            other => panic!("expected counterexample, got {:?}", other),
        }
    }

    #[test]
    fn test_growth_numerator_minimality() {
        let p = expected_monotonicity_numerator();
        let (q, _) = p.synthetic_divide(&BigRat::from(1));
        assert!(!q.coeffs_nonnegative(), "shift 1 must fail");
    }

    #[test]
    fn test_concavity_numerator_certificate() {
        // Positive from 4 on; below 4 it dips negative, so the search from 4
        // reproduces shift 5 with the single checked point 4.
        let p = expected_concavity_numerator();
        match find_shift_certificate(&p, 4, default_b_max(&p, 4)) {
            PositivityOutcome::Certified(c) => {
                assert_eq!(c.shift, 5);
                assert_eq!(c.quotient, Poly::from_i64(&[433747, 85733, 15061, 6389, 2842]));
                assert_eq!(c.remainder, BigRat::from(2166128));
                assert_eq!(c.checked_points, vec![(4, BigRat::from(12025))]);
                assert!(verify_certificate(&p, &c, 4));
            }
            other => panic!("expected certificate, got {:?}", other),
        }
        // From 2 the search finds the genuine dip at 2.
        match find_shift_certificate(&p, 2, default_b_max(&p, 2)) {
            PositivityOutcome::Counterexample { point, value } => {
                assert_eq!(point, 2);
                assert_eq!(value, BigRat::from(-119995));
            }
            other => panic!("expected counterexample, got {:?}", other),
        }
    }

    #[test]
    fn test_concavity_numerator_minimality() {
        let p = expected_concavity_numerator();
        let (q, _) = p.synthetic_divide(&BigRat::from(4));
        assert!(!q.coeffs_nonnegative(), "shift 4 must fail");
    }

    #[test]
    fn test_exp_tail_numerator_certificate() {
        // The degree-29 numerator of the lower exponential remainder: shift 2,
        // 22-digit remainder, empty point list when starting from 2.
        let r = crate::identities::verify_exp_lower();
        let p = r.computed_numerator;
        match find_shift_certificate(&p, 2, default_b_max(&p, 2)) {
            PositivityOutcome::Certified(c) => {
                assert_eq!(c.shift, 2);
                assert_eq!(
                    BigRat::from(r.expected_constant.clone().unwrap()),
                    c.remainder
                );
                assert!(verify_certificate(&p, &c, 2));
            }
            other => panic!("expected certificate, got {:?}", other),
        }
    }

    #[test]
    fn test_verify_rejects_mutations() {
        let p = expected_monotonicity_numerator();
        let cert = match find_shift_certificate(&p, 2, 40) {
            PositivityOutcome::Certified(c) => c,
            _ => unreachable!(),
        };
        // Remainder off by one: reconstruction mismatch.
        let mut bad = cert.clone();
        bad.remainder = &bad.remainder - &BigRat::one();
        assert!(!verify_certificate(&p, &bad, 2));
        // Missing required checked point.
        let p4 = expected_concavity_numerator();
        let cert4 = match find_shift_certificate(&p4, 4, 60) {
            PositivityOutcome::Certified(c) => c,
            _ => unreachable!(),
        };
        let mut gap = cert4.clone();
        gap.checked_points.clear();
        assert!(!verify_certificate(&p4, &gap, 4));
    }

    #[test]
    fn test_cap_reached_is_distinct() {
        // x^2 - 10x + 26 is positive everywhere but needs b >= 10 before the
        // quotient turns nonnegative; a tiny cap forces the budget outcome.
        let p = Poly::from_i64(&[26, -10, 1]);
        match find_shift_certificate(&p, 0, 3) {
            PositivityOutcome::CapReached { b_max } => assert_eq!(b_max, 3),
            other => panic!("expected cap, got {:?}", other),
        }
        match find_shift_certificate(&p, 0, 20) {
            PositivityOutcome::Certified(c) => assert!(c.shift >= 5),
            other => panic!("expected certificate, got {:?}", other),
        }
    }

    #[test]
    fn test_certificate_implies_real_positivity() {
        // Sample rationals above the shift; the representation forces
        // positivity there.
        let p = expected_concavity_numerator();
        let cert = match find_shift_certificate(&p, 4, 60) {
            PositivityOutcome::Certified(c) => c,
            _ => unreachable!(),
        };
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..20 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let frac_num = (state >> 33) as i64;
            let x = &BigRat::from(cert.shift)
                + &(&BigRat::one() + &BigRat::new(frac_num.into(), (1i64 << 31).into()));
            assert!(p.eval(&x).is_positive(), "not positive at {}", x);
        }
    }

    #[test]
    fn test_soundness_window() {
        // Certified implies brute-force positivity on a window past the shift.
        let p = expected_monotonicity_numerator();
        if let PositivityOutcome::Certified(c) = find_shift_certificate(&p, 2, 40) {
            let deg = p.degree().unwrap() as i64;
            for k in 2..=(c.shift + deg + 10) {
                assert!(p.eval_i64(k).is_positive());
            }
        } else {
            panic!("expected certificate");
        }
    }
}
