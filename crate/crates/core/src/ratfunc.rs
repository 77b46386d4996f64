//! Normalized rational functions: quotients of two polynomials.
//!
//! Canonical form: numerator and denominator are coprime polynomials with
//! integer coefficients, the pair shares no integer content, and the
//! denominator's leading coefficient is positive. Two rational functions are
//! equal as functions exactly when their representations are equal, so every
//! identity check reduces to a structural comparison.

use crate::poly::Poly;
use crate::rat::BigRat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    numer: Poly,
    denom: Poly,
}

impl RatFunc {
    // ---- Constructors ----

    /// Normalized quotient `numer / denom`. Panics if `denom` is zero.
    pub fn new(numer: Poly, denom: Poly) -> Self {
        assert!(!denom.is_zero(), "RatFunc: zero denominator");
        if numer.is_zero() {
            return RatFunc { numer: Poly::zero(), denom: Poly::one() };
        }
        let g = Poly::gcd(&numer, &denom);
        let (numer, denom) = if g.degree() == Some(0) {
            (numer, denom)
        } else {
            (numer.div_exact(&g), denom.div_exact(&g))
        };
        Self::scalar_normalize(numer, denom)
    }

    /// Scale the coprime pair so both are integer polynomials, strip the
    /// shared integer content, and make the denominator's lead positive.
    fn scalar_normalize(numer: Poly, denom: Poly) -> Self {
        let (cn, pn) = numer.content_split();
        let (cd, pd) = denom.content_split();
        // numer/denom = (cn/cd) * pn/pd with pn, pd primitive integer polys.
        let scale = &cn / &cd;
        let mut num_int: Vec<BigInt> = pn.iter().map(|c| c * scale.numer()).collect();
        let mut den_int: Vec<BigInt> = pd.iter().map(|c| c * scale.denom()).collect();
        let mut g = BigInt::zero();
        for c in num_int.iter().chain(den_int.iter()) {
            g = g.gcd(c);
        }
        if den_int.last().unwrap().is_negative() {
            g = -g;
        }
        for c in num_int.iter_mut().chain(den_int.iter_mut()) {
            *c = &*c / &g;
        }
        RatFunc {
            numer: Poly::from_coeffs(num_int.into_iter().map(BigRat::from).collect()),
            denom: Poly::from_coeffs(den_int.into_iter().map(BigRat::from).collect()),
        }
    }

    pub fn zero() -> Self {
        RatFunc { numer: Poly::zero(), denom: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { numer: Poly::one(), denom: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::scalar_normalize(p, Poly::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        RatFunc { numer: Poly::x(), denom: Poly::one() }
    }

    /// The reciprocal of a scaled power: `1 / (c * base^k)`.
    pub fn recip_of(c: i64, base: Poly, k: u32) -> Self {
        RatFunc::new(Poly::one(), base.pow(k).scale(&BigRat::from(c)))
    }

    // ---- Queries ----

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    /// True exactly when the normalized numerator is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// When the denominator is constant, the underlying polynomial.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.denom.degree() == Some(0) {
            Some(self.numer.scale(&self.denom.coeff(0).recip()))
        } else {
            None
        }
    }

    /// Exact evaluation; `None` at poles of the normalized form.
    pub fn eval(&self, x: &BigRat) -> Option<BigRat> {
        let d = self.denom.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(&self.numer.eval(x) / &d)
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        if self.is_zero() {
            return RatFunc::zero();
        }
        Self::scalar_normalize(self.numer.scale(c), self.denom.clone())
    }

    /// Componentwise power; coprimality and normalization are preserved.
    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return RatFunc::one();
        }
        RatFunc { numer: self.numer.pow(exp), denom: self.denom.pow(exp) }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "RatFunc: reciprocal of zero");
        RatFunc::new(self.denom.clone(), self.numer.clone())
    }

    /// Exact signed sum: each term enters with sign +1 or -1.
    pub fn combine(terms: &[(i8, RatFunc)]) -> Self {
        let mut acc = RatFunc::zero();
        for (sign, t) in terms {
            match sign {
                1 => acc = &acc + t,
                -1 => acc = &acc - t,
                _ => panic!("RatFunc::combine: sign must be +1 or -1"),
            }
        }
        acc
    }
}

// ---- Operators ----

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = Poly::gcd(&self.denom, &rhs.denom);
        let (db, dd) = if g.degree() == Some(0) {
            (self.denom.clone(), rhs.denom.clone())
        } else {
            (self.denom.div_exact(&g), rhs.denom.div_exact(&g))
        };
        // lcm(denoms) = self.denom * dd; numerator over it:
        let num = &(&self.numer * &dd) + &(&rhs.numer * &db);
        RatFunc::new(num, &self.denom * &dd)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { numer: -&self.numer, denom: self.denom.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-reduce before multiplying to keep degrees low.
        let g1 = Poly::gcd(&self.numer, &rhs.denom);
        let g2 = Poly::gcd(&rhs.numer, &self.denom);
        let n1 = if g1.degree() == Some(0) { self.numer.clone() } else { self.numer.div_exact(&g1) };
        let d2 = if g1.degree() == Some(0) { rhs.denom.clone() } else { rhs.denom.div_exact(&g1) };
        let n2 = if g2.degree() == Some(0) { rhs.numer.clone() } else { rhs.numer.div_exact(&g2) };
        let d1 = if g2.degree() == Some(0) { self.denom.clone() } else { self.denom.div_exact(&g2) };
        RatFunc::scalar_normalize(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.recip()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == Poly::one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
