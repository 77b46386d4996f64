//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree order: `coeffs[i]` holds the
//! coefficient of x^i. The representation is canonical: the vector is empty
//! for the zero polynomial and the last element is nonzero otherwise.

use crate::rat::BigRat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRat>,
}

impl Poly {
    // ---- Constructors ----

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![BigRat::one()] }
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        Poly { coeffs: vec![BigRat::zero(), BigRat::one()] }
    }

    pub fn constant(c: BigRat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// The monomial c * x^deg.
    pub fn monomial(c: BigRat, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// Construct from ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<BigRat>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from integer coefficients (ascending).
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRat::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    // ---- Queries ----

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    /// True when every nonzero coefficient is positive and at least one is.
    pub fn nonzero_coeffs_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// True when every coefficient is nonnegative (zero polynomial included).
    pub fn coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    // ---- Arithmetic ----

    pub fn scale(&self, c: &BigRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigRat {
        self.eval(&BigRat::from(x))
    }

    /// Binary-exponentiation power.
    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divide by the linear factor (x - b): returns (quotient, remainder) with
    /// `self = quotient * (x - b) + remainder` and `remainder = self(b)`.
    /// Panics on the zero polynomial.
    pub fn synthetic_divide(&self, b: &BigRat) -> (Poly, BigRat) {
        assert!(!self.is_zero(), "synthetic_divide: zero polynomial");
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![BigRat::zero(); d];
        let mut carry = self.coeffs[d].clone();
        for i in (0..d).rev() {
            quotient[i] = carry.clone();
            carry = &self.coeffs[i] + &(&carry * b);
        }
        (Poly::from_coeffs(quotient), carry)
    }

    /// Long division: returns (quotient, remainder) with deg(rem) < deg(d).
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "divrem: division by zero polynomial");
        if self.degree() < d.degree() {
            return (Poly::zero(), self.clone());
        }
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = &rem[rem.len() - 1] * &lead;
            if !factor.is_zero() {
                for i in 0..dd {
                    rem[k + i] = &rem[k + i] - &(&factor * &d.coeffs[i]);
                }
            }
            quo[k] = factor;
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        (Poly::from_coeffs(quo), Poly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "div_exact: nonzero remainder");
        q
    }

    // ---- Content and gcd ----

    /// Split into `(content, primitive)` where `content` is the unique
    /// positive rational with `self = content * primitive` and `primitive` an
    /// integer-coefficient polynomial whose coefficients have gcd one. The
    /// sign stays with the primitive part.
    pub fn content_split(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        let primitive: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
        (BigRat::new(g, den_lcm), primitive)
    }

    fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> Poly {
        Poly::from_coeffs(coeffs.into_iter().map(BigRat::from).collect())
    }

    /// Polynomial gcd, returned as a primitive integer polynomial with
    /// positive leading coefficient (the constant 1 for coprime inputs).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() && b.is_zero() {
            return Poly::zero();
        }
        if a.is_zero() {
            let (_, p) = b.content_split();
            return signed_primitive(p);
        }
        if b.is_zero() {
            let (_, p) = a.content_split();
            return signed_primitive(p);
        }
        let (_, pa) = a.content_split();
        let (_, pb) = b.content_split();
        Poly::from_bigint_coeffs(subresultant_gcd(pa, pb))
    }
}

fn signed_primitive(mut p: Vec<BigInt>) -> Poly {
    if p.last().map_or(false, |c| c.is_negative()) {
        for c in &mut p {
            *c = -std::mem::take(c);
        }
    }
    Poly::from_bigint_coeffs(p)
}

fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder: returns `lc(b)^(deg a - deg b + 1) * a mod b` over the
/// integers (ascending coefficients; both inputs nonzero, deg a >= deg b).
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = 0u32;
    let needed = (a.len() - b.len() + 1) as u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for i in 0..db {
            r[dr - db + i] = &r[dr - db + i] - &(&lr * &b[i]);
        }
        r.pop();
        trim_int(&mut r);
        steps += 1;
        if r.is_empty() {
            break;
        }
    }
    // Degree can drop by more than one per step; pad the multiplier so the
    // result is exactly lc(b)^(delta+1) * a mod b, as the subresultant
    // recurrences require.
    for _ in steps..needed {
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
    }
    r
}

/// Subresultant polynomial remainder sequence over the integers; inputs and
/// output are primitive, output leading coefficient positive.
fn subresultant_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        // Nonzero constant: primitive inputs are coprime to it.
        return vec![BigInt::one()];
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = int_prem(&a, &b);
        if r.is_empty() {
            return primitive_int(b);
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g * num_traits::Pow::pow(&h, delta);
        a = b;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::Pow::pow(&g, delta) / num_traits::Pow::pow(&h, delta - 1)
        };
    }
}

fn primitive_int(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

// ---- Operators ----

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::from_coeffs(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
