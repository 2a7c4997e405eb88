// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element of order `n` is stored as a coefficient vector on the power
//! basis `1, ζ, …, ζ^{n-1}` of `Q[x]/(x^n - 1)`. Products are cyclic
//! convolutions and roots of unity stay one-term monomials, which keeps
//! matrix-group enumeration cheap. Equality is decided by reducing the
//! difference modulo the cyclotomic polynomial `Φ_n`.
//!
//! Operands of different orders are coerced to the lcm of their orders by
//! index dilation (`ζ_n^k = ζ_L^{kL/n}`).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Shorthand for building an exact rational from machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (ascending degree) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &div);
        }
    }
    let out = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, out.clone());
    out
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for shift in (0..=nd - dd).rev() {
        let c = rem[shift + dd];
        quot[shift] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[shift + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "non-exact cyclotomic division");
    quot
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// An exact element of the cyclotomic field `Q(ζ_n)`.
#[derive(Clone)]
pub struct CycloNumber {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycloNumber {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `Σ coeffs[k] ζ_n^k` from a power-basis coefficient vector of length `n`.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order >= 1);
        assert_eq!(
            coeffs.len(),
            order as usize,
            "coefficient vector length must equal the order"
        );
        CycloNumber { order, coeffs }
    }

    /// `ζ_n^k`; negative `k` is taken modulo `n`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root_of_unity requires n >= 1");
        let mut coeffs = vec![BigRational::zero(); n as usize];
        coeffs[k.rem_euclid(n as i64) as usize] = BigRational::one();
        CycloNumber { order: n, coeffs }
    }

    /// `ω = e^{2πi/3}`.
    pub fn omega() -> Self {
        Self::root_of_unity(3, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Raw power-basis coefficients in `Q[x]/(x^n - 1)`; not canonical.
    pub fn raw_coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-expresses the element in `Q(ζ_m)` for a multiple `m` of the current order.
    pub fn coerce(&self, m: u32) -> Self {
        assert!(
            m.is_multiple_of(self.order),
            "cannot coerce order {} into {}",
            self.order,
            m
        );
        if m == self.order {
            return self.clone();
        }
        let stride = (m / self.order) as usize;
        let mut coeffs = vec![BigRational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[k * stride] = c.clone();
            }
        }
        CycloNumber { order: m, coeffs }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let l = a.order.lcm(&b.order);
        (a.coerce(l), b.coerce(l))
    }

    /// Canonical coefficients: the remainder modulo `Φ_n`, length `φ(n)`.
    pub fn reduced_coeffs(&self) -> Vec<BigRational> {
        let phi = cyclotomic_polynomial(self.order);
        let d = phi.len() - 1;
        let mut c = self.coeffs.clone();
        for deg in (d..c.len()).rev() {
            if c[deg].is_zero() {
                continue;
            }
            let lead = c[deg].clone();
            let shift = deg - d;
            for (i, &p) in phi.iter().enumerate() {
                if p != 0 {
                    c[shift + i] -= &lead * BigInt::from(p);
                }
            }
        }
        c.truncate(d);
        c
    }

    /// The same element with coefficients reduced modulo `Φ_n`; idempotent.
    pub fn canonical(&self) -> Self {
        let mut coeffs = self.reduced_coeffs();
        coeffs.resize(self.order as usize, BigRational::zero());
        CycloNumber {
            order: self.order,
            coeffs,
        }
    }

    /// Canonical coefficients after coercion to order `m`; used as hash keys.
    pub fn key_at(&self, m: u32) -> Vec<BigRational> {
        self.coerce(m).reduced_coeffs()
    }

    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(Zero::is_zero) {
            return true;
        }
        self.reduced_coeffs().iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        let r = self.reduced_coeffs();
        if r.iter().skip(1).all(Zero::is_zero) {
            Some(r.into_iter().next().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Galois automorphism `ζ ↦ ζ^k`; `k` must be coprime to the order.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.order as i64;
        debug_assert!(
            n == 1 || k.rem_euclid(n).gcd(&n) == 1,
            "non-unit Galois index"
        );
        let mut coeffs = vec![BigRational::zero(); self.order as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = ((j as i64) * k).rem_euclid(n) as usize;
                coeffs[idx] += c;
            }
        }
        CycloNumber {
            order: self.order,
            coeffs,
        }
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// `|x|^2 = x · conj(x)`, a real element.
    pub fn norm_sqr(&self) -> Self {
        (self * &self.conj()).canonical()
    }

    /// Multiplicative inverse via the field norm: `x^{-1} = Π_{σ≠1} σ(x) / N(x)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order as i64;
        let mut others = CycloNumber::one().coerce(self.order);
        for k in 2..n.max(2) {
            if k.gcd(&n) == 1 {
                others = (&others * &self.galois(k)).canonical();
            }
        }
        let norm = (self * &others)
            .to_rational()
            .ok_or_else(|| Error::Inconsistency("field norm is not rational".into()))?;
        Ok(others.scale(&norm.recip()))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycloNumber::one().coerce(self.order);
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &b).canonical();
            }
            b = (&b * &b).canonical();
            e >>= 1;
        }
        Ok(acc)
    }

    /// Embedding into the complex numbers with `ζ_n ↦ e^{2πi/n}`.
    pub fn embed(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let angle = 2.0 * std::f64::consts::PI * (k as f64) / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    /// Sign of a real element. Rational values are compared exactly; otherwise
    /// the embedding decides, and values too close to zero are rejected.
    pub fn real_sign(&self) -> Result<std::cmp::Ordering> {
        if let Some(q) = self.to_rational() {
            return Ok(q.cmp(&BigRational::zero()));
        }
        let z = self.embed();
        if z.im.abs() > 1e-9 {
            return Err(Error::Inconsistency(format!(
                "sign requested for non-real value {self}"
            )));
        }
        if z.re.abs() < 1e-9 {
            return Err(Error::Inconsistency(format!(
                "sign of {self} not decidable in floating point"
            )));
        }
        Ok(z.re.partial_cmp(&0.0).unwrap())
    }

    /// Exponent `k` with `self = ζ_n^k` if the element is a root of unity
    /// of the given order `n`.
    pub fn root_index(&self, n: u32) -> Option<u32> {
        (0..n).find(|&k| *self == CycloNumber::root_of_unity(n, k as i64))
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::aligned(self, other);
        let diff: Vec<BigRational> = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CycloNumber {
            order: a.order,
            coeffs: diff,
        }
        .is_zero()
    }
}

impl Eq for CycloNumber {}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = CycloNumber::aligned(self, rhs);
        CycloNumber {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = CycloNumber::aligned(self, rhs);
        let n = a.order as usize;
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                coeffs[(i + j) % n] += x * y;
            }
        }
        CycloNumber {
            order: a.order,
            coeffs,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: &CycloNumber) -> CycloNumber {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl From<BigRational> for CycloNumber {
    fn from(q: BigRational) -> Self {
        CycloNumber::from_rational(q)
    }
}

impl From<i64> for CycloNumber {
    fn from(n: i64) -> Self {
        CycloNumber::from_int(n)
    }
}

impl fmt::Display for CycloNumber {
    /// Canonical form, e.g. `1 - 2*ζ3^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced_coeffs();
        let mut first = true;
        for (k, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "ζ{}^{}", self.order, k)?,
                (_, false) => write!(f, "{}*ζ{}^{}", mag, self.order, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber({self})")
    }
}
