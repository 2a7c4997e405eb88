// SPDX-License-Identifier: Apache-2.0

//! Sparse polynomials in the sphere coordinates `z1, z2, z3`, their formal
//! conjugates `zb1, zb2, zb3`, the radius parameter `ε` and a unit-circle
//! pair `λ, λb`, reduced modulo the boundary constraint ideal
//!
//! ```text
//! zb1·z1 → 1 − ε
//! zb3·z3 → ε − zb2·z2
//! λ·λb   → 1
//! ```
//!
//! The three leading monomials are pairwise coprime, so the rules form a
//! Gröbner basis under [`rewrite_order`] and reduced forms are canonical:
//! a polynomial lies in the ideal iff it reduces to the empty term map.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;

use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::matrix::UMatrix;

pub const NVARS: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Z1,
    Z2,
    Z3,
    Zb1,
    Zb2,
    Zb3,
    Eps,
    Lam,
    LamB,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Z1,
        Var::Z2,
        Var::Z3,
        Var::Zb1,
        Var::Zb2,
        Var::Zb3,
        Var::Eps,
        Var::Lam,
        Var::LamB,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The formal conjugate variable; `ε` is real.
    pub fn conj(self) -> Var {
        match self {
            Var::Z1 => Var::Zb1,
            Var::Z2 => Var::Zb2,
            Var::Z3 => Var::Zb3,
            Var::Zb1 => Var::Z1,
            Var::Zb2 => Var::Z2,
            Var::Zb3 => Var::Z3,
            Var::Eps => Var::Eps,
            Var::Lam => Var::LamB,
            Var::LamB => Var::Lam,
        }
    }

    /// `z_q` for `q ∈ {1, 2, 3}`.
    pub fn z(q: usize) -> Var {
        [Var::Z1, Var::Z2, Var::Z3][q - 1]
    }

    pub fn zb(q: usize) -> Var {
        [Var::Zb1, Var::Zb2, Var::Zb3][q - 1]
    }

    fn name(self) -> &'static str {
        ["z1", "z2", "z3", "zb1", "zb2", "zb3", "eps", "lam", "lamb"][self.index()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn of(pairs: &[(Var, u16)]) -> Self {
        let mut e = [0; NVARS];
        for &(v, k) in pairs {
            e[v.index()] += k;
        }
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        let mut e = other.0;
        for (a, b) in e.iter_mut().zip(self.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }

    pub fn conj(&self) -> Monomial {
        let mut e = [0; NVARS];
        for v in Var::ALL {
            e[v.conj().index()] = self.exp(v);
        }
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Lexicographic monomial order with variable priority
/// `zb1 > zb3 > λ > z1 > z3 > z2 > zb2 > λb > ε`; every rule's left side
/// dominates its right side, so rewriting terminates.
pub fn rewrite_order(a: &Monomial, b: &Monomial) -> Ordering {
    const PRIORITY: [Var; NVARS] = [
        Var::Zb1,
        Var::Zb3,
        Var::Lam,
        Var::Z1,
        Var::Z3,
        Var::Z2,
        Var::Zb2,
        Var::LamB,
        Var::Eps,
    ];
    PRIORITY
        .iter()
        .map(|&v| a.exp(v).cmp(&b.exp(v)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

type Terms = BTreeMap<Monomial, CycloNumber>;

fn add_term(terms: &mut Terms, m: Monomial, c: CycloNumber) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&m) {
        Some(existing) => {
            let sum = (&*existing + &c).canonical();
            if sum.is_zero() {
                terms.remove(&m);
            } else {
                *existing = sum;
            }
        }
        None => {
            terms.insert(m, c.canonical());
        }
    }
}

fn raw_mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(&mut out, ma.mul(mb), ca * cb);
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Rule {
    pub lhs: Monomial,
    pub rhs: Vec<(Monomial, CycloNumber)>,
}

/// An ordered list of monomial rewrite rules.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub rules: Vec<Rule>,
}

impl Default for ConstraintSystem {
    /// The sphere/boundary system described in the module docs.
    fn default() -> Self {
        let one = CycloNumber::one();
        let neg = CycloNumber::from_int(-1);
        ConstraintSystem {
            rules: vec![
                Rule {
                    lhs: Monomial::of(&[(Var::Zb1, 1), (Var::Z1, 1)]),
                    rhs: vec![
                        (Monomial::one(), one.clone()),
                        (Monomial::var(Var::Eps), neg.clone()),
                    ],
                },
                Rule {
                    lhs: Monomial::of(&[(Var::Zb3, 1), (Var::Z3, 1)]),
                    rhs: vec![
                        (Monomial::var(Var::Eps), one.clone()),
                        (Monomial::of(&[(Var::Zb2, 1), (Var::Z2, 1)]), neg),
                    ],
                },
                Rule {
                    lhs: Monomial::of(&[(Var::Lam, 1), (Var::LamB, 1)]),
                    rhs: vec![(Monomial::one(), one)],
                },
            ],
        }
    }
}

impl ConstraintSystem {
    /// Checks that every rule strictly decreases [`rewrite_order`].
    pub fn is_terminating(&self) -> bool {
        self.rules.iter().all(|r| {
            r.rhs
                .iter()
                .all(|(m, _)| rewrite_order(&r.lhs, m) == Ordering::Greater)
        })
    }

    fn reducible(&self, m: &Monomial) -> Option<&Rule> {
        self.rules.iter().find(|r| r.lhs.divides(m))
    }

    /// Full reduction, applying the first applicable rule to each term.
    fn reduce(&self, terms: Terms) -> Terms {
        let mut out = Terms::new();
        let mut work: Vec<(Monomial, CycloNumber)> = terms.into_iter().collect();
        while let Some((m, c)) = work.pop() {
            match self.reducible(&m) {
                None => add_term(&mut out, m, c),
                Some(rule) => {
                    let rest = rule.lhs.quotient(&m);
                    for (rm, rc) in &rule.rhs {
                        work.push((rest.mul(rm), &c * rc));
                    }
                }
            }
        }
        out
    }

    /// Reduction that picks a random applicable (term, rule) pair at every
    /// step. Used to test that the normal form is independent of rule order.
    pub fn reduce_randomized<R: Rng>(
        &self,
        raw: &[(Monomial, CycloNumber)],
        rng: &mut R,
    ) -> SpherePoly {
        let mut work: Vec<(Monomial, CycloNumber)> = raw.to_vec();
        let mut done = Terms::new();
        while !work.is_empty() {
            let idx = rng.gen_range(0..work.len());
            let (m, c) = work.swap_remove(idx);
            let applicable: Vec<&Rule> = self.rules.iter().filter(|r| r.lhs.divides(&m)).collect();
            if applicable.is_empty() {
                add_term(&mut done, m, c);
                continue;
            }
            let rule = applicable[rng.gen_range(0..applicable.len())];
            let rest = rule.lhs.quotient(&m);
            for (rm, rc) in &rule.rhs {
                work.push((rest.mul(rm), &c * rc));
            }
        }
        SpherePoly { terms: done }
    }
}

fn default_system() -> &'static ConstraintSystem {
    static SYS: std::sync::OnceLock<ConstraintSystem> = std::sync::OnceLock::new();
    SYS.get_or_init(ConstraintSystem::default)
}

/// A polynomial kept in reduced normal form modulo the default constraint system.
#[derive(Clone, Default)]
pub struct SpherePoly {
    terms: Terms,
}

impl SpherePoly {
    pub fn zero() -> Self {
        SpherePoly::default()
    }

    pub fn one() -> Self {
        Self::constant(CycloNumber::one())
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::from_terms(vec![(Monomial::one(), c)])
    }

    pub fn var(v: Var) -> Self {
        Self::from_terms(vec![(Monomial::var(v), CycloNumber::one())])
    }

    /// `coeff · m`, reduced.
    pub fn term(m: Monomial, coeff: CycloNumber) -> Self {
        Self::from_terms(vec![(m, coeff)])
    }

    /// Builds from arbitrary (possibly reducible) terms and reduces.
    pub fn from_terms(raw: Vec<(Monomial, CycloNumber)>) -> Self {
        let mut t = Terms::new();
        for (m, c) in raw {
            add_term(&mut t, m, c);
        }
        SpherePoly {
            terms: default_system().reduce(t),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the polynomial lies in the constraint ideal.
    pub fn is_zero_mod_constraints(&self) -> bool {
        self.terms.is_empty()
    }

    /// Holds for every stored polynomial; exposed for tests.
    pub fn is_fully_reduced(&self) -> bool {
        self.terms
            .keys()
            .all(|m| default_system().reducible(m).is_none())
            && self.terms.values().all(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut t = Terms::new();
        for (m, x) in &self.terms {
            add_term(&mut t, *m, x * c);
        }
        SpherePoly { terms: t }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Formal conjugation: swaps each variable with its conjugate and
    /// conjugates coefficients.
    pub fn conj(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.conj(), c.conj()))
                .collect(),
        )
    }

    /// Simultaneous substitution. The assignment must commute with formal
    /// conjugation (`zb_q ↦ conj(image of z_q)`, `ε ↦` a self-conjugate
    /// polynomial); unassigned variables map to themselves.
    pub fn substitute(&self, assignment: &BTreeMap<Var, SpherePoly>) -> Result<Self> {
        let image = |v: Var| {
            assignment
                .get(&v)
                .cloned()
                .unwrap_or_else(|| SpherePoly::var(v))
        };
        for v in Var::ALL {
            if !(assignment.contains_key(&v) || assignment.contains_key(&v.conj())) {
                continue;
            }
            if image(v.conj()) != image(v).conj() {
                return Err(Error::Precondition(format!(
                    "substitution is not conjugate-consistent at {}",
                    v.name()
                )));
            }
        }
        let images: Vec<SpherePoly> = Var::ALL.iter().map(|&v| image(v)).collect();
        let mut acc = SpherePoly::zero();
        for (m, c) in &self.terms {
            let mut t = SpherePoly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t = &t * &images[v.index()].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Numeric evaluation with values indexed by [`Var::index`].
    pub fn evaluate(&self, vals: &[Complex64; NVARS]) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut x = c.embed();
                for v in Var::ALL {
                    let e = m.exp(v);
                    if e > 0 {
                        x *= vals[v.index()].powu(e as u32);
                    }
                }
                x
            })
            .sum()
    }

    /// Exact evaluation with cyclotomic values.
    pub fn evaluate_exact(&self, vals: &[CycloNumber; NVARS]) -> Result<CycloNumber> {
        let mut acc = CycloNumber::zero();
        for (m, c) in &self.terms {
            let mut x = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    x = &x * &vals[v.index()].pow(e as i64)?;
                }
            }
            acc = (&acc + &x).canonical();
        }
        Ok(acc)
    }
}

impl PartialEq for SpherePoly {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_empty()
    }
}

impl Add for &SpherePoly {
    type Output = SpherePoly;
    fn add(self, rhs: &SpherePoly) -> SpherePoly {
        let mut t = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut t, *m, c.clone());
        }
        SpherePoly { terms: t }
    }
}

impl Sub for &SpherePoly {
    type Output = SpherePoly;
    fn sub(self, rhs: &SpherePoly) -> SpherePoly {
        self + &(-rhs)
    }
}

impl Neg for &SpherePoly {
    type Output = SpherePoly;
    fn neg(self) -> SpherePoly {
        SpherePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &SpherePoly {
    type Output = SpherePoly;
    fn mul(self, rhs: &SpherePoly) -> SpherePoly {
        SpherePoly {
            terms: default_system().reduce(raw_mul(&self.terms, &rhs.terms)),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SpherePoly {
            type Output = SpherePoly;
            fn $m(self, rhs: SpherePoly) -> SpherePoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SpherePoly {
    type Output = SpherePoly;
    fn neg(self) -> SpherePoly {
        -&self
    }
}

impl fmt::Display for SpherePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SpherePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpherePoly({self})")
    }
}

/// Square matrix of [`SpherePoly`] entries.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix {
    dim: usize,
    data: Vec<SpherePoly>,
}

impl PolyMatrix {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> SpherePoly) -> Self {
        PolyMatrix {
            dim,
            data: (0..dim * dim).map(|i| f(i / dim, i % dim)).collect(),
        }
    }

    pub fn constant(m: &UMatrix) -> Self {
        Self::from_fn(m.dim(), |i, j| SpherePoly::constant(m.get(i, j).clone()))
    }

    pub fn identity(dim: usize) -> Self {
        Self::constant(&UMatrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &SpherePoly {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: SpherePoly) {
        self.data[i * self.dim + j] = p;
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, p: &SpherePoly) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * p)
    }

    pub fn det(&self) -> SpherePoly {
        assert_eq!(self.dim, 3, "det implemented for 3x3");
        let g = |i, j| self.get(i, j);
        let t1 = g(0, 0) * &(&(g(1, 1) * g(2, 2)) - &(g(1, 2) * g(2, 1)));
        let t2 = g(0, 1) * &(&(g(1, 0) * g(2, 2)) - &(g(1, 2) * g(2, 0)));
        let t3 = g(0, 2) * &(&(g(1, 0) * g(2, 1)) - &(g(1, 1) * g(2, 0)));
        &(&t1 - &t2) + &t3
    }

    pub fn substitute(&self, assignment: &BTreeMap<Var, SpherePoly>) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|p| p.substitute(assignment))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            dim: self.dim,
            data,
        })
    }

    /// Entries that do not reduce to zero, as `(row, col, residual)`.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, SpherePoly)> {
        (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.get(i, j).is_empty())
            .map(|(i, j)| (i, j, self.get(i, j).clone()))
            .collect()
    }

    pub fn is_zero_mod_constraints(&self) -> bool {
        self.data.iter().all(SpherePoly::is_empty)
    }

    pub fn evaluate(&self, vals: &[Complex64; NVARS]) -> Vec<Complex64> {
        self.data.iter().map(|p| p.evaluate(vals)).collect()
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        let n = self.dim;
        PolyMatrix::from_fn(n, |i, j| {
            (0..n).fold(SpherePoly::zero(), |acc, k| {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if a.is_empty() || b.is_empty() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        })
    }
}

impl Mul<&UMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &UMatrix) -> PolyMatrix {
        self * &PolyMatrix::constant(rhs)
    }
}

impl Mul<&PolyMatrix> for &UMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        &PolyMatrix::constant(self) * rhs
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(self.dim, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;

    fn v(x: Var) -> SpherePoly {
        SpherePoly::var(x)
    }

    fn eps() -> SpherePoly {
        v(Var::Eps)
    }

    #[test]
    fn rule_one_applies() {
        let p = &v(Var::Zb1) * &v(Var::Z1);
        assert_eq!(p, &SpherePoly::one() - &eps());
    }

    #[test]
    fn boundary_relation() {
        let p = &(&v(Var::Zb3) * &v(Var::Z3)) + &(&v(Var::Zb2) * &v(Var::Z2));
        assert_eq!(p, eps());
    }

    #[test]
    fn sphere_relation_is_zero() {
        let p = &(&(&v(Var::Zb1) * &v(Var::Z1)) + &(&v(Var::Zb2) * &v(Var::Z2)))
            + &(&(&v(Var::Zb3) * &v(Var::Z3)) - &SpherePoly::one());
        assert!(p.is_zero_mod_constraints());
        assert!(!(&v(Var::Z1) - &v(Var::Z2)).is_zero_mod_constraints());
    }

    #[test]
    fn cleared_product_reduces() {
        let lhs = &(&v(Var::Zb1) * &v(Var::Z1)) * &eps();
        let rhs = &(&SpherePoly::one() - &eps()) * &eps();
        assert!((&lhs - &rhs).is_zero_mod_constraints());
    }

    #[test]
    fn default_system_terminates() {
        assert!(ConstraintSystem::default().is_terminating());
        let bad = ConstraintSystem {
            rules: vec![Rule {
                lhs: Monomial::var(Var::Z2),
                rhs: vec![(Monomial::of(&[(Var::Z2, 2)]), CycloNumber::one())],
            }],
        };
        assert!(!bad.is_terminating());
    }

    #[test]
    fn substitution_phase_twist() {
        let p = &v(Var::Zb1) * &v(Var::Z2);
        let w = CycloNumber::omega();
        let mut asg = BTreeMap::new();
        asg.insert(Var::Z2, v(Var::Z2).scale(&w));
        asg.insert(Var::Zb2, v(Var::Zb2).scale(&w.conj()));
        assert_eq!(p.substitute(&asg).unwrap(), p.scale(&w));
        assert_eq!(p.substitute(&BTreeMap::new()).unwrap(), p);
    }

    #[test]
    fn substitution_unit_circle() {
        let p = &v(Var::Zb1) * &v(Var::Z1);
        let mut asg = BTreeMap::new();
        asg.insert(Var::Z1, &v(Var::Lam) * &v(Var::Z1));
        asg.insert(Var::Zb1, &v(Var::LamB) * &v(Var::Zb1));
        assert_eq!(p.substitute(&asg).unwrap(), &SpherePoly::one() - &eps());
    }

    #[test]
    fn substitution_rejects_inconsistent_conjugates() {
        let mut asg = BTreeMap::new();
        asg.insert(Var::Z2, v(Var::Z2).scale(&CycloNumber::omega()));
        assert!(matches!(
            v(Var::Z2).substitute(&asg),
            Err(Error::Precondition(_))
        ));
        let mut asg = BTreeMap::new();
        asg.insert(Var::Eps, v(Var::Z1));
        assert!(eps().substitute(&asg).is_err());
    }

    #[test]
    fn additive_inverse() {
        let p = &(&v(Var::Z1) * &v(Var::Zb2)).scale(&CycloNumber::omega()) + &eps();
        assert!((&p + &(-&p)).is_zero_mod_constraints());
    }

    #[test]
    fn det_of_constant_matrix() {
        let m = UMatrix::diag(vec![
            2.into(),
            3.into(),
            CycloNumber::from_rational(rat(1, 6)),
        ]);
        assert_eq!(PolyMatrix::constant(&m).det(), SpherePoly::one());
    }
}
