// SPDX-License-Identifier: Apache-2.0

//! The regions `V₁`, `V₂ = P·V₁` and `V₀` of the unit sphere in `C³`.
//!
//! Points carry exact cyclotomic coordinates and a rational squared scale, so
//! that `z = √s · (z₁, z₂, z₃)`. Membership only ever needs `|z_q|²`, which
//! keeps everything free of square roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclo::{rat, CycloNumber};
use crate::error::{Error, Result};
use crate::matrix::UMatrix;

/// Boundary tolerance for floating-point membership.
pub const NUMERIC_TOL: f64 = 1e-12;

pub fn default_eps() -> BigRational {
    rat(49, 625)
}

/// `ε` together with the fixed matrix `P`.
#[derive(Debug, Clone)]
pub struct RegionSpec {
    eps: BigRational,
    p: PMatrix,
}

impl RegionSpec {
    pub fn new(eps: BigRational) -> Result<Self> {
        check_eps(&eps)?;
        Ok(RegionSpec {
            eps,
            p: PMatrix::standard(),
        })
    }

    pub fn eps(&self) -> &BigRational {
        &self.eps
    }

    pub fn eps_f64(&self) -> f64 {
        self.eps.to_f64().unwrap_or(f64::NAN)
    }

    pub fn p(&self) -> &PMatrix {
        &self.p
    }
}

pub fn check_eps(eps: &BigRational) -> Result<()> {
    if eps.is_positive() && *eps < rat(1, 9) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "ε must satisfy 0 < ε < 1/9, got {eps}"
        )))
    }
}

/// `P = √s · M` with `M = [[1, ω, 1], [1, 1, ω], [ω, 1, 1]]` and `s = 1/3`.
#[derive(Debug, Clone)]
pub struct PMatrix {
    pub m: UMatrix,
    pub scale_sq: BigRational,
}

impl PMatrix {
    pub fn standard() -> Self {
        let (o, w) = (CycloNumber::one(), CycloNumber::omega());
        let m = UMatrix::from_rows(vec![
            vec![o.clone(), w.clone(), o.clone()],
            vec![o.clone(), o.clone(), w.clone()],
            vec![w, o.clone(), o],
        ]);
        PMatrix {
            m,
            scale_sq: rat(1, 3),
        }
    }

    /// `P·P* = s·M·M* = I`.
    pub fn is_unitary(&self) -> bool {
        let mm = &self.m * &self.m.adjoint();
        mm.scale(&CycloNumber::from_rational(self.scale_sq.clone()))
            .is_identity()
    }

    /// `P^e` as (unscaled matrix, squared scale), `e ≥ 0`.
    pub fn pow(&self, e: u32) -> (UMatrix, BigRational) {
        let mut m = UMatrix::identity(3);
        let mut s = BigRational::one();
        for _ in 0..e {
            m = &m * &self.m;
            s *= &self.scale_sq;
        }
        (m, s)
    }

    /// `P X P⁻¹`; the scale cancels.
    pub fn conjugate(&self, x: &UMatrix) -> Result<UMatrix> {
        Ok(&(&self.m * x) * &self.m.inverse()?)
    }

    pub fn apply(&self, z: &SpherePointExact) -> SpherePointExact {
        SpherePointExact {
            coords: self.m.apply(&z.coords),
            scale_sq: &z.scale_sq * &self.scale_sq,
        }
    }

    /// `P⁻¹ z = P* z`.
    pub fn apply_inverse(&self, z: &SpherePointExact) -> SpherePointExact {
        SpherePointExact {
            coords: self.m.adjoint().apply(&z.coords),
            scale_sq: &z.scale_sq * &self.scale_sq,
        }
    }

    pub fn embed(&self) -> [[Complex64; 3]; 3] {
        let s = self.scale_sq.to_f64().unwrap().sqrt();
        let e = self.m.embed();
        let mut out = [[Complex64::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = e[3 * i + j] * s;
            }
        }
        out
    }
}

/// A point `√s · (z₁, z₂, z₃)` of the unit sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePointExact {
    coords: Vec<CycloNumber>,
    scale_sq: BigRational,
}

impl SpherePointExact {
    /// Rejects points off the unit sphere.
    pub fn new(coords: Vec<CycloNumber>, scale_sq: BigRational) -> Result<Self> {
        if coords.len() != 3 {
            return Err(Error::Precondition(
                "sphere points have three coordinates".into(),
            ));
        }
        let p = SpherePointExact { coords, scale_sq };
        let total = p
            .abs_sq()
            .into_iter()
            .fold(CycloNumber::zero(), |acc, x| acc + x);
        if !(total - CycloNumber::one()).is_zero() {
            return Err(Error::Precondition(format!(
                "point {p} is not on the unit sphere"
            )));
        }
        Ok(p)
    }

    /// Rescales a nonzero vector with rational squared norm onto the sphere.
    pub fn normalized(coords: Vec<CycloNumber>) -> Result<Self> {
        let norm = coords
            .iter()
            .fold(CycloNumber::zero(), |acc, z| acc + z.norm_sqr());
        let q = norm
            .to_rational()
            .ok_or_else(|| Error::Precondition(format!("squared norm {norm} is not rational")))?;
        if q.is_zero() {
            return Err(Error::Precondition("zero vector has no direction".into()));
        }
        Self::new(coords, q.recip())
    }

    pub fn from_rationals(xs: [BigRational; 3]) -> Result<Self> {
        Self::new(
            xs.into_iter().map(CycloNumber::from_rational).collect(),
            BigRational::one(),
        )
    }

    pub fn coords(&self) -> &[CycloNumber] {
        &self.coords
    }

    pub fn scale_sq(&self) -> &BigRational {
        &self.scale_sq
    }

    /// `|z_q|²` including the scale.
    pub fn abs_sq(&self) -> Vec<CycloNumber> {
        self.coords
            .iter()
            .map(|z| z.norm_sqr().scale(&self.scale_sq))
            .collect()
    }

    /// `|z_q|²` as rationals, when they are.
    pub fn abs_sq_rational(&self) -> Option<Vec<BigRational>> {
        self.abs_sq().iter().map(CycloNumber::to_rational).collect()
    }

    /// `M z` for a unitary `M`.
    pub fn apply(&self, m: &UMatrix) -> Self {
        SpherePointExact {
            coords: m.apply(&self.coords),
            scale_sq: self.scale_sq.clone(),
        }
    }

    pub fn to_numeric(&self) -> [Complex64; 3] {
        let s = self.scale_sq.to_f64().unwrap().sqrt();
        [
            self.coords[0].embed() * s,
            self.coords[1].embed() * s,
            self.coords[2].embed() * s,
        ]
    }
}

impl fmt::Display for SpherePointExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "√({})·({}, {}, {})",
            self.scale_sq, self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Interior,
    Boundary,
    Outside,
}

impl Region {
    /// Inside the closed region.
    pub fn is_member(self) -> bool {
        self != Region::Outside
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Interior => "interior",
            Region::Boundary => "boundary",
            Region::Outside => "outside",
        })
    }
}

/// The three pair-sums `|z_i|² + |z_j|²`, indexed by the omitted coordinate.
pub fn pair_sums<T: Clone + std::ops::Add<Output = T>>(abs: &[T]) -> [T; 3] {
    [
        abs[1].clone() + abs[2].clone(),
        abs[2].clone() + abs[0].clone(),
        abs[0].clone() + abs[1].clone(),
    ]
}

fn classify_exact(abs: &[CycloNumber], eps: &BigRational) -> Result<Region> {
    let e = CycloNumber::from_rational(eps.clone());
    let mut boundary = false;
    for s in pair_sums(abs) {
        match (s - e.clone()).real_sign()? {
            Ordering::Less => return Ok(Region::Interior),
            Ordering::Equal => boundary = true,
            Ordering::Greater => {}
        }
    }
    Ok(if boundary {
        Region::Boundary
    } else {
        Region::Outside
    })
}

pub fn in_v1(z: &SpherePointExact, spec: &RegionSpec) -> Result<Region> {
    classify_exact(&z.abs_sq(), spec.eps())
}

pub fn in_v2(z: &SpherePointExact, spec: &RegionSpec) -> Result<Region> {
    in_v1(&spec.p().apply_inverse(z), spec)
}

fn numeric_abs(z: &[Complex64; 3]) -> Result<[f64; 3]> {
    let abs = [z[0].norm_sqr(), z[1].norm_sqr(), z[2].norm_sqr()];
    let total: f64 = abs.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::Precondition(format!(
            "numeric point has squared norm {total}, not 1"
        )));
    }
    Ok(abs)
}

pub fn in_v1_numeric(z: &[Complex64; 3], eps: f64) -> Result<Region> {
    let abs = numeric_abs(z)?;
    let min = pair_sums(&abs).into_iter().fold(f64::INFINITY, f64::min);
    Ok(if (min - eps).abs() <= NUMERIC_TOL {
        Region::Boundary
    } else if min < eps {
        Region::Interior
    } else {
        Region::Outside
    })
}

pub fn apply_numeric(m: &[[Complex64; 3]; 3], z: &[Complex64; 3]) -> [Complex64; 3] {
    let mut out = [Complex64::zero(); 3];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..3).map(|j| m[i][j] * z[j]).sum();
    }
    out
}

fn adjoint_numeric(m: &[[Complex64; 3]; 3]) -> [[Complex64; 3]; 3] {
    let mut out = [[Complex64::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = m[j][i].conj();
        }
    }
    out
}

pub fn in_v2_numeric(z: &[Complex64; 3], eps: f64) -> Result<Region> {
    let pinv = adjoint_numeric(&PMatrix::standard().embed());
    in_v1_numeric(&apply_numeric(&pinv, z), eps)
}

pub fn umatrix_numeric(m: &UMatrix) -> [[Complex64; 3]; 3] {
    let e = m.embed();
    let mut out = [[Complex64::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = e[3 * i + j];
        }
    }
    out
}

/// A uniformly random point of the closed region `V₁`: a random rotation
/// slot `k`, pair-sum `s ∈ [0, ε]`, split and phases at random.
pub fn sample_v1<R: Rng>(rng: &mut R, eps: f64) -> [Complex64; 3] {
    let k = rng.gen_range(0..3);
    let s = rng.gen::<f64>() * eps;
    let u = rng.gen::<f64>();
    let mut abs = [0.0; 3];
    abs[k] = 1.0 - s;
    abs[(k + 1) % 3] = s * u;
    abs[(k + 2) % 3] = s * (1.0 - u);
    let mut z = [Complex64::zero(); 3];
    for q in 0..3 {
        z[q] = Complex64::from_polar(abs[q].sqrt(), rng.gen::<f64>() * std::f64::consts::TAU);
    }
    z
}

/// A random point of the unit sphere.
pub fn sample_sphere<R: Rng>(rng: &mut R) -> [Complex64; 3] {
    loop {
        let mut z = [Complex64::zero(); 3];
        for c in z.iter_mut() {
            *c = Complex64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0);
        }
        let n: f64 = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            return z.map(|c| c / n);
        }
    }
}

/// Rational bounds `lo ≤ √q ≤ hi` with `hi − lo ≤ 10⁻¹²`.
pub fn sqrt_bounds(q: &BigRational) -> (BigRational, BigRational) {
    assert!(!q.is_negative());
    let d = BigInt::from(10u64.pow(12));
    let (n, m) = (q.numer().clone(), q.denom().clone());
    // √(n/m) = √(n·m)/m
    let r = (&n * &m * &d * &d).sqrt();
    let den = &m * &d;
    (
        BigRational::new(r.clone(), den.clone()),
        BigRational::new(r + 1, den),
    )
}

fn fmt_q(q: &BigRational) -> String {
    format!("{} (≈ {:.6})", q, q.to_f64().unwrap_or(f64::NAN))
}

/// A point of `V₁` whose image under `P` violates the per-coordinate
/// estimate `|z_q|² ≥ 1/3 − ε`.
#[derive(Debug, Clone, Serialize)]
pub struct CoordinateBoundWitness {
    pub point: String,
    pub pair_sum: String,
    pub region_v1: Region,
    pub image_abs_sq: Vec<String>,
    pub claimed_lower_bound: String,
    pub image_min_pair_sum: String,
}

/// `z′ = (x, −ω²y, −y)` with `x²+2y² = 1` on the rational parametrization
/// `x = (1−2t²)/(1+2t²)`, `y = 2t/(1+2t²)`, `t = 1/n`; the first `n` with
/// `2y² ≤ ε` gives a point of `V₁` with `|(Pz′)₁|² = (x−2y)²/3 < 1/3 − ε`.
pub fn coordinate_bound_witness(spec: &RegionSpec) -> Result<Option<CoordinateBoundWitness>> {
    let eps = spec.eps();
    let claimed = rat(1, 3) - eps;
    for n in 2..10_000i64 {
        let t = rat(1, n);
        let den = BigRational::one() + &t * &t * rat(2, 1);
        let x = (BigRational::one() - &t * &t * rat(2, 1)) / &den;
        let y = &t * rat(2, 1) / &den;
        if &y * &y * rat(2, 1) > *eps {
            continue;
        }
        let w2 = CycloNumber::root_of_unity(3, 2);
        let coords = vec![
            CycloNumber::from_rational(x.clone()),
            -(&w2 * &CycloNumber::from_rational(y.clone())),
            CycloNumber::from_rational(-y.clone()),
        ];
        let z = SpherePointExact::new(coords, BigRational::one())?;
        let region = in_v1(&z, spec)?;
        let img = spec.p().apply(&z);
        let abs = img
            .abs_sq_rational()
            .ok_or_else(|| Error::Inconsistency("witness image has irrational moduli".into()))?;
        if !abs.iter().any(|a| *a < claimed) {
            return Ok(None);
        }
        let min_pair = pair_sums(&abs).into_iter().min().unwrap();
        return Ok(Some(CoordinateBoundWitness {
            point: z.to_string(),
            pair_sum: fmt_q(&(&y * &y * rat(2, 1))),
            region_v1: region,
            image_abs_sq: abs.iter().map(fmt_q).collect(),
            claimed_lower_bound: fmt_q(&claimed),
            image_min_pair_sum: fmt_q(&min_pair),
        }));
    }
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct DisjointnessReport {
    pub eps: String,
    /// Rational lower bound for `√(1−ε)`.
    pub sqrt_one_minus_eps_lower: String,
    /// Rational upper bound for `√(2ε)`.
    pub sqrt_two_eps_upper: String,
    /// `(√(1−ε) − √(2ε))² / 3 ≤ |(Pz′)_q|²`
    pub coordinate_lower_bound: String,
    pub pair_sum_lower_bound: String,
    /// `pair_sum_lower_bound − ε`, positive iff certified.
    pub margin: String,
    /// `2/3 − 2ε − ε` from the per-coordinate estimate `1/3 − ε`.
    pub stated_chain_margin: String,
    /// Refutes the per-coordinate estimate; the conclusion is unaffected.
    pub stated_step_witness: Option<CoordinateBoundWitness>,
    pub samples: usize,
    pub seed: u64,
    pub counterexamples: Vec<[f64; 6]>,
    pub certified: bool,
}

/// Certifies `V₁ ∩ V₂ = ∅`.
///
/// If `z′` has `|z′_i|² + |z′_j|² ≤ ε` then `|z′_k| ≥ √(1−ε)` and
/// `|z′_i| + |z′_j| ≤ √(2ε)`. Every entry of `√3·P` has modulus one, so
/// `|(Pz′)_q| ≥ (|z′_k| − |z′_i| − |z′_j|)/√3 ≥ (√(1−ε) − √(2ε))/√3`.
pub fn verify_disjointness(
    spec: &RegionSpec,
    samples: usize,
    seed: u64,
) -> Result<DisjointnessReport> {
    let eps = spec.eps().clone();
    let (lo, _) = sqrt_bounds(&(BigRational::one() - &eps));
    let (_, hi) = sqrt_bounds(&(&eps * rat(2, 1)));
    let gap = &lo - &hi;
    let coord = if gap.is_positive() {
        &gap * &gap / rat(3, 1)
    } else {
        BigRational::zero()
    };
    let pair = &coord * rat(2, 1);
    let margin = &pair - &eps;
    let stated = rat(2, 3) - &eps * rat(3, 1);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = spec.p().embed();
    let e = spec.eps_f64();
    let mut counterexamples = Vec::new();
    for _ in 0..samples {
        let z = sample_v1(&mut rng, e);
        let w = apply_numeric(&p, &z);
        if in_v1_numeric(&w, e)? != Region::Outside {
            counterexamples.push([z[0].re, z[0].im, z[1].re, z[1].im, z[2].re, z[2].im]);
        }
    }
    let certified = gap.is_positive() && margin.is_positive() && counterexamples.is_empty();
    Ok(DisjointnessReport {
        eps: eps.to_string(),
        sqrt_one_minus_eps_lower: fmt_q(&lo),
        sqrt_two_eps_upper: fmt_q(&hi),
        coordinate_lower_bound: fmt_q(&coord),
        pair_sum_lower_bound: fmt_q(&pair),
        margin: fmt_q(&margin),
        stated_chain_margin: fmt_q(&stated),
        stated_step_witness: coordinate_bound_witness(spec)?,
        samples,
        seed,
        counterexamples,
        certified,
    })
}

pub fn phi_a() -> UMatrix {
    UMatrix::cyclic_shift3()
}

pub fn phi_b() -> UMatrix {
    UMatrix::diag_roots(3, &[0, 1, 2])
}

fn phi_a_pow(e: i64) -> UMatrix {
    let mut m = UMatrix::identity(3);
    for _ in 0..e.rem_euclid(3) {
        m = &m * &phi_a();
    }
    m
}

/// `Pφ(a)P⁻¹ = φ(a)` and `Pφ(b)P⁻¹ = φ(a²b)`.
pub fn conjugation_identities(spec: &RegionSpec) -> Result<[bool; 2]> {
    let p = spec.p();
    Ok([
        p.conjugate(&phi_a())? == phi_a(),
        p.conjugate(&phi_b())? == &phi_a_pow(2) * &phi_b(),
    ])
}

/// `φ(b)P^{i−1}φ(a^k) = P^{i−1}φ(a^{−2(i−1)})φ(b)φ(a^k) = P^{i−1}φ(a^{k+i−1})φ(b)φ(ω^{−k})`.
///
/// Every expression carries the same power of the scale, so `M` stands in for `P`.
pub fn formula_one_check(spec: &RegionSpec, i: u32, k: i64) -> Result<bool> {
    if !(1..=2).contains(&i) {
        return Err(Error::Precondition(format!(
            "formula (1) needs i ∈ {{1, 2}}, got {i}"
        )));
    }
    let (pm, _) = spec.p().pow(i - 1);
    let ii = i as i64 - 1;
    let lhs = &(&phi_b() * &pm) * &phi_a_pow(k);
    let mid = &(&(&pm * &phi_a_pow(-2 * ii)) * &phi_b()) * &phi_a_pow(k);
    let w = UMatrix::scalar(3, CycloNumber::root_of_unity(3, -k));
    let rhs = &(&(&pm * &phi_a_pow(k + ii)) * &phi_b()) * &w;
    Ok(lhs == mid && mid == rhs)
}

/// Axis, boundary, rotated, twisted and random exact points, with their
/// `P`-translates.
pub fn structured_points<R: Rng>(rng: &mut R, random: usize) -> Result<Vec<SpherePointExact>> {
    let q = |n, d| CycloNumber::from_rational(rat(n, d));
    let w = CycloNumber::omega();
    let w2 = CycloNumber::root_of_unity(3, 2);
    let zero = CycloNumber::zero();
    let mut base: Vec<SpherePointExact> = vec![
        SpherePointExact::from_rationals([rat(1, 1), rat(0, 1), rat(0, 1)])?,
        SpherePointExact::from_rationals([rat(24, 25), rat(7, 25), rat(0, 1)])?,
        SpherePointExact::from_rationals([rat(24, 25), rat(0, 1), rat(7, 25)])?,
        SpherePointExact::new(vec![q(24, 25), &w * &q(7, 25), zero.clone()], rat(1, 1))?,
        SpherePointExact::new(vec![q(24, 25), zero.clone(), &w2 * &q(7, 25)], rat(1, 1))?,
        SpherePointExact::from_rationals([rat(3, 5), rat(4, 5), rat(0, 1)])?,
        SpherePointExact::normalized(vec![q(1, 1), q(1, 1), q(1, 1)])?,
        SpherePointExact::normalized(vec![q(1, 1), w.clone(), zero.clone()])?,
        SpherePointExact::normalized(vec![q(2, 1), q(1, 1), w2.clone()])?,
        SpherePointExact::normalized(vec![q(5, 1), -w2.clone(), q(-1, 1)])?,
    ];
    // rational points (x, y, 0) on the circle, y small
    for n in [4i64, 5, 6, 8, 12, 20] {
        let t = rat(1, n);
        let den = BigRational::one() + &t * &t;
        let x = (BigRational::one() - &t * &t) / &den;
        let y = &t * rat(2, 1) / &den;
        base.push(SpherePointExact::from_rationals([x, y, rat(0, 1)])?);
    }
    for _ in 0..random {
        let coords: Vec<CycloNumber> = (0..3)
            .map(|_| {
                let a = rng.gen_range(-3i64..=3);
                let b = rng.gen_range(-3i64..=3);
                CycloNumber::from_int(a) + CycloNumber::from_int(b) * w.clone()
            })
            .collect();
        if let Ok(p) = SpherePointExact::normalized(coords) {
            base.push(p);
        }
    }
    let a = phi_a();
    let mut out = Vec::new();
    for z in base {
        let r1 = z.apply(&a);
        let r2 = r1.apply(&a);
        for v in [z, r1, r2] {
            out.push(PMatrix::standard().apply(&v));
            out.push(v);
        }
    }
    Ok(out)
}

/// Membership signature used by the invariance check: region of `V_i`, or the
/// pair `(V₁, V₂)` for `i = 0`.
fn signature(z: &SpherePointExact, i: u32, spec: &RegionSpec) -> Result<(Region, Region)> {
    Ok(match i {
        1 => (in_v1(z, spec)?, Region::Outside),
        2 => (in_v2(z, spec)?, Region::Outside),
        _ => (in_v1(z, spec)?, in_v2(z, spec)?),
    })
}

fn signature_numeric(z: &[Complex64; 3], i: u32, eps: f64) -> Result<(Region, Region)> {
    Ok(match i {
        1 => (in_v1_numeric(z, eps)?, Region::Outside),
        2 => (in_v2_numeric(z, eps)?, Region::Outside),
        _ => (in_v1_numeric(z, eps)?, in_v2_numeric(z, eps)?),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub i: u32,
    pub k: u32,
    pub exact_points: usize,
    /// Exact points lying in the region under test.
    pub exact_points_in_region: usize,
    pub numeric_points: usize,
    pub formula_one: bool,
    pub failures: Vec<String>,
    pub certified: bool,
}

/// Every generator of `P(k)` preserves the region classification of `V_i`.
pub fn verify_invariance(
    i: u32,
    k: u32,
    spec: &RegionSpec,
    samples: usize,
    seed: u64,
) -> Result<InvarianceReport> {
    if i > 2 {
        return Err(Error::Precondition(format!(
            "region index must be 0, 1 or 2, got {i}"
        )));
    }
    if k < 3 {
        return Err(Error::Precondition(format!(
            "P(k) requires k >= 3, got {k}"
        )));
    }
    let c = UMatrix::scalar(3, CycloNumber::root_of_unity(3u32.pow(k - 2), 1));
    let gens = [("a", phi_a()), ("b", phi_b()), ("c", c)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = structured_points(&mut rng, 24)?;
    let mut failures = Vec::new();
    let mut in_region = 0;
    for z in &points {
        let sig = signature(z, i, spec)?;
        if (i == 0 && !sig.0.is_member() && !sig.1.is_member()) || (i > 0 && sig.0.is_member()) {
            in_region += 1;
        }
        for (name, g) in &gens {
            let gz = z.apply(g);
            let s2 = signature(&gz, i, spec)?;
            if s2 != sig {
                failures.push(format!("{name}·{z}: {sig:?} -> {s2:?}"));
            }
        }
    }

    let eps = spec.eps_f64();
    let pn = spec.p().embed();
    let gens_num: Vec<_> = gens.iter().map(|(n, g)| (*n, umatrix_numeric(g))).collect();
    let mut numeric = 0;
    for s in 0..samples {
        let mut z = if s % 2 == 0 {
            sample_v1(&mut rng, eps)
        } else {
            sample_sphere(&mut rng)
        };
        if i == 2 {
            z = apply_numeric(&pn, &z);
        }
        let sig = signature_numeric(&z, i, eps)?;
        numeric += 1;
        for (name, g) in &gens_num {
            let s2 = signature_numeric(&apply_numeric(g, &z), i, eps)?;
            if s2 != sig {
                failures.push(format!("{name}·{z:?} (numeric): {sig:?} -> {s2:?}"));
            }
        }
    }

    let formula_one =
        (1..=2).all(|ii| (0..3).all(|kk| formula_one_check(spec, ii, kk).unwrap_or(false)));
    if !formula_one {
        failures.push("formula (1) fails".into());
    }
    Ok(InvarianceReport {
        i,
        k,
        exact_points: points.len(),
        exact_points_in_region: in_region,
        numeric_points: numeric,
        formula_one,
        certified: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> RegionSpec {
        RegionSpec::new(default_eps()).unwrap()
    }

    fn pt(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> SpherePointExact {
        SpherePointExact::from_rationals([rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1)]).unwrap()
    }

    #[test]
    fn eps_range() {
        assert!(RegionSpec::new(rat(1, 4)).is_err());
        assert!(RegionSpec::new(rat(0, 1)).is_err());
        assert!(RegionSpec::new(rat(1, 9)).is_err());
        assert!(RegionSpec::new(rat(1, 16)).is_ok());
    }

    #[test]
    fn p_is_unitary() {
        assert!(spec().p().is_unitary());
        let bad = PMatrix {
            scale_sq: rat(1, 2),
            ..PMatrix::standard()
        };
        assert!(!bad.is_unitary());
    }

    #[test]
    fn v1_examples() {
        let s = spec();
        assert_eq!(
            in_v1(&pt((24, 25), (7, 25), (0, 1)), &s).unwrap(),
            Region::Boundary
        );
        assert_eq!(
            in_v1(&pt((1, 1), (0, 1), (0, 1)), &s).unwrap(),
            Region::Interior
        );
        let third = SpherePointExact::normalized(vec![CycloNumber::one(); 3]).unwrap();
        assert_eq!(in_v1(&third, &s).unwrap(), Region::Outside);
        assert!(SpherePointExact::from_rationals([rat(1, 1), rat(1, 1), rat(0, 1)]).is_err());
    }

    #[test]
    fn v2_examples() {
        let s = spec();
        let e1 = pt((1, 1), (0, 1), (0, 1));
        assert_eq!(in_v2(&s.p().apply(&e1), &s).unwrap(), Region::Interior);
        assert_eq!(in_v2(&e1, &s).unwrap(), Region::Outside);
        let moduli = s.p().apply_inverse(&e1).abs_sq_rational().unwrap();
        assert_eq!(moduli, vec![rat(1, 3); 3]);
    }

    #[test]
    fn root_of_unity_scaling_preserves_membership() {
        let s = spec();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for z in structured_points(&mut rng, 8).unwrap() {
            for (n, k) in [(3, 1), (9, 4), (7, 3)] {
                let zz = z.apply(&UMatrix::scalar(3, CycloNumber::root_of_unity(n, k)));
                assert_eq!(in_v1(&zz, &s).unwrap(), in_v1(&z, &s).unwrap());
                assert_eq!(in_v2(&zz, &s).unwrap(), in_v2(&z, &s).unwrap());
            }
        }
    }

    #[test]
    fn pointwise_disjointness_on_structured_points() {
        let s = spec();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for z in structured_points(&mut rng, 16).unwrap() {
            let (r1, r2) = (in_v1(&z, &s).unwrap(), in_v2(&z, &s).unwrap());
            assert!(!(r1.is_member() && r2.is_member()), "{z}");
        }
    }

    #[test]
    fn numeric_agrees_with_exact() {
        let s = spec();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for z in structured_points(&mut rng, 16).unwrap() {
            let n = z.to_numeric();
            assert_eq!(
                in_v1_numeric(&n, s.eps_f64()).unwrap(),
                in_v1(&z, &s).unwrap(),
                "{z}"
            );
            assert_eq!(
                in_v2_numeric(&n, s.eps_f64()).unwrap(),
                in_v2(&z, &s).unwrap(),
                "{z}"
            );
        }
    }

    #[test]
    fn disjointness_certified() {
        for eps in [rat(49, 625), rat(1, 16)] {
            let r = verify_disjointness(&RegionSpec::new(eps).unwrap(), 2000, 11).unwrap();
            assert!(r.certified, "{r:?}");
            assert!(r.stated_step_witness.is_some());
        }
    }

    #[test]
    fn stated_margin_value() {
        let r = verify_disjointness(&spec(), 0, 0).unwrap();
        // 2/3 - 3·49/625
        assert!(r.stated_chain_margin.starts_with("809/1875"));
    }

    #[test]
    fn witness_refutes_coordinate_estimate() {
        let s = spec();
        let z = SpherePointExact::normalized(vec![
            CycloNumber::from_int(5),
            -CycloNumber::root_of_unity(3, 2),
            CycloNumber::from_int(-1),
        ])
        .unwrap();
        assert_eq!(in_v1(&z, &s).unwrap(), Region::Interior);
        let abs = s.p().apply(&z).abs_sq_rational().unwrap();
        assert_eq!(abs, vec![rat(1, 9), rat(4, 9), rat(4, 9)]);
        assert!(abs[0] < rat(1, 3) - s.eps());
        assert_eq!(in_v1(&s.p().apply(&z), &s).unwrap(), Region::Outside);
    }

    #[test]
    fn conjugation_and_formula_one() {
        let s = spec();
        assert_eq!(conjugation_identities(&s).unwrap(), [true, true]);
        for i in 1..=2 {
            for k in 0..3 {
                assert!(formula_one_check(&s, i, k).unwrap(), "i={i} k={k}");
            }
        }
        assert!(formula_one_check(&s, 3, 0).is_err());
    }

    #[test]
    fn invariance_certified() {
        let s = spec();
        for i in 0..=2 {
            for k in 3..=4 {
                let r = verify_invariance(i, k, &s, 200, 1).unwrap();
                assert!(r.certified, "{:?}", r.failures);
                assert!(i == 0 || r.exact_points_in_region > 0);
            }
        }
    }

    #[test]
    fn invariance_examples() {
        let s = spec();
        let z = pt((24, 25), (7, 25), (0, 1));
        assert_eq!(in_v1(&z.apply(&phi_b()), &s).unwrap(), Region::Boundary);
        let pe1 = s.p().apply(&pt((1, 1), (0, 1), (0, 1)));
        assert_eq!(in_v2(&pe1.apply(&phi_a()), &s).unwrap(), Region::Interior);
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for q in [rat(2, 1), rat(49, 625), rat(15, 16)] {
            let (lo, hi) = sqrt_bounds(&q);
            assert!(&lo * &lo <= q && q <= &hi * &hi);
        }
    }
}
