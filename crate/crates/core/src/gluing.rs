// SPDX-License-Identifier: Apache-2.0

//! The gluing matrices `Θ₁`, `Θ₂` and the identities making `α` a
//! well-defined equivariant map on the boundary.
//!
//! `Θ_m` is stored with its `2×2` block unnormalized. The normalizing factor
//! `1/√(ε(1−ε))` only touches that block; the remaining diagonal entry is an
//! honest `1`. Symbolic checks are therefore stated denominator-cleared with
//! `D = ε − ε²`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::geometry::{formula_one_check, phi_a, RegionSpec, SpherePointExact};
use crate::matrix::UMatrix;
use crate::reps::{RepName, RepTable};
use crate::symalg::{PolyMatrix, SpherePoly, Var, NVARS};

/// Numeric tolerance for unitarity and equivariance spot checks.
pub const GLUING_TOL: f64 = 1e-10;

/// Recorded in every gluing report.
pub const NORMALIZATION_NOTE: &str =
    "1/sqrt(eps(1-eps)) scales the 2x2 block only; the remaining diagonal entry is 1";

fn z(q: usize) -> SpherePoly {
    SpherePoly::var(Var::z(q))
}

fn zb(q: usize) -> SpherePoly {
    SpherePoly::var(Var::zb(q))
}

/// `ε(1−ε)` as a polynomial.
pub fn block_scale() -> SpherePoly {
    let e = SpherePoly::var(Var::Eps);
    &e - &(&e * &e)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaMatrix {
    m: u32,
    raw: PolyMatrix,
}

/// Rows/columns carrying the `z`-dependent block.
fn block_of(m: u32) -> [usize; 2] {
    if m == 1 {
        [1, 2]
    } else {
        [0, 1]
    }
}

pub fn theta_build(m: u32) -> Result<ThetaMatrix> {
    let mut raw = PolyMatrix::from_fn(3, |_, _| SpherePoly::zero());
    match m {
        1 => {
            raw.set(0, 0, SpherePoly::one());
            raw.set(1, 1, &zb(1) * &z(2));
            raw.set(1, 2, -(&zb(1) * &z(3)));
            raw.set(2, 1, &z(1) * &zb(3));
            raw.set(2, 2, &z(1) * &zb(2));
        }
        2 => {
            raw.set(0, 0, &zb(1) * &z(2));
            raw.set(0, 1, -(&z(1) * &zb(3)));
            raw.set(1, 0, &zb(1) * &z(3));
            raw.set(1, 1, &z(1) * &zb(2));
            raw.set(2, 2, SpherePoly::one());
        }
        _ => {
            return Err(Error::Precondition(format!(
                "Θ_m needs m ∈ {{1, 2}}, got {m}"
            )))
        }
    }
    Ok(ThetaMatrix { m, raw })
}

impl ThetaMatrix {
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Entries before block normalization.
    pub fn raw(&self) -> &PolyMatrix {
        &self.raw
    }

    pub fn block(&self) -> [usize; 2] {
        block_of(self.m)
    }

    fn in_block(&self, i: usize, j: usize) -> bool {
        let b = self.block();
        b.contains(&i) && b.contains(&j)
    }

    /// Replaces one entry; used by the negative controls.
    pub fn with_entry(&self, i: usize, j: usize, p: SpherePoly) -> ThetaMatrix {
        let mut raw = self.raw.clone();
        raw.set(i, j, p);
        ThetaMatrix { m: self.m, raw }
    }

    /// `Θ` at `z ↦ image` (and `z̄ ↦` conjugate image).
    pub fn substitute(&self, assignment: &BTreeMap<Var, SpherePoly>) -> Result<ThetaMatrix> {
        Ok(ThetaMatrix {
            m: self.m,
            raw: self.raw.substitute(assignment)?,
        })
    }

    /// `diag(D on the block, 1 elsewhere)`: the cleared value of `ΘΘ*`.
    pub fn cleared_gram(&self) -> PolyMatrix {
        let d = block_scale();
        PolyMatrix::from_fn(3, |i, j| {
            if i != j {
                SpherePoly::zero()
            } else if self.block().contains(&i) {
                d.clone()
            } else {
                SpherePoly::one()
            }
        })
    }

    /// Normalized numeric value at `vals`.
    pub fn evaluate(&self, vals: &[Complex64; NVARS]) -> [[Complex64; 3]; 3] {
        let eps = vals[Var::Eps.index()];
        let s = (eps * (Complex64::one() - eps)).sqrt();
        let raw = self.raw.evaluate(vals);
        let mut out = [[Complex64::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = if self.in_block(i, j) {
                    raw[3 * i + j] / s
                } else {
                    raw[3 * i + j]
                };
            }
        }
        out
    }

    /// Normalized exact value at a boundary point whose scale and `ε(1−ε)`
    /// are rational squares.
    pub fn evaluate_exact(&self, point: &SpherePointExact, spec: &RegionSpec) -> Result<UMatrix> {
        let eps = spec.eps();
        if !on_boundary(point, eps) {
            return Err(Error::Precondition(format!(
                "{point} does not satisfy |z₂|²+|z₃|² = {eps}"
            )));
        }
        let r = rational_sqrt(point.scale_sq()).ok_or_else(|| {
            Error::Precondition(format!(
                "scale {} is not a rational square",
                point.scale_sq()
            ))
        })?;
        let d = eps - eps * eps;
        let sd = rational_sqrt(&d)
            .ok_or_else(|| Error::Precondition(format!("ε(1−ε) = {d} is not a rational square")))?;
        let vals = exact_values(point, &r, eps);
        let inv_sd = sd.recip();
        let mut out = UMatrix::zero(3);
        for i in 0..3 {
            for j in 0..3 {
                let x = self.raw.get(i, j).evaluate_exact(&vals)?;
                out.set(
                    i,
                    j,
                    if self.in_block(i, j) {
                        x.scale(&inv_sd).canonical()
                    } else {
                        x
                    },
                );
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Θ{} (block rows/cols {:?} scaled by 1/√(ε(1−ε))):",
            self.m,
            self.block().map(|b| b + 1)
        )?;
        for i in 0..3 {
            let row: Vec<String> = (0..3).map(|j| self.raw.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn exact_values(
    point: &SpherePointExact,
    r: &BigRational,
    eps: &BigRational,
) -> [CycloNumber; NVARS] {
    let c: Vec<CycloNumber> = point.coords().iter().map(|x| x.scale(r)).collect();
    [
        c[0].clone(),
        c[1].clone(),
        c[2].clone(),
        c[0].conj(),
        c[1].conj(),
        c[2].conj(),
        CycloNumber::from_rational(eps.clone()),
        CycloNumber::one(),
        CycloNumber::one(),
    ]
}

/// Exact square root of a nonnegative rational, if it is one.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

fn on_boundary(point: &SpherePointExact, eps: &BigRational) -> bool {
    let a = point.abs_sq();
    (&(&a[1] + &a[2]) - &CycloNumber::from_rational(eps.clone())).is_zero()
}

/// One certified (or failed) polynomial identity `lhs − rhs ≡ 0`.
#[derive(Debug, Clone, Serialize)]
pub struct SubIdentity {
    pub id: String,
    pub statement: String,
    /// Nonzero entries of `lhs − rhs` after reduction, as `(row, col): poly`.
    pub residual: Vec<String>,
    pub certified: bool,
}

impl SubIdentity {
    fn from_difference(
        id: impl Into<String>,
        statement: impl Into<String>,
        diff: &PolyMatrix,
    ) -> Self {
        let residual: Vec<String> = diff
            .nonzero_entries()
            .into_iter()
            .map(|(i, j, p)| format!("({}, {}): {}", i + 1, j + 1, p))
            .collect();
        SubIdentity {
            id: id.into(),
            statement: statement.into(),
            certified: residual.is_empty(),
            residual,
        }
    }

    fn scalar(id: impl Into<String>, statement: impl Into<String>, diff: &SpherePoly) -> Self {
        let residual = if diff.is_zero_mod_constraints() {
            vec![]
        } else {
            vec![diff.to_string()]
        };
        SubIdentity {
            id: id.into(),
            statement: statement.into(),
            certified: residual.is_empty(),
            residual,
        }
    }

    fn exact(id: impl Into<String>, statement: impl Into<String>, holds: bool) -> Self {
        let residual = if holds {
            vec![]
        } else {
            vec!["exact matrices differ".into()]
        };
        SubIdentity {
            id: id.into(),
            statement: statement.into(),
            certified: holds,
            residual,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GluingReport {
    pub check: String,
    pub m: u32,
    pub normalization: &'static str,
    pub identities: Vec<SubIdentity>,
    pub numeric_points: usize,
    pub numeric_failures: usize,
    pub certified: bool,
}

impl GluingReport {
    fn new(
        check: String,
        m: u32,
        identities: Vec<SubIdentity>,
        numeric_points: usize,
        numeric_failures: usize,
    ) -> Self {
        let certified = numeric_failures == 0 && identities.iter().all(|s| s.certified);
        GluingReport {
            check,
            m,
            normalization: NORMALIZATION_NOTE,
            identities,
            numeric_points,
            numeric_failures,
            certified,
        }
    }

    pub fn failing(&self) -> impl Iterator<Item = &SubIdentity> {
        self.identities.iter().filter(|s| !s.certified)
    }
}

/// A random boundary point with a random `λ`, as variable values.
pub fn sample_boundary<R: Rng>(rng: &mut R, eps: f64) -> [Complex64; NVARS] {
    let phase = |r: &mut R| Complex64::from_polar(1.0, r.gen_range(0.0..std::f64::consts::TAU));
    let z1 = phase(rng) * (1.0 - eps).sqrt();
    let t: f64 = rng.gen_range(0.0..std::f64::consts::FRAC_PI_2);
    let z2 = phase(rng) * eps.sqrt() * t.cos();
    let z3 = phase(rng) * eps.sqrt() * t.sin();
    let lam = phase(rng);
    let e = Complex64::new(eps, 0.0);
    [
        z1,
        z2,
        z3,
        z1.conj(),
        z2.conj(),
        z3.conj(),
        e,
        lam,
        lam.conj(),
    ]
}

fn mat_mul(a: &[[Complex64; 3]; 3], b: &[[Complex64; 3]; 3]) -> [[Complex64; 3]; 3] {
    let mut out = [[Complex64::zero(); 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn max_diff(a: &[[Complex64; 3]; 3], b: &[[Complex64; 3]; 3]) -> f64 {
    (0..9)
        .map(|n| (a[n / 3][n % 3] - b[n / 3][n % 3]).norm())
        .fold(0.0, f64::max)
}

fn numeric(m: &UMatrix) -> [[Complex64; 3]; 3] {
    let e = m.embed();
    std::array::from_fn(|i| std::array::from_fn(|j| e[3 * i + j]))
}

fn adjoint_numeric(a: &[[Complex64; 3]; 3]) -> [[Complex64; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].conj()))
}

fn det_numeric(a: &[[Complex64; 3]; 3]) -> Complex64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// `ΘΘ* = diag(D, D, 1)` (cleared) and `det Θ = D`, symbolically; then the
/// normalized matrix is checked to be in `SU(3)` at random boundary points.
pub fn verify_theta_special_unitary(
    m: u32,
    spec: &RegionSpec,
    samples: usize,
    seed: u64,
) -> Result<GluingReport> {
    verify_special_unitary_of(&theta_build(m)?, spec, samples, seed)
}

pub fn verify_special_unitary_of(
    theta: &ThetaMatrix,
    spec: &RegionSpec,
    samples: usize,
    seed: u64,
) -> Result<GluingReport> {
    let m = theta.m();
    let raw = theta.raw();
    let gram = raw * &raw.adjoint();
    let ids = vec![
        SubIdentity::from_difference(
            format!("theta{m}/gram"),
            format!("Θ{m}·Θ{m}* = ε(1−ε) on the block, 1 elsewhere"),
            &(&gram - &theta.cleared_gram()),
        ),
        SubIdentity::scalar(
            format!("theta{m}/det"),
            format!("det Θ{m} = ε(1−ε)"),
            &(&raw.det() - &block_scale()),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = numeric(&UMatrix::identity(3));
    let mut failures = 0;
    for _ in 0..samples {
        let vals = sample_boundary(&mut rng, spec.eps_f64());
        let t = theta.evaluate(&vals);
        let err =
            max_diff(&mat_mul(&t, &adjoint_numeric(&t)), &id).max((det_numeric(&t) - 1.0).norm());
        if err.is_nan() || err > GLUING_TOL {
            failures += 1;
        }
    }
    Ok(GluingReport::new(
        format!("theta{m}/special-unitary"),
        m,
        ids,
        samples,
        failures,
    ))
}

/// Outcome of corrupting one entry of `Θ_m`.
#[derive(Debug, Clone, Serialize)]
pub struct CorruptionOutcome {
    pub m: u32,
    pub row: usize,
    pub col: usize,
    pub corruption: String,
    pub detected: bool,
    pub residual: Vec<String>,
}

/// Corrupts each entry of `Θ_m` in turn (sign flip if nonzero, `z₁` if zero)
/// and runs the special-unitary check on the result.
pub fn corruption_controls(
    m: u32,
    spec: &RegionSpec,
    samples: usize,
    seed: u64,
) -> Result<Vec<CorruptionOutcome>> {
    let theta = theta_build(m)?;
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let entry = theta.raw().get(i, j);
            let (bad, what) = if entry.is_empty() {
                (z(1), "zero entry replaced by z1".to_string())
            } else {
                (-entry, "sign flip".to_string())
            };
            let report =
                verify_special_unitary_of(&theta.with_entry(i, j, bad), spec, samples, seed)?;
            out.push(CorruptionOutcome {
                m,
                row: i + 1,
                col: j + 1,
                corruption: what,
                detected: !report.certified,
                residual: report
                    .failing()
                    .flat_map(|s| s.residual.iter().map(move |r| format!("{}: {r}", s.id)))
                    .collect(),
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Generator {
    A,
    B,
    Lambda,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::A => "a",
            Generator::B => "b",
            Generator::Lambda => "lambda",
        })
    }
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::A, Generator::B, Generator::Lambda];
}

fn psi(i: u8, g: &str) -> Result<UMatrix> {
    let t = RepTable::build(RepName::Psi(i))?;
    t.image(g)
        .cloned()
        .ok_or_else(|| Error::Inconsistency(format!("psi{i} has no image for {g}")))
}

/// `z_q ↦ ω^{q−1−k} z_q`.
fn twist_assignment(k: i64) -> BTreeMap<Var, SpherePoly> {
    let mut a = BTreeMap::new();
    for q in 1..=3 {
        let w = CycloNumber::root_of_unity(3, q as i64 - 1 - k);
        a.insert(Var::z(q), z(q).scale(&w));
        a.insert(Var::zb(q), zb(q).scale(&w.conj()));
    }
    a
}

fn twist_numeric(vals: &[Complex64; NVARS], k: i64) -> [Complex64; NVARS] {
    let mut out = *vals;
    for q in 1..=3 {
        let w = CycloNumber::root_of_unity(3, q as i64 - 1 - k).embed();
        out[Var::z(q).index()] *= w;
        out[Var::zb(q).index()] *= w.conj();
    }
    out
}

/// `z ↦ λz`.
fn lambda_assignment() -> BTreeMap<Var, SpherePoly> {
    let (l, lb) = (SpherePoly::var(Var::Lam), SpherePoly::var(Var::LamB));
    let mut a = BTreeMap::new();
    for q in 1..=3 {
        a.insert(Var::z(q), &l * &z(q));
        a.insert(Var::zb(q), &lb * &zb(q));
    }
    a
}

fn lambda_numeric(vals: &[Complex64; NVARS]) -> [Complex64; NVARS] {
    let mut out = *vals;
    let l = vals[Var::Lam.index()];
    for q in 1..=3 {
        out[Var::z(q).index()] *= l;
        out[Var::zb(q).index()] *= l.conj();
    }
    out
}

/// Boundary constraint `|z₂|² + |z₃|² − ε` after an assignment.
fn boundary_residual(a: &BTreeMap<Var, SpherePoly>) -> Result<SpherePoly> {
    let c = &(&(&zb(2) * &z(2)) + &(&zb(3) * &z(3))) - &SpherePoly::var(Var::Eps);
    c.substitute(a)
}

/// `Θ_m ψ₀(g) = ψ_m(g) Θ_m` for `g = a, b, λ`, one sub-identity per line of
/// the argument, followed by numeric spot checks of the final identity.
pub fn verify_alpha_equivariance(
    g: Generator,
    m: u32,
    spec: &RegionSpec,
    samples: usize,
    seed: u64,
) -> Result<GluingReport> {
    let theta = theta_build(m)?;
    let t = theta.raw();
    let mu = m as u8;
    let mut ids = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut numeric_check =
        |lhs: &dyn Fn(&[Complex64; NVARS]) -> [[Complex64; 3]; 3],
         rhs: &dyn Fn(&[Complex64; NVARS]) -> [[Complex64; 3]; 3]| {
            for _ in 0..samples {
                let vals = sample_boundary(&mut rng, spec.eps_f64());
                let err = max_diff(&lhs(&vals), &rhs(&vals));
                if err.is_nan() || err > GLUING_TOL {
                    failures += 1;
                }
            }
        };
    match g {
        Generator::A => {
            let (pa0, pam) = (psi(0, "a")?, psi(mu, "a")?);
            let omega = UMatrix::scalar(3, CycloNumber::omega());
            let wt = &omega * t;
            ids.push(SubIdentity::from_difference(
                format!("a/m{m}/right"),
                format!("Θ{m}·ψ0(a) = ω·Θ{m}"),
                &(&(t * &pa0) - &wt),
            ));
            ids.push(SubIdentity::from_difference(
                format!("a/m{m}/left"),
                format!("ψ{m}(a)·Θ{m} = ω·Θ{m}"),
                &(&(&pam * t) - &wt),
            ));
            ids.push(SubIdentity::from_difference(
                format!("a/m{m}/main"),
                format!("Θ{m}·ψ0(a) = ψ{m}(a)·Θ{m}"),
                &(&(t * &pa0) - &(&pam * t)),
            ));
            // a moves the base point within the standard form
            let (pm, _) = spec.p().pow(m - 1);
            for k in 0..3i64 {
                let lhs = &(&phi_a() * &pm) * &phi_a().pow(k)?;
                let rhs = &pm * &phi_a().pow(k + 1)?;
                ids.push(SubIdentity::exact(
                    format!("a/m{m}/k{k}/base"),
                    format!("φ(a)·P^{}·φ(a^{k}) = P^{}·φ(a^{})", m - 1, m - 1, k + 1),
                    lhs == rhs,
                ));
            }
            let (pa0n, pamn) = (numeric(&pa0), numeric(&pam));
            numeric_check(&|v| mat_mul(&theta.evaluate(v), &pa0n), &|v| {
                mat_mul(&pamn, &theta.evaluate(v))
            });
        }
        Generator::B => {
            let (pb0, pbm) = (psi(0, "b")?, psi(mu, "b")?);
            for k in 0..3i64 {
                let tw = twist_assignment(k);
                let tp = t.substitute(&tw)?;
                ids.push(SubIdentity::scalar(
                    format!("b/m{m}/k{k}/twist-boundary"),
                    "z' satisfies |z2'|²+|z3'|² = ε",
                    &boundary_residual(&tw)?,
                ));
                ids.push(SubIdentity::exact(
                    format!("b/m{m}/k{k}/base"),
                    format!(
                        "φ(b)·P^{}·φ(a^{k}) = P^{}·φ(a^{})·φ(b)·φ(ω^-{k})",
                        m - 1,
                        m - 1,
                        k + m as i64 - 1
                    ),
                    formula_one_check(spec, m, k)?,
                ));
                if m == 1 {
                    let d = UMatrix::diag_roots(3, &[0, 1, 2]);
                    ids.push(SubIdentity::from_difference(
                        format!("b/m1/k{k}/shift"),
                        "Θ1(z') = Θ1(z)·diag(1, ω, ω²)",
                        &(&tp - &(t * &d)),
                    ));
                    ids.push(SubIdentity::exact(
                        format!("b/m1/k{k}/diag"),
                        "diag(1, ω, ω²)·ψ0(b) = ψ1(b)",
                        &d * &pb0 == pbm,
                    ));
                    ids.push(SubIdentity::from_difference(
                        format!("b/m1/k{k}/commute"),
                        "Θ1(z)·ψ1(b) = ψ1(b)·Θ1(z)",
                        &(&(t * &pbm) - &(&pbm * t)),
                    ));
                } else {
                    let d = UMatrix::diag_roots(3, &[1, 2, 0]);
                    ids.push(SubIdentity::from_difference(
                        format!("b/m2/k{k}/shift"),
                        "Θ2(z') = diag(ω, ω², 1)·Θ2(z)",
                        &(&tp - &(&d * t)),
                    ));
                    ids.push(SubIdentity::from_difference(
                        format!("b/m2/k{k}/commute"),
                        "Θ2(z)·ψ0(b) = ψ0(b)·Θ2(z)",
                        &(&(t * &pb0) - &(&pb0 * t)),
                    ));
                    ids.push(SubIdentity::from_difference(
                        format!("b/m2/k{k}/conjugation"),
                        "diag(ω, ω², 1)·Θ2(z)·ψ0(b) = ψ2(b)·Θ2(z)",
                        &(&(&(&d * t) * &pb0) - &(&pbm * t)),
                    ));
                    ids.push(SubIdentity::exact(
                        format!("b/m2/k{k}/diag"),
                        "diag(ω, ω², 1)·ψ0(b) = ψ2(b)",
                        &d * &pb0 == pbm,
                    ));
                }
                ids.push(SubIdentity::from_difference(
                    format!("b/m{m}/k{k}/main"),
                    format!("Θ{m}(z')·ψ0(b) = ψ{m}(b)·Θ{m}(z)"),
                    &(&(&tp * &pb0) - &(&pbm * t)),
                ));
                let (pb0n, pbmn) = (numeric(&pb0), numeric(&pbm));
                numeric_check(
                    &|v| mat_mul(&theta.evaluate(&twist_numeric(v, k)), &pb0n),
                    &|v| mat_mul(&pbmn, &theta.evaluate(v)),
                );
            }
        }
        Generator::Lambda => {
            let la = lambda_assignment();
            ids.push(SubIdentity::scalar(
                format!("lambda/m{m}/boundary"),
                "λz satisfies |λz2|²+|λz3|² = ε",
                &boundary_residual(&la)?,
            ));
            ids.push(SubIdentity::from_difference(
                format!("lambda/m{m}/main"),
                format!("Θ{m}(λz) = Θ{m}(z)"),
                &(&t.substitute(&la)? - t),
            ));
            let circle_trivial = [0u8, mu].iter().all(|&i| {
                RepTable::build(RepName::Psi(i))
                    .ok()
                    .and_then(|r| r.circle_image(&BigRational::new(1.into(), 7.into())))
                    .is_some_and(|x| x.is_identity())
            });
            ids.push(SubIdentity::exact(
                format!("lambda/m{m}/circle"),
                format!("ψ0(λ) = ψ{m}(λ) = I"),
                circle_trivial,
            ));
            numeric_check(&|v| theta.evaluate(&lambda_numeric(v)), &|v| {
                theta.evaluate(v)
            });
        }
    }
    Ok(GluingReport::new(
        format!("{g}/m{m}/equivariance"),
        m,
        ids,
        samples * if g == Generator::B { 3 } else { 1 },
        failures,
    ))
}

/// Negative control: twisting `z₃` like `z₂` must break `Θ₁(z′) = Θ₁(z)·diag(1, ω, ω²)`.
pub fn wrong_twist_control() -> Result<SubIdentity> {
    let t = theta_build(1)?;
    let mut a = twist_assignment(0);
    a.insert(Var::z(3), z(3).scale(&CycloNumber::omega()));
    a.insert(Var::zb(3), zb(3).scale(&CycloNumber::omega().conj()));
    let d = UMatrix::diag_roots(3, &[0, 1, 2]);
    Ok(SubIdentity::from_difference(
        "b/m1/wrong-twist/shift",
        "Θ1(z'') = Θ1(z)·diag(1, ω, ω²) with z'' = (z1, ωz2, ωz3)",
        &(&t.raw().substitute(&a)? - &(t.raw() * &d)),
    ))
}

/// `x = P^{m−1} φ(a^k) z` with `|z₂|² + |z₃|² = ε`.
#[derive(Debug, Clone)]
pub struct StandardForm {
    pub m: u32,
    pub k: u32,
    pub z: SpherePointExact,
}

fn candidate(x: &SpherePointExact, m: u32, k: u32, spec: &RegionSpec) -> Result<SpherePointExact> {
    let y = if m == 2 {
        spec.p().apply_inverse(x)
    } else {
        x.clone()
    };
    Ok(y.apply(&phi_a().pow(-(k as i64))?))
}

/// The unique standard form of a base point on `∂V₁ ∪ ∂V₂`.
pub fn standard_form(x: &SpherePointExact, spec: &RegionSpec) -> Result<StandardForm> {
    let mut found = Vec::new();
    for m in 1..=2 {
        for k in 0..3 {
            let z = candidate(x, m, k, spec)?;
            if on_boundary(&z, spec.eps()) {
                found.push(StandardForm { m, k, z });
            }
        }
    }
    match found.len() {
        0 => Err(Error::Precondition(format!(
            "{x} is not on the boundary of V1 or V2"
        ))),
        1 => Ok(found.pop().unwrap()),
        n => Err(Error::Inconsistency(format!(
            "{x} has {n} standard forms: {}",
            found
                .iter()
                .map(|f| format!("(m={}, k={})", f.m, f.k))
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

pub fn reassemble(f: &StandardForm, spec: &RegionSpec) -> Result<SpherePointExact> {
    let y = f.z.apply(&phi_a().pow(f.k as i64)?);
    Ok(if f.m == 2 { spec.p().apply(&y) } else { y })
}

/// Exact equality of two sphere points with possibly different scales.
///
/// Unit vectors `u`, `v` agree iff `Re⟨u, v⟩ = 1`; with `u = √s·a`, `v = √t·b`
/// that is `s·t·R² = 1` and `R > 0` for `R = Re Σ a_q b̄_q`.
pub fn same_point(x: &SpherePointExact, y: &SpherePointExact) -> Result<bool> {
    let inner = x
        .coords()
        .iter()
        .zip(y.coords())
        .fold(CycloNumber::zero(), |acc, (a, b)| &acc + &(a * &b.conj()));
    let re = (&inner + &inner.conj()).scale(&BigRational::new(1.into(), 2.into()));
    if re.real_sign()? != std::cmp::Ordering::Greater {
        return Ok(false);
    }
    let st = x.scale_sq() * y.scale_sq();
    Ok((&re * &re).scale(&st).is_one())
}

/// Numeric summary used by reports: the largest deviation of `Θ_m` from
/// `SU(3)` over `samples` boundary points.
pub fn max_unitarity_error(m: u32, eps: f64, samples: usize, seed: u64) -> Result<f64> {
    let theta = theta_build(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = numeric(&UMatrix::identity(3));
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let t = theta.evaluate(&sample_boundary(&mut rng, eps));
        worst = worst
            .max(max_diff(&mat_mul(&t, &adjoint_numeric(&t)), &id))
            .max((det_numeric(&t) - 1.0).norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::geometry::default_eps;

    fn spec() -> RegionSpec {
        RegionSpec::new(default_eps()).unwrap()
    }

    fn base_point() -> SpherePointExact {
        SpherePointExact::from_rationals([rat(24, 25), rat(7, 25), rat(0, 1)]).unwrap()
    }

    #[test]
    fn thetas_are_identity_at_rational_point() {
        for m in 1..=2 {
            let t = theta_build(m)
                .unwrap()
                .evaluate_exact(&base_point(), &spec())
                .unwrap();
            assert!(t.is_identity(), "Θ{m} = {t:?}");
        }
    }

    #[test]
    fn block_row_norms_are_d() {
        let t = theta_build(1).unwrap();
        for i in 1..3 {
            let row: SpherePoly = (1..3).fold(SpherePoly::zero(), |acc, j| {
                &acc + &(t.raw().get(i, j) * &t.raw().get(i, j).conj())
            });
            assert_eq!(row, block_scale());
        }
    }

    #[test]
    fn special_unitary_both_m() {
        for m in 1..=2 {
            let r = verify_theta_special_unitary(m, &spec(), 100, 7).unwrap();
            assert!(r.certified, "{r:?}");
        }
    }

    #[test]
    fn every_corruption_is_detected() {
        for m in 1..=2 {
            for c in corruption_controls(m, &spec(), 10, 1).unwrap() {
                assert!(c.detected, "{c:?}");
                assert!(!c.residual.is_empty(), "{c:?}");
            }
        }
    }

    #[test]
    fn sign_flip_reports_residual() {
        let t = theta_build(1).unwrap();
        let bad = t.with_entry(1, 2, -t.raw().get(1, 2));
        let r = verify_special_unitary_of(&bad, &spec(), 5, 0).unwrap();
        assert!(!r.certified);
        assert!(r.failing().any(|s| !s.residual.is_empty()));
    }

    #[test]
    fn equivariance_all_cases() {
        for g in Generator::ALL {
            for m in 1..=2 {
                let r = verify_alpha_equivariance(g, m, &spec(), 20, 3).unwrap();
                assert!(
                    r.certified,
                    "{g} m={m}: {:?}",
                    r.failing().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn b_chain_has_every_line() {
        let r = verify_alpha_equivariance(Generator::B, 2, &spec(), 1, 0).unwrap();
        for k in 0..3 {
            for part in [
                "shift",
                "commute",
                "conjugation",
                "diag",
                "main",
                "base",
                "twist-boundary",
            ] {
                let id = format!("b/m2/k{k}/{part}");
                assert!(r.identities.iter().any(|s| s.id == id), "missing {id}");
            }
        }
    }

    #[test]
    fn wrong_twist_is_caught() {
        let s = wrong_twist_control().unwrap();
        assert!(!s.certified);
        assert!(!s.residual.is_empty());
    }

    #[test]
    fn standard_forms() {
        let s = spec();
        let x = base_point();
        let f = standard_form(&x, &s).unwrap();
        assert_eq!((f.m, f.k), (1, 0));
        let f = standard_form(&x.apply(&phi_a()), &s).unwrap();
        assert_eq!((f.m, f.k), (1, 1));
        assert!(same_point(&f.z, &x).unwrap());
        let f = standard_form(&s.p().apply(&x), &s).unwrap();
        assert_eq!((f.m, f.k), (2, 0));
        assert!(same_point(&f.z, &x).unwrap());
    }

    #[test]
    fn standard_form_round_trip() {
        let s = spec();
        let x = base_point();
        let w = CycloNumber::omega();
        let twisted = SpherePointExact::new(
            vec![
                CycloNumber::from_rational(rat(24, 25)),
                CycloNumber::zero(),
                &w * &CycloNumber::from_rational(rat(7, 25)),
            ],
            rat(1, 1),
        )
        .unwrap();
        for z in [x, twisted] {
            for m in 1..=2 {
                for k in 0..3 {
                    let f = StandardForm { m, k, z: z.clone() };
                    let p = reassemble(&f, &s).unwrap();
                    let g = standard_form(&p, &s).unwrap();
                    assert_eq!((g.m, g.k), (m, k));
                    assert!(same_point(&reassemble(&g, &s).unwrap(), &p).unwrap());
                }
            }
        }
    }

    #[test]
    fn non_boundary_rejected() {
        let x = SpherePointExact::from_rationals([rat(1, 1), rat(0, 1), rat(0, 1)]).unwrap();
        assert!(matches!(
            standard_form(&x, &spec()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn same_point_distinguishes_phase() {
        let x = base_point();
        let y = SpherePointExact::new(x.coords().iter().map(|c| -c).collect(), rat(1, 1)).unwrap();
        assert!(!same_point(&x, &y).unwrap());
        assert!(same_point(&x, &x).unwrap());
    }

    #[test]
    fn rational_sqrts() {
        assert_eq!(
            rational_sqrt(&rat(49 * 576, 625 * 625)),
            Some(rat(168, 625))
        );
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
    }

    #[test]
    fn numeric_unitarity_is_tight() {
        assert!(max_unitarity_error(1, 49.0 / 625.0, 100, 5).unwrap() < GLUING_TOL);
        assert!(max_unitarity_error(2, 1.0 / 16.0, 100, 5).unwrap() < GLUING_TOL);
    }
}
