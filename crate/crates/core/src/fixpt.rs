// SPDX-License-Identifier: Apache-2.0

//! Fixed points of unitary actions on `S⁵` and `S⁵ × S⁵`.
//!
//! A unitary `M` fixes a point of the unit sphere iff `1` is an eigenvalue,
//! and the fixed set is the unit sphere of `ker(M − I)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use crate::cyclo::{rat, CycloNumber};
use crate::error::{Error, Result};
use crate::geometry::{check_eps, in_v1, in_v2, Region, RegionSpec, SpherePointExact};
use crate::groups::{pk_embed, theta_in, Family, GammaWord, GroupWord, PElem, PGroup};
use crate::matrix::UMatrix;
use crate::reps::{rep_images, RepName, RepTable};

pub fn has_eigenvalue_one(m: &UMatrix) -> bool {
    (m - &UMatrix::identity(m.dim())).det().is_zero()
}

/// Basis of `ker(M − I)`.
pub fn fixed_subspace(m: &UMatrix) -> Vec<Vec<CycloNumber>> {
    (m - &UMatrix::identity(m.dim())).kernel()
}

/// The spaces acted on: `Y = S⁵` through `φ`, and `X_i = S⁵ × S⁵` through `φ × ψ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Space {
    Y,
    X0,
    X1,
    X2,
}

impl Space {
    pub fn index(self) -> Option<u8> {
        match self {
            Space::Y => None,
            Space::X0 => Some(0),
            Space::X1 => Some(1),
            Space::X2 => Some(2),
        }
    }

    pub fn x(i: u8) -> Result<Space> {
        match i {
            0 => Ok(Space::X0),
            1 => Ok(Space::X1),
            2 => Ok(Space::X2),
            _ => Err(Error::Precondition(format!(
                "space index must be 0, 1 or 2, got {i}"
            ))),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            None => write!(f, "Y"),
            Some(i) => write!(f, "X{i}"),
        }
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "Y" => Ok(Space::Y),
            "X0" => Ok(Space::X0),
            "X1" => Ok(Space::X1),
            "X2" => Ok(Space::X2),
            _ => Err(Error::Config(format!(
                "unknown space '{s}', expected Y, X0, X1 or X2"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Offender {
    pub element: GroupWord,
    /// Basis of the `φ`-fixed subspace.
    pub basis: Vec<Vec<CycloNumber>>,
    /// Dimension of the `ψ`-fixed subspace, for product spaces.
    pub psi_dim: Option<usize>,
}

impl Offender {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone)]
pub struct FixedPointCensus {
    pub space: Space,
    pub group: String,
    pub checked: usize,
    pub offenders: Vec<Offender>,
}

impl FixedPointCensus {
    pub fn elements(&self) -> BTreeSet<GroupWord> {
        self.offenders.iter().map(|o| o.element.clone()).collect()
    }

    pub fn listing(&self) -> Vec<String> {
        self.offenders
            .iter()
            .map(|o| {
                let basis: Vec<String> = o
                    .basis
                    .iter()
                    .map(|v| {
                        format!(
                            "({})",
                            v.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(", ")
                        )
                    })
                    .collect();
                format!("{}: dim {} span {}", o.element, o.dim(), basis.join(" "))
            })
            .collect()
    }
}

/// Census over explicit `(element, φ(g), ψ(g))` triples; identity elements are skipped.
pub fn census_of<I>(space: Space, group: impl Into<String>, entries: I) -> FixedPointCensus
where
    I: IntoIterator<Item = (GroupWord, UMatrix, Option<UMatrix>)>,
{
    let mut offenders = Vec::new();
    let mut checked = 0;
    for (w, phi, psi) in entries {
        if w.is_identity() {
            continue;
        }
        checked += 1;
        let psi_dim = match &psi {
            Some(m) if !has_eigenvalue_one(m) => continue,
            Some(m) => Some(fixed_subspace(m).len()),
            None => None,
        };
        if !has_eigenvalue_one(&phi) {
            continue;
        }
        offenders.push(Offender {
            element: w,
            basis: fixed_subspace(&phi),
            psi_dim,
        });
    }
    FixedPointCensus {
        space,
        group: group.into(),
        checked,
        offenders,
    }
}

/// Complete census of `P(k)` on the given space.
pub fn product_census(k: u32, space: Space) -> Result<FixedPointCensus> {
    let phi = RepTable::build(RepName::Phi)?;
    let fam = Family::P(k);
    let phis = rep_images(&phi, fam)?;
    let psis = match space.index() {
        Some(i) => Some(rep_images(&RepTable::build(RepName::Psi(i))?, fam)?),
        None => None,
    };
    let entries = phis.into_iter().enumerate().map(|(n, (w, m))| {
        let psi = psis.as_ref().map(|ps| ps[n].1.clone());
        (w, m, psi)
    });
    Ok(census_of(space, fam.to_string(), entries))
}

/// Non-identity elements of `(A₁ ∪ A₂) ∩ P(k)`.
pub fn a1_union_a2(k: u32) -> Result<BTreeSet<GroupWord>> {
    let pg = PGroup::new(k)?;
    Ok(crate::groups::FiniteGroup::elements(&pg)
        .into_iter()
        .filter(|x| PGroup::in_a1(x) || PGroup::in_a2(x))
        .map(|x| GroupWord::P(k, x))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OffenderType {
    A1,
    A2,
    Other,
}

fn offender_type(w: &GroupWord) -> OffenderType {
    match w {
        GroupWord::P(_, x) if PGroup::in_a1(x) => OffenderType::A1,
        GroupWord::P(_, x) if PGroup::in_a2(x) => OffenderType::A2,
        _ => OffenderType::Other,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OffenderRecord {
    pub element: String,
    pub kind: OffenderType,
    pub fixed_dim: usize,
    pub fixed_point: String,
    pub region_v1: Region,
    pub region_v2: Region,
}

#[derive(Debug, Clone, Serialize)]
pub struct FreenessReport {
    pub i: u8,
    pub k: u32,
    pub eps: String,
    pub elements_checked: usize,
    pub offenders: Vec<OffenderRecord>,
    pub failures: Vec<String>,
    pub certified: bool,
}

/// Certifies that `P(k)` acts freely on `U_i = p_i⁻¹(V_i)`.
///
/// For `i = 0` every element with a fixed point on `X₀` must have its
/// `φ`-fixed circle inside `V₁` or `V₂`, which `U₀` avoids. For `i ∈ {1, 2}`
/// every element with a fixed point on `X_i` must have its `φ`-fixed circle
/// outside `V_i`.
pub fn verify_free_on_u(i: u8, k: u32, eps: &BigRational) -> Result<FreenessReport> {
    check_eps(eps)?;
    let spec = RegionSpec::new(eps.clone())?;
    let census = product_census(k, Space::x(i)?)?;
    let mut offenders = Vec::new();
    let mut failures = Vec::new();
    for o in &census.offenders {
        if o.dim() != 1 {
            return Err(Error::ManualAnalysis(format!(
                "{} has a {}-dimensional fixed subspace on Y; the circle argument does not apply",
                o.element,
                o.dim()
            )));
        }
        let z = SpherePointExact::normalized(o.basis[0].clone())?;
        let (r1, r2) = (in_v1(&z, &spec)?, in_v2(&z, &spec)?);
        let ok = match i {
            0 => r1 == Region::Interior || r2 == Region::Interior,
            1 => r1 == Region::Outside,
            _ => r2 == Region::Outside,
        };
        if !ok {
            failures.push(format!(
                "{}: fixed circle through {z} has V₁ {r1}, V₂ {r2}",
                o.element
            ));
        }
        offenders.push(OffenderRecord {
            element: o.element.to_string(),
            kind: offender_type(&o.element),
            fixed_dim: o.dim(),
            fixed_point: z.to_string(),
            region_v1: r1,
            region_v2: r2,
        });
    }
    Ok(FreenessReport {
        i,
        k,
        eps: eps.to_string(),
        elements_checked: census.checked,
        offenders,
        certified: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalarEnumeration {
    /// `(i, j, μ)` with `φ(a^i b^j)³ = μ·I`.
    pub cube_scalars: Vec<(u8, u8, String)>,
    /// Elements `a^i b^j z` of `Γ` with `φ`-eigenvalue 1.
    pub y_offenders: Vec<String>,
    /// Those also with a `ψ₀`-eigenvalue 1.
    pub x0_offenders: Vec<String>,
    pub all_in_p3: bool,
    pub matches_p3_census: bool,
    pub certified: bool,
}

/// Fixed points of all of `Γ` on `X₀`.
///
/// `φ(a^i b^j z) = z·M` with `M = φ(a^i b^j)`. Once `M³ = μI` with `μ³ = 1`
/// is verified, any eigenvalue `λ` of `M` has `λ⁹ = 1`, so `zλ = 1` forces
/// `z` to be a ninth root of unity and the nine candidates are exhaustive.
pub fn gamma_scalar_enumeration() -> Result<ScalarEnumeration> {
    let phi = RepTable::build(RepName::Phi)?;
    let psi0 = RepTable::build(RepName::Psi(0))?;
    let (a, b) = (&phi.images()[0], &phi.images()[1]);
    let mut cube_scalars = Vec::new();
    let mut y_off = BTreeSet::new();
    let mut x0_off = BTreeSet::new();
    for i in 0..3u8 {
        for j in 0..3u8 {
            let m = &a.pow(i as i64)? * &b.pow(j as i64)?;
            let m3 = m.pow(3)?;
            let mu = m3.get(0, 0).clone();
            if m3 != UMatrix::scalar(3, mu.clone()) || mu.root_index(3).is_none() {
                return Err(Error::Inconsistency(format!(
                    "φ(a^{i} b^{j})³ is not a cube root of unity times I"
                )));
            }
            cube_scalars.push((i, j, mu.to_string()));
            let psi = &psi0.images()[0].pow(i as i64)? * &psi0.images()[1].pow(j as i64)?;
            for t in 0..9i64 {
                let zm = m.scale(&CycloNumber::root_of_unity(9, t));
                if !has_eigenvalue_one(&zm) {
                    continue;
                }
                let w = GammaWord::new(i as i64, j as i64, rat(t, 9));
                if w == GammaWord::identity() {
                    continue;
                }
                if has_eigenvalue_one(&psi) {
                    x0_off.insert(w.clone());
                }
                y_off.insert(w);
            }
        }
    }
    let all_in_p3 = y_off.iter().all(|w| theta_in(&w.theta, 3));
    let p3: BTreeSet<GammaWord> = product_census(3, Space::X0)?
        .offenders
        .iter()
        .map(|o| match &o.element {
            GroupWord::P(3, x) => pk_embed(3, x),
            _ => unreachable!("census of P(3)"),
        })
        .collect::<Result<_>>()?;
    let matches = p3 == x0_off;
    Ok(ScalarEnumeration {
        cube_scalars,
        y_offenders: y_off.iter().map(ToString::to_string).collect(),
        x0_offenders: x0_off.iter().map(ToString::to_string).collect(),
        all_in_p3,
        matches_p3_census: matches,
        certified: all_in_p3 && matches,
    })
}

/// The `P(3)` element `a^i b^j c^t`.
pub fn p3(i: i64, j: i64, t: i64) -> GroupWord {
    let x = PElem {
        i: i.rem_euclid(3) as u32,
        j: j.rem_euclid(3) as u32,
        t: t.rem_euclid(3) as u32,
    };
    GroupWord::P(3, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::default_eps;
    use crate::groups::{FiniteGroup, GroupOps};

    #[test]
    fn eigenvalue_examples() {
        assert!(has_eigenvalue_one(&UMatrix::diag_roots(3, &[0, 1, 2])));
        assert!(!has_eigenvalue_one(&UMatrix::diag_roots(3, &[1, 2, 2])));
        assert!(has_eigenvalue_one(&UMatrix::identity(3)));
    }

    #[test]
    fn fixed_subspace_examples() {
        let one = CycloNumber::one;
        let zero = CycloNumber::zero;
        assert_eq!(
            fixed_subspace(&UMatrix::diag_roots(3, &[0, 1, 2])),
            vec![vec![one(), zero(), zero()]]
        );
        assert_eq!(
            fixed_subspace(&UMatrix::cyclic_shift3()),
            vec![vec![one(), one(), one()]]
        );
        assert_eq!(fixed_subspace(&UMatrix::identity(3)).len(), 3);
    }

    #[test]
    fn x0_census_of_p3_is_a1_union_a2() {
        let c = product_census(3, Space::X0).unwrap();
        assert_eq!(c.offenders.len(), 12);
        assert_eq!(c.elements(), a1_union_a2(3).unwrap());
        let expected: BTreeSet<GroupWord> = (1..3)
            .flat_map(|k| (0..3).flat_map(move |j| [p3(0, k, j), p3(k, -k, j)]))
            .collect();
        assert_eq!(c.elements(), expected);
    }

    #[test]
    fn x0_census_for_larger_k_is_inside_a1_union_a2() {
        for k in 4..=5 {
            let c = product_census(k, Space::X0).unwrap();
            assert!(c.elements().is_subset(&a1_union_a2(k).unwrap()));
            assert_eq!(c.offenders.len(), 12);
        }
    }

    #[test]
    fn xi_censuses_avoid_ai() {
        let a = |k: u32, want: fn(&PElem) -> bool, sp| {
            product_census(k, sp)
                .unwrap()
                .offenders
                .iter()
                .all(|o| match &o.element {
                    GroupWord::P(_, x) => !want(x),
                    _ => false,
                })
        };
        for k in 3..=4 {
            assert!(a(k, PGroup::in_a1, Space::X1));
            assert!(a(k, PGroup::in_a2, Space::X2));
        }
    }

    #[test]
    fn trivial_group_has_empty_census() {
        let id = p3(0, 0, 0);
        let c = census_of(
            Space::X0,
            "1",
            [(id, UMatrix::identity(3), Some(UMatrix::identity(3)))],
        );
        assert!(c.offenders.is_empty());
    }

    #[test]
    fn eigenvalue_one_is_a_class_function() {
        let phi = RepTable::build(RepName::Phi).unwrap();
        for k in 3..=4 {
            let pg = PGroup::new(k).unwrap();
            let imgs = rep_images(&phi, Family::P(k)).unwrap();
            let els = pg.elements();
            let fixed: Vec<bool> = imgs.iter().map(|(_, m)| has_eigenvalue_one(m)).collect();
            for (n, g) in els.iter().enumerate() {
                for h in [pg.a(), pg.b()] {
                    let conj = pg.mul(&pg.mul(&pg.inv(&h), g), &h);
                    let idx = els.iter().position(|x| *x == conj).unwrap();
                    assert_eq!(fixed[n], fixed[idx]);
                }
            }
        }
    }

    #[test]
    fn freeness_k3() {
        let eps = default_eps();
        for i in 0..3 {
            let r = verify_free_on_u(i, 3, &eps).unwrap();
            assert!(r.certified, "i={i}: {:?}", r.failures);
        }
        let r0 = verify_free_on_u(0, 3, &eps).unwrap();
        for o in &r0.offenders {
            match o.kind {
                OffenderType::A1 => assert_eq!(o.region_v1, Region::Interior),
                OffenderType::A2 => assert_eq!(o.region_v2, Region::Interior),
                OffenderType::Other => panic!("unexpected offender {}", o.element),
            }
        }
    }

    #[test]
    fn freeness_rejects_bad_eps() {
        assert!(matches!(
            verify_free_on_u(0, 3, &rat(0, 1)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn gamma_enumeration() {
        let e = gamma_scalar_enumeration().unwrap();
        assert!(e.certified, "{e:?}");
        assert_eq!(e.x0_offenders.len(), 12);
    }
}
