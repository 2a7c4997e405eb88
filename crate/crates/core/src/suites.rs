// SPDX-License-Identifier: Apache-2.0

//! Named verification suites. Check order is fixed by construction, so
//! reports are deterministic for a given config.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::fixpt::{
    a1_union_a2, gamma_scalar_enumeration, product_census, verify_free_on_u, Space,
};
use crate::geometry::{
    conjugation_identities, formula_one_check, verify_disjointness, verify_invariance, RegionSpec,
};
use crate::gluing::{
    corruption_controls, reassemble, same_point, standard_form, verify_alpha_equivariance,
    verify_theta_special_unitary, wrong_twist_control, Generator, StandardForm, NORMALIZATION_NOTE,
};
use crate::groups::{
    alternating_group_a4, elementary_abelian_rank, iso_check, iso_search, verify_relations, BGroup,
    EGroup, FiniteGroup, GroupOps, PGroup, Presented,
};
use crate::matrix::UMatrix;
use crate::reps::{character, det_check, e_matrix_model_agrees, inner_product, RepName, RepTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    TheoremA,
    Groups,
    Representations,
    FixedPoints,
    Geometry,
    Gluing,
    All,
    NegativeControls,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "theorem-a",
        "groups",
        "representations",
        "fixedpoints",
        "geometry",
        "gluing",
        "all",
        "negative-controls",
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            Suite::TheoremA => 0,
            Suite::Groups => 1,
            Suite::Representations => 2,
            Suite::FixedPoints => 3,
            Suite::Geometry => 4,
            Suite::Gluing => 5,
            Suite::All => 6,
            Suite::NegativeControls => 7,
        };
        f.write_str(Self::NAMES[i])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theorem-a" => Suite::TheoremA,
            "groups" => Suite::Groups,
            "representations" => Suite::Representations,
            "fixedpoints" => Suite::FixedPoints,
            "geometry" => Suite::Geometry,
            "gluing" => Suite::Gluing,
            "all" => Suite::All,
            "negative-controls" => Suite::NegativeControls,
            _ => {
                return Err(Error::Config(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }
}

use crate::report::{Check, Report};

struct Runner<'a> {
    cfg: &'a Config,
    spec: RegionSpec,
    report: Report,
}

impl<'a> Runner<'a> {
    fn check(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        f: impl FnOnce(&RegionSpec) -> Result<(bool, Value)>,
    ) -> Result<()> {
        let start = Instant::now();
        let (ok, witness) = f(&self.spec)?;
        let mut c = Check::new(id, anchor, ok, witness);
        if self.cfg.record_timing {
            c.timing_ns = Some(start.elapsed().as_nanos() as u64);
        }
        self.report.push(c);
        Ok(())
    }
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

/// Runs a suite; configuration problems surface before any check runs.
pub fn run_suite(suite: Suite, cfg: &Config) -> Result<Report> {
    cfg.validate()?;
    let mut r = Runner {
        cfg,
        spec: cfg.spec()?,
        report: Report::new(suite.to_string()),
    };
    r.report.config = to_value(cfg)?;
    match suite {
        Suite::TheoremA => theorem_a(&mut r)?,
        Suite::Groups => groups(&mut r)?,
        Suite::Representations => representations(&mut r)?,
        Suite::FixedPoints => fixedpoints(&mut r)?,
        Suite::Geometry => geometry(&mut r)?,
        Suite::Gluing => gluing(&mut r)?,
        Suite::All => {
            groups(&mut r)?;
            representations(&mut r)?;
            geometry(&mut r)?;
            fixedpoints(&mut r)?;
            gluing(&mut r)?;
        }
        Suite::NegativeControls => negative_controls(&mut r)?,
    }
    Ok(r.report)
}

fn presentation_check<G>(r: &mut Runner, id: String, g: &G) -> Result<()>
where
    G: Presented,
    G::Elem: Eq + std::hash::Hash + Ord,
{
    let p = g.presentation();
    let anchor = p
        .relations
        .iter()
        .map(|x| x.label.clone())
        .collect::<Vec<_>>()
        .join(", ");
    r.check(id, &anchor, |_| {
        let rc = verify_relations(g, &g.generators(), &p.relations)?;
        Ok((
            rc.passed() && g.order() == g.presented_order(),
            to_value(&rc)?,
        ))
    })
}

fn groups(r: &mut Runner) -> Result<()> {
    for k in r.cfg.ks() {
        let pg = PGroup::new(k)?;
        r.check(format!("groups/order/P{k}"), "|P(k)| = 3^k", |_| {
            let n = pg.order();
            Ok((
                n == 3usize.pow(k),
                json!({ "order": n, "expected": 3usize.pow(k) }),
            ))
        })?;
        presentation_check(r, format!("groups/relations/P{k}"), &pg)?;
    }
    for &p in &r.cfg.primes.clone() {
        let eg = EGroup::new(p)?;
        r.check(format!("groups/order/E{p}"), "|E(p)| = 3p^2", |_| {
            let n = eg.order();
            Ok((
                n == 3 * (p * p) as usize,
                json!({ "order": n, "expected": 3 * p * p }),
            ))
        })?;
        presentation_check(r, format!("groups/relations/E{p}"), &eg)?;
    }
    let bg = BGroup::new(4, -1)?;
    r.check("groups/order/B4", "|B(4,-1)| = 81", |_| {
        Ok((
            bg.order() == 81,
            json!({ "order": bg.order(), "expected": 81 }),
        ))
    })?;
    presentation_check(r, "groups/relations/B4".into(), &bg)?;

    r.check(
        "groups/iso/P3-E3",
        "P(3) ≅ E(3): a ↦ w, b ↦ vu, c ↦ v^-1 u",
        |_| {
            let (p3, e3) = (PGroup::new(3)?, EGroup::new(3)?);
            let (u, v, w) = (e3.u(), e3.v(), e3.w());
            let images = vec![w, e3.mul(&v, &u), e3.mul(&e3.inv(&v), &u)];
            Ok((
                iso_check(&p3, &e3, &images)?,
                json!({ "images": ["w", "vu", "v^-1 u"] }),
            ))
        },
    )?;
    r.check("groups/iso/E2-A4", "E(2) ≅ A4", |_| {
        let e2 = EGroup::new(2)?;
        let a4 = alternating_group_a4()?.cayley();
        let found = iso_search(&e2, &a4)?;
        let ok = match &found {
            Some(images) => iso_check(&e2, &a4, images)?,
            None => false,
        };
        Ok((ok, json!({ "a4_order": a4.order(), "images": found })))
    })?;
    for k in r.cfg.ks() {
        r.check(format!("groups/rank/P{k}"), "rank P(k) = 2", |_| {
            let rank = elementary_abelian_rank(&PGroup::new(k)?, 3);
            Ok((rank == 2, json!({ "p": 3, "rank": rank })))
        })?;
    }
    r.check("groups/rank/B4", "rank B(4,-1) = 2", |_| {
        let rank = elementary_abelian_rank(&bg, 3);
        Ok((rank == 2, json!({ "p": 3, "rank": rank })))
    })
}

fn rep_tables(cfg: &Config) -> Vec<RepName> {
    let mut names = vec![
        RepName::Phi,
        RepName::Psi(0),
        RepName::Psi(1),
        RepName::Psi(2),
        RepName::RhoP3,
    ];
    // E(3) is served by ρ_P3 through P(3) ≅ E(3)
    names.extend(
        cfg.primes
            .iter()
            .filter(|&&p| p != 3)
            .map(|&p| RepName::RhoE(p)),
    );
    names.extend([RepName::RhoB4, RepName::RhoE2]);
    names
}

fn representations(r: &mut Runner) -> Result<()> {
    for name in rep_tables(r.cfg) {
        let t = RepTable::build(name)?;
        r.check(
            format!("reps/relations/{name}"),
            "ρ respects every defining relation",
            |_| {
                let rc = t.verify_relations()?;
                let nonunitary = t.non_unitary_generators();
                Ok((
                    rc.passed() && nonunitary.is_empty(),
                    json!({ "relations": rc, "non_unitary": nonunitary }),
                ))
            },
        )?;
        if matches!(
            name,
            RepName::RhoE(_) | RepName::RhoB4 | RepName::RhoP3 | RepName::RhoE2
        ) {
            r.check(format!("reps/det/{name}"), "det ρ(g) = 1", |_| {
                let d = det_check(&t, name.source())?;
                Ok((d.passed(), to_value(&d)?))
            })?;
        }
        if let RepName::RhoE(p) = name {
            r.check(
                format!("reps/model/{name}"),
                "ρ_E(p) is faithful on normal forms",
                |_| Ok((e_matrix_model_agrees(p)?, Value::Null)),
            )?;
        }
    }
    for k in r.cfg.ks() {
        for name in [
            RepName::Phi,
            RepName::Psi(0),
            RepName::Psi(1),
            RepName::Psi(2),
        ] {
            let t = RepTable::build(name)?;
            r.check(
                format!("reps/restricted/{name}/P{k}"),
                "P(k) ⊂ Γ: a, b, c = z^(3^(2-k))",
                |_| {
                    let rc = t.verify_restricted(k)?;
                    Ok((rc.passed(), to_value(&rc)?))
                },
            )?;
        }
    }
    let p3 = crate::groups::Family::P(3);
    r.check("reps/irreducible/phi", "<χ_φ, χ_φ> = 1 on P(3)", |_| {
        let x = character(&RepTable::build(RepName::Phi)?, p3)?;
        let n = inner_product(&x, &x)?;
        Ok((
            n == num_rational::BigRational::from_integer(1.into()),
            json!({ "inner_product": n.to_string() }),
        ))
    })?;
    for i in 0..3u8 {
        r.check(
            format!("reps/reducible/psi{i}"),
            "<χ_ψi, χ_ψi> > 1 on P(3)",
            |_| {
                let x = character(&RepTable::build(RepName::Psi(i))?, p3)?;
                let n = inner_product(&x, &x)?;
                Ok((
                    n > num_rational::BigRational::from_integer(1.into()),
                    json!({ "inner_product": n.to_string() }),
                ))
            },
        )?;
    }
    Ok(())
}

fn geometry(r: &mut Runner) -> Result<()> {
    r.check(
        "geometry/conjugation",
        "Pφ(a)P^-1 = φ(a), Pφ(b)P^-1 = φ(a^2 b)",
        |spec| {
            let [a, b] = conjugation_identities(spec)?;
            Ok((
                a && b,
                json!({ "a": a, "b": b, "unitary": spec.p().is_unitary() }),
            ))
        },
    )?;
    for i in 1..=2u32 {
        for k in 0..3i64 {
            r.check(
                format!("geometry/formula-one/i{i}/k{k}"),
                "φ(b)P^(i-1)φ(a^k) = P^(i-1)φ(a^(k+i-1))φ(b)φ(ω^-k)",
                |spec| Ok((formula_one_check(spec, i, k)?, Value::Null)),
            )?;
        }
    }
    disjointness(r)?;
    invariance(r)
}

fn disjointness(r: &mut Runner) -> Result<()> {
    let (n, seed) = (r.cfg.numeric_samples, r.cfg.seed);
    r.check("geometry/disjointness", "V1 ∩ V2 = ∅", |spec| {
        let d = verify_disjointness(spec, n, seed)?;
        Ok((d.certified, to_value(&d)?))
    })?;
    r.report.note("disjointness is certified through pair sums |(Pz)_i|^2 + |(Pz)_j|^2; the coordinate-wise estimate |(Pz)_q|^2 ≥ 1/3 - ε fails on V1 and its counterexample is attached to geometry/disjointness");
    Ok(())
}

fn invariance(r: &mut Runner) -> Result<()> {
    let (n, seed) = (r.cfg.invariance_samples, r.cfg.seed);
    for i in 0..3u32 {
        for k in r.cfg.ks() {
            r.check(
                format!("geometry/invariance/V{i}/P{k}"),
                "P(k)·V_i = V_i",
                |spec| {
                    let rep = verify_invariance(i, k, spec, n, seed)?;
                    Ok((rep.certified, to_value(&rep)?))
                },
            )?;
        }
    }
    Ok(())
}

fn freeness(r: &mut Runner) -> Result<()> {
    for i in 0..3u8 {
        for k in r.cfg.ks() {
            r.check(
                format!("fixedpoints/free/U{i}/P{k}"),
                "P(k) acts freely on U_i",
                |spec| {
                    let rep = verify_free_on_u(i, k, spec.eps())?;
                    Ok((rep.certified, to_value(&rep)?))
                },
            )?;
        }
    }
    Ok(())
}

fn fixedpoints(r: &mut Runner) -> Result<()> {
    for k in r.cfg.ks() {
        r.check(format!("fixedpoints/census/X0/P{k}"), "Fix(X0) = A1 ∪ A2", |_| {
            let census = product_census(k, Space::X0)?;
            let found = census.elements();
            let expected = a1_union_a2(k)?;
            // beyond k = 3 the offenders are the P(3)-elements of A1 ∪ A2
            let ok = if k == 3 { found == expected } else { found.is_subset(&expected) && !found.is_empty() };
            Ok((
                ok,
                json!({ "checked": census.checked, "offenders": census.listing(), "a1_union_a2": expected.len() }),
            ))
        })?;
        for i in 1..=2u8 {
            r.check(format!("fixedpoints/census/X{i}/P{k}"), "Fix(X_i) ∩ A_i = ∅", |_| {
                let census = product_census(k, Space::x(i)?)?;
                let pg = PGroup::new(k)?;
                let bad: Vec<String> = pg
                    .elements()
                    .into_iter()
                    .filter(|x| if i == 1 { PGroup::in_a1(x) } else { PGroup::in_a2(x) })
                    .map(|x| crate::groups::GroupWord::P(k, x))
                    .filter(|w| census.elements().contains(w))
                    .map(|w| w.to_string())
                    .collect();
                Ok((bad.is_empty(), json!({ "checked": census.checked, "offenders": census.listing(), "in_a": bad })))
            })?;
        }
    }
    freeness(r)?;
    r.check("fixedpoints/gamma", "Fix_Γ(X0) ⊂ P(3)", |_| {
        let e = gamma_scalar_enumeration()?;
        Ok((e.certified, to_value(&e)?))
    })
}

fn gluing_identities(r: &mut Runner) -> Result<()> {
    let (n, seed) = (r.cfg.boundary_samples, r.cfg.seed);
    for m in 1..=2u32 {
        r.check(
            format!("gluing/special-unitary/theta{m}"),
            "Θ_m ∈ SU(3)",
            |spec| {
                let rep = verify_theta_special_unitary(m, spec, n, seed)?;
                Ok((rep.certified, to_value(&rep)?))
            },
        )?;
    }
    for g in Generator::ALL {
        for m in 1..=2u32 {
            r.check(
                format!("gluing/equivariance/{g}/m{m}"),
                "Θ_m(gz)ψ0(g) = ψ_m(g)Θ_m(z)",
                |spec| {
                    let rep = verify_alpha_equivariance(g, m, spec, n, seed)?;
                    Ok((rep.certified, to_value(&rep)?))
                },
            )?;
        }
    }
    r.report
        .note(format!("gluing normalization: {NORMALIZATION_NOTE}"));
    Ok(())
}

fn gluing(r: &mut Runner) -> Result<()> {
    gluing_identities(r)?;
    r.check(
        "gluing/standard-form",
        "x = P^(m-1)φ(a^k)z with |z2|^2 + |z3|^2 = ε",
        |spec| {
            let mut rows = Vec::new();
            let mut ok = true;
            let eps = spec.eps().clone();
            // a base point with z₁ = √(1−ε) when ε(1−ε) is a rational square, else skip
            let Some(base) = boundary_point(&eps)? else {
                return Ok((true, json!("no rational boundary point for this ε")));
            };
            for m in 1..=2u32 {
                for k in 0..3u32 {
                    let x = reassemble(
                        &StandardForm {
                            m,
                            k,
                            z: base.clone(),
                        },
                        spec,
                    )?;
                    let f = standard_form(&x, spec)?;
                    let back = same_point(&reassemble(&f, spec)?, &x)?;
                    let hit = (f.m, f.k) == (m, k) && back;
                    ok &= hit;
                    rows.push(
                        json!({ "m": m, "k": k, "decomposed": [f.m, f.k], "round_trip": back }),
                    );
                }
            }
            Ok((ok, json!({ "z": base.to_string(), "cases": rows })))
        },
    )
}

/// `(√(1−ε), √ε, 0)` when both roots are rational.
fn boundary_point(
    eps: &num_rational::BigRational,
) -> Result<Option<crate::geometry::SpherePointExact>> {
    use crate::gluing::rational_sqrt;
    let one = num_rational::BigRational::from_integer(1.into());
    match (rational_sqrt(&(&one - eps)), rational_sqrt(eps)) {
        (Some(a), Some(b)) => Ok(Some(crate::geometry::SpherePointExact::from_rationals([
            a,
            b,
            num_rational::BigRational::from_integer(0.into()),
        ])?)),
        _ => Ok(None),
    }
}

fn theorem_a(r: &mut Runner) -> Result<()> {
    disjointness(r)?;
    invariance(r)?;
    freeness(r)?;
    gluing_identities(r)
}

/// Each control is a deliberately broken input; "certified" means the breakage was caught.
fn negative_controls(r: &mut Runner) -> Result<()> {
    let (n, seed) = (r.cfg.boundary_samples.min(10), r.cfg.seed);
    for m in 1..=2u32 {
        r.check(
            format!("negative/theta{m}-corruption"),
            "corrupted Θ_m ∉ SU(3)",
            |spec| {
                let outcomes = corruption_controls(m, spec, n, seed)?;
                Ok((outcomes.iter().all(|o| o.detected), to_value(&outcomes)?))
            },
        )?;
    }
    r.check(
        "negative/wrong-twist",
        "Θ1(z'') ≠ Θ1(z)·diag(1, ω, ω^2)",
        |_| {
            let s = wrong_twist_control()?;
            Ok((!s.certified, to_value(&s)?))
        },
    )?;
    r.check(
        "negative/psi0-wrong-a",
        "ψ0 with a ↦ φ(a) breaks [a,b] = ω",
        |_| {
            let t = RepTable::build(RepName::Psi(0))?;
            let mut imgs = t.images().to_vec();
            imgs[0] = UMatrix::cyclic_shift3();
            let rc = t.with_images(imgs).verify_relations()?;
            Ok((!rc.passed(), to_value(&rc)?))
        },
    )?;
    r.check("negative/eps-range", "ε ≥ 1/9 is rejected", |_| {
        let bad = Config {
            eps: "1/4".into(),
            ..r.cfg.clone()
        };
        let rejected = matches!(bad.validate(), Err(Error::Config(_)));
        Ok((rejected, json!({ "eps": "1/4" })))
    })?;
    r.check("negative/p3-not-cyclic", "P(3) ≇ Z/27", |_| {
        let found = iso_search(&PGroup::new(3)?, &crate::groups::CyclicGroup::new(27))?;
        Ok((found.is_none(), Value::Null))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> Config {
        Config {
            k_max: 3,
            primes: vec![5],
            numeric_samples: 200,
            invariance_samples: 20,
            boundary_samples: 5,
            ..Config::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(Suite::from_str(n).unwrap().to_string(), n);
        }
        assert!(Suite::from_str("nope").is_err());
    }

    #[test]
    fn bad_eps_rejected_before_running() {
        let cfg = Config {
            eps: "1/4".into(),
            ..Config::default()
        };
        assert!(matches!(run_suite(Suite::All, &cfg), Err(Error::Config(_))));
    }

    #[test]
    fn gluing_suite_certifies() {
        let rep = run_suite(Suite::Gluing, &quick()).unwrap();
        assert!(rep.is_certified(), "{:?}", rep.failed().collect::<Vec<_>>());
        assert!(rep.notes.iter().any(|n| n.contains("2x2 block")));
    }

    #[test]
    fn negative_controls_all_detected() {
        let rep = run_suite(Suite::NegativeControls, &quick()).unwrap();
        assert!(rep.is_certified(), "{:?}", rep.failed().collect::<Vec<_>>());
    }

    #[test]
    fn check_ids_are_unique() {
        let rep = run_suite(Suite::Geometry, &quick()).unwrap();
        let mut ids: Vec<_> = rep.checks.iter().map(|c| c.id.clone()).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }
}
