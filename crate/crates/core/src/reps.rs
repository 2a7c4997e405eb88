// SPDX-License-Identifier: Apache-2.0

//! Explicit three-dimensional representations as exact matrix tables.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::cyclo::{rat, CycloNumber};
use crate::error::{Error, Result};
use crate::groups::{
    enumerate_family, evaluate_word, is_prime, pk_embed, verify_relations, BGroup, CircleRule,
    EGroup, Family, FiniteGroup, GammaGroup, GroupOps, GroupWord, MatrixOps, PGroup, Presented,
    Relation, RelationCheck,
};
use crate::matrix::UMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RepName {
    Phi,
    /// `ψ₀`, `ψ₁`, `ψ₂`
    Psi(u8),
    RhoP3,
    /// `E(p)` for a prime `p ∉ {2, 3}`.
    RhoE(u32),
    RhoB4,
    RhoE2,
}

impl RepName {
    /// The eight tables, with the given prime for `ρ_E(p)`.
    pub fn all(p: u32) -> Vec<RepName> {
        vec![
            RepName::Phi,
            RepName::Psi(0),
            RepName::Psi(1),
            RepName::Psi(2),
            RepName::RhoP3,
            RepName::RhoE(p),
            RepName::RhoB4,
            RepName::RhoE2,
        ]
    }

    pub fn source(&self) -> Family {
        match self {
            RepName::Phi | RepName::Psi(_) => Family::Gamma,
            RepName::RhoP3 => Family::P(3),
            RepName::RhoE(p) => Family::E(*p),
            RepName::RhoB4 => Family::B(4, -1),
            RepName::RhoE2 => Family::E(2),
        }
    }
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepName::Phi => write!(f, "phi"),
            RepName::Psi(i) => write!(f, "psi{i}"),
            RepName::RhoP3 => write!(f, "rho_p3"),
            RepName::RhoE(p) => write!(f, "rho_e{p}"),
            RepName::RhoB4 => write!(f, "rho_b4"),
            RepName::RhoE2 => write!(f, "rho_e2"),
        }
    }
}

impl FromStr for RepName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .to_ascii_lowercase()
            .replace(['(', ')', '-'], "")
            .replace("rho_", "rho");
        Ok(match t.as_str() {
            "phi" | "φ" => RepName::Phi,
            "psi0" | "ψ₀" => RepName::Psi(0),
            "psi1" | "ψ₁" => RepName::Psi(1),
            "psi2" | "ψ₂" => RepName::Psi(2),
            "rhop3" => RepName::RhoP3,
            "rhob4" => RepName::RhoB4,
            "rhoe2" => RepName::RhoE2,
            _ => {
                let p = t
                    .strip_prefix("rhoe")
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or_else(|| Error::Config(format!("unknown representation '{s}'")))?;
                RepName::RhoE(p)
            }
        })
    }
}

/// Generator images of a representation, with the action of the circle.
#[derive(Debug, Clone)]
pub struct RepTable {
    name: RepName,
    generators: Vec<&'static str>,
    images: Vec<UMatrix>,
    circle: CircleRule,
}

fn omega_pow(k: i64) -> CycloNumber {
    CycloNumber::root_of_unity(3, k)
}

/// The matrices of `E(p)` for `p ≠ 3`: `u = diag(α,α,β)`, `v = diag(α,β,α)`,
/// `w` the cyclic shift, with `α = ζ_p`, `β = ζ_p^{p−2}`.
fn e_matrices(p: u32) -> Vec<UMatrix> {
    let pi = p as i64;
    vec![
        UMatrix::diag_roots(p, &[1, 1, pi - 2]),
        UMatrix::diag_roots(p, &[1, pi - 2, 1]),
        UMatrix::cyclic_shift3(),
    ]
}

impl RepTable {
    pub fn build(name: RepName) -> Result<Self> {
        let shift = UMatrix::cyclic_shift3();
        let scalar_omega = UMatrix::scalar(3, omega_pow(1));
        let (generators, images, circle) = match name {
            RepName::Phi => (
                vec!["a", "b"],
                vec![shift, UMatrix::diag_roots(3, &[0, 1, 2])],
                CircleRule::Scalar,
            ),
            RepName::Psi(i) => {
                let b = match i {
                    0 => UMatrix::diag_roots(3, &[1, 1, 0]),
                    1 => UMatrix::diag_roots(3, &[1, 2, 2]),
                    2 => UMatrix::diag_roots(3, &[2, 0, 0]),
                    _ => {
                        return Err(Error::Precondition(format!(
                            "ψ index must be 0, 1 or 2, got {i}"
                        )))
                    }
                };
                (vec!["a", "b"], vec![scalar_omega, b], CircleRule::Trivial)
            }
            RepName::RhoP3 => (
                vec!["a", "b", "c"],
                vec![shift, UMatrix::diag_roots(3, &[0, 1, 2]), scalar_omega],
                CircleRule::Absent,
            ),
            RepName::RhoE(p) => {
                if !is_prime(p) || p == 2 || p == 3 {
                    return Err(Error::Precondition(format!(
                        "ρ_E(p) needs a prime p ∉ {{2, 3}}, got {p}; use rho_e2 or rho_p3"
                    )));
                }
                (vec!["u", "v", "w"], e_matrices(p), CircleRule::Absent)
            }
            RepName::RhoE2 => (vec!["u", "v", "w"], e_matrices(2), CircleRule::Absent),
            RepName::RhoB4 => (
                vec!["a", "b", "c"],
                vec![
                    shift,
                    UMatrix::diag_roots(9, &[0, 3, 6]),
                    UMatrix::diag_roots(9, &[5, 8, 5]),
                ],
                CircleRule::Absent,
            ),
        };
        Ok(RepTable {
            name,
            generators,
            images,
            circle,
        })
    }

    /// A table with arbitrary images, for negative controls.
    pub fn with_images(&self, images: Vec<UMatrix>) -> Self {
        RepTable {
            images,
            ..self.clone()
        }
    }

    pub fn name(&self) -> RepName {
        self.name
    }

    pub fn source(&self) -> Family {
        self.name.source()
    }

    pub fn generator_names(&self) -> &[&'static str] {
        &self.generators
    }

    pub fn images(&self) -> &[UMatrix] {
        &self.images
    }

    pub fn image(&self, generator: &str) -> Option<&UMatrix> {
        self.generators
            .iter()
            .position(|g| *g == generator)
            .map(|i| &self.images[i])
    }

    pub fn circle_rule(&self) -> CircleRule {
        self.circle
    }

    pub fn ops(&self) -> MatrixOps {
        MatrixOps::new(3, self.circle)
    }

    /// Image of `e^{2πiθ}`; `None` for tables of finite groups.
    pub fn circle_image(&self, theta: &BigRational) -> Option<UMatrix> {
        self.circle.image(3, theta)
    }

    pub fn source_relations(&self) -> Result<Vec<Relation>> {
        Ok(match self.source() {
            Family::Gamma => GammaGroup::relations(&GammaGroup::default_circle_samples()),
            Family::P(k) => PGroup::new(k)?.presentation().relations,
            Family::E(p) => EGroup::new(p)?.presentation().relations,
            Family::B(k, e) => BGroup::new(k, e)?.presentation().relations,
            Family::Cyclic(_) => Vec::new(),
        })
    }

    pub fn verify_relations(&self) -> Result<RelationCheck> {
        verify_relations(&self.ops(), &self.images, &self.source_relations()?)
    }

    /// Generators whose image is not exactly unitary.
    pub fn non_unitary_generators(&self) -> Vec<String> {
        self.generators
            .iter()
            .zip(&self.images)
            .filter(|(_, m)| !m.is_unitary())
            .map(|(g, _)| g.to_string())
            .collect()
    }

    /// Images of `a, b, c` for the restriction to `P(k) ⊂ Γ`; `ρ_P3` is accepted for `k = 3`.
    pub fn restrict_to_pk(&self, k: u32) -> Result<Vec<UMatrix>> {
        match self.source() {
            Family::Gamma => {
                let pg = PGroup::new(k)?;
                let theta = pk_embed(k, &pg.c())?.theta;
                let c = self
                    .circle_image(&theta)
                    .expect("Γ tables carry a circle rule");
                Ok(vec![self.images[0].clone(), self.images[1].clone(), c])
            }
            Family::P(3) if k == 3 => Ok(self.images.clone()),
            other => Err(Error::Mismatch(format!(
                "{} has source {other}, not a subgroup of Γ",
                self.name
            ))),
        }
    }

    /// Relations of `P(k)` under the restricted images.
    pub fn verify_restricted(&self, k: u32) -> Result<RelationCheck> {
        let imgs = self.restrict_to_pk(k)?;
        verify_relations(
            &MatrixOps::new(3, CircleRule::Absent),
            &imgs,
            &PGroup::new(k)?.presentation().relations,
        )
    }
}

/// Evaluates a representation on a group element given in normal form.
pub fn rep_apply(rep: &RepTable, w: &GroupWord) -> Result<UMatrix> {
    let ops = rep.ops();
    match (rep.source(), w) {
        (Family::Gamma, GroupWord::Gamma(x)) => evaluate_word(&ops, rep.images(), &x.word()),
        (Family::Gamma, GroupWord::P(k, x)) => {
            evaluate_word(&ops, rep.images(), &pk_embed(*k, x)?.word())
        }
        (Family::P(3), GroupWord::P(3, x)) => {
            evaluate_word(&ops, rep.images(), &PGroup::new(3)?.word_of(x))
        }
        (Family::E(p), GroupWord::E(q, x)) if p == *q => {
            evaluate_word(&ops, rep.images(), &EGroup::new(*q)?.word_of(x))
        }
        (Family::B(k, e), GroupWord::B(k2, e2, x)) if k == *k2 && e == *e2 => {
            evaluate_word(&ops, rep.images(), &BGroup::new(k, e)?.word_of(x))
        }
        (src, _) => Err(Error::Mismatch(format!(
            "{} is a representation of {src}, got an element of {}",
            rep.name(),
            w.family()
        ))),
    }
}

/// Images of every element of a finite group, in enumeration order.
pub fn rep_images(rep: &RepTable, group: Family) -> Result<Vec<(GroupWord, UMatrix)>> {
    let ops = MatrixOps::new(3, CircleRule::Absent);
    match (rep.source(), group) {
        (Family::Gamma, Family::P(k)) => {
            // a^i b^j c^t from cached powers
            let imgs = rep.restrict_to_pk(k)?;
            let pg = PGroup::new(k)?;
            let pa: Vec<UMatrix> = (0..3).map(|i| ops.pow(&imgs[0], i)).collect();
            let pb: Vec<UMatrix> = (0..3).map(|j| ops.pow(&imgs[1], j)).collect();
            let mut pc = vec![UMatrix::identity(3)];
            for t in 1..pg.c_order() as usize {
                pc.push(&pc[t - 1] * &imgs[2]);
            }
            let mut out = Vec::with_capacity(9 * pg.c_order() as usize);
            for w in enumerate_family(group)? {
                let GroupWord::P(_, x) = &w else {
                    unreachable!()
                };
                let m = &(&pa[x.i as usize] * &pb[x.j as usize]) * &pc[x.t as usize];
                out.push((w, m));
            }
            Ok(out)
        }
        _ => enumerate_family(group)?
            .into_iter()
            .map(|w| rep_apply(rep, &w).map(|m| (w, m)))
            .collect(),
    }
}

/// Outcome of checking `det = 1` on every element.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DetReport {
    pub group: String,
    pub checked: usize,
    pub failing: Vec<String>,
}

impl DetReport {
    pub fn passed(&self) -> bool {
        self.failing.is_empty()
    }
}

pub fn det_check(rep: &RepTable, group: Family) -> Result<DetReport> {
    let imgs = rep_images(rep, group)?;
    let failing = imgs
        .iter()
        .filter(|(_, m)| !m.det().is_one())
        .map(|(w, _)| w.to_string())
        .collect();
    Ok(DetReport {
        group: group.to_string(),
        checked: imgs.len(),
        failing,
    })
}

/// Values of a character on an enumerated group.
#[derive(Debug, Clone)]
pub struct Character {
    pub elements: Vec<GroupWord>,
    pub values: Vec<CycloNumber>,
}

impl Character {
    pub fn from_values(elements: Vec<GroupWord>, values: Vec<CycloNumber>) -> Self {
        assert_eq!(elements.len(), values.len());
        Character { elements, values }
    }

    pub fn trivial(group: Family) -> Result<Self> {
        let els = enumerate_family(group)?;
        let n = els.len();
        Ok(Self::from_values(els, vec![CycloNumber::one(); n]))
    }

    pub fn at(&self, w: &GroupWord) -> Option<&CycloNumber> {
        self.elements
            .iter()
            .position(|x| x == w)
            .map(|i| &self.values[i])
    }
}

pub fn character(rep: &RepTable, group: Family) -> Result<Character> {
    let (els, vals) = rep_images(rep, group)?
        .into_iter()
        .map(|(w, m)| (w, m.trace()))
        .unzip();
    Ok(Character::from_values(els, vals))
}

/// `(1/|G|) Σ χ₁(g)·conj(χ₂(g))`; anything but a non-negative integer is an inconsistency.
pub fn inner_product(x1: &Character, x2: &Character) -> Result<BigRational> {
    if x1.elements != x2.elements {
        return Err(Error::Mismatch(
            "characters are defined on different element lists".into(),
        ));
    }
    let n = x1.values.len() as i64;
    if n == 0 {
        return Err(Error::Precondition("empty group".into()));
    }
    let sum = x1
        .values
        .iter()
        .zip(&x2.values)
        .fold(CycloNumber::zero(), |acc, (a, b)| acc + a * &b.conj());
    let q = sum.to_rational().ok_or_else(|| {
        Error::Inconsistency(format!("character inner product is not rational: {sum}"))
    })? / BigRational::from_integer(BigInt::from(n));
    if !q.is_integer() || q.is_negative() {
        return Err(Error::Inconsistency(format!(
            "character inner product {q} is not a non-negative integer"
        )));
    }
    Ok(q)
}

pub fn is_irreducible(rep: &RepTable, group: Family) -> Result<bool> {
    let chi = character(rep, group)?;
    Ok(inner_product(&chi, &chi)? == rat(1, 1))
}

/// True iff every listed central element maps to the identity.
pub fn factors_through_quotient(rep: &RepTable, central: &[GroupWord]) -> Result<bool> {
    for w in central {
        if !rep_apply(rep, w)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The circle points `c^t`, `t ≠ 0`, of `P(k)` as elements of `Γ`.
pub fn circle_points(k: u32) -> Result<Vec<GroupWord>> {
    let pg = PGroup::new(k)?;
    (1..pg.c_order())
        .map(|t| Ok(GroupWord::Gamma(pk_embed(k, &pg.elem(0, 0, t as i64))?)))
        .collect()
}

/// Images of each `E(p)` element must be distinct and multiply like the normal form.
pub fn e_matrix_model_agrees(p: u32) -> Result<bool> {
    let name = if p == 2 {
        RepName::RhoE2
    } else {
        RepName::RhoE(p)
    };
    let rep = RepTable::build(name)?;
    let eg = EGroup::new(p)?;
    let imgs = rep_images(&rep, Family::E(p))?;
    let mats: Vec<&UMatrix> = imgs.iter().map(|(_, m)| m).collect();
    for (i, x) in mats.iter().enumerate() {
        if mats[..i].iter().any(|y| y == x) {
            return Ok(false);
        }
    }
    let elems = eg.elements();
    let index: HashMap<_, usize> = elems.iter().enumerate().map(|(i, x)| (*x, i)).collect();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let k = index[&eg.mul(x, y)];
            if &(mats[i] * mats[j]) != mats[k] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FiniteGroup, GammaWord};

    fn phi() -> RepTable {
        RepTable::build(RepName::Phi).unwrap()
    }

    #[test]
    fn transcribed_images() {
        assert_eq!(
            phi().image("b").unwrap(),
            &UMatrix::diag_roots(3, &[0, 1, 2])
        );
        let b4 = RepTable::build(RepName::RhoB4).unwrap();
        assert_eq!(b4.image("c").unwrap(), &UMatrix::diag_roots(9, &[5, 8, 5]));
        let psi0 = RepTable::build(RepName::Psi(0)).unwrap();
        assert!(psi0.circle_image(&rat(2, 7)).unwrap().is_identity());
        assert_eq!(
            phi().circle_image(&rat(1, 3)).unwrap(),
            UMatrix::scalar(3, CycloNumber::omega())
        );
    }

    #[test]
    fn all_tables_unitary_and_relations_hold() {
        for p in [5, 7, 11, 13] {
            for name in RepName::all(p) {
                let rep = RepTable::build(name).unwrap();
                assert!(rep.non_unitary_generators().is_empty(), "{name}");
                let chk = rep.verify_relations().unwrap();
                assert!(chk.passed(), "{name}: {:?}", chk.failing);
            }
        }
    }

    #[test]
    fn phi_restricted_to_pk() {
        for k in 3..=5 {
            assert!(phi().verify_restricted(k).unwrap().passed());
        }
    }

    #[test]
    fn corrupted_b_breaks_commutator() {
        let rep = phi();
        let bad = rep.with_images(vec![
            rep.images()[0].clone(),
            UMatrix::diag_roots(3, &[0, 2, 1]),
        ]);
        let chk = bad.verify_relations().unwrap();
        assert_eq!(chk.failing, vec!["[a,b] = ω".to_string()]);
    }

    #[test]
    fn apply_examples() {
        let g = GroupWord::Gamma(GammaWord::a().inverse());
        let a_inv = rep_apply(&phi(), &g).unwrap();
        let comm = {
            let ops = phi().ops();
            let (a, b) = (&phi().images()[0].clone(), &phi().images()[1].clone());
            ops.mul(&ops.mul(&a_inv, &ops.inv(b)), &ops.mul(a, b))
        };
        assert_eq!(comm, UMatrix::scalar(3, CycloNumber::omega()));
        let psi1 = RepTable::build(RepName::Psi(1)).unwrap();
        let c = GroupWord::P(3, PGroup::new(3).unwrap().c());
        assert!(rep_apply(&psi1, &c).unwrap().is_identity());
        assert!(rep_apply(&psi1, &GroupWord::Gamma(GammaWord::identity()))
            .unwrap()
            .is_identity());
        let e5 = RepTable::build(RepName::RhoE(5)).unwrap();
        assert!(matches!(rep_apply(&e5, &c), Err(Error::Mismatch(_))));
        assert!(RepTable::build(RepName::RhoE(3)).is_err());
    }

    #[test]
    fn determinants() {
        for p in [5, 7, 11, 13] {
            assert!(
                det_check(&RepTable::build(RepName::RhoE(p)).unwrap(), Family::E(p))
                    .unwrap()
                    .passed()
            );
        }
        assert!(
            det_check(&RepTable::build(RepName::RhoB4).unwrap(), Family::B(4, -1))
                .unwrap()
                .passed()
        );
        assert!(det_check(&phi(), Family::P(3)).unwrap().passed());
    }

    #[test]
    fn irreducibility() {
        let chi = character(&phi(), Family::P(3)).unwrap();
        assert_eq!(inner_product(&chi, &chi).unwrap(), rat(1, 1));
        for i in 0..3 {
            let psi = RepTable::build(RepName::Psi(i)).unwrap();
            let chi = character(&psi, Family::P(3)).unwrap();
            assert!(inner_product(&chi, &chi).unwrap() > rat(1, 1));
        }
        let triv = Character::trivial(Family::P(3)).unwrap();
        assert_eq!(inner_product(&triv, &triv).unwrap(), rat(1, 1));
    }

    #[test]
    fn character_is_class_function() {
        let chi = character(&phi(), Family::P(4)).unwrap();
        let pg = PGroup::new(4).unwrap();
        for g in pg.elements() {
            for h in [pg.a(), pg.b()] {
                let conj = pg.mul(&pg.mul(&pg.inv(&h), &g), &h);
                assert_eq!(chi.at(&GroupWord::P(4, g)), chi.at(&GroupWord::P(4, conj)));
            }
        }
        assert_eq!(
            chi.at(&GroupWord::P(4, pg.identity())).unwrap(),
            &CycloNumber::from_int(3)
        );
    }

    #[test]
    fn quotient_factoring() {
        let psi1 = RepTable::build(RepName::Psi(1)).unwrap();
        let cs = circle_points(3).unwrap();
        assert!(factors_through_quotient(&psi1, &cs).unwrap());
        assert!(!factors_through_quotient(&phi(), &cs[..1]).unwrap());
        assert!(factors_through_quotient(&phi(), &[]).unwrap());
    }

    #[test]
    fn e_model_matches_normal_form() {
        for p in [2, 5, 7] {
            assert!(e_matrix_model_agrees(p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn names_parse() {
        for name in RepName::all(7) {
            assert_eq!(name.to_string().parse::<RepName>().unwrap(), name);
        }
        assert!("nope".parse::<RepName>().is_err());
    }
}
