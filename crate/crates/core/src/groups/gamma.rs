// SPDX-License-Identifier: Apache-2.0

//! The Lie group `Γ = ⟨a, b, z ∈ S¹ | a³ = b³ = [a,z] = [b,z] = 1, [a,b] = ω⟩`.
//!
//! Elements are written `a^i b^j e^{2πiθ}`. From `ab = ba·ω` one gets
//! `b^j a^i = a^i b^j ω^{-ij}`, hence
//! `(i₁,j₁,θ₁)(i₂,j₂,θ₂) = (i₁+i₂, j₁+j₂, θ₁+θ₂ − i₂j₁/3 mod 1)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{GroupOps, Letter, PElem, Relation, Word};
use crate::cyclo::rat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaWord {
    pub i: u8,
    pub j: u8,
    /// Circle coordinate in `[0, 1)`.
    pub theta: BigRational,
}

/// Reduces a rational modulo 1 into `[0, 1)`.
pub(crate) fn frac(q: &BigRational) -> BigRational {
    q - q.floor()
}

impl GammaWord {
    pub fn new(i: i64, j: i64, theta: BigRational) -> Self {
        GammaWord {
            i: i.rem_euclid(3) as u8,
            j: j.rem_euclid(3) as u8,
            theta: frac(&theta),
        }
    }

    pub fn identity() -> Self {
        Self::new(0, 0, BigRational::zero())
    }

    pub fn a() -> Self {
        Self::new(1, 0, BigRational::zero())
    }

    pub fn b() -> Self {
        Self::new(0, 1, BigRational::zero())
    }

    pub fn circle(theta: BigRational) -> Self {
        Self::new(0, 0, theta)
    }

    pub fn inverse(&self) -> Self {
        // (i,j,θ)(−i,−j,θ') = (0,0, θ + θ' + ij/3)
        let i = self.i as i64;
        let j = self.j as i64;
        Self::new(-i, -j, -&self.theta - rat(i * j, 3))
    }

    /// Word `a^i b^j · circle(θ)`.
    pub fn word(&self) -> Word {
        let mut w = Word::gen_pow(0, self.i as i64).then(&Word::gen_pow(1, self.j as i64));
        if !self.theta.is_zero() {
            w.0.push(Letter::Circle(self.theta.clone()));
        }
        w
    }

    /// Denominator of the circle coordinate; the circle part is a root of
    /// unity of this order.
    pub fn circle_order(&self) -> u32 {
        self.theta
            .denom()
            .to_u32()
            .expect("circle denominator fits in u32")
    }
}

impl fmt::Display for GammaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{}·b^{}·e(2πi·{})", self.i, self.j, self.theta)
    }
}

pub fn gamma_mul(x: &GammaWord, y: &GammaWord) -> GammaWord {
    let twist = rat(y.i as i64 * x.j as i64, 3);
    GammaWord::new(
        x.i as i64 + y.i as i64,
        x.j as i64 + y.j as i64,
        &(&x.theta + &y.theta) - &twist,
    )
}

/// Embeds `P(k)` into `Γ` by `c ↦ e^{2πi/3^{k-2}}`.
pub fn pk_embed(k: u32, x: &PElem) -> Result<GammaWord> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "P(k) requires k >= 3, got {k}"
        )));
    }
    let m = BigInt::from(3u32).pow(k - 2);
    Ok(GammaWord::new(
        x.i as i64,
        x.j as i64,
        BigRational::new(BigInt::from(x.t), m),
    ))
}

/// `Γ` as a (non-enumerable) group.
#[derive(Debug, Clone, Copy, Default)]
pub struct GammaGroup;

impl GammaGroup {
    /// Defining relations with the circle instantiated at the given sample points.
    pub fn relations(circle_samples: &[BigRational]) -> Vec<Relation> {
        let (a, b) = (Word::gen(0), Word::gen(1));
        let mut rels = vec![
            Relation::trivial("a^3 = 1", a.pow(3)),
            Relation::trivial("b^3 = 1", b.pow(3)),
            Relation::new(
                "[a,b] = ω",
                Word::commutator(&a, &b),
                Word::circle(rat(1, 3)),
            ),
        ];
        for t in circle_samples {
            let z = Word::circle(t.clone());
            rels.push(Relation::trivial(
                format!("[a,z] = 1 (z = e(2πi·{t}))"),
                Word::commutator(&a, &z),
            ));
            rels.push(Relation::trivial(
                format!("[b,z] = 1 (z = e(2πi·{t}))"),
                Word::commutator(&b, &z),
            ));
        }
        rels
    }

    pub fn default_circle_samples() -> Vec<BigRational> {
        vec![rat(1, 3), rat(1, 9), rat(2, 7), rat(5, 12)]
    }

    pub fn generator_names() -> Vec<&'static str> {
        vec!["a", "b"]
    }
}

impl GroupOps for GammaGroup {
    type Elem = GammaWord;

    fn identity(&self) -> GammaWord {
        GammaWord::identity()
    }

    fn mul(&self, x: &GammaWord, y: &GammaWord) -> GammaWord {
        gamma_mul(x, y)
    }

    fn inv(&self, x: &GammaWord) -> GammaWord {
        x.inverse()
    }

    fn same(&self, x: &GammaWord, y: &GammaWord) -> bool {
        x == y
    }

    fn circle(&self, theta: &BigRational) -> Option<GammaWord> {
        Some(GammaWord::circle(theta.clone()))
    }
}

/// True iff `θ` is a multiple of `1/n`.
pub fn theta_in(theta: &BigRational, n: u32) -> bool {
    (theta * BigRational::from_integer(BigInt::from(n))).is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{verify_relations, FiniteGroup, PGroup};

    #[test]
    fn commutator_is_omega() {
        let g = GammaGroup;
        let (a, b) = (GammaWord::a(), GammaWord::b());
        let comm = g.mul(&g.mul(&a.inverse(), &b.inverse()), &g.mul(&a, &b));
        assert_eq!(comm, GammaWord::circle(rat(1, 3)));
        // ab and ba differ by the central element θ = 1/3
        assert_ne!(gamma_mul(&a, &b), gamma_mul(&b, &a));
    }

    #[test]
    fn cube_of_a_is_identity() {
        let g = GammaGroup;
        assert_eq!(g.pow(&GammaWord::a(), 3), GammaWord::identity());
        assert_eq!(g.pow(&GammaWord::b(), 3), GammaWord::identity());
    }

    #[test]
    fn relations_hold() {
        let rels = GammaGroup::relations(&GammaGroup::default_circle_samples());
        let chk = verify_relations(&GammaGroup, &[GammaWord::a(), GammaWord::b()], &rels).unwrap();
        assert!(chk.passed(), "{:?}", chk.failing);
    }

    #[test]
    fn inverses_over_p3() {
        let p3 = PGroup::new(3).unwrap();
        for x in p3.elements() {
            let w = pk_embed(3, &x).unwrap();
            assert_eq!(gamma_mul(&w, &w.inverse()), GammaWord::identity());
        }
    }

    #[test]
    fn pk_embedding_of_c() {
        let p3 = PGroup::new(3).unwrap();
        assert_eq!(pk_embed(3, &p3.c()).unwrap(), GammaWord::circle(rat(1, 3)));
        let p4 = PGroup::new(4).unwrap();
        let c3 = p4.pow(&p4.c(), 3);
        assert_eq!(pk_embed(4, &c3).unwrap(), GammaWord::circle(rat(1, 3)));
        assert_eq!(pk_embed(4, &p4.identity()).unwrap(), GammaWord::identity());
        assert!(pk_embed(2, &p3.c()).is_err());
    }
}
