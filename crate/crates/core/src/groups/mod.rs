// SPDX-License-Identifier: Apache-2.0

//! Group families used by the construction: the circle extension `Γ`, the
//! finite 3-groups `P(k)` and `B(k, ±1)`, the groups `E(p)`, and finite
//! matrix groups obtained by closure.
//!
//! Every finite family has a bespoke normal form with a closed-form
//! multiplication law. Laws are cross-checked against their presentations
//! (relations evaluate to the identity, element counts match) and against
//! matrix closure where a faithful representation exists.

mod analysis;
mod closure;
mod families;
mod gamma;

use std::fmt;
use std::hash::Hash;

use num_rational::BigRational;
use serde::Serialize;

pub use analysis::{
    alternating_group_a4, check_associativity, elementary_abelian_rank, generated_subgroup_order,
    iso_check, iso_search,
};
pub use closure::{
    group_closure, CircleRule, MatrixGroup, MatrixOps, TableGroup, DEFAULT_CLOSURE_BOUND,
};
pub use families::{BElem, BGroup, CyclicGroup, EElem, EGroup, PElem, PGroup};
pub use gamma::{gamma_mul, pk_embed, theta_in, GammaGroup, GammaWord};

use crate::error::{Error, Result};

/// Names a presented group family and its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Gamma,
    P(u32),
    E(u32),
    /// `B(k, ε)` with `ε = ±1`.
    B(u32, i8),
    Cyclic(u32),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gamma => write!(f, "Γ"),
            Family::P(k) => write!(f, "P({k})"),
            Family::E(p) => write!(f, "E({p})"),
            Family::B(k, e) => write!(f, "B({k},{e})"),
            Family::Cyclic(n) => write!(f, "Z/{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Letter {
    /// Generator index raised to an integer power.
    Gen(usize, i64),
    /// A point `e^{2πiθ}` of the central circle of `Γ`.
    Circle(BigRational),
}

/// A word in the generators of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![Letter::Gen(i, 1)])
    }

    pub fn gen_pow(i: usize, e: i64) -> Self {
        if e == 0 {
            Word::identity()
        } else {
            Word(vec![Letter::Gen(i, e)])
        }
    }

    pub fn circle(theta: BigRational) -> Self {
        Word(vec![Letter::Circle(theta)])
    }

    pub fn then(mut self, other: &Word) -> Self {
        self.0.extend(other.0.iter().cloned());
        self
    }

    pub fn inverse(&self) -> Self {
        Word(
            self.0
                .iter()
                .rev()
                .map(|l| match l {
                    Letter::Gen(i, e) => Letter::Gen(*i, -e),
                    Letter::Circle(t) => Letter::Circle(-t),
                })
                .collect(),
        )
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Word::identity(), |acc, _| acc.then(&base))
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(x: &Word, y: &Word) -> Self {
        x.inverse().then(&y.inverse()).then(x).then(y)
    }

    pub fn render(&self, names: &[&str]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|l| match l {
                Letter::Gen(i, 1) => names[*i].to_string(),
                Letter::Gen(i, e) => format!("{}^{}", names[*i], e),
                Letter::Circle(t) => format!("e(2πi·{t})"),
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// A defining relation `lhs = rhs`.
#[derive(Debug, Clone)]
pub struct Relation {
    pub label: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(label: impl Into<String>, lhs: Word, rhs: Word) -> Self {
        Relation {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    pub fn trivial(label: impl Into<String>, lhs: Word) -> Self {
        Self::new(label, lhs, Word::identity())
    }
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub generators: Vec<&'static str>,
    pub relations: Vec<Relation>,
}

/// The operations needed to evaluate words.
pub trait GroupOps {
    type Elem: Clone + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    fn same(&self, x: &Self::Elem, y: &Self::Elem) -> bool;

    /// Image of a circle point, for groups that contain the circle of `Γ`.
    fn circle(&self, _theta: &BigRational) -> Option<Self::Elem> {
        None
    }

    fn pow(&self, x: &Self::Elem, e: i64) -> Self::Elem {
        let base = if e < 0 { self.inv(x) } else { x.clone() };
        let mut acc = self.identity();
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn is_identity(&self, x: &Self::Elem) -> bool {
        self.same(x, &self.identity())
    }

    fn commutes(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.same(&self.mul(x, y), &self.mul(y, x))
    }

    /// Order of `x`, searching up to `limit`.
    fn element_order(&self, x: &Self::Elem, limit: usize) -> Option<usize> {
        let mut acc = x.clone();
        for n in 1..=limit {
            if self.is_identity(&acc) {
                return Some(n);
            }
            acc = self.mul(&acc, x);
        }
        None
    }
}

/// A group whose elements can be listed.
pub trait FiniteGroup: GroupOps
where
    Self::Elem: Eq + Hash + Ord,
{
    fn elements(&self) -> Vec<Self::Elem>;

    fn order(&self) -> usize {
        self.elements().len()
    }
}

/// A finite group given by a presentation with a normal-form realization.
pub trait Presented: FiniteGroup
where
    Self::Elem: Eq + Hash + Ord,
{
    fn family(&self) -> Family;
    fn presentation(&self) -> Presentation;
    /// Normal-form elements for the presentation's generators, in order.
    fn generators(&self) -> Vec<Self::Elem>;
    /// The normal-form word spelling `x` in the generators.
    fn word_of(&self, x: &Self::Elem) -> Word;
    /// Order predicted by the presentation.
    fn presented_order(&self) -> usize;
}

/// Evaluates `word` with generator `i` sent to `images[i]`.
pub fn evaluate_word<G: GroupOps>(g: &G, images: &[G::Elem], word: &Word) -> Result<G::Elem> {
    let mut acc = g.identity();
    for l in &word.0 {
        let x = match l {
            Letter::Gen(i, e) => {
                let img = images.get(*i).ok_or_else(|| {
                    Error::Mismatch(format!("word uses generator {i} with no image"))
                })?;
                g.pow(img, *e)
            }
            Letter::Circle(t) => g.circle(t).ok_or_else(|| {
                Error::Mismatch("circle letter in a group without a circle".into())
            })?,
        };
        acc = g.mul(&acc, &x);
    }
    Ok(acc)
}

/// Outcome of evaluating a relation list under a generator assignment.
#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct RelationCheck {
    pub checked: Vec<String>,
    pub failing: Vec<String>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Evaluates every relation; failures are reported, not raised.
pub fn verify_relations<G: GroupOps>(
    g: &G,
    images: &[G::Elem],
    relations: &[Relation],
) -> Result<RelationCheck> {
    let mut out = RelationCheck::default();
    for r in relations {
        let lhs = evaluate_word(g, images, &r.lhs)?;
        let rhs = evaluate_word(g, images, &r.rhs)?;
        out.checked.push(r.label.clone());
        if !g.same(&lhs, &rhs) {
            out.failing.push(r.label.clone());
        }
    }
    Ok(out)
}

pub fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// An element of one of the presented families, tagged with its family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupWord {
    Gamma(GammaWord),
    P(u32, PElem),
    E(u32, EElem),
    B(u32, i8, BElem),
}

impl GroupWord {
    pub fn family(&self) -> Family {
        match self {
            GroupWord::Gamma(_) => Family::Gamma,
            GroupWord::P(k, _) => Family::P(*k),
            GroupWord::E(p, _) => Family::E(*p),
            GroupWord::B(k, e, _) => Family::B(*k, *e),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupWord::Gamma(w) => *w == GammaWord::identity(),
            GroupWord::P(_, x) => (x.i, x.j, x.t) == (0, 0, 0),
            GroupWord::E(_, x) => (x.x, x.y, x.t) == (0, 0, 0),
            GroupWord::B(_, _, x) => (x.s, x.y, x.t) == (0, 0, 0),
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupWord::Gamma(w) => write!(f, "{w}"),
            GroupWord::P(_, x) => write!(f, "{x}"),
            GroupWord::E(_, x) => write!(f, "{x}"),
            GroupWord::B(_, _, x) => write!(f, "{x}"),
        }
    }
}

/// All elements of a finite family, in normal-form order.
pub fn enumerate_family(family: Family) -> Result<Vec<GroupWord>> {
    Ok(match family {
        Family::P(k) => PGroup::new(k)?
            .elements()
            .into_iter()
            .map(|x| GroupWord::P(k, x))
            .collect(),
        Family::E(p) => EGroup::new(p)?
            .elements()
            .into_iter()
            .map(|x| GroupWord::E(p, x))
            .collect(),
        Family::B(k, e) => BGroup::new(k, e)?
            .elements()
            .into_iter()
            .map(|x| GroupWord::B(k, e, x))
            .collect(),
        Family::Gamma | Family::Cyclic(_) => {
            return Err(Error::Precondition(format!(
                "{family} has no normal-form enumeration"
            )))
        }
    })
}
