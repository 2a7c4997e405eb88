// SPDX-License-Identifier: Apache-2.0

//! Normal forms for the finite families.
//!
//! * `P(k) = ⟨a,b,c | a³ = b³ = c^{3^{k-2}} = [a,c] = [b,c] = 1, [a,b] = c^{3^{k-3}}⟩`,
//!   elements `a^i b^j c^t` with `b^j a^i = a^i b^j c^{-ij·3^{k-3}}`.
//! * `E(p) = ⟨u,v,w | u^p = v^p = w³ = [u,v] = 1, [u,w] = u⁻²v⁻¹, [v,w] = uv⁻¹⟩`,
//!   elements `u^x v^y w^t`. Conjugation `n ↦ w⁻¹nw` acts on `(x, y)` by
//!   `(x, y) ↦ (y − x, −x)`, which has order 3.
//! * `B(k,ε) = ⟨a,b,c | a³ = b³ = c^{3^{k-2}} = [b,c] = 1, [a,c] = b, [a,b] = c^{ε3^{k-3}}⟩`,
//!   elements `a^s b^y c^t`. Conjugation `n ↦ a⁻¹na` on `N = ⟨b,c⟩` sends
//!   `b ↦ b c^{-e}`, `c ↦ c b⁻¹` with `e = ε·3^{k-3}`.

use std::fmt;

use super::{Family, FiniteGroup, GroupOps, Presentation, Presented, Relation, Word};
use crate::error::{Error, Result};

fn m(x: i64, n: u32) -> u32 {
    x.rem_euclid(n as i64) as u32
}

// ---------------------------------------------------------------------------
// P(k)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PElem {
    pub i: u32,
    pub j: u32,
    pub t: u32,
}

impl fmt::Display for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} b^{} c^{}", self.i, self.j, self.t)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PGroup {
    k: u32,
    /// Order of `c`, `3^{k-2}`.
    c_order: u32,
    /// `3^{k-3}`, the exponent with `[a,b] = c^{3^{k-3}}`.
    comm_exp: u32,
}

impl PGroup {
    pub fn new(k: u32) -> Result<Self> {
        if !(3..=12).contains(&k) {
            return Err(Error::Precondition(format!(
                "P(k) requires 3 <= k <= 12, got {k}"
            )));
        }
        Ok(PGroup {
            k,
            c_order: 3u32.pow(k - 2),
            comm_exp: 3u32.pow(k - 3),
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn c_order(&self) -> u32 {
        self.c_order
    }

    pub fn elem(&self, i: i64, j: i64, t: i64) -> PElem {
        PElem {
            i: m(i, 3),
            j: m(j, 3),
            t: m(t, self.c_order),
        }
    }

    pub fn a(&self) -> PElem {
        self.elem(1, 0, 0)
    }

    pub fn b(&self) -> PElem {
        self.elem(0, 1, 0)
    }

    pub fn c(&self) -> PElem {
        self.elem(0, 0, 1)
    }

    /// `b^k z` with `k ≠ 0` and `z` central.
    pub fn in_a1(x: &PElem) -> bool {
        x.i == 0 && x.j != 0
    }

    /// `a^k b^{-k} z` with `k ≠ 0` and `z` central.
    pub fn in_a2(x: &PElem) -> bool {
        x.i != 0 && (x.i + x.j).is_multiple_of(3)
    }
}

impl GroupOps for PGroup {
    type Elem = PElem;

    fn identity(&self) -> PElem {
        PElem { i: 0, j: 0, t: 0 }
    }

    fn mul(&self, x: &PElem, y: &PElem) -> PElem {
        let twist = (y.i as i64) * (x.j as i64) * (self.comm_exp as i64);
        self.elem(
            x.i as i64 + y.i as i64,
            x.j as i64 + y.j as i64,
            x.t as i64 + y.t as i64 - twist,
        )
    }

    fn inv(&self, x: &PElem) -> PElem {
        let twist = (x.i as i64) * (x.j as i64) * (self.comm_exp as i64);
        self.elem(-(x.i as i64), -(x.j as i64), -(x.t as i64) - twist)
    }

    fn same(&self, x: &PElem, y: &PElem) -> bool {
        x == y
    }
}

impl FiniteGroup for PGroup {
    fn elements(&self) -> Vec<PElem> {
        let mut out = Vec::with_capacity(9 * self.c_order as usize);
        for i in 0..3 {
            for j in 0..3 {
                for t in 0..self.c_order {
                    out.push(PElem { i, j, t });
                }
            }
        }
        out
    }
}

impl Presented for PGroup {
    fn family(&self) -> Family {
        Family::P(self.k)
    }

    fn presentation(&self) -> Presentation {
        let (a, b, c) = (Word::gen(0), Word::gen(1), Word::gen(2));
        Presentation {
            generators: vec!["a", "b", "c"],
            relations: vec![
                Relation::trivial("a^3 = 1", a.pow(3)),
                Relation::trivial("b^3 = 1", b.pow(3)),
                Relation::trivial(
                    format!("c^{} = 1", self.c_order),
                    c.pow(self.c_order as i64),
                ),
                Relation::trivial("[a,c] = 1", Word::commutator(&a, &c)),
                Relation::trivial("[b,c] = 1", Word::commutator(&b, &c)),
                Relation::new(
                    format!("[a,b] = c^{}", self.comm_exp),
                    Word::commutator(&a, &b),
                    c.pow(self.comm_exp as i64),
                ),
            ],
        }
    }

    fn generators(&self) -> Vec<PElem> {
        vec![self.a(), self.b(), self.c()]
    }

    fn word_of(&self, x: &PElem) -> Word {
        Word::gen_pow(0, x.i as i64)
            .then(&Word::gen_pow(1, x.j as i64))
            .then(&Word::gen_pow(2, x.t as i64))
    }

    fn presented_order(&self) -> usize {
        3usize.pow(self.k)
    }
}

// ---------------------------------------------------------------------------
// E(p)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EElem {
    pub x: u32,
    pub y: u32,
    pub t: u32,
}

impl fmt::Display for EElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u^{} v^{} w^{}", self.x, self.y, self.t)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EGroup {
    p: u32,
}

impl EGroup {
    pub fn new(p: u32) -> Result<Self> {
        if !super::is_prime(p) {
            return Err(Error::Precondition(format!(
                "E(p) requires a prime p, got {p}"
            )));
        }
        Ok(EGroup { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, x: i64, y: i64, t: i64) -> EElem {
        EElem {
            x: m(x, self.p),
            y: m(y, self.p),
            t: m(t, 3),
        }
    }

    pub fn u(&self) -> EElem {
        self.elem(1, 0, 0)
    }

    pub fn v(&self) -> EElem {
        self.elem(0, 1, 0)
    }

    pub fn w(&self) -> EElem {
        self.elem(0, 0, 1)
    }

    /// `w⁻¹ n w` applied `times` times to `n = u^x v^y`.
    fn conj_by_w(&self, x: i64, y: i64, times: u32) -> (i64, i64) {
        (0..times % 3).fold((x, y), |(x, y), _| (y - x, -x))
    }
}

impl GroupOps for EGroup {
    type Elem = EElem;

    fn identity(&self) -> EElem {
        EElem { x: 0, y: 0, t: 0 }
    }

    fn mul(&self, a: &EElem, b: &EElem) -> EElem {
        // n1 w^{t1} n2 w^{t2} = n1 (w^{t1} n2 w^{-t1}) w^{t1+t2}
        let (x2, y2) = self.conj_by_w(b.x as i64, b.y as i64, (3 - a.t) % 3);
        self.elem(a.x as i64 + x2, a.y as i64 + y2, a.t as i64 + b.t as i64)
    }

    fn inv(&self, a: &EElem) -> EElem {
        // (n w^t)^{-1} = (w^{-t} n^{-1} w^t) w^{-t}
        let (x, y) = self.conj_by_w(-(a.x as i64), -(a.y as i64), a.t);
        self.elem(x, y, -(a.t as i64))
    }

    fn same(&self, x: &EElem, y: &EElem) -> bool {
        x == y
    }
}

impl FiniteGroup for EGroup {
    fn elements(&self) -> Vec<EElem> {
        let mut out = Vec::with_capacity(3 * (self.p * self.p) as usize);
        for x in 0..self.p {
            for y in 0..self.p {
                for t in 0..3 {
                    out.push(EElem { x, y, t });
                }
            }
        }
        out
    }
}

impl Presented for EGroup {
    fn family(&self) -> Family {
        Family::E(self.p)
    }

    fn presentation(&self) -> Presentation {
        let (u, v, w) = (Word::gen(0), Word::gen(1), Word::gen(2));
        let p = self.p as i64;
        Presentation {
            generators: vec!["u", "v", "w"],
            relations: vec![
                Relation::trivial(format!("u^{p} = 1"), u.pow(p)),
                Relation::trivial(format!("v^{p} = 1"), v.pow(p)),
                Relation::trivial("w^3 = 1", w.pow(3)),
                Relation::trivial("[u,v] = 1", Word::commutator(&u, &v)),
                Relation::new(
                    "[u,w] = u^-2 v^-1",
                    Word::commutator(&u, &w),
                    u.pow(-2).then(&v.pow(-1)),
                ),
                Relation::new(
                    "[v,w] = u v^-1",
                    Word::commutator(&v, &w),
                    u.then(&v.pow(-1)),
                ),
            ],
        }
    }

    fn generators(&self) -> Vec<EElem> {
        vec![self.u(), self.v(), self.w()]
    }

    fn word_of(&self, a: &EElem) -> Word {
        Word::gen_pow(0, a.x as i64)
            .then(&Word::gen_pow(1, a.y as i64))
            .then(&Word::gen_pow(2, a.t as i64))
    }

    fn presented_order(&self) -> usize {
        3 * (self.p as usize).pow(2)
    }
}

// ---------------------------------------------------------------------------
// B(k, ε)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BElem {
    pub s: u32,
    pub y: u32,
    pub t: u32,
}

impl fmt::Display for BElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} b^{} c^{}", self.s, self.y, self.t)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BGroup {
    k: u32,
    eps: i8,
    c_order: u32,
    /// `e = ε·3^{k-3}`
    e: i64,
}

impl BGroup {
    pub fn new(k: u32, eps: i8) -> Result<Self> {
        if !(4..=12).contains(&k) {
            return Err(Error::Precondition(format!(
                "B(k,ε) requires 4 <= k <= 12, got {k}"
            )));
        }
        if eps != 1 && eps != -1 {
            return Err(Error::Precondition(format!(
                "B(k,ε) requires ε = ±1, got {eps}"
            )));
        }
        Ok(BGroup {
            k,
            eps,
            c_order: 3u32.pow(k - 2),
            e: eps as i64 * 3i64.pow(k - 3),
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn eps(&self) -> i8 {
        self.eps
    }

    pub fn elem(&self, s: i64, y: i64, t: i64) -> BElem {
        BElem {
            s: m(s, 3),
            y: m(y, 3),
            t: m(t, self.c_order),
        }
    }

    pub fn a(&self) -> BElem {
        self.elem(1, 0, 0)
    }

    pub fn b(&self) -> BElem {
        self.elem(0, 1, 0)
    }

    pub fn c(&self) -> BElem {
        self.elem(0, 0, 1)
    }

    /// `a⁻¹ n a` applied `times` times to `n = b^y c^t`.
    fn conj_by_a(&self, y: i64, t: i64, times: u32) -> (i64, i64) {
        (0..times % 3).fold((y, t), |(y, t), _| {
            (
                (y - t).rem_euclid(3),
                (t - self.e * y).rem_euclid(self.c_order as i64),
            )
        })
    }
}

impl GroupOps for BGroup {
    type Elem = BElem;

    fn identity(&self) -> BElem {
        BElem { s: 0, y: 0, t: 0 }
    }

    fn mul(&self, x: &BElem, z: &BElem) -> BElem {
        // a^{s1} n1 a^{s2} n2 = a^{s1+s2} (a^{-s2} n1 a^{s2}) n2
        let (y1, t1) = self.conj_by_a(x.y as i64, x.t as i64, z.s);
        self.elem(x.s as i64 + z.s as i64, y1 + z.y as i64, t1 + z.t as i64)
    }

    fn inv(&self, x: &BElem) -> BElem {
        // (a^s n)^{-1} = a^{-s} (a^{s} n^{-1} a^{-s})
        let (y, t) = self.conj_by_a(-(x.y as i64), -(x.t as i64), (3 - x.s) % 3);
        self.elem(-(x.s as i64), y, t)
    }

    fn same(&self, x: &BElem, y: &BElem) -> bool {
        x == y
    }
}

impl FiniteGroup for BGroup {
    fn elements(&self) -> Vec<BElem> {
        let mut out = Vec::with_capacity(9 * self.c_order as usize);
        for s in 0..3 {
            for y in 0..3 {
                for t in 0..self.c_order {
                    out.push(BElem { s, y, t });
                }
            }
        }
        out
    }
}

impl Presented for BGroup {
    fn family(&self) -> Family {
        Family::B(self.k, self.eps)
    }

    fn presentation(&self) -> Presentation {
        let (a, b, c) = (Word::gen(0), Word::gen(1), Word::gen(2));
        Presentation {
            generators: vec!["a", "b", "c"],
            relations: vec![
                Relation::trivial("a^3 = 1", a.pow(3)),
                Relation::trivial("b^3 = 1", b.pow(3)),
                Relation::trivial(
                    format!("c^{} = 1", self.c_order),
                    c.pow(self.c_order as i64),
                ),
                Relation::trivial("[b,c] = 1", Word::commutator(&b, &c)),
                Relation::new("[a,c] = b", Word::commutator(&a, &c), b.clone()),
                Relation::new(
                    format!("[a,b] = c^{}", self.e),
                    Word::commutator(&a, &b),
                    c.pow(self.e),
                ),
            ],
        }
    }

    fn generators(&self) -> Vec<BElem> {
        vec![self.a(), self.b(), self.c()]
    }

    fn word_of(&self, x: &BElem) -> Word {
        Word::gen_pow(0, x.s as i64)
            .then(&Word::gen_pow(1, x.y as i64))
            .then(&Word::gen_pow(2, x.t as i64))
    }

    fn presented_order(&self) -> usize {
        3usize.pow(self.k)
    }
}

// ---------------------------------------------------------------------------
// Z/n
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub struct CyclicGroup {
    n: u32,
}

impl CyclicGroup {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1);
        CyclicGroup { n }
    }
}

impl GroupOps for CyclicGroup {
    type Elem = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, x: &u32, y: &u32) -> u32 {
        (x + y) % self.n
    }

    fn inv(&self, x: &u32) -> u32 {
        (self.n - x) % self.n
    }

    fn same(&self, x: &u32, y: &u32) -> bool {
        x == y
    }
}

impl FiniteGroup for CyclicGroup {
    fn elements(&self) -> Vec<u32> {
        (0..self.n).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{check_associativity, evaluate_word, verify_relations};
    use rand::SeedableRng;

    fn assert_presented<G: Presented>(g: &G)
    where
        G::Elem: Eq + std::hash::Hash + Ord,
    {
        let chk = verify_relations(g, &g.generators(), &g.presentation().relations).unwrap();
        assert!(chk.passed(), "{}: failing {:?}", g.family(), chk.failing);
        assert_eq!(g.order(), g.presented_order());
        for x in g.elements() {
            assert!(
                g.is_identity(&g.mul(&x, &g.inv(&x))),
                "{}: inverse of {:?}",
                g.family(),
                x
            );
            let w = g.word_of(&x);
            assert_eq!(
                evaluate_word(g, &g.generators(), &w).unwrap(),
                x,
                "{}: normal form",
                g.family()
            );
        }
    }

    #[test]
    fn p_family_presentations() {
        for k in 3..=6 {
            assert_presented(&PGroup::new(k).unwrap());
        }
    }

    #[test]
    fn e_family_presentations() {
        for p in [2, 3, 5, 7, 11, 13] {
            assert_presented(&EGroup::new(p).unwrap());
        }
    }

    #[test]
    fn b_family_presentations() {
        for k in 4..=6 {
            for eps in [1, -1] {
                assert_presented(&BGroup::new(k, eps).unwrap());
            }
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        assert!(check_associativity(&PGroup::new(3).unwrap(), &mut rng));
        assert!(check_associativity(&PGroup::new(4).unwrap(), &mut rng));
        assert!(check_associativity(&EGroup::new(5).unwrap(), &mut rng));
        assert!(check_associativity(&BGroup::new(4, -1).unwrap(), &mut rng));
    }

    #[test]
    fn invalid_parameters() {
        assert!(PGroup::new(2).is_err());
        assert!(EGroup::new(9).is_err());
        assert!(BGroup::new(3, 1).is_err());
        assert!(BGroup::new(4, 0).is_err());
    }

    #[test]
    fn a1_a2_membership() {
        let g = PGroup::new(3).unwrap();
        let a1: Vec<_> = g.elements().into_iter().filter(PGroup::in_a1).collect();
        let a2: Vec<_> = g.elements().into_iter().filter(PGroup::in_a2).collect();
        assert_eq!((a1.len(), a2.len()), (6, 6));
        let ab2 = g.mul(&g.a(), &g.pow(&g.b(), 2));
        assert!(PGroup::in_a2(&ab2));
    }
}
