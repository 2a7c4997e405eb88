// SPDX-License-Identifier: Apache-2.0

//! Subgroup, rank and isomorphism computations on finite groups.

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use rand::Rng;

use super::{group_closure, verify_relations, FiniteGroup, GroupOps, MatrixGroup, Presented};
use crate::error::Result;
use crate::matrix::UMatrix;

/// Exhaustive up to this order; sampled beyond.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 200;
const ASSOC_SAMPLES: usize = 10_000;

/// Order of the subgroup generated by `gens`.
pub fn generated_subgroup_order<G: GroupOps>(g: &G, gens: &[G::Elem]) -> usize
where
    G::Elem: Eq + Hash,
{
    let mut seen: HashSet<G::Elem> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(g.identity());
    queue.push_back(g.identity());
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = g.mul(&x, s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// Largest `r` with `(Z/p)^r ≤ G`.
///
/// Depth-first over commuting order-`p` elements. Any elementary abelian
/// subgroup has a basis with strictly increasing element indices (take the
/// smallest element outside the span at each step), so candidates are only
/// drawn from later indices.
pub fn elementary_abelian_rank<G: FiniteGroup>(g: &G, p: u32) -> usize
where
    G::Elem: Eq + Hash + Ord,
{
    let order_p: Vec<G::Elem> = g
        .elements()
        .into_iter()
        .filter(|x| !g.is_identity(x) && g.is_identity(&g.pow(x, p as i64)))
        .collect();

    fn extend<G: GroupOps>(
        g: &G,
        p: u32,
        cands: &[G::Elem],
        start: usize,
        basis: &mut Vec<G::Elem>,
        span: &HashSet<G::Elem>,
        best: &mut usize,
    ) where
        G::Elem: Eq + Hash,
    {
        *best = (*best).max(basis.len());
        for idx in start..cands.len() {
            let x = &cands[idx];
            if span.contains(x) || !basis.iter().all(|b| g.commutes(b, x)) {
                continue;
            }
            // span · ⟨x⟩
            let mut next = HashSet::with_capacity(span.len() * p as usize);
            let mut xp = g.identity();
            for _ in 0..p {
                for s in span {
                    next.insert(g.mul(s, &xp));
                }
                xp = g.mul(&xp, x);
            }
            basis.push(x.clone());
            extend(g, p, cands, idx + 1, basis, &next, best);
            basis.pop();
        }
    }

    let mut best = 0;
    let span: HashSet<G::Elem> = [g.identity()].into_iter().collect();
    extend(g, p, &order_p, 0, &mut Vec::new(), &span, &mut best);
    best
}

/// True iff sending the presentation generators of `g` to `images` extends
/// to an isomorphism `g → h`: every relation holds in `h` and the images
/// generate a subgroup of order `|g| = |h|`.
pub fn iso_check<G, H>(g: &G, h: &H, images: &[H::Elem]) -> Result<bool>
where
    G: Presented,
    G::Elem: Eq + Hash + Ord,
    H: FiniteGroup,
    H::Elem: Eq + Hash + Ord,
{
    if g.order() != h.order() || g.order() != g.presented_order() {
        return Ok(false);
    }
    let rels = g.presentation().relations;
    if !verify_relations(h, images, &rels)?.passed() {
        return Ok(false);
    }
    Ok(generated_subgroup_order(h, images) == h.order())
}

/// Searches all generator assignments for one passing `iso_check`.
pub fn iso_search<G, H>(g: &G, h: &H) -> Result<Option<Vec<H::Elem>>>
where
    G: Presented,
    G::Elem: Eq + Hash + Ord,
    H: FiniteGroup,
    H::Elem: Eq + Hash + Ord,
{
    if g.order() != h.order() {
        return Ok(None);
    }
    let ngens = g.presentation().generators.len();
    // Each image must have the same order as its generator.
    let limit = h.order();
    let pools: Vec<Vec<H::Elem>> = g
        .generators()
        .iter()
        .map(|x| {
            let ord = g.element_order(x, limit);
            h.elements()
                .into_iter()
                .filter(|y| h.element_order(y, limit) == ord)
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; ngens];
    if pools.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    loop {
        let images: Vec<H::Elem> = choice
            .iter()
            .zip(&pools)
            .map(|(&c, pool)| pool[c].clone())
            .collect();
        if iso_check(g, h, &images)? {
            return Ok(Some(images));
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == ngens {
                return Ok(None);
            }
            choice[pos] += 1;
            if choice[pos] < pools[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Checks `(xy)z = x(yz)`: exhaustively for small groups, on random triples otherwise.
pub fn check_associativity<G: FiniteGroup, R: Rng>(g: &G, rng: &mut R) -> bool
where
    G::Elem: Eq + Hash + Ord,
{
    let els = g.elements();
    let holds = |x: &G::Elem, y: &G::Elem, z: &G::Elem| {
        g.same(&g.mul(&g.mul(x, y), z), &g.mul(x, &g.mul(y, z)))
    };
    if els.len() <= EXHAUSTIVE_ASSOC_LIMIT {
        els.iter()
            .all(|x| els.iter().all(|y| els.iter().all(|z| holds(x, y, z))))
    } else {
        (0..ASSOC_SAMPLES).all(|_| {
            let pick = |r: &mut R| els[r.gen_range(0..els.len())].clone();
            let (x, y, z) = (pick(rng), pick(rng), pick(rng));
            holds(&x, &y, &z)
        })
    }
}

/// `A₄` as the even 4×4 permutation matrices, generated by `(0 1 2)` and `(0 1)(2 3)`.
pub fn alternating_group_a4() -> Result<MatrixGroup> {
    group_closure(
        &[
            ("r", UMatrix::permutation(&[1, 2, 0, 3])),
            ("s", UMatrix::permutation(&[1, 0, 3, 2])),
        ],
        100,
    )
}
