// SPDX-License-Identifier: Apache-2.0

//! Finite matrix groups by breadth-first closure, and groups given by a
//! Cayley table.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{FiniteGroup, GroupOps, Word};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::matrix::UMatrix;

/// Refuses to enumerate more elements than this unless told otherwise.
pub const DEFAULT_CLOSURE_BOUND: usize = 20_000;

/// How the central circle of `Γ` acts in a matrix representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CircleRule {
    /// `z ↦ z·I`
    Scalar,
    /// `z ↦ I`
    Trivial,
    /// The source group has no circle.
    Absent,
}

impl CircleRule {
    pub fn image(&self, dim: usize, theta: &BigRational) -> Option<UMatrix> {
        match self {
            CircleRule::Absent => None,
            CircleRule::Trivial => Some(UMatrix::identity(dim)),
            CircleRule::Scalar => {
                let n = theta.denom().to_u32()?;
                let k = theta.numer().to_i64()?;
                Some(UMatrix::scalar(dim, CycloNumber::root_of_unity(n, k)))
            }
        }
    }
}

/// Matrix multiplication as a group structure on `UMatrix`.
#[derive(Debug, Clone, Copy)]
pub struct MatrixOps {
    pub dim: usize,
    pub circle: CircleRule,
}

impl MatrixOps {
    pub fn new(dim: usize, circle: CircleRule) -> Self {
        MatrixOps { dim, circle }
    }
}

impl GroupOps for MatrixOps {
    type Elem = UMatrix;

    fn identity(&self) -> UMatrix {
        UMatrix::identity(self.dim)
    }

    fn mul(&self, x: &UMatrix, y: &UMatrix) -> UMatrix {
        x * y
    }

    fn inv(&self, x: &UMatrix) -> UMatrix {
        // every matrix met here is unitary
        x.adjoint()
    }

    fn same(&self, x: &UMatrix, y: &UMatrix) -> bool {
        x == y
    }

    fn circle(&self, theta: &BigRational) -> Option<UMatrix> {
        self.circle.image(self.dim, theta)
    }
}

/// A finite group of exact matrices with a shortest generator word per element.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    names: Vec<String>,
    generators: Vec<UMatrix>,
    elements: Vec<UMatrix>,
    words: Vec<Word>,
    index: HashMap<Vec<BigRational>, usize>,
    key_order: u32,
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// Generators must have finite order, so closure under products is closure
/// under inverses. Aborts once more than `bound` elements are found.
pub fn group_closure(generators: &[(&str, UMatrix)], bound: usize) -> Result<MatrixGroup> {
    let dim = generators.first().map_or(1, |(_, g)| g.dim());
    if generators.iter().any(|(_, g)| g.dim() != dim) {
        return Err(Error::Precondition(
            "generators have different dimensions".into(),
        ));
    }
    let key_order = generators
        .iter()
        .fold(1u32, |acc, (_, g)| acc.lcm(&g.order()));
    let mut grp = MatrixGroup {
        names: generators.iter().map(|(n, _)| n.to_string()).collect(),
        generators: generators.iter().map(|(_, g)| g.clone()).collect(),
        elements: Vec::new(),
        words: Vec::new(),
        index: HashMap::new(),
        key_order,
    };
    let id = UMatrix::identity(dim);
    grp.index.insert(id.key_at(key_order), 0);
    grp.elements.push(id);
    grp.words.push(Word::identity());

    let mut head = 0;
    while head < grp.elements.len() {
        for g in 0..grp.generators.len() {
            let prod = &grp.elements[head] * &grp.generators[g];
            let key = prod.key_at(key_order);
            if grp.index.contains_key(&key) {
                continue;
            }
            if grp.elements.len() >= bound {
                return Err(Error::BoundExceeded(bound));
            }
            let word = grp.words[head].clone().then(&Word::gen(g));
            grp.index.insert(key, grp.elements.len());
            grp.elements.push(prod);
            grp.words.push(word);
        }
        head += 1;
    }
    Ok(grp)
}

impl MatrixGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn matrices(&self) -> &[UMatrix] {
        &self.elements
    }

    pub fn matrix(&self, i: usize) -> &UMatrix {
        &self.elements[i]
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.position(g).expect("generator in closure"))
            .collect()
    }

    /// Index of a matrix in the group, if present.
    pub fn position(&self, m: &UMatrix) -> Option<usize> {
        if m.order() > 0 && !self.key_order.is_multiple_of(m.order()) {
            return None;
        }
        self.index.get(&m.key_at(self.key_order)).copied()
    }

    /// The multiplication table, for fast repeated queries.
    pub fn cayley(&self) -> TableGroup {
        let n = self.len();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        self.position(&(&self.elements[i] * &self.elements[j]))
                            .expect("closed under products")
                    })
                    .collect()
            })
            .collect();
        TableGroup::from_table(table).expect("closure yields a group table")
    }
}

impl GroupOps for MatrixGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, x: &usize, y: &usize) -> usize {
        self.position(&(&self.elements[*x] * &self.elements[*y]))
            .expect("closed under products")
    }

    fn inv(&self, x: &usize) -> usize {
        self.position(&self.elements[*x].adjoint())
            .expect("closed under inverses")
    }

    fn same(&self, x: &usize, y: &usize) -> bool {
        x == y
    }
}

impl FiniteGroup for MatrixGroup {
    fn elements(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }
}

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Debug, Clone)]
pub struct TableGroup {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl TableGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition(
                "table must be square and non-empty".into(),
            ));
        }
        if (0..n).any(|i| table[0][i] != i || table[i][0] != i) {
            return Err(Error::Precondition("element 0 is not the identity".into()));
        }
        let mut inverses = vec![0; n];
        for (i, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&j| table[i][j] == 0)
                .ok_or_else(|| Error::Precondition(format!("element {i} has no inverse")))?;
        }
        Ok(TableGroup { table, inverses })
    }

    /// The table of any finite group, indexed by its element enumeration.
    pub fn of<G: FiniteGroup>(g: &G) -> Result<Self>
    where
        G::Elem: Eq + std::hash::Hash + Ord,
    {
        let mut elems = g.elements();
        let id = g.identity();
        let pos = elems
            .iter()
            .position(|x| g.same(x, &id))
            .ok_or_else(|| Error::Inconsistency("identity missing from element list".into()))?;
        elems.swap(0, pos);
        let index: HashMap<G::Elem, usize> = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let table = elems
            .iter()
            .map(|x| {
                elems
                    .iter()
                    .map(|y| {
                        index.get(&g.mul(x, y)).copied().ok_or_else(|| {
                            Error::Inconsistency(format!(
                                "product {x:?}·{y:?} left the element list"
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(table)
    }
}

impl GroupOps for TableGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, x: &usize, y: &usize) -> usize {
        self.table[*x][*y]
    }

    fn inv(&self, x: &usize) -> usize {
        self.inverses[*x]
    }

    fn same(&self, x: &usize, y: &usize) -> bool {
        x == y
    }
}

impl FiniteGroup for TableGroup {
    fn elements(&self) -> Vec<usize> {
        (0..self.table.len()).collect()
    }

    fn order(&self) -> usize {
        self.table.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_closure() {
        let g = group_closure(&[("e", UMatrix::identity(3))], 10).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn heisenberg_closure_has_order_27() {
        let a = UMatrix::cyclic_shift3();
        let b = UMatrix::diag_roots(3, &[0, 1, 2]);
        let z = UMatrix::scalar(3, CycloNumber::omega());
        let g = group_closure(&[("a", a), ("b", b), ("z", z)], 100).unwrap();
        assert_eq!(g.len(), 27);
        for i in 0..g.len() {
            let w = g.word(i);
            let m = crate::groups::evaluate_word(
                &MatrixOps::new(3, CircleRule::Absent),
                &[
                    UMatrix::cyclic_shift3(),
                    UMatrix::diag_roots(3, &[0, 1, 2]),
                    UMatrix::scalar(3, CycloNumber::omega()),
                ],
                w,
            )
            .unwrap();
            assert_eq!(&m, g.matrix(i));
        }
    }

    #[test]
    fn bound_is_enforced() {
        let b = UMatrix::diag_roots(9, &[0, 1, 2]);
        match group_closure(&[("b", b)], 4) {
            Err(Error::BoundExceeded(4)) => {}
            other => panic!("expected bound error, got {other:?}"),
        }
    }

    #[test]
    fn cayley_table_is_consistent() {
        let a = UMatrix::cyclic_shift3();
        let b = UMatrix::diag_roots(3, &[0, 1, 2]);
        let g = group_closure(&[("a", a), ("b", b)], 100).unwrap();
        let t = g.cayley();
        assert_eq!(t.order(), 27);
        for x in 0..27 {
            assert_eq!(t.mul(&x, &t.inv(&x)), 0);
            for y in 0..27 {
                assert_eq!(t.mul(&x, &y), g.mul(&x, &y));
            }
        }
    }

    #[test]
    fn circle_rules() {
        let third = crate::cyclo::rat(1, 3);
        assert_eq!(
            CircleRule::Scalar.image(3, &third).unwrap(),
            UMatrix::scalar(3, CycloNumber::omega())
        );
        assert!(CircleRule::Trivial.image(3, &third).unwrap().is_identity());
        assert!(CircleRule::Absent.image(3, &third).is_none());
    }
}
