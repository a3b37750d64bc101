//! Generation of the relation module V_{k+1} ⊂ S^{k+1}(sl_n): the linear
//! closure of the single monomial e_θ^{k+1} under the adjoint action of every
//! basis element. The closure is maintained as a reduced spanning set with
//! monic pivots, so linear independence is structural, and its final
//! dimension is checked against the Weyl dimension of the highest weight
//! (k+1)θ.
//!
//! Using all basis elements rather than only lowering operators is redundant
//! but keeps the construction free of any highest-weight theory.

use super::basis::LieBasis;
use super::poly::{adjoint_on_sym, Monomial, SymPoly};
use super::OracleError;
use crate::weights::{sl_dim, SlWeight};
use num::BigUint;
use std::collections::{BTreeMap, VecDeque};

/// A reduced basis of the relation module, each element weight-homogeneous
/// and monic in the graded-lexicographic monomial order.
pub struct RelationSpace {
    degree: usize,
    basis: Vec<SymPoly>,
    weights: Vec<Vec<i64>>,
}

impl RelationSpace {
    /// k+1, the degree of every relation.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn elements(&self) -> &[SymPoly] {
        &self.basis
    }

    /// Weight (epsilon coordinates) of the i-th basis element.
    pub fn weight(&self, i: usize) -> &[i64] {
        &self.weights[i]
    }
}

/// Build V_{k+1} = U(sl_n) ∘ e_θ^{k+1} by breadth-first closure, and check
/// that its dimension equals dim V((k+1)θ).
pub fn generate_relations(basis: &LieBasis, k: u32) -> Result<RelationSpace, OracleError> {
    let degree = k as usize + 1;
    let seed = SymPoly::power_of_generator(basis.dim(), basis.highest_root_index(), degree);

    let mut pivots: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut reduced: Vec<SymPoly> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    let insert = |p: SymPoly,
                      pivots: &mut BTreeMap<Monomial, usize>,
                      reduced: &mut Vec<SymPoly>,
                      queue: &mut VecDeque<usize>| {
        let mut p = p;
        loop {
            let Some((lead, coeff)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) else {
                return;
            };
            match pivots.get(&lead) {
                Some(&idx) => {
                    let pivot = reduced[idx].clone();
                    p.add_scaled(&pivot, &(-coeff));
                }
                None => {
                    // normalize to a monic pivot
                    p.scale(&coeff.recip());
                    pivots.insert(lead, reduced.len());
                    queue.push_back(reduced.len());
                    reduced.push(p);
                    return;
                }
            }
        }
    };

    insert(seed, &mut pivots, &mut reduced, &mut queue);
    while let Some(idx) = queue.pop_front() {
        let current = reduced[idx].clone();
        for x in 0..basis.dim() {
            let image = adjoint_on_sym(basis, x, &current);
            if !image.is_zero() {
                insert(image, &mut pivots, &mut reduced, &mut queue);
            }
        }
    }

    let highest = SlWeight::theta(basis.rank()).scaled(k + 1);
    let expected = sl_dim(&highest);
    if BigUint::from(reduced.len()) != expected {
        return Err(OracleError::ClosureDimensionMismatch {
            expected,
            found: reduced.len(),
        });
    }

    let weights: Vec<Vec<i64>> = reduced
        .iter()
        .map(|p| p.weight(basis).expect("relation elements are nonzero"))
        .collect();
    // weight homogeneity: every monomial of an element shares its weight
    for (p, w) in reduced.iter().zip(&weights) {
        debug_assert!(
            p.terms().all(|(m, _)| &super::poly::monomial_weight(basis, m) == w),
            "relation element is not weight-homogeneous"
        );
    }

    Ok(RelationSpace { degree, basis: reduced, weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::basis::build_basis;

    #[test]
    fn sl2_level0_recovers_the_adjoint_module() {
        let b = build_basis(2);
        let rel = generate_relations(&b, 0).unwrap();
        assert_eq!(rel.dim(), 3);
        assert_eq!(rel.degree(), 1);
    }

    #[test]
    fn sl2_level1_has_dimension_five() {
        let b = build_basis(2);
        let rel = generate_relations(&b, 1).unwrap();
        assert_eq!(rel.dim(), 5);
    }

    #[test]
    fn sl3_level1_has_dimension_27() {
        let b = build_basis(3);
        let rel = generate_relations(&b, 1).unwrap();
        assert_eq!(rel.dim(), 27);
    }

    #[test]
    fn relation_weights_are_homogeneous() {
        let b = build_basis(3);
        let rel = generate_relations(&b, 1).unwrap();
        for i in 0..rel.dim() {
            let w = rel.weight(i);
            for (m, _) in rel.elements()[i].terms() {
                assert_eq!(crate::oracle::poly::monomial_weight(&b, m), w);
            }
        }
    }
}
