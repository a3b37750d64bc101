//! Homogeneous elements of the symmetric algebra S(sl_n) with exact rational
//! coefficients, and the adjoint action extended as a derivation.
//!
//! Monomials are full exponent vectors over the fixed basis order; within a
//! fixed degree the natural lexicographic order on exponent vectors is the
//! graded-lexicographic order, which keeps reduced spanning sets and golden
//! outputs deterministic.

use super::basis::LieBasis;
use num::{BigInt, BigRational, Zero};
use std::collections::BTreeMap;

/// Exponent vector over the basis; always of length `LieBasis::dim()`.
pub type Monomial = Vec<u8>;

/// A homogeneous polynomial in S^degree(sl_n): exponent vectors mapped to
/// nonzero exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly {
    degree: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl SymPoly {
    pub fn zero(degree: usize) -> Self {
        SymPoly { degree, terms: BTreeMap::new() }
    }

    /// The single monomial x_idx^degree.
    pub fn power_of_generator(dim: usize, idx: usize, degree: usize) -> Self {
        let mut expt = vec![0u8; dim];
        expt[idx] = u8::try_from(degree).expect("degree fits in u8");
        let mut terms = BTreeMap::new();
        terms.insert(expt, BigRational::from_integer(1.into()));
        SymPoly { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigRational) {
        debug_assert_eq!(
            mono.iter().map(|&e| e as usize).sum::<usize>(),
            self.degree,
            "term degree mismatch"
        );
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// self += c · other.
    pub fn add_scaled(&mut self, other: &SymPoly, c: &BigRational) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&mut self, c: &BigRational) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for a in self.terms.values_mut() {
            *a *= c;
        }
    }

    /// Leading term in the monomial order (the lexicographically largest
    /// exponent vector).
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Multiply by the monomial with the given exponent vector.
    pub fn mul_monomial(&self, expt: &[u8]) -> SymPoly {
        let extra: usize = expt.iter().map(|&e| e as usize).sum();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let shifted: Monomial = m.iter().zip(expt).map(|(&a, &b)| a + b).collect();
            terms.insert(shifted, c.clone());
        }
        SymPoly { degree: self.degree + extra, terms }
    }

    /// Weight of a weight-homogeneous polynomial (epsilon coordinates,
    /// length n), read off its first monomial.
    pub fn weight(&self, basis: &LieBasis) -> Option<Vec<i64>> {
        self.terms.keys().next().map(|m| monomial_weight(basis, m))
    }
}

/// Weight of a monomial: the exponent-weighted sum of generator weights.
pub fn monomial_weight(basis: &LieBasis, mono: &Monomial) -> Vec<i64> {
    let mut w = vec![0i64; basis.rank()];
    for (i, &e) in mono.iter().enumerate() {
        if e > 0 {
            for (wi, &bw) in w.iter_mut().zip(basis.weight(i)) {
                *wi += e as i64 * bw;
            }
        }
    }
    w
}

/// The adjoint action of the basis element x_idx on p, extended from the
/// bracket as a derivation. Preserves degree and shifts weight by the
/// weight of x_idx.
pub fn adjoint_on_sym(basis: &LieBasis, idx: usize, p: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero(p.degree());
    for (mono, coeff) in p.terms() {
        for (pos, &e) in mono.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let factor = coeff * BigRational::from_integer(BigInt::from(e));
            for (target, c) in basis.bracket(idx, pos) {
                let mut m = mono.clone();
                m[pos] -= 1;
                m[*target] += 1;
                out.add_term(m, &factor * c);
            }
        }
    }
    out
}

/// All exponent vectors of the given total degree over `dim` generators, in
/// ascending lexicographic order.
pub fn monomials_of_degree(dim: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u8; dim];
    fn rec(pos: usize, remaining: usize, current: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if pos + 1 == current.len() {
            current[pos] = remaining as u8;
            out.push(current.clone());
            current[pos] = 0;
            return;
        }
        for e in 0..=remaining {
            current[pos] = e as u8;
            rec(pos + 1, remaining - e, current, out);
        }
        current[pos] = 0;
    }
    if dim == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, degree, &mut current, &mut out);
    out
}
