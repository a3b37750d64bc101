//! Brute-force, formula-free construction of the C2-algebra of sl_n: build
//! the Lie algebra from structure constants, generate the relation module
//! V_{k+1} inside S^{k+1}(sl_n), and compute graded and weight-graded
//! dimensions of the quotient S(sl_n)/⟨V_{k+1}⟩ by exact rank computation.
//!
//! Everything is exact: rational coefficients in the relation module,
//! integer fraction-free elimination for ranks. Rank computations are
//! decomposed into torus-weight blocks; that is what keeps ranks 3 and 4
//! feasible and it yields weight-space dimensions (characters) for free.

mod basis;
mod poly;
mod rank;
mod relations;

pub use basis::{build_basis, LieBasis, SparseVec};
pub use poly::{adjoint_on_sym, monomial_weight, monomials_of_degree, Monomial, SymPoly};
pub use relations::{generate_relations, RelationSpace};

use crate::tensor::Character;
use num::{BigInt, BigRational, BigUint, Integer, One, Zero};
use rank::{exact_rank, SparseRow};
use std::collections::BTreeMap;
use thiserror::Error;

/// Default cap on rows × columns of a single weight-block elimination.
pub const DEFAULT_BLOCK_BUDGET: usize = 5_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("relation closure has dimension {found}, expected {expected}")]
    ClosureDimensionMismatch { expected: BigUint, found: usize },
    #[error(
        "weight block {weight} needs a {rows}x{cols} elimination, over the budget of {budget} matrix entries"
    )]
    BudgetExceeded { weight: String, rows: usize, cols: usize, budget: usize },
    #[error("the degree has {monomials} monomials, over the budget of {budget} matrix entries")]
    DegreeTooLarge { monomials: BigUint, budget: usize },
}

/// The assembled oracle for one (n, k): basis plus relation module, ready to
/// analyze any degree.
pub struct Oracle {
    basis: LieBasis,
    relations: RelationSpace,
    level: u32,
    block_budget: usize,
}

/// Everything the oracle knows about one degree of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeAnalysis {
    /// dim S^m(sl_n) − rank of the degree-m ideal component.
    pub dim: BigUint,
    pub ideal_rank: usize,
    /// Weight-space dimensions of the degree-m quotient piece.
    pub character: Character,
}

impl Oracle {
    pub fn new(n: usize, k: u32) -> Result<Self, OracleError> {
        Self::with_budget(n, k, DEFAULT_BLOCK_BUDGET)
    }

    pub fn with_budget(n: usize, k: u32, block_budget: usize) -> Result<Self, OracleError> {
        let basis = build_basis(n);
        let relations = generate_relations(&basis, k)?;
        Ok(Oracle { basis, relations, level: k, block_budget })
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn basis(&self) -> &LieBasis {
        &self.basis
    }

    pub fn relations(&self) -> &RelationSpace {
        &self.relations
    }

    /// Graded dimension of degree m of the quotient.
    pub fn graded_dim(&self, m: usize) -> Result<BigUint, OracleError> {
        Ok(self.degree_analysis(m)?.dim)
    }

    /// Weight-space dimensions of degree m of the quotient.
    pub fn character(&self, m: usize) -> Result<Character, OracleError> {
        Ok(self.degree_analysis(m)?.character)
    }

    /// Compute the degree-m quotient piece blockwise per torus weight.
    pub fn degree_analysis(&self, m: usize) -> Result<DegreeAnalysis, OracleError> {
        analyze_degree(&self.basis, &self.relations, m, self.block_budget)
    }
}

/// Rank of the degree-m component S^{m-k-1}(sl_n)·V_{k+1} of the ideal,
/// computed blockwise per weight. Zero when m is below the generator degree.
pub fn ideal_graded_rank(
    basis: &LieBasis,
    relations: &RelationSpace,
    m: usize,
    block_budget: usize,
) -> Result<usize, OracleError> {
    Ok(analyze_degree(basis, relations, m, block_budget)?.ideal_rank)
}

fn analyze_degree(
    basis: &LieBasis,
    relations: &RelationSpace,
    m: usize,
    block_budget: usize,
) -> Result<DegreeAnalysis, OracleError> {
    let n = basis.rank();
    let dim = basis.dim();
    let total = binomial(dim + m - 1, m);
    if total > BigUint::from(block_budget) {
        return Err(OracleError::DegreeTooLarge { monomials: total, budget: block_budget });
    }

    // columns: monomials of degree m, grouped by weight
    let mut columns: BTreeMap<Vec<i64>, BTreeMap<Monomial, u32>> = BTreeMap::new();
    for mono in monomials_of_degree(dim, m) {
        let w = monomial_weight(basis, &mono);
        let block = columns.entry(w).or_default();
        let idx = block.len() as u32;
        block.insert(mono, idx);
    }

    // rows: monomial multiples of the relation basis, grouped by weight
    let mut rows: BTreeMap<Vec<i64>, Vec<SparseRow>> = BTreeMap::new();
    let gen_degree = relations.degree();
    if m >= gen_degree {
        for u in monomials_of_degree(dim, m - gen_degree) {
            let u_weight = monomial_weight(basis, &u);
            for (i, rel) in relations.elements().iter().enumerate() {
                let w: Vec<i64> = u_weight
                    .iter()
                    .zip(relations.weight(i))
                    .map(|(a, b)| a + b)
                    .collect();
                let product = rel.mul_monomial(&u);
                let block = columns.get(&w).expect("product weight has monomials");
                rows.entry(w).or_default().push(integer_row(&product, block));
            }
        }
    }

    let mut character = Character::new(n);
    let mut total_rank = 0usize;
    let mut quotient_dim = BigUint::zero();
    for (w, block) in &columns {
        let block_rows = rows.remove(w).unwrap_or_default();
        let cols = block.len();
        if block_rows.len().saturating_mul(cols) > block_budget {
            return Err(OracleError::BudgetExceeded {
                weight: format!("{w:?}"),
                rows: block_rows.len(),
                cols,
                budget: block_budget,
            });
        }
        let r = exact_rank(block_rows);
        total_rank += r;
        let coeff = cols - r;
        if coeff > 0 {
            let mut key: Vec<i64> = w[..n - 1].to_vec();
            let last = w[n - 1];
            for x in key.iter_mut() {
                *x -= last;
            }
            character.add_term(key, coeff as i64);
            quotient_dim += BigUint::from(coeff);
        }
    }
    debug_assert_eq!(quotient_dim.clone() + BigUint::from(total_rank), total);

    Ok(DegreeAnalysis { dim: quotient_dim, ideal_rank: total_rank, character })
}

/// One-shot graded dimension of the degree-m piece of S(sl_n)/⟨V_{k+1}⟩.
pub fn oracle_graded_dim(n: usize, k: u32, m: usize) -> Result<BigUint, OracleError> {
    Oracle::new(n, k)?.graded_dim(m)
}

/// One-shot weight-space character of the degree-m piece.
pub fn oracle_character(n: usize, k: u32, m: usize) -> Result<Character, OracleError> {
    Oracle::new(n, k)?.character(m)
}

/// Convert a rational row to an integer row over the block's columns by
/// clearing the common denominator.
fn integer_row(p: &SymPoly, columns: &BTreeMap<Monomial, u32>) -> SparseRow {
    let mut lcm = BigInt::one();
    for (_, c) in p.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let mut row: SparseRow = p
        .terms()
        .map(|(mono, c)| {
            let col = *columns.get(mono).expect("monomial in weight block");
            let scaled: BigRational = c * BigRational::from_integer(lcm.clone());
            debug_assert!(scaled.is_integer());
            (col, scaled.to_integer())
        })
        .collect();
    row.sort_by_key(|(c, _)| *c);
    row
}

/// Exact binomial(a, b).
fn binomial(a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    for i in 0..b {
        result = result * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    result
}
