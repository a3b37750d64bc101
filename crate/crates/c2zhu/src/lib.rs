//! Exact computation of graded dimensions and sl_n-module decompositions of
//! the C2-algebra S(sl_n)/⟨V_{k+1}⟩ and of Zhu-algebra dimensions, together
//! with a brute-force oracle that rebuilds the same quotient degree by
//! degree from structure constants and exact linear algebra.
//!
//! The crate is organized in four layers:
//!
//! - [`weights`]: partitions, dominant weights for gl_n and sl_n, the Weyl
//!   dimension formula, Gelfand-Tseitlin branching, interlacing enumeration.
//! - [`tensor`]: Pieri products, the Littlewood-Richardson rule, tensor
//!   products of sl_n irreducibles, characters and highest-weight peeling.
//! - [`formula`]: the closed formulas — Zhu dimensions, box-truncated
//!   Cauchy sums, graded C2 dimensions and decompositions, counting
//!   identities with their parameter bijection, rectangle branching, and the
//!   co-minuscule node table.
//! - [`oracle`]: the independent verification path — sl_n from matrix-unit
//!   brackets, the relation module generated from e_θ^{k+1} under the
//!   adjoint action, and blockwise fraction-free rank computation of the
//!   graded ideal.
//!
//! All arithmetic is exact: arbitrary-precision integers for dimensions and
//! exact rationals in the oracle. No floating point appears anywhere.

pub mod formula;
pub mod oracle;
pub mod tensor;
pub mod weights;

pub use formula::{
    b_identity_sides, bijection_check, c2_graded_decomposition, c2_graded_dim, c2_table,
    c_dim, c_graded_dim, c_graded_summands, cominuscule_nodes, rect_branch, zhu_decomposition_sl,
    zhu_dim, C2Table, CartanType, CSummand, FormulaError, GradedDimTable,
};
pub use oracle::{oracle_character, oracle_graded_dim, Oracle, OracleError};
pub use tensor::{
    char_decompose, char_of, lr_coefficients, pieri_row, tensor_sl, Character, IrrDecomposition,
    TensorError,
};
pub use weights::{
    dual_sl, enumerate_pk, gt_branch, interlace_up, restrict_to_sl, sl_dim, weyl_dim, GlWeight,
    Partition, SlWeight, WeightError,
};
