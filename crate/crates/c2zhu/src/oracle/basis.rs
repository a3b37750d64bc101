//! The sl_n basis of matrix units and Cartan differences, with its bracket
//! table. Brackets are computed from gl_n matrix-unit commutators and
//! re-expressed over the sl_n basis; antisymmetry, the Jacobi identity and
//! weight additivity are asserted once at construction time.

use num::{BigInt, BigRational, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse vector over the ordered basis: (index, coefficient) pairs sorted
/// by index, no zero coefficients.
pub type SparseVec = Vec<(usize, BigRational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum ElementKind {
    /// E_{a,b} with a ≠ b (1-based).
    MatrixUnit(usize, usize),
    /// H_i = E_{i,i} − E_{i+1,i+1} (1-based).
    Cartan(usize),
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    kind: ElementKind,
    /// Weight in epsilon coordinates: a length-n integer vector summing to 0.
    weight: Vec<i64>,
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ElementKind::MatrixUnit(a, b) => write!(f, "E({a},{b})"),
            ElementKind::Cartan(i) => write!(f, "H({i})"),
        }
    }
}

/// The ordered basis of sl_n together with its bracket table.
pub struct LieBasis {
    rank: usize,
    elements: Vec<BasisElement>,
    /// brackets[i][j] = [x_i, x_j] as a sparse vector over the basis.
    brackets: Vec<Vec<SparseVec>>,
}

/// Build the standard sl_n basis: all E_{a,b} with a ≠ b in lexicographic
/// (a,b) order, followed by H_1, …, H_{n-1}.
pub fn build_basis(n: usize) -> LieBasis {
    assert!(n >= 2, "sl_n needs n >= 2");
    let mut elements = Vec::with_capacity(n * n - 1);
    for a in 1..=n {
        for b in 1..=n {
            if a != b {
                let mut weight = vec![0i64; n];
                weight[a - 1] = 1;
                weight[b - 1] = -1;
                elements.push(BasisElement { kind: ElementKind::MatrixUnit(a, b), weight });
            }
        }
    }
    for i in 1..n {
        elements.push(BasisElement { kind: ElementKind::Cartan(i), weight: vec![0i64; n] });
    }

    let dim = elements.len();
    let mut brackets = vec![vec![SparseVec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            brackets[i][j] = bracket_in_basis(n, &elements, &elements[i], &elements[j]);
        }
    }
    let basis = LieBasis { rank: n, elements, brackets };
    basis.assert_antisymmetry();
    basis.assert_weight_additivity();
    basis.assert_jacobi();
    basis
}

/// Commutator of two basis elements, computed on gl_n matrices and written
/// back over the sl_n basis.
fn bracket_in_basis(
    n: usize,
    elements: &[BasisElement],
    x: &BasisElement,
    y: &BasisElement,
) -> SparseVec {
    let mx = as_matrix(x);
    let my = as_matrix(y);
    let mut comm: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (&(a, b), &u) in &mx {
        for (&(c, d), &v) in &my {
            if b == c {
                *comm.entry((a, d)).or_insert(0) += u * v;
            }
            if d == a {
                *comm.entry((c, b)).or_insert(0) -= u * v;
            }
        }
    }
    comm.retain(|_, v| *v != 0);

    // off-diagonal entries are E_{a,b} coefficients; the diagonal part is
    // traceless and expands over H_i via partial sums
    let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
    let mut diag = vec![0i64; n];
    for (&(a, b), &v) in &comm {
        if a == b {
            diag[a - 1] = v;
        } else {
            let idx = elements
                .iter()
                .position(|e| e.kind == ElementKind::MatrixUnit(a, b))
                .expect("matrix unit in basis");
            coeffs.insert(idx, v);
        }
    }
    assert_eq!(diag.iter().sum::<i64>(), 0, "commutator must be traceless");
    let mut partial = 0i64;
    for i in 1..n {
        partial += diag[i - 1];
        if partial != 0 {
            let idx = elements
                .iter()
                .position(|e| e.kind == ElementKind::Cartan(i))
                .expect("Cartan element in basis");
            coeffs.insert(idx, partial);
        }
    }
    coeffs
        .into_iter()
        .map(|(i, v)| (i, BigRational::from_integer(BigInt::from(v))))
        .collect()
}

fn as_matrix(e: &BasisElement) -> BTreeMap<(usize, usize), i64> {
    let mut m = BTreeMap::new();
    match e.kind {
        ElementKind::MatrixUnit(a, b) => {
            m.insert((a, b), 1);
        }
        ElementKind::Cartan(i) => {
            m.insert((i, i), 1);
            m.insert((i + 1, i + 1), -1);
        }
    }
    m
}

impl LieBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of sl_n, i.e. n² − 1.
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn weight(&self, i: usize) -> &[i64] {
        &self.elements[i].weight
    }

    pub fn element_name(&self, i: usize) -> String {
        self.elements[i].to_string()
    }

    /// Index of the matrix unit E_{a,b} (1-based, a ≠ b).
    pub fn matrix_unit_index(&self, a: usize, b: usize) -> usize {
        self.elements
            .iter()
            .position(|e| e.kind == ElementKind::MatrixUnit(a, b))
            .expect("matrix unit in basis")
    }

    /// Index of the highest-root vector e_θ = E_{1,n}.
    pub fn highest_root_index(&self) -> usize {
        self.matrix_unit_index(1, self.rank)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.brackets[i][j]
    }

    /// [u, v] for sparse vectors, by bilinearity over the bracket table.
    pub fn bracket_vec(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, a) in u {
            for (j, b) in v {
                let ab = a * b;
                for (l, c) in &self.brackets[*i][*j] {
                    let e = acc.entry(*l).or_insert_with(BigRational::zero);
                    *e += &ab * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn assert_antisymmetry(&self) {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let mut neg: SparseVec = self.brackets[j][i]
                    .iter()
                    .map(|(l, c)| (*l, -c))
                    .collect();
                neg.sort_by_key(|(l, _)| *l);
                assert_eq!(
                    self.brackets[i][j], neg,
                    "bracket antisymmetry fails at ({i},{j})"
                );
            }
        }
    }

    fn assert_weight_additivity(&self) {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let expected: Vec<i64> = self.elements[i]
                    .weight
                    .iter()
                    .zip(&self.elements[j].weight)
                    .map(|(a, b)| a + b)
                    .collect();
                for (l, _) in &self.brackets[i][j] {
                    assert_eq!(
                        self.elements[*l].weight, expected,
                        "weight additivity fails at ({i},{j})"
                    );
                }
            }
        }
    }

    fn assert_jacobi(&self) {
        let one = |i: usize| vec![(i, BigRational::from_integer(BigInt::from(1)))];
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for l in 0..self.dim() {
                    let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
                    let parts = [
                        self.bracket_vec(&one(i), &self.brackets[j][l]),
                        self.bracket_vec(&one(j), &self.brackets[l][i]),
                        self.bracket_vec(&one(l), &self.brackets[i][j]),
                    ];
                    for part in parts {
                        for (idx, c) in part {
                            *acc.entry(idx).or_insert_with(BigRational::zero) += c;
                        }
                    }
                    assert!(
                        acc.values().all(|c| c.is_zero()),
                        "Jacobi identity fails at ({i},{j},{l})"
                    );
                }
            }
        }
    }
}
