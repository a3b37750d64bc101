//! Pieri products, the Littlewood-Richardson rule, tensor products of sl_n
//! irreducibles, and conversion between characters and irreducible
//! decompositions.
//!
//! Littlewood-Richardson coefficients are computed by direct enumeration of
//! LR skew tableaux (column-strict fillings whose reverse reading word is a
//! ballot sequence). Instance sizes in this crate are tiny, so the naive
//! enumeration is both the simplest and an entirely adequate implementation.

use crate::weights::{dual_sl, restrict_to_sl, sl_dim, GlWeight, Partition, SlWeight};
use num::{BigInt, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TensorError {
    #[error("decomposition has a negative multiplicity and is not a genuine module")]
    SignedDecomposition,
    #[error("not a character: {0}")]
    NotACharacter(String),
}

/// A formal integer combination of irreducible sl_n highest weights: an
/// element of the Grothendieck group. Zero multiplicities are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IrrDecomposition {
    rank: usize,
    entries: BTreeMap<SlWeight, i64>,
}

impl IrrDecomposition {
    pub fn new(rank: usize) -> Self {
        IrrDecomposition { rank, entries: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_weight(&mut self, weight: SlWeight, mult: i64) {
        assert_eq!(weight.rank(), self.rank, "rank mismatch in decomposition");
        if mult == 0 {
            return;
        }
        match self.entries.entry(weight) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(mult);
            }
        }
    }

    /// self += c · other.
    pub fn add_scaled(&mut self, other: &IrrDecomposition, c: i64) {
        assert_eq!(other.rank, self.rank);
        for (w, &m) in &other.entries {
            self.add_weight(w.clone(), m * c);
        }
    }

    pub fn multiplicity(&self, weight: &SlWeight) -> i64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&SlWeight, i64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&m| m >= 0)
    }

    /// Σ mult · dim V(weight), signed.
    pub fn virtual_dim(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (w, &m) in &self.entries {
            total += BigInt::from(m) * BigInt::from(sl_dim(w));
        }
        total
    }
}

impl fmt::Display for IrrDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m == 1 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{m}·{w}")?;
            }
        }
        Ok(())
    }
}

/// A formal character of sl_n: weight-space dimensions keyed by weight
/// vectors in epsilon coordinates, normalized so the implicit last
/// coordinate is zero (keys have length n-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    rank: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl Character {
    pub fn new(rank: usize) -> Self {
        Character { rank, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, weight: Vec<i64>, coeff: i64) {
        assert_eq!(weight.len(), self.rank - 1, "weight vector length mismatch");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(weight) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn coeff(&self, weight: &[i64]) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total coefficient mass; equals the dimension for a genuine character.
    pub fn total_mass(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Normalize a full epsilon-coordinate vector (length n) to the
    /// canonical representative with last coordinate zero.
    pub fn normalize_full(full: &[i64]) -> Vec<i64> {
        let last = *full.last().expect("empty weight vector");
        full[..full.len() - 1].iter().map(|&x| x - last).collect()
    }
}

/// All partitions ν obtained from λ by adding a horizontal strip of size j,
/// with at most n parts (the Pieri rule for multiplication by S^j).
/// Ascending lexicographic order.
pub fn pieri_row(lambda: &Partition, j: u32, n: usize) -> Vec<Partition> {
    assert!(lambda.len() <= n, "lambda has more than n parts");
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    pieri_rec(lambda, n, 0, j as u64, &mut current, &mut out);
    out
}

fn pieri_rec(
    lambda: &Partition,
    n: usize,
    pos: usize,
    remaining: u64,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if pos == n {
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
        }
        return;
    }
    let lo = lambda.part(pos);
    let slack = remaining.min(u32::MAX as u64) as u32;
    let hi = if pos == 0 {
        lo + slack
    } else {
        lambda.part(pos - 1).min(lo + slack)
    };
    for v in lo..=hi {
        current.push(v);
        pieri_rec(lambda, n, pos + 1, remaining - (v - lo) as u64, current, out);
        current.pop();
    }
}

/// Littlewood-Richardson coefficients c^ν_{λμ} for all ν with at most n
/// parts, by enumeration of LR skew tableaux of shape ν/λ and content μ.
pub fn lr_coefficients(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> BTreeMap<Partition, u64> {
    assert!(lambda.len() <= n && mu.len() <= n, "weights exceed rank");
    let total = lambda.size() + mu.size();
    // every entry of the first skew row is forced to 1, so ν₁ ≤ λ₁ + μ₁
    let cap = lambda.part(0) + mu.part(0);
    let mut out = BTreeMap::new();
    for nu in crate::weights::partitions_in_box(n, cap, total) {
        if (0..nu.len()).any(|i| nu.part(i) < lambda.part(i)) {
            continue;
        }
        let count = lr_tableau_count(&nu, lambda, mu);
        if count > 0 {
            out.insert(nu, count);
        }
    }
    out
}

/// Number of column-strict fillings of ν/λ with content μ whose reverse
/// reading word is a ballot sequence.
fn lr_tableau_count(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    let rows = nu.len();
    let r = mu.len();
    if r == 0 {
        return if nu == lambda { 1 } else { 0 };
    }
    // cells in reading order: rows top to bottom, right to left within a row
    let mut cells = Vec::new();
    for row in 0..rows {
        let lo = lambda.part(row);
        let hi = nu.part(row);
        for col in (lo..hi).rev() {
            cells.push((row, col));
        }
    }
    let mut grid: Vec<Vec<u8>> = (0..rows)
        .map(|row| vec![0u8; nu.part(row) as usize])
        .collect();
    let mut counts = vec![0u32; r];
    fill(&mut grid, &cells, 0, lambda, mu, &mut counts)
}

fn fill(
    grid: &mut Vec<Vec<u8>>,
    cells: &[(usize, u32)],
    idx: usize,
    lambda: &Partition,
    mu: &Partition,
    counts: &mut Vec<u32>,
) -> u64 {
    if idx == cells.len() {
        return 1;
    }
    let (row, col) = cells[idx];
    let mut total = 0;
    for e in 1..=mu.len() as u8 {
        let ei = (e - 1) as usize;
        if counts[ei] >= mu.part(ei) {
            continue;
        }
        // ballot: after placing e, #e must not exceed #(e-1)
        if e > 1 && counts[ei] >= counts[ei - 1] {
            continue;
        }
        // rows weakly increase left to right; the right neighbor is filled
        if col + 1 < grid[row].len() as u32 && grid[row][(col + 1) as usize] != 0 {
            if e > grid[row][(col + 1) as usize] {
                continue;
            }
        }
        // columns strictly increase; the cell above (if in the skew shape)
        if row > 0 && col >= lambda.part(row - 1) && (col as usize) < grid[row - 1].len() {
            let above = grid[row - 1][col as usize];
            if above != 0 && e <= above {
                continue;
            }
        }
        grid[row][col as usize] = e;
        counts[ei] += 1;
        total += fill(grid, cells, idx + 1, lambda, mu, counts);
        counts[ei] -= 1;
        grid[row][col as usize] = 0;
    }
    total
}

/// Tensor product of irreducible sl_n modules, as a (nonnegative) element of
/// the Grothendieck group. The gl-level product is computed on the partition
/// lifts and restricted back.
pub fn tensor_sl(a: &SlWeight, b: &SlWeight) -> IrrDecomposition {
    assert_eq!(a.rank(), b.rank(), "tensor factors must share a rank");
    let n = a.rank();
    let mut out = IrrDecomposition::new(n);
    for (nu, c) in lr_coefficients(a.partition(), b.partition(), n) {
        let w = restrict_to_sl(&GlWeight::new(n, nu).expect("nu fits the rank"));
        out.add_weight(w, c as i64);
    }
    out
}

/// The tensor product V(β) ⊗ V(β)*, the building block of the Peter-Weyl
/// style sums in the formula engine.
pub fn tensor_with_dual(b: &SlWeight) -> IrrDecomposition {
    tensor_sl(b, &dual_sl(b))
}

/// Character of a nonnegative decomposition, by Gelfand-Tseitlin weight
/// enumeration of each irreducible summand.
pub fn char_of(d: &IrrDecomposition) -> Result<Character, TensorError> {
    if !d.is_nonnegative() {
        return Err(TensorError::SignedDecomposition);
    }
    let mut chi = Character::new(d.rank());
    for (w, m) in d.entries() {
        accumulate_irr_char(w, m, &mut chi);
    }
    Ok(chi)
}

/// Character of the single irreducible V(β).
fn irr_char(beta: &SlWeight) -> Character {
    let mut chi = Character::new(beta.rank());
    accumulate_irr_char(beta, 1, &mut chi);
    chi
}

fn accumulate_irr_char(beta: &SlWeight, mult: i64, chi: &mut Character) {
    let n = beta.rank();
    let top = beta.lift().partition().padded(n);
    // row sums of the GT pattern; gl weight entries are successive differences
    let mut row_sums = vec![0u64; n + 1];
    row_sums[n] = top.iter().map(|&x| x as u64).sum();
    gt_weight_rec(&top, &mut row_sums, mult, chi);
}

fn gt_weight_rec(row: &[u32], row_sums: &mut Vec<u64>, mult: i64, chi: &mut Character) {
    let len = row.len();
    if len == 1 {
        let n = row_sums.len() - 1;
        let mut full = Vec::with_capacity(n);
        for j in 1..=n {
            full.push(row_sums[j] as i64 - row_sums[j - 1] as i64);
        }
        chi.add_term(Character::normalize_full(&full), mult);
        return;
    }
    let mut next = vec![0u32; len - 1];
    gt_next_row(row, 0, &mut next, row_sums, mult, chi);
}

fn gt_next_row(
    row: &[u32],
    pos: usize,
    next: &mut Vec<u32>,
    row_sums: &mut Vec<u64>,
    mult: i64,
    chi: &mut Character,
) {
    if pos + 1 == row.len() {
        row_sums[next.len()] = next.iter().map(|&x| x as u64).sum();
        gt_weight_rec(&next.clone(), row_sums, mult, chi);
        return;
    }
    for v in row[pos + 1]..=row[pos] {
        next[pos] = v;
        gt_next_row(row, pos + 1, next, row_sums, mult, chi);
    }
}

/// Inverse of `char_of` by iterated highest-weight peeling: pick the
/// dominance-maximal weight in the support (lex-largest among maximal ones),
/// subtract that irreducible character, repeat. Fails with `NotACharacter`
/// if a coefficient ever goes negative or a maximal weight is not dominant.
pub fn char_decompose(c: &Character) -> Result<IrrDecomposition, TensorError> {
    let n = c.rank();
    let mut rest = c.clone();
    let mut out = IrrDecomposition::new(n);
    while !rest.is_empty() {
        let support: Vec<Vec<i64>> = rest.terms().map(|(w, _)| w.clone()).collect();
        let top = support
            .iter()
            .filter(|w| {
                !support.iter().any(|v| v != *w && dominates(v, w, n))
            })
            .max()
            .expect("nonempty support has a maximal element")
            .clone();
        if !is_dominant(&top) {
            return Err(TensorError::NotACharacter(format!(
                "maximal weight {top:?} is not dominant"
            )));
        }
        let mult = rest.coeff(&top);
        if mult < 0 {
            return Err(TensorError::NotACharacter(format!(
                "weight {top:?} has negative coefficient {mult}"
            )));
        }
        let parts: Vec<u32> = top.iter().map(|&x| x as u32).collect();
        let beta = SlWeight::new(n, Partition::from_sorted(parts)).expect("dominant weight fits");
        for (w, coeff) in irr_char(&beta).terms() {
            rest.add_term(w.clone(), -mult * coeff);
        }
        if rest.terms().any(|(_, coeff)| coeff < 0) {
            return Err(TensorError::NotACharacter(
                "peeling drove a coefficient negative".into(),
            ));
        }
        out.add_weight(beta, mult);
    }
    Ok(out)
}

/// Whether v - u is a nonnegative integer combination of simple roots
/// (dominance order on normalized weight vectors; non-strict).
fn dominates(v: &[i64], u: &[i64], n: usize) -> bool {
    let s: i64 = v.iter().zip(u).map(|(a, b)| a - b).sum();
    if s.rem_euclid(n as i64) != 0 {
        return false;
    }
    let t = -s / n as i64;
    let mut partial = 0i64;
    for i in 0..n - 1 {
        partial += v[i] - u[i] + t;
        if partial < 0 {
            return false;
        }
    }
    true
}

fn is_dominant(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1]) && w.last().map_or(true, |&x| x >= 0)
}
