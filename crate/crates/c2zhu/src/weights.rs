//! Partitions, dominant weights for gl_n and sl_n, dimension formulas, and
//! interlacing/branching enumeration.
//!
//! Weights are stored as partitions (polynomial dominant weights). A gl_n
//! weight is a partition with at most n parts; an sl_n weight is a partition
//! with at most n-1 parts. Trailing zeros are stripped on construction so
//! equality is structural, and all enumerations come back in ascending
//! lexicographic order.

use num::{BigUint, One};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("{parts} nonzero parts exceed the maximum {max} for rank {rank}")]
    TooManyParts { parts: usize, max: usize, rank: usize },
    #[error("rank {rank} is below the minimum {min}")]
    RankTooSmall { rank: usize, min: usize },
}

/// A partition: a weakly decreasing tuple of nonnegative integers.
///
/// Trailing zeros are stripped, so `(2,1,0)` and `(2,1)` compare equal.
/// The derived `Ord` is lexicographic on parts, which is the canonical
/// tie-break order used throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, WeightError> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(WeightError::NotWeaklyDecreasing(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Constructor for parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// |λ|, the sum of all parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Parts padded with zeros to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v.truncate(len.max(self.parts.len()));
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Highest weight of an irreducible polynomial gl_n module: a partition with
/// at most n parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlWeight {
    rank: usize,
    parts: Partition,
}

impl GlWeight {
    pub fn new(rank: usize, parts: Partition) -> Result<Self, WeightError> {
        if rank < 1 {
            return Err(WeightError::RankTooSmall { rank, min: 1 });
        }
        if parts.len() > rank {
            return Err(WeightError::TooManyParts { parts: parts.len(), max: rank, rank });
        }
        Ok(GlWeight { rank, parts })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.part(i)
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts)
    }
}

/// Highest weight of an irreducible sl_n module: a partition with at most
/// n-1 parts (the normalized representative with last coordinate zero).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlWeight {
    rank: usize,
    parts: Partition,
}

impl SlWeight {
    pub fn new(rank: usize, parts: Partition) -> Result<Self, WeightError> {
        if rank < 2 {
            return Err(WeightError::RankTooSmall { rank, min: 2 });
        }
        if parts.len() > rank - 1 {
            return Err(WeightError::TooManyParts { parts: parts.len(), max: rank - 1, rank });
        }
        Ok(SlWeight { rank, parts })
    }

    pub fn zero(rank: usize) -> Self {
        SlWeight { rank, parts: Partition::empty() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.part(i)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// The polynomial gl_n representative (β₁,…,β_{n-1},0).
    pub fn lift(&self) -> GlWeight {
        GlWeight { rank: self.rank, parts: self.parts.clone() }
    }

    /// The highest root θ of sl_n, as the partition (2,1,…,1).
    pub fn theta(rank: usize) -> Self {
        assert!(rank >= 2);
        let mut parts = vec![1; rank - 1];
        parts[0] = 2;
        SlWeight { rank, parts: Partition::from_sorted(parts) }
    }

    /// Scalar multiple c·β, componentwise on the partition representative.
    pub fn scaled(&self, c: u32) -> Self {
        let parts = self.parts.parts().iter().map(|&p| p * c).collect();
        SlWeight { rank: self.rank, parts: Partition::from_sorted(parts) }
    }
}

impl fmt::Display for SlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts)
    }
}

/// Dimension of the irreducible gl_n module V(λ) by the Weyl product formula
/// ∏_{i<j} (λ_i − λ_j + j − i) / (j − i). Exact; the quotient is integral.
pub fn weyl_dim(w: &GlWeight) -> BigUint {
    let n = w.rank();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let li = w.part(i) as u64;
            let lj = w.part(j) as u64;
            num *= BigUint::from(li - lj + (j - i) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    &num / &den
}

/// Dimension of the irreducible sl_n module V(β).
pub fn sl_dim(b: &SlWeight) -> BigUint {
    weyl_dim(&b.lift())
}

/// All level-k integrable sl_n weights, i.e. partitions β with at most n-1
/// parts and β₁ ≤ k, in ascending lexicographic order. There are
/// binomial(n-1+k, k) of them.
pub fn enumerate_pk(rank: usize, level: u32) -> Vec<SlWeight> {
    assert!(rank >= 2, "enumerate_pk requires rank >= 2");
    partitions_in_box_any_size(rank - 1, level)
        .into_iter()
        .map(|p| SlWeight { rank, parts: p })
        .collect()
}

/// Restriction of a gl_n weight to sl_n: β_i = λ_i − λ_n. Dimensions agree.
pub fn restrict_to_sl(w: &GlWeight) -> SlWeight {
    let n = w.rank();
    assert!(n >= 2, "restriction to sl requires rank >= 2");
    let last = w.part(n - 1);
    let parts = (0..n - 1).map(|i| w.part(i) - last).collect();
    SlWeight { rank: n, parts: Partition::from_sorted(parts) }
}

/// Highest weight of the dual module V(β)*: β*_i = β₁ − β_{n+1−i} with
/// β_n = 0. An involution that preserves dimension.
pub fn dual_sl(b: &SlWeight) -> SlWeight {
    let n = b.rank();
    let top = b.part(0);
    // padded index n+1-i for i = 1..n-1, with β_n = 0
    let parts = (1..n).map(|i| top - b.part(n - i)).collect();
    SlWeight { rank: n, parts: Partition::from_sorted(parts) }
}

/// Gelfand-Tseitlin branching: all gl_{n-1} weights μ interlacing λ,
/// λ_i ≥ μ_i ≥ λ_{i+1}, each with multiplicity one. Ascending lex order.
pub fn gt_branch(w: &GlWeight) -> Vec<GlWeight> {
    let n = w.rank();
    assert!(n >= 2, "gt_branch requires rank >= 2");
    let mut out = Vec::new();
    let mut current = vec![0u32; n - 1];
    branch_rec(w, 0, &mut current, &mut out);
    out
}

fn branch_rec(w: &GlWeight, pos: usize, current: &mut Vec<u32>, out: &mut Vec<GlWeight>) {
    let n = w.rank();
    if pos == n - 1 {
        out.push(GlWeight {
            rank: n - 1,
            parts: Partition::from_sorted(current.clone()),
        });
        return;
    }
    // the interlacing ranges are independent, so nested iteration is exact
    for v in w.part(pos + 1)..=w.part(pos) {
        current[pos] = v;
        branch_rec(w, pos + 1, current, out);
    }
}

/// All μ with μ₁ ≥ λ₁ ≥ μ₂ ≥ λ₂ ≥ … ≥ μ_s ≥ λ_s and μ₁ ≤ cap, where
/// s = `slots`. Requires λ₁ ≤ cap. Ascending lex order.
pub fn interlace_up(lambda: &Partition, slots: usize, cap: u32) -> Vec<Partition> {
    assert!(lambda.len() <= slots, "lambda has more than `slots` parts");
    assert!(lambda.part(0) <= cap, "interlace_up requires λ₁ ≤ cap");
    let mut out = Vec::new();
    let mut current = vec![0u32; slots];
    interlace_rec(lambda, slots, cap, 0, &mut current, &mut out);
    out
}

fn interlace_rec(
    lambda: &Partition,
    slots: usize,
    cap: u32,
    pos: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if pos == slots {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    let hi = if pos == 0 { cap } else { lambda.part(pos - 1) };
    for v in lambda.part(pos)..=hi {
        current[pos] = v;
        interlace_rec(lambda, slots, cap, pos + 1, current, out);
    }
}

/// All partitions of `size` with at most `max_parts` parts, each at most
/// `max_part`, in ascending lexicographic order.
pub fn partitions_in_box(max_parts: usize, max_part: u32, size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(max_parts);
    box_rec(max_parts, max_part, size, &mut current, &mut out);
    out
}

fn box_rec(slots: usize, bound: u32, remaining: u64, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    if slots == 0 || (bound as u64) * (slots as u64) < remaining {
        return;
    }
    let lo = remaining.div_ceil(slots as u64) as u32;
    for p in lo..=bound.min(remaining.min(u32::MAX as u64) as u32) {
        current.push(p);
        box_rec(slots - 1, p, remaining - p as u64, current, out);
        current.pop();
    }
}

/// All partitions with at most `max_parts` parts, each at most `max_part`,
/// of any size, in ascending lexicographic order.
pub fn partitions_in_box_any_size(max_parts: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(max_parts);
    box_any_rec(max_parts, max_part, &mut current, &mut out);
    out
}

fn box_any_rec(slots: usize, bound: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition::from_sorted(current.clone()));
    if slots == 0 {
        return;
    }
    for p in 1..=bound {
        current.push(p);
        box_any_rec(slots - 1, p, current, out);
        current.pop();
    }
}
