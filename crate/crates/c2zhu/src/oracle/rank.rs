//! Exact rank of sparse integer matrices by fraction-free Gaussian
//! elimination: rows are combined with cross-multiplied integer pivoting and
//! divided by their content after every update, so no rationals appear and
//! coefficient growth stays tame.

use num::{BigInt, Integer, Signed, Zero};
use std::collections::BTreeMap;

/// A sparse row: (column, coefficient) pairs sorted by column, no zeros.
pub type SparseRow = Vec<(u32, BigInt)>;

/// Rank of the matrix whose rows are given. Rows may be linearly dependent
/// or zero; the order of rows does not affect the result.
pub fn exact_rank(rows: Vec<SparseRow>) -> usize {
    let mut pivots: BTreeMap<u32, SparseRow> = BTreeMap::new();
    for row in rows {
        if let Some(reduced) = reduce_row(row, &pivots) {
            let col = reduced[0].0;
            pivots.insert(col, reduced);
        }
    }
    pivots.len()
}

/// Reduce a row against the pivot rows; returns the normalized remainder if
/// it is nonzero (a fresh pivot), None if the row was dependent.
fn reduce_row(mut row: SparseRow, pivots: &BTreeMap<u32, SparseRow>) -> Option<SparseRow> {
    loop {
        let Some((col, lead)) = row.first().map(|(c, a)| (*c, a.clone())) else {
            return None;
        };
        match pivots.get(&col) {
            Some(pivot) => {
                let plead = &pivot[0].1;
                let g = lead.gcd(plead);
                row = combine(&row, &(plead / &g), pivot, &(&lead / &g));
            }
            None => {
                normalize(&mut row);
                return Some(row);
            }
        }
    }
}

/// a·x − b·y for sorted sparse rows.
fn combine(x: &SparseRow, a: &BigInt, y: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let mut i = 0;
    let mut j = 0;
    while i < x.len() || j < y.len() {
        let next = match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, vy))) => match cx.cmp(cy) {
                std::cmp::Ordering::Less => {
                    i += 1;
                    (*cx, a * vx)
                }
                std::cmp::Ordering::Greater => {
                    j += 1;
                    (*cy, -(b * vy))
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (*cx, a * vx - b * vy)
                }
            },
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, a * vx)
            }
            (None, Some((cy, vy))) => {
                j += 1;
                (*cy, -(b * vy))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

/// Divide by the content and make the leading coefficient positive.
fn normalize(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut content = BigInt::zero();
    for (_, v) in row.iter() {
        content = content.gcd(v);
    }
    if row[0].1.is_negative() {
        content = -content;
    }
    for (_, v) in row.iter_mut() {
        *v = &*v / &content;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn row(entries: &[(u32, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(exact_rank(vec![]), 0);
        assert_eq!(exact_rank(vec![row(&[])]), 0);
        assert_eq!(exact_rank(vec![row(&[(0, 1), (1, 2)])]), 1);
        assert_eq!(
            exact_rank(vec![row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)])]),
            1
        );
        assert_eq!(
            exact_rank(vec![
                row(&[(0, 1), (1, 1)]),
                row(&[(1, 1), (2, 1)]),
                row(&[(0, 1), (2, -1)]),
            ]),
            2
        );
    }

    /// Dense fraction-free elimination over i128 as an independent check.
    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        let mut mat: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let cols = mat.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..mat.len()).find(|&r| mat[r][c] != 0) else {
                continue;
            };
            mat.swap(rank, p);
            for r in 0..mat.len() {
                if r != rank && mat[r][c] != 0 {
                    let (a, b) = (mat[rank][c], mat[r][c]);
                    for cc in 0..cols {
                        mat[r][cc] = mat[r][cc] * a - mat[rank][cc] * b;
                    }
                    let g = mat[r].iter().fold(0i128, |acc, &x| gcd(acc, x.abs()));
                    if g > 1 {
                        for cc in 0..cols {
                            mat[r][cc] /= g;
                        }
                    }
                }
            }
            rank += 1;
            if rank == mat.len() {
                break;
            }
        }
        rank
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn randomized_against_dense_elimination() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let rows = rng.gen_range(1..=8);
            let cols = rng.gen_range(1..=8);
            let dense: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let sparse: Vec<SparseRow> = dense
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(c, &v)| (c as u32, BigInt::from(v)))
                        .collect()
                })
                .collect();
            assert_eq!(exact_rank(sparse), dense_rank(&dense));
        }
    }
}
