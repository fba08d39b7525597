//! Exact matrix rank for boundary matrices.

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::algebra::{mul_mod, pow_mod, Characteristic};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    /// Rank over the field of the given characteristic.
    pub fn rank(&self, characteristic: Characteristic) -> usize {
        match characteristic {
            Characteristic::Zero => self.rank_integer(),
            Characteristic::Prime(p) => self.rank_mod_p(p),
        }
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    /// Runs in `i128` and restarts with big integers on overflow.
    pub fn rank_integer(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let small: Vec<i128> = self.data.iter().map(|&v| v as i128).collect();
        if let Some(r) = bareiss_rank(small, self.rows, self.cols) {
            return r;
        }
        let big: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(v)).collect();
        bareiss_rank(big, self.rows, self.cols).expect("big integer elimination cannot overflow")
    }

    /// Rank over `F_p` by Gaussian elimination.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<u64> = self
            .data
            .iter()
            .map(|&v| (v as i128).rem_euclid(p as i128) as u64)
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            swap_rows(&mut a, cols, pivot, rank);
            let inv = pow_mod(a[rank * cols + col], p - 2, p);
            for r in (rank + 1)..rows {
                let factor = a[r * cols + col];
                if factor == 0 {
                    continue;
                }
                let f = mul_mod(factor, inv, p);
                for c in col..cols {
                    let sub = mul_mod(f, a[rank * cols + c], p);
                    let cur = a[r * cols + c];
                    a[r * cols + c] = if cur >= sub { cur - sub } else { cur + p - sub };
                }
            }
            rank += 1;
        }
        rank
    }
}

fn swap_rows<T>(a: &mut [T], cols: usize, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    let (lo, hi) = (r1.min(r2), r1.max(r2));
    let (head, tail) = a.split_at_mut(hi * cols);
    head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
}

/// Fraction-free elimination. Every intermediate entry is a minor of the
/// input, so the division by the previous pivot is exact. Returns `None` if
/// `T` overflows.
fn bareiss_rank<T>(mut a: Vec<T>, rows: usize, cols: usize) -> Option<usize>
where
    T: Clone + Zero + One + PartialEq + CheckedMul + CheckedSub + CheckedDiv,
{
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, cols, pivot, rank);
        let p = a[rank * cols + col].clone();
        for r in (rank + 1)..rows {
            let lead = a[r * cols + col].clone();
            for c in (col + 1)..cols {
                let x = p.checked_mul(&a[r * cols + c])?;
                let y = lead.checked_mul(&a[rank * cols + c])?;
                a[r * cols + c] = x.checked_sub(&y)?.checked_div(&prev)?;
            }
            a[r * cols + col] = T::zero();
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank_integer(), 1);
        assert_eq!(m.rank_mod_p(2), 1);
        let id = IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(id.rank_integer(), 3);
        assert_eq!(IntMatrix::zeros(0, 4).rank_integer(), 0);
        assert_eq!(IntMatrix::zeros(3, 3).rank_mod_p(5), 0);
    }

    #[test]
    fn characteristic_dependence() {
        // det = 2: full rank over Q and F_3, rank 1 over F_2.
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(m.rank(Characteristic::Zero), 2);
        assert_eq!(m.rank(Characteristic::Prime(3)), 2);
        assert_eq!(m.rank(Characteristic::Prime(2)), 1);
    }

    #[test]
    fn hollow_triangle_boundary() {
        // edges 01, 02, 12 -> vertices 0, 1, 2
        let d1 = IntMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(d1.rank_integer(), 2);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // Entries near 1e9 push intermediate minors far beyond i128.
        let mut state: u64 = 0x2545_f491_4f6c_dd1d;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 2_000_000_001) as i64 - 1_000_000_000
        };
        let n = 30;
        let mut rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
        let full = IntMatrix::from_rows(&rows);
        // rank over F_p never exceeds the rank over Q
        assert_eq!(full.rank_mod_p(1_000_000_007), n);
        assert_eq!(full.rank_integer(), n);

        rows[n - 1] = rows[0].iter().zip(&rows[1]).map(|(a, b)| a - b).collect();
        let deficient = IntMatrix::from_rows(&rows);
        assert_eq!(deficient.rank_mod_p(1_000_000_007), n - 1);
        assert_eq!(deficient.rank_integer(), n - 1);
    }
}
