use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{Characteristic, Monomial};
use crate::ideal::MonomialIdeal;

use super::complex::vertex_list;
use super::linalg::IntMatrix;
use super::{collect_table, BettiOptions, BettiTable, Multidegree, ResolutionError};

/// Largest generator count accepted for a full (untruncated) table.
pub const TAYLOR_MAX_GENERATORS: usize = 20;
/// Largest number of generator subsets enumerated in one run.
pub const TAYLOR_FACE_LIMIT: usize = 1 << 20;

/// Multigraded Betti numbers of `R/I` from the Taylor complex, nonzero
/// entries only, sorted by `i` then by `b`. Works for any monomial ideal.
///
/// In multidegree `b` the complex `T ⊗ k` has a basis of generator subsets
/// with lcm exactly `b`; a face survives in the differential only when
/// dropping it leaves the lcm unchanged.
pub fn multigraded_betti_taylor(
    ideal: &MonomialIdeal,
    options: &BettiOptions,
) -> Result<Vec<(usize, Multidegree, u64)>, ResolutionError> {
    let gens = ideal.gens();
    let n = gens.len();
    if n > 64 {
        return Err(ResolutionError::TooManyGenerators {
            count: n,
            limit: 64,
        });
    }
    // homology at size i needs faces of size i + 1
    let max_size = match options.max_index {
        None => {
            if n > TAYLOR_MAX_GENERATORS {
                return Err(ResolutionError::TooManyGenerators {
                    count: n,
                    limit: TAYLOR_MAX_GENERATORS,
                });
            }
            n
        }
        Some(r) => (r + 1).min(n),
    };
    let faces = subset_count(n, max_size);
    if faces > TAYLOR_FACE_LIMIT as u128 {
        return Err(ResolutionError::TooManyFaces {
            count: faces,
            limit: TAYLOR_FACE_LIMIT,
        });
    }

    let mut groups: HashMap<Monomial, Vec<u64>> = HashMap::new();
    enumerate(
        gens,
        0,
        0,
        Monomial::one(ideal.var_count()),
        max_size,
        &mut groups,
    );

    let top = options.max_index.unwrap_or(n);
    let characteristic = options.characteristic;
    let mut out: Vec<(usize, Monomial, u64)> = groups
        .into_par_iter()
        .flat_map_iter(|(b, mut faces)| {
            faces.sort_unstable_by_key(|&f| (f.count_ones(), std::cmp::Reverse(f.reverse_bits())));
            group_homology(gens, &b, &faces, top, characteristic)
                .into_iter()
                .map(move |(i, v)| (i, b.clone(), v))
        })
        .collect();
    out.sort_by(|a, b| (a.0, a.1.degree(), &a.1).cmp(&(b.0, b.1.degree(), &b.1)));
    Ok(out)
}

/// Graded Betti table of `R/I` from the Taylor complex.
pub fn graded_betti_taylor(
    ideal: &MonomialIdeal,
    options: &BettiOptions,
) -> Result<BettiTable, ResolutionError> {
    Ok(collect_table(
        options,
        multigraded_betti_taylor(ideal, options)?,
    ))
}

fn subset_count(n: usize, max_size: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for k in 0..=max_size {
        total += c;
        c = c * (n - k) as u128 / (k + 1) as u128;
    }
    total
}

fn enumerate(
    gens: &[Monomial],
    start: usize,
    subset: u64,
    lcm: Monomial,
    left: usize,
    groups: &mut HashMap<Monomial, Vec<u64>>,
) {
    if left > 0 {
        for i in start..gens.len() {
            enumerate(
                gens,
                i + 1,
                subset | (1 << i),
                lcm.lcm(&gens[i]),
                left - 1,
                groups,
            );
        }
    }
    groups.entry(lcm).or_default().push(subset);
}

/// `(i, dim H_i)` for the strand of faces with lcm `b`, `i <= top`.
fn group_homology(
    gens: &[Monomial],
    b: &Monomial,
    faces: &[u64],
    top: usize,
    characteristic: Characteristic,
) -> Vec<(usize, u64)> {
    let index: HashMap<u64, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let max_size = faces.last().map_or(0, |f| f.count_ones() as usize);
    let by_size: Vec<Vec<u64>> = (0..=max_size)
        .map(|s| {
            faces
                .iter()
                .copied()
                .filter(|f| f.count_ones() as usize == s)
                .collect()
        })
        .collect();
    let offset = |s: usize| by_size[..s].iter().map(Vec::len).sum::<usize>();

    // rank of the map from size-s faces to size-(s-1) faces
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > max_size || by_size[s].is_empty() || by_size[s - 1].is_empty() {
            return 0;
        }
        let lower = offset(s - 1);
        let mut m = IntMatrix::zeros(by_size[s - 1].len(), by_size[s].len());
        for (c, &face) in by_size[s].iter().enumerate() {
            for (k, g) in vertex_list(face).into_iter().enumerate() {
                let sub = face & !(1u64 << g);
                let sub_lcm = vertex_list(sub)
                    .into_iter()
                    .fold(Monomial::one(b.var_count()), |acc, j| acc.lcm(&gens[j]));
                if &sub_lcm == b {
                    m.set(index[&sub] - lower, c, if k % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        m.rank(characteristic)
    };
    let ranks: Vec<usize> = (0..=top.min(max_size) + 1).map(boundary_rank).collect();
    (0..=top.min(max_size))
        .filter_map(|s| {
            let h = by_size[s].len() - ranks[s] - ranks[s + 1];
            (h > 0).then_some((s, h as u64))
        })
        .collect()
}
