use std::collections::HashMap;

use crate::algebra::Characteristic;

use super::linalg::IntMatrix;

/// Finite abstract simplicial complex on vertices `0..64`.
///
/// Faces are bitmasks grouped by dimension: `faces[d + 1]` holds the faces of
/// dimension `d`, so `faces[0]` is either `[0]` (the empty face) or absent
/// for the void complex. Each group is sorted lexicographically by vertex
/// list. A complex may be a `k`-skeleton of a larger one; its homology then
/// agrees with the larger complex below dimension `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex::default()
    }

    /// The complex `{∅}`.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            faces: vec![vec![0]],
        }
    }

    /// Downward closure of the given facets (vertex lists).
    pub fn from_facets(facets: &[Vec<usize>]) -> Self {
        let mut faces: Vec<u64> = Vec::new();
        for facet in facets {
            let mask = facet.iter().fold(0u64, |m, &v| {
                assert!(v < 64, "vertex index too large");
                m | (1 << v)
            });
            // enumerate submasks
            let mut sub = mask;
            loop {
                faces.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        faces.sort_unstable();
        faces.dedup();
        Self::from_face_list(faces)
    }

    /// Builds from a downward-closed list of faces, in any order.
    pub(crate) fn from_face_list(faces: impl IntoIterator<Item = u64>) -> Self {
        let mut by_dim: Vec<Vec<u64>> = Vec::new();
        for f in faces {
            let size = f.count_ones() as usize;
            if by_dim.len() <= size {
                by_dim.resize(size + 1, Vec::new());
            }
            by_dim[size].push(f);
        }
        for group in &mut by_dim {
            group.sort_unstable_by_key(|&f| lex_key(f));
            group.dedup();
        }
        while by_dim.last().is_some_and(Vec::is_empty) {
            by_dim.pop();
        }
        SimplicialComplex { faces: by_dim }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// `-1` for `{∅}`; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        if self.faces.is_empty() {
            None
        } else {
            Some(self.faces.len() as isize - 2)
        }
    }

    /// Faces of dimension `d` as bitmasks.
    pub fn faces(&self, d: isize) -> &[u64] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.faces.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.faces(0)
            .iter()
            .map(|f| f.trailing_zeros() as usize)
            .collect()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces(face.count_ones() as isize - 1).contains(&face)
    }

    /// Faces not contained in a larger face.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (size, group) in self.faces.iter().enumerate() {
            let bigger = self.faces.get(size + 1);
            for &f in group {
                let covered = bigger.is_some_and(|b| b.iter().any(|&g| g & f == f));
                if !covered {
                    out.push(vertex_list(f));
                }
            }
        }
        out
    }

    /// Boundary map from `d`-faces to `(d-1)`-faces, columns indexed by the
    /// `d`-faces. Removing the `k`-th smallest vertex carries sign `(-1)^k`.
    pub fn boundary_matrix(&self, d: isize) -> IntMatrix {
        let cols = self.faces(d);
        let rows = self.faces(d - 1);
        let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (c, &face) in cols.iter().enumerate() {
            for (k, v) in vertex_list(face).into_iter().enumerate() {
                let r = index[&(face & !(1u64 << v))];
                m.set(r, c, if k % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }
}

pub(crate) fn vertex_list(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Sort key giving lexicographic order of sorted vertex lists among faces of
/// the same size: reversing the bits makes the smallest vertex most
/// significant.
fn lex_key(mask: u64) -> std::cmp::Reverse<u64> {
    std::cmp::Reverse(mask.reverse_bits())
}

/// Reduced homology ranks `dim H̃_d` for `d = -1, 0, ..., dim`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyRanks {
    ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn get(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.ranks.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Ranks starting at dimension `-1`.
    pub fn as_slice(&self) -> &[usize] {
        &self.ranks
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Reduced homology of `cx` over the field of the given characteristic.
pub fn reduced_homology_ranks(
    cx: &SimplicialComplex,
    characteristic: Characteristic,
) -> HomologyRanks {
    let Some(top) = cx.dimension() else {
        return HomologyRanks::default();
    };
    homology_up_to(cx, top, characteristic)
}

/// `dim H̃_d` for `d = -1 ..= max_dim`. Needs the faces up to `max_dim + 1`.
pub(crate) fn homology_up_to(
    cx: &SimplicialComplex,
    max_dim: isize,
    characteristic: Characteristic,
) -> HomologyRanks {
    if cx.is_void() {
        return HomologyRanks::default();
    }
    // rank of ∂_d for d = 0 ..= max_dim + 1 (∂_0 maps vertices to the empty face)
    let boundary_rank = |d: isize| -> usize {
        let m = cx.boundary_matrix(d);
        if m.rows() == 0 || m.cols() == 0 {
            0
        } else {
            m.rank(characteristic)
        }
    };
    let ranks_d: Vec<usize> = (0..=max_dim + 1).map(boundary_rank).collect();
    let rank_of = |d: isize| -> usize {
        if d < 0 {
            0
        } else {
            ranks_d[d as usize]
        }
    };
    let ranks = (-1..=max_dim)
        .map(|d| cx.faces(d).len() - rank_of(d) - rank_of(d + 1))
        .collect();
    HomologyRanks { ranks }
}
