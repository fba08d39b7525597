//! Independent oracles shared by the integration tests. None of these call
//! into the library's order, lattice or homology code.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use joinmeet::ideal::MonomialIdeal;
use joinmeet::resolution::BettiTable;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Degree first; on a tie the lowest-indexed differing variable decides and
/// the smaller exponent is the larger monomial.
pub fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Random squarefree ideal on `1..=max_vars` variables with `1..=max_gens`
/// nonconstant generators.
pub fn random_squarefree_ideal(
    rng: &mut ChaCha8Rng,
    max_vars: usize,
    max_gens: usize,
) -> MonomialIdeal {
    let vars = rng.gen_range(1..=max_vars);
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Vec<u32>> = (0..count)
        .map(|_| loop {
            let g: Vec<u32> = (0..vars).map(|_| u32::from(rng.gen_bool(0.4))).collect();
            if g.iter().any(|&e| e > 0) {
                break g;
            }
        })
        .collect();
    MonomialIdeal::from_exponents(vars, gens)
}

/// Numerator of the Hilbert series of `R/I`, by inclusion-exclusion over
/// subsets of generators: `Σ_S (-1)^|S| t^deg lcm(S)`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> BTreeMap<u64, i64> {
    let gens: Vec<Vec<u32>> = ideal
        .gens()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect();
    let n = ideal.var_count();
    let mut out = BTreeMap::new();
    for mask in 0u64..(1 << gens.len()) {
        let mut lcm = vec![0u32; n];
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (l, e) in lcm.iter_mut().zip(g) {
                    *l = (*l).max(*e);
                }
            }
        }
        let deg: u64 = lcm.iter().map(|&e| u64::from(e)).sum();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *out.entry(deg).or_insert(0) += sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

/// `Σ_{i,j} (-1)^i B_{i,j} t^j`.
pub fn table_numerator(table: &BettiTable) -> BTreeMap<u64, i64> {
    let mut out = BTreeMap::new();
    for (i, j, v) in table.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        *out.entry(j).or_insert(0) += sign * v as i64;
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Minimal generators of the initial ideal of `L_2(n, n2)`, written out by
/// hand: `x_i y_1`, `x_i s t` for `i >= 2`, and for `n2 = 2` also `x_i y_2`
/// and `y_2 s t`. Sorted for set comparison.
pub fn expected_initial_ideal(n: usize, n2: usize) -> Vec<String> {
    let mut out: Vec<String> = (1..=n).map(|i| format!("x1_{i}*x2_1")).collect();
    out.extend((2..=n).map(|i| format!("s*x1_{i}*t")));
    if n2 == 2 {
        out.extend((1..=n).map(|i| format!("x1_{i}*x2_2")));
        out.push("s*x2_2*t".to_string());
    }
    out.sort();
    out
}

/// Brute-force join and meet from an order relation `leq[a][b]`.
pub struct BruteLattice {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
}

impl BruteLattice {
    fn extremum(&self, a: usize, b: usize, upper: bool) -> Option<usize> {
        let rel = |x: usize, y: usize| {
            if upper {
                self.leq[x][y]
            } else {
                self.leq[y][x]
            }
        };
        let bounds: Vec<usize> = (0..self.n).filter(|&z| rel(a, z) && rel(b, z)).collect();
        let least: Vec<usize> = bounds
            .iter()
            .copied()
            .filter(|&z| bounds.iter().all(|&w| rel(z, w)))
            .collect();
        (least.len() == 1).then(|| least[0])
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.extremum(a, b, true)
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.extremum(a, b, false)
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.n)
            .all(|a| (0..self.n).all(|b| self.join(a, b).is_some() && self.meet(a, b).is_some()))
    }

    pub fn is_distributive(&self) -> bool {
        let (j, m) = (
            |a, b| self.join(a, b).unwrap(),
            |a, b| self.meet(a, b).unwrap(),
        );
        (0..self.n)
            .all(|a| (0..self.n).all(|b| (0..self.n).all(|c| m(a, j(b, c)) == j(m(a, b), m(a, c)))))
    }

    pub fn is_modular(&self) -> bool {
        let (j, m) = (
            |a, b| self.join(a, b).unwrap(),
            |a, b| self.meet(a, b).unwrap(),
        );
        (0..self.n).all(|a| {
            (0..self.n)
                .all(|c| !self.leq[a][c] || (0..self.n).all(|b| j(a, m(b, c)) == m(j(a, b), c)))
        })
    }
}

/// Order relation generated by cover pairs, by repeated relaxation.
pub fn order_from_covers(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    loop {
        let mut changed = false;
        for &(lo, hi) in covers {
            for row in leq.iter_mut() {
                if row[lo] && !row[hi] {
                    row[hi] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return leq;
        }
    }
}

/// Cover pairs of the crystal lattice `L_k(ns)`, labelled as in the library:
/// `s`, then each chain bottom to top, then `t`.
pub fn crystal_covers(ns: &[usize]) -> (Vec<String>, Vec<(usize, usize)>) {
    let mut labels = vec!["s".to_string()];
    let mut covers = Vec::new();
    let top = 1 + ns.iter().sum::<usize>();
    for (c, &len) in ns.iter().enumerate() {
        let start = labels.len();
        for j in 1..=len {
            labels.push(format!("x{}_{}", c + 1, j));
        }
        covers.push((0, start));
        for j in 1..len {
            covers.push((start + j - 1, start + j));
        }
        covers.push((start + len - 1, top));
    }
    labels.push("t".to_string());
    (labels, covers)
}
