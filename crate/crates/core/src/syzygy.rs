//! Explicit first syzygies of the initial ideals of `L_2(N,1)` and `L_2(N,2)`.
//!
//! Generators are written with `x_i = x1_i`, `y_j = x2_j`. A member of a
//! family is `m·(e_a - e_b)` in the notation `d_{a,b} m`: the syzygy whose
//! `a` and `b` coordinates are `m / g_a` and `-m / g_b`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Coefficient, Monomial, Polynomial, Rational};
use crate::lattice::CrystalParams;
use crate::resolution::BettiTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyzygyError {
    #[error("coordinate {index} is outside a basis of {len} generators")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("N must be at least 2, got {0}")]
    TooSmall(usize),
}

/// Which second chain length the families belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SyzygyCase {
    /// `L_2(N,1)`
    OneStep,
    /// `L_2(N,2)`
    TwoStep,
}

impl SyzygyCase {
    pub fn n2(self) -> usize {
        match self {
            SyzygyCase::OneStep => 1,
            SyzygyCase::TwoStep => 2,
        }
    }

    pub fn from_n2(n2: usize) -> Option<Self> {
        match n2 {
            1 => Some(SyzygyCase::OneStep),
            2 => Some(SyzygyCase::TwoStep),
            _ => None,
        }
    }

    pub fn params(self, n: usize) -> CrystalParams {
        CrystalParams::two_chains(n, self.n2()).expect("positive chain lengths")
    }
}

impl fmt::Display for SyzygyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_2(N,{})", self.n2())
    }
}

/// Element of the free module `F_1`, one coordinate per generator.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SyzygyVector {
    coords: BTreeMap<usize, Polynomial<Rational>>,
}

impl SyzygyVector {
    pub fn zero() -> Self {
        SyzygyVector::default()
    }

    /// Sets coordinate `index`; a zero polynomial clears it.
    pub fn set(&mut self, index: usize, p: Polynomial<Rational>) {
        if p.is_zero() {
            self.coords.remove(&index);
        } else {
            self.coords.insert(index, p);
        }
    }

    pub fn coords(&self) -> &BTreeMap<usize, Polynomial<Rational>> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// `d_{a,b} m`, with `a`, `b` 0-based positions in `basis`. `m` must be
    /// a common multiple of both generators.
    pub fn difference(basis: &[Monomial], a: usize, b: usize, m: &Monomial) -> Self {
        let coefficient = |i: usize, sign: i64| {
            let q = m.div(&basis[i]).expect("multiple of the generator");
            Polynomial::term(q, Rational::from_i64(&(), sign))
        };
        let mut v = SyzygyVector::zero();
        v.set(a, coefficient(a, 1));
        v.set(b, coefficient(b, -1));
        v
    }

    /// The common multidegree of `coefficient × generator` over all terms,
    /// or `None` if the vector is zero, not homogeneous, or out of range.
    pub fn multidegree(&self, basis: &[Monomial]) -> Option<Monomial> {
        let mut degrees = self.coords.iter().flat_map(|(&i, p)| {
            let g = basis.get(i);
            p.monomials().map(move |m| g.map(|g| m.mul(g)))
        });
        let first = degrees.next()??;
        for d in degrees {
            if d? != first {
                return None;
            }
        }
        Some(first)
    }
}

/// `Σ coefficient_i · g_i`.
pub fn phi1_apply(
    basis: &[Monomial],
    v: &SyzygyVector,
) -> Result<Polynomial<Rational>, SyzygyError> {
    let var_count = basis.first().map_or(0, Monomial::var_count);
    let mut out = Polynomial::zero(var_count);
    for (&i, p) in &v.coords {
        let g = basis.get(i).ok_or(SyzygyError::IndexOutOfRange {
            index: i,
            len: basis.len(),
        })?;
        out = out.add(&p.mul_term(g, &Rational::from_i64(&(), 1)));
    }
    Ok(out)
}

/// Syzygies sharing one coordinate pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyFamily {
    pub label: String,
    pub members: Vec<SyzygyVector>,
    pub total_degree: u64,
}

/// Variables of `L_2(N, n2)` in the `x_i, y_j, s, t` naming.
struct Vars {
    params: CrystalParams,
}

impl Vars {
    fn new(params: CrystalParams) -> Self {
        Vars { params }
    }

    fn count(&self) -> usize {
        self.params.size()
    }

    fn var(&self, index: usize) -> Monomial {
        Monomial::var(self.count(), index)
    }

    fn x(&self, i: usize) -> Monomial {
        self.var(self.params.chain_element(1, i))
    }

    fn y(&self, j: usize) -> Monomial {
        self.var(self.params.chain_element(2, j))
    }

    fn st(&self) -> Monomial {
        self.var(0).mul(&self.var(self.count() - 1))
    }
}

/// Minimal generators of the initial ideal in the fixed `F_1` order:
/// `x_i y_1`, then `x_i y_2` (second case), then `x_i s t` for `i >= 2`,
/// then `y_2 s t` (second case).
pub fn f1_basis(case: SyzygyCase, n: usize) -> Vec<Monomial> {
    let v = Vars::new(case.params(n));
    let mut basis: Vec<Monomial> = (1..=n).map(|i| v.x(i).mul(&v.y(1))).collect();
    if case == SyzygyCase::TwoStep {
        basis.extend((1..=n).map(|i| v.x(i).mul(&v.y(2))));
    }
    basis.extend((2..=n).map(|i| v.x(i).mul(&v.st())));
    if case == SyzygyCase::TwoStep {
        basis.push(v.y(2).mul(&v.st()));
    }
    basis
}

/// The syzygy families for `case` at chain length `n`.
pub fn syzygy_families(case: SyzygyCase, n: usize) -> Result<Vec<SyzygyFamily>, SyzygyError> {
    if n < 2 {
        return Err(SyzygyError::TooSmall(n));
    }
    let v = Vars::new(case.params(n));
    let basis = f1_basis(case, n);
    // 1-based positions as in e_1, e_2, ...
    let d = |a: usize, b: usize, m: Monomial| SyzygyVector::difference(&basis, a - 1, b - 1, &m);
    let pairs = |lo: usize| (lo..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
    let family = |label: &str, degree: u64, members: Vec<SyzygyVector>| SyzygyFamily {
        label: label.to_string(),
        members,
        total_degree: degree,
    };
    let (y1, st) = (v.y(1), v.st());
    let families = match case {
        SyzygyCase::OneStep => vec![
            family(
                "u1",
                3,
                pairs(1)
                    .map(|(i, j)| d(i, j, v.x(i).mul(&v.x(j)).mul(&y1)))
                    .collect(),
            ),
            family(
                "u2",
                4,
                pairs(2)
                    .map(|(i, j)| d(n + i - 1, n + j - 1, v.x(i).mul(&v.x(j)).mul(&st)))
                    .collect(),
            ),
            family(
                "u3",
                4,
                (2..=n)
                    .map(|i| d(i, n + i - 1, v.x(i).mul(&y1).mul(&st)))
                    .collect(),
            ),
        ],
        SyzygyCase::TwoStep => {
            let y2 = v.y(2);
            let last = 3 * n;
            vec![
                family(
                    "u1",
                    3,
                    (2..=n)
                        .map(|j| d(1, j, v.x(1).mul(&v.x(j)).mul(&y1)))
                        .collect(),
                ),
                family(
                    "u2",
                    3,
                    pairs(2)
                        .map(|(i, j)| d(i, j, v.x(i).mul(&v.x(j)).mul(&y1)))
                        .collect(),
                ),
                family(
                    "u3",
                    3,
                    pairs(1)
                        .map(|(i, j)| d(n + i, n + j, v.x(i).mul(&v.x(j)).mul(&y2)))
                        .collect(),
                ),
                family(
                    "u4",
                    3,
                    (1..=n)
                        .map(|i| d(i, n + i, v.x(i).mul(&y1).mul(&y2)))
                        .collect(),
                ),
                family(
                    "u5",
                    4,
                    pairs(2)
                        .map(|(i, j)| d(2 * n + i - 1, 2 * n + j - 1, v.x(i).mul(&v.x(j)).mul(&st)))
                        .collect(),
                ),
                family(
                    "u6",
                    4,
                    (2..=n)
                        .map(|i| d(i, 2 * n + i - 1, v.x(i).mul(&y1).mul(&st)))
                        .collect(),
                ),
                family("u7", 4, vec![d(n + 1, last, v.x(1).mul(&y2).mul(&st))]),
                family(
                    "u8",
                    4,
                    (2..=n)
                        .map(|i| d(n + i, last, v.x(i).mul(&y2).mul(&st)))
                        .collect(),
                ),
                family(
                    "u9",
                    4,
                    (2..=n)
                        .map(|i| d(2 * n + i - 1, last, v.x(i).mul(&y2).mul(&st)))
                        .collect(),
                ),
            ]
        }
    };
    Ok(families)
}

/// Closed-form member count of family `label`, if the label exists.
pub fn closed_form_count(case: SyzygyCase, label: &str, n: usize) -> Option<u64> {
    let n = n as u64;
    let c2 = |m: u64| m * m.saturating_sub(1) / 2;
    let count = match (case, label) {
        (SyzygyCase::OneStep, "u1") => c2(n),
        (SyzygyCase::OneStep, "u2") => c2(n - 1),
        (SyzygyCase::OneStep, "u3") => n - 1,
        (SyzygyCase::TwoStep, "u1") => n - 1,
        (SyzygyCase::TwoStep, "u2") => c2(n - 1),
        (SyzygyCase::TwoStep, "u3") => c2(n),
        (SyzygyCase::TwoStep, "u4") => n,
        (SyzygyCase::TwoStep, "u5") => c2(n - 1),
        (SyzygyCase::TwoStep, "u6" | "u8" | "u9") => n - 1,
        (SyzygyCase::TwoStep, "u7") => 1,
        _ => return None,
    };
    Some(count)
}

/// Whether every member is a homogeneous syzygy of the family's degree.
pub fn members_vanish(basis: &[Monomial], families: &[SyzygyFamily]) -> Result<bool, SyzygyError> {
    for f in families {
        for m in &f.members {
            if !phi1_apply(basis, m)?.is_zero() {
                return Ok(false);
            }
            match m.multidegree(basis) {
                Some(b) if b.degree() == f.total_degree => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCount {
    pub label: String,
    pub degree: u64,
    pub count: u64,
}

/// Family counts set against row 2 of a computed table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyReport {
    pub case: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub families: Vec<FamilyCount>,
    pub betti_row2: BTreeMap<u64, u64>,
    /// Degrees where family counts and `B_{2,j}` differ.
    pub mismatched_degrees: Vec<u64>,
    pub pass: bool,
}

impl SyzygyReport {
    pub fn counts_by_degree(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for f in &self.families {
            *out.entry(f.degree).or_insert(0) += f.count;
        }
        out
    }
}

pub fn verify_counts(
    case: SyzygyCase,
    n: usize,
    families: &[SyzygyFamily],
    table: &BettiTable,
) -> SyzygyReport {
    let families: Vec<FamilyCount> = families
        .iter()
        .map(|f| FamilyCount {
            label: f.label.clone(),
            degree: f.total_degree,
            count: f.members.len() as u64,
        })
        .collect();
    let betti_row2 = table.row(2);
    let mut report = SyzygyReport {
        case: case.to_string(),
        n,
        families,
        betti_row2,
        mismatched_degrees: Vec::new(),
        pass: false,
    };
    let counts = report.counts_by_degree();
    let mut degrees: Vec<u64> = counts
        .keys()
        .chain(report.betti_row2.keys())
        .copied()
        .collect();
    degrees.sort_unstable();
    degrees.dedup();
    report.mismatched_degrees = degrees
        .into_iter()
        .filter(|j| {
            counts.get(j).copied().unwrap_or(0) != report.betti_row2.get(j).copied().unwrap_or(0)
        })
        .collect();
    report.pass = report.mismatched_degrees.is_empty();
    report
}
