//! Finite lattices given by cover relations, and the crystal family
//! `L_k(n_1, ..., n_k)`: `k` disjoint chains glued between a common bottom
//! `s` and top `t`.
//!
//! A [`FiniteLattice`] is validated at construction. The order relation is
//! closed transitively, and every pair is checked for a unique least upper
//! bound and a unique greatest lower bound. A value of this type therefore
//! always has total join and meet tables.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of an element inside a [`FiniteLattice`].
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cover relations contain a cycle through `{0}`")]
    CycleDetected(String),
    #[error("not a lattice: `{a}` and `{b}` have no unique {bound}")]
    NotALattice {
        a: String,
        b: String,
        bound: &'static str,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid crystal parameters: {0}")]
    InvalidParams(String),
}

/// A finite lattice with precomputed order, join and meet tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<bool>,
    join: Vec<Element>,
    meet: Vec<Element>,
    bottom: Element,
    top: Element,
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("labels", &self.labels)
            .field("bottom", &self.labels[self.bottom])
            .field("top", &self.labels[self.top])
            .finish()
    }
}

impl FiniteLattice {
    /// Builds a lattice from its Hasse diagram. `covers` holds `(lower, upper)`
    /// label pairs; the order is their reflexive-transitive closure.
    ///
    /// Elements are indexed in the order of `labels`.
    pub fn from_cover_relations<S: AsRef<str>>(
        labels: &[S],
        covers: &[(S, S)],
    ) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_ref().to_string(), i).is_some() {
                return Err(LatticeError::DuplicateLabel(l.as_ref().to_string()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| LatticeError::UnknownLabel(s.to_string()))
        };

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in covers {
            let (a, b) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            if a == b {
                return Err(LatticeError::CycleDetected(lo.as_ref().to_string()));
            }
            leq[a * n + b] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::CycleDetected(labels[i].as_ref().to_string()));
                }
            }
        }

        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let witness = |bound| LatticeError::NotALattice {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                    bound,
                };
                let lub = unique_extremum(
                    n,
                    |c| leq[a * n + c] && leq[b * n + c],
                    |x, y| leq[x * n + y],
                )
                .ok_or_else(|| witness("least upper bound"))?;
                let glb = unique_extremum(
                    n,
                    |c| leq[c * n + a] && leq[c * n + b],
                    |x, y| leq[y * n + x],
                )
                .ok_or_else(|| witness("greatest lower bound"))?;
                join[a * n + b] = lub;
                join[b * n + a] = lub;
                meet[a * n + b] = glb;
                meet[b * n + a] = glb;
            }
        }

        let bottom = (0..n).fold(0, |acc, e| meet[acc * n + e]);
        let top = (0..n).fold(0, |acc, e| join[acc * n + e]);
        Ok(FiniteLattice {
            labels,
            leq,
            join,
            meet,
            bottom,
            top,
        })
    }

    /// The crystal lattice: elements `s, x1_1, .., x1_n1, .., xk_nk, t` in that
    /// index order, with `s < xi_1 < .. < xi_ni < t` for every chain `i`.
    pub fn crystal(params: &CrystalParams) -> Self {
        let labels = params.labels();
        let mut covers = Vec::new();
        for (i, &len) in params.chain_lengths().iter().enumerate() {
            let name = |j: usize| format!("x{}_{}", i + 1, j);
            covers.push(("s".to_string(), name(1)));
            for j in 1..len {
                covers.push((name(j), name(j + 1)));
            }
            covers.push((name(len), "t".to_string()));
        }
        Self::from_cover_relations(&labels, &covers)
            .expect("crystal lattices are lattices by construction")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Element) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<Element> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn join(&self, a: Element, b: Element) -> Element {
        self.join[a * self.size() + b]
    }

    pub fn meet(&self, a: Element, b: Element) -> Element {
        self.meet[a * self.size() + b]
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    pub fn comparable(&self, a: Element, b: Element) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Pairs `(a, b)` with `a < b` as indices and neither `a <= b` nor `b <= a`
    /// in the lattice order, in lexicographic index order.
    pub fn incomparable_pairs(&self) -> Vec<(Element, Element)> {
        let n = self.size();
        (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.comparable(a, b))
            .collect()
    }

    /// Exhaustive check of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    /// Exhaustive check of `a ∨ (b ∧ c) = (a ∨ b) ∧ c` whenever `a <= c`.
    pub fn is_modular(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| {
            (0..n).filter(|&c| self.leq(a, c)).all(|c| {
                (0..n).all(|b| self.join(a, self.meet(b, c)) == self.meet(self.join(a, b), c))
            })
        })
    }
}

/// Returns the unique minimal element (w.r.t. `below`) among those satisfying
/// `member`, or `None` when there are zero or several.
fn unique_extremum(
    n: usize,
    member: impl Fn(Element) -> bool,
    below: impl Fn(Element, Element) -> bool,
) -> Option<Element> {
    let candidates: Vec<Element> = (0..n).filter(|&c| member(c)).collect();
    let mut minimal = candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| d != c && below(d, c)));
    let first = minimal.next()?;
    match minimal.next() {
        None => Some(first),
        Some(_) => None,
    }
}

/// Parameters `(n_1, ..., n_k)` of a crystal lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrystalParams {
    chain_lengths: Vec<usize>,
}

impl CrystalParams {
    pub fn new(k: usize, chain_lengths: Vec<usize>) -> Result<Self, LatticeError> {
        if k == 0 {
            return Err(LatticeError::InvalidParams("k must be at least 1".into()));
        }
        if chain_lengths.len() != k {
            return Err(LatticeError::InvalidParams(format!(
                "expected {k} chain lengths, got {}",
                chain_lengths.len()
            )));
        }
        if chain_lengths.contains(&0) {
            return Err(LatticeError::InvalidParams(
                "chain lengths must be positive".into(),
            ));
        }
        Ok(CrystalParams { chain_lengths })
    }

    /// Shorthand for the two-chain family `L_2(n1, n2)`.
    pub fn two_chains(n1: usize, n2: usize) -> Result<Self, LatticeError> {
        Self::new(2, vec![n1, n2])
    }

    pub fn k(&self) -> usize {
        self.chain_lengths.len()
    }

    pub fn chain_lengths(&self) -> &[usize] {
        &self.chain_lengths
    }

    pub fn size(&self) -> usize {
        2 + self.chain_lengths.iter().sum::<usize>()
    }

    /// Element labels in canonical index order.
    pub fn labels(&self) -> Vec<String> {
        let mut labels = Vec::with_capacity(self.size());
        labels.push("s".to_string());
        for (i, &len) in self.chain_lengths.iter().enumerate() {
            labels.extend((1..=len).map(|j| format!("x{}_{}", i + 1, j)));
        }
        labels.push("t".to_string());
        labels
    }

    /// Index of `x_{chain,pos}` (both 1-based).
    pub fn chain_element(&self, chain: usize, pos: usize) -> Element {
        assert!(chain >= 1 && chain <= self.k(), "chain index out of range");
        assert!(
            pos >= 1 && pos <= self.chain_lengths[chain - 1],
            "position out of range"
        );
        1 + self.chain_lengths[..chain - 1].iter().sum::<usize>() + pos - 1
    }
}

impl fmt::Display for CrystalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ns: Vec<String> = self.chain_lengths.iter().map(|n| n.to_string()).collect();
        write!(f, "L_{}({})", self.k(), ns.join(","))
    }
}

/// Parsed content of a cover-relation file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverFile {
    /// Labels in order of first appearance.
    pub labels: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl CoverFile {
    /// Parses `lower upper` lines. `#` starts a comment line, blank lines are
    /// skipped, and a line with a single label declares an element without
    /// covers (needed for the one-element lattice).
    pub fn parse(text: &str) -> Result<Self, LatticeError> {
        let mut out = CoverFile::default();
        let mut seen = HashMap::new();
        let mut note = |label: &str, out: &mut CoverFile| {
            if !seen.contains_key(label) {
                seen.insert(label.to_string(), out.labels.len());
                out.labels.push(label.to_string());
            }
        };
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [single] => note(single, &mut out),
                [lo, hi] => {
                    note(lo, &mut out);
                    note(hi, &mut out);
                    out.covers.push((lo.to_string(), hi.to_string()));
                }
                _ => {
                    return Err(LatticeError::Parse {
                        line: lineno + 1,
                        message: format!("expected `lower upper`, found {} tokens", tokens.len()),
                    })
                }
            }
        }
        Ok(out)
    }

    pub fn into_lattice(self) -> Result<FiniteLattice, LatticeError> {
        FiniteLattice::from_cover_relations(&self.labels, &self.covers)
    }
}
